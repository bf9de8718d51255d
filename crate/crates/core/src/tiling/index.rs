use std::collections::HashMap;

use crate::geometry::Point;

/// Uniform-grid bucket index over axis-aligned boxes.
pub(crate) struct GridIndex {
    cell: f64,
    buckets: HashMap<(i64, i64), Vec<usize>>,
}

impl GridIndex {
    pub fn new(cell: f64) -> Self {
        GridIndex {
            cell,
            buckets: HashMap::new(),
        }
    }

    fn key(&self, p: Point) -> (i64, i64) {
        (
            (p.x / self.cell).floor() as i64,
            (p.y / self.cell).floor() as i64,
        )
    }

    /// Registers item `id` in every cell its box touches.
    pub fn insert_box(&mut self, id: usize, lo: Point, hi: Point) {
        let (x0, y0) = self.key(lo);
        let (x1, y1) = self.key(hi);
        for x in x0..=x1 {
            for y in y0..=y1 {
                self.buckets.entry((x, y)).or_default().push(id);
            }
        }
    }

    pub fn insert_point(&mut self, id: usize, p: Point) {
        let k = self.key(p);
        self.buckets.entry(k).or_default().push(id);
    }

    /// Items registered in the cell containing `p`.
    pub fn at(&self, p: Point) -> &[usize] {
        self.buckets.get(&self.key(p)).map_or(&[], Vec::as_slice)
    }

    /// Items in cells touched by the box `[lo, hi]`, deduplicated and sorted.
    pub fn in_box(&self, lo: Point, hi: Point) -> Vec<usize> {
        let (x0, y0) = self.key(lo);
        let (x1, y1) = self.key(hi);
        let mut out = Vec::new();
        for x in x0..=x1 {
            for y in y0..=y1 {
                if let Some(b) = self.buckets.get(&(x, y)) {
                    out.extend_from_slice(b);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_queries_find_overlapping_items() {
        let mut g = GridIndex::new(1.0);
        g.insert_box(0, Point::new(0.1, 0.1), Point::new(0.9, 0.9));
        g.insert_box(1, Point::new(0.5, 0.5), Point::new(2.5, 0.7));
        g.insert_point(2, Point::new(-3.0, -3.0));
        assert_eq!(g.in_box(Point::new(0.0, 0.0), Point::new(0.2, 0.2)), vec![0, 1]);
        assert_eq!(g.at(Point::new(2.2, 0.6)), &[1]);
        assert_eq!(g.at(Point::new(-2.5, -2.5)), &[2]);
        assert!(g.at(Point::new(9.0, 9.0)).is_empty());
    }
}
