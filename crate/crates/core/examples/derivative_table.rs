//! Partial derivatives of the perimeter surfaces at the three linearisation
//! points, rounded to four decimals, plus a finite-difference spot check.

use pentile::analysis::{surface_derivative_check, DerivativeTable, PUBLISHED_DERIVATIVES};

fn main() {
    let table = DerivativeTable::compute().unwrap();
    for (e, published) in table.entries.iter().zip(PUBLISHED_DERIVATIVES) {
        println!(
            "P{}({:.4}, {:.4}): dP/dk = {:+.10} -> {:+.4}   dP/dq = {:+.10} -> {:+.4}   published {:?}",
            e.n, e.k, e.q, e.dp_dk, e.dp_dk_rounded, e.dp_dq, e.dp_dq_rounded, published
        );
    }
    let fd = surface_derivative_check(500, 1);
    println!(
        "finite differences at {} points: worst relative error {:.1e} (first), {:.1e} (second)",
        fd.points, fd.worst_first, fd.worst_second
    );
}
