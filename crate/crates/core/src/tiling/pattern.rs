use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::TilingError;
use crate::geometry::PrototileKind;

/// One diagonal row: Cairo or Prismatic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RowKind {
    C,
    P,
}

impl RowKind {
    pub fn prototile(self) -> PrototileKind {
        match self {
            RowKind::C => PrototileKind::Cairo,
            RowKind::P => PrototileKind::Prismatic,
        }
    }

    pub fn letter(self) -> char {
        match self {
            RowKind::C => 'C',
            RowKind::P => 'P',
        }
    }
}

/// One period of the diagonal-row pattern, e.g. `CPPP`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RowSequence(Vec<RowKind>);

impl RowSequence {
    pub fn new(word: Vec<RowKind>) -> Result<Self, TilingError> {
        if word.is_empty() {
            return Err(TilingError::Parse("row word must be nonempty".into()));
        }
        Ok(RowSequence(word))
    }

    pub fn word(&self) -> &[RowKind] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Row kind of strip `j`, for any integer `j`.
    pub fn at(&self, j: i64) -> RowKind {
        self.0[j.rem_euclid(self.0.len() as i64) as usize]
    }
}

impl FromStr for RowSequence {
    type Err = TilingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let word = s
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'C' => Ok(RowKind::C),
                'P' => Ok(RowKind::P),
                other => Err(TilingError::Parse(format!(
                    "row letter {other:?} is not C or P"
                ))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        RowSequence::new(word)
    }
}

impl fmt::Display for RowSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|r| write!(f, "{}", r.letter()))
    }
}

/// Which tiling to generate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    Cairo,
    Prismatic,
    Rows(RowSequence),
}

impl Pattern {
    /// Every pattern is a row pattern; Cairo and Prismatic use a single row.
    pub fn rows(&self) -> RowSequence {
        match self {
            Pattern::Cairo => RowSequence(vec![RowKind::C]),
            Pattern::Prismatic => RowSequence(vec![RowKind::P]),
            Pattern::Rows(r) => r.clone(),
        }
    }
}

impl FromStr for Pattern {
    type Err = TilingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "cairo" => Ok(Pattern::Cairo),
            "prismatic" => Ok(Pattern::Prismatic),
            _ => match lower.strip_prefix("rows:") {
                Some(word) => Ok(Pattern::Rows(word.parse()?)),
                None => Err(TilingError::Parse(format!(
                    "unknown pattern {s:?}; expected cairo, prismatic or rows:<C/P word>"
                ))),
            },
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Cairo => write!(f, "cairo"),
            Pattern::Prismatic => write!(f, "prismatic"),
            Pattern::Rows(r) => write!(f, "rows:{r}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_patterns() {
        assert_eq!("cairo".parse::<Pattern>().unwrap(), Pattern::Cairo);
        assert_eq!("Prismatic".parse::<Pattern>().unwrap(), Pattern::Prismatic);
        let p: Pattern = "rows:CPPP".parse().unwrap();
        assert_eq!(p.to_string(), "rows:CPPP");
        assert_eq!(p.rows().len(), 4);
    }

    #[test]
    fn reject_bad_words() {
        assert!("rows:X".parse::<Pattern>().is_err());
        assert!("rows:".parse::<Pattern>().is_err());
        assert!("hexagons".parse::<Pattern>().is_err());
    }

    #[test]
    fn rows_wrap_for_negative_indices() {
        let r: RowSequence = "CPP".parse().unwrap();
        assert_eq!(r.at(0), RowKind::C);
        assert_eq!(r.at(-1), RowKind::P);
        assert_eq!(r.at(-3), RowKind::C);
        assert_eq!(r.at(4), RowKind::P);
    }
}
