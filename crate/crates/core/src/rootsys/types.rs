use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    /// Smallest and largest admissible rank (`None` = unbounded).
    pub fn rank_range(self) -> (usize, Option<usize>) {
        match self {
            Family::A => (1, None),
            Family::B | Family::C => (2, None),
            Family::D => (3, None),
            Family::E => (6, Some(8)),
            Family::F => (4, Some(4)),
            Family::G => (2, Some(2)),
        }
    }

    fn admissible(self) -> &'static str {
        match self {
            Family::A => "A requires rank >= 1",
            Family::B => "B requires rank >= 2",
            Family::C => "C requires rank >= 2",
            Family::D => "D requires rank >= 3",
            Family::E => "E requires rank 6, 7 or 8",
            Family::F => "F requires rank 4",
            Family::G => "G requires rank 2",
        }
    }
}

/// A simple type `X_n` with `(family, rank)` checked at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let (lo, hi) = family.rank_range();
        if rank < lo || hi.is_some_and(|h| rank > h) || (family == Family::E && rank < 6) {
            return Err(Error::InvalidType {
                label: format!("{}{}", family.letter(), rank),
                reason: family.admissible().to_string(),
            });
        }
        Ok(Self { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every valid simple type of rank at most `max_rank`, ordered by family
    /// then rank.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for family in Family::ALL {
            let (lo, hi) = family.rank_range();
            let top = hi.map_or(max_rank, |h| h.min(max_rank));
            for rank in lo..=top {
                out.push(SimpleType { family, rank });
            }
        }
        out
    }

    /// Known dimension of the simple Lie algebra, from the closed formulas.
    /// Used only as an independent cross-check of root enumeration.
    pub fn known_dimension(&self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 2),
            (Family::B, _) | (Family::C, _) => n * (2 * n + 1),
            (Family::D, _) => n * (2 * n - 1),
            (Family::E, 6) => 78,
            (Family::E, 7) => 133,
            (Family::E, 8) => 248,
            (Family::F, _) => 52,
            (Family::G, _) => 14,
            _ => unreachable!("validated at construction"),
        }
    }

    /// The other label of an exceptional low-rank isomorphism, if any.
    pub fn isomorphic_label(&self) -> Option<SimpleType> {
        match (self.family, self.rank) {
            (Family::B, 2) => Some(SimpleType { family: Family::C, rank: 2 }),
            (Family::C, 2) => Some(SimpleType { family: Family::B, rank: 2 }),
            (Family::A, 3) => Some(SimpleType { family: Family::D, rank: 3 }),
            (Family::D, 3) => Some(SimpleType { family: Family::A, rank: 3 }),
            _ => None,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::TypeParse(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::TypeParse(s.to_string()))?;
        SimpleType::new(family, rank)
    }
}

impl TryFrom<String> for SimpleType {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SimpleType> for String {
    fn from(t: SimpleType) -> String {
        t.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range() {
        for bad in ["E5", "E9", "F3", "G3", "D2", "B1", "C1", "A0"] {
            let err = bad.parse::<SimpleType>().unwrap_err();
            assert!(matches!(err, Error::InvalidType { .. }), "{bad}: {err}");
        }
        assert!(matches!("X3".parse::<SimpleType>(), Err(Error::TypeParse(_))));
        assert!(matches!("B".parse::<SimpleType>(), Err(Error::TypeParse(_))));
    }

    #[test]
    fn parses_and_displays() {
        let t: SimpleType = "e6".parse().unwrap();
        assert_eq!(t.to_string(), "E6");
        assert_eq!(t.known_dimension(), 78);
    }

    #[test]
    fn enumeration_up_to_rank() {
        let all = SimpleType::all_up_to_rank(4);
        let labels: Vec<String> = all.iter().map(ToString::to_string).collect();
        assert_eq!(
            labels,
            ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "F4", "G2"]
        );
        assert!(SimpleType::all_up_to_rank(0).is_empty());
    }
}
