use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_traits::{Num, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::Rational;

/// A weight in the basis of fundamental weights.
///
/// `S = i64` is used for integral weights (everything a character touches);
/// `S = Rational` covers arbitrary points of the rational weight space.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector<S = i64> {
    coords: Vec<S>,
}

impl<S: Clone + Num> WeightVector<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Self { coords }
    }

    pub fn zero(rank: usize) -> Self {
        Self {
            coords: vec![S::zero(); rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, k: S) -> Self {
        Self {
            coords: self.coords.iter().map(|c| c.clone() * k.clone()).collect(),
        }
    }

    /// `self + k · other`
    pub fn add_scaled(&self, k: S, other: &Self) -> Self {
        Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() + k.clone() * b.clone())
                .collect(),
        }
    }
}

impl<S: Clone + Num + PartialOrd> WeightVector<S> {
    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| *c >= S::zero())
    }
}

impl WeightVector<i64> {
    pub fn to_rational(&self) -> WeightVector<Rational> {
        WeightVector::new(self.coords.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }
}

impl WeightVector<Rational> {
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// The integral weight with the same coordinates, if there is one.
    pub fn to_integral(&self) -> Option<WeightVector<i64>> {
        self.coords
            .iter()
            .map(|c| {
                if c.is_integer() {
                    num_traits::ToPrimitive::to_i64(&c.to_integer())
                } else {
                    None
                }
            })
            .collect::<Option<Vec<_>>>()
            .map(WeightVector::new)
    }
}

impl<S> Index<usize> for WeightVector<S> {
    type Output = S;
    fn index(&self, i: usize) -> &S {
        &self.coords[i]
    }
}

impl<S: Clone + Num> Add for &WeightVector<S> {
    type Output = WeightVector<S>;
    fn add(self, rhs: Self) -> WeightVector<S> {
        debug_assert_eq!(self.rank(), rhs.rank());
        WeightVector::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }
}

impl<S: Clone + Num> Sub for &WeightVector<S> {
    type Output = WeightVector<S>;
    fn sub(self, rhs: Self) -> WeightVector<S> {
        debug_assert_eq!(self.rank(), rhs.rank());
        WeightVector::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }
}

impl<S: Clone + Num + Signed> Neg for &WeightVector<S> {
    type Output = WeightVector<S>;
    fn neg(self) -> WeightVector<S> {
        WeightVector::new(self.coords.iter().map(|a| -a.clone()).collect())
    }
}

impl<S: fmt::Display> fmt::Display for WeightVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl<S: fmt::Display> fmt::Debug for WeightVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Vec<i64>> for WeightVector<i64> {
    fn from(coords: Vec<i64>) -> Self {
        Self { coords }
    }
}
