//! Univariate polynomials over a [`Scalar`] field.

use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Coefficients stored lowest degree first, with no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Polynomial<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_negligible()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc.mul_ref(x).add_ref(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.mul_ref(&S::from_i64(k as i64)))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lead) => {
                let inv = S::one().div_ref(lead);
                Self::new(self.coeffs.iter().map(|c| c.mul_ref(&inv)).collect())
            }
        }
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("polynomial division by zero");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let Some(n) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if n < d {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![S::zero(); n - d + 1];
        for k in (0..=n - d).rev() {
            let c = rem[k + d].div_ref(&lead);
            if c.is_zero() {
                continue;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].sub_ref(&c.mul_ref(dc));
            }
            quot[k] = c;
        }
        rem.truncate(d);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// The squarefree part `p / gcd(p, p')`, monic.
    pub fn squarefree(&self) -> Self {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Characteristic polynomial `det(x·I - m)` by the Faddeev–LeVerrier
    /// recursion (characteristic zero only).
    pub fn characteristic(m: &Matrix<S>) -> Self {
        assert!(m.is_square());
        let n = m.rows();
        let mut coeffs = vec![S::zero(); n + 1];
        coeffs[n] = S::one();
        let mut aux = Matrix::<S>::identity(n);
        for k in 1..=n {
            let am = m.mul(&aux);
            let c = -am.trace().div_ref(&S::from_i64(k as i64));
            coeffs[n - k] = c.clone();
            aux = am;
            for i in 0..n {
                aux[(i, i)] = aux[(i, i)].add_ref(&c);
            }
        }
        Self::new(coeffs)
    }
}
