//! Matrix-level witnesses: eigenvalues of torus elements through `i` and
//! `i′`, SO-conjugacy of orthogonal elements, commutants and the obstruction
//! report.

mod commutant;
mod obstruction;
mod orthogonal;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub use commutant::{adjoint_commutant_dimension, adjoint_generators, commutant_dimension};
pub use obstruction::{
    obstruction_report, obstruction_report_with_cache, tau_swap, Ingredient, IngredientStatus, ObstructionReport,
    ObstructionVerdict,
};
pub use orthogonal::{
    decide_so_conjugacy, gaussian_roots, hyperbolic_form, odd_swap, torus_image, OrthogonalElement, SoConjugacy,
};

use crate::embed::{build_adjoint_embedding, twist_odd, AdjointEmbedding};
use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::scalar::rational_pow;
use crate::{Rational, Weight};

/// Torus sample coordinates are drawn from these primes and their inverses.
pub const SAMPLE_PRIMES: [i64; 6] = [2, 3, 5, 7, 11, 13];

/// A point of the maximal torus of `H`, given by its values on the simple
/// roots: `t^β = ∏ t_i^{n_i}` for `β = Σ n_i α_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusElement {
    coords: Vec<Rational>,
}

impl TorusElement {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if let Some(i) = coords.iter().position(Zero::is_zero) {
            return Err(Error::ZeroTorusCoordinate(i));
        }
        Ok(Self { coords })
    }

    pub fn identity(rank: usize) -> Self {
        Self {
            coords: vec![Rational::one(); rank],
        }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Sample `index` of the stream determined by `seed`; independent of
    /// how many other samples are drawn or in what order.
    pub fn sample(rank: usize, seed: u64, index: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        let coords = (0..rank)
            .map(|_| {
                let p = Rational::from_integer(SAMPLE_PRIMES[rng.gen_range(0..SAMPLE_PRIMES.len())].into());
                if rng.gen_bool(0.5) {
                    p
                } else {
                    p.recip()
                }
            })
            .collect();
        Self { coords }
    }

    /// `t^μ` for `μ` in the root lattice, given in fundamental coordinates.
    pub fn eval_weight(&self, rs: &RootSystem, mu: &Weight) -> Result<Rational> {
        rs.check_rank(mu)?;
        let n = rs
            .to_root_coords(mu)
            .ok_or_else(|| Error::UnsupportedElement(format!("{mu} is not in the root lattice")))?;
        Ok(self
            .coords
            .iter()
            .zip(&n)
            .filter(|(_, e)| **e != 0)
            .fold(Rational::one(), |acc, (c, e)| acc * rational_pow(c, *e)))
    }
}

/// Eigenvalues with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenvalueMultiset {
    values: BTreeMap<Rational, usize>,
}

impl EigenvalueMultiset {
    pub fn from_values(vals: impl IntoIterator<Item = Rational>) -> Self {
        let mut values = BTreeMap::new();
        for v in vals {
            *values.entry(v).or_default() += 1;
        }
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn multiplicity(&self, v: &Rational) -> usize {
        self.values.get(v).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Rational, usize)> {
        self.values.iter().map(|(v, m)| (v, *m))
    }

    /// `λ` and `λ⁻¹` occur equally often.
    pub fn is_inversion_closed(&self) -> bool {
        self.values.iter().all(|(v, m)| self.multiplicity(&v.recip()) == *m)
    }
}

/// Eigenvalues of `e(t)` on the `2N`-dimensional representation: `t^{±c_j}`
/// for each restriction column `c_j`.
pub fn eigenvalues_through(e: &AdjointEmbedding, t: &TorusElement) -> Result<EigenvalueMultiset> {
    let rs = e.h_system();
    if t.coords().len() != rs.rank() {
        return Err(Error::RankMismatch {
            expected: rs.rank(),
            found: t.coords().len(),
        });
    }
    let mut vals = Vec::with_capacity(2 * e.g_rank());
    for col in e.restriction_columns() {
        let v = t.eval_weight(rs, &col)?;
        vals.push(v.recip());
        vals.push(v);
    }
    Ok(EigenvalueMultiset::from_values(vals))
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalConjugacyReport {
    #[serde(rename = "type")]
    pub h_type: String,
    pub samples: u64,
    pub seed: u64,
    pub failures: u64,
    pub failed_samples: Vec<u64>,
    /// Smallest multiplicity of the eigenvalue 1 seen over all samples.
    pub min_eigenvalue_one_multiplicity: Option<usize>,
    pub all_inversion_closed: bool,
}

impl LocalConjugacyReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.all_inversion_closed
    }
}

/// Compares the eigenvalue multisets of `i(t)` and `i′(t)` on seeded random
/// torus elements.
pub fn local_conjugacy_check(h: Arc<RootSystem>, samples: u64, seed: u64) -> Result<LocalConjugacyReport> {
    let i = build_adjoint_embedding(h.clone())?;
    let j = twist_odd(&i);
    let rank = h.rank();
    let results: Vec<(u64, bool, usize, bool)> = (0..samples)
        .into_par_iter()
        .map(|k| {
            let t = TorusElement::sample(rank, seed, k);
            let a = eigenvalues_through(&i, &t)?;
            let b = eigenvalues_through(&j, &t)?;
            let closed = a.is_inversion_closed() && b.is_inversion_closed();
            Ok((k, a == b, a.multiplicity(&Rational::one()), closed))
        })
        .collect::<Result<_>>()?;
    let failed_samples: Vec<u64> = results.iter().filter(|r| !r.1).map(|r| r.0).collect();
    Ok(LocalConjugacyReport {
        h_type: h.simple_type().to_string(),
        samples,
        seed,
        failures: failed_samples.len() as u64,
        failed_samples,
        min_eigenvalue_one_multiplicity: results.iter().map(|r| r.2).min(),
        all_inversion_closed: results.iter().all(|r| r.3),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn h(label: &str) -> Arc<RootSystem> {
        Arc::new(RootSystem::from_label(label).unwrap())
    }

    #[test]
    fn identity_has_all_eigenvalues_one() {
        let e = build_adjoint_embedding(h("B2")).unwrap();
        let m = eigenvalues_through(&e, &TorusElement::identity(2)).unwrap();
        assert_eq!(m.len(), 10);
        assert_eq!(m.multiplicity(&Rational::one()), 10);
    }

    #[test]
    fn b2_at_two_three() {
        let e = build_adjoint_embedding(h("B2")).unwrap();
        let t = TorusElement::new(vec![ratio(2, 1), ratio(3, 1)]).unwrap();
        let m = eigenvalues_through(&e, &t).unwrap();
        // positive roots α1, α2, α1+α2, α1+2α2 in simple-root coordinates
        let mut expected = vec![ratio(1, 1), ratio(1, 1)];
        for v in [ratio(2, 1), ratio(3, 1), ratio(6, 1), ratio(18, 1)] {
            expected.push(v.recip());
            expected.push(v);
        }
        assert_eq!(m, EigenvalueMultiset::from_values(expected));
        assert!(m.is_inversion_closed());
        assert_eq!(m, eigenvalues_through(&twist_odd(&e), &t).unwrap());
    }

    #[test]
    fn rejects_bad_torus_elements() {
        assert!(matches!(
            TorusElement::new(vec![ratio(1, 1), ratio(0, 1)]),
            Err(Error::ZeroTorusCoordinate(1))
        ));
        let e = build_adjoint_embedding(h("B2")).unwrap();
        assert!(eigenvalues_through(&e, &TorusElement::identity(3)).is_err());
    }

    #[test]
    fn sampling_is_deterministic_per_index() {
        let a = TorusElement::sample(4, 7, 3);
        assert_eq!(a, TorusElement::sample(4, 7, 3));
        assert_ne!(TorusElement::sample(4, 7, 3), TorusElement::sample(4, 8, 3));
        for c in a.coords() {
            let p = if c.is_integer() { c.clone() } else { c.recip() };
            assert!(SAMPLE_PRIMES.iter().any(|q| Rational::from_integer((*q).into()) == p));
        }
    }

    #[test]
    fn local_reports() {
        let r = local_conjugacy_check(h("B2"), 20, 7).unwrap();
        assert!(r.passed());
        assert!(r.min_eigenvalue_one_multiplicity.unwrap() >= 2);
        let empty = local_conjugacy_check(h("B2"), 0, 7).unwrap();
        assert!(empty.passed());
        assert_eq!(empty.min_eigenvalue_one_multiplicity, None);
        assert!(local_conjugacy_check(h("B3"), 1, 0).is_err());
    }
}
