use std::sync::Arc;

use dimdata::cache::DiskCache;
use dimdata::conjugacy::{
    decide_so_conjugacy, eigenvalues_through, odd_swap, OrthogonalElement, SoConjugacy, TorusElement,
};
use dimdata::embed::{build_adjoint_embedding, twist_odd};
use dimdata::linalg::{Matrix, SparseEchelon};
use dimdata::poly::Polynomial;
use dimdata::repchar::{decompose, irreducible_character, tensor, weyl_dimension};
use dimdata::rootsys::RootSystem;
use dimdata::scalar::ratio;
use dimdata::{GaussianMatrix, GaussianRational, Rational, Weight};
use num_traits::{One, Zero};
use proptest::prelude::*;

const SMALL: [&str; 6] = ["A1", "A2", "B2", "G2", "A3", "C3"];

fn rs(label: &str) -> Arc<RootSystem> {
    Arc::new(RootSystem::from_label(label).unwrap())
}

/// A small type together with a dominant weight of bounded size.
fn typed_weight(max_coord: i64) -> impl Strategy<Value = (Arc<RootSystem>, Weight)> {
    (0..SMALL.len()).prop_flat_map(move |i| {
        let r = rs(SMALL[i]);
        let cap = if r.rank() > 2 { max_coord.min(2) } else { max_coord };
        prop::collection::vec(0..=cap, r.rank()).prop_map(move |c| (r.clone(), Weight::new(c)))
    })
}

fn pair_permutation(perm: &[usize]) -> OrthogonalElement {
    let n = 2 * perm.len();
    let m = GaussianMatrix::from_fn(n, n, |i, j| {
        if i == 2 * perm[j / 2] + j % 2 {
            GaussianRational::one()
        } else {
            GaussianRational::zero()
        }
    });
    OrthogonalElement::with_hyperbolic_form(m).unwrap()
}

fn g(v: Rational) -> GaussianRational {
    GaussianRational::new(v, Rational::zero())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn weyl_dimension_matches_character((r, w) in typed_weight(4)) {
        let chi = irreducible_character(&r, &w).unwrap();
        prop_assert_eq!(chi.dimension() as u128, weyl_dimension(&r, &w).unwrap());
        prop_assert!(chi.is_weyl_invariant());
    }

    #[test]
    fn tensor_decomposes_and_rebuilds(
        (r, a) in typed_weight(2),
        seed in prop::collection::vec(0i64..=2, 3),
    ) {
        let b = Weight::new(seed[..r.rank()].to_vec());
        let ca = irreducible_character(&r, &a).unwrap();
        let cb = irreducible_character(&r, &b).unwrap();
        let t = tensor(&ca, &cb).unwrap();
        prop_assert_eq!(t.dimension(), ca.dimension() * cb.dimension());
        let dec = decompose(&t).unwrap();
        prop_assert_eq!(dec.rebuild(&r).unwrap(), t);
        // trivial occurs exactly when b is dual to a
        let dual_b = irreducible_character(&r, &b).unwrap().dual();
        prop_assert_eq!(dec.trivial_multiplicity(), u64::from(dual_b == ca));
    }

    #[test]
    fn reflections_are_involutions(
        (r, w) in typed_weight(5),
        shift in prop::collection::vec(-5i64..=5, 3),
        k in 0usize..64,
    ) {
        let mu = Weight::new(w.coords().iter().zip(&shift).map(|(a, b)| a + b).collect());
        let k = k % r.num_roots();
        let once = r.reflect(&mu, k);
        prop_assert_eq!(r.reflect(&once, k), mu.clone());
        prop_assert_eq!(r.inner_scaled(&once, &once), r.inner_scaled(&mu, &mu));
        prop_assert_eq!(r.dominant_conjugate(&once), r.dominant_conjugate(&mu));
    }

    #[test]
    fn torus_spectra_are_inversion_closed(pick in 0usize..2, seed in any::<u64>(), index in 0u64..1000) {
        let h = rs(["B2", "G2"][pick]);
        let e = build_adjoint_embedding(h.clone()).unwrap();
        let t = TorusElement::sample(h.rank(), seed, index);
        let a = eigenvalues_through(&e, &t).unwrap();
        prop_assert!(a.is_inversion_closed());
        prop_assert_eq!(a.multiplicity(&Rational::one()) >= h.rank(), true);
        prop_assert_eq!(eigenvalues_through(&twist_odd(&e), &t).unwrap(), a);
    }

    #[test]
    fn so_conjugacy_witnesses_verify(
        values in prop::collection::vec((2i64..6, 1i64..4), 3),
        perm in Just(vec![0usize, 1, 2]).prop_shuffle(),
        swap in prop::option::of(0usize..3),
    ) {
        let diag: Vec<GaussianRational> = values
            .iter()
            .flat_map(|&(p, q)| {
                let v = ratio(p, q);
                let v = if v.is_one() { ratio(p + 1, q) } else { v };
                [g(v.recip()), g(v)]
            })
            .collect();
        let a = OrthogonalElement::with_hyperbolic_form(GaussianMatrix::diagonal(&diag)).unwrap();
        let mut conj = pair_permutation(&perm);
        if let Some(p) = swap {
            conj = OrthogonalElement::with_hyperbolic_form(conj.matrix().mul(odd_swap(3, p).matrix())).unwrap();
        }
        let b = a.conjugated_by(&conj).unwrap();
        let out = decide_so_conjugacy(&a, &b).unwrap();
        let c = out.witness().expect("conjugate by construction").clone();
        prop_assert_eq!(a.matrix().mul(&c), c.mul(b.matrix()));
        prop_assert_eq!(c.congruence(a.form()), a.form().clone());
        let det = c.determinant();
        match out {
            SoConjugacy::SoConjugate { .. } => prop_assert!(det.is_one()),
            SoConjugacy::OOnly { .. } => prop_assert_eq!(det, -GaussianRational::one()),
            SoConjugacy::NotOConjugate => unreachable!(),
        }
        if swap.is_none() {
            prop_assert_eq!(out.verdict(), "SO_CONJUGATE");
        }
    }

    #[test]
    fn sparse_and_dense_rank_agree(rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 6), 1..7)) {
        let m = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| ratio(x, 1)).collect()).collect());
        let mut ech = SparseEchelon::<Rational>::new(6);
        for r in &rows {
            ech.insert(r.iter().enumerate().map(|(j, &x)| (j, ratio(x, 1))));
        }
        prop_assert_eq!(ech.rank(), m.rank());
        prop_assert_eq!(ech.nullity(), m.nullspace().len());
    }

    #[test]
    fn characteristic_polynomial_matches_determinant(
        entries in prop::collection::vec(-4i64..=4, 16),
        shift in -3i64..=3,
    ) {
        let m = Matrix::from_fn(4, 4, |i, j| ratio(entries[4 * i + j], 1));
        let p = Polynomial::characteristic(&m);
        // p(s) = det(s·I − m)
        let s = ratio(shift, 1);
        let shifted = Matrix::identity(4).scale(&s).sub(&m);
        prop_assert_eq!(p.eval(&s), shifted.determinant());
        prop_assert_eq!(p.degree(), Some(4));
    }

    #[test]
    fn cache_roundtrip(key in "[a-z0-9-]{1,24}", value in prop::collection::vec((any::<i64>(), ".{0,8}"), 0..8)) {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::at(dir.path());
        prop_assert_eq!(cache.load::<Vec<(i64, String)>>(&key), None);
        cache.store(&key, &value).unwrap();
        prop_assert_eq!(cache.load::<Vec<(i64, String)>>(&key), Some(value.clone()));
        let built = cache.get_or_build(&key, Vec::<(i64, String)>::new);
        prop_assert_eq!(built, value);
        prop_assert_eq!(DiskCache::disabled().load::<Vec<(i64, String)>>(&key), None);
    }
}
