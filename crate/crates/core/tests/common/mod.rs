//! Oracles that recompute quantities by routes independent of the library's
//! own algorithms.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::io::Write;
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::time::Instant;

use dimdata::repchar::Character;
use dimdata::rootsys::RootSystem;
use dimdata::scalar::rational_pow;
use dimdata::{Rational, Weight};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Runs one acceptance criterion and prints its verdict line straight to the
/// process stderr, which the test harness does not capture.
pub fn criterion(n: u32, title: &str, body: impl FnOnce() -> String) {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let secs = start.elapsed().as_secs_f64();
    let line = match &outcome {
        Ok(detail) => format!("criterion {n:>2} PASS  {title}  [{detail}; {secs:.2}s]"),
        Err(_) => format!("criterion {n:>2} FAIL  {title}  [{secs:.2}s]"),
    };
    let _ = writeln!(std::io::stderr(), "{line}");
    if let Err(e) = outcome {
        resume_unwind(e);
    }
}

/// `(w·μ, ε(w))` for a strictly dominant `μ`; `ε(w)` is read from the number
/// of positive roots made negative, i.e. the length of `w`.
pub fn signed_orbit(rs: &RootSystem, mu: &Weight) -> Vec<(Weight, i64)> {
    rs.weyl_orbit(mu)
        .into_iter()
        .map(|nu| {
            let flips = rs
                .positive_roots()
                .iter()
                .filter(|beta| rs.inner(&nu, beta).is_negative())
                .count();
            (nu, if flips % 2 == 0 { 1 } else { -1 })
        })
        .collect()
}

/// Trivial multiplicity `Σ_w ε(w) m(ρ − wρ)`, from the Weyl denominator
/// identity.
pub fn alternating_trivial_multiplicity(c: &Character) -> i64 {
    let rs = c.root_system();
    let rho = rs.weyl_vector();
    signed_orbit(rs, rho)
        .into_iter()
        .map(|(nu, sign)| sign * c.multiplicity(&(rho - &nu)))
        .sum()
}

/// `x^μ = ∏ x_i^{μ_i}` on the simply connected torus.
pub fn monomial(x: &[Rational], mu: &Weight) -> Rational {
    x.iter()
        .zip(mu.coords())
        .filter(|(_, e)| **e != 0)
        .fold(Rational::one(), |acc, (b, e)| acc * rational_pow(b, *e))
}

pub fn character_value(c: &Character, x: &[Rational]) -> Rational {
    c.terms()
        .iter()
        .fold(Rational::zero(), |acc, (mu, m)| acc + monomial(x, mu) * Rational::from_integer((*m).into()))
}

fn alternant(rs: &RootSystem, mu: &Weight, x: &[Rational]) -> Rational {
    signed_orbit(rs, mu)
        .into_iter()
        .fold(Rational::zero(), |acc, (nu, s)| acc + monomial(x, &nu) * Rational::from_integer(s.into()))
}

/// `χ_λ(x) = A_{λ+ρ}(x) / A_ρ(x)` by the Weyl character formula.
pub fn weyl_character_value(rs: &RootSystem, lambda: &Weight, x: &[Rational]) -> Rational {
    let rho = rs.weyl_vector();
    alternant(rs, &(lambda + rho), x) / alternant(rs, rho, x)
}

/// `n` seeded rational points where the Weyl denominator does not vanish.
pub fn evaluation_points(rs: &RootSystem, n: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < n {
        let x: Vec<Rational> = (0..rs.rank())
            .map(|_| Rational::new(BigInt::from(rng.gen_range(2..12)), BigInt::from(rng.gen_range(1..7))))
            .collect();
        if !alternant(rs, rs.weyl_vector(), &x).is_zero() {
            out.push(x);
        }
    }
    out
}

/// `dim V(l)` for `D_n` from `ε` coordinates by the product formula
/// `∏_{i<j} (L_i² − L_j²)/(R_i² − R_j²)`, `L = l + R`, `R = (n−1, …, 0)`.
pub fn dn_dimension(l: &[i64]) -> BigInt {
    let n = l.len();
    let r = |i: usize| (n - 1 - i) as i64;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (l[i] + r(i), l[j] + r(j));
            num *= BigInt::from(a * a - b * b);
            den *= BigInt::from(r(i) * r(i) - r(j) * r(j));
        }
    }
    num / den
}

/// Every non-spin dominant `D_n` weight of dimension at most `bound`, by
/// brute force over `ε` coordinates `l_1 ≥ … ≥ l_{n−1} ≥ |l_n|`, returned in
/// fundamental coordinates with its dimension.
///
/// Coordinates are chosen from the last to the first, each starting at its
/// smallest admissible value; raising `l_k` with the earlier coordinates set
/// equal to it raises fundamental coordinates only, so the dimension grows
/// and the loop can stop at the first overshoot.
pub fn dn_weights_up_to_dim(n: usize, bound: u128) -> BTreeMap<Vec<i64>, u128> {
    fn fill(l: &mut [i64], pos: usize, bound: &BigInt, out: &mut BTreeMap<Vec<i64>, u128>) {
        let n = l.len();
        let start = if pos + 1 == n {
            0
        } else if pos + 2 == n {
            l[n - 1].abs()
        } else {
            l[pos + 1]
        };
        let mut v = start;
        loop {
            l[..=pos].fill(v);
            if dn_dimension(l) > *bound {
                break;
            }
            if pos == 0 {
                let mut a: Vec<i64> = (0..n - 1).map(|i| l[i] - l[i + 1]).collect();
                a.push(l[n - 2] + l[n - 1]);
                out.insert(a, u128::try_from(dn_dimension(l)).unwrap());
            } else {
                fill(l, pos - 1, bound, out);
            }
            v += 1;
        }
    }
    let bound = BigInt::from(bound);
    let mut out = BTreeMap::new();
    // l_n takes both signs; the rest are determined from it upwards
    for sign in [1i64, -1] {
        let mut m = if sign == 1 { 0 } else { 1 };
        loop {
            let mut l = vec![m.abs(); n];
            l[n - 1] = sign * m;
            if dn_dimension(&l) > bound {
                break;
            }
            fill(&mut l, n - 2, &bound, &mut out);
            m += 1;
        }
    }
    out
}
