use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Arc;

use crate::rootsys::RootSystem;
use crate::Weight;

/// Multiplicities of the dominant weights of `V(λ)`, memoised per root
/// system.
///
/// Dominant weights of `V(λ)` are the dominant `μ` with `λ − μ` a sum of
/// positive roots; they are connected to `λ` through dominant weights by
/// single positive-root steps, so a breadth-first search finds them all.
/// Multiplicities then follow from Freudenthal's recursion
///
/// `(|λ+ρ|² − |μ+ρ|²) m(μ) = 2 Σ_{β>0} Σ_{k≥1} m(μ+kβ) (μ+kβ, β)`
///
/// taken in decreasing height, with `m(ν)` read off the dominant conjugate.
pub(crate) fn dominant_multiplicities(rs: &RootSystem, lambda: &Weight) -> Arc<BTreeMap<Weight, i64>> {
    if let Some(hit) = rs.characters.lock().unwrap().get(lambda) {
        return hit.clone();
    }

    let positives = rs.positive_roots();
    let mut dominant = BTreeSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(mu) = queue.pop_front() {
        for beta in positives {
            let nu = &mu - beta;
            if nu.is_dominant() && !dominant.contains(&nu) {
                dominant.insert(nu.clone());
                queue.push_back(nu);
            }
        }
    }
    let mut order: Vec<Weight> = dominant.into_iter().collect();
    order.sort_by_key(|w| std::cmp::Reverse(rs.doubled_height(w)));

    let rho = rs.weyl_vector();
    let top = lambda + rho;
    let top_norm = i128::from(rs.inner_scaled(&top, &top));
    let mut mult: BTreeMap<Weight, i64> = BTreeMap::new();
    mult.insert(lambda.clone(), 1);
    for mu in order.iter().skip(1) {
        let shifted = mu + rho;
        let denom = top_norm - i128::from(rs.inner_scaled(&shifted, &shifted));
        debug_assert!(denom > 0);
        let mut sum: i128 = 0;
        for beta in positives {
            let mut nu = mu + beta;
            // weight strings are unbroken: stop at the first non-weight
            while let Some(m) = mult.get(&rs.dominant_conjugate(&nu)) {
                sum += i128::from(*m) * i128::from(rs.inner_scaled(&nu, beta));
                nu = &nu + beta;
            }
        }
        let num = 2 * sum;
        debug_assert_eq!(num % denom, 0, "Freudenthal quotient at {mu}");
        mult.insert(mu.clone(), (num / denom) as i64);
    }

    let result = Arc::new(mult);
    rs.characters
        .lock()
        .unwrap()
        .entry(lambda.clone())
        .or_insert(result)
        .clone()
}
