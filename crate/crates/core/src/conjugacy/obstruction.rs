use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::One;
use serde::Serialize;

use super::commutant::adjoint_commutant_dimension;
use crate::cache::DiskCache;
use crate::error::Result;
use crate::liealg::{induced_monomial, monomial_determinant, LinearMap, StructureTable};
use crate::linalg::Matrix;
use crate::rootsys::{diagram_automorphisms, RootSystem, SimpleType};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IngredientStatus {
    Pass,
    Fail,
    /// Skipped because an earlier ingredient failed.
    NotEvaluated,
}

impl fmt::Display for IngredientStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IngredientStatus::Pass => "pass",
            IngredientStatus::Fail => "fail",
            IngredientStatus::NotEvaluated => "not_evaluated",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ingredient {
    pub status: IngredientStatus,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObstructionVerdict {
    Obstructed,
    /// Letter of the first failing ingredient.
    FailsAt(char),
}

impl fmt::Display for ObstructionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObstructionVerdict::Obstructed => f.write_str("OBSTRUCTED"),
            ObstructionVerdict::FailsAt(c) => write!(f, "FAILS_AT_{}", c.to_ascii_uppercase()),
        }
    }
}

impl Serialize for ObstructionVerdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The verified ingredients behind "locally conjugate but not globally
/// conjugate in image", with the verdict they support.
///
/// Ingredients, evaluated in order and short-circuiting on failure:
/// (a) rank even; (b) every diagram automorphism is an even permutation of
/// the nodes; (c) every induced Lie-algebra automorphism has determinant +1;
/// (d) the adjoint representation has a one-dimensional commutant;
/// (e) the swap `τ` of `e_θ` and `e_{−θ}` preserves the Killing form and has
/// determinant −1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    #[serde(rename = "type")]
    pub h_type: SimpleType,
    pub verdict: ObstructionVerdict,
    pub ingredients: BTreeMap<String, Ingredient>,
    pub note: String,
}

impl ObstructionReport {
    pub fn is_obstructed(&self) -> bool {
        self.verdict == ObstructionVerdict::Obstructed
    }
}

const KEYS: [(char, &str); 5] = [
    ('a', "a_rank_even"),
    ('b', "b_automorphisms_even"),
    ('c', "c_induced_determinants"),
    ('d', "d_adjoint_commutant"),
    ('e', "e_tau_odd"),
];

const NOTE: &str = "the verdict is assembled from the verified ingredients; non-conjugacy itself is \
     a proof by contradiction from them, not an independent machine search";

/// Parity from the cycle type, independent of inversion counting.
fn cycle_parity(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut transpositions = 0;
    for s in 0..perm.len() {
        let mut k = s;
        let mut len = 0usize;
        while !seen[k] {
            seen[k] = true;
            k = perm[k];
            len += 1;
        }
        transpositions += len.saturating_sub(1);
    }
    if transpositions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `τ` as a signed permutation of the basis: swaps `e_θ` and `e_{−θ}` for
/// the highest root `θ` and fixes every other basis vector.
fn tau_monomial(st: &StructureTable) -> Vec<(usize, i64)> {
    let rs = st.root_system();
    let top = st.root_basis_index(rs.highest_root());
    let bottom = st.root_basis_index(rs.negative_index(rs.highest_root()));
    (0..st.dim())
        .map(|j| match j {
            j if j == top => (bottom, 1),
            j if j == bottom => (top, 1),
            j => (j, 1),
        })
        .collect()
}

/// The odd element `τ` on `𝔤` as a matrix.
pub fn tau_swap(st: &StructureTable) -> LinearMap {
    let image = tau_monomial(st);
    let dim = st.dim();
    LinearMap::new(Matrix::from_fn(dim, dim, |i, j| {
        if image[j].0 == i {
            Rational::one()
        } else {
            Rational::from_integer(0.into())
        }
    }))
}

pub fn obstruction_report(h_type: SimpleType) -> Result<ObstructionReport> {
    obstruction_report_with_cache(h_type, &DiskCache::disabled())
}

pub fn obstruction_report_with_cache(h_type: SimpleType, cache: &DiskCache) -> Result<ObstructionReport> {
    let mut ingredients: BTreeMap<String, Ingredient> = KEYS
        .iter()
        .map(|(_, k)| {
            (
                k.to_string(),
                Ingredient {
                    status: IngredientStatus::NotEvaluated,
                    detail: String::new(),
                },
            )
        })
        .collect();
    let mut verdict = ObstructionVerdict::Obstructed;
    let mut record = |idx: usize, ok: bool, detail: String| -> bool {
        ingredients.insert(
            KEYS[idx].1.to_string(),
            Ingredient {
                status: if ok { IngredientStatus::Pass } else { IngredientStatus::Fail },
                detail,
            },
        );
        if !ok {
            verdict = ObstructionVerdict::FailsAt(KEYS[idx].0);
        }
        ok
    };

    let rank = h_type.rank();
    let proceed = record(0, rank.is_multiple_of(2), format!("rank {rank}"));

    let rs = Arc::new(RootSystem::new(h_type));
    let autos = diagram_automorphisms(&rs);
    let proceed = proceed && {
        let odd: Vec<String> = autos
            .iter()
            .filter(|d| cycle_parity(&d.node_permutation) == -1)
            .map(|d| format!("{:?}", d.node_permutation))
            .collect();
        let detail = if odd.is_empty() {
            format!("{} automorphism(s), all even", autos.len())
        } else {
            format!("odd node permutation(s): {}", odd.join(", "))
        };
        record(1, odd.is_empty(), detail)
    };

    let st = if proceed {
        Some(StructureTable::cached(rs.clone(), cache))
    } else {
        None
    };
    let proceed = match &st {
        Some(st) if proceed => {
            let mut dets = Vec::with_capacity(autos.len());
            for d in &autos {
                dets.push(monomial_determinant(&induced_monomial(st, d)?));
            }
            let ok = dets.iter().all(|&x| x == 1);
            let shown: Vec<String> = dets.iter().map(ToString::to_string).collect();
            record(2, ok, format!("determinants [{}]", shown.join(", ")))
        }
        _ => false,
    };

    let proceed = match &st {
        Some(st) if proceed => {
            let c = adjoint_commutant_dimension(st);
            record(3, c == 1, format!("commutant dimension {c} on {} dimensions", st.dim()))
        }
        _ => false,
    };

    if let Some(st) = st.as_ref().filter(|_| proceed) {
        let det = monomial_determinant(&tau_monomial(st));
        // τ permutes the weight spaces θ and −θ and fixes the rest, and κ
        // pairs weight spaces only with their negatives, so invariance
        // reduces to the 2×2 block on {e_θ, e_−θ}
        let top = st.root_basis_index(rs.highest_root());
        let bottom = st.root_basis_index(rs.negative_index(rs.highest_root()));
        let k = |i, j| st.killing_entry(i, j);
        let preserves = k(top, top) == k(bottom, bottom) && k(top, bottom) == k(bottom, top);
        let ok = det == -1 && preserves;
        record(
            4,
            ok,
            format!("det τ = {det}, κ(e_θ, e_−θ) = {}, preserves κ: {preserves}", k(top, bottom)),
        );
    }

    Ok(ObstructionReport {
        h_type,
        verdict,
        ingredients,
        note: NOTE.to_string(),
    })
}
