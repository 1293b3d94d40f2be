//! The adjoint embedding `i: H → SO(𝔥, κ) ≅ SO(2N)` and its odd twist at the
//! level of weight lattices, and the dimension data they induce.
//!
//! The maximal torus of `SO(2N)` is aligned with the embedding: `ε_j`
//! restricts to the `j`-th positive root of `H` for `j < |Φ⁺|` and to zero for
//! the remaining `rank(H)/2` coordinates. The twist negates the column of the
//! highest root, which realises an odd orthogonal element swapping one
//! hyperbolic pair.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::repchar::{decompose, dominant_weights_up_to_dim, irreducible_character, Character};
use crate::rootsys::{RootSystem, SimpleType};
use crate::Weight;

#[derive(Clone, Debug)]
pub struct AdjointEmbedding {
    h: Arc<RootSystem>,
    g: Arc<RootSystem>,
    columns: Vec<Weight>,
    twisted: bool,
    twist_index: usize,
}

pub fn build_adjoint_embedding(h: Arc<RootSystem>) -> Result<AdjointEmbedding> {
    if !h.rank().is_multiple_of(2) {
        return Err(Error::OddRank {
            label: h.simple_type().to_string(),
            rank: h.rank(),
        });
    }
    let n = h.algebra_dimension() / 2;
    let g = Arc::new(RootSystem::new(SimpleType::new(crate::rootsys::Family::D, n)?));
    let mut columns: Vec<Weight> = h.positive_roots().to_vec();
    columns.extend(std::iter::repeat_n(Weight::zero(h.rank()), n - columns.len()));
    let twist_index = h.highest_root();
    Ok(AdjointEmbedding {
        h,
        g,
        columns,
        twisted: false,
        twist_index,
    })
}

impl AdjointEmbedding {
    pub fn h_system(&self) -> &Arc<RootSystem> {
        &self.h
    }

    /// The root system `D_N` of the target group.
    pub fn g_system(&self) -> &Arc<RootSystem> {
        &self.g
    }

    pub fn g_rank(&self) -> usize {
        self.columns.len()
    }

    pub fn is_twisted(&self) -> bool {
        self.twisted
    }

    pub fn twist_index(&self) -> usize {
        self.twist_index
    }

    /// Restriction of `ε_j` to the torus of `H`, for every `j`.
    pub fn restriction_columns(&self) -> Vec<Weight> {
        let mut cols = self.columns.clone();
        if self.twisted {
            cols[self.twist_index] = -&cols[self.twist_index];
        }
        cols
    }

    /// Pushes `Σ λ_j ε_j` to `Σ λ_j · column_j`.
    pub fn restrict_weight(&self, epsilon: &[i64]) -> Weight {
        let cols = self.restriction_columns();
        let mut out = Weight::zero(self.h.rank());
        for (c, col) in epsilon.iter().zip(&cols) {
            if *c != 0 {
                out = out.add_scaled(*c, col);
            }
        }
        out
    }

    /// Character of `H` obtained by restricting a character of `D_N`.
    pub fn restrict_character(&self, c: &Character) -> Result<Character> {
        if c.root_system().simple_type() != self.g.simple_type() {
            return Err(Error::RankMismatch {
                expected: self.g.rank(),
                found: c.root_system().rank(),
            });
        }
        let cols = self.restriction_columns();
        let mut terms: BTreeMap<Weight, i64> = BTreeMap::new();
        for (mu, m) in c.terms() {
            let eps = epsilon_coords(mu).ok_or_else(|| Error::NotDominantIntegral(format!("{mu} is a spin weight")))?;
            let mut w = Weight::zero(self.h.rank());
            for (x, col) in eps.iter().zip(&cols) {
                if *x != 0 {
                    w = w.add_scaled(*x, col);
                }
            }
            *terms.entry(w).or_default() += m;
        }
        Ok(Character::new(self.h.clone(), terms))
    }

    /// `dim V^H` for the irreducible `D_N` representation with highest weight
    /// `λ` (fundamental coordinates), read from the trivial summand of the
    /// restriction.
    pub fn dim_fixed_space(&self, lambda: &Weight) -> Result<u64> {
        if !lambda.is_dominant() || epsilon_coords(lambda).is_none() {
            return Err(Error::NotDominantIntegral(lambda.to_string()));
        }
        let chi = irreducible_character(&self.g, lambda)?;
        Ok(decompose(&self.restrict_character(&chi)?)?.trivial_multiplicity())
    }
}

/// The embedding composed with conjugation by the odd element; applying it
/// twice gives back the original embedding.
pub fn twist_odd(e: &AdjointEmbedding) -> AdjointEmbedding {
    AdjointEmbedding {
        twisted: !e.twisted,
        ..e.clone()
    }
}

/// `D_N` weight in `ε` coordinates, or `None` for spin weights
/// (`a_{N−1} + a_N` odd).
pub fn epsilon_coords(lambda: &Weight) -> Option<Vec<i64>> {
    let a = lambda.coords();
    let n = a.len();
    let spin = a[n - 2] + a[n - 1];
    if spin % 2 != 0 {
        return None;
    }
    let mut out = vec![0; n];
    let mut tail = spin / 2;
    out[n - 2] = tail;
    for j in (0..n - 2).rev() {
        tail += a[j];
        out[j] = tail;
    }
    out[n - 1] = (a[n - 1] - a[n - 2]) / 2;
    Some(out)
}

/// The image of a `D_N` weight under the diagram symmetry swapping the last
/// two nodes (`ε_N ↦ −ε_N`).
pub fn mirror(lambda: &Weight) -> Weight {
    let mut c = lambda.coords().to_vec();
    let n = c.len();
    c.swap(n - 2, n - 1);
    Weight::from(c)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionDatum {
    pub g_highest_weight: Weight,
    pub g_dimension: u128,
    pub fixed_dim: u64,
}

/// Integral dominant `D_N` weights with dimension at most `bound`, ordered by
/// dimension then lexicographically.
pub fn integral_weights_up_to_dim(g: &RootSystem, bound: u128) -> Result<Vec<(Weight, u128)>> {
    let mut ws: Vec<(Weight, u128)> = dominant_weights_up_to_dim(g, bound)?
        .into_iter()
        .filter(|(w, _)| epsilon_coords(w).is_some())
        .collect();
    ws.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    Ok(ws)
}

pub fn dimension_data_table(e: &AdjointEmbedding, bound: u128) -> Result<Vec<DimensionDatum>> {
    integral_weights_up_to_dim(&e.g, bound)?
        .into_par_iter()
        .map(|(w, d)| {
            Ok(DimensionDatum {
                fixed_dim: e.dim_fixed_space(&w)?,
                g_highest_weight: w,
                g_dimension: d,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionDataRow {
    pub highest_weight: Weight,
    pub epsilon: Vec<i64>,
    pub dimension: u128,
    pub fixed_untwisted: u64,
    pub fixed_twisted: u64,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DimensionDataReport {
    #[serde(rename = "type")]
    pub h_type: SimpleType,
    pub target: String,
    pub bound: u128,
    pub twist_column: usize,
    pub rows: Vec<DimensionDataRow>,
    pub discrepancies: usize,
    pub all_equal: bool,
}

/// Builds `i` and `i′` for `h` and compares their dimension data entrywise.
pub fn verify_dimension_data_equal(h: Arc<RootSystem>, bound: u128) -> Result<DimensionDataReport> {
    let i = build_adjoint_embedding(h.clone())?;
    let j = twist_odd(&i);
    let plain = dimension_data_table(&i, bound)?;
    let twisted = dimension_data_table(&j, bound)?;
    let rows: Vec<DimensionDataRow> = plain
        .into_iter()
        .zip(twisted)
        .map(|(a, b)| {
            debug_assert_eq!(a.g_highest_weight, b.g_highest_weight);
            DimensionDataRow {
                epsilon: epsilon_coords(&a.g_highest_weight).unwrap(),
                equal: a.fixed_dim == b.fixed_dim,
                highest_weight: a.g_highest_weight,
                dimension: a.g_dimension,
                fixed_untwisted: a.fixed_dim,
                fixed_twisted: b.fixed_dim,
            }
        })
        .collect();
    let discrepancies = rows.iter().filter(|r| !r.equal).count();
    Ok(DimensionDataReport {
        h_type: h.simple_type(),
        target: format!("SO({})", 2 * i.g_rank()),
        bound,
        twist_column: i.twist_index(),
        rows,
        discrepancies,
        all_equal: discrepancies == 0,
    })
}
