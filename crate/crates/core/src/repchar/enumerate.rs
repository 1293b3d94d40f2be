use std::sync::Arc;

use serde::Serialize;

use super::{form_type, weyl_dimension, FormType};
use crate::error::Result;
use crate::rootsys::{diagram_automorphisms, Family, RootSystem, SimpleType};
use crate::Weight;

/// One irreducible representation of a simple or two-factor semisimple
/// algebra. The trivial representation has no factors.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IrrepEntry {
    pub factors: Vec<(SimpleType, Weight)>,
    pub dimension: u128,
    pub form: FormType,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl IrrepEntry {
    pub fn algebra_label(&self) -> String {
        if self.factors.is_empty() {
            return "trivial".into();
        }
        self.factors
            .iter()
            .map(|(t, _)| t.to_string())
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn weight_label(&self) -> String {
        if self.factors.is_empty() {
            return "()".into();
        }
        self.factors
            .iter()
            .map(|(_, w)| w.to_string())
            .collect::<Vec<_>>()
            .join("⊗")
    }
}

/// One label per isomorphism class of simple algebras: `B2` is listed as
/// `C2` and `D3` as `A3`.
fn canonical_algebras(max_rank: usize) -> Vec<SimpleType> {
    SimpleType::all_up_to_rank(max_rank)
        .into_iter()
        .filter(|t| match t.family() {
            Family::B => t.rank() >= 3,
            Family::D => t.rank() >= 4,
            _ => true,
        })
        .collect()
}

/// Every dominant integral weight with Weyl dimension at most `bound`,
/// with its dimension, in lexicographic order.
///
/// The dimension is increasing in each coordinate, so a coordinate stops
/// growing as soon as the weight with all later coordinates zero exceeds the
/// bound.
pub fn dominant_weights_up_to_dim(rs: &RootSystem, bound: u128) -> Result<Vec<(Weight, u128)>> {
    fn walk(
        rs: &RootSystem,
        bound: u128,
        pos: usize,
        cur: &mut Vec<i64>,
        out: &mut Vec<(Weight, u128)>,
    ) -> Result<()> {
        if pos == cur.len() {
            let w = Weight::from(cur.clone());
            let d = weyl_dimension(rs, &w)?;
            if d <= bound {
                out.push((w, d));
            }
            return Ok(());
        }
        loop {
            if weyl_dimension(rs, &Weight::from(cur.clone()))? > bound {
                break;
            }
            walk(rs, bound, pos + 1, cur, out)?;
            cur[pos] += 1;
        }
        cur[pos] = 0;
        Ok(())
    }
    let mut out = Vec::new();
    walk(rs, bound, 0, &mut vec![0; rs.rank()], &mut out)?;
    Ok(out)
}

/// Nontrivial irreducibles of exact dimension `d`, one per orbit of the
/// diagram automorphism group (the lexicographically largest member).
fn irreps_of_simple(rs: &RootSystem, dims: impl Fn(u128) -> bool, bound: u128) -> Result<Vec<(Weight, u128)>> {
    let autos = diagram_automorphisms(rs);
    let canonical = |w: &Weight| {
        autos
            .iter()
            .map(|a| {
                let mut c = vec![0; w.rank()];
                for (i, &s) in a.node_permutation.iter().enumerate() {
                    c[s] = w[i];
                }
                Weight::from(c)
            })
            .max()
            .unwrap()
    };
    Ok(dominant_weights_up_to_dim(rs, bound)?
        .into_iter()
        .filter(|(w, d)| *d > 1 && dims(*d) && canonical(w) == *w)
        .collect())
}

/// Irreducible representations of dimension exactly `d` of simple algebras
/// of rank at most `max_rank` and, with `allow_products`, of products of two
/// simple algebras of total rank at most `max_rank` with both factors
/// nontrivial. Each entry carries the type of its invariant form.
pub fn enumerate_irreps_of_dim(d: u128, max_rank: usize, allow_products: bool) -> Result<Vec<IrrepEntry>> {
    if d <= 1 {
        return Ok(vec![IrrepEntry {
            factors: Vec::new(),
            dimension: 1,
            form: FormType::Orthogonal,
            note: None,
        }]);
    }
    let algebras = canonical_algebras(max_rank);
    let mut out = Vec::new();
    for t in &algebras {
        let rs = Arc::new(RootSystem::new(*t));
        for (w, dim) in irreps_of_simple(&rs, |x| x == d, d)? {
            out.push(IrrepEntry {
                form: form_type(&rs, &w)?,
                factors: vec![(*t, w)],
                dimension: dim,
                note: None,
            });
        }
    }
    if !allow_products {
        return Ok(out);
    }

    // every simple factor that could appear, with its form type
    let mut pieces: Vec<(SimpleType, Weight, u128, FormType)> = Vec::new();
    for t in algebras.iter().filter(|t| t.rank() < max_rank) {
        let rs = Arc::new(RootSystem::new(*t));
        for (w, dim) in irreps_of_simple(&rs, |x| d.is_multiple_of(x) && x < d, d / 2)? {
            pieces.push((*t, w.clone(), dim, form_type(&rs, &w)?));
        }
    }
    for (i, a) in pieces.iter().enumerate() {
        for b in &pieces[i..] {
            if a.2 * b.2 != d || a.0.rank() + b.0.rank() > max_rank {
                continue;
            }
            let note = (a.0.family() == Family::A && a.0.rank() == 1 && b.0 == a.0 && a.2 == 2 && b.2 == 2).then(|| {
                "so(4) = sl(2)+sl(2): one algebra-level entry for both SL(2)xSL(2) \
                 (faithful) and SO(4) (kernel {±1})"
                    .to_string()
            });
            out.push(IrrepEntry {
                factors: vec![(a.0, a.1.clone()), (b.0, b.1.clone())],
                dimension: d,
                form: a.3.product(b.3),
                note,
            });
        }
    }
    Ok(out)
}
