//! The split simple Lie algebra of a root system in a Chevalley basis.
//!
//! Basis order: `e_β` for positive roots in canonical order, then
//! `h_1, …, h_r`, then `e_{−β}` in the same order. For `A1` this is
//! `(e, h, f)`.
//!
//! Structure constants follow the extraspecial-pair construction: for each
//! non-simple positive root `ξ`, the pair `(α_i, ξ − α_i)` with the smallest
//! admissible node `i` gets `N = +(p + 1)`, and every other constant is forced
//! by the standard relations between the `N_{αβ}`.

mod lift;

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub use lift::{exp_nilpotent, induced_automorphism, induced_monomial, monomial_determinant};

use crate::cache::DiskCache;
use crate::linalg::Matrix;
use crate::rootsys::RootSystem;
use crate::{QMatrix, Rational};

/// Part of every structure-table cache key; bump when signs change.
pub const CONVENTION: &str = "extraspecial-lowest-node-v1";

/// A linear endomorphism of the algebra, in the Chevalley basis.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap {
    matrix: QMatrix,
}

impl LinearMap {
    pub fn new(matrix: QMatrix) -> Self {
        assert!(matrix.is_square());
        Self { matrix }
    }

    pub fn identity(dim: usize) -> Self {
        Self::new(Matrix::identity(dim))
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> QMatrix {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn determinant(&self) -> Rational {
        self.matrix.determinant()
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        LinearMap::new(self.matrix.mul(&other.matrix))
    }

    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(x)
    }

    /// `mᵀ · gram · m = gram`
    pub fn preserves(&self, form: &BilinearForm) -> bool {
        self.matrix.congruence(&form.gram) == form.gram
    }
}

/// A bilinear form on the algebra, by its Gram matrix in the Chevalley basis.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm {
    gram: QMatrix,
}

impl BilinearForm {
    pub fn new(gram: QMatrix) -> Self {
        Self { gram }
    }

    pub fn gram(&self) -> &QMatrix {
        &self.gram
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram == self.gram.transpose()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.gram.determinant().is_zero()
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let gy = self.gram.mul_vec(y);
        x.iter()
            .zip(&gy)
            .filter(|(a, _)| !a.is_zero())
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }
}

/// Positive-pair constants as stored on disk: `(a, b, N_ab)` with `a < b`.
#[derive(Serialize, Deserialize)]
struct StoredConstants {
    convention: String,
    label: String,
    positive: Vec<(usize, usize, i64)>,
}

/// Brackets of the Chevalley basis.
pub struct StructureTable {
    rs: Arc<RootSystem>,
    /// `(a, b) → (index of a + b, N_ab)` for every pair of roots whose sum is
    /// a root.
    constants: HashMap<(usize, usize), (usize, i64)>,
    labels: Vec<String>,
}

pub fn build_algebra(rs: Arc<RootSystem>) -> StructureTable {
    StructureTable::new(rs)
}

impl StructureTable {
    pub fn new(rs: Arc<RootSystem>) -> Self {
        let positive = positive_constants(&rs);
        Self::from_positive(rs, &positive)
    }

    /// As [`StructureTable::new`], going through `cache`.
    pub fn cached(rs: Arc<RootSystem>, cache: &DiskCache) -> Self {
        let label = rs.simple_type().to_string();
        let key = format!("structure-{label}-{CONVENTION}");
        let stored: StoredConstants = cache.get_or_build(&key, || StoredConstants {
            convention: CONVENTION.to_string(),
            label: label.clone(),
            positive: positive_constants(&rs),
        });
        if stored.convention != CONVENTION || stored.label != label {
            return Self::new(rs);
        }
        Self::from_positive(rs, &stored.positive)
    }

    fn from_positive(rs: Arc<RootSystem>, positive: &[(usize, usize, i64)]) -> Self {
        let mut known = HashMap::with_capacity(2 * positive.len());
        for &(a, b, n) in positive {
            known.insert((a, b), n);
            known.insert((b, a), -n);
        }
        let norms: Vec<i64> = (0..rs.num_roots()).map(|k| rs.root_inner(k, k)).collect();
        let mut constants = HashMap::new();
        for a in 0..rs.num_roots() {
            for b in 0..rs.num_roots() {
                if let Some(s) = rs.sum_index(a, b) {
                    constants.insert((a, b), (s, mixed_constant(&rs, &known, &norms, a, b)));
                }
            }
        }
        let labels = basis_labels(&rs);
        Self { rs, constants, labels }
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn dim(&self) -> usize {
        self.rs.algebra_dimension()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.labels
    }

    /// Basis position of `e_β` for root index `k`.
    pub fn root_basis_index(&self, k: usize) -> usize {
        let p = self.rs.num_positive();
        if k < p {
            k
        } else {
            k + self.rs.rank()
        }
    }

    /// Basis position of `h_i`.
    pub fn h_index(&self, i: usize) -> usize {
        self.rs.num_positive() + i
    }

    /// Root carried by basis element `b`, or `None` for the Cartan part.
    pub fn basis_root(&self, b: usize) -> Option<usize> {
        let p = self.rs.num_positive();
        let r = self.rs.rank();
        if b < p {
            Some(b)
        } else if b < p + r {
            None
        } else {
            Some(b - r)
        }
    }

    /// `N_ab` when root `a` + root `b` is a root.
    pub fn structure_constant(&self, a: usize, b: usize) -> Option<i64> {
        self.constants.get(&(a, b)).map(|&(_, n)| n)
    }

    /// `[b_i, b_j]` as sparse integer coordinates.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<(usize, i64)> {
        match (self.basis_root(i), self.basis_root(j)) {
            (Some(a), Some(b)) => {
                if b == self.rs.negative_index(a) {
                    // [e_β, e_{−β}] = h_β
                    self.rs
                        .coroot(a)
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| **c != 0)
                        .map(|(t, &c)| (self.h_index(t), c))
                        .collect()
                } else if let Some(&(s, n)) = self.constants.get(&(a, b)) {
                    vec![(self.root_basis_index(s), n)]
                } else {
                    Vec::new()
                }
            }
            (None, Some(b)) => {
                let c = self.rs.roots()[b][i - self.rs.num_positive()];
                if c == 0 {
                    Vec::new()
                } else {
                    vec![(j, c)]
                }
            }
            (Some(a), None) => {
                let c = self.rs.roots()[a][j - self.rs.num_positive()];
                if c == 0 {
                    Vec::new()
                } else {
                    vec![(i, -c)]
                }
            }
            (None, None) => Vec::new(),
        }
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let c = xi * yj;
                for (k, n) in self.bracket_basis(i, j) {
                    out[k] += &c * Rational::from_integer(n.into());
                }
            }
        }
        out
    }

    /// `ad(b_i)` as sparse `(row, column, value)` triples.
    pub fn ad_basis_sparse(&self, i: usize) -> Vec<(usize, usize, i64)> {
        (0..self.dim())
            .flat_map(|j| self.bracket_basis(i, j).into_iter().map(move |(k, v)| (k, j, v)))
            .collect()
    }

    /// Matrix of `ad(X)` for `X` in basis coordinates.
    pub fn adjoint_matrix(&self, x: &[Rational]) -> LinearMap {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (row, col, v) in self.ad_basis_sparse(i) {
                m[(row, col)] += xi * Rational::from_integer(v.into());
            }
        }
        LinearMap::new(m)
    }

    /// Weight of `b_i` (roots for `e_β`, zero for `h_i`) as an index into the
    /// root list.
    fn basis_weight_root(&self, i: usize) -> Option<usize> {
        self.basis_root(i)
    }

    /// `κ(b_i, b_j) = Tr(ad b_i · ad b_j)` from sparse adjoint matrices.
    pub fn killing_entry(&self, i: usize, j: usize) -> i64 {
        let adj: HashMap<(usize, usize), i64> = self
            .ad_basis_sparse(j)
            .into_iter()
            .map(|(r, c, v)| ((r, c), v))
            .collect();
        self.ad_basis_sparse(i)
            .into_iter()
            .filter_map(|(r, c, v)| adj.get(&(c, r)).map(|w| v * w))
            .sum()
    }

    /// Gram matrix of the Killing form. Only pairs whose weights cancel are
    /// evaluated: `ad b_i · ad b_j` shifts weights by their sum, so every
    /// other trace vanishes.
    pub fn killing_form(&self) -> BilinearForm {
        let n = self.dim();
        let mut gram = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let cancels = match (self.basis_weight_root(i), self.basis_weight_root(j)) {
                    (Some(a), Some(b)) => b == self.rs.negative_index(a),
                    (None, None) => true,
                    _ => false,
                };
                if cancels {
                    let v = Rational::from_integer(self.killing_entry(i, j).into());
                    gram[(j, i)] = v.clone();
                    gram[(i, j)] = v;
                }
            }
        }
        BilinearForm::new(gram)
    }

    pub fn unit(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::from_integer(1.into());
        v
    }
}

impl std::fmt::Debug for StructureTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("StructureTable")
            .field("type", &self.rs.simple_type().to_string())
            .field("dim", &self.dim())
            .finish()
    }
}

fn basis_labels(rs: &RootSystem) -> Vec<String> {
    let coords = |k: usize| {
        rs.root_coords(k)
            .iter()
            .map(|c| c.abs().to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let p = rs.num_positive();
    let mut labels: Vec<String> = (0..p).map(|k| format!("e[{}]", coords(k))).collect();
    labels.extend((1..=rs.rank()).map(|i| format!("h{i}")));
    labels.extend((p..2 * p).map(|k| format!("f[{}]", coords(k))));
    labels
}

/// Largest `p` with `β − pα` a root.
fn string_below(rs: &RootSystem, alpha: usize, beta: usize) -> i64 {
    let a = rs.root_coords(alpha);
    let mut cur: Vec<i64> = rs.root_coords(beta).to_vec();
    let mut p = 0;
    loop {
        for (c, x) in cur.iter_mut().zip(a) {
            *c -= x;
        }
        if rs.root_index(&cur).is_none() {
            return p;
        }
        p += 1;
    }
}

/// `N_ab` for any pair with `a + b` a root, reduced to positive pairs via
/// `N_{−a,−b} = −N_ab` and the three-root relation
/// `N_ab/(c,c) = N_bc/(a,a) = N_ca/(b,b)` for `a + b + c = 0`.
fn mixed_constant(
    rs: &RootSystem,
    known: &HashMap<(usize, usize), i64>,
    norms: &[i64],
    a: usize,
    b: usize,
) -> i64 {
    match (rs.is_positive_index(a), rs.is_positive_index(b)) {
        (true, true) => known[&(a, b)],
        (false, false) => -known[&(rs.negative_index(a), rs.negative_index(b))],
        (true, false) => {
            let s = rs.sum_index(a, b).expect("a + b is a root");
            let c = rs.negative_index(s);
            let (num, den) = if rs.is_positive_index(s) {
                (mixed_constant(rs, known, norms, b, c) * norms[c], norms[a])
            } else {
                (mixed_constant(rs, known, norms, c, a) * norms[c], norms[b])
            };
            debug_assert_eq!(num % den, 0);
            num / den
        }
        (false, true) => -mixed_constant(rs, known, norms, b, a),
    }
}

/// Structure constants `(a, b, N_ab)` for positive `a < b` with `a + b`
/// positive, built height by height.
fn positive_constants(rs: &RootSystem) -> Vec<(usize, usize, i64)> {
    let p = rs.num_positive();
    let norms: Vec<i64> = (0..rs.num_roots()).map(|k| rs.root_inner(k, k)).collect();
    let mut known: HashMap<(usize, usize), i64> = HashMap::new();
    let mut out = Vec::new();

    for xi in rs.rank()..p {
        let hx = rs.height(xi);
        let xc = rs.root_coords(xi);
        let mut pairs = Vec::new();
        for g in 0..p {
            if rs.height(g) >= hx {
                break;
            }
            let d: Vec<i64> = xc.iter().zip(rs.root_coords(g)).map(|(x, y)| x - y).collect();
            if let Some(dk) = rs.root_index(&d) {
                if rs.is_positive_index(dk) && g < dk {
                    pairs.push((g, dk));
                }
            }
        }
        let (alpha, beta) = pairs[0];
        debug_assert!(alpha < rs.rank());
        let n_ab = string_below(rs, alpha, beta) + 1;
        let mut found = vec![(alpha, beta, n_ab)];

        for &(g, d) in &pairs[1..] {
            // four-root relation on (α, β, −γ, −δ)
            let mut acc = Rational::zero();
            let ng = rs.negative_index(g);
            let nd = rs.negative_index(d);
            if let Some(bg) = rs.sum_index(beta, ng) {
                let t = mixed_constant(rs, &known, &norms, beta, ng)
                    * mixed_constant(rs, &known, &norms, alpha, nd);
                acc += Rational::new(t.into(), norms[bg].into());
            }
            if let Some(ag) = rs.sum_index(alpha, ng) {
                let t = mixed_constant(rs, &known, &norms, ng, alpha)
                    * mixed_constant(rs, &known, &norms, beta, nd);
                acc += Rational::new(t.into(), norms[ag].into());
            }
            let n = acc * Rational::from_integer(norms[xi].into()) / Rational::from_integer(n_ab.into());
            assert!(n.is_integer(), "non-integral structure constant");
            found.push((g, d, n.to_integer().to_i64().unwrap()));
        }
        for (g, d, n) in found {
            known.insert((g, d), n);
            known.insert((d, g), -n);
            out.push((g, d, n));
        }
    }
    out
}
