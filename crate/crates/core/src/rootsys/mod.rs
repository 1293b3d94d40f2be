//! Root systems of the simple types, built uniformly from Cartan matrices.
//!
//! Conventions: Bourbaki node numbering; `cartan[i][j] = ⟨α_i, α_j∨⟩`, so the
//! simple root `α_i` written in fundamental-weight coordinates is row `i` of
//! the Cartan matrix. Roots are also kept in simple-root coordinates, and
//! positive roots are ordered by height with ties broken by descending
//! lexicographic order of those coordinates (so simple roots appear in node
//! order).

mod automorphism;
mod classify;
mod dump;
mod types;
mod weight;

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::sync::{Arc, Mutex};

use num_integer::Integer;
use num_traits::{FromPrimitive, Num, ToPrimitive, Zero};

pub use automorphism::{diagram_automorphisms, permutation_sign, DiagramAutomorphism};
pub use classify::{classify_examples, Classification, Verdict};
pub use dump::RootSystemDump;
pub use types::{Family, SimpleType};
pub use weight::WeightVector;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::{Rational, Weight};

pub(crate) type CharacterCache = Mutex<HashMap<Weight, Arc<BTreeMap<Weight, i64>>>>;

/// Roots, coroots and weight-space geometry of a simple type.
///
/// Immutable after construction apart from an internal memo of irreducible
/// characters, which only ever caches deterministic results.
pub struct RootSystem {
    simple_type: SimpleType,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    /// Positive roots first (canonical order), then their negatives in the
    /// same order.
    root_coords: Vec<Vec<i64>>,
    roots: Vec<Weight>,
    coroots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    n_positive: usize,
    weyl_vector: Weight,
    rho_check_doubled: Vec<i64>,
    inverse_cartan: Matrix<Rational>,
    inner_product: Matrix<Rational>,
    inner_scaled: Vec<Vec<i64>>,
    pub(crate) characters: CharacterCache,
}

/// Builds the root system of `t`.
pub fn build_root_system(t: SimpleType) -> RootSystem {
    RootSystem::new(t)
}

pub fn cartan_matrix(t: SimpleType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match t.family() {
        Family::A | Family::B | Family::C | Family::F | Family::G => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Family::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
    }
    match t.family() {
        Family::B => a[n - 2][n - 1] = -2,
        Family::C => a[n - 1][n - 2] = -2,
        Family::F => a[1][2] = -2,
        Family::G => a[1][0] = -3,
        _ => {}
    }
    a
}

/// Integers `d_i = (α_i, α_i)/2`, normalised so the shortest simple root has
/// `d = 1`; `a_ij · d_j = a_ji · d_i`.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    d[0] = Some(Rational::from_integer(1.into()));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                // d_j = d_i a_ji / a_ij
                let dj = d[i].clone().unwrap() * Rational::new(cartan[j][i].into(), cartan[i][j].into());
                d[j] = Some(dj);
                queue.push_back(j);
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let min = d.iter().min().unwrap().clone();
    d.iter()
        .map(|x| (x / &min).to_integer().to_i64().unwrap())
        .collect()
}

impl RootSystem {
    pub fn new(t: SimpleType) -> Self {
        let cartan = cartan_matrix(t);
        let n = t.rank();
        let sym = symmetrizer(&cartan);

        let positives = enumerate_positive_roots(&cartan);
        let n_positive = positives.len();
        let mut root_coords = positives.clone();
        root_coords.extend(positives.iter().map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()));

        let to_fund = |nc: &[i64]| -> Weight {
            WeightVector::new(
                (0..n)
                    .map(|j| (0..n).map(|i| nc[i] * cartan[i][j]).sum())
                    .collect(),
            )
        };
        let roots: Vec<Weight> = root_coords.iter().map(|c| to_fund(c)).collect();

        // (α_i, α_j) = a_ij d_j
        let gram = |x: &[i64], y: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..n {
                for j in 0..n {
                    s += x[i] * y[j] * cartan[i][j] * sym[j];
                }
            }
            s
        };
        let coroots: Vec<Vec<i64>> = root_coords
            .iter()
            .map(|c| {
                let norm = gram(c, c);
                (0..n)
                    .map(|i| {
                        let num = 2 * c[i] * sym[i];
                        debug_assert_eq!(num % norm, 0);
                        num / norm
                    })
                    .collect()
            })
            .collect();

        let index = root_coords
            .iter()
            .enumerate()
            .map(|(k, c)| (c.clone(), k))
            .collect();

        let weyl_vector = WeightVector::new(vec![1; n]);
        let mut rho_check_doubled = vec![0; n];
        for c in &coroots[..n_positive] {
            for (acc, x) in rho_check_doubled.iter_mut().zip(c) {
                *acc += x;
            }
        }

        let cartan_q = Matrix::from_fn(n, n, |i, j| Rational::from_integer(cartan[i][j].into()));
        let inverse_cartan = cartan_q.inverse().expect("Cartan matrices are invertible");
        let inner_product = Matrix::from_fn(n, n, |i, j| {
            &inverse_cartan[(i, j)] * Rational::from_integer(sym[j].into())
        });
        let lcm = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .fold(num_bigint::BigInt::from(1), |acc, (i, j)| {
                acc.lcm(inner_product[(i, j)].denom())
            });
        let inner_scaled = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (&inner_product[(i, j)] * Rational::from_integer(lcm.clone()))
                            .to_integer()
                            .to_i64()
                            .unwrap()
                    })
                    .collect()
            })
            .collect();

        Self {
            simple_type: t,
            cartan,
            symmetrizer: sym,
            root_coords,
            roots,
            coroots,
            index,
            n_positive,
            weyl_vector,
            rho_check_doubled,
            inverse_cartan,
            inner_product,
            inner_scaled,
            characters: Mutex::new(HashMap::new()),
        }
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Ok(Self::new(label.parse()?))
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn rank(&self) -> usize {
        self.simple_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `(α_i, α_i)/2` for each simple root.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// `|Φ| + rank`.
    pub fn algebra_dimension(&self) -> usize {
        self.roots.len() + self.rank()
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.n_positive
    }

    /// All roots in fundamental-weight coordinates: positives in canonical
    /// order, then negatives.
    pub fn roots(&self) -> &[Weight] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.roots[..self.n_positive]
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.roots[..self.rank()]
    }

    /// Root `k` in simple-root coordinates.
    pub fn root_coords(&self, k: usize) -> &[i64] {
        &self.root_coords[k]
    }

    /// Coroot of root `k` in simple-coroot coordinates.
    pub fn coroot(&self, k: usize) -> &[i64] {
        &self.coroots[k]
    }

    /// Index of the negative of root `k`.
    pub fn negative_index(&self, k: usize) -> usize {
        if k < self.n_positive {
            k + self.n_positive
        } else {
            k - self.n_positive
        }
    }

    pub fn is_positive_index(&self, k: usize) -> bool {
        k < self.n_positive
    }

    /// Index of the root with the given simple-root coordinates.
    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Index of `root a + root b` when that sum is a root.
    pub fn sum_index(&self, a: usize, b: usize) -> Option<usize> {
        let s: Vec<i64> = self.root_coords[a]
            .iter()
            .zip(&self.root_coords[b])
            .map(|(x, y)| x + y)
            .collect();
        self.root_index(&s)
    }

    /// `(β_a, β_b)` with short roots of squared length 2.
    pub fn root_inner(&self, a: usize, b: usize) -> i64 {
        let (x, y) = (&self.root_coords[a], &self.root_coords[b]);
        let mut s = 0;
        for (&xi, row) in x.iter().zip(&self.cartan) {
            if xi == 0 {
                continue;
            }
            for ((&yj, &c), &d) in y.iter().zip(row).zip(&self.symmetrizer) {
                s += xi * yj * c * d;
            }
        }
        s
    }

    pub fn index_of_weight(&self, w: &Weight) -> Option<usize> {
        self.to_root_coords(w).and_then(|c| self.root_index(&c))
    }

    pub fn height(&self, k: usize) -> i64 {
        self.root_coords[k].iter().sum()
    }

    /// Index of the highest root.
    pub fn highest_root(&self) -> usize {
        self.n_positive - 1
    }

    /// `ρ`, the half-sum of positive roots (all ones in this basis).
    pub fn weyl_vector(&self) -> &Weight {
        &self.weyl_vector
    }

    /// `⟨μ, β∨⟩` for root `k`.
    pub fn pairing(&self, mu: &Weight, k: usize) -> i64 {
        mu.coords().iter().zip(&self.coroots[k]).map(|(a, b)| a * b).sum()
    }

    /// `2⟨μ, ρ∨⟩`, the doubled height used to order weights.
    pub fn doubled_height(&self, mu: &Weight) -> i64 {
        mu.coords()
            .iter()
            .zip(&self.rho_check_doubled)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Invariant inner product on the weight space in the fundamental-weight
    /// basis, normalised so short simple roots have squared length 2.
    pub fn inner_product_matrix(&self) -> &Matrix<Rational> {
        &self.inner_product
    }

    pub fn inner(&self, a: &Weight, b: &Weight) -> Rational {
        let mut s = Rational::zero();
        for (i, x) in a.coords().iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.coords().iter().enumerate() {
                if *y != 0 {
                    s += &self.inner_product[(i, j)] * Rational::from_integer((x * y).into());
                }
            }
        }
        s
    }

    /// The inner product scaled by a fixed positive integer so that it is
    /// integral on the weight lattice.
    pub fn inner_scaled(&self, a: &Weight, b: &Weight) -> i64 {
        let mut s = 0;
        for (i, x) in a.coords().iter().enumerate() {
            if *x == 0 {
                continue;
            }
            let row = &self.inner_scaled[i];
            for (j, y) in b.coords().iter().enumerate() {
                s += x * y * row[j];
            }
        }
        s
    }

    /// Writes `μ` in simple-root coordinates when it lies in the root
    /// lattice.
    pub fn to_root_coords(&self, mu: &Weight) -> Option<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                // n = A^{-T} μ
                let mut s = Rational::zero();
                for j in 0..n {
                    s += &self.inverse_cartan[(j, i)] * Rational::from_integer(mu[j].into());
                }
                if s.is_integer() {
                    s.to_integer().to_i64()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn from_root_coords(&self, coords: &[i64]) -> Weight {
        let n = self.rank();
        WeightVector::new(
            (0..n)
                .map(|j| (0..n).map(|i| coords[i] * self.cartan[i][j]).sum())
                .collect(),
        )
    }

    /// Simple reflection `s_i` on a weight of any scalar type.
    pub fn reflect_simple<S: Clone + Num + FromPrimitive>(&self, mu: &WeightVector<S>, i: usize) -> WeightVector<S> {
        let c = mu[i].clone();
        if c.is_zero() {
            return mu.clone();
        }
        let alpha: Vec<S> = self.cartan[i].iter().map(|&a| S::from_i64(a).unwrap()).collect();
        mu.add_scaled(S::zero() - c, &WeightVector::new(alpha))
    }

    /// Reflection `s_β` in root `k`, on integral weights.
    pub fn reflect(&self, mu: &Weight, k: usize) -> Weight {
        let p = self.pairing(mu, k);
        mu.add_scaled(-p, &self.roots[k])
    }

    /// Full Weyl orbit by simple-reflection closure.
    pub fn weyl_orbit<S>(&self, w: &WeightVector<S>) -> BTreeSet<WeightVector<S>>
    where
        S: Clone + Num + FromPrimitive + Ord + Hash,
    {
        let mut seen = BTreeSet::from([w.clone()]);
        let mut queue = VecDeque::from([w.clone()]);
        while let Some(mu) = queue.pop_front() {
            for i in 0..self.rank() {
                let next = self.reflect_simple(&mu, i);
                if !seen.contains(&next) {
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        seen
    }

    /// Dominant element of the Weyl orbit of an integral weight.
    pub fn dominant_conjugate(&self, mu: &Weight) -> Weight {
        let mut w = mu.clone();
        'outer: loop {
            for i in 0..self.rank() {
                if w[i] < 0 {
                    w = self.reflect_simple(&w, i);
                    continue 'outer;
                }
            }
            return w;
        }
    }

    pub(crate) fn check_rank(&self, mu: &Weight) -> Result<()> {
        if mu.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: mu.rank(),
            });
        }
        Ok(())
    }

    /// Root-system dump for the JSON interface.
    pub fn dump(&self) -> RootSystemDump {
        RootSystemDump::from_root_system(self)
    }
}

impl Clone for RootSystem {
    fn clone(&self) -> Self {
        Self::new(self.simple_type)
    }
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootSystem")
            .field("type", &self.simple_type.to_string())
            .field("roots", &self.roots.len())
            .finish()
    }
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.simple_type == other.simple_type
    }
}

/// Positive roots in simple-root coordinates via root strings, layer by
/// layer in height, then sorted into canonical order.
fn enumerate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let unit = |i: usize| -> Vec<i64> { (0..n).map(|j| i64::from(i == j)).collect() };
    let mut all: BTreeSet<Vec<i64>> = (0..n).map(unit).collect();
    let mut layer: Vec<Vec<i64>> = (0..n).map(unit).collect();
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                // p: how far the α_i-string extends below β
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        layer = next.into_iter().filter(|r| !all.contains(r)).collect();
        all.extend(layer.iter().cloned());
    }
    let mut out: Vec<Vec<i64>> = all.into_iter().collect();
    out.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    out
}
