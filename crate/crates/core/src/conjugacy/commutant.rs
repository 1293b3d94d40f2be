use std::collections::HashMap;

use crate::liealg::StructureTable;
use crate::linalg::{SparseEchelon, SparseMatrix};
use crate::scalar::Scalar;
use crate::Rational;

/// `dim { X : X M = M X for every generator M }`.
///
/// Diagonal generators are used first: `X` commuting with `diag(d)` forces
/// `X_ij = 0` unless `d_i = d_j`, which removes most unknowns for weight
/// bases. The remaining linear conditions are eliminated sparsely.
pub fn commutant_dimension<S: Scalar>(generators: &[SparseMatrix<S>]) -> usize {
    let Some(n) = generators.first().map(SparseMatrix::nrows) else {
        return 0;
    };
    assert!(
        generators.iter().all(|m| m.nrows() == n && m.ncols() == n),
        "generators must be square of equal size"
    );
    let diagonals: Vec<Vec<S>> = generators.iter().filter_map(SparseMatrix::as_diagonal).collect();
    let others: Vec<&SparseMatrix<S>> = generators.iter().filter(|m| m.as_diagonal().is_none()).collect();

    let mut var: HashMap<(usize, usize), usize> = HashMap::new();
    for i in 0..n {
        for j in 0..n {
            if diagonals.iter().all(|d| d[i] == d[j]) {
                let k = var.len();
                var.insert((i, j), k);
            }
        }
    }

    let mut ech = SparseEchelon::new(var.len());
    for m in others {
        let mut columns: Vec<Vec<(usize, S)>> = vec![Vec::new(); n];
        for (i, k, v) in m.entries() {
            columns[k].push((i, v.clone()));
        }
        // entry (i, j) of X M − M X
        let mut eqs: HashMap<(usize, usize), Vec<(usize, S)>> = HashMap::new();
        for (&(i, k), &x) in &var {
            for (j, v) in m.row(k) {
                eqs.entry((i, *j)).or_default().push((x, v.clone()));
            }
            // X_{ik} appears in (M X)_{r k} with coefficient M_{r i}
            for (r, v) in &columns[i] {
                eqs.entry((*r, k)).or_default().push((x, -v.clone()));
            }
        }
        let mut keys: Vec<(usize, usize)> = eqs.keys().copied().collect();
        keys.sort_unstable();
        for key in keys {
            ech.insert(eqs.remove(&key).unwrap());
        }
    }
    ech.nullity()
}

/// Sparse adjoint matrices of `e_i`, `f_i` and `h_i` for the simple roots;
/// they generate the algebra.
pub fn adjoint_generators(st: &StructureTable) -> Vec<SparseMatrix<Rational>> {
    let rs = st.root_system();
    let dim = st.dim();
    let mut basis = Vec::new();
    for i in 0..rs.rank() {
        basis.push(st.root_basis_index(i));
        basis.push(st.root_basis_index(rs.negative_index(i)));
        basis.push(st.h_index(i));
    }
    basis
        .into_iter()
        .map(|b| {
            let mut m = SparseMatrix::new(dim, dim);
            for (r, c, v) in st.ad_basis_sparse(b) {
                m.add_entry(r, c, Rational::from_integer(v.into()));
            }
            m
        })
        .collect()
}

/// Dimension of the commutant of the adjoint representation; 1 exactly when
/// it is absolutely irreducible.
pub fn adjoint_commutant_dimension(st: &StructureTable) -> usize {
    commutant_dimension(&adjoint_generators(st))
}
