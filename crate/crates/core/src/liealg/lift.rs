use num_traits::One;

use super::{LinearMap, StructureTable};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rootsys::DiagramAutomorphism;
use crate::Rational;

/// Lifts a diagram automorphism `σ` to the Lie-algebra automorphism fixed by
/// `e_{±α_i} ↦ e_{±α_σ(i)}` and `h_i ↦ h_σ(i)`.
///
/// The images of the remaining root vectors follow from
/// `e_ξ = [e_α, e_{ξ−α}] / N_{α,ξ−α}` along extraspecial pairs, so the map
/// is monomial: `e_β ↦ ±e_σ(β)`. Every bracket is checked before returning.
pub fn induced_automorphism(st: &StructureTable, d: &DiagramAutomorphism) -> Result<LinearMap> {
    let image = induced_monomial(st, d)?;
    let dim = st.dim();
    let mut m = Matrix::zeros(dim, dim);
    for (col, &(row, s)) in image.iter().enumerate() {
        m[(row, col)] = Rational::from_integer(s.into());
    }
    Ok(LinearMap::new(m))
}

/// The lift of `d` as a signed permutation: basis vector `j` maps to
/// `image[j].1 · b_{image[j].0}`.
pub fn induced_monomial(st: &StructureTable, d: &DiagramAutomorphism) -> Result<Vec<(usize, i64)>> {
    let rs = st.root_system();
    let r = rs.rank();
    let sigma = &d.node_permutation;
    let cartan = rs.cartan();
    let valid = sigma.len() == r
        && (0..r).all(|i| (0..r).all(|j| cartan[sigma[i]][sigma[j]] == cartan[i][j]));
    if !valid {
        return Err(Error::NotADiagramAutomorphism(rs.simple_type().to_string()));
    }

    let permute = |k: usize| -> usize {
        let c = rs.root_coords(k);
        let mut out = vec![0; r];
        for i in 0..r {
            out[sigma[i]] = c[i];
        }
        rs.root_index(&out).expect("diagram automorphisms permute roots")
    };
    let image_root: Vec<usize> = (0..rs.num_roots()).map(permute).collect();

    let p = rs.num_positive();
    let mut sign = vec![0i64; rs.num_roots()];
    for i in 0..r {
        sign[i] = 1;
        sign[rs.negative_index(i)] = 1;
    }
    for xi in r..p {
        let (alpha, beta) = (0..r)
            .find_map(|i| {
                let b = rs.sum_index(xi, rs.negative_index(i))?;
                rs.is_positive_index(b).then_some((i, b))
            })
            .expect("every non-simple positive root has a simple predecessor");
        for (a, b, x) in [
            (alpha, beta, xi),
            (rs.negative_index(alpha), rs.negative_index(beta), rs.negative_index(xi)),
        ] {
            let n = st.structure_constant(a, b).unwrap();
            let m = st
                .structure_constant(image_root[a], image_root[b])
                .ok_or_else(|| inconsistency(st, a, b))?;
            let s = sign[a] * sign[b] * m;
            if s % n != 0 || (s / n).abs() != 1 {
                return Err(inconsistency(st, a, b));
            }
            sign[x] = s / n;
        }
    }

    let dim = st.dim();
    let mut image: Vec<(usize, i64)> = vec![(0, 0); dim];
    for k in 0..rs.num_roots() {
        image[st.root_basis_index(k)] = (st.root_basis_index(image_root[k]), sign[k]);
    }
    for i in 0..r {
        image[st.h_index(i)] = (st.h_index(sigma[i]), 1);
    }

    let map = |v: &[(usize, i64)]| -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64)> = v.iter().map(|&(k, c)| (image[k].0, c * image[k].1)).collect();
        out.sort_unstable();
        out
    };
    for i in 0..dim {
        for j in i + 1..dim {
            let lhs = map(&st.bracket_basis(i, j));
            let (bi, si) = image[i];
            let (bj, sj) = image[j];
            let mut rhs: Vec<(usize, i64)> = st
                .bracket_basis(bi, bj)
                .into_iter()
                .map(|(k, c)| (k, c * si * sj))
                .collect();
            rhs.sort_unstable();
            if lhs != rhs {
                return Err(Error::ExtensionInconsistency(
                    st.basis_labels()[i].clone(),
                    st.basis_labels()[j].clone(),
                ));
            }
        }
    }

    Ok(image)
}

/// Determinant of a signed permutation given as in [`induced_monomial`]:
/// the product of the signs times the sign of the permutation.
pub fn monomial_determinant(image: &[(usize, i64)]) -> i64 {
    let perm: Vec<usize> = image.iter().map(|&(k, _)| k).collect();
    let mut seen = vec![false; perm.len()];
    let mut det: i64 = image.iter().map(|&(_, s)| s).product();
    for start in 0..perm.len() {
        let mut k = start;
        let mut len = 0;
        while !seen[k] {
            seen[k] = true;
            k = perm[k];
            len += 1;
        }
        if len > 0 && len % 2 == 0 {
            det = -det;
        }
    }
    det
}

fn inconsistency(st: &StructureTable, a: usize, b: usize) -> Error {
    Error::ExtensionInconsistency(
        st.basis_labels()[st.root_basis_index(a)].clone(),
        st.basis_labels()[st.root_basis_index(b)].clone(),
    )
}

/// `exp(n) = Σ nᵏ/k!` for nilpotent `n`; the series must terminate within
/// `dim 𝔤` terms.
pub fn exp_nilpotent(st: &StructureTable, n: &LinearMap) -> Result<LinearMap> {
    let dim = st.dim();
    assert_eq!(n.dim(), dim, "map does not act on this algebra");
    let mut sum = Matrix::identity(dim);
    let mut term: Matrix<Rational> = Matrix::identity(dim);
    for k in 1..=dim {
        term = term
            .mul(n.matrix())
            .scale(&(Rational::one() / Rational::from_integer((k as i64).into())));
        if term.is_zero() {
            return Ok(LinearMap::new(sum));
        }
        sum = sum.add(&term);
    }
    if term.mul(n.matrix()).is_zero() {
        return Ok(LinearMap::new(sum));
    }
    Err(Error::NotNilpotent(dim))
}
