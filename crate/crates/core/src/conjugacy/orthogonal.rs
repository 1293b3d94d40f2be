//! Exact SO-conjugacy of semisimple orthogonal elements over `Q(i)`.
//!
//! For `a` orthogonal and diagonalisable, `E_λ` and `E_μ` are
//! `F`-orthogonal unless `λμ = 1`, so each pair `{λ, λ⁻¹} ≠ {±1}` spans a
//! nondegenerate block with an adapted hyperbolic basis (`F(v_i, w_j) = δ_ij`).
//! Matching these bases for `a` and `b` gives an isometry between the
//! non-`±1` parts, which Witt's theorem extends to all of `V` by reflections.
//! The extension maps the `±1` part of `b` onto that of `a`; when only one of
//! `±1` occurs, it therefore intertwines `b` with `a`. A determinant of `−1`
//! is repaired by a reflection inside the `±1` eigenspace, which commutes with
//! `a`; without such an eigenspace the pair is conjugate under `O` only.

use std::cmp::Ordering;

use num_complex::Complex;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::embed::AdjointEmbedding;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::format_gaussian;
use crate::{GaussianMatrix, GaussianRational, Rational};

use super::TorusElement;

type G = GaussianRational;

fn g(r: Rational) -> G {
    Complex::new(r, Rational::zero())
}

fn cmp_gaussian(x: &G, y: &G) -> Ordering {
    x.re.cmp(&y.re).then_with(|| x.im.cmp(&y.im))
}

/// The form `Diag(P, …, P)` with `P = [[0,1],[1,0]]` on `pairs` hyperbolic
/// planes.
pub fn hyperbolic_form(pairs: usize) -> GaussianMatrix {
    let n = 2 * pairs;
    GaussianMatrix::from_fn(n, n, |i, j| if i / 2 == j / 2 && i != j { G::one() } else { G::zero() })
}

/// An invertible matrix `a` with `aᵀ F a = F` for a nondegenerate symmetric
/// form `F`.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthogonalElement {
    matrix: GaussianMatrix,
    form: GaussianMatrix,
}

impl OrthogonalElement {
    pub fn new(matrix: GaussianMatrix, form: GaussianMatrix) -> Result<Self> {
        let n = form.rows();
        if !form.is_square() || !matrix.is_square() || matrix.rows() != n {
            return Err(Error::InvariantViolation(format!(
                "matrix {}x{} does not match form {}x{}",
                matrix.rows(),
                matrix.cols(),
                form.rows(),
                form.cols()
            )));
        }
        if form != form.transpose() || form.determinant().is_zero() {
            return Err(Error::InvariantViolation("form is not nondegenerate symmetric".into()));
        }
        if matrix.congruence(&form) != form {
            return Err(Error::InvariantViolation("matrix does not preserve the form".into()));
        }
        Ok(Self { matrix, form })
    }

    /// Orthogonal for the hyperbolic form of matching size.
    pub fn with_hyperbolic_form(matrix: GaussianMatrix) -> Result<Self> {
        let form = hyperbolic_form(matrix.rows() / 2);
        Self::new(matrix, form)
    }

    pub fn matrix(&self) -> &GaussianMatrix {
        &self.matrix
    }

    pub fn form(&self) -> &GaussianMatrix {
        &self.form
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn determinant(&self) -> G {
        self.matrix.determinant()
    }

    /// `g · self · g⁻¹`.
    pub fn conjugated_by(&self, g: &OrthogonalElement) -> Result<Self> {
        if g.form != self.form {
            return Err(Error::InvariantViolation("conjugating element preserves a different form".into()));
        }
        let inv = g
            .matrix
            .inverse()
            .ok_or_else(|| Error::InvariantViolation("singular orthogonal element".into()))?;
        Ok(Self {
            matrix: g.matrix.mul(&self.matrix).mul(&inv),
            form: self.form.clone(),
        })
    }
}

/// `e(t)` in the hyperbolic basis: `diag(t^{c_1}, t^{−c_1}, …)` over the
/// restriction columns `c_j`.
pub fn torus_image(e: &AdjointEmbedding, t: &TorusElement) -> Result<OrthogonalElement> {
    let rs = e.h_system();
    let mut diag = Vec::with_capacity(2 * e.g_rank());
    for col in e.restriction_columns() {
        let v = t.eval_weight(rs, &col)?;
        diag.push(g(v.recip()));
        diag.push(g(v));
    }
    OrthogonalElement::with_hyperbolic_form(GaussianMatrix::diagonal(&diag))
}

/// The odd element swapping the two isotropic vectors of hyperbolic plane
/// `pair` and fixing everything else.
pub fn odd_swap(pairs: usize, pair: usize) -> OrthogonalElement {
    let n = 2 * pairs;
    let m = GaussianMatrix::from_fn(n, n, |i, j| {
        let hit = if i / 2 == pair { i ^ 1 == j } else { i == j };
        if hit {
            G::one()
        } else {
            G::zero()
        }
    });
    OrthogonalElement {
        matrix: m,
        form: hyperbolic_form(pairs),
    }
}

/// Outcome of [`decide_so_conjugacy`]; witnesses satisfy `C⁻¹ a C = b`.
#[derive(Clone, Debug, PartialEq)]
pub enum SoConjugacy {
    SoConjugate { witness: GaussianMatrix },
    OOnly { witness: GaussianMatrix },
    NotOConjugate,
}

impl SoConjugacy {
    pub fn verdict(&self) -> &'static str {
        match self {
            SoConjugacy::SoConjugate { .. } => "SO_CONJUGATE",
            SoConjugacy::OOnly { .. } => "O_ONLY",
            SoConjugacy::NotOConjugate => "NOT_O_CONJUGATE",
        }
    }

    pub fn witness(&self) -> Option<&GaussianMatrix> {
        match self {
            SoConjugacy::SoConjugate { witness } | SoConjugacy::OOnly { witness } => Some(witness),
            SoConjugacy::NotOConjugate => None,
        }
    }
}

impl Serialize for SoConjugacy {
    fn serialize<Ser: Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        let mut st = s.serialize_struct("SoConjugacy", 2)?;
        st.serialize_field("verdict", self.verdict())?;
        let witness = self.witness().map(|w| {
            w.to_rows()
                .iter()
                .map(|r| r.iter().map(format_gaussian).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        });
        st.serialize_field("witness", &witness)?;
        st.end()
    }
}

fn bilinear(f: &GaussianMatrix, x: &[G], y: &[G]) -> G {
    let fy = f.mul_vec(y);
    x.iter().zip(&fy).fold(G::zero(), |acc, (a, b)| acc + a * b)
}

fn combine(a: &[G], ca: &G, b: &[G], cb: &G) -> Vec<G> {
    a.iter().zip(b).map(|(x, y)| x * ca + y * cb).collect()
}

/// Reflection `x ↦ x − 2 F(x, v)/F(v, v) · v` as a matrix.
fn reflection(f: &GaussianMatrix, v: &[G]) -> GaussianMatrix {
    let q = bilinear(f, v, v);
    let fv = f.mul_vec(v);
    let c = G::from(Rational::from_integer(2.into())) / q;
    let n = v.len();
    GaussianMatrix::from_fn(n, n, |i, j| {
        let d = if i == j { G::one() } else { G::zero() };
        d - &c * &v[i] * &fv[j]
    })
}

/// Best rational approximations of `x` by continued fractions, most accurate
/// last, stopping once within `1e-9` relative error.
fn convergents(x: f64) -> Vec<Rational> {
    let mut out = Vec::new();
    if !x.is_finite() {
        return out;
    }
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut r = x;
    for _ in 0..40 {
        let a = r.floor();
        if a.abs() > 1e15 {
            break;
        }
        let ai = a as i128;
        let (Some(h2), Some(k2)) = (ai.checked_mul(h1).and_then(|v| v.checked_add(h0)), ai.checked_mul(k1).and_then(|v| v.checked_add(k0))) else {
            break;
        };
        if k2 == 0 || k2 > 1_000_000_000_000 {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        out.push(Rational::new(h2.into(), k2.into()));
        let err = (x - h2 as f64 / k2 as f64).abs();
        if err <= 1e-9 * x.abs().max(1.0) {
            break;
        }
        let frac = r - a;
        if frac.abs() < 1e-300 {
            break;
        }
        r = 1.0 / frac;
    }
    out
}

fn gaussian_candidates(z: Complex<f64>) -> Vec<G> {
    let mut out = Vec::new();
    let direct = |z: Complex<f64>| {
        let res = convergents(z.re);
        let ims = convergents(z.im);
        match (res.last(), ims.last()) {
            (Some(r), Some(i)) => Some(Complex::new(r.clone(), i.clone())),
            _ => None,
        }
    };
    if let Some(c) = direct(z) {
        out.push(c);
    }
    if z.norm() > 0.0 {
        if let Some(w) = direct(z.inv()) {
            if !w.is_zero() {
                out.push(G::one() / w);
            }
        }
    }
    out
}

/// Simultaneous Newton iteration for all roots of a monic polynomial.
fn durand_kerner(coeffs: &[Complex<f64>]) -> Vec<Complex<f64>> {
    let n = coeffs.len() - 1;
    let eval = |x: Complex<f64>| coeffs.iter().rev().fold(Complex::new(0.0, 0.0), |acc, c| acc * x + c);
    let radius = coeffs[0].norm().powf(1.0 / n as f64).max(1e-3);
    let mut z: Vec<Complex<f64>> = (0..n)
        .map(|k| Complex::from_polar(radius, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64))
        .collect();
    for _ in 0..5000 {
        let mut moved = 0.0f64;
        for k in 0..n {
            let mut denom = Complex::new(1.0, 0.0);
            for j in 0..n {
                if j != k {
                    denom *= z[k] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                denom = Complex::new(1e-12, 0.0);
            }
            let step = eval(z[k]) / denom;
            if step.is_finite() {
                z[k] -= step;
                moved = moved.max(step.norm() / z[k].norm().max(1e-300));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

fn to_f64(z: &G) -> Complex<f64> {
    Complex::new(z.re.to_f64().unwrap_or(f64::NAN), z.im.to_f64().unwrap_or(f64::NAN))
}

/// Distinct roots in `Q(i)` of a nonzero polynomial, or `UnsupportedElement`
/// when some root lies outside `Q(i)`.
///
/// Roots are located numerically, rationalised, and accepted only after an
/// exact evaluation; each accepted root is divided out, and its inverse is
/// tried directly since orthogonal spectra are inversion-closed.
pub fn gaussian_roots(p: &Polynomial<G>) -> Result<Vec<G>> {
    let mut rest = p.squarefree();
    let mut roots: Vec<G> = Vec::new();
    let take = |rest: &mut Polynomial<G>, roots: &mut Vec<G>, r: &G| -> bool {
        if rest.degree().unwrap_or(0) == 0 || !rest.eval(r).is_zero() {
            return false;
        }
        *rest = rest.div_rem(&Polynomial::new(vec![-r.clone(), G::one()])).0;
        roots.push(r.clone());
        true
    };
    while rest.degree().unwrap_or(0) > 0 {
        let coeffs: Vec<Complex<f64>> = rest.coeffs().iter().map(to_f64).collect();
        let mut progress = false;
        for z in durand_kerner(&coeffs) {
            for c in gaussian_candidates(z) {
                if take(&mut rest, &mut roots, &c) {
                    progress = true;
                    if !c.is_zero() {
                        take(&mut rest, &mut roots, &(G::one() / &c));
                    }
                    break;
                }
            }
        }
        if !progress {
            return Err(Error::UnsupportedElement(format!(
                "{} eigenvalue(s) outside Q(i) or not located",
                rest.degree().unwrap_or(0)
            )));
        }
    }
    roots.sort_by(cmp_gaussian);
    Ok(roots)
}

/// Eigenvalues in sorted order with eigenspace bases.
fn eigenspaces(a: &GaussianMatrix) -> Result<Vec<(G, Vec<Vec<G>>)>> {
    let n = a.rows();
    let roots = gaussian_roots(&Polynomial::characteristic(a))?;
    let mut out = Vec::with_capacity(roots.len());
    let mut total = 0;
    for r in roots {
        let shifted = GaussianMatrix::from_fn(n, n, |i, j| if i == j { &a[(i, j)] - &r } else { a[(i, j)].clone() });
        let basis = shifted.nullspace();
        total += basis.len();
        out.push((r, basis));
    }
    if total != n {
        return Err(Error::UnsupportedElement("element is not diagonalisable".into()));
    }
    Ok(out)
}

/// An orthogonal basis of the non-`±1` part built from adapted hyperbolic
/// bases, and the `±1` eigenspaces.
struct Adapted {
    orthogonal: Vec<Vec<G>>,
    unipotent_part: Vec<(G, Vec<Vec<G>>)>,
}

fn adapted_basis(f: &GaussianMatrix, spaces: &[(G, Vec<Vec<G>>)]) -> Result<Adapted> {
    let one = G::one();
    let half = g(Rational::new(1.into(), 2.into()));
    let mut done = vec![false; spaces.len()];
    let mut orthogonal = Vec::new();
    let mut unipotent_part = Vec::new();
    for (k, (lambda, vs)) in spaces.iter().enumerate() {
        if done[k] {
            continue;
        }
        done[k] = true;
        if *lambda == one || *lambda == -one.clone() {
            unipotent_part.push((lambda.clone(), vs.clone()));
            continue;
        }
        let mu = G::one() / lambda;
        let m = spaces
            .iter()
            .position(|(x, _)| *x == mu)
            .filter(|&m| spaces[m].1.len() == vs.len())
            .ok_or_else(|| Error::InvariantViolation(format!("eigenvalue {} has no matching inverse", format_gaussian(lambda))))?;
        done[m] = true;
        let us = &spaces[m].1;
        let d = vs.len();
        let pairing = GaussianMatrix::from_fn(d, d, |i, j| bilinear(f, &vs[i], &us[j]));
        let inv = pairing
            .inverse()
            .ok_or_else(|| Error::InvariantViolation("eigenspaces of λ and 1/λ are not in duality".into()))?;
        for j in 0..d {
            let mut w = vec![G::zero(); f.rows()];
            for (kk, u) in us.iter().enumerate() {
                for (wi, ui) in w.iter_mut().zip(u) {
                    *wi = &*wi + ui * &inv[(kk, j)];
                }
            }
            orthogonal.push(combine(&vs[j], &one, &w, &half));
            orthogonal.push(combine(&vs[j], &one, &w, &-half.clone()));
        }
    }
    Ok(Adapted {
        orthogonal,
        unipotent_part,
    })
}

/// An isometry `C` of `F` with `C x_k = y_k`, for orthogonal anisotropic
/// families `x`, `y` with matching norms.
fn witt_extension(f: &GaussianMatrix, xs: &[Vec<G>], ys: &[Vec<G>]) -> Result<GaussianMatrix> {
    let n = f.rows();
    let mut c = GaussianMatrix::identity(n);
    for (x, y) in xs.iter().zip(ys) {
        let z = c.mul_vec(x);
        if z == *y {
            continue;
        }
        let diff = combine(&z, &G::one(), y, &-G::one());
        if !bilinear(f, &diff, &diff).is_zero() {
            c = reflection(f, &diff).mul(&c);
        } else {
            let sum = combine(&z, &G::one(), y, &G::one());
            if bilinear(f, &sum, &sum).is_zero() || bilinear(f, y, y).is_zero() {
                return Err(Error::InvariantViolation("isotropic vector in Witt extension".into()));
            }
            c = reflection(f, y).mul(&reflection(f, &sum)).mul(&c);
        }
    }
    Ok(c)
}

fn anisotropic(f: &GaussianMatrix, basis: &[Vec<G>]) -> Option<Vec<G>> {
    if let Some(v) = basis.iter().find(|v| !bilinear(f, v, v).is_zero()) {
        return Some(v.clone());
    }
    for (i, u) in basis.iter().enumerate() {
        for v in &basis[i + 1..] {
            if !bilinear(f, u, v).is_zero() {
                return Some(combine(u, &G::one(), v, &G::one()));
            }
        }
    }
    None
}

fn verify(a: &OrthogonalElement, b: &OrthogonalElement, c: &GaussianMatrix) -> Result<()> {
    if a.matrix.mul(c) != c.mul(&b.matrix) {
        return Err(Error::InvariantViolation("witness does not satisfy C b = a C".into()));
    }
    if c.congruence(&a.form) != a.form {
        return Err(Error::InvariantViolation("witness does not preserve the form".into()));
    }
    Ok(())
}

/// Decides whether `b = C⁻¹ a C` for some `C` in `SO(F)`, in `O(F)` only, or
/// not at all, returning a verified witness.
///
/// Both elements must be diagonalisable with eigenvalues in `Q(i)`, and not
/// have both `1` and `−1` as eigenvalues; otherwise `UnsupportedElement`.
pub fn decide_so_conjugacy(a: &OrthogonalElement, b: &OrthogonalElement) -> Result<SoConjugacy> {
    if a.form != b.form {
        return Err(Error::InvariantViolation("elements preserve different forms".into()));
    }
    let f = &a.form;
    let n = a.dim();
    if a.matrix == b.matrix {
        return Ok(SoConjugacy::SoConjugate {
            witness: GaussianMatrix::identity(n),
        });
    }
    if Polynomial::characteristic(&a.matrix) != Polynomial::characteristic(&b.matrix) {
        return Ok(SoConjugacy::NotOConjugate);
    }
    let sa = eigenspaces(&a.matrix)?;
    let sb = eigenspaces(&b.matrix)?;
    let da = adapted_basis(f, &sa)?;
    let db = adapted_basis(f, &sb)?;
    if da.unipotent_part.len() > 1 {
        return Err(Error::UnsupportedElement(
            "both 1 and -1 are eigenvalues; the ±1 eigenspaces would need separate isometries".into(),
        ));
    }
    let mut c = witt_extension(f, &db.orthogonal, &da.orthogonal)?;
    verify(a, b, &c)?;
    let det = c.determinant();
    if det == -G::one() {
        match da.unipotent_part.first().and_then(|(_, basis)| anisotropic(f, basis)) {
            Some(x) => {
                c = reflection(f, &x).mul(&c);
                verify(a, b, &c)?;
            }
            None if da.unipotent_part.is_empty() => return Ok(SoConjugacy::OOnly { witness: c }),
            None => return Err(Error::InvariantViolation("degenerate ±1 eigenspace".into())),
        }
    }
    let det = c.determinant();
    if det != G::one() {
        return Err(Error::InvariantViolation(format!("witness determinant {}", format_gaussian(&det))));
    }
    Ok(SoConjugacy::SoConjugate { witness: c })
}

impl OrthogonalElement {
    /// True when every eigenvalue is real and positive; such elements lie
    /// in a split torus.
    pub fn has_positive_real_spectrum(&self) -> Result<bool> {
        Ok(gaussian_roots(&Polynomial::characteristic(&self.matrix))?
            .iter()
            .all(|r| r.im.is_zero() && r.re.is_positive()))
    }
}
