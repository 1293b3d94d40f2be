//! Formal characters: Freudenthal multiplicities, the Weyl dimension formula,
//! tensor products, decomposition into irreducibles and invariant-form type.

mod enumerate;
mod freudenthal;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

pub use enumerate::{dominant_weights_up_to_dim, enumerate_irreps_of_dim, IrrepEntry};
pub(crate) use freudenthal::dominant_multiplicities;

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::{Rational, Weight};

/// A virtual character: a finite map from weights to integer multiplicities.
#[derive(Clone)]
pub struct Character {
    rs: Arc<RootSystem>,
    terms: BTreeMap<Weight, i64>,
}

impl Character {
    /// Zero multiplicities are dropped.
    pub fn new(rs: Arc<RootSystem>, mut terms: BTreeMap<Weight, i64>) -> Self {
        terms.retain(|_, m| *m != 0);
        Self { rs, terms }
    }

    pub fn zero(rs: Arc<RootSystem>) -> Self {
        Self::new(rs, BTreeMap::new())
    }

    pub fn trivial(rs: Arc<RootSystem>) -> Self {
        let zero = Weight::zero(rs.rank());
        Self::new(rs, BTreeMap::from([(zero, 1)]))
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn terms(&self) -> &BTreeMap<Weight, i64> {
        &self.terms
    }

    pub fn multiplicity(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// Sum of multiplicities.
    pub fn dimension(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Invariance under every simple reflection.
    pub fn is_weyl_invariant(&self) -> bool {
        self.terms.iter().all(|(w, m)| {
            (0..self.rs.rank()).all(|i| self.multiplicity(&self.rs.reflect_simple(w, i)) == *m)
        })
    }

    fn same_system(&self, other: &Character) -> Result<()> {
        if self.rs.simple_type() != other.rs.simple_type() {
            return Err(Error::MismatchedRootSystems(
                self.rs.simple_type().to_string(),
                other.rs.simple_type().to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Character) -> Result<Character> {
        self.same_system(other)?;
        let mut terms = self.terms.clone();
        for (w, m) in &other.terms {
            *terms.entry(w.clone()).or_default() += m;
        }
        Ok(Character::new(self.rs.clone(), terms))
    }

    pub fn scale(&self, k: i64) -> Character {
        Character::new(
            self.rs.clone(),
            self.terms.iter().map(|(w, m)| (w.clone(), m * k)).collect(),
        )
    }

    pub fn sub(&self, other: &Character) -> Result<Character> {
        self.add(&other.scale(-1))
    }

    /// Adams operation `ψᵏ`: every weight multiplied by `k`.
    pub fn adams(&self, k: i64) -> Character {
        Character::new(
            self.rs.clone(),
            self.terms.iter().map(|(w, m)| (w.scaled(k), *m)).collect(),
        )
    }

    /// Character of the dual representation.
    pub fn dual(&self) -> Character {
        self.adams(-1)
    }

    /// Divides every multiplicity by `k`, which must divide all of them.
    fn divide_exact(&self, k: i64) -> Option<Character> {
        self.terms
            .iter()
            .map(|(w, m)| (m % k == 0).then(|| (w.clone(), m / k)))
            .collect::<Option<BTreeMap<_, _>>>()
            .map(|terms| Character::new(self.rs.clone(), terms))
    }
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        self.rs.simple_type() == other.rs.simple_type() && self.terms == other.terms
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character[{}]", self.rs.simple_type())?;
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// Serialises as a list of `[coords, multiplicity]` pairs.
impl Serialize for Character {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for entry in &self.terms {
            seq.serialize_element(&entry)?;
        }
        seq.end()
    }
}

/// Multiplicities of irreducible summands, keyed by dominant highest weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub summands: BTreeMap<Weight, u64>,
}

impl Decomposition {
    pub fn multiplicity(&self, lambda: &Weight) -> u64 {
        self.summands.get(lambda).copied().unwrap_or(0)
    }

    pub fn trivial_multiplicity(&self) -> u64 {
        self.summands
            .iter()
            .find(|(w, _)| w.is_zero())
            .map_or(0, |(_, m)| *m)
    }

    /// `Σ mult(λ) · χ_λ`.
    pub fn rebuild(&self, rs: &Arc<RootSystem>) -> Result<Character> {
        let mut out = Character::zero(rs.clone());
        for (lambda, m) in &self.summands {
            out = out.add(&irreducible_character(rs, lambda)?.scale(*m as i64))?;
        }
        Ok(out)
    }

    /// CSV rows `highest weight, dimension, multiplicity`.
    pub fn to_csv(&self, rs: &RootSystem) -> Result<String> {
        let mut out = String::from("highest_weight,dimension,multiplicity\n");
        for (lambda, m) in &self.summands {
            out.push_str(&format!("\"{}\",{},{}\n", lambda, weyl_dimension(rs, lambda)?, m));
        }
        Ok(out)
    }
}

fn check_dominant(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    if lambda.rank() != rs.rank() {
        return Err(Error::RankMismatch {
            expected: rs.rank(),
            found: lambda.rank(),
        });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominantIntegral(lambda.to_string()));
    }
    Ok(())
}

/// `∏_{β>0} ⟨λ+ρ, β∨⟩ / ⟨ρ, β∨⟩`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<u128> {
    check_dominant(rs, lambda)?;
    let shifted = lambda + rs.weyl_vector();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 0..rs.num_positive() {
        num *= rs.pairing(&shifted, k);
        den *= rs.pairing(rs.weyl_vector(), k);
    }
    let q = Rational::new(num, den);
    debug_assert!(q.is_integer());
    q.to_integer()
        .to_u128()
        .ok_or_else(|| Error::Overflow(format!("{} at {}", rs.simple_type(), lambda)))
}

/// The full character of the irreducible representation with highest weight
/// `λ`.
pub fn irreducible_character(rs: &Arc<RootSystem>, lambda: &Weight) -> Result<Character> {
    check_dominant(rs, lambda)?;
    let dominant = dominant_multiplicities(rs, lambda);
    let mut terms = BTreeMap::new();
    for (mu, m) in dominant.iter() {
        for w in rs.weyl_orbit(mu) {
            terms.insert(w, *m);
        }
    }
    Ok(Character::new(rs.clone(), terms))
}

pub fn tensor(a: &Character, b: &Character) -> Result<Character> {
    a.same_system(b)?;
    let mut terms: BTreeMap<Weight, i64> = BTreeMap::new();
    for (u, m) in &a.terms {
        for (v, n) in &b.terms {
            *terms.entry(u + v).or_default() += m * n;
        }
    }
    Ok(Character::new(a.rs.clone(), terms))
}

/// Iterated highest-weight subtraction on the dominant part of `c`.
pub fn decompose(c: &Character) -> Result<Decomposition> {
    let rs = &c.rs;
    if !c.is_weyl_invariant() {
        return Err(Error::MalformedCharacter(format!(
            "not Weyl-invariant over {}",
            rs.simple_type()
        )));
    }
    let mut remaining: BTreeMap<Weight, i64> = c
        .terms
        .iter()
        .filter(|(w, _)| w.is_dominant())
        .map(|(w, m)| (w.clone(), *m))
        .collect();
    let mut summands = BTreeMap::new();
    while let Some(top) = remaining
        .keys()
        .max_by(|a, b| rs.doubled_height(a).cmp(&rs.doubled_height(b)).then_with(|| a.cmp(b)))
        .cloned()
    {
        let m = remaining[&top];
        if m < 0 {
            return Err(Error::MalformedCharacter(format!(
                "negative multiplicity {m} at highest weight {top}"
            )));
        }
        for (mu, k) in dominant_multiplicities(rs, &top).iter() {
            let slot = remaining.entry(mu.clone()).or_default();
            *slot -= m * k;
            if *slot == 0 {
                remaining.remove(mu);
            }
        }
        summands.insert(top, m as u64);
    }
    Ok(Decomposition { summands })
}

/// `(Sym² χ, Λ² χ) = ((χ² + ψ²χ)/2, (χ² − ψ²χ)/2)` for irreducible `χ`.
pub fn sym2_alt2_split(c: &Character) -> Result<(Character, Character)> {
    let d = decompose(c)?;
    if d.summands.len() != 1 || d.summands.values().next() != Some(&1) {
        return Err(Error::Reducible(format!("{} summands", d.summands.values().sum::<u64>())));
    }
    let square = tensor(c, c)?;
    let psi = c.adams(2);
    let sym = square.add(&psi)?.divide_exact(2);
    let alt = square.sub(&psi)?.divide_exact(2);
    match (sym, alt) {
        (Some(s), Some(a)) => Ok((s, a)),
        _ => Err(Error::InvariantViolation("odd multiplicity in χ² ± ψ²χ".into())),
    }
}

/// Type of the invariant bilinear form on an irreducible representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FormType {
    Orthogonal,
    Symplectic,
    Neither,
}

impl FormType {
    /// Form type of a tensor product of two irreducibles.
    pub fn product(self, other: FormType) -> FormType {
        use FormType::*;
        match (self, other) {
            (Neither, _) | (_, Neither) => Neither,
            (a, b) if a == b => Orthogonal,
            _ => Symplectic,
        }
    }
}

impl fmt::Display for FormType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormType::Orthogonal => "orthogonal",
            FormType::Symplectic => "symplectic",
            FormType::Neither => "neither",
        })
    }
}

/// Reads off the form type from where the trivial summand of `χ ⊗ χ` lands.
pub fn form_type(rs: &Arc<RootSystem>, lambda: &Weight) -> Result<FormType> {
    let chi = irreducible_character(rs, lambda)?;
    let (sym, alt) = sym2_alt2_split(&chi)?;
    let in_sym = decompose(&sym)?.trivial_multiplicity();
    let in_alt = decompose(&alt)?.trivial_multiplicity();
    Ok(match (in_sym, in_alt) {
        (0, 0) => FormType::Neither,
        (1, 0) => FormType::Orthogonal,
        (0, 1) => FormType::Symplectic,
        _ => {
            return Err(Error::InvariantViolation(format!(
                "irreducible {lambda} has {in_sym} symmetric and {in_alt} alternating invariant forms"
            )))
        }
    })
}
