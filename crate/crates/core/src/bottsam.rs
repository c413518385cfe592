//! Weight pushforward along Bott–Samelson words.
//!
//! A word is a slice of simple indices. One step pushes a weight `λ` down
//! the `P¹`-bundle of a letter `δ`; with `l = ⟨λ, δ∨⟩` the weights of the
//! direct image are
//!
//! | `l`       | degree | weights                      |
//! |-----------|--------|------------------------------|
//! | `l ≥ 0`   | 0      | `λ − kδ`, `k = 0..=l`        |
//! | `l = −1`  |        | none                         |
//! | `l ≤ −2`  | 1      | `λ + kδ`, `k = 1..=−l−1`     |
//!
//! A word is processed from its last letter to its first, and degrees add.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cartan::Gcm;
use crate::isogeny::{IsogenyError, PMorphism};
use crate::roots::WeightVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BottSamelsonError {
    #[error("simple index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("weight has {got} coordinates, expected {expected}")]
    DimensionMismatch { got: usize, expected: usize },
    #[error("pushforward containment violated: {0}")]
    ContainmentViolation(String),
    #[error("invalid p-morphism: {0}")]
    InvalidPMorphism(#[from] IsogenyError),
}

/// One `(weight, degree, multiplicity)` entry, as serialized.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradedEntry {
    pub weight: Vec<i64>,
    pub degree: u32,
    pub mult: u64,
}

/// A multiset of weights with cohomological degrees.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GradedWeights {
    entries: BTreeMap<(Vec<i64>, u32), u64>,
}

impl GradedWeights {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(weight: &WeightVector, degree: u32) -> Self {
        let mut g = Self::new();
        g.insert(weight.0.clone(), degree, 1);
        g
    }

    pub fn insert(&mut self, weight: Vec<i64>, degree: u32, mult: u64) {
        if mult > 0 {
            *self.entries.entry((weight, degree)).or_insert(0) += mult;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total multiplicity.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[i64], u32, u64)> + '_ {
        self.entries.iter().map(|((w, d), &m)| (w.as_slice(), *d, m))
    }

    /// Multiplicity of `weight` summed over degrees.
    pub fn mult(&self, weight: &[i64]) -> u64 {
        self.iter().filter(|(w, _, _)| *w == weight).map(|(_, _, m)| m).sum()
    }

    pub fn to_entries(&self) -> Vec<GradedEntry> {
        self.iter().map(|(w, d, m)| GradedEntry { weight: w.to_vec(), degree: d, mult: m }).collect()
    }
}

fn check_letter(c: &Gcm, i: usize) -> Result<(), BottSamelsonError> {
    if i < c.size() {
        Ok(())
    } else {
        Err(BottSamelsonError::IndexOutOfRange(i))
    }
}

fn check_weight(c: &Gcm, w: &WeightVector) -> Result<(), BottSamelsonError> {
    if w.rank() == c.size() {
        Ok(())
    } else {
        Err(BottSamelsonError::DimensionMismatch { got: w.rank(), expected: c.size() })
    }
}

pub fn occurs(word: &[usize], i: usize) -> bool {
    word.contains(&i)
}

fn step_into(c: &Gcm, lambda: &[i64], degree: u32, mult: u64, delta: usize, out: &mut GradedWeights) {
    let l = lambda[delta];
    let alpha = &c.rows()[delta];
    let shifted = |k: i64| -> Vec<i64> { lambda.iter().zip(alpha).map(|(x, a)| x + k * a).collect() };
    if l >= 0 {
        for k in 0..=l {
            out.insert(shifted(-k), degree, mult);
        }
    } else {
        for k in 1..=(-l - 1) {
            out.insert(shifted(k), degree + 1, mult);
        }
    }
}

/// Direct image of `λ` along the bundle of the letter `δ`.
pub fn pushforward_step(c: &Gcm, lambda: &WeightVector, delta: usize) -> Result<GradedWeights, BottSamelsonError> {
    check_letter(c, delta)?;
    check_weight(c, lambda)?;
    let mut out = GradedWeights::new();
    step_into(c, &lambda.0, 0, 1, delta, &mut out);
    Ok(out)
}

/// Applies the steps of `word` to every entry of `start`, last letter
/// first.
pub fn pushforward_graded(c: &Gcm, word: &[usize], start: GradedWeights) -> Result<GradedWeights, BottSamelsonError> {
    for &i in word {
        check_letter(c, i)?;
    }
    let mut cur = start;
    for &delta in word.iter().rev() {
        let mut next = GradedWeights::new();
        for (w, d, m) in cur.iter() {
            step_into(c, w, d, m, delta, &mut next);
        }
        cur = next;
    }
    Ok(cur)
}

pub fn pushforward_word(c: &Gcm, word: &[usize], lambda: &WeightVector) -> Result<GradedWeights, BottSamelsonError> {
    check_weight(c, lambda)?;
    pushforward_graded(c, word, GradedWeights::single(lambda, 0))
}

/// Rank of `H⁰` of the pushforward of `−α` for the simple root `α`: the
/// multiplicity of the zero weight, which must sit in degree 1 and be 1
/// exactly when `s_α` occurs in the word.
pub fn h0_rank(c: &Gcm, word: &[usize], alpha: usize) -> Result<u8, BottSamelsonError> {
    check_letter(c, alpha)?;
    let minus_alpha = WeightVector(c.rows()[alpha].iter().map(|x| -x).collect());
    let result = pushforward_word(c, word, &minus_alpha)?;
    let zero = vec![0; c.size()];
    let mut count = 0;
    for (w, d, m) in result.iter() {
        if w == zero.as_slice() {
            if d != 1 {
                return Err(BottSamelsonError::ContainmentViolation(format!("zero weight in degree {d}")));
            }
            count += m;
        }
    }
    let expected = u64::from(occurs(word, alpha));
    if count != expected {
        return Err(BottSamelsonError::ContainmentViolation(format!(
            "zero weight has multiplicity {count}, expected {expected}"
        )));
    }
    Ok(expected as u8)
}

/// One term `n_b χ_{w, j(b)}` of the restriction of a weight to a
/// Bott–Samelson variety.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiTerm {
    pub simple: usize,
    /// `j(b)`: the last position of `b` in the word.
    pub position: usize,
    pub coefficient: i64,
}

/// `λ = Σ n_b ω_b` restricted along `word`, one term per letter that occurs,
/// in increasing order of `b`.
pub fn chi_restriction(word: &[usize], lambda: &WeightVector) -> Vec<ChiTerm> {
    (0..lambda.rank())
        .filter_map(|b| {
            let position = word.iter().rposition(|&i| i == b)?;
            Some(ChiTerm { simple: b, position, coefficient: lambda.pairing(b) })
        })
        .collect()
}

/// Factors `q(α_{i_a})` by which the pullback scales each `χ` class, and
/// the translated word `u(w)`.
pub fn pmorphism_chi_factors(word: &[usize], phi: &PMorphism) -> Result<(Vec<u64>, Vec<usize>), BottSamelsonError> {
    phi.validate()?;
    let n = phi.q.len();
    if let Some(&bad) = word.iter().find(|&&i| i >= n) {
        return Err(BottSamelsonError::IndexOutOfRange(bad));
    }
    Ok((word.iter().map(|&i| phi.q[i]).collect(), word.iter().map(|&i| phi.u[i]).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{catalog, Family};
    use crate::isogeny::{enumerate_special, frobenius};
    use crate::rootdata::PinnedRootDatum;

    fn a(n: usize) -> Gcm {
        catalog(Family::A, n).unwrap()
    }

    fn wv(v: &[i64]) -> WeightVector {
        WeightVector(v.to_vec())
    }

    fn entries(g: &GradedWeights) -> Vec<(Vec<i64>, u32, u64)> {
        g.iter().map(|(w, d, m)| (w.to_vec(), d, m)).collect()
    }

    #[test]
    fn occurs_examples() {
        assert!(!occurs(&[], 0));
        assert!(occurs(&[0, 1, 0], 1));
        assert!(!occurs(&[0, 0], 1));
    }

    #[test]
    fn step_examples() {
        let a1 = a(1);
        assert_eq!(entries(&pushforward_step(&a1, &wv(&[0]), 0).unwrap()), vec![(vec![0], 0, 1)]);
        assert_eq!(entries(&pushforward_step(&a1, &wv(&[-2]), 0).unwrap()), vec![(vec![0], 1, 1)]);
        assert!(pushforward_step(&a1, &wv(&[-1]), 0).unwrap().is_empty());
        // -α2 along α1 in A2
        let got = pushforward_step(&a(2), &wv(&[1, -2]), 0).unwrap();
        assert_eq!(entries(&got), vec![(vec![-1, -1], 0, 1), (vec![1, -2], 0, 1)]);
        assert_eq!(pushforward_step(&a1, &wv(&[0]), 1), Err(BottSamelsonError::IndexOutOfRange(1)));
    }

    #[test]
    fn step_entry_count() {
        let a1 = a(1);
        for l in -8..=8 {
            let expected = if l >= 0 { l + 1 } else { -l - 1 };
            assert_eq!(pushforward_step(&a1, &wv(&[l]), 0).unwrap().total() as i64, expected);
        }
    }

    #[test]
    fn word_examples() {
        let a2 = a(2);
        let lambda = wv(&[3, -1]);
        assert_eq!(entries(&pushforward_word(&a2, &[], &lambda).unwrap()), vec![(vec![3, -1], 0, 1)]);
        // −α1 along (s1, s2)
        let got = pushforward_word(&a2, &[0, 1], &wv(&[-2, 1])).unwrap();
        assert_eq!(entries(&got), vec![(vec![0, 0], 1, 1)]);
        // explicit B2 matrix, −(α1+α2) along s1
        let b2 = Gcm::new(vec![vec![2, -1], vec![-2, 2]]).unwrap();
        let got = pushforward_word(&b2, &[0], &wv(&[0, -1])).unwrap();
        assert_eq!(entries(&got), vec![(vec![0, -1], 0, 1)]);
    }

    #[test]
    fn h0_examples() {
        assert_eq!(h0_rank(&a(1), &[0], 0), Ok(1));
        assert_eq!(h0_rank(&a(2), &[1], 0), Ok(0));
        assert_eq!(h0_rank(&a(2), &[0, 1, 0], 0), Ok(1));
    }

    #[test]
    fn chi_restriction_examples() {
        let terms = chi_restriction(&[0, 1, 0], &wv(&[1, 1]));
        let pairs: Vec<_> = terms.iter().map(|t| (t.position, t.coefficient)).collect();
        assert_eq!(pairs, vec![(2, 1), (1, 1)]);
        assert!(chi_restriction(&[], &wv(&[4, 5])).is_empty());
        assert!(chi_restriction(&[1], &wv(&[1, 0])).iter().all(|t| t.simple == 1));
    }

    #[test]
    fn chi_factors() {
        let datum = PinnedRootDatum::adjoint(&a(2)).unwrap();
        let frob = frobenius(&datum, 3, 1);
        assert_eq!(pmorphism_chi_factors(&[0, 1, 1], &frob).unwrap().0, vec![3, 3, 3]);
        let id = frobenius(&datum, 3, 0);
        assert_eq!(pmorphism_chi_factors(&[1, 0], &id).unwrap(), (vec![1, 1], vec![1, 0]));

        let special = enumerate_special(Family::G, 2, 3).pop().unwrap();
        let (factors, translated) = pmorphism_chi_factors(&[0, 1], &special).unwrap();
        assert_eq!(factors, vec![special.q[0], special.q[1]]);
        assert_eq!(translated, vec![1, 0]);
    }
}
