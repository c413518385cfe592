//! Weyl groups acting on root systems.
//!
//! A [`WeylElement`] is a permutation of the root indices of a
//! [`RootSystem`]. Full enumeration ([`WeylGroup::enumerate`]) does not keep
//! one permutation per element: it stores the orbit point `w(ρ)` of each
//! element, which determines `w` because the action on the orbit of `ρ` is
//! simply transitive. Permutations are rebuilt on demand with
//! [`WeylGroup::element`].

use std::collections::{HashSet, VecDeque};

use thiserror::Error;

use crate::cartan::{DynkinType, Family, Gcm};
use crate::linalg;
use crate::roots::{RootSystem, WeightVector};

/// Default enumeration cap. Covers E7 (2 903 040 elements); E8 is refused.
pub const DEFAULT_CAP: usize = 3_000_000;

/// Environment variable overriding [`DEFAULT_CAP`].
pub const CAP_ENV: &str = "FLAGREC_WEYL_CAP";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("simple index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("enumeration would exceed cap of {0} elements")]
    CapExceeded(usize),
    #[error("rank {0} too large for orbit enumeration")]
    RankTooLarge(usize),
}

/// The enumeration cap from [`CAP_ENV`], falling back to [`DEFAULT_CAP`].
pub fn cap_from_env() -> usize {
    std::env::var(CAP_ENV).ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_CAP)
}

/// Simple reflection on a weight: `D ↦ D + ⟨D, α_i∨⟩ K_i` with `K_i = −α_i`.
pub fn reflect(c: &Gcm, i: usize, d: &WeightVector) -> Result<WeightVector, WeylError> {
    if i >= c.size() || d.rank() != c.size() {
        return Err(WeylError::IndexOutOfRange(i));
    }
    let p = d.pairing(i);
    Ok(WeightVector(d.0.iter().zip(&c.rows()[i]).map(|(x, a)| x - p * a).collect()))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    perm: Vec<usize>,
    length: usize,
}

impl WeylElement {
    fn from_perm(rs: &RootSystem, perm: Vec<usize>) -> Self {
        let n_pos = rs.num_positive();
        let length = perm[..n_pos].iter().filter(|&&k| k >= n_pos).count();
        Self { perm, length }
    }

    pub fn identity(rs: &RootSystem) -> Self {
        Self { perm: (0..rs.len()).collect(), length: 0 }
    }

    pub fn simple(rs: &RootSystem, i: usize) -> Result<Self, WeylError> {
        if i >= rs.rank() {
            return Err(WeylError::IndexOutOfRange(i));
        }
        Ok(Self { perm: (0..rs.len()).map(|k| rs.reflect_root(k, i)).collect(), length: 1 })
    }

    /// The reflection `s_α` for the root at index `k`.
    pub fn reflection(rs: &RootSystem, k: usize) -> Self {
        Self::from_perm(rs, (0..rs.len()).map(|j| rs.reflect_root_by(j, k)).collect())
    }

    /// Ordinary product `s_{w_1} s_{w_2} ⋯`.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self, WeylError> {
        let mut w = Self::identity(rs);
        for &i in word {
            w = w.compose(rs, &Self::simple(rs, i)?);
        }
        Ok(w)
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(k, &j)| k == j)
    }

    /// Image of the root at index `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.perm[k]
    }

    /// `self ∘ other`.
    pub fn compose(&self, rs: &RootSystem, other: &Self) -> Self {
        Self::from_perm(rs, other.perm.iter().map(|&k| self.perm[k]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.perm.len()];
        for (k, &j) in self.perm.iter().enumerate() {
            inv[j] = k;
        }
        Self { perm: inv, length: self.length }
    }

    /// Right descent: `w(α_i) < 0`.
    pub fn has_descent(&self, rs: &RootSystem, i: usize) -> bool {
        self.perm[rs.simple(i)] >= rs.num_positive()
    }

    /// Matrix of `w` on weights in coroot coordinates: row `j` is the
    /// coroot of `w⁻¹(α_j)`.
    pub fn weight_matrix(&self, rs: &RootSystem) -> Vec<Vec<i64>> {
        let inv = self.inverse();
        (0..rs.rank()).map(|j| rs.root(inv.apply(rs.simple(j))).coroot.clone()).collect()
    }

    pub fn act_on_weight(&self, rs: &RootSystem, d: &WeightVector) -> WeightVector {
        WeightVector(linalg::mat_vec(&self.weight_matrix(rs), &d.0))
    }

    /// Determinant of the action on the weight lattice.
    pub fn determinant(&self, rs: &RootSystem) -> i128 {
        linalg::determinant(&self.weight_matrix(rs))
    }

    /// Multiplicative order.
    pub fn order(&self, rs: &RootSystem) -> usize {
        let mut power = self.clone();
        let mut k = 1;
        while !power.is_identity() {
            power = power.compose(rs, self);
            k += 1;
        }
        k
    }
}

/// A word of length `ℓ(w)` for `w`, stripping the smallest right descent at
/// each step.
pub fn reduced_word(rs: &RootSystem, w: &WeylElement) -> Vec<usize> {
    let mut word = Vec::with_capacity(w.length());
    let mut cur = w.clone();
    while let Some(i) = (0..rs.rank()).find(|&i| cur.has_descent(rs, i)) {
        cur = cur.compose(rs, &WeylElement::simple(rs, i).expect("in range"));
        word.push(i);
    }
    word.reverse();
    word
}

pub fn is_reduced(rs: &RootSystem, word: &[usize]) -> Result<bool, WeylError> {
    Ok(WeylElement::from_word(rs, word)?.length() == word.len())
}

/// Left fold with `w ⋆ s = ws` when that is longer and `w` otherwise.
pub fn demazure_product(rs: &RootSystem, word: &[usize]) -> Result<WeylElement, WeylError> {
    let mut w = WeylElement::identity(rs);
    for &i in word {
        let ws = w.compose(rs, &WeylElement::simple(rs, i)?);
        if ws.length() > w.length() {
            w = ws;
        }
    }
    Ok(w)
}

/// Order of `s_i s_j` predicted by the bond `C[i][j]·C[j][i]`.
pub fn coxeter_m(bond: i64) -> Option<usize> {
    match bond {
        0 => Some(2),
        1 => Some(3),
        2 => Some(4),
        3 => Some(6),
        _ => None,
    }
}

/// An enumerated finite Weyl group.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    rank: usize,
    /// `w(ρ)` per element, `rank` entries each, grouped by length.
    orbit: Vec<i8>,
    layer_starts: Vec<usize>,
    generators: Vec<WeylElement>,
    longest: WeylElement,
    reflections: Vec<WeylElement>,
}

fn pack(v: &[i8]) -> u128 {
    v.iter().enumerate().fold(0u128, |acc, (k, &x)| acc | (u128::from(x as u8) << (8 * k)))
}

impl WeylGroup {
    /// Breadth-first enumeration by length, refusing groups larger than
    /// `cap`.
    pub fn enumerate(rs: &RootSystem, cap: usize) -> Result<Self, WeylError> {
        let n = rs.rank();
        if n > 16 {
            return Err(WeylError::RankTooLarge(n));
        }
        let c = rs.gcm();
        let to_i8 = |x: i64| i8::try_from(x).map_err(|_| WeylError::RankTooLarge(n));
        let simple_weights: Vec<Vec<i64>> = c.rows().to_vec();

        let mut orbit: Vec<i8> = vec![1; n];
        let mut layer_starts = vec![0];
        let mut layer: Vec<Vec<i8>> = vec![vec![1; n]];
        let mut count = 1usize;
        let mut next_buf = vec![0i8; n];
        loop {
            let mut seen: HashSet<u128> = HashSet::new();
            let mut next: Vec<Vec<i8>> = Vec::new();
            for v in &layer {
                for i in 0..n {
                    if v[i] <= 0 {
                        continue;
                    }
                    // s_i(v) = v - v_i α_i, one step longer
                    let p = i64::from(v[i]);
                    for (k, slot) in next_buf.iter_mut().enumerate() {
                        *slot = to_i8(i64::from(v[k]) - p * simple_weights[i][k])?;
                    }
                    if seen.insert(pack(&next_buf)) {
                        count += 1;
                        if count > cap {
                            return Err(WeylError::CapExceeded(cap));
                        }
                        next.push(next_buf.clone());
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            layer_starts.push(orbit.len() / n);
            for v in &next {
                orbit.extend_from_slice(v);
            }
            layer = next;
        }
        layer_starts.push(orbit.len() / n);

        let generators: Vec<WeylElement> =
            (0..n).map(|i| WeylElement::simple(rs, i)).collect::<Result<_, _>>()?;
        let mut group = Self {
            rank: n,
            orbit,
            layer_starts,
            generators,
            longest: WeylElement::identity(rs),
            reflections: Vec::new(),
        };
        let last = group.order() - 1;
        group.longest = group.element(rs, last);
        group.reflections = group.conjugation_closure(rs);
        Ok(group)
    }

    /// `T = ⋃ w S w⁻¹`, computed by closing `S` under conjugation by
    /// generators, ordered by the positive root each one negates.
    fn conjugation_closure(&self, rs: &RootSystem) -> Vec<WeylElement> {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut queue: VecDeque<WeylElement> = VecDeque::new();
        for s in &self.generators {
            if seen.insert(s.perm.clone()) {
                queue.push_back(s.clone());
            }
        }
        let mut all = Vec::new();
        while let Some(t) = queue.pop_front() {
            for s in &self.generators {
                let conj = s.compose(rs, &t).compose(rs, s);
                if seen.insert(conj.perm.clone()) {
                    queue.push_back(conj);
                }
            }
            all.push(t);
        }
        all.sort_by_key(|t| Self::normal_root(rs, t));
        all
    }

    /// The positive root sent to its negative by a reflection (the normal
    /// to its fixed hyperplane); `None` if there is not exactly one.
    pub fn normal_root(rs: &RootSystem, t: &WeylElement) -> Option<usize> {
        let mut hits = (0..rs.num_positive()).filter(|&k| t.apply(k) == rs.negate(k));
        let first = hits.next()?;
        hits.next().is_none().then_some(first)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.orbit.len() / self.rank
    }

    pub fn generators(&self) -> &[WeylElement] {
        &self.generators
    }

    pub fn longest(&self) -> &WeylElement {
        &self.longest
    }

    /// The reflection set `T`, ordered by normal root.
    pub fn reflections(&self) -> &[WeylElement] {
        &self.reflections
    }

    /// Coefficients `b_ℓ = #{w : ℓ(w) = ℓ}`.
    pub fn poincare(&self) -> Vec<u64> {
        self.layer_starts.windows(2).map(|w| (w[1] - w[0]) as u64).collect()
    }

    pub fn length_of(&self, idx: usize) -> usize {
        self.layer_starts.partition_point(|&s| s <= idx) - 1
    }

    /// `w(ρ)` for element `idx`.
    pub fn orbit_point(&self, idx: usize) -> WeightVector {
        let n = self.rank;
        WeightVector(self.orbit[idx * n..(idx + 1) * n].iter().map(|&x| i64::from(x)).collect())
    }

    /// A reduced word for element `idx`, read off `w(ρ)` by stripping the
    /// smallest left descent.
    pub fn word_of(&self, rs: &RootSystem, idx: usize) -> Vec<usize> {
        let mut v = self.orbit_point(idx);
        let mut word = Vec::new();
        while let Some(i) = (0..self.rank).find(|&i| v.pairing(i) < 0) {
            v = reflect(rs.gcm(), i, &v).expect("in range");
            word.push(i);
        }
        word
    }

    pub fn element(&self, rs: &RootSystem, idx: usize) -> WeylElement {
        WeylElement::from_word(rs, &self.word_of(rs, idx)).expect("valid word")
    }
}

/// Closed-form order of an irreducible Weyl group.
pub fn weyl_order_of(family: Family, rank: usize) -> u128 {
    let n = rank as u128;
    let fact = |k: u128| (1..=k).product::<u128>();
    match family {
        Family::A => fact(n + 1),
        Family::B | Family::C => (1u128 << n) * fact(n),
        Family::D => (1u128 << (n - 1)) * fact(n),
        Family::E => match rank {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Family::F => 1152,
        Family::G => 12,
    }
}

/// Closed-form order, multiplied over components.
pub fn weyl_order(t: &DynkinType) -> u128 {
    t.components.iter().map(|c| weyl_order_of(c.family, c.rank)).product()
}
