//! Finite root systems generated from a Cartan matrix.
//!
//! Roots are stored with their coordinates in the simple-root basis and
//! the coordinates of their coroots in the simple-coroot basis. Reflections
//! update both, so pairings against arbitrary coroots never need a
//! division.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cartan::{is_finite_type, symmetrizer, Gcm, LengthClass, Symmetrizer};
use crate::linalg;

/// Orbit size past which generation gives up. Far above any finite type
/// of reasonable rank (E8 has 240 roots).
pub const DEFAULT_ORBIT_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("matrix is not of finite type")]
    NotFiniteType,
    #[error("root orbit exceeded {0} elements")]
    OrbitCap(usize),
    #[error("root coordinates overflowed")]
    Overflow,
    #[error("{0:?} is not a root")]
    NotARoot(Vec<i64>),
    #[error("simple index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { got: usize, expected: usize },
}

/// A weight in coroot coordinates: entry `j` is the pairing with `α_j∨`,
/// i.e. the coefficient of the `j`-th fundamental weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// `ρ`, the weight pairing to 1 with every simple coroot.
    pub fn rho(n: usize) -> Self {
        Self(vec![1; n])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Pairing with the simple coroot `α_j∨`.
    pub fn pairing(&self, j: usize) -> i64 {
        self.0[j]
    }

    /// Pairing with a coroot given in simple-coroot coordinates.
    pub fn pair_coroot(&self, coroot: &[i64]) -> i64 {
        linalg::dot(&self.0, coroot)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn scaled(&self, k: i64) -> Self {
        Self(self.0.iter().map(|x| k * x).collect())
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for WeightVector {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;

    fn add(self, rhs: Self) -> WeightVector {
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;

    fn sub(self, rhs: Self) -> WeightVector {
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &WeightVector {
    type Output = WeightVector;

    fn neg(self) -> WeightVector {
        WeightVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// Coordinates in the simple-root basis.
    pub coords: Vec<i64>,
    /// The same root as a weight (`coords · C`).
    pub weight: WeightVector,
    /// The coroot in the simple-coroot basis.
    pub coroot: Vec<i64>,
    pub height: i64,
    pub positive: bool,
    /// Squared length, normalized so the short roots of each component
    /// have length 1.
    pub norm: i64,
    pub length: LengthClass,
}

/// `β + kδ` for `-r ≤ k ≤ s`, a maximal run inside `Φ ∪ {0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootString {
    pub base: Vec<i64>,
    /// Index of `δ` in the root system.
    pub direction: usize,
    pub r: usize,
    pub s: usize,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    gcm: Gcm,
    sym: Symmetrizer,
    /// Positive roots ordered by height then reverse-lexicographic
    /// coordinates (so `α_0, α_1, …` come first), followed by their
    /// negatives in the same order.
    roots: Vec<Root>,
    n_pos: usize,
    index: HashMap<Vec<i64>, usize>,
}

fn checked_pairing(mut terms: impl Iterator<Item = (i64, i64)>) -> Result<i64, RootError> {
    terms.try_fold(0i64, |acc, (a, b)| a.checked_mul(b).and_then(|x| acc.checked_add(x)).ok_or(RootError::Overflow))
}

/// Closure of the simple roots under simple reflections, carrying coroots.
/// Makes no finiteness assumption; a cap is the only stopping rule.
pub fn root_orbit(c: &Gcm, cap: usize) -> Result<Vec<(Vec<i64>, Vec<i64>)>, RootError> {
    let n = c.size();
    let mut seen: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone(), e.clone());
        queue.push_back(e);
    }
    let mut order: Vec<Vec<i64>> = queue.iter().cloned().collect();
    while let Some(beta) = queue.pop_front() {
        let co = seen[&beta].clone();
        for i in 0..n {
            // s_i β = β - ⟨β, α_i∨⟩ α_i ;  s_i β∨ = β∨ - ⟨α_i, β∨⟩ α_i∨
            let p = checked_pairing((0..n).map(|k| (beta[k], c.get(k, i))))?;
            if p == 0 {
                continue;
            }
            let q = checked_pairing((0..n).map(|k| (c.get(i, k), co[k])))?;
            let mut image = beta.clone();
            image[i] = image[i].checked_sub(p).ok_or(RootError::Overflow)?;
            if seen.contains_key(&image) {
                continue;
            }
            let mut image_co = co.clone();
            image_co[i] = image_co[i].checked_sub(q).ok_or(RootError::Overflow)?;
            if seen.len() >= cap {
                return Err(RootError::OrbitCap(cap));
            }
            seen.insert(image.clone(), image_co);
            order.push(image.clone());
            queue.push_back(image);
        }
    }
    Ok(order
        .into_iter()
        .map(|r| {
            let co = seen.remove(&r).unwrap();
            (r, co)
        })
        .collect())
}

impl RootSystem {
    pub fn new(c: &Gcm) -> Result<Self, RootError> {
        Self::with_cap(c, DEFAULT_ORBIT_CAP)
    }

    pub fn with_cap(c: &Gcm, cap: usize) -> Result<Self, RootError> {
        if !is_finite_type(c) {
            return Err(RootError::NotFiniteType);
        }
        let sym = symmetrizer(c).map_err(|_| RootError::NotFiniteType)?;
        let n = c.size();
        let mut positives: Vec<(Vec<i64>, Vec<i64>)> = root_orbit(c, cap)?
            .into_iter()
            .filter(|(r, _)| r.iter().all(|&x| x >= 0))
            .collect();
        positives.sort_by(|(a, _), (b, _)| {
            let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let n_pos = positives.len();
        let build = |coords: Vec<i64>, coroot: Vec<i64>| {
            let weight = WeightVector(linalg::vec_mat(&coords, c.rows()));
            let mut twice_norm = 0;
            for i in 0..n {
                for j in 0..n {
                    twice_norm += coords[i] * coords[j] * sym.doubled_inner(c, i, j);
                }
            }
            let norm = twice_norm / 2;
            let height = coords.iter().sum();
            Root {
                positive: height > 0,
                length: if norm == 1 { LengthClass::Short } else { LengthClass::Long },
                coords,
                weight,
                coroot,
                height,
                norm,
            }
        };
        let mut roots = Vec::with_capacity(2 * n_pos);
        for (r, co) in &positives {
            roots.push(build(r.clone(), co.clone()));
        }
        for (r, co) in &positives {
            roots.push(build(r.iter().map(|x| -x).collect(), co.iter().map(|x| -x).collect()));
        }
        let index = roots.iter().enumerate().map(|(k, r)| (r.coords.clone(), k)).collect();
        Ok(Self { gcm: c.clone(), sym, roots, n_pos, index })
    }

    pub fn rank(&self) -> usize {
        self.gcm.size()
    }

    pub fn gcm(&self) -> &Gcm {
        &self.gcm
    }

    pub fn symmetrizer(&self) -> &Symmetrizer {
        &self.sym
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, k: usize) -> &Root {
        &self.roots[k]
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn positive(&self) -> &[Root] {
        &self.roots[..self.n_pos]
    }

    /// Index of the simple root `α_i`.
    pub fn simple(&self, i: usize) -> usize {
        debug_assert_eq!(self.roots[i].height, 1);
        i
    }

    pub fn is_simple(&self, k: usize) -> bool {
        k < self.rank()
    }

    /// Index of `-α` for the root at index `k`.
    pub fn negate(&self, k: usize) -> usize {
        if k < self.n_pos {
            k + self.n_pos
        } else {
            k - self.n_pos
        }
    }

    pub fn find(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn find_weight(&self, weight: &WeightVector) -> Option<usize> {
        self.find(&self.weight_to_root_coords(weight)?)
    }

    /// Root-basis coordinates of a weight lying in the root lattice.
    pub fn weight_to_root_coords(&self, weight: &WeightVector) -> Option<Vec<i64>> {
        let inv = linalg::rational_inverse(self.gcm.rows())?;
        let w = linalg::to_rational(&[weight.0.clone()]);
        let x = linalg::integral(&linalg::rat_mul(&w, &inv))?;
        Some(x.into_iter().next().unwrap())
    }

    /// `Φ₊ − Π`.
    pub fn phi_plus_plus(&self) -> Vec<usize> {
        (self.rank()..self.n_pos).collect()
    }

    pub fn weight_of(&self, coords: &[i64]) -> WeightVector {
        WeightVector(linalg::vec_mat(coords, self.gcm.rows()))
    }

    /// `⟨β, α∨⟩` for `β` in root coordinates and `α` the root at index `k`.
    pub fn pairing(&self, coords: &[i64], k: usize) -> i64 {
        self.weight_of(coords).pair_coroot(&self.roots[k].coroot)
    }

    /// Image of root `k` under the simple reflection `s_i`.
    pub fn reflect_root(&self, k: usize, i: usize) -> usize {
        let r = &self.roots[k];
        let mut image = r.coords.clone();
        image[i] -= r.weight.pairing(i);
        self.index[&image]
    }

    /// Image of root `k` under the reflection `s_α` in root `a`.
    pub fn reflect_root_by(&self, k: usize, a: usize) -> usize {
        let p = self.pairing(&self.roots[k].coords, a);
        let image: Vec<i64> =
            self.roots[k].coords.iter().zip(&self.roots[a].coords).map(|(x, y)| x - p * y).collect();
        self.index[&image]
    }

    /// Simple indices with nonzero coefficient.
    pub fn support(coords: &[i64]) -> Vec<usize> {
        coords.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i).collect()
    }

    fn in_phi_or_zero(&self, coords: &[i64]) -> bool {
        coords.iter().all(|&x| x == 0) || self.index.contains_key(coords)
    }

    /// The `δ`-string through `β`, where `β` is a root or zero (in root
    /// coordinates) and `δ` is the root at index `direction`.
    pub fn root_string(&self, base: &[i64], direction: usize) -> Result<RootString, RootError> {
        if base.len() != self.rank() {
            return Err(RootError::DimensionMismatch { got: base.len(), expected: self.rank() });
        }
        if !self.in_phi_or_zero(base) {
            return Err(RootError::NotARoot(base.to_vec()));
        }
        let delta = &self.roots[direction].coords;
        let step = |k: i64| -> Vec<i64> { base.iter().zip(delta).map(|(b, d)| b + k * d).collect() };
        let mut r = 0;
        while self.in_phi_or_zero(&step(-(r as i64) - 1)) {
            r += 1;
        }
        let mut s = 0;
        while self.in_phi_or_zero(&step(s as i64 + 1)) {
            s += 1;
        }
        debug_assert_eq!(r as i64 - s as i64, self.pairing(base, direction));
        Ok(RootString { base: base.to_vec(), direction, r, s })
    }

    /// Indices of the positive roots in the component containing simple
    /// root `i`.
    pub fn component_positive(&self, i: usize) -> Vec<usize> {
        let comp = self.gcm.components().into_iter().find(|c| c.contains(&i)).unwrap_or_default();
        (0..self.n_pos)
            .filter(|&k| Self::support(&self.roots[k].coords).iter().all(|j| comp.contains(j)))
            .collect()
    }
}

impl RootString {
    /// The members `β + kδ`, from `k = -r` to `k = s`.
    pub fn members(&self, rs: &RootSystem) -> Vec<Vec<i64>> {
        let delta = &rs.root(self.direction).coords;
        (-(self.r as i64)..=self.s as i64)
            .map(|k| self.base.iter().zip(delta).map(|(b, d)| b + k * d).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{catalog, catalog_types, Family};

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::new(&catalog(f, n).unwrap()).unwrap()
    }

    #[test]
    fn a2_positive_roots() {
        let a2 = rs(Family::A, 2);
        let pos: Vec<_> = a2.positive().iter().map(|r| r.coords.clone()).collect();
        assert_eq!(pos, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(a2.phi_plus_plus(), vec![2]);
    }

    #[test]
    fn g2_and_products() {
        let g2 = rs(Family::G, 2);
        assert_eq!(g2.num_positive(), 6);
        assert_eq!(g2.phi_plus_plus().len(), 4);
        let a1a1 = RootSystem::new(&Gcm::new(vec![vec![2, 0], vec![0, 2]]).unwrap()).unwrap();
        assert_eq!(a1a1.num_positive(), 2);
        assert!(a1a1.phi_plus_plus().is_empty());
        assert!(rs(Family::A, 1).phi_plus_plus().is_empty());
    }

    #[test]
    fn non_finite_rejected() {
        let affine = Gcm::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert_eq!(RootSystem::new(&affine).unwrap_err(), RootError::NotFiniteType);
        assert_eq!(root_orbit(&affine, 500).unwrap_err(), RootError::OrbitCap(500));
    }

    #[test]
    fn root_string_examples() {
        let a2 = rs(Family::A, 2);
        let s = a2.root_string(&[1, 0], a2.simple(1)).unwrap();
        assert_eq!((s.r, s.s), (0, 1));

        let b2 = rs(Family::B, 2);
        let s = b2.root_string(&[1, 0], b2.simple(1)).unwrap();
        assert_eq!((s.r, s.s), (0, 2));

        for sys in [&a2, &b2] {
            for k in 0..sys.len() {
                let s = sys.root_string(&sys.root(k).coords, k).unwrap();
                assert_eq!((s.r, s.s), (2, 0));
                assert_eq!(s.members(sys).len(), 3);
            }
        }
        let zero = b2.root_string(&[0, 0], 0).unwrap();
        assert_eq!((zero.r, zero.s), (1, 1));
        assert_eq!(b2.root_string(&[2, 2], 0), Err(RootError::NotARoot(vec![2, 2])));
    }

    #[test]
    fn roots_pair_to_two_with_their_coroots() {
        for (f, n) in catalog_types(8) {
            let sys = rs(f, n);
            assert_eq!(sys.len(), 2 * sys.num_positive());
            for (k, root) in sys.roots().iter().enumerate() {
                assert_eq!(root.weight.pair_coroot(&root.coroot), 2, "{f}{n}");
                assert_eq!(sys.root(sys.negate(k)).coords, root.coords.iter().map(|x| -x).collect::<Vec<_>>());
                let all_nonneg = root.coords.iter().all(|&x| x >= 0);
                let all_nonpos = root.coords.iter().all(|&x| x <= 0);
                assert_eq!(root.positive, all_nonneg);
                assert!(all_nonneg || all_nonpos);
            }
        }
    }

    #[test]
    fn coroot_is_rescaled_root() {
        // α∨ = Σ (c_i·|α_i|²/|α|²) α_i∨
        for (f, n) in catalog_types(6) {
            let sys = rs(f, n);
            let d = &sys.symmetrizer().d;
            for root in sys.roots() {
                for i in 0..n {
                    assert_eq!(root.coroot[i] * root.norm, root.coords[i] * d[i]);
                }
            }
        }
    }

    #[test]
    fn length_classes() {
        let b2 = rs(Family::B, 2);
        assert_eq!(b2.root(0).length, LengthClass::Long);
        assert_eq!(b2.root(1).length, LengthClass::Short);
        assert!(rs(Family::E, 6).roots().iter().all(|r| r.length == LengthClass::Short));
    }
}
