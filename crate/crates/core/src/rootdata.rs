//! Pinned root data `(M, Φ, Δ, M∨, Φ∨)` for semisimple types.
//!
//! Characters are integer row vectors in a basis of `M`; cocharacters are
//! integer vectors in the dual basis, so the pairing is the dot product.
//! Every lattice `Q ⊆ M ⊆ P` is described by a basis whose rows are
//! written in fundamental-weight coordinates.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cartan::{is_finite_type, CartanError, Gcm};
use crate::linalg::{self, IntMatrix};
use crate::roots::RootSystem;

/// Largest `|P/Q|` accepted by [`intermediate_lattices`].
pub const MAX_FUNDAMENTAL_GROUP: i64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootDatumError {
    #[error("Cartan matrix is not of finite type")]
    NotFiniteType,
    #[error("malformed datum: {0}")]
    Malformed(String),
    #[error("pairing of root {0} with its coroot is not 2")]
    PairingNotTwo(usize),
    #[error("simple roots do not span the character lattice rationally")]
    NotSemisimple,
    #[error("simple pairings are not a Cartan matrix: {0}")]
    BadCartan(CartanError),
    #[error("roots and coroots are not those generated by the simple roots")]
    RootSetMismatch,
    #[error("basis does not describe a lattice between Q and P")]
    BadLattice,
    #[error("fundamental group of order {0} exceeds the bound {MAX_FUNDAMENTAL_GROUP}")]
    FundamentalGroupTooLarge(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PinnedRootDatum {
    pub rank: usize,
    pub roots: Vec<Vec<i64>>,
    /// Indices into `roots` of the ordered simple roots.
    pub simple: Vec<usize>,
    /// `coroots[k]` is the coroot of `roots[k]`.
    pub coroots: Vec<Vec<i64>>,
}

fn require_finite(c: &Gcm) -> Result<RootSystem, RootDatumError> {
    if !is_finite_type(c) {
        return Err(RootDatumError::NotFiniteType);
    }
    RootSystem::new(c).map_err(|_| RootDatumError::NotFiniteType)
}

impl PinnedRootDatum {
    /// The datum on the lattice spanned by the rows of `basis`, given in
    /// fundamental-weight coordinates.
    pub fn from_lattice(c: &Gcm, basis: &[Vec<i64>]) -> Result<Self, RootDatumError> {
        let rs = require_finite(c)?;
        let n = c.size();
        if basis.len() != n || basis.iter().any(|r| r.len() != n) {
            return Err(RootDatumError::BadLattice);
        }
        let inv = linalg::rational_inverse(basis).ok_or(RootDatumError::BadLattice)?;
        let weights: Vec<Vec<i64>> = rs.roots().iter().map(|r| r.weight.0.clone()).collect();
        let roots = linalg::integral(&linalg::rat_mul(&linalg::to_rational(&weights), &inv))
            .ok_or(RootDatumError::BadLattice)?;
        let coroots = rs.roots().iter().map(|r| linalg::mat_vec(basis, &r.coroot)).collect();
        Ok(Self { rank: n, roots, simple: (0..n).collect(), coroots })
    }

    /// `M = Q` with basis `Δ`.
    pub fn adjoint(c: &Gcm) -> Result<Self, RootDatumError> {
        Self::from_lattice(c, c.rows())
    }

    /// `M = P` with the fundamental weights as basis.
    pub fn simply_connected(c: &Gcm) -> Result<Self, RootDatumError> {
        Self::from_lattice(c, &linalg::identity(c.size()))
    }

    pub fn simple_roots(&self) -> IntMatrix {
        self.simple.iter().map(|&k| self.roots[k].clone()).collect()
    }

    pub fn simple_coroots(&self) -> IntMatrix {
        self.simple.iter().map(|&k| self.coroots[k].clone()).collect()
    }

    /// `⟨α_i, α_j∨⟩` over the simple roots.
    pub fn pairing_matrix(&self) -> IntMatrix {
        let (s, sc) = (self.simple_roots(), self.simple_coroots());
        s.iter().map(|a| sc.iter().map(|b| linalg::dot(a, b)).collect()).collect()
    }

    pub fn gcm(&self) -> Result<Gcm, RootDatumError> {
        Gcm::new(self.pairing_matrix()).map_err(RootDatumError::BadCartan)
    }

    pub fn root_index(&self) -> HashMap<&[i64], usize> {
        self.roots.iter().enumerate().map(|(k, r)| (r.as_slice(), k)).collect()
    }

    /// `α − ⟨α, β∨⟩ β` for roots at indices `a`, `b`.
    pub fn reflect(&self, a: usize, b: usize) -> Vec<i64> {
        let p = linalg::dot(&self.roots[a], &self.coroots[b]);
        self.roots[a].iter().zip(&self.roots[b]).map(|(x, y)| x - p * y).collect()
    }

    /// Checks shape, the pairings, and that `Φ`, `Φ∨` are exactly what the
    /// simple roots and coroots generate.
    pub fn validate(&self) -> Result<(), RootDatumError> {
        let r = self.rank;
        let bad = |m: &str| Err(RootDatumError::Malformed(m.to_string()));
        if self.roots.len() != self.coroots.len() {
            return bad("roots and coroots differ in number");
        }
        if self.roots.iter().chain(&self.coroots).any(|v| v.len() != r) {
            return bad("vector length differs from rank");
        }
        if self.simple.iter().any(|&k| k >= self.roots.len()) {
            return bad("simple index out of range");
        }
        if self.simple.iter().collect::<BTreeSet<_>>().len() != self.simple.len() {
            return bad("repeated simple index");
        }
        if self.root_index().len() != self.roots.len() {
            return bad("repeated root");
        }
        for k in 0..self.roots.len() {
            if linalg::dot(&self.roots[k], &self.coroots[k]) != 2 {
                return Err(RootDatumError::PairingNotTwo(k));
            }
        }
        if self.simple.len() != r || linalg::determinant(&self.simple_roots()) == 0 {
            return Err(RootDatumError::NotSemisimple);
        }
        let c = self.gcm()?;
        let rs = require_finite(&c)?;
        if rs.len() != self.roots.len() {
            return Err(RootDatumError::RootSetMismatch);
        }
        let (s, sc) = (self.simple_roots(), self.simple_coroots());
        let index = self.root_index();
        for root in rs.roots() {
            let v = linalg::vec_mat(&root.coords, &s);
            let co = linalg::vec_mat(&root.coroot, &sc);
            match index.get(v.as_slice()) {
                Some(&k) if self.coroots[k] == co => {}
                _ => return Err(RootDatumError::RootSetMismatch),
            }
        }
        Ok(())
    }

    /// The same datum in the basis where characters become `x · P`;
    /// `P` must be unimodular.
    pub fn rebase(&self, p: &[Vec<i64>]) -> Option<Self> {
        let p_inv = linalg::unimodular_inverse(p)?;
        Some(Self {
            rank: self.rank,
            roots: self.roots.iter().map(|r| linalg::vec_mat(r, p)).collect(),
            simple: self.simple.clone(),
            coroots: self.coroots.iter().map(|c| linalg::mat_vec(&p_inv, c)).collect(),
        })
    }
}

/// Invariant factors of `P/Q = coker C`, omitting ones.
pub fn fundamental_group(c: &Gcm) -> Result<Vec<i64>, RootDatumError> {
    require_finite(c)?;
    Ok(linalg::smith_normal_form(c.rows()).nontrivial_factors())
}

/// All subgroups of `⊕ Z/d`, grown one generator at a time from the
/// trivial subgroup; `H + ⟨g⟩` is the orbit of `H` under adding `g`.
fn subgroups(orders: &[i64]) -> Vec<BTreeSet<Vec<i64>>> {
    let mut elements: Vec<Vec<i64>> = vec![vec![]];
    for &d in orders {
        elements = elements.into_iter().flat_map(|e| (0..d).map(move |x| [e.clone(), vec![x]].concat())).collect();
    }
    let add = |a: &[i64], b: &[i64]| -> Vec<i64> { a.iter().zip(b).zip(orders).map(|((x, y), d)| (x + y) % d).collect() };
    let extend = |h: &BTreeSet<Vec<i64>>, g: &[i64]| -> BTreeSet<Vec<i64>> {
        let mut set = h.clone();
        let mut frontier: Vec<Vec<i64>> = set.iter().cloned().collect();
        while let Some(x) = frontier.pop() {
            let y = add(&x, g);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
        set
    };
    let trivial = BTreeSet::from([vec![0; orders.len()]]);
    let mut found: BTreeSet<BTreeSet<Vec<i64>>> = BTreeSet::from([trivial.clone()]);
    let mut frontier = vec![trivial];
    while let Some(h) = frontier.pop() {
        for g in &elements {
            let bigger = extend(&h, g);
            if !found.contains(&bigger) {
                found.insert(bigger.clone());
                frontier.push(bigger);
            }
        }
    }
    let mut out: Vec<_> = found.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Bases, in fundamental-weight coordinates, of every lattice between `Q`
/// and `P`, ordered by index over `Q` (so `Q` first and `P` last).
pub fn intermediate_lattices(c: &Gcm) -> Result<Vec<IntMatrix>, RootDatumError> {
    require_finite(c)?;
    let snf = linalg::smith_normal_form(c.rows());
    let order: i64 = snf.diagonal.iter().product();
    if order > MAX_FUNDAMENTAL_GROUP {
        return Err(RootDatumError::FundamentalGroupTooLarge(order));
    }
    let positions: Vec<usize> = (0..c.size()).filter(|&i| snf.diagonal[i] != 1).collect();
    let orders: Vec<i64> = positions.iter().map(|&i| snf.diagonal[i]).collect();
    let v_inv = linalg::unimodular_inverse(&snf.v).expect("smith transform is unimodular");
    Ok(subgroups(&orders)
        .into_iter()
        .map(|h| {
            let mut gens: IntMatrix = c.rows().to_vec();
            for elem in h {
                let mut y = vec![0; c.size()];
                for (&pos, &x) in positions.iter().zip(&elem) {
                    y[pos] = x;
                }
                gens.push(linalg::vec_mat(&y, &v_inv));
            }
            linalg::hermite_basis(&gens)
        })
        .collect())
}

/// The unique lattice isomorphism `G: M₂ → M₁` (acting as `x ↦ x·G`) that
/// carries `Δ₂` to `Δ₁` in order, `Φ₂` onto `Φ₁`, and whose transpose
/// carries `Φ₁∨` onto `Φ₂∨` compatibly; `None` if there is none.
pub fn pinned_isomorphism(r1: &PinnedRootDatum, r2: &PinnedRootDatum) -> Option<IntMatrix> {
    if r1.rank != r2.rank || r1.roots.len() != r2.roots.len() || r1.simple.len() != r2.simple.len() {
        return None;
    }
    let s2_inv = linalg::rational_inverse(&r2.simple_roots())?;
    let g = linalg::integral(&linalg::rat_mul(&s2_inv, &linalg::to_rational(&r1.simple_roots())))?;
    if linalg::determinant(&g).abs() != 1 {
        return None;
    }
    let index = r1.root_index();
    for (root, coroot) in r2.roots.iter().zip(&r2.coroots) {
        let &k = index.get(linalg::vec_mat(root, &g).as_slice())?;
        if &linalg::mat_vec(&g, &r1.coroots[k]) != coroot {
            return None;
        }
    }
    Some(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{catalog, Family};

    fn cat(f: Family, n: usize) -> Gcm {
        catalog(f, n).unwrap()
    }

    #[test]
    fn adjoint_examples() {
        let a1 = PinnedRootDatum::adjoint(&cat(Family::A, 1)).unwrap();
        assert_eq!(a1.roots[0], vec![1]);
        assert_eq!(linalg::dot(&a1.roots[0], &a1.coroots[0]), 2);
        let a2 = cat(Family::A, 2);
        let d = PinnedRootDatum::adjoint(&a2).unwrap();
        assert_eq!(d.roots.len(), 6);
        assert_eq!(d.pairing_matrix(), a2.rows().to_vec());
        assert_eq!(PinnedRootDatum::adjoint(&cat(Family::G, 2)).unwrap().roots.len(), 12);
    }

    #[test]
    fn simply_connected_examples() {
        let a1 = PinnedRootDatum::simply_connected(&cat(Family::A, 1)).unwrap();
        assert_eq!(a1.roots[0], vec![2]);
        for (f, n) in [(Family::A, 2), (Family::B, 2)] {
            let c = cat(f, n);
            let d = PinnedRootDatum::simply_connected(&c).unwrap();
            assert_eq!(d.simple_roots(), c.rows().to_vec());
            assert_eq!(d.pairing_matrix(), c.rows().to_vec());
        }
    }

    #[test]
    fn constructions_validate() {
        for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::G, 2), (Family::D, 4)] {
            let c = cat(f, n);
            for basis in intermediate_lattices(&c).unwrap() {
                PinnedRootDatum::from_lattice(&c, &basis).unwrap().validate().unwrap();
            }
        }
    }

    #[test]
    fn validate_rejects_broken_data() {
        let mut d = PinnedRootDatum::adjoint(&cat(Family::A, 2)).unwrap();
        d.coroots[3][0] += 1;
        assert!(d.validate().is_err());
        let mut d = PinnedRootDatum::adjoint(&cat(Family::A, 2)).unwrap();
        d.roots.pop();
        assert!(matches!(d.validate(), Err(RootDatumError::Malformed(_))));
    }

    #[test]
    fn fundamental_group_examples() {
        assert_eq!(fundamental_group(&cat(Family::A, 1)).unwrap(), vec![2]);
        assert_eq!(fundamental_group(&cat(Family::A, 2)).unwrap(), vec![3]);
        assert!(fundamental_group(&cat(Family::G, 2)).unwrap().is_empty());
        assert_eq!(fundamental_group(&cat(Family::D, 4)).unwrap(), vec![2, 2]);
    }

    #[test]
    fn intermediate_lattice_counts() {
        assert_eq!(intermediate_lattices(&cat(Family::A, 1)).unwrap().len(), 2);
        assert_eq!(intermediate_lattices(&cat(Family::A, 3)).unwrap().len(), 3);
        assert_eq!(intermediate_lattices(&cat(Family::G, 2)).unwrap().len(), 1);
        // (Z/2)² has five subgroups
        assert_eq!(intermediate_lattices(&cat(Family::D, 4)).unwrap().len(), 5);
        let a1 = intermediate_lattices(&cat(Family::A, 1)).unwrap();
        assert_eq!(a1, vec![vec![vec![2]], vec![vec![1]]]);
    }

    #[test]
    fn isomorphism_examples() {
        let c = cat(Family::A, 2);
        let ad = PinnedRootDatum::adjoint(&c).unwrap();
        let sc = PinnedRootDatum::simply_connected(&c).unwrap();
        assert_eq!(pinned_isomorphism(&ad, &ad), Some(linalg::identity(2)));
        assert_eq!(pinned_isomorphism(&ad, &sc), None);
        let p = vec![vec![1, 1], vec![0, 1]];
        let moved = ad.rebase(&p).unwrap();
        moved.validate().unwrap();
        assert_eq!(pinned_isomorphism(&ad, &moved), linalg::unimodular_inverse(&p));
    }
}
