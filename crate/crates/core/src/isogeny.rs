//! p-morphisms between pinned root data.
//!
//! A [`PMorphism`] from `R(G)` to `R(H)` is a lattice map `f: M_H → M_G`,
//! stored as a `rank_H × rank_G` matrix acting on row vectors, a bijection
//! `u: Δ_G → Δ_H` and exponents `q: Δ_G → {pⁿ}` such that
//! `f(u(α)) = q(α) α` and `ᵗf(α∨) = q(α) u(α)∨`.

use std::collections::VecDeque;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cartan::{catalog, Family};
use crate::linalg::{self, IntMatrix};
use crate::rootdata::{PinnedRootDatum, RootDatumError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsogenyError {
    #[error("invalid {which} datum: {err}")]
    InvalidDatum { which: &'static str, err: RootDatumError },
    #[error("malformed p-morphism: {0}")]
    Malformed(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("u is not a bijection of simple roots")]
    NotBijection,
    #[error("q of simple root {0} is not a power of p")]
    QNotPowerOfP(usize),
    #[error("Cartan matrices incompatible at simple roots ({0}, {1})")]
    CartanIncompatible(usize, usize),
    #[error("f(u(α)) ≠ q(α)α for simple root {0}")]
    RootEquationFails(usize),
    #[error("ᵗf(α∨) ≠ q(α)u(α)∨ for simple root {0}")]
    CorootEquationFails(usize),
    #[error("target of the first morphism is not the source of the second")]
    NotComposable,
    #[error("f is not divisible by p^{0}")]
    NotDivisible(u32),
    #[error("u and q do not extend consistently to all roots")]
    InconsistentExtension,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PMorphism {
    pub source: PinnedRootDatum,
    pub target: PinnedRootDatum,
    pub f: IntMatrix,
    pub u: Vec<usize>,
    pub q: Vec<u64>,
    pub p: u64,
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `n` with `p^n = x`, if any.
pub fn p_power_exponent(x: u64, p: u64) -> Option<u32> {
    let mut x = x;
    let mut n = 0;
    while x > 1 && x % p == 0 {
        x /= p;
        n += 1;
    }
    (x == 1).then_some(n)
}

fn scale(v: &[i64], k: i64) -> Vec<i64> {
    v.iter().map(|x| x * k).collect()
}

impl PMorphism {
    pub fn validate(&self) -> Result<(), IsogenyError> {
        self.source.validate().map_err(|err| IsogenyError::InvalidDatum { which: "source", err })?;
        self.target.validate().map_err(|err| IsogenyError::InvalidDatum { which: "target", err })?;
        let (n, n_t) = (self.source.simple.len(), self.target.simple.len());
        let bad = |m: &str| Err(IsogenyError::Malformed(m.to_string()));
        if self.u.len() != n || self.q.len() != n {
            return bad("u and q must have one entry per source simple root");
        }
        if self.f.len() != self.target.rank || self.f.iter().any(|r| r.len() != self.source.rank) {
            return bad("f must be rank(target) × rank(source)");
        }
        let mut seen = vec![false; n_t];
        for &j in &self.u {
            if j >= n_t || std::mem::replace(&mut seen[j], true) {
                return Err(IsogenyError::NotBijection);
            }
        }
        if n != n_t {
            return Err(IsogenyError::NotBijection);
        }
        if !is_prime(self.p) {
            return Err(IsogenyError::NotPrime(self.p));
        }
        for (i, &q) in self.q.iter().enumerate() {
            if q == 0 || p_power_exponent(q, self.p).is_none() || i64::try_from(q).is_err() {
                return Err(IsogenyError::QNotPowerOfP(i));
            }
        }
        let c = self.source.pairing_matrix();
        let ct = self.target.pairing_matrix();
        let q: Vec<i64> = self.q.iter().map(|&x| x as i64).collect();
        for i in 0..n {
            for j in 0..n {
                if q[i] * c[i][j] != q[j] * ct[self.u[i]][self.u[j]] {
                    return Err(IsogenyError::CartanIncompatible(i, j));
                }
            }
        }
        let (s, sc) = (self.source.simple_roots(), self.source.simple_coroots());
        let (t, tc) = (self.target.simple_roots(), self.target.simple_coroots());
        for i in 0..n {
            if linalg::vec_mat(&t[self.u[i]], &self.f) != scale(&s[i], q[i]) {
                return Err(IsogenyError::RootEquationFails(i));
            }
        }
        for i in 0..n {
            if linalg::mat_vec(&self.f, &sc[i]) != scale(&tc[self.u[i]], q[i]) {
                return Err(IsogenyError::CorootEquationFails(i));
            }
        }
        Ok(())
    }

    pub fn is_constant(&self) -> bool {
        self.q.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_primitive(&self) -> bool {
        self.q.contains(&1)
    }

    /// Extends `u` and `q` from `Δ` to `Φ` by equivariance under the simple
    /// reflections: entry `k` is `(index of u(α_k) in the target, q(α_k))`.
    pub fn extend_to_roots(&self) -> Result<Vec<(usize, u64)>, IsogenyError> {
        let mut map: Vec<Option<(usize, u64)>> = vec![None; self.source.roots.len()];
        let mut queue = VecDeque::new();
        for (i, &k) in self.source.simple.iter().enumerate() {
            map[k] = Some((self.target.simple[self.u[i]], self.q[i]));
            queue.push_back(k);
        }
        let src = self.source.root_index();
        let tgt = self.target.root_index();
        while let Some(k) = queue.pop_front() {
            let (kt, q) = map[k].expect("queued roots are mapped");
            for (j, &sj) in self.source.simple.iter().enumerate() {
                let image = *src.get(self.source.reflect(k, sj).as_slice()).ok_or(IsogenyError::InconsistentExtension)?;
                let tj = self.target.simple[self.u[j]];
                let image_t = *tgt.get(self.target.reflect(kt, tj).as_slice()).ok_or(IsogenyError::InconsistentExtension)?;
                match map[image] {
                    None => {
                        map[image] = Some((image_t, q));
                        queue.push_back(image);
                    }
                    Some(existing) if existing != (image_t, q) => return Err(IsogenyError::InconsistentExtension),
                    Some(_) => {}
                }
            }
        }
        map.into_iter().map(|e| e.ok_or(IsogenyError::InconsistentExtension)).collect()
    }
}

/// Multiplication by `pⁿ` on a datum; `n = 0` gives the identity.
pub fn frobenius(r: &PinnedRootDatum, p: u64, n: u32) -> PMorphism {
    let k = p.pow(n);
    PMorphism {
        source: r.clone(),
        target: r.clone(),
        f: linalg::identity(r.rank).into_iter().map(|row| scale(&row, k as i64)).collect(),
        u: (0..r.simple.len()).collect(),
        q: vec![k; r.simple.len()],
        p,
    }
}

/// `then ∘ first`.
pub fn compose(first: &PMorphism, then: &PMorphism) -> Result<PMorphism, IsogenyError> {
    if first.target != then.source || first.p != then.p {
        return Err(IsogenyError::NotComposable);
    }
    Ok(PMorphism {
        source: first.source.clone(),
        target: then.target.clone(),
        f: linalg::mat_mul(&then.f, &first.f),
        u: first.u.iter().map(|&j| then.u[j]).collect(),
        q: first.q.iter().zip(&first.u).map(|(&a, &j)| a * then.q[j]).collect(),
        p: first.p,
    })
}

/// Splits `φ` as a primitive p-morphism followed by Frobenius to the power
/// `k = min v_p(q(α))`.
pub fn factor_primitive_constant(phi: &PMorphism) -> Result<(PMorphism, u32), IsogenyError> {
    phi.validate()?;
    let k = phi.q.iter().map(|&q| p_power_exponent(q, phi.p).expect("validated")).min().unwrap_or(0);
    let d = phi.p.pow(k);
    let di = d as i64;
    if phi.f.iter().flatten().any(|x| x % di != 0) {
        return Err(IsogenyError::NotDivisible(k));
    }
    let primitive = PMorphism {
        f: phi.f.iter().map(|row| row.iter().map(|x| x / di).collect()).collect(),
        q: phi.q.iter().map(|q| q / d).collect(),
        ..phi.clone()
    };
    Ok((primitive, k))
}

/// Bijections `Δ → Δ'` preserving bond multiplicities, in lexicographic
/// order.
pub fn coxeter_isomorphisms(c: &[Vec<i64>], ct: &[Vec<i64>]) -> Vec<Vec<usize>> {
    fn extend(c: &[Vec<i64>], ct: &[Vec<i64>], partial: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let i = partial.len();
        if i == c.len() {
            out.push(partial.clone());
            return;
        }
        for j in 0..ct.len() {
            if used[j] {
                continue;
            }
            let ok = partial
                .iter()
                .enumerate()
                .all(|(a, &b)| c[i][a] * c[a][i] == ct[j][b] * ct[b][j]);
            if ok {
                used[j] = true;
                partial.push(j);
                extend(c, ct, partial, used, out);
                partial.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    if c.len() == ct.len() {
        extend(c, ct, &mut Vec::new(), &mut vec![false; ct.len()], &mut out);
    }
    out
}

/// Every primitive non-constant p-morphism with `q ∈ {1, p}^Δ` from the
/// adjoint datum of `(family, rank)` to the adjoint datum of a catalog type
/// of the same rank.
pub fn enumerate_special(family: Family, rank: usize, p: u64) -> Vec<PMorphism> {
    let Ok(c) = catalog(family, rank) else { return Vec::new() };
    if !is_prime(p) || i64::try_from(p).is_err() {
        return Vec::new();
    }
    let source = PinnedRootDatum::adjoint(&c).expect("catalog is finite type");
    let s = source.simple_roots();
    let mut out = Vec::new();
    for target_family in Family::ALL {
        let Ok(ct) = catalog(target_family, rank) else { continue };
        let target = PinnedRootDatum::adjoint(&ct).expect("catalog is finite type");
        let t = target.simple_roots();
        for u in coxeter_isomorphisms(c.rows(), ct.rows()) {
            let t_u: IntMatrix = u.iter().map(|&j| t[j].clone()).collect();
            let Some(t_u_inv) = linalg::rational_inverse(&t_u) else { continue };
            for mask in 1..(1u32 << rank) - 1 {
                let q: Vec<u64> = (0..rank).map(|i| if mask >> i & 1 == 1 { p } else { 1 }).collect();
                let qs: IntMatrix = s.iter().zip(&q).map(|(row, &k)| scale(row, k as i64)).collect();
                let Some(f) = linalg::integral(&linalg::rat_mul(&t_u_inv, &linalg::to_rational(&qs))) else {
                    continue;
                };
                let phi = PMorphism { source: source.clone(), target: target.clone(), f, u: u.clone(), q, p };
                if phi.validate().is_ok() {
                    out.push(phi);
                }
            }
        }
    }
    out
}

/// `gcd` of all `q(α)` values; used to read off the Frobenius part.
pub fn q_gcd(phi: &PMorphism) -> u64 {
    phi.q.iter().fold(0, |g, &x| g.gcd(&x))
}
