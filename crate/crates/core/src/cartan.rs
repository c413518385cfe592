//! Generalized Cartan matrices, finite-type recognition and the Dynkin
//! catalog.
//!
//! # Convention
//!
//! Entry `C[i][j]` is the pairing `⟨α_i, α_j∨⟩` of the `i`-th simple root
//! with the `j`-th simple coroot. Many references (Kac in particular) use
//! the transpose. Under this convention the weight of `α_i` in the
//! fundamental-weight basis is row `i` of `C`. Use [`Gcm::transposed`] to
//! adapt matrices written in the other convention.
//!
//! # Catalog numbering
//!
//! [`catalog`] uses Bourbaki numbering, with node `k` (0-based) standing for
//! Bourbaki's `α_{k+1}`:
//!
//! | type | diagram (0-based)                   | lengths            |
//! |------|-------------------------------------|--------------------|
//! | A_n  | 0 - 1 - … - n-1                     | all short          |
//! | B_n  | 0 - … - n-2 => n-1                  | n-1 short          |
//! | C_n  | 0 - … - n-2 <= n-1                  | n-1 long           |
//! | D_n  | 0 - … - n-3, n-3 - n-2, n-3 - n-1   | all short          |
//! | E_n  | 0 - 2 - 3 - … - n-1, 1 - 3          | all short          |
//! | F_4  | 0 - 1 => 2 - 3                      | 0, 1 long          |
//! | G_2  | 0 <≡ 1                              | 0 short, 1 long    |
//!
//! For example `catalog(B, 2) = [[2,-2],[-1,2]]` (α₁ long) and
//! `catalog(G, 2) = [[2,-1],[-3,2]]`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CartanError {
    #[error("matrix is empty")]
    Empty,
    #[error("matrix is not square (row {row} has {len} entries, expected {expected})")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("diagonal entry ({0},{0}) is not 2")]
    DiagonalNotTwo(usize),
    #[error("off-diagonal entry ({0},{1}) is positive")]
    PositiveOffDiagonal(usize, usize),
    #[error("entries ({0},{1}) and ({1},{0}) are not both zero or both nonzero")]
    AsymmetricZero(usize, usize),
    #[error("matrix is not of finite type")]
    NotFiniteType,
    #[error("no finite type {0}{1}")]
    InvalidType(Family, usize),
    #[error("cannot parse Dynkin type {0:?}")]
    BadTypeName(String),
}

/// A validated generalized Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Gcm {
    entries: Vec<Vec<i64>>,
}

impl Gcm {
    /// Checks the three axioms, reporting the first violating entry in
    /// row-major order.
    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Self, CartanError> {
        let n = matrix.len();
        if n == 0 {
            return Err(CartanError::Empty);
        }
        for (row, r) in matrix.iter().enumerate() {
            if r.len() != n {
                return Err(CartanError::NotSquare { row, len: r.len(), expected: n });
            }
        }
        for i in 0..n {
            for j in 0..n {
                let c = matrix[i][j];
                if i == j {
                    if c != 2 {
                        return Err(CartanError::DiagonalNotTwo(i));
                    }
                } else if c > 0 {
                    return Err(CartanError::PositiveOffDiagonal(i, j));
                } else if (c == 0) != (matrix[j][i] == 0) {
                    return Err(CartanError::AsymmetricZero(i, j));
                }
            }
        }
        Ok(Self { entries: matrix })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// The same matrix read in the opposite convention.
    pub fn transposed(&self) -> Self {
        Self { entries: linalg::transpose(&self.entries) }
    }

    /// `C[i][j]·C[j][i]`, the number of lines joining `i` and `j` in the
    /// Dynkin diagram when the matrix is of finite type.
    pub fn bond(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j] * self.entries[j][i]
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.size()).filter(move |&j| j != i && self.entries[i][j] != 0)
    }

    /// Connected components of the Dynkin graph, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for j in self.neighbors(i) {
                    if !seen[j] {
                        seen[j] = true;
                        comp.push(j);
                        queue.push_back(j);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Principal submatrix on `nodes`, in the given order.
    pub fn submatrix(&self, nodes: &[usize]) -> Vec<Vec<i64>> {
        nodes
            .iter()
            .map(|&i| nodes.iter().map(|&j| self.entries[i][j]).collect())
            .collect()
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Gcm) -> Gcm {
        let (a, b) = (self.size(), other.size());
        let mut m = vec![vec![0; a + b]; a + b];
        for i in 0..a {
            m[i][..a].copy_from_slice(&self.entries[i]);
        }
        for i in 0..b {
            m[a + i][a..].copy_from_slice(&other.entries[i]);
        }
        Gcm { entries: m }
    }

    /// Relabels nodes: entry `(i, j)` of the result is `C[perm[i]][perm[j]]`.
    pub fn permuted(&self, perm: &[usize]) -> Gcm {
        Gcm { entries: self.submatrix(perm) }
    }
}

impl fmt::Display for Gcm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| format!("[{}]", r.iter().map(i64::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Solves for a symmetrizer when one exists: positive integers `d` with
/// `C[i][j]·d[j] = C[j][i]·d[i]`, normalized to gcd 1 per component.
pub(crate) fn symmetrize(c: &Gcm) -> Option<Vec<i64>> {
    let n = c.size();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    for comp in c.components() {
        d[comp[0]] = Some(Ratio::from_integer(1));
        let mut queue = VecDeque::from([comp[0]]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].expect("visited");
            for j in c.neighbors(i) {
                let dj = di * Ratio::new(c.get(j, i), c.get(i, j));
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        queue.push_back(j);
                    }
                    Some(existing) if existing != dj => return None,
                    Some(_) => {}
                }
            }
        }
        let lcm = comp.iter().fold(1i64, |acc, &i| acc.lcm(d[i].unwrap().denom()));
        let ints: Vec<i64> = comp.iter().map(|&i| (d[i].unwrap() * lcm).to_integer()).collect();
        let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        for (&i, x) in comp.iter().zip(ints) {
            d[i] = Some(Ratio::from_integer(x / g));
        }
    }
    Some(d.into_iter().map(|x| x.unwrap().to_integer()).collect())
}

/// Exact positive-definiteness test.
///
/// A GCM is of finite type when it is symmetrizable and its leading
/// principal minors are all positive. For a symmetrizable matrix the minors
/// of `C` and of the symmetric `C·diag(d)` have the same sign, so Sylvester's
/// criterion applies.
pub fn is_finite_type(c: &Gcm) -> bool {
    if symmetrize(c).is_none() {
        return false;
    }
    let minors = linalg::leading_principal_minors(c.rows());
    minors.len() == c.size() && minors.iter().all(|&m| m > 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LengthClass {
    #[serde(rename = "short")]
    Short,
    #[serde(rename = "long")]
    Long,
}

/// Squared lengths of the simple roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Symmetrizer {
    /// `d[i]` is the squared length of `α_i`, scaled so that the shortest
    /// root of each component has `d = 1`. `C·diag(d)` is symmetric and
    /// equals twice the Gram matrix of the simple roots.
    pub d: Vec<i64>,
}

impl Symmetrizer {
    pub fn length_class(&self, i: usize) -> LengthClass {
        if self.d[i] == 1 {
            LengthClass::Short
        } else {
            LengthClass::Long
        }
    }

    /// `(α_i, α_j)` doubled: `C[i][j]·d[j]`.
    pub fn doubled_inner(&self, c: &Gcm, i: usize, j: usize) -> i64 {
        c.get(i, j) * self.d[j]
    }
}

pub fn symmetrizer(c: &Gcm) -> Result<Symmetrizer, CartanError> {
    if !is_finite_type(c) {
        return Err(CartanError::NotFiniteType);
    }
    Ok(Symmetrizer { d: symmetrize(c).expect("finite type is symmetrizable") })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] =
        [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G];

    pub fn admits_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = CartanError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            _ => Err(CartanError::BadTypeName(s.to_string())),
        }
    }
}

/// One irreducible component of a finite type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
    /// `nodes[k]` is the input index playing the role of catalog node `k`.
    pub nodes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynkinType {
    pub components: Vec<Component>,
}

impl DynkinType {
    /// The sorted multiset of `(family, rank)` pairs, forgetting node maps.
    pub fn signature(&self) -> Vec<(Family, usize)> {
        let mut s: Vec<_> = self.components.iter().map(|c| (c.family, c.rank)).collect();
        s.sort_unstable();
        s
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    /// Parses names like `A2`, `G2`, `A1xA1` or `B3+G2`.
    pub fn parse(name: &str) -> Result<Vec<(Family, usize)>, CartanError> {
        let bad = || CartanError::BadTypeName(name.to_string());
        let mut out = Vec::new();
        for part in name.split(['x', '+', '*']) {
            let part = part.trim();
            let mut chars = part.chars();
            let family: Family = chars.next().ok_or_else(bad)?.to_string().parse().map_err(|_| bad())?;
            let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
            if !family.admits_rank(rank) {
                return Err(CartanError::InvalidType(family, rank));
            }
            out.push((family, rank));
        }
        Ok(out)
    }

    /// Block-diagonal catalog matrix for a list of components, in order.
    pub fn catalog_matrix(parts: &[(Family, usize)]) -> Result<Gcm, CartanError> {
        let mut iter = parts.iter();
        let &(f, r) = iter.next().ok_or(CartanError::Empty)?;
        let mut m = catalog(f, r)?;
        for &(f, r) in iter {
            m = m.direct_sum(&catalog(f, r)?);
        }
        Ok(m)
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> =
            self.components.iter().map(|c| format!("{}{}", c.family, c.rank)).collect();
        write!(f, "{}", names.join("x"))
    }
}

/// Edge list and squared lengths of the Bourbaki diagram.
fn bourbaki_diagram(family: Family, n: usize) -> (Vec<(usize, usize)>, Vec<i64>) {
    let chain = |len: usize| (0..len.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match family {
        Family::A => (chain(n), vec![1; n]),
        Family::B => {
            let mut l = vec![2; n];
            l[n - 1] = 1;
            (chain(n), l)
        }
        Family::C => {
            let mut l = vec![1; n];
            l[n - 1] = 2;
            (chain(n), l)
        }
        Family::D => {
            let mut e = chain(n - 1);
            e.push((n - 3, n - 1));
            (e, vec![1; n])
        }
        Family::E => {
            let mut e = vec![(0, 2), (1, 3)];
            e.extend((2..n - 1).map(|i| (i, i + 1)));
            (e, vec![1; n])
        }
        Family::F => (chain(4), vec![2, 2, 1, 1]),
        Family::G => (chain(2), vec![1, 3]),
    }
}

/// The standard Cartan matrix of an irreducible finite type.
pub fn catalog(family: Family, rank: usize) -> Result<Gcm, CartanError> {
    if !family.admits_rank(rank) {
        return Err(CartanError::InvalidType(family, rank));
    }
    let (edges, len) = bourbaki_diagram(family, rank);
    let mut m = linalg::identity(rank);
    for row in m.iter_mut() {
        for x in row.iter_mut() {
            *x *= 2;
        }
    }
    for (i, j) in edges {
        // ⟨α_i, α_j∨⟩ = 2(α_i,α_j)/|α_j|², and 2(α_i,α_j) = -max(|α_i|²,|α_j|²)
        let top = len[i].max(len[j]);
        m[i][j] = -top / len[j];
        m[j][i] = -top / len[i];
    }
    Gcm::new(m)
}

/// Every irreducible catalog type of rank at most `max_rank`, each listed
/// once (B2 stands for C2).
pub fn catalog_types(max_rank: usize) -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for rank in 1..=max_rank {
            if family.admits_rank(rank) {
                out.push((family, rank));
            }
        }
    }
    out
}

/// Decomposes a finite-type matrix into catalog components with node maps.
pub fn classify(c: &Gcm) -> Result<DynkinType, CartanError> {
    let sym = symmetrizer(c)?;
    let mut components = Vec::new();
    for nodes in c.components() {
        let comp = classify_component(c, &sym, &nodes)?;
        let expected = catalog(comp.family, comp.rank)?;
        if c.submatrix(&comp.nodes) != expected.rows() {
            return Err(CartanError::NotFiniteType);
        }
        components.push(comp);
    }
    Ok(DynkinType { components })
}

/// Walks a path from `start` away from `avoid`, never revisiting.
fn walk(c: &Gcm, start: usize, avoid: usize) -> Vec<usize> {
    let mut path = vec![start];
    let (mut prev, mut cur) = (avoid, start);
    while let Some(next) = c.neighbors(cur).find(|&j| j != prev) {
        path.push(next);
        prev = cur;
        cur = next;
    }
    path
}

/// A simple path through a component with no branch node, from `start`.
fn chain_from(c: &Gcm, start: usize) -> Vec<usize> {
    walk(c, start, usize::MAX)
}

fn classify_component(
    c: &Gcm,
    sym: &Symmetrizer,
    nodes: &[usize],
) -> Result<Component, CartanError> {
    let n = nodes.len();
    let degree = |i: usize| c.neighbors(i).count();
    let make = |family, order: Vec<usize>| Ok(Component { family, rank: order.len(), nodes: order });

    if n == 1 {
        return make(Family::A, nodes.to_vec());
    }
    let mut max_bond = 0;
    let mut heavy = None;
    for &i in nodes {
        for j in c.neighbors(i) {
            if c.bond(i, j) > max_bond {
                max_bond = c.bond(i, j);
                heavy = Some((i, j));
            }
        }
    }
    let leaves: Vec<usize> = nodes.iter().copied().filter(|&i| degree(i) == 1).collect();
    let branch: Vec<usize> = nodes.iter().copied().filter(|&i| degree(i) >= 3).collect();

    match max_bond {
        3 => {
            let (a, b) = heavy.unwrap();
            let (short, long) = if sym.d[a] < sym.d[b] { (a, b) } else { (b, a) };
            make(Family::G, vec![short, long])
        }
        2 => {
            let (a, b) = heavy.unwrap();
            let (long, short) = if sym.d[a] > sym.d[b] { (a, b) } else { (b, a) };
            if n == 2 {
                return make(Family::B, vec![long, short]);
            }
            if !branch.is_empty() || leaves.len() != 2 {
                return Err(CartanError::NotFiniteType);
            }
            if n == 4 && degree(long) == 2 && degree(short) == 2 {
                // F4: long end first
                let mut order = chain_from(c, leaves[0]);
                if order.iter().position(|&x| x == long) > order.iter().position(|&x| x == short) {
                    order.reverse();
                }
                return make(Family::F, order);
            }
            let (end, family) = if degree(short) == 1 {
                (short, Family::B)
            } else if degree(long) == 1 {
                (long, Family::C)
            } else {
                return Err(CartanError::NotFiniteType);
            };
            let other = *leaves.iter().find(|&&x| x != end).unwrap();
            make(family, chain_from(c, other))
        }
        1 => {
            if branch.is_empty() {
                if leaves.len() != 2 {
                    return Err(CartanError::NotFiniteType);
                }
                return make(Family::A, chain_from(c, leaves[0].min(leaves[1])));
            }
            if branch.len() != 1 || degree(branch[0]) != 3 {
                return Err(CartanError::NotFiniteType);
            }
            let b = branch[0];
            let mut arms: Vec<Vec<usize>> = c.neighbors(b).map(|s| walk(c, s, b)).collect();
            arms.sort_by_key(|arm| (arm.len(), arm[0]));
            let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
            match lens.as_slice() {
                [1, 1, _] => {
                    let mut order: Vec<usize> = arms[2].iter().rev().copied().collect();
                    order.push(b);
                    if n == 4 {
                        // D4: three equal arms; node 0 is one of them
                        order = vec![arms[0][0], b, arms[1][0], arms[2][0]];
                    } else {
                        order.push(arms[0][0]);
                        order.push(arms[1][0]);
                    }
                    make(Family::D, order)
                }
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => {
                    let mut order = vec![arms[1][1], arms[0][0], arms[1][0], b];
                    order.extend(arms[2].iter().copied());
                    make(Family::E, order)
                }
                _ => Err(CartanError::NotFiniteType),
            }
        }
        _ => Err(CartanError::NotFiniteType),
    }
}
