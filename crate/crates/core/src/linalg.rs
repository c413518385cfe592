//! Exact integer and rational matrix routines used across the crate.
//!
//! Matrices are dense `Vec<Vec<_>>` in row-major order. Everything here is
//! small (rank at most a few dozen), so clarity wins over blocking or
//! in-place tricks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<i64>>;
pub type RatMatrix = Vec<Vec<BigRational>>;

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn transpose(m: &[Vec<i64>]) -> IntMatrix {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j]).collect())
        .collect()
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> IntMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            debug_assert_eq!(row.len(), inner);
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Row vector times matrix.
pub fn vec_mat(v: &[i64], m: &[Vec<i64>]) -> Vec<i64> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| v.iter().zip(m).map(|(x, row)| x * row[j]).sum())
        .collect()
}

/// Matrix times column vector.
pub fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Leading principal minors of `m`, computed by fraction-free (Bareiss)
/// elimination without pivoting. The `k`-th pivot of that elimination is
/// exactly the `k`-th leading minor. Stops early at the first zero minor,
/// so the returned vector may be shorter than `m.len()`; its last entry is
/// then `0`.
pub fn leading_principal_minors(m: &[Vec<i64>]) -> Vec<i128> {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|row| row.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mut minors = Vec::with_capacity(n);
    let mut prev = 1i128;
    for k in 0..n {
        let pivot = a[k][k];
        minors.push(pivot);
        if pivot == 0 {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = pivot;
    }
    minors
}

/// Exact determinant by Bareiss elimination with row pivoting.
pub fn determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|row| row.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Smith normal form `U * A * V = D` of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Diagonal entries of `D`, nonnegative, each dividing the next.
    pub diagonal: Vec<i64>,
    /// Unimodular row transform.
    pub u: IntMatrix,
    /// Unimodular column transform.
    pub v: IntMatrix,
}

impl SmithForm {
    /// Invariant factors greater than one.
    pub fn nontrivial_factors(&self) -> Vec<i64> {
        self.diagonal.iter().copied().filter(|&d| d != 1).collect()
    }
}

pub fn smith_normal_form(m: &[Vec<i64>]) -> SmithForm {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a: IntMatrix = m.to_vec();
    let mut u = identity(rows);
    let mut v = identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j] != 0
                        && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            a.swap(t, pi);
            u.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }

            let mut clean = true;
            for i in t + 1..rows {
                let q = Integer::div_floor(&a[i][t], &a[t][t]);
                if q != 0 {
                    for j in 0..cols {
                        a[i][j] -= q * a[t][j];
                    }
                    for j in 0..rows {
                        u[i][j] -= q * u[t][j];
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = Integer::div_floor(&a[t][j], &a[t][t]);
                if q != 0 {
                    for i in 0..rows {
                        a[i][j] -= q * a[i][t];
                    }
                    for i in 0..cols {
                        v[i][j] -= q * v[i][t];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into row t and retry
            let offending = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| a[i][j] % a[t][t] != 0));
            match offending {
                Some(i) => {
                    for j in 0..cols {
                        a[t][j] += a[i][j];
                    }
                    for j in 0..rows {
                        u[t][j] += u[i][j];
                    }
                }
                None => break,
            }
        }
        if a[t][t] < 0 {
            for j in 0..cols {
                a[t][j] = -a[t][j];
            }
            for j in 0..rows {
                u[t][j] = -u[t][j];
            }
        }
    }
    let diagonal = (0..rows.min(cols)).map(|i| a[i][i]).collect();
    SmithForm { diagonal, u, v }
}

/// Row-style Hermite normal form of the lattice spanned by `rows`; returns
/// the nonzero rows, which form a basis of that lattice.
pub fn hermite_basis(rows: &[Vec<i64>]) -> IntMatrix {
    let mut a: IntMatrix = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        // gcd-combine everything below into row r
        loop {
            let pivot = (r..a.len())
                .filter(|&i| a[i][c] != 0)
                .min_by_key(|&i| a[i][c].abs());
            let Some(p) = pivot else { break };
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..a.len() {
                if a[i][c] != 0 {
                    let q = Integer::div_floor(&a[i][c], &a[r][c]);
                    let (head, tail) = a.split_at_mut(i);
                    for (x, y) in tail[0].iter_mut().zip(&head[r]) {
                        *x -= q * y;
                    }
                    done &= a[i][c] == 0;
                }
            }
            if done {
                break;
            }
        }
        if a[r][c] == 0 {
            continue;
        }
        if a[r][c] < 0 {
            for x in a[r].iter_mut() {
                *x = -*x;
            }
        }
        for i in 0..r {
            let q = Integer::div_floor(&a[i][c], &a[r][c]);
            if q != 0 {
                let (head, tail) = a.split_at_mut(r);
                for (x, y) in head[i].iter_mut().zip(&tail[0]) {
                    *x -= q * y;
                }
            }
        }
        r += 1;
    }
    a.truncate(r);
    a.retain(|row| row.iter().any(|&x| x != 0));
    a
}

pub fn to_rational(m: &[Vec<i64>]) -> RatMatrix {
    m.iter()
        .map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect()
}

/// Inverse over the rationals, `None` when singular.
pub fn rational_inverse(m: &[Vec<i64>]) -> Option<RatMatrix> {
    let n = m.len();
    let mut a = to_rational(m);
    let mut inv = to_rational(&identity(n));
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(k, p);
        inv.swap(k, p);
        let pivot = a[k][k].clone();
        for j in 0..n {
            a[k][j] = &a[k][j] / &pivot;
            inv[k][j] = &inv[k][j] / &pivot;
        }
        for i in 0..n {
            if i != k && !a[i][k].is_zero() {
                let f = a[i][k].clone();
                for j in 0..n {
                    let t = &f * &a[k][j];
                    a[i][j] -= t;
                    let t = &f * &inv[k][j];
                    inv[i][j] -= t;
                }
            }
        }
    }
    Some(inv)
}

/// Converts a rational matrix to integers when every entry is integral.
pub fn integral(m: &RatMatrix) -> Option<IntMatrix> {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    if x.is_integer() {
                        i64::try_from(x.to_integer()).ok()
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect()
}

pub fn rat_mul(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(BigRational::zero(), |acc, k| acc + &row[k] * &b[k][j])
                })
                .collect()
        })
        .collect()
}

/// Inverse of a unimodular integer matrix.
pub fn unimodular_inverse(m: &[Vec<i64>]) -> Option<IntMatrix> {
    if determinant(m).abs() != 1 {
        return None;
    }
    integral(&rational_inverse(m)?)
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(big(num), big(den))
}

pub fn is_one(x: &BigRational) -> bool {
    x.is_one()
}

pub fn is_positive(x: &BigRational) -> bool {
    x.is_positive()
}
