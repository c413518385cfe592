//! Magnitudes of Chevalley structure constants and the root-length
//! identities behind the short-root ideal.
//!
//! Roots are given by index into a [`RootSystem`]. Lengths are the
//! normalized squared lengths stored on each root (short = 1).

use serde::Serialize;
use thiserror::Error;

use crate::cartan::LengthClass;
use crate::roots::RootSystem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChevalleyError {
    #[error("α + β is not a root")]
    SumNotARoot,
    #[error("hypotheses not met: {0}")]
    HypothesesNotMet(&'static str),
    #[error("root system has a single root length")]
    SimplyLaced,
}

fn sum_index(rs: &RootSystem, a: usize, b: usize) -> Option<usize> {
    let sum: Vec<i64> = rs.root(a).coords.iter().zip(&rs.root(b).coords).map(|(x, y)| x + y).collect();
    rs.find(&sum)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureConstant {
    pub alpha: usize,
    pub beta: usize,
    /// `r + 1` for the `α`-string through `β`.
    pub m: usize,
}

/// `|[e_α, e_β]| = m e_{α+β}` with `m` the smallest positive integer such
/// that `β − mα` is not a root.
pub fn m_const(rs: &RootSystem, alpha: usize, beta: usize) -> Result<StructureConstant, ChevalleyError> {
    sum_index(rs, alpha, beta).ok_or(ChevalleyError::SumNotARoot)?;
    let string = rs.root_string(&rs.root(beta).coords, alpha).expect("β is a root");
    Ok(StructureConstant { alpha, beta, m: string.r + 1 })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SteinbergReport {
    pub alpha: usize,
    pub beta: usize,
    pub r: usize,
    pub s: usize,
    /// `long(α + β) / long(α)`.
    pub ratio: i64,
    pub holds: bool,
}

/// Tests `r + 1 = s · long(α+β) / long(α)` for `α` short and `α + β` a long
/// root.
pub fn steinberg_check(rs: &RootSystem, alpha: usize, beta: usize) -> Result<SteinbergReport, ChevalleyError> {
    let sum = sum_index(rs, alpha, beta).ok_or(ChevalleyError::HypothesesNotMet("α + β is not a root"))?;
    if rs.root(alpha).length != LengthClass::Short || rs.roots().iter().all(|r| r.length == LengthClass::Short) {
        return Err(ChevalleyError::HypothesesNotMet("α is not a short root of a doubly laced system"));
    }
    if rs.root(sum).length != LengthClass::Long {
        return Err(ChevalleyError::HypothesesNotMet("α + β is not long"));
    }
    let string = rs.root_string(&rs.root(beta).coords, alpha).expect("β is a root");
    let ratio = rs.root(sum).norm / rs.root(alpha).norm;
    Ok(SteinbergReport {
        alpha,
        beta,
        r: string.r,
        s: string.s,
        ratio,
        holds: (string.r as i64 + 1) == string.s as i64 * ratio,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IdealCheck {
    /// `α` short, `α + β` long: `p | m_{αβ}`.
    Divisibility { alpha: usize, beta: usize, m: usize, ok: bool },
    /// `α, β` short, `β ≠ ±α`, `2α + β` a root: it must be long.
    Closure { alpha: usize, beta: usize, sum: usize, ok: bool },
}

impl IdealCheck {
    pub fn ok(&self) -> bool {
        match self {
            IdealCheck::Divisibility { ok, .. } | IdealCheck::Closure { ok, .. } => *ok,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShortIdealReport {
    pub p: u64,
    pub checks: Vec<IdealCheck>,
    pub violations: usize,
}

/// Runs both families of checks over all root pairs.
pub fn short_ideal_check(rs: &RootSystem, p: u64) -> Result<ShortIdealReport, ChevalleyError> {
    let short = |k: usize| rs.root(k).length == LengthClass::Short;
    if (0..rs.len()).all(short) {
        return Err(ChevalleyError::SimplyLaced);
    }
    let mut checks = Vec::new();
    for a in (0..rs.len()).filter(|&a| short(a)) {
        for b in 0..rs.len() {
            if let Some(sum) = sum_index(rs, a, b) {
                if !short(sum) {
                    let m = m_const(rs, a, b).expect("sum is a root").m;
                    checks.push(IdealCheck::Divisibility { alpha: a, beta: b, m, ok: m as u64 % p == 0 });
                }
            }
            if short(b) && b != a && b != rs.negate(a) {
                let coords: Vec<i64> =
                    rs.root(a).coords.iter().zip(&rs.root(b).coords).map(|(x, y)| 2 * x + y).collect();
                if let Some(sum) = rs.find(&coords) {
                    checks.push(IdealCheck::Closure { alpha: a, beta: b, sum, ok: !short(sum) });
                }
            }
        }
    }
    let violations = checks.iter().filter(|c| !c.ok()).count();
    Ok(ShortIdealReport { p, checks, violations })
}
