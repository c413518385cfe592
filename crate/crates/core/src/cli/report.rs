//! JSON documents written by the command line.
//!
//! Every object report carries a `schema` string naming its type and
//! version. All types reject unknown fields when read back, so parsing a
//! document into its type is the schema check.

use serde::{Deserialize, Serialize};

use crate::bottsam::GradedEntry;
use crate::cartan::LengthClass;
use crate::linalg::IntMatrix;
use crate::rootdata::PinnedRootDatum;

pub const CLASSIFY: &str = "flagrec.classify/1";
pub const ROOTS: &str = "flagrec.roots/1";
pub const WEYL: &str = "flagrec.weyl/1";
pub const DATUM: &str = "flagrec.datum/1";
pub const ISOGENY_VALIDATE: &str = "flagrec.isogeny-validate/1";
pub const CHEVALLEY: &str = "flagrec.chevalley/1";
pub const PROPS: &str = "flagrec.props/1";
pub const ERROR: &str = "flagrec.error/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorDetail {
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorReport {
    pub schema: String,
    pub error: ErrorDetail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentReport {
    pub family: String,
    pub rank: usize,
    /// 1-based input indices, in catalog node order.
    pub nodes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifyReport {
    pub schema: String,
    pub matrix: Vec<Vec<i64>>,
    pub gcm: bool,
    pub finite: bool,
    #[serde(rename = "type")]
    pub dynkin: Vec<(String, usize)>,
    pub components: Vec<ComponentReport>,
    pub symmetrizer: Vec<i64>,
    pub positive_roots: Option<usize>,
    /// Dimension of the flag variety, `|Φ₊|`.
    pub dimension: Option<usize>,
    pub weyl_order: Option<u64>,
    pub weyl_enumerated: Option<usize>,
    pub poincare: Option<Vec<u64>>,
    pub skipped: Option<String>,
    pub fundamental_group: Option<Vec<i64>>,
    pub errors: Vec<ErrorDetail>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootEntry {
    pub root: Vec<i64>,
    pub coroot: Vec<i64>,
    pub positive: bool,
    pub length: LengthClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootsReport {
    pub schema: String,
    #[serde(rename = "type")]
    pub dynkin: String,
    pub positive: usize,
    pub roots: Vec<RootEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeylReport {
    pub schema: String,
    #[serde(rename = "type")]
    pub dynkin: String,
    pub order: Option<u64>,
    pub reflections: usize,
    pub longest_length: usize,
    /// 1-based letters; absent when enumeration was skipped.
    pub longest_word: Option<Vec<usize>>,
    pub poincare: Option<Vec<u64>>,
    pub skipped: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumReport {
    pub schema: String,
    #[serde(rename = "type")]
    pub dynkin: String,
    pub fundamental_group: Vec<i64>,
    pub adjoint: PinnedRootDatum,
    pub simply_connected: PinnedRootDatum,
    /// Bases in fundamental-weight coordinates of the lattices between `Q`
    /// and `P`; absent when the fundamental group is too large.
    pub lattices: Option<Vec<IntMatrix>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IsogenyValidateReport {
    pub schema: String,
    pub valid: bool,
    pub p: u64,
    pub q: Vec<u64>,
    pub primitive: bool,
    pub constant: bool,
    pub frobenius_exponent: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealEntry {
    pub kind: String,
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    /// `α + β` for divisibility checks, `2α + β` for closure checks.
    pub result: Vec<i64>,
    pub m: Option<usize>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SteinbergEntry {
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    pub r: usize,
    pub s: usize,
    pub ratio: i64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChevalleyReport {
    pub schema: String,
    #[serde(rename = "type")]
    pub dynkin: String,
    pub p: u64,
    pub checks: Vec<IdealEntry>,
    pub steinberg: Vec<SteinbergEntry>,
    pub violations: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PropCheck {
    #[serde(rename = "type")]
    pub dynkin: String,
    pub property: String,
    pub cases: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PropsReport {
    pub schema: String,
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<PropCheck>,
}

/// Output of `bs-weights`.
pub type GradedReport = Vec<GradedEntry>;
