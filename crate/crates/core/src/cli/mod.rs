//! Command-line front end.
//!
//! [`run`] parses arguments, dispatches to the library and writes one JSON
//! document (or a text rendering of it) to `out`. Simple-root letters and
//! word entries are 1-based here and 0-based everywhere else.
//!
//! Exit codes: 0 success, 1 other failure, 2 valid but not finite type,
//! 3 not a generalized Cartan matrix, 4 unreadable input or arguments.

pub mod report;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::Value;

use crate::bottsam;
use crate::cartan::{self, CartanError, DynkinType, Gcm};
use crate::charformula::EulerData;
use crate::chevalley;
use crate::isogeny::{self, PMorphism};
use crate::linalg;
use crate::rootdata::{self, PinnedRootDatum, RootDatumError};
use crate::roots::{RootSystem, WeightVector};
use crate::weyl::{self, WeylError, WeylGroup};
use crate::Error;

use report::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_NOT_FINITE: i32 = 2;
pub const EXIT_NOT_GCM: i32 = 3;
pub const EXIT_PARSE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "flagrec", version, about = "Cartan matrices, root systems, Weyl groups and root data")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    /// Coordinates against the simple coroots (fundamental weights).
    Coroot,
    /// Coordinates in the simple-root basis.
    Root,
}

#[derive(Debug, Args)]
struct TypeArg {
    /// Dynkin type such as A2, G2 or A1xB3.
    #[arg(long = "type")]
    dynkin: String,
}

#[derive(Debug, Args)]
struct WeightArgs {
    /// Comma-separated coordinates.
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
    #[arg(long, value_enum, default_value_t = Basis::Coroot)]
    basis: Basis,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate and classify a Cartan matrix read as JSON.
    Classify {
        /// Input file; standard input when absent or `-`.
        input: Option<PathBuf>,
        /// Read the matrix in the transposed convention.
        #[arg(long)]
        transpose: bool,
        /// Weyl group enumeration cap.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// List the roots with their coroots and length classes.
    Roots {
        #[command(flatten)]
        t: TypeArg,
    },
    /// Weyl group order, longest element and Poincaré coefficients.
    Weyl {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Graded weights pushed down a Bott–Samelson word.
    BsWeights {
        #[command(flatten)]
        t: TypeArg,
        /// Comma-separated 1-based letters.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[command(flatten)]
        w: WeightArgs,
    },
    /// Weyl dimension of a dominant weight.
    Dim {
        #[command(flatten)]
        t: TypeArg,
        #[command(flatten)]
        w: WeightArgs,
    },
    /// Volume polynomial at a weight, as an exact rational string.
    Vol {
        #[command(flatten)]
        t: TypeArg,
        #[command(flatten)]
        w: WeightArgs,
    },
    /// Adjoint and simply connected data and the lattices between them.
    Datum {
        #[command(flatten)]
        t: TypeArg,
    },
    #[command(subcommand)]
    Isogeny(IsogenyCommand),
    #[command(subcommand)]
    Chevalley(ChevalleyCommand),
    /// Sampled checks of the character-formula symmetries.
    Props {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Largest rank of catalog types to sample.
        #[arg(long, default_value_t = 3)]
        max_rank: usize,
    },
}

#[derive(Debug, Subcommand)]
enum IsogenyCommand {
    /// All special isogenies out of an irreducible type.
    Enumerate {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        p: u64,
    },
    /// Check a p-morphism read from a JSON file.
    Validate {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum ChevalleyCommand {
    /// Structure constants, Steinberg identity and short-root ideal checks.
    Check {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        p: u64,
    },
}

/// A finished command: exit code and the document to print.
struct Outcome {
    code: i32,
    doc: Value,
}

struct Failure {
    code: i32,
    kind: String,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Self { code: EXIT_PARSE, kind: "ParseError".into(), message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self { code: EXIT_OTHER, kind: e.kind(), message: e.to_string() }
    }
}

macro_rules! lib_err {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Error::from(e).into()
            }
        }
    )*};
}

lib_err!(
    CartanError,
    crate::roots::RootError,
    WeylError,
    crate::bottsam::BottSamelsonError,
    crate::charformula::CharFormulaError,
    RootDatumError,
    crate::isogeny::IsogenyError,
    crate::chevalley::ChevalleyError
);

fn to_doc<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("reports serialize")
}

fn ok<T: serde::Serialize>(value: &T) -> Result<Outcome, Failure> {
    Ok(Outcome { code: EXIT_OK, doc: to_doc(value) })
}

fn parse_list(s: &str, what: &str) -> Result<Vec<i64>, Failure> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Failure::parse(format!("bad {what} entry {x:?}"))))
        .collect()
}

fn parse_type(name: &str) -> Result<(String, Gcm), Failure> {
    let parts = DynkinType::parse(name).map_err(|e| Failure::parse(e.to_string()))?;
    let gcm = DynkinType::catalog_matrix(&parts)?;
    let label: Vec<String> = parts.iter().map(|(f, r)| format!("{f}{r}")).collect();
    Ok((label.join("x"), gcm))
}

fn parse_word(s: &str, rank: usize) -> Result<Vec<usize>, Failure> {
    parse_list(s, "word")?
        .into_iter()
        .map(|i| {
            if (1..=rank as i64).contains(&i) {
                Ok(i as usize - 1)
            } else {
                Err(Failure::parse(format!("letter {i} outside 1..={rank}")))
            }
        })
        .collect()
}

fn parse_weight(w: &WeightArgs, c: &Gcm) -> Result<WeightVector, Failure> {
    let coords = parse_list(&w.weight, "weight")?;
    if coords.len() != c.size() {
        return Err(Failure::parse(format!("weight needs {} coordinates, got {}", c.size(), coords.len())));
    }
    Ok(WeightVector(match w.basis {
        Basis::Coroot => coords,
        Basis::Root => linalg::vec_mat(&coords, c.rows()),
    }))
}

fn cap_or_env(cap: Option<usize>) -> usize {
    cap.unwrap_or_else(weyl::cap_from_env)
}

fn skipped_message(cap: usize) -> String {
    format!("Weyl group enumeration skipped: order exceeds cap {cap} (raise --cap or {})", weyl::CAP_ENV)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ClassifyInput {
    Object {
        matrix: Vec<Vec<i64>>,
        #[serde(default)]
        transpose: bool,
    },
    Bare(Vec<Vec<i64>>),
}

fn classify(text: &str, transpose_flag: bool, cap: usize) -> Result<Outcome, Failure> {
    let input: ClassifyInput =
        serde_json::from_str(text).map_err(|e| Failure::parse(format!("expected {{\"matrix\": [[...]]}}: {e}")))?;
    let (matrix, transpose) = match input {
        ClassifyInput::Object { matrix, transpose } => (matrix, transpose || transpose_flag),
        ClassifyInput::Bare(matrix) => (matrix, transpose_flag),
    };
    let mut report = ClassifyReport {
        schema: CLASSIFY.into(),
        matrix: matrix.clone(),
        gcm: false,
        finite: false,
        dynkin: Vec::new(),
        components: Vec::new(),
        symmetrizer: Vec::new(),
        positive_roots: None,
        dimension: None,
        weyl_order: None,
        weyl_enumerated: None,
        poincare: None,
        skipped: None,
        fundamental_group: None,
        errors: Vec::new(),
    };
    let oriented = if transpose && matrix.iter().all(|r| r.len() == matrix.len()) {
        linalg::transpose(&matrix)
    } else {
        matrix
    };
    let c = match Gcm::new(oriented) {
        Ok(c) => c,
        Err(e) => {
            let e = Error::from(e);
            report.errors.push(ErrorDetail { kind: e.kind(), message: e.to_string() });
            return Ok(Outcome { code: EXIT_NOT_GCM, doc: to_doc(&report) });
        }
    };
    report.gcm = true;
    let t = match cartan::classify(&c) {
        Ok(t) => t,
        Err(e) => {
            let e = Error::from(e);
            report.errors.push(ErrorDetail { kind: e.kind(), message: e.to_string() });
            return Ok(Outcome { code: EXIT_NOT_FINITE, doc: to_doc(&report) });
        }
    };
    report.finite = true;
    report.dynkin = t.components.iter().map(|k| (k.family.to_string(), k.rank)).collect();
    report.components = t
        .components
        .iter()
        .map(|k| ComponentReport {
            family: k.family.to_string(),
            rank: k.rank,
            nodes: k.nodes.iter().map(|i| i + 1).collect(),
        })
        .collect();
    report.symmetrizer = cartan::symmetrizer(&c)?.d;
    let rs = RootSystem::new(&c)?;
    report.positive_roots = Some(rs.num_positive());
    report.dimension = Some(rs.num_positive());
    report.weyl_order = u64::try_from(weyl::weyl_order(&t)).ok();
    match WeylGroup::enumerate(&rs, cap) {
        Ok(w) => {
            report.weyl_enumerated = Some(w.order());
            report.poincare = Some(w.poincare());
        }
        Err(WeylError::CapExceeded(_)) | Err(WeylError::RankTooLarge(_)) => {
            report.skipped = Some(skipped_message(cap));
        }
        Err(e) => return Err(e.into()),
    }
    report.fundamental_group = Some(rootdata::fundamental_group(&c)?);
    ok(&report)
}

fn roots(name: &str) -> Result<Outcome, Failure> {
    let (label, c) = parse_type(name)?;
    let rs = RootSystem::new(&c)?;
    ok(&RootsReport {
        schema: ROOTS.into(),
        dynkin: label,
        positive: rs.num_positive(),
        roots: rs
            .roots()
            .iter()
            .map(|r| RootEntry { root: r.coords.clone(), coroot: r.coroot.clone(), positive: r.positive, length: r.length })
            .collect(),
    })
}

fn weyl_report(name: &str, cap: usize) -> Result<Outcome, Failure> {
    let (label, c) = parse_type(name)?;
    let rs = RootSystem::new(&c)?;
    let order = u64::try_from(weyl::weyl_order(&cartan::classify(&c)?)).ok();
    let mut report = WeylReport {
        schema: WEYL.into(),
        dynkin: label,
        order,
        reflections: rs.num_positive(),
        longest_length: rs.num_positive(),
        longest_word: None,
        poincare: None,
        skipped: None,
    };
    match WeylGroup::enumerate(&rs, cap) {
        Ok(w) => {
            report.order = Some(w.order() as u64);
            report.reflections = w.reflections().len();
            report.longest_length = w.longest().length();
            report.longest_word = Some(weyl::reduced_word(&rs, w.longest()).iter().map(|i| i + 1).collect());
            report.poincare = Some(w.poincare());
        }
        Err(WeylError::CapExceeded(_)) | Err(WeylError::RankTooLarge(_)) => {
            report.skipped = Some(skipped_message(cap));
        }
        Err(e) => return Err(e.into()),
    }
    ok(&report)
}

fn bs_weights(name: &str, word: &str, w: &WeightArgs) -> Result<Outcome, Failure> {
    let (_, c) = parse_type(name)?;
    let word = parse_word(word, c.size())?;
    let lambda = parse_weight(w, &c)?;
    let result = bottsam::pushforward_word(&c, &word, &lambda)?;
    let entries: GradedReport = result.to_entries();
    ok(&entries)
}

fn dim(name: &str, w: &WeightArgs) -> Result<Outcome, Failure> {
    let (_, c) = parse_type(name)?;
    let lambda = parse_weight(w, &c)?;
    let d = EulerData::new(&RootSystem::new(&c)?).weyl_dim(&lambda)?;
    let doc: Value = serde_json::from_str(&d.to_string()).expect("integer literal");
    Ok(Outcome { code: EXIT_OK, doc })
}

fn vol(name: &str, w: &WeightArgs) -> Result<Outcome, Failure> {
    let (_, c) = parse_type(name)?;
    let d = parse_weight(w, &c)?;
    let v = EulerData::new(&RootSystem::new(&c)?).vol(&d)?;
    Ok(Outcome { code: EXIT_OK, doc: Value::String(v.to_string()) })
}

fn datum(name: &str) -> Result<Outcome, Failure> {
    let (label, c) = parse_type(name)?;
    let lattices = match rootdata::intermediate_lattices(&c) {
        Ok(l) => Some(l),
        Err(RootDatumError::FundamentalGroupTooLarge(_)) => None,
        Err(e) => return Err(e.into()),
    };
    ok(&DatumReport {
        schema: DATUM.into(),
        dynkin: label,
        fundamental_group: rootdata::fundamental_group(&c)?,
        adjoint: PinnedRootDatum::adjoint(&c)?,
        simply_connected: PinnedRootDatum::simply_connected(&c)?,
        lattices,
    })
}

fn irreducible(name: &str) -> Result<(cartan::Family, usize), Failure> {
    match DynkinType::parse(name).map_err(|e| Failure::parse(e.to_string()))?.as_slice() {
        [(f, r)] => Ok((*f, *r)),
        _ => Err(Failure::parse(format!("{name} is not irreducible"))),
    }
}

fn isogeny_enumerate(name: &str, p: u64) -> Result<Outcome, Failure> {
    let (f, r) = irreducible(name)?;
    ok(&isogeny::enumerate_special(f, r, p))
}

fn isogeny_validate(text: &str) -> Result<Outcome, Failure> {
    let mut value: Value = serde_json::from_str(text).map_err(|e| Failure::parse(e.to_string()))?;
    if let Some(obj) = value.as_object_mut() {
        obj.remove("schema");
    }
    let phi: PMorphism = serde_json::from_value(value).map_err(|e| Failure::parse(e.to_string()))?;
    let (_, k) = isogeny::factor_primitive_constant(&phi)?;
    ok(&IsogenyValidateReport {
        schema: ISOGENY_VALIDATE.into(),
        valid: true,
        p: phi.p,
        q: phi.q.clone(),
        primitive: phi.is_primitive(),
        constant: phi.is_constant(),
        frobenius_exponent: k,
    })
}

fn chevalley_check(name: &str, p: u64) -> Result<Outcome, Failure> {
    let (label, c) = parse_type(name)?;
    let rs = RootSystem::new(&c)?;
    let coords = |k: usize| rs.root(k).coords.clone();
    let report = chevalley::short_ideal_check(&rs, p)?;
    let checks = report
        .checks
        .iter()
        .map(|check| match *check {
            chevalley::IdealCheck::Divisibility { alpha, beta, m, ok } => {
                let sum: Vec<i64> = coords(alpha).iter().zip(coords(beta)).map(|(x, y)| x + y).collect();
                IdealEntry { kind: "divisibility".into(), alpha: coords(alpha), beta: coords(beta), result: sum, m: Some(m), ok }
            }
            chevalley::IdealCheck::Closure { alpha, beta, sum, ok } => {
                IdealEntry { kind: "closure".into(), alpha: coords(alpha), beta: coords(beta), result: coords(sum), m: None, ok }
            }
        })
        .collect();
    let mut steinberg = Vec::new();
    for a in 0..rs.len() {
        for b in 0..rs.len() {
            if let Ok(s) = chevalley::steinberg_check(&rs, a, b) {
                steinberg.push(SteinbergEntry {
                    alpha: coords(a),
                    beta: coords(b),
                    r: s.r,
                    s: s.s,
                    ratio: s.ratio,
                    holds: s.holds,
                });
            }
        }
    }
    let violations = report.violations + steinberg.iter().filter(|s| !s.holds).count();
    ok(&ChevalleyReport { schema: CHEVALLEY.into(), dynkin: label, p, checks, steinberg, violations })
}

/// Random weights and group elements against `χ^T ∘ s_i = −χ^T` and
/// `vol ∘ w = det(w) vol`.
fn props(seed: u64, samples: usize, max_rank: usize) -> Result<Outcome, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    for (f, n) in cartan::catalog_types(max_rank) {
        let c = cartan::catalog(f, n)?;
        let rs = RootSystem::new(&c)?;
        let e = EulerData::new(&rs);
        let w = WeylGroup::enumerate(&rs, weyl::DEFAULT_CAP)?;
        let label = format!("{f}{n}");
        let mut anti = 0;
        let mut equi = 0;
        for _ in 0..samples {
            let d = WeightVector((0..n).map(|_| rng.gen_range(-6..=6)).collect());
            let i = rng.gen_range(0..n);
            let reflected = weyl::reflect(&c, i, &d)?;
            if e.euler_char_shifted(&reflected)? != -e.euler_char_shifted(&d)? {
                anti += 1;
            }
            let g = w.element(&rs, rng.gen_range(0..w.order()));
            let lhs = e.vol(&g.act_on_weight(&rs, &d))?;
            let rhs = e.vol(&d)?;
            let rhs = if g.length() % 2 == 0 { rhs } else { -rhs };
            if lhs != rhs {
                equi += 1;
            }
        }
        checks.push(PropCheck { dynkin: label.clone(), property: "chi_antisymmetry".into(), cases: samples, failures: anti });
        checks.push(PropCheck { dynkin: label, property: "vol_equivariance".into(), cases: samples, failures: equi });
    }
    let failed = checks.iter().any(|c| c.failures > 0);
    let doc = to_doc(&PropsReport { schema: PROPS.into(), seed, samples, checks });
    Ok(Outcome { code: if failed { EXIT_OTHER } else { EXIT_OK }, doc })
}

fn read_input(path: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).map_err(|e| Failure::parse(format!("{}: {e}", p.display())))?;
        }
        _ => {
            stdin.read_to_string(&mut text).map_err(|e| Failure::parse(e.to_string()))?;
        }
    }
    Ok(text)
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Classify { input, transpose, cap } => {
            let text = read_input(input.as_ref(), stdin)?;
            classify(&text, *transpose, cap_or_env(*cap))
        }
        Command::Roots { t } => roots(&t.dynkin),
        Command::Weyl { t, cap } => weyl_report(&t.dynkin, cap_or_env(*cap)),
        Command::BsWeights { t, word, w } => bs_weights(&t.dynkin, word, w),
        Command::Dim { t, w } => dim(&t.dynkin, w),
        Command::Vol { t, w } => vol(&t.dynkin, w),
        Command::Datum { t } => datum(&t.dynkin),
        Command::Isogeny(IsogenyCommand::Enumerate { t, p }) => isogeny_enumerate(&t.dynkin, *p),
        Command::Isogeny(IsogenyCommand::Validate { file }) => isogeny_validate(&read_input(Some(file), stdin)?),
        Command::Chevalley(ChevalleyCommand::Check { t, p }) => chevalley_check(&t.dynkin, *p),
        Command::Props { seed, samples, max_rank } => props(*seed, *samples, *max_rank),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// Plain-text rendering: `key: value` lines for objects, and arrays of
/// objects as aligned tables.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Object(map) => {
            let width = map.keys().map(String::len).max().unwrap_or(0);
            for (k, x) in map {
                match x {
                    Value::Array(items) if items.first().is_some_and(Value::is_object) => {
                        out.push_str(&format!("{k}:\n"));
                        for line in render_text(x).lines() {
                            out.push_str(&format!("  {line}\n"));
                        }
                    }
                    Value::Object(_) => {
                        out.push_str(&format!("{k}:\n"));
                        for line in render_text(x).lines() {
                            out.push_str(&format!("  {line}\n"));
                        }
                    }
                    _ => out.push_str(&format!("{k:width$}  {}\n", scalar(x))),
                }
            }
        }
        Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
            let keys: Vec<String> = items[0].as_object().expect("object").keys().cloned().collect();
            let rows: Vec<Vec<String>> =
                items.iter().map(|it| keys.iter().map(|k| scalar(&it[k.as_str()])).collect()).collect();
            let widths: Vec<usize> = keys
                .iter()
                .enumerate()
                .map(|(j, k)| rows.iter().map(|r| r[j].len()).chain([k.len()]).max().unwrap_or(0))
                .collect();
            let fmt_row = |cells: Vec<&str>| -> String {
                let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:w$}")).collect();
                format!("{}\n", padded.join("  ").trim_end())
            };
            out.push_str(&fmt_row(keys.iter().map(String::as_str).collect()));
            for r in &rows {
                out.push_str(&fmt_row(r.iter().map(String::as_str).collect()));
            }
        }
        other => out.push_str(&format!("{}\n", scalar(other))),
    }
    out
}

/// Runs the command line on `args` (including the program name) and
/// returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let is_info = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let sink: &mut dyn Write = if is_info { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if is_info { EXIT_OK } else { EXIT_PARSE };
        }
    };
    let (code, doc) = match dispatch(&cli, stdin) {
        Ok(o) => (o.code, o.doc),
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            let report = ErrorReport { schema: ERROR.into(), error: ErrorDetail { kind: f.kind, message: f.message } };
            (f.code, to_doc(&report))
        }
    };
    if let Some(msg) = doc.get("skipped").and_then(Value::as_str) {
        let _ = writeln!(err, "note: {msg}");
    }
    let text = match cli.format {
        Format::Json => format!("{doc}\n"),
        Format::Text => render_text(&doc),
    };
    let _ = out.write_all(text.as_bytes());
    code
}

/// Entry point for the binary.
pub fn main() -> i32 {
    run(std::env::args_os(), &mut std::io::stdin(), &mut std::io::stdout(), &mut std::io::stderr())
}
