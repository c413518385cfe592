//! Independent oracles shared by the integration and acceptance tests.
//! Nothing here calls the library code it is used to check.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use num_rational::Ratio;

use flagrec::bottsam;
use flagrec::cartan::Family;
use flagrec::roots::{RootSystem, WeightVector};
use flagrec::rootdata::PinnedRootDatum;

pub type Q = Ratio<i64>;

/// Irreducible types of rank at most `max` in catalog order, from a
/// hand-written list of admissible ranks.
pub fn types_up_to(max: usize) -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    for n in 1..=max {
        out.push((Family::A, n));
    }
    for n in 2..=max {
        out.push((Family::B, n));
    }
    for n in 3..=max {
        out.push((Family::C, n));
    }
    for n in 4..=max {
        out.push((Family::D, n));
    }
    for n in 6..=max.min(8) {
        out.push((Family::E, n));
    }
    if max >= 4 {
        out.push((Family::F, 4));
    }
    if max >= 2 {
        out.push((Family::G, 2));
    }
    out
}

pub fn positive_root_count(f: Family, n: usize) -> usize {
    match f {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => [36, 63, 120][n - 6],
        Family::F => 24,
        Family::G => 6,
    }
}

pub fn weyl_order_table(f: Family, n: usize) -> u128 {
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    match f {
        Family::A => fact(n + 1),
        Family::B | Family::C => (1u128 << n) * fact(n),
        Family::D => (1u128 << (n - 1)) * fact(n),
        Family::E => [51_840, 2_903_040, 696_729_600][n - 6],
        Family::F => 1152,
        Family::G => 12,
    }
}

/// Invariant factors (greater than one) of the fundamental group.
pub fn fundamental_group_table(f: Family, n: usize) -> Vec<i64> {
    match f {
        Family::A => vec![n as i64 + 1],
        Family::B | Family::C => vec![2],
        Family::D if n % 2 == 0 => vec![2, 2],
        Family::D => vec![4],
        Family::E if n == 6 => vec![3],
        Family::E if n == 7 => vec![2],
        _ => vec![],
    }
}

/// Squared lengths of the simple roots from `C_ij ℓ_j = C_ji ℓ_i`, scaled
/// to integers with the shortest root of each component at 1.
pub fn simple_lengths(c: &[Vec<i64>]) -> Vec<i64> {
    let n = c.len();
    let mut l: Vec<Option<Q>> = vec![None; n];
    for start in 0..n {
        if l[start].is_some() {
            continue;
        }
        let mut comp = vec![start];
        l[start] = Some(Q::from_integer(1));
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if j != i && c[i][j] != 0 && l[j].is_none() {
                    l[j] = Some(l[i].unwrap() * Q::new(c[j][i], c[i][j]));
                    comp.push(j);
                    queue.push_back(j);
                }
            }
        }
        let min = comp.iter().map(|&i| l[i].unwrap()).min().unwrap();
        for &i in &comp {
            l[i] = Some(l[i].unwrap() / min);
        }
    }
    l.into_iter()
        .map(|x| {
            let x = x.unwrap();
            assert!(x.is_integer());
            x.to_integer()
        })
        .collect()
}

/// Positive roots in simple-root coordinates, grown by height: `β + α_i` is
/// a root exactly when the `α_i`-string through `β` extends upward, and
/// the string's lower length is already known from lower heights.
pub fn positive_roots_by_strings(c: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = c.len();
    let unit = |i: usize| -> Vec<i64> { (0..n).map(|j| i64::from(i == j)).collect() };
    let mut all: Vec<Vec<i64>> = (0..n).map(unit).collect();
    let mut set: HashSet<Vec<i64>> = all.iter().cloned().collect();
    let mut layer = all.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                if *beta == unit(i) {
                    continue;
                }
                let mut r = 0;
                loop {
                    let mut down = beta.clone();
                    down[i] -= r + 1;
                    if set.contains(&down) {
                        r += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * c[j][i]).sum();
                if r - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if set.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

fn rational_inverse(c: &[Vec<i64>]) -> Vec<Vec<Q>> {
    let n = c.len();
    let mut a: Vec<Vec<Q>> = c
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Q> = row.iter().map(|&x| Q::from_integer(x)).collect();
            r.extend((0..n).map(|j| Q::from_integer(i64::from(i == j))));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r][col] != Q::from_integer(0)).expect("invertible");
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col {
                let f = a[r][col];
                if f != Q::from_integer(0) {
                    let pivot_row = a[col].clone();
                    for (x, y) in a[r].iter_mut().zip(pivot_row) {
                        *x -= f * y;
                    }
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// Dimension of the irreducible module of highest weight `λ` by the
/// Freudenthal multiplicity recursion, summed over Weyl orbits of dominant
/// weights.
pub fn freudenthal_dim(c: &[Vec<i64>], lambda: &[i64]) -> i128 {
    let n = c.len();
    let ell = simple_lengths(c);
    let positives = positive_roots_by_strings(c);
    let pos_weights: Vec<Vec<i64>> =
        positives.iter().map(|a| (0..n).map(|j| (0..n).map(|i| a[i] * c[i][j]).sum()).collect()).collect();
    let inv = rational_inverse(c);
    let root_coords = |v: &[i64]| -> Vec<Q> {
        (0..n).map(|j| (0..n).map(|i| Q::from_integer(v[i]) * inv[i][j]).sum()).collect()
    };
    let diff = |mu: &[i64]| -> Vec<i64> { lambda.iter().zip(mu).map(|(a, b)| a - b).collect() };
    // λ − ν ∈ Q₊, returned as coordinates
    let below = |nu: &[i64]| -> Option<Vec<i64>> {
        let k = root_coords(&diff(nu));
        k.iter().all(|x| x.is_integer() && *x >= Q::from_integer(0)).then(|| k.iter().map(|x| x.to_integer()).collect())
    };
    let dominant = |nu: &[i64]| -> Vec<i64> {
        let mut v = nu.to_vec();
        while let Some(i) = (0..n).find(|&i| v[i] < 0) {
            let p = v[i];
            for j in 0..n {
                v[j] -= p * c[i][j];
            }
        }
        v
    };

    fn mult(
        mu: &[i64],
        lambda: &[i64],
        ctx: &dyn Fn(&[i64]) -> Option<Vec<i64>>,
        dom: &dyn Fn(&[i64]) -> Vec<i64>,
        positives: &[Vec<i64>],
        pos_weights: &[Vec<i64>],
        ell: &[i64],
        memo: &mut HashMap<Vec<i64>, i128>,
    ) -> i128 {
        if let Some(&m) = memo.get(mu) {
            return m;
        }
        if mu == lambda {
            return 1;
        }
        let n = mu.len();
        let Some(k) = ctx(mu) else {
            memo.insert(mu.to_vec(), 0);
            return 0;
        };
        let mut rhs: i128 = 0;
        for (a, aw) in positives.iter().zip(pos_weights) {
            let mut step = 1;
            loop {
                let nu: Vec<i64> = (0..n).map(|j| mu[j] + step * aw[j]).collect();
                if ctx(&nu).is_none() {
                    break;
                }
                let m = mult(&dom(&nu), lambda, ctx, dom, positives, pos_weights, ell, memo);
                let twice_inner: i64 = (0..n).map(|i| a[i] * nu[i] * ell[i]).sum();
                rhs += 2 * m * i128::from(twice_inner);
                step += 1;
            }
        }
        let d2: i64 = (0..n).map(|i| k[i] * (lambda[i] + mu[i] + 2) * ell[i]).sum();
        assert!(d2 > 0 && rhs % i128::from(d2) == 0, "Freudenthal recursion not integral at {mu:?}");
        let m = rhs / i128::from(d2);
        memo.insert(mu.to_vec(), m);
        m
    }

    let bound: Vec<i64> = root_coords(lambda).iter().map(|x| x.floor().to_integer()).collect();
    let mut seen: HashSet<Vec<i64>> = HashSet::from([lambda.to_vec()]);
    let mut queue = VecDeque::from([lambda.to_vec()]);
    while let Some(v) = queue.pop_front() {
        for i in 0..n {
            let w: Vec<i64> = (0..n).map(|j| v[j] - c[i][j]).collect();
            if let Some(k) = below(&w) {
                if k.iter().zip(&bound).all(|(a, b)| a <= b) && seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
    }
    let mut memo = HashMap::new();
    let mut total: i128 = 0;
    for mu in seen.iter().filter(|v| v.iter().all(|&x| x >= 0)) {
        let m = mult(mu, lambda, &below, &dominant, &positives, &pos_weights, &ell, &mut memo);
        total += m * orbit_size(c, mu) as i128;
    }
    total
}

pub fn orbit_size(c: &[Vec<i64>], v: &[i64]) -> usize {
    let n = c.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::from([v.to_vec()]);
    let mut queue = VecDeque::from([v.to_vec()]);
    while let Some(x) = queue.pop_front() {
        for i in 0..n {
            let y: Vec<i64> = (0..n).map(|j| x[j] - x[i] * c[i][j]).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.len()
}

/// `m` by scanning `β − kα` for `k = 1, 2, …`.
pub fn brute_m(rs: &RootSystem, a: usize, b: usize) -> usize {
    let (alpha, beta) = (&rs.root(a).coords, &rs.root(b).coords);
    let mut k = 1;
    loop {
        let v: Vec<i64> = beta.iter().zip(alpha).map(|(y, x)| y - k as i64 * x).collect();
        if rs.find(&v).is_none() {
            return k;
        }
        k += 1;
    }
}

fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

fn vec_mat(v: &[i64], m: &[Vec<i64>]) -> Vec<i64> {
    (0..m[0].len()).map(|j| v.iter().zip(m).map(|(x, row)| x * row[j]).sum()).collect()
}

/// Every unimodular `G` with entries in `[−bound, bound]` carrying `Φ₂` onto
/// `Φ₁` with coroots following; the flag records whether it also sends
/// `Δ₂` to `Δ₁` in order.
pub fn brute_isomorphisms(r1: &PinnedRootDatum, r2: &PinnedRootDatum, bound: i64) -> Vec<(Vec<Vec<i64>>, bool)> {
    let r = r1.rank;
    if r != r2.rank || r1.roots.len() != r2.roots.len() {
        return Vec::new();
    }
    let index: HashMap<&Vec<i64>, usize> = r1.roots.iter().enumerate().map(|(k, v)| (v, k)).collect();
    let width = (2 * bound + 1) as u64;
    let total = width.pow((r * r) as u32);
    let mut out = Vec::new();
    'outer: for code in 0..total {
        let mut x = code;
        let mut g = vec![vec![0i64; r]; r];
        for row in g.iter_mut() {
            for e in row.iter_mut() {
                *e = (x % width) as i64 - bound;
                x /= width;
            }
        }
        if cofactor_det(&g).abs() != 1 {
            continue;
        }
        let mut images = Vec::with_capacity(r2.roots.len());
        for (root, coroot) in r2.roots.iter().zip(&r2.coroots) {
            let Some(&k) = index.get(&vec_mat(root, &g)) else { continue 'outer };
            if &mat_vec(&g, &r1.coroots[k]) != coroot {
                continue 'outer;
            }
            images.push(k);
        }
        let distinct: HashSet<usize> = images.iter().copied().collect();
        if distinct.len() != images.len() {
            continue;
        }
        let pinned = r2.simple.iter().zip(&r1.simple).all(|(&s2, &s1)| images[s2] == s1);
        out.push((g, pinned));
    }
    out
}

fn cofactor_det(m: &[Vec<i64>]) -> i64 {
    if m.len() == 1 {
        return m[0][0];
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> =
                m[1..].iter().map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect()).collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * cofactor_det(&minor)
        })
        .sum()
}

/// All words of length at most `max_len` over `rank` letters.
pub fn words(rank: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| (0..rank).map(move |i| [w.clone(), vec![i]].concat()))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Violations of the pushforward containments and the `H⁰` dichotomy for one
/// word; empty when everything holds.
pub fn containment_violations(rs: &RootSystem, word: &[usize]) -> Vec<String> {
    let c = rs.gcm();
    let n = rs.rank();
    let minus_ppp: HashSet<Vec<i64>> =
        rs.phi_plus_plus().iter().map(|&k| rs.root(k).weight.0.iter().map(|x| -x).collect()).collect();
    let mut bad = Vec::new();
    for &b in &rs.phi_plus_plus() {
        let start = WeightVector(rs.root(b).weight.0.iter().map(|x| -x).collect());
        let out = bottsam::pushforward_word(c, word, &start).unwrap();
        for (w, _, _) in out.iter() {
            if !minus_ppp.contains(w) {
                bad.push(format!("word {word:?}, β {:?}: weight {w:?} outside −Φ₊₊", rs.root(b).coords));
            }
        }
    }
    for alpha in 0..n {
        let minus_alpha: Vec<i64> = rs.root(alpha).weight.0.iter().map(|x| -x).collect();
        let occurs = word.contains(&alpha);
        let minus_gamma0 = if occurs { vec![0; n] } else { minus_alpha.clone() };
        let out = bottsam::pushforward_word(c, word, &WeightVector(minus_alpha)).unwrap();
        for (w, d, _) in out.iter() {
            if w != minus_gamma0.as_slice() && !minus_ppp.contains(w) {
                bad.push(format!("word {word:?}, α{alpha}: weight {w:?} outside −Φ₊₊ ∪ {{−γ₀}}"));
            }
            if w.iter().all(|&x| x == 0) && d != 1 {
                bad.push(format!("word {word:?}, α{alpha}: zero weight in degree {d}"));
            }
        }
        if out.mult(&minus_gamma0) != 1 {
            bad.push(format!("word {word:?}, α{alpha}: −γ₀ has multiplicity {}", out.mult(&minus_gamma0)));
        }
        match bottsam::h0_rank(c, word, alpha) {
            Ok(r) if r == u8::from(occurs) => {}
            other => bad.push(format!("word {word:?}, α{alpha}: h0_rank {other:?}")),
        }
    }
    bad
}

/// One golden CLI invocation: file stem, arguments, stdin, exit code.
pub struct GoldenCase {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub stdin: &'static str,
    pub exit: i32,
}

pub const GOLDEN: &[GoldenCase] = &[
    GoldenCase { name: "classify_g2", args: &["classify"], stdin: "[[2,-1],[-3,2]]", exit: 0 },
    GoldenCase { name: "classify_affine_a1", args: &["classify"], stdin: "[[2,-2],[-2,2]]", exit: 2 },
    GoldenCase { name: "classify_asymmetric_zero", args: &["classify"], stdin: "[[2,0],[-1,2]]", exit: 3 },
    GoldenCase {
        name: "bs_weights_a2",
        args: &["bs-weights", "--type", "A2", "--word", "1,2", "--weight", "-2,1"],
        stdin: "",
        exit: 0,
    },
    GoldenCase { name: "dim_a1", args: &["dim", "--type", "A1", "--weight", "3"], stdin: "", exit: 0 },
    GoldenCase { name: "isogeny_enumerate_a2", args: &["isogeny", "enumerate", "--type", "A2", "--p", "2"], stdin: "", exit: 0 },
    GoldenCase { name: "vol_a2", args: &["vol", "--type", "A2", "--weight", "2,2"], stdin: "", exit: 0 },
    GoldenCase { name: "weyl_a2", args: &["weyl", "--type", "A2"], stdin: "", exit: 0 },
];

pub fn golden_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Runs the binary on one case and returns stdout and the exit code.
pub fn run_binary(bin: &str, case: &GoldenCase) -> (Vec<u8>, i32) {
    use std::io::Write;
    use std::process::{Command, Stdio};
    let mut child = Command::new(bin)
        .args(case.args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .expect("spawn");
    child.stdin.take().unwrap().write_all(case.stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.stdout, out.status.code().unwrap_or(-1))
}

/// Parses one output document into the report type it claims to be.
pub fn schema_check(stdout: &[u8]) -> Result<(), String> {
    use flagrec::cli::report::*;
    let v: serde_json::Value = serde_json::from_slice(stdout).map_err(|e| e.to_string())?;
    let s = |r: Result<(), serde_json::Error>| r.map_err(|e| e.to_string());
    match v.get("schema").and_then(|x| x.as_str()) {
        Some(CLASSIFY) => s(serde_json::from_value::<ClassifyReport>(v).map(drop)),
        Some(ROOTS) => s(serde_json::from_value::<RootsReport>(v).map(drop)),
        Some(WEYL) => s(serde_json::from_value::<WeylReport>(v).map(drop)),
        Some(DATUM) => s(serde_json::from_value::<DatumReport>(v).map(drop)),
        Some(ISOGENY_VALIDATE) => s(serde_json::from_value::<IsogenyValidateReport>(v).map(drop)),
        Some(CHEVALLEY) => s(serde_json::from_value::<ChevalleyReport>(v).map(drop)),
        Some(PROPS) => s(serde_json::from_value::<PropsReport>(v).map(drop)),
        Some(ERROR) => s(serde_json::from_value::<ErrorReport>(v).map(drop)),
        Some(other) => Err(format!("unknown schema {other}")),
        None => match &v {
            serde_json::Value::Array(_) => s(serde_json::from_value::<Vec<flagrec::isogeny::PMorphism>>(v.clone())
                .map(drop)
                .or_else(|_| serde_json::from_value::<GradedReport>(v).map(drop))),
            serde_json::Value::Number(_) => Ok(()),
            serde_json::Value::String(x) if x.parse::<num_bigint::BigInt>().is_ok() || x.contains('/') => Ok(()),
            _ => Err(format!("unexpected document {v}")),
        },
    }
}
