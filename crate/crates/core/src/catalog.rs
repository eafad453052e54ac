//! Group constructors and corpus plumbing: cyclic, dihedral, quaternion,
//! symmetric/alternating, direct and semidirect products, named presets, and
//! text-file ingestion of Cayley tables or permutation generators.

use std::fmt;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Permutation, DEFAULT_ORDER_CAP};

/// Symbolic description of a group to build.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    /// Dihedral group of order 2n, n ≥ 3.
    Dihedral(u64),
    Quaternion8,
    /// Symmetric group on k ≤ 6 points.
    Symmetric(u32),
    /// Alternating group on k ≤ 6 points.
    Alternating(u32),
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    /// Base extended by a cyclic group of order k acting through `alpha`
    /// (an index permutation of the base that must be an automorphism with
    /// α^k = identity).
    SemidirectCyclic {
        base: Box<GroupSpec>,
        alpha: Vec<usize>,
        k: u64,
    },
    Preset(String),
    /// Cayley-table text file.
    File(PathBuf),
    /// Permutation-generators text file.
    Generators(PathBuf),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D:{n}"),
            GroupSpec::Quaternion8 => write!(f, "Q8"),
            GroupSpec::Symmetric(k) => write!(f, "S:{k}"),
            GroupSpec::Alternating(k) => write!(f, "A:{k}"),
            GroupSpec::DirectProduct(a, b) => write!(f, "{a}x{b}"),
            GroupSpec::SemidirectCyclic { base, k, .. } => {
                write!(f, "({base} semidirect C{k})")
            }
            GroupSpec::Preset(name) => write!(f, "P:{name}"),
            GroupSpec::File(p) => write!(f, "F:{}", p.display()),
            GroupSpec::Generators(p) => write!(f, "G:{}", p.display()),
        }
    }
}

/// Build-time limits.
#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    /// Maximum group order any constructor may produce.
    pub cap: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            cap: DEFAULT_ORDER_CAP,
        }
    }
}

/// An index permutation of the order-8 quaternion group cycling the three
/// imaginary axes i → j → k → i with signs preserved; an automorphism of
/// order 3 (indices: 0:1, 1:−1, 2:i, 3:−i, 4:j, 5:−j, 6:k, 7:−k).
pub const Q8_AXIS_CYCLE: [usize; 8] = [0, 1, 4, 5, 6, 7, 2, 3];

/// Names accepted by [`GroupSpec::Preset`].
pub const PRESET_NAMES: [&str; 2] = ["smallgroup_72_3", "sl2_3"];

pub fn build(spec: &GroupSpec, opts: &BuildOptions) -> Result<FiniteGroup> {
    match spec {
        GroupSpec::Cyclic(n) => cyclic(*n, opts),
        GroupSpec::Dihedral(n) => dihedral(*n, opts),
        GroupSpec::Quaternion8 => quaternion8(),
        GroupSpec::Symmetric(k) => symmetric(*k, opts),
        GroupSpec::Alternating(k) => alternating(*k, opts),
        GroupSpec::DirectProduct(a, b) => {
            let left = build(a, opts)?;
            let right = build(b, opts)?;
            direct_product(&left, &right, opts)
        }
        GroupSpec::SemidirectCyclic { base, alpha, k } => {
            let h = build(base, opts)?;
            let label = format!("{}:{}", h.label(), k);
            semidirect_cyclic(label, &h, alpha, *k, opts)
        }
        GroupSpec::Preset(name) => preset(name, opts),
        GroupSpec::File(path) => load_cayley_file(path),
        GroupSpec::Generators(path) => load_generators_file(path, opts),
    }
}

fn check_cap(order: usize, cap: usize) -> Result<()> {
    if order > cap {
        Err(Error::CapExceeded { order, cap })
    } else {
        Ok(())
    }
}

/// Cyclic group of order n; element a is the residue a, so index 1 is a
/// fixed generator (for n > 1).
pub fn cyclic(n: u64, opts: &BuildOptions) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let n = n as usize;
    check_cap(n, opts.cap)?;
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = ((a + b) % n) as u32;
        }
    }
    FiniteGroup::from_parts(format!("C{n}"), n, table)
}

/// Dihedral group of order 2n for n ≥ 3, as the closure of the rotation
/// i ↦ i+1 and the reflection i ↦ −i on n points.
pub fn dihedral(n: u64, opts: &BuildOptions) -> Result<FiniteGroup> {
    if n < 3 {
        return Err(Error::BadSpec {
            spec: format!("D:{n}"),
            msg: "dihedral constructor requires n >= 3".into(),
        });
    }
    let pts = n as usize;
    check_cap(2 * pts, opts.cap)?;
    let rotation =
        Permutation::new((0..pts).map(|i| ((i + 1) % pts) as u32).collect())?;
    let reflection =
        Permutation::new((0..pts).map(|i| ((pts - i) % pts) as u32).collect())?;
    FiniteGroup::close_generators(format!("D{n}"), &[rotation, reflection], opts.cap)
}

/// The order-8 quaternion group, indexed 0:1, 1:−1, 2:i, 3:−i, 4:j, 5:−j,
/// 6:k, 7:−k (index = 2·axis + sign bit).
pub fn quaternion8() -> Result<FiniteGroup> {
    let decode = |x: usize| -> (i32, usize) { (if x.is_multiple_of(2) { 1 } else { -1 }, x / 2) };
    let encode = |sign: i32, axis: usize| -> usize { axis * 2 + usize::from(sign < 0) };
    let unit = |x: usize, y: usize| -> (i32, usize) {
        match (x, y) {
            (0, y) => (1, y),
            (x, 0) => (1, x),
            (x, y) if x == y => (-1, 0),
            (1, 2) => (1, 3),
            (2, 3) => (1, 1),
            (3, 1) => (1, 2),
            (2, 1) => (-1, 3),
            (3, 2) => (-1, 1),
            (1, 3) => (-1, 2),
            _ => unreachable!("axes are 0..4"),
        }
    };
    let mut table = vec![0u32; 64];
    for a in 0..8 {
        for b in 0..8 {
            let (sa, ax) = decode(a);
            let (sb, bx) = decode(b);
            let (s, axis) = unit(ax, bx);
            table[a * 8 + b] = encode(sa * sb * s, axis) as u32;
        }
    }
    // Hand-written table: run the full untrusted-ingestion checks on it.
    FiniteGroup::from_table("Q8", 8, table)
}

/// Symmetric group on k points, k ≤ 6.
pub fn symmetric(k: u32, opts: &BuildOptions) -> Result<FiniteGroup> {
    if k > 6 {
        return Err(Error::BadSpec {
            spec: format!("S:{k}"),
            msg: "symmetric constructor capped at 6 points".into(),
        });
    }
    let label = format!("S{k}");
    let pts = k as usize;
    let mut gens = Vec::new();
    if pts >= 2 {
        let mut tr: Vec<u32> = (0..pts as u32).collect();
        tr.swap(0, 1);
        gens.push(Permutation::new(tr)?);
    }
    if pts >= 3 {
        gens.push(Permutation::new(
            (0..pts).map(|i| ((i + 1) % pts) as u32).collect(),
        )?);
    }
    FiniteGroup::close_generators(label, &gens, opts.cap)
}

/// Alternating group on k points, k ≤ 6.
pub fn alternating(k: u32, opts: &BuildOptions) -> Result<FiniteGroup> {
    if k > 6 {
        return Err(Error::BadSpec {
            spec: format!("A:{k}"),
            msg: "alternating constructor capped at 6 points".into(),
        });
    }
    let label = format!("A{k}");
    let pts = k as usize;
    let mut gens = Vec::new();
    if pts >= 3 {
        let mut c3: Vec<u32> = (0..pts as u32).collect();
        c3[0] = 1;
        c3[1] = 2;
        c3[2] = 0;
        gens.push(Permutation::new(c3)?);
    }
    if pts >= 4 {
        // An even long cycle: the full k-cycle when k is odd, else a
        // (k−1)-cycle fixing point 0.
        let images: Vec<u32> = if pts % 2 == 1 {
            (0..pts).map(|i| ((i + 1) % pts) as u32).collect()
        } else {
            (0..pts)
                .map(|i| {
                    if i == 0 {
                        0
                    } else {
                        (i % (pts - 1) + 1) as u32
                    }
                })
                .collect()
        };
        gens.push(Permutation::new(images)?);
    }
    FiniteGroup::close_generators(label, &gens, opts.cap)
}

/// Direct product with pairs indexed lexicographically:
/// (a, b) ↦ a·|B| + b.
pub fn direct_product(
    a: &FiniteGroup,
    b: &FiniteGroup,
    opts: &BuildOptions,
) -> Result<FiniteGroup> {
    let (na, nb) = (a.order(), b.order());
    let n = na
        .checked_mul(nb)
        .ok_or(Error::Overflow("direct_product"))?;
    check_cap(n, opts.cap)?;
    let mut table = vec![0u32; n * n];
    for a1 in 0..na {
        for b1 in 0..nb {
            let row = a1 * nb + b1;
            for a2 in 0..na {
                for b2 in 0..nb {
                    let col = a2 * nb + b2;
                    table[row * n + col] = (a.mul(a1, a2) * nb + b.mul(b1, b2)) as u32;
                }
            }
        }
    }
    FiniteGroup::from_parts(format!("{}x{}", a.label(), b.label()), n, table)
}

/// Bijection on indices fixing the identity and respecting every product.
fn is_automorphism_map(h: &FiniteGroup, alpha: &[usize]) -> bool {
    let n = h.order();
    if alpha.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &im in alpha {
        if im >= n || seen[im] {
            return false;
        }
        seen[im] = true;
    }
    if alpha[0] != 0 {
        return false;
    }
    (0..n).all(|a| (0..n).all(|b| alpha[h.mul(a, b)] == h.mul(alpha[a], alpha[b])))
}

/// True iff `alpha` fixes the identity, respects every product, and iterates
/// to the identity map in k applications (α^k = id; k need not be minimal).
pub fn verify_automorphism(h: &FiniteGroup, alpha: &[usize], k: u64) -> bool {
    if k == 0 || !is_automorphism_map(h, alpha) {
        return false;
    }
    let mut power: Vec<usize> = (0..h.order()).collect();
    for _ in 0..k {
        power = power.iter().map(|&x| alpha[x]).collect();
    }
    power.iter().enumerate().all(|(i, &x)| i == x)
}

/// Extension of `h` by a cyclic group of order k acting through `alpha`:
/// elements (h, i) indexed h·k + i, with
/// (h₁, i₁)(h₂, i₂) = (h₁ · α^{i₁}(h₂), i₁ + i₂ mod k).
/// With the identity map for `alpha` this coincides element-by-element with
/// [`direct_product`] of `h` and C_k.
pub fn semidirect_cyclic(
    label: impl Into<String>,
    h: &FiniteGroup,
    alpha: &[usize],
    k: u64,
    opts: &BuildOptions,
) -> Result<FiniteGroup> {
    let nh = h.order();
    if !is_automorphism_map(h, alpha) {
        return Err(Error::NotAutomorphism {
            base: h.label().to_string(),
        });
    }
    if !verify_automorphism(h, alpha, k) {
        return Err(Error::AutomorphismOrder { k });
    }
    let k = k as usize;
    let n = nh.checked_mul(k).ok_or(Error::Overflow("semidirect"))?;
    check_cap(n, opts.cap)?;

    // alpha_pow[i] is α^i as an index map.
    let mut alpha_pow: Vec<Vec<usize>> = Vec::with_capacity(k);
    alpha_pow.push((0..nh).collect());
    for i in 1..k {
        let prev = &alpha_pow[i - 1];
        alpha_pow.push(prev.iter().map(|&x| alpha[x]).collect());
    }

    let mut table = vec![0u32; n * n];
    for h1 in 0..nh {
        for (i1, twist) in alpha_pow.iter().enumerate() {
            let row = h1 * k + i1;
            for (h2, &twisted) in twist.iter().enumerate() {
                let hprod = h.mul(h1, twisted);
                for i2 in 0..k {
                    let col = h2 * k + i2;
                    table[row * n + col] = (hprod * k + (i1 + i2) % k) as u32;
                }
            }
        }
    }
    FiniteGroup::from_parts(label, n, table)
}

/// Named groups that are awkward to spell as a one-line spec.
pub fn preset(name: &str, opts: &BuildOptions) -> Result<FiniteGroup> {
    match name {
        // Order 72: the quaternion group extended by C9 acting through its
        // order-3 quotient, cycling the imaginary axes.
        "smallgroup_72_3" => {
            let q8 = quaternion8()?;
            semidirect_cyclic("smallgroup_72_3", &q8, &Q8_AXIS_CYCLE, 9, opts)
        }
        // Order 24: the degree-8 permutation closure of the right-regular
        // quaternion generators together with the axis-cycling map.
        "sl2_3" => {
            let q8 = quaternion8()?;
            let regular = |g: usize| -> Result<Permutation> {
                Permutation::new((0..8).map(|x| q8.mul(x, g) as u32).collect())
            };
            let gens = [
                regular(2)?, // right multiplication by i
                regular(4)?, // right multiplication by j
                Permutation::new(Q8_AXIS_CYCLE.iter().map(|&x| x as u32).collect())?,
            ];
            FiniteGroup::close_generators("sl2_3", &gens, opts.cap)
        }
        other => Err(Error::UnknownPreset(other.to_string())),
    }
}

/// Parses a Cayley-table text: first data line is the order n, then n rows
/// of n space-separated element indices; `#` starts a comment line and blank
/// lines are ignored. Index 0 must be the identity.
pub fn parse_cayley(label: impl Into<String>, text: &str) -> Result<FiniteGroup> {
    let mut data = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (order_line, order_text) = data.next().ok_or(Error::Parse {
        line: 0,
        msg: "empty table file".into(),
    })?;
    let n: usize = order_text.parse().map_err(|_| Error::Parse {
        line: order_line,
        msg: format!("expected the group order, found {order_text:?}"),
    })?;
    if n == 0 {
        return Err(Error::Parse {
            line: order_line,
            msg: "group order must be positive".into(),
        });
    }

    let mut table = Vec::with_capacity(n * n);
    let mut rows = 0usize;
    let mut last_line = order_line;
    for (lineno, row_text) in data {
        last_line = lineno;
        if rows == n {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("expected exactly {n} rows, found extra data"),
            });
        }
        let mut entries = 0usize;
        for tok in row_text.split_whitespace() {
            let v: u32 = tok.parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("expected an element index, found {tok:?}"),
            })?;
            if v as usize >= n {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("index {v} out of range for order {n}"),
                });
            }
            table.push(v);
            entries += 1;
        }
        if entries != n {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("row has {entries} entries, expected {n}"),
            });
        }
        rows += 1;
    }
    if rows != n {
        return Err(Error::Parse {
            line: last_line,
            msg: format!("expected {n} rows, found {rows}"),
        });
    }
    FiniteGroup::from_table(label, n, table)
}

/// Renders a group's table in the Cayley file format; round-trips through
/// [`parse_cayley`].
pub fn cayley_to_string(g: &FiniteGroup) -> String {
    let n = g.order();
    let mut out = format!("# {} (order {n})\n{n}\n", g.label());
    for a in 0..n {
        let row: Vec<String> = (0..n).map(|b| g.mul(a, b).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn load_cayley_file(path: &Path) -> Result<FiniteGroup> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    parse_cayley(file_label(path), &text)
}

fn file_label(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

/// Parses one permutation in cycle notation over 1-based points, e.g.
/// `(1 2)(3 4)`; fixed points omitted; `()` is the identity.
fn parse_cycles(degree: usize, text: &str, line: usize) -> Result<Permutation> {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut moved = vec![false; degree];
    let mut chars = text.char_indices().peekable();
    while let Some((pos, c)) = chars.next() {
        if c.is_whitespace() {
            continue;
        }
        if c != '(' {
            return Err(Error::Parse {
                line,
                msg: format!("expected '(' at column {}, found {c:?}", pos + 1),
            });
        }
        let mut body = String::new();
        let mut closed = false;
        for (_, c2) in chars.by_ref() {
            if c2 == ')' {
                closed = true;
                break;
            }
            body.push(c2);
        }
        if !closed {
            return Err(Error::Parse {
                line,
                msg: "unclosed cycle: missing ')'".into(),
            });
        }
        let pts: Vec<usize> = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    msg: format!("expected a point, found {t:?}"),
                })
            })
            .collect::<Result<_>>()?;
        for &p in &pts {
            if p == 0 || p > degree {
                return Err(Error::Parse {
                    line,
                    msg: format!("point {p} outside 1..={degree}"),
                });
            }
            if moved[p - 1] {
                return Err(Error::Parse {
                    line,
                    msg: format!("point {p} appears in two cycles"),
                });
            }
            moved[p - 1] = true;
        }
        for (i, &p) in pts.iter().enumerate() {
            let q = pts[(i + 1) % pts.len()];
            images[p - 1] = (q - 1) as u32;
        }
    }
    Permutation::new(images)
}

/// Parses a generators text: first data line is the degree, each following
/// data line one permutation in cycle notation; `#` comments and blank
/// lines are ignored.
pub fn parse_generators(text: &str) -> Result<Vec<Permutation>> {
    let mut data = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (deg_line, deg_text) = data.next().ok_or(Error::Parse {
        line: 0,
        msg: "empty generators file".into(),
    })?;
    let degree: usize = deg_text.parse().map_err(|_| Error::Parse {
        line: deg_line,
        msg: format!("expected the degree, found {deg_text:?}"),
    })?;
    data.map(|(lineno, l)| parse_cycles(degree, l, lineno))
        .collect()
}

pub fn load_generators_file(path: &Path, opts: &BuildOptions) -> Result<FiniteGroup> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    let gens = parse_generators(&text)?;
    FiniteGroup::close_generators(file_label(path), &gens, opts.cap)
}

/// Parses the CLI spec grammar: atoms `C:n`, `D:n`, `Q8`, `S:k`, `A:k`,
/// `P:name`, `F:path`, `G:path`, combined left-associatively with `x` as in
/// `C:3xS:3`. An `x` splits atoms only when what follows looks like a new
/// atom, so file paths containing `x` stay intact.
pub fn parse_spec(input: &str) -> Result<GroupSpec> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::BadSpec {
            spec: input.to_string(),
            msg: "empty spec".into(),
        });
    }
    let starts_atom = |rest: &str| {
        rest.starts_with("Q8")
            || rest.len() >= 2
                && rest.as_bytes()[1] == b':'
                && matches!(rest.as_bytes()[0], b'C' | b'D' | b'S' | b'A' | b'P' | b'F' | b'G')
    };
    let mut parts: Vec<&str> = Vec::new();
    let mut start = 0usize;
    let bytes = s.as_bytes();
    let mut i = 1usize; // an atom is never empty, so a split can't be at 0
    while i < s.len() {
        if bytes[i] == b'x' && starts_atom(&s[i + 1..]) {
            parts.push(&s[start..i]);
            start = i + 1;
            i += 1;
        }
        i += 1;
    }
    parts.push(&s[start..]);

    let atom = |tok: &str| -> Result<GroupSpec> {
        let bad = |msg: String| Error::BadSpec {
            spec: tok.to_string(),
            msg,
        };
        if tok == "Q8" {
            return Ok(GroupSpec::Quaternion8);
        }
        let (tag, arg) = tok
            .split_once(':')
            .ok_or_else(|| bad("expected TAG:ARG or Q8".into()))?;
        let num =
            |a: &str| -> Result<u64> { a.parse().map_err(|_| bad(format!("{a:?} is not a number"))) };
        match tag {
            "C" => Ok(GroupSpec::Cyclic(num(arg)?)),
            "D" => Ok(GroupSpec::Dihedral(num(arg)?)),
            "S" => Ok(GroupSpec::Symmetric(num(arg)? as u32)),
            "A" => Ok(GroupSpec::Alternating(num(arg)? as u32)),
            "P" => Ok(GroupSpec::Preset(arg.to_string())),
            "F" => Ok(GroupSpec::File(PathBuf::from(arg))),
            "G" => Ok(GroupSpec::Generators(PathBuf::from(arg))),
            other => Err(bad(format!("unknown constructor tag {other:?}"))),
        }
    };

    let mut specs = parts.iter().map(|p| atom(p));
    let first = specs.next().expect("at least one part")?;
    specs.try_fold(first, |acc, next| {
        Ok(GroupSpec::DirectProduct(Box::new(acc), Box::new(next?)))
    })
}

/// A labeled, deterministic list of groups.
pub struct Corpus {
    groups: Vec<FiniteGroup>,
}

impl Corpus {
    pub fn new(groups: Vec<FiniteGroup>) -> Self {
        debug_assert!(
            {
                let mut labels: Vec<&str> = groups.iter().map(|g| g.label()).collect();
                labels.sort_unstable();
                labels.windows(2).all(|w| w[0] != w[1])
            },
            "corpus labels must be unique"
        );
        Corpus { groups }
    }

    pub fn groups(&self) -> &[FiniteGroup] {
        &self.groups
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn find(&self, label: &str) -> Option<&FiniteGroup> {
        self.groups.iter().find(|g| g.label() == label)
    }
}

/// An order-4 cyclic table shipped as text so the ingestion path is
/// exercised inside the corpus; as an extension of C2 by C2 it is non-split
/// (no complement), unlike everything the product constructors emit.
const C4_TABLE_TEXT: &str = "\
# cyclic group of order 4, ingested from table text
4
0 1 2 3
1 2 3 0
2 3 0 1
3 0 1 2
";

/// The default verification corpus: 40 groups of order ≤ 720.
pub fn default_corpus() -> Result<Corpus> {
    let opts = BuildOptions::default();
    let mut groups = Vec::with_capacity(40);
    for n in 1..=16u64 {
        groups.push(cyclic(n, &opts)?);
    }
    for n in [24u64, 36, 72] {
        groups.push(cyclic(n, &opts)?);
    }
    for n in 3..=8u64 {
        groups.push(dihedral(n, &opts)?);
    }
    groups.push(quaternion8()?);
    for k in [3u32, 4, 5] {
        groups.push(symmetric(k, &opts)?);
    }
    for k in [4u32, 5] {
        groups.push(alternating(k, &opts)?);
    }
    {
        let c3 = cyclic(3, &opts)?;
        let s3 = symmetric(3, &opts)?;
        groups.push(direct_product(&c3, &s3, &opts)?);
    }
    groups.push(preset("smallgroup_72_3", &opts)?);
    groups.push(preset("sl2_3", &opts)?);
    groups.push(parse_cayley("C4_table", C4_TABLE_TEXT)?);
    {
        let c2 = cyclic(2, &opts)?;
        let c3 = cyclic(3, &opts)?;
        let c4 = cyclic(4, &opts)?;
        groups.push(direct_product(&c2, &c2, &opts)?);
        groups.push(direct_product(&c2, &c4, &opts)?);
        groups.push(direct_product(&c3, &c3, &opts)?);
    }
    groups.push(alternating(6, &opts)?);
    groups.push(symmetric(6, &opts)?);
    Ok(Corpus::new(groups))
}
