//! Registry of worked cases.
//!
//! A case fixes the ambient ring (the coordinates of the representation W),
//! the polynomial invariants generating k[W]^G, and whatever ideals and
//! numbers are on record for it. Besides the named cases there are
//! parametric families addressed as `o-n3-m2`, `gl-n2-m2x3`, `glsym-n2-d4`.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{parse_poly, QPoly, Ring, RingRef};
use crate::reptheory::Situation;
use crate::scalar::{q, qf, Rational};
use crate::QIdeal;

pub type Mat = Vec<Vec<Rational>>;

/// A rational point of W: one matrix, or the pair (u₁, u₂) in the GL cases.
#[derive(Clone, Debug, PartialEq)]
pub enum MatrixPoint {
    Single(Mat),
    Pair(Mat, Mat),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FixedPoint {
    I,
    I1,
    I2,
}

impl FixedPoint {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "I" => Ok(FixedPoint::I),
            "I1" => Ok(FixedPoint::I1),
            "I2" => Ok(FixedPoint::I2),
            _ => Err(Error::InvalidParams(format!("unknown fixed point `{s}`"))),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            FixedPoint::I => "I",
            FixedPoint::I1 => "I1",
            FixedPoint::I2 => "I2",
        }
    }
}

/// How the coordinates of W are laid out in matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layout {
    /// u₁ is n×n₁ in the variables x_{kj}; u₂ is n₂×n and holds y_{ic} at
    /// position (n₂+1−c, n+1−i), so the entries of u₂u₁ read as sums
    /// Σ_k y_{n+1−k,c} x_{kj}.
    Pair { n: usize, n1: usize, n2: usize },
    /// w is rows×cols; each column gets a letter, each row an index.
    Single { rows: usize, cols: usize },
}

/// A polynomial in p, valid except at finitely many listed arguments.
#[derive(Clone, Debug, PartialEq)]
pub struct QuasiPoly {
    /// Ascending: `coeffs[k]` multiplies pᵏ.
    pub coeffs: Vec<Rational>,
    pub exceptions: BTreeMap<u32, u64>,
}

impl QuasiPoly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        QuasiPoly { coeffs, exceptions: BTreeMap::new() }
    }

    pub fn with_exception(mut self, p: u32, value: u64) -> Self {
        self.exceptions.insert(p, value);
        self
    }

    /// The polynomial part at p, ignoring exceptions.
    pub fn poly_at(&self, p: u32) -> Rational {
        let x = q(i64::from(p));
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * &x + c)
    }

    pub fn eval(&self, p: u32) -> Rational {
        match self.exceptions.get(&p) {
            Some(&v) => Rational::from_integer(v.into()),
            None => self.poly_at(p),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExpectedValue {
    Int(i64),
    Interval(i64, i64),
    /// Values at p = 0, 1, 2, …
    Values(Vec<u64>),
    /// A single value at a given argument.
    At(u32, u64),
    Hilbert(QuasiPoly),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Expected {
    pub name: String,
    pub value: ExpectedValue,
    pub citation: String,
}

#[derive(Clone, Debug)]
pub struct CaseSpec {
    pub name: String,
    pub situation: Situation,
    /// (n, n′) for SL/O/SO/Sp, (n, n₁, n₂) for GL, (n, d) for the symplectic
    /// reductions.
    pub params: Vec<usize>,
    pub ring: RingRef,
    pub layout: Layout,
    /// Gram matrix of the form preserved by G on its defining space. For the
    /// orthogonal reduction it is the symplectic form on the auxiliary space.
    pub form: Mat,
    pub ideals: Vec<(String, QIdeal)>,
    /// Generator lists with their customary names, keyed by ideal name.
    pub named: Vec<(String, Vec<(String, QPoly)>)>,
    pub expected: Vec<Expected>,
    /// Fixed point selected by the case name (`so3-I1`).
    pub fixed_point: Option<FixedPoint>,
}

impl CaseSpec {
    pub fn ideal(&self, name: &str) -> Result<&QIdeal> {
        self.ideals
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, i)| i)
            .ok_or_else(|| Error::Unsupported(format!("case `{}` has no ideal `{name}`", self.name)))
    }

    pub fn named_generators(&self, ideal: &str) -> Result<&[(String, QPoly)]> {
        self.named
            .iter()
            .find(|(n, _)| n == ideal)
            .map(|(_, g)| g.as_slice())
            .ok_or_else(|| Error::Unsupported(format!("case `{}` has no named generators for `{ideal}`", self.name)))
    }

    pub fn expected(&self, name: &str) -> Option<&Expected> {
        self.expected.iter().find(|e| e.name == name)
    }

    /// The base case name without a fixed-point suffix.
    pub fn base_name(&self) -> &str {
        self.name.split_once("-I").map_or(self.name.as_str(), |(b, _)| b)
    }

    fn push_ideal(&mut self, name: &str, gens: Vec<QPoly>) -> Result<()> {
        let ideal = Ideal::new(&self.ring, gens)?;
        self.ideals.push((name.to_string(), ideal));
        Ok(())
    }

    fn push_named(&mut self, name: &str, gens: Vec<(String, QPoly)>) -> Result<()> {
        self.push_ideal(name, gens.iter().map(|(_, g)| g.clone()).collect())?;
        self.named.push((name.to_string(), gens));
        Ok(())
    }

    fn expect(&mut self, name: &str, value: ExpectedValue, citation: &str) {
        self.expected.push(Expected { name: name.into(), value, citation: citation.into() });
    }
}

// ---------------------------------------------------------------------------
// Registry

const NAMED: &[&str] = &["gl2", "gl3", "o2", "o3", "o3-I1", "o3-I2", "so3", "so3-I1", "so3-I2", "sp4"];

const SAMPLES: &[&str] = &[
    "gl-n2-m2x2",
    "gl-n2-m2x1",
    "gl-n1-m3x3",
    "sl-n2-m3",
    "o-n2-m2",
    "o-n3-m2",
    "so-n3-m3",
    "sp-n2-m2",
    "sp-n4-m3",
    "glsym-n1-d2",
    "glsym-n2-d2",
    "osym-n2-d2",
    "spsym-n2-d2",
];

/// Every name accepted by [`case`] without parameters, plus a few sample
/// instances of the parametric families.
pub fn list_cases() -> Vec<String> {
    NAMED.iter().chain(SAMPLES).map(|s| s.to_string()).collect()
}

/// Case names run by default (`--all`).
pub fn default_cases() -> Vec<String> {
    ["gl2", "gl3", "o2", "o3", "so3", "sp4"]
        .iter()
        .chain(SAMPLES)
        .map(|s| s.to_string())
        .collect()
}

/// Looks a case up by name.
pub fn case(name: &str) -> Result<CaseSpec> {
    let (base, fp) = match name.split_once("-I") {
        Some((b, rest)) if NAMED.contains(&name) => (b, Some(FixedPoint::parse(&format!("I{rest}"))?)),
        _ => (name, None),
    };
    let mut spec = match base {
        "gl2" => gl2()?,
        "gl3" => gl3()?,
        "o2" => o2()?,
        "o3" => o3()?,
        "so3" => so3()?,
        "sp4" => sp4()?,
        _ => parametric(name)?,
    };
    if fp.is_some() {
        spec.name = name.to_string();
        spec.fixed_point = fp;
    }
    Ok(spec)
}

fn parametric(name: &str) -> Result<CaseSpec> {
    let unknown = || Error::UnknownCase(name.to_string());
    let mut parts = name.split('-');
    let sit = Situation::parse(parts.next().ok_or_else(unknown)?).map_err(|_| unknown())?;
    let n: usize = parts.next().and_then(|s| s.strip_prefix('n')).and_then(|s| s.parse().ok()).ok_or_else(unknown)?;
    let rest = parts.next().ok_or_else(unknown)?;
    if parts.next().is_some() {
        return Err(unknown());
    }
    let params = match sit {
        Situation::GL => {
            let (a, b) = rest.strip_prefix('m').and_then(|s| s.split_once('x')).ok_or_else(unknown)?;
            vec![n, a.parse().map_err(|_| unknown())?, b.parse().map_err(|_| unknown())?]
        }
        Situation::GlSymplectic | Situation::OSymplectic | Situation::SpSymplectic => {
            vec![n, rest.strip_prefix('d').and_then(|s| s.parse().ok()).ok_or_else(unknown)?]
        }
        _ => vec![n, rest.strip_prefix('m').and_then(|s| s.parse().ok()).ok_or_else(unknown)?],
    };
    generic(name, sit, &params)
}

/// Largest number of ambient variables a parametric case may have.
pub const MAX_VARS: usize = 48;

/// Builds a case of the given situation with only the invariant ideal J
/// (and the moment ideal for the symplectic reductions).
pub fn generic(name: &str, sit: Situation, params: &[usize]) -> Result<CaseSpec> {
    let bad = |m: &str| Error::InvalidParams(format!("{name}: {m}"));
    let want = if sit == Situation::GL { 3 } else { 2 };
    if params.len() != want {
        return Err(Error::LengthMismatch { expected: want, got: params.len() });
    }
    if params.contains(&0) {
        return Err(bad("parameters must be positive"));
    }
    let n = params[0];
    let (layout, form) = match sit {
        Situation::GL => (Layout::Pair { n, n1: params[1], n2: params[2] }, identity(n)),
        Situation::GlSymplectic => (Layout::Pair { n, n1: params[1], n2: params[1] }, identity(n)),
        Situation::SL | Situation::O | Situation::SO => (Layout::Single { rows: n, cols: params[1] }, identity(n)),
        Situation::Sp => {
            if n % 2 == 1 {
                return Err(bad("symplectic space must have even dimension"));
            }
            (Layout::Single { rows: n, cols: params[1] }, symplectic(n))
        }
        Situation::OSymplectic => (Layout::Single { rows: n, cols: 2 * params[1] }, symplectic(2 * params[1])),
        Situation::SpSymplectic => {
            if n % 2 == 1 {
                return Err(bad("symplectic space must have even dimension"));
            }
            (Layout::Single { rows: n, cols: 2 * params[1] }, symplectic(n))
        }
    };
    let names = variable_names(layout);
    if names.len() > MAX_VARS {
        return Err(bad("too many variables"));
    }
    let ring = Ring::new(&names)?;
    let mut spec = CaseSpec {
        name: name.to_string(),
        situation: sit,
        params: params.to_vec(),
        ring,
        layout,
        form,
        ideals: Vec::new(),
        named: Vec::new(),
        expected: Vec::new(),
        fixed_point: None,
    };
    let gens = fft_generators(&spec);
    spec.push_ideal("J", gens)?;
    if matches!(sit, Situation::GlSymplectic | Situation::OSymplectic | Situation::SpSymplectic) {
        let mu = moment_generators(&spec)?;
        spec.push_ideal("mu", mu)?;
    }
    Ok(spec)
}

fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect()).collect()
}

/// [[0, I], [−I, 0]].
fn symplectic(n: usize) -> Mat {
    let h = n / 2;
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i < h && j == i + h {
                        q(1)
                    } else if i >= h && j + h == i {
                        q(-1)
                    } else {
                        q(0)
                    }
                })
                .collect()
        })
        .collect()
}

fn index_pair(a: usize, b: usize) -> String {
    if a < 10 && b < 10 {
        format!("{a}{b}")
    } else {
        format!("{a}_{b}")
    }
}

const LETTERS: [&str; 8] = ["x", "y", "z", "t", "u", "v", "p", "q"];

fn column_var(cols: usize, r: usize, c: usize) -> String {
    if cols <= LETTERS.len() {
        format!("{}{}", LETTERS[c], r + 1)
    } else {
        format!("w{}_{}", c + 1, r + 1)
    }
}

fn variable_names(layout: Layout) -> Vec<String> {
    match layout {
        Layout::Pair { n, n1, n2 } => {
            let mut v = Vec::new();
            for k in 1..=n {
                for j in 1..=n1 {
                    v.push(format!("x{}", index_pair(k, j)));
                }
            }
            for i in 1..=n {
                for c in 1..=n2 {
                    v.push(format!("y{}", index_pair(i, c)));
                }
            }
            v
        }
        Layout::Single { rows, cols } => {
            (0..cols).flat_map(|c| (0..rows).map(move |r| column_var(cols, r, c))).collect()
        }
    }
}

// ---------------------------------------------------------------------------
// Matrix arithmetic shared by the symbolic and the numeric side.

trait Entry: Clone {
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn lift(&self, c: &Rational) -> Self;
}

impl Entry for Rational {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn lift(&self, c: &Rational) -> Self {
        c.clone()
    }
}

impl Entry for QPoly {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn lift(&self, c: &Rational) -> Self {
        QPoly::constant(self.ring(), c.clone())
    }
}

fn mat_mul<T: Entry>(a: &[Vec<T>], b: &[Vec<T>], zero: &T) -> Vec<Vec<T>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(zero.clone(), |acc, k| acc.add(&row[k].mul(&b[k][j]))))
                .collect()
        })
        .collect()
}

fn transpose<T: Clone>(a: &[Vec<T>]) -> Vec<Vec<T>> {
    let cols = a.first().map_or(0, |r| r.len());
    (0..cols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

fn lift_mat<T: Entry>(m: &Mat, zero: &T) -> Vec<Vec<T>> {
    m.iter().map(|r| r.iter().map(|c| zero.lift(c)).collect()).collect()
}

/// Determinant of the square submatrix on all rows and the given columns.
fn minor<T: Entry>(w: &[Vec<T>], cols: &[usize], zero: &T) -> T {
    fn rec<T: Entry>(w: &[Vec<T>], row: usize, cols: &[usize], zero: &T) -> T {
        if cols.is_empty() {
            return zero.lift(&q(1));
        }
        let mut acc = zero.clone();
        for (k, &c) in cols.iter().enumerate() {
            let rest: Vec<usize> = cols.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &c)| c).collect();
            let term = w[row][c].mul(&rec(w, row + 1, &rest, zero));
            acc = if k % 2 == 0 { acc.add(&term) } else { acc.add(&term.neg()) };
        }
        acc
    }
    rec(w, 0, cols, zero)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

fn upper<T: Clone>(m: &[Vec<T>], strict: bool) -> Vec<T> {
    let mut v = Vec::new();
    for i in 0..m.len() {
        for j in (if strict { i + 1 } else { i })..m[i].len() {
            v.push(m[i][j].clone());
        }
    }
    v
}

/// Raw invariants (before content normalization) evaluated on a point whose
/// entries are of type `T`.
fn raw_invariants<T: Entry>(spec: &CaseSpec, pt: &PointOf<T>, zero: &T) -> Result<Vec<T>> {
    let n = spec.params[0];
    let single = || match pt {
        PointOf::Single(w) => Ok(w),
        PointOf::Pair(..) => Err(Error::InvalidParams("expected a single matrix".into())),
    };
    let gram_on_v = |w: &Vec<Vec<T>>, strict: bool| {
        let g = lift_mat(&spec.form, zero);
        let tw = transpose(w);
        upper(&mat_mul(&mat_mul(&tw, &g, zero), w, zero), strict)
    };
    let minors = |w: &Vec<Vec<T>>| {
        let cols = w.first().map_or(0, |r| r.len());
        combinations(cols, n).into_iter().map(|c| minor(w, &c, zero)).collect::<Vec<_>>()
    };
    Ok(match spec.situation {
        Situation::GL | Situation::GlSymplectic => match pt {
            PointOf::Pair(u1, u2) => mat_mul(u2, u1, zero).into_iter().flatten().collect(),
            PointOf::Single(_) => return Err(Error::InvalidParams("expected a pair (u1, u2)".into())),
        },
        Situation::SL => minors(single()?),
        Situation::O | Situation::Sp => gram_on_v(single()?, spec.situation == Situation::Sp),
        Situation::SO => {
            let w = single()?;
            let mut v = gram_on_v(w, false);
            v.extend(minors(w));
            v
        }
        Situation::OSymplectic => {
            let w = single()?;
            upper(&mat_mul(&transpose(w), w, zero), false)
        }
        Situation::SpSymplectic => gram_on_v(single()?, true),
    })
}

enum PointOf<T> {
    Single(Vec<Vec<T>>),
    Pair(Vec<Vec<T>>, Vec<Vec<T>>),
}

fn symbolic_point(spec: &CaseSpec) -> PointOf<QPoly> {
    let var = |name: String| QPoly::var_named(&spec.ring, &name).expect("layout variable");
    match spec.layout {
        Layout::Pair { n, n1, n2 } => {
            let u1 = (1..=n).map(|k| (1..=n1).map(|j| var(format!("x{}", index_pair(k, j)))).collect()).collect();
            let u2 = (1..=n2)
                .map(|r| (1..=n).map(|k| var(format!("y{}", index_pair(n + 1 - k, n2 + 1 - r)))).collect())
                .collect();
            PointOf::Pair(u1, u2)
        }
        Layout::Single { rows, cols } => {
            PointOf::Single((0..rows).map(|r| (0..cols).map(|c| var(column_var(cols, r, c))).collect()).collect())
        }
    }
}

/// Positive integer content of a polynomial with rational coefficients
/// (gcd of numerators over lcm of denominators).
fn content(p: &QPoly) -> Rational {
    if p.is_zero() {
        return q(1);
    }
    let (mut num, mut den) = (num_bigint::BigInt::zero(), num_bigint::BigInt::one());
    for (_, c) in p.terms() {
        num = num.gcd(c.numer());
        den = den.lcm(c.denom());
    }
    Rational::new(num.abs(), den)
}

fn fft_with_content(spec: &CaseSpec) -> Vec<(QPoly, Rational)> {
    let zero = QPoly::zero(&spec.ring);
    let raw = raw_invariants(spec, &symbolic_point(spec), &zero).expect("layout matches situation");
    raw.into_iter()
        .map(|p| {
            let c = content(&p);
            (p.scale(&c.recip()), c)
        })
        .collect()
}

/// Polynomial generators of k[W]^G in the case's coordinates, each scaled to
/// primitive integer content.
pub fn fft_generators(spec: &CaseSpec) -> Vec<QPoly> {
    fft_with_content(spec).into_iter().map(|(p, _)| p).collect()
}

pub fn ideal_j(spec: &CaseSpec) -> Result<QIdeal> {
    Ideal::new(&spec.ring, fft_generators(spec))
}

fn moment_generators(spec: &CaseSpec) -> Result<Vec<QPoly>> {
    let zero = QPoly::zero(&spec.ring);
    Ok(match (spec.situation, symbolic_point(spec)) {
        (Situation::GlSymplectic, PointOf::Pair(u1, u2)) => mat_mul(&u1, &u2, &zero).into_iter().flatten().collect(),
        (Situation::OSymplectic, PointOf::Single(w)) => {
            let jp = lift_mat(&spec.form, &zero);
            upper(&mat_mul(&mat_mul(&w, &jp, &zero), &transpose(&w), &zero), true)
        }
        (Situation::SpSymplectic, PointOf::Single(w)) => upper(&mat_mul(&w, &transpose(&w), &zero), false),
        _ => return Err(Error::Unsupported(format!("`{}` is not a symplectic reduction", spec.name))),
    })
}

/// Ideal of the zero fiber of the moment map.
pub fn moment_ideal(spec: &CaseSpec) -> Result<QIdeal> {
    Ideal::new(&spec.ring, moment_generators(spec)?)
}

fn check_shape(m: &Mat, rows: usize, cols: usize, what: &str) -> Result<()> {
    if m.len() != rows || m.iter().any(|r| r.len() != cols) {
        return Err(Error::InvalidParams(format!("{what} must be {rows}x{cols}")));
    }
    Ok(())
}

fn check_point(spec: &CaseSpec, pt: &MatrixPoint) -> Result<()> {
    match (spec.layout, pt) {
        (Layout::Pair { n, n1, n2 }, MatrixPoint::Pair(u1, u2)) => {
            check_shape(u1, n, n1, "u1")?;
            check_shape(u2, n2, n, "u2")
        }
        (Layout::Single { rows, cols }, MatrixPoint::Single(w)) => check_shape(w, rows, cols, "w"),
        _ => Err(Error::InvalidParams("point kind does not match the case".into())),
    }
}

/// Coordinates of the quotient map at a point, in the order of
/// [`fft_generators`] and divided by the same contents.
pub fn quotient_image(spec: &CaseSpec, pt: &MatrixPoint) -> Result<Vec<Rational>> {
    check_point(spec, pt)?;
    let p = match pt {
        MatrixPoint::Single(w) => PointOf::Single(w.clone()),
        MatrixPoint::Pair(a, b) => PointOf::Pair(a.clone(), b.clone()),
    };
    let raw = raw_invariants(spec, &p, &q(0))?;
    let contents = fft_with_content(spec);
    Ok(raw.into_iter().zip(contents).map(|(v, (_, c))| v / c).collect())
}

/// The quotient map as a matrix: u₂u₁ for GL, ᵗwGw for O/SO/Sp and for
/// the orthogonal reduction ᵗww. SL has no matrix form.
pub fn quotient_matrix(spec: &CaseSpec, pt: &MatrixPoint) -> Result<Mat> {
    check_point(spec, pt)?;
    let zero = q(0);
    Ok(match (spec.situation, pt) {
        (Situation::GL | Situation::GlSymplectic, MatrixPoint::Pair(u1, u2)) => mat_mul(u2, u1, &zero),
        (Situation::O | Situation::SO | Situation::Sp | Situation::SpSymplectic, MatrixPoint::Single(w)) => {
            mat_mul(&mat_mul(&transpose(w), &spec.form, &zero), w, &zero)
        }
        (Situation::OSymplectic, MatrixPoint::Single(w)) => mat_mul(&transpose(w), w, &zero),
        _ => return Err(Error::Unsupported("no matrix form for this quotient map".into())),
    })
}

fn zeros(r: usize, c: usize) -> Mat {
    vec![vec![q(0); c]; r]
}

/// The GL point w_r: both matrices are [[I_r, 0], [0, 0]].
pub fn gl_point(n: usize, n1: usize, n2: usize, r: usize) -> Result<MatrixPoint> {
    if r > n.min(n1).min(n2) {
        return Err(Error::InvalidParams(format!("rank {r} exceeds min(n, n1, n2)")));
    }
    let (mut u1, mut u2) = (zeros(n, n1), zeros(n2, n));
    for i in 0..r {
        u1[i][i] = q(1);
        u2[i][i] = q(1);
    }
    Ok(MatrixPoint::Pair(u1, u2))
}

/// The orthogonal point with ones on the first r diagonal entries.
pub fn o_point(n: usize, m: usize, r: usize) -> Result<MatrixPoint> {
    if r > n.min(m) {
        return Err(Error::InvalidParams(format!("rank {r} exceeds min(n, n')")));
    }
    let mut w = zeros(n, m);
    for (i, row) in w.iter_mut().enumerate().take(r) {
        row[i] = q(1);
    }
    Ok(MatrixPoint::Single(w))
}

/// Point of the zero fiber of the GL moment map whose image in gl(d) is a
/// square-zero endomorphism of rank l: u₁ = [[0, I_l], [0, 0]],
/// u₂ = [[I_l, 0], [0, 0]].
pub fn glsym_point(n: usize, d: usize, l: usize) -> Result<MatrixPoint> {
    if l > n || 2 * l > d {
        return Err(Error::InvalidParams(format!("need l <= n and 2l <= d, got l = {l}")));
    }
    let (mut u1, mut u2) = (zeros(n, d), zeros(d, n));
    for i in 0..l {
        u1[i][d - l + i] = q(1);
        u2[i][i] = q(1);
    }
    Ok(MatrixPoint::Pair(u1, u2))
}

pub fn zero_point(spec: &CaseSpec) -> MatrixPoint {
    match spec.layout {
        Layout::Pair { n, n1, n2 } => MatrixPoint::Pair(zeros(n, n1), zeros(n2, n)),
        Layout::Single { rows, cols } => MatrixPoint::Single(zeros(rows, cols)),
    }
}

// ---------------------------------------------------------------------------
// Catalogued ideals

pub fn fixed_point_ideal(spec: &CaseSpec, which: Option<FixedPoint>) -> Result<QIdeal> {
    let which = which.or(spec.fixed_point);
    let name = match (spec.base_name(), which) {
        ("gl2" | "gl3" | "o2" | "sp4", None | Some(FixedPoint::I)) => "I",
        ("o3", Some(FixedPoint::I2)) | ("so3", Some(FixedPoint::I2)) => "I2",
        ("so3", Some(FixedPoint::I1)) => "I1",
        ("o3", Some(FixedPoint::I1)) => {
            return Err(Error::Unsupported("generators of the O3 fixed point I1 are not on record".into()))
        }
        ("o3" | "so3", _) => return Err(Error::InvalidParams("this case has two fixed points; choose I1 or I2".into())),
        _ => return Err(Error::Unsupported(format!("no fixed point catalogued for `{}`", spec.name))),
    };
    spec.ideal(name).cloned()
}

pub fn generic_fiber_ideal(spec: &CaseSpec) -> Result<QIdeal> {
    match spec.base_name() {
        "o3" | "so3" => spec.ideal("L").cloned(),
        _ => Err(Error::Unsupported(format!("no generic fiber catalogued for `{}`", spec.name))),
    }
}

/// Recorded Gröbner basis of the generic fiber ideal (grevlex, declared
/// variable order).
pub fn recorded_basis(spec: &CaseSpec) -> Result<Vec<QPoly>> {
    Ok(spec.ideal("GB(L)")?.gens().to_vec())
}

pub fn component_ideals(spec: &CaseSpec) -> Result<Vec<QIdeal>> {
    let names: &[&str] = match spec.base_name() {
        "gl2" => &["K1", "K2", "K3", "K4"],
        "o2" => &["C1", "C2"],
        _ => return Err(Error::Unsupported(format!("no component decomposition for `{}`", spec.name))),
    };
    names.iter().map(|n| spec.ideal(n).cloned()).collect()
}

/// Inserts the `*` implied by juxtaposition: between a digit or `)` and a
/// letter or `(`. Variable names here always end in a digit.
pub fn implicit(text: &str) -> String {
    let mut out = String::with_capacity(text.len() * 2);
    let mut prev: Option<char> = None;
    for ch in text.chars() {
        if let Some(p) = prev {
            if (p.is_ascii_digit() || p == ')') && (ch.is_ascii_alphabetic() || ch == '(') {
                out.push('*');
            }
        }
        if !ch.is_whitespace() {
            out.push(ch);
            prev = Some(ch);
        }
    }
    out
}

fn polys(ring: &RingRef, texts: &[&str]) -> Result<Vec<QPoly>> {
    texts.iter().map(|t| parse_poly(&implicit(t), ring)).collect()
}

fn named(ring: &RingRef, prefix: &str, texts: &[&str]) -> Result<Vec<(String, QPoly)>> {
    texts
        .iter()
        .enumerate()
        .map(|(i, t)| Ok((format!("{prefix}{}", i + 1), parse_poly(&implicit(t), ring)?)))
        .collect()
}

fn labelled(ring: &RingRef, items: &[(&str, &str)]) -> Result<Vec<(String, QPoly)>> {
    items.iter().map(|(n, t)| Ok((n.to_string(), parse_poly(&implicit(t), ring)?))).collect()
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| q(x)).collect()
}

// Expected-value names.
pub const HILBERT: &str = "hilbert";
pub const DIM_N: &str = "dim N";
pub const RANK: &str = "rank";
pub const TANGENT_LOWER: &str = "tangent lower";
pub const TANGENT_DIM: &str = "tangent dim";
pub const TANGENT_INTERVAL: &str = "tangent interval";
pub const DIM_H_PRIN: &str = "dim H_prin";
pub const MIN_GENERATORS: &str = "min generators";

/// Expected-value key for a given ideal, e.g. `"rank I2"`.
pub fn key(what: &str, ideal: &str) -> String {
    format!("{what} {ideal}")
}

fn gl2() -> Result<CaseSpec> {
    let mut s = generic("gl2", Situation::GL, &[2, 2, 2])?;
    let r = s.ring.clone();
    let mut gens = named(&r, "f", &["y22x11+y12x21", "y22x12+y12x22", "y21x11+y11x21", "y21x12+y11x22"])?;
    gens.extend(named(&r, "h", &["x11y11", "x11y21", "x21y11", "x21y21"])?);
    s.push_named("I", gens)?;
    s.push_ideal("K1", polys(&r, &["x11", "x12", "x21", "x22"])?)?;
    s.push_ideal("K2", polys(&r, &["y11", "y12", "y21", "y22"])?)?;
    s.push_ideal("K3", polys(&r, &["x11", "x21", "y22y11-y21y12", "y22x12+y12x22", "y21x12+y11x22"])?)?;
    s.push_ideal("K4", polys(&r, &["y11", "y21", "x22x11-x21x12", "y22x11+y12x21", "y22x12+y12x22"])?)?;
    s.expect(&key(HILBERT, "I"), ExpectedValue::Values(vec![1, 8, 29]), "GL2 fixed-point Hilbert function, low degrees");
    s.expect(&key(DIM_N, "I"), ExpectedValue::Int(7), "GL2 generator module dimension");
    s.expect(&key(RANK, "I"), ExpectedValue::Int(3), "GL2 relation pairing rank bound");
    s.expect(&key(TANGENT_LOWER, "I"), ExpectedValue::Int(4), "GL2 tangent space lower bound");
    s.expect(&key(TANGENT_DIM, "I"), ExpectedValue::Int(4), "GL2 tangent space at the fixed point");
    Ok(s)
}

/// s-type generators x_{k2}·(2×2 minor of the y-block), in their listed order;
/// t-type swap the roles of x and y.
const GL3_S: [&str; 9] = [
    "x12(y22y11-y21y12)",
    "x12(y32y11-y31y12)",
    "x22(y32y11-y31y12)",
    "x12(y32y21-y31y22)",
    "x22(y32y21-y31y22)",
    "x32(y32y21-y31y22)",
    "x22(y22y11-y21y12)",
    "x32(y22y11-y21y12)",
    "x32(y32y11-y31y12)",
];

const GL3_T: [&str; 9] = [
    "y12(x22x11-x21x12)",
    "y12(x32x11-x31x12)",
    "y22(x32x11-x31x12)",
    "y12(x32x21-x31x22)",
    "y22(x32x21-x31x22)",
    "y32(x32x21-x31x22)",
    "y22(x22x11-x21x12)",
    "y32(x22x11-x21x12)",
    "y32(x32x11-x31x12)",
];

/// All 36 named GL3 generators f₁..f₉, h₁..h₉, s₁..s₉, t₁..t₉.
pub fn gl3_all_named(ring: &RingRef) -> Result<Vec<(String, QPoly)>> {
    let spec_gens = {
        let s = generic("gl3", Situation::GL, &[3, 3, 3])?;
        fft_generators(&s)
    };
    let mut out: Vec<(String, QPoly)> = Vec::new();
    for (i, f) in spec_gens.iter().enumerate() {
        out.push((format!("f{}", i + 1), f.embed_by_name(ring)?));
    }
    for k in 1..=3 {
        for i in 1..=3 {
            let h = parse_poly(&format!("x{k}1*y{i}1"), ring)?;
            out.push((format!("h{}", 3 * (k - 1) + i), h));
        }
    }
    out.extend(named(ring, "s", &GL3_S)?);
    out.extend(named(ring, "t", &GL3_T)?);
    Ok(out)
}

fn gl3() -> Result<CaseSpec> {
    let mut s = generic("gl3", Situation::GL, &[3, 3, 3])?;
    let all = gl3_all_named(&s.ring)?;
    let keep = |n: &str| {
        let idx: usize = n[1..].parse().unwrap_or(0);
        n.starts_with('f') || n.starts_with('h') || idx <= 6
    };
    let gens: Vec<_> = all.iter().filter(|(n, _)| keep(n)).cloned().collect();
    s.push_named("I", gens)?;
    s.named.push(("I*".into(), all));
    let poly = QuasiPoly::new(vec![
        q(1),
        qf(122, 35),
        qf(1654, 315),
        qf(547, 120),
        qf(91, 36),
        qf(37, 40),
        qf(79, 360),
        qf(13, 420),
        qf(1, 504),
    ]);
    s.expect(&key(HILBERT, "I"), ExpectedValue::Hilbert(poly), "GL3 fixed-point Hilbert polynomial");
    s.expect(&key(DIM_N, "I"), ExpectedValue::Int(29), "GL3 generator module dimension");
    s.expect(&key(RANK, "I"), ExpectedValue::Int(17), "GL3 relation pairing rank bound");
    s.expect(&key(TANGENT_LOWER, "I"), ExpectedValue::Int(12), "GL3 equivariant morphism count");
    s.expect(&key(TANGENT_DIM, "I"), ExpectedValue::Int(12), "GL3 tangent space at the fixed point");
    Ok(s)
}

fn o2() -> Result<CaseSpec> {
    // Hyperbolic basis: the form is [[0, 1], [1, 0]].
    let names = ["x1", "x2", "y1", "y2"];
    let ring = Ring::new(&names)?;
    let mut s = CaseSpec {
        name: "o2".into(),
        situation: Situation::O,
        params: vec![2, 2],
        ring: ring.clone(),
        layout: Layout::Single { rows: 2, cols: 2 },
        form: vec![vec![q(0), q(1)], vec![q(1), q(0)]],
        ideals: Vec::new(),
        named: Vec::new(),
        expected: Vec::new(),
        fixed_point: None,
    };
    s.push_ideal("J", fft_generators(&s))?;
    s.push_named(
        "I",
        labelled(&ring, &[("f1", "x1x2"), ("f2", "y1y2"), ("f3", "x1y2+x2y1"), ("h1", "x1^2"), ("h2", "x2^2")])?,
    )?;
    s.push_ideal("C1", polys(&ring, &["x1", "y1", "x2^2"])?)?;
    s.push_ideal("C2", polys(&ring, &["x2", "y2", "x1^2"])?)?;
    s.expect(&key(HILBERT, "J"), ExpectedValue::At(2, 7), "O2 invariant ideal Hilbert function at p = 2");
    s.expect(&key(DIM_N, "I"), ExpectedValue::Int(5), "O2 generator module dimension");
    s.expect(&key(RANK, "I"), ExpectedValue::Int(2), "O2 relation pairing rank bound");
    s.expect(&key(TANGENT_LOWER, "I"), ExpectedValue::Int(3), "O2 principal component dimension");
    s.expect(&key(TANGENT_DIM, "I"), ExpectedValue::Int(3), "O2 tangent space at the fixed point");
    Ok(s)
}

const XYZ: [&str; 9] = ["x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2", "z3"];

fn dot(a: char, b: char) -> String {
    (1..=3).map(|i| format!("{a}{i}{b}{i}")).collect::<Vec<_>>().join("+")
}

/// I₂ of the orthogonal 3×3 case, in the row order of its tangent table:
/// five cubics, the six pairings, then five monomials in x.
pub const O3_I2: [(&str, &str); 16] = [
    ("c1", "y3(x1y2-x2y1)"),
    ("c2", "y2(x1y3-x3y1)"),
    ("c3", "y3(x1y3-x3y1)"),
    ("c4", "y2(x2y3-x3y2)"),
    ("c5", "y3(x2y3-x3y2)"),
    ("xx", "x1^2+x2^2+x3^2"),
    ("yy", "y1^2+y2^2+y3^2"),
    ("zz", "z1^2+z2^2+z3^2"),
    ("xy", "x1y1+x2y2+x3y3"),
    ("xz", "x1z1+x2z2+x3z3"),
    ("yz", "y1z1+y2z2+y3z3"),
    ("x2x2", "x2^2"),
    ("x3x3", "x3^2"),
    ("x1x2", "x1x2"),
    ("x1x3", "x1x3"),
    ("x2x3", "x2x3"),
];

const O3_GB: [&str; 27] = [
    "z1^2+z2^2+z3^2-1",
    "y1z1+y2z2+y3z3",
    "x1z1+x2z2+x3z3",
    "y1^2+y2^2+y3^2-1",
    "x1y1+x2y2+x3y3",
    "x3^2+y3^2+z3^2-1",
    "x2x3+y2y3+z2z3",
    "x1x3+y1y3+z1z3",
    "x2^2+y2^2+z2^2-1",
    "x1x2+y1y2+z1z2",
    "x1^2-y2^2-y3^2-z2^2-z3^2+1",
    "x2y1y2-x1y2^2-x3z1z3+x1z3^2",
    "y2z1z2-y1z2^2+y3z1z3-y1z3^2+y1",
    "x2z1z2-x1z2^2+x3z1z3-x1z3^2+x1",
    "x2y1z2-x1y2z2+x3y1z3-x1y3z3",
    "y2^2z1+y3^2z1-y1y2z2-y1y3z3-z1",
    "x2y2z1+x3y3z1-x1y2z2-x1y3z3",
    "x3y2y3-x2y3^2+x3z2z3-x2z3^2+x2",
    "x3y1y3-x1y3^2+x3z1z3-x1z3^2+x1",
    "x2y1y3-x1y2y3+x2z1z3-x1z2z3",
    "x3y2^2-x2y2y3+x3z2^2-x2z2z3-x3",
    "x3y1y2-x1y2y3+x3z1z2-x1z2z3",
    "x3y2z1z3-x2y3z1z3-x3y1z2z3+x1y3z2z3+x2y1z3^2-x1y2z3^2-x2y1+x1y2",
    "y3^2z2^2-2y2y3z2z3+y2^2z3^2-y2^2-y3^2-z2^2-z3^2+1",
    "x3y3z2^2-x3y2z2z3-x2y3z2z3+x2y2z3^2-x2y2-x3y3",
    "y3^2z1z2-y2y3z1z3-y1y3z2z3+y1y2z3^2-y1y2-z1z2",
    "x3y3z1z2-x2y3z1z3-x3y1z2z3+x2y1z3^2-x2y1",
];

fn orthogonal3(name: &str, sit: Situation) -> Result<CaseSpec> {
    let s = generic(name, sit, &[3, 3])?;
    debug_assert_eq!(s.ring.names(), XYZ.map(String::from).as_slice());
    Ok(s)
}

fn o3_fiber_gens() -> [String; 6] {
    [
        format!("{}-1", dot('x', 'x')),
        format!("{}-1", dot('y', 'y')),
        format!("{}-1", dot('z', 'z')),
        dot('x', 'y'),
        dot('x', 'z'),
        dot('z', 'y'),
    ]
}

fn o3() -> Result<CaseSpec> {
    let mut s = orthogonal3("o3", Situation::O)?;
    let r = s.ring.clone();
    s.push_named("I2", labelled(&r, &O3_I2)?)?;
    let l = o3_fiber_gens();
    s.push_ideal("L", polys(&r, &l.iter().map(String::as_str).collect::<Vec<_>>())?)?;
    s.push_ideal("GB(L)", polys(&r, &O3_GB)?)?;
    let fj = QuasiPoly::new(vec![q(2), qf(3, 2), qf(5, 2), q(3)]).with_exception(0, 1).with_exception(3, 111);
    let g = QuasiPoly::new(ints(&[2, 0, 8]))
        .with_exception(0, 1)
        .with_exception(1, 9)
        .with_exception(2, 34)
        .with_exception(3, 75);
    s.expect(&key(HILBERT, "J"), ExpectedValue::Hilbert(fj), "O3 invariant ideal Hilbert function");
    s.expect(&key(HILBERT, "I2"), ExpectedValue::Hilbert(g), "O3 fixed point I2 Hilbert function");
    s.expect(&key(TANGENT_INTERVAL, "I2"), ExpectedValue::Interval(7, 8), "O3 tangent space at I2, undecided");
    s.expect(&key(DIM_H_PRIN, "I2"), ExpectedValue::Int(6), "O3 principal component dimension");
    Ok(s)
}

/// The SO₃ basis as recorded, with its last element as recorded; it contains
/// `y1^2` where the family display requires `y2^2`.
pub const SO3_GB_LAST_AS_RECORDED: &str = "x1^2-y1^2-y3^2-z2^2-z3^2+1";

const SO3_GB: [&str; 21] = [
    "y3z2-y2z3+x1",
    "y3z1-y1z3-x2",
    "y2z1-y1z2+x3",
    "x3z2-x2z3-y1",
    "x3z1-x1z3+y2",
    "x2z1-x1z2-y3",
    "x3y2-x2y3+z1",
    "x3y1-x1y3-z2",
    "x2y1-x1y2+z3",
    "y1^2+y2^2+y3^2-1",
    "z1^2+z2^2+z3^2-1",
    "x1^2+y1^2+z1^2-1",
    "x2^2+y2^2+z2^2-1",
    "x3^2+y3^2+z3^2-1",
    "y1z1+y2z2+y3z3",
    "x1z1+x2z2+x3z3",
    "x1y1+x2y2+x3y3",
    "x2x3+y2y3+z2z3",
    "x1x3+y1y3+z1z3",
    "x1x2+y1y2+z1z2",
    "x1^2-y2^2-y3^2-z2^2-z3^2+1",
];

/// Generators of the SO₃ family for the weights (−3, −1, −1), with `t`
/// standing for the family parameter.
const SO3_FAMILY: [&str; 20] = [
    "t(y3z2-y2z3)+x1",
    "t(y3z1-y1z3)-x2",
    "t(y2z1-y1z2)+x3",
    "x3z2-x2z3-t^3y1",
    "x3z1-x1z3+t^3y2",
    "x2z1-x1z2-t^3y3",
    "x3y2-x2y3+t^3z1",
    "x3y1-x1y3-t^3z2",
    "x2y1-x1y2+t^3z3",
    "y1^2+y2^2+y3^2-t^2",
    "z1^2+z2^2+z3^2-t^2",
    "x2^2+t^4y2^2+t^4z2^2-t^6",
    "x3^2+t^4y3^2+t^4z3^2-t^6",
    "y1z1+y2z2+y3z3",
    "x1z1+x2z2+x3z3",
    "x1y1+x2y2+x3y3",
    "x2x3+t^4(y2y3+z2z3)",
    "x1x3+t^4(y1y3+z1z3)",
    "x1x2+t^4(y1y2+z1z2)",
    "x1^2+t^4(-y2^2-y3^2-z2^2-z3^2)+t^6",
];

/// The recorded SO₃ family L_t with t specialized to a rational value.
pub fn so3_family(spec: &CaseSpec, t: &Rational) -> Result<Vec<QPoly>> {
    let val = format!("({t})");
    SO3_FAMILY.iter().map(|g| parse_poly(&implicit(&g.replace('t', &val)), &spec.ring)).collect()
}

/// SO₃ Z₂ generators with their names: pairings f, the three blocks of 2×2
/// minors g, and the quadrics h in x.
const SO3_I2: [(&str, &str); 20] = [
    ("f1", "x1^2+x2^2+x3^2"),
    ("f2", "y1^2+y2^2+y3^2"),
    ("f3", "z1^2+z2^2+z3^2"),
    ("f4", "x1y1+x2y2+x3y3"),
    ("f5", "y1z1+y2z2+y3z3"),
    ("f6", "x1z1+x2z2+x3z3"),
    ("g11", "x2y3-x3y2"),
    ("g12", "x3y1-x1y3"),
    ("g13", "x1y2-x2y1"),
    ("g21", "x2z3-x3z2"),
    ("g22", "x3z1-x1z3"),
    ("g23", "x1z2-x2z1"),
    ("g31", "z3y2-y3z2"),
    ("g32", "z1y3-z3y1"),
    ("g33", "z2y1-z1y2"),
    ("h1", "x1^2-x3^2"),
    ("h2", "x1x2"),
    ("h3", "x2^2"),
    ("h4", "x2x3"),
    ("h5", "x1x3"),
];

const SO3_I1: [(&str, &str); 6] = [
    ("x1", "x1"),
    ("x2", "x2"),
    ("x3", "x3"),
    ("f2", "y1^2+y2^2+y3^2"),
    ("f3", "z1^2+z2^2+z3^2"),
    ("f5", "z1y1+z2y2+z3y3"),
];

fn so3() -> Result<CaseSpec> {
    let mut s = orthogonal3("so3", Situation::SO)?;
    let r = s.ring.clone();
    s.push_named("I1", labelled(&r, &SO3_I1)?)?;
    s.push_named("I2", labelled(&r, &SO3_I2)?)?;
    let mut l = o3_fiber_gens().to_vec();
    l.push("x1(y2z3-y3z2)-x2(y1z3-y3z1)+x3(y1z2-y2z1)-1".into());
    s.push_ideal("L", polys(&r, &l.iter().map(String::as_str).collect::<Vec<_>>())?)?;
    s.push_ideal("GB(L)", polys(&r, &SO3_GB)?)?;
    // J₁ lives on the y, z coordinates only.
    let sub = Ring::new(&XYZ[3..])?;
    let j1 = Ideal::new(&sub, polys(&sub, &["y1^2+y2^2+y3^2", "z1^2+z2^2+z3^2", "y1z1+y2z2+y3z3"])?)?;
    s.ideals.push(("J1".into(), j1));
    let fj1 = QuasiPoly::new(ints(&[2, 0, 4])).with_exception(0, 1);
    s.expect(&key(HILBERT, "J1"), ExpectedValue::Hilbert(fj1), "SO3 reduced invariant ideal on two columns");
    s.expect(&key(MIN_GENERATORS, "I1"), ExpectedValue::Int(6), "SO3 minimal generator count at I1");
    s.expect(&key(TANGENT_DIM, "I1"), ExpectedValue::Int(6), "SO3 tangent space at I1");
    s.expect(&key(DIM_N, "I2"), ExpectedValue::Int(20), "SO3 generator module dimension at I2");
    s.expect(&key(RANK, "I2"), ExpectedValue::Int(12), "SO3 relation pairing rank bound at I2");
    s.expect(&key(TANGENT_LOWER, "I2"), ExpectedValue::Int(8), "SO3 tangent space lower bound at I2");
    s.expect(&key(TANGENT_DIM, "I2"), ExpectedValue::Int(8), "SO3 tangent space at I2");
    s.expect(&key(DIM_H_PRIN, "I2"), ExpectedValue::Int(6), "SO3 principal component dimension");
    Ok(s)
}

fn sp4() -> Result<CaseSpec> {
    let mut s = generic("sp4", Situation::Sp, &[4, 4])?;
    let r = s.ring.clone();
    let mut gens: Vec<(String, QPoly)> =
        fft_generators(&s).into_iter().enumerate().map(|(i, f)| (format!("f{}", i + 1), f)).collect();
    gens.extend(named(&r, "h", &["x1y2-x2y1", "x1y3-x3y1", "x1y4-x4y1", "x2y3-x3y2", "x3y4-x4y3"])?);
    s.push_named("I", gens)?;
    let poly = QuasiPoly::new(vec![
        q(1),
        qf(473, 140),
        qf(4069, 840),
        qf(29683, 7560),
        qf(481, 240),
        qf(97, 144),
        qf(3, 20),
        qf(3, 140),
        qf(1, 560),
        qf(1, 15120),
    ]);
    s.expect(&key(HILBERT, "I"), ExpectedValue::Hilbert(poly), "Sp4 fixed-point Hilbert polynomial");
    s.expect(&key(DIM_N, "I"), ExpectedValue::Int(11), "Sp4 generator module dimension");
    s.expect(&key(RANK, "I"), ExpectedValue::Int(5), "Sp4 relation pairing rank bound");
    s.expect(&key(TANGENT_LOWER, "I"), ExpectedValue::Int(6), "Sp4 tangent space lower bound");
    s.expect(&key(TANGENT_DIM, "I"), ExpectedValue::Int(6), "Sp4 tangent space at the fixed point");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{contained_in, hilbert_values, ideal_equal, ideal_intersection};
    use crate::poly::qp;
    use proptest::prelude::*;

    #[test]
    fn implicit_products() {
        assert_eq!(implicit("x2y1y3-2x1(y2+1)"), "x2*y1*y3-2*x1*(y2+1)");
        assert_eq!(implicit("y3^2z1"), "y3^2*z1");
        assert_eq!(implicit("(a1)(b2)"), "(a1)*(b2)");
    }

    #[test]
    fn quasi_poly_eval() {
        let f = QuasiPoly::new(ints(&[2, 0, 4])).with_exception(0, 1);
        assert_eq!(f.eval(0), q(1));
        assert_eq!(f.eval(3), q(38));
        assert_eq!(f.poly_at(0), q(2));
    }

    #[test]
    fn registry_names() {
        for name in list_cases() {
            let c = case(&name).unwrap();
            assert!(c.ideal("J").is_ok(), "{name}");
            for e in &c.expected {
                assert!(!e.citation.is_empty());
            }
        }
        assert!(matches!(case("nonexistent"), Err(Error::UnknownCase(_))));
        assert!(matches!(case("gl-n2-m2"), Err(Error::UnknownCase(_))));
        assert!(matches!(case("sp-n3-m2"), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn gl2_fft_matches_listed_f() {
        let c = case("gl2").unwrap();
        let listed = c.named_generators("I").unwrap();
        let fft = fft_generators(&c);
        assert_eq!(fft.len(), 4);
        for (f, (_, g)) in fft.iter().zip(listed) {
            assert_eq!(f, g);
        }
    }

    #[test]
    fn o2_fft_is_hyperbolic_triple() {
        let c = case("o2").unwrap();
        let r = &c.ring;
        let want = [qp("x1*x2", r), qp("x1*y2+x2*y1", r), qp("y1*y2", r)];
        assert_eq!(fft_generators(&c), want.to_vec());
    }

    #[test]
    fn sp4_first_generator() {
        let c = case("sp4").unwrap();
        let f1 = &fft_generators(&c)[0];
        assert_eq!(*f1, qp("-x3*y1-x4*y2+x1*y3+x2*y4", &c.ring));
        assert_eq!(fft_generators(&c).len(), 6);
        assert_eq!(fixed_point_ideal(&c, None).unwrap().gens().len(), 11);
    }

    #[test]
    fn generator_counts() {
        let sizes = [("gl3", "I", 30), ("gl2", "I", 8), ("so3", "I1", 6), ("so3", "I2", 20), ("o3", "I2", 16)];
        for (name, ideal, n) in sizes {
            assert_eq!(case(name).unwrap().ideal(ideal).unwrap().gens().len(), n, "{name}");
        }
        let so3 = case("so3").unwrap();
        assert_eq!(generic_fiber_ideal(&so3).unwrap().gens().len(), 7);
        assert_eq!(generic_fiber_ideal(&case("o3").unwrap()).unwrap().gens().len(), 6);
        assert_eq!(fft_generators(&so3).len(), 7);
    }

    #[test]
    fn fixed_point_selection() {
        assert!(matches!(fixed_point_ideal(&case("o3-I1").unwrap(), None), Err(Error::Unsupported(_))));
        assert!(matches!(fixed_point_ideal(&case("so3").unwrap(), None), Err(Error::InvalidParams(_))));
        let i1 = fixed_point_ideal(&case("so3-I1").unwrap(), None).unwrap();
        assert_eq!(i1.gens()[0], qp("x1", i1.ring()));
        assert!(fixed_point_ideal(&case("o-n2-m2").unwrap(), None).is_err());
    }

    #[test]
    fn gl2_hilbert_low_degrees() {
        let c = case("gl2").unwrap();
        assert_eq!(hilbert_values(c.ideal("I").unwrap(), 2).unwrap(), vec![1, 8, 29]);
    }

    #[test]
    fn o2_j_at_two() {
        let c = case("o2").unwrap();
        assert_eq!(hilbert_values(c.ideal("J").unwrap(), 2).unwrap()[2], 7);
    }

    #[test]
    fn so3_j1_values() {
        let c = case("so3").unwrap();
        let vals = hilbert_values(c.ideal("J1").unwrap(), 5).unwrap();
        let f = match &c.expected(&key(HILBERT, "J1")).unwrap().value {
            ExpectedValue::Hilbert(f) => f.clone(),
            _ => unreachable!(),
        };
        for (p, v) in vals.iter().enumerate() {
            assert_eq!(f.eval(p as u32), q(*v as i64));
        }
    }

    #[test]
    fn j_inside_fixed_points() {
        for (name, which) in [("gl2", None), ("o2", None), ("so3", Some(FixedPoint::I1)), ("so3", Some(FixedPoint::I2))] {
            let c = case(name).unwrap();
            let i = fixed_point_ideal(&c, which).unwrap();
            assert!(contained_in(c.ideal("J").unwrap(), &i).unwrap(), "{name}");
        }
        let o3 = case("o3").unwrap();
        assert!(contained_in(o3.ideal("J").unwrap(), o3.ideal("I2").unwrap()).unwrap());
    }

    #[test]
    fn gl2_components_intersect_to_i() {
        let c = case("gl2").unwrap();
        let k = component_ideals(&c).unwrap();
        let mut meet = k[0].clone();
        for other in &k[1..] {
            meet = ideal_intersection(&meet, other).unwrap();
        }
        assert!(ideal_equal(&meet, c.ideal("I").unwrap()).unwrap());
    }

    #[test]
    fn o2_components_miss_an_embedded_point() {
        // The two thick lines meet in an ideal strictly larger than I:
        // x1*y2 vanishes on both but is not in I.
        let c = case("o2").unwrap();
        let i = c.ideal("I").unwrap();
        let k = component_ideals(&c).unwrap();
        let meet = ideal_intersection(&k[0], &k[1]).unwrap();
        assert!(contained_in(i, &meet).unwrap());
        let w = qp("x1*y2", &c.ring);
        assert!(meet.contains(&w).unwrap());
        assert!(!i.contains(&w).unwrap());
    }

    #[test]
    fn quotient_points() {
        let c = case("gl-n2-m2x2").unwrap();
        for r in 0..=2 {
            let m = quotient_matrix(&c, &gl_point(2, 2, 2, r).unwrap()).unwrap();
            for (i, row) in m.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    assert_eq!(*v, if i == j && i < r { q(1) } else { q(0) });
                }
            }
        }
        let o = case("o-n3-m2").unwrap();
        let m = quotient_matrix(&o, &o_point(3, 2, 1).unwrap()).unwrap();
        assert_eq!(m, vec![vec![q(1), q(0)], vec![q(0), q(0)]]);
        let sp = case("sp4").unwrap();
        assert!(quotient_image(&sp, &zero_point(&sp)).unwrap().iter().all(|v| v.is_zero()));
        assert!(quotient_image(&sp, &MatrixPoint::Single(vec![vec![q(0)]])).is_err());
    }

    #[test]
    fn moment_vanishes_on_square_zero_points() {
        for (n, d) in [(1, 2), (2, 4), (2, 2), (1, 3)] {
            let c = generic("glsym", Situation::GlSymplectic, &[n, d]).unwrap();
            let mu = moment_ideal(&c).unwrap();
            assert_eq!(mu.gens().len(), n * n);
            for l in 0..=n.min(d / 2) {
                let MatrixPoint::Pair(u1, u2) = glsym_point(n, d, l).unwrap() else { unreachable!() };
                let coords: Vec<Rational> = u1.iter().flatten().chain(u2_coords(&u2, n, d).iter()).cloned().collect();
                assert!(mu.gens().iter().all(|g| g.eval(&coords).is_zero()));
                let nu = quotient_matrix(&c, &glsym_point(n, d, l).unwrap()).unwrap();
                let square = mat_mul(&nu, &nu, &q(0));
                assert!(square.iter().flatten().all(|v| v.is_zero()));
                assert_eq!(crate::linalg::rank(&nu), l);
            }
        }
        let os = case("osym-n2-d2").unwrap();
        assert_eq!(moment_ideal(&os).unwrap().gens().len(), 1);
        let ss = case("spsym-n2-d2").unwrap();
        assert_eq!(moment_ideal(&ss).unwrap().gens().len(), 3);
        assert!(moment_ideal(&case("gl2").unwrap()).is_err());
    }

    /// Ring coordinates y_{ic} (row-major in i, c) read off the u₂ matrix.
    fn u2_coords(u2: &Mat, n: usize, n2: usize) -> Vec<Rational> {
        let mut v = Vec::new();
        for i in 1..=n {
            for c in 1..=n2 {
                v.push(u2[n2 - c][n - i].clone());
            }
        }
        v
    }

    fn point_coords(c: &CaseSpec, pt: &MatrixPoint) -> Vec<Rational> {
        match (c.layout, pt) {
            (Layout::Pair { n, n2, .. }, MatrixPoint::Pair(u1, u2)) => {
                u1.iter().flatten().cloned().chain(u2_coords(u2, n, n2)).collect()
            }
            (Layout::Single { .. }, MatrixPoint::Single(w)) => transpose(w).into_iter().flatten().collect(),
            _ => unreachable!(),
        }
    }

    fn random_point(c: &CaseSpec, vals: &[i64]) -> MatrixPoint {
        let mut it = vals.iter().cycle().map(|&v| q(v));
        let mut m = |r: usize, k: usize| -> Mat { (0..r).map(|_| (0..k).map(|_| it.next().unwrap()).collect()).collect() };
        match c.layout {
            Layout::Pair { n, n1, n2 } => {
                let u1 = m(n, n1);
                MatrixPoint::Pair(u1, m(n2, n))
            }
            Layout::Single { rows, cols } => MatrixPoint::Single(m(rows, cols)),
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn quotient_image_matches_generators(
            idx in 0usize..11,
            vals in proptest::collection::vec(-4i64..5, 1..20),
        ) {
            let names = ["gl2", "o2", "o3", "so3", "sp4", "gl-n2-m3x1", "sl-n2-m3", "so-n2-m3",
                         "glsym-n2-d3", "osym-n2-d2", "spsym-n2-d2"];
            let c = case(names[idx]).unwrap();
            let pt = random_point(&c, &vals);
            let img = quotient_image(&c, &pt).unwrap();
            let coords = point_coords(&c, &pt);
            let gens = fft_generators(&c);
            prop_assert_eq!(img.len(), gens.len());
            for (v, g) in img.iter().zip(&gens) {
                prop_assert_eq!(v, &g.eval(&coords));
            }
        }

        #[test]
        fn catalogued_generators_round_trip(idx in 0usize..6) {
            let c = case(["gl2", "gl3", "o2", "o3", "so3", "sp4"][idx]).unwrap();
            for (_, ideal) in &c.ideals {
                for g in ideal.gens() {
                    let back: QPoly = parse_poly(&g.to_text(), ideal.ring()).unwrap();
                    prop_assert_eq!(&back, g);
                }
            }
        }
    }
}
