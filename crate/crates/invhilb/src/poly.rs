//! Multivariate polynomials over a [`Field`], monomial orders, and the text
//! format used throughout the crate.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar::{Field, Rational};

/// Polynomial ring in named, degree-one variables.
#[derive(Debug, PartialEq, Eq)]
pub struct Ring {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<RingRef> {
        if names.is_empty() {
            return Err(Error::InvalidRing("no variables".into()));
        }
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            let n = n.as_ref();
            let ok = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::InvalidRing(format!("bad variable name `{n}`")));
            }
            if index.insert(n.to_string(), i).is_some() {
                return Err(Error::InvalidRing(format!("duplicate variable `{n}`")));
            }
        }
        Ok(Arc::new(Ring { names: names.iter().map(|s| s.as_ref().to_string()).collect(), index }))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// A new ring with `extra` prepended to the variable list.
    pub fn with_leading<S: AsRef<str>>(&self, extra: &[S]) -> Result<RingRef> {
        let mut all: Vec<String> = extra.iter().map(|s| s.as_ref().to_string()).collect();
        all.extend(self.names.iter().cloned());
        Ring::new(&all)
    }
}

pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}

/// Exponent vector of a monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: SmallVec<[u16; 20]>,
    deg: u32,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, n), deg: 0 }
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        Monomial { exps: SmallVec::from_slice(exps), deg: exps.iter().map(|&e| e as u32).sum() }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            deg: self.deg + other.deg,
        }
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
            deg: self.deg - other.deg,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 20]> =
            self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit i set when variable i (mod 64) occurs; used as a divisibility prefilter.
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)))
    }

    pub fn weight(&self, w: &[i64]) -> i64 {
        self.exps.iter().zip(w).map(|(&e, &wi)| e as i64 * wi).sum()
    }

    fn fmt_in(&self, ring: &Ring, out: &mut String) {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                out.push('*');
            }
            first = false;
            out.push_str(ring.name(i));
            if e > 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
    }

    pub fn to_string_in(&self, ring: &Ring) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut s = String::new();
        self.fmt_in(ring, &mut s);
        s
    }
}

/// A monomial order. `Weighted(w)` ranks the term of smaller `w`-weight as
/// the larger one and breaks ties by grevlex, so leading terms live in the
/// minimal-weight initial form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    GrevLex,
    Weighted(Vec<i64>),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Weighted(w) => {
                b.weight(w).cmp(&a.weight(w)).then_with(|| grevlex(a, b))
            }
        }
    }

    /// Whether this order refines total degree, so that degree-truncated
    /// Buchberger runs are meaningful.
    pub fn is_degree_compatible(&self) -> bool {
        match self {
            MonomialOrder::GrevLex => true,
            MonomialOrder::Lex => false,
            MonomialOrder::Weighted(w) => w.iter().all(|&x| x == w[0]) && w.first().is_some_and(|&x| x <= 0),
        }
    }
}

fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    a.deg.cmp(&b.deg).then_with(|| {
        for (x, y) in a.exps.iter().zip(&b.exps).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// Sparse polynomial; terms are kept sorted by descending grevlex with no zero
/// coefficients.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: RingRef,
    terms: Vec<(Monomial, F)>,
}

pub type QPoly = Polynomial<Rational>;

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &RingRef, c: F) -> Self {
        Self::from_terms(ring, vec![(Monomial::one(ring.nvars()), c)])
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, F::one())
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        Polynomial { ring: ring.clone(), terms: vec![(Monomial::var(ring.nvars(), i), F::one())] }
    }

    pub fn var_named(ring: &RingRef, name: &str) -> Result<Self> {
        let i = ring.var_index(name).ok_or_else(|| Error::UnknownVariable(name.into()))?;
        Ok(Self::var(ring, i))
    }

    pub fn monomial(ring: &RingRef, m: Monomial, c: F) -> Self {
        Self::from_terms(ring, vec![(m, c)])
    }

    /// Builds a polynomial from arbitrary terms, merging repeats and dropping zeros.
    pub fn from_terms(ring: &RingRef, terms: Vec<(Monomial, F)>) -> Self {
        let mut acc: HashMap<Monomial, F> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            match acc.get_mut(&m) {
                Some(v) => *v = v.add_ref(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| grevlex(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Trusts the caller that `terms` is already canonical.
    pub(crate) fn from_sorted(ring: &RingRef, terms: Vec<(Monomial, F)>) -> Self {
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(n, _)| n.degree() == m.degree()),
        }
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms
            .binary_search_by(|(n, _)| grevlex(m, n))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| F::zero())
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn merge(&self, other: &Self, sign: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match grevlex(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if sign { b[j].1.clone() } else { -b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if sign { a[i].1.add_ref(&b[j].1) } else { a[i].1.sub_ref(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), if sign { c.clone() } else { -c.clone() })));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                terms.push((m.mul(n), c.mul_ref(d)));
            }
        }
        Ok(Self::from_terms(&self.ring, terms))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d.mul_ref(c))).collect(),
        }
    }

    pub fn mul_monomial(&self, t: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.mul(t), d.mul_ref(c))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The order-maximal term.
    pub fn leading_term(&self, order: &MonomialOrder) -> Result<(Monomial, F)> {
        let mut best: Option<&(Monomial, F)> = None;
        for t in &self.terms {
            if best.is_none_or(|b| order.cmp(&t.0, &b.0) == Ordering::Greater) {
                best = Some(t);
            }
        }
        best.cloned().ok_or(Error::ZeroPolynomial)
    }

    /// Sum of the terms of minimal `w`-weight (zero stays zero).
    pub fn initial_form(&self, w: &[i64]) -> Result<Self> {
        if w.len() != self.ring.nvars() {
            return Err(Error::LengthMismatch { expected: self.ring.nvars(), got: w.len() });
        }
        let Some(min) = self.terms.iter().map(|(m, _)| m.weight(w)).min() else {
            return Ok(self.clone());
        };
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.weight(w) == min).cloned().collect(),
        })
    }

    pub fn eval(&self, point: &[F]) -> F {
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t = t.mul_ref(&point[i]);
                }
            }
            acc = acc.add_ref(&t);
        }
        acc
    }

    /// Replaces variable i by `images[i]`; the result lives in the images' ring.
    pub fn substitute(&self, images: &[Polynomial<F>]) -> Result<Self> {
        if images.len() != self.ring.nvars() {
            return Err(Error::LengthMismatch { expected: self.ring.nvars(), got: images.len() });
        }
        let target = images.first().map(|p| p.ring.clone()).unwrap_or_else(|| self.ring.clone());
        let mut acc = Self::zero(&target);
        let mut powers: Vec<Vec<Polynomial<F>>> = vec![Vec::new(); images.len()];
        for (m, c) in &self.terms {
            let mut t = Self::constant(&target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() < e as usize {
                    let next = match powers[i].last() {
                        None => images[i].clone(),
                        Some(p) => p.try_mul(&images[i])?,
                    };
                    powers[i].push(next);
                }
                t = t.try_mul(&powers[i][e as usize - 1])?;
            }
            acc = acc.try_add(&t)?;
        }
        Ok(acc)
    }

    /// Moves the polynomial into `target`, sending variable i to `map[i]`.
    pub fn embed(&self, target: &RingRef, map: &[usize]) -> Self {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u16; n];
                for (i, &x) in m.exps().iter().enumerate() {
                    e[map[i]] += x;
                }
                (Monomial::from_exps(&e), c.clone())
            })
            .collect();
        Self::from_terms(target, terms)
    }

    /// Embeds into a ring whose variables include all of ours, matched by name.
    pub fn embed_by_name(&self, target: &RingRef) -> Result<Self> {
        let map = self
            .ring
            .names()
            .iter()
            .map(|n| target.var_index(n).ok_or_else(|| Error::UnknownVariable(n.clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.embed(target, &map))
    }

    /// Formal derivative with respect to variable i.
    pub fn derivative(&self, i: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exps()[i] > 0)
            .map(|(m, c)| {
                let e = m.exps()[i];
                let mut x = m.exps().to_vec();
                x[i] -= 1;
                (Monomial::from_exps(&x), c.mul_ref(&F::of_i64(e as i64)))
            })
            .collect();
        Self::from_terms(&self.ring, terms)
    }

    pub fn max_var_index(&self) -> Option<usize> {
        self.terms
            .iter()
            .filter_map(|(m, _)| m.exps().iter().rposition(|&e| e > 0))
            .max()
    }

    /// Canonical text: grevlex-descending terms, `*`/`^` monomials,
    /// unit coefficients omitted.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = is_negative(c);
            let mag = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                m.fmt_in(&self.ring, &mut out);
            }
        }
        out
    }
}

fn is_negative<F: Field>(c: &F) -> bool {
    *c < F::zero()
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        /// Panics on ring mismatch; use the `try_` form when that can happen.
        impl<F: Field> std::ops::$tr<&Polynomial<F>> for &Polynomial<F> {
            type Output = Polynomial<F>;
            fn $m(self, rhs: &Polynomial<F>) -> Polynomial<F> {
                self.$imp(rhs).expect("ring mismatch")
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl<F: Field> std::ops::Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_op<F: Field>(a: &Polynomial<F>, b: &Polynomial<F>, op: PolyOp) -> Result<Polynomial<F>> {
    match op {
        PolyOp::Add => a.try_add(b),
        PolyOp::Sub => a.try_sub(b),
        PolyOp::Mul => a.try_mul(b),
    }
}

pub fn leading_term<F: Field>(p: &Polynomial<F>, order: &MonomialOrder) -> Result<(Monomial, F)> {
    p.leading_term(order)
}

pub fn initial_form<F: Field>(p: &Polynomial<F>, w: &[i64]) -> Result<Polynomial<F>> {
    p.initial_form(w)
}

// ---------------------------------------------------------------------------
// Parsing

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let b = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let s = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            out.push((s, Tok::Num(text[s..i].to_string())));
        } else if c.is_ascii_alphabetic() {
            let s = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            out.push((s, Tok::Ident(text[s..i].to_string())));
        } else if "+-*^/()".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Syntax { pos: i, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ring: &'a RingRef,
    _f: std::marker::PhantomData<F>,
}

impl<F: Field> Parser<'_, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Syntax { pos: self.here(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut acc = Polynomial::zero(self.ring);
        let mut first = true;
        loop {
            let neg = if self.eat('-') {
                true
            } else {
                let plus = self.eat('+');
                if !first && !plus {
                    return Ok(acc);
                }
                false
            };
            let t = self.term()?;
            acc = if neg { &acc - &t } else { &acc + &t };
            first = false;
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<F>> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.parse().or_else(|_| self.err("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => self.err("expected exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial<F>> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let num = F::parse_int(&n).ok_or_else(|| Error::Syntax { pos: self.here(), msg: "bad number".into() })?;
                let val = if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) => {
                            self.pos += 1;
                            let den = F::parse_int(&d)
                                .ok_or_else(|| Error::Syntax { pos: self.here(), msg: "bad number".into() })?;
                            if den.is_zero() {
                                return Err(Error::ZeroDenominator);
                            }
                            num.div_ref(&den)
                        }
                        _ => return self.err("expected denominator"),
                    }
                } else {
                    num
                };
                Ok(Polynomial::constant(self.ring, val))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Polynomial::var_named(self.ring, &name)
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            _ => self.err("expected a number, variable or `(`"),
        }
    }
}

/// Parses polynomial text in `ring`. Accepts the canonical format plus
/// parentheses and arbitrary term order.
pub fn parse_poly<F: Field>(text: &str, ring: &RingRef) -> Result<Polynomial<F>> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len(), ring, _f: std::marker::PhantomData };
    if p.toks.is_empty() {
        return p.err("empty input");
    }
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Rational shorthand used by the catalog and tests; panics on bad input.
pub fn qp(text: &str, ring: &RingRef) -> QPoly {
    parse_poly(text, ring).unwrap_or_else(|e| panic!("bad polynomial `{text}`: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str]) -> RingRef {
        Ring::new(names).unwrap()
    }

    #[test]
    fn parse_and_print() {
        let r = ring(&["x11", "x21", "y12", "y22"]);
        let f = qp("y22*x11 + y12*x21", &r);
        assert_eq!(f.len(), 2);
        assert_eq!(qp(&f.to_text(), &r), f);
        assert!(qp("0", &r).is_zero());
        let g = qp("-3/4*x11^2 + 2 - x21*(x11 - y12)", &r);
        assert_eq!(g.to_text(), "-3/4*x11^2 - x11*x21 + x21*y12 + 2");
    }

    #[test]
    fn parse_errors() {
        let r = ring(&["x", "y"]);
        assert_eq!(parse_poly::<Rational>("z", &r), Err(Error::UnknownVariable("z".into())));
        assert_eq!(parse_poly::<Rational>("1/0", &r), Err(Error::ZeroDenominator));
        assert!(matches!(parse_poly::<Rational>("x +", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly::<Rational>("x y", &r), Err(Error::Syntax { .. })));
    }

    #[test]
    fn orders() {
        let r = ring(&["x", "y"]);
        let p = qp("x^2*y + x*y^2", &r);
        assert_eq!(p.leading_term(&MonomialOrder::GrevLex).unwrap().0.exps(), &[2, 1]);
        let p = qp("x + y", &r);
        assert_eq!(p.leading_term(&MonomialOrder::Lex).unwrap().0.exps(), &[1, 0]);
        // smaller weight wins: y has weight -1, x has -3, so x^2 (-6) beats y^2 (-2)
        let p = qp("x^2 + y^2", &r);
        let w = MonomialOrder::Weighted(vec![-3, -1]);
        assert_eq!(p.leading_term(&w).unwrap().0.exps(), &[2, 0]);
        assert_eq!(qp("0", &r).leading_term(&w), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn initial_forms() {
        let r = ring(&["x1", "y2", "y3", "z2", "z3"]);
        let p = qp("y3*z2 - y2*z3 + x1", &r);
        assert_eq!(p.initial_form(&[-3, -1, -1, -1, -1]).unwrap(), qp("x1", &r));
        assert_eq!(p.initial_form(&[0; 5]).unwrap(), p);
        let r = ring(&["x1", "x2", "x3"]);
        let p = qp("x1^2 + x2^2 + x3^2 - 1", &r);
        assert_eq!(p.initial_form(&[-3, -3, -3]).unwrap(), qp("x1^2 + x2^2 + x3^2", &r));
    }

    #[test]
    fn arithmetic() {
        let r = ring(&["x11", "x21", "y11", "y21"]);
        let f3 = qp("y21*x11 + y11*x21", &r);
        let x11 = qp("x11", &r);
        assert_eq!(&f3 * &x11, qp("y21*x11^2 + y11*x21*x11", &r));
        assert_eq!(&f3 + &qp("0", &r), f3);
        let other = ring(&["a"]);
        assert_eq!(poly_op(&f3, &qp("a", &other), PolyOp::Add), Err(Error::RingMismatch));
    }
}
