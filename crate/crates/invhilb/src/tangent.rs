//! Tangent-space bookkeeping at fixed points.
//!
//! For I generated by g₁..g_k, a G-equivariant ψ: N → R = k[W]/I (N the span
//! of the generators) pairs with every relation Σ aᵢ⊗gᵢ (Σ aᵢgᵢ ∈ I²) to give
//! Σ ψ(gᵢ)aᵢ ∈ R. Linear independence of those pairings bounds the rank of ρ*
//! from below, hence the tangent dimension dim N − rank(ρ*) from above.

use std::collections::HashMap;

use num_traits::Zero;

use crate::catalog::{self, CaseSpec, ExpectedValue, FixedPoint};
use crate::error::{Error, Result};
use crate::groebner::{ideal_equal, ideal_product, Ideal};
use crate::linalg;
use crate::poly::{parse_poly, Monomial, MonomialOrder, QPoly, RingRef};
use crate::scalar::Rational;
use crate::QIdeal;

#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub names: Vec<String>,
    pub polys: Vec<QPoly>,
    /// Dimension of the abstract module N as recorded for the case.
    pub dim_n: usize,
}

impl GeneratorSet {
    pub fn new(named: &[(String, QPoly)], dim_n: usize) -> Self {
        GeneratorSet {
            names: named.iter().map(|(n, _)| n.clone()).collect(),
            polys: named.iter().map(|(_, p)| p.clone()).collect(),
            dim_n,
        }
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn ring(&self) -> Result<&RingRef> {
        self.polys.first().map(|p| p.ring()).ok_or(Error::InvalidParams("empty generator set".into()))
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::InvalidParams(format!("no generator named `{name}`")))
    }

    fn sparse(&self, entries: &[(&str, &str)]) -> Result<Vec<QPoly>> {
        let ring = self.ring()?;
        let mut out = vec![QPoly::zero(ring); self.len()];
        for (g, text) in entries {
            let i = self.index(g)?;
            let p: QPoly = parse_poly(&catalog::implicit(text), ring)?;
            out[i] = &out[i] + &p;
        }
        Ok(out)
    }
}

/// Coefficients a₁..a_k of a candidate relation Σ aᵢ⊗gᵢ.
#[derive(Clone, Debug)]
pub struct RelationVector {
    pub name: String,
    pub coeffs: Vec<QPoly>,
}

impl RelationVector {
    /// Builds a relation from `(generator, coefficient)` pairs; unlisted
    /// generators get coefficient 0.
    pub fn parse(name: &str, gens: &GeneratorSet, entries: &[(&str, &str)]) -> Result<Self> {
        Ok(RelationVector { name: name.into(), coeffs: gens.sparse(entries)? })
    }

    pub fn combination(&self, gens: &GeneratorSet) -> Result<QPoly> {
        if self.coeffs.len() != gens.len() {
            return Err(Error::LengthMismatch { expected: gens.len(), got: self.coeffs.len() });
        }
        let mut acc = QPoly::zero(gens.ring()?);
        for (a, g) in self.coeffs.iter().zip(&gens.polys) {
            if !a.is_zero() {
                acc = acc.try_add(&a.try_mul(g)?)?;
            }
        }
        Ok(acc)
    }
}

/// Values ψ(gᵢ) ∈ R, stored as normal forms modulo I.
#[derive(Clone, Debug)]
pub struct TestMorphism {
    pub name: String,
    pub values: Vec<QPoly>,
}

impl TestMorphism {
    pub fn from_values(name: &str, values: Vec<QPoly>, i: &QIdeal) -> Result<Self> {
        let values = values.iter().map(|v| nf(v, i)).collect::<Result<_>>()?;
        Ok(TestMorphism { name: name.into(), values })
    }

    pub fn parse(name: &str, gens: &GeneratorSet, entries: &[(&str, &str)], i: &QIdeal) -> Result<Self> {
        Self::from_values(name, gens.sparse(entries)?, i)
    }

    /// gⱼ ↦ 1 for the named generator, 0 elsewhere.
    pub fn kronecker(name: &str, gens: &GeneratorSet, target: &str, i: &QIdeal) -> Result<Self> {
        Self::parse(name, gens, &[(target, "1")], i)
    }

    /// Σ cⱼ·ψⱼ with polynomial coefficients.
    pub fn combine(name: &str, parts: &[(QPoly, &TestMorphism)], i: &QIdeal) -> Result<Self> {
        let (c0, m0) = parts.first().ok_or(Error::InvalidParams("empty combination".into()))?;
        let mut values = vec![QPoly::zero(c0.ring()); m0.values.len()];
        for (c, m) in parts {
            for (acc, v) in values.iter_mut().zip(&m.values) {
                *acc = acc.try_add(&c.try_mul(v)?)?;
            }
        }
        Self::from_values(name, values, i)
    }
}

fn nf(p: &QPoly, i: &QIdeal) -> Result<QPoly> {
    i.normal_form(p, &MonomialOrder::GrevLex)
}

pub fn check_generates(gens: &GeneratorSet, i: &QIdeal) -> Result<bool> {
    let mine = Ideal::new(gens.ring()?, gens.polys.clone())?;
    ideal_equal(&mine, i)
}

/// Whether Σ aᵢgᵢ lies in I².
pub fn check_relation(rel: &RelationVector, gens: &GeneratorSet, i: &QIdeal) -> Result<bool> {
    let comb = rel.combination(gens)?;
    if comb.is_zero() {
        return Ok(true);
    }
    let sq = ideal_product(i, i)?;
    sq.contains(&comb)
}

/// Σ ψ(gᵢ)·aᵢ modulo I.
pub fn evaluate_pairing(psi: &TestMorphism, rel: &RelationVector, i: &QIdeal) -> Result<QPoly> {
    if psi.values.len() != rel.coeffs.len() {
        return Err(Error::LengthMismatch { expected: rel.coeffs.len(), got: psi.values.len() });
    }
    let mut acc = QPoly::zero(i.ring());
    for (v, a) in psi.values.iter().zip(&rel.coeffs) {
        if !v.is_zero() && !a.is_zero() {
            acc = acc.try_add(&v.try_mul(a)?)?;
        }
    }
    nf(&acc, i)
}

/// Rank over ℚ of the rows ψ ↦ (coefficients of evaluate_pairing(ψ, r))_r.
pub fn rank_lower_bound(psis: &[TestMorphism], rels: &[RelationVector], i: &QIdeal) -> Result<usize> {
    let rows = psis
        .iter()
        .map(|psi| rels.iter().map(|r| evaluate_pairing(psi, r, i)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(flattened_rank(&rows))
}

/// Rank over ℚ of the value tuples (ψ(g₁), …, ψ(g_k)) in R^k.
pub fn value_rank(psis: &[TestMorphism]) -> usize {
    let rows: Vec<Vec<QPoly>> = psis.iter().map(|p| p.values.clone()).collect();
    flattened_rank(&rows)
}

fn flattened_rank(rows: &[Vec<QPoly>]) -> usize {
    let mut cols: HashMap<(usize, Monomial), usize> = HashMap::new();
    let mut sparse: Vec<Vec<(usize, Rational)>> = Vec::new();
    for row in rows {
        let mut entries = Vec::new();
        for (k, p) in row.iter().enumerate() {
            for (m, c) in p.terms() {
                let next = cols.len();
                let col = *cols.entry((k, m.clone())).or_insert(next);
                entries.push((col, c.clone()));
            }
        }
        sparse.push(entries);
    }
    let mut dense = vec![vec![Rational::zero(); cols.len()]; rows.len()];
    for (r, entries) in sparse.into_iter().enumerate() {
        for (c, v) in entries {
            dense[r][c] = v;
        }
    }
    linalg::rank(&dense)
}

/// Number of minimal homogeneous generators: Σ_d dim I_d / (m·I)_d.
pub fn minimal_generator_count(i: &QIdeal) -> Result<usize> {
    if !i.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let ring = i.ring().clone();
    let n = ring.nvars();
    let mut gens: Vec<&QPoly> = i.gens().iter().collect();
    gens.sort_by_key(|g| g.total_degree());
    let mut count = 0;
    let mut degrees: Vec<u32> = gens.iter().filter_map(|g| g.total_degree()).collect();
    degrees.dedup();
    for d in degrees {
        // span of m·I in degree d, then add the degree-d generators
        let mut basis: Vec<QPoly> = Vec::new();
        for g in gens.iter().filter(|g| g.total_degree().is_some_and(|e| e < d)) {
            let e = d - g.total_degree().unwrap_or(0);
            for m in monomials_of_degree(n, e) {
                basis.push(g.mul_monomial(&m, &Rational::from_integer(1.into())));
            }
        }
        let mut ech = Echelon::default();
        for b in &basis {
            ech.insert(b.clone(), QPoly::zero(&ring));
        }
        for g in gens.iter().filter(|g| g.total_degree() == Some(d)) {
            if ech.insert((*g).clone(), QPoly::zero(&ring)) {
                count += 1;
            }
        }
    }
    Ok(count)
}

fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left as u16;
            out.push(Monomial::from_exps(cur));
            return;
        }
        for e in 0..=left {
            cur[i] = e as u16;
            rec(i + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, d, &mut vec![0; n], &mut out);
    out
}

/// Pairs (polynomial, value) in echelon form by leading grevlex monomial.
#[derive(Default)]
struct Echelon {
    rows: Vec<(QPoly, QPoly)>,
    leads: HashMap<Monomial, usize>,
}

impl Echelon {
    /// Reduces `p` (tracking `v`) against the rows.
    fn reduce(&self, mut p: QPoly, mut v: QPoly) -> (QPoly, QPoly) {
        while let Ok((m, c)) = p.leading_term(&MonomialOrder::GrevLex) {
            let Some(&k) = self.leads.get(&m) else { break };
            let (rp, rv) = &self.rows[k];
            let lc = rp.coeff(&m);
            let f = c / lc;
            p = &p - &rp.scale(&f);
            v = &v - &rv.scale(&f);
        }
        (p, v)
    }

    /// Inserts the pair if `p` is independent of the rows; returns whether it was.
    fn insert(&mut self, p: QPoly, v: QPoly) -> bool {
        let (p, v) = self.reduce(p, v);
        match p.leading_term(&MonomialOrder::GrevLex) {
            Ok((m, _)) => {
                self.leads.insert(m, self.rows.len());
                self.rows.push((p, v));
                true
            }
            Err(_) => false,
        }
    }
}

/// Derivation of k[W] given by its values on the variables.
fn derive(p: &QPoly, images: &[QPoly]) -> Result<QPoly> {
    let mut acc = QPoly::zero(p.ring());
    for (i, img) in images.iter().enumerate() {
        if img.is_zero() {
            continue;
        }
        let d = p.derivative(i);
        if !d.is_zero() {
            acc = acc.try_add(&d.try_mul(img)?)?;
        }
    }
    Ok(acc)
}

/// The action of the elementary matrices E_ab of gl(V) on the coordinates of
/// a GL case: x_{aj} ↦ x_{bj} and y_{n+1−b,c} ↦ −y_{n+1−a,c}.
pub fn gl_derivations(spec: &CaseSpec) -> Result<Vec<Vec<QPoly>>> {
    let catalog::Layout::Pair { n, n1, n2 } = spec.layout else {
        return Err(Error::Unsupported("derivations are implemented for GL layouts".into()));
    };
    let ring = &spec.ring;
    let name = |c: char, a: usize, b: usize| {
        if a < 10 && b < 10 {
            format!("{c}{a}{b}")
        } else {
            format!("{c}{a}_{b}")
        }
    };
    let var = |s: String| QPoly::var_named(ring, &s);
    let mut out = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            let mut images = vec![QPoly::zero(ring); ring.nvars()];
            for j in 1..=n1 {
                let i = ring.var_index(&name('x', a, j)).ok_or_else(|| Error::UnknownVariable(name('x', a, j)))?;
                images[i] = var(name('x', b, j))?;
            }
            for c in 1..=n2 {
                let i = ring.var_index(&name('y', n + 1 - b, c)).ok_or_else(|| Error::UnknownVariable(name('y', n + 1 - b, c)))?;
                images[i] = -&var(name('y', n + 1 - a, c))?;
            }
            out.push(images);
        }
    }
    Ok(out)
}

/// Extends a morphism by equivariance under the derivations.
///
/// `fixed` gives values outright. Each block is a set of generator indices
/// with seed values; blocks are filled in order, and the orbit of the seeds
/// together with the monomial multiples of everything already determined
/// must span the block.
pub fn equivariant_extension(
    name: &str,
    gens: &GeneratorSet,
    fixed: &[(usize, QPoly)],
    blocks: &[(Vec<usize>, Vec<(usize, QPoly)>)],
    derivations: &[Vec<QPoly>],
    i: &QIdeal,
) -> Result<TestMorphism> {
    let ring = gens.ring()?.clone();
    let one = Rational::from_integer(1.into());
    let mut values = vec![QPoly::zero(&ring); gens.len()];
    let mut known: Vec<usize> = Vec::new();
    for (k, v) in fixed {
        values[*k] = nf(v, i)?;
        known.push(*k);
    }
    for (members, seeds) in blocks {
        let d = seeds.first().and_then(|(k, _)| gens.polys[*k].total_degree()).unwrap_or(0);
        let mut ech = Echelon::default();
        for &k in &known {
            let Some(e) = gens.polys[k].total_degree().filter(|&e| e <= d) else { continue };
            for m in monomials_of_degree(ring.nvars(), d - e) {
                ech.insert(gens.polys[k].mul_monomial(&m, &one), values[k].mul_monomial(&m, &one));
            }
        }
        let mut queue = seeds
            .iter()
            .map(|(k, v)| Ok((gens.polys[*k].clone(), nf(v, i)?)))
            .collect::<Result<Vec<_>>>()?;
        while let Some((p, v)) = queue.pop() {
            let (rp, rv) = ech.reduce(p.clone(), v.clone());
            if rp.is_zero() {
                if !nf(&rv, i)?.is_zero() {
                    return Err(Error::InvalidParams(format!("{name}: values are not equivariant")));
                }
                continue;
            }
            ech.insert(p.clone(), v.clone());
            for der in derivations {
                queue.push((derive(&p, der)?, nf(&derive(&v, der)?, i)?));
            }
        }
        for &k in members {
            let (rp, rv) = ech.reduce(gens.polys[k].clone(), QPoly::zero(&ring));
            if !rp.is_zero() {
                return Err(Error::InvalidParams(format!("{name}: generator {} is outside the orbit span", gens.names[k])));
            }
            values[k] = nf(&-&rv, i)?;
            known.push(k);
        }
    }
    TestMorphism::from_values(name, values, i)
}

/// Torus weights of a GL case: each x_{kj} contributes (e_k, e_j, 0) and
/// each y_{ic} contributes (−e_{n+1−i}, 0, e_c).
pub fn gl_grading(spec: &CaseSpec) -> Result<Vec<Vec<i64>>> {
    let catalog::Layout::Pair { n, n1, n2 } = spec.layout else {
        return Err(Error::Unsupported("torus grading is implemented for GL layouts".into()));
    };
    let width = n + n1 + n2;
    let mut out = vec![vec![0; width]; spec.ring.nvars()];
    for (v, w) in out.iter_mut().enumerate() {
        let name = spec.ring.name(v);
        let digits: String = name[1..].chars().filter(|c| *c != '_').collect();
        let (a, b) = if name[1..].contains('_') {
            let mut it = name[1..].split('_').map(|t| t.parse::<usize>().unwrap_or(0));
            (it.next().unwrap_or(0), it.next().unwrap_or(0))
        } else {
            let d: Vec<usize> = digits.chars().filter_map(|c| c.to_digit(10).map(|d| d as usize)).collect();
            (d[0], d[1])
        };
        if name.starts_with('x') {
            w[a - 1] += 1;
            w[n + b - 1] += 1;
        } else {
            w[n - a] -= 1;
            w[n + n1 + b - 1] += 1;
        }
    }
    Ok(out)
}

fn monomial_key(m: &Monomial, grading: &[Vec<i64>]) -> Vec<i64> {
    let width = grading.first().map_or(0, |g| g.len());
    let mut key = vec![0; width];
    for (v, &e) in m.exps().iter().enumerate() {
        for (k, g) in key.iter_mut().zip(&grading[v]) {
            *k += e as i64 * g;
        }
    }
    key
}

/// Every relation Σ aᵢ⊗gᵢ of total degree `degree` with Σ aᵢgᵢ ∈ I², one
/// torus weight at a time. The result spans the relations of that degree
/// modulo those with Σ aᵢgᵢ = 0 coming from I² alone.
pub fn homogeneous_relations(
    gens: &GeneratorSet,
    i: &QIdeal,
    degree: u32,
    grading: &[Vec<i64>],
) -> Result<Vec<RelationVector>> {
    let ring = gens.ring()?.clone();
    let n = ring.nvars();
    let one = Rational::from_integer(1.into());
    // (Some((generator, multiplier)) | None for I² products, polynomial)
    type Unknown = (Option<(usize, Monomial)>, QPoly);
    let mut groups: std::collections::BTreeMap<Vec<i64>, Vec<Unknown>> = Default::default();
    let mut push = |tag: Option<(usize, Monomial)>, p: QPoly| {
        if let Some((m, _)) = p.terms().first() {
            groups.entry(monomial_key(m, grading)).or_default().push((tag, p));
        }
    };
    for (k, g) in gens.polys.iter().enumerate() {
        let Some(e) = g.total_degree().filter(|&e| e <= degree) else { continue };
        for m in monomials_of_degree(n, degree - e) {
            push(Some((k, m.clone())), g.mul_monomial(&m, &one));
        }
    }
    let ig = i.gens();
    for a in 0..ig.len() {
        for b in a..ig.len() {
            let prod = ig[a].try_mul(&ig[b])?;
            let Some(e) = prod.total_degree().filter(|&e| e <= degree) else { continue };
            for m in monomials_of_degree(n, degree - e) {
                push(None, prod.mul_monomial(&m, &one));
            }
        }
    }
    let mut out = Vec::new();
    for (_, unknowns) in groups {
        if !unknowns.iter().any(|(t, _)| t.is_some()) {
            continue;
        }
        let mut rows: HashMap<Monomial, usize> = HashMap::new();
        for (_, p) in &unknowns {
            for (m, _) in p.terms() {
                let next = rows.len();
                rows.entry(m.clone()).or_insert(next);
            }
        }
        let mut mat = vec![vec![Rational::zero(); unknowns.len()]; rows.len()];
        for (c, (_, p)) in unknowns.iter().enumerate() {
            for (m, v) in p.terms() {
                mat[rows[m]][c] = v.clone();
            }
        }
        for vec in linalg::kernel(&mat, unknowns.len()) {
            let mut coeffs = vec![QPoly::zero(&ring); gens.len()];
            let mut any = false;
            for ((tag, _), c) in unknowns.iter().zip(&vec) {
                if let (Some((k, m)), false) = (tag, c.is_zero()) {
                    coeffs[*k] = &coeffs[*k] + &QPoly::monomial(&ring, m.clone(), c.clone());
                    any = true;
                }
            }
            if any {
                out.push(RelationVector { name: format!("deg{degree}-{}", out.len() + 1), coeffs });
            }
        }
    }
    Ok(out)
}

/// Greedily picks candidates that raise the pairing rank above that of
/// `base`, renaming them `aux1`, `aux2`, ….
pub fn select_relations(
    psis: &[TestMorphism],
    base: &[RelationVector],
    candidates: Vec<RelationVector>,
    i: &QIdeal,
) -> Result<Vec<RelationVector>> {
    let mut chosen: Vec<RelationVector> = base.to_vec();
    let mut rank = rank_lower_bound(psis, &chosen, i)?;
    let mut out = Vec::new();
    for mut c in candidates {
        if rank == psis.len() {
            break;
        }
        if psis.iter().all(|p| evaluate_pairing(p, &c, i).is_ok_and(|v| v.is_zero())) {
            continue;
        }
        chosen.push(c.clone());
        let r = rank_lower_bound(psis, &chosen, i)?;
        if r > rank {
            rank = r;
            c.name = format!("aux{}", out.len() + 1);
            *chosen.last_mut().expect("just pushed") = c.clone();
            out.push(c);
        } else {
            chosen.pop();
        }
    }
    Ok(out)
}

/// How a suite bounds the tangent space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// dim N − rank of pairings with relations.
    Pairing,
    /// Independent equivariant morphisms give a lower bound only.
    Morphisms,
    /// The minimal generator count equals the tangent dimension.
    MinimalGenerators,
}

/// Everything needed to rerun a tangent argument.
#[derive(Clone, Debug)]
pub struct Suite {
    pub ideal_name: String,
    pub ideal: QIdeal,
    pub gens: GeneratorSet,
    pub relations: Vec<RelationVector>,
    pub morphisms: Vec<TestMorphism>,
    pub method: Method,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentReport {
    pub ideal_name: String,
    pub generates: bool,
    pub relations: Vec<(String, bool)>,
    /// Pairing rank, independent morphism count or minimal generator count.
    pub rank: usize,
    pub dim_n: usize,
    pub lower: i64,
    pub upper: i64,
}

impl TangentReport {
    pub fn concluded(&self) -> Option<i64> {
        (self.lower == self.upper).then_some(self.lower)
    }
}

fn recorded_int(spec: &CaseSpec, what: &str, ideal: &str) -> Result<i64> {
    match spec.expected(&catalog::key(what, ideal)).map(|e| &e.value) {
        Some(ExpectedValue::Int(v)) => Ok(*v),
        Some(ExpectedValue::Interval(lo, _)) if what == catalog::TANGENT_LOWER => Ok(*lo),
        Some(ExpectedValue::Interval(_, hi)) if what == catalog::TANGENT_DIM => Ok(*hi),
        _ => Err(Error::Unsupported(format!("`{}` records no `{what}` for {ideal}", spec.name))),
    }
}

fn which_ideal(spec: &CaseSpec, which: Option<FixedPoint>) -> Result<FixedPoint> {
    match (spec.base_name(), which.or(spec.fixed_point)) {
        ("gl2" | "gl3" | "o2" | "sp4", None | Some(FixedPoint::I)) => Ok(FixedPoint::I),
        ("o3", Some(FixedPoint::I2)) | ("o3", None) => Ok(FixedPoint::I2),
        ("so3", Some(f @ (FixedPoint::I1 | FixedPoint::I2))) => Ok(f),
        ("so3", None) => Err(Error::InvalidParams("choose I1 or I2".into())),
        _ => Err(Error::Unsupported(format!("no tangent data for `{}`", spec.name))),
    }
}

pub fn suite(spec: &CaseSpec, which: Option<FixedPoint>) -> Result<Suite> {
    let fp = which_ideal(spec, which)?;
    let ideal_name = fp.label().to_string();
    let ideal = catalog::fixed_point_ideal(spec, Some(fp))?;
    let dim_n = |s: &CaseSpec| recorded_int(s, catalog::DIM_N, &ideal_name).unwrap_or(0) as usize;
    let mk = |gens: GeneratorSet, relations, morphisms, method| Suite {
        ideal_name: ideal_name.clone(),
        ideal: ideal.clone(),
        gens,
        relations,
        morphisms,
        method,
    };
    let rel = |gens: &GeneratorSet, list: &[(&str, &[(&str, &str)])]| {
        list.iter().map(|(n, e)| RelationVector::parse(n, gens, e)).collect::<Result<Vec<_>>>()
    };
    let kron = |gens: &GeneratorSet, list: &[(&str, &str)]| {
        list.iter().map(|(n, g)| TestMorphism::kronecker(n, gens, g, &ideal)).collect::<Result<Vec<_>>>()
    };
    match (spec.base_name(), fp) {
        ("gl2", _) => {
            let gens = GeneratorSet::new(spec.named_generators("I")?, dim_n(spec));
            let rels = rel(&gens, &GL2_RELATIONS)?;
            let psis = kron(&gens, &[("psi1", "f1"), ("psi3", "f3"), ("psi4", "f4")])?;
            Ok(mk(gens, rels, psis, Method::Pairing))
        }
        ("o2", _) => {
            let gens = GeneratorSet::new(spec.named_generators("I")?, dim_n(spec));
            let rels = rel(&gens, &O2_RELATIONS)?;
            let psis = kron(&gens, &[("psi1", "f1"), ("psi3", "f3")])?;
            Ok(mk(gens, rels, psis, Method::Pairing))
        }
        ("sp4", _) => {
            let gens = GeneratorSet::new(spec.named_generators("I")?, dim_n(spec));
            let rels = rel(&gens, &SP4_RELATIONS)?;
            let psis = kron(&gens, &[("psi1", "f1"), ("psi2", "f2"), ("psi3", "f3"), ("psi4", "f4"), ("psi5", "f5")])?;
            Ok(mk(gens, rels, psis, Method::Pairing))
        }
        ("so3", FixedPoint::I2) => {
            let gens = GeneratorSet::new(spec.named_generators("I2")?, dim_n(spec));
            let rels = rel(&gens, &SO3_RELATIONS)?;
            let mut psis = kron(
                &gens,
                &[("psi1", "f1"), ("psi2", "f2"), ("psi3", "f3"), ("psi4", "f4"), ("psi5", "f5"), ("psi6", "f6")],
            )?;
            // φ_jk sends g_jm to the m-th entry of column k of w.
            let cols = ['x', 'y', 'z'];
            for j in 1..=3 {
                for (k, col) in cols.iter().enumerate() {
                    let names: Vec<String> = (1..=3).map(|m| format!("g{j}{m}")).collect();
                    let vals: Vec<String> = (1..=3).map(|m| format!("{col}{m}")).collect();
                    let entries: Vec<(&str, &str)> =
                        names.iter().zip(&vals).map(|(a, b)| (a.as_str(), b.as_str())).collect();
                    psis.push(TestMorphism::parse(&format!("phi{j}{}", k + 1), &gens, &entries, &ideal)?);
                }
            }
            Ok(mk(gens, rels, psis, Method::Pairing))
        }
        ("so3", _) => {
            let gens = GeneratorSet::new(spec.named_generators("I1")?, 0);
            Ok(mk(gens, Vec::new(), Vec::new(), Method::MinimalGenerators))
        }
        ("o3", _) => {
            let gens = GeneratorSet::new(spec.named_generators("I2")?, 0);
            let morphisms = o3_morphisms(&gens, &ideal)?;
            Ok(mk(gens, Vec::new(), morphisms, Method::Morphisms))
        }
        ("gl3", _) => {
            let all = spec.named_generators("I*")?;
            let gens = GeneratorSet::new(all, dim_n(spec));
            let rels = rel(&gens, &GL3_RELATIONS)?;
            let morphisms = gl3_morphisms(spec, &gens, &ideal)?;
            Ok(mk(gens, rels, morphisms, Method::Pairing))
        }
        _ => Err(Error::Unsupported(format!("no tangent data for `{}`", spec.name))),
    }
}

/// Runs a suite and combines it with the recorded lower bound.
pub fn tangent_bounds(spec: &CaseSpec, which: Option<FixedPoint>) -> Result<TangentReport> {
    let s = suite(spec, which)?;
    let generates = check_generates(&s.gens, &s.ideal)?;
    let relations = s
        .relations
        .iter()
        .map(|r| Ok((r.name.clone(), check_relation(r, &s.gens, &s.ideal)?)))
        .collect::<Result<Vec<_>>>()?;
    let (rank, lower, upper) = match s.method {
        Method::Pairing => {
            let rank = rank_lower_bound(&s.morphisms, &s.relations, &s.ideal)?;
            let lower = recorded_int(spec, catalog::TANGENT_LOWER, &s.ideal_name)?;
            (rank, lower, s.gens.dim_n as i64 - rank as i64)
        }
        Method::Morphisms => {
            let rank = value_rank(&s.morphisms);
            let upper = match spec.expected(&catalog::key(catalog::TANGENT_INTERVAL, &s.ideal_name)).map(|e| &e.value) {
                Some(ExpectedValue::Interval(_, hi)) => *hi,
                _ => return Err(Error::Unsupported("no recorded upper bound".into())),
            };
            (rank, rank as i64, upper)
        }
        Method::MinimalGenerators => {
            let count = minimal_generator_count(&s.ideal)?;
            (count, count as i64, count as i64)
        }
    };
    Ok(TangentReport {
        ideal_name: s.ideal_name,
        generates,
        relations,
        rank,
        dim_n: s.gens.dim_n,
        lower,
        upper,
    })
}

/// The pairings x·x, x·y, x·z lie in (x₁, x₂, x₃)·m, so they are not
/// minimal generators of I₁.
pub fn so3_i1_redundant(spec: &CaseSpec) -> Result<bool> {
    let r = &spec.ring;
    let xs = Ideal::new(r, (0..3).map(|i| QPoly::var(r, i)).collect())?;
    let m = Ideal::new(r, (0..r.nvars()).map(|i| QPoly::var(r, i)).collect())?;
    let xm = ideal_product(&xs, &m)?;
    for t in ["x1^2+x2^2+x3^2", "x1*y1+x2*y2+x3*y3", "x1*z1+x2*z2+x3*z3"] {
        if !xm.contains(&parse_poly(t, r)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

type RelList<'a> = [(&'a str, &'a [(&'a str, &'a str)])];

const GL2_RELATIONS: [(&str, &[(&str, &str)]); 3] = [
    ("r1", &[("f1", "-y21"), ("h2", "y22"), ("h4", "y12")]),
    ("r2", &[("f3", "-x11"), ("h1", "x21"), ("h2", "x11")]),
    ("r3", &[("f4", "x11"), ("h1", "-x22"), ("h2", "-x12")]),
];

const O2_RELATIONS: [(&str, &[(&str, &str)]); 2] =
    [("r1", &[("f3", "x1"), ("f1", "-y1"), ("h1", "-y2")]), ("r2", &[("f1", "x2"), ("h2", "-x1")])];

const SP4_RELATIONS: [(&str, &[(&str, &str)]); 2] = [
    ("r1", &[("h2", "-z4"), ("h3", "z3"), ("h5", "-z1"), ("f1", "z4"), ("f2", "-y4"), ("f4", "x4")]),
    ("r2", &[("h2", "-t4"), ("h3", "t3"), ("h5", "-t1"), ("f1", "t4"), ("f3", "-y4"), ("f5", "x4")]),
];

// r3, r5, r6 corrected so that Σ aᵢgᵢ vanishes identically.
const SO3_RELATIONS: [(&str, &[(&str, &str)]); 7] = [
    ("r1", &[("f1", "-y1"), ("f4", "2x1"), ("h1", "-y1"), ("h2", "-2y2"), ("h3", "y1"), ("h5", "-2y3")]),
    ("r2", &[("f1", "y2"), ("h1", "-y2"), ("h3", "-y2"), ("h4", "-2y3"), ("g11", "2x3")]),
    ("r3", &[("f1", "z2"), ("h1", "-z2"), ("h3", "-z2"), ("h4", "-2z3"), ("g21", "2x3")]),
    ("r4", &[("f4", "-z2"), ("f6", "y2"), ("g11", "z3"), ("g21", "-y3"), ("g33", "x1")]),
    ("r5", &[("f2", "x3"), ("f4", "-y3"), ("g11", "y2"), ("g12", "-y1")]),
    ("r6", &[("f3", "x3"), ("f6", "-z3"), ("g21", "z2"), ("g22", "-z1")]),
    ("r7", &[("f5", "x2"), ("f6", "-y2"), ("g11", "-z3"), ("g13", "z1")]),
];

// r5..r10 corrected so that Σ aᵢgᵢ vanishes identically; r10 keeps the
// h-part and closes it with f₈ and s₄. These ten alone give rank 14; r11
// was picked by `select_relations` from the degree-4 relations.
const GL3_RELATIONS: [(&str, &[(&str, &str)]); 11] = [
    ("r1", &[("h1", "-y21"), ("h2", "y11")]),
    ("r2", &[("f1", "-y21"), ("h2", "y33"), ("h5", "y23"), ("h8", "y13")]),
    ("r3", &[("f4", "-y21"), ("h2", "y32"), ("h5", "y22"), ("h8", "y12")]),
    ("r4", &[("f7", "-y21"), ("h2", "y31"), ("h5", "y21"), ("h8", "y11")]),
    ("r5", &[("f8", "-x21"), ("h4", "x32"), ("h5", "x22"), ("h6", "x12")]),
    ("r6", &[("f9", "-x21"), ("h4", "x33"), ("h5", "x23"), ("h6", "x13")]),
    ("r7", &[("f6", "x12y11"), ("f9", "-x12y12"), ("s1", "-x23"), ("s2", "-x13")]),
    ("r8", &[("f1", "-x22y12"), ("f2", "x21y12"), ("t1", "y33"), ("t4", "-y13")]),
    ("r9", &[("f5", "x12y11"), ("f8", "-x12y12"), ("s1", "-x22"), ("s2", "-x12")]),
    (
        "r10",
        &[("h1", "-x32y22"), ("h2", "-(x22y22+x12y32)"), ("f8", "x11y22"), ("s4", "x11")],
    ),
    ("r11", &[("h6", "-x32y32"), ("h9", "x22y32"), ("t6", "y31")]),
];

/// Values on h₁, s₁, t₁ of the nine GL3 morphisms beyond the ψᵢ; all vanish
/// on the f's.
const GL3_SEEDS: [(&str, &str, &str); 9] = [
    ("phi1", "h1", "x11y13"),
    ("phi2", "h1", "x12y13"),
    ("phi3", "h1", "x13y11"),
    ("phi4", "h1", "x13y12"),
    ("phi5", "h1", "x13y13"),
    ("gamma1", "s1", "x11(y22y13-y23y12)"),
    ("gamma2", "s1", "x13(y22y13-y23y12)"),
    ("delta1", "t1", "y11(x22x13-x23x12)"),
    ("delta2", "t1", "y13(x22x13-x23x12)"),
];

fn gl3_morphisms(spec: &CaseSpec, gens: &GeneratorSet, i: &QIdeal) -> Result<Vec<TestMorphism>> {
    let ders = gl_derivations(spec)?;
    let block = |prefix: char| -> Vec<usize> {
        gens.names.iter().enumerate().filter(|(_, n)| n.starts_with(prefix)).map(|(k, _)| k).collect()
    };
    let ring = gens.ring()?.clone();
    let zero = QPoly::zero(&ring);
    let fs = block('f');
    // ψ_k is δ on the f's and vanishes on h₁, s₁, t₁; the others vanish on the f's.
    let mut specs: Vec<(String, Option<usize>, &str, QPoly)> = Vec::new();
    for k in [1, 2, 4, 5, 6, 7, 8, 9] {
        specs.push((format!("psi{k}"), Some(gens.index(&format!("f{k}"))?), "", zero.clone()));
    }
    for (name, seed, value) in GL3_SEEDS {
        specs.push((name.to_string(), None, seed, parse_poly(&catalog::implicit(value), &ring)?));
    }
    let mut out = Vec::new();
    for (name, delta, seed, v) in specs {
        let fixed: Vec<(usize, QPoly)> = fs
            .iter()
            .map(|&k| (k, if Some(k) == delta { QPoly::one(&ring) } else { zero.clone() }))
            .collect();
        let mut blocks = Vec::new();
        for (prefix, s) in [('h', "h1"), ('s', "s1"), ('t', "t1")] {
            let val = if s == seed { v.clone() } else { zero.clone() };
            blocks.push((block(prefix), vec![(gens.index(s)?, val)]));
        }
        out.push(equivariant_extension(&name, gens, &fixed, &blocks, &ders, i)?);
    }
    Ok(out)
}

/// Rows of the O3 table in the generator order of the catalog, columns
/// Φ₁..Φ₁₁ (empty string for 0).
const O3_TABLE: [[&str; 11]; 16] = [
    ["", "x2y1-x1y2", "-x1y3", "x2y3", "y2y3", "y1y3", "", "x2z1z3-x1z2z3", "x2y3z1-x1y3z2", "x3y2z1-x2y3z1-x3y1z2+x1y3z2", ""],
    ["", "-x1y2", "x3y1-x1y3", "x3y2", "y2y3", "", "y1y2", "x3z1z2-x1z2z3", "x2y3z1-x2y1z3-x1y2z3", "x1y2z3", ""],
    ["", "x3y1-2x1y3", "", "x3y3", "y3^2", "", "y1y3", "x3z1z3-x1z3^2", "x3y3z1-2x1y3z3", "-x3y1z3+2x1y3z3", ""],
    ["", "-x2y2", "2x3y2-x2y3", "", "", "-y2y3", "y2^2", "x3z2^2-x2z2z3", "x2y3z2-2x2y2z3", "x2y2z3", ""],
    ["", "x3y2-2x2y3", "x3y3", "", "", "-y3^2", "y2y3", "x3z2z3-x2z3^2", "x3y3z2-2x2y3z3", "-x3y2z3+2x2y3z3", ""],
    ["", "", "", "", "2x1", "-2x2", "-2x3", "", "", "", ""],
    ["", "-2y3", "-2y2", "-2y1", "", "", "", "", "-2y3z3", "2y3z3", ""],
    ["1", "", "", "", "", "", "", "", "", "", ""],
    ["", "-x3", "-x2", "-x1", "y1", "-y2", "-y3", "", "-x3z3", "x3z3", ""],
    ["", "", "", "", "z1", "-z2", "-z3", "", "", "", ""],
    ["", "-z3", "-z2", "-z1", "", "", "", "", "-z3^2", "z3^2", ""],
    ["", "", "", "", "", "-2x2", "", "", "", "", "y2^2"],
    ["", "", "", "", "", "", "-2x3", "", "", "", "y3^2"],
    ["", "", "", "", "x2", "-x1", "", "", "", "", "y1y2"],
    ["", "", "", "", "x3", "", "-x1", "", "", "", "y1y3"],
    ["", "", "", "", "", "-x3", "-x2", "", "", "", "y2y3"],
];

fn o3_morphisms(gens: &GeneratorSet, i: &QIdeal) -> Result<Vec<TestMorphism>> {
    let ring = gens.ring()?.clone();
    let mut phi = Vec::new();
    for col in 0..11 {
        let values = O3_TABLE
            .iter()
            .map(|row| if row[col].is_empty() { Ok(QPoly::zero(&ring)) } else { parse_poly(&catalog::implicit(row[col]), &ring) })
            .collect::<Result<Vec<_>>>()?;
        phi.push(TestMorphism::from_values(&format!("Phi{}", col + 1), values, i)?);
    }
    let p = |s: &str| parse_poly::<Rational>(s, &ring);
    let one = p("1")?;
    let combos: [(&str, Vec<(QPoly, usize)>); 7] = [
        ("Phi1", vec![(one.clone(), 0)]),
        ("z3Phi2+z2Phi3+z1Phi4", vec![(p("z3")?, 1), (p("z2")?, 2), (p("z1")?, 3)]),
        ("y1Phi5-y2Phi6-y3Phi7", vec![(p("y1")?, 4), (p("-y2")?, 5), (p("-y3")?, 6)]),
        ("z1Phi5-z2Phi6-z3Phi7", vec![(p("z1")?, 4), (p("-z2")?, 5), (p("-z3")?, 6)]),
        ("Phi8", vec![(one.clone(), 7)]),
        ("Phi9+Phi10", vec![(one.clone(), 8), (one.clone(), 9)]),
        ("Phi11", vec![(one, 10)]),
    ];
    combos
        .iter()
        .map(|(name, parts)| {
            let refs: Vec<(QPoly, &TestMorphism)> = parts.iter().map(|(c, k)| (c.clone(), &phi[*k])).collect();
            TestMorphism::combine(name, &refs, i)
        })
        .collect()
}

#[allow(dead_code)]
fn _rel_list_type_check(_: &RelList) {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::case;
    use crate::poly::qp;
    use proptest::prelude::*;

    fn gl2() -> (CaseSpec, GeneratorSet, QIdeal) {
        let c = case("gl2").unwrap();
        let g = GeneratorSet::new(c.named_generators("I").unwrap(), 7);
        let i = c.ideal("I").unwrap().clone();
        (c, g, i)
    }

    #[test]
    fn gl2_generators() {
        let (_, g, i) = gl2();
        assert!(check_generates(&g, &i).unwrap());
        let mut fewer = g.clone();
        let h1 = fewer.index("h1").unwrap();
        fewer.names.remove(h1);
        fewer.polys.remove(h1);
        assert!(!check_generates(&fewer, &i).unwrap());
    }

    #[test]
    fn gl2_relations_and_pairings() {
        let (c, g, i) = gl2();
        let s = suite(&c, None).unwrap();
        for r in &s.relations {
            assert!(check_relation(r, &g, &i).unwrap(), "{}", r.name);
        }
        let bad = RelationVector::parse("bad", &g, &[("f1", "-y21"), ("h2", "y22+1"), ("h4", "y12")]).unwrap();
        assert!(!check_relation(&bad, &g, &i).unwrap());
        let r = &c.ring;
        let psi = &s.morphisms;
        assert_eq!(evaluate_pairing(&psi[0], &s.relations[0], &i).unwrap(), qp("-y21", r));
        assert_eq!(evaluate_pairing(&psi[1], &s.relations[1], &i).unwrap(), qp("-x11", r));
        assert_eq!(evaluate_pairing(&psi[2], &s.relations[2], &i).unwrap(), qp("x11", r));
        assert_eq!(rank_lower_bound(psi, &s.relations, &i).unwrap(), 3);
        // ψ₄ vanishes on r₁
        assert_eq!(rank_lower_bound(&psi[2..], &s.relations[..1], &i).unwrap(), 0);
    }

    #[test]
    fn bounds_collapse() {
        for (name, dim, rank) in [("gl2", 4, 3), ("o2", 3, 2), ("sp4", 6, 5), ("so3-I2", 8, 12)] {
            let c = case(name).unwrap();
            let rep = tangent_bounds(&c, None).unwrap();
            assert!(rep.generates, "{name}");
            assert!(rep.relations.iter().all(|(_, ok)| *ok), "{name}: {:?}", rep.relations);
            assert_eq!(rep.rank, rank, "{name}");
            assert_eq!(rep.concluded(), Some(dim), "{name}");
        }
    }

    #[test]
    fn gl3_bounds() {
        let c = case("gl3").unwrap();
        let rep = tangent_bounds(&c, None).unwrap();
        assert!(rep.generates);
        assert_eq!(rep.relations.iter().filter(|(_, ok)| !ok).count(), 0, "{:?}", rep.relations);
        assert_eq!((rep.rank, rep.dim_n), (17, 29));
        assert_eq!(rep.concluded(), Some(12));
    }

    #[test]
    fn gl3_degree_four_relations_reach_full_rank() {
        let c = case("gl3").unwrap();
        let s = suite(&c, None).unwrap();
        let pool = homogeneous_relations(&s.gens, &s.ideal, 4, &gl_grading(&c).unwrap()).unwrap();
        for r in pool.iter().step_by(97) {
            assert!(check_relation(r, &s.gens, &s.ideal).unwrap(), "{}", r.name);
        }
        assert_eq!(rank_lower_bound(&s.morphisms, &pool, &s.ideal).unwrap(), 17);
        let base = &s.relations[..10];
        assert_eq!(rank_lower_bound(&s.morphisms, base, &s.ideal).unwrap(), 14);
        let extra = select_relations(&s.morphisms, base, pool, &s.ideal).unwrap();
        assert_eq!(extra.len(), 1);
        assert_eq!(extra[0].coeffs, s.relations[10].coeffs);
    }

    #[test]
    fn gl3_psi7_sees_the_trace() {
        let c = case("gl3").unwrap();
        let s = suite(&c, None).unwrap();
        let psi7 = s.morphisms.iter().find(|m| m.name == "psi7").unwrap();
        let third = QPoly::constant(&c.ring, Rational::new(1.into(), 3.into()));
        for h in ["h3", "h5", "h7"] {
            assert_eq!(psi7.values[s.gens.index(h).unwrap()], third);
        }
    }

    #[test]
    fn sp4_pairing_pattern() {
        let c = case("sp4").unwrap();
        let s = suite(&c, None).unwrap();
        let got: Vec<QPoly> = s.morphisms.iter().map(|m| evaluate_pairing(m, &s.relations[0], &s.ideal).unwrap()).collect();
        let r = &c.ring;
        let want = [qp("z4", r), qp("-y4", r), QPoly::zero(r), qp("x4", r), QPoly::zero(r)];
        assert_eq!(got, want.to_vec());
    }

    #[test]
    fn so3_i1_minimal_generators() {
        let c = case("so3-I1").unwrap();
        assert!(so3_i1_redundant(&c).unwrap());
        let rep = tangent_bounds(&c, None).unwrap();
        assert_eq!(rep.rank, 6);
        assert_eq!(rep.concluded(), Some(6));
    }

    #[test]
    fn o3_interval() {
        let c = case("o3-I2").unwrap();
        let rep = tangent_bounds(&c, None).unwrap();
        assert!(rep.generates);
        assert_eq!((rep.lower, rep.upper), (7, 8));
    }

    #[test]
    fn minimal_generators_of_redundant_lists() {
        let r = crate::groebner::ring_of(&["a", "b"]);
        let i = Ideal::new(&r, vec![qp("a", &r), qp("a*b", &r), qp("b^2", &r), qp("a^2+b^2", &r)]).unwrap();
        assert_eq!(minimal_generator_count(&i).unwrap(), 2);
    }

    #[test]
    fn equivariance_detects_bad_values() {
        let c = case("gl3").unwrap();
        let g = GeneratorSet::new(c.named_generators("I*").unwrap(), 29);
        let i = c.ideal("I").unwrap();
        let ders = gl_derivations(&c).unwrap();
        // f's are invariant, so any nonzero value on one of them is inconsistent
        let f1 = g.index("f1").unwrap();
        let bad = equivariant_extension("bad", &g, &[], &[(vec![f1], vec![(f1, qp("x11", &c.ring))])], &ders, i);
        assert!(bad.is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        /// Adding morphisms or relations never lowers the rank, and the pairing
        /// is linear in the morphism.
        #[test]
        fn rank_monotone_and_pairing_linear(mask in 0u32..64, a in -3i64..4, b in -3i64..4) {
            let c = case("so3-I2").unwrap();
            let s = suite(&c, None).unwrap();
            let pick: Vec<TestMorphism> = s.morphisms.iter().enumerate()
                .filter(|(k, _)| mask & (1 << (k % 6)) != 0).map(|(_, m)| m.clone()).collect();
            let r_small = rank_lower_bound(&pick, &s.relations[..3], &s.ideal).unwrap();
            let r_big = rank_lower_bound(&pick, &s.relations, &s.ideal).unwrap();
            let r_all = rank_lower_bound(&s.morphisms, &s.relations, &s.ideal).unwrap();
            prop_assert!(r_small <= r_big && r_big <= r_all);
            let ring = &c.ring;
            let ca = QPoly::constant(ring, Rational::from_integer(a.into()));
            let cb = QPoly::constant(ring, Rational::from_integer(b.into()));
            let (m1, m2) = (&s.morphisms[0], &s.morphisms[7]);
            let comb = TestMorphism::combine("c", &[(ca.clone(), m1), (cb.clone(), m2)], &s.ideal).unwrap();
            for r in &s.relations {
                let lhs = evaluate_pairing(&comb, r, &s.ideal).unwrap();
                let rhs = &(&ca * &evaluate_pairing(m1, r, &s.ideal).unwrap()) + &(&cb * &evaluate_pairing(m2, r, &s.ideal).unwrap());
                prop_assert_eq!(lhs, s.ideal.normal_form(&rhs, &MonomialOrder::GrevLex).unwrap());
            }
        }
    }
}
