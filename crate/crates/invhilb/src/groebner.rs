//! Buchberger's algorithm and the ideal operations built on it.
//!
//! The engine keeps a resumable state per (ideal, order): a degree-truncated
//! run can later be continued to a larger bound or to completion without
//! redoing work.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::poly::{same_ring, Monomial, MonomialOrder, Polynomial, Ring, RingRef};
use crate::scalar::Field;

type Terms<F> = Vec<(Monomial, F)>;

fn sort_terms<F: Field>(order: &MonomialOrder, mut t: Terms<F>) -> Terms<F> {
    if *order != MonomialOrder::GrevLex {
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    }
    t
}

fn to_canonical<F: Field>(ring: &RingRef, order: &MonomialOrder, t: &Terms<F>) -> Polynomial<F> {
    if *order == MonomialOrder::GrevLex {
        Polynomial::from_sorted(ring, t.clone())
    } else {
        Polynomial::from_terms(ring, t.clone())
    }
}

/// `f - c * t * g`, all sorted descending under `order`.
fn sub_mul<F: Field>(order: &MonomialOrder, f: &[(Monomial, F)], c: &F, t: &Monomial, g: &[(Monomial, F)]) -> Terms<F> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let mut gm = g.first().map(|(m, _)| m.mul(t));
    while let Some(ref m) = gm {
        if i >= f.len() {
            break;
        }
        match order.cmp(&f[i].0, m) {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((m.clone(), -c.mul_ref(&g[j].1)));
                j += 1;
                gm = g.get(j).map(|(m, _)| m.mul(t));
            }
            Ordering::Equal => {
                let v = f[i].1.sub_ref(&c.mul_ref(&g[j].1));
                if !v.is_zero() {
                    out.push((f[i].0.clone(), v));
                }
                i += 1;
                j += 1;
                gm = g.get(j).map(|(m, _)| m.mul(t));
            }
        }
    }
    out.extend(f[i..].iter().cloned());
    for (m, d) in &g[j..] {
        out.push((m.mul(t), -c.mul_ref(d)));
    }
    out
}

fn make_monic<F: Field>(t: &mut Terms<F>) {
    if let Some((_, lc)) = t.first() {
        if !lc.is_one() {
            let inv = lc.inv();
            for (_, c) in t.iter_mut() {
                *c = c.mul_ref(&inv);
            }
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Item {
    Gen(usize),
    Pair(usize, usize),
}

/// Resumable Buchberger state for one ideal under one order.
pub struct GbState<F: Field> {
    order: MonomialOrder,
    gens: Vec<Terms<F>>,
    basis: Vec<Terms<F>>,
    lms: Vec<Monomial>,
    masks: Vec<u64>,
    active: Vec<bool>,
    queue: BTreeMap<(u32, u64), Item>,
    seq: u64,
    unit: bool,
    reduced_cache: Option<(Option<u32>, Vec<Terms<F>>)>,
}

impl<F: Field> GbState<F> {
    pub fn new(gens: &[Polynomial<F>], order: &MonomialOrder) -> Self {
        let mut st = GbState {
            order: order.clone(),
            gens: Vec::new(),
            basis: Vec::new(),
            lms: Vec::new(),
            masks: Vec::new(),
            active: Vec::new(),
            queue: BTreeMap::new(),
            seq: 0,
            unit: false,
            reduced_cache: None,
        };
        for g in gens.iter().filter(|g| !g.is_zero()) {
            let t = sort_terms(order, g.terms().to_vec());
            let d = g.total_degree().unwrap_or(0);
            st.gens.push(t);
            st.push(d, Item::Gen(st.gens.len() - 1));
        }
        st
    }

    fn push(&mut self, deg: u32, item: Item) {
        self.queue.insert((deg, self.seq), item);
        self.seq += 1;
    }

    fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        let mask = m.support_mask();
        let mut best: Option<usize> = None;
        for k in 0..self.lms.len() {
            if self.masks[k] & !mask == 0 && self.lms[k].divides(m) {
                match best {
                    None => best = Some(k),
                    Some(b) if self.basis[k].len() < self.basis[b].len() => best = Some(k),
                    _ => {}
                }
                if self.basis[k].len() <= 2 {
                    break;
                }
            }
        }
        best
    }

    /// Fully reduces `f` against the current basis.
    fn reduce(&self, mut f: Terms<F>) -> Terms<F> {
        let mut rem = Vec::new();
        let mut pos = 0;
        while pos < f.len() {
            match self.find_divisor(&f[pos].0) {
                Some(k) => {
                    let t = f[pos].0.div(&self.lms[k]);
                    let c = f[pos].1.clone();
                    f = sub_mul(&self.order, &f[pos + 1..], &c, &t, &self.basis[k][1..]);
                    pos = 0;
                }
                None => {
                    rem.push(f[pos].clone());
                    pos += 1;
                }
            }
        }
        rem
    }

    fn spoly(&self, i: usize, j: usize) -> Terms<F> {
        let l = self.lms[i].lcm(&self.lms[j]);
        let ti = l.div(&self.lms[i]);
        let tj = l.div(&self.lms[j]);
        let a: Terms<F> = self.basis[i][1..].iter().map(|(m, c)| (m.mul(&ti), c.clone())).collect();
        sub_mul(&self.order, &a, &F::one(), &tj, &self.basis[j][1..])
    }

    /// Gebauer–Möller update for a new monic element.
    fn insert(&mut self, h: Terms<F>) {
        let k = self.basis.len();
        let lm = h[0].0.clone();
        if lm.is_one() {
            self.unit = true;
        }
        struct Cand {
            i: usize,
            lcm: Monomial,
            coprime: bool,
        }
        let mut c: Vec<Cand> = (0..k)
            .filter(|&i| self.active[i])
            .map(|i| Cand { i, lcm: self.lms[i].lcm(&lm), coprime: self.lms[i].coprime(&lm) })
            .collect();
        let mut d: Vec<Cand> = Vec::new();
        while let Some(p) = c.pop() {
            if p.coprime || !c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm)) {
                d.push(p);
            }
        }
        let lms = &self.lms;
        self.queue.retain(|_, it| match *it {
            Item::Gen(_) => true,
            Item::Pair(a, b) => {
                let l = lms[a].lcm(&lms[b]);
                !(lm.divides(&l) && lms[a].lcm(&lm) != l && lms[b].lcm(&lm) != l)
            }
        });
        for i in 0..k {
            if self.active[i] && lm.divides(&self.lms[i]) {
                self.active[i] = false;
            }
        }
        self.masks.push(lm.support_mask());
        self.lms.push(lm);
        self.basis.push(h);
        self.active.push(true);
        d.sort_by_key(|p| p.i);
        for p in d.into_iter().filter(|p| !p.coprime) {
            self.push(p.lcm.degree(), Item::Pair(p.i, k));
        }
        self.reduced_cache = None;
    }

    /// Processes queued work of degree ≤ `bound` (everything when `None`).
    pub fn run(&mut self, bound: Option<u32>) {
        while !self.unit {
            let Some((&key, _)) = self.queue.iter().next() else { break };
            if bound.is_some_and(|b| key.0 > b) {
                break;
            }
            let item = self.queue.remove(&key).unwrap();
            let f = match item {
                Item::Gen(g) => self.gens[g].clone(),
                Item::Pair(i, j) => self.spoly(i, j),
            };
            let mut r = self.reduce(f);
            if !r.is_empty() {
                make_monic(&mut r);
                self.insert(r);
            }
        }
        if self.unit {
            self.queue.clear();
        }
    }

    pub fn is_complete(&self) -> bool {
        self.queue.is_empty()
    }

    /// Smallest degree still pending, if any.
    pub fn pending_degree(&self) -> Option<u32> {
        self.queue.keys().next().map(|k| k.0)
    }

    /// Minimal leading monomials found so far.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        (0..self.lms.len()).filter(|&i| self.active[i]).map(|i| self.lms[i].clone()).collect()
    }

    /// Reduced basis (relative to the work done so far), ascending by leading monomial.
    pub fn reduced(&mut self) -> Vec<Terms<F>> {
        let key = self.pending_degree();
        if let Some((k, b)) = &self.reduced_cache {
            if *k == key {
                return b.clone();
            }
        }
        let mut idx: Vec<usize> = (0..self.lms.len()).filter(|&i| self.active[i]).collect();
        let order = self.order.clone();
        idx.sort_by(|&a, &b| order.cmp(&self.lms[a], &self.lms[b]));
        let min = GbState {
            order: order.clone(),
            gens: Vec::new(),
            basis: idx.iter().map(|&i| self.basis[i].clone()).collect(),
            lms: idx.iter().map(|&i| self.lms[i].clone()).collect(),
            masks: idx.iter().map(|&i| self.masks[i]).collect(),
            active: vec![true; idx.len()],
            queue: BTreeMap::new(),
            seq: 0,
            unit: false,
            reduced_cache: None,
        };
        let out: Vec<Terms<F>> = (0..min.basis.len())
            .map(|k| {
                let mut t = vec![min.basis[k][0].clone()];
                t.extend(min.reduce(min.basis[k][1..].to_vec()));
                t
            })
            .collect();
        self.reduced_cache = Some((key, out.clone()));
        out
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        let t = sort_terms(&self.order, f.terms().to_vec());
        to_canonical(f.ring(), &self.order, &self.reduce(t))
    }
}

type CacheSlot<F> = Arc<Mutex<GbState<F>>>;

/// An ideal given by generators, with a lazily filled Gröbner cache.
#[derive(Clone)]
pub struct Ideal<F: Field> {
    ring: RingRef,
    gens: Vec<Polynomial<F>>,
    cache: Arc<Mutex<HashMap<MonomialOrder, CacheSlot<F>>>>,
}

impl<F: Field> std::fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.gens.iter().map(|g| g.to_text())).finish()
    }
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &RingRef, gens: Vec<Polynomial<F>>) -> Result<Self> {
        if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Arc::default(),
        })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    fn slot(&self, order: &MonomialOrder) -> CacheSlot<F> {
        let mut map = self.cache.lock().expect("poisoned cache");
        map.entry(order.clone())
            .or_insert_with(|| Arc::new(Mutex::new(GbState::new(&self.gens, order))))
            .clone()
    }

    /// Runs `f` on the cached state after completing work up to `bound`.
    pub fn with_gb<R>(&self, order: &MonomialOrder, bound: Option<u32>, f: impl FnOnce(&mut GbState<F>) -> R) -> R {
        let slot = self.slot(order);
        let mut st = slot.lock().expect("poisoned state");
        st.run(bound);
        f(&mut st)
    }

    pub fn groebner_basis(&self, order: &MonomialOrder, degree_bound: Option<u32>) -> Result<Vec<Polynomial<F>>> {
        if degree_bound.is_some() && !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let ring = self.ring.clone();
        Ok(self.with_gb(order, degree_bound, |st| {
            st.reduced().iter().map(|t| to_canonical(&ring, order, t)).collect()
        }))
    }

    pub fn normal_form(&self, p: &Polynomial<F>, order: &MonomialOrder) -> Result<Polynomial<F>> {
        if !same_ring(p.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        // for homogeneous input the degree of p bounds the work needed
        let bound = if self.is_homogeneous() && p.is_homogeneous() {
            p.total_degree()
        } else {
            None
        };
        Ok(self.with_gb(order, bound, |st| st.normal_form(p)))
    }

    pub fn contains(&self, p: &Polynomial<F>) -> Result<bool> {
        if p.is_homogeneous() || !self.is_homogeneous() {
            return Ok(self.normal_form(p, &MonomialOrder::GrevLex)?.is_zero());
        }
        // inhomogeneous p against a homogeneous ideal: test each graded piece
        let mut by_deg: BTreeMap<u32, Vec<(Monomial, F)>> = BTreeMap::new();
        for (m, c) in p.terms() {
            by_deg.entry(m.degree()).or_default().push((m.clone(), c.clone()));
        }
        for (_, t) in by_deg {
            let q = Polynomial::from_terms(&self.ring, t);
            if !self.normal_form(&q, &MonomialOrder::GrevLex)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_unit(&self) -> bool {
        self.with_gb(&MonomialOrder::GrevLex, None, |st| st.unit)
    }
}

pub fn groebner_basis<F: Field>(i: &Ideal<F>, order: &MonomialOrder, degree_bound: Option<u32>) -> Result<Vec<Polynomial<F>>> {
    i.groebner_basis(order, degree_bound)
}

pub fn normal_form<F: Field>(p: &Polynomial<F>, i: &Ideal<F>, order: &MonomialOrder) -> Result<Polynomial<F>> {
    i.normal_form(p, order)
}

pub fn contained_in<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<bool> {
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    for g in a.gens() {
        if !b.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn ideal_equal<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<bool> {
    Ok(contained_in(a, b)? && contained_in(b, a)?)
}

pub fn ideal_sum<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<Ideal<F>> {
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    Ideal::new(a.ring(), a.gens().iter().chain(b.gens()).cloned().collect())
}

/// Generated by all pairwise generator products (unordered pairs with
/// repetition when `a` and `b` are the same list).
pub fn ideal_product<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<Ideal<F>> {
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    let same = a.gens() == b.gens();
    let mut out = Vec::new();
    for (i, f) in a.gens().iter().enumerate() {
        for (j, g) in b.gens().iter().enumerate() {
            if same && j < i {
                continue;
            }
            out.push(f * g);
        }
    }
    Ideal::new(a.ring(), out)
}

/// `I ∩ J` by eliminating an auxiliary variable from `t·I + (1−t)·J`.
pub fn ideal_intersection<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Result<Ideal<F>> {
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    let ring = a.ring();
    let mut tname = "elimt".to_string();
    while ring.var_index(&tname).is_some() {
        tname.push('_');
    }
    let big = ring.with_leading(&[tname.as_str()])?;
    let n = ring.nvars();
    let map: Vec<usize> = (1..=n).collect();
    let t = Polynomial::var(&big, 0);
    let one_minus_t = &Polynomial::one(&big) - &t;
    let mut gens = Vec::new();
    for g in a.gens() {
        gens.push(&t * &g.embed(&big, &map));
    }
    for g in b.gens() {
        gens.push(&one_minus_t * &g.embed(&big, &map));
    }
    let mut w = vec![0i64; n + 1];
    w[0] = -1;
    let order = MonomialOrder::Weighted(w);
    let big_ideal = Ideal::new(&big, gens)?;
    let gb = big_ideal.groebner_basis(&order, None)?;
    let kept = gb
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exps()[0] == 0))
        .map(|g| {
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| {
                    (Monomial::from_exps(&m.exps()[1..]), c.clone())
                })
                .collect();
            Polynomial::from_terms(ring, terms)
        })
        .collect();
    Ideal::new(ring, kept)
}

/// Minimal generators of a monomial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    pub nvars: usize,
    pub gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.exps().cmp(b.exps())));
        gens.dedup();
        let mut min: Vec<Monomial> = Vec::new();
        for g in gens {
            if !min.iter().any(|m| m.divides(&g)) {
                min.push(g);
            }
        }
        MonomialIdeal { nvars, gens: min }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Number of standard monomials in each degree 0..=pmax.
    pub fn standard_counts(&self, pmax: u32) -> Vec<u64> {
        let n = self.nvars;
        // generators grouped by each variable they involve
        let mut by_var: Vec<Vec<&Monomial>> = vec![Vec::new(); n];
        for g in &self.gens {
            for (i, &e) in g.exps().iter().enumerate() {
                if e > 0 {
                    by_var[i].push(g);
                }
            }
        }
        let mut counts = Vec::with_capacity(pmax as usize + 1);
        let one = Monomial::one(n);
        if self.contains(&one) {
            return vec![0; pmax as usize + 1];
        }
        // (monomial, index of its last variable)
        let mut layer: Vec<(Vec<u16>, usize)> = vec![(vec![0u16; n], 0)];
        counts.push(1);
        for d in 1..=pmax {
            let mut next = Vec::new();
            for (e, last) in &layer {
                for i in *last..n {
                    let mut f = e.clone();
                    f[i] += 1;
                    let m = Monomial::from_exps(&f);
                    if !by_var[i].iter().any(|g| g.degree() <= d && g.divides(&m)) {
                        next.push((f, i));
                    }
                }
            }
            counts.push(next.len() as u64);
            layer = next;
        }
        counts
    }

    /// Largest set of variables containing the support of no generator.
    pub fn max_independent_set(&self) -> usize {
        let n = self.nvars;
        assert!(n <= 64, "independent-set search supports at most 64 variables");
        // generators bucketed by their highest variable
        let mut by_top: Vec<Vec<u64>> = vec![Vec::new(); n];
        for g in &self.gens {
            if let Some(top) = g.exps().iter().rposition(|&e| e > 0) {
                by_top[top].push(g.support_mask());
            }
        }
        fn dfs(i: usize, chosen: u64, size: usize, best: &mut usize, by_top: &[Vec<u64>]) {
            let n = by_top.len();
            if size + (n - i) <= *best {
                return;
            }
            if i == n {
                *best = size;
                return;
            }
            let with = chosen | (1u64 << i);
            if by_top[i].iter().all(|&m| m & !with != 0) {
                dfs(i + 1, with, size + 1, best, by_top);
            }
            dfs(i + 1, chosen, size, best, by_top);
        }
        let mut best = 0;
        dfs(0, 0, 0, &mut best, &by_top);
        best
    }
}

/// The leading-term ideal, complete in degrees ≤ `bound` when given.
pub fn leading_ideal<F: Field>(i: &Ideal<F>, order: &MonomialOrder, bound: Option<u32>) -> MonomialIdeal {
    let lms = i.with_gb(order, bound, |st| st.leading_monomials());
    MonomialIdeal::new(i.ring().nvars(), lms)
}

/// Classical Hilbert function values for p = 0..=pmax.
pub fn hilbert_values<F: Field>(i: &Ideal<F>, pmax: u32) -> Result<Vec<u64>> {
    hilbert_values_in(i, pmax, &MonomialOrder::GrevLex)
}

/// As [`hilbert_values`] under an arbitrary order (the answer never depends on it).
pub fn hilbert_values_in<F: Field>(i: &Ideal<F>, pmax: u32, order: &MonomialOrder) -> Result<Vec<u64>> {
    if !i.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    // for homogeneous input every order can be truncated by degree
    Ok(leading_ideal(i, order, Some(pmax)).standard_counts(pmax))
}

pub fn hilbert_function<F: Field>(i: &Ideal<F>, p: u32) -> Result<u64> {
    Ok(hilbert_values(i, p)?[p as usize])
}

/// `dim k[W]_{≤p} / (I ∩ k[W]_{≤p})` for p = 0..=pmax; works for inhomogeneous ideals.
pub fn affine_hilbert_values<F: Field>(i: &Ideal<F>, pmax: u32) -> Result<Vec<u64>> {
    let li = leading_ideal(i, &MonomialOrder::GrevLex, None);
    let counts = li.standard_counts(pmax);
    Ok(counts
        .iter()
        .scan(0u64, |acc, &c| {
            *acc += c;
            Some(*acc)
        })
        .collect())
}

pub fn krull_dim<F: Field>(i: &Ideal<F>) -> Result<usize> {
    let li = leading_ideal(i, &MonomialOrder::GrevLex, None);
    if li.contains(&Monomial::one(i.ring().nvars())) {
        return Err(Error::UnitIdeal);
    }
    Ok(li.max_independent_set())
}

/// Buchberger's criterion: every S-pair of `basis` reduces to zero against it.
pub fn certify_gb<F: Field>(basis: &[Polynomial<F>], order: &MonomialOrder) -> bool {
    let polys: Vec<Terms<F>> = basis
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let mut t = sort_terms(order, p.terms().to_vec());
            make_monic(&mut t);
            t
        })
        .collect();
    let st = GbState {
        order: order.clone(),
        gens: Vec::new(),
        lms: polys.iter().map(|t| t[0].0.clone()).collect(),
        masks: polys.iter().map(|t| t[0].0.support_mask()).collect(),
        active: vec![true; polys.len()],
        basis: polys,
        queue: BTreeMap::new(),
        seq: 0,
        unit: false,
        reduced_cache: None,
    };
    for i in 0..st.basis.len() {
        for j in i + 1..st.basis.len() {
            if st.lms[i].coprime(&st.lms[j]) {
                continue;
            }
            if !st.reduce(st.spoly(i, j)).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Ring helper: a fresh ring from names, for tests and the catalog.
pub fn ring_of(names: &[&str]) -> RingRef {
    Ring::new(names).expect("valid variable names")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::qp;
    use crate::scalar::Rational;

    fn ideal(r: &RingRef, gens: &[&str]) -> Ideal<Rational> {
        Ideal::new(r, gens.iter().map(|g| qp(g, r)).collect()).unwrap()
    }

    #[test]
    fn small_bases() {
        let r = ring_of(&["x", "y"]);
        let i = ideal(&r, &["x^2", "x*y"]);
        let gb = i.groebner_basis(&MonomialOrder::GrevLex, None).unwrap();
        assert_eq!(gb.len(), 2);
        let i = ideal(&r, &["x - y", "x + y"]);
        let gb = i.groebner_basis(&MonomialOrder::Lex, None).unwrap();
        assert_eq!(gb, vec![qp("y", &r), qp("x", &r)]);
        assert!(certify_gb(&[qp("x", &r), qp("y", &r)], &MonomialOrder::Lex));
        assert!(!certify_gb(&[qp("x^2 - y", &r), qp("x", &r)], &MonomialOrder::GrevLex));
    }

    #[test]
    fn membership_and_equality() {
        let r = ring_of(&["x", "y"]);
        let a = ideal(&r, &["x", "y"]);
        let b = ideal(&r, &["y", "x + y"]);
        assert!(ideal_equal(&a, &b).unwrap());
        assert!(!ideal_equal(&ideal(&r, &["x^2"]), &ideal(&r, &["x"])).unwrap());
        assert_eq!(a.normal_form(&qp("1", &r), &MonomialOrder::GrevLex).unwrap(), qp("1", &r));
    }

    #[test]
    fn intersections() {
        let r = ring_of(&["x", "y"]);
        let i = ideal_intersection(&ideal(&r, &["x"]), &ideal(&r, &["y"])).unwrap();
        assert!(ideal_equal(&i, &ideal(&r, &["x*y"])).unwrap());
        let i = ideal_intersection(&ideal(&r, &["x"]), &ideal(&r, &["x"])).unwrap();
        assert!(ideal_equal(&i, &ideal(&r, &["x"])).unwrap());
    }

    #[test]
    fn dims_and_counts() {
        let r = ring_of(&["a", "b", "c"]);
        assert_eq!(krull_dim(&Ideal::<Rational>::new(&r, vec![]).unwrap()).unwrap(), 3);
        assert_eq!(krull_dim(&ideal(&r, &["a", "b", "c"])).unwrap(), 0);
        assert_eq!(krull_dim(&ideal(&r, &["a*b", "c"])).unwrap(), 1);
        assert_eq!(krull_dim(&ideal(&r, &["a - 1", "a"])), Err(Error::UnitIdeal));
        assert_eq!(hilbert_values(&ideal(&r, &["a*b"]), 3).unwrap(), vec![1, 3, 5, 7]);
    }
}
