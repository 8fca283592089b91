//! Verification reports: every catalogued expectation of a case is turned
//! into a check with a verdict.

use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::catalog::{self, CaseSpec, ExpectedValue, FixedPoint};
use crate::degeneration::{self, KNOWN};
use crate::error::{Error, Result};
use crate::groebner::{certify_gb, hilbert_values, ideal_equal, ideal_intersection};
use crate::orbits;
use crate::reptheory::{classical_hilbert, GroupType, MultiplicityFn};
use crate::tangent::{self, TangentReport};
use crate::MonomialOrder;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Unsupported,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Unsupported => "UNSUPPORTED",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub citation: String,
    pub expected: String,
    pub computed: String,
    pub verdict: Verdict,
    pub ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub case: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }

    /// Human-readable form; timings are left out so the text is reproducible.
    pub fn to_text(&self) -> String {
        let mut out = format!("case {}\n", self.case);
        if self.checks.is_empty() {
            out.push_str("  (no checks registered)\n");
        }
        for c in &self.checks {
            let _ = writeln!(
                out,
                "  {:<11} {}  [{}]\n              expected {}\n              computed {}",
                c.verdict.to_string(),
                c.name,
                c.citation,
                c.expected,
                c.computed
            );
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    /// Largest degree for Hilbert function checks.
    pub pmax: u32,
    /// Restrict degeneration checks to this weight triple.
    pub weights: Option<[i64; 3]>,
    /// Checks starting after this much time in a case are reported unsupported.
    pub time_budget: Option<Duration>,
}

impl Default for Options {
    fn default() -> Self {
        Options { pmax: 6, weights: None, time_budget: None }
    }
}

/// Outcome of one check body: (expected, computed, verdict).
type Outcome = (String, String, Verdict);

struct Runner<'a> {
    opts: &'a Options,
    start: Instant,
    checks: Vec<Check>,
}

impl Runner<'_> {
    fn run(&mut self, name: &str, citation: &str, body: impl FnOnce() -> Result<Outcome>) {
        let t = Instant::now();
        let over = self.opts.time_budget.is_some_and(|b| self.start.elapsed() > b);
        let (expected, computed, verdict) = if over {
            ("-".into(), "skipped: time budget exhausted".into(), Verdict::Unsupported)
        } else {
            match body() {
                Ok(o) => o,
                Err(e @ Error::Unsupported(_)) => ("-".into(), e.to_string(), Verdict::Unsupported),
                Err(e) => ("-".into(), format!("error: {e}"), Verdict::Fail),
            }
        };
        self.checks.push(Check {
            name: name.into(),
            citation: citation.into(),
            expected,
            computed,
            verdict,
            ms: t.elapsed().as_millis() as u64,
        });
    }
}

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

fn list<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn hilbert_check(spec: &CaseSpec, ideal: &str, value: &ExpectedValue, pmax: u32) -> Result<Outcome> {
    let i = spec.ideal(ideal)?;
    let (want, upto): (Vec<String>, u32) = match value {
        ExpectedValue::Values(v) => {
            let k = (v.len() as u32).min(pmax + 1);
            (v[..k as usize].iter().map(u64::to_string).collect(), k.saturating_sub(1))
        }
        ExpectedValue::At(p, v) => (vec![v.to_string()], *p),
        ExpectedValue::Hilbert(qp) => ((0..=pmax).map(|p| qp.eval(p).to_string()).collect(), pmax),
        other => return Err(Error::InvalidParams(format!("not a Hilbert expectation: {other:?}"))),
    };
    let got = hilbert_values(i, upto)?;
    let got: Vec<String> = match value {
        ExpectedValue::At(p, _) => vec![got[*p as usize].to_string()],
        _ => got.iter().map(u64::to_string).collect(),
    };
    let label = |v: &[String]| match value {
        ExpectedValue::At(p, _) => format!("f({p}) = {}", v[0]),
        _ => format!("f(0..{upto}) = {}", list(v)),
    };
    Ok((label(&want), label(&got), verdict(want == got)))
}

/// The group whose regular multiplicity function matches a named fixed point.
fn regular_group(base: &str) -> Option<GroupType> {
    match base {
        "gl2" => Some(GroupType::GL(2)),
        "gl3" => Some(GroupType::GL(3)),
        "sp4" => Some(GroupType::Sp(4)),
        _ => None,
    }
}

fn tangent_targets(spec: &CaseSpec) -> Vec<Option<FixedPoint>> {
    match (spec.base_name(), spec.fixed_point) {
        (_, Some(f)) => vec![Some(f)],
        ("gl2" | "gl3" | "o2" | "sp4", None) => vec![None],
        ("o3", None) => vec![Some(FixedPoint::I2)],
        ("so3", None) => vec![Some(FixedPoint::I1), Some(FixedPoint::I2)],
        _ => vec![],
    }
}

fn int_expectation(spec: &CaseSpec, what: &str, ideal: &str) -> Option<(i64, String)> {
    spec.expected(&catalog::key(what, ideal)).and_then(|e| match e.value {
        ExpectedValue::Int(v) => Some((v, e.citation.clone())),
        _ => None,
    })
}

fn tangent_checks(r: &mut Runner, spec: &CaseSpec, which: Option<FixedPoint>) {
    let report: std::result::Result<TangentReport, Error> = tangent::tangent_bounds(spec, which);
    let report = match report {
        Ok(t) => t,
        Err(e) => {
            let label = which.map_or("I", FixedPoint::label);
            r.run(&format!("tangent {label}"), "tangent space suite", || Err(e));
            return;
        }
    };
    let id = report.ideal_name.clone();
    r.run(&format!("generators {id}"), "generator list spans the ideal", || {
        Ok(("true".into(), report.generates.to_string(), verdict(report.generates)))
    });
    if !report.relations.is_empty() {
        r.run(&format!("relations {id}"), "catalogued relations", || {
            let bad: Vec<&str> = report.relations.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
            let n = report.relations.len();
            let computed =
                if bad.is_empty() { format!("{n}/{n} hold") } else { format!("failing: {}", bad.join(",")) };
            Ok((format!("{n}/{n} hold"), computed, verdict(bad.is_empty())))
        });
    }
    if let Some((v, cite)) = int_expectation(spec, catalog::DIM_N, &id) {
        r.run(&catalog::key(catalog::DIM_N, &id), &cite, || {
            Ok((v.to_string(), report.dim_n.to_string(), verdict(report.dim_n as i64 == v)))
        });
    }
    if let Some((v, cite)) = int_expectation(spec, catalog::RANK, &id) {
        r.run(&catalog::key(catalog::RANK, &id), &cite, || {
            Ok((format!(">= {v}"), report.rank.to_string(), verdict(report.rank as i64 >= v)))
        });
    }
    if let Some((v, cite)) = int_expectation(spec, catalog::MIN_GENERATORS, &id) {
        r.run(&catalog::key(catalog::MIN_GENERATORS, &id), &cite, || {
            Ok((v.to_string(), report.rank.to_string(), verdict(report.rank as i64 == v)))
        });
    }
    if let Some((v, cite)) = int_expectation(spec, catalog::TANGENT_DIM, &id) {
        r.run(&catalog::key(catalog::TANGENT_DIM, &id), &cite, || {
            let got = match report.concluded() {
                Some(d) => d.to_string(),
                None => format!("undecided in [{}, {}]", report.lower, report.upper),
            };
            Ok((v.to_string(), got, verdict(report.concluded() == Some(v))))
        });
    }
    if let Some(e) = spec.expected(&catalog::key(catalog::TANGENT_INTERVAL, &id)) {
        if let ExpectedValue::Interval(lo, hi) = e.value {
            r.run(&catalog::key(catalog::TANGENT_INTERVAL, &id), &e.citation, || {
                let ok = report.lower == lo && report.upper == hi;
                Ok((format!("[{lo}, {hi}]"), format!("[{}, {}]", report.lower, report.upper), verdict(ok)))
            });
        }
    }
    if let Some((v, cite)) = int_expectation(spec, catalog::DIM_H_PRIN, &id) {
        r.run(&format!("singular at {id}"), &cite, || {
            Ok((format!("tangent lower bound > {v}"), report.lower.to_string(), verdict(report.lower > v)))
        });
    }
}

fn degeneration_checks(r: &mut Runner, spec: &CaseSpec) {
    let base = spec.base_name();
    let has_basis = catalog::recorded_basis(spec).is_ok();
    if has_basis {
        r.run("recorded basis", "recorded Groebner basis of the generic fiber", || {
            let basis = catalog::recorded_basis(spec)?;
            let ok = certify_gb(&basis, &MonomialOrder::GrevLex);
            Ok(("S-pairs reduce to 0".into(), if ok { "certified" } else { "not a basis" }.into(), verdict(ok)))
        });
    }
    let mut triples: Vec<[i64; 3]> = KNOWN.iter().filter(|(c, _, _)| *c == base).map(|&(_, t, _)| t).collect();
    if let Some(w) = r.opts.weights {
        if !has_basis {
            return;
        }
        triples = vec![w];
    }
    for t in triples {
        r.run(&format!("degeneration {t:?}"), "weight degeneration of the generic fiber", || {
            let dc = degeneration::degeneration_case(spec, t)?;
            let out = degeneration::run(&dc)?;
            let target = dc.target_name.label();
            let got = if out.reaches_target { format!("limit = {target}") } else { format!("limit != {target}") };
            Ok((format!("limit = {target}"), got, verdict(out.reaches_target)))
        });
    }
}

fn intersection_check(r: &mut Runner, spec: &CaseSpec) {
    let Ok(parts) = catalog::component_ideals(spec) else { return };
    let k = parts.len();
    r.run("intersection", "component decomposition of the fixed point", || {
        let i = catalog::fixed_point_ideal(spec, None)?;
        let mut acc = parts[0].clone();
        for p in &parts[1..] {
            acc = ideal_intersection(&acc, p)?;
        }
        let ok = ideal_equal(&acc, &i)?;
        let got = if ok { "equal" } else { "different" };
        Ok((format!("I = intersection of {k} components"), got.into(), verdict(ok)))
    });
}

fn dimension_checks(r: &mut Runner, spec: &CaseSpec) {
    let Ok(formula) = orbits::nilcone_dim(spec.situation, &spec.params) else { return };
    r.run("nilcone dimension", "closed-form nilcone dimension", || {
        let k = orbits::nilcone_krull_dim(spec)?;
        Ok((formula.to_string(), k.to_string(), verdict(k as i64 == formula)))
    });
}

/// Runs every check registered for a case. Unknown names are errors.
pub fn run_case(name: &str, opts: &Options) -> Result<Report> {
    let spec = catalog::case(name)?;
    let mut r = Runner { opts, start: Instant::now(), checks: Vec::new() };
    for e in &spec.expected {
        if let Some(ideal) = e.name.strip_prefix(&format!("{} ", catalog::HILBERT)) {
            r.run(&e.name, &e.citation, || hilbert_check(&spec, ideal, &e.value, opts.pmax));
        }
    }
    if let Some(g) = regular_group(spec.base_name()) {
        r.run("classical hilbert I", "regular multiplicity function", || {
            let i = catalog::fixed_point_ideal(&spec, None)?;
            let got = hilbert_values(&i, opts.pmax)?;
            let want = (0..=opts.pmax)
                .map(|p| classical_hilbert(g, &MultiplicityFn::Regular, p))
                .collect::<Result<Vec<_>>>()?;
            Ok((list(&want), list(&got), verdict(want == got)))
        });
    }
    for which in tangent_targets(&spec) {
        tangent_checks(&mut r, &spec, which);
    }
    degeneration_checks(&mut r, &spec);
    intersection_check(&mut r, &spec);
    dimension_checks(&mut r, &spec);
    Ok(Report { case: spec.name.clone(), checks: r.checks })
}

/// Runs several cases on separate threads; reports come back sorted by name.
pub fn run_many(names: &[String], opts: &Options) -> Result<Vec<Report>> {
    let mut reports = std::thread::scope(|s| {
        let handles: Vec<_> = names.iter().map(|n| s.spawn(move || run_case(n, opts))).collect();
        handles.into_iter().map(|h| h.join().expect("case thread panicked")).collect::<Result<Vec<_>>>()
    })?;
    reports.sort_by(|a, b| a.case.cmp(&b.case));
    Ok(reports)
}

pub fn run_all(opts: &Options) -> Result<Vec<Report>> {
    run_many(&catalog::default_cases(), opts)
}

/// Parses `a,b,c` into a weight triple.
pub fn parse_weights(text: &str) -> Result<[i64; 3]> {
    let parts: Vec<i64> = text
        .split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|_| Error::InvalidParams(format!("bad weight `{s}`"))))
        .collect::<Result<_>>()?;
    parts.try_into().map_err(|v: Vec<i64>| Error::LengthMismatch { expected: 3, got: v.len() })
}
