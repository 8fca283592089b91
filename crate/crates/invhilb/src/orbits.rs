//! Nilpotent orbit combinatorics and the dimension formulas of the
//! quotient maps.

use std::fmt;

use crate::catalog::{self, CaseSpec};
use crate::error::{Error, Result};
use crate::groebner::krull_dim;
use crate::reptheory::Situation;

/// A weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidParams("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    /// Builds [a₁^{m₁}, a₂^{m₂}, …]; zero multiplicities are skipped.
    pub fn from_powers(powers: &[(u32, usize)]) -> Result<Self> {
        let mut parts = Vec::new();
        for &(a, m) in powers {
            parts.extend(std::iter::repeat_n(a, m));
        }
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn multiplicity(&self, a: u32) -> usize {
        self.0.iter().filter(|&&p| p == a).count()
    }

    pub fn transpose(&self) -> Partition {
        let max = self.0.first().copied().unwrap_or(0);
        Partition((1..=max).map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32).collect())
    }

    fn odd_parts(&self) -> i64 {
        self.0.iter().filter(|p| *p % 2 == 1).count() as i64
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut groups: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match groups.last_mut() {
                Some((a, m)) if *a == p => *m += 1,
                _ => groups.push((p, 1)),
            }
        }
        let body: Vec<String> =
            groups.iter().map(|&(a, m)| if m == 1 { a.to_string() } else { format!("{a}^{m}") }).collect();
        write!(f, "[{}]", body.join(","))
    }
}

/// gl(m), sp(2m) or so(m); the field is m in each case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LieType {
    Gl(u32),
    Sp(u32),
    So(u32),
}

impl LieType {
    /// Size of the natural representation.
    pub fn ambient(self) -> u32 {
        match self {
            LieType::Gl(m) | LieType::So(m) => m,
            LieType::Sp(m) => 2 * m,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieType::Gl(m) => write!(f, "gl({m})"),
            LieType::Sp(m) => write!(f, "sp({})", 2 * m),
            LieType::So(m) => write!(f, "so({m})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    I,
    II,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbitLabel {
    pub ty: LieType,
    pub partition: Partition,
    pub tag: Option<Tag>,
}

impl OrbitLabel {
    pub fn new(ty: LieType, partition: Partition, tag: Option<Tag>) -> Result<Self> {
        if !valid_partition(ty, &partition)? {
            return Err(Error::InvalidParams(format!("{partition} does not label an orbit of {ty}")));
        }
        if is_very_even(ty, &partition) != tag.is_some() {
            return Err(Error::InvalidParams(format!("tag must be given exactly for very even partitions in {ty}")));
        }
        Ok(OrbitLabel { ty, partition, tag })
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.ty, self.partition)?;
        match self.tag {
            Some(Tag::I) => write!(f, " (I)"),
            Some(Tag::II) => write!(f, " (II)"),
            None => Ok(()),
        }
    }
}

/// Parity rules: in sp odd parts come in pairs, in so even parts do.
pub fn valid_partition(ty: LieType, p: &Partition) -> Result<bool> {
    if p.total() != ty.ambient() {
        return Err(Error::LengthMismatch { expected: ty.ambient() as usize, got: p.total() as usize });
    }
    let paired = |odd: bool| p.parts().iter().filter(|&&a| (a % 2 == 1) == odd).all(|&a| p.multiplicity(a).is_multiple_of(2));
    Ok(match ty {
        LieType::Gl(_) => true,
        LieType::Sp(_) => paired(true),
        LieType::So(_) => paired(false),
    })
}

/// Very even: type so, every part even (hence with even multiplicity).
pub fn is_very_even(ty: LieType, p: &Partition) -> bool {
    matches!(ty, LieType::So(_)) && !p.parts().is_empty() && p.parts().iter().all(|a| a % 2 == 0)
}

pub fn orbit_dim(label: &OrbitLabel) -> Result<i64> {
    if !valid_partition(label.ty, &label.partition)? {
        return Err(Error::InvalidParams(format!("invalid label {label}")));
    }
    let s = label.partition.transpose();
    let sq: i64 = s.parts().iter().map(|&x| (x as i64) * (x as i64)).sum();
    let odd = label.partition.odd_parts();
    Ok(match label.ty {
        LieType::Gl(m) => {
            let m = m as i64;
            m * m - sq
        }
        LieType::Sp(m) => {
            let m = m as i64;
            2 * m * m + m - (sq + odd) / 2
        }
        LieType::So(m) => {
            let m = m as i64;
            (m * m - m - sq + odd) / 2
        }
    })
}

/// Dominance order, which is the closure order on nilpotent orbits.
pub fn closure_leq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.total() != mu.total() {
        return Err(Error::LengthMismatch { expected: mu.total() as usize, got: lambda.total() as usize });
    }
    let (mut a, mut b) = (0u32, 0u32);
    for j in 0..lambda.parts().len().max(mu.parts().len()) {
        a += lambda.parts().get(j).copied().unwrap_or(0);
        b += mu.parts().get(j).copied().unwrap_or(0);
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Groups whose symplectic reduction of d copies of V ⊕ V* is described.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionGroup {
    /// GL(V), dim V = n; the quotient sits in gl(d).
    Gl,
    /// O(V), dim V = n; the quotient sits in sp(2d).
    O,
    /// Sp(V), dim V = n even; the quotient sits in so(2d).
    Sp,
}

/// The orbit closure(s) making up μ⁻¹(0)//G; two labels for the very even case.
pub fn symplectic_reduction_orbit(group: ReductionGroup, n: u32, d: u32) -> Result<Vec<OrbitLabel>> {
    if d == 0 || n == 0 {
        return Err(Error::InvalidParams("n and d must be positive".into()));
    }
    let two_ones = |twos: u32, ones: u32| Partition::from_powers(&[(2, twos as usize), (1, ones as usize)]);
    match group {
        ReductionGroup::Gl => {
            let big_n = (d / 2).min(n);
            Ok(vec![OrbitLabel::new(LieType::Gl(d), two_ones(big_n, d - 2 * big_n)?, None)?])
        }
        ReductionGroup::O => {
            let big_n = d.min(n);
            Ok(vec![OrbitLabel::new(LieType::Sp(d), two_ones(big_n, 2 * (d - big_n))?, None)?])
        }
        ReductionGroup::Sp => {
            if n % 2 == 1 {
                return Err(Error::InvalidParams("symplectic space must have even dimension".into()));
            }
            let ty = LieType::So(2 * d);
            if d > n {
                Ok(vec![OrbitLabel::new(ty, two_ones(n, 2 * (d - n))?, None)?])
            } else if d % 2 == 1 {
                Ok(vec![OrbitLabel::new(ty, two_ones(d - 1, 2)?, None)?])
            } else {
                let p = two_ones(d, 0)?;
                Ok(vec![
                    OrbitLabel::new(ty, p.clone(), Some(Tag::I))?,
                    OrbitLabel::new(ty, p, Some(Tag::II))?,
                ])
            }
        }
    }
}

/// Whether the orbit closure admits a symplectic resolution.
///
/// gl: always. so: the two parity-position clauses. sp(2d): only the full
/// shape [2^d].
pub fn has_symplectic_resolution(label: &OrbitLabel) -> Result<bool> {
    let parts = label.partition.parts();
    match label.ty {
        LieType::Gl(_) => Ok(true),
        LieType::So(_) => {
            let odd: Vec<usize> = parts.iter().enumerate().filter(|(_, a)| *a % 2 == 1).map(|(i, _)| i + 1).collect();
            let q = odd.len();
            let clause_a = q.is_multiple_of(2) && q != 2 && odd.iter().enumerate().all(|(k, &pos)| pos == k + 1);
            let clause_b = q == 2 && odd[0] % 2 == 1 && odd[1] == odd[0] + 1;
            Ok(clause_a || clause_b)
        }
        LieType::Sp(d) => Ok(parts.len() == d as usize && parts.iter().all(|&a| a == 2)),
    }
}

fn params2(sit: Situation, params: &[usize]) -> Result<(i64, i64)> {
    match params {
        [a, b] if *a > 0 && *b > 0 => Ok((*a as i64, *b as i64)),
        [_, _] => Err(Error::InvalidParams("parameters must be positive".into())),
        _ => Err(Error::LengthMismatch { expected: if sit == Situation::GL { 3 } else { 2 }, got: params.len() }),
    }
}

fn params3(params: &[usize]) -> Result<(i64, i64, i64)> {
    match params {
        [a, b, c] if *a > 0 && *b > 0 && *c > 0 => Ok((*a as i64, *b as i64, *c as i64)),
        [_, _, _] => Err(Error::InvalidParams("parameters must be positive".into())),
        _ => Err(Error::LengthMismatch { expected: 3, got: params.len() }),
    }
}

fn even_dim(n: i64) -> Result<()> {
    if n % 2 == 1 {
        return Err(Error::InvalidParams("symplectic space must have even dimension".into()));
    }
    Ok(())
}

/// Exact value of `num / den`; the formulas below always divide evenly.
fn exact(num: i64, den: i64) -> i64 {
    debug_assert_eq!(num % den, 0, "{num}/{den}");
    num / den
}

/// Gorenstein property of W//G: GL iff n₁ = n₂, O iff n′ − n is odd; SL and
/// Sp quotients always are.
pub fn gorenstein(sit: Situation, params: &[usize]) -> Result<bool> {
    match sit {
        Situation::GL => {
            let (_, n1, n2) = params3(params)?;
            Ok(n1 == n2)
        }
        Situation::O => {
            let (n, m) = params2(sit, params)?;
            Ok((m - n).rem_euclid(2) == 1)
        }
        Situation::SL | Situation::Sp => Ok(true),
        _ => Err(Error::Unsupported(format!("Gorenstein criterion for {sit:?}"))),
    }
}

/// Index N of the largest stratum U_N of W//G.
pub fn top_stratum(sit: Situation, params: &[usize]) -> Result<i64> {
    match sit {
        Situation::GL => {
            let (n, n1, n2) = params3(params)?;
            Ok(n.min(n1).min(n2))
        }
        Situation::O | Situation::SO => {
            let (n, m) = params2(sit, params)?;
            Ok(n.min(m))
        }
        Situation::Sp => {
            let (n, m) = params2(sit, params)?;
            even_dim(n)?;
            Ok((m / 2).min(n / 2))
        }
        Situation::SL => Ok(1),
        _ => Err(Error::Unsupported(format!("strata for {sit:?}"))),
    }
}

fn gl_nilcone(n: i64, n1: i64, n2: i64) -> i64 {
    if n <= n2 - n1 {
        n * n2
    } else if n <= n1 - n2 {
        n * n1
    } else if n >= n1 + n2 {
        n * n1 + n * n2 - n1 * n2
    } else {
        let base = n * (n + 2 * n1 + 2 * n2) + (n1 - n2) * (n1 - n2);
        let odd = (n + n1 - n2).rem_euclid(2);
        exact(base - odd, 4)
    }
}

fn o_nilcone(n: i64, m: i64) -> i64 {
    if n % 2 == 0 && 2 * m >= n {
        exact(4 * n * m + n * n - 2 * n, 8)
    } else if n % 2 == 1 && 2 * m >= n - 1 {
        exact(4 * m * (n - 1) + n * n - 1, 8)
    } else {
        n * m - exact(m * (m + 1), 2)
    }
}

fn sp_nilcone(n: i64, m: i64) -> i64 {
    if 2 * m <= n {
        n * m - exact(m * (m - 1), 2)
    } else {
        exact(4 * n * m + n * n + 2 * n, 8)
    }
}

/// Dimension of the nilcone of W → W//G, or of μ⁻¹(0) for the symplectic
/// situations (params (n, d)).
pub fn nilcone_dim(sit: Situation, params: &[usize]) -> Result<i64> {
    match sit {
        Situation::GL => {
            let (n, n1, n2) = params3(params)?;
            Ok(gl_nilcone(n, n1, n2))
        }
        Situation::O => {
            let (n, m) = params2(sit, params)?;
            Ok(o_nilcone(n, m))
        }
        Situation::Sp => {
            let (n, m) = params2(sit, params)?;
            even_dim(n)?;
            Ok(sp_nilcone(n, m))
        }
        Situation::GlSymplectic => {
            let (n, d) = params2(sit, params)?;
            Ok(if d >= 2 * n { 2 * n * d - n * n } else { n * d + exact(d * d - d % 2, 4) })
        }
        Situation::OSymplectic => {
            let (n, d) = params2(sit, params)?;
            Ok(if n <= d { 2 * d * n - exact(n * (n - 1), 2) } else { d * n + exact(d * d + d, 2) })
        }
        Situation::SpSymplectic => {
            let (n, d) = params2(sit, params)?;
            even_dim(n)?;
            Ok(if d > n { 2 * d * n - exact(n * (n + 1), 2) } else { d * n + exact(d * (d - 1), 2) })
        }
        Situation::SL | Situation::SO => Err(Error::Unsupported(format!("nilcone formula for {sit:?}"))),
    }
}

/// Dimension of the fiber of ν over the representative of U_r (over J_{2r}
/// for Sp).
pub fn fiber_dim(sit: Situation, params: &[usize], r: i64) -> Result<i64> {
    let top = top_stratum(sit, params)?;
    if r < 0 || r > top {
        return Err(Error::InvalidParams(format!("stratum {r} outside 0..={top}")));
    }
    match sit {
        Situation::GL => {
            let (n, n1, n2) = params3(params)?;
            let k = n - r;
            Ok(if k <= n2 - n1 {
                n * n2 + n * r - n2 * r
            } else if k <= n1 - n2 {
                n * n1 + n * r - n1 * r
            } else if n >= n1 + n2 - r {
                n * n1 + n * n2 - n1 * n2
            } else {
                let base = 2 * k * (n1 + n2) + (r + n) * (r + n) + (n1 - n2) * (n1 - n2);
                exact(base - (n + n1 - n2 - r).rem_euclid(2), 4)
            })
        }
        Situation::O => {
            let (n, m) = params2(sit, params)?;
            Ok(if 2 * m - r < n {
                m * n - exact(m * (m + 1), 2)
            } else if (n - r) % 2 == 0 {
                exact(4 * m * (n - r) + (r + n) * (r + n) - 2 * (n + r), 8)
            } else {
                exact(4 * m * (n - r - 1) + (r + n) * (r + n) - 1, 8)
            })
        }
        Situation::Sp => {
            let (n, m) = params2(sit, params)?;
            Ok(if 2 * (m - r) <= n {
                m * n - exact(m * (m - 1), 2)
            } else {
                let s = n + 2 * r;
                exact(4 * m * (n - 2 * r) + s * s + 2 * s, 8)
            })
        }
        _ => Err(Error::Unsupported(format!("fiber formula for {sit:?}"))),
    }
}

/// Indices of the strata U₀..U_N over which ν is flat, in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatLocus {
    pub strata: Vec<i64>,
    pub top: i64,
}

impl FlatLocus {
    pub fn everywhere(&self) -> bool {
        self.strata.len() as i64 == self.top + 1
    }
}

pub fn flatness_locus(sit: Situation, params: &[usize]) -> Result<FlatLocus> {
    let top = top_stratum(sit, params)?;
    let from = |lo: i64| FlatLocus { strata: (lo.max(0)..=top).collect(), top };
    Ok(match sit {
        Situation::GL => {
            let (n, n1, n2) = params3(params)?;
            let max = n1.max(n2);
            if n > max {
                from(n1 + n2 - n - 1)
            } else if n == max {
                from(top - 1)
            } else {
                from(top)
            }
        }
        Situation::O | Situation::SO => {
            let (n, m) = params2(sit, params)?;
            match m.cmp(&n) {
                std::cmp::Ordering::Less => from(2 * m - n - 1),
                std::cmp::Ordering::Equal => from(top - 1),
                std::cmp::Ordering::Greater => from(top),
            }
        }
        Situation::Sp => {
            let (n, m) = params2(sit, params)?;
            match m.cmp(&n) {
                std::cmp::Ordering::Less => from(m - n / 2 - 1),
                std::cmp::Ordering::Equal => from(top - 1),
                std::cmp::Ordering::Greater => from(top),
            }
        }
        Situation::SL => {
            // strata: 0 = the origin, 1 = its complement U
            let (n, m) = params2(sit, params)?;
            if m <= n || n == 1 {
                from(0)
            } else {
                from(1)
            }
        }
        _ => return Err(Error::Unsupported(format!("flatness for {sit:?}"))),
    })
}

/// Closed-form criteria for flatness over all of W//G.
pub fn flat_everywhere_predicate(sit: Situation, params: &[usize]) -> Result<bool> {
    match sit {
        Situation::GL => {
            let (n, n1, n2) = params3(params)?;
            Ok(n >= n1 + n2 - 1)
        }
        Situation::O | Situation::SO => {
            let (n, m) = params2(sit, params)?;
            Ok(n >= 2 * m - 1)
        }
        Situation::Sp => {
            let (n, m) = params2(sit, params)?;
            Ok(n + 2 >= 2 * m)
        }
        Situation::SL => {
            let (n, m) = params2(sit, params)?;
            Ok(m <= n || n == 1)
        }
        _ => Err(Error::Unsupported(format!("flatness for {sit:?}"))),
    }
}

/// Krull dimension of the nilcone (or μ⁻¹(0)) ideal of a catalogued case.
pub fn nilcone_krull_dim(spec: &CaseSpec) -> Result<usize> {
    let ideal = match spec.situation {
        Situation::GlSymplectic | Situation::OSymplectic | Situation::SpSymplectic => catalog::moment_ideal(spec)?,
        _ => catalog::ideal_j(spec)?,
    };
    krull_dim(&ideal)
}
