//! Highest weights of the classical groups, their dimensions, and the bridge
//! from an equivariant Hilbert function to the classical one.
//!
//! Weights are integer vectors in the standard ε-basis of a maximal torus.
//! Dominance conventions:
//!
//! | group      | coordinates | dominant when                       |
//! |------------|-------------|-------------------------------------|
//! | GL(n), SL(n) | n         | r₁ ≥ … ≥ rₙ                         |
//! | Sp(2m)     | m           | r₁ ≥ … ≥ r_m ≥ 0                    |
//! | SO(2m+1)   | m           | r₁ ≥ … ≥ r_m ≥ 0                    |
//! | SO(2m)     | m           | r₁ ≥ … ≥ r_{m−1} ≥ \|r_m\|          |
//! | O(n)       | ⌊n/2⌋       | r₁ ≥ … ≥ r_m ≥ 0, plus a sign tag   |
//! | Gm         | 1           | always                              |

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{q, to_i64};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupType {
    GL(usize),
    SL(usize),
    O(usize),
    SO(usize),
    /// Parameter is the (even) dimension of the defining representation.
    Sp(usize),
    Gm,
}

impl GroupType {
    pub fn validate(&self) -> Result<()> {
        match *self {
            GroupType::GL(n) | GroupType::SL(n) | GroupType::O(n) | GroupType::SO(n) if n >= 1 => Ok(()),
            GroupType::Sp(n) if n >= 2 && n % 2 == 0 => Ok(()),
            GroupType::Gm => Ok(()),
            g => Err(Error::InvalidParams(format!("{g:?}"))),
        }
    }

    /// Number of weight coordinates.
    pub fn rank(&self) -> usize {
        match *self {
            GroupType::GL(n) | GroupType::SL(n) => n,
            GroupType::O(n) | GroupType::SO(n) | GroupType::Sp(n) => n / 2,
            GroupType::Gm => 1,
        }
    }

    /// Whether dominance forces every coordinate to be nonnegative.
    fn nonnegative(&self) -> bool {
        match *self {
            GroupType::Sp(_) | GroupType::O(_) => true,
            GroupType::SO(n) => n % 2 == 1,
            _ => false,
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupType::GL(n) => write!(f, "GL{n}"),
            GroupType::SL(n) => write!(f, "SL{n}"),
            GroupType::O(n) => write!(f, "O{n}"),
            GroupType::SO(n) => write!(f, "SO{n}"),
            GroupType::Sp(n) => write!(f, "Sp{n}"),
            GroupType::Gm => write!(f, "Gm"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub group: GroupType,
    pub coords: Vec<i64>,
}

impl Weight {
    pub fn new(group: GroupType, coords: Vec<i64>) -> Result<Self> {
        group.validate()?;
        if coords.len() != group.rank() {
            return Err(Error::LengthMismatch { expected: group.rank(), got: coords.len() });
        }
        Ok(Weight { group, coords })
    }

    pub fn is_dominant(&self) -> bool {
        let r = &self.coords;
        let decreasing = r.windows(2).all(|w| w[0] >= w[1]);
        match self.group {
            GroupType::GL(_) | GroupType::SL(_) | GroupType::Gm => decreasing,
            GroupType::Sp(_) | GroupType::O(_) => decreasing && r.iter().all(|&x| x >= 0),
            GroupType::SO(n) if n % 2 == 1 => decreasing && r.iter().all(|&x| x >= 0),
            GroupType::SO(_) => match r.split_last() {
                None => true,
                Some((&last, head)) => {
                    head.windows(2).all(|w| w[0] >= w[1]) && head.last().is_none_or(|&h| h >= last.abs())
                }
            },
        }
    }

    pub fn abs_sum(&self) -> i64 {
        self.coords.iter().map(|r| r.abs()).sum()
    }

    pub fn sum(&self) -> i64 {
        self.coords.iter().sum()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(|r| r.to_string()).collect();
        write!(f, "{}({})", self.group, c.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// An irreducible representation: a highest weight plus, for orthogonal groups,
/// the sign tag distinguishing the two extensions from SO to O.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrrLabel {
    pub weight: Weight,
    pub sign: Option<Sign>,
}

impl IrrLabel {
    pub fn new(weight: Weight, sign: Option<Sign>) -> Result<Self> {
        if sign.is_some() != Self::needs_sign(&weight) {
            return Err(Error::InvalidParams(format!("sign tag mismatch for {weight}")));
        }
        Ok(IrrLabel { weight, sign })
    }

    /// Label without a sign tag; fails where one is required.
    pub fn plain(group: GroupType, coords: Vec<i64>) -> Result<Self> {
        Self::new(Weight::new(group, coords)?, None)
    }

    /// The SL₂ module V(d) of dimension d + 1.
    pub fn sl2(d: u32) -> Self {
        IrrLabel { weight: Weight { group: GroupType::SL(2), coords: vec![d as i64, 0] }, sign: None }
    }

    /// O(n) modules carry a sign unless they are induced from a pair of SO(n) modules.
    fn needs_sign(w: &Weight) -> bool {
        match w.group {
            GroupType::O(n) if n % 2 == 1 => true,
            GroupType::O(_) => w.coords.last().is_none_or(|&r| r == 0),
            _ => false,
        }
    }
}

impl fmt::Display for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.weight)?;
        match self.sign {
            Some(Sign::Plus) => write!(f, "+"),
            Some(Sign::Minus) => write!(f, "-"),
            None => Ok(()),
        }
    }
}

fn ratio_product(factors: impl Iterator<Item = (i64, i64)>) -> i64 {
    let mut acc = q(1);
    for (num, den) in factors {
        acc = acc * q(num) / q(den);
    }
    to_i64(&acc).expect("Weyl dimension is an integer")
}

fn pairs(m: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..m).flat_map(move |i| (i + 1..m).map(move |j| (i, j)))
}

/// Dimension of the irreducible GL(n) module with dominant weight `r`.
pub fn gl_dim(r: &[i64]) -> i64 {
    ratio_product(pairs(r.len()).map(|(i, j)| (r[i] - r[j] + (j - i) as i64, (j - i) as i64)))
}

/// Dimension of the polynomial GL(d) module labelled by the partition `part`,
/// zero when the partition has more than `d` nonzero parts.
pub fn polynomial_gl_dim(part: &[i64], d: usize) -> i64 {
    let nz: Vec<i64> = part.iter().copied().filter(|&x| x != 0).collect();
    if nz.len() > d {
        return 0;
    }
    let mut r = nz;
    r.resize(d, 0);
    gl_dim(&r)
}

fn sp_dim(r: &[i64]) -> i64 {
    let m = r.len();
    let rho: Vec<i64> = (0..m).map(|i| (m - i) as i64).collect();
    let l: Vec<i64> = (0..m).map(|i| r[i] + rho[i]).collect();
    let a = pairs(m).map(|(i, j)| ((l[i] - l[j]) * (l[i] + l[j]), (rho[i] - rho[j]) * (rho[i] + rho[j])));
    let b = (0..m).map(|i| (l[i], rho[i]));
    ratio_product(a.chain(b))
}

fn so_odd_dim(r: &[i64]) -> i64 {
    // doubled coordinates keep ρ = (m − ½, …, ½) integral
    let m = r.len();
    let rho: Vec<i64> = (0..m).map(|i| (2 * (m - i) - 1) as i64).collect();
    let l: Vec<i64> = (0..m).map(|i| 2 * r[i] + rho[i]).collect();
    let a = pairs(m).map(|(i, j)| (l[i] * l[i] - l[j] * l[j], rho[i] * rho[i] - rho[j] * rho[j]));
    let b = (0..m).map(|i| (l[i], rho[i]));
    ratio_product(a.chain(b))
}

fn so_even_dim(r: &[i64]) -> i64 {
    let m = r.len();
    let rho: Vec<i64> = (0..m).map(|i| (m - 1 - i) as i64).collect();
    let l: Vec<i64> = (0..m).map(|i| r[i] + rho[i]).collect();
    ratio_product(pairs(m).map(|(i, j)| (l[i] * l[i] - l[j] * l[j], rho[i] * rho[i] - rho[j] * rho[j])))
}

/// Weyl dimension of an irreducible module.
pub fn weyl_dim(label: &IrrLabel) -> Result<u64> {
    let w = &label.weight;
    if !w.is_dominant() {
        return Err(Error::NonDominant(w.coords.clone()));
    }
    let r = &w.coords;
    let d = match w.group {
        GroupType::GL(_) | GroupType::SL(_) => gl_dim(r),
        GroupType::Sp(_) => sp_dim(r),
        GroupType::SO(n) if n % 2 == 1 => so_odd_dim(r),
        GroupType::SO(_) => so_even_dim(r),
        GroupType::O(n) if n % 2 == 1 => so_odd_dim(r),
        GroupType::O(_) => {
            let base = so_even_dim(r);
            if r.last().is_some_and(|&x| x > 0) {
                2 * base
            } else {
                base
            }
        }
        GroupType::Gm => 1,
    };
    Ok(d as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumMode {
    /// Σ|rᵢ| = p
    AbsSum,
    /// Σrᵢ = p
    Sum,
}

/// All dominant weights with the given coordinate sum, in descending
/// lexicographic order.
pub fn enumerate_dominant(group: GroupType, p: u32, mode: SumMode) -> Result<Vec<Weight>> {
    group.validate()?;
    if mode == SumMode::Sum && !group.nonnegative() && group.rank() > 0 {
        return Err(Error::InvalidParams(format!("Σrᵢ = p has infinitely many dominant weights for {group}")));
    }
    let p = p as i64;
    let m = group.rank();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    walk(group, m, p, mode, &mut cur, &mut out);
    Ok(out)
}

fn walk(group: GroupType, m: usize, p: i64, mode: SumMode, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
    let used: i64 = cur.iter().map(|r| r.abs()).sum();
    if cur.len() == m {
        let w = Weight { group, coords: cur.clone() };
        let total = match mode {
            SumMode::AbsSum => w.abs_sum(),
            SumMode::Sum => w.sum(),
        };
        if total == p && w.is_dominant() {
            out.push(w);
        }
        return;
    }
    let budget = p - used;
    let hi = cur.last().map_or(budget, |&prev| prev.min(budget));
    for r in (-budget..=hi).rev() {
        cur.push(r);
        walk(group, m, p, mode, cur, out);
        cur.pop();
    }
}

/// A multiplicity function on irreducible modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MultiplicityFn {
    /// h(M) = dim M
    Regular,
    Table { name: String, values: BTreeMap<IrrLabel, u64>, default: u64 },
}

impl MultiplicityFn {
    pub fn eval(&self, label: &IrrLabel) -> Result<u64> {
        match self {
            MultiplicityFn::Regular => weyl_dim(label),
            MultiplicityFn::Table { values, default, .. } => Ok(values.get(label).copied().unwrap_or(*default)),
        }
    }
}

/// f(p) = Σ h(λ)·dim(λ) over the dominant weights occurring in degree p:
/// Σ|rᵢ| = p for GL, Σrᵢ = p for Sp and odd SO.
pub fn classical_hilbert(group: GroupType, h: &MultiplicityFn, p: u32) -> Result<u64> {
    let mode = match group {
        GroupType::GL(_) | GroupType::SL(_) | GroupType::Gm => SumMode::AbsSum,
        GroupType::Sp(_) => SumMode::Sum,
        GroupType::SO(n) if n % 2 == 1 => SumMode::Sum,
        g => return Err(Error::Unsupported(format!("degree bookkeeping for {g}"))),
    };
    let mut total = 0;
    for w in enumerate_dominant(group, p, mode)? {
        let label = IrrLabel { weight: w, sign: None };
        total += h.eval(&label)? * weyl_dim(&label)?;
    }
    Ok(total)
}

/// V(a) ⊗ V(b) for SL₂, listed by descending highest weight.
pub fn clebsch_gordan(a: u32, b: u32) -> Vec<u32> {
    (0..=a.min(b)).map(|k| a + b - 2 * k).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// S^i
    Sym,
    /// S^{(i,1)}
    Hook,
}

/// Decomposition of S^i(V) or S^{(i,1)}(V) for V the 3-dimensional SO₃
/// module V(2), as a list of SL₂ highest weights.
pub fn so3_plethysm(i: u32, shape: Shape) -> Result<Vec<u32>> {
    match shape {
        Shape::Sym => Ok((0..=i / 2).map(|k| 2 * i - 4 * k).collect()),
        Shape::Hook if i == 0 => Err(Error::InvalidParams("hook shape needs i ≥ 1".into())),
        Shape::Hook => Ok((0..i).map(|k| 2 * i - 2 * k).collect()),
    }
}

/// The situations of the registry: which group acts, and whether we look at
/// the representation itself or at its symplectic reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Situation {
    SL,
    GL,
    O,
    SO,
    Sp,
    GlSymplectic,
    OSymplectic,
    SpSymplectic,
}

impl Situation {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "sl" => Situation::SL,
            "gl" => Situation::GL,
            "o" => Situation::O,
            "so" => Situation::SO,
            "sp" => Situation::Sp,
            "glsym" | "gl-symplectic" => Situation::GlSymplectic,
            "osym" | "o-symplectic" => Situation::OSymplectic,
            "spsym" | "sp-symplectic" => Situation::SpSymplectic,
            _ => return Err(Error::InvalidParams(format!("unknown situation `{s}`"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Isotypic {
    /// Multiplicity of the module in k[W]/J.
    pub mult: u64,
    /// The unique degree in which it occurs.
    pub degree: u64,
}

/// Multiplicity of an irreducible G-module in the coordinate ring of the
/// nilcone. GL params are (n, n₁, n₂) with n₁ = n₂ = n; Sp params are (n, n′)
/// with n′ = n.
pub fn nilcone_isotypic_mult(sit: Situation, params: &[usize], weight: &Weight) -> Result<Isotypic> {
    if !weight.is_dominant() {
        return Err(Error::NonDominant(weight.coords.clone()));
    }
    match (sit, params) {
        (Situation::GL, &[n, n1, n2]) if n1 == n && n2 == n && weight.group == GroupType::GL(n) => {
            let r = &weight.coords;
            let pos: Vec<i64> = r.iter().copied().filter(|&x| x > 0).collect();
            let neg: Vec<i64> = r.iter().rev().copied().filter(|&x| x < 0).map(|x| -x).collect();
            let mult = polynomial_gl_dim(&neg, n1) * polynomial_gl_dim(&pos, n2);
            Ok(Isotypic { mult: mult as u64, degree: weight.abs_sum() as u64 })
        }
        (Situation::Sp, &[n, n_prime]) if n_prime == n && weight.group == GroupType::Sp(n) => {
            let mult = polynomial_gl_dim(&weight.coords, n_prime);
            Ok(Isotypic { mult: mult as u64, degree: weight.sum() as u64 })
        }
        _ => Err(Error::Unsupported(format!("isotypic components for {sit:?} {params:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dim(g: GroupType, r: &[i64]) -> u64 {
        weyl_dim(&IrrLabel::plain(g, r.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(dim(GroupType::GL(2), &[3, -2]), 6);
        assert_eq!(dim(GroupType::GL(3), &[1, 0, -1]), 8);
        assert_eq!(dim(GroupType::Sp(4), &[1, 1]), 5);
        assert_eq!(dim(GroupType::Sp(4), &[2, 0]), 10);
        assert_eq!(dim(GroupType::Sp(6), &[1, 0, 0]), 6);
        assert_eq!(dim(GroupType::SO(3), &[2]), 5);
        assert_eq!(dim(GroupType::SO(5), &[1, 0]), 5);
        assert_eq!(dim(GroupType::SO(5), &[0, 0]), 1);
        assert_eq!(dim(GroupType::SO(4), &[1, 1]), 3);
        assert_eq!(dim(GroupType::SO(6), &[1, 0, 0]), 6);
        assert_eq!(dim(GroupType::O(2), &[3]), 2);
        assert_eq!(weyl_dim(&IrrLabel::sl2(4)).unwrap(), 5);
        let minus = IrrLabel::new(Weight::new(GroupType::O(3), vec![1]).unwrap(), Some(Sign::Minus)).unwrap();
        assert_eq!(weyl_dim(&minus).unwrap(), 3);
        assert!(IrrLabel::plain(GroupType::O(3), vec![1]).is_err());
        assert!(matches!(
            weyl_dim(&IrrLabel::plain(GroupType::GL(2), vec![0, 1]).unwrap()),
            Err(Error::NonDominant(_))
        ));
    }

    #[test]
    fn enumeration() {
        let ws = enumerate_dominant(GroupType::GL(3), 2, SumMode::AbsSum).unwrap();
        let coords: Vec<Vec<i64>> = ws.into_iter().map(|w| w.coords).collect();
        assert_eq!(coords, vec![vec![2, 0, 0], vec![1, 1, 0], vec![1, 0, -1], vec![0, 0, -2], vec![0, -1, -1]]);
        let ws = enumerate_dominant(GroupType::GL(2), 1, SumMode::AbsSum).unwrap();
        assert_eq!(ws.len(), 2);
        let ws = enumerate_dominant(GroupType::Sp(4), 2, SumMode::Sum).unwrap();
        assert_eq!(ws.iter().map(|w| w.coords.clone()).collect::<Vec<_>>(), vec![vec![2, 0], vec![1, 1]]);
        assert!(enumerate_dominant(GroupType::GL(2), 1, SumMode::Sum).is_err());
    }

    #[test]
    fn classical() {
        let h = MultiplicityFn::Regular;
        assert_eq!(classical_hilbert(GroupType::GL(2), &h, 2).unwrap(), 29);
        assert_eq!(classical_hilbert(GroupType::GL(3), &h, 1).unwrap(), 18);
        assert_eq!(classical_hilbert(GroupType::Sp(4), &h, 2).unwrap(), 125);
        assert_eq!(classical_hilbert(GroupType::GL(3), &h, 0).unwrap(), 1);
    }

    #[test]
    fn sl2_rules() {
        assert_eq!(clebsch_gordan(2, 2), vec![4, 2, 0]);
        assert_eq!(clebsch_gordan(5, 0), vec![5]);
        assert_eq!(so3_plethysm(2, Shape::Sym).unwrap(), vec![4, 0]);
        assert_eq!(so3_plethysm(2, Shape::Hook).unwrap(), vec![4, 2]);
        assert_eq!(so3_plethysm(3, Shape::Sym).unwrap(), vec![6, 2]);
        assert!(so3_plethysm(0, Shape::Hook).is_err());
        // S^i(V) ⊗ V = S^{i+1}(V) ⊕ S^{(i,1)}(V)
        for i in 1..6u32 {
            let mut lhs: Vec<u32> = so3_plethysm(i, Shape::Sym)
                .unwrap()
                .into_iter()
                .flat_map(|a| clebsch_gordan(a, 2))
                .collect();
            let mut rhs = so3_plethysm(i + 1, Shape::Sym).unwrap();
            rhs.extend(so3_plethysm(i, Shape::Hook).unwrap());
            lhs.sort();
            rhs.sort();
            assert_eq!(lhs, rhs, "i = {i}");
        }
    }

    #[test]
    fn isotypic() {
        let w = Weight::new(GroupType::GL(2), vec![3, -2]).unwrap();
        let iso = nilcone_isotypic_mult(Situation::GL, &[2, 2, 2], &w).unwrap();
        assert_eq!(iso, Isotypic { mult: 12, degree: 5 });
        let w = Weight::new(GroupType::GL(3), vec![2, 1, 0]).unwrap();
        let iso = nilcone_isotypic_mult(Situation::GL, &[3, 3, 3], &w).unwrap();
        assert_eq!(iso.mult, 8);
        let w = Weight::new(GroupType::Sp(4), vec![1, 1]).unwrap();
        assert_eq!(nilcone_isotypic_mult(Situation::Sp, &[4, 4], &w).unwrap().mult, 6);
        assert!(nilcone_isotypic_mult(Situation::O, &[2, 2], &w).is_err());
    }
}
