//! Gröbner degenerations along one-parameter subgroups.
//!
//! A weight vector w on the variables defines the family
//! g̃ = Σ c·t^{w(m) − w_min(g)}·m for each basis element g = Σ c·m; its fiber at
//! t = 1 is the source ideal and its limit at t = 0 is generated by the
//! initial forms, provided the basis is a Gröbner basis for an order that
//! refines w.

use num_traits::Zero;

use crate::catalog::{self, CaseSpec, FixedPoint};
use crate::error::{Error, Result};
use crate::groebner::{certify_gb, ideal_equal, Ideal};
use crate::poly::{MonomialOrder, QPoly, RingRef};
use crate::scalar::Rational;
use crate::QIdeal;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    weights: Vec<i64>,
}

impl WeightVector {
    pub fn new(ring: &RingRef, weights: Vec<i64>) -> Result<Self> {
        if weights.len() != ring.nvars() {
            return Err(Error::LengthMismatch { expected: ring.nvars(), got: weights.len() });
        }
        Ok(WeightVector { weights })
    }

    /// One weight per matrix column: every variable whose name starts with
    /// `x` gets `triple[0]`, `y` gets `triple[1]`, `z` gets `triple[2]`.
    pub fn from_triple(ring: &RingRef, triple: [i64; 3]) -> Result<Self> {
        let weights = ring
            .names()
            .iter()
            .map(|n| match n.chars().next() {
                Some('x') => Ok(triple[0]),
                Some('y') => Ok(triple[1]),
                Some('z') => Ok(triple[2]),
                _ => Err(Error::InvalidParams(format!("variable `{n}` is not in an x, y or z column"))),
            })
            .collect::<Result<_>>()?;
        Ok(WeightVector { weights })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    fn shifted(&self, by: i64) -> Vec<i64> {
        self.weights.iter().map(|w| w - by).collect()
    }
}

/// The basis actually used for a limit, and whether the input already was a
/// Gröbner basis for the weight-compatible order.
#[derive(Clone, Debug)]
pub struct CompatibleBasis {
    pub basis: Vec<QPoly>,
    pub order: MonomialOrder,
    pub input_certified: bool,
}

/// Weight order used for the limit: smaller w-weight leads, grevlex breaks
/// ties. Weights are shifted to be non-positive when the input is
/// homogeneous, which changes no initial form.
pub fn compatible_order(basis: &[QPoly], w: &WeightVector) -> Result<MonomialOrder> {
    let max = w.weights.iter().copied().max().unwrap_or(0);
    if max <= 0 {
        return Ok(MonomialOrder::Weighted(w.weights.clone()));
    }
    if basis.iter().all(|g| g.is_homogeneous()) {
        return Ok(MonomialOrder::Weighted(w.shifted(max)));
    }
    Err(Error::Unsupported("positive weights on an inhomogeneous ideal give no well-order".into()))
}

pub fn compatible_basis(basis: &[QPoly], w: &WeightVector) -> Result<CompatibleBasis> {
    let ring = basis.first().ok_or(Error::InvalidParams("empty basis".into()))?.ring().clone();
    if w.weights.len() != ring.nvars() {
        return Err(Error::LengthMismatch { expected: ring.nvars(), got: w.weights.len() });
    }
    let order = compatible_order(basis, w)?;
    if certify_gb(basis, &order) {
        return Ok(CompatibleBasis { basis: basis.to_vec(), order, input_certified: true });
    }
    let gb = Ideal::new(&ring, basis.to_vec())?.groebner_basis(&order, None)?;
    Ok(CompatibleBasis { basis: gb, order, input_certified: false })
}

/// Limit at t = 0 of the family attached to `basis` and `w`.
pub fn flat_limit(basis: &[QPoly], w: &WeightVector) -> Result<QIdeal> {
    let cb = compatible_basis(basis, w)?;
    let ring = cb.basis[0].ring().clone();
    let forms = cb.basis.iter().map(|g| g.initial_form(&w.weights)).collect::<Result<Vec<_>>>()?;
    Ideal::new(&ring, forms)
}

/// The member of the family at a nonzero t, built from `basis` as given.
pub fn family_member(basis: &[QPoly], w: &WeightVector, t: &Rational) -> Result<QIdeal> {
    if t.is_zero() {
        return Err(Error::InvalidParams("t = 0 is the flat limit".into()));
    }
    let ring = basis.first().ok_or(Error::InvalidParams("empty basis".into()))?.ring().clone();
    let gens = basis.iter().map(|g| family_element(g, w, t)).collect::<Result<Vec<_>>>()?;
    Ideal::new(&ring, gens)
}

/// g̃ evaluated at t.
pub fn family_element(g: &QPoly, w: &WeightVector, t: &Rational) -> Result<QPoly> {
    if w.weights.len() != g.ring().nvars() {
        return Err(Error::LengthMismatch { expected: g.ring().nvars(), got: w.weights.len() });
    }
    let Some(min) = g.terms().iter().map(|(m, _)| m.weight(&w.weights)).min() else {
        return Ok(g.clone());
    };
    let terms = g
        .terms()
        .iter()
        .map(|(m, c)| {
            let e = (m.weight(&w.weights) - min) as i32;
            (m.clone(), c * num_traits::pow::Pow::pow(t, e))
        })
        .collect();
    Ok(QPoly::from_terms(g.ring(), terms))
}

/// A catalogued degeneration: recorded basis of the generic fiber, weights,
/// and the fixed point it should reach.
#[derive(Clone, Debug)]
pub struct DegenerationCase {
    pub case: String,
    pub triple: [i64; 3],
    pub source: Vec<QPoly>,
    pub weights: WeightVector,
    pub target: QIdeal,
    pub target_name: FixedPoint,
}

/// The degenerations on record: (case, weight triple, reached fixed point).
pub const KNOWN: [(&str, [i64; 3], FixedPoint); 3] = [
    ("o3", [-3, -2, -1], FixedPoint::I2),
    ("so3", [-3, -1, -1], FixedPoint::I1),
    ("so3", [-3, -2, -2], FixedPoint::I2),
];

pub fn degeneration_case(spec: &CaseSpec, triple: [i64; 3]) -> Result<DegenerationCase> {
    let target_name = KNOWN
        .iter()
        .find(|(c, t, _)| *c == spec.base_name() && *t == triple)
        .map(|&(_, _, f)| f)
        .ok_or_else(|| Error::Unsupported(format!("no degeneration of `{}` on record for {triple:?}", spec.name)))?;
    Ok(DegenerationCase {
        case: spec.base_name().to_string(),
        triple,
        source: catalog::recorded_basis(spec)?,
        weights: WeightVector::from_triple(&spec.ring, triple)?,
        target: catalog::fixed_point_ideal(spec, Some(target_name))?,
        target_name,
    })
}

#[derive(Clone, Debug)]
pub struct DegenerationOutcome {
    pub limit: QIdeal,
    pub limit_basis: Vec<QPoly>,
    pub source_certified_grevlex: bool,
    pub source_certified_weighted: bool,
    pub reaches_target: bool,
}

pub fn run(dc: &DegenerationCase) -> Result<DegenerationOutcome> {
    let cb = compatible_basis(&dc.source, &dc.weights)?;
    let limit = flat_limit(&cb.basis, &dc.weights)?;
    let limit_basis = limit.groebner_basis(&MonomialOrder::GrevLex, None)?;
    Ok(DegenerationOutcome {
        reaches_target: ideal_equal(&limit, &dc.target)?,
        limit,
        limit_basis,
        source_certified_grevlex: certify_gb(&dc.source, &MonomialOrder::GrevLex),
        source_certified_weighted: cb.input_certified,
    })
}
