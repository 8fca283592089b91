//! Exact polynomial algebra over the rationals together with a verification
//! harness for equivariant ideals attached to classical group actions:
//! Gröbner bases, Hilbert functions, weight degenerations, tangent-space rank
//! bounds and nilpotent-orbit combinatorics.

pub mod catalog;
pub mod cli;
pub mod degeneration;
pub mod error;
pub mod groebner;
pub mod linalg;
pub mod orbits;
pub mod poly;
pub mod reptheory;
pub mod scalar;
pub mod tangent;

pub use error::{Error, Result};
pub use groebner::{Ideal, MonomialIdeal};
pub use poly::{parse_poly, Monomial, MonomialOrder, Polynomial, QPoly, Ring, RingRef};
pub use scalar::{Field, Rational};

pub type QIdeal = Ideal<Rational>;
