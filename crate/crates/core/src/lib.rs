//! Commutative algebra over prime fields and the rationals, aimed at
//! generalized minimum distance functions of graded ideals and the
//! Reed–Muller-type codes they come from.

pub mod error;
pub mod field;
pub mod gmd;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod monomial_ideal;
pub mod parse;
pub mod points;
pub mod poly;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use monomial::{Monomial, MonomialOrder, OrderKind};
pub use poly::{PolyRing, Polynomial};
