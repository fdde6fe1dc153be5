//! Jacobian discrepancies, jet schemes and multiplier ideals over exact rationals.

pub mod chart;
pub mod discrepancy;
pub mod error;
pub mod fixtures;
pub mod groebner;
pub mod ideal;
pub mod jets;
pub mod linalg;
pub mod matrix;
pub mod monomial;
pub mod multiplier;
pub mod poly;
pub mod rational;
pub mod rideal;
pub mod sampling;
pub mod series;
pub mod session;
pub mod snf;

pub use error::{Error, ErrorKind, Result};
pub use ideal::Ideal;
pub use poly::{Poly, PolyRing};
pub use rational::Rat;
