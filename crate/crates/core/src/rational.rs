//! Exact rationals. Everything numeric in the crate is a [`Rat`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

pub type Rat = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rat {
    Rat::from_integer(BigInt::from(value))
}

/// Floor as a machine integer. Panics only if the value does not fit an `i64`,
/// which would mean orders far beyond anything representable on a chart.
pub fn floor_i64(value: &Rat) -> i64 {
    let floor = value.numer().div_floor(value.denom());
    floor.to_i64().expect("floor does not fit in i64")
}

pub fn is_integer(value: &Rat) -> bool {
    value.denom() == &BigInt::from(1)
}

/// Parses `a` or `a/b` with optional leading sign.
pub fn parse_rat(text: &str) -> Option<Rat> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => text.parse::<BigInt>().ok().map(Rat::from_integer),
    }
}

/// Reduced-fraction text, `"p/q"` or `"p"`.
pub fn format_rat(value: &Rat) -> String {
    if is_integer(value) {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}
