//! Truncated power series in `Q[t]/(t^{m+1})`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{format_rat, Rat};

/// Order of vanishing of a truncated quantity.
///
/// `Infinity` carries the truncation bound `m`: the value is only known to be
/// `>= m + 1` unless `provable` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesOrder {
    Finite(usize),
    Infinity { bound: usize, provable: bool },
}

impl SeriesOrder {
    pub fn finite(&self) -> Option<usize> {
        match self {
            SeriesOrder::Finite(k) => Some(*k),
            SeriesOrder::Infinity { .. } => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, SeriesOrder::Infinity { .. })
    }

    /// Minimum of two orders; two infinities stay provable only if both are.
    pub fn min(self, other: SeriesOrder) -> SeriesOrder {
        match (self, other) {
            (SeriesOrder::Finite(a), SeriesOrder::Finite(b)) => SeriesOrder::Finite(a.min(b)),
            (SeriesOrder::Finite(a), _) | (_, SeriesOrder::Finite(a)) => SeriesOrder::Finite(a),
            (
                SeriesOrder::Infinity {
                    bound: a,
                    provable: p,
                },
                SeriesOrder::Infinity {
                    bound: b,
                    provable: q,
                },
            ) => SeriesOrder::Infinity {
                bound: a.min(b),
                provable: p && q,
            },
        }
    }
}

impl PartialOrd for SeriesOrder {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (SeriesOrder::Finite(a), SeriesOrder::Finite(b)) => Some(a.cmp(b)),
            (SeriesOrder::Finite(_), SeriesOrder::Infinity { .. }) => Some(Ordering::Less),
            (SeriesOrder::Infinity { .. }, SeriesOrder::Finite(_)) => Some(Ordering::Greater),
            (SeriesOrder::Infinity { .. }, SeriesOrder::Infinity { .. }) => None,
        }
    }
}

impl fmt::Display for SeriesOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesOrder::Finite(k) => write!(f, "{k}"),
            SeriesOrder::Infinity { provable: true, .. } => write!(f, "inf"),
            SeriesOrder::Infinity {
                bound,
                provable: false,
            } => write!(f, "inf(m={bound})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
}

/// An element of `Q[t]/(t^{m+1})`, stored as exactly `m + 1` coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<Rat>,
}

impl TruncSeries {
    pub fn new(m: usize, coeffs: Vec<Rat>) -> Result<TruncSeries> {
        if coeffs.len() != m + 1 {
            return Err(Error::LengthMismatch {
                expected: m + 1,
                got: coeffs.len(),
            });
        }
        Ok(TruncSeries { coeffs })
    }

    /// Takes the first `m + 1` coefficients, padding with zeros.
    pub fn from_coeffs_truncating(m: usize, coeffs: &[Rat]) -> TruncSeries {
        let mut c: Vec<Rat> = coeffs.iter().take(m + 1).cloned().collect();
        c.resize(m + 1, Rat::zero());
        TruncSeries { coeffs: c }
    }

    pub fn zero(m: usize) -> TruncSeries {
        TruncSeries {
            coeffs: vec![Rat::zero(); m + 1],
        }
    }

    pub fn constant(m: usize, value: Rat) -> TruncSeries {
        let mut s = TruncSeries::zero(m);
        s.coeffs[0] = value;
        s
    }

    pub fn one(m: usize) -> TruncSeries {
        TruncSeries::constant(m, Rat::one())
    }

    /// `coeff * t^k`, zero when `k > m`.
    pub fn monomial(m: usize, k: usize, coeff: Rat) -> TruncSeries {
        let mut s = TruncSeries::zero(m);
        if k <= m {
            s.coeffs[k] = coeff;
        }
        s
    }

    pub fn trunc_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rat {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Least index with a nonzero coefficient, `None` if `≡ 0 mod t^{m+1}`.
    pub fn t_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn order(&self) -> SeriesOrder {
        match self.t_order() {
            Some(k) => SeriesOrder::Finite(k),
            None => SeriesOrder::Infinity {
                bound: self.trunc_order(),
                provable: false,
            },
        }
    }

    fn check(&self, other: &TruncSeries) -> Result<()> {
        if self.coeffs.len() == other.coeffs.len() {
            Ok(())
        } else {
            Err(Error::OrderMismatch(
                self.trunc_order(),
                other.trunc_order(),
            ))
        }
    }

    pub fn add(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check(other)?;
        Ok(TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check(other)?;
        Ok(TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn mul(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check(other)?;
        let n = self.coeffs.len();
        let mut out = vec![Rat::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(TruncSeries { coeffs: out })
    }

    pub fn neg(&self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, factor: &Rat) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn invert(&self) -> Result<TruncSeries> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotAUnit);
        }
        let n = self.coeffs.len();
        let inv0 = Rat::one() / a0;
        let mut b = vec![Rat::zero(); n];
        b[0] = inv0.clone();
        for k in 1..n {
            let mut acc = Rat::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &b[k - i];
                }
            }
            b[k] = -(acc * &inv0);
        }
        Ok(TruncSeries { coeffs: b })
    }

    /// `self / t^k` for `k <= t_order`, padded with zeros at the top.
    pub fn shift_down(&self, k: usize) -> TruncSeries {
        let n = self.coeffs.len();
        let mut coeffs: Vec<Rat> = self.coeffs[k.min(n)..].to_vec();
        coeffs.resize(n, Rat::zero());
        TruncSeries { coeffs }
    }

    /// Reinterprets the series at a smaller truncation order.
    pub fn truncate(&self, m: usize) -> TruncSeries {
        TruncSeries::from_coeffs_truncating(m, &self.coeffs)
    }

    pub fn pow(&self, exponent: u32) -> TruncSeries {
        let mut out = TruncSeries::one(self.trunc_order());
        for _ in 0..exponent {
            out = out.mul(self).expect("same truncation order");
        }
        out
    }
}

pub fn series_arith(a: &TruncSeries, b: &TruncSeries, op: SeriesOp) -> Result<TruncSeries> {
    match op {
        SeriesOp::Add => a.add(b),
        SeriesOp::Sub => a.sub(b),
        SeriesOp::Mul => a.mul(b),
    }
}

pub fn series_invert(a: &TruncSeries) -> Result<TruncSeries> {
    a.invert()
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &Rat::zero();
            let abs = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{}", format_rat(&abs))?;
                if k > 0 {
                    write!(f, "*")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.coeffs.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn s(m: usize, c: &[i64]) -> TruncSeries {
        TruncSeries::from_coeffs_truncating(m, &c.iter().map(|&v| int(v)).collect::<Vec<_>>())
    }

    #[test]
    fn products_truncate() {
        let t = s(3, &[0, 1]);
        assert_eq!(
            series_arith(&t, &t, SeriesOp::Mul).unwrap(),
            s(3, &[0, 0, 1])
        );
        let t2 = s(3, &[0, 0, 1]);
        let z = series_arith(&t2, &t2, SeriesOp::Mul).unwrap();
        assert_eq!(
            z.order(),
            SeriesOrder::Infinity {
                bound: 3,
                provable: false
            }
        );
        let p = series_arith(&s(2, &[1, 1]), &s(2, &[1, -1]), SeriesOp::Mul).unwrap();
        assert_eq!(p, s(2, &[1, 0, -1]));
    }

    #[test]
    fn mismatched_orders_are_rejected() {
        assert_eq!(s(2, &[1]).add(&s(3, &[1])), Err(Error::OrderMismatch(2, 3)));
    }

    #[test]
    fn inverses() {
        assert_eq!(series_invert(&s(2, &[1, -1])).unwrap(), s(2, &[1, 1, 1]));
        assert_eq!(
            series_invert(&s(2, &[2])).unwrap(),
            TruncSeries::constant(2, crate::rational::rat(1, 2))
        );
        assert_eq!(series_invert(&s(2, &[0, 1])), Err(Error::NotAUnit));
    }

    #[test]
    fn display() {
        assert_eq!(s(3, &[0, 0, 0, 1]).to_string(), "t^3 + O(t^4)");
        assert_eq!(s(2, &[1, -2]).to_string(), "1 - 2*t + O(t^3)");
        assert_eq!(s(1, &[]).to_string(), "0 + O(t^2)");
    }

    #[test]
    fn order_minimum() {
        let inf = SeriesOrder::Infinity {
            bound: 4,
            provable: true,
        };
        assert_eq!(inf.min(SeriesOrder::Finite(2)), SeriesOrder::Finite(2));
        assert_eq!(
            inf.min(SeriesOrder::Infinity {
                bound: 4,
                provable: false
            }),
            SeriesOrder::Infinity {
                bound: 4,
                provable: false
            }
        );
    }
}
