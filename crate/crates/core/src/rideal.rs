//! Formal products of ideals with rational exponents.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groebner::GroebnerEngine;
use crate::ideal::Ideal;
use crate::poly::{check_ring, PolyRing};
use crate::rational::{format_rat, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RFactor {
    pub ideal: Ideal,
    pub exponent: Rat,
}

/// `∏ a_k^{c_k}`; the empty product is the trivial R-ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RIdeal {
    ring: Arc<PolyRing>,
    factors: Vec<RFactor>,
}

impl RIdeal {
    pub fn trivial(ring: &Arc<PolyRing>) -> RIdeal {
        RIdeal {
            ring: ring.clone(),
            factors: Vec::new(),
        }
    }

    pub fn new(ring: &Arc<PolyRing>, factors: Vec<RFactor>) -> Result<RIdeal> {
        for f in &factors {
            check_ring(ring, f.ideal.ring())?;
            if f.ideal.is_zero() {
                return Err(Error::Precondition(
                    "R-ideal factor is the zero ideal".into(),
                ));
            }
        }
        Ok(RIdeal {
            ring: ring.clone(),
            factors,
        })
    }

    pub fn single(ideal: Ideal, exponent: Rat) -> Result<RIdeal> {
        let ring = ideal.ring().clone();
        RIdeal::new(&ring, vec![RFactor { ideal, exponent }])
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn factors(&self) -> &[RFactor] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.iter().all(|f| f.exponent.is_zero())
    }

    /// All exponents are nonnegative.
    pub fn is_effective(&self) -> bool {
        self.factors.iter().all(|f| !f.exponent.is_negative())
    }

    /// Appends `ideal^exponent`.
    pub fn with_factor(&self, ideal: Ideal, exponent: Rat) -> Result<RIdeal> {
        let mut factors = self.factors.clone();
        factors.push(RFactor { ideal, exponent });
        RIdeal::new(&self.ring, factors)
    }

    pub fn times(&self, other: &RIdeal) -> Result<RIdeal> {
        check_ring(&self.ring, &other.ring)?;
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        RIdeal::new(&self.ring, factors)
    }

    /// `A^λ`: every exponent multiplied by `lambda`.
    pub fn scaled(&self, lambda: &Rat) -> RIdeal {
        RIdeal {
            ring: self.ring.clone(),
            factors: self
                .factors
                .iter()
                .map(|f| RFactor {
                    ideal: f.ideal.clone(),
                    exponent: &f.exponent * lambda,
                })
                .collect(),
        }
    }

    /// Checks that each factor is nonzero on `X`: some generator lies outside `I_X`.
    pub fn validate_on(&self, ix: &Ideal, engine: &GroebnerEngine) -> Result<()> {
        check_ring(&self.ring, ix.ring())?;
        let gb = engine.basis(ix, crate::monomial::MonomialOrder::DegRevLex)?;
        for (k, f) in self.factors.iter().enumerate() {
            let mut nonzero = false;
            for g in f.ideal.generators() {
                if !gb.contains(g)? {
                    nonzero = true;
                    break;
                }
            }
            if !nonzero {
                return Err(Error::Precondition(format!(
                    "R-ideal factor {k} {} vanishes on X",
                    f.ideal
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for RIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            write!(f, "{}", factor.ideal)?;
            if !factor.exponent.is_one() {
                write!(f, "^({})", format_rat(&factor.exponent))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{poly_from, Poly};
    use crate::rational::{int, rat};

    #[test]
    fn display_and_effectivity() {
        let r = PolyRing::new(["x", "y"]).unwrap();
        let m = Ideal::of_variables(&r, [0, 1]).unwrap();
        let a = RIdeal::single(m.clone(), rat(3, 2))
            .unwrap()
            .with_factor(
                Ideal::new(
                    &r,
                    [
                        poly_from(&r, &[(1, &[2, 0])]),
                        poly_from(&r, &[(1, &[0, 3])]),
                    ],
                )
                .unwrap(),
                int(-1),
            )
            .unwrap();
        assert_eq!(a.to_string(), "(x, y)^(3/2) * (x^2, y^3)^(-1)");
        assert!(!a.is_effective());
        assert!(RIdeal::single(m, int(1)).unwrap().is_effective());
        assert_eq!(RIdeal::trivial(&r).to_string(), "1");
        assert!(RIdeal::single(Ideal::zero(&r), int(1)).is_err());
    }

    #[test]
    fn factors_must_be_nonzero_on_x() {
        let r = PolyRing::new(["x", "y"]).unwrap();
        let ix = Ideal::principal(Poly::var(&r, 0).unwrap());
        let bad = RIdeal::single(ix.clone(), int(1)).unwrap();
        assert!(bad.validate_on(&ix, &GroebnerEngine::default()).is_err());
        let good = RIdeal::single(Ideal::of_variables(&r, [0, 1]).unwrap(), int(1)).unwrap();
        assert!(good.validate_on(&ix, &GroebnerEngine::default()).is_ok());
    }
}
