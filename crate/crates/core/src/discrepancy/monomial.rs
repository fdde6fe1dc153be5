//! Toric valuations on the ambient space and the inversion-of-adjunction harness.

use num_traits::{Signed, Zero};

use super::{jmld_over_charts, Extended, JmldReport, Variety};
use crate::chart::DivisorChart;
use crate::error::{Error, Result};
use crate::groebner::GroebnerEngine;
use crate::ideal::Ideal;
use crate::poly::{check_ring, Poly};
use crate::rational::{int, Rat};
use crate::rideal::RIdeal;

/// The monomial valuation with positive integer weights on `A^N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialValuation {
    weights: Vec<u32>,
}

impl MonomialValuation {
    pub fn new(weights: Vec<u32>) -> Result<MonomialValuation> {
        if weights.is_empty() || weights.contains(&0) {
            return Err(Error::Precondition(
                "monomial weights must be positive".into(),
            ));
        }
        Ok(MonomialValuation { weights })
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight_sum(&self) -> u64 {
        self.weights.iter().map(|&w| u64::from(w)).sum()
    }

    /// Least weighted degree of a term; `None` for zero.
    pub fn order(&self, p: &Poly) -> Option<u64> {
        p.terms()
            .map(|(e, _)| {
                e.iter()
                    .zip(&self.weights)
                    .map(|(&k, &w)| u64::from(k) * u64::from(w))
                    .sum()
            })
            .min()
    }

    pub fn ideal_order(&self, ideal: &Ideal) -> Option<u64> {
        ideal
            .generators()
            .iter()
            .filter_map(|g| self.order(g))
            .min()
    }
}

/// `Σ w_i - Σ c_k ord_w(a_k)`.
pub fn monomial_log_discrepancy(w: &MonomialValuation, a: &RIdeal) -> Result<Rat> {
    if w.weights().len() != a.ring().num_vars() {
        return Err(Error::LengthMismatch {
            expected: a.ring().num_vars(),
            got: w.weights().len(),
        });
    }
    let mut total = int(w.weight_sum() as i64);
    for (k, f) in a.factors().iter().enumerate() {
        let ord = w
            .ideal_order(&f.ideal)
            .ok_or_else(|| Error::RIdealVanishes {
                factor: k,
                chart: format!("weights {:?}", w.weights()),
            })?;
        total -= &f.exponent * int(ord as i64);
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvAdjunctionReport {
    pub e: usize,
    pub jmld: JmldReport,
    pub mld: Extended,
    pub mld_raw: Rat,
    /// Weights whose valuation centers at the origin inside `V(T)`.
    pub mld_witnesses: Vec<Vec<u32>>,
    pub consistent: bool,
}

/// Compares `jmld_T(X, A|_X)` from charts with `mld_T(M, A · I_X^e)` from
/// monomial valuations. Finite witness lists bound both sides from above, so
/// agreement is a necessary condition only.
pub fn inv_adjunction_check(
    x: &Variety,
    charts: &[DivisorChart],
    weights: &[MonomialValuation],
    a_ambient: &RIdeal,
    t: &Ideal,
    attested: bool,
    engine: &GroebnerEngine,
) -> Result<InvAdjunctionReport> {
    if x.dim() < 2 {
        return Err(Error::DimensionOne);
    }
    if !a_ambient.is_effective() {
        return Err(Error::Precondition(
            "the ambient R-ideal must be effective".into(),
        ));
    }
    let ring = x.ideal().ring();
    check_ring(ring, t.ring())?;
    let e = x.codim();
    let jmld = jmld_over_charts(charts, x, a_ambient, t, attested, engine)?;

    let mld_pair = if e > 0 {
        a_ambient.with_factor(x.ideal().clone(), int(e as i64))?
    } else {
        a_ambient.clone()
    };
    // Every positive-weight valuation is centered at the origin.
    let origin = vec![Rat::zero(); ring.num_vars()];
    let mut origin_in_t = true;
    for g in t.generators() {
        if !g.evaluate(&origin)?.is_zero() {
            origin_in_t = false;
        }
    }
    let mut mld_raw: Option<Rat> = None;
    let mut mld_witnesses = Vec::new();
    if origin_in_t {
        for w in weights {
            let value = monomial_log_discrepancy(w, &mld_pair)?;
            mld_witnesses.push(w.weights().to_vec());
            if mld_raw.as_ref().is_none_or(|m| value < *m) {
                mld_raw = Some(value);
            }
        }
    }
    let mld_raw = mld_raw.ok_or(Error::NoWitnesses)?;
    let mld = if attested && mld_raw.is_negative() && ring.num_vars() >= 2 {
        Extended::NegInfinity
    } else {
        Extended::Finite(mld_raw.clone())
    };
    let consistent = jmld.value == mld;
    Ok(InvAdjunctionReport {
        e,
        jmld,
        mld,
        mld_raw,
        mld_witnesses,
        consistent,
    })
}
