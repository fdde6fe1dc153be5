//! Membership in Mather and Jacobian multiplier ideals from chart data.
//!
//! `g` is a member iff `ord_E(g) + km_E - ⌊Σ c_k ord_E(a_k)⌋ >= 0` on every
//! supplied divisor. The floor is taken on the aggregate coefficient.

use num_traits::Signed;

use crate::chart::DivisorChart;
use crate::discrepancy::{
    ideal_order_along_chart, mather_discrepancy, poly_order_along_chart, Variety,
};
use crate::error::{Error, Result};
use crate::groebner::GroebnerEngine;
use crate::ideal::Ideal;
use crate::poly::{check_ring, Poly};
use crate::rational::{floor_i64, int, Rat};
use crate::rideal::RIdeal;

/// Charts of a resolution of `X`, with an optional completeness attestation.
#[derive(Debug, Clone)]
pub struct ResolutionData {
    pub variety: Variety,
    pub charts: Vec<DivisorChart>,
    pub attestation: Option<String>,
}

impl ResolutionData {
    pub fn new(
        variety: Variety,
        charts: Vec<DivisorChart>,
        attestation: Option<String>,
    ) -> Result<ResolutionData> {
        for c in &charts {
            check_ring(c.ambient(), variety.ideal().ring())?;
        }
        Ok(ResolutionData {
            variety,
            charts,
            attestation,
        })
    }
}

/// Per-divisor inequality `ord_g + km - floor >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartInequality {
    pub label: String,
    /// `None` when `g` vanishes identically along the chart.
    pub ord_g: Option<i64>,
    pub km: i64,
    /// `⌊Σ c_k ord_E(a_k)⌋`.
    pub floor: i64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub member: bool,
    pub rows: Vec<ChartInequality>,
    pub first_violation: Option<String>,
    pub attestation: Option<String>,
}

impl MembershipCertificate {
    pub fn sufficiency(&self) -> &'static str {
        if self.attestation.is_some() {
            "exact"
        } else {
            "necessary conditions only"
        }
    }
}

fn rideal_order(a: &RIdeal, chart: &DivisorChart) -> Result<Rat> {
    let mut total = int(0);
    for (k, f) in a.factors().iter().enumerate() {
        let ord =
            ideal_order_along_chart(&f.ideal, chart)?.ok_or_else(|| Error::RIdealVanishes {
                factor: k,
                chart: chart.label().to_string(),
            })?;
        total += &f.exponent * int(i64::from(ord));
    }
    Ok(total)
}

fn certify<F>(a: &RIdeal, r: &ResolutionData, mut ord_of: F) -> Result<MembershipCertificate>
where
    F: FnMut(&DivisorChart) -> Result<Option<i64>>,
{
    check_ring(a.ring(), r.variety.ideal().ring())?;
    let mut rows = Vec::with_capacity(r.charts.len());
    let mut first_violation = None;
    for chart in &r.charts {
        let km = mather_discrepancy(chart, r.variety.dim())?;
        let floor = floor_i64(&rideal_order(a, chart)?);
        let ord_g = ord_of(chart)?;
        let holds = ord_g.is_none_or(|o| o + km - floor >= 0);
        if !holds && first_violation.is_none() {
            first_violation = Some(chart.label().to_string());
        }
        rows.push(ChartInequality {
            label: chart.label().to_string(),
            ord_g,
            km,
            floor,
            holds,
        });
    }
    Ok(MembershipCertificate {
        member: first_violation.is_none(),
        rows,
        first_violation,
        attestation: r.attestation.clone(),
    })
}

pub fn mather_multiplier_member(
    g: &Poly,
    a: &RIdeal,
    r: &ResolutionData,
) -> Result<MembershipCertificate> {
    certify(a, r, |chart| {
        Ok(poly_order_along_chart(g, chart)?.map(i64::from))
    })
}

/// Membership in `MI^J(A) = MIm(A · j_X)`.
pub fn jacobian_multiplier_member(
    g: &Poly,
    a: &RIdeal,
    r: &ResolutionData,
) -> Result<MembershipCertificate> {
    let twisted = a.with_factor(r.variety.jacobian().clone(), int(1))?;
    mather_multiplier_member(g, &twisted, r)
}

/// Membership of `num / den`, using `ord_E(num) - ord_E(den)`.
pub fn fractional_membership(
    num: &Poly,
    den: &Poly,
    a: &RIdeal,
    r: &ResolutionData,
) -> Result<MembershipCertificate> {
    certify(a, r, |chart| {
        let d = poly_order_along_chart(den, chart)?.ok_or_else(|| {
            Error::DivisionByZero(format!(
                "denominator vanishes identically along {}",
                chart.label()
            ))
        })?;
        Ok(poly_order_along_chart(num, chart)?.map(|n| i64::from(n) - i64::from(d)))
    })
}

/// One sample of the colon check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColonRow {
    pub g: String,
    /// `g · h ∈ MIm(a)` for every generator `h` of `b`.
    pub lhs: bool,
    /// `g ∈ MIm(a · b^{-1})`.
    pub rhs: bool,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColonReport {
    pub rows: Vec<ColonRow>,
    pub pass: bool,
}

/// Compares `(MIm(a) : b)` with `MIm(a · b^{-1})` on sampled polynomials.
pub fn colon_lemma_check(
    a: &Ideal,
    b: &Ideal,
    r: &ResolutionData,
    samples: &[Poly],
) -> Result<ColonReport> {
    let ring = r.variety.ideal().ring();
    let a_only = RIdeal::single(a.clone(), int(1))?;
    let quotient = a_only.with_factor(b.clone(), int(-1))?;
    let mut rows = Vec::with_capacity(samples.len());
    for g in samples {
        check_ring(ring, g.ring())?;
        let mut lhs = true;
        for h in b.generators() {
            if !mather_multiplier_member(&(g * h), &a_only, r)?.member {
                lhs = false;
                break;
            }
        }
        let rhs = mather_multiplier_member(g, &quotient, r)?.member;
        rows.push(ColonRow {
            g: g.to_string(),
            lhs,
            rhs,
            agree: lhs == rhs,
        });
    }
    let pass = rows.iter().all(|row| row.agree);
    Ok(ColonReport { rows, pass })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotonicityRow {
    pub g: String,
    pub member_smaller: bool,
    pub member_larger: bool,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotonicityReport {
    pub rows: Vec<MonotonicityRow>,
    /// Per-chart aggregate orders of `B` dominate those of `A`.
    pub orders_dominate: bool,
    pub pass: bool,
}

/// For `B ⊆ A` factorwise with exponents `d_k >= c_k >= 0`, checks that
/// `g ∈ MIm(B)` implies `g ∈ MIm(A)` on the samples.
pub fn monotonicity_check(
    larger: &RIdeal,
    smaller: &RIdeal,
    r: &ResolutionData,
    samples: &[Poly],
    engine: &GroebnerEngine,
) -> Result<MonotonicityReport> {
    if larger.factors().len() != smaller.factors().len() {
        return Err(Error::Precondition(
            "R-ideals must have the same number of factors".into(),
        ));
    }
    for (fa, fb) in larger.factors().iter().zip(smaller.factors()) {
        if fa.exponent.is_negative() || fb.exponent < fa.exponent {
            return Err(Error::Precondition(
                "exponents must satisfy d_k >= c_k >= 0".into(),
            ));
        }
        if !engine.ideal_contains(&fa.ideal, &fb.ideal)? {
            return Err(Error::Precondition(format!(
                "{} is not contained in {}",
                fb.ideal, fa.ideal
            )));
        }
    }
    let mut orders_dominate = true;
    for chart in &r.charts {
        if rideal_order(smaller, chart)? < rideal_order(larger, chart)? {
            orders_dominate = false;
        }
    }
    let mut rows = Vec::with_capacity(samples.len());
    for g in samples {
        let member_smaller = mather_multiplier_member(g, smaller, r)?.member;
        let member_larger = mather_multiplier_member(g, larger, r)?.member;
        rows.push(MonotonicityRow {
            g: g.to_string(),
            member_smaller,
            member_larger,
            holds: !member_smaller || member_larger,
        });
    }
    let pass = orders_dominate && rows.iter().all(|row| row.holds);
    Ok(MonotonicityReport {
        rows,
        orders_dominate,
        pass,
    })
}
