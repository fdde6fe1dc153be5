//! Minimal log J-discrepancies and log J-canonical thresholds over chart sets.

use num_traits::{Signed, Zero};

use super::{
    center_inside, is_negative, log_j_discrepancy, min_rat, DiscrepancyReport, Extended, Variety,
};
use crate::chart::DivisorChart;
use crate::error::{Error, Result};
use crate::groebner::GroebnerEngine;
use crate::ideal::Ideal;
use crate::rational::{int, Rat};
use crate::rideal::RIdeal;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JmldReport {
    pub value: Extended,
    /// Minimum of `aj` over the witnesses before any clamping.
    pub raw_minimum: Rat,
    /// True when the chart set is attested as a log resolution.
    pub exact: bool,
    pub clamped: bool,
    pub witnesses: Vec<String>,
    pub per_chart: Vec<DiscrepancyReport>,
    pub warning: Option<String>,
}

/// Minimum of `aj` over charts whose center lies in `V(T)`.
///
/// With an attested chart set and `dim X >= 2`, a negative minimum means the
/// true value is `-∞`. Without attestation the value is an upper bound.
pub fn jmld_over_charts(
    charts: &[DivisorChart],
    x: &Variety,
    a: &RIdeal,
    t: &Ideal,
    attested: bool,
    engine: &GroebnerEngine,
) -> Result<JmldReport> {
    let mut per_chart = Vec::new();
    let mut witnesses = Vec::new();
    for chart in charts {
        if !center_inside(chart, t, engine)? {
            continue;
        }
        witnesses.push(chart.label().to_string());
        per_chart.push(log_j_discrepancy(chart, x, a)?);
    }
    let Some(raw_minimum) = min_rat(per_chart.iter().map(|r| &r.aj)) else {
        return Err(Error::NoWitnesses);
    };
    let mut warning = None;
    let mut clamped = false;
    let value = if attested && is_negative(&raw_minimum) {
        if x.dim() >= 2 {
            clamped = true;
            Extended::NegInfinity
        } else {
            warning = Some("dimension one: raw minimum reported without clamping".to_string());
            Extended::Finite(raw_minimum.clone())
        }
    } else {
        Extended::Finite(raw_minimum.clone())
    };
    if !attested {
        warning = Some("upper bound only: chart set not attested as a log resolution".to_string());
    }
    Ok(JmldReport {
        value,
        raw_minimum,
        exact: attested,
        clamped,
        witnesses,
        per_chart,
        warning,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JlctReport {
    pub value: Extended,
    pub exact: bool,
    /// Label of a chart realizing the minimum.
    pub witness: Option<String>,
    pub per_chart: Vec<DiscrepancyReport>,
    pub reason: Option<String>,
}

/// `min (kj + 1) / ord_E(A)` over charts with `ord_E(A) > 0`.
pub fn jlct_from_charts(
    charts: &[DivisorChart],
    x: &Variety,
    a: &RIdeal,
    attested: bool,
) -> Result<JlctReport> {
    if !a.is_effective() {
        return Err(Error::Precondition(
            "jlct needs an effective R-ideal".into(),
        ));
    }
    let per_chart = charts
        .iter()
        .map(|c| log_j_discrepancy(c, x, a))
        .collect::<Result<Vec<_>>>()?;
    if let Some(bad) = per_chart.iter().find(|r| r.kj + 1 < 0) {
        return Ok(JlctReport {
            value: Extended::Finite(Rat::zero()),
            exact: attested,
            witness: Some(bad.label.clone()),
            per_chart,
            reason: Some("ambient pair not log J-canonical".to_string()),
        });
    }
    let mut best: Option<(Rat, String)> = None;
    for r in &per_chart {
        if !r.ord_rideal.is_positive() {
            continue;
        }
        let ratio = int(r.kj + 1) / &r.ord_rideal;
        if best.as_ref().is_none_or(|(b, _)| ratio < *b) {
            best = Some((ratio, r.label.clone()));
        }
    }
    let (value, witness) = match best {
        Some((v, w)) => (Extended::Finite(v), Some(w)),
        None => (Extended::PosInfinity, None),
    };
    Ok(JlctReport {
        value,
        exact: attested,
        witness,
        per_chart,
        reason: None,
    })
}
