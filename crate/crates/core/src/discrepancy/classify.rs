//! J-canonical / log J-canonical verdicts and their cohomological consequences.

use super::{
    ideal_order_along_chart, jacobian_discrepancy, theorem_b_check, DiscrepancyReport, Variety,
};
use crate::chart::DivisorChart;
use crate::error::{Error, Result};
use crate::groebner::GroebnerEngine;
use crate::ideal::Ideal;
use crate::sampling::SamplingConfig;

pub const IMPLIES_RATIONAL: &str = "J-canonical implies rational singularities";
pub const IMPLIES_DU_BOIS: &str = "log J-canonical implies Du Bois singularities";
pub const PAIR_RATIONAL: &str = "(X, d_X^-1) J-canonical iff f_*omega_Y = omega_X";
pub const PAIR_DU_BOIS: &str = "(X, d_X^-1) log J-canonical iff f_*omega_Y(E) = omega_X";
pub const CONVERSE_NOTE: &str = "converse implications require Cohen-Macaulay";

/// Tangent-space test at the generic contact jet of one divisor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JetCriterionRow {
    pub label: String,
    pub m: usize,
    pub tangent_dim: i64,
    /// `2n(m+1)`.
    pub bound: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub attested: bool,
    pub per_chart: Vec<DiscrepancyReport>,
    /// `ord_E(d_X)` per chart, in chart order.
    pub lcid_orders: Vec<i64>,
    /// Minimum of `kj + 1` over exceptional charts.
    pub min_exceptional: Option<i64>,
    /// Minimum of `kj + 1` over all charts.
    pub min_all: Option<i64>,
    pub j_canonical: bool,
    pub j_terminal: bool,
    pub log_j_canonical: bool,
    pub log_j_terminal: bool,
    pub pair_j_canonical: bool,
    pub pair_log_j_canonical: bool,
    /// `dim T X_m <= 2n(m+1)` at every divisor.
    pub jet_criterion_c: bool,
    /// `dim T X_m < 2n(m+1)` at every exceptional divisor.
    pub jet_criterion_c_prime: bool,
    pub jet_rows: Vec<JetCriterionRow>,
    pub implications: Vec<&'static str>,
}

impl Classification {
    pub fn sufficiency(&self) -> &'static str {
        if self.attested {
            "exact"
        } else {
            "necessary conditions only"
        }
    }
}

/// `d_list` holds ideals of complete intersections `V ⊇ X`; `ord_E(d_X)` is the
/// minimum over them of `ord_E((I_V : I_X) + I_X)`. An empty list means `d_X = (1)`.
pub fn classify_singularity(
    x: &Variety,
    charts: &[DivisorChart],
    attested: bool,
    d_list: &[Ideal],
    sampling: &SamplingConfig,
    engine: &GroebnerEngine,
) -> Result<Classification> {
    let per_chart = charts
        .iter()
        .map(|c| jacobian_discrepancy(c, x))
        .collect::<Result<Vec<_>>>()?;
    let defects = d_list
        .iter()
        .map(|iv| engine.lci_defect(x.ideal(), iv))
        .collect::<Result<Vec<_>>>()?;
    let mut lcid_orders = Vec::with_capacity(charts.len());
    for chart in charts {
        let mut best: Option<u32> = if defects.is_empty() { Some(0) } else { None };
        for d in &defects {
            if let Some(k) = ideal_order_along_chart(d, chart)? {
                best = Some(best.map_or(k, |b| b.min(k)));
            }
        }
        let ord = best.ok_or_else(|| {
            Error::Precondition(format!(
                "lci-defect ideal vanishes identically along {}",
                chart.label()
            ))
        })?;
        lcid_orders.push(i64::from(ord));
    }

    let exceptional = |i: &usize| per_chart[*i].exceptional;
    let all: Vec<usize> = (0..per_chart.len()).collect();
    let exc: Vec<usize> = all.iter().copied().filter(exceptional).collect();
    let min_of = |idx: &[usize], shift: bool| {
        idx.iter()
            .map(|&i| per_chart[i].kj + 1 + if shift { lcid_orders[i] } else { 0 })
            .min()
    };
    let min_exceptional = min_of(&exc, false);
    let min_all = min_of(&all, false);
    let pair_exc = min_of(&exc, true);
    let pair_all = min_of(&all, true);

    let j_canonical = min_exceptional.is_none_or(|v| v >= 1);
    let j_terminal = min_exceptional.is_none_or(|v| v > 1);
    let log_j_canonical = min_all.is_none_or(|v| v >= 0);
    let log_j_terminal = min_all.is_none_or(|v| v > 0);
    let pair_j_canonical = pair_exc.is_none_or(|v| v >= 1);
    let pair_log_j_canonical = pair_all.is_none_or(|v| v >= 0);

    let n = x.dim();
    let mut jet_rows = Vec::with_capacity(charts.len());
    for (chart, report) in charts.iter().zip(&per_chart) {
        let m = 2 * report.ord_jx as usize;
        let b = theorem_b_check(chart, x, m, sampling, false)?;
        jet_rows.push(JetCriterionRow {
            label: chart.label().to_string(),
            m,
            tangent_dim: b.fiber + b.closure,
            bound: 2 * (n * (m + 1)) as i64,
        });
    }
    let jet_criterion_c = jet_rows.iter().all(|r| r.tangent_dim <= r.bound);
    let jet_criterion_c_prime = jet_rows
        .iter()
        .zip(&per_chart)
        .filter(|(_, p)| p.exceptional)
        .all(|(r, _)| r.tangent_dim < r.bound);

    let mut implications = Vec::new();
    if j_canonical {
        implications.push(IMPLIES_RATIONAL);
    }
    if log_j_canonical {
        implications.push(IMPLIES_DU_BOIS);
    }
    if pair_j_canonical {
        implications.push(PAIR_RATIONAL);
    }
    if pair_log_j_canonical {
        implications.push(PAIR_DU_BOIS);
    }
    implications.push(CONVERSE_NOTE);

    Ok(Classification {
        attested,
        per_chart,
        lcid_orders,
        min_exceptional,
        min_all,
        j_canonical,
        j_terminal,
        log_j_canonical,
        log_j_terminal,
        pair_j_canonical,
        pair_log_j_canonical,
        jet_criterion_c,
        jet_criterion_c_prime,
        jet_rows,
        implications,
    })
}
