//! Mather, Jacobian and log Jacobian discrepancies computed on divisor charts.

mod classify;
mod monomial;
mod theorem_b;
mod thresholds;

pub use classify::{classify_singularity, Classification};
pub use monomial::{
    inv_adjunction_check, monomial_log_discrepancy, InvAdjunctionReport, MonomialValuation,
};
pub use theorem_b::{theorem_b_check, TheoremBReport, THEOREM_B_DEPENDENCY};
pub use thresholds::{jlct_from_charts, jmld_over_charts, JlctReport, JmldReport};

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::chart::DivisorChart;
use crate::error::{Error, Result};
use crate::groebner::{extend_front, GroebnerEngine};
use crate::ideal::Ideal;
use crate::linalg::rank;
use crate::matrix::{fitting_jacobian_ideal, map_jacobian, minors};
use crate::poly::{check_ring, Poly};
use crate::rational::{format_rat, int, Rat};
use crate::rideal::RIdeal;
use crate::sampling::SamplingConfig;

/// A reduced equidimensional `X = V(I_X)` with its Jacobian ideal.
#[derive(Debug, Clone)]
pub struct Variety {
    ideal: Ideal,
    dim: usize,
    jacobian: Ideal,
}

impl Variety {
    pub fn new(ideal: Ideal, dim: usize) -> Result<Variety> {
        let jacobian = fitting_jacobian_ideal(&ideal, dim)?;
        Ok(Variety {
            ideal,
            dim,
            jacobian,
        })
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn codim(&self) -> usize {
        self.ideal.ring().num_vars() - self.dim
    }

    /// `j_X`.
    pub fn jacobian(&self) -> &Ideal {
        &self.jacobian
    }
}

/// A rational number extended by `±∞`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Extended {
    NegInfinity,
    Finite(Rat),
    PosInfinity,
}

impl Extended {
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            Extended::Finite(r) => Some(r),
            _ => None,
        }
    }
}

impl PartialOrd for Extended {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Extended {
    fn cmp(&self, other: &Self) -> Ordering {
        use Extended::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (NegInfinity, NegInfinity) | (PosInfinity, PosInfinity) => Ordering::Equal,
            (NegInfinity, _) | (_, PosInfinity) => Ordering::Less,
            (_, NegInfinity) | (PosInfinity, _) => Ordering::Greater,
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::NegInfinity => write!(f, "-inf"),
            Extended::PosInfinity => write!(f, "inf"),
            Extended::Finite(r) => write!(f, "{}", format_rat(r)),
        }
    }
}

/// Per-divisor discrepancy data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyReport {
    pub label: String,
    pub exceptional: bool,
    /// Mather discrepancy `ord_E(j_f)`.
    pub km: i64,
    /// `ord_E(j_X)`.
    pub ord_jx: i64,
    pub kj: i64,
    /// `ord_E(a_k)` for each factor of the R-ideal.
    pub factor_orders: Vec<i64>,
    /// `Σ c_k ord_E(a_k)`.
    pub ord_rideal: Rat,
    pub aj: Rat,
    pub am: Rat,
}

/// Outcome of [`validate_chart`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartValidation {
    pub label: String,
    pub on_variety: bool,
    /// Ranks of the chart Jacobian at the sampled points off the divisor.
    pub sampled_ranks: Vec<usize>,
    pub immersive: bool,
    /// The chart's maximal minors are taken to generate the image of ambient
    /// top forms; recorded rather than checked.
    pub assumption: &'static str,
}

pub const CHART_FORMS_ASSUMPTION: &str =
    "maximal minors of the chart Jacobian generate the pullback of top forms of X";

/// Checks `F∘φ = 0` for all generators and full rank of `Dφ` at a sampled point
/// off the divisor.
pub fn validate_chart(
    chart: &DivisorChart,
    ix: &Ideal,
    sampling: &SamplingConfig,
) -> Result<ChartValidation> {
    check_ring(chart.ambient(), ix.ring())?;
    for g in ix.generators() {
        let pulled = chart.pullback(g)?;
        if !pulled.is_zero() {
            return Err(Error::ChartNotOnVariety(format!(
                "{}: {g} pulls back to {pulled}",
                chart.label()
            )));
        }
    }
    let jac = map_jacobian(chart.map())?;
    let n = chart.chart_dim();
    let mut rng = sampling.rng();
    let mut sampled_ranks = Vec::new();
    for _ in 0..sampling.draws.max(1) {
        let mut point = sampling.draw(&mut rng, n);
        if point[chart.divisor_index()].is_zero() {
            point[chart.divisor_index()] = int(1);
        }
        let rows = (0..jac.rows())
            .map(|r| {
                (0..jac.cols())
                    .map(|c| jac.get(r, c).evaluate(&point))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        sampled_ranks.push(rank(&rows));
    }
    let immersive = sampled_ranks.contains(&n);
    if !immersive {
        return Err(Error::ChartNotImmersive(format!(
            "{}: Jacobian rank {:?} < {n} at all samples",
            chart.label(),
            sampled_ranks
        )));
    }
    Ok(ChartValidation {
        label: chart.label().to_string(),
        on_variety: true,
        sampled_ranks,
        immersive,
        assumption: CHART_FORMS_ASSUMPTION,
    })
}

/// Order of `p` along the chart divisor; `None` if `p∘φ = 0`.
pub fn poly_order_along_chart(p: &Poly, chart: &DivisorChart) -> Result<Option<u32>> {
    Ok(chart.divisor_order(&chart.pullback(p)?))
}

/// `ord_E(I)`: minimum over generators; `None` if every pullback vanishes.
pub fn ideal_order_along_chart(ideal: &Ideal, chart: &DivisorChart) -> Result<Option<u32>> {
    let mut best: Option<u32> = None;
    for g in ideal.generators() {
        if let Some(k) = poly_order_along_chart(g, chart)? {
            best = Some(best.map_or(k, |b| b.min(k)));
        }
    }
    Ok(best)
}

/// Order of an ideal of the chart ring along the chart divisor.
fn chart_ideal_order(ideal: &Ideal, chart: &DivisorChart) -> Option<u32> {
    ideal
        .generators()
        .iter()
        .filter_map(|g| chart.divisor_order(g))
        .min()
}

/// `km = ord_E(j_f)`: minimum order of the `n x n` minors of `Dφ`.
pub fn mather_discrepancy(chart: &DivisorChart, n: usize) -> Result<i64> {
    if n != chart.chart_dim() {
        return Err(Error::Precondition(format!(
            "chart {} has dimension {}, expected {n}",
            chart.label(),
            chart.chart_dim()
        )));
    }
    let jac = map_jacobian(chart.map())?;
    let max_minors = minors(&jac, n).ideal;
    chart_ideal_order(&max_minors, chart)
        .map(i64::from)
        .ok_or(Error::DegenerateChart)
}

pub fn jacobian_discrepancy(chart: &DivisorChart, x: &Variety) -> Result<DiscrepancyReport> {
    log_j_discrepancy(chart, x, &RIdeal::trivial(x.ideal().ring()))
}

/// Fills `kj = km - ord_E(j_X)`, `aj = kj + 1 - ord_E(A)` and `am = km + 1 - ord_E(A)`.
pub fn log_j_discrepancy(
    chart: &DivisorChart,
    x: &Variety,
    a: &RIdeal,
) -> Result<DiscrepancyReport> {
    check_ring(chart.ambient(), x.ideal().ring())?;
    check_ring(a.ring(), x.ideal().ring())?;
    let km = mather_discrepancy(chart, x.dim())?;
    let ord_jx = ideal_order_along_chart(x.jacobian(), chart)?
        .ok_or_else(|| Error::MapsIntoSingularLocus(chart.label().to_string()))?
        as i64;
    let mut factor_orders = Vec::with_capacity(a.factors().len());
    let mut ord_rideal = Rat::zero();
    for (k, f) in a.factors().iter().enumerate() {
        let ord =
            ideal_order_along_chart(&f.ideal, chart)?.ok_or_else(|| Error::RIdealVanishes {
                factor: k,
                chart: chart.label().to_string(),
            })? as i64;
        ord_rideal += &f.exponent * int(ord);
        factor_orders.push(ord);
    }
    let kj = km - ord_jx;
    Ok(DiscrepancyReport {
        label: chart.label().to_string(),
        exceptional: chart.exceptional(),
        km,
        ord_jx,
        kj,
        factor_orders,
        aj: int(kj + 1) - &ord_rideal,
        am: int(km + 1) - &ord_rideal,
        ord_rideal,
    })
}

/// Ideal of the closure of `φ(E)`: eliminate the chart variables from
/// `(x_i - φ_i) + (y_d)`.
pub fn center_ideal(chart: &DivisorChart, engine: &GroebnerEngine) -> Result<Ideal> {
    let ambient = chart.ambient();
    let n = chart.chart_dim();
    let chart_names: Vec<String> = (0..n).map(|i| format!("__y{i}")).collect();
    let refs: Vec<&str> = chart_names.iter().map(String::as_str).collect();
    let graph_ring = extend_front(ambient, &refs)?;
    let chart_map: Vec<usize> = (0..n).collect();
    let ambient_map: Vec<usize> = (n..n + ambient.num_vars()).collect();
    let mut gens = Vec::with_capacity(ambient.num_vars() + 1);
    for (i, phi) in chart.map().iter().enumerate() {
        let x = Poly::var(ambient, i)?.embed(&graph_ring, &ambient_map);
        gens.push(&x - &phi.embed(&graph_ring, &chart_map));
    }
    gens.push(Poly::var(&graph_ring, chart.divisor_index())?);
    let graph = Ideal::new(&graph_ring, gens)?;
    let center = engine.eliminate_front(&graph, n, ambient)?;
    Ok(engine
        .basis(&center, crate::monomial::MonomialOrder::DegRevLex)?
        .to_ideal())
}

/// Whether the center of the chart divisor lies in `V(T)`. The center ideal is
/// prime, so containment of `T` is plain membership.
pub fn center_inside(chart: &DivisorChart, t: &Ideal, engine: &GroebnerEngine) -> Result<bool> {
    let center = center_ideal(chart, engine)?;
    engine.ideal_contains(&center, t)
}

fn min_rat<'a>(values: impl Iterator<Item = &'a Rat>) -> Option<Rat> {
    values.min().cloned()
}

fn is_negative(r: &Rat) -> bool {
    r.is_negative()
}

#[cfg(test)]
mod tests;
