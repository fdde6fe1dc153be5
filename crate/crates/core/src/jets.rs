//! Arcs and jets on affine space: evaluation along arcs, orders of vanishing,
//! jet-scheme equations and contact arcs of divisor charts.

use std::sync::Arc;

use crate::chart::DivisorChart;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{check_ring, Poly, PolyRing};
use crate::rational::Rat;
use crate::series::{SeriesOrder, TruncSeries};

/// Ring `Q[t]` in which exact arc components live.
pub fn arc_parameter_ring() -> Arc<PolyRing> {
    PolyRing::new(["t"]).expect("valid ring")
}

/// A jet of an arc in `A^N`: `N` truncated series sharing one truncation order.
///
/// When the arc came from polynomials in `t`, those are kept so that an
/// identically vanishing evaluation can be certified rather than bounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncArc {
    components: Vec<TruncSeries>,
    exact: Option<Vec<Poly>>,
}

impl TruncArc {
    pub fn new(components: Vec<TruncSeries>) -> Result<TruncArc> {
        let Some(first) = components.first() else {
            return Err(Error::Precondition(
                "an arc needs at least one component".into(),
            ));
        };
        let m = first.trunc_order();
        for c in &components {
            if c.trunc_order() != m {
                return Err(Error::OrderMismatch(m, c.trunc_order()));
            }
        }
        Ok(TruncArc {
            components,
            exact: None,
        })
    }

    /// Truncates univariate polynomials at order `m`, keeping them as exact data.
    pub fn from_polys(polys: Vec<Poly>, m: usize) -> Result<TruncArc> {
        let Some(first) = polys.first() else {
            return Err(Error::Precondition(
                "an arc needs at least one component".into(),
            ));
        };
        let ring = first.ring().clone();
        if ring.num_vars() != 1 {
            return Err(Error::Precondition(
                "arc components must be polynomials in a single parameter".into(),
            ));
        }
        let mut components = Vec::with_capacity(polys.len());
        for p in &polys {
            check_ring(&ring, p.ring())?;
            let mut s = TruncSeries::zero(m);
            let mut coeffs = s.coeffs().to_vec();
            for (e, c) in p.terms() {
                let k = e[0] as usize;
                if k <= m {
                    coeffs[k] = c.clone();
                }
            }
            s = TruncSeries::new(m, coeffs)?;
            components.push(s);
        }
        Ok(TruncArc {
            components,
            exact: Some(polys),
        })
    }

    pub fn trunc_order(&self) -> usize {
        self.components[0].trunc_order()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[TruncSeries] {
        &self.components
    }

    pub fn exact(&self) -> Option<&[Poly]> {
        self.exact.as_deref()
    }

    pub fn truncate(&self, m: usize) -> TruncArc {
        match &self.exact {
            Some(polys) => TruncArc::from_polys(polys.clone(), m).expect("already validated"),
            None => TruncArc {
                components: self.components.iter().map(|c| c.truncate(m)).collect(),
                exact: None,
            },
        }
    }

    /// Coefficients ordered like the variables of [`JetRing`]: level-major,
    /// `x_1^{(0)}, …, x_N^{(0)}, x_1^{(1)}, …`.
    pub fn coefficient_vector(&self) -> Vec<Rat> {
        let m = self.trunc_order();
        (0..=m)
            .flat_map(|j| self.components.iter().map(move |c| c.coeff(j).clone()))
            .collect()
    }
}

fn check_arity(f: &Poly, arc: &TruncArc) -> Result<()> {
    if f.ring().num_vars() != arc.len() {
        return Err(Error::LengthMismatch {
            expected: f.ring().num_vars(),
            got: arc.len(),
        });
    }
    Ok(())
}

/// `f(γ(t)) mod t^{m+1}`.
pub fn evaluate_arc(f: &Poly, arc: &TruncArc) -> Result<TruncSeries> {
    check_arity(f, arc)?;
    let m = arc.trunc_order();
    let mut powers: Vec<Vec<TruncSeries>> = arc
        .components
        .iter()
        .map(|c| vec![TruncSeries::one(m), c.clone()])
        .collect();
    let mut total = TruncSeries::zero(m);
    for (exps, coeff) in f.terms() {
        let mut term = TruncSeries::constant(m, coeff.clone());
        for (i, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let cache = &mut powers[i];
            while cache.len() <= e as usize {
                let next = cache[cache.len() - 1].mul(&cache[1])?;
                cache.push(next);
            }
            term = term.mul(&cache[e as usize])?;
            if term.is_zero() {
                break;
            }
        }
        total = total.add(&term)?;
    }
    Ok(total)
}

/// Minimum over generators of the t-order of the evaluation.
pub fn arc_order_of_ideal(ideal: &Ideal, arc: &TruncArc) -> Result<SeriesOrder> {
    let m = arc.trunc_order();
    let mut best = SeriesOrder::Infinity {
        bound: m,
        provable: true,
    };
    for g in ideal.generators() {
        let order = match evaluate_arc(g, arc)?.t_order() {
            Some(k) => SeriesOrder::Finite(k),
            None => {
                let provable = match arc.exact() {
                    Some(polys) => g.substitute(polys)?.is_zero(),
                    None => false,
                };
                SeriesOrder::Infinity { bound: m, provable }
            }
        };
        best = best.min(order);
    }
    Ok(best)
}

/// True iff every generator vanishes modulo `t^{m+1}` along the arc.
pub fn verify_arc_on_variety(ideal: &Ideal, arc: &TruncArc) -> Result<bool> {
    for g in ideal.generators() {
        if !evaluate_arc(g, arc)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Coordinates `x_i^{(j)}` of the `m`-th jet scheme of `A^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JetRing {
    base: Arc<PolyRing>,
    m: usize,
    ring: Arc<PolyRing>,
}

/// Name of `x^{(j)}`: `x` followed by `j`, with an underscore when `x` already
/// ends in a digit.
pub fn jet_variable_name(base: &str, level: usize) -> String {
    if base.ends_with(|c: char| c.is_ascii_digit()) {
        format!("{base}_{level}")
    } else {
        format!("{base}{level}")
    }
}

impl JetRing {
    pub fn new(base: &Arc<PolyRing>, m: usize) -> Result<JetRing> {
        let names = (0..=m).flat_map(|j| base.names().iter().map(move |x| jet_variable_name(x, j)));
        Ok(JetRing {
            base: base.clone(),
            m,
            ring: PolyRing::new(names)?,
        })
    }

    pub fn base(&self) -> &Arc<PolyRing> {
        &self.base
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn trunc_order(&self) -> usize {
        self.m
    }

    /// Index of `x_i^{(j)}`.
    pub fn var_index(&self, i: usize, j: usize) -> usize {
        j * self.base.num_vars() + i
    }

    /// The universal jet `x_i = Σ_j x_i^{(j)} t^j`, as polynomial coefficients.
    fn universal_components(&self) -> Vec<Vec<Poly>> {
        (0..self.base.num_vars())
            .map(|i| {
                (0..=self.m)
                    .map(|j| Poly::var(&self.ring, self.var_index(i, j)).expect("index in range"))
                    .collect()
            })
            .collect()
    }
}

/// Multiplies two truncated series with polynomial coefficients.
fn poly_series_mul(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let n = a.len();
    let ring = a[0].ring().clone();
    let mut out = vec![Poly::zero(&ring); n];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b[..n - i].iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
    }
    out
}

/// Equations of the jet scheme `X_m` together with its coordinate ring.
#[derive(Debug, Clone)]
pub struct JetEquations {
    pub jet_ring: JetRing,
    pub ideal: Ideal,
}

/// Coefficients of `t^0, …, t^m` in `p(Σ_j x^{(j)} t^j)`.
pub fn expand_along_jet(p: &Poly, jet_ring: &JetRing) -> Result<Vec<Poly>> {
    check_ring(jet_ring.base(), p.ring())?;
    let ring = jet_ring.ring().clone();
    let m = jet_ring.trunc_order();
    let mut powers: Vec<Vec<Vec<Poly>>> = jet_ring
        .universal_components()
        .into_iter()
        .map(|s| {
            let mut one = vec![Poly::zero(&ring); m + 1];
            one[0] = Poly::one(&ring);
            vec![one, s]
        })
        .collect();
    let mut total = vec![Poly::zero(&ring); m + 1];
    for (exps, coeff) in p.terms() {
        let mut term = vec![Poly::zero(&ring); m + 1];
        term[0] = Poly::constant(&ring, coeff.clone());
        for (i, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let cache = &mut powers[i];
            while cache.len() <= e as usize {
                let next = poly_series_mul(&cache[cache.len() - 1], &cache[1]);
                cache.push(next);
            }
            term = poly_series_mul(&term, &cache[e as usize]);
        }
        for (acc, t) in total.iter_mut().zip(&term) {
            if !t.is_zero() {
                *acc = &*acc + t;
            }
        }
    }
    Ok(total)
}

/// For each generator `F`, the `m + 1` coefficients of `F(Σ x^{(j)} t^j)`.
pub fn jet_equations(ideal: &Ideal, m: usize) -> Result<JetEquations> {
    let jet_ring = JetRing::new(ideal.ring(), m)?;
    let mut gens = Vec::new();
    for g in ideal.generators() {
        gens.extend(expand_along_jet(g, &jet_ring)?);
    }
    Ok(JetEquations {
        ideal: Ideal::new(jet_ring.ring(), gens)?,
        jet_ring,
    })
}

/// The contact-order-one arc of the chart: divisor coordinate `t`, the other
/// chart coordinates set to `params` in order.
pub fn contact_arc_from_chart(chart: &DivisorChart, params: &[Rat], m: usize) -> Result<TruncArc> {
    let n = chart.chart_dim();
    if params.len() + 1 != n {
        return Err(Error::LengthMismatch {
            expected: n - 1,
            got: params.len(),
        });
    }
    let ring = arc_parameter_ring();
    let mut rest = params.iter();
    let images: Vec<Poly> = (0..n)
        .map(|k| {
            if k == chart.divisor_index() {
                Poly::var(&ring, 0).expect("t")
            } else {
                Poly::constant(&ring, rest.next().expect("length checked").clone())
            }
        })
        .collect();
    arc_through_chart(chart, &images, m)
}

/// The image of the chart-domain arc `images` (polynomials in `t`).
pub fn arc_through_chart(chart: &DivisorChart, images: &[Poly], m: usize) -> Result<TruncArc> {
    let polys = chart
        .map()
        .iter()
        .map(|p| p.substitute(images))
        .collect::<Result<Vec<_>>>()?;
    TruncArc::from_polys(polys, m)
}

/// Convenience: `TruncArc` from integer coefficient lists.
pub fn arc_from_coeffs(m: usize, components: &[&[i64]]) -> TruncArc {
    let comps = components
        .iter()
        .map(|c| {
            let coeffs: Vec<Rat> = c.iter().map(|&v| Rat::from_integer(v.into())).collect();
            TruncSeries::from_coeffs_truncating(m, &coeffs)
        })
        .collect();
    TruncArc::new(comps).expect("consistent truncation")
}

/// True if the ideal vanishes identically on the exact arc; `None` when the
/// arc carries no exact components.
pub fn vanishes_identically(ideal: &Ideal, arc: &TruncArc) -> Result<Option<bool>> {
    let Some(polys) = arc.exact() else {
        return Ok(None);
    };
    for g in ideal.generators() {
        check_arity(g, arc)?;
        if !g.substitute(polys)?.is_zero() {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}
