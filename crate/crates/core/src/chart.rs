//! Divisor charts: polynomial maps from a smooth chart into the ambient space,
//! with one coordinate hyperplane singled out as the divisor.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{check_ring, Poly, PolyRing};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorChart {
    label: String,
    ambient: Arc<PolyRing>,
    chart_ring: Arc<PolyRing>,
    map: Vec<Poly>,
    divisor_index: usize,
    exceptional: bool,
}

impl DivisorChart {
    /// `divisor_index` is zero-based into the chart variables.
    pub fn new(
        label: impl Into<String>,
        ambient: &Arc<PolyRing>,
        map: Vec<Poly>,
        divisor_index: usize,
        exceptional: bool,
    ) -> Result<DivisorChart> {
        if map.len() != ambient.num_vars() {
            return Err(Error::LengthMismatch {
                expected: ambient.num_vars(),
                got: map.len(),
            });
        }
        let chart_ring = map[0].ring().clone();
        for p in &map {
            check_ring(&chart_ring, p.ring())?;
        }
        if divisor_index >= chart_ring.num_vars() {
            return Err(Error::IndexOutOfRange {
                index: divisor_index,
                num_vars: chart_ring.num_vars(),
            });
        }
        Ok(DivisorChart {
            label: label.into(),
            ambient: ambient.clone(),
            chart_ring,
            map,
            divisor_index,
            exceptional,
        })
    }

    /// The monomial chart `(y1^{w1}, y1^{w2} y2, …, y1^{wN} yN)` on `A^N`.
    pub fn monomial(
        label: impl Into<String>,
        ambient: &Arc<PolyRing>,
        weights: &[u32],
    ) -> Result<DivisorChart> {
        let n = ambient.num_vars();
        if weights.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: weights.len(),
            });
        }
        if weights.contains(&0) {
            return Err(Error::Precondition(
                "monomial weights must be positive".into(),
            ));
        }
        let ring = PolyRing::chart_ring(n)?;
        let map = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[0] = weights[i];
                if i > 0 {
                    e[i] += 1;
                }
                Poly::monomial(&ring, e, num_traits::One::one())
            })
            .collect();
        let exceptional = n >= 2;
        DivisorChart::new(label, ambient, map, 0, exceptional)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn ambient(&self) -> &Arc<PolyRing> {
        &self.ambient
    }

    pub fn chart_ring(&self) -> &Arc<PolyRing> {
        &self.chart_ring
    }

    pub fn map(&self) -> &[Poly] {
        &self.map
    }

    pub fn divisor_index(&self) -> usize {
        self.divisor_index
    }

    pub fn exceptional(&self) -> bool {
        self.exceptional
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient.num_vars()
    }

    pub fn chart_dim(&self) -> usize {
        self.chart_ring.num_vars()
    }

    pub fn pullback(&self, f: &Poly) -> Result<Poly> {
        check_ring(&self.ambient, f.ring())?;
        f.substitute(&self.map)
    }

    pub fn pullback_ideal(&self, ideal: &Ideal) -> Result<Vec<Poly>> {
        check_ring(&self.ambient, ideal.ring())?;
        ideal.pullback(&self.map)
    }

    /// Largest power of the divisor variable dividing `p`; `None` for zero.
    pub fn divisor_order(&self, p: &Poly) -> Option<u32> {
        p.min_var_exponent(self.divisor_index)
    }
}
