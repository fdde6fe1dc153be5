//! Smith normal form over `Q[t]/(t^{m+1})` and tangent spaces of jet schemes.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::jets::{evaluate_arc, verify_arc_on_variety, TruncArc};
use crate::matrix::jacobian_matrix;
use crate::series::TruncSeries;

/// A matrix of truncated series sharing one truncation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesMatrix {
    rows: usize,
    cols: usize,
    m: usize,
    entries: Vec<TruncSeries>,
}

impl SeriesMatrix {
    /// Row-major entries.
    pub fn new(
        rows: usize,
        cols: usize,
        m: usize,
        entries: Vec<TruncSeries>,
    ) -> Result<SeriesMatrix> {
        if entries.len() != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        for e in &entries {
            if e.trunc_order() != m {
                return Err(Error::OrderMismatch(m, e.trunc_order()));
            }
        }
        Ok(SeriesMatrix {
            rows,
            cols,
            m,
            entries,
        })
    }

    pub fn zero(rows: usize, cols: usize, m: usize) -> SeriesMatrix {
        SeriesMatrix {
            rows,
            cols,
            m,
            entries: vec![TruncSeries::zero(m); rows * cols],
        }
    }

    pub fn identity(size: usize, m: usize) -> SeriesMatrix {
        let mut out = SeriesMatrix::zero(size, size, m);
        for i in 0..size {
            out.entries[i * size + i] = TruncSeries::one(m);
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn trunc_order(&self) -> usize {
        self.m
    }

    pub fn get(&self, row: usize, col: usize) -> &TruncSeries {
        &self.entries[row * self.cols + col]
    }

    fn to_rows(&self) -> Vec<Vec<TruncSeries>> {
        self.entries
            .chunks(self.cols.max(1))
            .map(<[_]>::to_vec)
            .take(self.rows)
            .collect()
    }
}

/// Orders `a_1 <= … <= a_l` of the finite diagonal entries, plus the number of
/// diagonal entries that vanish modulo `t^{m+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfProfile {
    pub trunc_order: usize,
    pub diagonal_orders: Vec<usize>,
    pub zero_count: usize,
}

impl SnfProfile {
    pub fn rank(&self) -> usize {
        self.diagonal_orders.len()
    }
}

pub fn smith_normal_form(matrix: &SeriesMatrix) -> SnfProfile {
    let m = matrix.m;
    let mut a = matrix.to_rows();
    let mut live_rows: Vec<usize> = (0..matrix.rows).collect();
    let mut live_cols: Vec<usize> = (0..matrix.cols).collect();
    let mut orders = Vec::new();
    loop {
        // Minimal t-order; ties go to the least (row, col).
        let mut pivot: Option<(usize, usize, usize)> = None;
        for &r in &live_rows {
            for &c in &live_cols {
                if let Some(k) = a[r][c].t_order() {
                    if pivot.is_none_or(|(best, _, _)| k < best) {
                        pivot = Some((k, r, c));
                    }
                }
            }
        }
        let Some((k, pr, pc)) = pivot else {
            break;
        };
        let unit_inv = a[pr][pc]
            .shift_down(k)
            .invert()
            .expect("leading coefficient is nonzero");
        for c in &live_cols {
            a[pr][*c] = a[pr][*c].mul(&unit_inv).expect("same order");
        }
        let pivot_row = a[pr].clone();
        for &r in &live_rows {
            if r == pr || a[r][pc].is_zero() {
                continue;
            }
            let q = a[r][pc].shift_down(k);
            for &c in &live_cols {
                let delta = q.mul(&pivot_row[c]).expect("same order");
                a[r][c] = a[r][c].sub(&delta).expect("same order");
            }
        }
        for &c in &live_cols {
            if c == pc || a[pr][c].is_zero() {
                continue;
            }
            // Column pc is zero outside the pivot row, so only row pr changes.
            let q = a[pr][c].shift_down(k);
            let delta = q.mul(&a[pr][pc]).expect("same order");
            a[pr][c] = a[pr][c].sub(&delta).expect("same order");
        }
        debug_assert!(a[pr]
            .iter()
            .enumerate()
            .all(|(c, e)| c == pc || !live_cols.contains(&c) || e.is_zero()));
        orders.push(k);
        live_rows.retain(|&r| r != pr);
        live_cols.retain(|&c| c != pc);
    }
    orders.sort_unstable();
    let zero_count = matrix.rows.min(matrix.cols) - orders.len();
    SnfProfile {
        trunc_order: m,
        diagonal_orders: orders,
        zero_count,
    }
}

/// `Σ a_i + (cols - l)(m + 1)`: the Q-dimension of `{w : M w ≡ 0}`.
pub fn kernel_dimension(matrix: &SeriesMatrix) -> usize {
    kernel_dimension_from_profile(&smith_normal_form(matrix), matrix.cols)
}

pub fn kernel_dimension_from_profile(profile: &SnfProfile, cols: usize) -> usize {
    let sum: usize = profile.diagonal_orders.iter().sum();
    sum + (cols - profile.rank()) * (profile.trunc_order + 1)
}

/// Jacobian matrix of the generators evaluated entrywise along the arc.
pub fn jacobian_at_arc(ideal: &Ideal, arc: &TruncArc) -> Result<SeriesMatrix> {
    let jac = jacobian_matrix(ideal);
    let entries = jac
        .entries()
        .iter()
        .map(|p| evaluate_arc(p, arc))
        .collect::<Result<Vec<_>>>()?;
    if jac.cols() != arc.len() {
        return Err(Error::LengthMismatch {
            expected: jac.cols(),
            got: arc.len(),
        });
    }
    SeriesMatrix::new(jac.rows(), jac.cols(), arc.trunc_order(), entries)
}

/// Dimension of the tangent space of `X_m` at the jet.
pub fn tangent_space_dim(ideal: &Ideal, arc: &TruncArc) -> Result<usize> {
    Ok(kernel_dimension_from_profile(
        &tangent_profile(ideal, arc)?,
        arc.len(),
    ))
}

/// SNF profile of the Jacobian at the jet, after checking the jet lies on `X`.
pub fn tangent_profile(ideal: &Ideal, arc: &TruncArc) -> Result<SnfProfile> {
    if !verify_arc_on_variety(ideal, arc)? {
        return Err(Error::ArcNotOnVariety(
            "some generator does not vanish modulo t^(m+1)".into(),
        ));
    }
    Ok(smith_normal_form(&jacobian_at_arc(ideal, arc)?))
}

/// Order along the jet of the `k`-th Fitting ideal of the cotangent module of
/// `X ⊂ A^N`: `min(a_1 + … + a_{N-k}, m + 1)`, or `m + 1` when `N - k > l`.
pub fn fitting_orders_from_profile(
    profile: &SnfProfile,
    k: usize,
    num_vars: usize,
) -> Result<usize> {
    if k > num_vars {
        return Err(Error::Precondition(format!(
            "Fitting index {k} exceeds the number of variables {num_vars}"
        )));
    }
    let r = num_vars - k;
    let cap = profile.trunc_order + 1;
    if r > profile.rank() {
        return Ok(cap);
    }
    let sum: usize = profile.diagonal_orders[..r].iter().sum();
    Ok(sum.min(cap))
}
