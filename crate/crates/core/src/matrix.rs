//! Polynomial matrices: Jacobians, determinants, minors and Fitting ideals.

use std::sync::Arc;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{check_ring, Poly, PolyRing};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Arc<PolyRing>,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    /// Row-major entries.
    pub fn new(
        ring: &Arc<PolyRing>,
        rows: usize,
        cols: usize,
        entries: Vec<Poly>,
    ) -> Result<PolyMatrix> {
        if entries.len() != rows * cols {
            return Err(Error::LengthMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        for e in &entries {
            check_ring(ring, e.ring())?;
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn identity(ring: &Arc<PolyRing>, size: usize) -> PolyMatrix {
        let entries = (0..size * size)
            .map(|k| {
                if k / size == k % size {
                    Poly::one(ring)
                } else {
                    Poly::zero(ring)
                }
            })
            .collect();
        PolyMatrix {
            ring: ring.clone(),
            rows: size,
            cols: size,
            entries,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Poly {
        &self.entries[row * self.cols + col]
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn transpose(&self) -> PolyMatrix {
        let entries = (0..self.cols)
            .flat_map(|c| (0..self.rows).map(move |r| (r, c)))
            .map(|(r, c)| self.get(r, c).clone())
            .collect();
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<Poly>> {
        rows.iter()
            .map(|&r| cols.iter().map(|&c| self.get(r, c).clone()).collect())
            .collect()
    }

    /// Determinant of a square matrix.
    pub fn determinant(&self) -> Result<Poly> {
        if self.rows != self.cols {
            return Err(Error::Precondition(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let all: Vec<usize> = (0..self.rows).collect();
        Ok(determinant(&self.ring, self.submatrix(&all, &all)))
    }
}

/// Cofactor expansion below size 4, fraction-free Bareiss elimination above.
pub fn determinant(ring: &Arc<PolyRing>, m: Vec<Vec<Poly>>) -> Poly {
    match m.len() {
        0 => Poly::one(ring),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        3 => {
            let mut det = Poly::zero(ring);
            for j in 0..3 {
                let a = &m[1][(j + 1) % 3] * &m[2][(j + 2) % 3];
                let b = &m[1][(j + 2) % 3] * &m[2][(j + 1) % 3];
                det = &det + &(&m[0][j] * &(&a - &b));
            }
            det
        }
        _ => bareiss(ring, m),
    }
}

fn bareiss(ring: &Arc<PolyRing>, mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    let mut negate = false;
    let mut previous = Poly::one(ring);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Poly::zero(ring),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let numerator = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = numerator
                    .div_exact(&previous)
                    .expect("Bareiss quotients are exact");
            }
        }
        previous = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// How a minors ideal relates to the requested size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorsKind {
    Regular,
    /// `k = 0`: the empty minor is 1.
    Empty,
    /// `k` exceeds a side of the matrix: no minors at all.
    TooLarge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minors {
    pub ideal: Ideal,
    pub kind: MinorsKind,
}

/// Ideal of all `k x k` minors, rows-then-columns in lexicographic order.
pub fn minors(m: &PolyMatrix, k: usize) -> Minors {
    if k == 0 {
        return Minors {
            ideal: Ideal::unit(&m.ring),
            kind: MinorsKind::Empty,
        };
    }
    if k > m.rows.min(m.cols) {
        return Minors {
            ideal: Ideal::zero(&m.ring),
            kind: MinorsKind::TooLarge,
        };
    }
    let mut gens = Vec::new();
    for rows in (0..m.rows).combinations(k) {
        for cols in (0..m.cols).combinations(k) {
            gens.push(determinant(&m.ring, m.submatrix(&rows, &cols)));
        }
    }
    Minors {
        ideal: Ideal::new(&m.ring, gens).expect("minors share the matrix ring"),
        kind: MinorsKind::Regular,
    }
}

/// `r x N` matrix of partial derivatives of the generators.
pub fn jacobian_matrix(ideal: &Ideal) -> PolyMatrix {
    let ring = ideal.ring();
    let n = ring.num_vars();
    let entries = ideal
        .generators()
        .iter()
        .flat_map(|g| (0..n).map(move |i| g.partial_derivative(i).expect("index in range")))
        .collect();
    PolyMatrix {
        ring: ring.clone(),
        rows: ideal.len(),
        cols: n,
        entries,
    }
}

/// Jacobian matrix of a polynomial map: `images.len() x num_vars`.
pub fn map_jacobian(images: &[Poly]) -> Result<PolyMatrix> {
    let Some(first) = images.first() else {
        return Err(Error::Precondition("empty map".into()));
    };
    let ring = first.ring().clone();
    let n = ring.num_vars();
    let mut entries = Vec::with_capacity(images.len() * n);
    for p in images {
        check_ring(&ring, p.ring())?;
        for i in 0..n {
            entries.push(p.partial_derivative(i)?);
        }
    }
    PolyMatrix::new(&ring, images.len(), n, entries)
}

/// Smallest nonzero Fitting ideal of the cotangent sheaf of a reduced
/// `dim`-dimensional `V(ideal)`: the codimension-sized minors of the Jacobian.
pub fn fitting_jacobian_ideal(ideal: &Ideal, dim: usize) -> Result<Ideal> {
    let num_vars = ideal.ring().num_vars();
    if dim > num_vars {
        return Err(Error::Precondition(format!(
            "dimension {dim} exceeds ambient dimension {num_vars}"
        )));
    }
    let codim = num_vars - dim;
    if codim == 0 {
        return Ok(Ideal::unit(ideal.ring()));
    }
    let result = minors(&jacobian_matrix(ideal), codim).ideal;
    if result.is_zero() {
        return Err(Error::VanishingFitting);
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly_from;

    #[test]
    fn jacobians_of_small_hypersurfaces() {
        let r = PolyRing::new(["x", "y"]).unwrap();
        let cusp = Ideal::principal(poly_from(&r, &[(1, &[2, 0]), (-1, &[0, 3])]));
        let j = jacobian_matrix(&cusp);
        assert_eq!((j.rows(), j.cols()), (1, 2));
        assert_eq!(j.get(0, 0), &poly_from(&r, &[(2, &[1, 0])]));
        assert_eq!(j.get(0, 1), &poly_from(&r, &[(-3, &[0, 2])]));

        let lin = Ideal::of_variables(&r, [0, 1]).unwrap();
        assert_eq!(jacobian_matrix(&lin), PolyMatrix::identity(&r, 2));
    }

    #[test]
    fn two_by_two_minors_of_the_cone_chart_jacobian() {
        let c = PolyRing::chart_ring(2).unwrap();
        let m = PolyMatrix::new(
            &c,
            3,
            2,
            vec![
                poly_from(&c, &[(1, &[0, 0])]),
                poly_from(&c, &[]),
                poly_from(&c, &[(1, &[0, 2])]),
                poly_from(&c, &[(2, &[1, 1])]),
                poly_from(&c, &[(1, &[0, 1])]),
                poly_from(&c, &[(1, &[1, 0])]),
            ],
        )
        .unwrap();
        let result = minors(&m, 2);
        assert_eq!(result.kind, MinorsKind::Regular);
        assert_eq!(
            result.ideal.generators(),
            &[
                poly_from(&c, &[(2, &[1, 1])]),
                poly_from(&c, &[(1, &[1, 0])]),
                poly_from(&c, &[(-1, &[1, 2])]),
            ]
        );
    }

    #[test]
    fn degenerate_minor_sizes() {
        let r = PolyRing::new(["x", "y"]).unwrap();
        let id = PolyMatrix::identity(&r, 2);
        assert_eq!(minors(&id, 2).ideal.generators(), &[Poly::one(&r)]);
        assert_eq!(minors(&id, 0).kind, MinorsKind::Empty);
        assert_eq!(minors(&id, 3).kind, MinorsKind::TooLarge);
        assert!(minors(&id, 3).ideal.is_zero());
    }

    #[test]
    fn one_by_one_minors_are_entries() {
        let r = PolyRing::new(["x", "y", "z"]).unwrap();
        let cone = Ideal::principal(poly_from(&r, &[(1, &[1, 1, 0]), (-1, &[0, 0, 2])]));
        let m = minors(&jacobian_matrix(&cone), 1).ideal;
        assert_eq!(
            m.generators(),
            &[
                poly_from(&r, &[(1, &[0, 1, 0])]),
                poly_from(&r, &[(1, &[1, 0, 0])]),
                poly_from(&r, &[(-2, &[0, 0, 1])]),
            ]
        );
    }

    #[test]
    fn bareiss_agrees_with_cofactor_expansion() {
        let r = PolyRing::new(["x", "y"]).unwrap();
        let x = Poly::var(&r, 0).unwrap();
        let y = Poly::var(&r, 1).unwrap();
        let one = Poly::one(&r);
        let zero = Poly::zero(&r);
        // Block diagonal [[x,1],[y,x]] ⊕ [[0,y],[1,x]] has determinant (x^2 - y)(-y).
        let m = vec![
            vec![x.clone(), one.clone(), zero.clone(), zero.clone()],
            vec![y.clone(), x.clone(), zero.clone(), zero.clone()],
            vec![zero.clone(), zero.clone(), zero.clone(), y.clone()],
            vec![zero.clone(), zero.clone(), one.clone(), x.clone()],
        ];
        let expected = &(&(&x * &x) - &y) * &(-&y);
        assert_eq!(determinant(&r, m), expected);
    }

    #[test]
    fn fitting_ideals() {
        let r = PolyRing::new(["x", "y"]).unwrap();
        let cusp = Ideal::principal(poly_from(&r, &[(1, &[2, 0]), (-1, &[0, 3])]));
        let j = fitting_jacobian_ideal(&cusp, 1).unwrap();
        assert_eq!(
            j.generators(),
            &[
                poly_from(&r, &[(2, &[1, 0])]),
                poly_from(&r, &[(-3, &[0, 2])])
            ]
        );
        assert_eq!(
            fitting_jacobian_ideal(&Ideal::zero(&r), 2).unwrap(),
            Ideal::unit(&r)
        );
        assert_eq!(
            fitting_jacobian_ideal(&Ideal::zero(&r), 1),
            Err(Error::VanishingFitting)
        );
    }
}
