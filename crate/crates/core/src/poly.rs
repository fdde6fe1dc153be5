//! Sparse multivariate polynomials over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{self, degrevlex_cmp, Exponents, MonomialOrder};
use crate::rational::{format_rat, is_integer, Rat};

/// An ordered list of distinct variable names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    names: Vec<String>,
}

impl PolyRing {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<PolyRing>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidRing(
                "a ring needs at least one variable".into(),
            ));
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::InvalidRing(format!("duplicate variable {name}")));
            }
        }
        Ok(Arc::new(PolyRing { names }))
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Ring `y1, …, yn` used for chart domains.
    pub fn chart_ring(dim: usize) -> Result<Arc<PolyRing>> {
        PolyRing::new((1..=dim).map(|i| format!("y{i}")))
    }
}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn check_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch(format!(
            "[{}] vs [{}]",
            a.names.join(","),
            b.names.join(",")
        )))
    }
}

/// A polynomial with nonzero rational coefficients indexed by exponent vectors.
#[derive(Clone)]
pub struct Poly {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Exponents, Rat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl Poly {
    pub fn zero(ring: &Arc<PolyRing>) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Poly {
        Poly::constant(ring, Rat::one())
    }

    pub fn constant(ring: &Arc<PolyRing>, value: Rat) -> Poly {
        Poly::monomial(ring, vec![0; ring.num_vars()], value)
    }

    pub fn var(ring: &Arc<PolyRing>, index: usize) -> Result<Poly> {
        if index >= ring.num_vars() {
            return Err(Error::IndexOutOfRange {
                index,
                num_vars: ring.num_vars(),
            });
        }
        let mut exps = vec![0; ring.num_vars()];
        exps[index] = 1;
        Ok(Poly::monomial(ring, exps, Rat::one()))
    }

    pub fn monomial(ring: &Arc<PolyRing>, exps: Exponents, coeff: Rat) -> Poly {
        assert_eq!(exps.len(), ring.num_vars(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from possibly repeated or zero terms.
    pub fn from_terms(
        ring: &Arc<PolyRing>,
        terms: impl IntoIterator<Item = (Exponents, Rat)>,
    ) -> Poly {
        let mut poly = Poly::zero(ring);
        for (exps, coeff) in terms {
            assert_eq!(exps.len(), ring.num_vars(), "exponent vector length");
            poly.add_term(exps, coeff);
        }
        poly
    }

    pub(crate) fn add_term(&mut self, exps: Exponents, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in exponent-lexicographic storage order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    /// The value if the polynomial is constant (zero included).
    pub fn constant_value(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => {
                let (exps, c) = self.terms.iter().next().unwrap();
                exps.iter().all(|e| *e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| monomial::total_degree(e)).max()
    }

    /// Smallest exponent of variable `index` across the terms; `None` for zero.
    pub fn min_var_exponent(&self, index: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[index]).min()
    }

    pub fn max_var_exponent(&self, index: usize) -> u32 {
        self.terms.keys().map(|e| e[index]).max().unwrap_or(0)
    }

    pub fn uses_var(&self, index: usize) -> bool {
        self.terms.keys().any(|e| e[index] > 0)
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Exponents, &Rat)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Terms sorted descending in the given order.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(Exponents, Rat)> {
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        terms
    }

    pub fn arith(&self, other: &Poly, op: ArithOp) -> Result<Poly> {
        check_ring(&self.ring, &other.ring)?;
        Ok(match op {
            ArithOp::Add => self.add_unchecked(other, false),
            ArithOp::Sub => self.add_unchecked(other, true),
            ArithOp::Mul => self.mul_unchecked(other),
        })
    }

    fn add_unchecked(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = self.clone();
        for (exps, coeff) in &other.terms {
            let coeff = if negate { -coeff } else { coeff.clone() };
            out.add_term(exps.clone(), coeff);
        }
        out
    }

    fn mul_unchecked(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(&self.ring);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(monomial::product(ea, eb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, factor: &Rat) -> Poly {
        if factor.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * factor))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, exps: &[u32], coeff: &Rat) -> Poly {
        if coeff.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (monomial::product(e, exps), c * coeff))
                .collect(),
        }
    }

    pub fn pow(&self, exponent: u32) -> Poly {
        let mut result = Poly::one(&self.ring);
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn partial_derivative(&self, index: usize) -> Result<Poly> {
        if index >= self.ring.num_vars() {
            return Err(Error::IndexOutOfRange {
                index,
                num_vars: self.ring.num_vars(),
            });
        }
        let mut out = Poly::zero(&self.ring);
        for (exps, coeff) in &self.terms {
            if exps[index] == 0 {
                continue;
            }
            let mut e = exps.clone();
            e[index] -= 1;
            out.add_term(e, coeff * Rat::from_integer(exps[index].into()));
        }
        Ok(out)
    }

    /// Replaces variable `i` by `images[i]`; all images share one target ring.
    pub fn substitute(&self, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.ring.num_vars() {
            return Err(Error::LengthMismatch {
                expected: self.ring.num_vars(),
                got: images.len(),
            });
        }
        let Some(target) = images.first().map(|p| p.ring.clone()) else {
            unreachable!("rings have at least one variable")
        };
        for image in images {
            check_ring(&target, &image.ring)?;
        }
        let mut powers: Vec<Vec<Poly>> = images
            .iter()
            .map(|p| vec![Poly::one(&target), p.clone()])
            .collect();
        let mut out = Poly::zero(&target);
        for (exps, coeff) in &self.terms {
            let mut term = Poly::constant(&target, coeff.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &cache[1];
                    cache.push(next);
                }
                term = &term * &cache[e as usize];
            }
            out = out.add_unchecked(&term, false);
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.ring.num_vars() {
            return Err(Error::LengthMismatch {
                expected: self.ring.num_vars(),
                got: point.len(),
            });
        }
        let mut total = Rat::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (x, &e) in point.iter().zip(exps) {
                if e > 0 {
                    term *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// `target` variable `var_map[i]`.
    pub fn embed(&self, target: &Arc<PolyRing>, var_map: &[usize]) -> Poly {
        assert_eq!(var_map.len(), self.ring.num_vars(), "variable map length");
        let mut out = Poly::zero(target);
        for (exps, coeff) in &self.terms {
            let mut e = vec![0; target.num_vars()];
            for (i, &k) in exps.iter().enumerate() {
                e[var_map[i]] += k;
            }
            out.add_term(e, coeff.clone());
        }
        out
    }

    /// Exact quotient by `divisor` if it divides this polynomial.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.is_zero() || !same_ring(&self.ring, &divisor.ring) {
            return None;
        }
        let order = MonomialOrder::DegRevLex;
        let (lead_exps, lead_coeff) = divisor
            .leading_term(order)
            .map(|(e, c)| (e.clone(), c.clone()))?;
        let mut remainder = self.clone();
        let mut quotient = Poly::zero(&self.ring);
        while let Some((exps, coeff)) = remainder
            .leading_term(order)
            .map(|(e, c)| (e.clone(), c.clone()))
        {
            if !monomial::divides(&lead_exps, &exps) {
                return None;
            }
            let q_exps = monomial::quotient(&exps, &lead_exps);
            let q_coeff = coeff / &lead_coeff;
            remainder = remainder.add_unchecked(&divisor.mul_monomial(&q_exps, &q_coeff), true);
            quotient.add_term(q_exps, q_coeff);
        }
        Some(quotient)
    }

    /// Divides by the leading coefficient in the given order.
    pub fn make_monic(&self, order: MonomialOrder) -> Poly {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&(Rat::one() / c)),
            None => self.clone(),
        }
    }

    /// Clears denominators and content so the result has coprime integer
    /// coefficients and a positive leading coefficient (degrevlex).
    pub fn primitive(&self) -> Poly {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm_den = num_bigint::BigInt::one();
        for c in self.terms.values() {
            lcm_den = lcm_den.lcm(c.denom());
        }
        let mut gcd_num = num_bigint::BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&lcm_den / c.denom());
            gcd_num = gcd_num.gcd(&n);
        }
        let mut factor = Rat::new(lcm_den, gcd_num);
        if self
            .leading_term(MonomialOrder::DegRevLex)
            .unwrap()
            .1
            .is_negative()
        {
            factor = -factor;
        }
        self.scale(&factor)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Hash for Poly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring.names.hash(state);
        self.terms.hash(state);
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Canonical text: terms ascending in degrevlex, `c*x^a*y^b` syntax.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| degrevlex_cmp(a.0, b.0));
        for (k, (exps, coeff)) in terms.into_iter().enumerate() {
            let negative = coeff.is_negative();
            let magnitude = coeff.abs();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors = Vec::new();
            let is_unit = magnitude.is_one();
            if !is_unit || exps.iter().all(|e| *e == 0) {
                factors.push(format_rat(&magnitude));
            }
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.names[i].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.names[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.arith(rhs, ArithOp::Add)
            .expect("polynomials from different rings")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.arith(rhs, ArithOp::Sub)
            .expect("polynomials from different rings")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.arith(rhs, ArithOp::Mul)
            .expect("polynomials from different rings")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rat::one())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Exact checked arithmetic, reporting ring mismatches.
pub fn poly_arith(a: &Poly, b: &Poly, op: ArithOp) -> Result<Poly> {
    a.arith(b, op)
}

/// Small helper for tests and fixtures: sum of `(coeff, exps)` terms.
pub fn poly_from(ring: &Arc<PolyRing>, terms: &[(i64, &[u32])]) -> Poly {
    Poly::from_terms(
        ring,
        terms
            .iter()
            .map(|(c, e)| (e.to_vec(), Rat::from_integer((*c).into()))),
    )
}

/// True if every coefficient is an integer.
pub fn has_integer_coefficients(p: &Poly) -> bool {
    p.terms().all(|(_, c)| is_integer(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn xy() -> Arc<PolyRing> {
        PolyRing::new(["x", "y"]).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = xy();
        let x = Poly::var(&r, 0).unwrap();
        let y = Poly::var(&r, 1).unwrap();
        let p = poly_arith(&(&x + &y), &(&x - &y), ArithOp::Mul).unwrap();
        assert_eq!(p, poly_from(&r, &[(1, &[2, 0]), (-1, &[0, 2])]));
    }

    #[test]
    fn additive_identity_and_self_cancellation() {
        let r = xy();
        let f = poly_from(&r, &[(1, &[2, 0]), (-1, &[0, 3])]);
        assert_eq!(poly_arith(&f, &Poly::zero(&r), ArithOp::Add).unwrap(), f);
        assert!(poly_arith(&f, &f, ArithOp::Sub).unwrap().is_zero());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = Poly::one(&xy());
        let b = Poly::one(&PolyRing::new(["u"]).unwrap());
        assert!(matches!(
            poly_arith(&a, &b, ArithOp::Add),
            Err(Error::RingMismatch(_))
        ));
    }

    #[test]
    fn partial_derivatives_of_the_cusp() {
        let r = xy();
        let f = poly_from(&r, &[(1, &[2, 0]), (-1, &[0, 3])]);
        assert_eq!(
            f.partial_derivative(0).unwrap(),
            poly_from(&r, &[(2, &[1, 0])])
        );
        assert_eq!(
            f.partial_derivative(1).unwrap(),
            poly_from(&r, &[(-3, &[0, 2])])
        );
        assert!(Poly::constant(&r, int(7))
            .partial_derivative(0)
            .unwrap()
            .is_zero());
        assert!(matches!(
            f.partial_derivative(2),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn quadric_cone_pulls_back_to_zero() {
        let amb = PolyRing::new(["x", "y", "z"]).unwrap();
        let chart = PolyRing::chart_ring(2).unwrap();
        let f = poly_from(&amb, &[(1, &[1, 1, 0]), (-1, &[0, 0, 2])]);
        let images = vec![
            poly_from(&chart, &[(1, &[1, 0])]),
            poly_from(&chart, &[(1, &[1, 2])]),
            poly_from(&chart, &[(1, &[1, 1])]),
        ];
        assert!(f.substitute(&images).unwrap().is_zero());
    }

    #[test]
    fn identity_and_single_variable_substitution() {
        let r = xy();
        let f = poly_from(&r, &[(3, &[2, 1]), (-1, &[0, 3]), (5, &[0, 0])]);
        let ids = vec![Poly::var(&r, 0).unwrap(), Poly::var(&r, 1).unwrap()];
        assert_eq!(f.substitute(&ids).unwrap(), f);

        let single = PolyRing::new(["x"]).unwrap();
        let x = Poly::var(&single, 0).unwrap();
        let target = PolyRing::new(["y1", "y2"]).unwrap();
        let image = &Poly::var(&target, 0).unwrap() + &Poly::var(&target, 1).unwrap();
        assert_eq!(x.substitute(std::slice::from_ref(&image)).unwrap(), image);
        assert!(matches!(
            x.substitute(&[]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn display_is_ascending_degrevlex() {
        let r = PolyRing::new(["x0", "y0"]).unwrap();
        let f = poly_from(&r, &[(1, &[2, 0]), (-1, &[0, 3])]);
        assert_eq!(f.to_string(), "x0^2 - y0^3");
        let g = Poly::from_terms(
            &r,
            [
                (vec![1, 0], crate::rational::rat(-3, 2)),
                (vec![0, 0], int(1)),
            ],
        );
        assert_eq!(g.to_string(), "1 - 3/2*x0");
        assert_eq!(Poly::zero(&r).to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let r = xy();
        let a = poly_from(&r, &[(1, &[1, 0]), (1, &[0, 1])]);
        let b = poly_from(&r, &[(1, &[1, 0]), (-1, &[0, 1])]);
        let p = &a * &b;
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(a.div_exact(&b), None);
    }

    #[test]
    fn primitive_part_normalizes_content() {
        let r = xy();
        let p = Poly::from_terms(
            &r,
            [
                (vec![1, 0], crate::rational::rat(-2, 3)),
                (vec![0, 0], crate::rational::rat(4, 3)),
            ],
        );
        assert_eq!(p.primitive(), poly_from(&r, &[(1, &[1, 0]), (-2, &[0, 0])]));
    }
}
