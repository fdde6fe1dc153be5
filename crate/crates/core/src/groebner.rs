//! A small Buchberger engine: reduced bases, normal forms, membership,
//! intersections, colon ideals, elimination and Krull dimension.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::{self, Exponents, MonomialOrder};
use crate::poly::{check_ring, Poly, PolyRing};
use crate::rational::Rat;

/// Safeguards against runaway computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerLimits {
    /// Largest total degree allowed for a new basis element.
    pub max_degree: u32,
    /// Largest number of pending S-pairs.
    pub max_pairs: usize,
}

impl Default for GroebnerLimits {
    fn default() -> Self {
        GroebnerLimits {
            max_degree: 40,
            max_pairs: 100_000,
        }
    }
}

/// Terms sorted descending in a fixed order.
#[derive(Debug, Clone)]
struct Sorted {
    terms: Vec<(Exponents, Rat)>,
}

impl Sorted {
    fn from_poly(p: &Poly, order: MonomialOrder) -> Sorted {
        Sorted {
            terms: p.sorted_terms(order),
        }
    }

    fn to_poly(&self, ring: &Arc<PolyRing>) -> Poly {
        Poly::from_terms(ring, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Exponents {
        &self.terms[0].0
    }

    fn make_monic(&mut self) {
        let inv = Rat::one() / &self.terms[0].1;
        for (_, c) in &mut self.terms {
            *c *= &inv;
        }
    }

    /// `self - coeff * x^shift * other`, both descending in `order`.
    fn sub_scaled(
        &self,
        coeff: &Rat,
        shift: &[u32],
        other: &Sorted,
        order: MonomialOrder,
    ) -> Sorted {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(e, c)| (monomial::product(e, shift), -(c * coeff)))
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match order.cmp(&x.0, &y.0) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (e, c1) = a.next().unwrap().clone();
                        let (_, c2) = b.next().unwrap();
                        let c = c1 + c2;
                        if !c.is_zero() {
                            out.push((e, c));
                        }
                    }
                },
            }
        }
        Sorted { terms: out }
    }
}

fn reduce_full(f: &Sorted, basis: &[Sorted], order: MonomialOrder) -> Sorted {
    let mut p = f.clone();
    let mut remainder = Vec::new();
    while !p.is_zero() {
        let (lead_exps, lead_coeff) = p.terms[0].clone();
        match basis.iter().find(|g| monomial::divides(g.lm(), &lead_exps)) {
            Some(g) => {
                let shift = monomial::quotient(&lead_exps, g.lm());
                let coeff = &lead_coeff / &g.terms[0].1;
                p = p.sub_scaled(&coeff, &shift, g, order);
            }
            None => {
                remainder.push((lead_exps, lead_coeff));
                p.terms.remove(0);
            }
        }
    }
    Sorted { terms: remainder }
}

/// A reduced Gröbner basis together with the ideal and order it was built for.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ideal: Ideal,
    order: MonomialOrder,
    basis: Vec<Poly>,
    sorted: Vec<Sorted>,
}

impl GroebnerBasis {
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Monic basis elements, ascending by leading monomial.
    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.ideal.ring()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Exponents> {
        self.sorted.iter().map(|s| s.lm().clone()).collect()
    }

    /// Remainder of multivariate division; zero iff `f` lies in the ideal.
    pub fn normal_form(&self, f: &Poly) -> Result<Poly> {
        check_ring(self.ring(), f.ring())?;
        let reduced = reduce_full(&Sorted::from_poly(f, self.order), &self.sorted, self.order);
        Ok(reduced.to_poly(self.ring()))
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal::new(self.ring(), self.basis.iter().cloned()).expect("basis shares the ring")
    }
}

/// Gröbner computations under a fixed set of resource limits.
#[derive(Debug, Clone, Copy, Default)]
pub struct GroebnerEngine {
    pub limits: GroebnerLimits,
}

impl GroebnerEngine {
    pub fn new(limits: GroebnerLimits) -> GroebnerEngine {
        GroebnerEngine { limits }
    }

    pub fn basis(&self, ideal: &Ideal, order: MonomialOrder) -> Result<GroebnerBasis> {
        let ring = ideal.ring().clone();
        if let MonomialOrder::Elimination { split } = order {
            if split >= ring.num_vars() {
                return Err(Error::Precondition(format!(
                    "elimination split {split} must be below the number of variables {}",
                    ring.num_vars()
                )));
            }
        }
        let sorted = self.buchberger(ideal, order)?;
        let basis = sorted.iter().map(|s| s.to_poly(&ring)).collect();
        Ok(GroebnerBasis {
            ideal: ideal.clone(),
            order,
            basis,
            sorted,
        })
    }

    fn buchberger(&self, ideal: &Ideal, order: MonomialOrder) -> Result<Vec<Sorted>> {
        let mut basis: Vec<Sorted> = Vec::new();
        for g in ideal.generators() {
            let mut s = Sorted::from_poly(g, order);
            s.make_monic();
            if monomial::total_degree(s.lm()) == 0 {
                return Ok(vec![s]);
            }
            basis.push(s);
        }
        let mut pending: Vec<(usize, usize)> = Vec::new();
        let mut pending_set: HashSet<(usize, usize)> = HashSet::new();
        for j in 0..basis.len() {
            for i in 0..j {
                pending.push((i, j));
                pending_set.insert((i, j));
            }
        }
        let key = |i: usize, j: usize| if i < j { (i, j) } else { (j, i) };

        while !pending.is_empty() {
            if pending.len() > self.limits.max_pairs {
                return Err(Error::ResourceLimit {
                    limit: "max S-pair queue",
                    max: self.limits.max_pairs,
                    reached: pending.len(),
                });
            }
            // Normal selection strategy: smallest lcm, ties by pair index.
            let pick = (0..pending.len())
                .min_by(|&a, &b| {
                    let (ia, ja) = pending[a];
                    let (ib, jb) = pending[b];
                    let la = monomial::lcm(basis[ia].lm(), basis[ja].lm());
                    let lb = monomial::lcm(basis[ib].lm(), basis[jb].lm());
                    order.cmp(&la, &lb).then((ja, ia).cmp(&(jb, ib)))
                })
                .unwrap();
            let (i, j) = pending.swap_remove(pick);
            pending_set.remove(&(i, j));

            let (lm_i, lm_j) = (basis[i].lm().clone(), basis[j].lm().clone());
            if monomial::coprime(&lm_i, &lm_j) {
                continue;
            }
            let lcm = monomial::lcm(&lm_i, &lm_j);
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && monomial::divides(basis[k].lm(), &lcm)
                    && !pending_set.contains(&key(i, k))
                    && !pending_set.contains(&key(j, k))
            });
            if chain {
                continue;
            }
            let left = Sorted { terms: Vec::new() }.sub_scaled(
                &-Rat::one(),
                &monomial::quotient(&lcm, &lm_i),
                &basis[i],
                order,
            );
            let s = left.sub_scaled(
                &Rat::one(),
                &monomial::quotient(&lcm, &lm_j),
                &basis[j],
                order,
            );
            let mut h = reduce_full(&s, &basis, order);
            if h.is_zero() {
                continue;
            }
            h.make_monic();
            let degree = h
                .terms
                .iter()
                .map(|(e, _)| monomial::total_degree(e))
                .max()
                .unwrap_or(0);
            if degree > self.limits.max_degree {
                return Err(Error::ResourceLimit {
                    limit: "max total degree",
                    max: self.limits.max_degree as usize,
                    reached: degree as usize,
                });
            }
            if monomial::total_degree(h.lm()) == 0 {
                return Ok(vec![h]);
            }
            let new = basis.len();
            basis.push(h);
            for k in 0..new {
                pending.push((k, new));
                pending_set.insert((k, new));
            }
        }
        Ok(interreduce(basis, order))
    }

    pub fn member(&self, f: &Poly, ideal: &Ideal) -> Result<bool> {
        check_ring(ideal.ring(), f.ring())?;
        if f.is_zero() {
            return Ok(true);
        }
        self.basis(ideal, MonomialOrder::DegRevLex)?.contains(f)
    }

    /// True if every generator of `sub` lies in `sup`.
    pub fn ideal_contains(&self, sup: &Ideal, sub: &Ideal) -> Result<bool> {
        let gb = self.basis(sup, MonomialOrder::DegRevLex)?;
        for g in sub.generators() {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Eliminates the first `count` variables of the ideal's ring and returns
    /// the elimination ideal in `target`, whose variables are the remaining ones.
    pub fn eliminate_front(
        &self,
        ideal: &Ideal,
        count: usize,
        target: &Arc<PolyRing>,
    ) -> Result<Ideal> {
        let gb = self.basis(ideal, MonomialOrder::Elimination { split: count })?;
        let gens = gb
            .basis()
            .iter()
            .filter(|p| (0..count).all(|i| !p.uses_var(i)))
            .map(|p| drop_front_vars(p, count, target));
        Ideal::new(target, gens)
    }

    pub fn intersection(&self, a: &Ideal, b: &Ideal) -> Result<Ideal> {
        check_ring(a.ring(), b.ring())?;
        let ring = a.ring();
        if a.is_zero() || b.is_zero() {
            return Ok(Ideal::zero(ring));
        }
        let ext = extend_front(ring, &["__tag"])?;
        let map: Vec<usize> = (1..=ring.num_vars()).collect();
        let t = Poly::var(&ext, 0)?;
        let one_minus_t = &Poly::one(&ext) - &t;
        let gens = a
            .generators()
            .iter()
            .map(|f| &t * &f.embed(&ext, &map))
            .chain(
                b.generators()
                    .iter()
                    .map(|g| &one_minus_t * &g.embed(&ext, &map)),
            );
        let tagged = Ideal::new(&ext, gens)?;
        self.eliminate_front(&tagged, 1, ring)
    }

    /// `(I : g)` for a single polynomial.
    pub fn colon_poly(&self, ideal: &Ideal, g: &Poly) -> Result<Ideal> {
        check_ring(ideal.ring(), g.ring())?;
        if g.is_zero() {
            return Err(Error::ColonByZero);
        }
        if g.is_constant() {
            return Ok(ideal.clone());
        }
        let meet = self.intersection(ideal, &Ideal::principal(g.clone()))?;
        let gens = meet
            .generators()
            .iter()
            .map(|h| {
                h.div_exact(g)
                    .expect("elements of I ∩ (g) are multiples of g")
            })
            .collect::<Vec<_>>();
        Ideal::new(ideal.ring(), gens)
    }

    /// `(I : J)`, returned as a reduced degrevlex basis.
    pub fn colon(&self, ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
        check_ring(ideal.ring(), by.ring())?;
        if by.is_zero() {
            return Err(Error::ColonByZero);
        }
        let mut acc: Option<Ideal> = None;
        for g in by.generators() {
            let part = self.colon_poly(ideal, g)?;
            acc = Some(match acc {
                None => part,
                Some(prev) => self.intersection(&prev, &part)?,
            });
        }
        let acc = acc.expect("nonzero ideal has a generator");
        Ok(self.basis(&acc, MonomialOrder::DegRevLex)?.to_ideal())
    }

    /// `(I_V : I_X) + I_X` after checking `I_V ⊆ I_X`; reduced degrevlex basis.
    pub fn lci_defect(&self, ix: &Ideal, iv: &Ideal) -> Result<Ideal> {
        check_ring(ix.ring(), iv.ring())?;
        let gb = self.basis(ix, MonomialOrder::DegRevLex)?;
        for g in iv.generators() {
            if !gb.contains(g)? {
                return Err(Error::NotContained(g.to_string()));
            }
        }
        let colon = self.colon(iv, ix)?;
        let sum = colon.sum(ix)?;
        Ok(self.basis(&sum, MonomialOrder::DegRevLex)?.to_ideal())
    }

    /// Krull dimension of `V(I)`; the empty variety has dimension -1.
    pub fn dimension(&self, ideal: &Ideal) -> Result<i64> {
        let n = ideal.ring().num_vars();
        if ideal.is_zero() {
            return Ok(n as i64);
        }
        let gb = self.basis(ideal, MonomialOrder::DegRevLex)?;
        if gb.is_unit() {
            return Ok(-1);
        }
        let supports: Vec<Vec<usize>> = gb
            .leading_monomials()
            .iter()
            .map(|e| (0..n).filter(|&i| e[i] > 0).collect())
            .collect();
        let mut chosen = vec![false; n];
        let mut best = 0;
        max_independent(&supports, &mut chosen, 0, 0, &mut best);
        Ok(best as i64)
    }

    /// Rabinowitsch trick: `f ∈ √I` iff `1 ∈ I + (1 - z f)`.
    pub fn radical_member(&self, f: &Poly, ideal: &Ideal) -> Result<bool> {
        check_ring(ideal.ring(), f.ring())?;
        let ring = ideal.ring();
        let ext = extend_front(ring, &["__rab"])?;
        let map: Vec<usize> = (1..=ring.num_vars()).collect();
        let z = Poly::var(&ext, 0)?;
        let extra = &Poly::one(&ext) - &(&z * &f.embed(&ext, &map));
        let gens = ideal
            .generators()
            .iter()
            .map(|g| g.embed(&ext, &map))
            .chain(std::iter::once(extra));
        let gb = self.basis(&Ideal::new(&ext, gens)?, MonomialOrder::DegRevLex)?;
        Ok(gb.is_unit())
    }
}

fn interreduce(mut basis: Vec<Sorted>, order: MonomialOrder) -> Vec<Sorted> {
    // Minimal basis: drop elements whose leading monomial is divisible by another's.
    basis.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    let mut minimal: Vec<Sorted> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|m| monomial::divides(m.lm(), g.lm())) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Sorted> = minimal
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, s)| s.clone())
            .collect();
        let head = Sorted {
            terms: vec![minimal[k].terms[0].clone()],
        };
        let tail = Sorted {
            terms: minimal[k].terms[1..].to_vec(),
        };
        let tail = reduce_full(&tail, &others, order);
        let mut terms = head.terms;
        terms.extend(tail.terms);
        reduced.push(Sorted { terms });
    }
    reduced
}

fn max_independent(
    supports: &[Vec<usize>],
    chosen: &mut [bool],
    next: usize,
    size: usize,
    best: &mut usize,
) {
    let n = chosen.len();
    if size > *best {
        *best = size;
    }
    if next == n || size + (n - next) <= *best {
        return;
    }
    chosen[next] = true;
    let ok = supports.iter().all(|s| !s.iter().all(|&i| chosen[i]));
    if ok {
        max_independent(supports, chosen, next + 1, size + 1, best);
    }
    chosen[next] = false;
    max_independent(supports, chosen, next + 1, size, best);
}

/// Ring with `extra` variables placed before the existing ones.
pub(crate) fn extend_front(ring: &Arc<PolyRing>, extra: &[&str]) -> Result<Arc<PolyRing>> {
    let names = extra
        .iter()
        .map(|s| s.to_string())
        .chain(ring.names().iter().cloned());
    PolyRing::new(names)
}

pub(crate) fn drop_front_vars(p: &Poly, count: usize, target: &Arc<PolyRing>) -> Poly {
    Poly::from_terms(
        target,
        p.terms().map(|(e, c)| {
            debug_assert!(e[..count].iter().all(|x| *x == 0));
            (e[count..].to_vec(), c.clone())
        }),
    )
}

pub fn buchberger(ideal: &Ideal, order: MonomialOrder) -> Result<GroebnerBasis> {
    GroebnerEngine::default().basis(ideal, order)
}

pub fn normal_form(f: &Poly, basis: &GroebnerBasis) -> Result<Poly> {
    basis.normal_form(f)
}

pub fn ideal_member(f: &Poly, ideal: &Ideal) -> Result<bool> {
    GroebnerEngine::default().member(f, ideal)
}

pub fn ideal_intersection(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    GroebnerEngine::default().intersection(a, b)
}

pub fn colon_ideal(ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
    GroebnerEngine::default().colon(ideal, by)
}

pub fn lci_defect(ix: &Ideal, iv: &Ideal) -> Result<Ideal> {
    GroebnerEngine::default().lci_defect(ix, iv)
}

pub fn ideal_dimension(ideal: &Ideal) -> Result<i64> {
    GroebnerEngine::default().dimension(ideal)
}

pub fn radical_member(f: &Poly, ideal: &Ideal) -> Result<bool> {
    GroebnerEngine::default().radical_member(f, ideal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly_from;

    fn ring(names: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(names.iter().copied()).unwrap()
    }

    fn twisted_cubic_cone(r: &Arc<PolyRing>) -> Ideal {
        Ideal::new(
            r,
            [
                poly_from(r, &[(1, &[1, 0, 1, 0]), (-1, &[0, 2, 0, 0])]),
                poly_from(r, &[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1, 0])]),
                poly_from(r, &[(1, &[0, 1, 0, 1]), (-1, &[0, 0, 2, 0])]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn twisted_cubic_elimination() {
        let r = ring(&["x", "y", "z"]);
        let i = Ideal::new(
            &r,
            [
                poly_from(&r, &[(1, &[2, 0, 0]), (-1, &[0, 1, 0])]),
                poly_from(&r, &[(1, &[3, 0, 0]), (-1, &[0, 0, 1])]),
            ],
        )
        .unwrap();
        let gb = buchberger(&i, MonomialOrder::Lex).unwrap();
        let target = poly_from(&r, &[(1, &[0, 3, 0]), (-1, &[0, 0, 2])]);
        assert!(gb.basis().iter().any(|g| g == &target || g == &-&target));
        assert!(ideal_member(&target, &i).unwrap());
    }

    #[test]
    fn trivial_bases() {
        let r = ring(&["x", "y"]);
        let gb = buchberger(&Ideal::unit(&r), MonomialOrder::DegRevLex).unwrap();
        assert!(gb.is_unit());
        let m = Ideal::of_variables(&r, [0, 1]).unwrap();
        let gb = buchberger(&m, MonomialOrder::DegRevLex).unwrap();
        assert_eq!(
            gb.basis(),
            &[Poly::var(&r, 1).unwrap(), Poly::var(&r, 0).unwrap()]
        );
    }

    #[test]
    fn normal_forms() {
        let r = ring(&["x", "y"]);
        let cusp = Ideal::principal(poly_from(&r, &[(1, &[2, 0]), (-1, &[0, 3])]));
        let gb = buchberger(&cusp, MonomialOrder::DegRevLex).unwrap();
        // Under degrevlex the leading term is y^3, so x^2 is already reduced;
        // under lex x^2 is leading and reduces to y^3.
        let lex = buchberger(&cusp, MonomialOrder::Lex).unwrap();
        let x2 = poly_from(&r, &[(1, &[2, 0])]);
        assert_eq!(
            normal_form(&x2, &lex).unwrap(),
            poly_from(&r, &[(1, &[0, 3])])
        );
        assert_eq!(normal_form(&x2, &gb).unwrap(), x2);
        assert!(normal_form(&Poly::zero(&r), &gb).unwrap().is_zero());
        let unit = buchberger(&Ideal::unit(&r), MonomialOrder::DegRevLex).unwrap();
        assert!(normal_form(&x2, &unit).unwrap().is_zero());
    }

    #[test]
    fn membership() {
        let r = ring(&["x", "y"]);
        let x = Ideal::principal(Poly::var(&r, 0).unwrap());
        assert!(ideal_member(&poly_from(&r, &[(1, &[1, 1])]), &x).unwrap());
        let i = Ideal::new(
            &r,
            [poly_from(&r, &[(1, &[2, 0])]), Poly::var(&r, 1).unwrap()],
        )
        .unwrap();
        assert!(!ideal_member(&Poly::var(&r, 0).unwrap(), &i).unwrap());
    }

    #[test]
    fn intersections() {
        let r = ring(&["x", "y", "z"]);
        let x = Poly::var(&r, 0).unwrap();
        let y = Poly::var(&r, 1).unwrap();
        let z = Poly::var(&r, 2).unwrap();
        let meet =
            ideal_intersection(&Ideal::principal(x.clone()), &Ideal::principal(y.clone())).unwrap();
        assert_eq!(meet.generators(), &[&x * &y]);
        let meet =
            ideal_intersection(&Ideal::principal(&x * &x), &Ideal::principal(x.clone())).unwrap();
        assert_eq!(meet.generators(), &[&x * &x]);
        let a = Ideal::new(&r, [x.clone(), y.clone()]).unwrap();
        let b = Ideal::new(&r, [x.clone(), z.clone()]).unwrap();
        let meet = ideal_intersection(&a, &b).unwrap();
        let expected = Ideal::new(&r, [x.clone(), &y * &z]).unwrap();
        let gb = buchberger(&meet, MonomialOrder::DegRevLex).unwrap();
        assert_eq!(
            gb.basis(),
            buchberger(&expected, MonomialOrder::DegRevLex)
                .unwrap()
                .basis()
        );
    }

    #[test]
    fn colons() {
        let r = ring(&["x", "y"]);
        let x = Poly::var(&r, 0).unwrap();
        let y = Poly::var(&r, 1).unwrap();
        let c = colon_ideal(&Ideal::principal(&x * &x), &Ideal::principal(x.clone())).unwrap();
        assert_eq!(c.generators(), std::slice::from_ref(&x));
        let c = colon_ideal(&Ideal::principal(&x * &y), &Ideal::principal(x.clone())).unwrap();
        assert_eq!(c.generators(), std::slice::from_ref(&y));
        assert_eq!(
            colon_ideal(&Ideal::principal(x.clone()), &Ideal::zero(&r)),
            Err(Error::ColonByZero)
        );
    }

    #[test]
    fn residual_of_the_twisted_cubic_cone() {
        let r = ring(&["x0", "x1", "x2", "x3"]);
        let ix = twisted_cubic_cone(&r);
        let iv = Ideal::new(&r, [ix.generators()[0].clone(), ix.generators()[2].clone()]).unwrap();
        let colon = colon_ideal(&iv, &ix).unwrap();
        // V = X ∪ {x1 = x2 = 0}, so the residual ideal is (x1, x2).
        assert_eq!(
            colon.generators(),
            &[Poly::var(&r, 2).unwrap(), Poly::var(&r, 1).unwrap()]
        );
        for c in colon.generators() {
            for g in ix.generators() {
                assert!(ideal_member(&(c * g), &iv).unwrap());
            }
        }
    }

    #[test]
    fn lci_defects() {
        let r = ring(&["x0", "x1", "x2", "x3"]);
        let ix = twisted_cubic_cone(&r);
        assert_eq!(lci_defect(&ix, &ix).unwrap(), Ideal::unit(&r));
        let iv = Ideal::new(&r, [ix.generators()[0].clone(), ix.generators()[2].clone()]).unwrap();
        let d = lci_defect(&ix, &iv).unwrap();
        assert!(GroebnerEngine::default().ideal_contains(&d, &ix).unwrap());
        assert!(!GroebnerEngine::default().ideal_contains(&ix, &d).unwrap());
        // Zero locus is X ∩ {x1 = x2 = 0}: the x0- and x3-axes.
        assert!(ideal_member(&Poly::var(&r, 1).unwrap(), &d).unwrap());
        assert!(ideal_member(&poly_from(&r, &[(1, &[1, 0, 0, 1])]), &d).unwrap());
        assert!(!radical_member(&Poly::var(&r, 0).unwrap(), &d).unwrap());
        assert_eq!(ideal_dimension(&d).unwrap(), 1);

        let wrong = Ideal::principal(Poly::var(&r, 0).unwrap());
        assert!(matches!(
            lci_defect(&ix, &wrong),
            Err(Error::NotContained(_))
        ));
    }

    #[test]
    fn dimensions() {
        let r3 = ring(&["x", "y", "z"]);
        let cone = Ideal::principal(poly_from(&r3, &[(1, &[1, 1, 0]), (-1, &[0, 0, 2])]));
        assert_eq!(ideal_dimension(&cone).unwrap(), 2);
        assert_eq!(ideal_dimension(&Ideal::unit(&r3)).unwrap(), -1);
        assert_eq!(ideal_dimension(&Ideal::zero(&r3)).unwrap(), 3);
        let r4 = ring(&["x0", "x1", "x2", "x3"]);
        assert_eq!(ideal_dimension(&twisted_cubic_cone(&r4)).unwrap(), 2);
    }

    #[test]
    fn radical_membership() {
        let r = ring(&["x", "y"]);
        let i = Ideal::new(
            &r,
            [
                poly_from(&r, &[(1, &[3, 0])]),
                poly_from(&r, &[(1, &[0, 2])]),
            ],
        )
        .unwrap();
        assert!(radical_member(&Poly::var(&r, 0).unwrap(), &i).unwrap());
        assert!(!ideal_member(&Poly::var(&r, 0).unwrap(), &i).unwrap());
        assert!(!radical_member(&poly_from(&r, &[(1, &[0, 0]), (1, &[1, 0])]), &i).unwrap());
    }

    #[test]
    fn resource_limits_are_reported() {
        let r = ring(&["x", "y", "z"]);
        let i = Ideal::new(
            &r,
            [
                poly_from(&r, &[(1, &[2, 0, 0]), (-1, &[0, 1, 0])]),
                poly_from(&r, &[(1, &[3, 0, 0]), (-1, &[0, 0, 1])]),
            ],
        )
        .unwrap();
        let engine = GroebnerEngine::new(GroebnerLimits {
            max_degree: 2,
            max_pairs: 100,
        });
        let err = engine.basis(&i, MonomialOrder::Lex).unwrap_err();
        assert!(matches!(
            err,
            Error::ResourceLimit {
                limit: "max total degree",
                ..
            }
        ));
    }

    #[test]
    fn elimination_split_must_be_in_range() {
        let r = ring(&["x", "y"]);
        let i = Ideal::principal(Poly::var(&r, 0).unwrap());
        assert!(buchberger(&i, MonomialOrder::Elimination { split: 2 }).is_err());
    }
}
