use std::fmt;
use std::sync::Arc;

use crate::error::Result;
use crate::poly::{check_ring, Poly, PolyRing};

/// A finitely generated ideal, kept as its generator list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    generators: Vec<Poly>,
}

impl Ideal {
    /// Zero generators are dropped; the remaining ones must share `ring`.
    pub fn new(ring: &Arc<PolyRing>, generators: impl IntoIterator<Item = Poly>) -> Result<Ideal> {
        let mut gens = Vec::new();
        for g in generators {
            check_ring(ring, g.ring())?;
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: gens,
        })
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Ideal {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
        }
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Ideal {
        Ideal {
            ring: ring.clone(),
            generators: vec![Poly::one(ring)],
        }
    }

    pub fn principal(g: Poly) -> Ideal {
        let ring = g.ring().clone();
        Ideal::new(&ring, [g]).expect("single generator shares its own ring")
    }

    /// Ideal generated by the given variables.
    pub fn of_variables(
        ring: &Arc<PolyRing>,
        indices: impl IntoIterator<Item = usize>,
    ) -> Result<Ideal> {
        let gens = indices
            .into_iter()
            .map(|i| Poly::var(ring, i))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// True when no generators survive, i.e. the ideal is (0).
    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// True if some generator is a nonzero constant (sufficient, not necessary, for (1)).
    pub fn has_unit_generator(&self) -> bool {
        self.generators.iter().any(|g| g.is_constant())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        check_ring(&self.ring, &other.ring)?;
        Ideal::new(
            &self.ring,
            self.generators.iter().chain(&other.generators).cloned(),
        )
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        check_ring(&self.ring, &other.ring)?;
        let mut gens = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a * b);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn power(&self, exponent: u32) -> Ideal {
        let mut out = Ideal::unit(&self.ring);
        for _ in 0..exponent {
            out = out.product(self).expect("same ring");
        }
        out
    }

    /// Generators with duplicates (up to scalar multiples) removed, order kept.
    pub fn deduplicated(&self) -> Ideal {
        let mut seen = Vec::new();
        let mut gens = Vec::new();
        for g in &self.generators {
            let key = g.primitive();
            if !seen.contains(&key) {
                seen.push(key);
                gens.push(g.clone());
            }
        }
        Ideal {
            ring: self.ring.clone(),
            generators: gens,
        }
    }

    pub fn pullback(&self, images: &[Poly]) -> Result<Vec<Poly>> {
        self.generators
            .iter()
            .map(|g| g.substitute(images))
            .collect()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly_from;

    #[test]
    fn zero_generators_are_removed() {
        let r = PolyRing::new(["x", "y"]).unwrap();
        let i = Ideal::new(&r, [Poly::zero(&r), Poly::var(&r, 0).unwrap()]).unwrap();
        assert_eq!(i.len(), 1);
        assert!(Ideal::new(&r, [Poly::zero(&r)]).unwrap().is_zero());
    }

    #[test]
    fn powers_and_products() {
        let r = PolyRing::new(["x", "y"]).unwrap();
        let m = Ideal::of_variables(&r, [0, 1]).unwrap();
        let m2 = m.power(2);
        assert_eq!(m2.len(), 4);
        assert!(m2.generators().contains(&poly_from(&r, &[(1, &[1, 1])])));
        assert_eq!(m.power(0), Ideal::unit(&r));
    }
}
