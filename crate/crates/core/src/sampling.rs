//! Generic-point sampling: quantities that are constant on a dense open set
//! are computed at several random integer points and must agree.

use std::fmt::Debug;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rational::{int, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplingConfig {
    /// Parameters are drawn from `[-bound, bound]`.
    pub bound: i64,
    /// Number of independent draws that must agree.
    pub draws: usize,
    pub seed: u64,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        SamplingConfig {
            bound: 1_000_000,
            draws: 3,
            seed: 0x5eed,
        }
    }
}

impl SamplingConfig {
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    pub fn draw(&self, rng: &mut ChaCha8Rng, count: usize) -> Vec<Rat> {
        (0..count)
            .map(|_| int(rng.gen_range(-self.bound..=self.bound)))
            .collect()
    }

    /// Evaluates `f` at `draws` random points of dimension `count` and returns
    /// the common value; disagreement is `SamplingUnstable`.
    pub fn stable<T, F>(&self, count: usize, what: &str, mut f: F) -> Result<T>
    where
        T: PartialEq + Debug,
        F: FnMut(&[Rat]) -> Result<T>,
    {
        let mut rng = self.rng();
        let mut value: Option<T> = None;
        for _ in 0..self.draws.max(1) {
            let params = self.draw(&mut rng, count);
            let v = f(&params)?;
            match &value {
                None => value = Some(v),
                Some(prev) if *prev == v => {}
                Some(prev) => {
                    return Err(Error::SamplingUnstable(format!(
                        "{what}: {prev:?} vs {v:?}"
                    )));
                }
            }
        }
        Ok(value.expect("at least one draw"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn draws_are_reproducible_and_bounded() {
        let cfg = SamplingConfig {
            bound: 10,
            draws: 3,
            seed: 7,
        };
        let a = cfg.draw(&mut cfg.rng(), 50);
        let b = cfg.draw(&mut cfg.rng(), 50);
        assert_eq!(a, b);
        assert!(a.iter().all(|v| v <= &int(10) && v >= &int(-10)));
    }

    #[test]
    fn unstable_quantities_are_rejected() {
        let cfg = SamplingConfig::default();
        let err = cfg
            .stable(1, "sign", |p| Ok(p[0] > Rat::zero()))
            .unwrap_err();
        assert!(matches!(err, Error::SamplingUnstable(_)));
        assert_eq!(cfg.stable(2, "const", |_| Ok(3)).unwrap(), 3);
    }
}
