//! Exact probability distributions over a finite option set.

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::rational::{one, zero, Rational};

/// A lottery over options `0..m`: nonnegative rationals summing to exactly 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lottery {
    probs: Vec<Rational>,
}

impl Lottery {
    pub fn new(probs: Vec<Rational>) -> Result<Self, Error> {
        if probs.is_empty() {
            return Err(Error::InvalidLottery {
                reason: "no options".to_string(),
            });
        }
        let mut total = zero();
        for (o, p) in probs.iter().enumerate() {
            if p.is_negative() {
                return Err(Error::InvalidLottery {
                    reason: format!("negative probability at option {o}"),
                });
            }
            total += p;
        }
        if !total.is_one() {
            return Err(Error::InvalidLottery {
                reason: format!("probabilities sum to {total}, not 1"),
            });
        }
        Ok(Self { probs })
    }

    /// The lottery putting probability 1 on `option`.
    pub fn deterministic(m: usize, option: usize) -> Self {
        let mut probs = vec![zero(); m];
        probs[option] = one();
        Self { probs }
    }

    /// The uniform lottery over `m` options.
    pub fn uniform(m: usize) -> Self {
        assert!(m > 0);
        let p = Rational::new(1.into(), (m as i64).into());
        Self {
            probs: vec![p; m],
        }
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn prob(&self, option: usize) -> &Rational {
        &self.probs[option]
    }

    pub fn probs(&self) -> &[Rational] {
        &self.probs
    }

    /// Options with positive probability.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.probs
            .iter()
            .enumerate()
            .filter(|(_, p)| p.is_positive())
            .map(|(o, _)| o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn validates_sum_and_sign() {
        assert!(Lottery::new(vec![rat(1, 2), rat(1, 2)]).is_ok());
        assert!(Lottery::new(vec![rat(1, 2), rat(1, 3)]).is_err());
        assert!(Lottery::new(vec![rat(3, 2), rat(-1, 2)]).is_err());
        assert!(Lottery::new(vec![]).is_err());
    }

    #[test]
    fn constructors() {
        let d = Lottery::deterministic(3, 1);
        assert_eq!(d.prob(1), &rat(1, 1));
        assert_eq!(d.support().collect::<Vec<_>>(), vec![1]);
        let u = Lottery::uniform(4);
        assert_eq!(u.prob(3), &rat(1, 4));
    }
}
