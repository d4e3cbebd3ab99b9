//! Doubly stochastic matrices: lotteries over perfect matchings.

use num_traits::{One, Signed};

use crate::error::Error;
use crate::lottery::Lottery;
use crate::rational::{one, zero, Rational};

/// An n-by-n doubly stochastic rational matrix. Rows index one side of the
/// market (agents), columns the other (items or opposite-side agents).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingLottery {
    n: usize,
    entries: Vec<Rational>,
}

impl MatchingLottery {
    pub fn new(n: usize, entries: Vec<Rational>) -> Result<Self, Error> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::InvalidMatchingLottery {
                reason: format!("expected {n}x{n} entries, got {}", entries.len()),
            });
        }
        let m = Self { n, entries };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<(), Error> {
        for (idx, e) in self.entries.iter().enumerate() {
            if e.is_negative() {
                return Err(Error::InvalidMatchingLottery {
                    reason: format!("negative entry at ({}, {})", idx / self.n, idx % self.n),
                });
            }
        }
        for i in 0..self.n {
            let s: Rational = (0..self.n).map(|g| self.get(i, g).clone()).sum();
            if !s.is_one() {
                return Err(Error::InvalidMatchingLottery {
                    reason: format!("row {i} sums to {s}, not 1"),
                });
            }
        }
        for g in 0..self.n {
            let s: Rational = (0..self.n).map(|i| self.get(i, g).clone()).sum();
            if !s.is_one() {
                return Err(Error::InvalidMatchingLottery {
                    reason: format!("column {g} sums to {s}, not 1"),
                });
            }
        }
        Ok(())
    }

    /// The permutation matrix of `pairing`, where row `i` is matched to
    /// column `pairing[i]`.
    pub fn from_permutation(pairing: &[usize]) -> Self {
        let n = pairing.len();
        let mut entries = vec![zero(); n * n];
        for (i, &g) in pairing.iter().enumerate() {
            entries[i * n + g] = one();
        }
        Self { n, entries }
    }

    /// The uniform doubly stochastic matrix.
    pub fn uniform(n: usize) -> Self {
        let p = Rational::new(1.into(), (n as i64).into());
        Self {
            n,
            entries: vec![p; n * n],
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.n + col]
    }

    /// Row `i` as a lottery over columns.
    pub fn row_lottery(&self, i: usize) -> Lottery {
        Lottery::new(self.entries[i * self.n..(i + 1) * self.n].to_vec())
            .expect("rows of a doubly stochastic matrix are lotteries")
    }

    /// Column `g` as a lottery over rows.
    pub fn col_lottery(&self, g: usize) -> Lottery {
        Lottery::new((0..self.n).map(|i| self.get(i, g).clone()).collect())
            .expect("columns of a doubly stochastic matrix are lotteries")
    }

    /// `true` iff every entry is 0 or 1.
    pub fn is_integral(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.is_one() || *e == zero())
    }
}
