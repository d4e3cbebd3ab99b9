//! Strict total orders over a finite option set.
//!
//! Options are dense indices `0..m`; external names are mapped at the I/O
//! boundary. Ranks are 1-based: the most preferred option has rank 1.

use crate::error::Error;

/// A strict preference order over options `0..m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Preference {
    order: Vec<usize>,
    rank_of: Vec<usize>,
}

impl Preference {
    /// Builds a preference from the option sequence `order`, most preferred
    /// first. `order` must be a permutation of `0..order.len()`.
    pub fn new(order: Vec<usize>) -> Result<Self, Error> {
        let m = order.len();
        if m == 0 {
            return Err(Error::EmptyPreference);
        }
        let mut rank_of = vec![usize::MAX; m];
        for (pos, &opt) in order.iter().enumerate() {
            if opt >= m {
                return Err(Error::NotAPermutation {
                    reason: format!("option {opt} out of range 0..{m}"),
                });
            }
            if rank_of[opt] != usize::MAX {
                return Err(Error::NotAPermutation {
                    reason: format!("option {opt} repeated"),
                });
            }
            rank_of[opt] = pos + 1;
        }
        Ok(Self { order, rank_of })
    }

    /// Number of options.
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Options from most to least preferred.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// 1-based rank of `option`; rank 1 is the most preferred.
    pub fn rank(&self, option: usize) -> usize {
        self.rank_of[option]
    }

    /// The option at 1-based `rank`.
    pub fn option_at_rank(&self, rank: usize) -> usize {
        self.order[rank - 1]
    }

    /// The most preferred option.
    pub fn top(&self) -> usize {
        self.order[0]
    }

    /// `true` iff `a` is strictly preferred to `b`.
    pub fn prefers(&self, a: usize, b: usize) -> bool {
        self.rank_of[a] < self.rank_of[b]
    }

    /// The top `r` options (the rank prefix `{o : rank(o) <= r}`).
    pub fn top_prefix(&self, r: usize) -> &[usize] {
        &self.order[..r]
    }

    /// Identity preference `0 > 1 > ... > m-1`.
    pub fn identity(m: usize) -> Self {
        Self::new((0..m).collect()).expect("identity order is a permutation")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_are_one_based() {
        let p = Preference::new(vec![2, 0, 1]).unwrap();
        assert_eq!(p.rank(2), 1);
        assert_eq!(p.rank(0), 2);
        assert_eq!(p.rank(1), 3);
        assert_eq!(p.top(), 2);
        assert_eq!(p.option_at_rank(3), 1);
        assert!(p.prefers(2, 1));
        assert!(!p.prefers(1, 0));
        assert_eq!(p.top_prefix(2), &[2, 0]);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Preference::new(vec![]).is_err());
        assert!(Preference::new(vec![0, 0]).is_err());
        assert!(Preference::new(vec![0, 2]).is_err());
    }
}
