//! The h-quantile representative and lottery comparison.
//!
//! An agent with quantile parameter `h` evaluates a lottery solely through
//! its representative: the least preferred option whose strictly-worse tail
//! carries probability at most `h` (for `h = 1`, the best option in the
//! support). Two lotteries compare exactly as their representatives do.

use num_traits::{One, Signed};

use crate::error::Error;
use crate::lottery::Lottery;
use crate::preference::Preference;
use crate::rational::{one, zero, Rational};

/// A quantile parameter in `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quantile(Rational);

impl Quantile {
    pub fn new(h: Rational) -> Result<Self, Error> {
        if h.is_negative() || h > one() {
            return Err(Error::QuantileOutOfRange { value: h.to_string() });
        }
        Ok(Self(h))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

impl std::fmt::Display for Quantile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::rational::format_rational(&self.0))
    }
}

/// Outcome of comparing two lotteries through one agent's representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LotteryComparison {
    PreferX,
    PreferY,
    Indifferent,
}

/// Outcome of a stochastic-dominance comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SdComparison {
    XDominates,
    YDominates,
    Equal,
    Incomparable,
}

/// The h-quantile representative of `lottery` under `pref`.
///
/// For `h = 1` this is the highest-ranked option with positive probability.
/// For `h < 1` it is the unique option `o` with
/// `sum of strictly worse <= h < sum of weakly worse`.
pub fn representative(lottery: &Lottery, pref: &Preference, h: &Quantile) -> usize {
    assert_eq!(lottery.len(), pref.len(), "lottery/preference size mismatch");
    if h.is_one() {
        for &o in pref.order() {
            if lottery.prob(o).is_positive() {
                return o;
            }
        }
        unreachable!("a lottery has nonempty support");
    }
    // Walk the order from worst to best, accumulating the weakly-worse tail.
    let mut below = zero();
    for &o in pref.order().iter().rev() {
        let cum = &below + lottery.prob(o);
        if below <= *h.value() && *h.value() < cum {
            return o;
        }
        below = cum;
    }
    unreachable!("cumulative sums reach 1 > h, so some option qualifies");
}

/// 1-based rank of the lottery's representative in `pref`.
pub fn representative_rank(lottery: &Lottery, pref: &Preference, h: &Quantile) -> usize {
    pref.rank(representative(lottery, pref, h))
}

/// Compares two lotteries by comparing their representatives.
pub fn compare_lotteries(
    x: &Lottery,
    y: &Lottery,
    pref: &Preference,
    h: &Quantile,
) -> LotteryComparison {
    let rx = representative(x, pref, h);
    let ry = representative(y, pref, h);
    if rx == ry {
        LotteryComparison::Indifferent
    } else if pref.prefers(rx, ry) {
        LotteryComparison::PreferX
    } else {
        LotteryComparison::PreferY
    }
}

/// Cumulative weakly-worse tail sums of `lottery`, one per option, ordered
/// from the worst-ranked option up. The last entry is always 1.
fn tail_sums(lottery: &Lottery, pref: &Preference) -> Vec<Rational> {
    let mut sums = Vec::with_capacity(pref.len());
    let mut acc = zero();
    for &o in pref.order().iter().rev() {
        acc += lottery.prob(o);
        sums.push(acc.clone());
    }
    sums
}

/// Stochastic-dominance comparison: `x` weakly dominates `y` iff every
/// weakly-worse tail of `x` is at most the corresponding tail of `y`.
pub fn sd_compare(x: &Lottery, y: &Lottery, pref: &Preference) -> SdComparison {
    let tx = tail_sums(x, pref);
    let ty = tail_sums(y, pref);
    let mut x_le = true;
    let mut y_le = true;
    let mut all_eq = true;
    for (a, b) in tx.iter().zip(ty.iter()) {
        match a.cmp(b) {
            std::cmp::Ordering::Less => {
                y_le = false;
                all_eq = false;
            }
            std::cmp::Ordering::Greater => {
                x_le = false;
                all_eq = false;
            }
            std::cmp::Ordering::Equal => {}
        }
    }
    if all_eq {
        SdComparison::Equal
    } else if x_le {
        SdComparison::XDominates
    } else if y_le {
        SdComparison::YDominates
    } else {
        SdComparison::Incomparable
    }
}

/// The cumulative tail sums of `lottery`, deduplicated and sorted ascending.
///
/// The representative is constant in `h` between consecutive breakpoints, so
/// a quantifier over all `h` in `[0, 1]` reduces to finitely many probes.
pub fn rep_breakpoints(lottery: &Lottery, pref: &Preference) -> Vec<Rational> {
    let mut sums = tail_sums(lottery, pref);
    sums.sort();
    sums.dedup();
    sums
}

/// Quantile probes covering every representative regime of both lotteries:
/// 0, 1, every merged breakpoint, and the midpoint of each gap.
pub fn quantile_probes(x: &Lottery, y: &Lottery, pref: &Preference) -> Vec<Quantile> {
    let mut points = rep_breakpoints(x, pref);
    points.extend(rep_breakpoints(y, pref));
    points.push(zero());
    points.push(one());
    points.sort();
    points.dedup();
    let mut probes: Vec<Rational> = Vec::with_capacity(2 * points.len());
    for pair in points.windows(2) {
        probes.push(pair[0].clone());
        probes.push((&pair[0] + &pair[1]) / Rational::from_integer(2.into()));
    }
    probes.push(one());
    probes
        .into_iter()
        .map(|r| Quantile::new(r).expect("probes lie in [0, 1]"))
        .collect()
}

/// Checks that stochastic dominance coincides with representative dominance
/// at every quantile: `x` weakly SD-dominates `y` iff the representative of
/// `x` is weakly preferred to that of `y` for every probe `h`.
pub fn sd_equivalence_audit(x: &Lottery, y: &Lottery, pref: &Preference) -> bool {
    let sd_weak = matches!(
        sd_compare(x, y, pref),
        SdComparison::XDominates | SdComparison::Equal
    );
    let rep_weak = quantile_probes(x, y, pref).iter().all(|h| {
        !matches!(
            compare_lotteries(x, y, pref, h),
            LotteryComparison::PreferY
        )
    });
    sd_weak == rep_weak
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn q(n: i64, d: i64) -> Quantile {
        Quantile::new(rat(n, d)).unwrap()
    }

    fn uniform3() -> (Lottery, Preference) {
        (Lottery::uniform(3), Preference::identity(3))
    }

    #[test]
    fn quantile_range_is_enforced() {
        assert!(Quantile::new(rat(13, 12)).is_err());
        assert!(Quantile::new(rat(-1, 12)).is_err());
        assert!(Quantile::new(rat(1, 1)).unwrap().is_one());
    }

    #[test]
    fn representative_of_uniform_over_three() {
        // Preference a > b > c encoded as 0 > 1 > 2.
        let (x, pref) = uniform3();
        assert_eq!(representative(&x, &pref, &q(0, 1)), 2);
        assert_eq!(representative(&x, &pref, &q(1, 1)), 0);
        // 1/3 <= 1/3 < 2/3 picks the middle option.
        assert_eq!(representative(&x, &pref, &q(1, 3)), 1);
    }

    #[test]
    fn representative_ignores_zero_probability_tail() {
        let pref = Preference::identity(3);
        let x = Lottery::new(vec![rat(1, 2), rat(1, 2), rat(0, 1)]).unwrap();
        assert_eq!(representative(&x, &pref, &q(0, 1)), 1);
        assert_eq!(representative(&x, &pref, &q(1, 2)), 0);
        assert_eq!(representative(&x, &pref, &q(1, 1)), 0);
    }

    #[test]
    fn compare_by_representatives() {
        let pref = Preference::identity(2);
        let x = Lottery::deterministic(2, 0);
        let y = Lottery::deterministic(2, 1);
        for h in [q(0, 1), q(1, 2), q(1, 1)] {
            assert_eq!(compare_lotteries(&x, &y, &pref, &h), LotteryComparison::PreferX);
        }
        assert_eq!(
            compare_lotteries(&x, &x, &pref, &q(0, 1)),
            LotteryComparison::Indifferent
        );

        let (u, pref3) = uniform3();
        let det_b = Lottery::deterministic(3, 1);
        // rep(u) = c, rep(det_b) = b at h = 0.
        assert_eq!(
            compare_lotteries(&u, &det_b, &pref3, &q(0, 1)),
            LotteryComparison::PreferY
        );
    }

    #[test]
    fn sd_compare_matches_motivating_example() {
        let (u, pref) = uniform3();
        let det_top = Lottery::deterministic(3, 0);
        let det_b = Lottery::deterministic(3, 1);
        assert_eq!(sd_compare(&det_top, &u, &pref), SdComparison::XDominates);
        assert_eq!(sd_compare(&u, &det_top, &pref), SdComparison::YDominates);
        assert_eq!(sd_compare(&u, &u, &pref), SdComparison::Equal);
        // The uniform lottery vs the sure middle option is the paper's
        // motivating incomparable pair.
        assert_eq!(sd_compare(&u, &det_b, &pref), SdComparison::Incomparable);
    }

    #[test]
    fn breakpoints_of_uniform_and_sparse_lotteries() {
        let (u, pref) = uniform3();
        assert_eq!(rep_breakpoints(&u, &pref), vec![rat(1, 3), rat(2, 3), rat(1, 1)]);

        let det = Lottery::deterministic(3, 1);
        assert_eq!(rep_breakpoints(&det, &pref), vec![rat(0, 1), rat(1, 1)]);

        let x = Lottery::new(vec![rat(1, 2), rat(1, 2), rat(0, 1)]).unwrap();
        assert_eq!(rep_breakpoints(&x, &pref), vec![rat(0, 1), rat(1, 2), rat(1, 1)]);
    }

    #[test]
    fn sd_equivalence_on_fixed_pairs() {
        let (u, pref) = uniform3();
        let det_b = Lottery::deterministic(3, 1);
        assert!(sd_equivalence_audit(&u, &det_b, &pref));
        assert!(sd_equivalence_audit(&det_b, &u, &pref));
        assert!(sd_equivalence_audit(&u, &u, &pref));
        let det_top = Lottery::deterministic(3, 0);
        assert!(sd_equivalence_audit(&det_top, &u, &pref));
        assert!(sd_equivalence_audit(&u, &det_top, &pref));
    }
}
