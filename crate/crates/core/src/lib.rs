//! Randomized social choice under quantile agent utilities.
//!
//! Agents evaluate lotteries through an h-quantile representative instead of
//! expected utility or stochastic dominance. This crate provides the data
//! model and representative computation, an exact rational feasibility
//! engine for lotteries over matchings with representative-rank
//! requirements, randomized voting rules, one-sided matching mechanisms
//! (serial dictatorship and its proportionality-constrained variant),
//! two-sided stable-lottery machinery (deferred acceptance, half-DA,
//! top-choice b-matching, efficient stable lotteries), and exhaustive
//! auditors for efficiency, strategyproofness, monotonicity, stability,
//! proportionality, and envy-freeness.
//!
//! All arithmetic is exact: probabilities and quantile parameters are
//! arbitrary-precision rationals, and every feasibility witness is
//! re-validated against its constraints after each solve.

pub mod cli;
pub mod error;
pub mod feasibility;
pub mod fixtures;
pub mod gen;
pub mod lottery;
pub mod matching;
pub mod one_sided;
pub mod preference;
pub mod quantile;
pub mod rational;
pub mod two_sided;
pub mod voting;

pub use error::Error;
pub use lottery::Lottery;
pub use matching::MatchingLottery;
pub use preference::Preference;
pub use quantile::{
    compare_lotteries, representative, representative_rank, sd_compare, LotteryComparison,
    Quantile, SdComparison,
};
pub use rational::Rational;
