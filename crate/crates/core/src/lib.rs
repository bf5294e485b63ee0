//! Possible President for party nominations under Copeland^α and Maximin.
//!
//! Parties each nominate one candidate; the question is whether some
//! nomination makes a candidate of the distinguished party the unique winner
//! of the reduced election. The crate has exact solvers (exhaustive, the
//! polynomial few-voter cases, and the parameterized algorithm for Maximin),
//! a solver for partitioned subdigraph isomorphism, the flat-election family,
//! and generators for the hardness reductions.

pub mod cli;
pub mod election;
pub mod error;
pub mod flat;
pub mod io;
pub mod psi;
pub mod reductions;
pub mod solvers;

pub use election::{
    condorcet_winner, copeland_scores, maximin_scores, rule_scores, unique_winner, winners, Alpha,
    CopelandScore, Election, NominationInstance, PairwiseMatrix, Relation, Rule,
};
pub use error::{Error, Result};
