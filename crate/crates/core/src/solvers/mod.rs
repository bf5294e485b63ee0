//! Exact decision procedures for Possible President.
//!
//! Every solver returns a [`SolveResult`]; a `yes` always carries a complete
//! nomination (one candidate index per party, in party order) that makes the
//! distinguished party's nominee the unique winner.

mod bruteforce;
mod fpt;
mod poly;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::election::{unique_winner, NominationInstance, Rule};
use crate::error::{Error, Result};

pub use bruteforce::solve_bruteforce;
pub use fpt::solve_maximin_fpt;
pub use poly::{solve_llull_two_voters, solve_maximin_three_voters, solve_maximin_two_voters};

/// Limits and switches shared by the solvers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest number of complete nominations the exhaustive solver accepts.
    pub max_combinations: u128,
    /// Largest party count the Maximin parameterized solver accepts.
    pub max_fpt_parties: usize,
    /// Run the exhaustive solver even above `max_combinations`.
    pub force: bool,
    /// Report the witness of the first successful branch in branch order.
    /// When off, any verified witness may be reported.
    pub deterministic: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_combinations: 1 << 24,
            max_fpt_parties: 8,
            force: false,
            deterministic: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Yes,
    No,
}

/// Which solver produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    BruteForce,
    Llull2v,
    Maximin2v,
    Maximin3v,
    MaximinFpt,
}

impl Algorithm {
    pub fn tag(self) -> &'static str {
        match self {
            Algorithm::BruteForce => "bruteforce",
            Algorithm::Llull2v => "llull-2v",
            Algorithm::Maximin2v => "maximin-2v",
            Algorithm::Maximin3v => "maximin-3v",
            Algorithm::MaximinFpt => "maximin-fpt",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "bruteforce" | "brute" => Algorithm::BruteForce,
            "llull-2v" | "llull2v" => Algorithm::Llull2v,
            "maximin-2v" | "maximin2v" => Algorithm::Maximin2v,
            "maximin-3v" | "maximin3v" => Algorithm::Maximin3v,
            "maximin-fpt" | "fpt" => Algorithm::MaximinFpt,
            other => return Err(Error::parse("algorithm", format!("unknown algorithm {other:?}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub decision: Decision,
    /// One candidate index per party, present iff the decision is yes.
    pub witness: Option<Vec<usize>>,
    pub algorithm: Algorithm,
}

impl SolveResult {
    pub(crate) fn yes(witness: Vec<usize>, algorithm: Algorithm) -> Self {
        SolveResult {
            decision: Decision::Yes,
            witness: Some(witness),
            algorithm,
        }
    }

    pub(crate) fn no(algorithm: Algorithm) -> Self {
        SolveResult {
            decision: Decision::No,
            witness: None,
            algorithm,
        }
    }

    pub fn is_yes(&self) -> bool {
        self.decision == Decision::Yes
    }
}

/// True iff `candidate` belongs to the distinguished party, is its nominee in
/// `witness`, and is the unique winner of the reduced election.
/// Errors when `witness` is not a complete nomination.
pub fn verify_witness(inst: &NominationInstance, rule: Rule, candidate: usize, witness: &[usize]) -> Result<bool> {
    inst.check_nomination(witness)?;
    let d = inst.distinguished();
    if witness[d] != candidate {
        return Ok(false);
    }
    let reduced = inst.reduce(witness)?;
    let winner = unique_winner(&reduced, rule);
    Ok(winner.map(|w| reduced.name(w)) == Some(inst.election().name(candidate)))
}

/// [`verify_witness`] for the witness's own distinguished nominee.
pub fn verify_nomination(inst: &NominationInstance, rule: Rule, witness: &[usize]) -> Result<bool> {
    inst.check_nomination(witness)?;
    verify_witness(inst, rule, witness[inst.distinguished()], witness)
}

/// The solver [`dispatch`] would pick, or a budget error when none applies.
pub fn choose_algorithm(inst: &NominationInstance, rule: Rule, config: &SolverConfig) -> Result<Algorithm> {
    let n = inst.election().num_voters();
    let t = inst.num_parties();
    match rule {
        Rule::Copeland(a) if a.is_one() && n == 2 => return Ok(Algorithm::Llull2v),
        Rule::Maximin if n == 2 => return Ok(Algorithm::Maximin2v),
        Rule::Maximin if n == 3 => return Ok(Algorithm::Maximin3v),
        Rule::Maximin if t <= config.max_fpt_parties => return Ok(Algorithm::MaximinFpt),
        _ => {}
    }
    let size = inst.num_nominations();
    if size <= config.max_combinations || config.force {
        Ok(Algorithm::BruteForce)
    } else {
        Err(Error::Budget(format!(
            "{size} nominations exceed the exhaustive limit of {} and no special-case solver applies",
            config.max_combinations
        )))
    }
}

/// Runs a specific solver.
pub fn solve_with(
    inst: &NominationInstance,
    rule: Rule,
    algorithm: Algorithm,
    config: &SolverConfig,
) -> Result<SolveResult> {
    let wrong_rule = |want: &str| {
        Err(Error::Precondition(format!(
            "{} requires the {want} rule, got {rule}",
            algorithm.tag()
        )))
    };
    match algorithm {
        Algorithm::BruteForce => solve_bruteforce(inst, rule, config),
        Algorithm::Llull2v => match rule {
            Rule::Copeland(a) if a.is_one() => solve_llull_two_voters(inst),
            _ => wrong_rule("llull"),
        },
        Algorithm::Maximin2v if rule == Rule::Maximin => solve_maximin_two_voters(inst),
        Algorithm::Maximin3v if rule == Rule::Maximin => solve_maximin_three_voters(inst),
        Algorithm::MaximinFpt if rule == Rule::Maximin => solve_maximin_fpt(inst, config),
        _ => wrong_rule("maximin"),
    }
}

/// Routes to the cheapest applicable exact solver.
pub fn dispatch(inst: &NominationInstance, rule: Rule, config: &SolverConfig) -> Result<SolveResult> {
    let algorithm = choose_algorithm(inst, rule, config)?;
    solve_with(inst, rule, algorithm, config)
}
