//! Polynomial algorithms for two and three voters.
//!
//! With two voters the defeat relation is transitive, so `p` wins iff it
//! defeats one candidate of every other party. With three voters and
//! Maximin the same holds for "defeated by `p` in at least two ballots".

use super::{Algorithm, SolveResult};
use crate::election::{NominationInstance, PairwiseMatrix};
use crate::error::{Error, Result};

fn require_voters(inst: &NominationInstance, n: usize, algorithm: Algorithm) -> Result<()> {
    let got = inst.election().num_voters();
    if got != n {
        return Err(Error::Precondition(format!(
            "{} needs exactly {n} voters, the election has {got}",
            algorithm.tag()
        )));
    }
    Ok(())
}

/// For each `p` of the distinguished party such that every other party has a
/// member `c` with `beats(p, c)`, the nomination of the smallest such members.
/// Reports the lexicographically smallest of these nominations.
fn by_dominance(
    inst: &NominationInstance,
    algorithm: Algorithm,
    beats: impl Fn(&PairwiseMatrix, usize, usize) -> bool,
) -> SolveResult {
    let pm = inst.election().pairwise();
    let d = inst.distinguished();
    let best = inst
        .distinguished_party()
        .iter()
        .filter_map(|&p| {
            inst.parties()
                .iter()
                .enumerate()
                .map(|(i, party)| {
                    if i == d {
                        Some(p)
                    } else {
                        party.iter().copied().find(|&c| beats(&pm, p, c))
                    }
                })
                .collect::<Option<Vec<usize>>>()
        })
        .min();
    match best {
        Some(w) => SolveResult::yes(w, algorithm),
        None => SolveResult::no(algorithm),
    }
}

/// Copeland^1 with two voters.
pub fn solve_llull_two_voters(inst: &NominationInstance) -> Result<SolveResult> {
    require_voters(inst, 2, Algorithm::Llull2v)?;
    Ok(by_dominance(inst, Algorithm::Llull2v, |pm, p, c| pm.get(p, c) == 2))
}

/// Maximin with two voters.
pub fn solve_maximin_two_voters(inst: &NominationInstance) -> Result<SolveResult> {
    require_voters(inst, 2, Algorithm::Maximin2v)?;
    Ok(by_dominance(inst, Algorithm::Maximin2v, |pm, p, c| pm.get(p, c) == 2))
}

/// Maximin with three voters.
pub fn solve_maximin_three_voters(inst: &NominationInstance) -> Result<SolveResult> {
    require_voters(inst, 3, Algorithm::Maximin3v)?;
    Ok(by_dominance(inst, Algorithm::Maximin3v, |pm, p, c| pm.get(p, c) >= 2))
}
