//! Parameterized algorithm for Maximin, exponential only in the number of parties.
//!
//! Guess the nominee `p` of the distinguished party, its score `s`, and for
//! every other party `P` a party `δ(P) ≠ P` whose nominee keeps `P`'s
//! nominee below `s`. Each guess becomes a partitioned subdigraph
//! isomorphism instance whose pattern has indegree at most 1.

use rayon::prelude::*;

use super::{Algorithm, SolveResult, SolverConfig};
use crate::election::{NominationInstance, PairwiseMatrix};
use crate::error::{Error, Result};
use crate::psi::{solve_psi, Digraph, PsiInstance};

struct Branching<'a> {
    inst: &'a NominationInstance,
    pm: PairwiseMatrix,
    /// Parties other than the distinguished one, in index order.
    others: Vec<usize>,
    n: u32,
    radix: u128,
    per_score: u128,
}

impl Branching<'_> {
    fn total(&self) -> u128 {
        self.inst.distinguished_party().len() as u128 * self.per_score * self.n as u128
    }

    /// Decodes a branch number into `(p, s*, δ)`; `δ[k]` is the guessed party
    /// for `others[k]`. The first party is the most significant digit.
    fn decode(&self, mut b: u128) -> (usize, u32, Vec<usize>) {
        let p_idx = (b / (self.per_score * self.n as u128)) as usize;
        b %= self.per_score * self.n as u128;
        let s = self.n - (b / self.per_score) as u32;
        b %= self.per_score;
        let k = self.others.len();
        let mut delta = vec![0usize; k];
        for slot in (0..k).rev() {
            let digit = (b % self.radix) as usize;
            b /= self.radix;
            // Skip the party itself among all parties.
            let own = self.others[slot];
            delta[slot] = if digit >= own { digit + 1 } else { digit };
        }
        (self.inst.distinguished_party()[p_idx], s, delta)
    }

    /// Steps 3 to 7 for one guess. Returns a winning nomination if the
    /// subdigraph instance is solvable.
    fn run(&self, p: usize, s: u32, delta: &[usize]) -> Option<Vec<usize>> {
        let inst = self.inst;
        let pm = &self.pm;
        let d = inst.distinguished();
        let m = pm.num_candidates();
        // Candidates surviving steps 3 and 4, outside the distinguished party.
        let mut alive = vec![false; m];
        for (k, &party) in self.others.iter().enumerate() {
            let mut any = false;
            for &c in inst.party(party) {
                let keep = pm.get(p, c) >= s && (delta[k] != d || pm.get(c, p) < s);
                alive[c] = keep;
                any |= keep;
            }
            if !any {
                return None;
            }
        }
        let mut pattern_of = vec![usize::MAX; inst.num_parties()];
        for (k, &party) in self.others.iter().enumerate() {
            pattern_of[party] = k;
        }
        let mut pattern = Digraph::new(self.others.len());
        for (k, &target) in delta.iter().enumerate() {
            if target != d {
                pattern.add_arc(pattern_of[target], k).ok()?;
            }
        }
        let hosts: Vec<usize> = (0..m).filter(|&c| alive[c]).collect();
        let mut host = Digraph::new(hosts.len());
        for (i, &from) in hosts.iter().enumerate() {
            for (j, &to) in hosts.iter().enumerate() {
                if i != j && pm.get(to, from) < s {
                    host.add_arc(i, j).ok()?;
                }
            }
        }
        let labels = hosts.iter().map(|&c| pattern_of[inst.party_of(c)]).collect();
        let psi = PsiInstance::new(pattern, host, labels).ok()?;
        let embedding = solve_psi(&psi).expect("pattern has indegree at most 1 and no loops")?;
        let mut witness = vec![0usize; inst.num_parties()];
        witness[d] = p;
        for (k, &party) in self.others.iter().enumerate() {
            witness[party] = hosts[embedding[k]];
        }
        Some(witness)
    }
}

/// Decides Maximin Possible President in `O*(t^t)` time.
///
/// Branches are numbered by `p` (id order), then `s*` descending from the
/// number of voters, then `δ` as a mixed-radix counter. With
/// `config.deterministic` the witness of the first successful branch is
/// reported.
pub fn solve_maximin_fpt(inst: &NominationInstance, config: &SolverConfig) -> Result<SolveResult> {
    let t = inst.num_parties();
    if t > config.max_fpt_parties {
        return Err(Error::TooLarge {
            what: "maximin parameterized solver (parties)".into(),
            size: t as u128,
            limit: config.max_fpt_parties as u128,
        });
    }
    let d = inst.distinguished();
    if t == 1 {
        return Ok(SolveResult::yes(vec![inst.party(d)[0]], Algorithm::MaximinFpt));
    }
    let others: Vec<usize> = (0..t).filter(|&i| i != d).collect();
    let radix = (t - 1) as u128;
    let branching = Branching {
        inst,
        pm: inst.election().pairwise(),
        n: inst.election().num_voters() as u32,
        per_score: radix.pow(others.len() as u32),
        radix,
        others,
    };
    let attempt = |b: u128| {
        let (p, s, delta) = branching.decode(b);
        branching.run(p, s, &delta)
    };
    let total = branching.total() as u64;
    let found = if config.deterministic {
        (0..total).into_par_iter().find_map_first(|b| attempt(b as u128))
    } else {
        (0..total).into_par_iter().find_map_any(|b| attempt(b as u128))
    };
    Ok(match found {
        Some(w) => SolveResult::yes(w, Algorithm::MaximinFpt),
        None => SolveResult::no(Algorithm::MaximinFpt),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::{Election, Rule};
    use crate::solvers::verify_nomination;

    #[test]
    fn one_party() {
        let e = Election::new(&["p", "q"], &[vec!["q", "p"]]).unwrap();
        let inst = NominationInstance::new(e, vec![vec![0, 1]], 0).unwrap();
        let r = solve_maximin_fpt(&inst, &SolverConfig::default()).unwrap();
        assert_eq!(r.witness, Some(vec![0]));
    }

    #[test]
    fn two_singletons() {
        let e = Election::new(&["c", "p"], &[vec!["p", "c"], vec!["p", "c"], vec!["c", "p"]]).unwrap();
        let inst = NominationInstance::singletons(e, "p").unwrap();
        let r = solve_maximin_fpt(&inst, &SolverConfig::default()).unwrap();
        let w = r.witness.unwrap();
        assert!(verify_nomination(&inst, Rule::Maximin, &w).unwrap());
    }

    #[test]
    fn decode_skips_own_party() {
        let e = Election::new(&["a", "b", "c", "d"], &[vec!["a", "b", "c", "d"]]).unwrap();
        let inst = NominationInstance::singletons(e, "b").unwrap();
        let br = Branching {
            inst: &inst,
            pm: inst.election().pairwise(),
            others: vec![0, 2, 3],
            n: 1,
            radix: 3,
            per_score: 27,
        };
        assert_eq!(br.total(), 27);
        for b in 0..27 {
            let (p, s, delta) = br.decode(b);
            assert_eq!((p, s), (1, 1));
            for (k, &target) in delta.iter().enumerate() {
                assert_ne!(target, br.others[k]);
                assert!(target < 4);
            }
        }
        assert_eq!(br.decode(0).2, vec![1, 0, 0]);
    }

    #[test]
    fn guard() {
        let names: Vec<String> = (0..4).map(|i| format!("c{i}")).collect();
        let e = Election::new(&names, std::slice::from_ref(&names)).unwrap();
        let inst = NominationInstance::singletons(e, "c0").unwrap();
        let cfg = SolverConfig {
            max_fpt_parties: 3,
            ..SolverConfig::default()
        };
        assert!(matches!(solve_maximin_fpt(&inst, &cfg), Err(Error::TooLarge { .. })));
    }
}
