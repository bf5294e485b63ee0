//! Exhaustive search over nominations, pruned by score bounds.
//!
//! For each candidate `p` of the distinguished party the remaining parties
//! are assigned in index order, members in id order, so the first complete
//! nomination found is the lexicographically smallest one for that `p`.
//! A branch is cut only when bounds prove `p` cannot be the unique winner
//! below it, so the search is exact.

use rayon::prelude::*;

use super::{Algorithm, SolveResult, SolverConfig};
use crate::election::{NominationInstance, Rule};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Agg {
    Sum,
    Min,
}

impl Agg {
    fn identity(self) -> u64 {
        match self {
            Agg::Sum => 0,
            Agg::Min => u64::MAX,
        }
    }

    fn join(self, a: u64, b: u64) -> u64 {
        match self {
            Agg::Sum => a + b,
            Agg::Min => a.min(b),
        }
    }
}

/// An aggregate over per-party values that can drop any one party in O(1).
#[derive(Clone, Copy, Debug)]
struct Folded {
    all: u64,
    best: u64,
    best_at: usize,
    second: u64,
}

impl Folded {
    fn new(agg: Agg, values: &[u64]) -> Self {
        let mut f = Folded {
            all: agg.identity(),
            best: u64::MAX,
            best_at: usize::MAX,
            second: u64::MAX,
        };
        for (k, &v) in values.iter().enumerate() {
            f.all = agg.join(f.all, v);
            if v < f.best {
                f.second = f.best;
                f.best = v;
                f.best_at = k;
            } else if v < f.second {
                f.second = v;
            }
        }
        f
    }

    fn without(&self, agg: Agg, k: usize, value: u64) -> u64 {
        match agg {
            Agg::Sum => self.all - value,
            Agg::Min if k == self.best_at => self.second,
            Agg::Min => self.best,
        }
    }
}

/// Pairwise score contributions: a candidate's score is the aggregate of
/// `gain(c, x)` over the other nominees `x`.
struct Scorer {
    agg: Agg,
    m: usize,
    gain: Vec<u64>,
    /// Copeland only: the least a pair of nominees adds to the score total.
    pair_floor: Option<u64>,
}

impl Scorer {
    fn new(inst: &NominationInstance, rule: Rule) -> Self {
        let pm = inst.election().pairwise();
        let m = pm.num_candidates();
        let mut gain = vec![0u64; m * m];
        let agg = match rule {
            Rule::Copeland(_) => Agg::Sum,
            Rule::Maximin => Agg::Min,
        };
        for c in 0..m {
            for x in (0..m).filter(|&x| x != c) {
                gain[c * m + x] = match rule {
                    Rule::Copeland(alpha) => match pm.get(c, x).cmp(&pm.get(x, c)) {
                        std::cmp::Ordering::Greater => alpha.den() as u64,
                        std::cmp::Ordering::Equal => alpha.num() as u64,
                        std::cmp::Ordering::Less => 0,
                    },
                    Rule::Maximin => pm.get(c, x) as u64,
                };
            }
        }
        let pair_floor = match rule {
            Rule::Copeland(alpha) => Some((alpha.den() as u64).min(2 * alpha.num() as u64)),
            Rule::Maximin => None,
        };
        Scorer {
            agg,
            m,
            gain,
            pair_floor,
        }
    }

    #[inline]
    fn g(&self, c: usize, x: usize) -> u64 {
        self.gain[c * self.m + x]
    }
}

struct Search<'a> {
    scorer: &'a Scorer,
    p: usize,
    /// Branch on the party with the fewest remaining candidates instead of
    /// the first one.
    mrv: bool,
}

impl Search<'_> {
    /// Copeland scores of all nominees add up to at least `pair_floor` per
    /// pair. Every rival must stay below `p`, so their capped upper bounds
    /// plus `p`'s own bound have to reach that total.
    fn total_fits(&self, nominees: &[usize], partial: &[u64], domains: &[Vec<usize>]) -> bool {
        let sc = self.scorer;
        let Some(floor) = sc.pair_floor else {
            return true;
        };
        let t = (nominees.len() + domains.len()) as u64;
        let need = floor * (t * (t - 1) / 2);
        let best_in = |c: usize, d: &[usize]| d.iter().map(|&x| sc.g(c, x)).max().unwrap_or(0);
        let ub = |c: usize, base: u64, skip: Option<usize>| -> u64 {
            domains
                .iter()
                .enumerate()
                .filter(|&(k, _)| Some(k) != skip)
                .fold(base, |acc, (_, d)| acc + best_in(c, d))
        };
        let ub_p = ub(self.p, partial[self.p], None);
        let Some(cap) = ub_p.checked_sub(1) else {
            return false;
        };
        let mut total = ub_p;
        for &c in &nominees[1..] {
            total += ub(c, partial[c], None).min(cap);
        }
        for (k, d) in domains.iter().enumerate() {
            total += d
                .iter()
                .map(|&x| {
                    let own: u64 = nominees.iter().map(|&c| sc.g(x, c)).sum();
                    ub(x, own, Some(k)).min(cap)
                })
                .max()
                .unwrap_or(0);
        }
        total >= need
    }

    /// `nominees[0]` is `p`; `partial[c]` is `c`'s score against the current
    /// nominees; `domains` are the candidates still possible for the
    /// unassigned parties and `slots` their positions in the open-party list.
    /// On success `chosen` holds `(slot, pick)` for those parties.
    fn dfs(
        &self,
        nominees: &mut Vec<usize>,
        partial: &[u64],
        domains: &[Vec<usize>],
        slots: &[usize],
        chosen: &mut Vec<(usize, usize)>,
    ) -> bool {
        let sc = self.scorer;
        let agg = sc.agg;
        let p = self.p;
        if domains.is_empty() {
            return nominees[1..].iter().all(|&c| partial[c] < partial[p]);
        }
        let reach = |c: usize, pick: fn(u64, u64) -> u64, start: u64| -> Vec<u64> {
            domains
                .iter()
                .map(|d| d.iter().fold(start, |acc, &x| pick(acc, sc.g(c, x))))
                .collect()
        };
        let p_best = reach(p, u64::max, 0);
        let p_fold = Folded::new(agg, &p_best);
        let ub = agg.join(partial[p], p_fold.all);

        let rivals: Vec<(usize, Vec<u64>, Folded)> = nominees[1..]
            .iter()
            .map(|&c| {
                let worst = reach(c, u64::min, u64::MAX);
                let fold = Folded::new(agg, &worst);
                (c, worst, fold)
            })
            .collect();
        if rivals.iter().any(|(c, _, f)| agg.join(partial[*c], f.all) >= ub) {
            return false;
        }

        let mut next: Vec<Vec<usize>> = Vec::with_capacity(domains.len());
        for (k, dom) in domains.iter().enumerate() {
            let kept: Vec<usize> = dom
                .iter()
                .copied()
                .filter(|&x| {
                    let ub_x = agg.join(agg.join(partial[p], sc.g(p, x)), p_fold.without(agg, k, p_best[k]));
                    let own = nominees.iter().fold(agg.identity(), |acc, &c| agg.join(acc, sc.g(x, c)));
                    let lb_x = domains
                        .iter()
                        .enumerate()
                        .filter(|&(k2, _)| k2 != k)
                        .fold(own, |acc, (_, d)| {
                            agg.join(acc, d.iter().map(|&y| sc.g(x, y)).min().unwrap_or(u64::MAX))
                        });
                    lb_x < ub_x
                        && rivals.iter().all(|(c, worst, fold)| {
                            let lb = agg.join(agg.join(partial[*c], sc.g(*c, x)), fold.without(agg, k, worst[k]));
                            lb < ub_x
                        })
                })
                .collect();
            if kept.is_empty() {
                return false;
            }
            next.push(kept);
        }

        if !self.total_fits(nominees, partial, &next) {
            return false;
        }

        let at = if self.mrv {
            (0..next.len()).min_by_key(|&k| next[k].len()).unwrap()
        } else {
            0
        };
        let head = next.remove(at);
        let mut rest_slots = slots.to_vec();
        let slot = rest_slots.remove(at);
        for &x in &head {
            let mut updated = partial.to_vec();
            updated[x] = nominees.iter().fold(agg.identity(), |acc, &c| agg.join(acc, sc.g(x, c)));
            for &c in nominees.iter() {
                updated[c] = agg.join(updated[c], sc.g(c, x));
            }
            nominees.push(x);
            chosen.push((slot, x));
            if self.dfs(nominees, &updated, &next, &rest_slots, chosen) {
                return true;
            }
            chosen.pop();
            nominees.pop();
        }
        false
    }
}

/// The lexicographically smallest winning nomination for `p`, if any.
fn best_for(inst: &NominationInstance, scorer: &Scorer, p: usize) -> Option<Vec<usize>> {
    let d = inst.distinguished();
    let mut nominees = vec![p];
    let mut open = Vec::new();
    for (i, party) in inst.parties().iter().enumerate() {
        if i == d {
            continue;
        }
        match party.as_slice() {
            [only] => nominees.push(*only),
            _ => open.push(i),
        }
    }
    let agg = scorer.agg;
    let mut partial = vec![agg.identity(); scorer.m];
    for &c in &nominees {
        partial[c] = nominees
            .iter()
            .filter(|&&x| x != c)
            .fold(agg.identity(), |acc, &x| agg.join(acc, scorer.g(c, x)));
    }
    let mut domains: Vec<Vec<usize>> = open.iter().map(|&i| inst.party(i).to_vec()).collect();
    let slots: Vec<usize> = (0..open.len()).collect();
    let fast = Search { scorer, p, mrv: true };
    let mut chosen = Vec::with_capacity(open.len());
    if !fast.dfs(&mut nominees.clone(), &partial, &domains, &slots, &mut chosen) {
        return None;
    }
    // Fix parties in order, each to its smallest member that still admits a
    // completion. The first probe that succeeds is the member already used by
    // the last completion found, so it is tried without a search.
    let mut pick = vec![0; open.len()];
    for &(k, x) in &chosen {
        pick[k] = x;
    }
    for k in 0..open.len() {
        for x in domains[k].clone() {
            if x == pick[k] {
                break;
            }
            let mut trial = domains.clone();
            trial[k] = vec![x];
            let mut found = Vec::new();
            if fast.dfs(&mut nominees.clone(), &partial, &trial, &slots, &mut found) {
                for (k2, x2) in found {
                    pick[k2] = x2;
                }
                break;
            }
        }
        domains[k] = vec![pick[k]];
    }
    let mut witness: Vec<usize> = inst.parties().iter().map(|party| party[0]).collect();
    witness[d] = p;
    for (&i, &x) in open.iter().zip(&pick) {
        witness[i] = x;
    }
    Some(witness)
}

/// Decides the instance exactly by searching all nominations.
///
/// Fails with [`Error::TooLarge`] when the number of nominations exceeds
/// `config.max_combinations`, unless `config.force` is set.
pub fn solve_bruteforce(inst: &NominationInstance, rule: Rule, config: &SolverConfig) -> Result<SolveResult> {
    let size = inst.num_nominations();
    if size > config.max_combinations && !config.force {
        return Err(Error::TooLarge {
            what: "brute-force oracle".into(),
            size,
            limit: config.max_combinations,
        });
    }
    let d = inst.distinguished();
    if inst.num_parties() == 1 {
        return Ok(SolveResult::yes(vec![inst.party(d)[0]], Algorithm::BruteForce));
    }
    let scorer = Scorer::new(inst, rule);
    let found = if config.deterministic {
        inst.distinguished_party()
            .par_iter()
            .filter_map(|&p| best_for(inst, &scorer, p))
            .min()
    } else {
        inst.distinguished_party()
            .par_iter()
            .find_map_any(|&p| best_for(inst, &scorer, p))
    };
    Ok(match found {
        Some(w) => SolveResult::yes(w, Algorithm::BruteForce),
        None => SolveResult::no(Algorithm::BruteForce),
    })
}
