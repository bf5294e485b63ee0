//! Elections with strict rankings, pairwise majority counts, and winner
//! determination for Copeland^α and Maximin.
//!
//! Candidates are identified by string ids. Internally every candidate is an
//! index into the lexicographically sorted id list, so index order and id
//! order coincide everywhere in the crate.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A profile of strict rankings over a fixed candidate set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Election {
    names: Vec<String>,
    index: HashMap<String, usize>,
    voters: Vec<Vec<usize>>,
}

impl Election {
    /// Builds an election from candidate ids and rankings (most preferred first).
    pub fn new<S, R>(candidates: &[S], voters: &[R]) -> Result<Self>
    where
        S: AsRef<str>,
        R: AsRef<[S]>,
    {
        let mut names: Vec<String> = candidates.iter().map(|c| c.as_ref().to_owned()).collect();
        names.sort();
        if names.is_empty() {
            return Err(Error::InvalidElection("no candidates".into()));
        }
        for w in names.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidElection(format!("duplicate candidate id {:?}", w[0])));
            }
        }
        if let Some(bad) = names.iter().find(|n| n.is_empty()) {
            return Err(Error::InvalidElection(format!("empty candidate id {bad:?}")));
        }
        let index: HashMap<String, usize> =
            names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
        let rankings = voters
            .iter()
            .map(|r| {
                r.as_ref()
                    .iter()
                    .map(|c| {
                        index
                            .get(c.as_ref())
                            .copied()
                            .ok_or_else(|| Error::UnknownCandidate(c.as_ref().to_owned()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_parts(names, index, rankings)
    }

    /// Builds an election over `names` (already sorted and distinct) from
    /// index rankings. Used by generators that lay out candidates themselves.
    pub(crate) fn from_indices(names: Vec<String>, voters: Vec<Vec<usize>>) -> Result<Self> {
        debug_assert!(names.windows(2).all(|w| w[0] < w[1]));
        let index = names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
        Self::from_parts(names, index, voters)
    }

    fn from_parts(
        names: Vec<String>,
        index: HashMap<String, usize>,
        voters: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if voters.is_empty() {
            return Err(Error::InvalidElection("an election needs at least one voter".into()));
        }
        let m = names.len();
        for (v, ranking) in voters.iter().enumerate() {
            if ranking.len() != m {
                return Err(Error::InvalidElection(format!(
                    "voter {v} ranks {} candidates, expected {m}",
                    ranking.len()
                )));
            }
            let mut seen = vec![false; m];
            for &c in ranking {
                if c >= m || std::mem::replace(&mut seen[c], true) {
                    return Err(Error::InvalidElection(format!(
                        "voter {v} does not rank every candidate exactly once"
                    )));
                }
            }
        }
        Ok(Election { names, index, voters })
    }

    pub fn num_candidates(&self) -> usize {
        self.names.len()
    }

    pub fn num_voters(&self) -> usize {
        self.voters.len()
    }

    /// Candidate ids in lexicographic order.
    pub fn candidates(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, c: usize) -> &str {
        &self.names[c]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub(crate) fn require(&self, id: &str) -> Result<usize> {
        self.index_of(id).ok_or_else(|| Error::UnknownCandidate(id.to_owned()))
    }

    /// Rankings as candidate indices, most preferred first.
    pub fn rankings(&self) -> &[Vec<usize>] {
        &self.voters
    }

    /// Rankings as candidate ids.
    pub fn rankings_by_id(&self) -> Vec<Vec<String>> {
        self.voters
            .iter()
            .map(|r| r.iter().map(|&c| self.names[c].clone()).collect())
            .collect()
    }

    pub fn pairwise(&self) -> PairwiseMatrix {
        PairwiseMatrix::from_election(self)
    }

    /// The election restricted to `keep` (indices into this election).
    pub fn restrict(&self, keep: &[usize]) -> Result<Election> {
        let mut kept: Vec<usize> = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        if kept.is_empty() {
            return Err(Error::InvalidElection("restriction to an empty candidate set".into()));
        }
        let mut new_index = vec![usize::MAX; self.names.len()];
        for (i, &c) in kept.iter().enumerate() {
            new_index[c] = i;
        }
        let names = kept.iter().map(|&c| self.names[c].clone()).collect();
        let voters = self
            .voters
            .iter()
            .map(|r| r.iter().filter_map(|&c| (new_index[c] != usize::MAX).then_some(new_index[c])).collect())
            .collect();
        Election::from_indices(names, voters)
    }
}

/// How two distinct candidates compare under pairwise majority.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Defeats,
    DefeatedBy,
    Tied,
}

/// `N(a,b)`: how many voters rank `a` above `b`, for every ordered pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairwiseMatrix {
    n: u32,
    m: usize,
    counts: Vec<u32>,
}

impl PairwiseMatrix {
    pub fn from_election(e: &Election) -> Self {
        let m = e.num_candidates();
        let mut counts = vec![0u32; m * m];
        let mut pos = vec![0usize; m];
        for ranking in e.rankings() {
            for (i, &c) in ranking.iter().enumerate() {
                pos[c] = i;
            }
            for a in 0..m {
                let row = &mut counts[a * m..(a + 1) * m];
                for (b, slot) in row.iter_mut().enumerate() {
                    if pos[a] < pos[b] {
                        *slot += 1;
                    }
                }
            }
        }
        PairwiseMatrix {
            n: e.num_voters() as u32,
            m,
            counts,
        }
    }

    pub fn num_voters(&self) -> u32 {
        self.n
    }

    pub fn num_candidates(&self) -> usize {
        self.m
    }

    /// `N(a,b)`. Zero on the diagonal.
    #[inline]
    pub fn get(&self, a: usize, b: usize) -> u32 {
        self.counts[a * self.m + b]
    }

    pub fn relation(&self, a: usize, b: usize) -> Result<Relation> {
        if a == b {
            return Err(Error::SameCandidate(a.to_string()));
        }
        let (ab, ba) = (self.get(a, b), self.get(b, a));
        Ok(match ab.cmp(&ba) {
            std::cmp::Ordering::Greater => Relation::Defeats,
            std::cmp::Ordering::Less => Relation::DefeatedBy,
            std::cmp::Ordering::Equal => Relation::Tied,
        })
    }

    pub fn defeats(&self, a: usize, b: usize) -> Result<bool> {
        Ok(self.relation(a, b)? == Relation::Defeats)
    }

    pub fn tied(&self, a: usize, b: usize) -> Result<bool> {
        Ok(self.relation(a, b)? == Relation::Tied)
    }
}

/// The tie weight α of Copeland^α as an exact fraction in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alpha {
    num: u32,
    den: u32,
}

impl Alpha {
    pub const ZERO: Alpha = Alpha { num: 0, den: 1 };
    pub const ONE: Alpha = Alpha { num: 1, den: 1 };

    pub fn new(num: u32, den: u32) -> Result<Self> {
        if den == 0 || num > den {
            return Err(Error::InvalidAlpha(format!("{num}/{den}")));
        }
        let g = num.gcd(&den);
        Ok(Alpha { num: num / g, den: den / g })
    }

    pub fn num(self) -> u32 {
        self.num
    }

    pub fn den(self) -> u32 {
        self.den
    }

    pub fn is_one(self) -> bool {
        self.num == self.den
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Alpha {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidAlpha(s.to_owned());
        let s = s.trim();
        let is_digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        match s.split_once('/') {
            Some((p, q)) if is_digits(p) && is_digits(q) => {
                Alpha::new(p.parse().map_err(|_| bad())?, q.parse().map_err(|_| bad())?).map_err(|_| bad())
            }
            None if s == "0" => Ok(Alpha::ZERO),
            None if s == "1" => Ok(Alpha::ONE),
            _ => Err(bad()),
        }
    }
}

/// Pairwise wins and ties of one candidate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CopelandScore {
    pub wins: u32,
    pub ties: u32,
}

impl CopelandScore {
    /// The score scaled by α's denominator: `wins·den + ties·num`.
    pub fn scaled(self, alpha: Alpha) -> u64 {
        self.wins as u64 * alpha.den as u64 + self.ties as u64 * alpha.num as u64
    }

    /// `wins + α·ties` rendered as an exact reduced fraction.
    pub fn render(self, alpha: Alpha) -> String {
        let v = self.scaled(alpha);
        let d = alpha.den as u64;
        let g = v.gcd(&d);
        if d / g == 1 {
            format!("{}", v / g)
        } else {
            format!("{}/{}", v / g, d / g)
        }
    }
}

/// A winner-determination rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Copeland(Alpha),
    Maximin,
}

impl Rule {
    pub const LLULL: Rule = Rule::Copeland(Alpha::ONE);
    pub const COPELAND: Rule = Rule::Copeland(Alpha::ZERO);
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::Copeland(a) => write!(f, "copeland:{a}"),
            Rule::Maximin => f.write_str("maximin"),
        }
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "maximin" => Ok(Rule::Maximin),
            "llull" => Ok(Rule::LLULL),
            "copeland" => Ok(Rule::COPELAND),
            other => match other.strip_prefix("copeland:") {
                Some(a) => Ok(Rule::Copeland(a.parse()?)),
                None => Err(Error::parse(
                    "rule",
                    format!("unknown rule {other:?}; expected copeland:<alpha>, llull or maximin"),
                )),
            },
        }
    }
}

pub fn copeland_scores(e: &Election) -> Vec<CopelandScore> {
    let pm = e.pairwise();
    let m = e.num_candidates();
    (0..m)
        .map(|a| {
            let mut s = CopelandScore::default();
            for b in (0..m).filter(|&b| b != a) {
                match pm.get(a, b).cmp(&pm.get(b, a)) {
                    std::cmp::Ordering::Greater => s.wins += 1,
                    std::cmp::Ordering::Equal => s.ties += 1,
                    std::cmp::Ordering::Less => {}
                }
            }
            s
        })
        .collect()
}

pub fn maximin_scores(e: &Election) -> Result<Vec<u32>> {
    if e.num_candidates() < 2 {
        return Err(Error::MaximinUndefined);
    }
    let pm = e.pairwise();
    let m = e.num_candidates();
    Ok((0..m)
        .map(|a| (0..m).filter(|&b| b != a).map(|b| pm.get(a, b)).min().unwrap_or(0))
        .collect())
}

/// Per-candidate scores under `rule` as comparable integers (Copeland
/// scores scaled by α's denominator).
pub fn rule_scores(e: &Election, rule: Rule) -> Vec<u64> {
    if e.num_candidates() == 1 {
        return vec![0];
    }
    match rule {
        Rule::Copeland(alpha) => copeland_scores(e).into_iter().map(|s| s.scaled(alpha)).collect(),
        Rule::Maximin => maximin_scores(e)
            .expect("at least two candidates")
            .into_iter()
            .map(u64::from)
            .collect(),
    }
}

/// All candidates with the maximum score, in index order.
pub fn winners(e: &Election, rule: Rule) -> Vec<usize> {
    let scores = rule_scores(e, rule);
    let best = scores.iter().copied().max().unwrap_or(0);
    (0..scores.len()).filter(|&c| scores[c] == best).collect()
}

pub fn unique_winner(e: &Election, rule: Rule) -> Option<usize> {
    match winners(e, rule).as_slice() {
        [w] => Some(*w),
        _ => None,
    }
}

pub fn condorcet_winner(e: &Election) -> Option<usize> {
    let pm = e.pairwise();
    let m = e.num_candidates();
    (0..m).find(|&a| (0..m).all(|b| b == a || pm.get(a, b) > pm.get(b, a)))
}

/// An election whose candidates are split into parties, one of them distinguished.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NominationInstance {
    election: Election,
    parties: Vec<Vec<usize>>,
    party_of: Vec<usize>,
    distinguished: usize,
}

impl NominationInstance {
    pub fn new(election: Election, parties: Vec<Vec<usize>>, distinguished: usize) -> Result<Self> {
        let m = election.num_candidates();
        if parties.is_empty() {
            return Err(Error::InvalidInstance("no parties".into()));
        }
        if distinguished >= parties.len() {
            return Err(Error::InvalidInstance(format!(
                "distinguished party {distinguished} out of range (t = {})",
                parties.len()
            )));
        }
        let mut party_of = vec![usize::MAX; m];
        let mut parties = parties;
        for (i, party) in parties.iter_mut().enumerate() {
            if party.is_empty() {
                return Err(Error::InvalidInstance(format!("party {i} is empty")));
            }
            party.sort_unstable();
            for &c in party.iter() {
                if c >= m {
                    return Err(Error::InvalidInstance(format!("party {i} names candidate {c} out of range")));
                }
                if party_of[c] != usize::MAX {
                    return Err(Error::InvalidInstance(format!(
                        "candidate {:?} belongs to more than one party",
                        election.name(c)
                    )));
                }
                party_of[c] = i;
            }
        }
        if let Some(c) = party_of.iter().position(|&p| p == usize::MAX) {
            return Err(Error::InvalidInstance(format!(
                "candidate {:?} belongs to no party",
                election.name(c)
            )));
        }
        Ok(NominationInstance {
            election,
            parties,
            party_of,
            distinguished,
        })
    }

    /// Builds an instance from party member ids.
    pub fn from_ids<S: AsRef<str>>(election: Election, parties: &[Vec<S>], distinguished: usize) -> Result<Self> {
        let parties = parties
            .iter()
            .map(|p| p.iter().map(|c| election.require(c.as_ref())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(election, parties, distinguished)
    }

    /// Every candidate forms its own party.
    pub fn singletons(election: Election, distinguished: &str) -> Result<Self> {
        let d = election.require(distinguished)?;
        let parties = (0..election.num_candidates()).map(|c| vec![c]).collect();
        Self::new(election, parties, d)
    }

    pub fn election(&self) -> &Election {
        &self.election
    }

    pub fn parties(&self) -> &[Vec<usize>] {
        &self.parties
    }

    pub fn party(&self, i: usize) -> &[usize] {
        &self.parties[i]
    }

    pub fn party_of(&self, c: usize) -> usize {
        self.party_of[c]
    }

    pub fn distinguished(&self) -> usize {
        self.distinguished
    }

    pub fn distinguished_party(&self) -> &[usize] {
        &self.parties[self.distinguished]
    }

    /// Number of parties, `t`.
    pub fn num_parties(&self) -> usize {
        self.parties.len()
    }

    /// Largest party size, `σ`.
    pub fn max_party_size(&self) -> usize {
        self.parties.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of complete nominations, saturating at `u128::MAX`.
    pub fn num_nominations(&self) -> u128 {
        self.parties
            .iter()
            .fold(1u128, |acc, p| acc.saturating_mul(p.len() as u128))
    }

    /// Checks that `nomination[i]` is a member of party `i` for every party.
    pub fn check_nomination(&self, nomination: &[usize]) -> Result<()> {
        if nomination.len() != self.parties.len() {
            return Err(Error::InvalidNomination(format!(
                "expected one nominee for each of the {} parties, got {}",
                self.parties.len(),
                nomination.len()
            )));
        }
        for (i, &c) in nomination.iter().enumerate() {
            if c >= self.party_of.len() || self.party_of[c] != i {
                let name = self.election.candidates().get(c).map(String::as_str).unwrap_or("?");
                return Err(Error::InvalidNomination(format!("{name:?} is not a member of party {i}")));
            }
        }
        Ok(())
    }

    /// The reduced election in which party `i` nominates `nomination[i]`.
    pub fn reduce(&self, nomination: &[usize]) -> Result<Election> {
        self.check_nomination(nomination)?;
        self.election.restrict(nomination)
    }
}
