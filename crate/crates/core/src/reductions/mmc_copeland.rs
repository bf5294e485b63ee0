//! Room assignment with couples to Possible President under Copeland with
//! three voters.
//!
//! Every room, single, couple, couple copy and dummy is a team with three
//! candidate lists. The teams are laid out along a flat election `E_q`, simple
//! candidates `a1..`, `b1..` are added from `E_{q+1}`, and `a1` is moved up
//! one place in the first voter so that it wins exactly when the relevant
//! candidates form a flat election.
//!
//! Candidate ids: room `r` gives `r:r`, `r':r`; person `x` gives `p:x`,
//! `p':x` and, per room `r`, `p:x@r`, `~p:x@r`. Couple copies use `h` in
//! place of `p`. Dummy `i` gives `d{i}:a`, `d{i}:b`, `d{i}:c`.

use super::assemble;
use super::mmc::{Kind, MmcInstance};
use crate::election::NominationInstance;
use crate::error::{Error, Result};
use crate::flat::{flat_orders, MAX_FLAT_LEVEL};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Team {
    Room(String),
    Single(String),
    Couple(String),
    Copy(String),
    Dummy(usize),
}

/// Smallest `q >= 1` with `3^q >= n`.
fn level_for(n: usize) -> u32 {
    let mut q = 1;
    while 3usize.pow(q) < n {
        q += 1;
    }
    q
}

/// Teams in canonical order: rooms, singles, couples, copies, dummies, each
/// by id. The count is a power of three.
pub fn mmc_teams(m: &MmcInstance) -> Result<Vec<Team>> {
    if !m.is_normal_form() {
        return Err(Error::Precondition("room instance is not in normal form".into()));
    }
    let mut teams: Vec<Team> = m.rooms().into_iter().map(|r| Team::Room(r.into())).collect();
    teams.extend(m.singles().into_iter().map(|s| Team::Single(s.into())));
    teams.extend(m.couples().into_iter().map(|c| Team::Couple(c.into())));
    teams.extend(m.couples().into_iter().map(|c| Team::Copy(c.into())));
    let q = level_for(teams.len());
    if q + 1 > MAX_FLAT_LEVEL {
        return Err(Error::TooLarge {
            what: "teams".into(),
            size: teams.len() as u128,
            limit: 3u128.pow(MAX_FLAT_LEVEL - 1),
        });
    }
    let dummies = 3usize.pow(q) - teams.len();
    teams.extend((1..=dummies).map(Team::Dummy));
    Ok(teams)
}

struct Lists<'a> {
    m: &'a MmcInstance,
}

fn id(prefix: &str, x: &str) -> String {
    format!("{prefix}:{x}")
}

impl Lists<'_> {
    fn yes(pre: &str, x: &str, r: &str) -> String {
        format!("{pre}:{x}@{r}")
    }

    fn no(pre: &str, x: &str, r: &str) -> String {
        format!("~{pre}:{x}@{r}")
    }

    /// `[F, F', F'']` for a team.
    fn lists(&self, t: &Team) -> [Vec<String>; 3] {
        match t {
            Team::Room(r) => self.room(r),
            Team::Single(x) | Team::Couple(x) => self.person("p", x),
            Team::Copy(x) => self.person("h", x),
            Team::Dummy(i) => {
                let [a, b, c] = ["a", "b", "c"].map(|s| format!("d{i}:{s}"));
                [
                    vec![a.clone(), b.clone(), c.clone()],
                    vec![c.clone(), a.clone(), b.clone()],
                    vec![b, c, a],
                ]
            }
        }
    }

    fn person(&self, pre: &str, x: &str) -> [Vec<String>; 3] {
        let p = id(pre, x);
        let p2 = id(&format!("{pre}'"), x);
        let neg: Vec<String> = self.m.neighbors(x).into_iter().map(|r| Self::no(pre, x, r)).collect();
        match neg.as_slice() {
            [n1, n2, n3] => [
                vec![p.clone(), p2.clone(), n1.clone(), n2.clone(), n3.clone()],
                vec![n3.clone(), p2.clone(), n2.clone(), p.clone(), n1.clone()],
                vec![n1.clone(), n2.clone(), n3.clone(), p, p2],
            ],
            [n1, n2] => [
                vec![p.clone(), p2.clone(), n1.clone(), n2.clone()],
                vec![n1.clone(), n2.clone(), p.clone(), p2.clone()],
                vec![p2, n1.clone(), n2.clone(), p],
            ],
            _ => unreachable!("normal form keeps degrees at 2 or 3"),
        }
    }

    fn room(&self, r: &str) -> [Vec<String>; 3] {
        let (rr, r2) = (id("r", r), id("r'", r));
        let mut singles = Vec::new();
        let mut couples = Vec::new();
        for x in self.m.neighbors(r) {
            match self.m.kind(x) {
                Some(Kind::Single) => singles.push(Self::yes("p", x, r)),
                _ => couples.push((Self::yes("p", x, r), Self::yes("h", x, r))),
            }
        }
        match (singles.as_slice(), couples.as_slice()) {
            ([s1, s2], [(c, ch)]) => [
                vec![s1.clone(), rr.clone(), s2.clone(), c.clone(), r2.clone(), ch.clone()],
                vec![s2.clone(), s1.clone(), ch.clone(), c.clone(), rr.clone(), r2.clone()],
                vec![rr, r2, s2.clone(), s1.clone(), ch.clone(), c.clone()],
            ],
            (ss, []) => {
                let s3: Vec<String> = ss.get(2).cloned().into_iter().collect();
                let (s1, s2) = (&ss[0], &ss[1]);
                let mut f = vec![s1.clone(), rr.clone(), s2.clone(), r2.clone()];
                f.extend(s3.clone());
                let mut f1 = s3.clone();
                f1.extend([s2.clone(), s1.clone(), rr.clone(), r2.clone()]);
                let mut f2 = vec![rr, r2];
                f2.extend(s3);
                f2.extend([s2.clone(), s1.clone()]);
                [f, f1, f2]
            }
            ([], cs) => {
                let mut f: Vec<String> = cs.iter().map(|(c, _)| c.clone()).collect();
                f.extend([rr.clone(), r2.clone()]);
                f.extend(cs.iter().map(|(_, h)| h.clone()));
                let mut f1: Vec<String> = cs.iter().flat_map(|(c, h)| [h.clone(), c.clone()]).collect();
                f1.extend([rr.clone(), r2.clone()]);
                let mut f2 = vec![rr, r2];
                f2.extend(cs.iter().rev().flat_map(|(c, h)| [h.clone(), c.clone()]));
                [f, f1, f2]
            }
            _ => unreachable!("normal form room shapes"),
        }
    }

    fn parties(&self, t: &Team) -> Vec<Vec<String>> {
        match t {
            Team::Room(r) => vec![vec![id("r", r), id("r'", r)]],
            Team::Single(x) | Team::Couple(x) => self.person_parties("p", x),
            Team::Copy(x) => self.person_parties("h", x),
            Team::Dummy(i) => ["a", "b", "c"].iter().map(|s| vec![format!("d{i}:{s}")]).collect(),
        }
    }

    fn person_parties(&self, pre: &str, x: &str) -> Vec<Vec<String>> {
        let rooms = self.m.neighbors(x);
        let mut out: Vec<Vec<String>> = rooms
            .iter()
            .map(|r| vec![Self::yes(pre, x, r), Self::no(pre, x, r)])
            .collect();
        let (p, p2) = (id(pre, x), id(&format!("{pre}'"), x));
        if rooms.len() == 3 {
            out.push(vec![p, p2]);
        } else {
            out.push(vec![p]);
            out.push(vec![p2]);
        }
        out
    }
}

/// The instance for the canonical team order. Party 0 is `{a1}`.
pub fn gen_mmc_copeland_3v(m: &MmcInstance) -> Result<NominationInstance> {
    let teams = mmc_teams(m)?;
    gen_mmc_copeland_3v_with_order(m, &teams)
}

/// As [`gen_mmc_copeland_3v`] with the teams laid out in the given order,
/// which must be a permutation of [`mmc_teams`].
pub fn gen_mmc_copeland_3v_with_order(m: &MmcInstance, teams: &[Team]) -> Result<NominationInstance> {
    let mut canonical = mmc_teams(m)?;
    let mut given = teams.to_vec();
    canonical.sort();
    given.sort();
    if canonical != given {
        return Err(Error::Precondition("team order is not a permutation of the teams".into()));
    }
    let rho = teams.len();
    let q = level_for(rho);
    let [_, pi, pi2] = flat_orders(q)?;
    let [_, phi, phi2] = flat_orders(q + 1)?;
    let lists = Lists { m };
    let team_lists: Vec<[Vec<String>; 3]> = teams.iter().map(|t| lists.lists(t)).collect();
    let a = |i: usize| format!("a{}", i + 1);
    let b = |i: usize| format!("b{}", i + 1);
    let n = 3 * rho;

    let mut v: Vec<String> = team_lists.iter().flat_map(|l| l[0].clone()).collect();
    v.extend((0..n - 1).map(b));
    v.push(a(0));
    v.push(b(n - 1));
    v.extend((1..n).map(a));

    let mut v1: Vec<String> = phi.iter().map(|&i| a(i)).collect();
    v1.extend(pi.iter().flat_map(|&i| team_lists[i][1].clone()));
    v1.extend(phi.iter().map(|&i| b(i)));

    let mut v2: Vec<String> = phi2.iter().map(|&i| b(i)).collect();
    v2.extend(phi2.iter().map(|&i| a(i)));
    v2.extend(pi2.iter().flat_map(|&i| team_lists[i][2].clone()));

    let mut parties: Vec<Vec<String>> = (0..n).map(|i| vec![a(i)]).collect();
    parties.extend((0..n).map(|i| vec![b(i)]));
    parties.extend(teams.iter().flat_map(|t| lists.parties(t)));
    assemble(parties, vec![v, v1, v2], 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::copeland_scores;

    fn two_couples() -> MmcInstance {
        MmcInstance::new(
            &[],
            &["c1", "c2"],
            &["r1", "r2"],
            &[("c1", "r1"), ("c1", "r2"), ("c2", "r1"), ("c2", "r2")],
        )
        .unwrap()
    }

    #[test]
    fn teams_and_parties() {
        let m = two_couples();
        let teams = mmc_teams(&m).unwrap();
        assert_eq!(teams.len(), 9);
        assert_eq!(teams[8], Team::Dummy(3));
        let inst = gen_mmc_copeland_3v(&m).unwrap();
        assert_eq!(inst.num_parties(), 81);
        assert_eq!(inst.max_party_size(), 2);
        assert_eq!(inst.parties().iter().filter(|p| p.len() == 2).count(), 10);
    }

    #[test]
    fn a1_score_is_fixed() {
        let inst = gen_mmc_copeland_3v(&two_couples()).unwrap();
        for pick in [0usize, 1] {
            let nom: Vec<usize> = inst.parties().iter().map(|p| p[pick.min(p.len() - 1)]).collect();
            let red = inst.reduce(&nom).unwrap();
            let s = copeland_scores(&red)[red.index_of("a1").unwrap()];
            assert_eq!((s.wins, s.ties), (41, 0));
        }
    }

    #[test]
    fn rejects_non_normal_input() {
        let m = MmcInstance::new(&["s"], &[], &["r"], &[("s", "r")]).unwrap();
        assert!(gen_mmc_copeland_3v(&m).is_err());
        let bad_order = vec![Team::Dummy(1)];
        assert!(gen_mmc_copeland_3v_with_order(&two_couples(), &bad_order).is_err());
    }
}
