//! Shared fixtures: exhaustive and seeded-random source instances, plus
//! small election helpers written independently of the library's scoring.

#![allow(dead_code)]

use nomination::psi::{Digraph, PsiInstance};
use nomination::reductions::{Cnf, Graph, MmcInstance};
use nomination::solvers::{solve_bruteforce, SolveResult, SolverConfig};
use nomination::{Election, NominationInstance, Rule};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Exhaustive search with no size guard.
pub fn brute(inst: &NominationInstance, rule: Rule) -> SolveResult {
    let config = SolverConfig {
        force: true,
        ..SolverConfig::default()
    };
    solve_bruteforce(inst, rule, &config).expect("brute force runs")
}

/// Every simple graph on `n` vertices `v1..vn`, edge sets in binary order.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0..1u32 << pairs.len())
        .map(|mask| {
            let edges: Vec<(String, String)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &(i, j))| (names[i].clone(), names[j].clone()))
                .collect();
            Graph::new(&names, &edges).unwrap()
        })
        .collect()
}

/// `k` classes of 1..=max_class vertices; each cross pair is an edge with probability `p`.
pub fn random_colored_graph(rng: &mut StdRng, k: usize, max_class: usize, p: f64) -> Graph {
    let classes: Vec<Vec<String>> = (0..k)
        .map(|c| (0..rng.gen_range(1..=max_class)).map(|i| format!("u{c}_{i}")).collect())
        .collect();
    let all: Vec<(usize, String)> = classes
        .iter()
        .enumerate()
        .flat_map(|(c, vs)| vs.iter().map(move |v| (c, v.clone())))
        .collect();
    let mut edges = Vec::new();
    for (i, (ci, a)) in all.iter().enumerate() {
        for (cj, b) in &all[i + 1..] {
            if ci != cj && rng.gen_bool(p) {
                edges.push((a.clone(), b.clone()));
            }
        }
    }
    let names: Vec<String> = all.into_iter().map(|(_, v)| v).collect();
    Graph::new(&names, &edges).unwrap().with_classes(&classes).unwrap()
}

/// Sorted 3-literal clauses over variables `1..=n` (repetition allowed).
pub fn all_clauses(n: i32) -> Vec<[i32; 3]> {
    let lits: Vec<i32> = (1..=n).flat_map(|v| [v, -v]).collect();
    let mut out = Vec::new();
    for a in 0..lits.len() {
        for b in a..lits.len() {
            for c in b..lits.len() {
                out.push([lits[a], lits[b], lits[c]]);
            }
        }
    }
    out
}

/// Every nontrivial formula over exactly `n` declared variables with
/// `m` clauses, as a multiset of sorted clauses.
pub fn all_cnfs(n: i32, m: usize) -> Vec<Cnf> {
    let clauses = all_clauses(n);
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn go(clauses: &[[i32; 3]], from: usize, m: usize, n: i32, pick: &mut Vec<[i32; 3]>, out: &mut Vec<Cnf>) {
        if pick.len() == m {
            let f = Cnf::new(n as usize, pick.clone()).unwrap();
            if f.is_nontrivial() {
                out.push(f);
            }
            return;
        }
        for i in from..clauses.len() {
            pick.push(clauses[i]);
            go(clauses, i, m, n, pick, out);
            pick.pop();
        }
    }
    go(&clauses, 0, m, n, &mut pick, &mut out);
    out
}

pub fn random_cnf(rng: &mut StdRng, n: i32, m: usize) -> Cnf {
    loop {
        let clauses: Vec<[i32; 3]> = (0..m)
            .map(|_| {
                [0; 3].map(|_| {
                    let v = rng.gen_range(1..=n);
                    if rng.gen_bool(0.5) {
                        v
                    } else {
                        -v
                    }
                })
            })
            .collect();
        let f = Cnf::new(n as usize, clauses).unwrap();
        if f.is_nontrivial() {
            return f;
        }
    }
}

/// Up to `max_rooms` rooms. With probability `balanced` the demand of
/// singles and couples equals room capacity exactly; otherwise it falls
/// short by one or two. Every person accepts `min_degree` to three rooms
/// (capped by the room count).
pub fn random_mmc(rng: &mut StdRng, max_rooms: usize, balanced: f64, min_degree: usize) -> MmcInstance {
    let n_rooms = rng.gen_range(1..=max_rooms);
    let rooms: Vec<String> = (1..=n_rooms).map(|i| format!("r{i}")).collect();
    let n_couples = rng.gen_range(0..=n_rooms);
    let mut n_singles = 2 * (n_rooms - n_couples);
    if !rng.gen_bool(balanced) {
        n_singles = n_singles.saturating_sub(rng.gen_range(1..=2));
    }
    let couples: Vec<String> = (1..=n_couples).map(|i| format!("c{i}")).collect();
    let singles: Vec<String> = (1..=n_singles).map(|i| format!("s{i}")).collect();
    let mut edges = Vec::new();
    for person in singles.iter().chain(&couples) {
        let k = rng.gen_range(min_degree.min(n_rooms)..=n_rooms.min(3));
        let picks = rand::seq::index::sample(rng, n_rooms, k);
        for r in picks.iter() {
            edges.push((person.clone(), rooms[r].clone()));
        }
    }
    MmcInstance::new(&singles, &couples, &rooms, &edges).unwrap()
}

/// A balanced room instance already in normal form, by rejection sampling:
/// every person accepts two or three of `n_rooms` rooms.
pub fn random_normal_mmc(rng: &mut StdRng, n_rooms: usize) -> MmcInstance {
    let rooms: Vec<String> = (1..=n_rooms).map(|i| format!("r{i}")).collect();
    loop {
        let n_couples = rng.gen_range(0..=n_rooms);
        let couples: Vec<String> = (1..=n_couples).map(|i| format!("c{i}")).collect();
        let singles: Vec<String> = (1..=2 * (n_rooms - n_couples)).map(|i| format!("s{i}")).collect();
        let mut edges = Vec::new();
        for person in singles.iter().chain(&couples) {
            let k = rng.gen_range(2..=n_rooms.min(3));
            for r in rand::seq::index::sample(rng, n_rooms, k).iter() {
                edges.push((person.clone(), rooms[r].clone()));
            }
        }
        let m = MmcInstance::new(&singles, &couples, &rooms, &edges).unwrap();
        if m.is_normal_form() {
            return m;
        }
    }
}

/// Random strict rankings over `candidates`.
pub fn random_rankings(rng: &mut StdRng, candidates: &[String], voters: usize) -> Vec<Vec<String>> {
    (0..voters)
        .map(|_| {
            let mut r = candidates.to_vec();
            r.shuffle(rng);
            r
        })
        .collect()
}

/// At most `max_parties` parties of at most `max_sigma` members each, no more
/// than `max_candidates` candidates in total, random rankings.
pub fn random_instance(
    rng: &mut StdRng,
    voters: usize,
    max_parties: usize,
    max_sigma: usize,
    max_candidates: usize,
) -> NominationInstance {
    let t = rng.gen_range(1..=max_parties);
    let mut sizes: Vec<usize> = (0..t).map(|_| rng.gen_range(1..=max_sigma)).collect();
    while sizes.iter().sum::<usize>() > max_candidates {
        let i = sizes.iter().position(|&s| s > 1).unwrap();
        sizes[i] -= 1;
    }
    let mut next = 0;
    let parties: Vec<Vec<String>> = sizes
        .iter()
        .map(|&s| {
            (0..s)
                .map(|_| {
                    next += 1;
                    format!("c{next:02}")
                })
                .collect()
        })
        .collect();
    let names: Vec<String> = parties.iter().flatten().cloned().collect();
    let e = Election::new(&names, &random_rankings(rng, &names, voters)).unwrap();
    let d = rng.gen_range(0..t);
    NominationInstance::from_ids(e, &parties, d).unwrap()
}

/// One random member per party.
pub fn random_nomination(rng: &mut StdRng, inst: &NominationInstance) -> Vec<usize> {
    inst.parties().iter().map(|p| *p.choose(rng).unwrap()).collect()
}

/// `counts[a][b]`: voters ranking `a` above `b`, counted from the rankings.
pub fn pair_counts(rankings: &[Vec<usize>], m: usize) -> Vec<Vec<u32>> {
    let mut counts = vec![vec![0u32; m]; m];
    for r in rankings {
        for (i, &a) in r.iter().enumerate() {
            for &b in &r[i + 1..] {
                counts[a][b] += 1;
            }
        }
    }
    counts
}

/// `(wins, ties)` of every candidate among `among`, by index into the election.
pub fn copeland_among(inst: &NominationInstance, among: &[usize]) -> Vec<(u32, u32)> {
    let e = inst.election();
    let counts = pair_counts(e.rankings(), e.num_candidates());
    among
        .iter()
        .map(|&a| {
            among.iter().filter(|&&b| b != a).fold((0, 0), |(w, t), &b| {
                match counts[a][b].cmp(&counts[b][a]) {
                    std::cmp::Ordering::Greater => (w + 1, t),
                    std::cmp::Ordering::Equal => (w, t + 1),
                    std::cmp::Ordering::Less => (w, t),
                }
            })
        })
        .collect()
}

/// Maximin score of every candidate among `among` (at least two).
pub fn maximin_among(inst: &NominationInstance, among: &[usize]) -> Vec<u32> {
    let e = inst.election();
    let counts = pair_counts(e.rankings(), e.num_candidates());
    among
        .iter()
        .map(|&a| among.iter().filter(|&&b| b != a).map(|&b| counts[a][b]).min().unwrap())
        .collect()
}

/// Scores scaled to integers: Copeland as `wins·den + ties·num`.
pub fn scores_among(inst: &NominationInstance, rule: Rule, among: &[usize]) -> Vec<u64> {
    if among.len() == 1 {
        return vec![0];
    }
    match rule {
        Rule::Copeland(a) => copeland_among(inst, among)
            .into_iter()
            .map(|(w, t)| w as u64 * a.den() as u64 + t as u64 * a.num() as u64)
            .collect(),
        Rule::Maximin => maximin_among(inst, among).into_iter().map(u64::from).collect(),
    }
}

/// True iff the distinguished party's nominee is the unique winner.
pub fn wins_uniquely(inst: &NominationInstance, rule: Rule, nomination: &[usize]) -> bool {
    if nomination.len() != inst.num_parties()
        || nomination.iter().enumerate().any(|(i, c)| !inst.party(i).contains(c))
    {
        return false;
    }
    let s = scores_among(inst, rule, nomination);
    let d = inst.distinguished();
    (0..s.len()).all(|i| i == d || s[i] < s[d])
}

/// Plain enumeration of every nomination; the first winning one in
/// lexicographic order (party order, then member index).
pub fn enumerate_first(inst: &NominationInstance, rule: Rule) -> Option<Vec<usize>> {
    let parties = inst.parties();
    let mut idx = vec![0usize; parties.len()];
    loop {
        let nom: Vec<usize> = idx.iter().enumerate().map(|(i, &k)| parties[i][k]).collect();
        if wins_uniquely(inst, rule, &nom) {
            return Some(nom);
        }
        let mut i = parties.len();
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < parties[i].len() {
                break;
            }
            idx[i] = 0;
        }
    }
}

/// Every balanced normal-form room instance with 2..=`max_rooms` rooms, up to
/// renaming people of the same kind.
pub fn all_normal_mmc(max_rooms: usize) -> Vec<MmcInstance> {
    let mut out = Vec::new();
    for r in 2..=max_rooms {
        let rooms: Vec<String> = (1..=r).map(|i| format!("r{i}")).collect();
        let subsets: Vec<Vec<usize>> = (1u32..1 << r)
            .filter(|m| (2..=3).contains(&m.count_ones()))
            .map(|m| (0..r).filter(|i| m >> i & 1 == 1).collect())
            .collect();
        for c in 0..=r {
            let s = 2 * (r - c);
            let singles: Vec<String> = (1..=s).map(|i| format!("s{i}")).collect();
            let couples: Vec<String> = (1..=c).map(|i| format!("c{i}")).collect();
            // Non-decreasing subset choices within each kind.
            let mut pick = vec![0usize; s + c];
            loop {
                let sorted = pick[..s].windows(2).all(|w| w[0] <= w[1]) && pick[s..].windows(2).all(|w| w[0] <= w[1]);
                if sorted {
                    let edges: Vec<(String, String)> = singles
                        .iter()
                        .chain(&couples)
                        .zip(&pick)
                        .flat_map(|(x, &k)| subsets[k].iter().map(|&i| (x.clone(), rooms[i].clone())))
                        .collect();
                    let m = MmcInstance::new(&singles, &couples, &rooms, &edges).unwrap();
                    if m.is_normal_form() {
                        out.push(m);
                    }
                }
                let mut i = 0;
                while i < pick.len() {
                    pick[i] += 1;
                    if pick[i] < subsets.len() {
                        break;
                    }
                    pick[i] = 0;
                    i += 1;
                }
                if i == pick.len() {
                    break;
                }
            }
        }
    }
    out
}

/// Random pattern of at most `max_pattern` vertices and indegree at most one
/// (cycles allowed, no loops), and a labelled host of at most `max_host`
/// vertices whose arcs mostly follow pattern arcs.
pub fn random_psi(rng: &mut StdRng, max_pattern: usize, max_host: usize) -> PsiInstance {
    let np = rng.gen_range(1..=max_pattern);
    let mut parcs = Vec::new();
    for v in 0..np {
        if np > 1 && rng.gen_bool(0.7) {
            let u = (v + rng.gen_range(1..np)) % np;
            parcs.push((u, v));
        }
    }
    let nh = rng.gen_range(np..=max_host.max(np));
    let labels: Vec<usize> = (0..nh).map(|x| if x < np { x } else { rng.gen_range(0..np) }).collect();
    let mut labels = labels;
    labels.shuffle(rng);
    let density = rng.gen_range(0.2..0.8);
    let mut harcs = Vec::new();
    for x in 0..nh {
        for y in 0..nh {
            let follows = parcs.contains(&(labels[x], labels[y]));
            if (follows && rng.gen_bool(density)) || (x != y && rng.gen_bool(0.05)) {
                harcs.push((x, y));
            }
        }
    }
    PsiInstance::new(
        Digraph::with_arcs(np, parcs).unwrap(),
        Digraph::with_arcs(nh, harcs).unwrap(),
        labels,
    )
    .unwrap()
}
