//! Exact solvers for the source problems, used as ground truth.
//!
//! The backtracking searches count visited nodes and give up with
//! [`Error::Budget`] once `ORACLE_NODE_BUDGET` is exceeded.

use std::collections::{BTreeMap, BTreeSet};

use varisat::{ExtendFormula, Lit, Solver};

use super::cnf::Cnf;
use super::graph::Graph;
use super::mmc::MmcInstance;
use crate::error::{Error, Result};

pub const ORACLE_NODE_BUDGET: u64 = 1 << 24;

struct Counter {
    left: u64,
    what: &'static str,
}

impl Counter {
    fn new(what: &'static str) -> Self {
        Counter {
            left: ORACLE_NODE_BUDGET,
            what,
        }
    }

    fn tick(&mut self) -> Result<()> {
        if self.left == 0 {
            return Err(Error::Budget(format!("{} oracle visited {ORACLE_NODE_BUDGET} nodes", self.what)));
        }
        self.left -= 1;
        Ok(())
    }
}

/// A proper coloring with colors `0..3`, vertex by vertex.
pub fn solve_3coloring(g: &Graph) -> Result<Option<Vec<u8>>> {
    fn go(g: &Graph, colors: &mut Vec<u8>, budget: &mut Counter) -> Result<bool> {
        budget.tick()?;
        let v = colors.len();
        if v == g.num_vertices() {
            return Ok(true);
        }
        for c in 0..3u8 {
            if (0..v).all(|u| colors[u] != c || !g.has_edge(u, v)) {
                colors.push(c);
                if go(g, colors, budget)? {
                    return Ok(true);
                }
                colors.pop();
            }
        }
        Ok(false)
    }
    let mut colors = Vec::with_capacity(g.num_vertices());
    let found = go(g, &mut colors, &mut Counter::new("3-coloring"))?;
    Ok(found.then_some(colors))
}

/// One vertex per color class, pairwise adjacent.
pub fn solve_mcq(g: &Graph) -> Result<Option<Vec<usize>>> {
    let classes = g
        .classes()
        .ok_or_else(|| Error::Precondition("multicolored clique needs color classes".into()))?;
    fn go(g: &Graph, classes: &[Vec<usize>], pick: &mut Vec<usize>, budget: &mut Counter) -> Result<bool> {
        budget.tick()?;
        let Some(class) = classes.get(pick.len()) else {
            return Ok(true);
        };
        for &v in class {
            if pick.iter().all(|&u| g.has_edge(u, v)) {
                pick.push(v);
                if go(g, classes, pick, budget)? {
                    return Ok(true);
                }
                pick.pop();
            }
        }
        Ok(false)
    }
    let mut pick = Vec::new();
    let found = go(g, classes, &mut pick, &mut Counter::new("multicolored clique"))?;
    Ok(found.then_some(pick))
}

/// A satisfying assignment, `result[i]` for variable `i + 1`.
pub fn solve_3sat(f: &Cnf) -> Result<Option<Vec<bool>>> {
    fn falsified(f: &Cnf, a: &[bool]) -> bool {
        f.clauses().iter().any(|c| {
            c.iter().all(|&l| {
                let v = l.unsigned_abs() as usize - 1;
                v < a.len() && a[v] != (l > 0)
            })
        })
    }
    fn go(f: &Cnf, a: &mut Vec<bool>, budget: &mut Counter) -> Result<bool> {
        budget.tick()?;
        if falsified(f, a) {
            return Ok(false);
        }
        if a.len() == f.num_vars() {
            return Ok(true);
        }
        for value in [false, true] {
            a.push(value);
            if go(f, a, budget)? {
                return Ok(true);
            }
            a.pop();
        }
        Ok(false)
    }
    let mut a = Vec::with_capacity(f.num_vars());
    let found = go(f, &mut a, &mut Counter::new("3-SAT"))?;
    Ok(found.then_some(a))
}

/// At most `k` of `xs` true (sequential counter).
fn at_most(solver: &mut Solver, xs: &[Lit], k: usize) {
    if xs.len() <= k {
        return;
    }
    if k == 0 {
        for &x in xs {
            solver.add_clause(&[!x]);
        }
        return;
    }
    // count[j] of row i: at least j + 1 of xs[..=i] are true.
    let mut prev: Vec<Lit> = Vec::new();
    for (i, &x) in xs.iter().enumerate() {
        let row: Vec<Lit> = (0..k).map(|_| solver.new_lit()).collect();
        solver.add_clause(&[!x, row[0]]);
        for j in 0..k {
            if let Some(&p) = prev.get(j) {
                solver.add_clause(&[!p, row[j]]);
                if j > 0 {
                    solver.add_clause(&[!x, !prev[j - 1], row[j]]);
                }
            }
        }
        if let Some(&full) = prev.last() {
            solver.add_clause(&[!x, !full]);
        }
        if i == 0 {
            for &r in &row[1..] {
                solver.add_clause(&[!r]);
            }
        }
        prev = row;
    }
}

/// A complete matching as `(person, room)` pairs, ascending. The instance
/// is encoded as a formula and handed to a CDCL solver: every person takes
/// exactly one acceptable room, a room taking a couple takes nobody else,
/// and a room takes at most two singles.
pub fn solve_mmc(m: &MmcInstance) -> Result<Option<Vec<(String, String)>>> {
    let mut solver = Solver::new();
    let mut edge_lits: Vec<(&str, &str, Lit)> = Vec::new();
    let mut by_room: BTreeMap<&str, (Vec<Lit>, Vec<Lit>)> = BTreeMap::new();
    let people = m.singles().into_iter().map(|s| (s, false)).chain(m.couples().into_iter().map(|c| (c, true)));
    for (x, couple) in people {
        let lits: Vec<Lit> = m
            .neighbors(x)
            .into_iter()
            .map(|r| {
                let l = solver.new_lit();
                edge_lits.push((x, r, l));
                let (singles, couples) = by_room.entry(r).or_default();
                if couple { couples } else { singles }.push(l);
                l
            })
            .collect();
        solver.add_clause(&lits);
        at_most(&mut solver, &lits, 1);
    }
    for (singles, couples) in by_room.values() {
        at_most(&mut solver, couples, 1);
        at_most(&mut solver, singles, 2);
        for &c in couples {
            for &s in singles {
                solver.add_clause(&[!c, !s]);
            }
        }
    }
    let sat = solver
        .solve()
        .map_err(|e| Error::Budget(format!("room matching oracle: {e}")))?;
    if !sat {
        return Ok(None);
    }
    let model: BTreeSet<Lit> = solver.model().expect("satisfiable").into_iter().collect();
    let mut out: Vec<(String, String)> = edge_lits
        .into_iter()
        .filter(|(_, _, l)| model.contains(l))
        .map(|(x, r, _)| (x.to_string(), r.to_string()))
        .collect();
    out.sort();
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::Kind;

    #[test]
    fn coloring() {
        assert!(solve_3coloring(&Graph::complete(3)).unwrap().is_some());
        assert!(solve_3coloring(&Graph::complete(4)).unwrap().is_none());
        let g = Graph::parse("a b\nb c\nc d\nd a\n").unwrap();
        let col = solve_3coloring(&g).unwrap().unwrap();
        assert!(g.edges().iter().all(|&(u, v)| col[u] != col[v]));
    }

    #[test]
    fn clique() {
        let g = Graph::parse("class a1 a2\nclass b1 b2\nclass c1\na2 b1\nb1 c1\na2 c1\na1 b2\n").unwrap();
        let pick = solve_mcq(&g).unwrap().unwrap();
        let names: Vec<&str> = pick.iter().map(|&v| g.vertices()[v].as_str()).collect();
        assert_eq!(names, ["a2", "b1", "c1"]);
        let g = Graph::parse("class a1\nclass b1\nclass c1\na1 b1\nb1 c1\n").unwrap();
        assert!(solve_mcq(&g).unwrap().is_none());
    }

    #[test]
    fn sat() {
        let f = Cnf::new(2, vec![[1, 2, -1], [-2, 1, 2]]).unwrap();
        let a = solve_3sat(&f).unwrap().unwrap();
        assert!(f.satisfied_by(&a));
        let all: Vec<[i32; 3]> = (0..8)
            .map(|bits| [1, 2, 3].map(|v| if bits >> (v - 1) & 1 == 1 { v } else { -v }))
            .collect();
        assert!(solve_3sat(&Cnf::new(3, all).unwrap()).unwrap().is_none());
    }

    #[test]
    fn matching() {
        let m = MmcInstance::new(
            &[],
            &["c1", "c2"],
            &["r1", "r2"],
            &[("c1", "r1"), ("c1", "r2"), ("c2", "r1"), ("c2", "r2")],
        )
        .unwrap();
        let pairs = solve_mmc(&m).unwrap().unwrap();
        assert_eq!(pairs.len(), 2);
        assert_ne!(pairs[0].1, pairs[1].1);
        assert!(solve_mmc(&MmcInstance::no_instance()).unwrap().is_none());
        let singles = MmcInstance::new(&["a", "b", "c"], &[], &["r"], &[("a", "r"), ("b", "r"), ("c", "r")]).unwrap();
        assert!(solve_mmc(&singles).unwrap().is_none());
    }

    #[test]
    fn counters() {
        // Count models of at_most(k) over n inputs.
        for n in 1..=5usize {
            for k in 0..=3usize {
                let mut solver = Solver::new();
                let xs: Vec<Lit> = (0..n).map(|_| solver.new_lit()).collect();
                at_most(&mut solver, &xs, k);
                let mut models = 0;
                for mask in 0u32..1 << n {
                    let assumptions: Vec<Lit> =
                        xs.iter().enumerate().map(|(i, &x)| if mask >> i & 1 == 1 { x } else { !x }).collect();
                    solver.assume(&assumptions);
                    if solver.solve().unwrap() {
                        models += 1;
                        assert!(mask.count_ones() as usize <= k);
                    }
                }
                let want: usize = (0..=k.min(n)).map(|j| binom(n, j)).sum();
                assert_eq!(models, want, "n={n} k={k}");
            }
        }
    }

    /// Tries every room choice for every person.
    fn enumerate_matchings(m: &MmcInstance) -> bool {
        let people: Vec<&str> = m.singles().into_iter().chain(m.couples()).collect();
        let options: Vec<Vec<&str>> = people.iter().map(|p| m.neighbors(p)).collect();
        fn go<'a>(m: &MmcInstance, people: &[&'a str], options: &[Vec<&'a str>], load: &mut BTreeMap<&'a str, (u32, bool)>) -> bool {
            let Some((&p, rest)) = people.split_first() else {
                return true;
            };
            let couple = m.kind(p) == Some(Kind::Couple);
            for &r in &options[0] {
                let (used, has_couple) = load.get(r).copied().unwrap_or((0, false));
                let ok = if couple { used == 0 } else { used < 2 && !has_couple };
                if ok {
                    load.insert(r, (used + if couple { 2 } else { 1 }, couple || has_couple));
                    if go(m, rest, &options[1..], load) {
                        return true;
                    }
                    load.insert(r, (used, has_couple));
                }
            }
            false
        }
        go(m, &people, &options, &mut BTreeMap::new())
    }

    #[test]
    fn matching_agrees_with_enumeration() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(9);
        let mut yes = 0;
        for _ in 0..400 {
            let rooms: Vec<String> = (0..rng.gen_range(1..=4)).map(|i| format!("r{i}")).collect();
            let singles: Vec<String> = (0..rng.gen_range(0..=5)).map(|i| format!("s{i}")).collect();
            let couples: Vec<String> = (0..rng.gen_range(0..=3)).map(|i| format!("c{i}")).collect();
            let mut edges = Vec::new();
            for p in singles.iter().chain(&couples) {
                for r in &rooms {
                    if rng.gen_bool(0.5) {
                        edges.push((p.clone(), r.clone()));
                    }
                }
            }
            let m = MmcInstance::new(&singles, &couples, &rooms, &edges).unwrap();
            let got = solve_mmc(&m).unwrap();
            assert_eq!(got.is_some(), enumerate_matchings(&m), "{}", m.to_json());
            if let Some(pairs) = got {
                yes += 1;
                assert_eq!(pairs.len(), singles.len() + couples.len());
                assert!(pairs.iter().all(|(p, r)| m.neighbors(p).contains(&r.as_str())));
            }
        }
        assert!(yes > 40 && yes < 360, "{yes}");
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
}
