//! Partitioned subdigraph isomorphism for patterns of maximum indegree 1.
//!
//! Given a pattern digraph `D`, a host digraph `H` and a labelling of host
//! vertices by pattern vertices, find `f: V(D) -> V(H)` with `label(f(v)) = v`
//! such that every pattern arc `(a, b)` maps to a host arc `(f(a), f(b))`.
//!
//! The fast solver removes pattern leaves (rule 1), then shortcuts cycle
//! vertices (rule 2), then checks the remaining isolated vertices and loops.
//! Each step is logged so an embedding of the reduced instance can be
//! expanded back into an embedding of the original one.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on `Π |Γ_v|` for [`brute_force_psi`].
pub const DEFAULT_BRUTE_FORCE_GUARD: u128 = 1 << 24;

/// A digraph on vertices `0..n`. Loops are allowed, parallel arcs are not.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph { n, arcs: BTreeSet::new() }
    }

    pub fn with_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Digraph::new(n);
        for (a, b) in arcs {
            g.add_arc(a, b)?;
        }
        Ok(g)
    }

    pub fn add_arc(&mut self, a: usize, b: usize) -> Result<()> {
        if a >= self.n || b >= self.n {
            return Err(Error::InvalidInstance(format!("arc ({a}, {b}) leaves the vertex set 0..{}", self.n)));
        }
        self.arcs.insert((a, b));
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &BTreeSet<(usize, usize)> {
        &self.arcs
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.arcs.contains(&(a, b))
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(_, b) in &self.arcs {
            deg[b] += 1;
        }
        deg
    }
}

/// A labelled pattern/host pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiInstance {
    pub pattern: Digraph,
    pub host: Digraph,
    /// `labels[x]` is the pattern vertex host vertex `x` may represent.
    pub labels: Vec<usize>,
}

impl PsiInstance {
    pub fn new(pattern: Digraph, host: Digraph, labels: Vec<usize>) -> Result<Self> {
        if labels.len() != host.num_vertices() {
            return Err(Error::InvalidInstance(format!(
                "{} labels for {} host vertices",
                labels.len(),
                host.num_vertices()
            )));
        }
        if let Some(&l) = labels.iter().find(|&&l| l >= pattern.num_vertices()) {
            return Err(Error::InvalidInstance(format!("label {l} is not a pattern vertex")));
        }
        Ok(PsiInstance { pattern, host, labels })
    }

    /// Host vertices carrying label `v`, ascending.
    pub fn class(&self, v: usize) -> Vec<usize> {
        (0..self.labels.len()).filter(|&x| self.labels[x] == v).collect()
    }

    /// True iff `f` is a label-respecting embedding of the pattern into the host.
    pub fn is_embedding(&self, f: &[usize]) -> bool {
        f.len() == self.pattern.num_vertices()
            && f.iter().enumerate().all(|(v, &x)| x < self.labels.len() && self.labels[x] == v)
            && self.pattern.arcs().iter().all(|&(a, b)| self.host.has_arc(f[a], f[b]))
    }
}

/// One logged rule application, enough to undo it on an embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RuleStep {
    /// Pattern leaf `removed` with parent `parent` was deleted; `choice` maps
    /// each surviving host vertex of the parent to an out-neighbour labelled `removed`.
    Leaf {
        removed: usize,
        parent: usize,
        choice: BTreeMap<usize, usize>,
    },
    /// Pattern vertex `removed` on the path `from -> removed -> to` was
    /// shortcut; `via` gives, for each new host arc, the host vertex it skips.
    Cycle {
        removed: usize,
        from: usize,
        to: usize,
        via: BTreeMap<(usize, usize), usize>,
    },
}

/// Working state of the rule-based solver. Vertex numbering is that of the
/// original instance; deleted vertices simply disappear from every set.
#[derive(Clone, Debug)]
pub struct Reducer {
    p_alive: Vec<bool>,
    p_out: Vec<BTreeSet<usize>>,
    p_in: Vec<BTreeSet<usize>>,
    h_alive: Vec<bool>,
    h_out: Vec<BTreeSet<usize>>,
    h_in: Vec<BTreeSet<usize>>,
    classes: Vec<BTreeSet<usize>>,
    labels: Vec<usize>,
    trace: Vec<RuleStep>,
}

impl Reducer {
    /// Requires pattern indegree at most 1 (a loop counts as an in-arc).
    pub fn new(inst: &PsiInstance) -> Result<Self> {
        if let Some(v) = inst.pattern.in_degrees().iter().position(|&d| d > 1) {
            return Err(Error::Precondition(format!("pattern vertex {v} has indegree above 1")));
        }
        let (pn, hn) = (inst.pattern.num_vertices(), inst.host.num_vertices());
        let mut r = Reducer {
            p_alive: vec![true; pn],
            p_out: vec![BTreeSet::new(); pn],
            p_in: vec![BTreeSet::new(); pn],
            h_alive: vec![true; hn],
            h_out: vec![BTreeSet::new(); hn],
            h_in: vec![BTreeSet::new(); hn],
            classes: vec![BTreeSet::new(); pn],
            labels: inst.labels.clone(),
            trace: Vec::new(),
        };
        for &(a, b) in inst.pattern.arcs() {
            r.p_out[a].insert(b);
            r.p_in[b].insert(a);
        }
        for &(x, y) in inst.host.arcs() {
            r.h_out[x].insert(y);
            r.h_in[y].insert(x);
        }
        for (x, &l) in inst.labels.iter().enumerate() {
            r.classes[l].insert(x);
        }
        Ok(r)
    }

    pub fn trace(&self) -> &[RuleStep] {
        &self.trace
    }

    fn delete_host(&mut self, x: usize) {
        self.h_alive[x] = false;
        self.classes[self.labels[x]].remove(&x);
        for y in std::mem::take(&mut self.h_out[x]) {
            self.h_in[y].remove(&x);
        }
        for y in std::mem::take(&mut self.h_in[x]) {
            self.h_out[y].remove(&x);
        }
    }

    fn delete_pattern(&mut self, v: usize) {
        self.p_alive[v] = false;
        for w in std::mem::take(&mut self.p_out[v]) {
            self.p_in[w].remove(&v);
        }
        for u in std::mem::take(&mut self.p_in[v]) {
            self.p_out[u].remove(&v);
        }
        let members: Vec<usize> = self.classes[v].iter().copied().collect();
        for x in members {
            self.delete_host(x);
        }
    }

    fn single(set: &BTreeSet<usize>) -> Option<usize> {
        (set.len() == 1).then(|| *set.iter().next().unwrap())
    }

    fn leaf_parent(&self, v: usize) -> Option<usize> {
        if !self.p_alive[v] || !self.p_out[v].is_empty() {
            return None;
        }
        Self::single(&self.p_in[v]).filter(|&u| u != v)
    }

    fn cycle_ends(&self, v: usize) -> Option<(usize, usize)> {
        if !self.p_alive[v] {
            return None;
        }
        let w = Self::single(&self.p_out[v])?;
        let u = Self::single(&self.p_in[v])?;
        (w != v && !self.p_out[u].contains(&w)).then_some((u, w))
    }

    /// Rule 1 on the smallest pattern leaf, if any.
    pub fn apply_leaf(&mut self) -> Option<&RuleStep> {
        let (v, u) = (0..self.p_alive.len()).find_map(|v| self.leaf_parent(v).map(|u| (v, u)))?;
        let mut choice = BTreeMap::new();
        let mut doomed = Vec::new();
        for &x in &self.classes[u] {
            match self.h_out[x].iter().copied().find(|&y| self.labels[y] == v) {
                Some(y) => {
                    choice.insert(x, y);
                }
                None => doomed.push(x),
            }
        }
        for x in doomed {
            self.delete_host(x);
        }
        self.delete_pattern(v);
        self.trace.push(RuleStep::Leaf { removed: v, parent: u, choice });
        self.trace.last()
    }

    /// Rule 2 on the smallest applicable pattern vertex, if any.
    pub fn apply_cycle(&mut self) -> Option<&RuleStep> {
        let (v, (u, w)) = (0..self.p_alive.len()).find_map(|v| self.cycle_ends(v).map(|e| (v, e)))?;
        let mut via = BTreeMap::new();
        for &z in &self.classes[v] {
            for &x in self.h_in[z].iter().filter(|&&x| self.labels[x] == u) {
                for &y in self.h_out[z].iter().filter(|&&y| self.labels[y] == w) {
                    via.entry((x, y)).or_insert(z);
                }
            }
        }
        self.delete_pattern(v);
        let stale: Vec<(usize, usize)> = self.classes[u]
            .iter()
            .flat_map(|&x| self.h_out[x].iter().filter(|&&y| self.labels[y] == w).map(move |&y| (x, y)))
            .collect();
        for (x, y) in stale {
            self.h_out[x].remove(&y);
            self.h_in[y].remove(&x);
        }
        for &(x, y) in via.keys() {
            self.h_out[x].insert(y);
            self.h_in[y].insert(x);
        }
        self.p_out[u].insert(w);
        self.p_in[w].insert(u);
        self.trace.push(RuleStep::Cycle { removed: v, from: u, to: w, via });
        self.trace.last()
    }

    /// Surviving pattern vertices, ascending.
    pub fn pattern_vertices(&self) -> Vec<usize> {
        (0..self.p_alive.len()).filter(|&v| self.p_alive[v]).collect()
    }

    /// True once neither rule applies.
    pub fn is_reduced(&self) -> bool {
        (0..self.p_alive.len()).all(|v| self.leaf_parent(v).is_none() && self.cycle_ends(v).is_none())
    }

    /// The current state as a standalone instance with vertices renumbered
    /// in ascending order. Also returns the surviving original pattern and
    /// host vertex numbers.
    pub fn snapshot(&self) -> (PsiInstance, Vec<usize>, Vec<usize>) {
        let pv = self.pattern_vertices();
        let hv: Vec<usize> = (0..self.h_alive.len()).filter(|&x| self.h_alive[x]).collect();
        let pos = |list: &[usize], x: usize| list.binary_search(&x).unwrap();
        let mut pattern = Digraph::new(pv.len());
        for &a in &pv {
            for &b in &self.p_out[a] {
                pattern.arcs.insert((pos(&pv, a), pos(&pv, b)));
            }
        }
        let mut host = Digraph::new(hv.len());
        for &x in &hv {
            for &y in &self.h_out[x] {
                host.arcs.insert((pos(&hv, x), pos(&hv, y)));
            }
        }
        let labels = hv.iter().map(|&x| pos(&pv, self.labels[x])).collect();
        (PsiInstance { pattern, host, labels }, pv, hv)
    }

    /// Solves the fully reduced instance: every surviving pattern vertex must
    /// be isolated apart from an optional loop. Returns a partial assignment
    /// over surviving pattern vertices (indexed by original number).
    pub fn final_check(&self) -> Option<Vec<Option<usize>>> {
        let mut f = vec![None; self.p_alive.len()];
        for v in self.pattern_vertices() {
            let looped = self.p_out[v].contains(&v);
            assert!(
                self.p_out[v].iter().all(|&w| w == v),
                "non-loop pattern arc survived rule exhaustion at vertex {v}"
            );
            f[v] = Some(
                self.classes[v]
                    .iter()
                    .copied()
                    .find(|&x| !looped || self.h_out[x].contains(&x))?,
            );
        }
        Some(f)
    }

    /// Undoes the logged rules on an assignment of the surviving pattern vertices.
    pub fn expand(&self, mut f: Vec<Option<usize>>) -> Vec<usize> {
        for step in self.trace.iter().rev() {
            match step {
                RuleStep::Leaf { removed, parent, choice } => {
                    let x = f[*parent].expect("parent assigned before its leaf");
                    f[*removed] = Some(choice[&x]);
                }
                RuleStep::Cycle { removed, from, to, via } => {
                    let (x, y) = (f[*from].unwrap(), f[*to].unwrap());
                    f[*removed] = Some(via[&(x, y)]);
                }
            }
        }
        f.into_iter().map(|x| x.expect("every pattern vertex assigned")).collect()
    }
}

/// Decides the instance with the two rules and returns an embedding
/// (indexed by pattern vertex) when one exists.
pub fn solve_psi(inst: &PsiInstance) -> Result<Option<Vec<usize>>> {
    if let Some(&(v, _)) = inst.pattern.arcs().iter().find(|&&(a, b)| a == b) {
        return Err(Error::Precondition(format!("pattern vertex {v} has a loop")));
    }
    let mut r = Reducer::new(inst)?;
    while r.apply_leaf().is_some() {}
    while r.apply_cycle().is_some() {}
    Ok(r.final_check().map(|f| r.expand(f)))
}

/// Exhaustive search; returns the lexicographically smallest embedding.
/// Accepts any pattern, including loops and higher indegree.
pub fn brute_force_psi(inst: &PsiInstance, guard: u128) -> Result<Option<Vec<usize>>> {
    let n = inst.pattern.num_vertices();
    let classes: Vec<Vec<usize>> = (0..n).map(|v| inst.class(v)).collect();
    let size = classes.iter().fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128));
    if size > guard {
        return Err(Error::TooLarge {
            what: "brute-force subdigraph matcher".into(),
            size,
            limit: guard,
        });
    }
    // Arcs checked when the later endpoint is placed.
    let mut checks: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for &(a, b) in inst.pattern.arcs() {
        checks[a.max(b)].push((a, b));
    }
    fn go(
        v: usize,
        inst: &PsiInstance,
        classes: &[Vec<usize>],
        checks: &[Vec<(usize, usize)>],
        f: &mut Vec<usize>,
    ) -> bool {
        if v == classes.len() {
            return true;
        }
        for &x in &classes[v] {
            f.push(x);
            if checks[v].iter().all(|&(a, b)| inst.host.has_arc(f[a], f[b])) && go(v + 1, inst, classes, checks, f) {
                return true;
            }
            f.pop();
        }
        false
    }
    let mut f = Vec::with_capacity(n);
    Ok(go(0, inst, &classes, &checks, &mut f).then_some(f))
}

#[derive(Debug, Serialize, Deserialize)]
struct PatternDoc {
    vertices: Vec<String>,
    #[serde(default)]
    arcs: Vec<(String, String)>,
}

#[derive(Debug, Serialize, Deserialize)]
struct HostDoc {
    vertices: Vec<String>,
    #[serde(default)]
    arcs: Vec<(String, String)>,
    labels: BTreeMap<String, String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct PsiDoc {
    pattern: PatternDoc,
    host: HostDoc,
}

/// A [`PsiInstance`] together with the string ids of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedPsi {
    pub instance: PsiInstance,
    pub pattern_ids: Vec<String>,
    pub host_ids: Vec<String>,
}

impl NamedPsi {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: PsiDoc = serde_json::from_str(text).map_err(|e| Error::parse("psi json", e.to_string()))?;
        let index = |ids: &[String], what: &str| -> Result<BTreeMap<String, usize>> {
            let mut m = BTreeMap::new();
            for (i, id) in ids.iter().enumerate() {
                if m.insert(id.clone(), i).is_some() {
                    return Err(Error::parse("psi json", format!("duplicate {what} vertex {id:?}")));
                }
            }
            Ok(m)
        };
        let pidx = index(&doc.pattern.vertices, "pattern")?;
        let hidx = index(&doc.host.vertices, "host")?;
        let look = |m: &BTreeMap<String, usize>, id: &str| {
            m.get(id)
                .copied()
                .ok_or_else(|| Error::parse("psi json", format!("unknown vertex {id:?}")))
        };
        let mut pattern = Digraph::new(pidx.len());
        for (a, b) in &doc.pattern.arcs {
            pattern.add_arc(look(&pidx, a)?, look(&pidx, b)?)?;
        }
        let mut host = Digraph::new(hidx.len());
        for (a, b) in &doc.host.arcs {
            host.add_arc(look(&hidx, a)?, look(&hidx, b)?)?;
        }
        let labels = doc
            .host
            .vertices
            .iter()
            .map(|x| {
                let l = doc
                    .host
                    .labels
                    .get(x)
                    .ok_or_else(|| Error::parse("psi json", format!("host vertex {x:?} has no label")))?;
                look(&pidx, l)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(NamedPsi {
            instance: PsiInstance::new(pattern, host, labels)?,
            pattern_ids: doc.pattern.vertices,
            host_ids: doc.host.vertices,
        })
    }

    pub fn to_json(&self) -> String {
        let (p, h) = (&self.pattern_ids, &self.host_ids);
        let doc = PsiDoc {
            pattern: PatternDoc {
                vertices: p.clone(),
                arcs: self.instance.pattern.arcs().iter().map(|&(a, b)| (p[a].clone(), p[b].clone())).collect(),
            },
            host: HostDoc {
                vertices: h.clone(),
                arcs: self.instance.host.arcs().iter().map(|&(a, b)| (h[a].clone(), h[b].clone())).collect(),
                labels: (0..h.len()).map(|x| (h[x].clone(), p[self.instance.labels[x]].clone())).collect(),
            },
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(pn: usize, parcs: &[(usize, usize)], labels: &[usize], harcs: &[(usize, usize)]) -> PsiInstance {
        PsiInstance::new(
            Digraph::with_arcs(pn, parcs.iter().copied()).unwrap(),
            Digraph::with_arcs(labels.len(), harcs.iter().copied()).unwrap(),
            labels.to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn single_vertex() {
        let i = inst(1, &[], &[0], &[]);
        assert_eq!(solve_psi(&i).unwrap(), Some(vec![0]));
        assert_eq!(brute_force_psi(&i, 10).unwrap(), Some(vec![0]));
    }

    #[test]
    fn leaf_rule_keeps_matched_parent() {
        let i = inst(2, &[(0, 1)], &[0, 1], &[(0, 1)]);
        let mut r = Reducer::new(&i).unwrap();
        r.apply_leaf().unwrap();
        let (snap, pv, hv) = r.snapshot();
        assert_eq!((pv, hv), (vec![0], vec![0]));
        assert_eq!(snap.pattern.num_vertices(), 1);
        assert_eq!(solve_psi(&i).unwrap(), Some(vec![0, 1]));
    }

    #[test]
    fn leaf_rule_drops_unmatched_parent() {
        let i = inst(2, &[(0, 1)], &[0, 1], &[]);
        let mut r = Reducer::new(&i).unwrap();
        r.apply_leaf().unwrap();
        let (snap, _, hv) = r.snapshot();
        assert!(hv.is_empty());
        assert_eq!(snap.host.num_vertices(), 0);
        assert_eq!(solve_psi(&i).unwrap(), None);
        assert_eq!(brute_force_psi(&i, 10).unwrap(), None);
    }

    #[test]
    fn two_cycle_becomes_loop() {
        let i = inst(2, &[(0, 1), (1, 0)], &[0, 1], &[(0, 1), (1, 0)]);
        let mut r = Reducer::new(&i).unwrap();
        assert!(r.apply_leaf().is_none());
        r.apply_cycle().unwrap();
        let (snap, pv, _) = r.snapshot();
        assert_eq!(pv, vec![1]);
        assert!(snap.pattern.has_arc(0, 0));
        assert!(snap.host.has_arc(0, 0));
        assert_eq!(solve_psi(&i).unwrap(), Some(vec![0, 1]));
    }

    #[test]
    fn three_cycle_shortens() {
        let i = inst(3, &[(0, 1), (1, 2), (2, 0)], &[0, 1, 2], &[(0, 1), (1, 2), (2, 0)]);
        let mut r = Reducer::new(&i).unwrap();
        r.apply_cycle().unwrap();
        let (snap, pv, _) = r.snapshot();
        assert_eq!(pv, vec![1, 2]);
        assert_eq!(snap.pattern.arcs().iter().copied().collect::<Vec<_>>(), vec![(0, 1), (1, 0)]);
        assert_eq!(solve_psi(&i).unwrap(), Some(vec![0, 1, 2]));
    }

    #[test]
    fn empty_class_and_empty_pattern() {
        let i = inst(2, &[], &[0], &[]);
        assert_eq!(solve_psi(&i).unwrap(), None);
        assert_eq!(brute_force_psi(&i, 10).unwrap(), None);
        let e = inst(0, &[], &[], &[]);
        assert_eq!(brute_force_psi(&e, 10).unwrap(), Some(vec![]));
        assert_eq!(solve_psi(&e).unwrap(), Some(vec![]));
    }

    #[test]
    fn preconditions() {
        let looped = inst(1, &[(0, 0)], &[0], &[(0, 0)]);
        assert!(solve_psi(&looped).is_err());
        assert_eq!(brute_force_psi(&looped, 10).unwrap(), Some(vec![0]));
        let fan_in = inst(3, &[(0, 2), (1, 2)], &[0, 1, 2], &[]);
        assert!(solve_psi(&fan_in).is_err());
        let big = inst(2, &[], &[0, 0, 0, 1, 1, 1], &[]);
        assert!(matches!(brute_force_psi(&big, 8), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"pattern":{"vertices":["u","v"],"arcs":[["u","v"]]},
            "host":{"vertices":["x","y"],"arcs":[["x","y"]],"labels":{"x":"u","y":"v"}}}"#;
        let named = NamedPsi::from_json(text).unwrap();
        assert_eq!(solve_psi(&named.instance).unwrap(), Some(vec![0, 1]));
        assert_eq!(NamedPsi::from_json(&named.to_json()).unwrap(), named);
    }
}
