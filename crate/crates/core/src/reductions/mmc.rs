//! Room assignment with couples: singles, couples and rooms joined by an
//! acceptability graph. A room holds one couple or up to two singles; a
//! complete matching places every single and every couple.
//!
//! JSON form: `{"singles": [..], "couples": [..], "rooms": [..],
//! "edges": [[person, room], ..]}`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::check_id;
use crate::error::{Error, Result};
use crate::io::Metadata;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Kind {
    Single,
    Couple,
    Room,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MmcInstance {
    kind: BTreeMap<String, Kind>,
    adj: BTreeMap<String, BTreeSet<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MmcDoc {
    #[serde(default)]
    singles: Vec<String>,
    #[serde(default)]
    couples: Vec<String>,
    #[serde(default)]
    rooms: Vec<String>,
    #[serde(default)]
    edges: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    metadata: Option<Metadata>,
}

impl MmcInstance {
    pub fn new<S: AsRef<str>>(singles: &[S], couples: &[S], rooms: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut m = MmcInstance {
            kind: BTreeMap::new(),
            adj: BTreeMap::new(),
        };
        for (ids, k) in [(singles, Kind::Single), (couples, Kind::Couple), (rooms, Kind::Room)] {
            for id in ids {
                let id = id.as_ref();
                check_id(id)?;
                if m.kind.insert(id.to_owned(), k).is_some() {
                    return Err(Error::InvalidInstance(format!("id {id:?} declared twice")));
                }
                m.adj.insert(id.to_owned(), BTreeSet::new());
            }
        }
        for (p, r) in edges {
            let (p, r) = (p.as_ref(), r.as_ref());
            match (m.kind.get(p), m.kind.get(r)) {
                (Some(Kind::Single | Kind::Couple), Some(Kind::Room)) => {}
                (None, _) | (_, None) => {
                    return Err(Error::InvalidInstance(format!("edge ({p:?}, {r:?}) names an unknown vertex")))
                }
                _ => {
                    return Err(Error::InvalidInstance(format!(
                        "edge ({p:?}, {r:?}) must join a single or couple to a room"
                    )))
                }
            }
            m.link(p, r);
        }
        Ok(m)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: MmcDoc = serde_json::from_str(text).map_err(|e| Error::parse("mmc json", e.to_string()))?;
        Self::new(&doc.singles, &doc.couples, &doc.rooms, &doc.edges)
    }

    pub fn to_json(&self) -> String {
        self.to_json_with(None)
    }

    /// As [`MmcInstance::to_json`] with a `metadata` block, which
    /// [`MmcInstance::from_json`] accepts and ignores.
    pub fn to_json_with(&self, metadata: Option<&Metadata>) -> String {
        let doc = MmcDoc {
            singles: self.ids(Kind::Single).into_iter().map(String::from).collect(),
            couples: self.ids(Kind::Couple).into_iter().map(String::from).collect(),
            rooms: self.ids(Kind::Room).into_iter().map(String::from).collect(),
            edges: self.edges(),
            metadata: metadata.cloned(),
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }

    fn ids(&self, k: Kind) -> Vec<&str> {
        self.kind.iter().filter(|(_, &kk)| kk == k).map(|(id, _)| id.as_str()).collect()
    }

    pub fn singles(&self) -> Vec<&str> {
        self.ids(Kind::Single)
    }

    pub fn couples(&self) -> Vec<&str> {
        self.ids(Kind::Couple)
    }

    pub fn rooms(&self) -> Vec<&str> {
        self.ids(Kind::Room)
    }

    pub fn kind(&self, id: &str) -> Option<Kind> {
        self.kind.get(id).copied()
    }

    /// `(person, room)` pairs, ascending.
    pub fn edges(&self) -> Vec<(String, String)> {
        self.kind
            .iter()
            .filter(|(_, &k)| k != Kind::Room)
            .flat_map(|(p, _)| self.adj[p].iter().map(move |r| (p.clone(), r.clone())))
            .collect()
    }

    pub fn num_edges(&self) -> usize {
        self.kind
            .iter()
            .filter(|(_, &k)| k == Kind::Room)
            .map(|(r, _)| self.adj[r].len())
            .sum()
    }

    /// Neighbors in ascending id order.
    pub fn neighbors(&self, id: &str) -> Vec<&str> {
        self.adj.get(id).map(|n| n.iter().map(String::as_str).collect()).unwrap_or_default()
    }

    pub fn degree(&self, id: &str) -> usize {
        self.adj.get(id).map_or(0, BTreeSet::len)
    }

    fn neighbors_of_kind(&self, id: &str, k: Kind) -> Vec<String> {
        self.adj[id].iter().filter(|n| self.kind[*n] == k).cloned().collect()
    }

    fn link(&mut self, p: &str, r: &str) {
        self.adj.get_mut(p).expect("known vertex").insert(r.to_owned());
        self.adj.get_mut(r).expect("known vertex").insert(p.to_owned());
    }

    fn unlink(&mut self, p: &str, r: &str) {
        self.adj.get_mut(p).expect("known vertex").remove(r);
        self.adj.get_mut(r).expect("known vertex").remove(p);
    }

    fn add(&mut self, id: String, k: Kind) {
        self.adj.insert(id.clone(), BTreeSet::new());
        self.kind.insert(id, k);
    }

    fn remove(&mut self, id: &str) {
        for n in self.neighbors_of_any(id) {
            self.unlink(id, &n);
        }
        self.adj.remove(id);
        self.kind.remove(id);
    }

    fn neighbors_of_any(&self, id: &str) -> Vec<String> {
        self.adj[id].iter().cloned().collect()
    }

    /// Total demand (singles plus two per couple) equals total room capacity.
    pub fn is_balanced(&self) -> bool {
        self.singles().len() + 2 * self.couples().len() == 2 * self.rooms().len()
    }

    /// Every vertex has degree 2 or 3, the instance is balanced, and each
    /// room sees two or three singles, two or three couples, or exactly
    /// two singles and one couple.
    pub fn is_normal_form(&self) -> bool {
        self.is_balanced()
            && self.kind.keys().all(|v| matches!(self.degree(v), 2 | 3))
            && self.rooms().into_iter().all(|r| {
                let s = self.neighbors_of_kind(r, Kind::Single).len();
                let c = self.neighbors_of_kind(r, Kind::Couple).len();
                matches!((s, c), (2 | 3, 0) | (0, 2 | 3) | (2, 1))
            })
    }

    /// The fixed no-instance: `K_{3,2}` plus `K_{2,3}` on couples and rooms.
    pub fn no_instance() -> Self {
        let couples = ["c1", "c2", "c3", "c4", "c5"];
        let rooms = ["r1", "r2", "r3", "r4", "r5"];
        let mut edges = Vec::new();
        for c in &couples[..3] {
            for r in &rooms[..2] {
                edges.push((*c, *r));
            }
        }
        for c in &couples[3..] {
            for r in &rooms[2..] {
                edges.push((*c, *r));
            }
        }
        MmcInstance::new(&[], &couples, &rooms, &edges).expect("valid fixed instance")
    }
}

/// Outcome of [`mmc_normalize`].
#[derive(Clone, Debug)]
pub struct Normalized {
    pub instance: MmcInstance,
    /// Dummy singles added before the rewriting rules ran.
    pub padding: usize,
    /// `(rule, pivot)` for every rule application, in order.
    pub applications: Vec<(u8, String)>,
    /// The input was recognized as a no-instance and replaced by
    /// [`MmcInstance::no_instance`].
    pub rejected: bool,
}

impl Normalized {
    /// Applications of the degree-reducing rules 1 to 6.
    pub fn reducing_steps(&self) -> usize {
        self.applications.iter().filter(|(r, _)| *r <= 6).count()
    }
}

struct Rewriter {
    m: MmcInstance,
    counter: usize,
    applications: Vec<(u8, String)>,
}

impl Rewriter {
    fn fresh(&mut self, prefix: &str, k: Kind) -> String {
        loop {
            self.counter += 1;
            let id = format!("_{prefix}{}", self.counter);
            if !self.m.kind.contains_key(&id) {
                self.m.add(id.clone(), k);
                return id;
            }
        }
    }

    fn link_all(&mut self, pairs: &[(&str, &str)]) {
        for (p, q) in pairs {
            self.m.link(p, q);
        }
    }

    fn singles_of(&self, r: &str) -> Vec<String> {
        self.m.neighbors_of_kind(r, Kind::Single)
    }

    fn couples_of(&self, r: &str) -> Vec<String> {
        self.m.neighbors_of_kind(r, Kind::Couple)
    }

    fn first(&self, k: Kind, pred: impl Fn(&Self, &str) -> bool) -> Option<String> {
        self.m
            .kind
            .iter()
            .filter(|(_, &kk)| kk == k)
            .map(|(id, _)| id)
            .find(|id| pred(self, id))
            .cloned()
    }

    fn pivot(&self, rule: u8) -> Option<String> {
        match rule {
            1 => self.first(Kind::Room, |w, r| w.couples_of(r).len() >= 2 && !w.singles_of(r).is_empty()),
            2 => self.first(Kind::Room, |w, r| w.couples_of(r).len() == 1 && w.singles_of(r).len() == 1),
            3 => self.first(Kind::Single, |w, s| w.m.degree(s) >= 4),
            4 => self.first(Kind::Couple, |w, c| w.m.degree(c) >= 4),
            5 => self.first(Kind::Room, |w, r| w.couples_of(r).len() >= 4 && w.singles_of(r).is_empty()),
            6 => self.first(Kind::Room, |w, r| {
                w.m.degree(r) > 3 && w.singles_of(r).len() >= 2 && w.couples_of(r).len() <= 1
            }),
            7 => self.first(Kind::Room, |w, r| w.m.degree(r) == 1 && w.singles_of(r).len() == 1),
            8 => self.first(Kind::Single, |w, s| w.m.degree(s) == 1),
            9 => self
                .m
                .kind
                .iter()
                .find(|(v, &k)| match k {
                    Kind::Room => self.m.degree(v) == 1 && self.couples_of(v).len() == 1,
                    Kind::Couple => self.m.degree(v) == 1,
                    Kind::Single => false,
                })
                .map(|(v, _)| v.clone()),
            _ => None,
        }
    }

    fn apply(&mut self, rule: u8, v: &str) {
        self.applications.push((rule, v.to_owned()));
        match rule {
            1 => {
                let r2 = self.fresh("r", Kind::Room);
                let c2 = self.fresh("c", Kind::Couple);
                self.m.link(&c2, v);
                self.m.link(&c2, &r2);
                for s in self.singles_of(v) {
                    self.m.unlink(&s, v);
                    self.m.link(&s, &r2);
                }
            }
            2 => {
                let s = self.singles_of(v).remove(0);
                self.m.unlink(&s, v);
            }
            3 => {
                let rs: Vec<String> = self.m.adj[v].iter().take(4).cloned().collect();
                let s2 = self.fresh("s", Kind::Single);
                let s3 = self.fresh("s", Kind::Single);
                let s4 = self.fresh("s", Kind::Single);
                let star = self.fresh("s", Kind::Single);
                let q1 = self.fresh("r", Kind::Room);
                let q2 = self.fresh("r", Kind::Room);
                for (sx, r) in [(&s2, &rs[1]), (&s3, &rs[2]), (&s4, &rs[3])] {
                    self.m.unlink(v, r);
                    self.m.link(sx, r);
                }
                self.link_all(&[(v, &q1), (&s2, &q1), (&s3, &q2), (&s4, &q2), (&star, &q1), (&star, &q2)]);
            }
            4 => {
                let rs = self.m.neighbors_of_any(v);
                self.m.remove(v);
                let cs: Vec<String> = rs.iter().map(|_| self.fresh("c", Kind::Couple)).collect();
                let qs: Vec<String> = rs[1..].iter().map(|_| self.fresh("r", Kind::Room)).collect();
                for (c, r) in cs.iter().zip(&rs) {
                    self.m.link(c, r);
                }
                for (j, q) in qs.iter().enumerate() {
                    self.m.link(&cs[j], q);
                    self.m.link(&cs[j + 1], q);
                }
            }
            5 => {
                let cs = self.m.neighbors_of_any(v);
                self.m.remove(v);
                let rs: Vec<String> = cs.iter().map(|_| self.fresh("r", Kind::Room)).collect();
                let ds: Vec<String> = cs[1..].iter().map(|_| self.fresh("c", Kind::Couple)).collect();
                for (c, r) in cs.iter().zip(&rs) {
                    self.m.link(c, r);
                }
                for (j, d) in ds.iter().enumerate() {
                    self.m.link(d, &rs[j]);
                    self.m.link(d, &rs[j + 1]);
                }
            }
            6 => self.split_single_room(v),
            8 => {
                let r = self.fresh("r", Kind::Room);
                let r2 = self.fresh("r", Kind::Room);
                let s1 = self.fresh("s", Kind::Single);
                let s2 = self.fresh("s", Kind::Single);
                let c = self.fresh("c", Kind::Couple);
                self.link_all(&[(v, &r2), (&c, &r), (&s1, &r), (&s2, &r), (&s1, &r2), (&s2, &r2)]);
            }
            9 => {
                let r = self.fresh("r", Kind::Room);
                let r2 = self.fresh("r", Kind::Room);
                let c = self.fresh("c", Kind::Couple);
                let c2 = self.fresh("c", Kind::Couple);
                self.link_all(&[(&c, &r), (&c2, &r), (&c, &r2), (&c2, &r2)]);
                if self.m.kind[v] == Kind::Room {
                    self.m.link(&c, v);
                } else {
                    self.m.link(v, &r);
                }
            }
            _ => unreachable!("rule {rule} has no rewrite"),
        }
    }

    /// A room of degree above three with two singles and at most one couple
    /// hands both singles to a fixed gadget.
    fn split_single_room(&mut self, r: &str) {
        let singles = self.singles_of(r);
        let (s1, s2) = (singles[0].clone(), singles[1].clone());
        let couple = self.couples_of(r).into_iter().next();
        let mut f = |p: &str, k: Kind| self.fresh(p, k);
        let sp1 = f("s", Kind::Single);
        let sp2 = f("s", Kind::Single);
        let sh1 = f("s", Kind::Single);
        let sh2 = f("s", Kind::Single);
        let s_or = f("s", Kind::Single);
        let sh_or = f("s", Kind::Single);
        let cp = f("c", Kind::Couple);
        let c_and = f("c", Kind::Couple);
        let c3 = f("c", Kind::Couple);
        let c4 = f("c", Kind::Couple);
        let c5 = f("c", Kind::Couple);
        let rp = f("r", Kind::Room);
        let r1 = f("r", Kind::Room);
        let r2 = f("r", Kind::Room);
        let r_and = f("r", Kind::Room);
        let r_or = f("r", Kind::Room);
        let r3 = f("r", Kind::Room);
        let r4 = f("r", Kind::Room);
        let r5 = f("r", Kind::Room);
        self.m.unlink(&s1, r);
        self.m.unlink(&s2, r);
        self.link_all(&[
            (&s1, &r1),
            (&s2, &r2),
            (&sp1, &r1),
            (&sp2, &r2),
            (&sh1, &r1),
            (&sh2, &r2),
            (&sp1, &r3),
            (&sp2, &r4),
            (&sh_or, &r3),
            (&sh_or, &r4),
            (&c3, &r3),
            (&c4, &r4),
            (&c3, &r5),
            (&c4, &r5),
            (&c5, &r5),
            (&c5, &r_or),
            (&s_or, &r_or),
            (&sh_or, &r_or),
            (&s_or, r),
            (&cp, r),
            (&cp, &rp),
            (&c_and, &rp),
            (&c_and, &r_and),
            (&sp1, &r_and),
            (&sp2, &r_and),
        ]);
        if let Some(c) = couple {
            self.m.unlink(&c, r);
            self.m.link(&c, &rp);
        }
    }

    fn exhaust(&mut self, rules: &[u8]) {
        while let Some((rule, v)) = rules.iter().find_map(|&k| self.pivot(k).map(|v| (k, v))) {
            self.apply(rule, &v);
        }
    }
}

/// Rewrites `m` into an equivalent instance in normal form (see
/// [`MmcInstance::is_normal_form`]). At each step the lowest-numbered
/// applicable rule fires at its lexicographically smallest pivot.
pub fn mmc_normalize(m: &MmcInstance) -> Normalized {
    let reject = |applications, padding| Normalized {
        instance: MmcInstance::no_instance(),
        padding,
        applications,
        rejected: true,
    };
    let demand = m.singles().len() + 2 * m.couples().len();
    let capacity = 2 * m.rooms().len();
    if demand > capacity {
        return reject(Vec::new(), 0);
    }
    let mut w = Rewriter {
        m: m.clone(),
        counter: 0,
        applications: Vec::new(),
    };
    let padding = capacity - demand;
    let rooms: Vec<String> = m.rooms().into_iter().map(String::from).collect();
    for _ in 0..padding {
        let d = w.fresh("d", Kind::Single);
        for r in &rooms {
            w.m.link(&d, r);
        }
    }
    let isolated = |w: &Rewriter| w.m.kind.keys().any(|v| w.m.degree(v) == 0);
    if isolated(&w) {
        return reject(w.applications, padding);
    }
    w.exhaust(&[1, 2, 3, 4, 5, 6]);
    // Rule 2 can strand a single whose only room it was.
    if isolated(&w) {
        return reject(w.applications, padding);
    }
    if let Some(r) = w.pivot(7) {
        w.applications.push((7, r));
        return reject(w.applications, padding);
    }
    w.exhaust(&[8]);
    w.exhaust(&[9]);
    debug_assert!(w.m.is_normal_form(), "normalization left {:?}", w.m.to_json());
    Normalized {
        instance: w.m,
        padding,
        applications: w.applications,
        rejected: false,
    }
}
