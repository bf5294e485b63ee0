//! Undirected simple graphs with an optional partition into color classes.
//!
//! Text format, one item per line:
//!
//! ```text
//! # comment
//! vertices a b c d     # optional, declares vertices (isolated ones included)
//! class a b            # optional, one line per color class, in order
//! a b                  # an edge
//! ```

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: BTreeSet<(usize, usize)>,
    classes: Option<Vec<Vec<usize>>>,
}

pub(crate) fn check_id(id: &str) -> Result<()> {
    let ok = !id.is_empty()
        && id
            .chars()
            .all(|ch| ch.is_ascii_alphanumeric() || matches!(ch, '_' | '.' | '-'));
    if ok {
        Ok(())
    } else {
        Err(Error::parse(
            "vertex id",
            format!("{id:?} must be non-empty and use only letters, digits, '_', '.' or '-'"),
        ))
    }
}

impl Graph {
    /// Vertices are sorted by id; edges are unordered pairs of distinct vertices.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut names: Vec<String> = vertices.iter().map(|v| v.as_ref().to_owned()).collect();
        names.sort();
        names.dedup();
        for v in &names {
            check_id(v)?;
        }
        let mut g = Graph {
            vertices: names,
            edges: BTreeSet::new(),
            classes: None,
        };
        for (a, b) in edges {
            let (a, b) = (g.require(a.as_ref())?, g.require(b.as_ref())?);
            if a == b {
                return Err(Error::InvalidInstance(format!("self-loop at {:?}", g.vertices[a])));
            }
            g.edges.insert((a.min(b), a.max(b)));
        }
        Ok(g)
    }

    /// The same graph with vertices partitioned into the given classes.
    pub fn with_classes<S: AsRef<str>>(mut self, classes: &[Vec<S>]) -> Result<Self> {
        let mut seen = vec![false; self.vertices.len()];
        let mut out = Vec::with_capacity(classes.len());
        for class in classes {
            let mut ids = Vec::with_capacity(class.len());
            for v in class {
                let i = self.require(v.as_ref())?;
                if std::mem::replace(&mut seen[i], true) {
                    return Err(Error::InvalidInstance(format!("vertex {:?} is in two classes", v.as_ref())));
                }
                ids.push(i);
            }
            ids.sort_unstable();
            out.push(ids);
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidInstance(format!("vertex {:?} is in no class", self.vertices[i])));
        }
        self.classes = Some(out);
        Ok(self)
    }

    /// The complete graph on `k` vertices named `v1..vk`.
    pub fn complete(k: usize) -> Self {
        let names: Vec<String> = (1..=k).map(|i| format!("v{i}")).collect();
        let edges: Vec<(String, String)> = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .map(|(i, j)| (names[i].clone(), names[j].clone()))
            .collect();
        Graph::new(&names, &edges).expect("valid complete graph")
    }

    fn require(&self, id: &str) -> Result<usize> {
        self.vertices
            .binary_search_by(|v| v.as_str().cmp(id))
            .map_err(|_| Error::InvalidInstance(format!("unknown vertex {id:?}")))
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Edges `(a, b)` with `a < b`, ascending.
    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&u| u != v && self.has_edge(u, v)).collect()
    }

    pub fn classes(&self) -> Option<&[Vec<usize>]> {
        self.classes.as_deref()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut vertices: BTreeSet<String> = BTreeSet::new();
        let mut edges = Vec::new();
        let mut classes: Vec<Vec<String>> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let bad = |msg: &str| Error::parse(format!("edge list line {}", lineno + 1), msg.to_owned());
            match tokens.as_slice() {
                [] => {}
                ["vertices", rest @ ..] => vertices.extend(rest.iter().map(|s| s.to_string())),
                ["class", rest @ ..] => {
                    if rest.is_empty() {
                        return Err(bad("empty class"));
                    }
                    vertices.extend(rest.iter().map(|s| s.to_string()));
                    classes.push(rest.iter().map(|s| s.to_string()).collect());
                }
                [a, b] => {
                    vertices.insert(a.to_string());
                    vertices.insert(b.to_string());
                    edges.push((a.to_string(), b.to_string()));
                }
                _ => return Err(bad("expected an edge \"u v\", \"vertices ...\" or \"class ...\"")),
            }
        }
        let vertices: Vec<String> = vertices.into_iter().collect();
        let g = Graph::new(&vertices, &edges)?;
        if classes.is_empty() {
            Ok(g)
        } else {
            g.with_classes(&classes)
        }
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        out.push_str("vertices");
        for v in &self.vertices {
            out.push(' ');
            out.push_str(v);
        }
        out.push('\n');
        for class in self.classes.iter().flatten() {
            out.push_str("class");
            for &v in class {
                out.push(' ');
                out.push_str(&self.vertices[v]);
            }
            out.push('\n');
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("{} {}\n", self.vertices[a], self.vertices[b]));
        }
        out
    }

    /// Maps each vertex to its class index, if classes are present.
    pub fn class_of(&self) -> Option<BTreeMap<usize, usize>> {
        self.classes.as_ref().map(|cs| {
            cs.iter()
                .enumerate()
                .flat_map(|(k, c)| c.iter().map(move |&v| (v, k)))
                .collect()
        })
    }
}
