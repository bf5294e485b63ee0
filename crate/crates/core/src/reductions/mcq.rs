//! Multicolored Clique to Possible President under Copeland^α with α < 1.
//!
//! Every color class becomes a party; two extra singletons `p` (distinguished)
//! and `p'`. Each non-edge between classes contributes a pair of voters that
//! makes its endpoints defeat each other's ties away, so `p` wins exactly when
//! the nominees form a clique.

use super::graph::Graph;
use super::{assemble, forward, reverse};
use crate::election::{Alpha, NominationInstance};
use crate::error::{Error, Result};

fn name(g: &Graph, v: usize) -> String {
    format!("u:{}", g.vertices()[v])
}

/// `g` must carry color classes that are independent sets.
pub fn gen_mcq_copeland(g: &Graph, alpha: Alpha) -> Result<NominationInstance> {
    if alpha.is_one() {
        return Err(Error::Generator("the clique reduction needs alpha < 1".into()));
    }
    let classes = g
        .classes()
        .ok_or_else(|| Error::Generator("graph has no color classes".into()))?;
    let class_of = g.class_of().expect("classes present");
    if let Some(&(a, b)) = g.edges().iter().find(|&&(a, b)| class_of[&a] == class_of[&b]) {
        return Err(Error::Generator(format!(
            "class of {:?} is not independent (edge to {:?})",
            g.vertices()[a],
            g.vertices()[b]
        )));
    }
    let mut parties: Vec<Vec<String>> = vec![vec!["p".into()], vec!["p'".into()]];
    parties.extend(classes.iter().map(|c| c.iter().map(|&v| name(g, v)).collect()));

    let all: Vec<usize> = (0..g.num_vertices()).collect();
    let tail = || vec!["p".to_string(), "p'".to_string()];
    let mut voters = Vec::new();
    for a in 0..all.len() {
        for b in a + 1..all.len() {
            if class_of[&a] == class_of[&b] || g.has_edge(a, b) {
                continue;
            }
            let (first, second) = if class_of[&a] < class_of[&b] { (a, b) } else { (b, a) };
            let rest: Vec<String> = all
                .iter()
                .filter(|&&x| x != a && x != b)
                .map(|&x| name(g, x))
                .collect();
            let mut v = vec![name(g, first), name(g, second)];
            v.extend(forward(rest.clone()));
            v.extend(tail());
            let mut v2 = tail();
            v2.extend(reverse(rest));
            v2.extend([name(g, first), name(g, second)]);
            voters.push(v);
            voters.push(v2);
        }
    }
    if voters.is_empty() {
        // Complete multipartite input: one opposed pair keeps p above p'
        // and leaves every other pair tied.
        let us: Vec<String> = all.iter().map(|&x| name(g, x)).collect();
        let mut v = tail();
        v.extend(forward(us.clone()));
        let mut v2 = reverse(us);
        v2.extend(tail());
        voters = vec![v, v2];
    }
    assemble(parties, voters, 0)
}
