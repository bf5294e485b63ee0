//! 3-Coloring to Possible President: two voters under Copeland^α (α < 1)
//! and four voters under Llull.
//!
//! Vertex `u` colored `c` is candidate `u{c}:{u}`, its party partner
//! `nu{c}:{u}`. Edge `{u, w}` gets, for each color, a party with one
//! candidate per endpoint: `e{c}:{u}:{w}` stands for endpoint `u`.

use super::graph::Graph;
use super::{assemble, forward, reverse};
use crate::election::NominationInstance;
use crate::error::Result;

const COLORS: [u8; 3] = [1, 2, 3];

struct Names<'a> {
    g: &'a Graph,
}

impl Names<'_> {
    fn q(&self, i: usize) -> String {
        format!("q:{}", self.g.vertices()[i])
    }

    fn u(&self, i: usize, c: u8) -> String {
        format!("u{c}:{}", self.g.vertices()[i])
    }

    fn nu(&self, i: usize, c: u8) -> String {
        format!("nu{c}:{}", self.g.vertices()[i])
    }

    fn e(&self, c: u8, end: usize, other: usize) -> String {
        format!("e{c}:{}:{}", self.g.vertices()[end], self.g.vertices()[other])
    }

    /// Edge candidates of color `c` standing for endpoint `i`.
    fn incident(&self, i: usize, c: u8) -> Vec<String> {
        self.g.neighbors(i).into_iter().map(|j| self.e(c, i, j)).collect()
    }

    /// `u_1, A(u_1), ..., u_n, A(u_n)` for color `c`, or the mirrored block.
    fn x_block(&self, c: u8, mirrored: bool) -> Vec<String> {
        let n = self.g.num_vertices();
        let order: Vec<usize> = if mirrored { (0..n).rev().collect() } else { (0..n).collect() };
        order
            .into_iter()
            .flat_map(|i| {
                let a = self.incident(i, c);
                let a = if mirrored { reverse(a) } else { forward(a) };
                std::iter::once(self.u(i, c)).chain(a)
            })
            .collect()
    }

    fn vertex_parties(&self) -> Vec<Vec<String>> {
        (0..self.g.num_vertices())
            .flat_map(|i| COLORS.map(|c| vec![self.u(i, c), self.nu(i, c)]))
            .collect()
    }

    fn edge_parties(&self) -> Vec<Vec<String>> {
        self.g
            .edges()
            .iter()
            .flat_map(|&(a, b)| COLORS.map(|c| vec![self.e(c, a, b), self.e(c, b, a)]))
            .collect()
    }
}

/// Two voters. Party 0 is `{p}`; `t = 4n + 3|E| + 6`. Valid for every α < 1.
pub fn gen_3col_copeland_2v(g: &Graph) -> Result<NominationInstance> {
    let nm = Names { g };
    let n = g.num_vertices();
    let mut parties: Vec<Vec<String>> = ["p", "p'1", "p'2", "p'3", "d", "d'"]
        .iter()
        .map(|s| vec![s.to_string()])
        .collect();
    parties.extend((0..n).map(|i| vec![nm.q(i)]));
    parties.extend(nm.vertex_parties());
    parties.extend(nm.edge_parties());

    let y_group = |i: usize| std::iter::once(nm.q(i)).chain(COLORS.map(|c| nm.nu(i, c)));
    let y: Vec<String> = (0..n).flat_map(y_group).collect();
    let y_mirror: Vec<String> = (0..n).rev().flat_map(y_group).collect();
    let head: Vec<String> = ["p", "p'1", "p'2", "p'3"].map(String::from).to_vec();

    let mut v = head.clone();
    v.extend(y);
    for c in COLORS {
        v.extend(nm.x_block(c, false));
    }
    v.extend(["d".to_string(), "d'".to_string()]);

    let mut v2 = Vec::new();
    for c in COLORS.iter().rev() {
        v2.extend(nm.x_block(*c, true));
    }
    v2.extend(["d".to_string(), "d'".to_string()]);
    v2.extend(y_mirror);
    v2.extend(head);

    assemble(parties, vec![v, v2], 0)
}

/// Four voters under Llull. Party 0 is `{p}`.
///
/// Without edges nothing can defeat the nominated `~u` candidates, so an
/// edgeless graph (always colorable) yields the one-party instance `{p}`.
pub fn gen_3col_llull_4v(g: &Graph) -> Result<NominationInstance> {
    if g.edges().is_empty() {
        let p = vec!["p".to_string()];
        return assemble(vec![p.clone()], vec![p; 4], 0);
    }
    let nm = &Names { g };
    let n = g.num_vertices();
    let mut parties: Vec<Vec<String>> = vec![vec!["p".to_string()]];
    parties.extend((0..n).map(|i| vec![nm.q(i)]));
    parties.extend(nm.vertex_parties());
    parties.extend(nm.edge_parties());

    let qs: Vec<String> = (0..n).map(|i| nm.q(i)).collect();
    let us: Vec<String> = (0..n).flat_map(|i| COLORS.map(|c| nm.u(i, c))).collect();
    let nus: Vec<String> = (0..n).flat_map(|i| COLORS.map(|c| nm.nu(i, c))).collect();
    let es: Vec<String> = (0..n).flat_map(|i| COLORS.into_iter().flat_map(move |c| nm.incident(i, c))).collect();
    let z_group = |i: usize| COLORS.map(|c| nm.nu(i, c)).into_iter().chain(std::iter::once(nm.q(i)));
    let z: Vec<String> = (0..n).flat_map(z_group).collect();
    let z_mirror: Vec<String> = (0..n).rev().flat_map(z_group).collect();
    let p = || vec!["p".to_string()];

    let mut v = p();
    v.extend(forward(qs.clone()));
    for c in COLORS {
        v.extend(nm.x_block(c, false));
    }
    v.extend(forward(nus.clone()));

    let mut v2 = Vec::new();
    for c in COLORS.iter().rev() {
        v2.extend(nm.x_block(*c, true));
    }
    v2.extend(reverse(nus));
    v2.extend(reverse(qs));
    v2.extend(p());

    let mut w = forward(es.clone());
    w.extend(p());
    w.extend(z);
    w.extend(forward(us.clone()));

    let mut w2 = z_mirror;
    w2.extend(reverse(us));
    w2.extend(p());
    w2.extend(reverse(es));

    assemble(parties, vec![v, v2, w, w2], 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::election::{copeland_scores, Alpha};

    #[test]
    fn party_count_on_triangle() {
        let inst = gen_3col_copeland_2v(&Graph::complete(3)).unwrap();
        assert_eq!(inst.num_parties(), 27);
        assert_eq!(inst.max_party_size(), 2);
        assert_eq!(inst.election().num_voters(), 2);
    }

    #[test]
    fn p_score_two_voters() {
        let inst = gen_3col_copeland_2v(&Graph::complete(3)).unwrap();
        let nom: Vec<usize> = inst.parties().iter().map(|p| p[0]).collect();
        let red = inst.reduce(&nom).unwrap();
        let s = copeland_scores(&red)[red.index_of("p").unwrap()];
        let alpha = Alpha::new(1, 2).unwrap();
        let t = inst.num_parties() as u64;
        assert_eq!(s.scaled(alpha), 3 * 2 + (t - 4));
    }

    #[test]
    fn p_ties_everyone_four_voters() {
        let inst = gen_3col_llull_4v(&Graph::complete(3)).unwrap();
        let nom: Vec<usize> = inst.parties().iter().map(|p| *p.last().unwrap()).collect();
        let red = inst.reduce(&nom).unwrap();
        let s = copeland_scores(&red)[red.index_of("p").unwrap()];
        assert_eq!(s.wins + s.ties, inst.num_parties() as u32 - 1);
    }
}
