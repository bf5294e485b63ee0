//! 3-SAT to Possible President under Maximin with four and five voters.
//!
//! Variable `i` gives a party `{x{i}, ~x{i}}`. Literal slot `j` of clause
//! `k` gives a party `{c{k}.{j}, c{k}.{j}-}`: the first is nominated when the
//! slot's literal is meant to be true.

use super::cnf::Cnf;
use super::{assemble, forward, reverse};
use crate::election::NominationInstance;
use crate::error::{Error, Result};

struct Layout<'a> {
    f: &'a Cnf,
}

impl Layout<'_> {
    fn literal(l: i32) -> String {
        if l > 0 {
            format!("x{l}")
        } else {
            format!("~x{}", -l)
        }
    }

    fn slot(k: usize, j: usize) -> String {
        format!("c{}.{}", k + 1, j + 1)
    }

    fn slot_neg(k: usize, j: usize) -> String {
        format!("c{}.{}-", k + 1, j + 1)
    }

    fn literals(&self) -> Vec<String> {
        (1..=self.f.num_vars() as i32).flat_map(|i| [Self::literal(i), Self::literal(-i)]).collect()
    }

    fn slots(&self) -> Vec<String> {
        (0..self.f.clauses().len()).flat_map(|k| (0..3).map(move |j| Self::slot(k, j))).collect()
    }

    fn neg_slots(&self) -> Vec<String> {
        (0..self.f.clauses().len()).flat_map(|k| (0..3).map(move |j| Self::slot_neg(k, j))).collect()
    }

    /// `c1, c2, c3, c1-, c2-, c3-`, or `c3, c2, c1, c3-, c2-, c1-` when mirrored.
    fn y_block(k: usize, mirrored: bool) -> Vec<String> {
        let js: Vec<usize> = if mirrored { vec![2, 1, 0] } else { vec![0, 1, 2] };
        let mut out: Vec<String> = js.iter().map(|&j| Self::slot(k, j)).collect();
        out.extend(js.iter().map(|&j| Self::slot_neg(k, j)));
        out
    }

    fn y_blocks(&self, mirrored: bool) -> Vec<String> {
        let m = self.f.clauses().len();
        let ks: Vec<usize> = if mirrored { (0..m).rev().collect() } else { (0..m).collect() };
        ks.into_iter().flat_map(|k| Self::y_block(k, mirrored)).collect()
    }

    /// The literal followed by the slots it occupies.
    fn f_block(&self, l: i32) -> Vec<String> {
        let occupied: Vec<String> = self
            .f
            .clauses()
            .iter()
            .enumerate()
            .flat_map(|(k, c)| (0..3).filter(move |&j| c[j] == l).map(move |j| Self::slot(k, j)))
            .collect();
        std::iter::once(Self::literal(l)).chain(forward(occupied)).collect()
    }

    /// `F_{x1}..F_{xn}, F_{~x1}..F_{~xn}`, or `F_{~xn}..F_{~x1}, F_{xn}..F_{x1}`.
    fn f_blocks(&self, mirrored: bool) -> Vec<String> {
        let n = self.f.num_vars() as i32;
        let lits: Vec<i32> = if mirrored {
            (1..=n).rev().map(|i| -i).chain((1..=n).rev()).collect()
        } else {
            (1..=n).chain((1..=n).map(|i| -i)).collect()
        };
        lits.into_iter().flat_map(|l| self.f_block(l)).collect()
    }

    fn parties(&self, heads: &[&str]) -> Vec<Vec<String>> {
        let mut parties: Vec<Vec<String>> = heads.iter().map(|h| vec![h.to_string()]).collect();
        parties.extend((1..=self.f.num_vars() as i32).map(|i| vec![Self::literal(i), Self::literal(-i)]));
        for k in 0..self.f.clauses().len() {
            parties.extend((0..3).map(|j| vec![Self::slot(k, j), Self::slot_neg(k, j)]));
        }
        parties
    }
}

fn check(f: &Cnf) -> Result<()> {
    if !f.is_nontrivial() {
        return Err(Error::Generator(
            "formula is trivial: no variable occurs both positively and negatively".into(),
        ));
    }
    Ok(())
}

fn s(x: &str) -> String {
    x.to_string()
}

/// Four voters. Party 0 is `{p}`.
pub fn gen_3sat_maximin_4v(f: &Cnf) -> Result<NominationInstance> {
    check(f)?;
    let lay = Layout { f };
    let mut v = vec![s("p"), s("p'")];
    v.extend(forward(lay.literals()));
    v.extend(lay.y_blocks(false));

    let mut v2 = vec![s("p")];
    v2.extend(lay.y_blocks(true));
    v2.push(s("p'"));
    v2.extend(reverse(lay.literals()));

    let mut w = forward(lay.neg_slots());
    w.push(s("p'"));
    w.extend(lay.f_blocks(false));
    w.push(s("p"));

    let mut w2 = lay.f_blocks(true);
    w2.extend(reverse(lay.neg_slots()));
    w2.extend([s("p'"), s("p")]);

    assemble(lay.parties(&["p", "p'"]), vec![v, v2, w, w2], 0)
}

/// Five voters. Party 0 is `{p}`.
pub fn gen_3sat_maximin_5v(f: &Cnf) -> Result<NominationInstance> {
    check(f)?;
    let lay = Layout { f };
    let mut v = vec![s("p")];
    v.extend(forward(lay.literals()));
    v.extend(lay.y_blocks(false));
    v.extend([s("p'"), s("p''")]);

    let mut v2 = vec![s("p")];
    v2.extend(lay.y_blocks(true));
    v2.extend([s("p'"), s("p''")]);
    v2.extend(reverse(lay.literals()));

    let mut w = vec![s("p''")];
    w.extend(lay.f_blocks(false));
    w.extend(forward(lay.neg_slots()));
    w.extend([s("p'"), s("p")]);

    let mut w2 = vec![s("p'"), s("p''")];
    w2.extend(lay.f_blocks(true));
    w2.extend(reverse(lay.neg_slots()));
    w2.push(s("p"));

    let mut z = forward(lay.neg_slots());
    z.extend([s("p'"), s("p''")]);
    z.extend(forward(lay.literals()));
    z.extend(forward(lay.slots()));
    z.push(s("p"));

    assemble(lay.parties(&["p", "p'", "p''"]), vec![v, v2, w, w2, z], 0)
}
