//! The recursive three-voter flat elections `E_q`.
//!
//! `E_1` is the cyclic profile over `a, b, c`. `E_{q+1}` takes three copies
//! of every candidate of `E_q`: the first voter lists copy 1, 2, 3 of its
//! previous ranking, the second copies 3, 1, 2 and the third copies 2, 3, 1.
//! Every candidate of `E_q` beats exactly `(3^q - 1) / 2` others.
//!
//! A candidate is written `base.h1.h2...` where `h1` is the copy index added
//! first (innermost) and the last index is the outermost copy.

use std::fmt;
use std::str::FromStr;

use crate::election::{copeland_scores, Election};
use crate::error::{Error, Result};

/// Largest `q` accepted by [`generate_flat`] (6561 candidates).
pub const MAX_FLAT_LEVEL: u32 = 8;

/// A candidate of `E_q`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlatId {
    pub base: char,
    /// Copy indices `h_1..h_{q-1}`, each in `1..=3`.
    pub copies: Vec<u8>,
}

impl FlatId {
    /// The level `q` this id belongs to.
    pub fn level(&self) -> u32 {
        self.copies.len() as u32 + 1
    }

    /// Position of the candidate in the first voter's ranking.
    pub fn position(&self) -> usize {
        let mut pos = (self.base as u8 - b'a') as usize;
        let mut scale = 3;
        for &h in &self.copies {
            pos += (h as usize - 1) * scale;
            scale *= 3;
        }
        pos
    }

    /// Inverse of [`FlatId::position`] at level `q`.
    pub fn from_position(pos: usize, q: u32) -> FlatId {
        let base = (b'a' + (pos % 3) as u8) as char;
        let mut rest = pos / 3;
        let copies = (1..q)
            .map(|_| {
                let h = (rest % 3) as u8 + 1;
                rest /= 3;
                h
            })
            .collect();
        FlatId { base, copies }
    }
}

impl fmt::Display for FlatId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        for h in &self.copies {
            write!(f, ".{h}")?;
        }
        Ok(())
    }
}

impl FromStr for FlatId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse("flat candidate id", format!("{s:?} is not of the form base.h1.h2..."));
        let mut parts = s.split('.');
        let base = match parts.next() {
            Some(b @ ("a" | "b" | "c")) => b.chars().next().unwrap(),
            _ => return Err(bad()),
        };
        let copies = parts
            .map(|h| match h {
                "1" => Ok(1),
                "2" => Ok(2),
                "3" => Ok(3),
                _ => Err(bad()),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(FlatId { base, copies })
    }
}

fn check_level(q: u32) -> Result<()> {
    if q < 1 {
        return Err(Error::Precondition("flat elections start at level 1".into()));
    }
    if q > MAX_FLAT_LEVEL {
        return Err(Error::TooLarge {
            what: "flat election".into(),
            size: 3u128.checked_pow(q).unwrap_or(u128::MAX),
            limit: 3u128.pow(MAX_FLAT_LEVEL),
        });
    }
    Ok(())
}

/// The three rankings of `E_q`, each written as a sequence of positions in
/// the first voter's ranking (so the first ranking is `0, 1, 2, ...`).
pub fn flat_orders(q: u32) -> Result<[Vec<usize>; 3]> {
    check_level(q)?;
    let mut orders = [vec![0, 1, 2], vec![2, 0, 1], vec![1, 2, 0]];
    const COPY_ORDER: [[usize; 3]; 3] = [[0, 1, 2], [2, 0, 1], [1, 2, 0]];
    let mut size = 3;
    for _ in 1..q {
        for (order, copies) in orders.iter_mut().zip(COPY_ORDER) {
            *order = copies
                .iter()
                .flat_map(|&h| order.iter().map(move |&x| h * size + x))
                .collect();
        }
        size *= 3;
    }
    Ok(orders)
}

/// The three rankings of `E_q` as candidate ids.
pub fn flat_rankings(q: u32) -> Result<[Vec<FlatId>; 3]> {
    Ok(flat_orders(q)?.map(|order| order.into_iter().map(|x| FlatId::from_position(x, q)).collect()))
}

/// `E_q` with voters in the order `w, w', w''`.
pub fn generate_flat(q: u32) -> Result<Election> {
    let rankings = flat_rankings(q)?;
    let mut names: Vec<String> = rankings[0].iter().map(|c| c.to_string()).collect();
    names.sort();
    let voters: Vec<Vec<String>> = rankings
        .iter()
        .map(|r| r.iter().map(|c| c.to_string()).collect())
        .collect();
    Election::new(&names, &voters)
}

/// True iff every candidate has the same number of pairwise wins and ties.
pub fn is_flat(e: &Election) -> bool {
    let scores = copeland_scores(e);
    scores.windows(2).all(|w| w[0] == w[1])
}

/// The candidates agreeing with `c` on copy indices `h_{q'}..h_{q-1}`; the
/// restriction of `E_q` to them is a copy of `E_{q'}`.
pub fn level_group(c: &FlatId, q_prime: u32, q: u32) -> Result<Vec<FlatId>> {
    check_level(q)?;
    if c.level() != q {
        return Err(Error::Precondition(format!("{c} is not a candidate of level {q}")));
    }
    if q_prime < 1 || q_prime > q {
        return Err(Error::Precondition(format!("group level {q_prime} outside 1..={q}")));
    }
    let fixed = &c.copies[q_prime as usize - 1..];
    let mut group: Vec<FlatId> = (0..3usize.pow(q_prime))
        .map(|pos| {
            let mut id = FlatId::from_position(pos, q_prime);
            id.copies.extend_from_slice(fixed);
            id
        })
        .collect();
    group.sort();
    Ok(group)
}
