//! 3-CNF formulas and DIMACS input.

use crate::error::{Error, Result};

/// A conjunction of clauses with exactly three literals each. Literal `+i`
/// is variable `i` (1-based), `-i` its negation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cnf {
    num_vars: usize,
    clauses: Vec<[i32; 3]>,
}

impl Cnf {
    pub fn new(num_vars: usize, clauses: Vec<[i32; 3]>) -> Result<Self> {
        for clause in &clauses {
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() as usize > num_vars {
                    return Err(Error::InvalidInstance(format!(
                        "literal {lit} out of range for {num_vars} variables"
                    )));
                }
            }
        }
        Ok(Cnf { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[i32; 3]] {
        &self.clauses
    }

    /// Some variable occurs both positively and negatively.
    pub fn is_nontrivial(&self) -> bool {
        let lits: Vec<i32> = self.clauses.iter().flatten().copied().collect();
        lits.iter().any(|&l| l > 0 && lits.contains(&-l))
    }

    /// `assignment[i]` is the value of variable `i + 1`.
    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter()
                .any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0))
        })
    }

    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current: Vec<i32> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let ctx = || format!("dimacs line {}", lineno + 1);
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                match parts.as_slice() {
                    ["cnf", n, m] => {
                        let n = n.parse().map_err(|_| Error::parse(ctx(), "bad variable count"))?;
                        let m = m.parse().map_err(|_| Error::parse(ctx(), "bad clause count"))?;
                        header = Some((n, m));
                    }
                    _ => return Err(Error::parse(ctx(), "expected \"p cnf <vars> <clauses>\"")),
                }
                continue;
            }
            if header.is_none() {
                return Err(Error::parse(ctx(), "clause before the \"p cnf\" header"));
            }
            for tok in line.split_whitespace() {
                let lit: i32 = tok
                    .parse()
                    .map_err(|_| Error::parse(ctx(), format!("bad literal {tok:?}")))?;
                if lit == 0 {
                    let clause: [i32; 3] = current.as_slice().try_into().map_err(|_| {
                        Error::parse(ctx(), format!("clause has {} literals, expected exactly 3", current.len()))
                    })?;
                    clauses.push(clause);
                    current.clear();
                } else {
                    current.push(lit);
                }
            }
        }
        let (n, m) = header.ok_or_else(|| Error::parse("dimacs", "missing \"p cnf\" header"))?;
        if !current.is_empty() {
            return Err(Error::parse("dimacs", "last clause is not terminated by 0"));
        }
        if clauses.len() != m {
            return Err(Error::parse(
                "dimacs",
                format!("header announces {m} clauses, found {}", clauses.len()),
            ));
        }
        Cnf::new(n, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            out.push_str(&format!("{} {} {} 0\n", c[0], c[1], c[2]));
        }
        out
    }
}
