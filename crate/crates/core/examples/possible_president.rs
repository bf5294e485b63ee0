//! Deciding whether the distinguished party can nominate a unique winner,
//! with the automatic dispatcher and with exhaustive search.

use nomination::solvers::{dispatch, solve_bruteforce, verify_nomination, SolverConfig};
use nomination::{Election, NominationInstance, Rule};

fn main() -> nomination::Result<()> {
    let e = Election::new(
        &["p1", "p2", "x1", "x2", "y1", "y2"],
        &[
            ["p2", "x1", "y2", "p1", "x2", "y1"],
            ["x2", "p2", "y1", "p1", "y2", "x1"],
            ["y1", "x1", "p2", "x2", "p1", "y2"],
        ],
    )?;
    let inst = NominationInstance::from_ids(e, &[vec!["p1", "p2"], vec!["x1", "x2"], vec!["y1", "y2"]], 0)?;
    let config = SolverConfig::default();
    for rule in [Rule::Maximin, Rule::COPELAND, Rule::LLULL] {
        let result = dispatch(&inst, rule, &config)?;
        let exhaustive = solve_bruteforce(&inst, rule, &config)?;
        assert_eq!(result.decision, exhaustive.decision);
        match &result.witness {
            Some(w) => {
                assert!(verify_nomination(&inst, rule, w)?);
                let names: Vec<&str> = w.iter().map(|&c| inst.election().name(c)).collect();
                println!("{rule}: yes via {} ({})", names.join(", "), result.algorithm);
            }
            None => println!("{rule}: no ({})", result.algorithm),
        }
    }
    Ok(())
}
