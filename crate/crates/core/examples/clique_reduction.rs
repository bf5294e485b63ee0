//! Multicolored clique encoded as a Copeland^α instance for α below one.

use nomination::reductions::oracles::solve_mcq;
use nomination::reductions::{gen_mcq_copeland, Graph};
use nomination::solvers::{solve_bruteforce, SolverConfig};
use nomination::{Alpha, Rule};

fn main() -> nomination::Result<()> {
    let yes = "class a1 a2\nclass b1 b2\nclass c1 c2\na1 b1\nb1 c1\na1 c1\na2 b2\n";
    let no = "class a1 a2\nclass b1 b2\nclass c1 c2\na1 b1\nb1 c1\na2 c1\na2 b2\n";
    for (name, text) in [("with clique", yes), ("without", no)] {
        let g = Graph::parse(text)?;
        for alpha in [Alpha::ZERO, Alpha::new(1, 2)?] {
            let inst = gen_mcq_copeland(&g, alpha)?;
            let result = solve_bruteforce(&inst, Rule::Copeland(alpha), &SolverConfig::default())?;
            println!("{name}, alpha {alpha}: {:?} ({} candidates)", result.decision, inst.election().num_candidates());
            assert_eq!(result.is_yes(), solve_mcq(&g)?.is_some());
        }
    }
    assert!(gen_mcq_copeland(&Graph::parse(yes)?, Alpha::ONE).is_err());
    Ok(())
}
