//! 3-CNF formulas encoded as four- and five-voter Maximin instances.

use nomination::reductions::oracles::solve_3sat;
use nomination::reductions::{gen_3sat_maximin_4v, gen_3sat_maximin_5v, Cnf};
use nomination::solvers::{solve_bruteforce, SolverConfig};
use nomination::Rule;

fn main() -> nomination::Result<()> {
    let formulas = [
        Cnf::new(2, vec![[1, 2, -1], [-2, 1, 2]])?,
        Cnf::new(2, vec![[1, 1, -2], [-1, -1, 2], [1, 2, 2], [-1, -2, -2]])?,
    ];
    for f in &formulas {
        let sat = solve_3sat(f)?.is_some();
        for (voters, inst) in [(4, gen_3sat_maximin_4v(f)?), (5, gen_3sat_maximin_5v(f)?)] {
            let result = solve_bruteforce(&inst, Rule::Maximin, &SolverConfig::default())?;
            println!("{} clauses, {voters} voters: satisfiable {sat}, decision {:?}", f.clauses().len(), result.decision);
            assert_eq!(result.is_yes(), sat);
        }
    }
    print!("{}", formulas[0].to_dimacs());
    Ok(())
}
