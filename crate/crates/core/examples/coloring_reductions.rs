//! Graph 3-coloring encoded as nomination instances for two-voter Copeland
//! and four-voter Llull, decided and compared with a coloring search.

use nomination::reductions::oracles::solve_3coloring;
use nomination::reductions::{gen_3col_copeland_2v, gen_3col_llull_4v, Graph};
use nomination::solvers::{solve_bruteforce, SolverConfig};
use nomination::Rule;

fn main() -> nomination::Result<()> {
    let config = SolverConfig { force: true, ..SolverConfig::default() };
    let graphs = [
        ("path", "a b\nb c\n"),
        ("triangle", "a b\nb c\na c\n"),
        ("K4", "a b\na c\na d\nb c\nb d\nc d\n"),
    ];
    for (name, text) in graphs {
        let g = Graph::parse(text)?;
        let colorable = solve_3coloring(&g)?.is_some();
        let two = gen_3col_copeland_2v(&g)?;
        let four = gen_3col_llull_4v(&g)?;
        let a = solve_bruteforce(&two, Rule::COPELAND, &config)?;
        let b = solve_bruteforce(&four, Rule::LLULL, &config)?;
        println!(
            "{name}: colorable {colorable}; 2 voters, {} parties: {:?}; 4 voters, {} parties: {:?}",
            two.num_parties(),
            a.decision,
            four.num_parties(),
            b.decision
        );
        assert_eq!(a.is_yes(), colorable);
        assert_eq!(b.is_yes(), colorable);
    }
    Ok(())
}
