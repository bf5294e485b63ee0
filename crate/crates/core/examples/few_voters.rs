//! The polynomial solvers for two and three voters on a random instance,
//! compared with exhaustive search.

use nomination::solvers::{
    solve_bruteforce, solve_llull_two_voters, solve_maximin_three_voters, solve_maximin_two_voters, SolverConfig,
};
use nomination::{Election, NominationInstance, Rule};
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn instance(rng: &mut rand::rngs::StdRng, voters: usize) -> nomination::Result<NominationInstance> {
    let names: Vec<String> = (0..12).map(|i| format!("c{i:02}")).collect();
    let rankings: Vec<Vec<String>> = (0..voters)
        .map(|_| {
            let mut r = names.clone();
            r.shuffle(rng);
            r
        })
        .collect();
    let parties: Vec<Vec<String>> = names.chunks(3).map(|c| c.to_vec()).collect();
    NominationInstance::from_ids(Election::new(&names, &rankings)?, &parties, 0)
}

fn main() -> nomination::Result<()> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let config = SolverConfig::default();
    for round in 0..5 {
        let two = instance(&mut rng, 2)?;
        let three = instance(&mut rng, 3)?;
        let rows = [
            ("llull, 2 voters", solve_llull_two_voters(&two)?, solve_bruteforce(&two, Rule::LLULL, &config)?),
            ("maximin, 2 voters", solve_maximin_two_voters(&two)?, solve_bruteforce(&two, Rule::Maximin, &config)?),
            ("maximin, 3 voters", solve_maximin_three_voters(&three)?, solve_bruteforce(&three, Rule::Maximin, &config)?),
        ];
        for (label, fast, slow) in rows {
            assert_eq!(fast.witness, slow.witness);
            println!("round {round} {label}: {:?} {:?}", fast.decision, fast.witness);
        }
    }
    Ok(())
}
