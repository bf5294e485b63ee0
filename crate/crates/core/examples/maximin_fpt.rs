//! The Maximin solver whose cost depends on the number of parties rather than
//! on the party sizes: eight voters and parties of five candidates each.

use nomination::solvers::{solve_maximin_fpt, SolverConfig};
use nomination::{Election, NominationInstance};
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn main() -> nomination::Result<()> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    let names: Vec<String> = (0..25).map(|i| format!("c{i:02}")).collect();
    let config = SolverConfig::default();
    for trial in 0..4 {
        let rankings: Vec<Vec<String>> = (0..8)
            .map(|_| {
                let mut r = names.clone();
                r.shuffle(&mut rng);
                r
            })
            .collect();
        let parties: Vec<Vec<String>> = names.chunks(5).map(|c| c.to_vec()).collect();
        let inst = NominationInstance::from_ids(Election::new(&names, &rankings)?, &parties, trial % 5)?;
        let start = std::time::Instant::now();
        let result = solve_maximin_fpt(&inst, &config)?;
        println!(
            "trial {trial}: {} nominations, {:?} in {:?}, witness {:?}",
            inst.num_nominations(),
            result.decision,
            start.elapsed(),
            result.witness
        );
    }
    Ok(())
}
