//! Room matching: normalization to degree two or three, then the three-voter
//! Copeland encoding, decided by exhaustive search.

use nomination::reductions::oracles::solve_mmc;
use nomination::reductions::{gen_mmc_copeland_3v, mmc_normalize, MmcInstance};
use nomination::solvers::{solve_bruteforce, SolverConfig};
use nomination::Rule;

fn main() -> nomination::Result<()> {
    let raw = MmcInstance::new(
        &["s1", "s2", "s3"],
        &["c1"],
        &["r1", "r2", "r3"],
        &[("s1", "r1"), ("s2", "r1"), ("s2", "r2"), ("s3", "r2"), ("s3", "r3"), ("c1", "r2"), ("c1", "r3"), ("s1", "r3")],
    )?;
    let normalized = mmc_normalize(&raw);
    println!(
        "padding {}, {} rule applications, rejected {}, normal form {}",
        normalized.padding,
        normalized.applications.len(),
        normalized.rejected,
        normalized.instance.is_normal_form()
    );
    assert_eq!(solve_mmc(&raw)?.is_some(), solve_mmc(&normalized.instance)?.is_some());

    let small = MmcInstance::new(
        &[],
        &["c1", "c2"],
        &["r1", "r2"],
        &[("c1", "r1"), ("c1", "r2"), ("c2", "r1"), ("c2", "r2")],
    )?;
    let inst = gen_mmc_copeland_3v(&small)?;
    let result = solve_bruteforce(&inst, Rule::COPELAND, &SolverConfig::default())?;
    println!(
        "two couples, two rooms: {} parties, {:?}, matching exists: {}",
        inst.num_parties(),
        result.decision,
        solve_mmc(&small)?.is_some()
    );
    Ok(())
}
