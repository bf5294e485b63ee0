//! Partitioned subdigraph isomorphism with a pattern of indegree at most one:
//! the rule-based solver, its trace, and the exhaustive check.

use nomination::psi::{brute_force_psi, solve_psi, Digraph, PsiInstance, Reducer, DEFAULT_BRUTE_FORCE_GUARD};

fn main() -> nomination::Result<()> {
    // Pattern: a 3-cycle 0 -> 1 -> 2 -> 0 with a pendant 0 -> 3.
    let pattern = Digraph::with_arcs(4, [(0, 1), (1, 2), (2, 0), (0, 3)])?;
    // Host: two candidates per pattern vertex; only one choice closes the cycle.
    let labels = vec![0, 0, 1, 1, 2, 2, 3, 3];
    let host = Digraph::with_arcs(8, [(0, 2), (1, 3), (2, 4), (3, 5), (5, 1), (1, 7), (0, 6)])?;
    let inst = PsiInstance::new(pattern, host, labels)?;

    let mut reducer = Reducer::new(&inst)?;
    while let Some(step) = reducer.apply_leaf() {
        println!("leaf rule: {step:?}");
    }
    while let Some(step) = reducer.apply_cycle() {
        println!("cycle rule: {step:?}");
    }
    println!("surviving pattern vertices: {:?}", reducer.pattern_vertices());

    let fast = solve_psi(&inst)?;
    let slow = brute_force_psi(&inst, DEFAULT_BRUTE_FORCE_GUARD)?;
    println!("rules: {fast:?}, exhaustive: {slow:?}");
    assert_eq!(fast.is_some(), slow.is_some());
    assert!(fast.is_none_or(|f| inst.is_embedding(&f)));
    Ok(())
}
