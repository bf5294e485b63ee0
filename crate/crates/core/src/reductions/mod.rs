//! Instance generators for the hardness reductions, the room-matching
//! normal form, and exhaustive oracles for the source problems.

mod cnf;
mod coloring;
mod graph;
mod maximin_sat;
mod mcq;
mod mmc;
mod mmc_copeland;
pub mod oracles;

pub use cnf::Cnf;
pub use coloring::{gen_3col_copeland_2v, gen_3col_llull_4v};
pub use graph::Graph;
pub use maximin_sat::{gen_3sat_maximin_4v, gen_3sat_maximin_5v};
pub use mcq::gen_mcq_copeland;
pub use mmc::{mmc_normalize, Kind, MmcInstance, Normalized};
pub use mmc_copeland::{gen_mmc_copeland_3v, gen_mmc_copeland_3v_with_order, mmc_teams, Team};

pub(crate) use graph::check_id;

use crate::election::{Election, NominationInstance};
use crate::error::Result;

/// Builds an instance whose candidates are the members of `parties`.
pub(crate) fn assemble(
    parties: Vec<Vec<String>>,
    voters: Vec<Vec<String>>,
    distinguished: usize,
) -> Result<NominationInstance> {
    let names: Vec<String> = parties.iter().flatten().cloned().collect();
    let election = Election::new(&names, &voters)?;
    NominationInstance::from_ids(election, &parties, distinguished)
}

/// Ascending id order.
pub(crate) fn forward(mut xs: Vec<String>) -> Vec<String> {
    xs.sort();
    xs
}

/// Descending id order.
pub(crate) fn reverse(mut xs: Vec<String>) -> Vec<String> {
    xs.sort_by(|a, b| b.cmp(a));
    xs
}
