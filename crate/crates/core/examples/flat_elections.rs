//! The three-voter elections in which every candidate has the same Copeland
//! score, and their copy structure.

use nomination::copeland_scores;
use nomination::flat::{generate_flat, is_flat, level_group, FlatId};

fn main() -> nomination::Result<()> {
    for q in 1..=4 {
        let e = generate_flat(q)?;
        let s = copeland_scores(&e)[0];
        println!(
            "level {q}: {} candidates, each with {} wins and {} ties, flat: {}",
            e.num_candidates(),
            s.wins,
            s.ties,
            is_flat(&e)
        );
    }
    let e = generate_flat(2)?;
    for voter in e.rankings_by_id() {
        println!("  {}", voter.join(" > "));
    }
    let c = FlatId::from_position(4, 2);
    let group: Vec<String> = level_group(&c, 1, 2)?.iter().map(|x| x.to_string()).collect();
    println!("level-1 group of {c}: {}", group.join(" "));
    Ok(())
}
