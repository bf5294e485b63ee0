//! Pairwise counts, Copeland^α and Maximin scores, and winners of a small
//! election with a majority cycle plus a clear loser.

use nomination::{copeland_scores, maximin_scores, winners, Alpha, Election, Rule};

fn main() -> nomination::Result<()> {
    let e = Election::new(
        &["a", "b", "c", "d"],
        &[["a", "b", "c", "d"], ["c", "a", "b", "d"], ["b", "c", "a", "d"], ["d", "a", "b", "c"]],
    )?;
    let pm = e.pairwise();
    println!("N(a,b) = {}, N(b,a) = {}", pm.get(0, 1), pm.get(1, 0));

    let half = Alpha::new(1, 2)?;
    let mm = maximin_scores(&e)?;
    for (c, s) in copeland_scores(&e).iter().enumerate() {
        println!(
            "{}: wins {} ties {} copeland^1/2 {} maximin {}",
            e.name(c),
            s.wins,
            s.ties,
            s.render(half),
            mm[c]
        );
    }
    for rule in [Rule::COPELAND, Rule::Copeland(half), Rule::LLULL, Rule::Maximin] {
        let names: Vec<&str> = winners(&e, rule).into_iter().map(|c| e.name(c)).collect();
        println!("{rule}: {}", names.join(" "));
    }
    Ok(())
}
