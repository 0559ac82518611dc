//! Deletion and insertion balls of a word, against the extremal sizes.

use delrecon::balls::{ball_intersection, dtn, nu_space};
use delrecon::{deletion_ball, insertion_ball, Word};

fn main() -> delrecon::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "0110100".to_string());
    let x: Word = arg.parse()?;
    let n = x.len() as i64;

    for t in 1..=3.min(x.len()) {
        let ball = deletion_ball(&x, t)?;
        println!("|D_{t}({x})| = {:>3}   D_{t}({n}) = {}", ball.len(), dtn(n, t as i64));
    }

    let ball = deletion_ball(&x, 1)?;
    let words: Vec<String> = ball.iter().map(|w| w.to_string()).collect();
    println!("D_1({x}) = {{{}}}", words.join(", "));

    let y = ball.as_slice()[0];
    println!("|I_1({y})| = {} and it contains {x}: {}", insertion_ball(&y, 1)?.len(), insertion_ball(&y, 1)?.contains(&x));

    // two words sharing the most two-deletion subsequences
    let other: Word = "0101100".parse()?;
    if other.len() == x.len() {
        println!("|D_2({x}) ∩ D_2({other})| = {}", ball_intersection(&x, &other, 2)?.len());
    }
    println!("whole-space read coverage nu_2({n}) = {}", nu_space(n, 2));
    Ok(())
}
