//! Largest two-read reconstruction codes for short lengths, found by exact
//! search, next to the clique-cover bound.

use delrecon::cover::{cover_size_exact, max_independent_set_exact};

fn main() -> delrecon::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    println!("n\talpha\tcover(ℓ=2)");
    for n in 1..=max_n {
        let start = std::time::Instant::now();
        let set = max_independent_set_exact(n)?;
        let cover = if n >= 4 { cover_size_exact(n, 2)?.to_string() } else { "-".into() };
        println!("{n}\t{}\t{cover}\t({:.2?})", set.size, start.elapsed());
    }
    Ok(())
}
