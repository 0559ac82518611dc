//! Enumerate constrained shifted VT codes, compare class sizes with the
//! counting formula, and print redundancies.

use delrecon::codes::{best_csvt_class, code_stats, count_bounded_periodic, csvt_bound_stats, enumerate_code};
use delrecon::{CodeFamily, CsvtParams};

fn main() -> delrecon::Result<()> {
    let n = 12;
    for p in [4u64, 6, 8] {
        let best = best_csvt_class(n, p)?;
        let code = enumerate_code(CodeFamily::Csvt(CsvtParams::new(p, best.syndrome, best.parity)), n)?;
        let stats = code_stats(&code)?;
        println!(
            "n={n} P={p}: {} constrained words, best class (c={}, d={}) has {} codewords, redundancy {:.3}",
            count_bounded_periodic(n as u64, p)?,
            best.syndrome,
            best.parity,
            code.len(),
            stats.redundancy
        );
    }

    let small = enumerate_code(CodeFamily::Csvt(CsvtParams::new(4, 1, 1)), 6)?;
    print!("CSVT(6, 4; 1, 1):\n{}", small.to_file_string());

    for (n, p) in [(127, 6), (255, 10), (1023, 14)] {
        println!("n={n} P={p}: redundancy <= {:.3}", csvt_bound_stats(n, p)?.redundancy);
    }
    Ok(())
}
