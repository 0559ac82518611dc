//! Send a codeword through a two-deletion channel several times and decode
//! it from the distinct reads.

use delrecon::codes::enumerate_code;
use delrecon::confusability::np_bound;
use delrecon::reconstruct::{certify_reconstruction_code, decode, simulate_channel, simulate_trials};
use delrecon::{CodeFamily, CsvtParams};

fn main() -> delrecon::Result<()> {
    let (n, p) = (12usize, 4u64);
    let code = enumerate_code(CodeFamily::Csvt(CsvtParams::new(p, 0, 0)), n)?;
    let reads_needed = np_bound(n as u64, p)? as usize;
    let cert = certify_reconstruction_code(&code, reads_needed, 2)?;
    println!("{} codewords; {reads_needed} reads certified: {}", code.len(), cert.holds);

    let x = code.words()[code.len() / 2];
    let reads = simulate_channel(&x, 2, reads_needed, 7)?;
    for r in reads.reads().iter() {
        println!("  read {r}");
    }
    println!("sent {x}, decoded {}", decode(&code, &reads)?);

    let one = certify_reconstruction_code(&code, 2, 1)?;
    println!("two reads at one deletion certified: {}", one.holds);
    let report = simulate_trials(&code, 1, 2, 500, 11)?;
    println!("{} of {} single-deletion trials decoded", report.successes, report.trials);
    Ok(())
}
