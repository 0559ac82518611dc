//! Run one exhaustive verification suite at reduced limits.

use delrecon::verify::{run_suite, Suite, VerifyOptions};

fn main() -> delrecon::Result<()> {
    let suite: Suite = std::env::args().nth(1).as_deref().unwrap_or("confusability").parse()?;
    let opts = VerifyOptions { n_max: Some(9), t_max: Some(2), samples: Some(50), ..Default::default() };
    let report = run_suite(suite, &opts)?;
    print!("{}", report.to_human());
    if !report.passed() {
        std::process::exit(1);
    }
    Ok(())
}
