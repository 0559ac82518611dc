//! Reads needed at two and three deletions for the different code classes.

use delrecon::balls::nu_space;
use delrecon::confusability::reconstruction_bounds;

fn main() -> delrecon::Result<()> {
    println!("{:>5} {:>2} {:>10} {:>10} {:>10} {:>10}", "n", "t", "nu_t(n)", "N1", "N2", "N_P(P=8)");
    for n in [8i64, 16, 64, 127, 255] {
        for t in [2i64, 3] {
            let b = reconstruction_bounds(n, t, (t == 2).then_some(8))?;
            let show = |v: Option<String>| v.unwrap_or_else(|| "-".into());
            println!(
                "{n:>5} {t:>2} {:>10} {:>10} {:>10} {:>10}",
                nu_space(n, t),
                show(b.n1.map(|v| v.to_string())),
                b.n2,
                show(b.np.map(|v| v.to_string()))
            );
        }
    }
    Ok(())
}
