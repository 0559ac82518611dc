//! Reads and redundancy for VT, CSVT and uncoded lengths 127, 255, 1023.

fn main() -> delrecon::Result<()> {
    let rows = delrecon::table1::table1()?;
    if std::env::args().any(|a| a == "--tsv") {
        print!("{}", delrecon::table1::to_tsv(&rows));
    } else {
        print!("{}", delrecon::table1::to_human(&rows));
    }
    Ok(())
}
