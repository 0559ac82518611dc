//! Classify word pairs by how their single-deletion balls meet.

use delrecon::confusability::{classify_pair, t2_structure, PairKind};
use delrecon::Word;

fn main() -> delrecon::Result<()> {
    let pairs = [("0010", "0100"), ("011", "110"), ("0110", "0111"), ("110100", "101001"), ("000000", "111111")];
    for (x, y) in pairs {
        let (x, y): (Word, Word) = (x.parse()?, y.parse()?);
        let c = classify_pair(&x, &y)?;
        println!("{x} {y}: {:?}, {} common subsequence(s)", c.kind, c.intersection_size_d1);
        if let Some(w) = &c.witness {
            println!("    witness {}", serde_json::to_string(w).expect("json"));
        }
        if c.kind == PairKind::TypeB && x.len() >= 4 {
            let s = t2_structure(&x, &y)?;
            println!("    D_2 ∩ D_2 = D_1({}) ∪ {} extra word(s)", s.z, s.extra.len());
        }
    }
    Ok(())
}
