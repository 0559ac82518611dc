//! Clique cover of the Type-A confusability graph and the redundancy lower
//! bound it implies for two-read single-deletion reconstruction codes.

use delrecon::cover::{build_cover, cover_size, redundancy_lower_bound, verify_cover, CliqueDescriptor};

fn main() -> delrecon::Result<()> {
    let (n, ell) = (12, 2);
    let mut shown = 0;
    for d in build_cover(n, ell)? {
        if let CliqueDescriptor::Parameterized { u, w, block, orientation } = d {
            if shown < 4 {
                let members: Vec<String> = d.expand(ell).iter().map(|x| x.to_string()).collect();
                println!("u={u} w={w} i={block} μ={orientation}: {{{}}}", members.join(", "));
                shown += 1;
            }
        }
    }

    let report = verify_cover(n, ell)?;
    println!("Q({n}, {ell}): {} singletons + {} cliques, valid: {}", report.singletons, report.cliques, report.holds());
    let size = cover_size(n, ell)?;
    println!("exact {} / closed form {:?}", size.exact, size.formula);

    for k in [8, 12, 16, 20] {
        let b = redundancy_lower_bound(1 << k, 0.5)?;
        println!("n=2^{k}: ℓ={} redundancy >= {:.4}", b.ell, b.bound);
    }
    Ok(())
}
