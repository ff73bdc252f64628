//! Gutt-Hutchings capacities of a few domains, and the Reeb spectrum of an ellipsoid.
//!
//! Usage: `cargo run --example gh_capacities -- [domain] [count]`

use symcap::toric::reeb_spectrum;
use symcap::ToricDomain;

fn main() -> symcap::Result<()> {
    let lit = std::env::args().nth(1).unwrap_or_else(|| "ellipsoid:2,5".into());
    let count: u32 = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(10);
    let dom: ToricDomain = lit.parse()?;
    println!("{}", dom.literal());
    for q in 1..=count {
        println!("  c_{q:<3} = {:<10} argmin {}", dom.gh_capacity(q)?.to_string(), dom.argmin_pair(q)?);
    }

    let (a, b) = (symcap::scalar::int(2), symcap::scalar::int(5));
    println!("Reeb orbits of E(2,5):");
    for e in reeb_spectrum(&a, &b, count) {
        println!("  #{:<3} {:?}^{} action {} degree {}", e.ordinal, e.family, e.multiplicity, e.action, e.degree);
    }

    for lit in ["polydisk:1,2", "polygon:0,0;3,0;2,2;0,3"] {
        let d: ToricDomain = lit.parse()?;
        let caps: Vec<String> = (1..=8).map(|q| d.gh_capacity(q).map(|c| c.to_string())).collect::<Result<_, _>>()?;
        println!("{lit}: {}", caps.join(", "));
    }
    Ok(())
}
