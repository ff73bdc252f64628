//! Homology ranks of V and of its bar complex, and a barcode.
//!
//! Usage: `cargo run --release --example homology -- [domain] [degree]`

use symcap::dgla::{barcode, homology_rank, Space};
use symcap::ToricDomain;

fn main() -> symcap::Result<()> {
    let dom: ToricDomain = std::env::args().nth(1).unwrap_or_else(|| "ellipsoid:1,5/2".into()).parse()?;
    let deg: i64 = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(-10);

    let ranks: Vec<String> = (-12..=-3).rev().map(|d| homology_rank(Space::V, &dom, d, None).map(|r| format!("{d}:{r}"))).collect::<Result<_, _>>()?;
    println!("H(V) ranks {}", ranks.join(" "));
    let ranks: Vec<String> = (-14..=-4).rev().step_by(2).map(|d| homology_rank(Space::Bar, &dom, d, None).map(|r| format!("{d}:{r}"))).collect::<Result<_, _>>()?;
    println!("bar homology ranks {}", ranks.join(" "));

    let bc = barcode(&dom, deg, None)?;
    println!("barcode of {} in degree {deg}: {} semi-infinite, incoming rank {}, outgoing rank {}", dom.literal(), bc.p, bc.l, bc.r);
    for b in &bc.bars {
        match &b.death {
            Some(d) => println!("  [{}, {})", b.birth, d),
            None => println!("  [{}, inf)", b.birth),
        }
    }
    Ok(())
}
