//! The capacities g_b computed two ways: by the canonical model and from the barcode.
//!
//! Usage: `cargo run --release --example capacities -- [a] [b]`

use symcap::invariants::{gb_capacity_ellipsoid, spectral_invariant, CapacityWord};
use symcap::scalar::{int, parse_rational};
use symcap::ToricDomain;

fn main() -> symcap::Result<()> {
    let a = std::env::args().nth(1).map(|s| parse_rational(&s)).transpose()?.unwrap_or_else(|| int(2));
    let b = std::env::args().nth(2).map(|s| parse_rational(&s)).transpose()?.unwrap_or_else(|| int(3));
    let dom = ToricDomain::ellipsoid(a.clone(), b.clone())?;
    println!("{}", dom.literal());
    for w in ["t0", "t1", "t2", "t3", "t0^2", "t0*t1", "t1^2", "t0^3"] {
        let word: CapacityWord = w.parse()?;
        let gb = gb_capacity_ellipsoid(&a, &b, &word)?;
        let sp = spectral_invariant(&dom, &word, None)?;
        println!("  {w:<6} canonical {gb:<8} barcode {sp}");
    }
    let p: ToricDomain = "polydisk:1,1".parse()?;
    for w in ["t0", "t1", "t0^2", "t1^2"] {
        println!("polydisk:1,1 {w:<5} {}", spectral_invariant(&p, &w.parse()?, None)?);
    }
    Ok(())
}
