//! Prints `S_d = S_{d;1,x}` for large `x`, where the value no longer depends on `x`.
//!
//! Usage: `cargo run --release --example sd_sequence -- [max_d]`

use std::time::Instant;

use symcap::canonical::{CanonicalModel, Constants};
use symcap::invariants::s_d_with;
use symcap::scalar::{format_rational, int};

fn main() -> symcap::Result<()> {
    let max_d: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let x = int(10 * max_d.max(10) as i64);
    let mut model = CanonicalModel::new(int(1), x.clone(), Constants::Geometric)?;
    for d in 1..=max_d {
        let t = Instant::now();
        let s = s_d_with(&mut model, d, &x)?;
        eprintln!("d={d}: {:.2?}, {} memo states", t.elapsed(), model.stats().states);
        println!("S_{d} = {}", format_rational(&s));
    }
    Ok(())
}
