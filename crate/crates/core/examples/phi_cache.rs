//! Persisting top-level coefficients across runs.
//!
//! Usage: `cargo run --release --example phi_cache -- [path]`

use symcap::canonical::{CanonicalModel, Constants, PhiCache};
use symcap::invariants::s_d_with;
use symcap::scalar::{format_rational, int};

fn main() -> symcap::Result<()> {
    let path = std::env::args().nth(1).map(Into::into).unwrap_or_else(|| std::env::temp_dir().join("symcap-example-cache.tsv"));
    let mut cache = PhiCache::open(&path)?;
    println!("{} entries in {}", cache.len(), path.display());
    let x = int(30);
    let mut m = CanonicalModel::new(int(1), x.clone(), Constants::Geometric)?;
    m.seed(&cache);
    for d in 1..=8 {
        println!("S_{d} = {}", format_rational(&s_d_with(&mut m, d, &x)?));
    }
    m.store(&mut cache);
    cache.save()?;
    println!("{} entries after the run", cache.len());
    Ok(())
}
