//! Reduction of two families of products at the polydisk P(1,1).
//!
//! Usage: `cargo run --release --example polydisk_coefficients -- [max_d]`

use symcap::canonical::ReductionEngine;
use symcap::invariants::polydisk::{ball_normalizer, polydisk_coeff_with};
use symcap::invariants::{s_d, PolydiskVariant};
use symcap::canonical::Constants;
use symcap::scalar::{format_rational, int};
use symcap::ToricDomain;

fn main() -> symcap::Result<()> {
    let max_d: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let mut eng = ReductionEngine::new(ToricDomain::polydisk(int(1), int(1))?);
    for d in 1..=max_d {
        let cube = polydisk_coeff_with(&mut eng, d, PolydiskVariant::Cube)?;
        let ball = polydisk_coeff_with(&mut eng, d, PolydiskVariant::Ball)?;
        let sd = s_d(d, &int(10 * d as i64), Constants::Geometric)?;
        println!(
            "d={d}: cube {} ball {} ball/(d!(3d-1)) {} S_d {}",
            format_rational(&cube),
            format_rational(&ball),
            format_rational(&(ball / ball_normalizer(d))),
            format_rational(&sd)
        );
    }
    Ok(())
}
