//! Searches for obstructions to stably embedding E(1,55/8) into a ball.
//!
//! Usage: `cargo run --release --example obstructions -- [c] [max_k] [max_q]`

use symcap::canonical::Constants;
use symcap::invariants::{obstruct_ellipsoid, ScanBounds, ScanMode};
use symcap::scalar::{format_rational, int, parse_rational, rat};

fn main() -> symcap::Result<()> {
    let mut args = std::env::args().skip(1);
    let c = args.next().map(|s| parse_rational(&s)).transpose()?.unwrap_or_else(|| rat(13, 5));
    let max_k = args.next().and_then(|s| s.parse().ok()).unwrap_or(21);
    let max_q = args.next().and_then(|s| s.parse().ok()).unwrap_or(2);
    let (a, b) = (int(1), rat(55, 8));
    let bounds = ScanBounds { max_k, max_q };
    let v = obstruct_ellipsoid((&a, &b), (&c, &c), bounds, Constants::Geometric, ScanMode::ViolationsOnly)?;
    println!("E(1,55/8) into E({0},{0}), k <= {max_k}, q <= {max_q}", format_rational(&c));
    if v.is_empty() {
        println!("  no violated inequality within these bounds");
    }
    for w in &v {
        println!("  qs {:?}: coefficient {} and {} < {}", w.qs, format_rational(&w.coeff), w.lhs, w.rhs);
    }
    Ok(())
}
