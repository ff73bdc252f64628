//! The nonvanishing criterion at a few x = p/q above and below the fourth power of the golden ratio.

use symcap::canonical::Constants;
use symcap::invariants::{at_least_tau4, is_maximal_short_orbit, rseep_check};
use symcap::scalar::format_rational;

fn main() -> symcap::Result<()> {
    for (p, q) in [(19u64, 2u64), (55, 8), (7, 2), (11, 1), (89, 13), (50, 7)] {
        if (p + q) % 3 != 0 {
            println!("{p}/{q}: at least tau^4 = {}, p+q not divisible by 3", at_least_tau4(p, q));
            continue;
        }
        let v = rseep_check(p, q, Constants::Geometric)?;
        let d = (p + q) / 3;
        println!(
            "{p}/{q}: d={d} applies={} value={} short orbit maximal={}",
            v.applies,
            format_rational(&v.value),
            is_maximal_short_orbit(p, q, d)?
        );
    }
    Ok(())
}
