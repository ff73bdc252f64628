//! Recomputes rows `(d, x) ↦ S_{d;1,x}` of the low-degree table.
//!
//! Usage: `cargo run --release --example table1 -- [d x]...`, e.g. `-- 21 55/8`.

use std::time::Instant;

use symcap::canonical::Constants;
use symcap::invariants::s_d;
use symcap::scalar::{format_rational, parse_rational};

const ROWS: &[(u32, &str)] = &[(4, "11"), (5, "14"), (7, "19/2"), (8, "7"), (10, "9"), (11, "29/4")];

fn main() -> symcap::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let rows: Vec<(u32, String)> = if args.is_empty() {
        ROWS.iter().map(|&(d, x)| (d, x.to_string())).collect()
    } else {
        args.chunks(2)
            .map(|c| (c[0].parse().expect("d must be an integer"), c.get(1).cloned().expect("x missing")))
            .collect()
    };
    println!("{:>4} {:>8} {:>12}", "d", "x", "S_{d;1,x}");
    for (d, x) in rows {
        let t = Instant::now();
        let v = s_d(d, &parse_rational(&x)?, Constants::Geometric)?;
        eprintln!("  ({d}, {x}) took {:.2?}", t.elapsed());
        println!("{d:>4} {x:>8} {:>12}", format_rational(&v));
    }
    Ok(())
}
