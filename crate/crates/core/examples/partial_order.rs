//! Comparisons of words of canonical generators and maximality of single generators.

use symcap::dgla::{is_maximal_generator, partial_order_leq};
use symcap::ToricDomain;

fn main() -> symcap::Result<()> {
    let e: ToricDomain = "ellipsoid:1,55/8".parse()?;
    for q in [3u32, 8, 55, 62] {
        println!("A{q} maximal at {}: {}", e.literal(), is_maximal_generator(&e, q)?);
    }
    let ball: ToricDomain = "ellipsoid:1,1".parse()?;
    for (l, r) in [(vec![2u32, 2], vec![5u32]), (vec![5], vec![2, 2]), (vec![1, 1, 1], vec![2, 1])] {
        println!("{l:?} <= {r:?} at {}: {}", ball.literal(), partial_order_leq(&l, &r, &ball)?);
    }
    Ok(())
}
