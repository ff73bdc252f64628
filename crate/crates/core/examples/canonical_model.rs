//! Components of the transfer map to the canonical model of an ellipsoid.

use symcap::canonical::{phi1, CanonicalModel, Constants};
use symcap::dgla::BarElement;
use symcap::scalar::{format_rational, int};
use symcap::toric::LatticePair;

fn main() -> symcap::Result<()> {
    let (one, r) = (int(1), int(100));
    for (i, j) in [(3, 2), (4, 1), (5, 0), (1, 1)] {
        let (c, q) = phi1(&one, &r, LatticePair::new(i, j), Constants::Geometric)?;
        println!("Phi^1(b:{i},{j}) = {} A{q}", format_rational(&c));
    }

    let mut m = CanonicalModel::new(one.clone(), r.clone(), Constants::Geometric)?;
    let b11 = LatticePair::new(1, 1);
    for k in 2..=5 {
        let (c, q) = m.phi_k(&vec![b11; k])?;
        println!("Phi^{k}(b:1,1 x{k}) = {} A{q}", format_rational(&c));
    }
    let (c, q) = m.phi_k(&[LatticePair::new(2, 0), LatticePair::new(2, 0)])?;
    println!("Phi^2(b:2,0, b:2,0) = {} A{q}", format_rational(&c));

    let x = BarElement::word("b:1,1*b:1,1*b:1,1".parse()?);
    println!("Phi-hat(b:1,1^3) = {}", m.phi_hat(&x)?);
    println!("Psi-hat(A2*A3) = {}", m.psi_hat(&[2, 3])?);
    println!("Phi-hat Psi-hat(A2*A3) = {}", m.phi_hat(&m.psi_hat(&[2, 3])?)?);
    println!("memo states: {}", m.stats().states);
    Ok(())
}
