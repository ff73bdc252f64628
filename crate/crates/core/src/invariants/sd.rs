//! The coefficients `S_{d;1,x}` and general ellipsoid structure coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::canonical::{normalization_constant, CanonicalModel, Constants};
use crate::error::{Error, Result};
use crate::scalar::{format_rational, int, Rational};
use crate::toric::{LatticePair, ToricDomain};

/// The unique `k` with `3d − 1 = k + ⌊k/(x+δ)⌋`.
pub fn solve_k(d: u32, x: &Rational) -> Option<u32> {
    let (p, q) = (x.numer(), x.denom());
    let target = 3 * d as u64 - 1;
    (1..=target).find(|&k| {
        let kq = BigInt::from(k) * q;
        let (f, r) = kq.div_rem(p);
        let fl = if r.is_zero() { f - 1 } else { f };
        BigInt::from(k) + fl == BigInt::from(target)
    }).map(|k| k as u32)
}

/// `⟨(Φ_{a,b} ∘ Ψ_{a',b'})^k(A_{q₁},…,A_{q_k}), A_{Σq+k−1}⟩`, using `model` for `Φ_{a,b}`.
pub fn structure_coefficient_with(
    model: &mut CanonicalModel,
    src: (&Rational, &Rational),
    qs: &[u32],
) -> Result<Rational> {
    let e = ToricDomain::ellipsoid(src.0.clone(), src.1.clone())?;
    let mut c = Rational::one();
    let mut pairs: Vec<LatticePair> = Vec::with_capacity(qs.len());
    for &q in qs {
        if model.mode() == Constants::Geometric {
            c *= normalization_constant(src.0, src.1, q)?;
        }
        pairs.push(e.argmin_pair(q)?);
    }
    let (v, _) = model.phi_k(&pairs)?;
    Ok(c * v)
}

pub fn structure_coefficient(
    src: (&Rational, &Rational),
    tgt: (&Rational, &Rational),
    qs: &[u32],
    mode: Constants,
) -> Result<Rational> {
    let mut model = CanonicalModel::new(tgt.0.clone(), tgt.1.clone(), mode)?;
    structure_coefficient_with(&mut model, src, qs)
}

/// `S_{d;1,x}` evaluated with a caller-supplied model for `Φ_{1,x}`.
pub fn s_d_with(model: &mut CanonicalModel, d: u32, x: &Rational) -> Result<Rational> {
    let k = solve_k(d, x).ok_or_else(|| Error::NoValidK { d, x: format_rational(x) })?;
    let qs = vec![2; d as usize];
    let one = int(1);
    let c = structure_coefficient_with(model, (&one, &one), &qs)?;
    let fact: BigInt = (1..=d).fold(BigInt::one(), |a, t| a * BigInt::from(t));
    Ok(c / Rational::from_integer(fact * BigInt::from(k)))
}

/// `S_{d;1,x} = ⟨Φ_{1,x}Ψ_{1,1}(⊙^d A₂), A_{3d−1}⟩ / (d! k)`.
pub fn s_d(d: u32, x: &Rational, mode: Constants) -> Result<Rational> {
    let mut model = CanonicalModel::new(int(1), x.clone(), mode)?;
    s_d_with(&mut model, d, x)
}
