//! Scans of structure coefficients for ellipsoid embedding obstructions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::canonical::{normalization_constant, CanonicalModel, Constants};
use crate::error::{Error, Result};
use crate::scalar::{format_rational, PerturbedScalar, Rational};
use crate::toric::{LatticePair, ToricDomain};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanBounds {
    pub max_k: u32,
    pub max_q: u32,
}

impl Default for ScanBounds {
    fn default() -> Self {
        ScanBounds { max_k: 8, max_q: 30 }
    }
}

/// Which witnesses a scan reports.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ScanMode {
    /// Every multiset with a nonzero coefficient.
    All,
    /// Only nonzero coefficients whose inequality fails. Coefficients are computed only there.
    #[default]
    ViolationsOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionVerdict {
    pub qs: Vec<u32>,
    pub coeff: Rational,
    pub lhs: PerturbedScalar,
    pub rhs: PerturbedScalar,
    pub violated: bool,
    pub bounds: ScanBounds,
}

impl ObstructionVerdict {
    pub fn k(&self) -> usize {
        self.qs.len()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "witness": {"k": self.k(), "qs": self.qs, "coeff": format_rational(&self.coeff)},
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "violated": self.violated,
            "bounds": {"max_k": self.bounds.max_k, "max_q": self.bounds.max_q},
        })
    }
}

/// Capacities scaled by a common denominator, for cheap comparisons during enumeration.
struct ScaledCaps {
    vals: Vec<(i128, i128)>,
}

impl ScaledCaps {
    fn new(caps: &[PerturbedScalar], scale: &BigInt) -> Result<Self> {
        let overflow = || Error::InvalidDomain("capacities too large for the scan".into());
        let vals = caps
            .iter()
            .map(|c| {
                let b = (c.base.clone() * Rational::from_integer(scale.clone())).to_integer();
                Ok((b.to_i128().ok_or_else(overflow)?, c.delta.to_i128().ok_or_else(overflow)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ScaledCaps { vals })
    }
}

fn common_denominator(caps: &[&[PerturbedScalar]]) -> BigInt {
    caps.iter().flat_map(|v| v.iter()).fold(BigInt::one(), |l, c| l.lcm(c.base.denom()))
}

/// Multisets `{q₁ ≤ … ≤ q_k}` within bounds for which `keep(qs)` holds, ordered by `(k, qs)`.
fn enumerate(bounds: ScanBounds, keep: &(dyn Fn(&[u32]) -> bool + Sync)) -> Vec<Vec<u32>> {
    fn rec(qs: &mut Vec<u32>, k: usize, max_q: u32, keep: &(dyn Fn(&[u32]) -> bool + Sync), out: &mut Vec<Vec<u32>>) {
        if qs.len() == k {
            if keep(qs) {
                out.push(qs.clone());
            }
            return;
        }
        let lo = qs.last().copied().unwrap_or(1);
        for q in lo..=max_q {
            qs.push(q);
            rec(qs, k, max_q, keep, out);
            qs.pop();
        }
    }
    let mut jobs = Vec::new();
    for k in 1..=bounds.max_k as usize {
        for q1 in 1..=bounds.max_q {
            jobs.push((k, q1));
        }
    }
    jobs.par_iter()
        .map(|&(k, q1)| {
            let mut out = Vec::new();
            rec(&mut vec![q1], k, bounds.max_q, keep, &mut out);
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Witnesses for embedding `E(a,b)` into `E(a′,b′)` (stably).
///
/// Each nonzero `⟨(Φ_{a,b}∘Ψ_{a′,b′})^k(A_{q₁},…,A_{q_k}), A_{Σq+k−1}⟩` forces
/// `Σ c_{q_s}(E(a′,b′)) ≥ c_{Σq+k−1}(E(a,b))`; a verdict is violated when that fails.
pub fn obstruct_ellipsoid(
    tgt: (&Rational, &Rational),
    src: (&Rational, &Rational),
    bounds: ScanBounds,
    mode: Constants,
    scan: ScanMode,
) -> Result<Vec<ObstructionVerdict>> {
    if bounds.max_k == 0 || bounds.max_q == 0 {
        return Err(Error::Parse("scan bounds must be at least 1".into()));
    }
    let small = ToricDomain::ellipsoid(tgt.0.clone(), tgt.1.clone())?;
    let big = ToricDomain::ellipsoid(src.0.clone(), src.1.clone())?;
    let top = bounds.max_k * bounds.max_q + bounds.max_k - 1;
    let src_caps: Vec<PerturbedScalar> =
        (0..=bounds.max_q).map(|q| if q == 0 { Ok(PerturbedScalar::zero()) } else { big.gh_capacity(q) }).collect::<Result<_>>()?;
    let tgt_caps: Vec<PerturbedScalar> =
        (0..=top).map(|q| if q == 0 { Ok(PerturbedScalar::zero()) } else { small.gh_capacity(q) }).collect::<Result<_>>()?;
    let scale = common_denominator(&[&src_caps, &tgt_caps]);
    let (sc, tc) = (ScaledCaps::new(&src_caps, &scale)?, ScaledCaps::new(&tgt_caps, &scale)?);
    let lhs_of = |qs: &[u32]| qs.iter().fold((0i128, 0i128), |(b, d), &q| (b + sc.vals[q as usize].0, d + sc.vals[q as usize].1));
    let target_of = |qs: &[u32]| qs.iter().sum::<u32>() + qs.len() as u32 - 1;

    let candidates = match scan {
        ScanMode::All => enumerate(bounds, &|_| true),
        ScanMode::ViolationsOnly => enumerate(bounds, &|qs| lhs_of(qs) < tc.vals[target_of(qs) as usize]),
    };

    let pairs: Vec<LatticePair> = (0..=bounds.max_q)
        .map(|q| if q == 0 { Ok(LatticePair::new(0, 0)) } else { big.argmin_pair(q) })
        .collect::<Result<_>>()?;
    let consts: Vec<Rational> = (0..=bounds.max_q)
        .map(|q| match (q, mode) {
            (0, _) | (_, Constants::Ones) => Ok(Rational::one()),
            _ => normalization_constant(src.0, src.1, q),
        })
        .collect::<Result<_>>()?;

    let coeffs: Vec<Rational> = candidates
        .par_iter()
        .map_init(
            || CanonicalModel::new(tgt.0.clone(), tgt.1.clone(), mode),
            |model, qs| {
                let model = model.as_mut().map_err(|e| e.clone())?;
                let ps: Vec<LatticePair> = qs.iter().map(|&q| pairs[q as usize]).collect();
                let (v, _) = model.phi_k(&ps)?;
                Ok(qs.iter().fold(v, |c, &q| c * &consts[q as usize]))
            },
        )
        .collect::<Result<_>>()?;

    let mut out = Vec::new();
    for (qs, coeff) in candidates.into_iter().zip(coeffs) {
        if coeff.is_zero() {
            continue;
        }
        let mut lhs = PerturbedScalar::zero();
        for &q in &qs {
            lhs += &src_caps[q as usize];
        }
        let rhs = tgt_caps[target_of(&qs) as usize].clone();
        let violated = lhs < rhs;
        out.push(ObstructionVerdict { qs, coeff, lhs, rhs, violated, bounds });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn identity_has_no_violation() {
        let one = int(1);
        let b = ScanBounds { max_k: 4, max_q: 10 };
        let v = obstruct_ellipsoid((&one, &one), (&one, &one), b, Constants::Geometric, ScanMode::All).unwrap();
        assert!(!v.is_empty());
        assert!(v.iter().all(|w| !w.violated));
        let v = obstruct_ellipsoid((&one, &one), (&one, &one), b, Constants::Geometric, ScanMode::ViolationsOnly).unwrap();
        assert!(v.is_empty());
    }

    #[test]
    fn stabilized_obstruction_from_degree_21() {
        let (a, b) = (int(1), rat(55, 8));
        let c = rat(13, 5);
        let bounds = ScanBounds { max_k: 21, max_q: 2 };
        let v = obstruct_ellipsoid((&a, &b), (&c, &c), bounds, Constants::Geometric, ScanMode::ViolationsOnly).unwrap();
        let w = v.iter().find(|w| w.qs == vec![2; 21]).expect("d=21 witness");
        assert!(w.violated);
        assert_eq!(w.rhs.base, int(55));
        let c = rat(8, 3);
        let v = obstruct_ellipsoid((&a, &b), (&c, &c), bounds, Constants::Geometric, ScanMode::ViolationsOnly).unwrap();
        assert!(v.iter().all(|w| w.qs != vec![2; 21]));
    }
}
