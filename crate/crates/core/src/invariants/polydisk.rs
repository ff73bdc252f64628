//! Coefficients of the action-minimal forms of two products at `P(1,1)`.

use num_bigint::BigInt;

use crate::canonical::ReductionEngine;
use crate::error::Result;
use crate::scalar::{int, Rational};
use crate::toric::{LatticePair, ToricDomain};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolydiskVariant {
    /// `β_{1,0}^{⊙(d−1)}⊙β_{0,1}` against `β_{2d−1,0}`.
    Cube,
    /// `β_{1,1}^{⊙d}` against `β_{3d−1,0}`.
    Ball,
}

impl std::str::FromStr for PolydiskVariant {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cube" => Ok(PolydiskVariant::Cube),
            "ball" => Ok(PolydiskVariant::Ball),
            _ => Err(crate::error::Error::Parse(format!("unknown variant {s:?}"))),
        }
    }
}

pub fn polydisk_word(d: u32, variant: PolydiskVariant) -> Vec<LatticePair> {
    assert!(d >= 1);
    match variant {
        PolydiskVariant::Cube => {
            let mut v = vec![LatticePair::new(1, 0); d as usize - 1];
            v.push(LatticePair::new(0, 1));
            v
        }
        PolydiskVariant::Ball => vec![LatticePair::new(1, 1); d as usize],
    }
}

/// Coefficient on `β_{2d−1,0}` (Cube) or `β_{3d−1,0}` (Ball) after reduction at `P(1,1)`.
pub fn nonzero_coeff_polydisk(d: u32, variant: PolydiskVariant) -> Result<Rational> {
    let p = ToricDomain::polydisk(int(1), int(1))?;
    polydisk_coeff_with(&mut ReductionEngine::new(p), d, variant)
}

pub fn polydisk_coeff_with(eng: &mut ReductionEngine, d: u32, variant: PolydiskVariant) -> Result<Rational> {
    eng.coefficient(&polydisk_word(d, variant))
}

/// `d!(3d−1)`, the factor relating the Ball coefficient to `S_d`.
pub fn ball_normalizer(d: u32) -> Rational {
    let f: BigInt = (1..=d).fold(BigInt::from(1), |a, t| a * BigInt::from(t));
    Rational::from_integer(f * BigInt::from(3 * d - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(nonzero_coeff_polydisk(4, PolydiskVariant::Cube).unwrap(), int(42));
        assert_eq!(nonzero_coeff_polydisk(1, PolydiskVariant::Cube).unwrap(), int(1));
        assert_eq!(nonzero_coeff_polydisk(1, PolydiskVariant::Ball).unwrap(), int(2));
    }
}
