//! Exact rationals and actions carrying an infinitesimal perturbation.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A rational plus an integer multiple of an infinitesimal `δ > 0`.
///
/// Ordered lexicographically, so `δ` is smaller than every positive rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PerturbedScalar {
    pub base: Rational,
    pub delta: BigInt,
}

impl PerturbedScalar {
    pub fn new(base: Rational, delta: BigInt) -> Self {
        PerturbedScalar { base, delta }
    }

    pub fn exact(base: Rational) -> Self {
        PerturbedScalar { base, delta: BigInt::zero() }
    }

    pub fn zero() -> Self {
        Self::exact(Rational::zero())
    }

    pub fn scale(&self, k: u64) -> Self {
        PerturbedScalar {
            base: &self.base * Rational::from_integer(BigInt::from(k)),
            delta: &self.delta * BigInt::from(k),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({"base": format_rational(&self.base), "delta": self.delta.to_string()})
    }
}

impl fmt::Display for PerturbedScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = format_rational(&self.base);
        if self.delta.is_zero() {
            write!(f, "{b}")
        } else {
            let sign = if self.delta.is_negative() { "-" } else { "+" };
            write!(f, "{b}{sign}{}δ", self.delta.abs())
        }
    }
}

impl Add for &PerturbedScalar {
    type Output = PerturbedScalar;
    fn add(self, o: &PerturbedScalar) -> PerturbedScalar {
        PerturbedScalar { base: &self.base + &o.base, delta: &self.delta + &o.delta }
    }
}

impl Add for PerturbedScalar {
    type Output = PerturbedScalar;
    fn add(self, o: PerturbedScalar) -> PerturbedScalar {
        &self + &o
    }
}

impl Sub for &PerturbedScalar {
    type Output = PerturbedScalar;
    fn sub(self, o: &PerturbedScalar) -> PerturbedScalar {
        PerturbedScalar { base: &self.base - &o.base, delta: &self.delta - &o.delta }
    }
}

impl Neg for PerturbedScalar {
    type Output = PerturbedScalar;
    fn neg(self) -> PerturbedScalar {
        PerturbedScalar { base: -self.base, delta: -self.delta }
    }
}

impl AddAssign<&PerturbedScalar> for PerturbedScalar {
    fn add_assign(&mut self, o: &PerturbedScalar) {
        self.base += &o.base;
        self.delta += &o.delta;
    }
}

impl Mul<&PerturbedScalar> for u64 {
    type Output = PerturbedScalar;
    fn mul(self, s: &PerturbedScalar) -> PerturbedScalar {
        s.scale(self)
    }
}
