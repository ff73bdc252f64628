//! The nonvanishing criterion for the stabilized ellipsoid embedding problem.

use num_integer::Integer;
use num_traits::Zero;
use serde_json::{json, Value};

use super::sd::s_d;
use crate::canonical::Constants;
use crate::error::{Error, Result};
use crate::scalar::{format_rational, Rational};

/// `p/q ≥ τ⁴ = (7+3√5)/2`, decided by `2p − 7q ≥ 0` and `(2p − 7q)² ≥ 45q²`.
pub fn at_least_tau4(p: u64, q: u64) -> bool {
    let (p, q) = (p as i128, q as i128);
    let t = 2 * p - 7 * q;
    t >= 0 && t * t >= 45 * q * q
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RseepVerdict {
    pub d: u32,
    pub applies: bool,
    pub nonzero: bool,
    pub value: Rational,
}

impl RseepVerdict {
    pub fn to_json(&self) -> Value {
        json!({"applies": self.applies, "nonzero": self.nonzero, "value": format_rational(&self.value)})
    }
}

/// Evaluates `S_{d;1,p/q}` with `d = (p+q)/3` and whether the threshold applies.
pub fn rseep_check(p: u64, q: u64, mode: Constants) -> Result<RseepVerdict> {
    if p == 0 || q == 0 {
        return Err(Error::Parse("p and q must be positive".into()));
    }
    if !(p + q).is_multiple_of(3) {
        return Err(Error::PQNotMultipleOfThree(p + q));
    }
    let d = ((p + q) / 3) as u32;
    let x = Rational::new(p.into(), q.into());
    let value = s_d(d, &x, mode)?;
    Ok(RseepVerdict { d, applies: at_least_tau4(p, q), nonzero: !value.is_zero(), value })
}

/// True when no partition `k₁+…+k_m = p` with `m ≥ 2` has `Σ(k_i + ⌈k_i q/p⌉) = 3d`.
pub fn is_maximal_short_orbit(p: u64, q: u64, d: u64) -> Result<bool> {
    if p + q != 3 * d || p == 0 || q == 0 {
        return Err(Error::PQDMismatch { p, q, d });
    }
    let target = (3 * d) as usize;
    let p_us = p as usize;
    // reach[s] = bitset of reachable Σ f over partitions of s into parts < p
    let mut reach = vec![vec![false; target + 1]; p_us + 1];
    reach[0][0] = true;
    for k in 1..p {
        let f = (k + Integer::div_ceil(&(k * q), &p)) as usize;
        for s in k as usize..=p_us {
            for t in (f..=target).rev() {
                if reach[s - k as usize][t - f] {
                    reach[s][t] = true;
                }
            }
        }
    }
    Ok(!reach[p_us][target])
}
