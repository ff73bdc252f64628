//! The capacities `𝔤_𝔟` indexed by words `𝔟 = t^{k₁}⊙…⊙t^{k_m}`.

use std::fmt;
use std::str::FromStr;

use crate::canonical::{CanonicalModel, Constants};
use crate::dgla::homology::{FilteredDegree, Truncation};
use crate::dgla::{BarElement, Generator};
use crate::error::{Error, Result};
use crate::scalar::{PerturbedScalar, Rational};
use crate::toric::ToricDomain;

/// A word `t^{k₁}⊙…⊙t^{k_m}`, with `t^{q−1}` standing for `A_q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CapacityWord {
    exponents: Vec<u32>,
}

impl CapacityWord {
    pub fn new(mut exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::Parse("capacity word must have at least one factor".into()));
        }
        exponents.sort_unstable();
        Ok(CapacityWord { exponents })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Indices `q` of the corresponding `A_q`.
    pub fn qs(&self) -> Vec<u32> {
        self.exponents.iter().map(|k| k + 1).collect()
    }

    pub fn degree(&self) -> i64 {
        self.qs().iter().map(|&q| -2 - 2 * q as i64).sum()
    }

    /// `Ψ̂_sk(𝔟) = β_{q₁,0}⊙…⊙β_{q_m,0}`.
    pub fn skinny_cycle(&self) -> BarElement {
        BarElement::from_factors(self.qs().into_iter().map(|q| Generator::beta(q, 0)).collect())
    }
}

impl FromStr for CapacityWord {
    type Err = Error;

    /// Parses `t0*t2^2`, meaning `t⁰⊙t²⊙t²`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad capacity word {s:?}"));
        let mut exps = Vec::new();
        for f in s.trim().split('*') {
            let f = f.trim().strip_prefix('t').ok_or_else(bad)?;
            let (k, rep) = match f.split_once('^') {
                Some((k, r)) => (k, r.parse::<u32>().map_err(|_| bad())?),
                None => (f, 1),
            };
            let k: u32 = k.parse().map_err(|_| bad())?;
            if rep == 0 {
                return Err(bad());
            }
            exps.extend(std::iter::repeat_n(k, rep as usize));
        }
        CapacityWord::new(exps)
    }
}

impl fmt::Display for CapacityWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut k = 0;
        while k < self.exponents.len() {
            let e = self.exponents[k];
            let n = self.exponents[k..].iter().take_while(|&&x| x == e).count();
            parts.push(if n == 1 { format!("t{e}") } else { format!("t{e}^{n}") });
            k += n;
        }
        f.write_str(&parts.join("*"))
    }
}

/// `𝔤_𝔟(E(a,b))` as the action of `Φ̂_{a,b}(Ψ̂_sk(𝔟))`.
pub fn gb_capacity_ellipsoid(a: &Rational, b: &Rational, word: &CapacityWord) -> Result<PerturbedScalar> {
    let mut model = CanonicalModel::new(a.clone(), b.clone(), Constants::Geometric)?;
    gb_capacity_with(&mut model, word)
}

pub fn gb_capacity_with(model: &mut CanonicalModel, word: &CapacityWord) -> Result<PerturbedScalar> {
    let image = model.phi_hat(&word.skinny_cycle())?;
    image
        .action(model.domain())?
        .ok_or_else(|| Error::InvalidDomain("transfer of a nonzero class vanished".into()))
}

/// `𝔤_𝔟(X_Ω)` as the birth of the class of `Ψ̂_sk(𝔟)` in the filtered bar complex.
pub fn spectral_invariant(
    domain: &ToricDomain,
    word: &CapacityWord,
    trunc: Option<Truncation>,
) -> Result<PerturbedScalar> {
    let fd = FilteredDegree::new(domain, word.degree(), trunc)?;
    class_birth(&fd, &word.skinny_cycle())
}

/// Birth of the class of a cycle within a prepared degree.
pub fn class_birth(fd: &FilteredDegree, x: &BarElement) -> Result<PerturbedScalar> {
    fd.birth(x)?.ok_or_else(|| Error::InvalidDomain("cycle is exact".into()))
}
