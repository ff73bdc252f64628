//! Linear transfer data between V_{a,b} and its homology.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::dgla::{BarElement, Element, Family, Generator};
use crate::error::Result;
use crate::scalar::Rational;
use crate::toric::{orbit_multiplicity, LatticePair, ToricDomain};

/// How the constants `C_q` are chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Constants {
    /// Covering-multiplicity normalization.
    #[default]
    Geometric,
    /// Every `C_q = 1`.
    Ones,
}

impl Constants {
    pub fn name(self) -> &'static str {
        match self {
            Constants::Geometric => "geometric",
            Constants::Ones => "ones",
        }
    }
}

impl std::str::FromStr for Constants {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "geometric" => Ok(Constants::Geometric),
            "ones" => Ok(Constants::Ones),
            _ => Err(crate::error::Error::Parse(format!("unknown constants mode {s:?}"))),
        }
    }
}

pub(crate) fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn ellipsoid(a: &Rational, b: &Rational) -> Result<ToricDomain> {
    ToricDomain::ellipsoid(a.clone(), b.clone())
}

/// `gcd(𝔦, 𝔧) / gcd(𝔦, 𝔧, κ)` for `E(a, b)`.
pub fn normalization_constant(a: &Rational, b: &Rational, q: u32) -> Result<Rational> {
    let m = ellipsoid(a, b)?.argmin_pair(q)?;
    let kappa = orbit_multiplicity(a, b, q);
    let g = (m.i as u64).gcd(&(m.j as u64));
    Ok(Rational::new(BigInt::from(g), BigInt::from(g.gcd(&kappa))))
}

pub fn constant(a: &Rational, b: &Rational, q: u32, mode: Constants) -> Result<Rational> {
    match mode {
        Constants::Geometric => normalization_constant(a, b, q),
        Constants::Ones => Ok(Rational::one()),
    }
}

/// `Ψ¹(A_q) = C_q β_{𝔦(q),𝔧(q)}`.
pub fn psi1(a: &Rational, b: &Rational, q: u32, mode: Constants) -> Result<Element> {
    let m = ellipsoid(a, b)?.argmin_pair(q)?;
    Ok(Element::term(constant(a, b, q, mode)?, Generator::beta(m.i, m.j)))
}

/// Coalgebra extension of `Ψ¹` to a word `A_{q₁}⊙…⊙A_{q_k}`.
pub fn psi_hat(a: &Rational, b: &Rational, qs: &[u32], mode: Constants) -> Result<BarElement> {
    let mut c = Rational::one();
    let mut factors = Vec::with_capacity(qs.len());
    for &q in qs {
        let e = psi1(a, b, q, mode)?;
        let (g, v) = e.terms().next().expect("psi1 is nonzero");
        c *= v;
        factors.push(*g);
    }
    let mut out = BarElement::zero();
    out.add_factors(c, factors);
    Ok(out)
}

/// `𝔦!𝔧!/(i!j!)`: the multiple of `β_{𝔦,𝔧}` homologous to `β_{i,j}`.
pub fn minimal_ratio(domain: &ToricDomain, p: LatticePair) -> Result<Rational> {
    let m = domain.argmin_pair(p.weight())?;
    Ok(Rational::new(factorial(m.i) * factorial(m.j), factorial(p.i) * factorial(p.j)))
}

/// `Φ¹(β_{i,j}) = 𝔦!𝔧!/(i!j! C_q) A_q`, returned as `(coefficient, q)`.
pub fn phi1(a: &Rational, b: &Rational, beta: LatticePair, mode: Constants) -> Result<(Rational, u32)> {
    let q = beta.weight();
    let e = ellipsoid(a, b)?;
    Ok((minimal_ratio(&e, beta)? / constant(a, b, q, mode)?, q))
}

/// `Φ¹` on an element of V, as a map `q ↦ coefficient of A_q`.
pub fn phi1_element(a: &Rational, b: &Rational, x: &Element, mode: Constants) -> Result<Vec<(u32, Rational)>> {
    let mut out: std::collections::BTreeMap<u32, Rational> = Default::default();
    for (g, c) in x.terms() {
        if g.family == Family::Beta {
            let (v, q) = phi1(a, b, g.pair(), mode)?;
            *out.entry(q).or_insert_with(Rational::zero) += c * v;
        }
    }
    Ok(out.into_iter().filter(|(_, v)| !v.is_zero()).collect())
}

/// `ᾱ_{i+1,j} + ᾱ_{i+2,j-1} + … + ᾱ_{i+j,1}` in the plain basis; `∂` of it is `β̄_{i,j} − β̄_{i+j,0}`.
fn telescope(i: u32, j: u32) -> Element {
    let mut e = Element::zero();
    for t in 1..=j {
        let (x, y) = (i + t, j + 1 - t);
        let s = Rational::from_integer(factorial(x - 1) * factorial(y - 1));
        e.add_term(s, Generator::alpha(x, y));
    }
    e
}

/// The homotopy `h¹` with `h¹∂ + ∂h¹ = 1 − Ψ¹Φ¹`, vanishing on α generators.
pub fn homotopy_h1(a: &Rational, b: &Rational, x: &Element) -> Result<Element> {
    let e = ellipsoid(a, b)?;
    let mut out = Element::zero();
    for (g, c) in x.terms() {
        if g.family == Family::Alpha {
            continue;
        }
        let m = e.argmin_pair(g.weight())?;
        // β_{i,j} = β̄_{i,j} / (i! j!)
        let scale = c / Rational::from_integer(factorial(g.i) * factorial(g.j));
        let diff = &telescope(g.i, g.j) - &telescope(m.i, m.j);
        out.add_scaled(&scale, &diff);
    }
    Ok(out)
}

/// `Ψ¹Φ¹(x)` as an element of V.
pub fn psi1_phi1(a: &Rational, b: &Rational, x: &Element, mode: Constants) -> Result<Element> {
    let mut out = Element::zero();
    for (q, c) in phi1_element(a, b, x, mode)? {
        out.add_scaled(&c, &psi1(a, b, q, mode)?);
    }
    Ok(out)
}
