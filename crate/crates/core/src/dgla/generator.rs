use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, Rational};
use crate::toric::{LatticePair, ToricDomain};
use crate::scalar::PerturbedScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Alpha,
    Beta,
}

/// A basis element `α_{i,j}` or `β_{i,j}` of V.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub family: Family,
    pub i: u32,
    pub j: u32,
}

impl Generator {
    pub fn alpha(i: u32, j: u32) -> Self {
        assert!(i >= 1 && j >= 1, "alpha_{{{i},{j}}} needs i, j >= 1");
        Generator { family: Family::Alpha, i, j }
    }

    pub fn beta(i: u32, j: u32) -> Self {
        assert!(i + j >= 1, "beta_{{0,0}} is not a generator");
        Generator { family: Family::Beta, i, j }
    }

    pub fn pair(&self) -> LatticePair {
        LatticePair::new(self.i, self.j)
    }

    pub fn weight(&self) -> u32 {
        self.i + self.j
    }

    pub fn degree(&self) -> i64 {
        let w = self.weight() as i64;
        match self.family {
            Family::Alpha => -1 - 2 * w,
            Family::Beta => -2 - 2 * w,
        }
    }

    pub fn is_odd(&self) -> bool {
        self.family == Family::Alpha
    }

    pub fn action(&self, domain: &ToricDomain) -> PerturbedScalar {
        domain.dual_norm(self.pair())
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.family {
            Family::Alpha => 'a',
            Family::Beta => 'b',
        };
        write!(f, "{c}:{},{}", self.i, self.j)
    }
}

impl FromStr for Generator {
    type Err = Error;

    /// Parses `a:i,j` or `b:i,j`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad generator literal {s:?}"));
        let (fam, idx) = s.trim().split_once(':').ok_or_else(bad)?;
        let (i, j) = idx.split_once(',').ok_or_else(bad)?;
        let i: u32 = i.trim().parse().map_err(|_| bad())?;
        let j: u32 = j.trim().parse().map_err(|_| bad())?;
        match fam.trim() {
            "a" if i >= 1 && j >= 1 => Ok(Generator::alpha(i, j)),
            "b" if i + j >= 1 => Ok(Generator::beta(i, j)),
            _ => Err(bad()),
        }
    }
}

/// A finite ℚ-linear combination of generators.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Element {
    terms: BTreeMap<Generator, Rational>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn gen(g: Generator) -> Self {
        Self::term(Rational::one(), g)
    }

    pub fn term(c: Rational, g: Generator) -> Self {
        let mut e = Self::zero();
        e.add_term(c, g);
        e
    }

    pub fn add_term(&mut self, c: Rational, g: Generator) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(g).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &Element) {
        for (g, v) in &other.terms {
            self.add_term(c * v, *g);
        }
    }

    pub fn scaled(&self, c: &Rational) -> Element {
        let mut e = Element::zero();
        e.add_scaled(c, self);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: &Generator) -> Rational {
        self.terms.get(g).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Generator, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl std::ops::Add<&Element> for &Element {
    type Output = Element;
    fn add(self, o: &Element) -> Element {
        let mut e = self.clone();
        e.add_scaled(&Rational::one(), o);
        e
    }
}

impl std::ops::Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, o: &Element) -> Element {
        let mut e = self.clone();
        e.add_scaled(&-Rational::one(), o);
        e
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(g, c)| format!("{}*[{g}]", format_rational(c))).collect();
        f.write_str(&parts.join(" + "))
    }
}

fn r(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `∂` on a single generator.
pub fn differential_gen(g: Generator) -> Element {
    let mut e = Element::zero();
    if g.family == Family::Alpha {
        let (i, j) = (g.i, g.j);
        e.add_term(r(j as i64), Generator::beta(i - 1, j));
        e.add_term(-r(i as i64), Generator::beta(i, j - 1));
    }
    e
}

pub fn differential(x: &Element) -> Element {
    let mut out = Element::zero();
    for (g, c) in x.terms() {
        out.add_scaled(c, &differential_gen(*g));
    }
    out
}

/// The bracket of two generators, or `None` when it vanishes identically.
pub fn bracket_gen(x: Generator, y: Generator) -> Option<(i64, Generator)> {
    let c = x.i as i64 * y.j as i64 - x.j as i64 * y.i as i64;
    let (i, j) = (x.i + y.i, x.j + y.j);
    let g = match (x.family, y.family) {
        (Family::Alpha, Family::Alpha) => Generator::alpha(i, j),
        (Family::Alpha, Family::Beta) | (Family::Beta, Family::Alpha) => Generator::beta(i, j),
        (Family::Beta, Family::Beta) => return None,
    };
    // the rule is stated with α first; [β, α] = [α, β]
    let c = if x.family == Family::Beta { -c } else { c };
    (c != 0).then_some((c, g))
}

pub fn bracket(x: &Element, y: &Element) -> Element {
    let mut out = Element::zero();
    for (g, c) in x.terms() {
        for (h, d) in y.terms() {
            if let Some((k, t)) = bracket_gen(*g, *h) {
                out.add_term(c * d * r(k), t);
            }
        }
    }
    out
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Scale relating a generator to its barred version: `ḡ = s·g`.
pub fn barred_scale(g: Generator) -> Rational {
    let n = match g.family {
        Family::Alpha => factorial(g.i - 1) * factorial(g.j - 1),
        Family::Beta => factorial(g.i) * factorial(g.j),
    };
    Rational::from_integer(n)
}

/// Rewrites coordinates in the barred basis as coordinates in the plain basis.
pub fn from_barred(x: &Element) -> Element {
    let mut out = Element::zero();
    for (g, c) in x.terms() {
        out.add_term(c * barred_scale(*g), *g);
    }
    out
}

/// Rewrites coordinates in the plain basis as coordinates in the barred basis.
pub fn to_barred(x: &Element) -> Element {
    let mut out = Element::zero();
    for (g, c) in x.terms() {
        out.add_term(c / barred_scale(*g), *g);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: u32, j: u32) -> Generator {
        Generator::alpha(i, j)
    }
    fn b(i: u32, j: u32) -> Generator {
        Generator::beta(i, j)
    }

    #[test]
    fn degrees() {
        assert_eq!(a(1, 1).degree(), -5);
        assert_eq!(b(1, 0).degree(), -4);
        assert_eq!(b(1, 1).degree(), -6);
    }

    #[test]
    fn differential_examples() {
        let mut want = Element::gen(b(0, 1));
        want.add_term(r(-1), b(1, 0));
        assert_eq!(differential_gen(a(1, 1)), want);
        let mut want = Element::gen(b(1, 1));
        want.add_term(r(-2), b(2, 0));
        assert_eq!(differential_gen(a(2, 1)), want);
        assert!(differential_gen(b(3, 2)).is_zero());
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(bracket(&Element::gen(a(1, 1)), &Element::gen(a(2, 1))), Element::term(r(-1), a(3, 2)));
        assert_eq!(bracket(&Element::gen(a(1, 2)), &Element::gen(b(1, 0))), Element::term(r(-2), b(2, 2)));
        assert_eq!(bracket(&Element::gen(b(1, 0)), &Element::gen(a(1, 2))), Element::term(r(-2), b(2, 2)));
        assert!(bracket(&Element::gen(b(1, 0)), &Element::gen(b(0, 1))).is_zero());
    }

    #[test]
    fn barred_basis() {
        // ᾱ_{2,1} has plain coordinate 1, β̄_{2,0} has plain coordinate 2
        assert_eq!(from_barred(&Element::gen(a(2, 1))), Element::gen(a(2, 1)));
        assert_eq!(from_barred(&Element::gen(b(2, 0))), Element::term(r(2), b(2, 0)));
        for i in 1..6 {
            for j in 1..6 {
                let d = to_barred(&differential(&from_barred(&Element::gen(a(i, j)))));
                let mut want = Element::gen(b(i - 1, j));
                want.add_term(r(-1), b(i, j - 1));
                assert_eq!(d, want, "i={i} j={j}");
            }
        }
    }

    #[test]
    fn parse_generators() {
        assert_eq!("a:1,2".parse::<Generator>().unwrap(), a(1, 2));
        assert_eq!("b:0,3".parse::<Generator>().unwrap(), b(0, 3));
        assert!("a:0,3".parse::<Generator>().is_err());
        assert!("b:0,0".parse::<Generator>().is_err());
        assert_eq!(b(2, 0).to_string(), "b:2,0");
    }
}
