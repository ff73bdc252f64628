//! Symmetric words in V and the bar differential.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::generator::{bracket_gen, differential_gen, Generator};
use crate::error::{Error, Result};
use crate::scalar::{format_rational, parse_rational, PerturbedScalar, Rational};
use crate::toric::ToricDomain;

/// A basis word `v₁⊙…⊙v_k` with factors in canonical (sorted) order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Generator>);

impl Word {
    /// Sorts the factors, returning the sign picked up on the way.
    /// `None` if an odd factor repeats.
    pub fn canonical(mut factors: Vec<Generator>) -> Option<(Word, i32)> {
        let mut sign = 1;
        // insertion sort so each adjacent swap is accounted for
        for k in 1..factors.len() {
            let mut m = k;
            while m > 0 && factors[m - 1] > factors[m] {
                if factors[m - 1].is_odd() && factors[m].is_odd() {
                    sign = -sign;
                }
                factors.swap(m - 1, m);
                m -= 1;
            }
        }
        if factors.windows(2).any(|w| w[0] == w[1] && w[0].is_odd()) {
            return None;
        }
        Some((Word(factors), sign))
    }

    /// A word that is already sorted with no repeated odd factor.
    pub fn from_sorted(factors: Vec<Generator>) -> Word {
        debug_assert!(factors.windows(2).all(|w| w[0] <= w[1]));
        Word(factors)
    }

    pub fn single(g: Generator) -> Word {
        Word(vec![g])
    }

    pub fn factors(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|g| g.degree()).sum()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|g| g.weight()).sum()
    }

    pub fn action(&self, domain: &ToricDomain) -> PerturbedScalar {
        let mut s = PerturbedScalar::zero();
        for g in &self.0 {
            s += &g.action(domain);
        }
        s
    }

    pub fn all_beta(&self) -> bool {
        self.0.iter().all(|g| !g.is_odd())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join("*"))
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses factors joined by `*`. The literal must not contain a repeated odd factor.
    fn from_str(s: &str) -> Result<Self> {
        let gens = s.split('*').map(str::parse).collect::<Result<Vec<Generator>>>()?;
        let (w, _) = Word::canonical(gens).ok_or_else(|| Error::Parse(format!("word {s:?} is zero")))?;
        Ok(w)
    }
}

/// A ℚ-linear combination of words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BarElement {
    terms: BTreeMap<Word, Rational>,
}

impl BarElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: Word) -> Self {
        let mut e = Self::zero();
        e.add_term(Rational::one(), w);
        e
    }

    /// The element `sign · canonical(factors)`, which may be zero.
    pub fn from_factors(factors: Vec<Generator>) -> Self {
        let mut e = Self::zero();
        e.add_factors(Rational::one(), factors);
        e
    }

    pub fn add_term(&mut self, c: Rational, w: Word) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `c` times the canonicalised product of `factors`.
    pub fn add_factors(&mut self, c: Rational, factors: Vec<Generator>) {
        if let Some((w, s)) = Word::canonical(factors) {
            self.add_term(if s < 0 { -c } else { c }, w);
        }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &BarElement) {
        for (w, v) in &other.terms {
            self.add_term(c * v, w.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest action of a word with nonzero coefficient; `None` for zero.
    pub fn action(&self, domain: &ToricDomain) -> Option<PerturbedScalar> {
        self.terms.keys().map(|w| w.action(domain)).max()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(w, c)| {
                    let word: Vec<String> = w.factors().iter().map(|g| g.to_string()).collect();
                    json!({"coeff": format_rational(c), "word": word})
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Parse("bar element JSON must be a list of {coeff, word}".into());
        let mut e = BarElement::zero();
        for t in v.as_array().ok_or_else(bad)? {
            let c = parse_rational(t.get("coeff").and_then(Value::as_str).ok_or_else(bad)?)?;
            let gens = t
                .get("word")
                .and_then(Value::as_array)
                .ok_or_else(bad)?
                .iter()
                .map(|g| g.as_str().ok_or_else(bad)?.parse())
                .collect::<Result<Vec<Generator>>>()?;
            e.add_factors(c, gens);
        }
        Ok(e)
    }
}

impl fmt::Display for BarElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{}*[{w}]", format_rational(c))).collect();
        f.write_str(&parts.join(" + "))
    }
}

fn koszul(odd_before: usize) -> i64 {
    if odd_before.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `ℓ̂` applied to a single word.
pub fn bar_differential_word(w: &Word) -> BarElement {
    let f = w.factors();
    let n = f.len();
    let mut out = BarElement::zero();
    // odd_prefix[p] = number of odd factors strictly before p
    let mut odd_prefix = vec![0usize; n + 1];
    for p in 0..n {
        odd_prefix[p + 1] = odd_prefix[p] + f[p].is_odd() as usize;
    }
    for p in 0..n {
        if !f[p].is_odd() {
            continue;
        }
        let d = differential_gen(f[p]);
        let sign = koszul(odd_prefix[p]);
        for (g, c) in d.terms() {
            let mut fac = Vec::with_capacity(n);
            fac.push(*g);
            fac.extend(f.iter().enumerate().filter(|&(t, _)| t != p).map(|(_, x)| *x));
            out.add_factors(c * Rational::from_integer(BigInt::from(sign)), fac);
        }
    }
    for p in 0..n {
        for q in p + 1..n {
            let Some((c, g)) = bracket_gen(f[p], f[q]) else { continue };
            let mut odd = if f[p].is_odd() { odd_prefix[p] } else { 0 };
            if f[q].is_odd() {
                odd += odd_prefix[q] - f[p].is_odd() as usize;
            }
            let mut fac = Vec::with_capacity(n - 1);
            fac.push(g);
            fac.extend(f.iter().enumerate().filter(|&(t, _)| t != p && t != q).map(|(_, x)| *x));
            out.add_factors(Rational::from_integer(BigInt::from(c * koszul(odd))), fac);
        }
    }
    out
}

/// `ℓ̂` extended linearly.
pub fn bar_differential(x: &BarElement) -> BarElement {
    let mut out = BarElement::zero();
    for (w, c) in x.terms() {
        out.add_scaled(c, &bar_differential_word(w));
    }
    out
}
