//! Transfer maps between V_{a,b} and its canonical model `𝕂⟨A₁, A₂, …⟩`.

pub mod cache;
pub mod engine;
pub mod ground;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::dgla::BarElement;
use crate::error::Result;
use crate::scalar::{format_rational, PerturbedScalar, Rational};
use crate::toric::{LatticePair, ToricDomain};

pub use cache::{multiset_key, PhiCache};
pub use engine::{am_reduce, EngineStats, ReductionEngine, RewriteOrder};
pub use ground::{
    homotopy_h1, normalization_constant, phi1, phi1_element, psi1, psi1_phi1, psi_hat, Constants,
};

/// A combination of words `A_{q₁}⊙…⊙A_{q_k}`, each stored as sorted `q`s.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CanonicalElement {
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl CanonicalElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, c: Rational, mut qs: Vec<u32>) {
        if c.is_zero() {
            return;
        }
        qs.sort_unstable();
        let e = self.terms.entry(qs.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&qs);
        }
    }

    pub fn coeff(&self, qs: &[u32]) -> Rational {
        let mut v = qs.to_vec();
        v.sort_unstable();
        self.terms.get(&v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `Σ c_{q_s}` over words with nonzero coefficient.
    pub fn action(&self, domain: &ToricDomain) -> Result<Option<PerturbedScalar>> {
        let mut best: Option<PerturbedScalar> = None;
        for qs in self.terms.keys() {
            let mut s = PerturbedScalar::zero();
            for &q in qs {
                s += &domain.gh_capacity(q)?;
            }
            if best.as_ref().is_none_or(|b| s > *b) {
                best = Some(s);
            }
        }
        Ok(best)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(qs, c)| {
                    let w: Vec<String> = qs.iter().map(|q| format!("A{q}")).collect();
                    json!({"coeff": format_rational(c), "word": w})
                })
                .collect(),
        )
    }
}

impl fmt::Display for CanonicalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(qs, c)| {
                let w: Vec<String> = qs.iter().map(|q| format!("A{q}")).collect();
                format!("{}*[{}]", format_rational(c), w.join("*"))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Calls `f` with the block labels of every set partition of `n` points.
pub fn for_each_set_partition(n: usize, mut f: impl FnMut(&[usize], usize)) {
    fn rec(k: usize, n: usize, blocks: usize, labels: &mut Vec<usize>, f: &mut dyn FnMut(&[usize], usize)) {
        if k == n {
            f(labels, blocks);
            return;
        }
        for b in 0..=blocks {
            labels.push(b);
            rec(k + 1, n, blocks.max(b + 1), labels, f);
            labels.pop();
        }
    }
    rec(0, n, 0, &mut Vec::with_capacity(n), &mut f);
}

/// `Φ_{a,b}` together with its memo table.
pub struct CanonicalModel {
    a: Rational,
    b: Rational,
    mode: Constants,
    engine: ReductionEngine,
    constants: BTreeMap<u32, Rational>,
    seeded: BTreeMap<String, (Rational, u32)>,
    fresh: BTreeMap<String, (Rational, u32)>,
}

impl CanonicalModel {
    pub fn new(a: Rational, b: Rational, mode: Constants) -> Result<Self> {
        let domain = ToricDomain::ellipsoid(a.clone(), b.clone())?;
        Ok(CanonicalModel {
            a,
            b,
            mode,
            engine: ReductionEngine::new(domain),
            constants: BTreeMap::new(),
            seeded: BTreeMap::new(),
            fresh: BTreeMap::new(),
        })
    }

    pub fn with_engine(mut self, f: impl FnOnce(ReductionEngine) -> ReductionEngine) -> Self {
        self.engine = f(self.engine);
        self
    }

    pub fn domain(&self) -> &ToricDomain {
        self.engine.domain()
    }

    pub fn mode(&self) -> Constants {
        self.mode
    }

    pub fn stats(&self) -> EngineStats {
        self.engine.stats()
    }

    pub fn constant(&mut self, q: u32) -> Result<Rational> {
        if let Some(c) = self.constants.get(&q) {
            return Ok(c.clone());
        }
        let c = ground::constant(&self.a, &self.b, q, self.mode)?;
        self.constants.insert(q, c.clone());
        Ok(c)
    }

    /// Coefficient of `Φ^k(β_{i₁,j₁}, …, β_{i_k,j_k})` on `A_Q`, `Q = Σ(i_s+j_s) + k − 1`.
    pub fn phi_k(&mut self, inputs: &[LatticePair]) -> Result<(Rational, u32)> {
        let key = multiset_key(inputs);
        if let Some(v) = self.seeded.get(&key).or_else(|| self.fresh.get(&key)) {
            return Ok(v.clone());
        }
        let q = inputs.iter().map(|p| p.weight()).sum::<u32>() + inputs.len() as u32 - 1;
        let g = self.engine.coefficient(inputs)?;
        let v = if g.is_zero() { g } else { g / self.constant(q)? };
        if inputs.len() > 1 {
            self.fresh.insert(key, (v.clone(), q));
        }
        Ok((v, q))
    }

    /// Loads the entries of `cache` that belong to this domain and constants mode.
    pub fn seed(&mut self, cache: &PhiCache) {
        let lit = self.domain().literal();
        for ((d, m, k), v) in cache.entries() {
            if *d == lit && m == self.mode.name() {
                self.seeded.insert(k.clone(), v.clone());
            }
        }
    }

    /// Writes values computed since construction into `cache`.
    pub fn store(&self, cache: &mut PhiCache) {
        let lit = self.domain().literal();
        for (k, v) in &self.fresh {
            cache.insert_key(&lit, self.mode.name(), k, v.clone());
        }
    }

    /// Coalgebra extension of `Φ` applied to a combination of words.
    pub fn phi_hat(&mut self, x: &BarElement) -> Result<CanonicalElement> {
        let mut out = CanonicalElement::zero();
        for (w, c) in x.terms() {
            if !w.all_beta() {
                continue;
            }
            let pairs: Vec<LatticePair> = w.factors().iter().map(|g| g.pair()).collect();
            let mut parts: Vec<(Vec<usize>, usize)> = Vec::new();
            for_each_set_partition(pairs.len(), |labels, blocks| parts.push((labels.to_vec(), blocks)));
            for (labels, blocks) in parts {
                let mut coeff = c.clone();
                let mut qs = Vec::with_capacity(blocks);
                for blk in 0..blocks {
                    let members: Vec<LatticePair> =
                        labels.iter().zip(&pairs).filter(|(l, _)| **l == blk).map(|(_, p)| *p).collect();
                    let (v, q) = self.phi_k(&members)?;
                    coeff *= v;
                    if coeff.is_zero() {
                        break;
                    }
                    qs.push(q);
                }
                out.add_term(coeff, qs);
            }
        }
        Ok(out)
    }

    /// `Ψ̂` of a word of `A`s for this same ellipsoid.
    pub fn psi_hat(&self, qs: &[u32]) -> Result<BarElement> {
        ground::psi_hat(&self.a, &self.b, qs, self.mode)
    }

    pub fn identity_check(&mut self, qs: &[u32]) -> Result<bool> {
        let x = self.psi_hat(qs)?;
        let y = self.phi_hat(&x)?;
        let mut want = CanonicalElement::zero();
        want.add_term(Rational::one(), qs.to_vec());
        Ok(y == want)
    }
}
