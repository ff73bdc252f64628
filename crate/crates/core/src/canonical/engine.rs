//! Rewriting products of β generators into action-minimal form.
//!
//! For a non-minimal factor `β_{i₁,j₁}` in a product of β generators, the
//! boundary of `α⊙rest` (with `α = α_{i₁+1,j₁}` or `α_{i₁,j₁+1}`) expresses the
//! product in terms of one where that factor has moved toward the minimizer,
//! plus products with one fewer factor. Iterating reaches products of
//! action-minimal factors.

use std::collections::BTreeMap;
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;

use super::ground::factorial;
use crate::dgla::{BarElement, Generator};
use crate::error::Result;
use crate::scalar::{PerturbedScalar, Rational};
use crate::toric::{LatticePair, ToricDomain};

/// Packed pair, `i` in the high half.
type Packed = u32;
/// Sorted multiset of packed pairs.
pub type Key = Box<[Packed]>;

fn pack(p: LatticePair) -> Packed {
    assert!(p.i < 1 << 16 && p.j < 1 << 16, "index too large");
    (p.i << 16) | p.j
}

fn unpack(x: Packed) -> LatticePair {
    LatticePair::new(x >> 16, x & 0xffff)
}

/// Canonical memo key for a multiset of pairs.
pub fn key_of(pairs: &[LatticePair]) -> Key {
    let mut v: Vec<Packed> = pairs.iter().map(|&p| pack(p)).collect();
    v.sort_unstable();
    v.into_boxed_slice()
}

pub fn pairs_of(key: &[Packed]) -> Vec<LatticePair> {
    key.iter().map(|&x| unpack(x)).collect()
}

/// Which non-minimal factor is rewritten first.
#[derive(Clone, Debug)]
pub enum RewriteOrder {
    /// The lexicographically largest one.
    Canonical,
    /// A uniformly random one, from a seeded generator.
    Random(u64),
}

#[derive(Clone, Copy, Debug, Default)]
pub struct EngineStats {
    pub states: usize,
    pub pruned: usize,
}

enum Chooser {
    Canonical,
    Random(ChaCha8Rng),
}

/// One rewriting step: `Σ coeff · key`.
type Step = Vec<(Rational, Key)>;

/// Memoized reduction over a fixed domain.
pub struct ReductionEngine {
    domain: ToricDomain,
    argmin: Vec<LatticePair>,
    prune: bool,
    chooser: Chooser,
    actions: FxHashMap<Packed, PerturbedScalar>,
    caps: Vec<PerturbedScalar>,
    memo: FxHashMap<Key, Rational>,
    full: FxHashMap<Key, Rc<BTreeMap<Key, Rational>>>,
    stats: EngineStats,
}

impl ReductionEngine {
    /// Pruning by action is switched on for ellipsoids, where the reduction is filtered.
    pub fn new(domain: ToricDomain) -> Self {
        let prune = domain.is_ellipsoid();
        ReductionEngine {
            domain,
            argmin: vec![LatticePair::new(0, 0)],
            prune,
            chooser: Chooser::Canonical,
            actions: FxHashMap::default(),
            caps: vec![PerturbedScalar::zero()],
            memo: FxHashMap::default(),
            full: FxHashMap::default(),
            stats: EngineStats::default(),
        }
    }

    pub fn with_order(mut self, order: RewriteOrder) -> Self {
        self.chooser = match order {
            RewriteOrder::Canonical => Chooser::Canonical,
            RewriteOrder::Random(seed) => Chooser::Random(ChaCha8Rng::seed_from_u64(seed)),
        };
        self
    }

    /// Pruning is only sound for ellipsoids; it can be disabled but not forced on.
    pub fn with_pruning(mut self, on: bool) -> Self {
        self.prune = on && self.domain.is_ellipsoid();
        self
    }

    pub fn domain(&self) -> &ToricDomain {
        &self.domain
    }

    pub fn stats(&self) -> EngineStats {
        EngineStats { states: self.memo.len() + self.full.len(), ..self.stats }
    }

    /// Ensures minimizers and capacities are known up to `q`.
    pub fn prepare(&mut self, q: u32) -> Result<()> {
        while (self.argmin.len() as u32) <= q {
            let s = self.argmin.len() as u32;
            let m = self.domain.argmin_pair(s)?;
            self.caps.push(self.domain.dual_norm(m));
            self.argmin.push(m);
        }
        Ok(())
    }

    pub fn argmin(&mut self, q: u32) -> Result<LatticePair> {
        self.prepare(q)?;
        Ok(self.argmin[q as usize])
    }

    fn is_minimal(&self, x: Packed) -> bool {
        let p = unpack(x);
        self.argmin[p.weight() as usize] == p
    }

    fn action(&mut self, x: Packed) -> &PerturbedScalar {
        let d = &self.domain;
        self.actions.entry(x).or_insert_with(|| d.dual_norm(unpack(x)))
    }

    fn target(key: &[Packed]) -> u32 {
        key.iter().map(|&x| unpack(x).weight()).sum::<u32>() + key.len() as u32 - 1
    }

    fn below_filtration(&mut self, key: &[Packed]) -> bool {
        if !self.prune {
            return false;
        }
        let q = Self::target(key);
        let mut s = PerturbedScalar::zero();
        for &x in key {
            s += &self.action(x).clone();
        }
        s < self.caps[q as usize]
    }

    fn choose(&mut self, key: &[Packed]) -> Option<usize> {
        let nonmin: Vec<usize> = (0..key.len()).filter(|&k| !self.is_minimal(key[k])).collect();
        match &mut self.chooser {
            _ if nonmin.is_empty() => None,
            Chooser::Canonical => nonmin.last().copied(),
            Chooser::Random(rng) => Some(nonmin[rng.gen_range(0..nonmin.len())]),
        }
    }

    /// Rewrites the factor at `slot`, following the direction of the minimizer.
    fn step(&self, key: &[Packed], slot: usize) -> Step {
        let p = unpack(key[slot]);
        let (i1, j1) = (p.i as i64, p.j as i64);
        let m = self.argmin[p.weight() as usize];
        let rest: Vec<Packed> = key.iter().enumerate().filter(|&(k, _)| k != slot).map(|(_, &x)| x).collect();
        let r = |n: i64| Rational::from_integer(BigInt::from(n));
        let with = |rest: &[Packed], skip: Option<usize>, add: LatticePair| -> Key {
            let mut v: Vec<Packed> =
                rest.iter().enumerate().filter(|&(k, _)| Some(k) != skip).map(|(_, &x)| x).collect();
            v.push(pack(add));
            v.sort_unstable();
            v.into_boxed_slice()
        };
        let mut out = Step::new();
        let distinct = |rest: &[Packed]| {
            let mut v: Vec<(usize, usize)> = Vec::new();
            for k in 0..rest.len() {
                if k > 0 && rest[k] == rest[k - 1] {
                    v.last_mut().expect("nonempty").1 += 1;
                } else {
                    v.push((k, 1));
                }
            }
            v
        };
        if p.i < m.i {
            // j₁β_{i₁,j₁} = (i₁+1)β_{i₁+1,j₁-1} + ∂α_{i₁+1,j₁}
            let moved = LatticePair::new(p.i + 1, p.j - 1);
            out.push((Rational::new(BigInt::from(i1 + 1), BigInt::from(j1)), with(&rest, None, moved)));
            for (k, mult) in distinct(&rest) {
                let q = unpack(rest[k]);
                let c = (i1 + 1) * q.j as i64 - j1 * q.i as i64;
                if c != 0 {
                    let merged = LatticePair::new(p.i + q.i + 1, p.j + q.j);
                    out.push((r(-c * mult as i64) / r(j1), with(&rest, Some(k), merged)));
                }
            }
        } else {
            // i₁β_{i₁,j₁} = (j₁+1)β_{i₁-1,j₁+1} − ∂α_{i₁,j₁+1}
            let moved = LatticePair::new(p.i - 1, p.j + 1);
            out.push((Rational::new(BigInt::from(j1 + 1), BigInt::from(i1)), with(&rest, None, moved)));
            for (k, mult) in distinct(&rest) {
                let q = unpack(rest[k]);
                let c = i1 * q.j as i64 - (j1 + 1) * q.i as i64;
                if c != 0 {
                    let merged = LatticePair::new(p.i + q.i, p.j + q.j + 1);
                    out.push((r(c * mult as i64) / r(i1), with(&rest, Some(k), merged)));
                }
            }
        }
        out
    }

    /// Coefficient of `β_{𝔦(Q),𝔧(Q)}` in the action-minimal form of the product.
    pub fn coefficient(&mut self, pairs: &[LatticePair]) -> Result<Rational> {
        assert!(!pairs.is_empty(), "empty product");
        let key = key_of(pairs);
        self.prepare(Self::target(&key))?;
        Ok(self.coeff_rec(&key))
    }

    fn coeff_rec(&mut self, key: &[Packed]) -> Rational {
        if key.len() == 1 {
            let p = unpack(key[0]);
            let m = self.argmin[p.weight() as usize];
            return Rational::new(factorial(m.i) * factorial(m.j), factorial(p.i) * factorial(p.j));
        }
        if let Some(v) = self.memo.get(key) {
            return v.clone();
        }
        let v = match self.choose(key) {
            None => Rational::zero(),
            Some(_) if self.below_filtration(key) => {
                self.stats.pruned += 1;
                Rational::zero()
            }
            Some(slot) => {
                let mut acc = Rational::zero();
                for (c, k) in self.step(key, slot) {
                    let v = self.coeff_rec(&k);
                    if !v.is_zero() {
                        acc += c * v;
                    }
                }
                acc
            }
        };
        self.memo.insert(key.into(), v.clone());
        v
    }

    /// The action-minimal product homologous to the given product of β generators.
    pub fn reduce_word(&mut self, pairs: &[LatticePair]) -> Result<BarElement> {
        assert!(!pairs.is_empty(), "empty product");
        let key = key_of(pairs);
        self.prepare(Self::target(&key))?;
        let red = self.full_rec(&key);
        let mut out = BarElement::zero();
        for (k, c) in red.iter() {
            let gens = pairs_of(k).into_iter().map(|p| Generator::beta(p.i, p.j)).collect();
            out.add_factors(c.clone(), gens);
        }
        Ok(out)
    }

    fn full_rec(&mut self, key: &[Packed]) -> Rc<BTreeMap<Key, Rational>> {
        if let Some(v) = self.full.get(key) {
            return v.clone();
        }
        let mut acc: BTreeMap<Key, Rational> = BTreeMap::new();
        match self.choose(key) {
            None => {
                acc.insert(key.into(), Rational::one());
            }
            Some(slot) => {
                for (c, k) in self.step(key, slot) {
                    for (w, v) in self.full_rec(&k).iter() {
                        let e = acc.entry(w.clone()).or_insert_with(Rational::zero);
                        *e += &c * v;
                        if e.is_zero() {
                            acc.remove(w);
                        }
                    }
                }
            }
        }
        let rc = Rc::new(acc);
        self.full.insert(key.into(), rc.clone());
        rc
    }
}

/// Linear extension of [`ReductionEngine::reduce_word`] to an element with only β factors.
pub fn am_reduce(domain: &ToricDomain, x: &BarElement) -> Result<BarElement> {
    let mut eng = ReductionEngine::new(domain.clone());
    let mut out = BarElement::zero();
    for (w, c) in x.terms() {
        assert!(w.all_beta(), "am_reduce needs products of β generators");
        let pairs: Vec<LatticePair> = w.factors().iter().map(|g| g.pair()).collect();
        out.add_scaled(c, &eng.reduce_word(&pairs)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn lp(i: u32, j: u32) -> LatticePair {
        LatticePair::new(i, j)
    }

    #[test]
    fn skinny_examples() {
        let e = ToricDomain::ellipsoid(int(1), int(100)).unwrap();
        let mut eng = ReductionEngine::new(e);
        assert_eq!(eng.coefficient(&[lp(1, 1), lp(1, 1)]).unwrap(), int(10));
        assert_eq!(eng.coefficient(&[lp(1, 1), lp(1, 1), lp(1, 1)]).unwrap(), int(192));
        assert_eq!(eng.coefficient(&[lp(2, 0), lp(2, 0)]).unwrap(), int(0));
        assert_eq!(eng.coefficient(&[lp(3, 2)]).unwrap(), int(10));
        assert_eq!(eng.coefficient(&[lp(1, 1)]).unwrap(), int(2));
    }

    #[test]
    fn polydisk_cube_four() {
        let p = ToricDomain::polydisk(int(1), int(1)).unwrap();
        let x: Vec<LatticePair> = vec![lp(1, 0), lp(1, 0), lp(1, 0), lp(0, 1)];
        let mut eng = ReductionEngine::new(p.clone());
        assert_eq!(eng.coefficient(&x).unwrap(), int(42));
        let full = eng.reduce_word(&x).unwrap();
        assert_eq!(full.coeff(&"b:7,0".parse().unwrap()), int(42));
    }

    #[test]
    fn remark_example_on_polydisk() {
        // β_{1,1}⊙β_{1,1} ~ 4β_{2,0}⊙β_{2,0} + 10β_{5,0}
        let p = ToricDomain::polydisk(int(1), int(1)).unwrap();
        let red = am_reduce(&p, &BarElement::word("b:1,1*b:1,1".parse().unwrap())).unwrap();
        let mut want = BarElement::zero();
        want.add_term(int(4), "b:2,0*b:2,0".parse().unwrap());
        want.add_term(int(10), "b:5,0".parse().unwrap());
        assert_eq!(red, want);
    }

    #[test]
    fn minimal_input_is_fixed() {
        let e = ToricDomain::ellipsoid(int(1), int(100)).unwrap();
        let x = BarElement::word("b:2,0*b:3,0".parse().unwrap());
        assert_eq!(am_reduce(&e, &x).unwrap(), x);
        let y = BarElement::word("b:1,1".parse().unwrap());
        assert_eq!(am_reduce(&e, &y).unwrap(), {
            let mut w = BarElement::zero();
            w.add_term(int(2), "b:2,0".parse().unwrap());
            w
        });
    }
}
