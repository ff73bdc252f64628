//! Truncated homology and persistence of the action-filtered bar complex.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde_json::{json, Value};

use super::bar::{bar_differential_word, BarElement, Word};
use super::generator::Generator;
use crate::error::{Error, Result};
use crate::scalar::{PerturbedScalar, Rational};
use crate::toric::ToricDomain;

/// Which complex to work in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    /// V itself: words of length one with the differential `∂`.
    V,
    /// The bar complex of V.
    Bar,
}

/// Bounds on word length and total weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Truncation {
    pub max_len: usize,
    pub max_weight: u32,
}

impl Truncation {
    /// Smallest truncation that contains every word of degree `degree - 1`, `degree` and `degree + 1`.
    pub fn required(space: Space, degree: i64) -> Truncation {
        let lo = degree - 1;
        let max_len = match space {
            Space::V => 1,
            Space::Bar => (-lo).max(0) as usize / 4,
        };
        // a word of degree D has weight at most floor((-D-1)/2), attained by a single generator
        let max_weight = ((-lo - 1).max(0) / 2) as u32;
        Truncation { max_len, max_weight }
    }

    fn check(self, space: Space, degree: i64) -> Result<()> {
        let need = Truncation::required(space, degree);
        if self.max_len < need.max_len || self.max_weight < need.max_weight {
            return Err(Error::TruncationTooSmall {
                degree,
                need_len: need.max_len,
                need_weight: need.max_weight,
            });
        }
        Ok(())
    }
}

fn generators_up_to(max_weight: u32, min_degree: i64) -> Vec<Generator> {
    let mut gens = Vec::new();
    for w in 1..=max_weight {
        for i in 0..=w {
            let j = w - i;
            if i >= 1 && j >= 1 {
                gens.push(Generator::alpha(i, j));
            }
            gens.push(Generator::beta(i, j));
        }
    }
    gens.retain(|g| g.degree() >= min_degree);
    gens.sort();
    gens
}

/// All canonical words of the given degree inside the truncation.
pub fn words_of_degree(degree: i64, trunc: Truncation) -> Vec<Word> {
    let gens = generators_up_to(trunc.max_weight, degree);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        gens: &[Generator],
        start: usize,
        deg: i64,
        weight: u32,
        target: i64,
        trunc: Truncation,
        cur: &mut Vec<Generator>,
        out: &mut Vec<Word>,
    ) {
        if deg == target && !cur.is_empty() {
            out.push(Word::from_sorted(cur.clone()));
            return;
        }
        if cur.len() == trunc.max_len || deg - 4 < target {
            return;
        }
        for (k, g) in gens.iter().enumerate().skip(start) {
            let (nd, nw) = (deg + g.degree(), weight + g.weight());
            if nd < target || nw > trunc.max_weight {
                continue;
            }
            cur.push(*g);
            let next = if g.is_odd() { k + 1 } else { k };
            rec(gens, next, nd, nw, target, trunc, cur, out);
            cur.pop();
        }
    }
    if degree < 0 {
        rec(&gens, 0, 0, 0, degree, trunc, &mut cur, &mut out);
    }
    out
}

/// A sparse column over ℚ keyed by row index.
pub type Column = BTreeMap<usize, Rational>;

fn axpy(dst: &mut Column, c: &Rational, src: &Column) {
    for (r, v) in src {
        let e = dst.entry(*r).or_insert_with(Rational::zero);
        *e -= c * v;
        if e.is_zero() {
            dst.remove(r);
        }
    }
}

/// Left-to-right column reduction so that nonzero columns have distinct lowest rows.
#[derive(Clone, Debug, Default)]
pub struct Reduced {
    pub columns: Vec<Column>,
    /// lowest row -> column index
    pub pivots: HashMap<usize, usize>,
}

impl Reduced {
    pub fn new(cols: Vec<Column>) -> Reduced {
        let mut red = Reduced { columns: Vec::with_capacity(cols.len()), pivots: HashMap::new() };
        for mut c in cols {
            red.reduce(&mut c);
            if let Some((&low, _)) = c.iter().next_back() {
                red.pivots.insert(low, red.columns.len());
            }
            red.columns.push(c);
        }
        red
    }

    /// Clears every lowest entry of `c` that is a pivot.
    pub fn reduce(&self, c: &mut Column) {
        while let Some((&low, v)) = c.iter().next_back() {
            let Some(&k) = self.pivots.get(&low) else { break };
            let p = &self.columns[k];
            let f = v / &p[&low];
            axpy(c, &f, p);
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn low(&self, col: usize) -> Option<usize> {
        self.columns[col].keys().next_back().copied()
    }
}

/// One degree of the filtered bar complex with its basis sorted by action.
#[derive(Clone, Debug)]
pub struct Graded {
    pub degree: i64,
    pub basis: Vec<Word>,
    pub actions: Vec<PerturbedScalar>,
    index: HashMap<Word, usize>,
}

impl Graded {
    pub fn new(domain: &ToricDomain, degree: i64, trunc: Truncation) -> Graded {
        let mut basis: Vec<(PerturbedScalar, Word)> =
            words_of_degree(degree, trunc).into_iter().map(|w| (w.action(domain), w)).collect();
        basis.sort();
        let (actions, basis): (Vec<_>, Vec<_>) = basis.into_iter().unzip();
        let index = basis.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
        Graded { degree, basis, actions, index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn position(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Coordinates of `x` in this basis. Errors if `x` leaves the truncation.
    pub fn vector(&self, x: &BarElement) -> Result<Column> {
        let mut c = Column::new();
        for (w, v) in x.terms() {
            let k = self.position(w).ok_or_else(|| {
                Error::Parse(format!("word {w} is not a basis word of degree {}", self.degree))
            })?;
            c.insert(k, v.clone());
        }
        Ok(c)
    }

    pub fn element(&self, c: &Column) -> BarElement {
        let mut x = BarElement::zero();
        for (k, v) in c {
            x.add_term(v.clone(), self.basis[*k].clone());
        }
        x
    }
}

/// Matrix of `ℓ̂` from `src` to `dst`, one column per source basis word.
pub fn differential_matrix(src: &Graded, dst: &Graded, space: Space) -> Vec<Column> {
    src.basis
        .iter()
        .map(|w| {
            let img = bar_differential_word(w);
            let mut col = Column::new();
            for (u, v) in img.terms() {
                if space == Space::V && u.len() > 1 {
                    continue;
                }
                let k = dst.position(u).expect("truncation covers the image");
                col.insert(k, v.clone());
            }
            col
        })
        .collect()
}

fn graded(space: Space, domain: &ToricDomain, degree: i64, trunc: Truncation) -> Graded {
    let t = match space {
        Space::V => Truncation { max_len: 1, ..trunc },
        Space::Bar => trunc,
    };
    Graded::new(domain, degree, t)
}

/// Rank over ℚ of the homology in `degree`.
pub fn homology_rank(
    space: Space,
    domain: &ToricDomain,
    degree: i64,
    trunc: Option<Truncation>,
) -> Result<usize> {
    let trunc = trunc.unwrap_or_else(|| Truncation::required(space, degree));
    trunc.check(space, degree)?;
    let below = graded(space, domain, degree - 1, trunc);
    let here = graded(space, domain, degree, trunc);
    let above = graded(space, domain, degree + 1, trunc);
    let out = Reduced::new(differential_matrix(&here, &above, space)).rank();
    let inc = Reduced::new(differential_matrix(&below, &here, space)).rank();
    Ok(here.dim() - out - inc)
}

/// Dimension of the chain group in `degree`.
pub fn chain_dim(space: Space, degree: i64, trunc: Truncation) -> usize {
    let t = match space {
        Space::V => Truncation { max_len: 1, ..trunc },
        Space::Bar => trunc,
    };
    words_of_degree(degree, t).len()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bar {
    pub degree: i64,
    pub birth: PerturbedScalar,
    /// `None` for a semi-infinite bar.
    pub death: Option<PerturbedScalar>,
}

#[derive(Clone, Debug)]
pub struct Barcode {
    pub degree: i64,
    pub bars: Vec<Bar>,
    /// semi-infinite bars
    pub p: usize,
    /// rank of the incoming differential, zero-length pairs included
    pub l: usize,
    /// basis elements of this degree killing a class one degree up
    pub r: usize,
}

impl Barcode {
    pub fn to_json(&self) -> Value {
        let bars: Vec<Value> = self
            .bars
            .iter()
            .map(|b| {
                json!({
                    "degree": b.degree,
                    "birth": b.birth.to_json(),
                    "death": b.death.as_ref().map(|d| d.to_json()).unwrap_or(Value::String("inf".into())),
                })
            })
            .collect();
        json!({"degree": self.degree, "p": self.p, "l": self.l, "r": self.r, "bars": bars})
    }
}

/// Reduced boundary data around one degree, reusable for several classes.
pub struct FilteredDegree {
    pub here: Graded,
    incoming: Reduced,
    below: Graded,
    outgoing: Reduced,
}

impl FilteredDegree {
    pub fn new(domain: &ToricDomain, degree: i64, trunc: Option<Truncation>) -> Result<FilteredDegree> {
        let trunc = trunc.unwrap_or_else(|| Truncation::required(Space::Bar, degree));
        trunc.check(Space::Bar, degree)?;
        let below = Graded::new(domain, degree - 1, trunc);
        let here = Graded::new(domain, degree, trunc);
        let above = Graded::new(domain, degree + 1, trunc);
        let incoming = Reduced::new(differential_matrix(&below, &here, Space::Bar));
        let outgoing = Reduced::new(differential_matrix(&here, &above, Space::Bar));
        Ok(FilteredDegree { here, incoming, below, outgoing })
    }

    pub fn barcode(&self) -> Barcode {
        let mut bars = Vec::new();
        for (k, col) in self.incoming.columns.iter().enumerate() {
            if let Some((&low, _)) = col.iter().next_back() {
                // pairs with equal endpoints are not bars
                if self.here.actions[low] != self.below.actions[k] {
                    bars.push(Bar {
                        degree: self.here.degree,
                        birth: self.here.actions[low].clone(),
                        death: Some(self.below.actions[k].clone()),
                    });
                }
            }
        }
        let mut p = 0;
        for k in 0..self.here.dim() {
            if self.outgoing.columns[k].is_empty() && !self.incoming.pivots.contains_key(&k) {
                p += 1;
                bars.push(Bar { degree: self.here.degree, birth: self.here.actions[k].clone(), death: None });
            }
        }
        bars.sort_by(|x, y| (&x.birth, &x.death.is_none(), &x.death).cmp(&(&y.birth, &y.death.is_none(), &y.death)));
        Barcode { degree: self.here.degree, bars, p, l: self.incoming.rank(), r: self.outgoing.rank() }
    }

    /// Least action of a representative of the class of the cycle `x`, or `None` if `x` is exact.
    pub fn birth(&self, x: &BarElement) -> Result<Option<PerturbedScalar>> {
        let mut v = self.here.vector(x)?;
        self.incoming.reduce(&mut v);
        Ok(v.keys().next_back().map(|&k| self.here.actions[k].clone()))
    }

    /// A representative of least action for the class of `x`.
    pub fn minimal_representative(&self, x: &BarElement) -> Result<BarElement> {
        let mut v = self.here.vector(x)?;
        self.incoming.reduce(&mut v);
        Ok(self.here.element(&v))
    }
}

pub fn barcode(domain: &ToricDomain, degree: i64, trunc: Option<Truncation>) -> Result<Barcode> {
    Ok(FilteredDegree::new(domain, degree, trunc)?.barcode())
}
