//! Convex toric domains in dimension four: dual norms, minimizers, Reeb spectra.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, parse_rational, PerturbedScalar, Rational};

/// A pair of nonnegative integers indexing generators and lattice directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePair {
    pub i: u32,
    pub j: u32,
}

impl LatticePair {
    pub const fn new(i: u32, j: u32) -> Self {
        LatticePair { i, j }
    }

    pub fn weight(self) -> u32 {
        self.i + self.j
    }
}

impl fmt::Display for LatticePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.i, self.j)
    }
}

/// Which coordinate receives the implicit `+δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Perturbation {
    First,
    #[default]
    Second,
    /// No perturbation; ties between minimizers are then possible.
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DomainKind {
    Ellipsoid { a: Rational, b: Rational },
    Polydisk { a: Rational, b: Rational },
    Polygon { vertices: Vec<(Rational, Rational)> },
}

/// A convex toric domain together with its tie-breaking perturbation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ToricDomain {
    kind: DomainKind,
    perturbation: Perturbation,
    vertices: Vec<(PerturbedScalar, PerturbedScalar)>,
}

fn bump(x: &Rational, on: bool) -> PerturbedScalar {
    let d = if on && x.is_positive() { BigInt::one() } else { BigInt::zero() };
    PerturbedScalar::new(x.clone(), d)
}

fn check_ab(a: &Rational, b: &Rational) -> Result<()> {
    if !a.is_positive() || a > b {
        return Err(Error::InvalidDomain(format!(
            "need 0 < a <= b, got a={}, b={}",
            format_rational(a),
            format_rational(b)
        )));
    }
    Ok(())
}

impl ToricDomain {
    pub fn ellipsoid(a: Rational, b: Rational) -> Result<Self> {
        check_ab(&a, &b)?;
        let corners = vec![
            (Rational::zero(), Rational::zero()),
            (a.clone(), Rational::zero()),
            (Rational::zero(), b.clone()),
        ];
        Ok(Self::build(DomainKind::Ellipsoid { a, b }, corners, Perturbation::Second))
    }

    pub fn polydisk(a: Rational, b: Rational) -> Result<Self> {
        check_ab(&a, &b)?;
        let corners = vec![
            (Rational::zero(), Rational::zero()),
            (a.clone(), Rational::zero()),
            (Rational::zero(), b.clone()),
            (a.clone(), b.clone()),
        ];
        Ok(Self::build(DomainKind::Polydisk { a, b }, corners, Perturbation::Second))
    }

    /// A polygon given by points whose convex hull is the moment image.
    pub fn polygon(vertices: Vec<(Rational, Rational)>) -> Result<Self> {
        if vertices.iter().any(|(x, y)| x.is_negative() || y.is_negative()) {
            return Err(Error::InvalidDomain("polygon vertices must lie in the first quadrant".into()));
        }
        if !vertices.iter().any(|(x, y)| x.is_zero() && y.is_zero()) {
            return Err(Error::InvalidDomain("polygon must contain the origin as a vertex".into()));
        }
        if !vertices.iter().any(|(x, _)| x.is_positive()) || !vertices.iter().any(|(_, y)| y.is_positive()) {
            return Err(Error::InvalidDomain("polygon must have nonempty interior".into()));
        }
        Ok(Self::build(DomainKind::Polygon { vertices: vertices.clone() }, vertices, Perturbation::Second))
    }

    fn build(kind: DomainKind, corners: Vec<(Rational, Rational)>, p: Perturbation) -> Self {
        let vertices = corners
            .iter()
            .map(|(x, y)| (bump(x, p == Perturbation::First), bump(y, p == Perturbation::Second)))
            .collect();
        ToricDomain { kind, perturbation: p, vertices }
    }

    /// The same domain with the perturbation moved to another coordinate.
    pub fn with_perturbation(&self, p: Perturbation) -> Self {
        let corners = self.vertices.iter().map(|(x, y)| (x.base.clone(), y.base.clone())).collect();
        Self::build(self.kind.clone(), corners, p)
    }

    pub fn kind(&self) -> &DomainKind {
        &self.kind
    }

    pub fn perturbation(&self) -> Perturbation {
        self.perturbation
    }

    pub fn is_ellipsoid(&self) -> bool {
        matches!(self.kind, DomainKind::Ellipsoid { .. })
    }

    /// `max ⟨v, w⟩` over the domain.
    pub fn dual_norm(&self, v: LatticePair) -> PerturbedScalar {
        let (i, j) = (v.i as u64, v.j as u64);
        self.vertices
            .iter()
            .map(|(x, y)| x.scale(i) + y.scale(j))
            .max()
            .expect("domain has vertices")
    }

    /// The unique pair with `i + j = q` of least dual norm.
    pub fn argmin_pair(&self, q: u32) -> Result<LatticePair> {
        assert!(q >= 1, "argmin_pair needs q >= 1");
        let mut best: Option<(PerturbedScalar, LatticePair)> = None;
        let mut tied = false;
        for i in 0..=q {
            let p = LatticePair::new(i, q - i);
            let n = self.dual_norm(p);
            match &best {
                Some((b, _)) if n > *b => {}
                Some((b, _)) if n == *b => tied = true,
                _ => {
                    best = Some((n, p));
                    tied = false;
                }
            }
        }
        if tied {
            return Err(Error::NonUniqueMinimizer { q });
        }
        Ok(best.expect("q >= 1").1)
    }

    /// The Gutt–Hutchings capacity `c_q`.
    pub fn gh_capacity(&self, q: u32) -> Result<PerturbedScalar> {
        Ok(self.dual_norm(self.argmin_pair(q)?))
    }

    /// Canonical literal such as `ellipsoid:1,19/2`.
    pub fn literal(&self) -> String {
        let pair = |a: &Rational, b: &Rational| format!("{},{}", format_rational(a), format_rational(b));
        let mut s = match &self.kind {
            DomainKind::Ellipsoid { a, b } => format!("ellipsoid:{}", pair(a, b)),
            DomainKind::Polydisk { a, b } => format!("polydisk:{}", pair(a, b)),
            DomainKind::Polygon { vertices } => {
                let v: Vec<String> = vertices.iter().map(|(x, y)| pair(x, y)).collect();
                format!("polygon:{}", v.join(";"))
            }
        };
        match self.perturbation {
            Perturbation::First => s.push_str("@first"),
            Perturbation::None => s.push_str("@none"),
            Perturbation::Second => {}
        }
        s
    }
}

impl fmt::Display for ToricDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

impl FromStr for ToricDomain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, pert) = if let Some(b) = s.strip_suffix("@first") {
            (b, Perturbation::First)
        } else if let Some(b) = s.strip_suffix("@none") {
            (b, Perturbation::None)
        } else {
            (s, Perturbation::Second)
        };
        let (kind, rest) = body
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("domain literal needs a kind prefix: {s:?}")))?;
        let two = |rest: &str| -> Result<(Rational, Rational)> {
            let parts: Vec<&str> = rest.split(',').collect();
            if parts.len() != 2 {
                return Err(Error::Parse(format!("expected two coordinates in {rest:?}")));
            }
            Ok((parse_rational(parts[0])?, parse_rational(parts[1])?))
        };
        let d = match kind.trim() {
            "ellipsoid" => {
                let (a, b) = two(rest)?;
                ToricDomain::ellipsoid(a, b)?
            }
            "polydisk" => {
                let (a, b) = two(rest)?;
                ToricDomain::polydisk(a, b)?
            }
            "polygon" => {
                let pts = rest.split(';').map(two).collect::<Result<Vec<_>>>()?;
                ToricDomain::polygon(pts)?
            }
            other => return Err(Error::Parse(format!("unknown domain kind {other:?}"))),
        };
        Ok(d.with_perturbation(pert))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrbitFamily {
    Short,
    Long,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReebOrbitEntry {
    pub action: PerturbedScalar,
    pub family: OrbitFamily,
    pub multiplicity: u64,
    pub ordinal: u32,
    pub degree: i64,
}

/// The first `count` Reeb orbits on the boundary of `E(a, b+δ)`.
pub fn reeb_spectrum(a: &Rational, b: &Rational, count: u32) -> Vec<ReebOrbitEntry> {
    let short = |k: u64| PerturbedScalar::exact(a * Rational::from_integer(BigInt::from(k)));
    let long = |k: u64| PerturbedScalar::new(b * Rational::from_integer(BigInt::from(k)), BigInt::from(k));
    let (mut ks, mut kl) = (1u64, 1u64);
    let mut out = Vec::with_capacity(count as usize);
    for q in 1..=count {
        let (s, l) = (short(ks), long(kl));
        let (action, family, multiplicity) = if s < l {
            ks += 1;
            (s, OrbitFamily::Short, ks - 1)
        } else {
            kl += 1;
            (l, OrbitFamily::Long, kl - 1)
        };
        out.push(ReebOrbitEntry { action, family, multiplicity, ordinal: q, degree: -2 - 2 * q as i64 });
    }
    out
}

/// Covering multiplicity of the orbit corresponding to `A_q` on `∂E(a, b+δ)`.
pub fn orbit_multiplicity(a: &Rational, b: &Rational, q: u32) -> u64 {
    reeb_spectrum(a, b, q).pop().expect("q >= 1").multiplicity
}
