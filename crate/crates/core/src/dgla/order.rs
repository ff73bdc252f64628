//! The action/degree partial order on words of canonical generators `A_q`.

use crate::error::Result;
use crate::scalar::PerturbedScalar;
use crate::toric::ToricDomain;

fn degree(q: u32) -> i64 {
    -2 - 2 * q as i64
}

/// `lhs ⩽ rhs`: some surjection from the factors of `rhs` onto those of `lhs` has
/// blocks whose total degree matches and whose total action is at least the target's.
pub fn partial_order_leq(lhs: &[u32], rhs: &[u32], domain: &ToricDomain) -> Result<bool> {
    if lhs.is_empty() || rhs.len() < lhs.len() {
        return Ok(false);
    }
    let cap = |q: u32| domain.gh_capacity(q);
    let rhs_act = rhs.iter().map(|&q| cap(q)).collect::<Result<Vec<_>>>()?;
    let lhs_act = lhs.iter().map(|&q| cap(q)).collect::<Result<Vec<_>>>()?;
    let mut deg = vec![0i64; lhs.len()];
    let mut act = vec![PerturbedScalar::zero(); lhs.len()];
    let mut size = vec![0usize; lhs.len()];

    struct Ctx<'a> {
        lhs: &'a [u32],
        rhs: &'a [u32],
        lhs_act: &'a [PerturbedScalar],
        rhs_act: &'a [PerturbedScalar],
    }

    fn rec(
        c: &Ctx,
        k: usize,
        deg: &mut [i64],
        act: &mut [PerturbedScalar],
        size: &mut [usize],
    ) -> bool {
        if k == c.rhs.len() {
            return (0..c.lhs.len())
                .all(|t| size[t] > 0 && deg[t] == degree(c.lhs[t]) && act[t] >= c.lhs_act[t]);
        }
        let empty = size.iter().filter(|&&s| s == 0).count();
        if c.rhs.len() - k < empty {
            return false;
        }
        let dk = degree(c.rhs[k]);
        for t in 0..c.lhs.len() {
            if deg[t] + dk < degree(c.lhs[t]) {
                continue;
            }
            // identical target factors with empty blocks are interchangeable
            if size[t] == 0 && (0..t).any(|u| size[u] == 0 && c.lhs[u] == c.lhs[t]) {
                continue;
            }
            deg[t] += dk;
            act[t] += &c.rhs_act[k];
            size[t] += 1;
            let ok = rec(c, k + 1, deg, act, size);
            size[t] -= 1;
            act[t] = &act[t] - &c.rhs_act[k];
            deg[t] -= dk;
            if ok {
                return true;
            }
        }
        false
    }

    let ctx = Ctx { lhs, rhs, lhs_act: &lhs_act, rhs_act: &rhs_act };
    Ok(rec(&ctx, 0, &mut deg, &mut act, &mut size))
}

/// Whether `A_q` is maximal: no other word `w` satisfies `A_q ⩽ w`.
///
/// Such a `w = A_{q₁}⊙…⊙A_{q_m}` has `m ≥ 2`, `Σ(q_s + 1) = q + 1` and
/// `Σ c_{q_s} ≥ c_q`; the search runs over partitions of `q + 1` into parts at least two.
pub fn is_maximal_generator(domain: &ToricDomain, q: u32) -> Result<bool> {
    let caps = (1..=q).map(|s| domain.gh_capacity(s)).collect::<Result<Vec<_>>>()?;
    let target = caps[q as usize - 1].clone();
    // best[n] = largest total capacity over partitions of n into parts >= 2
    let n = q as usize + 1;
    let mut best: Vec<Option<PerturbedScalar>> = vec![None; n + 1];
    best[0] = Some(PerturbedScalar::zero());
    for part in 2..=n - 1 {
        let c = &caps[part - 2];
        for m in part..=n {
            if let Some(prev) = best[m - part].clone() {
                let cand = &prev + c;
                if best[m].as_ref().is_none_or(|b| cand > *b) {
                    best[m] = Some(cand);
                }
            }
        }
    }
    // parts are at most q, so any partition counted here has at least two parts
    Ok(best[n].as_ref().is_none_or(|b| *b < target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn basic_order() {
        let e = ToricDomain::ellipsoid(int(1), int(1)).unwrap();
        assert!(partial_order_leq(&[3], &[3], &e).unwrap());
        assert!(!partial_order_leq(&[1], &[1, 1], &e).unwrap());
        // A_3 ⩽ A_1⊙A_1: degree -8 = -4-4 and c_1+c_1 = 2 >= c_3 = 2
        assert!(partial_order_leq(&[3], &[1, 1], &e).unwrap());
        assert!(partial_order_leq(&[3, 1], &[1, 1, 1], &e).unwrap());
    }

    #[test]
    fn maximal_short_orbit_generator() {
        let e = ToricDomain::ellipsoid(int(1), rat(55, 8)).unwrap();
        assert!(is_maximal_generator(&e, 62).unwrap());
        let ball = ToricDomain::ellipsoid(int(1), int(1)).unwrap();
        assert!(!is_maximal_generator(&ball, 3).unwrap());
    }
}
