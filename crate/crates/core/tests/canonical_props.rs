use num_traits::Zero;
use proptest::prelude::*;
use symcap::canonical::{
    am_reduce, homotopy_h1, phi1_element, psi1, psi1_phi1, CanonicalElement, CanonicalModel, Constants,
    ReductionEngine, RewriteOrder,
};
use symcap::dgla::{differential, BarElement, Element, Generator};
use symcap::scalar::rat;
use symcap::toric::LatticePair;
use symcap::{Rational, ToricDomain};

/// A random ellipsoid `E(a,b)` with small rational parameters, `a ≤ b`.
fn ellipsoid() -> impl Strategy<Value = (Rational, Rational)> {
    (1i64..8, 1i64..4, 1i64..30, 1i64..5).prop_map(|(an, ad, bn, bd)| {
        let (a, b) = (rat(an, ad), rat(bn, bd));
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    })
}

fn beta_pairs(max_k: usize, max_w: u32) -> impl Strategy<Value = Vec<LatticePair>> {
    let pair = (0..=max_w, 0..=max_w)
        .prop_filter("weight", move |(i, j)| (1..=max_w).contains(&(i + j)))
        .prop_map(|(i, j)| LatticePair::new(i, j));
    prop::collection::vec(pair, 1..=max_k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn phi1_is_a_chain_map((a, b) in ellipsoid(), i in 1u32..15, j in 1u32..15) {
        let x = differential(&Element::gen(Generator::alpha(i, j)));
        prop_assert!(phi1_element(&a, &b, &x, Constants::Geometric).unwrap().is_empty());
    }

    #[test]
    fn homotopy_identity((a, b) in ellipsoid(), alpha in any::<bool>(), i in 0u32..12, j in 0u32..12) {
        prop_assume!(i + j >= 1);
        prop_assume!(!alpha || (i >= 1 && j >= 1));
        let g = if alpha { Generator::alpha(i, j) } else { Generator::beta(i, j) };
        let x = Element::gen(g);
        // h∂ + ∂h = 1 − Ψ¹Φ¹
        let lhs = &homotopy_h1(&a, &b, &differential(&x)).unwrap() + &differential(&homotopy_h1(&a, &b, &x).unwrap());
        let rhs = &x - &psi1_phi1(&a, &b, &x, Constants::Geometric).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn phi1_psi1_is_identity((a, b) in ellipsoid(), q in 1u32..40) {
        let x = psi1(&a, &b, q, Constants::Geometric).unwrap();
        prop_assert_eq!(phi1_element(&a, &b, &x, Constants::Geometric).unwrap(), vec![(q, rat(1, 1))]);
    }

    #[test]
    fn rewrite_order_does_not_matter((a, b) in ellipsoid(), pairs in beta_pairs(4, 6), seed in any::<u64>()) {
        let dom = ToricDomain::ellipsoid(a, b).unwrap();
        let mut canon = ReductionEngine::new(dom.clone()).with_pruning(false);
        let mut random = ReductionEngine::new(dom).with_pruning(false).with_order(RewriteOrder::Random(seed));
        prop_assert_eq!(canon.reduce_word(&pairs).unwrap(), random.reduce_word(&pairs).unwrap());
        prop_assert_eq!(canon.coefficient(&pairs).unwrap(), random.coefficient(&pairs).unwrap());
    }

    #[test]
    fn reduction_preserves_filtration((a, b) in ellipsoid(), pairs in beta_pairs(4, 7)) {
        let dom = ToricDomain::ellipsoid(a, b).unwrap();
        let mut eng = ReductionEngine::new(dom.clone()).with_pruning(false);
        let src = BarElement::from_factors(pairs.iter().map(|p| Generator::beta(p.i, p.j)).collect());
        let red = eng.reduce_word(&pairs).unwrap();
        if let (Some(s), Some(t)) = (src.action(&dom), red.action(&dom)) {
            prop_assert!(t <= s, "{} > {}", t, s);
        }
        let q: u32 = pairs.iter().map(|p| p.weight()).sum::<u32>() + pairs.len() as u32 - 1;
        if !eng.coefficient(&pairs).unwrap().is_zero() {
            prop_assert!(dom.gh_capacity(q).unwrap() <= src.action(&dom).unwrap());
        }
    }

    #[test]
    fn pruning_agrees_with_full_recursion((a, b) in ellipsoid(), pairs in beta_pairs(5, 6)) {
        let dom = ToricDomain::ellipsoid(a, b).unwrap();
        let mut pruned = ReductionEngine::new(dom.clone()).with_pruning(true);
        let mut full = ReductionEngine::new(dom).with_pruning(false);
        prop_assert_eq!(pruned.coefficient(&pairs).unwrap(), full.coefficient(&pairs).unwrap());
    }

    #[test]
    fn phi_hat_after_psi_hat_is_identity((a, b) in ellipsoid(), qs in prop::collection::vec(1u32..8, 1..=3)) {
        let mut m = CanonicalModel::new(a, b, Constants::Geometric).unwrap();
        prop_assert!(m.identity_check(&qs).unwrap());
    }

    #[test]
    fn phi_hat_factors_through_reduction((a, b) in ellipsoid(), pairs in beta_pairs(3, 5)) {
        // Φ̂ of a product equals Φ¹ applied factorwise to its action-minimal form
        let dom = ToricDomain::ellipsoid(a.clone(), b.clone()).unwrap();
        let x = BarElement::from_factors(pairs.iter().map(|p| Generator::beta(p.i, p.j)).collect());
        prop_assume!(!x.is_zero());
        let mut m = CanonicalModel::new(a.clone(), b.clone(), Constants::Geometric).unwrap();
        let direct = m.phi_hat(&x).unwrap();
        let mut via = CanonicalElement::zero();
        for (w, c) in am_reduce(&dom, &x).unwrap().terms() {
            let mut coeff = c.clone();
            let mut qs = Vec::new();
            for g in w.factors() {
                let (v, q) = symcap::canonical::phi1(&a, &b, g.pair(), Constants::Geometric).unwrap();
                coeff *= v;
                qs.push(q);
            }
            via.add_term(coeff, qs);
        }
        prop_assert_eq!(direct, via);
    }
}
