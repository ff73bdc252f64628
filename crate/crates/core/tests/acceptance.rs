//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symcap::canonical::{
    am_reduce, homotopy_h1, phi1, phi1_element, psi1_phi1, CanonicalModel, Constants, ReductionEngine, RewriteOrder,
};
use symcap::dgla::{bar_differential, bracket, differential, homology_rank, BarElement, Element, Generator, Space, Word};
use symcap::invariants::{
    at_least_tau4, gb_capacity_ellipsoid, nonzero_coeff_polydisk, rseep_check, s_d, s_d_with, spectral_invariant,
    CapacityWord, PolydiskVariant,
};
use symcap::invariants::polydisk::ball_normalizer;
use symcap::scalar::{format_rational, int, parse_rational, rat};
use symcap::toric::LatticePair;
use symcap::{PerturbedScalar, Rational, ToricDomain};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: symcap::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn criterion_1() -> Check {
    let want: [u64; 12] = [1, 1, 4, 26, 217, 2110, 22744, 264057, 3242395, 41596252, 552733376, 7559811021];
    let x = int(100);
    let mut m = lib(CanonicalModel::new(int(1), x.clone(), Constants::Geometric))?;
    let mut tiers = Vec::new();
    let t = Instant::now();
    for (d, w) in (1..=12u32).zip(want) {
        let v = lib(s_d_with(&mut m, d, &x))?;
        ensure(v == Rational::from_integer(w.into()), || format!("S_{d} = {}, expected {w}", format_rational(&v)))?;
        if d == 9 || d == 12 {
            tiers.push(format!("S_1..S_{d} in {:.2?}", t.elapsed()));
        }
    }
    Ok(tiers.join(", "))
}

fn criterion_2() -> Check {
    let rows = [
        (4, "11", 26u64),
        (5, "14", 217),
        (7, "19/2", 117),
        (8, "7", 3),
        (10, "9", 645),
        (11, "29/4", 13),
        (21, "55/8", 3),
        (19, "50/7", 68),
    ];
    let mut times = Vec::new();
    for (d, x, w) in rows {
        let t = Instant::now();
        let v = lib(s_d(d, &lib(parse_rational(x))?, Constants::Geometric))?;
        ensure(v == Rational::from_integer(w.into()), || format!("S_{{{d};1,{x}}} = {}, expected {w}", format_rational(&v)))?;
        times.push(format!("({d},{x}) {:.1?}", t.elapsed()));
    }
    Ok(times.join(", "))
}

fn criterion_3() -> Check {
    let (one, r) = (int(1), int(100));
    let mut m = lib(CanonicalModel::new(one.clone(), r.clone(), Constants::Geometric))?;
    let b11 = LatticePair::new(1, 1);
    let checks: Vec<(&str, (Rational, u32), (Rational, u32))> = vec![
        ("Phi^2(b11,b11)", lib(m.phi_k(&[b11, b11]))?, (int(10), 5)),
        ("Phi^3(b11^3)", lib(m.phi_k(&[b11, b11, b11]))?, (int(192), 8)),
        ("Phi^1(b32)", lib(phi1(&one, &r, LatticePair::new(3, 2), Constants::Geometric))?, (int(10), 5)),
        ("Phi^1(b41)", lib(phi1(&one, &r, LatticePair::new(4, 1), Constants::Geometric))?, (int(5), 5)),
    ];
    for (name, got, want) in checks {
        ensure(got == want, || format!("{name} = {} A{}, expected {} A{}", got.0, got.1, want.0, want.1))?;
    }
    let (z, _) = lib(m.phi_k(&[LatticePair::new(2, 0), LatticePair::new(2, 0)]))?;
    ensure(z.is_zero(), || format!("Phi^2(b20,b20) = {z}, expected 0"))?;
    Ok("all five worked examples exact".into())
}

fn criterion_4() -> Check {
    let p = lib(ToricDomain::polydisk(int(1), int(1)))?;
    let x = BarElement::word(lib("b:1,0*b:1,0*b:1,0*b:0,1".parse::<Word>())?);
    let red = lib(am_reduce(&p, &x))?;
    let c = red.coeff(&Word::single(Generator::beta(7, 0)));
    ensure(c == int(42), || format!("coefficient on b:7,0 is {c}"))?;
    let mut sd_model = lib(CanonicalModel::new(int(1), int(60), Constants::Geometric))?;
    for d in 1..=8u32 {
        let cube = lib(nonzero_coeff_polydisk(d, PolydiskVariant::Cube))?;
        let ball = lib(nonzero_coeff_polydisk(d, PolydiskVariant::Ball))?;
        ensure(!cube.is_zero() && !ball.is_zero(), || format!("vanishing coefficient at d={d}"))?;
        if d <= 6 {
            let sd = lib(s_d_with(&mut sd_model, d, &int(60)))?;
            let r = &ball / ball_normalizer(d);
            ensure(r == sd, || format!("d={d}: ball/(d!(3d-1)) = {r}, S_d = {sd}"))?;
        }
    }
    Ok("42 on b:7,0; d=1..8 nonzero; ball matches S_1..S_6".into())
}

fn criterion_5() -> Check {
    let doms: Vec<ToricDomain> = ["ellipsoid:1,1", "ellipsoid:1,5/2", "polydisk:1,1"]
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_, _>>()
        .map_err(|e: symcap::Error| e.to_string())?;
    for dom in &doms {
        for d in -20..=-3i64 {
            let want = usize::from(d % 2 == 0);
            let r = lib(homology_rank(Space::V, dom, d, None))?;
            ensure(r == want, || format!("{}: H_{d}(V) has rank {r}", dom.literal()))?;
        }
        for (d, want) in [(-4, 1), (-6, 1), (-8, 2), (-10, 2), (-12, 4), (-14, 4)] {
            let r = lib(homology_rank(Space::Bar, dom, d, None))?;
            ensure(r == want, || format!("{}: bar rank in degree {d} is {r}, expected {want}", dom.literal()))?;
        }
    }
    Ok("H(V) and bar ranks on three domains".into())
}

fn random_generator(rng: &mut ChaCha8Rng, max_w: u32) -> Generator {
    loop {
        let (i, j) = (rng.gen_range(0..=max_w), rng.gen_range(0..=max_w));
        if i + j == 0 || i + j > max_w {
            continue;
        }
        if rng.gen_bool(0.5) {
            if i >= 1 && j >= 1 {
                return Generator::alpha(i, j);
            }
        } else {
            return Generator::beta(i, j);
        }
    }
}

fn random_ellipsoid(rng: &mut ChaCha8Rng) -> (Rational, Rational) {
    let a = rat(rng.gen_range(1..10), rng.gen_range(1..5));
    let b = rat(rng.gen_range(1..40), rng.gen_range(1..6));
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn random_pairs(rng: &mut ChaCha8Rng, max_k: usize, max_w: u32) -> Vec<LatticePair> {
    let k = rng.gen_range(1..=max_k);
    (0..k)
        .map(|_| loop {
            let (i, j) = (rng.gen_range(0..=max_w), rng.gen_range(0..=max_w));
            if (1..=max_w).contains(&(i + j)) {
                break LatticePair::new(i, j);
            }
        })
        .collect()
}

fn criterion_6() -> Check {
    const CASES: usize = 60;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let e = Element::gen;
    let mut done = Vec::new();

    for _ in 0..CASES {
        let g = random_generator(&mut rng, 30);
        ensure(differential(&differential(&e(g))).is_zero(), || format!("d^2({g}) != 0"))?;
    }
    done.push("d^2");

    for _ in 0..CASES {
        let (x, y, z) = (random_generator(&mut rng, 12), random_generator(&mut rng, 12), random_generator(&mut rng, 12));
        let s = |a: &Generator, b: &Generator| if a.is_odd() && b.is_odd() { -1 } else { 1 };
        let mut sum = bracket(&bracket(&e(x), &e(y)), &e(z));
        let t2 = bracket(&bracket(&e(x), &e(z)), &e(y));
        let t3 = bracket(&bracket(&e(y), &e(z)), &e(x));
        sum = if s(&y, &z) < 0 { &sum - &t2 } else { &sum + &t2 };
        sum = if s(&x, &y) * s(&x, &z) < 0 { &sum - &t3 } else { &sum + &t3 };
        ensure(sum.is_zero(), || format!("Jacobi fails on {x}, {y}, {z}"))?;

        let mut l = &differential(&bracket(&e(x), &e(y))) + &bracket(&differential(&e(x)), &e(y));
        let t = bracket(&e(x), &differential(&e(y)));
        l = if x.is_odd() { &l - &t } else { &l + &t };
        ensure(l.is_zero(), || format!("Leibniz fails on {x}, {y}"))?;
    }
    done.push("Jacobi");
    done.push("Leibniz");

    let mut tried = 0;
    while tried < CASES {
        let len = rng.gen_range(1..=4);
        let gens: Vec<Generator> = (0..len).map(|_| random_generator(&mut rng, 6)).collect();
        if gens.iter().map(|g| g.weight()).sum::<u32>() > 12 {
            continue;
        }
        let x = BarElement::from_factors(gens);
        if x.is_zero() {
            continue;
        }
        tried += 1;
        ensure(bar_differential(&bar_differential(&x)).is_zero(), || format!("l^2({x}) != 0"))?;
    }
    done.push("l^2");

    for _ in 0..CASES {
        let (a, b) = random_ellipsoid(&mut rng);
        let (i, j) = (rng.gen_range(1..15), rng.gen_range(1..15));
        let dx = differential(&e(Generator::alpha(i, j)));
        ensure(lib(phi1_element(&a, &b, &dx, Constants::Geometric))?.is_empty(), || format!("Phi^1(d a:{i},{j}) != 0"))?;
    }
    done.push("Phi^1 d = 0");

    for _ in 0..CASES {
        let (a, b) = random_ellipsoid(&mut rng);
        let g = random_generator(&mut rng, 14);
        let x = e(g);
        let lhs = &lib(homotopy_h1(&a, &b, &differential(&x)))? + &differential(&lib(homotopy_h1(&a, &b, &x))?);
        let rhs = &x - &lib(psi1_phi1(&a, &b, &x, Constants::Geometric))?;
        ensure(lhs == rhs, || format!("homotopy identity fails on {g} at E({a},{b})"))?;
    }
    done.push("h-identity");

    for _ in 0..CASES {
        let (a, b) = random_ellipsoid(&mut rng);
        let dom = lib(ToricDomain::ellipsoid(a.clone(), b.clone()))?;
        let pairs = random_pairs(&mut rng, 4, 6);
        let seed = rng.gen();
        let mut canon = ReductionEngine::new(dom.clone()).with_pruning(false);
        let mut random = ReductionEngine::new(dom.clone()).with_pruning(false).with_order(RewriteOrder::Random(seed));
        let (x, y) = (lib(canon.reduce_word(&pairs))?, lib(random.reduce_word(&pairs))?);
        ensure(x == y, || format!("rewrite order changes the reduction of {pairs:?} at E({a},{b})"))?;
    }
    done.push("order independence");

    for _ in 0..CASES {
        let (a, b) = random_ellipsoid(&mut rng);
        let dom = lib(ToricDomain::ellipsoid(a.clone(), b.clone()))?;
        let pairs = random_pairs(&mut rng, 4, 7);
        let mut eng = ReductionEngine::new(dom.clone()).with_pruning(false);
        let src = BarElement::from_factors(pairs.iter().map(|p| Generator::beta(p.i, p.j)).collect());
        let red = lib(eng.reduce_word(&pairs))?;
        if let (Some(s), Some(t)) = (src.action(&dom), red.action(&dom)) {
            ensure(t <= s, || format!("reduction of {pairs:?} raises action at E({a},{b})"))?;
        }
    }
    done.push("filtration");

    const WORDS: &[&str] = &["t0", "t1", "t2", "t3", "t4", "t5", "t0^2", "t0*t1", "t0*t2", "t1^2", "t0^3", "t0*t3", "t1*t2"];
    for _ in 0..CASES {
        let (a, b) = random_ellipsoid(&mut rng);
        let w: CapacityWord = lib(WORDS[rng.gen_range(0..WORDS.len())].parse())?;
        let dom = lib(ToricDomain::ellipsoid(a.clone(), b.clone()))?;
        let (sp, gb) = (lib(spectral_invariant(&dom, &w, None))?, lib(gb_capacity_ellipsoid(&a, &b, &w))?);
        ensure(sp == gb, || format!("{w} at E({a},{b}): barcode {sp}, canonical model {gb}"))?;
    }
    done.push("spectral = gb");

    Ok(format!("{CASES} cases each: {}", done.join(", ")))
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let (a, b) = random_ellipsoid(&mut rng);
        let e = lib(ToricDomain::ellipsoid(a.clone(), b.clone()))?;
        let mut merged = Vec::new();
        for k in 1..=50i64 {
            merged.push(PerturbedScalar::exact(&a * rat(k, 1)));
            merged.push(PerturbedScalar::new(&b * rat(k, 1), BigInt::from(k)));
        }
        merged.sort();
        for q in 1..=50u32 {
            let c = lib(e.gh_capacity(q))?;
            ensure(c == merged[q as usize - 1], || format!("c_{q}(E({a},{b})) = {c}, spectrum has {}", merged[q as usize - 1]))?;
        }
    }
    Ok("100 ellipsoids, q <= 50".into())
}

fn criterion_8() -> Check {
    for (p, q, want) in [(55u64, 8u64, 3i64), (19, 2, 117)] {
        let v = lib(rseep_check(p, q, Constants::Geometric))?;
        ensure(v.applies && v.nonzero && v.value == int(want), || format!("rseep({p},{q}) = {v:?}"))?;
    }
    let tau4 = (7.0 + 3.0 * 5f64.sqrt()) / 2.0;
    let picks: [(u64, u64); 20] = [
        (55, 8), (89, 13), (144, 21), (233, 34), (377, 55), (610, 89), (987, 144), (1597, 233),
        (7, 1), (6, 1), (27, 4), (34, 5), (41, 6), (48, 7), (62, 9), (69, 10), (7, 2), (19, 2), (137, 20), (2741, 400),
    ];
    let (mut above, mut below) = (0, 0);
    for (p, q) in picks {
        let x = p as f64 / q as f64;
        ensure((x - tau4).abs() > 1e-9, || format!("{p}/{q} too close for the float oracle"))?;
        let got = at_least_tau4(p, q);
        ensure(got == (x > tau4), || format!("{p}/{q}: gate says {got}"))?;
        if got {
            above += 1;
        } else {
            below += 1;
        }
    }
    Ok(format!("values 3 and 117; gate agrees on 20 rationals ({above} above, {below} below)"))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("1 S_d sequence at x=100, S_1..S_12", criterion_1),
        ("2 table entries", criterion_2),
        ("3 worked examples", criterion_3),
        ("4 polydisk coefficients", criterion_4),
        ("5 homology ranks", criterion_5),
        ("6 property suites", criterion_6),
        ("7 capacity vs Reeb spectrum", criterion_7),
        ("8 stabilized embedding criterion", criterion_8),
    ];
    let mut failed = 0;
    let mut total = Duration::ZERO;
    for (name, f) in criteria {
        let t = Instant::now();
        let r = f();
        let el = t.elapsed();
        total += el;
        match r {
            Ok(detail) => println!("PASS [{name}] {detail} ({el:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("FAIL [{name}] {msg} ({el:.2?})");
            }
        }
    }
    println!("{} of 8 criteria passed in {total:.2?}", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
