use golden_chroma::analysis::{
    all_roots, asymptotic_constant, family_entropy, interval_checks, tutte_ratio, LimitOrder, DEFAULT_TOL,
};
use golden_chroma::arith::{rat, tau_power, GoldenValue, IntPoly};
use golden_chroma::chroma::{chromatic_by_colorings, chromatic_by_subgraphs, chromatic_poly};
use golden_chroma::corpus::{apollonian_walk, flip_walk, k4, random_graph, rng};
use golden_chroma::families::{family_form, family_graph, family_n, family_poly, Family, FamilySpec};
use proptest::prelude::*;

fn spec(f: Family, p: i64) -> FamilySpec {
    FamilySpec::new(f, p).unwrap()
}

fn golden_ratio_of(f: Family, p: i64) -> GoldenValue {
    let s = spec(f, p);
    tutte_ratio(&family_poly(s).unwrap(), family_n(s)).unwrap().ratio
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn engine_agrees_with_oracles(n in 1usize..=7, p in 0.1f64..0.9, seed in any::<u64>()) {
        let g = random_graph(n, p, &mut rng(seed));
        let e = chromatic_poly(&g).unwrap();
        prop_assert_eq!(&e, &chromatic_by_colorings(&g).unwrap());
        prop_assert_eq!(&e, &chromatic_by_subgraphs(&g).unwrap());
    }

    #[test]
    fn walks_respect_bound_and_zero_free_intervals(seed in any::<u64>(), inserts in 1usize..8, flips in 0usize..20) {
        let mut r = rng(seed);
        let stacked = apollonian_walk(&k4(), inserts, &mut r);
        let start = stacked.last().unwrap().clone();
        for t in stacked.iter().chain(flip_walk(&start, flips, &mut r).iter()) {
            prop_assert!(t.is_valid());
            let p = chromatic_poly(&t.graph).unwrap();
            let report = tutte_ratio(&p, t.graph.n()).unwrap();
            prop_assert!(!report.violation && !report.saturated);
            prop_assert!(interval_checks(&p).zero_free());
        }
    }

    #[test]
    fn stacked_triangulations_have_closed_form(seed in any::<u64>(), inserts in 1usize..8) {
        let walk = apollonian_walk(&k4(), inserts, &mut rng(seed));
        let t = walk.last().unwrap();
        let want = &IntPoly::falling_factorial(3) * &IntPoly::linear(3).pow(t.graph.n() as u32 - 3);
        prop_assert_eq!(chromatic_poly(&t.graph).unwrap(), want);
    }
}

#[test]
fn bipyramid_ratio_alternates_around_limit() {
    let limit = tau_power(-1);
    for n in 6..=40 {
        let d = (&golden_ratio_of(Family::B, n) - &limit).sign();
        assert_eq!(d, if n % 2 == 0 { 1 } else { -1 }, "n = {n}");
    }
}

#[test]
fn h_ratio_decays_geometrically() {
    let limit = GoldenValue::from_ints(7, -3, 2);
    let step = (&GoldenValue::one() - &GoldenValue::tau()).abs();
    let gap = |n| (&golden_ratio_of(Family::H, n) - &limit).abs();
    for n in 9..40 {
        // the gap shrinks by exactly |1 - τ| per vertex
        assert_eq!(gap(n + 1), &gap(n) * &step, "n = {n}");
    }
}

#[test]
fn asymptotic_constants_match_finite_ratios() {
    for (f, alpha) in [(Family::R, 1), (Family::TC, 3), (Family::I, 9), (Family::B, 1)] {
        let a = asymptotic_constant(&family_form(f), alpha).unwrap().a;
        let err = |m: i64| {
            let s = spec(f, f.min_param() + m);
            let r = golden_ratio_of(f, s.param).to_f64();
            (a - r.powf(1.0 / family_n(s) as f64)).abs()
        };
        assert!(err(40) < err(20), "{f:?}: {} vs {}", err(40), err(20));
    }
}

#[test]
fn root_reports_are_complete() {
    let polys = [
        family_poly(spec(Family::I, 1)).unwrap(),
        family_poly(spec(Family::TC, 4)).unwrap(),
        family_poly(spec(Family::H, 10)).unwrap(),
    ];
    for p in &polys {
        let r = all_roots(p, DEFAULT_TOL).unwrap();
        assert!(r.converged);
        assert_eq!(r.root_count(), p.degree().unwrap());
        for w in r.real_roots.windows(2) {
            assert!(w[0].root.hi() <= w[1].root.lo());
        }
        for c in &r.complex_roots {
            assert!(c.radius <= DEFAULT_TOL);
        }
        for x in &r.real_roots {
            let root = &x.root;
            let s = root.poly();
            assert!(root.exact().is_some() || s.sign_at(root.lo()) * s.sign_at(root.hi()) < 0);
        }
    }
}

#[test]
fn family_graphs_are_zero_free_on_tc_interval() {
    for (f, hi) in [(Family::R, 10), (Family::TC, 5), (Family::B, 14), (Family::I, 1)] {
        for p in f.min_param()..=hi {
            let (g, _) = family_graph(spec(f, p)).unwrap();
            assert!(interval_checks(&chromatic_poly(&g).unwrap()).zero_free(), "{f:?} {p}");
        }
    }
}

#[test]
fn entropy_sign_matches_degeneracy() {
    for k in [rat(3, 1), rat(7, 2), rat(4, 1), rat(11, 2), rat(10, 1)] {
        let q = GoldenValue::from_rational(k);
        for f in [Family::TC, Family::B, Family::H] {
            let e = family_entropy(f, &q, LimitOrder::Nq).unwrap();
            assert_eq!(e.s0, e.w.ln());
            assert_eq!(e.w > 1.0, e.s0 > 0.0);
        }
    }
}
