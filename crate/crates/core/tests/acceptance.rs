//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use golden_chroma::analysis::{
    all_roots, asymptotic_constant, b_locus_pair, b_locus_scan, empirical_w, family_entropy, interval_checks,
    ratio_formula_check, tutte_ratio, Grid, LimitOrder, Realness, DEFAULT_TOL, GOLDEN_POINT_F64,
};
use golden_chroma::arith::{tau_power, GoldenValue, IntPoly};
use golden_chroma::chroma::{chromatic_by_colorings, chromatic_by_subgraphs, chromatic_poly, ChromaticEngine};
use golden_chroma::corpus::{small_graph_corpus, triangulation_corpus};
use golden_chroma::families::{
    ce12_octic, f_cm, family_form, family_graph, family_poly, lambda_tc, Family, FamilySpec,
};

const SEED: u64 = 20_240_601;
const CORPUS_GRAPHS: usize = 520;
const CORPUS_TRIANGULATIONS: usize = 520;
const CORPUS_MAX_N: usize = 14;
const TOL_CONSTANT: f64 = 1e-5;
const TOL_TABLE: f64 = 1e-6;
const TOL_PAIR: f64 = 1e-5;
const TOL_WOODALL: f64 = 1e-6;
const TOL_ENTROPY: f64 = 1e-5;
const TOL_NQ_LIMIT: f64 = 1e-3;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn spec(f: Family, p: i64) -> FamilySpec {
    FamilySpec::new(f, p).unwrap()
}

fn check(ok: bool, pass: String, fail: String) -> Outcome {
    if ok {
        Ok(pass)
    } else {
        Err(fail)
    }
}

fn base_ratios() -> Outcome {
    let k3 = tutte_ratio(&IntPoly::falling_factorial(3), 3).unwrap().ratio;
    let k4 = tutte_ratio(&IntPoly::falling_factorial(4), 4).unwrap().ratio;
    let ok = k3 == GoldenValue::one() && k4 == tau_power(-1);
    check(ok, format!("r(K3) = {k3}, r(K4) = {k4}"), format!("r(K3) = {k3}, r(K4) = {k4}"))
}

fn engine_oracles() -> Outcome {
    let graphs = small_graph_corpus(SEED, CORPUS_GRAPHS, 8);
    let mut bad = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let e = chromatic_poly(g).unwrap();
        if e != chromatic_by_colorings(g).unwrap() || e != chromatic_by_subgraphs(g).unwrap() {
            bad.push(i);
        }
    }
    check(
        bad.is_empty() && graphs.len() >= 500,
        format!("{} graphs, engine = both oracles", graphs.len()),
        format!("mismatches at {bad:?}"),
    )
}

fn family_crosscheck() -> Outcome {
    let mut bad = Vec::new();
    for (f, hi) in [(Family::R, 10), (Family::TC, 5), (Family::B, 12), (Family::I, 1)] {
        for p in f.min_param()..=hi {
            let s = spec(f, p);
            let (g, _) = family_graph(s).unwrap();
            if chromatic_poly(&g).unwrap() != family_form(f).expand(p).unwrap() {
                bad.push(s.to_string());
            }
        }
    }
    check(bad.is_empty(), "R m<=10, TC m<=5, B n<=12, I m=1 exact".into(), format!("mismatch: {bad:?}"))
}

fn golden_evaluations() -> Outcome {
    let g = GoldenValue::golden_point();
    let pre = GoldenValue::from_ints(3, 1, 2);
    let mut bad = Vec::new();
    for m in 1..=10 {
        if m >= 2 {
            let want = &pre * &GoldenValue::from_ints(-11, 5, 1).pow(m as u32 - 1);
            if family_poly(spec(Family::TC, m)).unwrap().eval_golden(&g) != want {
                bad.push(format!("TC_{m}"));
            }
        }
        let want = &pre * &GoldenValue::from_ints(-23955, 10713, 2).pow(m as u32);
        if family_poly(spec(Family::I, m)).unwrap().eval_golden(&g) != want {
            bad.push(format!("I_{m}"));
        }
    }
    check(bad.is_empty(), "P(TC_m), P(I_m) at the golden point, m <= 10".into(), format!("mismatch: {bad:?}"))
}

fn ratio_formulas() -> Outcome {
    let mut lines = Vec::new();
    let mut all_ok = true;
    for f in [Family::R, Family::TC, Family::I, Family::B, Family::H, Family::CE12] {
        let params: Vec<i64> = if f == Family::CE12 { vec![0] } else { (f.min_param()..=30).collect() };
        let rows = ratio_formula_check(f, params).unwrap();
        let failing: Vec<i64> = rows.iter().filter(|r| !r.equal).map(|r| r.param).collect();
        all_ok &= failing.is_empty();
        if failing.is_empty() {
            lines.push(format!("{}: ok", f.name()));
        } else {
            let r = rows.iter().find(|r| !r.equal).unwrap();
            lines.push(format!(
                "{}: {} params differ, first {}: exact {:.6} vs formula {:.6}",
                f.name(),
                failing.len(),
                r.param,
                r.exact.to_f64(),
                r.formula.to_f64()
            ));
        }
    }
    check(all_ok, lines.join("; "), lines.join("; "))
}

fn asymptotic_constants() -> Outcome {
    let cases = [
        (Family::R, 1, 0.61803),
        (Family::TC, 3, 0.91415),
        (Family::I, 9, 0.80552),
        (Family::B, 1, 1.0),
        (Family::H, 1, 1.0),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (f, alpha, want) in cases {
        let a = asymptotic_constant(&family_form(f), alpha).unwrap().a;
        ok &= (a - want).abs() <= TOL_CONSTANT;
        parts.push(format!("a_{} = {a:.6}", f.name()));
    }
    // a for the CM graph from the exact golden value of its octic factor
    let r_cm = tutte_ratio(&(&IntPoly::falling_factorial(3) * &f_cm()), 11).unwrap().ratio;
    let exact_ok = r_cm == GoldenValue::from_ints(115, -51, 2);
    let a_cm = asymptotic_constant(&family_form(Family::CM), 8).unwrap().a;
    let candidate = GoldenValue::from_ints(115, -51, 2).to_f64().powf(1.0 / 8.0);
    let matches = if (a_cm - candidate).abs() < 1e-9 {
        "the eighth root of (115-51√5)/2"
    } else if (a_cm - 0.885185).abs() < 1e-6 {
        "0.885185"
    } else {
        "neither candidate"
    };
    ok &= exact_ok && matches != "neither candidate";
    parts.push(format!("a_CM = {a_cm:.6} matches {matches}"));
    check(ok, parts.join(", "), parts.join(", "))
}

/// Printed offsets carry 4 significant digits; returns the value and half
/// a unit in its last place.
fn printed(s: &str) -> (f64, f64) {
    let (mant, exp) = match s.split_once('e') {
        Some((m, e)) => (m, e.parse::<i32>().unwrap()),
        None => (s, 0),
    };
    let decimals = mant.split_once('.').map_or(0, |(_, d)| d.len()) as i32;
    (s.parse().unwrap(), 0.5 * 10f64.powi(exp - decimals))
}

fn table_one() -> Outcome {
    let rows = [
        (6, 2.546602, "-0.07143"),
        (7, 2.677815, "0.05978"),
        (8, 2.594829, "-0.02321"),
        (9, 2.636118, "0.01808"),
        (10, 2.609130, "-0.8904e-2"),
        (11, 2.624356, "0.6322e-2"),
        (12, 2.614541, "-3.493e-3"),
        (13, 2.620356, "2.322e-3"),
        (14, 2.616673, "-1.361e-3"),
        (15, 2.618905, "0.8713e-3"),
        (16, 2.617509, "-0.5254e-3"),
        (17, 2.618364, "3.301e-4"),
        (18, 2.617832, "-2.017e-4"),
        (19, 2.618160, "1.256e-4"),
        (20, 2.617957, "-0.7725e-4"),
    ];
    let mut worst: f64 = 0.0;
    let mut bad = Vec::new();
    for (n, qz, off) in rows {
        let report = all_roots(&family_poly(spec(Family::B, n)).unwrap(), DEFAULT_TOL).unwrap();
        let z = report.nearest_real_to_golden().unwrap().value;
        let offset = z - GOLDEN_POINT_F64;
        let (want_off, half_ulp) = printed(off);
        worst = worst.max((z - qz).abs());
        let sign_ok = offset.signum() == want_off.signum() && offset.signum() == if n % 2 == 0 { -1.0 } else { 1.0 };
        if (z - qz).abs() > TOL_TABLE || !sign_ok || (offset - want_off).abs() > half_ulp + 1e-12 {
            bad.push(format!("n={n}: {z:.7} ({offset:+.4e})"));
        }
    }
    check(
        bad.is_empty(),
        format!("15 rows, max |q_z - printed| = {worst:.2e}, offsets alternate"),
        format!("rows off: {bad:?}"),
    )
}

fn complex_pair() -> Outcome {
    let p = &IntPoly::falling_factorial(3) * &f_cm();
    let r = all_roots(&p, DEFAULT_TOL).unwrap();
    let n = r.nearest_to_golden.clone().unwrap();
    let ok = r.converged
        && n.is_real == Realness::Complex
        && (n.re - 2.641998).abs() <= TOL_PAIR
        && (n.im - 0.014795).abs() <= TOL_PAIR
        && (n.distance - 0.028163).abs() <= TOL_PAIR;
    let msg = format!("nearest {:.7} ± {:.7}i, distance {:.7}, {:?}", n.re, n.im, n.distance, n.is_real);
    check(ok, msg.clone(), msg)
}

fn woodall() -> Outcome {
    let p = &IntPoly::falling_factorial(4) * &ce12_octic();
    let r = interval_checks(&p);
    let ok = r.woodall == 1
        && r.woodall_counterexample
        && (r.woodall_roots[0] - 2.81889716).abs() <= TOL_WOODALL
        && (r.q_m - 2.6778146).abs() <= TOL_WOODALL;
    let msg = format!("{} root(s) in (q_m, 3): {:?}, q_m = {:.9}", r.woodall, r.woodall_roots, r.q_m);
    check(ok, msg.clone(), msg)
}

struct CorpusStats {
    count: usize,
    zero_free_failures: Vec<String>,
    violations: Vec<String>,
    saturated: Vec<String>,
    min_r: f64,
    max_r: f64,
}

fn corpus_stats() -> &'static CorpusStats {
    use std::sync::OnceLock;
    static STATS: OnceLock<CorpusStats> = OnceLock::new();
    STATS.get_or_init(|| {
        let corpus = triangulation_corpus(SEED, CORPUS_TRIANGULATIONS, CORPUS_MAX_N);
        let mut s = CorpusStats {
            count: 0,
            zero_free_failures: Vec::new(),
            violations: Vec::new(),
            saturated: Vec::new(),
            min_r: f64::INFINITY,
            max_r: 0.0,
        };
        let mut engine = ChromaticEngine::new();
        for t in corpus.iter().filter(|t| t.is_valid()) {
            s.count += 1;
            let p = engine.chromatic_poly(&t.graph).unwrap();
            if !interval_checks(&p).zero_free() {
                s.zero_free_failures.push(t.origin.clone());
            }
            let r = tutte_ratio(&p, t.graph.n()).unwrap();
            s.min_r = s.min_r.min(r.ratio_f64);
            s.max_r = s.max_r.max(r.ratio_f64);
            if r.violation {
                s.violations.push(t.origin.clone());
            }
            if r.saturated {
                s.saturated.push(t.origin.clone());
            }
        }
        s
    })
}

fn zero_free() -> Outcome {
    let s = corpus_stats();
    check(
        s.count >= 500 && s.zero_free_failures.is_empty(),
        format!("{} validated triangulations, no zeros on the guarded intervals", s.count),
        format!("{} triangulations, failures: {:?}", s.count, s.zero_free_failures),
    )
}

fn tutte_bound_suite() -> Outcome {
    let s = corpus_stats();
    let saturation_ok = s.saturated.iter().all(|o| o == "R_1") && !s.saturated.is_empty();
    check(
        s.count >= 500 && s.violations.is_empty() && saturation_ok,
        format!("{} triangulations, r in [{:.4}, {:.4}], equality only at K3", s.count, s.min_r, s.max_r),
        format!("violations {:?}, saturated {:?}", s.violations, s.saturated),
    )
}

fn entropy() -> Outcome {
    let q = |k: i64| GoldenValue::from_int(k);
    let w_i = family_entropy(Family::I, &q(4), LimitOrder::Nq).unwrap().w;
    let w_tc3 = family_entropy(Family::TC, &q(3), LimitOrder::Nq).unwrap().w;
    let above = family_entropy(Family::TC, &GoldenValue::from_ints(31, 0, 10), LimitOrder::Nq).unwrap().w;
    let below = golden_chroma::arith::rational_to_f64(&lambda_tc().eval_rational(&golden_chroma::arith::rat(29, 10)))
        .abs()
        .cbrt();
    let g = GoldenValue::golden_point();
    let seq = empirical_w(Family::B, &g, 6..=200).unwrap();
    let limit = seq.ratio_limit.unwrap();
    let raw = seq.points.last().unwrap().value;
    let qn = family_entropy(Family::B, &g, LimitOrder::Qn).unwrap().w;
    let tau_m1 = tau_power(-1).to_f64();
    let ok = (w_i - 1.29155).abs() <= TOL_ENTROPY
        && w_tc3 == 1.0
        && above > 1.0
        && below < 1.0
        && (limit - tau_m1).abs() <= TOL_NQ_LIMIT
        && qn == 1.0;
    let msg = format!(
        "W(I,4) = {w_i:.6}; W(TC): {below:.4} | 1 | {above:.4}; B at golden point: n-limit {limit:.6} (raw n=200 {raw:.4}), dominance {qn}"
    );
    check(ok, msg.clone(), msg)
}

fn locus() -> Outcome {
    let grid = Grid { re_min: 1.0, re_max: 4.0, im_min: -2.0, im_max: 2.0, res: 64 };
    let scan = b_locus_scan(grid, None).unwrap();
    let h = grid.cell();
    let half = 3f64.sqrt() / 2.0;
    let mut segment_ok = true;
    let mut checked = 0;
    for j in -128..=128 {
        let im = j as f64 / 64.0;
        if im.abs() > half {
            checked += 1;
            segment_ok &= scan.points.iter().any(|p| p.re == 2.5 && p.im == im && p.pair == (1, 2));
        }
    }
    let triples_ok = scan.triple_points.len() == 2
        && [half, -half]
            .iter()
            .all(|&y| scan.triple_points.iter().any(|&(re, im)| (re - 2.5).abs() <= 2.0 * h && (im - y).abs() <= 2.0 * h));
    let qc_ok = scan.q_c.is_some_and(|q| (q - 3.0).abs() <= h);
    let sound = scan.points.iter().all(|p| b_locus_pair(p.re, p.im, scan.tol) == Some(p.pair));
    let msg = format!(
        "{} points, segment {checked}/{checked} marked: {segment_ok}, triple points {:?}, q_c = {:?}",
        scan.points.len(),
        scan.triple_points,
        scan.q_c
    );
    check(segment_ok && triples_ok && qc_ok && sound, msg.clone(), msg)
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("exact saturation and base ratios", base_ratios),
        ("engine-oracle equivalence", engine_oracles),
        ("family cross-checks", family_crosscheck),
        ("golden evaluations", golden_evaluations),
        ("ratio formulas", ratio_formulas),
        ("asymptotic constants", asymptotic_constants),
        ("bipyramid nearest real zeros", table_one),
        ("complex pair nearest the golden point", complex_pair),
        ("Woodall counterexample", woodall),
        ("zero-free intervals on the corpus", zero_free),
        ("Tutte bound on the corpus", tutte_bound_suite),
        ("entropy and order of limits", entropy),
        ("bipyramid locus scan", locus),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({secs:.1}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({secs:.1}s): {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
