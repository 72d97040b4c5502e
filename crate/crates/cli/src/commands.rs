use std::path::Path;

use serde::{Deserialize, Serialize};

use golden_chroma::analysis::{
    all_roots, b_locus_scan, family_entropy, locus_csv, sig10, tutte_ratio, zeros_csv, Grid, LimitOrder,
    NearestZero, GOLDEN_POINT_F64,
};
use golden_chroma::arith::{parse_rational, GoldenValue, IntPoly};
use golden_chroma::chroma::ChromaticEngine;
use golden_chroma::corpus::{apollonian_walk, family_member, flip_walk, k4, rng, Triangulation};
use golden_chroma::families::{family_graph, family_n, family_poly, Family, FamilySpec};
use golden_chroma::graph::Graph;

use crate::output::{emit, json};
use crate::{CliError, Command, Format, Generator, Order, Sink, Source};

/// Family members in a sweep are capped at this many vertices.
const SWEEP_MAX_N: usize = 20;

#[derive(Deserialize)]
#[serde(untagged)]
enum InputDoc {
    Graph(Graph),
    Poly(IntPoly),
}

struct Resolved {
    label: String,
    n: usize,
    edges: Option<usize>,
    poly: IntPoly,
}

fn parse_family(s: &str) -> Result<Family, CliError> {
    s.parse::<Family>().map_err(|e| CliError::Invalid(e.to_string()))
}

fn engine_poly(g: &Graph, budget: u64) -> Result<IntPoly, CliError> {
    Ok(ChromaticEngine::new().with_budget(budget).chromatic_poly(g)?)
}

fn resolve(source: &Source, budget: u64) -> Result<Resolved, CliError> {
    match (&source.family, &source.input) {
        (Some(_), Some(_)) => Err(CliError::Invalid("give either --family or --in, not both".into())),
        (None, None) => Err(CliError::Invalid("an input is required: --family/--param or --in".into())),
        (Some(f), None) => {
            let family = parse_family(f)?;
            let param = match (family, source.param) {
                (Family::CE12, _) => 0,
                (_, Some(p)) => p,
                (_, None) => return Err(CliError::Invalid(format!("--param is required for family {family}"))),
            };
            let spec = FamilySpec::new(family, param)?;
            let closed = family_poly(spec)?;
            let n = family_n(spec);
            if !family.has_graph() {
                return Ok(Resolved { label: spec.to_string(), n, edges: None, poly: closed });
            }
            let (g, _) = family_graph(spec)?;
            let poly = engine_poly(&g, budget)?;
            if poly != closed {
                return Err(CliError::Invariant(format!("engine and closed form disagree for {spec}")));
            }
            Ok(Resolved { label: spec.to_string(), n, edges: Some(g.edge_count()), poly })
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)?;
            let doc: InputDoc = serde_json::from_str(&text)
                .map_err(|e| CliError::Invalid(format!("{}: not a graph or polynomial: {e}", path.display())))?;
            let label = path.display().to_string();
            match doc {
                InputDoc::Graph(g) => {
                    let poly = engine_poly(&g, budget)?;
                    Ok(Resolved { label, n: g.n(), edges: Some(g.edge_count()), poly })
                }
                InputDoc::Poly(poly) => {
                    let n = poly.degree().ok_or_else(|| CliError::Invalid("zero polynomial".into()))?;
                    Ok(Resolved { label, n, edges: None, poly })
                }
            }
        }
    }
}

fn format_of(sink: &Sink, default: Format) -> Format {
    sink.format.unwrap_or(default)
}

fn out_path(sink: &Sink) -> Option<&Path> {
    sink.out.as_deref()
}

fn check_tol(tol: f64) -> Result<(), CliError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(CliError::Invalid(format!("tolerance must be positive, got {tol}")))
    }
}

pub fn run(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::Chromatic { source, sink, budget } => chromatic(&source, &sink, budget),
        Command::Report { source, sink, budget, tol } => report(&source, &sink, budget, tol),
        Command::TableBn { n_min, n_max, sink, tol } => table_bn(n_min, n_max, &sink, tol),
        Command::Boundcheck { generator, count, seed, sink, budget } => boundcheck(generator, count, seed, &sink, budget),
        Command::Zeros { source, sink, tol, budget } => zeros(&source, &sink, tol, budget),
        Command::Locus { grid, res, tol, sink } => locus(&grid, res, tol, &sink),
        Command::Entropy { family, q, order, sink } => entropy(&family, &q, order, &sink),
    }
}

#[derive(Serialize)]
struct ChromaticOut<'a> {
    source: &'a str,
    n: usize,
    edges: Option<usize>,
    poly: &'a IntPoly,
    display: String,
}

fn chromatic(source: &Source, sink: &Sink, budget: u64) -> Result<(), CliError> {
    let r = resolve(source, budget)?;
    let text = match format_of(sink, Format::Json) {
        Format::Json => json(&ChromaticOut {
            source: &r.label,
            n: r.n,
            edges: r.edges,
            poly: &r.poly,
            display: r.poly.to_string(),
        })?,
        Format::Csv => {
            let mut s = String::from("power,coefficient\n");
            for (k, c) in r.poly.coeffs().iter().enumerate() {
                s.push_str(&format!("{k},{c}\n"));
            }
            s
        }
    };
    emit(out_path(sink), &text)
}

#[derive(Serialize)]
struct NearestReal {
    value: f64,
    offset: f64,
}

#[derive(Serialize)]
struct ReportOut<'a> {
    source: &'a str,
    n: usize,
    value: GoldenValue,
    value_f64: f64,
    bound: GoldenValue,
    bound_f64: f64,
    ratio: GoldenValue,
    ratio_f64: f64,
    violation: bool,
    saturated: bool,
    nearest: Option<NearestZero>,
    nearest_real: Option<NearestReal>,
    roots_converged: bool,
}

fn report(source: &Source, sink: &Sink, budget: u64, tol: f64) -> Result<(), CliError> {
    check_tol(tol)?;
    let r = resolve(source, budget)?;
    let ratio = tutte_ratio(&r.poly, r.n)?;
    let roots = all_roots(&r.poly, tol)?;
    let out = ReportOut {
        source: &r.label,
        n: r.n,
        value_f64: ratio.value_f64,
        bound_f64: ratio.bound_f64,
        ratio_f64: ratio.ratio_f64,
        violation: ratio.violation,
        saturated: ratio.saturated,
        value: ratio.value,
        bound: ratio.bound,
        ratio: ratio.ratio,
        nearest: roots.nearest_to_golden.clone(),
        nearest_real: roots
            .nearest_real_to_golden()
            .map(|z| NearestReal { value: z.value, offset: z.value - GOLDEN_POINT_F64 }),
        roots_converged: roots.converged,
    };
    let text = match format_of(sink, Format::Json) {
        Format::Json => json(&out)?,
        Format::Csv => {
            let nz = out.nearest.as_ref();
            format!(
                "source,n,value,bound,ratio,violation,nearest_re,nearest_im,distance,is_real\n{},{},{},{},{},{},{},{},{},{}\n",
                out.source,
                out.n,
                sig10(out.value_f64),
                sig10(out.bound_f64),
                sig10(out.ratio_f64),
                out.violation,
                nz.map_or(String::new(), |z| sig10(z.re)),
                nz.map_or(String::new(), |z| sig10(z.im)),
                nz.map_or(String::new(), |z| sig10(z.distance)),
                nz.map_or(String::new(), |z| format!("{:?}", z.is_real).to_lowercase()),
            )
        }
    };
    emit(out_path(sink), &text)
}

#[derive(Serialize)]
struct TableRow {
    n: i64,
    q_z: f64,
    offset: f64,
}

fn table_bn(n_min: i64, n_max: i64, sink: &Sink, tol: f64) -> Result<(), CliError> {
    check_tol(tol)?;
    if n_min < 6 || n_max < n_min {
        return Err(CliError::Invalid(format!("need 6 <= n_min <= n_max, got {n_min}..{n_max}")));
    }
    let mut rows = Vec::new();
    for n in n_min..=n_max {
        let p = family_poly(FamilySpec::new(Family::B, n)?)?;
        let roots = all_roots(&p, tol)?;
        let z = roots
            .nearest_real_to_golden()
            .ok_or_else(|| CliError::Invariant(format!("B_{n} has no real zeros")))?;
        rows.push(TableRow { n, q_z: z.value, offset: z.value - GOLDEN_POINT_F64 });
    }
    let text = match format_of(sink, Format::Csv) {
        Format::Json => json(&rows)?,
        Format::Csv => {
            let mut s = String::from("n,q_z,offset\n");
            for r in &rows {
                s.push_str(&format!("{},{},{}\n", r.n, sig10(r.q_z), sig10(r.offset)));
            }
            s
        }
    };
    emit(out_path(sink), &text)
}

#[derive(Serialize)]
struct BoundRow {
    origin: String,
    n: usize,
    ratio: GoldenValue,
    ratio_f64: f64,
}

#[derive(Serialize)]
struct BoundOut {
    generator: String,
    seed: u64,
    count: usize,
    checked: usize,
    min_ratio: f64,
    max_ratio: f64,
    saturated: Vec<String>,
    violations: Vec<String>,
    rows: Vec<BoundRow>,
}

fn generate(generator: Generator, count: usize, seed: u64) -> Result<Vec<Triangulation>, CliError> {
    if count == 0 {
        return Err(CliError::Invalid("--count must be at least 1".into()));
    }
    let mut r = rng(seed);
    Ok(match generator {
        Generator::Families => {
            let mut out = Vec::new();
            for f in Family::ALL.into_iter().filter(|f| f.has_graph()) {
                let (alpha, beta) = f.vertex_relation();
                for p in f.min_param()..=count as i64 {
                    if alpha * p + beta <= SWEEP_MAX_N as i64 {
                        out.extend(family_member(f, p));
                    }
                }
            }
            out
        }
        Generator::Apollonian => apollonian_walk(&k4(), count, &mut r),
        Generator::Flip => {
            let start = family_member(Family::TC, 4).expect("TC_4");
            flip_walk(&start, count, &mut r)
        }
    })
}

fn boundcheck(generator: Generator, count: usize, seed: u64, sink: &Sink, budget: u64) -> Result<(), CliError> {
    let corpus = generate(generator, count, seed)?;
    let mut out = BoundOut {
        generator: format!("{generator:?}").to_lowercase(),
        seed,
        count,
        checked: 0,
        min_ratio: f64::INFINITY,
        max_ratio: 0.0,
        saturated: Vec::new(),
        violations: Vec::new(),
        rows: Vec::new(),
    };
    let mut invalid = Vec::new();
    let mut engine = ChromaticEngine::new().with_budget(budget);
    for t in &corpus {
        if !t.is_valid() {
            invalid.push(t.origin.clone());
            continue;
        }
        let p = engine.chromatic_poly(&t.graph)?;
        let r = tutte_ratio(&p, t.graph.n())?;
        out.checked += 1;
        out.min_ratio = out.min_ratio.min(r.ratio_f64);
        out.max_ratio = out.max_ratio.max(r.ratio_f64);
        if r.violation {
            out.violations.push(t.origin.clone());
        }
        if r.saturated {
            out.saturated.push(t.origin.clone());
        }
        out.rows.push(BoundRow { origin: t.origin.clone(), n: t.graph.n(), ratio_f64: r.ratio_f64, ratio: r.ratio });
    }
    let text = match format_of(sink, Format::Json) {
        Format::Json => json(&out)?,
        Format::Csv => {
            let mut s = String::from("origin,n,ratio\n");
            for r in &out.rows {
                s.push_str(&format!("{},{},{}\n", r.origin, r.n, sig10(r.ratio_f64)));
            }
            s
        }
    };
    emit(out_path(sink), &text)?;
    if !invalid.is_empty() {
        return Err(CliError::Invariant(format!("generator produced invalid triangulations: {invalid:?}")));
    }
    if !out.violations.is_empty() {
        return Err(CliError::Invariant(format!("Tutte bound violated by {:?}", out.violations)));
    }
    Ok(())
}

fn zeros(source: &Source, sink: &Sink, tol: f64, budget: u64) -> Result<(), CliError> {
    check_tol(tol)?;
    let r = resolve(source, budget)?;
    let roots = all_roots(&r.poly, tol)?;
    if !roots.converged {
        eprintln!("warning: complex roots did not reach tolerance {tol}; partial results");
    }
    let text = match format_of(sink, Format::Csv) {
        Format::Json => json(&roots)?,
        Format::Csv => zeros_csv(&roots),
    };
    emit(out_path(sink), &text)
}

fn parse_grid(s: &str, res: u32) -> Result<Grid, CliError> {
    let v: Vec<f64> = s
        .split(',')
        .map(|x| x.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Invalid(format!("--grid: {e}")))?;
    match v.as_slice() {
        &[re_min, re_max, im_min, im_max] => Ok(Grid { re_min, re_max, im_min, im_max, res }),
        _ => Err(CliError::Invalid("--grid expects re_min,re_max,im_min,im_max".into())),
    }
}

fn locus(grid: &str, res: u32, tol: Option<f64>, sink: &Sink) -> Result<(), CliError> {
    if let Some(t) = tol {
        check_tol(t)?;
    }
    let scan = b_locus_scan(parse_grid(grid, res)?, tol)?;
    let text = match format_of(sink, Format::Csv) {
        Format::Json => json(&scan)?,
        Format::Csv => locus_csv(&scan),
    };
    emit(out_path(sink), &text)
}

fn parse_q(s: &str) -> Result<GoldenValue, CliError> {
    if s.eq_ignore_ascii_case("golden") {
        return Ok(GoldenValue::golden_point());
    }
    Ok(GoldenValue::from_rational(parse_rational(s)?))
}

fn entropy(family: &str, q: &str, order: Order, sink: &Sink) -> Result<(), CliError> {
    let family = parse_family(family)?;
    let order = match order {
        Order::Qn => LimitOrder::Qn,
        Order::Nq => LimitOrder::Nq,
    };
    let report = family_entropy(family, &parse_q(q)?, order)?;
    let text = match format_of(sink, Format::Csv) {
        Format::Json => json(&report)?,
        Format::Csv => format!(
            "family,q,order,w,s0,limit_order\n{},{},{},{},{},{}\n",
            report.family,
            q,
            format!("{:?}", report.order).to_lowercase(),
            sig10(report.w),
            sig10(report.s0),
            serde_json::to_value(report.limit_order).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default(),
        ),
    };
    emit(out_path(sink), &text)
}
