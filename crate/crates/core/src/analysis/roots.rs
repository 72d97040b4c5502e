//! Certified real roots and approximated complex roots of integer
//! polynomials, with the zero nearest the golden point.

use serde::{Deserialize, Serialize, Serializer};

use crate::arith::{rat, rational_to_f64, rational_to_string, IntPoly, Rational};
use crate::error::AnalysisError;

use super::aberth::{aberth, im_sign, initial_guesses, residual_and_radius, Ctx, Fx};
use super::sturm::{isolate_real_roots, AlgebraicReal, Endpoint};

pub const DEFAULT_TOL: f64 = 1e-9;
/// Real and complex candidates closer than this are treated as tied.
pub const TIE_TOL: f64 = 1e-12;
const PRECISIONS: [usize; 3] = [64, 256, 1024];

/// `τ + 1` as f64.
pub const GOLDEN_POINT_F64: f64 = 2.618_033_988_749_895;

impl Serialize for AlgebraicReal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("AlgebraicReal", 3)?;
        st.serialize_field("poly", self.poly())?;
        st.serialize_field("lo", &rational_to_string(self.lo()))?;
        st.serialize_field("hi", &rational_to_string(self.hi()))?;
        st.end()
    }
}

fn tol_rational(tol: f64) -> Rational {
    // largest power of two not above tol
    let k = (-tol.log2()).ceil().clamp(1.0, 200.0) as usize;
    Rational::new(1.into(), num_bigint::BigInt::from(1) << k)
}

#[derive(Clone, Debug, Serialize)]
pub struct RealRoot {
    pub root: AlgebraicReal,
    pub value: f64,
    /// `|f(value)|` for the square-free factor `f` carrying the root.
    pub residual: f64,
    pub multiplicity: usize,
}

impl RealRoot {
    fn new(root: AlgebraicReal, multiplicity: usize) -> Self {
        let mid = (root.lo() + root.hi()) / rat(2, 1);
        let residual = rational_to_f64(&root.poly().eval_rational(&mid)).abs();
        RealRoot { value: root.approx(), residual, root, multiplicity }
    }
}

/// Certified real roots of `p` in `(lo, hi]`, each refined to an
/// isolating interval of width at most `tol`.
pub fn real_roots(p: &IntPoly, lo: &Endpoint, hi: &Endpoint, tol: f64) -> Vec<RealRoot> {
    let width = tol_rational(tol);
    let mut out = Vec::new();
    for (f, mult) in p.squarefree_decomposition() {
        for mut r in isolate_real_roots(&f, lo, hi) {
            r.refine_to(&width);
            out.push(RealRoot::new(r, mult));
        }
    }
    out.sort_by(|a, b| a.value.total_cmp(&b.value));
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexRoot {
    pub re: f64,
    pub im: f64,
    /// `|p(z)|` at the reported point, evaluated exactly.
    pub residual: f64,
    /// A true root lies within this distance.
    pub radius: f64,
    pub multiplicity: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Realness {
    Real,
    Complex,
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NearestZero {
    pub re: f64,
    pub im: f64,
    pub distance: f64,
    pub is_real: Realness,
    /// The competing candidate when the classification is a tie.
    pub alternative: Option<(f64, f64)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RootReport {
    pub degree: usize,
    pub real_roots: Vec<RealRoot>,
    /// Non-real roots, each conjugate pair listed upper half-plane first.
    pub complex_roots: Vec<ComplexRoot>,
    pub nearest_to_golden: Option<NearestZero>,
    pub converged: bool,
    pub precision_bits: u32,
}

impl RootReport {
    /// Total count with multiplicity; equals the degree.
    pub fn root_count(&self) -> usize {
        self.real_roots.iter().map(|r| r.multiplicity).sum::<usize>()
            + self.complex_roots.iter().map(|r| r.multiplicity).sum::<usize>()
    }

    pub fn nearest_real_to_golden(&self) -> Option<&RealRoot> {
        self.real_roots
            .iter()
            .min_by(|a, b| (a.value - GOLDEN_POINT_F64).abs().total_cmp(&(b.value - GOLDEN_POINT_F64).abs()))
    }
}

struct FactorRoots {
    complex: Vec<ComplexRoot>,
    ok: bool,
    bits: usize,
}

/// Non-real roots of a square-free factor with `real_count` real roots.
fn complex_roots_of_factor(f: &IntPoly, real_count: usize, mult: usize, tol: f64) -> FactorRoots {
    let d = f.degree().unwrap_or(0);
    if d == real_count {
        return FactorRoots { complex: Vec::new(), ok: true, bits: 0 };
    }
    let first = Ctx { prec: PRECISIONS[0] };
    let mut z: Vec<Fx> = initial_guesses(f).into_iter().map(|(x, y)| first.fixed(x, y)).collect();
    let mut from = PRECISIONS[0];
    let mut last = FactorRoots { complex: Vec::new(), ok: false, bits: 0 };
    for &prec in &PRECISIONS {
        z = aberth(f, &z, from, prec, 300 + 20 * d);
        from = prec;
        let ctx = Ctx { prec };
        let mut scored: Vec<(f64, &Fx)> = z.iter().map(|w| (ctx.to_f64(w).1.abs(), w)).collect();
        scored.sort_by(|a, b| a.0.total_cmp(&b.0));
        let nonreal: Vec<&Fx> = scored[real_count..].iter().map(|s| s.1).collect();
        let mut upper = Vec::new();
        let mut lower = Vec::new();
        let mut ok = true;
        for w in nonreal {
            let (re, im) = ctx.to_f64(w);
            let (residual, radius) = residual_and_radius(f, w, prec);
            // the inclusion disc must stay off the real axis and be tight
            ok &= radius <= tol && radius < im.abs();
            let root = ComplexRoot { re, im, residual, radius, multiplicity: mult };
            match im_sign(w) {
                1 => upper.push(root),
                _ => lower.push(root),
            }
        }
        ok &= upper.len() == lower.len();
        let mut complex = Vec::new();
        if upper.len() == lower.len() {
            upper.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
            for u in upper {
                // partner is the lower root closest to the conjugate
                let (idx, _) = lower
                    .iter()
                    .enumerate()
                    .map(|(i, l)| (i, (l.re - u.re).hypot(l.im + u.im)))
                    .min_by(|a, b| a.1.total_cmp(&b.1))
                    .expect("paired counts");
                let l = lower.swap_remove(idx);
                let re = (u.re + l.re) / 2.0;
                let im = (u.im - l.im) / 2.0;
                let residual = u.residual.max(l.residual);
                let radius = u.radius.max(l.radius) + (u.re - l.re).hypot(u.im + l.im) / 2.0;
                ok &= radius <= tol;
                complex.push(ComplexRoot { re, im, residual, radius, multiplicity: mult });
                complex.push(ComplexRoot { re, im: -im, residual, radius, multiplicity: mult });
            }
        } else {
            complex.extend(upper);
            complex.extend(lower);
        }
        last = FactorRoots { complex, ok, bits: prec };
        if ok {
            break;
        }
    }
    last
}

fn nearest(real: &[RealRoot], complex: &[ComplexRoot]) -> Option<NearestZero> {
    let g = GOLDEN_POINT_F64;
    let best_real = real.iter().map(|r| (r.value, 0.0, (r.value - g).abs())).min_by(|a, b| a.2.total_cmp(&b.2));
    let best_complex = complex
        .iter()
        .filter(|c| c.im > 0.0)
        .map(|c| (c.re, c.im, (c.re - g).hypot(c.im)))
        .min_by(|a, b| a.2.total_cmp(&b.2));
    let pick = |(re, im, distance): (f64, f64, f64), is_real, alternative| NearestZero {
        re,
        im,
        distance,
        is_real,
        alternative,
    };
    match (best_real, best_complex) {
        (None, None) => None,
        (Some(r), None) => Some(pick(r, Realness::Real, None)),
        (None, Some(c)) => Some(pick(c, Realness::Complex, None)),
        (Some(r), Some(c)) => {
            if (r.2 - c.2).abs() <= TIE_TOL {
                Some(pick(r, Realness::Indeterminate, Some((c.0, c.1))))
            } else if r.2 < c.2 {
                Some(pick(r, Realness::Real, None))
            } else {
                Some(pick(c, Realness::Complex, None))
            }
        }
    }
}

/// All roots of `p`: real ones certified by Sturm sequences, non-real ones
/// by Aberth iteration with precision escalating 64 → 256 → 1024 bits.
/// A report that could not meet `tol` is returned with `converged = false`.
pub fn all_roots(p: &IntPoly, tol: f64) -> Result<RootReport, AnalysisError> {
    let degree = match p.degree() {
        None => return Err(AnalysisError::InvalidParameter("zero polynomial has no roots".into())),
        Some(d) => d,
    };
    if tol.is_nan() || tol <= 0.0 {
        return Err(AnalysisError::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    let fine = rat(1, 1) / Rational::from_integer(num_bigint::BigInt::from(1) << 60);
    let mut real = Vec::new();
    let mut complex = Vec::new();
    let mut converged = true;
    let mut bits = PRECISIONS[0];
    for (f, mult) in p.squarefree_decomposition() {
        if f.degree().unwrap_or(0) == 0 {
            continue;
        }
        let isolated = isolate_real_roots(&f, &Endpoint::NegInf, &Endpoint::PosInf);
        let count = isolated.len();
        for mut r in isolated {
            r.refine_to(&fine);
            real.push(RealRoot::new(r, mult));
        }
        let fr = complex_roots_of_factor(&f, count, mult, tol);
        converged &= fr.ok;
        bits = bits.max(fr.bits);
        complex.extend(fr.complex);
    }
    real.sort_by(|a, b| a.value.total_cmp(&b.value));
    let nearest_to_golden = nearest(&real, &complex);
    Ok(RootReport {
        degree,
        real_roots: real,
        complex_roots: complex,
        nearest_to_golden,
        converged,
        precision_bits: bits as u32,
    })
}

/// Rows `re,im,residual,is_real` with ten significant digits.
pub fn zeros_csv(report: &RootReport) -> String {
    let mut s = String::from("re,im,residual,is_real\n");
    for r in &report.real_roots {
        for _ in 0..r.multiplicity {
            s.push_str(&format!("{},0,{},true\n", sig10(r.value), sig10(r.residual)));
        }
    }
    for c in &report.complex_roots {
        for _ in 0..c.multiplicity {
            s.push_str(&format!("{},{},{},false\n", sig10(c.re), sig10(c.im), sig10(c.residual)));
        }
    }
    s
}

/// Ten significant digits, `0` for zero.
pub fn sig10(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let s = format!("{:.9e}", x);
    let v: f64 = s.parse().unwrap_or(x);
    let mag = v.abs().log10().floor() as i32;
    if (-5..10).contains(&mag) {
        let decimals = (9 - mag).max(0) as usize;
        let t = format!("{:.*}", decimals, v);
        if t.contains('.') {
            t.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            t
        }
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{ce12_octic, f_cm, f_icosahedron, family_poly, Family, FamilySpec};

    #[test]
    fn k4_roots() {
        let r = all_roots(&IntPoly::falling_factorial(4), DEFAULT_TOL).unwrap();
        assert_eq!(r.real_roots.len(), 4);
        assert!(r.complex_roots.is_empty() && r.converged);
        assert_eq!(r.nearest_to_golden.unwrap().re, 3.0);
    }

    #[test]
    fn cm_complex_pair_nearest() {
        let p = &IntPoly::falling_factorial(3) * &f_cm();
        let r = all_roots(&p, DEFAULT_TOL).unwrap();
        assert!(r.converged);
        assert_eq!(r.root_count(), 11);
        let n = r.nearest_to_golden.unwrap();
        assert_eq!(n.is_real, Realness::Complex);
        assert!((n.re - 2.6419975882).abs() < 1e-8 && (n.im - 0.0147954741).abs() < 1e-8);
        assert!((n.distance - 0.028163).abs() < 1e-5);
    }

    #[test]
    fn icosahedron_factor_real_roots() {
        let r = all_roots(&f_icosahedron(), DEFAULT_TOL).unwrap();
        let vals: Vec<f64> = r.real_roots.iter().map(|x| x.value).collect();
        assert_eq!(vals.len(), 3);
        assert!((vals[0] - 2.61819728847).abs() < 1e-9);
        assert!((vals[2] - 3.22245790588).abs() < 1e-9);
        assert_eq!(r.nearest_to_golden.unwrap().is_real, Realness::Real);
    }

    #[test]
    fn ce12_real_roots() {
        let p = &IntPoly::falling_factorial(4) * &ce12_octic();
        let roots = real_roots(&p, &Endpoint::NegInf, &Endpoint::PosInf, 1e-9);
        let want = [0.0, 1.0, 2.0, 2.61461437247, 2.81889716038, 3.0];
        assert_eq!(roots.len(), want.len());
        for (r, w) in roots.iter().zip(want) {
            assert!((r.value - w).abs() < 1e-8);
        }
    }

    #[test]
    fn bipyramid_with_repeated_roots() {
        let p = family_poly(FamilySpec::new(Family::B, 12).unwrap()).unwrap();
        let r = all_roots(&p, DEFAULT_TOL).unwrap();
        assert!(r.converged);
        assert_eq!(r.root_count(), 12);
    }

    #[test]
    fn csv_format() {
        assert_eq!(sig10(2.6419975882123), "2.641997588");
        assert_eq!(sig10(3.0), "3");
        assert_eq!(sig10(-0.0147954741234), "-0.01479547412");
        let r = all_roots(&IntPoly::from_i64s(&[1, 0, 1]), DEFAULT_TOL).unwrap();
        let csv = zeros_csv(&r);
        assert!(csv.starts_with("re,im,residual,is_real\n"));
        assert_eq!(csv.lines().count(), 3);
    }
}
