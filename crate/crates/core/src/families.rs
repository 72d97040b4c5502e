//! The recursive families of planar triangulations: explicit graphs with
//! face certificates where the adjacency is known, and closed-form
//! chromatic polynomials `Σ c_j λ_j^(a·p + b)` for all of them.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::IntPoly;
use crate::error::FamilyError;
use crate::graph::{FaceCertificate, Graph, StandardGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `P_m + P_2`
    R,
    /// cylindrical triangular strip of width 3, `m` layers
    TC,
    /// iterated icosahedra
    I,
    /// bipyramids `K̄_2 + C_{n-2}`
    B,
    H,
    CM,
    CE12,
}

impl Family {
    pub const ALL: [Family; 7] = [Family::R, Family::TC, Family::I, Family::B, Family::H, Family::CM, Family::CE12];

    pub fn name(self) -> &'static str {
        match self {
            Family::R => "R",
            Family::TC => "TC",
            Family::I => "I",
            Family::B => "B",
            Family::H => "H",
            Family::CM => "CM",
            Family::CE12 => "CE12",
        }
    }

    /// Smallest admissible parameter (CE12 has none and uses 0).
    pub fn min_param(self) -> i64 {
        match self {
            Family::R | Family::I | Family::CM => 1,
            Family::TC => 2,
            Family::B => 5,
            Family::H => 8,
            Family::CE12 => 0,
        }
    }

    /// `(α, β)` in `n = α·param + β`.
    pub fn vertex_relation(self) -> (i64, i64) {
        match self {
            Family::R => (1, 2),
            Family::TC => (3, 0),
            Family::I => (9, 3),
            Family::B | Family::H => (1, 0),
            Family::CM => (8, 3),
            Family::CE12 => (0, 12),
        }
    }

    pub fn param_name(self) -> ParamName {
        match self {
            Family::B | Family::H => ParamName::N,
            _ => ParamName::M,
        }
    }

    pub fn has_graph(self) -> bool {
        matches!(self, Family::R | Family::TC | Family::I | Family::B)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

/// A family member: `m` for R/TC/I/CM, `n` for B/H, ignored for CE12.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub param: i64,
}

impl FamilySpec {
    pub fn new(family: Family, param: i64) -> Result<Self, FamilyError> {
        let param = if family == Family::CE12 { 0 } else { param };
        if param < family.min_param() {
            return Err(FamilyError::InvalidParameter { family: family.name(), param });
        }
        Ok(FamilySpec { family, param })
    }

    pub fn n(&self) -> usize {
        family_n(*self)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family == Family::CE12 {
            write!(f, "CE12")
        } else {
            write!(f, "{}_{}", self.family, self.param)
        }
    }
}

/// Vertex count `α·param + β`.
pub fn family_n(spec: FamilySpec) -> usize {
    let (alpha, beta) = spec.family.vertex_relation();
    (alpha * spec.param + beta) as usize
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParamName {
    M,
    N,
}

/// Exponent `a·param + b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Affine {
    pub a: i64,
    pub b: i64,
}

impl Affine {
    pub fn at(&self, param: i64) -> i64 {
        self.a * param + self.b
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormTerm {
    pub c: IntPoly,
    pub lambda: IntPoly,
    pub exp: Affine,
}

/// `P = Σ_j c_j(q) λ_j(q)^(a_j·param + b_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticForm {
    pub terms: Vec<FormTerm>,
    pub param: ParamName,
}

impl ChromaticForm {
    /// Expands the form at `param`; every exponent must be nonnegative.
    pub fn expand(&self, param: i64) -> Result<IntPoly, FamilyError> {
        let mut acc = IntPoly::zero();
        for t in &self.terms {
            let e = t.exp.at(param);
            if e < 0 {
                return Err(FamilyError::InvalidParameter { family: "form", param });
            }
            acc = &acc + &(&t.c * &t.lambda.pow(e as u32));
        }
        Ok(acc)
    }
}

fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

fn k3() -> IntPoly {
    IntPoly::falling_factorial(3)
}

pub fn lambda_tc() -> IntPoly {
    p(&[-32, 29, -9, 1])
}

/// Degree-8 cofactor of `q - 3` in the icosahedron's `f_I`.
pub fn icosahedron_octic() -> IntPoly {
    p(&[20170, -40240, 36408, -19698, 6999, -1670, 260, -24, 1])
}

/// `f_I = (q - 3) · octic`, so that `P(I_m) = q(q-1)(q-2) f_I^m`.
pub fn f_icosahedron() -> IntPoly {
    &IntPoly::linear(3) * &icosahedron_octic()
}

pub fn f_cm() -> IntPoly {
    p(&[13360, -30250, 30418, -17818, 6674, -1641, 259, -24, 1])
}

/// Degree-8 factor of `P(G_ce12)` beyond `q(q-1)(q-2)(q-3)`.
pub fn ce12_octic() -> IntPoly {
    p(&[14314, -31915, 31668, -18337, 6800, -1658, 260, -24, 1])
}

/// `q^3 - 9q^2 + 30q - 35`, whose real root bounds the Woodall interval.
pub fn woodall_cubic() -> IntPoly {
    p(&[-35, 30, -9, 1])
}

fn three_lambda() -> [IntPoly; 3] {
    [IntPoly::linear(2), IntPoly::linear(3), IntPoly::constant(-1)]
}

pub fn family_form(family: Family) -> ChromaticForm {
    let single = |lambda: IntPoly, exp: Affine| ChromaticForm {
        terms: vec![FormTerm { c: k3(), lambda, exp }],
        param: family.param_name(),
    };
    let q = IntPoly::q();
    let q2_3q_1 = p(&[1, -3, 1]);
    match family {
        Family::R => single(IntPoly::linear(3), Affine { a: 1, b: -1 }),
        Family::TC => single(lambda_tc(), Affine { a: 1, b: -1 }),
        Family::I => single(f_icosahedron(), Affine { a: 1, b: 0 }),
        Family::CM => single(f_cm(), Affine { a: 1, b: 0 }),
        Family::CE12 => single(&IntPoly::linear(3) * &ce12_octic(), Affine { a: 0, b: 1 }),
        Family::B => {
            let cs = [q.clone(), &q * &IntPoly::linear(1), &q * &q2_3q_1];
            let exp = Affine { a: 1, b: -2 };
            ChromaticForm {
                terms: cs.into_iter().zip(three_lambda()).map(|(c, lambda)| FormTerm { c, lambda, exp }).collect(),
                param: ParamName::N,
            }
        }
        Family::H => {
            let c1 = &q * &IntPoly::linear(3).pow(3);
            let c2 = &(&q * &IntPoly::linear(1)) * &woodall_cubic();
            let c3 = -&(&(&(&q * &IntPoly::linear(3)) * &IntPoly::linear(5)) * &q2_3q_1);
            let exp = Affine { a: 1, b: -5 };
            ChromaticForm {
                terms: [c1, c2, c3].into_iter().zip(three_lambda()).map(|(c, lambda)| FormTerm { c, lambda, exp }).collect(),
                param: ParamName::N,
            }
        }
    }
}

/// Closed-form chromatic polynomial of a family member, with its degree
/// checked against the vertex count.
pub fn family_poly(spec: FamilySpec) -> Result<IntPoly, FamilyError> {
    let poly = family_form(spec.family).expand(spec.param)?;
    debug_assert_eq!(poly.degree(), Some(family_n(spec)));
    if poly.degree() != Some(family_n(spec)) || poly.leading().is_zero() {
        return Err(FamilyError::InvalidParameter { family: spec.family.name(), param: spec.param });
    }
    Ok(poly)
}

/// The regular icosahedron: apex 0, upper ring 1..=5, lower ring 6..=10,
/// bottom 11. Face `[0, 1, 2]` is listed first and used as the outer face.
pub fn icosahedron() -> (Graph, FaceCertificate) {
    let up = |k: usize| 1 + k % 5;
    let lo = |k: usize| 6 + k % 5;
    let mut faces = Vec::new();
    for k in 0..5 {
        faces.push([0, up(k), up(k + 1)]);
        faces.push([up(k + 1), up(k), lo(k + 1)]);
        faces.push([up(k), lo(k), lo(k + 1)]);
        faces.push([11, lo(k + 1), lo(k)]);
    }
    faces.sort_by_key(|f| {
        let mut s = *f;
        s.sort_unstable();
        s
    });
    let mut g = Graph::new(12);
    for f in &faces {
        for (a, b) in [(f[0], f[1]), (f[1], f[2]), (f[0], f[2])] {
            g.add_edge(a, b).expect("valid vertex");
        }
    }
    (g, FaceCertificate::new(faces))
}

fn sorted(f: [usize; 3]) -> [usize; 3] {
    let mut s = f;
    s.sort_unstable();
    s
}

/// Glues a copy of `base` (outer face `base_outer`) into the
/// lexicographically smallest face of `g` other than `outer`.
pub fn glue_into_smallest_interior_face(
    g: &Graph,
    cert: &FaceCertificate,
    outer: [usize; 3],
    base: &Graph,
    base_cert: &FaceCertificate,
    base_outer: [usize; 3],
) -> Result<(Graph, FaceCertificate), FamilyError> {
    let target = cert
        .sorted_faces()
        .into_iter()
        .find(|&f| f != sorted(outer))
        .ok_or(FamilyError::UnsupportedFamily("no interior face"))?;
    let (glued, map) = g.glue_on_triangle(target, base, base_outer)?;
    let mut faces: Vec<[usize; 3]> = cert.faces.iter().copied().filter(|&f| sorted(f) != target).collect();
    faces.extend(base_cert.faces.iter().filter(|&&f| sorted(f) != sorted(base_outer)).map(|f| f.map(|v| map[v])));
    Ok((glued, FaceCertificate::new(faces)))
}

/// Explicit graph and face certificate for R, TC, I and B.
pub fn family_graph(spec: FamilySpec) -> Result<(Graph, FaceCertificate), FamilyError> {
    let spec = FamilySpec::new(spec.family, spec.param)?;
    let m = spec.param as usize;
    match spec.family {
        Family::R => {
            let g = Graph::standard(StandardGraph::Path(m))?.join(&Graph::standard(StandardGraph::Path(2))?);
            let (a, b) = (m, m + 1);
            let mut faces = vec![[0, a, b]];
            for i in 1..m {
                faces.push([i - 1, i, a]);
                faces.push([i, i - 1, b]);
            }
            faces.push([m - 1, b, a]);
            Ok((g, FaceCertificate::new(faces)))
        }
        Family::TC => {
            let v = |i: usize, j: usize| 3 * i + j % 3;
            let mut g = Graph::new(3 * m);
            let mut faces = vec![[v(0, 0), v(0, 2), v(0, 1)], [v(m - 1, 0), v(m - 1, 1), v(m - 1, 2)]];
            for i in 0..m {
                for j in 0..3 {
                    g.add_edge(v(i, j), v(i, j + 1))?;
                    if i + 1 < m {
                        g.add_edge(v(i, j), v(i + 1, j))?;
                        g.add_edge(v(i, j), v(i + 1, j + 1))?;
                        faces.push([v(i, j), v(i, j + 1), v(i + 1, j + 1)]);
                        faces.push([v(i, j), v(i + 1, j + 1), v(i + 1, j)]);
                    }
                }
            }
            Ok((g, FaceCertificate::new(faces)))
        }
        Family::I => {
            let (base, base_cert) = icosahedron();
            let outer = [0, 1, 2];
            let (mut g, mut cert) = (base.clone(), base_cert.clone());
            for _ in 1..m {
                (g, cert) = glue_into_smallest_interior_face(&g, &cert, outer, &base, &base_cert, outer)?;
            }
            Ok((g, cert))
        }
        Family::B => {
            let n = m;
            let g = Graph::standard(StandardGraph::Empty(2))?.join(&Graph::standard(StandardGraph::Cycle(n - 2))?);
            let ring = |i: usize| 2 + i % (n - 2);
            let mut faces = Vec::new();
            for i in 0..n - 2 {
                faces.push([0, ring(i), ring(i + 1)]);
                faces.push([1, ring(i + 1), ring(i)]);
            }
            Ok((g, FaceCertificate::new(faces)))
        }
        Family::H | Family::CM | Family::CE12 => Err(FamilyError::UnsupportedFamily(spec.family.name())),
    }
}
