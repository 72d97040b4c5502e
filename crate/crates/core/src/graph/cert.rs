use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{edge, Edge, Graph};
use crate::error::GraphError;

/// Triangular faces of a plane embedding, outer face included.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceCertificate {
    pub faces: Vec<[usize; 3]>,
}

fn same_face(a: [usize; 3], b: [usize; 3]) -> bool {
    let mut a = a;
    let mut b = b;
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

fn face_edges(f: [usize; 3]) -> [Edge; 3] {
    [edge(f[0], f[1]), edge(f[1], f[2]), edge(f[0], f[2])]
}

impl FaceCertificate {
    pub fn new(faces: Vec<[usize; 3]>) -> Self {
        FaceCertificate { faces }
    }

    pub fn position(&self, face: [usize; 3]) -> Option<usize> {
        self.faces.iter().position(|&f| same_face(f, face))
    }

    pub fn contains(&self, face: [usize; 3]) -> bool {
        self.position(face).is_some()
    }

    /// Faces sorted vertex-wise, in lexicographic order.
    pub fn sorted_faces(&self) -> Vec<[usize; 3]> {
        let mut fs: Vec<_> = self
            .faces
            .iter()
            .map(|f| {
                let mut f = *f;
                f.sort_unstable();
                f
            })
            .collect();
        fs.sort_unstable();
        fs
    }

    pub fn relabel(&self, map: &[usize]) -> FaceCertificate {
        FaceCertificate { faces: self.faces.iter().map(|f| f.map(|v| map[v])).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CheckFailure {
    DegenerateFace([usize; 3]),
    FaceEdgeMissing { face: [usize; 3], edge: Edge },
    EdgeFaceCount { edge: Edge, count: usize },
    Euler { n: usize, e: usize, f: usize },
    EdgeCount { n: usize, e: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub failures: Vec<CheckFailure>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the face-list certificate of a claimed planar triangulation:
/// every face edge exists, every edge lies on exactly two faces, Euler's
/// relation holds and `e = 3n - 6`.
pub fn validate_triangulation(g: &Graph, cert: &FaceCertificate) -> ValidationReport {
    let mut failures = Vec::new();
    let mut counts: BTreeMap<Edge, usize> = g.edges().map(|e| (e, 0)).collect();
    for &f in &cert.faces {
        if f.iter().any(|&v| v >= g.n()) || f[0] == f[1] || f[1] == f[2] || f[0] == f[2] {
            failures.push(CheckFailure::DegenerateFace(f));
            continue;
        }
        for e in face_edges(f) {
            match counts.get_mut(&e) {
                Some(c) => *c += 1,
                None => failures.push(CheckFailure::FaceEdgeMissing { face: f, edge: e }),
            }
        }
    }
    for (&e, &count) in &counts {
        if count != 2 {
            failures.push(CheckFailure::EdgeFaceCount { edge: e, count });
        }
    }
    let (n, e, f) = (g.n(), g.edge_count(), cert.faces.len());
    if n as i64 - e as i64 + f as i64 != 2 {
        failures.push(CheckFailure::Euler { n, e, f });
    }
    if n < 3 || e != 3 * n - 6 {
        failures.push(CheckFailure::EdgeCount { n, e });
    }
    ValidationReport { failures }
}

/// Adds a vertex inside `face`, joined to its three corners.
pub fn apollonian_insert(g: &Graph, cert: &FaceCertificate, face: [usize; 3]) -> Result<(Graph, FaceCertificate), GraphError> {
    let pos = cert.position(face).ok_or(GraphError::FaceNotPresent(face))?;
    let [a, b, c] = cert.faces[pos];
    let v = g.n();
    let mut out = g.clone();
    out.n += 1;
    for x in [a, b, c] {
        out.add_edge(x, v)?;
    }
    let mut faces = cert.faces.clone();
    faces[pos] = [a, b, v];
    faces.push([b, c, v]);
    faces.push([c, a, v]);
    Ok((out, FaceCertificate { faces }))
}

/// Replaces edge `uv`, shared by faces `uvx` and `uvy`, with `xy`.
pub fn diagonal_flip(g: &Graph, cert: &FaceCertificate, e: Edge) -> Result<(Graph, FaceCertificate), GraphError> {
    let (u, v) = edge(e.0, e.1);
    if !g.has_edge(u, v) {
        return Err(GraphError::EdgeNotPresent(u, v));
    }
    let incident: Vec<usize> = cert
        .faces
        .iter()
        .enumerate()
        .filter(|(_, f)| f.contains(&u) && f.contains(&v))
        .map(|(i, _)| i)
        .collect();
    if incident.len() != 2 {
        return Err(GraphError::EdgeNotFlippable(u, v));
    }
    let apex = |i: usize| cert.faces[i].iter().copied().find(|&w| w != u && w != v).expect("triangle");
    let (x, y) = (apex(incident[0]), apex(incident[1]));
    if x == y {
        return Err(GraphError::EdgeNotFlippable(u, v));
    }
    if g.has_edge(x, y) {
        return Err(GraphError::FlipWouldCreateParallelEdge(x, y));
    }
    let mut out = g.delete_edge(u, v)?;
    out.add_edge(x, y)?;
    let mut faces = cert.faces.clone();
    faces[incident[0]] = [x, y, u];
    faces[incident[1]] = [y, x, v];
    Ok((out, FaceCertificate { faces }))
}
