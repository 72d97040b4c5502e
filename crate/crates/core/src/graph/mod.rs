//! Simple undirected graphs, the editing operations used to build planar
//! triangulations, and face-list certificates for validating them.

mod cert;

pub use cert::{apollonian_insert, diagonal_flip, validate_triangulation, CheckFailure, FaceCertificate, ValidationReport};

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Unordered edge, stored with `u < v`.
pub type Edge = (usize, usize);

pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardGraph {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
}

/// Result of contracting an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContractionOutcome {
    Graph(Graph),
    /// Never produced from a simple graph; kept for callers working with
    /// the general deletion-contraction recurrence.
    LoopProduced,
}

impl ContractionOutcome {
    pub fn into_graph(self) -> Option<Graph> {
        match self {
            ContractionOutcome::Graph(g) => Some(g),
            ContractionOutcome::LoopProduced => None,
        }
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { n, edges: BTreeSet::new() }
    }

    /// Builds a simple graph, rejecting loops and out-of-range vertices.
    /// Repeated edges are merged.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::InvalidParameter(format!("loop at vertex {u}")));
        }
        Ok(self.edges.insert(edge(u, v)))
    }

    pub fn standard(kind: StandardGraph) -> Result<Self, GraphError> {
        let bad = |what: &str| Err(GraphError::InvalidParameter(what.to_string()));
        match kind {
            StandardGraph::Path(m) => {
                if m < 1 {
                    return bad("path needs m >= 1");
                }
                Self::from_edges(m, (1..m).map(|i| (i - 1, i)))
            }
            StandardGraph::Cycle(l) => {
                if l < 3 {
                    return bad("cycle needs l >= 3");
                }
                Self::from_edges(l, (0..l).map(|i| (i, (i + 1) % l)))
            }
            StandardGraph::Complete(p) => {
                if p < 1 {
                    return bad("complete graph needs p >= 1");
                }
                Self::from_edges(p, (0..p).flat_map(|u| (u + 1..p).map(move |v| (u, v))))
            }
            StandardGraph::Empty(p) => {
                if p < 1 {
                    return bad("empty graph needs p >= 1");
                }
                Ok(Graph::new(p))
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&edge(u, v))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.has_edge(u, v)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn is_triangle(&self, t: [usize; 3]) -> bool {
        let [a, b, c] = t;
        t.iter().all(|&x| x < self.n) && self.has_edge(a, b) && self.has_edge(b, c) && self.has_edge(a, c)
    }

    pub fn contains_triangle(&self) -> bool {
        self.edges.iter().any(|&(u, v)| (0..self.n).any(|w| self.has_edge(u, w) && self.has_edge(v, w)))
    }

    /// Join `G + H`: disjoint union plus every edge between the two parts.
    /// Vertices of `h` are shifted by `g.n()`.
    pub fn join(&self, h: &Graph) -> Graph {
        let off = self.n;
        let mut out = Graph::new(self.n + h.n);
        out.edges.extend(self.edges.iter().copied());
        out.edges.extend(h.edges.iter().map(|&(u, v)| (u + off, v + off)));
        for u in 0..self.n {
            for v in 0..h.n {
                out.edges.insert((u, v + off));
            }
        }
        out
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let e = edge(u, v);
        if !self.edges.contains(&e) {
            return Err(GraphError::EdgeNotPresent(e.0, e.1));
        }
        let mut out = self.clone();
        out.edges.remove(&e);
        Ok(out)
    }

    /// `G/e`: identifies the endpoints into the smaller index and shifts
    /// higher indices down by one; parallel edges collapse.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<ContractionOutcome, GraphError> {
        let (keep, gone) = edge(u, v);
        if !self.edges.contains(&(keep, gone)) {
            return Err(GraphError::EdgeNotPresent(keep, gone));
        }
        let relabel = |x: usize| {
            let x = if x == gone { keep } else { x };
            if x > gone {
                x - 1
            } else {
                x
            }
        };
        let mut out = Graph::new(self.n - 1);
        for &(a, b) in &self.edges {
            if (a, b) == (keep, gone) {
                continue;
            }
            let (a, b) = (relabel(a), relabel(b));
            if a == b {
                return Ok(ContractionOutcome::LoopProduced);
            }
            out.edges.insert(edge(a, b));
        }
        Ok(ContractionOutcome::Graph(out))
    }

    /// Glues `h` onto `g` by identifying `th[i]` with `tg[i]`. The result
    /// keeps the labels of `g`; the remaining vertices of `h` follow in
    /// increasing order. Returns the glued graph and the vertex map of `h`.
    pub fn glue_on_triangle(&self, tg: [usize; 3], h: &Graph, th: [usize; 3]) -> Result<(Graph, Vec<usize>), GraphError> {
        if !self.is_triangle(tg) {
            return Err(GraphError::NotATriangle(tg));
        }
        if !h.is_triangle(th) {
            return Err(GraphError::NotATriangle(th));
        }
        let mut map = vec![usize::MAX; h.n];
        for i in 0..3 {
            map[th[i]] = tg[i];
        }
        let mut next = self.n;
        for slot in map.iter_mut() {
            if *slot == usize::MAX {
                *slot = next;
                next += 1;
            }
        }
        let mut out = Graph::new(next);
        out.edges.extend(self.edges.iter().copied());
        out.edges.extend(h.edges.iter().map(|&(a, b)| edge(map[a], map[b])));
        Ok((out, map))
    }

    /// Copy with vertices renamed by `perm` (`perm[old] = new`).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut out = Graph::new(self.n);
        out.edges.extend(self.edges.iter().map(|&(a, b)| edge(perm[a], perm[b])));
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let adj = self.adjacency_lists();
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }
}

#[derive(Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        Graph::from_edges(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v))).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn std(kind: StandardGraph) -> Graph {
        Graph::standard(kind).unwrap()
    }

    #[test]
    fn standard_graphs() {
        let k3 = std(StandardGraph::Complete(3));
        assert_eq!(k3.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
        let c4 = std(StandardGraph::Cycle(4));
        assert_eq!(c4.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        let e2 = std(StandardGraph::Empty(2));
        assert_eq!((e2.n(), e2.edge_count()), (2, 0));
        assert!(Graph::standard(StandardGraph::Cycle(2)).is_err());
        assert!(Graph::standard(StandardGraph::Path(0)).is_err());
    }

    #[test]
    fn joins() {
        let p1 = std(StandardGraph::Path(1));
        let p2 = std(StandardGraph::Path(2));
        assert_eq!(p1.join(&p2), std(StandardGraph::Complete(3)));
        assert_eq!(p2.join(&p2), std(StandardGraph::Complete(4)));
        let b7 = std(StandardGraph::Empty(2)).join(&std(StandardGraph::Cycle(5)));
        assert_eq!((b7.n(), b7.edge_count()), (7, 15));
    }

    #[test]
    fn delete_and_contract() {
        let k3 = std(StandardGraph::Complete(3));
        let path = k3.delete_edge(0, 1).unwrap();
        assert_eq!(path.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
        let c = k3.contract_edge(1, 2).unwrap().into_graph().unwrap();
        assert_eq!(c, std(StandardGraph::Complete(2)));
        let k4 = std(StandardGraph::Complete(4));
        assert_eq!(k4.contract_edge(0, 3).unwrap().into_graph().unwrap(), k3);
        assert_eq!(k3.delete_edge(0, 1).unwrap().delete_edge(0, 1), Err(GraphError::EdgeNotPresent(0, 1)));
        assert!(path.contract_edge(0, 1).is_err());
    }

    #[test]
    fn gluing() {
        let k3 = std(StandardGraph::Complete(3));
        let (g, _) = k3.glue_on_triangle([0, 1, 2], &k3, [2, 0, 1]).unwrap();
        assert_eq!(g, k3);
        let c4 = std(StandardGraph::Cycle(4));
        assert_eq!(c4.glue_on_triangle([0, 1, 2], &k3, [0, 1, 2]), Err(GraphError::NotATriangle([0, 1, 2])));
    }

    #[test]
    fn json_edges_normalized() {
        let g: Graph = serde_json::from_str(r#"{"n":3,"edges":[[2,0],[1,0]]}"#).unwrap();
        assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"n":3,"edges":[[0,1],[0,2]]}"#);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[1,1]]}"#).is_err());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..8).prop_flat_map(|n| {
            prop::collection::vec((0..n, 0..n), 0..20).prop_map(move |es| {
                Graph::from_edges(n, es.into_iter().filter(|(u, v)| u != v)).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn join_counts(g in arb_graph(), h in arb_graph()) {
            let j = g.join(&h);
            prop_assert_eq!(j.n(), g.n() + h.n());
            prop_assert_eq!(j.edge_count(), g.edge_count() + h.edge_count() + g.n() * h.n());
            let k = h.join(&g);
            let mut dj = j.degrees();
            let mut dk = k.degrees();
            dj.sort();
            dk.sort();
            prop_assert_eq!(dj, dk);
        }

        #[test]
        fn contraction_stays_simple(g in arb_graph()) {
            for (u, v) in g.edges() {
                let c = g.contract_edge(u, v).unwrap().into_graph().unwrap();
                prop_assert_eq!(c.n(), g.n() - 1);
                prop_assert!(c.edges().all(|(a, b)| a < b && b < c.n()));
                // every edge not incident to the contracted pair survives
                prop_assert!(c.edge_count() < g.edge_count());
            }
        }
    }
}
