use std::collections::HashMap;

use crate::arith::IntPoly;
use crate::error::ChromaError;
use crate::graph::Graph;

pub const DEFAULT_BUDGET: u64 = 10_000_000;
pub const ENGINE_MAX_VERTICES: usize = 128;

type Mask = u128;

/// Compact adjacency-mask graph used inside the recursion.
#[derive(Clone, Debug)]
struct Sub {
    adj: Vec<Mask>,
}

fn bit(v: usize) -> Mask {
    1 << v
}

fn above(v: usize) -> Mask {
    if v >= 127 {
        0
    } else {
        !0 << (v + 1)
    }
}

fn drop_bit(m: Mask, v: usize) -> Mask {
    let low = m & (bit(v) - 1);
    let high = if v + 1 >= 128 { 0 } else { (m >> (v + 1)) << v };
    low | high
}

fn members(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

impl Sub {
    fn from_graph(g: &Graph) -> Self {
        let mut adj = vec![0; g.n()];
        for (u, v) in g.edges() {
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Sub { adj }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    fn without_vertex(&self, v: usize) -> Sub {
        let adj = self
            .adj
            .iter()
            .enumerate()
            .filter(|&(w, _)| w != v)
            .map(|(_, &m)| drop_bit(m, v))
            .collect();
        Sub { adj }
    }

    fn without_edge(&self, u: usize, v: usize) -> Sub {
        let mut out = self.clone();
        out.adj[u] &= !bit(v);
        out.adj[v] &= !bit(u);
        out
    }

    /// Merges `v` into `u`; parallel edges collapse.
    fn contract(&self, u: usize, v: usize) -> Sub {
        let mut out = self.clone();
        let nv = out.adj[v] & !bit(u);
        out.adj[u] = (out.adj[u] | nv) & !bit(v) & !bit(u);
        for w in members(nv) {
            out.adj[w] |= bit(u);
        }
        out.without_vertex(v)
    }

    fn induced(&self, mask: Mask) -> Sub {
        let verts: Vec<usize> = members(mask).collect();
        let adj = verts
            .iter()
            .map(|&v| {
                let m = self.adj[v] & mask;
                verts.iter().enumerate().filter(|&(_, &w)| m & bit(w) != 0).fold(0, |acc, (i, _)| acc | bit(i))
            })
            .collect();
        Sub { adj }
    }

    fn components(&self) -> Vec<Mask> {
        let all: Mask = if self.n() == 128 { !0 } else { bit(self.n()) - 1 };
        let mut left = all;
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut comp = bit(start);
            let mut frontier = comp;
            while frontier != 0 {
                let next = members(frontier).fold(0, |acc, v| acc | self.adj[v]) & !comp;
                comp |= next;
                frontier = next;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// A vertex whose neighbourhood is a clique, with its degree.
    fn simplicial_vertex(&self) -> Option<(usize, usize)> {
        (0..self.n())
            .filter(|&v| {
                let nb = self.adj[v];
                members(nb).all(|w| nb & !self.adj[w] == bit(w))
            })
            .map(|v| (v, self.degree(v)))
            .min_by_key(|&(_, d)| d)
    }

    /// Relabelling by (degree, sorted neighbour degrees); not a canonical
    /// form, but stable for a given labelled input.
    fn memo_key(&self) -> Vec<Mask> {
        let deg: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        let mut order: Vec<(usize, Vec<usize>, usize)> = (0..self.n())
            .map(|v| {
                let mut nd: Vec<usize> = members(self.adj[v]).map(|w| deg[w]).collect();
                nd.sort_unstable();
                (deg[v], nd, v)
            })
            .collect();
        order.sort();
        let mut pos = vec![0; self.n()];
        for (i, (_, _, v)) in order.iter().enumerate() {
            pos[*v] = i;
        }
        order
            .iter()
            .map(|(_, _, v)| members(self.adj[*v]).fold(0, |acc, w| acc | bit(pos[w])))
            .collect()
    }

    /// Edge with the most common neighbours.
    fn branch_edge(&self) -> (usize, usize) {
        let mut best = None;
        let mut best_score = 0;
        for u in 0..self.n() {
            for v in members(self.adj[u] & above(u)) {
                let score = (self.adj[u] & self.adj[v]).count_ones() + 1;
                if score > best_score {
                    best_score = score;
                    best = Some((u, v));
                }
            }
        }
        best.expect("graph has an edge")
    }
}

fn cycle_poly(l: usize) -> IntPoly {
    let qm1 = IntPoly::linear(1);
    let sign = if l.is_multiple_of(2) { IntPoly::one() } else { -IntPoly::one() };
    &qm1.pow(l as u32) + &(&sign * &qm1)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EngineStats {
    pub nodes: u64,
    pub cache_hits: u64,
    pub cache_entries: usize,
}

/// Deletion-contraction with component splitting, simplicial-vertex
/// stripping, closed forms for edgeless graphs, trees, cycles and complete
/// graphs, and an optional memo table.
#[derive(Debug)]
pub struct ChromaticEngine {
    budget: u64,
    use_cache: bool,
    cache: HashMap<Vec<Mask>, IntPoly>,
    stats: EngineStats,
}

impl Default for ChromaticEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl ChromaticEngine {
    pub fn new() -> Self {
        ChromaticEngine { budget: DEFAULT_BUDGET, use_cache: true, cache: HashMap::new(), stats: EngineStats::default() }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_cache(mut self, on: bool) -> Self {
        self.use_cache = on;
        self
    }

    pub fn stats(&self) -> EngineStats {
        EngineStats { cache_entries: self.cache.len(), ..self.stats }
    }

    /// The budget applies per call; the memo table persists across calls.
    pub fn chromatic_poly(&mut self, g: &Graph) -> Result<IntPoly, ChromaError> {
        if g.n() == 0 {
            return Err(ChromaError::EmptyGraph);
        }
        if g.n() > ENGINE_MAX_VERTICES {
            return Err(ChromaError::TooLarge { n: g.n(), limit: ENGINE_MAX_VERTICES });
        }
        self.stats.nodes = 0;
        self.solve(&Sub::from_graph(g))
    }

    fn solve(&mut self, g: &Sub) -> Result<IntPoly, ChromaError> {
        self.stats.nodes += 1;
        if self.stats.nodes > self.budget {
            return Err(ChromaError::ResourceLimit { budget: self.budget });
        }
        let n = g.n();
        let e = g.edge_count();
        if n == 0 {
            return Ok(IntPoly::one());
        }
        if e == 0 {
            return Ok(IntPoly::monomial(1, n));
        }
        let comps = g.components();
        if comps.len() > 1 {
            let mut acc = IntPoly::one();
            for c in comps {
                acc = &acc * &self.solve(&g.induced(c))?;
            }
            return Ok(acc);
        }
        // connected from here on
        if e == n - 1 {
            return Ok(&IntPoly::q() * &IntPoly::linear(1).pow((n - 1) as u32));
        }
        if e == n * (n - 1) / 2 {
            return Ok(IntPoly::falling_factorial(n));
        }
        if e == n && (0..n).all(|v| g.degree(v) == 2) {
            return Ok(cycle_poly(n));
        }
        if let Some((v, d)) = g.simplicial_vertex() {
            let rest = self.solve(&g.without_vertex(v))?;
            return Ok(&IntPoly::linear(d as i64) * &rest);
        }
        let key = if self.use_cache {
            let key = g.memo_key();
            if let Some(p) = self.cache.get(&key) {
                self.stats.cache_hits += 1;
                return Ok(p.clone());
            }
            Some(key)
        } else {
            None
        };
        let (u, v) = g.branch_edge();
        let deleted = self.solve(&g.without_edge(u, v))?;
        let contracted = self.solve(&g.contract(u, v))?;
        let p = &deleted - &contracted;
        if let Some(key) = key {
            self.cache.insert(key, p.clone());
        }
        Ok(p)
    }
}
