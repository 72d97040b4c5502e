//! Seeded generators of planar triangulations and small random graphs,
//! used by property runs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::families::{family_graph, Family, FamilySpec};
use crate::graph::{apollonian_insert, diagonal_flip, validate_triangulation, FaceCertificate, Graph, StandardGraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triangulation {
    pub graph: Graph,
    pub cert: FaceCertificate,
    pub origin: String,
}

impl Triangulation {
    pub fn is_valid(&self) -> bool {
        validate_triangulation(&self.graph, &self.cert).is_valid()
    }
}

pub fn k4() -> Triangulation {
    Triangulation {
        graph: Graph::standard(StandardGraph::Complete(4)).expect("K4"),
        cert: FaceCertificate::new(vec![[0, 1, 2], [0, 3, 1], [1, 3, 2], [0, 2, 3]]),
        origin: "K4".into(),
    }
}

pub fn family_member(family: Family, param: i64) -> Option<Triangulation> {
    let spec = FamilySpec::new(family, param).ok()?;
    let (graph, cert) = family_graph(spec).ok()?;
    Some(Triangulation { graph, cert, origin: format!("{}_{}", family.name(), param) })
}

/// Every family member with an explicit graph and at most `max_n` vertices.
pub fn family_sweep(max_n: usize) -> Vec<Triangulation> {
    let mut out = Vec::new();
    for family in Family::ALL.into_iter().filter(|f| f.has_graph()) {
        let (alpha, beta) = family.vertex_relation();
        let mut param = family.min_param();
        while alpha * param + beta <= max_n as i64 {
            out.extend(family_member(family, param));
            param += 1;
        }
    }
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Successive stacked triangulations, each with one more vertex inserted
/// into a random face.
pub fn apollonian_walk(start: &Triangulation, steps: usize, rng: &mut impl Rng) -> Vec<Triangulation> {
    let mut cur = start.clone();
    let mut out = Vec::with_capacity(steps);
    for step in 1..=steps {
        let face = *cur.cert.faces.choose(rng).expect("faces");
        let (graph, cert) = apollonian_insert(&cur.graph, &cur.cert, face).expect("face from certificate");
        cur = Triangulation { graph, cert, origin: format!("{}+apollonian{step}", start.origin) };
        out.push(cur.clone());
    }
    out
}

/// Triangulations after each successful random flip; gives up after
/// `20 * steps` attempts.
pub fn flip_walk(start: &Triangulation, steps: usize, rng: &mut impl Rng) -> Vec<Triangulation> {
    let mut cur = start.clone();
    let mut out = Vec::with_capacity(steps);
    let mut attempts = 0;
    while out.len() < steps && attempts < 20 * steps {
        attempts += 1;
        let edges: Vec<_> = cur.graph.edges().collect();
        let e = *edges.choose(rng).expect("edges");
        if let Ok((graph, cert)) = diagonal_flip(&cur.graph, &cur.cert, e) {
            cur = Triangulation { graph, cert, origin: format!("{}+flip{}", start.origin, out.len() + 1) };
            out.push(cur.clone());
        }
    }
    out
}

/// At least `count` validated triangulations with at most `max_n`
/// vertices: the family sweep, then alternating Apollonian and flip walks.
pub fn triangulation_corpus(seed: u64, count: usize, max_n: usize) -> Vec<Triangulation> {
    let mut rng = rng(seed);
    let mut out = family_sweep(max_n);
    let starts: Vec<Triangulation> = out.iter().filter(|t| t.graph.n() >= 4).cloned().chain([k4()]).collect();
    let mut round = 0usize;
    while out.len() < count {
        let start = starts.choose(&mut rng).expect("starts").clone();
        let room = max_n.saturating_sub(start.graph.n());
        let batch = if round.is_multiple_of(2) && room > 0 {
            let steps = rng.gen_range(1..=room);
            let mut walk = apollonian_walk(&start, steps, &mut rng);
            // finish some walks with flips so they leave the stacked class
            if let Some(last) = walk.last().cloned() {
                walk.extend(flip_walk(&last, 5, &mut rng));
            }
            walk
        } else {
            flip_walk(&start, 10, &mut rng)
        };
        out.extend(batch);
        round += 1;
    }
    out
}

/// A random simple graph on `n` vertices with edge probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// Drops each edge independently with probability `p`.
pub fn thin(g: &Graph, p: f64, rng: &mut impl Rng) -> Graph {
    let kept: Vec<_> = g.edges().filter(|_| !rng.gen_bool(p)).collect();
    Graph::from_edges(g.n(), kept).expect("subset of valid edges")
}

/// `count` graphs on at most `max_n` vertices: joins of random graphs,
/// flip-walk and Apollonian triangulations, family members, and thinned
/// copies of each.
pub fn small_graph_corpus(seed: u64, count: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = rng(seed);
    let pool: Vec<Triangulation> = triangulation_corpus(seed ^ 0x5eed, 200, max_n)
        .into_iter()
        .filter(|t| t.graph.n() <= max_n)
        .collect();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let g = match out.len() % 4 {
            0 => {
                let a = rng.gen_range(1..max_n);
                let b = rng.gen_range(1..=max_n - a);
                let p = rng.gen_range(0.2..0.8);
                random_graph(a, p, &mut rng).join(&random_graph(b, p, &mut rng))
            }
            1 => {
                let n = rng.gen_range(1..=max_n);
                random_graph(n, rng.gen_range(0.1..0.9), &mut rng)
            }
            _ => {
                let t = pool.choose(&mut rng).expect("pool");
                if out.len() % 4 == 2 {
                    t.graph.clone()
                } else {
                    thin(&t.graph, 0.3, &mut rng)
                }
            }
        };
        out.push(g);
    }
    out
}
