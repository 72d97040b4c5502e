use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{IntPoly, Rational};
use crate::error::ChromaError;
use crate::graph::Graph;

pub const BRUTE_MAX_VERTICES: usize = 10;

fn check_size(g: &Graph) -> Result<(), ChromaError> {
    if g.n() > BRUTE_MAX_VERTICES {
        return Err(ChromaError::TooLarge { n: g.n(), limit: BRUTE_MAX_VERTICES });
    }
    if g.n() == 0 {
        return Err(ChromaError::EmptyGraph);
    }
    Ok(())
}

/// Default oracle: colouring counts plus interpolation. It shares no code
/// with the deletion-contraction engine.
pub fn chromatic_brute(g: &Graph) -> Result<IntPoly, ChromaError> {
    chromatic_by_colorings(g)
}

struct UnionFind {
    parent: Vec<usize>,
    components: usize,
    history: Vec<Option<usize>>,
}

impl UnionFind {
    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.history.push(None);
        } else {
            self.parent[rb] = ra;
            self.components -= 1;
            self.history.push(Some(rb));
        }
    }

    fn undo(&mut self) {
        if let Some(Some(rb)) = self.history.pop() {
            self.parent[rb] = rb;
            self.components += 1;
        }
    }
}

/// `Σ_{E' ⊆ E} (-1)^{|E'|} q^{k(E')}` over all `2^e` spanning subgraphs.
pub fn chromatic_by_subgraphs(g: &Graph) -> Result<IntPoly, ChromaError> {
    check_size(g)?;
    let edges: Vec<_> = g.edges().collect();
    let mut counts = vec![0i128; g.n() + 1];
    let mut uf = UnionFind { parent: (0..g.n()).collect(), components: g.n(), history: Vec::new() };

    fn walk(edges: &[(usize, usize)], k: usize, parity: bool, uf: &mut UnionFind, counts: &mut [i128]) {
        if k == edges.len() {
            counts[uf.components] += if parity { -1 } else { 1 };
            return;
        }
        walk(edges, k + 1, parity, uf, counts);
        uf.union(edges[k].0, edges[k].1);
        walk(edges, k + 1, !parity, uf, counts);
        uf.undo();
    }

    walk(&edges, 0, false, &mut uf, &mut counts);
    Ok(IntPoly::from_coeffs(counts.into_iter().map(BigInt::from).collect()))
}

/// Counts proper colourings with `j` colours for `j = 0..=n`, then
/// interpolates over the rationals and checks integrality.
pub fn chromatic_by_colorings(g: &Graph) -> Result<IntPoly, ChromaError> {
    check_size(g)?;
    let n = g.n();
    let adj = g.adjacency_lists();
    // colorings up to renaming of colours, bucketed by colours used
    let mut by_classes = vec![0u64; n + 1];
    let mut colour = vec![usize::MAX; n];

    fn assign(v: usize, used: usize, adj: &[Vec<usize>], colour: &mut [usize], out: &mut [u64]) {
        if v == colour.len() {
            out[used] += 1;
            return;
        }
        for c in 0..=used {
            if adj[v].iter().any(|&w| w < v && colour[w] == c) {
                continue;
            }
            colour[v] = c;
            assign(v + 1, used.max(c + 1), adj, colour, out);
        }
        colour[v] = usize::MAX;
    }

    assign(0, 0, &adj, &mut colour, &mut by_classes);

    let counts: Vec<BigInt> = (0..=n as i64)
        .map(|j| {
            by_classes.iter().enumerate().fold(BigInt::zero(), |acc, (k, &a)| {
                let falling = (0..k as i64).fold(BigInt::one(), |f, s| f * BigInt::from(j - s));
                acc + falling * BigInt::from(a)
            })
        })
        .collect();
    interpolate_integer_points(&counts)
}

/// Polynomial of degree `<= len-1` through `(j, values[j])`, via Newton
/// forward differences. Fails unless every coefficient is an integer.
fn interpolate_integer_points(values: &[BigInt]) -> Result<IntPoly, ChromaError> {
    let len = values.len();
    let mut diffs = values.to_vec();
    let mut newton = Vec::with_capacity(len);
    for k in 0..len {
        newton.push(diffs[0].clone());
        for i in 0..len - k - 1 {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
    }
    // Σ Δ^k f(0) · C(q, k), with C(q, k) = q(q-1)...(q-k+1) / k!
    let mut coeffs = vec![Rational::zero(); len];
    let mut basis = vec![Rational::one()];
    let mut fact = BigInt::one();
    for (k, d) in newton.iter().enumerate() {
        if k > 0 {
            fact *= BigInt::from(k);
            let shift = Rational::from_integer(BigInt::from(k as i64 - 1));
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (i, b) in basis.iter().enumerate() {
                next[i + 1] += b;
                next[i] -= b * &shift;
            }
            basis = next;
        }
        let scale = Rational::new(d.clone(), fact.clone());
        for (i, b) in basis.iter().enumerate() {
            coeffs[i] += b * &scale;
        }
    }
    let ints = coeffs
        .into_iter()
        .map(|c| if c.is_integer() { Ok(c.to_integer()) } else { Err(crate::error::ArithError::DivisionNotExact) })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntPoly::from_coeffs(ints))
}
