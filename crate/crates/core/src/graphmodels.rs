//! Graphs, hypergraphs and signed graphs, the arrangements they encode,
//! and brute-force counts used as oracles for the algebraic side.
//!
//! Vertices are `0..n` in memory; JSON documents use `1..=n`.

use std::collections::HashSet;

use num_bigint::BigInt;
use rand::Rng;
use thiserror::Error;

use crate::arrangement::{Arrangement, Flat, SubspaceA, SubspaceB};
use crate::polyseries::{interpolate, IntPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("no edges")]
    EmptyEdgeSet,
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge {{{0}, {1}}} listed twice")]
    DuplicateEdge(usize, usize),
    #[error("hyperedge {0} has fewer than two vertices")]
    SmallHyperedge(usize),
    #[error("hyperedge {0} is contained in hyperedge {1}")]
    NestedHyperedges(usize, usize),
    #[error("vertex {0} listed twice as a zero vertex")]
    DuplicateZeroVertex(usize),
    #[error("arrangement member {0} is not a hyperplane")]
    NotHyperplanes(usize),
}

fn check_edges(n: usize, edges: &[(usize, usize)]) -> Result<Vec<(usize, usize)>, GraphError> {
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(edges.len());
    for &(i, j) in edges {
        for v in [i, j] {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
        }
        if i == j {
            return Err(GraphError::Loop(i));
        }
        let e = (i.min(j), i.max(j));
        if !seen.insert(e) {
            return Err(GraphError::DuplicateEdge(e.0, e.1));
        }
        out.push(e);
    }
    out.sort_unstable();
    Ok(out)
}

/// A simple graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Ok(Self { n, edges: check_edges(n, edges)? })
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Self { n, edges }
    }

    pub fn path(n: usize) -> Self {
        Self { n, edges: (1..n).map(|i| (i - 1, i)).collect() }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        Self::new(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).expect("cycle")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// A hypergraph whose hyperedges have at least two vertices and are
/// pairwise incomparable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    hyperedges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, hyperedges: &[Vec<usize>]) -> Result<Self, GraphError> {
        let mut sets: Vec<Vec<usize>> = Vec::with_capacity(hyperedges.len());
        for (k, e) in hyperedges.iter().enumerate() {
            let mut e = e.clone();
            e.sort_unstable();
            e.dedup();
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if e.len() < 2 {
                return Err(GraphError::SmallHyperedge(k));
            }
            sets.push(e);
        }
        for i in 0..sets.len() {
            for j in 0..sets.len() {
                if i != j && sets[i].iter().all(|v| sets[j].contains(v)) && (sets[i] != sets[j] || i < j) {
                    return Err(GraphError::NestedHyperedges(i, j));
                }
            }
        }
        sets.sort();
        Ok(Self { n, hyperedges: sets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }
}

impl From<&Graph> for Hypergraph {
    fn from(g: &Graph) -> Self {
        Self { n: g.n, hyperedges: g.edges.iter().map(|&(i, j)| vec![i, j]).collect() }
    }
}

/// A signed graph: positive edges `x_i = x_j`, negative edges `x_i = -x_j`
/// and zero vertices `x_i = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    positive: Vec<(usize, usize)>,
    negative: Vec<(usize, usize)>,
    zero_vertices: Vec<usize>,
}

impl SignedGraph {
    pub fn new(
        n: usize,
        positive: &[(usize, usize)],
        negative: &[(usize, usize)],
        zero_vertices: &[usize],
    ) -> Result<Self, GraphError> {
        let positive = check_edges(n, positive)?;
        let negative = check_edges(n, negative)?;
        let mut zeros = zero_vertices.to_vec();
        zeros.sort_unstable();
        if let Some(&v) = zeros.iter().find(|&&v| v >= n) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n });
        }
        if let Some(w) = zeros.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateZeroVertex(w[0]));
        }
        Ok(Self { n, positive, negative, zero_vertices: zeros })
    }

    /// Every edge of both signs and every zero vertex.
    pub fn complete(n: usize) -> Self {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Self { n, positive: pairs.clone(), negative: pairs, zero_vertices: (0..n).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn positive(&self) -> &[(usize, usize)] {
        &self.positive
    }

    pub fn negative(&self) -> &[(usize, usize)] {
        &self.negative
    }

    pub fn zero_vertices(&self) -> &[usize] {
        &self.zero_vertices
    }

    pub fn is_empty(&self) -> bool {
        self.positive.is_empty() && self.negative.is_empty() && self.zero_vertices.is_empty()
    }
}

pub fn graph_to_arrangement(g: &Graph) -> Result<Arrangement<SubspaceA>, GraphError> {
    hypergraph_to_arrangement(&Hypergraph::from(g))
}

pub fn hypergraph_to_arrangement(h: &Hypergraph) -> Result<Arrangement<SubspaceA>, GraphError> {
    if h.hyperedges.is_empty() {
        return Err(GraphError::EmptyEdgeSet);
    }
    let subspaces = h
        .hyperedges
        .iter()
        .map(|e| SubspaceA::from_blocks(h.n, std::slice::from_ref(e)).expect("validated hyperedge"))
        .collect();
    Ok(Arrangement::new(h.n, subspaces).expect("hyperedges form an antichain"))
}

pub fn signed_graph_to_arrangement(s: &SignedGraph) -> Result<Arrangement<SubspaceB>, GraphError> {
    if s.is_empty() {
        return Err(GraphError::EmptyEdgeSet);
    }
    let mut subspaces: Vec<SubspaceB> = Vec::new();
    subspaces.extend(s.positive.iter().map(|&(i, j)| SubspaceB::pair_hyperplane(s.n, i, j, false)));
    subspaces.extend(s.negative.iter().map(|&(i, j)| SubspaceB::pair_hyperplane(s.n, i, j, true)));
    subspaces.extend(s.zero_vertices.iter().map(|&i| SubspaceB::coordinate_hyperplane(s.n, i)));
    Ok(Arrangement::new(s.n, subspaces).expect("distinct hyperplanes"))
}

/// Anything whose proper colorings forbid monochromatic vertex sets.
pub trait Colorable {
    fn vertex_count(&self) -> usize;
    fn forbidden_monochrome(&self) -> Vec<Vec<usize>>;
}

impl Colorable for Graph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn forbidden_monochrome(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|&(i, j)| vec![i, j]).collect()
    }
}

impl Colorable for Hypergraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn forbidden_monochrome(&self) -> Vec<Vec<usize>> {
        self.hyperedges.clone()
    }
}

/// Visit every word in `palette^n`, counting those accepted by `ok`.
fn count_words(n: usize, palette: &[i64], mut ok: impl FnMut(&[i64]) -> bool) -> u64 {
    if palette.is_empty() {
        return u64::from(n == 0);
    }
    let mut digits = vec![0usize; n];
    let mut word = vec![palette[0]; n];
    let mut count = 0;
    loop {
        if ok(&word) {
            count += 1;
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return count;
            }
            digits[pos] += 1;
            if digits[pos] < palette.len() {
                word[pos] = palette[digits[pos]];
                break;
            }
            digits[pos] = 0;
            word[pos] = palette[0];
            pos += 1;
        }
    }
}

/// Maps `[n] -> [m]` with no forbidden set monochromatic.
pub fn proper_coloring_count<G: Colorable>(g: &G, m: usize) -> u64 {
    let sets = g.forbidden_monochrome();
    let palette: Vec<i64> = (0..m as i64).collect();
    count_words(g.vertex_count(), &palette, |c| {
        sets.iter().all(|e| e.iter().any(|&v| c[v] != c[e[0]]))
    })
}

/// Interpolates the proper coloring counts at `m = 0..=n`.
pub fn chromatic_poly_brute<G: Colorable>(g: &G) -> IntPolynomial {
    let points: Vec<(BigInt, BigInt)> = (0..=g.vertex_count())
        .map(|m| (BigInt::from(m), BigInt::from(proper_coloring_count(g, m))))
        .collect();
    interpolate(&points).expect("distinct integer sample points")
}

/// Maps `[n] -> {-m, .., m}` respecting every edge sign and zero vertex.
pub fn signed_coloring_count(s: &SignedGraph, m: usize) -> u64 {
    let m = m as i64;
    let palette: Vec<i64> = (-m..=m).collect();
    count_words(s.n, &palette, |c| {
        s.positive.iter().all(|&(i, j)| c[i] != c[j])
            && s.negative.iter().all(|&(i, j)| c[i] != -c[j])
            && s.zero_vertices.iter().all(|&i| c[i] != 0)
    })
}

fn is_acyclic(n: usize, arcs: &[(usize, usize)]) -> bool {
    let mut indegree = vec![0usize; n];
    let mut out = vec![Vec::new(); n];
    for &(u, v) in arcs {
        indegree[v] += 1;
        out[u].push(v);
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    let mut removed = 0;
    while let Some(u) = ready.pop() {
        removed += 1;
        for &v in &out[u] {
            indegree[v] -= 1;
            if indegree[v] == 0 {
                ready.push(v);
            }
        }
    }
    removed == n
}

/// Orientations of `g` without directed cycles, by trying all of them.
pub fn acyclic_orientations(g: &Graph) -> u64 {
    let m = g.edges.len();
    assert!(m < 64);
    (0u64..1 << m)
        .filter(|mask| {
            let arcs: Vec<(usize, usize)> = g
                .edges
                .iter()
                .enumerate()
                .map(|(k, &(i, j))| if mask >> k & 1 == 1 { (j, i) } else { (i, j) })
                .collect();
            is_acyclic(g.n, &arcs)
        })
        .count() as u64
}

/// Regions of a hyperplane arrangement, as the number of distinct sign
/// patterns its hyperplanes take on the chambers of the ambient
/// reflection arrangement.
pub fn region_count<S: Flat>(a: &Arrangement<S>) -> Result<usize, GraphError> {
    let forms: Vec<Vec<i64>> = a
        .subspaces()
        .iter()
        .enumerate()
        .map(|(k, s)| s.linear_form().ok_or(GraphError::NotHyperplanes(k)))
        .collect::<Result<_, _>>()?;
    let patterns: HashSet<Vec<bool>> = crate::shelling::chambers_of::<S>(a.n())
        .iter()
        .map(|c| {
            let p = crate::complex::CoxeterFace::point(&c.face);
            forms.iter().map(|f| f.iter().zip(&p).map(|(x, y)| x * y).sum::<i64>() > 0).collect()
        })
        .collect();
    Ok(patterns.len().max(1))
}

/// Every labeled simple graph on `n` vertices, edgeless one included.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs = Graph::complete(n).edges;
    (0u64..1 << pairs.len())
        .map(|mask| Graph {
            n,
            edges: (0..pairs.len()).filter(|k| mask >> k & 1 == 1).map(|k| pairs[k]).collect(),
        })
        .collect()
}

/// Every signed graph on `n` vertices, empty one included.
pub fn all_signed_graphs(n: usize) -> Vec<SignedGraph> {
    let pairs = Graph::complete(n).edges;
    let p = pairs.len();
    let bits = 2 * p + n;
    (0u64..1 << bits)
        .map(|mask| {
            let pick = |offset: usize| -> Vec<(usize, usize)> {
                (0..p).filter(|k| mask >> (offset + k) & 1 == 1).map(|k| pairs[k]).collect()
            };
            SignedGraph {
                n,
                positive: pick(0),
                negative: pick(p),
                zero_vertices: (0..n).filter(|v| mask >> (2 * p + v) & 1 == 1).collect(),
            }
        })
        .collect()
}

/// A random hypergraph on `n >= 2` vertices with at least one hyperedge.
pub fn random_hypergraph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Hypergraph {
    assert!(n >= 2);
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for _ in 0..rng.gen_range(1..=4) {
        let size = rng.gen_range(2..=n);
        let mut all: Vec<usize> = (0..n).collect();
        let (chosen, _) = rand::seq::SliceRandom::partial_shuffle(&mut all[..], rng, size);
        let mut e = chosen.to_vec();
        e.sort_unstable();
        let comparable = edges
            .iter()
            .any(|f| e.iter().all(|v| f.contains(v)) || f.iter().all(|v| e.contains(v)));
        if !comparable {
            edges.push(e);
        }
    }
    Hypergraph::new(n, &edges).expect("antichain by construction")
}

/// A random signed graph; each possible hyperplane kept with probability
/// one half. May be empty.
pub fn random_signed_graph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SignedGraph {
    let pairs = Graph::complete(n).edges;
    let pick = |rng: &mut R| -> Vec<(usize, usize)> {
        pairs.iter().copied().filter(|_| rng.gen_bool(0.5)).collect()
    };
    let positive = pick(rng);
    let negative = pick(rng);
    let zero_vertices = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
    SignedGraph { n, positive, negative, zero_vertices }
}
