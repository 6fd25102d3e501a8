//! Finite simple undirected graphs on dense bit rows.
//!
//! Vertices are `0..vertex_count` inside the library. Every text format and
//! the command line use 1-based labels instead, matching DIMACS; conversion
//! happens only at those boundaries.

use rayon::prelude::*;
use thiserror::Error;

use crate::bits::BitRow;
use crate::srg::SrgParams;

/// Largest vertex count a [`Graph`] may have.
pub const MAX_VERTICES: usize = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("graph with {0} vertices exceeds the supported maximum")]
    TooLarge(usize),
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("strong regularity needs at least 2 vertices")]
    TooFewVertices,
    #[error("not regular: vertex {vertex} has degree {degree}, vertex 0 has {expected}")]
    NotRegular {
        vertex: usize,
        degree: usize,
        expected: usize,
    },
    #[error(
        "not strongly regular: vertices {a} and {b} ({}) have {common} common neighbours, expected {expected}",
        if *.adjacent { "adjacent" } else { "non-adjacent" }
    )]
    NotStronglyRegular {
        a: usize,
        b: usize,
        adjacent: bool,
        common: usize,
        expected: usize,
    },
    #[error("parameters ({v},{k},{lambda},{mu}) violate k(k-lambda-1) = (v-k-1)mu")]
    InconsistentParameters { v: u64, k: u64, lambda: u64, mu: u64 },
}

/// Sorted, duplicate-free set of vertices of some graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Builds a set from arbitrary members, sorting and deduplicating them.
    /// Every member must be below `n`.
    pub fn new(mut members: Vec<usize>, n: usize) -> Result<Self, GraphError> {
        if let Some(&bad) = members.iter().find(|&&m| m >= n) {
            return Err(GraphError::VertexOutOfRange { vertex: bad, n });
        }
        members.sort_unstable();
        members.dedup();
        Ok(VertexSet(members))
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn all(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub fn from_bits(row: &BitRow) -> Self {
        VertexSet(row.iter().collect())
    }

    pub fn to_bits(&self, n: usize) -> BitRow {
        let mut row = BitRow::new(n);
        for &m in &self.0 {
            row.insert(m);
        }
        row
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut all: Vec<usize> = self.iter().chain(other.iter()).collect();
        all.sort_unstable();
        all.dedup();
        VertexSet(all)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

/// Simple undirected graph with one adjacency bit row per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<BitRow>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({} vertices, {} edges)", self.vertex_count(), self.edge_count())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph {
            rows: vec![BitRow::new(n); n],
        })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for i in 0..n {
            g.rows[i] = BitRow::full(n);
            g.rows[i].remove(i);
        }
        Ok(g)
    }

    /// Graph on `n` vertices with the given (0-based) edges, symmetrized.
    /// Repeated edges are harmless.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Builds the graph from a symmetric predicate evaluated on every pair `i < j`.
    pub fn from_fn(n: usize, adjacent: impl Fn(usize, usize) -> bool + Sync) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        g.rows.par_iter_mut().enumerate().for_each(|(i, row)| {
            for j in 0..n {
                if i != j && adjacent(i.min(j), i.max(j)) {
                    row.insert(j);
                }
            }
        });
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, a: usize, b: usize) -> Result<(), GraphError> {
        let n = self.vertex_count();
        for v in [a, b] {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
        }
        if a == b {
            return Err(GraphError::LoopEdge(a));
        }
        self.rows[a].insert(b);
        self.rows[b].insert(a);
        Ok(())
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitRow::count).sum::<usize>() / 2
    }

    #[inline]
    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    pub fn degree(&self, a: usize) -> usize {
        self.rows[a].count()
    }

    /// Neighbour row of `a`.
    #[inline]
    pub fn row(&self, a: usize) -> &BitRow {
        &self.rows[a]
    }

    pub fn common_neighbours(&self, a: usize, b: usize) -> usize {
        self.rows[a].intersection_count(&self.rows[b])
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().filter(move |&j| j > i).map(move |j| (i, j)))
    }

    fn check_vertex(&self, a: usize) -> Result<(), GraphError> {
        if a >= self.vertex_count() {
            Err(GraphError::VertexOutOfRange {
                vertex: a,
                n: self.vertex_count(),
            })
        } else {
            Ok(())
        }
    }

    /// Members of `w` adjacent to `a`; its length is `n(Γ, a, W)`.
    pub fn neighbours_in(&self, a: usize, w: &VertexSet) -> Result<VertexSet, GraphError> {
        self.check_vertex(a)?;
        let row = &self.rows[a];
        Ok(VertexSet(w.iter().filter(|&b| row.contains(b)).collect()))
    }

    pub fn neighbours(&self, a: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(a)?;
        Ok(VertexSet::from_bits(&self.rows[a]))
    }

    /// Vertices that are neither `a` nor adjacent to `a`.
    pub fn non_neighbourhood(&self, a: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(a)?;
        let row = &self.rows[a];
        Ok(VertexSet(
            (0..self.vertex_count()).filter(|&b| b != a && !row.contains(b)).collect(),
        ))
    }

    /// Subgraph induced by `w`, relabelled `0..|w|` in the order of `w`.
    /// The returned slice maps new labels to old ones.
    pub fn induced_subgraph(&self, w: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if w.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        if let Some(last) = w.as_slice().last() {
            self.check_vertex(*last)?;
        }
        let map = w.as_slice().to_vec();
        let m = map.len();
        let mut g = Graph::empty(m)?;
        g.rows.par_iter_mut().enumerate().for_each(|(new_i, row)| {
            let old_row = &self.rows[map[new_i]];
            for (new_j, &old_j) in map.iter().enumerate() {
                if old_row.contains(old_j) {
                    row.insert(new_j);
                }
            }
        });
        Ok((g, map))
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let rows = (0..n)
            .map(|i| {
                let mut r = BitRow::full(n);
                r.difference_with(&self.rows[i]);
                r.remove(i);
                r
            })
            .collect();
        Graph { rows }
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(x, &a)| set[x + 1..].iter().all(|&b| a != b && self.is_adjacent(a, b)))
    }
}

/// Outcome of a successful strong-regularity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SrgStructure {
    /// Parameters of a non-complete strongly regular graph.
    Strongly(SrgParams),
    /// `K_v`: `λ = v − 2` and `μ` is undefined because there are no non-adjacent pairs.
    Complete { v: u64 },
}

impl SrgStructure {
    pub fn params(&self) -> Option<SrgParams> {
        match self {
            SrgStructure::Strongly(p) => Some(*p),
            SrgStructure::Complete { .. } => None,
        }
    }
}

/// Checks every pair of vertices and returns the parameter set `(v, k, λ, μ)`.
///
/// An edgeless graph is reported with `λ = 0` since no adjacent pair exists.
pub fn verify_srg(g: &Graph) -> Result<SrgStructure, GraphError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(GraphError::TooFewVertices);
    }
    let k = g.degree(0);
    if let Some(vertex) = (1..n).find(|&i| g.degree(i) != k) {
        return Err(GraphError::NotRegular {
            vertex,
            degree: g.degree(vertex),
            expected: k,
        });
    }
    if k == n - 1 {
        return Ok(SrgStructure::Complete { v: n as u64 });
    }

    // The first adjacent and first non-adjacent pair fix λ and μ.
    let mut lambda = None;
    let mut mu = None;
    'outer: for i in 0..n {
        for j in i + 1..n {
            let slot = if g.is_adjacent(i, j) { &mut lambda } else { &mut mu };
            if slot.is_none() {
                *slot = Some(g.common_neighbours(i, j));
            }
            if lambda.is_some() && mu.is_some() {
                break 'outer;
            }
        }
    }
    let lambda = lambda.unwrap_or(0);
    let mu = mu.expect("non-complete graph has a non-adjacent pair");

    let witness = (0..n).into_par_iter().find_map_first(|i| {
        let ri = g.row(i);
        (i + 1..n).find_map(|j| {
            let adjacent = ri.contains(j);
            let common = ri.intersection_count(g.row(j));
            let expected = if adjacent { lambda } else { mu };
            (common != expected).then_some(GraphError::NotStronglyRegular {
                a: i,
                b: j,
                adjacent,
                common,
                expected,
            })
        })
    });
    if let Some(err) = witness {
        return Err(err);
    }

    let (v, k, lambda, mu) = (n as u64, k as u64, lambda as u64, mu as u64);
    // adjacent pairs have λ ≤ k − 1, so the subtraction cannot underflow
    if k > 0 && k * (k - lambda - 1) != (v - k - 1) * mu {
        return Err(GraphError::InconsistentParameters { v, k, lambda, mu });
    }
    Ok(SrgStructure::Strongly(SrgParams::new(v, k, lambda, mu)))
}
