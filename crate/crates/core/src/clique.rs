//! Maximum cliques by branch and bound over bitsets.
//!
//! Vertices are renumbered by non-increasing degree (ties by label) and the
//! candidate set is bounded by a greedy sequential colouring at every node.
//! The search is single-threaded and fully deterministic: the same graph and
//! budget always return the same clique.

use serde::{Deserialize, Serialize};

use crate::bits::BitRow;
use crate::graph::{Graph, GraphError, VertexSet};

/// Largest vertex count accepted by [`clique_cover_min_bruteforce`].
pub const COVER_BRUTEFORCE_LIMIT: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueResult {
    pub size: usize,
    /// Best clique found, sorted and checked pairwise adjacent.
    pub witness: VertexSet,
    /// `true` when the search space was exhausted, so `size` is maximum.
    pub proven_max: bool,
    pub nodes_explored: u64,
    pub budget_hit: bool,
}

impl CliqueResult {
    fn checked(g: &Graph, clique: Vec<usize>, finished: bool, nodes: u64) -> CliqueResult {
        assert!(g.is_clique(&clique), "search returned a non-clique");
        CliqueResult {
            size: clique.len(),
            witness: VertexSet::from_sorted(clique),
            proven_max: finished,
            nodes_explored: nodes,
            budget_hit: !finished,
        }
    }
}

/// Outcome of [`has_clique`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CliqueDecision {
    Found(VertexSet),
    Absent,
    /// Budget ran out before a decision.
    Unknown,
}

struct Search {
    adj: Vec<BitRow>,
    /// `order[i]` is the original label of internal vertex `i`.
    order: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    budget: Option<u64>,
    /// Stop as soon as a clique of this size is found.
    target: usize,
    /// Only cliques larger than this are of interest.
    floor: usize,
    aborted: bool,
}

impl Search {
    fn new(g: &Graph, vertices: &[usize], budget: Option<u64>, target: usize) -> Search {
        let mut order = vertices.to_vec();
        let member = VertexSet::from_iter(order.iter().copied()).to_bits(g.vertex_count());
        let local_degree = |v: usize| g.row(v).intersection_count(&member);
        order.sort_by_key(|&v| (std::cmp::Reverse(local_degree(v)), v));
        let mut position = vec![usize::MAX; g.vertex_count()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let m = order.len();
        let adj = order
            .iter()
            .map(|&v| {
                let mut row = BitRow::new(m);
                for w in g.row(v).intersection(&member).iter() {
                    row.insert(position[w]);
                }
                row
            })
            .collect();
        Search {
            adj,
            order,
            best: Vec::new(),
            nodes: 0,
            budget,
            target,
            floor: 0,
            aborted: false,
        }
    }

    fn done(&self) -> bool {
        self.aborted || self.best.len() >= self.target
    }

    /// Greedy colouring of `p` in internal order. Returns vertices with their
    /// colour, colours non-decreasing.
    fn colour(&self, p: &BitRow) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(p.count());
        let mut uncoloured = p.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut available = uncoloured.clone();
            while let Some(v) = available.first() {
                available.remove(v);
                available.difference_with(&self.adj[v]);
                uncoloured.remove(v);
                out.push((v, colour));
            }
        }
        out
    }

    fn expand(&mut self, current: &mut Vec<usize>, mut p: BitRow) {
        if self.done() {
            return;
        }
        if self.budget.is_some_and(|b| self.nodes >= b) {
            self.aborted = true;
            return;
        }
        self.nodes += 1;
        let coloured = self.colour(&p);
        for &(v, colour) in coloured.iter().rev() {
            if current.len() + colour <= self.best.len().max(self.floor) || self.done() {
                return;
            }
            current.push(v);
            if current.len() >= self.target {
                self.best = current.clone();
                current.pop();
                return;
            }
            let next = p.intersection(&self.adj[v]);
            if next.is_empty() {
                if current.len() > self.best.len().max(self.floor) {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, next);
            }
            current.pop();
            p.remove(v);
        }
    }

    fn run(mut self, seed: Vec<usize>) -> (Vec<usize>, bool, u64) {
        let all = BitRow::full(self.order.len());
        if !all.is_empty() {
            self.expand(&mut Vec::new(), all);
        }
        let mut clique: Vec<usize> = self.best.iter().map(|&i| self.order[i]).chain(seed).collect();
        clique.sort_unstable();
        (clique, !self.aborted, self.nodes)
    }
}

/// Maximum clique of `g`. With a node budget the result may be a lower bound
/// (`optimal == false`).
pub fn max_clique(g: &Graph, budget: Option<u64>) -> CliqueResult {
    let vertices: Vec<usize> = (0..g.vertex_count()).collect();
    let (clique, finished, nodes) = Search::new(g, &vertices, budget, usize::MAX).run(Vec::new());
    CliqueResult::checked(g, clique, finished, nodes)
}

/// Largest clique containing `v`, searched inside the neighbourhood of `v`.
/// In a vertex-transitive graph this equals the clique number.
pub fn max_clique_through_vertex(g: &Graph, v: usize, budget: Option<u64>) -> Result<CliqueResult, GraphError> {
    let nbrs = g.neighbours(v)?;
    let (clique, finished, nodes) = Search::new(g, nbrs.as_slice(), budget, usize::MAX).run(vec![v]);
    Ok(CliqueResult::checked(g, clique, finished, nodes))
}

/// Decides whether `g` has a clique on `k` vertices; a found witness has
/// exactly `k` vertices.
pub fn has_clique(g: &Graph, k: usize, budget: Option<u64>) -> CliqueDecision {
    if k == 0 {
        return CliqueDecision::Found(VertexSet::empty());
    }
    let vertices: Vec<usize> = (0..g.vertex_count()).collect();
    let mut search = Search::new(g, &vertices, budget, k);
    search.floor = k - 1;
    let (clique, finished, _) = search.run(Vec::new());
    if clique.len() >= k {
        assert!(g.is_clique(&clique), "search returned a non-clique");
        CliqueDecision::Found(VertexSet::from_sorted(clique))
    } else if finished {
        CliqueDecision::Absent
    } else {
        CliqueDecision::Unknown
    }
}

/// Minimum number of cliques partitioning `V`, by exhaustive search over
/// subsets. At most [`COVER_BRUTEFORCE_LIMIT`] vertices.
pub fn clique_cover_min_bruteforce(g: &Graph) -> Result<usize, GraphError> {
    let n = g.vertex_count();
    if n > COVER_BRUTEFORCE_LIMIT {
        return Err(GraphError::TooLarge(n));
    }
    let full = (1usize << n) - 1;
    let masks: Vec<u32> = (0..n)
        .map(|v| g.row(v).iter().fold(0u32, |m, w| m | (1 << w)))
        .collect();
    let mut is_clique = vec![false; full + 1];
    is_clique[0] = true;
    for s in 1..=full {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        is_clique[s] = is_clique[rest] && (rest as u32 & !masks[low]) == 0;
    }
    let mut cover = vec![usize::MAX; full + 1];
    cover[0] = 0;
    for s in 1..=full {
        let low = 1usize << s.trailing_zeros();
        let rest = s & !low;
        // cliques containing the lowest vertex of s
        let mut sub = rest;
        loop {
            let c = sub | low;
            if is_clique[c] {
                cover[s] = cover[s].min(cover[s & !c] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    Ok(cover[full])
}
