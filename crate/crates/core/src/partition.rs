//! Regular partitions `{B1, B2, B3, C}` and the two-step subset construction.
//!
//! Condition (1): no edges between distinct `B_g`, `B_h`.
//! Condition (2): every `i ∈ C` has the same number of neighbours in each `B_h`.
//!
//! With `p = x1 − x2` and `q = x1 + x2 − 2·x3` (where `x_h` is the indicator
//! of `B_h`), `⟨p, y_i⟩` vanishes exactly on `B3 ∪ C` and `⟨q, y_i⟩` vanishes
//! on `C` but not on `B3`, for any negative shift `s`. Intersecting a subset
//! `Z` with `B3 ∪ C` and then with `C` therefore lowers the affine dimension
//! by at least one each time, provided the witnesses exist.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::euclid::{DropCertificate, EuclideanRep, Rejection, SparseVector};
use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("not a partition of the vertex set: {0}")]
    NotAPartition(String),
    #[error("condition (1) violated by edge ({0},{1}) between distinct B blocks")]
    Condition1Violated(usize, usize),
    #[error("condition (2) violated at vertex {vertex}: neighbours in B1, B2, B3 = {counts:?}")]
    Condition2Violated { vertex: usize, counts: [usize; 3] },
    #[error("⟨{functional}, y_{vertex}⟩ = {actual}, case analysis predicts {expected}")]
    CaseMismatch {
        vertex: usize,
        functional: char,
        expected: i64,
        actual: i64,
    },
    #[error("shift s = {0} must be negative")]
    NonNegativeShift(i64),
    #[error("side condition failed: {0}")]
    PreconditionEmpty(SideCondition),
    #[error("asserted {what} valency {asserted}, found {found:?}")]
    ValencyMismatch {
        what: &'static str,
        asserted: usize,
        found: Option<usize>,
    },
    #[error("certificate rejected: {0}")]
    Certificate(#[from] Rejection),
    #[error("sizes are not strictly decreasing at Z_{index}: {previous} -> {current}")]
    SizesNotDecreasing {
        index: usize,
        previous: u64,
        current: u64,
    },
    #[error("degree {degree} exceeds the smallest B block ({smallest})")]
    InfeasibleDegree { degree: usize, smallest: usize },
    #[error("every B block needs at least one vertex")]
    EmptyBlock,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Which side condition of the construction failed for a subset `Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SideCondition {
    /// `Z ∩ (B1 ∪ B2) = ∅`: the `p` drop has no witness.
    B1B2Empty,
    /// `Z ∩ B3 = ∅`: the `q` drop has no witness.
    B3Empty,
}

impl std::fmt::Display for SideCondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SideCondition::B1B2Empty => write!(f, "Z ∩ (B1 ∪ B2) is empty"),
            SideCondition::B3Empty => write!(f, "Z ∩ B3 is empty"),
        }
    }
}

/// Four vertex sets claimed to partition `V`, before any checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidatePartition {
    pub b: [VertexSet; 3],
    pub c: VertexSet,
}

/// A partition that passed [`verify_partition`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularPartition {
    b: [VertexSet; 3],
    c: VertexSet,
    /// Common value of `n(Γ, i, B_h)` over `i ∈ C`, if `C` is nonempty.
    c_valency: Option<usize>,
    /// Common number of neighbours inside its own block over all `B` vertices,
    /// if constant.
    block_valency: Option<usize>,
    vertex_count: usize,
}

impl RegularPartition {
    pub fn blocks(&self) -> &[VertexSet; 3] {
        &self.b
    }

    pub fn b1(&self) -> &VertexSet {
        &self.b[0]
    }

    pub fn b2(&self) -> &VertexSet {
        &self.b[1]
    }

    pub fn b3(&self) -> &VertexSet {
        &self.b[2]
    }

    pub fn c(&self) -> &VertexSet {
        &self.c
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn c_valency(&self) -> Option<usize> {
        self.c_valency
    }

    pub fn block_valency(&self) -> Option<usize> {
        self.block_valency
    }

    /// Same partition with the blocks reordered: `order[h]` names the
    /// original block that plays `B_{h+1}`.
    pub fn renumbered(&self, order: [usize; 3]) -> RegularPartition {
        RegularPartition {
            b: order.map(|o| self.b[o].clone()),
            ..self.clone()
        }
    }

    /// Verifies user-asserted valencies (`b`: within a block, `c`: from `C`
    /// into each block). Unasserted values are not checked.
    pub fn check_valencies(&self, block: Option<usize>, c: Option<usize>) -> Result<(), PartitionError> {
        if let Some(asserted) = block {
            if self.block_valency != Some(asserted) {
                return Err(PartitionError::ValencyMismatch {
                    what: "within-block",
                    asserted,
                    found: self.block_valency,
                });
            }
        }
        if let Some(asserted) = c {
            if self.c_valency != Some(asserted) {
                return Err(PartitionError::ValencyMismatch {
                    what: "C-to-block",
                    asserted,
                    found: self.c_valency,
                });
            }
        }
        Ok(())
    }

    /// `p = x1 − x2`.
    pub fn p_vector(&self) -> SparseVector {
        SparseVector::new(
            self.b[0]
                .iter()
                .map(|i| (i, 1))
                .chain(self.b[1].iter().map(|i| (i, -1)))
                .collect(),
        )
    }

    /// `q = x1 + x2 − 2·x3`.
    pub fn q_vector(&self) -> SparseVector {
        SparseVector::new(
            self.b[0]
                .iter()
                .chain(self.b[1].iter())
                .map(|i| (i, 1))
                .chain(self.b[2].iter().map(|i| (i, -2)))
                .collect(),
        )
    }
}

/// Checks disjointness and coverage, then conditions (1) and (2).
pub fn verify_partition(g: &Graph, cand: &CandidatePartition) -> Result<RegularPartition, PartitionError> {
    let n = g.vertex_count();
    let mut owner = vec![usize::MAX; n];
    for (idx, set) in cand.b.iter().chain(std::iter::once(&cand.c)).enumerate() {
        for v in set.iter() {
            if v >= n {
                return Err(PartitionError::NotAPartition(format!("vertex {v} out of range")));
            }
            if owner[v] != usize::MAX {
                return Err(PartitionError::NotAPartition(format!("vertex {v} appears in two parts")));
            }
            owner[v] = idx;
        }
    }
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(PartitionError::NotAPartition(format!("vertex {v} is not covered")));
    }

    let bits = cand.b.each_ref().map(|b| b.to_bits(n));
    for (h, block) in cand.b.iter().enumerate() {
        for i in block.iter() {
            for (other, other_bits) in bits.iter().enumerate() {
                if other == h {
                    continue;
                }
                if let Some(j) = g.row(i).intersection(other_bits).first() {
                    return Err(PartitionError::Condition1Violated(i.min(j), i.max(j)));
                }
            }
        }
    }

    let mut c_valency = None;
    for i in cand.c.iter() {
        let counts = bits.each_ref().map(|b| g.row(i).intersection_count(b));
        if counts[0] != counts[1] || counts[1] != counts[2] {
            return Err(PartitionError::Condition2Violated { vertex: i, counts });
        }
        match c_valency {
            None => c_valency = Some(counts[0]),
            Some(d) if d != counts[0] => c_valency = Some(usize::MAX),
            _ => {}
        }
    }
    let c_valency = c_valency.filter(|&d| d != usize::MAX);

    let mut block_valency = None;
    let mut constant = true;
    for (h, block) in cand.b.iter().enumerate() {
        for i in block.iter() {
            let d = g.row(i).intersection_count(&bits[h]);
            match block_valency {
                None => block_valency = Some(d),
                Some(prev) if prev != d => constant = false,
                _ => {}
            }
        }
    }

    Ok(RegularPartition {
        b: cand.b.clone(),
        c: cand.c.clone(),
        c_valency,
        block_valency: block_valency.filter(|_| constant),
        vertex_count: n,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub vertices_checked: usize,
    pub s: i64,
}

/// Evaluates `⟨p, y_i⟩` and `⟨q, y_i⟩` from the columns of `A − sI` for every
/// vertex and compares them with the per-block closed forms.
pub fn case_check(g: &Graph, part: &RegularPartition, s: i64) -> Result<CaseReport, PartitionError> {
    if s >= 0 {
        return Err(PartitionError::NonNegativeShift(s));
    }
    let n = g.vertex_count();
    let rep = EuclideanRep::with_shift(g, s);
    let (p, q) = (part.p_vector(), part.q_vector());
    let bits = part.b.each_ref().map(|b| b.to_bits(n));
    let c_bits = part.c.to_bits(n);
    for i in 0..n {
        let counts = bits.each_ref().map(|b| g.row(i).intersection_count(b) as i64);
        let (expect_p, expect_q) = if bits[0].contains(i) {
            (counts[0] - s, counts[0] - s)
        } else if bits[1].contains(i) {
            (s - counts[1], counts[1] - s)
        } else if bits[2].contains(i) {
            (0, 2 * (s - counts[2]))
        } else {
            debug_assert!(c_bits.contains(i));
            (0, 0)
        };
        let actual_p = rep.functional(&p, i);
        if actual_p != expect_p {
            return Err(PartitionError::CaseMismatch {
                vertex: i,
                functional: 'p',
                expected: expect_p,
                actual: actual_p,
            });
        }
        let actual_q = rep.functional(&q, i);
        if actual_q != expect_q {
            return Err(PartitionError::CaseMismatch {
                vertex: i,
                functional: 'q',
                expected: expect_q,
                actual: actual_q,
            });
        }
    }
    Ok(CaseReport { vertices_checked: n, s })
}

/// Result of one two-step construction applied to `Z_prev`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetStep {
    /// `Z_prev ∩ (B3 ∪ C)`.
    pub z_odd: VertexSet,
    /// `Z_prev ∩ C`.
    pub z_even: VertexSet,
    /// Certificate `(p, 0)` for `z_odd` inside `Z_prev`, if a witness exists.
    pub p_certificate: Option<DropCertificate>,
    /// Certificate `(q, 0)` for `z_even` inside `z_odd`, if a witness exists.
    pub q_certificate: Option<DropCertificate>,
}

impl SubsetStep {
    pub fn odd_strict(&self, prev_len: usize) -> bool {
        self.z_odd.len() < prev_len
    }

    pub fn even_strict(&self) -> bool {
        self.z_even.len() < self.z_odd.len()
    }

    /// First failed side condition, if any.
    pub fn missing_witness(&self) -> Option<SideCondition> {
        if self.p_certificate.is_none() {
            Some(SideCondition::B1B2Empty)
        } else if self.q_certificate.is_none() {
            Some(SideCondition::B3Empty)
        } else {
            None
        }
    }

    pub fn require_certified(self) -> Result<SubsetStep, PartitionError> {
        match self.missing_witness() {
            Some(side) => Err(PartitionError::PreconditionEmpty(side)),
            None => Ok(self),
        }
    }
}

/// Derives `Z_odd`, `Z_even` and the two drop certificates. The subsets are
/// always returned; a certificate is `None` when its side condition fails.
pub fn derive_subsets(z_prev: &VertexSet, part: &RegularPartition) -> SubsetStep {
    let b12 = part.b[0].union(&part.b[1]);
    let b3c = part.b[2].union(&part.c);
    let z_odd = z_prev.intersection(&b3c);
    let z_even = z_prev.intersection(&part.c);

    let p_certificate = z_prev.intersection(&b12).first().map(|witness| DropCertificate {
        x: part.p_vector(),
        c: 0,
        inner: z_odd.clone(),
        outer: z_prev.clone(),
        witness,
    });
    let q_certificate = z_odd.intersection(&part.b[2]).first().map(|witness| DropCertificate {
        x: part.q_vector(),
        c: 0,
        inner: z_even.clone(),
        outer: z_odd.clone(),
        witness,
    });
    SubsetStep {
        z_odd,
        z_even,
        p_certificate,
        q_certificate,
    }
}

/// Picks the component to act as `B3` so that `|Z_prev ∩ (B3 ∪ C)|` is as
/// large as possible, i.e. the one meeting `Z_prev` most, ties to the smallest
/// index. Returns `order` with `order[2]` the chosen component and the other
/// two in their original order.
pub fn renumber_for_max(z_prev: &VertexSet, components: &[VertexSet; 3]) -> [usize; 3] {
    let sizes = components.each_ref().map(|b| z_prev.intersection(b).len());
    let chosen = (0..3)
        .max_by_key(|&h| (sizes[h], std::cmp::Reverse(h)))
        .expect("three components");
    let mut rest = (0..3).filter(|&h| h != chosen);
    [rest.next().unwrap(), rest.next().unwrap(), chosen]
}

/// One round of the rounds driver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundState {
    /// 1-based round number `k`.
    pub round: usize,
    /// Block order used (`order[2]` played `B3`).
    pub order: [usize; 3],
    pub prev_size: usize,
    pub step: SubsetStep,
    pub odd_strict: bool,
    pub even_strict: bool,
    /// Upper bounds on `dim P(Z_{2k−1})` and `dim P(Z_{2k})`.
    pub dim_bound_odd: Option<usize>,
    pub dim_bound_even: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundsOutcome {
    pub rounds: Vec<RoundState>,
    /// Set when a round lacked a witness; `rounds` holds everything up to and
    /// including that round.
    pub halted: Option<PartitionError>,
}

impl RoundsOutcome {
    /// Sizes `|Z_0|, |Z_1|, …`.
    pub fn sizes(&self, initial: usize) -> Vec<usize> {
        std::iter::once(initial)
            .chain(self.rounds.iter().flat_map(|r| [r.step.z_odd.len(), r.step.z_even.len()]))
            .collect()
    }

    pub fn certificates(&self) -> impl Iterator<Item = &DropCertificate> {
        self.rounds
            .iter()
            .flat_map(|r| r.step.p_certificate.iter().chain(r.step.q_certificate.iter()))
    }
}

/// Applies the partitions in order starting from `Z_0 = V`. Each emitted
/// certificate is checked against `A − sI` before it counts as a drop.
/// `initial_dim`, when known, seeds the dimension bounds.
pub fn rounds_driver(
    g: &Graph,
    s: i64,
    partitions: &[RegularPartition],
    initial_dim: Option<usize>,
) -> Result<RoundsOutcome, PartitionError> {
    let rep = EuclideanRep::with_shift(g, s);
    let mut z = VertexSet::all(g.vertex_count());
    let mut drops = 0usize;
    let mut rounds = Vec::new();
    for (idx, part) in partitions.iter().enumerate() {
        let order = renumber_for_max(&z, &part.b);
        let part = part.renumbered(order);
        let step = derive_subsets(&z, &part);
        for cert in step.p_certificate.iter().chain(step.q_certificate.iter()) {
            rep.check_drop_certificate(cert)?;
        }
        let odd_strict = step.odd_strict(z.len());
        let even_strict = step.even_strict();
        let p_drop = step.p_certificate.is_some() as usize;
        let q_drop = step.q_certificate.is_some() as usize;
        let dim_bound_odd = initial_dim.map(|d| d.saturating_sub(drops + p_drop));
        let dim_bound_even = initial_dim.map(|d| d.saturating_sub(drops + p_drop + q_drop));
        drops += p_drop + q_drop;
        let missing = step.missing_witness();
        let next = step.z_even.clone();
        rounds.push(RoundState {
            round: idx + 1,
            order,
            prev_size: z.len(),
            step,
            odd_strict,
            even_strict,
            dim_bound_odd,
            dim_bound_even,
        });
        if let Some(side) = missing {
            return Ok(RoundsOutcome {
                rounds,
                halted: Some(PartitionError::PreconditionEmpty(side)),
            });
        }
        z = next;
    }
    Ok(RoundsOutcome { rounds, halted: None })
}

/// Sizes of `Z_prev ∩ B_h` and `Z_prev ∩ C` for size-level bookkeeping.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSizes {
    pub b: [u64; 3],
    pub c: u64,
}

impl BlockSizes {
    /// `(|Z_odd|, |Z_even|)` after choosing the `B3` that maximizes `|Z_odd|`.
    pub fn derive(&self) -> (u64, u64) {
        let b3 = *self.b.iter().max().expect("three blocks");
        (b3 + self.c, self.c)
    }
}

/// Dimension bookkeeping from recorded sizes `|Z_1|, |Z_2|, …`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeBound {
    pub index: usize,
    pub size: u64,
    pub dim_bound: u64,
}

/// Replays recorded subset sizes: every size must be strictly smaller than
/// its predecessor, and then `dim P(Z_i) ≤ initial_dim − i`.
pub fn replay_sizes(initial_size: u64, initial_dim: u64, sizes: &[u64]) -> Result<Vec<SizeBound>, PartitionError> {
    let mut previous = initial_size;
    let mut out = Vec::with_capacity(sizes.len());
    for (k, &size) in sizes.iter().enumerate() {
        let index = k + 1;
        if size >= previous {
            return Err(PartitionError::SizesNotDecreasing {
                index,
                previous,
                current: size,
            });
        }
        out.push(SizeBound {
            index,
            size,
            dim_bound: initial_dim.saturating_sub(index as u64),
        });
        previous = size;
    }
    Ok(out)
}

/// How many neighbours each `C` vertex gets in every `B` block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreePolicy {
    Fixed(usize),
    /// Drawn independently per `C` vertex from `min..=max`.
    Uniform { min: usize, max: usize },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlantedSpec {
    pub sizes: [usize; 4],
    pub degree: DegreePolicy,
    /// Edge probability inside each block and inside `C`.
    pub inner_density: f64,
}

/// Random graph with a regular partition planted on vertices laid out as
/// `B1, B2, B3, C` in that order.
pub fn generate_planted(seed: u64, spec: &PlantedSpec) -> Result<(Graph, RegularPartition), PartitionError> {
    let [n1, n2, n3, nc] = spec.sizes;
    let smallest = n1.min(n2).min(n3);
    if smallest == 0 {
        return Err(PartitionError::EmptyBlock);
    }
    let max_degree = match spec.degree {
        DegreePolicy::Fixed(d) => d,
        DegreePolicy::Uniform { min, max } => min.max(max),
    };
    if max_degree > smallest {
        return Err(PartitionError::InfeasibleDegree {
            degree: max_degree,
            smallest,
        });
    }

    let n = n1 + n2 + n3 + nc;
    let starts = [0, n1, n1 + n2, n1 + n2 + n3, n];
    let ranges: [std::ops::Range<usize>; 4] = [0, 1, 2, 3].map(|h| starts[h]..starts[h + 1]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();

    for range in &ranges {
        for i in range.clone() {
            for j in i + 1..range.end {
                if rng.gen_bool(spec.inner_density) {
                    edges.push((i, j));
                }
            }
        }
    }
    for c in ranges[3].clone() {
        let d = match spec.degree {
            DegreePolicy::Fixed(d) => d,
            DegreePolicy::Uniform { min, max } => rng.gen_range(min.min(max)..=max.max(min)),
        };
        for range in &ranges[..3] {
            for off in sample(&mut rng, range.len(), d) {
                edges.push((range.start + off, c));
            }
        }
    }

    let g = Graph::from_edges(n, edges)?;
    let block = |h: usize| VertexSet::from_iter(ranges[h].clone());
    let cand = CandidatePartition {
        b: [block(0), block(1), block(2)],
        c: block(3),
    };
    let part = verify_partition(&g, &cand)?;
    Ok((g, part))
}
