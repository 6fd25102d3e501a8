//! The point family `y_i` given by the columns of `A − sI`.
//!
//! For a strongly regular graph with smallest eigenvalue `s` these points form
//! a two-distance set of affine dimension `f`, and adjacent vertices are the
//! close pairs. Dimension drops of subsets are proven by
//! [`DropCertificate`]s: a functional `x` and constant `c` with
//! `⟨x, y_i⟩ = c` on the subset and `≠ c` at a witness of the larger set.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{verify_srg, Graph, GraphError, SrgStructure, VertexSet};
use crate::linalg;
use crate::srg::{self, DistanceSquares, GramEntries, SpectrumError, Spectrum, SrgParams};

/// Largest vertex subset handled by [`EuclideanRep::affine_dim_exact`] by default.
pub const DEFAULT_EXACT_BUDGET: usize = 1500;

/// Primes used for the modular rank when the caller does not pick any.
pub const DEFAULT_PRIMES: [u64; 3] = [67_108_859, 67_108_837, 67_108_819];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EuclidError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error("complete graphs have no two-distance representation")]
    CompleteGraph,
    #[error("operation needs the srg parameters; this representation uses an explicit shift")]
    NotStronglyRegular,
    #[error(
        "pair ({a},{b}) has squared distance {actual}, expected {expected} ({})",
        if *.adjacent { "adjacent" } else { "non-adjacent" }
    )]
    MismatchWitness {
        a: usize,
        b: usize,
        adjacent: bool,
        actual: i64,
        expected: i64,
    },
    #[error("exact rank of {size} points exceeds the budget of {budget}")]
    BudgetExceeded { size: usize, budget: usize },
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
}

/// Data derived from the srg parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SrgData {
    pub params: SrgParams,
    pub spectrum: Spectrum,
    pub gram: GramEntries,
    pub dist2: DistanceSquares,
}

/// Columns `y_i` of `A − sI` for a graph and an integer shift `s`.
#[derive(Clone, Debug)]
pub struct EuclideanRep<'g> {
    graph: &'g Graph,
    s: i64,
    srg: Option<SrgData>,
}

/// Which pairs [`EuclideanRep::verify_two_distance`] examines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairSampling {
    Exhaustive,
    Random { pairs: usize, seed: u64 },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoDistanceReport {
    pub pairs_checked: usize,
    pub adjacent_pairs: usize,
    pub non_adjacent_pairs: usize,
    pub adjacent_dist2: i64,
    pub non_adjacent_dist2: i64,
}

/// Sparse integer functional on the vertex set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseVector(Vec<(usize, i64)>);

impl SparseVector {
    /// Sorts by index, merges duplicates and drops zero entries.
    pub fn new(mut entries: Vec<(usize, i64)>) -> Self {
        entries.sort_unstable_by_key(|e| e.0);
        let mut merged: Vec<(usize, i64)> = Vec::with_capacity(entries.len());
        for (i, x) in entries {
            match merged.last_mut() {
                Some(last) if last.0 == i => last.1 += x,
                _ => merged.push((i, x)),
            }
        }
        merged.retain(|e| e.1 != 0);
        SparseVector(merged)
    }

    pub fn from_dense(dense: &[i64]) -> Self {
        SparseVector(
            dense
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| (i, x))
                .collect(),
        )
    }

    pub fn entries(&self) -> &[(usize, i64)] {
        &self.0
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0
            .binary_search_by_key(&i, |e| e.0)
            .map(|k| self.0[k].1)
            .unwrap_or(0)
    }

    pub fn to_dense(&self, n: usize) -> Vec<i64> {
        let mut out = vec![0; n];
        for &(i, x) in &self.0 {
            out[i] = x;
        }
        out
    }
}

/// Proof that `dim P(inner) ≤ dim P(outer) − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DropCertificate {
    pub x: SparseVector,
    pub c: i64,
    pub inner: VertexSet,
    pub outer: VertexSet,
    pub witness: usize,
}

/// Why a certificate was rejected.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Rejection {
    #[error("vertex {vertex} of the inner set has ⟨x, y⟩ = {value} ≠ c = {c}")]
    InnerMismatch { vertex: usize, value: i64, c: i64 },
    #[error("witness {vertex} has ⟨x, y⟩ = c = {c}")]
    WitnessOnHyperplane { vertex: usize, c: i64 },
    #[error(transparent)]
    Malformed(#[from] EuclidError),
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.as_slice().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(Vec::<usize>::deserialize(deserializer)?.into_iter().collect())
    }
}

impl<'g> EuclideanRep<'g> {
    /// Representation of a non-complete strongly regular graph with an
    /// integer spectrum. Runs [`verify_srg`] on the whole graph.
    pub fn new(graph: &'g Graph) -> Result<Self, EuclidError> {
        match verify_srg(graph)? {
            SrgStructure::Complete { .. } => Err(EuclidError::CompleteGraph),
            SrgStructure::Strongly(params) => Self::with_params(graph, params),
        }
    }

    /// Like [`EuclideanRep::new`] but trusts `params` instead of re-verifying.
    pub fn with_params(graph: &'g Graph, params: SrgParams) -> Result<Self, EuclidError> {
        let spectrum = srg::spectrum(&params)?;
        let data = SrgData {
            params,
            spectrum,
            gram: srg::gram_entries(&params, &spectrum),
            dist2: srg::distance_squares(&params, &spectrum),
        };
        Ok(EuclideanRep {
            graph,
            s: spectrum.s,
            srg: Some(data),
        })
    }

    /// Columns of `A − sI` for an arbitrary graph and shift.
    pub fn with_shift(graph: &'g Graph, s: i64) -> Self {
        EuclideanRep { graph, s, srg: None }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn shift(&self) -> i64 {
        self.s
    }

    pub fn srg(&self) -> Option<&SrgData> {
        self.srg.as_ref()
    }

    fn check(&self, i: usize) -> Result<(), EuclidError> {
        let n = self.graph.vertex_count();
        if i >= n {
            return Err(GraphError::VertexOutOfRange { vertex: i, n }.into());
        }
        Ok(())
    }

    /// Dense column `y_i`: `−s` at `i`, `1` at the neighbours, `0` elsewhere.
    pub fn rep_vector(&self, i: usize) -> Result<Vec<i64>, EuclidError> {
        self.check(i)?;
        let mut y = vec![0; self.graph.vertex_count()];
        for j in self.graph.row(i).iter() {
            y[j] = 1;
        }
        y[i] = -self.s;
        Ok(y)
    }

    /// `⟨y_i, y_j⟩`. Uses the three srg constants when available, otherwise
    /// `s² + deg(i)` on the diagonal and `|N(i) ∩ N(j)| − 2s·A_ij` off it.
    pub fn gram_value(&self, i: usize, j: usize) -> Result<i64, EuclidError> {
        self.check(i)?;
        self.check(j)?;
        Ok(self.gram_unchecked(i, j))
    }

    #[inline]
    fn gram_unchecked(&self, i: usize, j: usize) -> i64 {
        let adjacent = self.graph.is_adjacent(i, j);
        match &self.srg {
            Some(d) if i == j => d.gram.diag,
            Some(d) if adjacent => d.gram.adj,
            Some(d) => d.gram.non,
            None if i == j => self.s * self.s + self.graph.degree(i) as i64,
            None => self.graph.common_neighbours(i, j) as i64 - 2 * self.s * adjacent as i64,
        }
    }

    /// `‖y_i − y_j‖²` read off the two columns entry by entry: positions
    /// outside `{i, j}` contribute the symmetric difference of the
    /// neighbourhoods, positions `i` and `j` contribute `(s + A_ij)²` each.
    pub fn explicit_dist2(&self, i: usize, j: usize) -> Result<i64, EuclidError> {
        self.check(i)?;
        self.check(j)?;
        if i == j {
            return Ok(0);
        }
        let (ri, rj) = (self.graph.row(i), self.graph.row(j));
        let symdiff: i64 = ri
            .words()
            .iter()
            .zip(rj.words())
            .map(|(a, b)| (a ^ b).count_ones() as i64)
            .sum();
        let a = self.graph.is_adjacent(i, j) as i64;
        // i ∈ N(j) and j ∈ N(i) are in the symmetric difference when adjacent
        let outside = symdiff - 2 * a;
        Ok(outside + 2 * (self.s + a) * (self.s + a))
    }

    /// `⟨x, y_i⟩ = −s·x_i + Σ_{j ~ i} x_j`.
    pub fn functional(&self, x: &SparseVector, i: usize) -> i64 {
        let row = self.graph.row(i);
        let neighbours: i64 = x.entries().iter().filter(|e| row.contains(e.0)).map(|e| e.1).sum();
        neighbours - self.s * x.get(i)
    }

    /// Compares explicit squared distances with the closed forms.
    pub fn verify_two_distance(&self, sampling: PairSampling) -> Result<TwoDistanceReport, EuclidError> {
        let data = self.srg.ok_or(EuclidError::NotStronglyRegular)?;
        let n = self.graph.vertex_count();
        let mut report = TwoDistanceReport {
            adjacent_dist2: data.dist2.adj,
            non_adjacent_dist2: data.dist2.non,
            ..Default::default()
        };
        let mut check_pair = |a: usize, b: usize| -> Result<(), EuclidError> {
            let adjacent = self.graph.is_adjacent(a, b);
            let expected = if adjacent { data.dist2.adj } else { data.dist2.non };
            let actual = self.explicit_dist2(a, b)?;
            if actual != expected {
                return Err(EuclidError::MismatchWitness {
                    a,
                    b,
                    adjacent,
                    actual,
                    expected,
                });
            }
            report.pairs_checked += 1;
            if adjacent {
                report.adjacent_pairs += 1;
            } else {
                report.non_adjacent_pairs += 1;
            }
            Ok(())
        };
        match sampling {
            PairSampling::Exhaustive => {
                for a in 0..n {
                    for b in a + 1..n {
                        check_pair(a, b)?;
                    }
                }
            }
            PairSampling::Random { pairs, seed } => {
                if n < 2 {
                    return Ok(report);
                }
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                for _ in 0..pairs {
                    let a = rng.gen_range(0..n);
                    let mut b = rng.gen_range(0..n - 1);
                    if b >= a {
                        b += 1;
                    }
                    check_pair(a, b)?;
                }
            }
        }
        Ok(report)
    }

    /// Accepts iff `⟨x, y_i⟩ = c` on the inner set and `≠ c` at the witness.
    pub fn check_drop_certificate(&self, cert: &DropCertificate) -> Result<(), Rejection> {
        let n = self.graph.vertex_count();
        if let Some(&(bad, _)) = cert.x.entries().iter().find(|e| e.0 >= n) {
            return Err(EuclidError::MalformedCertificate(format!("x has entry at vertex {bad} ≥ {n}")).into());
        }
        for set in [&cert.inner, &cert.outer] {
            if let Some(&last) = set.as_slice().last() {
                self.check(last)?;
            }
        }
        if !cert.inner.is_subset(&cert.outer) {
            return Err(EuclidError::MalformedCertificate("inner set is not contained in the outer set".into()).into());
        }
        if !cert.outer.contains(cert.witness) {
            return Err(EuclidError::MalformedCertificate(format!(
                "witness {} is not in the outer set",
                cert.witness
            ))
            .into());
        }
        for vertex in cert.inner.iter() {
            let value = self.functional(&cert.x, vertex);
            if value != cert.c {
                return Err(Rejection::InnerMismatch { vertex, value, c: cert.c });
            }
        }
        if self.functional(&cert.x, cert.witness) == cert.c {
            return Err(Rejection::WitnessOnHyperplane {
                vertex: cert.witness,
                c: cert.c,
            });
        }
        Ok(())
    }

    /// Gram matrix of `{y_i − y_{w_0} : i ∈ W, i ≠ w_0}` with `w_0 = min W`.
    pub fn centered_gram(&self, w: &VertexSet) -> Result<Vec<Vec<i64>>, EuclidError> {
        let Some(base) = w.first() else {
            return Err(GraphError::EmptyVertexSet.into());
        };
        if let Some(&last) = w.as_slice().last() {
            self.check(last)?;
        }
        let rest = &w.as_slice()[1..];
        let g00 = self.gram_unchecked(base, base);
        let to_base: Vec<i64> = rest.iter().map(|&i| self.gram_unchecked(i, base)).collect();
        Ok(rest
            .iter()
            .enumerate()
            .map(|(a, &i)| {
                rest.iter()
                    .enumerate()
                    .map(|(b, &j)| self.gram_unchecked(i, j) - to_base[a] - to_base[b] + g00)
                    .collect()
            })
            .collect())
    }

    /// Exact affine dimension of `P(W)` by fraction-free elimination.
    pub fn affine_dim_exact(&self, w: &VertexSet, budget: usize) -> Result<usize, EuclidError> {
        if w.len() > budget {
            return Err(EuclidError::BudgetExceeded { size: w.len(), budget });
        }
        Ok(linalg::rank_exact(&self.centered_gram(w)?))
    }

    /// Largest rank of the centered Gram matrix modulo the given primes; never
    /// exceeds the true affine dimension.
    pub fn affine_dim_lower_mod_p(&self, w: &VertexSet, primes: &[u64]) -> Result<usize, EuclidError> {
        let gram = self.centered_gram(w)?;
        Ok(primes.iter().map(|&p| linalg::rank_mod_p(&gram, p)).max().unwrap_or(0))
    }

    /// Certificate that the non-neighbourhood of `a` lies in a hyperplane:
    /// `x = y_a`, `c = μ`, witness `a` itself.
    pub fn non_neighbourhood_certificate(&self, a: usize) -> Result<DropCertificate, EuclidError> {
        let data = self.srg.ok_or(EuclidError::NotStronglyRegular)?;
        Ok(DropCertificate {
            x: SparseVector::from_dense(&self.rep_vector(a)?),
            c: data.gram.non,
            inner: self.graph.non_neighbourhood(a)?,
            outer: VertexSet::all(self.graph.vertex_count()),
            witness: a,
        })
    }
}
