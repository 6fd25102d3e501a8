//! PG(3, q) over a prime field, projective two-weight sets and the Cayley
//! graphs they induce on GF(q)⁴.
//!
//! Two derivations of a projective (40, 4, 12, 5) set in PG(3, 7) are
//! provided:
//!
//! * [`find_partial_spread`]: five pairwise disjoint lines. Every plane
//!   contains at most one of them and meets the others in a point, so the
//!   intersection numbers are 12 and 5. Each line is a 2-dimensional
//!   subspace, though, and becomes a 49-clique of the Cayley graph
//!   (the Latin square graph LS₅(49)).
//! * [`two_weight_orbit_union`] over the orbits of the extraspecial group
//!   `2^{1+4}₋ = D₈ ∘ Q₈` ([`extraspecial_generators`]). Its Cayley graph is
//!   the rank 3 srg(2401, 240, 59, 20) with clique number 9.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Largest characteristic accepted by [`PrimeField::new`].
pub const MAX_CHARACTERISTIC: u32 = 31;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PgError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("characteristic {0} exceeds {MAX_CHARACTERISTIC}")]
    FieldTooLarge(u32),
    #[error("{count} disjoint lines need {needed} points but PG(3,{q}) has {available}")]
    SpreadInfeasible {
        q: u32,
        count: usize,
        needed: usize,
        available: usize,
    },
    #[error("no partial spread of {count} lines exists in PG(3,{q})")]
    SpreadNotFound { q: u32, count: usize },
    #[error("hyperplane {hyperplane} meets the set in {count} points")]
    NotTwoWeight { hyperplane: PgPoint, count: usize },
    #[error("point set is empty")]
    EmptyPointSet,
    #[error("connection set contains the zero vector")]
    ZeroInConnectionSet,
    #[error("connection set contains {0:?} but not its negative")]
    NotSymmetric([u8; 4]),
    #[error("coordinate {coordinate} is not an element of GF({q})")]
    BadCoordinate { coordinate: u32, q: u32 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, PgError> {
        if !is_prime(p as u64) {
            return Err(PgError::NotPrime(p));
        }
        if p > MAX_CHARACTERISTIC {
            return Err(PgError::FieldTooLarge(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        ((a as u32 + b as u32) % self.p) as u8
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        ((a as u32 + self.p - b as u32) % self.p) as u8
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        ((self.p - a as u32) % self.p) as u8
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        ((a as u32 * b as u32) % self.p) as u8
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u8) -> Option<u8> {
        if (a as u32).is_multiple_of(self.p) {
            return None;
        }
        // a^(p-2)
        let mut result = 1u32;
        let mut base = a as u32 % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        Some(result as u8)
    }

    /// Reduces an arbitrary integer into the field.
    pub fn element(&self, x: i64) -> u8 {
        x.rem_euclid(self.p as i64) as u8
    }

    pub fn dot(&self, a: &[u8; 4], b: &[u8; 4]) -> u8 {
        let s: u32 = a.iter().zip(b).map(|(&x, &y)| x as u32 * y as u32).sum();
        (s % self.p) as u8
    }

    pub fn scale(&self, c: u8, v: &[u8; 4]) -> [u8; 4] {
        v.map(|x| self.mul(c, x))
    }

    pub fn add_vec(&self, a: &[u8; 4], b: &[u8; 4]) -> [u8; 4] {
        [0, 1, 2, 3].map(|i| self.add(a[i], b[i]))
    }

    pub fn sub_vec(&self, a: &[u8; 4], b: &[u8; 4]) -> [u8; 4] {
        [0, 1, 2, 3].map(|i| self.sub(a[i], b[i]))
    }

    /// Number of points of PG(3, p).
    pub fn point_count(&self) -> usize {
        let q = self.p as usize;
        (q * q * q * q - 1) / (q - 1)
    }

    /// Position of `v` in the lexicographic order of GF(p)⁴, most significant
    /// coordinate first.
    pub fn vector_index(&self, v: &[u8; 4]) -> usize {
        v.iter().fold(0, |acc, &c| acc * self.p as usize + c as usize)
    }

    pub fn vector_at(&self, mut index: usize) -> [u8; 4] {
        let q = self.p as usize;
        let mut v = [0u8; 4];
        for slot in v.iter_mut().rev() {
            *slot = (index % q) as u8;
            index /= q;
        }
        v
    }
}

/// A point of PG(3, q): a nonzero vector whose first nonzero coordinate is 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PgPoint([u8; 4]);

impl PgPoint {
    /// Normalizes a nonzero vector; `None` for the zero vector.
    pub fn normalize(field: &PrimeField, v: [u8; 4]) -> Option<PgPoint> {
        let lead = *v.iter().find(|&&c| c != 0)?;
        let inv = field.inv(lead)?;
        Some(PgPoint(field.scale(inv, &v)))
    }

    pub fn coords(&self) -> &[u8; 4] {
        &self.0
    }
}

impl std::fmt::Display for PgPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a},{b},{c},{d})")
    }
}

/// All normalized points of PG(3, q) in lexicographic order.
pub fn pg_points(field: &PrimeField) -> Vec<PgPoint> {
    let q = field.order() as usize;
    (1..q * q * q * q)
        .map(|i| field.vector_at(i))
        .filter_map(|v| PgPoint::normalize(field, v).filter(|p| p.0 == v))
        .collect()
}

/// The q + 1 points on a line of PG(3, q), sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectiveLine {
    points: Vec<PgPoint>,
}

impl ProjectiveLine {
    /// Line through two distinct points.
    pub fn through(field: &PrimeField, a: &PgPoint, b: &PgPoint) -> Option<ProjectiveLine> {
        if a == b {
            return None;
        }
        let mut points: Vec<PgPoint> = (0..field.order() as u8)
            .filter_map(|c| PgPoint::normalize(field, field.add_vec(&a.0, &field.scale(c, &b.0))))
            .collect();
        points.push(*b);
        points.sort_unstable();
        points.dedup();
        Some(ProjectiveLine { points })
    }

    pub fn points(&self) -> &[PgPoint] {
        &self.points
    }

    pub fn contains(&self, p: &PgPoint) -> bool {
        self.points.binary_search(p).is_ok()
    }
}

/// Every line of PG(3, q) exactly once, ordered by its two smallest points.
pub fn pg_lines(field: &PrimeField) -> Vec<ProjectiveLine> {
    let points = pg_points(field);
    let mut lines = Vec::new();
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            let line = ProjectiveLine::through(field, a, b).expect("distinct points");
            if line.points[0] == *a && line.points[1] == *b {
                lines.push(line);
            }
        }
    }
    lines
}

/// `count` pairwise disjoint lines of PG(3, q).
///
/// A greedy scan over [`pg_lines`] is tried first; if it gets stuck the search
/// falls back to backtracking over the same order, so the result is
/// deterministic.
pub fn find_partial_spread(field: &PrimeField, count: usize) -> Result<Vec<ProjectiveLine>, PgError> {
    let q = field.order();
    let available = field.point_count();
    let needed = count * (q as usize + 1);
    if needed > available {
        return Err(PgError::SpreadInfeasible {
            q,
            count,
            needed,
            available,
        });
    }
    let lines = pg_lines(field);

    let mut used = std::collections::HashSet::new();
    let mut greedy = Vec::new();
    for line in &lines {
        if greedy.len() == count {
            break;
        }
        if line.points.iter().all(|p| !used.contains(p)) {
            used.extend(line.points.iter().copied());
            greedy.push(line.clone());
        }
    }
    if greedy.len() == count {
        return Ok(greedy);
    }

    fn backtrack(
        lines: &[ProjectiveLine],
        start: usize,
        count: usize,
        used: &mut std::collections::HashSet<PgPoint>,
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == count {
            return true;
        }
        for idx in start..lines.len() {
            let line = &lines[idx];
            if line.points.iter().any(|p| used.contains(p)) {
                continue;
            }
            used.extend(line.points.iter().copied());
            chosen.push(idx);
            if backtrack(lines, idx + 1, count, used, chosen) {
                return true;
            }
            chosen.pop();
            for p in &line.points {
                used.remove(p);
            }
        }
        false
    }

    let mut used = std::collections::HashSet::new();
    let mut chosen = Vec::new();
    if backtrack(&lines, 0, count, &mut used, &mut chosen) {
        Ok(chosen.into_iter().map(|i| lines[i].clone()).collect())
    } else {
        Err(PgError::SpreadNotFound { q, count })
    }
}

/// Union of the points of `lines`, sorted.
pub fn union_of_lines(lines: &[ProjectiveLine]) -> Vec<PgPoint> {
    let mut pts: Vec<PgPoint> = lines.iter().flat_map(|l| l.points.iter().copied()).collect();
    pts.sort_unstable();
    pts.dedup();
    pts
}

/// Map from intersection size to the number of hyperplanes meeting the set in
/// that many points.
pub type IntersectionHistogram = BTreeMap<usize, usize>;

/// Intersection sizes of `pts` with every hyperplane, hyperplanes being
/// represented by normalized dual vectors in [`pg_points`] order.
pub fn hyperplane_intersections(pts: &[PgPoint], field: &PrimeField) -> Vec<(PgPoint, usize)> {
    pg_points(field)
        .into_iter()
        .map(|h| {
            let count = pts.iter().filter(|p| field.dot(&h.0, &p.0) == 0).count();
            (h, count)
        })
        .collect()
}

pub fn intersection_histogram(pts: &[PgPoint], field: &PrimeField) -> IntersectionHistogram {
    let mut hist = BTreeMap::new();
    for (_, c) in hyperplane_intersections(pts, field) {
        *hist.entry(c).or_insert(0) += 1;
    }
    hist
}

/// A point set met by every hyperplane in `h1` or `h2` points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoWeightSet {
    points: Vec<PgPoint>,
    h1: usize,
    h2: usize,
    histogram: IntersectionHistogram,
}

impl TwoWeightSet {
    pub fn points(&self) -> &[PgPoint] {
        &self.points
    }

    pub fn intersection_numbers(&self) -> (usize, usize) {
        (self.h1, self.h2)
    }

    pub fn histogram(&self) -> &IntersectionHistogram {
        &self.histogram
    }
}

/// Checks every hyperplane of PG(3, q) against `pts`.
pub fn verify_two_weight(
    pts: &[PgPoint],
    field: &PrimeField,
    h1: usize,
    h2: usize,
) -> Result<TwoWeightSet, PgError> {
    if pts.is_empty() {
        return Err(PgError::EmptyPointSet);
    }
    let mut points = pts.to_vec();
    points.sort_unstable();
    points.dedup();
    let mut histogram = BTreeMap::new();
    for (hyperplane, count) in hyperplane_intersections(&points, field) {
        if count != h1 && count != h2 {
            return Err(PgError::NotTwoWeight { hyperplane, count });
        }
        *histogram.entry(count).or_insert(0) += 1;
    }
    Ok(TwoWeightSet {
        points,
        h1,
        h2,
        histogram,
    })
}

/// Nonzero vectors of GF(q)⁴ closed under nonzero scalars, hence under negation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionSet {
    field: PrimeField,
    vectors: Vec<[u8; 4]>,
}

impl ConnectionSet {
    /// Validates an explicit vector set: no zero vector, closed under negation.
    pub fn from_vectors(field: PrimeField, mut vectors: Vec<[u8; 4]>) -> Result<Self, PgError> {
        let q = field.order();
        if let Some(bad) = vectors.iter().flatten().find(|&&c| c as u32 >= q) {
            return Err(PgError::BadCoordinate { coordinate: *bad as u32, q });
        }
        vectors.sort_unstable();
        vectors.dedup();
        if vectors.contains(&[0; 4]) {
            return Err(PgError::ZeroInConnectionSet);
        }
        for v in &vectors {
            let neg = v.map(|c| field.neg(c));
            if vectors.binary_search(&neg).is_err() {
                return Err(PgError::NotSymmetric(*v));
            }
        }
        Ok(ConnectionSet { field, vectors })
    }

    pub fn vectors(&self) -> &[[u8; 4]] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn contains(&self, v: &[u8; 4]) -> bool {
        self.vectors.binary_search(v).is_ok()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }
}

/// All nonzero scalar multiples of the given projective points.
pub fn connection_set(points: &[PgPoint], field: &PrimeField) -> ConnectionSet {
    let mut vectors: Vec<[u8; 4]> = points
        .iter()
        .flat_map(|p| (1..field.order() as u8).map(move |c| field.scale(c, &p.0)))
        .collect();
    vectors.sort_unstable();
    vectors.dedup();
    ConnectionSet {
        field: *field,
        vectors,
    }
}

/// Cayley graph on GF(q)⁴: vertex `i` is [`PrimeField::vector_at`]`(i)` and
/// `x ~ y` iff `x − y ∈ D`.
pub fn cayley_graph(d: &ConnectionSet) -> Result<Graph, PgError> {
    let field = d.field;
    let q = field.order() as usize;
    let n = q * q * q * q;
    let mut edges = Vec::with_capacity(n * d.len() / 2);
    for i in 0..n {
        let x = field.vector_at(i);
        for dv in &d.vectors {
            let j = field.vector_index(&field.add_vec(&x, dv));
            if i < j {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// 4×4 matrix over GF(q), acting on column vectors.
pub type Mat4 = [[u8; 4]; 4];

pub fn mat_vec(field: &PrimeField, m: &Mat4, v: &[u8; 4]) -> [u8; 4] {
    m.map(|row| field.dot(&row, v))
}

pub fn mat_mul(field: &PrimeField, a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = [[0u8; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let s: u32 = (0..4).map(|t| a[i][t] as u32 * b[t][j] as u32).sum();
            *cell = (s % field.order()) as u8;
        }
    }
    out
}

fn kron(field: &PrimeField, a: [[i64; 2]; 2], b: [[i64; 2]; 2]) -> Mat4 {
    let mut out = [[0u8; 4]; 4];
    for r1 in 0..2 {
        for r2 in 0..2 {
            for c1 in 0..2 {
                for c2 in 0..2 {
                    out[2 * r1 + r2][2 * c1 + c2] = field.element(a[r1][c1] * b[r2][c2]);
                }
            }
        }
    }
    out
}

/// Generators of the extraspecial group `D₈ ∘ Q₈ ≤ GL(4, q)` for odd `q`,
/// realized as `D₈ ⊗ 1` and `1 ⊗ Q₈` on GF(q)² ⊗ GF(q)².
pub fn extraspecial_generators(field: &PrimeField) -> Vec<Mat4> {
    let p = field.order() as i64;
    // Q₈ = ⟨i, j⟩ with j = [[a, b], [b, −a]] and a² + b² = −1
    let (a, b) = (0..p)
        .flat_map(|a| (0..p).map(move |b| (a, b)))
        .find(|(a, b)| (a * a + b * b + 1) % p == 0)
        .expect("every prime field has a² + b² = −1");
    let id = [[1, 0], [0, 1]];
    let flip = [[0, 1], [1, 0]];
    let sign = [[1, 0], [0, -1]];
    let quat_i = [[0, -1], [1, 0]];
    let quat_j = [[a, b], [b, -a]];
    vec![
        kron(field, flip, id),
        kron(field, sign, id),
        kron(field, id, quat_i),
        kron(field, id, quat_j),
    ]
}

/// Orbits of `⟨gens⟩` on the points of PG(3, q), each sorted, ordered by
/// their smallest point.
pub fn point_orbits(field: &PrimeField, gens: &[Mat4]) -> Vec<Vec<PgPoint>> {
    let points = pg_points(field);
    let mut seen = std::collections::HashSet::new();
    let mut orbits = Vec::new();
    for start in points {
        if !seen.insert(start) {
            continue;
        }
        let mut orbit = vec![start];
        let mut stack = vec![start];
        while let Some(pt) = stack.pop() {
            for g in gens {
                let image = PgPoint::normalize(field, mat_vec(field, g, &pt.0)).expect("invertible matrix");
                if seen.insert(image) {
                    orbit.push(image);
                    stack.push(image);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

/// Lexicographically first union of orbits with exactly `size` points that is
/// a two-weight set with intersection numbers `h1`, `h2`. Returns the chosen
/// orbit indices and the sorted union.
pub fn two_weight_orbit_union(
    field: &PrimeField,
    orbits: &[Vec<PgPoint>],
    size: usize,
    h1: usize,
    h2: usize,
) -> Option<(Vec<usize>, Vec<PgPoint>)> {
    let hyperplanes = pg_points(field);
    let cap = h1.max(h2);
    // incidence[o][h]: points of orbit o on hyperplane h
    let incidence: Vec<Vec<usize>> = orbits
        .iter()
        .map(|orb| {
            hyperplanes
                .iter()
                .map(|h| orb.iter().filter(|p| field.dot(&h.0, &p.0) == 0).count())
                .collect()
        })
        .collect();

    struct Search<'a> {
        orbits: &'a [Vec<PgPoint>],
        incidence: &'a [Vec<usize>],
        size: usize,
        cap: usize,
        h1: usize,
        h2: usize,
    }

    impl Search<'_> {
        fn run(&self, start: usize, total: usize, counts: &mut Vec<usize>, chosen: &mut Vec<usize>) -> bool {
            if total == self.size {
                return counts.iter().all(|&c| c == self.h1 || c == self.h2);
            }
            for o in start..self.orbits.len() {
                let len = self.orbits[o].len();
                if total + len > self.size {
                    continue;
                }
                if counts.iter().zip(&self.incidence[o]).any(|(c, i)| c + i > self.cap) {
                    continue;
                }
                for (c, i) in counts.iter_mut().zip(&self.incidence[o]) {
                    *c += i;
                }
                chosen.push(o);
                if self.run(o + 1, total + len, counts, chosen) {
                    return true;
                }
                chosen.pop();
                for (c, i) in counts.iter_mut().zip(&self.incidence[o]) {
                    *c -= i;
                }
            }
            false
        }
    }

    let search = Search {
        orbits,
        incidence: &incidence,
        size,
        cap,
        h1,
        h2,
    };
    let mut counts = vec![0; hyperplanes.len()];
    let mut chosen = Vec::new();
    if !search.run(0, 0, &mut counts, &mut chosen) {
        return None;
    }
    let mut union: Vec<PgPoint> = chosen.iter().flat_map(|&o| orbits[o].iter().copied()).collect();
    union.sort_unstable();
    Some((chosen, union))
}

/// Which (40, 4, 12, 5) set in PG(3, 7) the srg(2401, 240, 59, 20) is built from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Srg2401Construction {
    /// Union of orbits of the extraspecial group; clique number 9.
    #[default]
    Extraspecial,
    /// Five disjoint lines; clique number 49.
    PartialSpread,
}

impl std::str::FromStr for Srg2401Construction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "extraspecial" => Ok(Srg2401Construction::Extraspecial),
            "partial-spread" => Ok(Srg2401Construction::PartialSpread),
            other => Err(format!("unknown construction `{other}`")),
        }
    }
}

/// Everything produced on the way to the srg(2401, 240, 59, 20).
#[derive(Clone, Debug)]
pub struct Srg2401 {
    pub construction: Srg2401Construction,
    pub field: PrimeField,
    pub two_weight: TwoWeightSet,
    pub connection: ConnectionSet,
    pub graph: Graph,
}

/// Builds the projective (40, 4, 12, 5) set, its connection set and the Cayley
/// graph on GF(7)⁴.
pub fn build_srg2401(construction: Srg2401Construction) -> Result<Srg2401, PgError> {
    let field = PrimeField::new(7)?;
    let points = match construction {
        Srg2401Construction::Extraspecial => {
            let orbits = point_orbits(&field, &extraspecial_generators(&field));
            two_weight_orbit_union(&field, &orbits, 40, 12, 5)
                .map(|(_, pts)| pts)
                .ok_or(PgError::EmptyPointSet)?
        }
        Srg2401Construction::PartialSpread => union_of_lines(&find_partial_spread(&field, 5)?),
    };
    let two_weight = verify_two_weight(&points, &field, 12, 5)?;
    let connection = connection_set(two_weight.points(), &field);
    let graph = cayley_graph(&connection)?;
    Ok(Srg2401 {
        construction,
        field,
        two_weight,
        connection,
        graph,
    })
}
