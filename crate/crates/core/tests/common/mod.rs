//! Small graphs with known structure, and brute-force oracles that share no
//! code with the library.

#![allow(dead_code)]

use nalgebra::DMatrix;
use srg_borsuk::pg::{cayley_graph, connection_set, find_partial_spread, union_of_lines, PrimeField};
use srg_borsuk::{Graph, SrgParams};

pub struct Entry {
    pub name: String,
    pub graph: Graph,
    /// Known parameters when the graph is strongly regular.
    pub params: Option<SrgParams>,
}

fn entry(name: &str, graph: Graph, params: Option<(u64, u64, u64, u64)>) -> Entry {
    Entry {
        name: name.into(),
        graph,
        params: params.map(|(v, k, l, m)| SrgParams::new(v, k, l, m)),
    }
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

/// Kneser(5,2).
pub fn petersen() -> Graph {
    let s = pairs(5);
    Graph::from_fn(10, |i, j| {
        let (a, b) = s[i];
        let (c, d) = s[j];
        a != c && a != d && b != c && b != d
    })
    .unwrap()
}

/// 2-subsets of an n-set, adjacent when they share one element.
pub fn triangular(n: usize) -> Graph {
    let s = pairs(n);
    Graph::from_fn(s.len(), |i, j| {
        let (a, b) = s[i];
        let (c, d) = s[j];
        (a == c) ^ (b == d) || a == d || b == c
    })
    .unwrap()
}

pub fn rook(n: usize) -> Graph {
    Graph::from_fn(n * n, |i, j| (i / n == j / n) != (i % n == j % n)).unwrap()
}

/// Paley graph on GF(p²) = GF(p)[t]/(t² − nr) for a non-residue `nr`.
pub fn paley_square(p: usize, nr: usize) -> Graph {
    let mul = |(a, b): (usize, usize), (c, d): (usize, usize)| ((a * c + b * d * nr) % p, (a * d + b * c) % p);
    let mut squares = std::collections::HashSet::new();
    for a in 0..p {
        for b in 0..p {
            if (a, b) != (0, 0) {
                squares.insert(mul((a, b), (a, b)));
            }
        }
    }
    Graph::from_fn(p * p, |i, j| {
        let diff = ((i / p + p - j / p) % p, (i % p + p - j % p) % p);
        squares.contains(&diff)
    })
    .unwrap()
}

/// Paley graph on GF(p) for prime p ≡ 1 (mod 4).
pub fn paley_prime(p: usize) -> Graph {
    let squares: Vec<bool> = (0..p).map(|x| x != 0 && (1..p).any(|y| y * y % p == x)).collect();
    Graph::from_fn(p, |i, j| squares[(i + p - j) % p]).unwrap()
}

/// Cayley graph on GF(2)⁴ with the four unit vectors and the all-ones vector.
pub fn clebsch() -> Graph {
    let gens = [1usize, 2, 4, 8, 15];
    Graph::from_fn(16, |i, j| gens.contains(&(i ^ j))).unwrap()
}

pub fn complete_multipartite(parts: usize, size: usize) -> Graph {
    Graph::from_fn(parts * size, |i, j| i / size != j / size).unwrap()
}

pub fn disjoint_cliques(m: usize, n: usize) -> Graph {
    Graph::from_fn(m * n, |i, j| i / n == j / n).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// Cayley graph on GF(3)⁴ from `lines` disjoint projective lines.
pub fn spread_graph(lines: usize) -> Graph {
    let f = PrimeField::new(3).unwrap();
    let pts = union_of_lines(&find_partial_spread(&f, lines).unwrap());
    cayley_graph(&connection_set(&pts, &f)).unwrap()
}

/// Deterministic pseudo-random graph (xorshift), independent of `rand`.
pub fn random_graph(n: usize, density_percent: u64, seed: u64) -> Graph {
    let mut state = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            if state % 100 < density_percent {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Strongly regular corpus, at most 100 vertices, with complement pairs.
pub fn srg_corpus() -> Vec<Entry> {
    vec![
        entry("petersen", petersen(), Some((10, 3, 0, 1))),
        entry("T(5)", triangular(5), Some((10, 6, 3, 4))),
        entry("paley9", paley_square(3, 2), Some((9, 4, 1, 2))),
        entry("rook3", rook(3), Some((9, 4, 1, 2))),
        entry("rook4", rook(4), Some((16, 6, 2, 2))),
        entry("rook4-complement", rook(4).complement(), Some((16, 9, 4, 6))),
        entry("T(6)", triangular(6), Some((15, 8, 4, 4))),
        entry("T(6)-complement", triangular(6).complement(), Some((15, 6, 1, 3))),
        entry("clebsch", clebsch(), Some((16, 5, 0, 2))),
        entry("clebsch-complement", clebsch().complement(), Some((16, 10, 6, 6))),
        entry("K3,3,3", complete_multipartite(3, 3), Some((9, 6, 3, 6))),
        entry("3K3", disjoint_cliques(3, 3), Some((9, 2, 1, 0))),
        entry("paley25", paley_square(5, 2), Some((25, 12, 5, 6))),
        entry("spread81-2", spread_graph(2), Some((81, 16, 7, 2))),
        entry("spread81-3", spread_graph(3), Some((81, 24, 9, 6))),
        entry("spread81-2-complement", spread_graph(2).complement(), Some((81, 64, 49, 56))),
    ]
}

/// Graphs used for format round-trips: the srg corpus plus irregular ones.
pub fn full_corpus() -> Vec<Entry> {
    let mut all = srg_corpus();
    all.push(entry("paley13", paley_prime(13), Some((13, 6, 2, 3))));
    all.push(entry("C7", cycle(7), None));
    all.push(entry("K1", Graph::empty(1).unwrap(), None));
    all.push(entry("edgeless5", Graph::empty(5).unwrap(), None));
    all.push(entry("K6", Graph::complete(6).unwrap(), None));
    for seed in 0..5 {
        all.push(entry(&format!("random{seed}"), random_graph(30, 40, seed), None));
    }
    all
}

/// `(v, k, λ, μ)` by counting, or `None` if the graph is not strongly regular.
pub fn brute_params(g: &Graph) -> Option<SrgParams> {
    let n = g.vertex_count();
    let adj = |a, b| g.is_adjacent(a, b);
    let k = (0..n).filter(|&j| adj(0, j)).count();
    let (mut lambda, mut mu) = (None, None);
    for a in 0..n {
        if (0..n).filter(|&j| adj(a, j)).count() != k {
            return None;
        }
        for b in a + 1..n {
            let common = (0..n).filter(|&c| adj(a, c) && adj(b, c)).count();
            let slot = if adj(a, b) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(common),
                Some(x) if x != common => return None,
                _ => {}
            }
        }
    }
    Some(SrgParams::new(n as u64, k as u64, lambda? as u64, mu? as u64))
}

pub fn adjacency_matrix(g: &Graph) -> DMatrix<f64> {
    let n = g.vertex_count();
    DMatrix::from_fn(n, n, |i, j| if g.is_adjacent(i, j) { 1.0 } else { 0.0 })
}

/// Eigenvalues rounded to integers with their multiplicities, descending.
/// Panics if some eigenvalue is not close to an integer.
pub fn integer_spectrum(g: &Graph) -> Vec<(i64, usize)> {
    let eig = adjacency_matrix(g).symmetric_eigen();
    let mut values: Vec<i64> = eig
        .eigenvalues
        .iter()
        .map(|&x| {
            let r = x.round();
            assert!((x - r).abs() < 1e-6, "eigenvalue {x} is not an integer");
            r as i64
        })
        .collect();
    values.sort_unstable_by(|a, b| b.cmp(a));
    let mut out: Vec<(i64, usize)> = Vec::new();
    for v in values {
        match out.last_mut() {
            Some((x, m)) if *x == v => *m += 1,
            _ => out.push((v, 1)),
        }
    }
    out
}

/// Rank of a real matrix by SVD.
pub fn float_rank(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let m = DMatrix::from_fn(rows.len(), rows[0].len(), |i, j| rows[i][j] as f64);
    m.rank(1e-7)
}

/// Affine dimension of the columns of `A − sI` restricted to `w`, computed
/// from explicit coordinates with floating point SVD.
pub fn affine_dim_oracle(g: &Graph, s: i64, w: &[usize]) -> usize {
    if w.len() <= 1 {
        return 0;
    }
    let n = g.vertex_count();
    let column = |i: usize| -> Vec<i64> {
        (0..n)
            .map(|j| {
                if i == j {
                    -s
                } else if g.is_adjacent(i, j) {
                    1
                } else {
                    0
                }
            })
            .collect()
    };
    let base = column(w[0]);
    let diffs: Vec<Vec<i64>> = w[1..]
        .iter()
        .map(|&i| column(i).iter().zip(&base).map(|(a, b)| a - b).collect())
        .collect();
    float_rank(&diffs)
}

/// Clique number by checking every vertex subset (n ≤ 20).
pub fn all_subsets_clique_number(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 20);
    let masks: Vec<u32> = (0..n)
        .map(|v| (0..n).filter(|&w| g.is_adjacent(v, w)).fold(0, |m, w| m | 1 << w))
        .collect();
    let mut best = 0;
    for set in 1u32..(1 << n) {
        let size = set.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut rest = set;
        let mut ok = true;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if set & !(1 << v) & !masks[v] != 0 {
                ok = false;
                break;
            }
        }
        if ok {
            best = size;
        }
    }
    best
}

/// Chromatic number of the complement by backtracking, i.e. the minimum
/// number of cliques covering `g`.
pub fn clique_cover_oracle(g: &Graph) -> usize {
    let n = g.vertex_count();
    fn fits(g: &Graph, class: &[usize], v: usize) -> bool {
        class.iter().all(|&u| g.is_adjacent(u, v))
    }
    fn go(g: &Graph, v: usize, classes: &mut Vec<Vec<usize>>, limit: usize) -> bool {
        if v == g.vertex_count() {
            return true;
        }
        for c in 0..classes.len() {
            if fits(g, &classes[c], v) {
                classes[c].push(v);
                if go(g, v + 1, classes, limit) {
                    return true;
                }
                classes[c].pop();
            }
        }
        if classes.len() < limit {
            classes.push(vec![v]);
            if go(g, v + 1, classes, limit) {
                return true;
            }
            classes.pop();
        }
        false
    }
    (1..=n.max(1)).find(|&k| go(g, 0, &mut Vec::new(), k)).unwrap()
}

/// Cartesian product; regular partitions of either factor lift to it.
pub fn cartesian_product(a: &Graph, b: &Graph) -> Graph {
    let m = b.vertex_count();
    Graph::from_fn(a.vertex_count() * m, |i, j| {
        let (x, y) = (i / m, i % m);
        let (u, v) = (j / m, j % m);
        (x == u && b.is_adjacent(y, v)) || (y == v && a.is_adjacent(x, u))
    })
    .unwrap()
}
