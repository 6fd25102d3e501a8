//! Columns of A - sI form a two-distance set; a hyperplane certificate drops
//! the dimension of a vertex's non-neighbours by one.

use srg_borsuk::euclid::{EuclideanRep, PairSampling, DEFAULT_EXACT_BUDGET};
use srg_borsuk::pg::{build_srg2401, Srg2401Construction};
use srg_borsuk::{Graph, VertexSet};

fn main() {
    let g = build_srg2401(Srg2401Construction::Extraspecial).unwrap().graph;
    let rep = EuclideanRep::new(&g).unwrap();
    let report = rep.verify_two_distance(PairSampling::Random { pairs: 20_000, seed: 1 }).unwrap();
    println!(
        "srg(2401): {} pairs, squared distances {} (adjacent) and {} (non-adjacent)",
        report.pairs_checked, report.adjacent_dist2, report.non_adjacent_dist2
    );
    let dim = rep.affine_dim_lower_mod_p(&VertexSet::all(g.vertex_count()), &[1_000_003]).unwrap();
    println!("affine dimension of all 2401 points: {dim}");

    let rook = Graph::from_fn(16, |i, j| i / 4 == j / 4 || i % 4 == j % 4).unwrap();
    let rep = EuclideanRep::new(&rook).unwrap();
    let cert = rep.non_neighbourhood_certificate(0).unwrap();
    rep.check_drop_certificate(&cert).unwrap();
    let outer = rep.affine_dim_exact(&cert.outer, DEFAULT_EXACT_BUDGET).unwrap();
    let inner = rep.affine_dim_exact(&cert.inner, DEFAULT_EXACT_BUDGET).unwrap();
    println!("4x4 rook: all points span {outer}, the {} non-neighbours of vertex 1 span {inner}", cert.inner.len());
}
