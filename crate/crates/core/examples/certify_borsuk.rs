//! The full argument for srg(2401,240,59,20): dimension from the spectrum,
//! clique number by exhaustive search, then the part-count bound.

use srg_borsuk::borsuk::verdict;
use srg_borsuk::clique::{has_clique, max_clique_through_vertex, CliqueDecision};
use srg_borsuk::euclid::EuclideanRep;
use srg_borsuk::pg::{build_srg2401, Srg2401Construction};

fn main() {
    let g = build_srg2401(Srg2401Construction::Extraspecial).expect("construction").graph;
    let rep = EuclideanRep::new(&g).expect("srg");
    let f = rep.srg().unwrap().spectrum.f as u64;

    let through = max_clique_through_vertex(&g, 0, None).unwrap();
    println!("largest clique through vertex 1: {} ({} nodes)", through.size, through.nodes_explored);
    assert_eq!(has_clique(&g, through.size + 1, None), CliqueDecision::Absent);

    let all = verdict(f, g.vertex_count() as u64, through.size as u64);
    println!("whole vertex set: {all}");

    let cert = rep.non_neighbourhood_certificate(0).unwrap();
    rep.check_drop_certificate(&cert).expect("certificate");
    let sub = verdict(f - 1, cert.inner.len() as u64, through.size as u64);
    println!("non-neighbours of vertex 1: {sub}");
}
