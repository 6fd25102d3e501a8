//! Maximum clique, clique decision and a node budget on srg(2401).

use srg_borsuk::clique::{has_clique, max_clique, max_clique_through_vertex};
use srg_borsuk::pg::{build_srg2401, Srg2401Construction};

fn main() {
    let g = build_srg2401(Srg2401Construction::Extraspecial).unwrap().graph;

    let r = max_clique_through_vertex(&g, 0, None).unwrap();
    let labels: Vec<usize> = r.witness.iter().map(|v| v + 1).collect();
    println!("through vertex 1: size {} proven {} witness {labels:?}", r.size, r.proven_max);

    println!("7-clique: {:?}", has_clique(&g, 7, None));

    let cut = max_clique(&g, Some(200));
    println!("budget 200: size {} proven {} budget hit {}", cut.size, cut.proven_max, cut.budget_hit);
}
