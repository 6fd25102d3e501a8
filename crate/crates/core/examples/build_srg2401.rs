//! Builds srg(2401,240,59,20) from a 40-point two-weight set in PG(3,7) and
//! checks every vertex pair.

use srg_borsuk::pg::{build_srg2401, Srg2401Construction};
use srg_borsuk::verify_srg;

fn main() {
    let built = build_srg2401(Srg2401Construction::Extraspecial).expect("construction");
    let (h1, h2) = built.two_weight.intersection_numbers();
    println!("two-weight set: {} points, hyperplanes meet it in {h1} or {h2} points", built.two_weight.points().len());
    for (hits, planes) in built.two_weight.histogram() {
        println!("  {planes} hyperplanes with {hits} points");
    }
    println!("connection set: {} vectors", built.connection.len());
    let g = &built.graph;
    println!("graph: {} vertices, {} edges", g.vertex_count(), g.edge_count());
    println!("{:?}", verify_srg(g).expect("strongly regular"));
}
