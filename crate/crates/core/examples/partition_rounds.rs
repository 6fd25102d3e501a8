//! A planted regular partition drives two certified dimension drops; exact
//! ranks confirm each one.

use srg_borsuk::euclid::{EuclideanRep, DEFAULT_EXACT_BUDGET};
use srg_borsuk::partition::{case_check, generate_planted, rounds_driver, DegreePolicy, PlantedSpec};
use srg_borsuk::VertexSet;

fn main() {
    let spec = PlantedSpec {
        sizes: [5, 5, 6, 8],
        degree: DegreePolicy::Uniform { min: 1, max: 3 },
        inner_density: 0.5,
    };
    let (g, part) = generate_planted(42, &spec).unwrap();
    let s = -3;
    let cases = case_check(&g, &part, s).unwrap();
    println!("case analysis holds on {} vertices", cases.vertices_checked);

    let rep = EuclideanRep::with_shift(&g, s);
    let dim0 = rep.affine_dim_exact(&VertexSet::all(g.vertex_count()), DEFAULT_EXACT_BUDGET).unwrap();
    let outcome = rounds_driver(&g, s, std::slice::from_ref(&part), Some(dim0)).unwrap();
    for round in &outcome.rounds {
        for (name, z, bound) in [("odd", &round.step.z_odd, round.dim_bound_odd), ("even", &round.step.z_even, round.dim_bound_even)] {
            let exact = rep.affine_dim_exact(z, DEFAULT_EXACT_BUDGET).unwrap();
            println!("round {} {name}: |Z| = {}, bound {bound:?}, exact {exact}", round.round, z.len());
        }
    }
    println!("sizes {:?}, start dimension {dim0}", outcome.sizes(g.vertex_count()));
}
