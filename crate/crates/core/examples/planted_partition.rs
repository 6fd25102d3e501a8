//! Random graphs with a planted regular partition, checked and written out.

use srg_borsuk::io::{write_edges, write_partition};
use srg_borsuk::partition::{generate_planted, verify_partition, CandidatePartition, DegreePolicy, PlantedSpec};

fn main() {
    let spec = PlantedSpec {
        sizes: [2, 3, 2, 4],
        degree: DegreePolicy::Fixed(1),
        inner_density: 0.3,
    };
    let (g, part) = generate_planted(7, &spec).unwrap();
    let cand = CandidatePartition {
        b: part.blocks().clone(),
        c: part.c().clone(),
    };
    verify_partition(&g, &cand).unwrap();
    let mut out = std::io::stdout().lock();
    write_edges(&g, &mut out).unwrap();
    write_partition(&cand, &mut out).unwrap();
}
