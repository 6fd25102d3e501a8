//! Strong regularity and spectra of a few classical graphs.

use srg_borsuk::srg::spectrum;
use srg_borsuk::{verify_srg, Graph, SrgStructure};

fn main() {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let petersen = Graph::from_fn(10, |i, j| {
        let (a, b) = (pairs[i], pairs[j]);
        a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1
    })
    .unwrap();
    let rook = Graph::from_fn(16, |i, j| i / 4 == j / 4 || i % 4 == j % 4).unwrap();
    let cycle = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();

    for (name, g) in [("Petersen", petersen), ("4x4 rook", rook), ("rook complement", rook_complement()), ("C6", cycle)] {
        match verify_srg(&g) {
            Ok(SrgStructure::Strongly(p)) => {
                let sp = spectrum(&p).unwrap();
                println!("{name}: {p}, eigenvalues {} {}^{} {}^{}", p.k, sp.r, sp.f, sp.s, p.v as i64 - 1 - sp.f);
            }
            Ok(other) => println!("{name}: {other:?}"),
            Err(e) => println!("{name}: {e}"),
        }
    }
}

fn rook_complement() -> Graph {
    Graph::from_fn(16, |i, j| i / 4 == j / 4 || i % 4 == j % 4).unwrap().complement()
}
