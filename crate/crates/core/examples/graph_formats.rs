//! Writes one graph in every supported format and reads the readable ones back.

use srg_borsuk::io::{read_dimacs, read_edges, write_dimacs, write_dre, write_edges};
use srg_borsuk::Graph;

fn main() {
    let g = Graph::from_fn(9, |i, j| i / 3 == j / 3 || i % 3 == j % 3).unwrap();

    let mut dimacs = Vec::new();
    write_dimacs(&g, &mut dimacs).unwrap();
    let mut edges = Vec::new();
    write_edges(&g, &mut edges).unwrap();
    let mut dre = Vec::new();
    write_dre(&g, &mut dre).unwrap();

    for (name, bytes) in [("dimacs", &dimacs), ("edges", &edges), ("dre", &dre)] {
        println!("--- {name}\n{}", String::from_utf8_lossy(bytes));
    }
    assert!(read_dimacs(dimacs.as_slice()).unwrap().0 == g);
    assert!(read_edges(edges.as_slice()).unwrap().0 == g);
    println!("dimacs and edge list read back unchanged");
}
