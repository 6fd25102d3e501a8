mod common;

use common::{full_corpus, petersen, random_graph};
use proptest::prelude::*;
use srg_borsuk::euclid::EuclideanRep;
use srg_borsuk::io::{
    read_certificate, read_dimacs, read_edges, read_graph_auto, read_partition, write_certificate, write_dimacs,
    write_dre, write_edges, write_partition, FormatError, ReadWarning,
};
use srg_borsuk::partition::{generate_planted, CandidatePartition, DegreePolicy, PlantedSpec};
use srg_borsuk::pg::{build_srg2401, Srg2401Construction};
use srg_borsuk::Graph;

fn dimacs_bytes(g: &Graph) -> Vec<u8> {
    let mut buf = Vec::new();
    write_dimacs(g, &mut buf).unwrap();
    buf
}

fn edges_bytes(g: &Graph) -> Vec<u8> {
    let mut buf = Vec::new();
    write_edges(g, &mut buf).unwrap();
    buf
}

#[test]
fn corpus_round_trips_through_both_formats() {
    for e in full_corpus() {
        let (back, warnings) = read_dimacs(dimacs_bytes(&e.graph).as_slice()).unwrap();
        assert!(warnings.is_empty(), "{}", e.name);
        assert!(back == e.graph, "{}: dimacs", e.name);
        let (back, warnings) = read_edges(edges_bytes(&e.graph).as_slice()).unwrap();
        assert!(warnings.is_empty(), "{}", e.name);
        assert!(back == e.graph, "{}: edges", e.name);
        assert!(read_graph_auto(dimacs_bytes(&e.graph).as_slice()).unwrap().0 == e.graph);
        assert!(read_graph_auto(edges_bytes(&e.graph).as_slice()).unwrap().0 == e.graph);
    }
}

#[test]
fn dimacs_output_is_byte_stable() {
    for e in full_corpus() {
        assert_eq!(dimacs_bytes(&e.graph), dimacs_bytes(&e.graph), "{}", e.name);
        let (back, _) = read_dimacs(dimacs_bytes(&e.graph).as_slice()).unwrap();
        assert_eq!(dimacs_bytes(&back), dimacs_bytes(&e.graph), "{}", e.name);
    }
}

#[test]
fn srg2401_dimacs_header() {
    let g = build_srg2401(Srg2401Construction::Extraspecial).unwrap().graph;
    let bytes = dimacs_bytes(&g);
    let text = String::from_utf8(bytes).unwrap();
    assert_eq!(text.lines().next(), Some("p edge 2401 288120"));
    assert_eq!(text.lines().count(), 1 + 288_120);
    assert!(read_dimacs(text.as_bytes()).unwrap().0 == g);
}

#[test]
fn dre_lists_each_edge_once() {
    let mut buf = Vec::new();
    write_dre(&petersen(), &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n=10 $=1 g"));
    let body: Vec<&str> = lines.collect();
    assert_eq!(body.last(), Some(&"."));
    let entries: usize = body[..body.len() - 1]
        .iter()
        .map(|l| l.split_once(':').unwrap().1.trim_end_matches(';').split_whitespace().count())
        .sum();
    assert_eq!(entries, 15);
    assert!(text.ends_with(".\n") && !text.contains('\r'));
}

#[test]
fn dimacs_reader_tolerates_comments_and_reports_duplicates() {
    let text = "c comment\np edge 3 2\ne 1 2\ne 2 1\ne 2 3\n";
    let (g, warnings) = read_dimacs(text.as_bytes()).unwrap();
    assert_eq!(g.edge_count(), 2);
    assert!(warnings.iter().any(|w| matches!(w, ReadWarning::DuplicateEdge { line: 4, .. })));
    let (_, warnings) = read_dimacs("p edge 3 5\ne 1 2\n".as_bytes()).unwrap();
    assert_eq!(warnings, vec![ReadWarning::EdgeCountMismatch { declared: 5, found: 1 }]);
}

#[test]
fn malformed_inputs_are_rejected_with_line_numbers() {
    assert!(matches!(
        read_dimacs("p edge 3 1\ne 1 4\n".as_bytes()),
        Err(FormatError::EndpointOutOfRange { line: 2, endpoint: 4, n: 3 })
    ));
    assert!(matches!(read_dimacs("e 1 2\n".as_bytes()), Err(FormatError::MalformedHeader { .. })));
    assert!(matches!(read_edges("3\n1 x\n".as_bytes()), Err(FormatError::Parse { line: 2, .. })));
    assert!(read_dimacs("p edge 3 1\ne 2 2\n".as_bytes()).is_err());
}

#[test]
fn partitions_and_certificates_round_trip() {
    let spec = PlantedSpec {
        sizes: [3, 4, 2, 5],
        degree: DegreePolicy::Fixed(1),
        inner_density: 0.5,
    };
    let (g, part) = generate_planted(11, &spec).unwrap();
    let cand = CandidatePartition {
        b: part.blocks().clone(),
        c: part.c().clone(),
    };
    let mut buf = Vec::new();
    write_partition(&cand, &mut buf).unwrap();
    let back = read_partition(buf.as_slice(), g.vertex_count()).unwrap();
    assert_eq!(back.b, cand.b);
    assert_eq!(back.c, cand.c);

    let pet = petersen();
    let rep = EuclideanRep::new(&pet).unwrap();
    let cert = rep.non_neighbourhood_certificate(0).unwrap();
    let mut buf = Vec::new();
    write_certificate(&cert, 10, &mut buf).unwrap();
    let back = read_certificate(buf.as_slice(), 10).unwrap();
    assert_eq!(back, cert);
    assert_eq!(rep.check_drop_certificate(&back), Ok(()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn random_graphs_round_trip(n in 1usize..60, density in 0u64..=100, seed in any::<u64>()) {
        let g = random_graph(n, density, seed);
        prop_assert!(read_dimacs(dimacs_bytes(&g).as_slice()).unwrap().0 == g);
        prop_assert!(read_edges(edges_bytes(&g).as_slice()).unwrap().0 == g);
    }
}
