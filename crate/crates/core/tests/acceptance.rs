//! End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
//! if any criterion fails.

mod common;

use std::collections::{BTreeMap, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{affine_dim_oracle, all_subsets_clique_number, full_corpus, petersen, random_graph, srg_corpus};
use srg_borsuk::borsuk::{min_parts, read_table_csv, table_summarize, verdict};
use srg_borsuk::clique::{clique_cover_min_bruteforce, has_clique, max_clique, max_clique_through_vertex, CliqueDecision};
use srg_borsuk::euclid::{EuclideanRep, PairSampling, DEFAULT_EXACT_BUDGET};
use srg_borsuk::io::{read_dimacs, read_edges, write_dimacs, write_edges};
use srg_borsuk::partition::{
    case_check, derive_subsets, generate_planted, verify_partition, CandidatePartition, DegreePolicy, PlantedSpec,
};
use srg_borsuk::pg::{build_srg2401, verify_two_weight, Srg2401, Srg2401Construction};
use srg_borsuk::srg::{self, SrgParams};
use srg_borsuk::{verify_srg, Graph, SrgStructure, VertexSet};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn srg2401() -> &'static Srg2401 {
    static BUILT: std::sync::OnceLock<Srg2401> = std::sync::OnceLock::new();
    BUILT.get_or_init(|| build_srg2401(Srg2401Construction::Extraspecial).expect("construction succeeds"))
}

fn within(label: &str, elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed <= limit {
        Ok(())
    } else {
        Err(format!("{label} took {elapsed:?}, limit {limit:?}"))
    }
}

fn end_to_end_srg2401() -> Outcome {
    let start = Instant::now();
    let built = build_srg2401(Srg2401Construction::Extraspecial).map_err(|e| e.to_string())?;
    let structure = verify_srg(&built.graph).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let want = SrgStructure::Strongly(SrgParams::new(2401, 240, 59, 20));
    ensure!(structure == want, "got {structure:?}");
    within("build and verify", elapsed, Duration::from_secs(300))?;
    Ok(format!("srg(2401,240,59,20) built and verified over all pairs in {elapsed:.2?}"))
}

/// Counts incident points for all 400 hyperplanes by plain modular arithmetic.
fn hyperplane_histogram_oracle(points: &[[u8; 4]]) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for code in 1..7u32.pow(4) {
        let h: Vec<u32> = (0..4).map(|i| code / 7u32.pow(3 - i) % 7).collect();
        if h.iter().find(|&&c| c != 0) != Some(&1) {
            continue;
        }
        let hits = points
            .iter()
            .filter(|p| p.iter().zip(&h).map(|(&a, &b)| a as u32 * b).sum::<u32>() % 7 == 0)
            .count();
        *hist.entry(hits).or_insert(0) += 1;
    }
    hist
}

fn two_weight_certification() -> Outcome {
    let built = srg2401();
    let tw = verify_two_weight(built.two_weight.points(), &built.field, 5, 12).map_err(|e| e.to_string())?;
    let pts: Vec<[u8; 4]> = tw.points().iter().map(|p| *p.coords()).collect();
    ensure!(pts.len() == 40, "{} points", pts.len());
    let want = BTreeMap::from([(5, 360), (12, 40)]);
    ensure!(*tw.histogram() == want, "library histogram {:?}", tw.histogram());
    let oracle = hyperplane_histogram_oracle(&pts);
    ensure!(oracle == want, "oracle histogram {oracle:?}");
    Ok("40 points, hyperplane histogram {5: 360, 12: 40}".into())
}

fn spectrum_values() -> Outcome {
    let check = |v, k, l, m| -> Result<srg::Spectrum, String> {
        let p = SrgParams::new(v, k, l, m);
        let sp = srg::spectrum(&p).map_err(|e| e.to_string())?;
        let (k, l, m, v) = (k as i64, l as i64, m as i64, v as i64);
        // r and s are the roots of x^2 - (λ-μ)x - (k-μ); the trace of A vanishes
        for x in [sp.r, sp.s] {
            ensure!(x * x - (l - m) * x - (k - m) == 0, "{x} is not an eigenvalue of srg({v},{k},{l},{m})");
        }
        let g = v - 1 - sp.f;
        ensure!(k + sp.f * sp.r + g * sp.s == 0, "trace condition fails for srg({v},{k},{l},{m})");
        Ok(sp)
    };
    let sp = check(2401, 240, 59, 20)?;
    ensure!(
        (sp.discriminant, sp.r, sp.s, sp.f) == (2401, 44, -5, 240),
        "srg(2401): {sp:?}"
    );
    let f416 = check(416, 100, 36, 20)?.f;
    ensure!(f416 == 65, "srg(416).f = {f416}");
    let f31671 = check(31671, 3510, 693, 351)?.f;
    ensure!(f31671 == 782, "srg(31671).f = {f31671}");
    Ok("Δ=2401 r=44 s=-5 f=240; f=65; f=782".into())
}

fn clique_number() -> Outcome {
    let built = srg2401();
    let g = &built.graph;
    let field = built.field;
    let connection: HashSet<[u8; 4]> = built.connection.vectors().iter().copied().collect();

    let start = Instant::now();
    let line: Vec<usize> = {
        let d = built.connection.vectors()[0];
        let mut l: Vec<usize> = (0..7).map(|t| field.vector_index(&field.scale(t, &d))).collect();
        l.sort_unstable();
        l
    };
    ensure!(g.is_clique(&line), "affine line is not a clique");
    let found = has_clique(g, 7, None);
    let smoke = start.elapsed();
    ensure!(matches!(&found, CliqueDecision::Found(w) if w.len() == 7 && g.is_clique(w.as_slice())), "7-clique search gave {found:?}");
    within("7-clique smoke test", smoke, Duration::from_secs(1))?;

    let start = Instant::now();
    let through = max_clique_through_vertex(g, 0, None).map_err(|e| e.to_string())?;
    ensure!(through.proven_max && through.size == 9, "through vertex 1: size {} proven {}", through.size, through.proven_max);
    let vecs: Vec<[u8; 4]> = through.witness.iter().map(|v| field.vector_at(v)).collect();
    for (i, a) in vecs.iter().enumerate() {
        for b in &vecs[i + 1..] {
            ensure!(connection.contains(&field.sub_vec(a, b)), "witness pair {a:?} {b:?} differs outside the connection set");
        }
    }
    let absent = has_clique(g, 10, None);
    let elapsed = start.elapsed();
    ensure!(absent == CliqueDecision::Absent, "has_clique(10) = {absent:?}");
    within("clique number", elapsed, Duration::from_secs(600))?;
    Ok(format!(
        "9-clique witness {:?} verified, no 10-clique ({elapsed:.2?}); 7-clique in {smoke:.2?}",
        through.witness.iter().map(|v| v + 1).collect::<Vec<_>>()
    ))
}

fn verdict_reproduction() -> Outcome {
    let v = verdict(240, 2401, 9);
    ensure!(v.min_parts == 267 && v.is_counterexample, "{v:?}");
    let v = verdict(239, 2160, 9);
    ensure!(v.min_parts == 240 && !v.is_counterexample, "{v:?}");
    let v = verdict(65, 416, 5);
    ensure!(v.min_parts == 84 && v.is_counterexample, "{v:?}");
    let v = verdict(782, 31671, 23);
    ensure!(v.min_parts == 1377 && v.is_counterexample, "{v:?}");
    Ok("267 counterexample; 2160 = 240 x 9 not; 84; 1377".into())
}

fn table_reproduction() -> Outcome {
    let data = std::fs::File::open(concat!(env!("CARGO_MANIFEST_DIR"), "/data/fi23_rounds.csv")).map_err(|e| e.to_string())?;
    let rows = table_summarize(&read_table_csv(data).map_err(|e| e.to_string())?);
    // reference values of "size/ω > p", per row L1, L2, L3
    let printed: [&[u64]; 14] = [
        &[1283, 1283, 1283],
        &[1353, 1353, 1353],
        &[1261, 1261, 1261],
        &[1214, 1214, 1214],
        &[1122, 1122, 1122],
        &[1189, 1189, 1189],
        &[1111, 1104, 1104],
        &[1071, 1061, 1061],
        &[1006, 976, 976],
        &[968, 985, 985],
        &[922, 922],
        &[891, 891],
        &[838, 837],
        &[808, 810],
    ];
    let summary = [1353, 1353, 1261, 1214, 1189, 1189, 1111, 1071, 1006, 985, 922, 891, 838, 810];
    ensure!(rows.len() == 14, "{} rows", rows.len());
    let mut cells = 0;
    for (row, want) in rows.iter().zip(printed) {
        let got: Vec<u64> = row.cells.iter().map(|c| c.floor_ratio).collect();
        ensure!(got == want, "{}: ratios {got:?}, expected {want:?}", row.label);
        for c in &row.cells {
            ensure!(c.size > c.floor_ratio * c.omega_upper && c.size <= (c.floor_ratio + 1) * c.omega_upper, "{} {}: {} is not the strict floor", row.label, c.list, c.floor_ratio);
        }
        cells += got.len();
    }
    let got: Vec<u64> = rows.iter().map(|r| r.summary).collect();
    ensure!(got == summary, "summary {got:?}");
    Ok(format!("{cells} ratios and 14 summary values match"))
}

fn partition_suite() -> Outcome {
    let profiles = [[3, 3, 3, 6], [1, 1, 1, 1], [2, 5, 3, 0], [4, 4, 4, 10], [1, 6, 2, 7], [5, 2, 4, 3]];
    let mut checks = 0;
    for seed in 0..100u64 {
        let sizes = profiles[seed as usize % profiles.len()];
        let smallest = sizes[..3].iter().copied().min().unwrap();
        let spec = PlantedSpec {
            sizes,
            degree: DegreePolicy::Uniform { min: 0, max: smallest },
            inner_density: 0.4,
        };
        let (g, planted) = generate_planted(seed, &spec).map_err(|e| e.to_string())?;
        let cand = CandidatePartition { b: planted.blocks().clone(), c: planted.c().clone() };
        let part = verify_partition(&g, &cand).map_err(|e| format!("seed {seed}: {e}"))?;
        let step = derive_subsets(&VertexSet::all(g.vertex_count()), &part);
        for s in -5..=-1 {
            case_check(&g, &part, s).map_err(|e| format!("seed {seed}, s = {s}: {e}"))?;
            let rep = EuclideanRep::with_shift(&g, s);
            let p = step.p_certificate.as_ref().ok_or(format!("seed {seed}: no p certificate"))?;
            let q = step.q_certificate.as_ref().ok_or(format!("seed {seed}: no q certificate"))?;
            rep.check_drop_certificate(p).map_err(|e| format!("seed {seed}, s = {s}, p: {e}"))?;
            rep.check_drop_certificate(q).map_err(|e| format!("seed {seed}, s = {s}, q: {e}"))?;
            checks += 1;
        }
    }
    Ok(format!("100 planted partitions, {checks} shift cases, zero failures"))
}

fn dimension_oracles() -> Outcome {
    let mut graphs = 0;
    for e in srg_corpus() {
        let params = e.params.unwrap();
        let rep = EuclideanRep::with_params(&e.graph, params).map_err(|err| format!("{}: {err}", e.name))?;
        let f = srg::spectrum(&params).unwrap().f as usize;
        let s = rep.shift();
        let all = VertexSet::all(e.graph.vertex_count());
        let dim = rep.affine_dim_exact(&all, DEFAULT_EXACT_BUDGET).map_err(|err| err.to_string())?;
        ensure!(dim == f, "{}: affine dim {dim}, f = {f}", e.name);
        ensure!(affine_dim_oracle(&e.graph, s, all.as_slice()) == f, "{}: float oracle disagrees", e.name);
        for a in [0, e.graph.vertex_count() - 1] {
            let cert = rep.non_neighbourhood_certificate(a).map_err(|err| err.to_string())?;
            rep.check_drop_certificate(&cert).map_err(|err| format!("{}: {err}", e.name))?;
            let inner = rep.affine_dim_exact(&cert.inner, DEFAULT_EXACT_BUDGET).map_err(|err| err.to_string())?;
            let outer = rep.affine_dim_exact(&cert.outer, DEFAULT_EXACT_BUDGET).map_err(|err| err.to_string())?;
            ensure!(inner < outer, "{}: certified drop {outer} -> {inner} is not strict", e.name);
            ensure!(affine_dim_oracle(&e.graph, s, cert.inner.as_slice()) == inner, "{}: float oracle disagrees on W", e.name);
        }
        graphs += 1;
    }
    Ok(format!("{graphs} graphs: dim P(V) = f and certified drops strict"))
}

fn two_distance() -> Outcome {
    let g = &srg2401().graph;
    let rep = EuclideanRep::new(g).map_err(|e| e.to_string())?;
    let report = rep
        .verify_two_distance(PairSampling::Random { pairs: 100_000, seed: 7 })
        .map_err(|e| e.to_string())?;
    ensure!(report.pairs_checked == 100_000, "{report:?}");
    ensure!((report.adjacent_dist2, report.non_adjacent_dist2) == (392, 490), "{report:?}");
    for (i, j) in [(0, 1), (0, 2400), (17, 1234), (600, 601)] {
        let d = rep.explicit_dist2(i, j).map_err(|e| e.to_string())?;
        ensure!(d == if g.is_adjacent(i, j) { 392 } else { 490 }, "pair ({i},{j}) at {d}");
    }
    let pet = petersen();
    let prep = EuclideanRep::new(&pet).map_err(|e| e.to_string())?;
    let pr = prep.verify_two_distance(PairSampling::Exhaustive).map_err(|e| e.to_string())?;
    ensure!(pr.pairs_checked == 45 && (pr.adjacent_dist2, pr.non_adjacent_dist2) == (6, 12), "{pr:?}");
    Ok("10^5 sampled pairs in {392, 490}; Petersen 45 pairs in {6, 12}".into())
}

fn oracle_equivalence() -> Outcome {
    for seed in 0..200u64 {
        let n = 1 + (seed as usize % 18);
        let g = random_graph(n, [15, 35, 50, 70, 90][seed as usize % 5], seed);
        let (got, want) = (max_clique(&g, None).size, all_subsets_clique_number(&g));
        ensure!(got == want, "seed {seed}: {got} vs {want}");
    }
    for seed in 0..100u64 {
        let n = 1 + (seed as usize % 12);
        let g = random_graph(n, [20, 45, 75][seed as usize % 3], 1000 + seed);
        let bound = min_parts(n as u64, max_clique(&g, None).size as u64);
        let cover = clique_cover_min_bruteforce(&g).map_err(|e| e.to_string())? as u64;
        ensure!(bound <= cover, "seed {seed}: bound {bound} > cover {cover}");
    }
    Ok("200 clique numbers and 100 cover bounds agree".into())
}

fn round_trips() -> Outcome {
    let bytes = |g: &Graph, dimacs: bool| {
        let mut buf = Vec::new();
        if dimacs { write_dimacs(g, &mut buf) } else { write_edges(g, &mut buf) }.unwrap();
        buf
    };
    let corpus = full_corpus();
    for e in &corpus {
        let d = bytes(&e.graph, true);
        ensure!(read_dimacs(d.as_slice()).map_err(|x| x.to_string())?.0 == e.graph, "{}: dimacs", e.name);
        ensure!(read_edges(bytes(&e.graph, false).as_slice()).map_err(|x| x.to_string())?.0 == e.graph, "{}: edges", e.name);
        ensure!(d == bytes(&e.graph, true), "{}: dimacs output differs between runs", e.name);
    }
    Ok(format!("{} graphs round-trip, DIMACS byte-stable", corpus.len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("srg(2401) end-to-end", end_to_end_srg2401),
        ("two-weight certification", two_weight_certification),
        ("spectrum", spectrum_values),
        ("clique number", clique_number),
        ("verdict reproduction", verdict_reproduction),
        ("part-count table", table_reproduction),
        ("regular partition suite", partition_suite),
        ("dimension oracle agreement", dimension_oracles),
        ("two-distance check", two_distance),
        ("oracle equivalence", oracle_equivalence),
        ("format round-trips", round_trips),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{took:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{took:.2?}]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
