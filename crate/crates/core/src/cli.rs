//! Command-line front end. Every subcommand fills a [`RunReport`] which is
//! printed as text or, with `--json`, as a single JSON object.
//!
//! Exit codes: 0 when every check passed, 1 when a check failed or a result is
//! unproven, 2 on usage errors. Vertex labels on the command line and in files
//! are 1-based.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::borsuk::{self, Provenance, Source};
use crate::clique::{self, CliqueDecision, CliqueResult};
use crate::euclid::{EuclideanRep, PairSampling, DEFAULT_EXACT_BUDGET};
use crate::graph::{verify_srg, Graph, SrgStructure, VertexSet};
use crate::io::{self as formats, GraphFormat};
use crate::partition::{self, DegreePolicy, PlantedSpec, RegularPartition};
use crate::pg::{build_srg2401, Srg2401Construction};
use crate::srg::{self, SrgParams};

type CliResult<T> = Result<T, Box<dyn std::error::Error + Send + Sync>>;

const SRG2401: SrgParams = SrgParams::new(2401, 240, 59, 20);

#[derive(Parser, Debug)]
#[command(name = "srg-borsuk", version, about = "Strongly regular graphs and Borsuk counterexample certificates")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build srg(2401,240,59,20) from a two-weight set in PG(3,7).
    BuildSrg2401(BuildArgs),
    /// Build srg(2401,240,59,20), bound its clique number and decide the Borsuk verdict.
    CertifyBorsuk(CertifyArgs),
    /// Check whether a graph file is strongly regular.
    VerifySrg(VerifySrgArgs),
    /// Maximum clique or clique decision on a graph file.
    Clique(CliqueArgs),
    /// Apply regular partitions in rounds and certify the dimension drops.
    PartitionRun(PartitionRunArgs),
    /// Render the part-count table from a CSV of subset sizes and clique bounds.
    Table(TableArgs),
    /// Borsuk verdict from a dimension bound, a size and a clique bound.
    Verdict(VerdictArgs),
    /// Convert a graph file, or the built srg(2401), to another format.
    Export(ExportArgs),
    /// Generate a random graph with a planted regular partition.
    Planted(PlantedArgs),
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    #[arg(long, default_value = "extraspecial")]
    pub construction: Srg2401Construction,
    /// Write the graph here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value = "dimacs")]
    pub format: GraphFormat,
    /// Write the 40 projective points, one per line.
    #[arg(long)]
    pub dump_twoweight: Option<PathBuf>,
    /// Skip the all-pairs strong regularity check.
    #[arg(long)]
    pub skip_srg_check: bool,
}

/// Which vertex subset `certify-borsuk` reasons about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubsetSpec {
    All,
    /// Non-neighbours of a 1-based vertex.
    NonNeighbourhood(usize),
}

impl std::str::FromStr for SubsetSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            return Ok(SubsetSpec::All);
        }
        let vertex = s
            .strip_prefix("nonneighbourhood:")
            .or_else(|| s.strip_prefix("nonneighborhood:"))
            .ok_or_else(|| format!("expected `all` or `nonneighbourhood:<vertex>`, got `{s}`"))?;
        match vertex.parse::<usize>() {
            Ok(v) if v >= 1 => Ok(SubsetSpec::NonNeighbourhood(v)),
            _ => Err(format!("vertex must be a positive integer, got `{vertex}`")),
        }
    }
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    #[arg(long, default_value = "extraspecial")]
    pub construction: Srg2401Construction,
    /// `all` or `nonneighbourhood:<vertex>`.
    #[arg(long, default_value = "all")]
    pub subset: SubsetSpec,
    /// Node budget for the clique search.
    #[arg(long)]
    pub omega_budget: Option<u64>,
    /// Vertex through which cliques are searched (the graph is vertex-transitive).
    #[arg(long, default_value_t = 1)]
    pub vertex: usize,
    /// Randomly sampled pairs for the two-distance check (0 disables it).
    #[arg(long, default_value_t = 100_000)]
    pub sample_pairs: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long)]
    pub skip_srg_check: bool,
    /// Write the hyperplane certificate of the non-neighbourhood here.
    #[arg(long)]
    pub certificate_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifySrgArgs {
    /// DIMACS or edge-list file.
    pub file: PathBuf,
    /// Also compare explicit squared distances with the closed forms.
    #[arg(long)]
    pub two_distance: bool,
}

#[derive(Args, Debug)]
pub struct CliqueArgs {
    pub file: PathBuf,
    /// Decide whether a clique of this size exists.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub decision: Option<u64>,
    /// Restrict to cliques through this 1-based vertex.
    #[arg(long, conflicts_with = "decision")]
    pub through_vertex: Option<usize>,
    /// Node budget.
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Args, Debug)]
pub struct PartitionRunArgs {
    pub graph: PathBuf,
    /// Partition files in round order.
    #[arg(required = true)]
    pub partitions: Vec<PathBuf>,
    /// Shift `s` of `A − sI`; defaults to the smallest eigenvalue of an srg.
    #[arg(long, allow_hyphen_values = true)]
    pub shift: Option<i64>,
    /// Known dimension of the whole point set; defaults to `f` for an srg.
    #[arg(long)]
    pub initial_dim: Option<usize>,
    /// Assert the common number of neighbours inside a block.
    #[arg(long)]
    pub block_valency: Option<usize>,
    /// Assert the common number of neighbours of a C vertex in each block.
    #[arg(long)]
    pub c_valency: Option<usize>,
    /// Recompute every affine dimension exactly (small graphs only).
    #[arg(long)]
    pub exact_dim: bool,
    /// Write drop certificates into this directory.
    #[arg(long)]
    pub certificates: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    /// CSV with columns label,dim,list,size,omega[,vertex].
    pub csv: PathBuf,
    /// Also write the summarized table as CSV.
    #[arg(long)]
    pub csv_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerdictArgs {
    #[arg(long, required_unless_present = "input")]
    pub dim: Option<u64>,
    #[arg(long, required_unless_present = "input")]
    pub size: Option<u64>,
    #[arg(long, required_unless_present = "input", value_parser = clap::value_parser!(u64).range(1..))]
    pub omega: Option<u64>,
    /// JSON record `{"dim": …, "size": …, "omega_upper": …}`.
    #[arg(long, conflicts_with_all = ["dim", "size", "omega"])]
    pub input: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ExportArgs {
    /// Input graph; without it the srg(2401) is built.
    pub input: Option<PathBuf>,
    #[arg(long, default_value = "extraspecial")]
    pub construction: Srg2401Construction,
    #[arg(long, default_value = "dimacs")]
    pub format: GraphFormat,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Args, Debug)]
pub struct PlantedArgs {
    #[arg(long)]
    pub seed: u64,
    /// `|B1|,|B2|,|B3|,|C|`.
    #[arg(long, default_value = "4,4,4,8", value_parser = parse_sizes)]
    pub sizes: [usize; 4],
    /// Neighbours of each C vertex in each block: `d` or `min..max`.
    #[arg(long, default_value = "1")]
    pub degree: String,
    /// Edge probability inside blocks and inside C.
    #[arg(long, default_value_t = 0.5)]
    pub density: f64,
    #[arg(long)]
    pub out_graph: PathBuf,
    #[arg(long)]
    pub out_partition: PathBuf,
    #[arg(long, default_value = "edges")]
    pub format: GraphFormat,
}

fn parse_sizes(text: &str) -> Result<[usize; 4], String> {
    let parts: Vec<usize> = text
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| format!("invalid size `{t}`")))
        .collect::<Result<_, _>>()?;
    parts
        .try_into()
        .map_err(|p: Vec<usize>| format!("expected 4 comma-separated sizes, got {}", p.len()))
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of one subcommand.
#[derive(Clone, Debug, Default, Serialize)]
pub struct RunReport {
    pub subcommand: String,
    pub inputs: BTreeMap<String, Value>,
    pub results: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub provenance: Vec<String>,
    pub timings_ms: BTreeMap<String, f64>,
    pub exit_code: i32,
    /// Preformatted text shown only in the human rendering.
    #[serde(skip)]
    pub text: Vec<String>,
}

impl RunReport {
    fn new(subcommand: &str) -> Self {
        RunReport {
            subcommand: subcommand.into(),
            ..Default::default()
        }
    }

    fn input(&mut self, key: &str, value: impl Serialize) {
        self.inputs.insert(key.into(), json!(value));
    }

    fn result(&mut self, key: &str, value: impl Serialize) {
        self.results.insert(key.into(), json!(value));
    }

    fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) -> bool {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
        passed
    }

    fn provenance(&mut self, line: impl Into<String>) {
        self.provenance.push(line.into());
    }

    fn timed<T>(&mut self, label: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings_ms.insert(label.into(), start.elapsed().as_secs_f64() * 1e3);
        out
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn finish(&mut self) {
        self.exit_code = if self.all_passed() { 0 } else { 1 };
    }

    pub fn render_text<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        let show = |v: &Value| match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        writeln!(out, "{}", self.subcommand)?;
        for (k, v) in &self.inputs {
            writeln!(out, "  input  {k} = {}", show(v))?;
        }
        for (k, v) in &self.results {
            writeln!(out, "  result {k} = {}", show(v))?;
        }
        for block in &self.text {
            for line in block.lines() {
                writeln!(out, "  | {line}")?;
            }
        }
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(out, "  check  {status} {}: {}", c.name, c.detail)?;
        }
        for p in &self.provenance {
            writeln!(out, "  from   {p}")?;
        }
        for (k, ms) in &self.timings_ms {
            writeln!(out, "  time   {k}: {ms:.1} ms")?;
        }
        writeln!(out, "exit {}", self.exit_code)
    }
}

/// Parses `args` (including the program name), runs the subcommand and writes
/// the report to `out`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            if code == 0 {
                let _ = write!(out, "{}", e.render());
            } else {
                let _ = e.print();
            }
            return code;
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        pool = pool.num_threads(n);
    }
    let report = match pool.build() {
        Ok(pool) => pool.install(|| execute(&cli.command)),
        Err(e) => {
            eprintln!("error: cannot start thread pool: {e}");
            return 1;
        }
    };
    let written = if cli.json {
        serde_json::to_writer_pretty(&mut *out, &report)
            .map_err(std::io::Error::from)
            .and_then(|_| writeln!(out))
    } else {
        report.render_text(&mut *out)
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return 1;
    }
    for c in report.checks.iter().filter(|c| c.name == "run" && !c.passed) {
        eprintln!("error: {}", c.detail);
    }
    report.exit_code
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::BuildSrg2401(_) => "build-srg2401",
            Command::CertifyBorsuk(_) => "certify-borsuk",
            Command::VerifySrg(_) => "verify-srg",
            Command::Clique(_) => "clique",
            Command::PartitionRun(_) => "partition-run",
            Command::Table(_) => "table",
            Command::Verdict(_) => "verdict",
            Command::Export(_) => "export",
            Command::Planted(_) => "planted",
        }
    }
}

/// Runs one subcommand. Errors become a failed `run` check.
pub fn execute(command: &Command) -> RunReport {
    let mut report = RunReport::new(command.name());
    let outcome = match command {
        Command::BuildSrg2401(a) => build_cmd(a, &mut report),
        Command::CertifyBorsuk(a) => certify_cmd(a, &mut report),
        Command::VerifySrg(a) => verify_srg_cmd(a, &mut report),
        Command::Clique(a) => clique_cmd(a, &mut report),
        Command::PartitionRun(a) => partition_cmd(a, &mut report),
        Command::Table(a) => table_cmd(a, &mut report),
        Command::Verdict(a) => verdict_cmd(a, &mut report),
        Command::Export(a) => export_cmd(a, &mut report),
        Command::Planted(a) => planted_cmd(a, &mut report),
    };
    if let Err(e) = outcome {
        report.check("run", false, e.to_string());
    }
    report.finish();
    report
}

fn load_graph(path: &Path, report: &mut RunReport) -> CliResult<Graph> {
    let file = File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let (g, warnings) = formats::read_graph_auto(BufReader::new(file))?;
    for w in warnings {
        report.provenance(format!("reader warning: {w:?}"));
    }
    Ok(g)
}

fn create(path: &Path) -> CliResult<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path).map_err(|e| format!("{}: {e}", path.display()))?))
}

fn one_based(set: &VertexSet) -> Vec<usize> {
    set.iter().map(|v| v + 1).collect()
}

fn srg_params_check(g: &Graph, report: &mut RunReport, expected: SrgParams) -> CliResult<bool> {
    let found = report.timed("verify_srg", || verify_srg(g));
    let params = match found {
        Ok(SrgStructure::Strongly(p)) => p,
        Ok(SrgStructure::Complete { v }) => {
            return Ok(report.check("verify_srg", false, format!("complete graph on {v} vertices")));
        }
        Err(e) => return Ok(report.check("verify_srg", false, e.to_string())),
    };
    report.provenance(format!("{params}: verify_srg over all vertex pairs"));
    Ok(report.check(
        "verify_srg",
        params == expected,
        format!("found {params}, expected {expected}"),
    ))
}

fn build_cmd(args: &BuildArgs, report: &mut RunReport) -> CliResult<()> {
    report.input("construction", args.construction);
    let built = report.timed("build", || build_srg2401(args.construction))?;
    let histogram = built.two_weight.histogram();
    report.result("two_weight_points", built.two_weight.points().len());
    report.result("hyperplane_histogram", histogram);
    let expected_hist = [(5usize, 360usize), (12, 40)].into_iter().collect();
    report.check(
        "two-weight histogram",
        *histogram == expected_hist,
        format!("{histogram:?} over 400 hyperplanes"),
    );
    report.result("connection_set_size", built.connection.len());
    report.result("vertices", built.graph.vertex_count());
    report.result("edges", built.graph.edge_count());

    if args.skip_srg_check {
        report.provenance(format!("{SRG2401}: two-weight set theorem, all-pairs check skipped"));
    } else {
        srg_params_check(&built.graph, report, SRG2401)?;
    }
    let sp = srg::spectrum(&SRG2401)?;
    report.result("params", SRG2401.to_string());
    report.result("spectrum", sp);
    report.result("gram", srg::gram_entries(&SRG2401, &sp));
    report.result("distance_squares", srg::distance_squares(&SRG2401, &sp));

    if let Some(path) = &args.out {
        let writer = create(path)?;
        report.timed("write", || formats::write_graph(&built.graph, args.format, writer))?;
        report.result("graph_file", path.display().to_string());
    }
    if let Some(path) = &args.dump_twoweight {
        formats::write_points(built.two_weight.points(), create(path)?)?;
        report.result("twoweight_file", path.display().to_string());
    }
    Ok(())
}

fn certify_cmd(args: &CertifyArgs, report: &mut RunReport) -> CliResult<()> {
    report.input("construction", args.construction);
    report.input(
        "subset",
        match args.subset {
            SubsetSpec::All => "all".to_string(),
            SubsetSpec::NonNeighbourhood(a) => format!("nonneighbourhood:{a}"),
        },
    );
    report.input("omega_budget", args.omega_budget);
    let built = report.timed("build", || build_srg2401(args.construction))?;
    let g = &built.graph;
    if args.skip_srg_check {
        report.provenance(format!("{SRG2401}: two-weight set theorem"));
    } else if !srg_params_check(g, report, SRG2401)? {
        return Ok(());
    }
    let rep = EuclideanRep::with_params(g, SRG2401)?;
    let data = *rep.srg().expect("srg data");
    report.result("spectrum", data.spectrum);

    if args.sample_pairs > 0 {
        let sampling = PairSampling::Random {
            pairs: args.sample_pairs,
            seed: args.seed,
        };
        match report.timed("two_distance", || rep.verify_two_distance(sampling)) {
            Ok(r) => {
                report.check(
                    "two-distance",
                    true,
                    format!(
                        "{} sampled pairs at squared distance {} or {}",
                        r.pairs_checked, r.adjacent_dist2, r.non_adjacent_dist2
                    ),
                );
            }
            Err(e) => {
                report.check("two-distance", false, e.to_string());
            }
        }
    }

    let vertex = args.vertex;
    if vertex == 0 || vertex > g.vertex_count() {
        return Err(format!("vertex {vertex} outside 1..={}", g.vertex_count()).into());
    }
    let omega = report.timed("clique", || clique::max_clique_through_vertex(g, vertex - 1, args.omega_budget))?;
    report.result("omega_witness", one_based(&omega.witness));
    report.result("omega_nodes_explored", omega.nodes_explored);
    if !report.check(
        "clique number proven",
        omega.proven_max,
        if omega.proven_max {
            format!("maximum clique through vertex {vertex} has size {}", omega.size)
        } else {
            format!("budget exhausted; best clique found has size {}", omega.size)
        },
    ) {
        report.result("verdict", "unproven");
        return Ok(());
    }
    report.result("omega", omega.size);
    report.provenance(format!(
        "omega = {}: exhaustive search through vertex {vertex}, {} nodes; Cayley graphs are vertex-transitive",
        omega.size, omega.nodes_explored
    ));
    let omega_source = Source::CliqueSearch {
        through_vertex: Some(vertex),
        nodes_explored: omega.nodes_explored,
    };
    let f = data.spectrum.f as u64;

    let verdict = match args.subset {
        SubsetSpec::All => {
            report.provenance(format!("dim P(V) = f = {f}: multiplicity formula"));
            borsuk::verdict(f, g.vertex_count() as u64, omega.size as u64).with_provenance(Provenance {
                dim: Source::SpectrumFormula {
                    params: SRG2401.to_string(),
                },
                size: Source::Given,
                omega: omega_source,
            })
        }
        SubsetSpec::NonNeighbourhood(a) => {
            if a > g.vertex_count() {
                return Err(format!("vertex {a} outside 1..={}", g.vertex_count()).into());
            }
            let cert = rep.non_neighbourhood_certificate(a - 1)?;
            let accepted = rep.check_drop_certificate(&cert);
            report.check(
                "non-neighbourhood certificate",
                accepted.is_ok(),
                match &accepted {
                    Ok(()) => format!("<y_{a}, y_j> = {} on all {} non-neighbours, witness {a}", cert.c, cert.inner.len()),
                    Err(e) => e.to_string(),
                },
            );
            if let Some(path) = &args.certificate_out {
                formats::write_certificate(&cert, g.vertex_count(), create(path)?)?;
                report.result("certificate_file", path.display().to_string());
            }
            report.provenance(format!("dim P(W) <= f - 1 = {}: hyperplane certificate x = y_{a}", f - 1));
            borsuk::verdict(f - 1, cert.inner.len() as u64, omega.size as u64).with_provenance(Provenance {
                dim: Source::CertificateChain { start: f, drops: 1 },
                size: Source::Given,
                omega: omega_source,
            })
        }
    };
    report.result("min_parts", verdict.min_parts);
    report.result("is_counterexample", verdict.is_counterexample);
    report.text.push(verdict.to_string());
    report.result("verdict", &verdict);
    Ok(())
}

fn verify_srg_cmd(args: &VerifySrgArgs, report: &mut RunReport) -> CliResult<()> {
    report.input("file", args.file.display().to_string());
    let g = load_graph(&args.file, report)?;
    report.result("vertices", g.vertex_count());
    report.result("edges", g.edge_count());
    let structure = match report.timed("verify_srg", || verify_srg(&g)) {
        Ok(s) => s,
        Err(e) => {
            report.check("strongly regular", false, e.to_string());
            return Ok(());
        }
    };
    let params = match structure {
        SrgStructure::Complete { v } => {
            report.check("strongly regular", true, format!("complete graph K{v}"));
            return Ok(());
        }
        SrgStructure::Strongly(p) => p,
    };
    report.check("strongly regular", true, params.to_string());
    report.result("params", params);
    match srg::spectrum(&params) {
        Ok(sp) => {
            report.result("spectrum", sp);
            report.result("f", sp.f);
            report.result("s", sp.s);
        }
        Err(e) => report.result("spectrum", e.to_string()),
    }
    if args.two_distance {
        let rep = EuclideanRep::with_params(&g, params)?;
        let sampling = if g.vertex_count() <= 1000 {
            PairSampling::Exhaustive
        } else {
            PairSampling::Random {
                pairs: 100_000,
                seed: 1,
            }
        };
        match rep.verify_two_distance(sampling) {
            Ok(r) => {
                report.check(
                    "two-distance",
                    true,
                    format!("{} pairs at squared distance {} or {}", r.pairs_checked, r.adjacent_dist2, r.non_adjacent_dist2),
                );
            }
            Err(e) => {
                report.check("two-distance", false, e.to_string());
            }
        }
    }
    Ok(())
}

fn report_clique(report: &mut RunReport, r: &CliqueResult) {
    report.result("size", r.size);
    report.result("witness", one_based(&r.witness));
    report.result("proven_max", r.proven_max);
    report.result("nodes_explored", r.nodes_explored);
    report.check(
        "search complete",
        r.proven_max,
        if r.proven_max {
            format!("clique number {}", r.size)
        } else {
            format!("budget hit; lower bound {}", r.size)
        },
    );
}

fn clique_cmd(args: &CliqueArgs, report: &mut RunReport) -> CliResult<()> {
    report.input("file", args.file.display().to_string());
    report.input("budget", args.budget);
    let g = load_graph(&args.file, report)?;
    if let Some(t) = args.decision {
        report.input("decision", t);
        let decision = report.timed("search", || clique::has_clique(&g, t as usize, args.budget));
        match decision {
            CliqueDecision::Found(w) => {
                report.result("decision", "yes");
                report.result("witness", one_based(&w));
                report.check("decided", true, format!("found a {t}-clique"));
            }
            CliqueDecision::Absent => {
                report.result("decision", "no");
                report.check("decided", true, format!("no {t}-clique exists"));
            }
            CliqueDecision::Unknown => {
                report.result("decision", "unknown");
                report.check("decided", false, "budget exhausted");
            }
        }
    } else if let Some(a) = args.through_vertex {
        report.input("through_vertex", a);
        if a == 0 || a > g.vertex_count() {
            return Err(format!("vertex {a} outside 1..={}", g.vertex_count()).into());
        }
        let r = report.timed("search", || clique::max_clique_through_vertex(&g, a - 1, args.budget))?;
        report_clique(report, &r);
    } else {
        let r = report.timed("search", || clique::max_clique(&g, args.budget));
        report_clique(report, &r);
    }
    Ok(())
}

fn partition_cmd(args: &PartitionRunArgs, report: &mut RunReport) -> CliResult<()> {
    report.input("graph", args.graph.display().to_string());
    report.input(
        "partitions",
        args.partitions.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
    );
    let g = load_graph(&args.graph, report)?;
    let n = g.vertex_count();

    let srg_spectrum = match verify_srg(&g) {
        Ok(SrgStructure::Strongly(p)) => srg::spectrum(&p).ok().map(|sp| (p, sp)),
        _ => None,
    };
    let s = match (args.shift, srg_spectrum) {
        (Some(s), _) => s,
        (None, Some((p, sp))) => {
            report.provenance(format!("s = {}: smallest eigenvalue of {p}", sp.s));
            sp.s
        }
        (None, None) => return Err("graph is not an srg with integral spectrum; pass --shift".into()),
    };
    let initial_dim = args.initial_dim.or_else(|| {
        srg_spectrum.map(|(p, sp)| {
            report.provenance(format!("dim P(V) = f = {}: multiplicity formula for {p}", sp.f));
            sp.f as usize
        })
    });
    report.input("shift", s);
    report.input("initial_dim", initial_dim);

    let mut parts: Vec<RegularPartition> = Vec::new();
    for path in &args.partitions {
        let cand = formats::read_partition(BufReader::new(File::open(path).map_err(|e| format!("{}: {e}", path.display()))?), n)?;
        let name = path.display().to_string();
        let part = match partition::verify_partition(&g, &cand) {
            Ok(p) => p,
            Err(e) => {
                report.check(&format!("regular partition {name}"), false, e.to_string());
                return Ok(());
            }
        };
        report.check(
            &format!("regular partition {name}"),
            true,
            format!(
                "|B| = {:?}, |C| = {}, C valency {:?}",
                part.blocks().each_ref().map(|b| b.len()),
                part.c().len(),
                part.c_valency()
            ),
        );
        if args.block_valency.is_some() || args.c_valency.is_some() {
            let ok = part.check_valencies(args.block_valency, args.c_valency);
            report.check(
                &format!("asserted valencies {name}"),
                ok.is_ok(),
                ok.err().map_or("as asserted".to_string(), |e| e.to_string()),
            );
        }
        let case = partition::case_check(&g, &part, s);
        report.check(
            &format!("case analysis {name}"),
            case.is_ok(),
            match case {
                Ok(r) => format!("closed forms hold on all {} vertices", r.vertices_checked),
                Err(e) => e.to_string(),
            },
        );
        parts.push(part);
    }

    let outcome = report.timed("rounds", || partition::rounds_driver(&g, s, &parts, initial_dim))?;
    report.result("sizes", outcome.sizes(n));
    let rounds: Vec<Value> = outcome
        .rounds
        .iter()
        .map(|r| {
            json!({
                "round": r.round,
                "b3_component": r.order[2] + 1,
                "z_odd": r.step.z_odd.len(),
                "z_even": r.step.z_even.len(),
                "odd_strict": r.odd_strict,
                "even_strict": r.even_strict,
                "p_certified": r.step.p_certificate.is_some(),
                "q_certified": r.step.q_certificate.is_some(),
                "dim_bound_odd": r.dim_bound_odd,
                "dim_bound_even": r.dim_bound_even,
            })
        })
        .collect();
    report.result("rounds", rounds);
    report.result("certificates", outcome.certificates().count());
    report.check(
        "side conditions",
        outcome.halted.is_none(),
        match &outcome.halted {
            None => format!("all {} rounds certified", outcome.rounds.len()),
            Some(e) => format!("halted in round {}: {e}", outcome.rounds.len()),
        },
    );
    for r in &outcome.rounds {
        report.provenance(format!(
            "Z_{}: certificate (p, 0) with witness {}; Z_{}: certificate (q, 0) with witness {}",
            2 * r.round - 1,
            r.step.p_certificate.as_ref().map_or("none".into(), |c| (c.witness + 1).to_string()),
            2 * r.round,
            r.step.q_certificate.as_ref().map_or("none".into(), |c| (c.witness + 1).to_string()),
        ));
    }

    if let Some(dir) = &args.certificates {
        std::fs::create_dir_all(dir)?;
        for r in &outcome.rounds {
            for (tag, cert) in [("p", &r.step.p_certificate), ("q", &r.step.q_certificate)] {
                if let Some(cert) = cert {
                    formats::write_certificate(cert, g.vertex_count(), create(&dir.join(format!("round{}-{tag}.txt", r.round)))?)?;
                }
            }
        }
    }

    if args.exact_dim {
        let rep = EuclideanRep::with_shift(&g, s);
        let mut sets = vec![VertexSet::all(n)];
        for r in &outcome.rounds {
            sets.push(r.step.z_odd.clone());
            sets.push(r.step.z_even.clone());
        }
        let dims = report.timed("exact_dims", || {
            sets.iter()
                .map(|w| if w.is_empty() { Ok(0) } else { rep.affine_dim_exact(w, DEFAULT_EXACT_BUDGET) })
                .collect::<Result<Vec<_>, _>>()
        })?;
        report.result("exact_dims", &dims);
        let certified: Vec<bool> = outcome
            .rounds
            .iter()
            .flat_map(|r| [r.step.p_certificate.is_some(), r.step.q_certificate.is_some()])
            .collect();
        let ok = certified
            .iter()
            .enumerate()
            .all(|(i, &c)| !c || dims[i + 1] < dims[i]);
        report.check("certified drops lower the exact dimension", ok, format!("{dims:?}"));
    }
    Ok(())
}

fn table_cmd(args: &TableArgs, report: &mut RunReport) -> CliResult<()> {
    report.input("csv", args.csv.display().to_string());
    let rows = borsuk::read_table_csv(File::open(&args.csv).map_err(|e| format!("{}: {e}", args.csv.display()))?)?;
    let table = borsuk::table_summarize(&rows);
    let mut text = Vec::new();
    borsuk::render_table_text(&table, &mut text)?;
    report.text.push(String::from_utf8(text)?);
    report.result("summary", table.iter().map(|r| r.summary).collect::<Vec<_>>());
    report.result("rows", &table);
    if let Some(path) = &args.csv_out {
        borsuk::write_table_csv(&table, create(path)?)?;
        report.result("csv_out", path.display().to_string());
    }
    Ok(())
}

#[derive(serde::Deserialize)]
struct VerdictInput {
    dim: u64,
    size: u64,
    omega_upper: u64,
}

fn verdict_cmd(args: &VerdictArgs, report: &mut RunReport) -> CliResult<()> {
    let (dim, size, omega) = match &args.input {
        Some(path) => {
            let rec: VerdictInput = serde_json::from_reader(File::open(path).map_err(|e| format!("{}: {e}", path.display()))?)?;
            (rec.dim, rec.size, rec.omega_upper)
        }
        None => (args.dim.unwrap(), args.size.unwrap(), args.omega.unwrap()),
    };
    if omega == 0 || size == 0 {
        return Err("size and omega_upper must be positive".into());
    }
    report.input("dim", dim);
    report.input("size", size);
    report.input("omega_upper", omega);
    let v = borsuk::verdict(dim, size, omega);
    report.text.push(v.to_string());
    report.result("min_parts", v.min_parts);
    report.result("is_counterexample", v.is_counterexample);
    report.result("verdict", &v);
    report.provenance("dim, size and omega_upper supplied by the caller");
    Ok(())
}

fn export_cmd(args: &ExportArgs, report: &mut RunReport) -> CliResult<()> {
    let g = match &args.input {
        Some(path) => {
            report.input("input", path.display().to_string());
            load_graph(path, report)?
        }
        None => {
            report.input("construction", args.construction);
            report.timed("build", || build_srg2401(args.construction))?.graph
        }
    };
    report.input("format", format!("{:?}", args.format).to_lowercase());
    let writer = create(&args.out)?;
    report.timed("write", || formats::write_graph(&g, args.format, writer))?;
    report.result("vertices", g.vertex_count());
    report.result("edges", g.edge_count());
    report.result("out", args.out.display().to_string());
    Ok(())
}

fn parse_degree(text: &str) -> CliResult<DegreePolicy> {
    match text.split_once("..") {
        Some((a, b)) => Ok(DegreePolicy::Uniform {
            min: a.trim().parse()?,
            max: b.trim().parse()?,
        }),
        None => Ok(DegreePolicy::Fixed(text.trim().parse()?)),
    }
}

fn planted_cmd(args: &PlantedArgs, report: &mut RunReport) -> CliResult<()> {
    report.input("seed", args.seed);
    report.input("sizes", args.sizes);
    report.input("degree", &args.degree);
    report.input("density", args.density);
    if !(0.0..=1.0).contains(&args.density) {
        return Err("density must lie in [0, 1]".into());
    }
    let spec = PlantedSpec {
        sizes: args.sizes,
        degree: parse_degree(&args.degree)?,
        inner_density: args.density,
    };
    let (g, part) = partition::generate_planted(args.seed, &spec)?;
    formats::write_graph(&g, args.format, create(&args.out_graph)?)?;
    let cand = partition::CandidatePartition {
        b: part.blocks().clone(),
        c: part.c().clone(),
    };
    formats::write_partition(&cand, create(&args.out_partition)?)?;
    report.result("vertices", g.vertex_count());
    report.result("edges", g.edge_count());
    report.result("c_valency", part.c_valency());
    report.check("regular partition", true, "planted partition verified");
    Ok(())
}
