//! Text formats for graphs, partitions, drop certificates and point sets.
//!
//! Every format uses 1-based vertex labels; the library is 0-based, and the
//! conversion happens only here. Writers stream line by line.
//!
//! DIMACS: `p edge <v> <e>` then `e <i> <j>` with `i < j`, lexicographic.
//! Comment lines start with `c`.
//!
//! DRE (writer only): `n=<v> $=1 g`, then `<i>: <j> <k> …;` listing the
//! neighbours `j > i` of every vertex with at least one, then a final `.`.
//!
//! Edge list: `<v>` on the first line, then `<i> <j>` per edge. Lines starting
//! with `#` are ignored.

use std::io::{BufRead, Write};

use thiserror::Error;

use crate::euclid::{DropCertificate, SparseVector};
use crate::graph::{Graph, GraphError, VertexSet};
use crate::partition::CandidatePartition;
use crate::pg::{PgPoint, PrimeField};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: malformed header: {text}")]
    MalformedHeader { line: usize, text: String },
    #[error("line {line}: endpoint {endpoint} outside 1..={n}")]
    EndpointOutOfRange { line: usize, endpoint: usize, n: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Non-fatal findings of a reader.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReadWarning {
    DuplicateEdge { line: usize, a: usize, b: usize },
    EdgeCountMismatch { declared: usize, found: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dimacs,
    Dre,
    Edges,
}

impl std::str::FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dimacs" => Ok(GraphFormat::Dimacs),
            "dre" => Ok(GraphFormat::Dre),
            "edges" => Ok(GraphFormat::Edges),
            other => Err(format!("unknown graph format `{other}` (expected dimacs, dre or edges)")),
        }
    }
}

pub fn write_graph<W: Write>(g: &Graph, format: GraphFormat, out: W) -> std::io::Result<()> {
    match format {
        GraphFormat::Dimacs => write_dimacs(g, out),
        GraphFormat::Dre => write_dre(g, out),
        GraphFormat::Edges => write_edges(g, out),
    }
}

/// Reads DIMACS if the first meaningful line starts with `p`, else an edge list.
pub fn read_graph_auto<R: BufRead>(input: R) -> Result<(Graph, Vec<ReadWarning>), FormatError> {
    let lines: Vec<String> = input.lines().collect::<Result<_, _>>()?;
    let first = lines
        .iter()
        .map(|l| l.trim())
        .find(|l| !l.is_empty() && !l.starts_with('c') && !l.starts_with('#'));
    let text = lines.join("\n");
    if first.is_some_and(|l| l.starts_with('p')) {
        read_dimacs(text.as_bytes())
    } else {
        read_edges(text.as_bytes())
    }
}

pub fn write_dimacs<W: Write>(g: &Graph, mut out: W) -> std::io::Result<()> {
    writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count())?;
    for (i, j) in g.edges() {
        writeln!(out, "e {} {}", i + 1, j + 1)?;
    }
    out.flush()
}

fn parse_usize(token: Option<&str>, line: usize, what: &str) -> Result<usize, FormatError> {
    let t = token.ok_or_else(|| FormatError::Parse {
        line,
        message: format!("missing {what}"),
    })?;
    t.parse().map_err(|_| FormatError::Parse {
        line,
        message: format!("invalid {what} `{t}`"),
    })
}

fn endpoint(token: Option<&str>, line: usize, n: usize) -> Result<usize, FormatError> {
    let e = parse_usize(token, line, "endpoint")?;
    if e == 0 || e > n {
        return Err(FormatError::EndpointOutOfRange { line, endpoint: e, n });
    }
    Ok(e - 1)
}

/// Accumulates edges, deduplicating and recording warnings.
struct EdgeSink {
    graph: Graph,
    warnings: Vec<ReadWarning>,
    found: usize,
}

impl EdgeSink {
    fn new(n: usize) -> Result<Self, FormatError> {
        Ok(EdgeSink {
            graph: Graph::empty(n)?,
            warnings: Vec::new(),
            found: 0,
        })
    }

    fn add(&mut self, line: usize, a: usize, b: usize) -> Result<(), FormatError> {
        self.found += 1;
        if a == b {
            return Err(GraphError::LoopEdge(a).into());
        }
        if self.graph.is_adjacent(a, b) {
            self.warnings.push(ReadWarning::DuplicateEdge {
                line,
                a: a.min(b) + 1,
                b: a.max(b) + 1,
            });
        } else {
            self.graph.add_edge(a, b)?;
        }
        Ok(())
    }
}

pub fn read_dimacs<R: BufRead>(input: R) -> Result<(Graph, Vec<ReadWarning>), FormatError> {
    let mut sink: Option<(EdgeSink, usize)> = None;
    for (idx, line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            None | Some("c") => {}
            Some(t) if t.starts_with('c') => {}
            Some("p") => {
                if sink.is_some() {
                    return Err(FormatError::MalformedHeader {
                        line: line_no,
                        text: "second problem line".into(),
                    });
                }
                let malformed = || FormatError::MalformedHeader {
                    line: line_no,
                    text: line.clone(),
                };
                if !matches!(tokens.next(), Some("edge") | Some("col")) {
                    return Err(malformed());
                }
                let n = parse_usize(tokens.next(), line_no, "vertex count").map_err(|_| malformed())?;
                let e = parse_usize(tokens.next(), line_no, "edge count").map_err(|_| malformed())?;
                sink = Some((EdgeSink::new(n)?, e));
            }
            Some("e") => {
                let Some((s, _)) = sink.as_mut() else {
                    return Err(FormatError::MalformedHeader {
                        line: line_no,
                        text: "edge before problem line".into(),
                    });
                };
                let n = s.graph.vertex_count();
                let a = endpoint(tokens.next(), line_no, n)?;
                let b = endpoint(tokens.next(), line_no, n)?;
                s.add(line_no, a, b)?;
            }
            Some(other) => {
                return Err(FormatError::Parse {
                    line: line_no,
                    message: format!("unexpected line type `{other}`"),
                })
            }
        }
    }
    let (mut sink, declared) = sink.ok_or(FormatError::MalformedHeader {
        line: 0,
        text: "missing problem line".into(),
    })?;
    if declared != sink.found {
        sink.warnings.push(ReadWarning::EdgeCountMismatch {
            declared,
            found: sink.found,
        });
    }
    Ok((sink.graph, sink.warnings))
}

pub fn write_dre<W: Write>(g: &Graph, mut out: W) -> std::io::Result<()> {
    writeln!(out, "n={} $=1 g", g.vertex_count())?;
    for i in 0..g.vertex_count() {
        let mut later = g.row(i).iter().filter(|&j| j > i).peekable();
        if later.peek().is_none() {
            continue;
        }
        write!(out, "{}:", i + 1)?;
        for j in later {
            write!(out, " {}", j + 1)?;
        }
        writeln!(out, ";")?;
    }
    writeln!(out, ".")?;
    out.flush()
}

pub fn write_edges<W: Write>(g: &Graph, mut out: W) -> std::io::Result<()> {
    writeln!(out, "{}", g.vertex_count())?;
    for (i, j) in g.edges() {
        writeln!(out, "{} {}", i + 1, j + 1)?;
    }
    out.flush()
}

pub fn read_edges<R: BufRead>(input: R) -> Result<(Graph, Vec<ReadWarning>), FormatError> {
    let mut sink: Option<EdgeSink> = None;
    for (idx, line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        match sink.as_mut() {
            None => {
                let n = parse_usize(tokens.next(), line_no, "vertex count").map_err(|_| FormatError::MalformedHeader {
                    line: line_no,
                    text: line.clone(),
                })?;
                sink = Some(EdgeSink::new(n)?);
            }
            Some(s) => {
                let n = s.graph.vertex_count();
                let a = endpoint(tokens.next(), line_no, n)?;
                let b = endpoint(tokens.next(), line_no, n)?;
                s.add(line_no, a, b)?;
            }
        }
    }
    let sink = sink.ok_or(FormatError::MalformedHeader {
        line: 0,
        text: "missing vertex count".into(),
    })?;
    Ok((sink.graph, sink.warnings))
}

/// Renders a vertex set 1-based with maximal runs collapsed to `a-b`.
pub fn format_ranges(set: &VertexSet) -> String {
    let mut parts = Vec::new();
    let members = set.as_slice();
    let mut i = 0;
    while i < members.len() {
        let mut j = i;
        while j + 1 < members.len() && members[j + 1] == members[j] + 1 {
            j += 1;
        }
        if j > i {
            parts.push(format!("{}-{}", members[i] + 1, members[j] + 1));
        } else {
            parts.push(format!("{}", members[i] + 1));
        }
        i = j + 1;
    }
    parts.join(" ")
}

/// Parses whitespace-separated 1-based labels and `a-b` ranges.
pub fn parse_ranges(text: &str, n: usize, line: usize) -> Result<VertexSet, FormatError> {
    let mut out = Vec::new();
    for token in text.split_whitespace() {
        let (lo, hi) = match token.split_once('-') {
            Some((a, b)) => (endpoint(Some(a), line, n)?, endpoint(Some(b), line, n)?),
            None => {
                let v = endpoint(Some(token), line, n)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(FormatError::Parse {
                line,
                message: format!("empty range `{token}`"),
            });
        }
        out.extend(lo..=hi);
    }
    Ok(VertexSet::new(out, n)?)
}

/// Partition file: lines `B1: …`, `B2: …`, `B3: …`, `C: …` with 1-based
/// labels and ranges. Missing lines mean empty parts.
pub fn write_partition<W: Write>(part: &CandidatePartition, mut out: W) -> std::io::Result<()> {
    for (h, b) in part.b.iter().enumerate() {
        writeln!(out, "B{}: {}", h + 1, format_ranges(b))?;
    }
    writeln!(out, "C: {}", format_ranges(&part.c))?;
    out.flush()
}

pub fn read_partition<R: BufRead>(input: R, n: usize) -> Result<CandidatePartition, FormatError> {
    let mut part = CandidatePartition::default();
    for (idx, line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, rest) = content.split_once(':').ok_or_else(|| FormatError::Parse {
            line: line_no,
            message: "expected `<part>: <vertices>`".into(),
        })?;
        let set = parse_ranges(rest, n, line_no)?;
        match key.trim() {
            "B1" => part.b[0] = set,
            "B2" => part.b[1] = set,
            "B3" => part.b[2] = set,
            "C" => part.c = set,
            other => {
                return Err(FormatError::Parse {
                    line: line_no,
                    message: format!("unknown part `{other}`"),
                })
            }
        }
    }
    Ok(part)
}

/// Certificate file:
///
/// ```text
/// drop v=<vertices> c=<c> witness=<w>
/// x <vertex> <value>      (one line per nonzero entry)
/// W1 <ranges>             (the larger set)
/// W2 <ranges>             (the set on which ⟨x, y_i⟩ = c)
/// ```
pub fn write_certificate<W: Write>(cert: &DropCertificate, n: usize, mut out: W) -> std::io::Result<()> {
    writeln!(out, "drop v={n} c={} witness={}", cert.c, cert.witness + 1)?;
    for &(i, value) in cert.x.entries() {
        writeln!(out, "x {} {}", i + 1, value)?;
    }
    writeln!(out, "W1 {}", format_ranges(&cert.outer))?;
    writeln!(out, "W2 {}", format_ranges(&cert.inner))?;
    out.flush()
}

pub fn read_certificate<R: BufRead>(input: R, n: usize) -> Result<DropCertificate, FormatError> {
    let mut header: Option<(i64, usize)> = None;
    let mut entries = Vec::new();
    let (mut inner, mut outer) = (None, None);
    for (idx, line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let content = line.split('#').next().unwrap_or("").trim();
        let Some((kind, rest)) = content.split_once(char::is_whitespace).or(Some((content, ""))) else {
            continue;
        };
        match kind {
            "" => {}
            "drop" => {
                let (mut v, mut c, mut w) = (None, None, None);
                for field in rest.split_whitespace() {
                    match field.split_once('=') {
                        Some(("v", x)) => v = x.parse::<usize>().ok(),
                        Some(("c", x)) => c = x.parse::<i64>().ok(),
                        Some(("witness", x)) => w = Some(endpoint(Some(x), line_no, n)?),
                        _ => {}
                    }
                }
                match (v, c, w) {
                    (Some(v), _, _) if v != n => {
                        return Err(FormatError::Parse {
                            line: line_no,
                            message: format!("certificate is for {v} vertices, graph has {n}"),
                        })
                    }
                    (Some(_), Some(c), Some(w)) => header = Some((c, w)),
                    _ => {
                        return Err(FormatError::MalformedHeader {
                            line: line_no,
                            text: line.clone(),
                        })
                    }
                }
            }
            "x" => {
                let mut tokens = rest.split_whitespace();
                let i = endpoint(tokens.next(), line_no, n)?;
                let value = tokens
                    .next()
                    .and_then(|t| t.parse::<i64>().ok())
                    .ok_or_else(|| FormatError::Parse {
                        line: line_no,
                        message: "invalid coefficient".into(),
                    })?;
                entries.push((i, value));
            }
            "W2" => inner = Some(parse_ranges(rest, n, line_no)?),
            "W1" => outer = Some(parse_ranges(rest, n, line_no)?),
            other => {
                return Err(FormatError::Parse {
                    line: line_no,
                    message: format!("unexpected line type `{other}`"),
                })
            }
        }
    }
    let (c, witness) = header.ok_or(FormatError::MalformedHeader {
        line: 0,
        text: "missing `drop` line".into(),
    })?;
    let missing = |what: &str| FormatError::Parse {
        line: 0,
        message: format!("missing `{what}` line"),
    };
    Ok(DropCertificate {
        x: SparseVector::new(entries),
        c,
        inner: inner.ok_or_else(|| missing("W2"))?,
        outer: outer.ok_or_else(|| missing("W1"))?,
        witness,
    })
}

/// One point per line as four digits, e.g. `0135`.
pub fn write_points<W: Write>(points: &[PgPoint], mut out: W) -> std::io::Result<()> {
    for p in points {
        let line: String = p.coords().iter().map(|&d| char::from_digit(d as u32, 36).unwrap()).collect();
        writeln!(out, "{line}")?;
    }
    out.flush()
}

/// Reads points written by [`write_points`]; spaces between digits are
/// allowed. Points are normalized.
pub fn read_points<R: BufRead>(input: R, field: &PrimeField) -> Result<Vec<PgPoint>, FormatError> {
    let mut out = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let digits: Vec<char> = line.chars().filter(|c| !c.is_whitespace()).collect();
        if digits.is_empty() {
            continue;
        }
        let bad = || FormatError::Parse {
            line: line_no,
            message: format!("expected four digits below {}, got `{line}`", field.order()),
        };
        if digits.len() != 4 {
            return Err(bad());
        }
        let mut v = [0u8; 4];
        for (slot, ch) in v.iter_mut().zip(&digits) {
            let d = ch.to_digit(36).filter(|&d| d < field.order()).ok_or_else(bad)?;
            *slot = d as u8;
        }
        out.push(PgPoint::normalize(field, v).ok_or_else(bad)?);
    }
    Ok(out)
}
