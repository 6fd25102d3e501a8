//! Part-count lower bounds and Borsuk counterexample verdicts.
//!
//! A two-distance set `P(W)` splits into `x` parts of smaller diameter exactly
//! when `W` splits into `x` cliques, so `⌈|W| / ω⌉` parts are always needed.
//! The set is a counterexample once that exceeds `dim + 1`.

use std::collections::BTreeMap;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("row {label}: dim {dim} conflicts with an earlier dim {earlier}")]
    InconsistentDim { label: String, dim: u64, earlier: u64 },
    #[error("row {label}, list {list}: size and omega must be positive")]
    ZeroEntry { label: String, list: String },
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

/// `⌈size / omega⌉`.
///
/// # Panics
/// If `omega` is zero.
pub fn min_parts(size: u64, omega_upper: u64) -> u64 {
    assert!(omega_upper >= 1, "clique bound must be positive");
    size.div_ceil(omega_upper)
}

/// Where a number entering a verdict came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Source {
    /// Multiplicity `f` from the srg parameters.
    SpectrumFormula { params: String },
    /// A chain of checked drop certificates below a known dimension.
    CertificateChain { start: u64, drops: u64 },
    /// Exhaustive clique search.
    CliqueSearch {
        through_vertex: Option<usize>,
        nodes_explored: u64,
    },
    /// Exact rank of a centred Gram matrix.
    ExactRank,
    /// Supplied by the caller.
    Given,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub dim: Source,
    pub size: Source,
    pub omega: Source,
}

impl Default for Provenance {
    fn default() -> Self {
        Provenance {
            dim: Source::Given,
            size: Source::Given,
            omega: Source::Given,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BorsukVerdict {
    /// Upper bound on the affine dimension of `P(W)`.
    pub dim: u64,
    pub size: u64,
    /// Proven upper bound on the clique number of `Γ[W]`.
    pub omega_upper: u64,
    pub min_parts: u64,
    pub is_counterexample: bool,
    pub provenance: Provenance,
}

/// Verdict from proven bounds. Never pass an unproven clique bound.
pub fn verdict(dim: u64, size: u64, omega_upper: u64) -> BorsukVerdict {
    let parts = min_parts(size, omega_upper);
    BorsukVerdict {
        dim,
        size,
        omega_upper,
        min_parts: parts,
        is_counterexample: parts > dim + 1,
        provenance: Provenance::default(),
    }
}

impl BorsukVerdict {
    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }
}

impl std::fmt::Display for BorsukVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let relation = if self.is_counterexample { ">" } else { "<=" };
        write!(
            f,
            "|W| = {}, omega <= {}: at least {} parts needed, {} dim + 1 = {}; {}",
            self.size,
            self.omega_upper,
            self.min_parts,
            relation,
            self.dim + 1,
            if self.is_counterexample {
                "counterexample"
            } else {
                "not a counterexample"
            }
        )
    }
}

/// One `(size, ω)` entry of a table row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCell {
    pub list: String,
    pub size: u64,
    pub omega_upper: u64,
    /// Largest `p` with `size / ω > p`, i.e. `min_parts − 1`. Below `⌊size / ω⌋`
    /// by one when `ω` divides `size`.
    pub floor_ratio: u64,
    pub min_parts: u64,
    /// Optional annotation such as the vertex used in that round.
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub label: String,
    pub dim: u64,
    pub cells: Vec<TableCell>,
    /// Maximum of the own floor ratios and the summaries of all later rows.
    pub summary: u64,
}

/// Input to [`table_summarize`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableInput {
    pub label: String,
    pub dim: u64,
    /// `(list, size, omega_upper, note)`.
    pub entries: Vec<(String, u64, u64, Option<String>)>,
}

/// Computes floor ratios and the running-maximum summary. Rows must be ordered
/// by decreasing dimension; the summary of a row covers that row and all rows
/// after it.
pub fn table_summarize(rows: &[TableInput]) -> Vec<TableRow> {
    let mut out: Vec<TableRow> = rows
        .iter()
        .map(|r| TableRow {
            label: r.label.clone(),
            dim: r.dim,
            cells: r
                .entries
                .iter()
                .map(|(list, size, omega, note)| TableCell {
                    list: list.clone(),
                    size: *size,
                    omega_upper: *omega,
                    floor_ratio: min_parts(*size, *omega) - 1,
                    min_parts: min_parts(*size, *omega),
                    note: note.clone(),
                })
                .collect(),
            summary: 0,
        })
        .collect();
    let mut running = 0;
    for row in out.iter_mut().rev() {
        running = row.cells.iter().map(|c| c.floor_ratio).fold(running, u64::max);
        row.summary = running;
    }
    out
}

#[derive(Debug, Deserialize)]
struct CsvRecord {
    label: String,
    dim: u64,
    list: String,
    size: u64,
    omega: u64,
    #[serde(default)]
    vertex: Option<String>,
}

/// Reads `label,dim,list,size,omega[,vertex]` records. Rows keep the order of
/// first appearance of their label.
pub fn read_table_csv<R: Read>(reader: R) -> Result<Vec<TableInput>, TableError> {
    let mut rows: Vec<TableInput> = Vec::new();
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    for record in csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader).deserialize() {
        let rec: CsvRecord = record?;
        if rec.size == 0 || rec.omega == 0 {
            return Err(TableError::ZeroEntry {
                label: rec.label,
                list: rec.list,
            });
        }
        let note = rec.vertex.filter(|v| !v.is_empty());
        let i = *index.entry(rec.label.clone()).or_insert_with(|| {
            rows.push(TableInput {
                label: rec.label.clone(),
                dim: rec.dim,
                entries: Vec::new(),
            });
            rows.len() - 1
        });
        if rows[i].dim != rec.dim {
            return Err(TableError::InconsistentDim {
                label: rec.label,
                dim: rec.dim,
                earlier: rows[i].dim,
            });
        }
        rows[i].entries.push((rec.list, rec.size, rec.omega, note));
    }
    Ok(rows)
}

fn list_names(rows: &[TableRow]) -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    for cell in rows.iter().flat_map(|r| &r.cells) {
        if !names.contains(&cell.list) {
            names.push(cell.list.clone());
        }
    }
    names
}

/// Fixed-width text rendering, one line per row, cells as `size/ω > p`.
pub fn render_table_text<W: Write>(rows: &[TableRow], mut out: W) -> std::io::Result<()> {
    let lists = list_names(rows);
    let cell_text = |c: &TableCell| {
        let ratio = format!("{}/{} > {}", c.size, c.omega_upper, c.floor_ratio);
        match &c.note {
            Some(n) => format!("{n} {ratio}"),
            None => ratio,
        }
    };
    let mut table: Vec<Vec<String>> = vec![std::iter::once("Z".to_string())
        .chain(std::iter::once("dim".to_string()))
        .chain(lists.iter().cloned())
        .chain(std::iter::once(">".to_string()))
        .collect()];
    for row in rows {
        let mut line = vec![row.label.clone(), row.dim.to_string()];
        for list in &lists {
            line.push(row.cells.iter().find(|c| &c.list == list).map(cell_text).unwrap_or_default());
        }
        line.push(row.summary.to_string());
        table.push(line);
    }
    let widths: Vec<usize> = (0..table[0].len())
        .map(|j| table.iter().map(|l| l[j].chars().count()).max().unwrap_or(0))
        .collect();
    for line in &table {
        let padded: Vec<String> = line
            .iter()
            .zip(&widths)
            .map(|(s, &w)| format!("{s:<w$}"))
            .collect();
        writeln!(out, "{}", padded.join("  ").trim_end())?;
    }
    Ok(())
}

/// Long-format CSV: `label,dim,list,size,omega,floor_ratio,min_parts,summary`.
pub fn write_table_csv<W: Write>(rows: &[TableRow], out: W) -> Result<(), TableError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["label", "dim", "list", "size", "omega", "floor_ratio", "min_parts", "summary"])?;
    for row in rows {
        for c in &row.cells {
            w.write_record([
                row.label.clone(),
                row.dim.to_string(),
                c.list.clone(),
                c.size.to_string(),
                c.omega_upper.to_string(),
                c.floor_ratio.to_string(),
                c.min_parts.to_string(),
                row.summary.to_string(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}
