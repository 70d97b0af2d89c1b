//! CSV and Markdown renderings of simulation results.
//!
//! Every number is written with six fixed decimals, so a report read back
//! and rendered again is byte-identical.

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::estimators::EstimatorKind;
use crate::simulation::scenario::ScenarioReport;

pub const CSV_HEADER: [&str; 14] = [
    "scenario_id",
    "estimator",
    "delta_exact",
    "mean",
    "rb",
    "rrmse",
    "eff",
    "failures",
    "scale1",
    "shape1",
    "scale2",
    "shape2",
    "n1",
    "n2",
];

/// One scenario × estimator line of the report.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub scenario_id: String,
    pub estimator: EstimatorKind,
    pub delta_exact: f64,
    pub mean: f64,
    pub rb: f64,
    pub rrmse: f64,
    pub eff: Option<f64>,
    pub failures: usize,
    pub scale1: f64,
    pub shape1: f64,
    pub scale2: f64,
    pub shape2: f64,
    pub n1: usize,
    pub n2: usize,
}

pub fn rows_from_reports(reports: &[ScenarioReport]) -> Vec<ReportRow> {
    reports
        .iter()
        .flat_map(|r| {
            let s = &r.scenario;
            r.metrics.iter().map(move |(kind, m)| ReportRow {
                scenario_id: s.id.clone(),
                estimator: *kind,
                delta_exact: r.delta_exact,
                mean: m.mean,
                rb: m.rb,
                rrmse: m.rrmse,
                eff: m.eff_vs_kernel,
                failures: m.replicate_failures,
                scale1: s.pair.f1.scale(),
                shape1: s.pair.f1.shape(),
                scale2: s.pair.f2.scale(),
                shape2: s.pair.f2.shape(),
                n1: s.n1,
                n2: s.n2,
            })
        })
        .collect()
}

#[inline]
pub fn fixed6(x: f64) -> String {
    let s = format!("{x:.6}");
    // no "-0.000000"
    if s.starts_with('-') && s[1..].bytes().all(|b| b == b'0' || b == b'.') {
        s[1..].to_string()
    } else {
        s
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Report(e.to_string())
}

pub fn write_csv<W: Write>(rows: &[ReportRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    for r in rows {
        w.write_record([
            r.scenario_id.clone(),
            r.estimator.name().to_string(),
            fixed6(r.delta_exact),
            fixed6(r.mean),
            fixed6(r.rb),
            fixed6(r.rrmse),
            r.eff.map(fixed6).unwrap_or_default(),
            r.failures.to_string(),
            fixed6(r.scale1),
            fixed6(r.shape1),
            fixed6(r.scale2),
            fixed6(r.shape2),
            r.n1.to_string(),
            r.n2.to_string(),
        ])
        .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

pub fn csv_string(rows: &[ReportRow]) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(rows, &mut buf)?;
    String::from_utf8(buf).map_err(|e| Error::Report(e.to_string()))
}

/// Reads a report written by [`write_csv`]; any other column layout is a
/// schema error.
pub fn read_csv<R: Read>(input: R) -> Result<Vec<ReportRow>> {
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
    let headers = reader.headers().map_err(csv_err)?.clone();
    if headers.iter().ne(CSV_HEADER.iter().copied()) {
        return Err(Error::Report(format!(
            "schema mismatch: expected header {}, found {}",
            CSV_HEADER.join(","),
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let line = i + 2;
        let record = record.map_err(|e| Error::Report(format!("line {line}: {e}")))?;
        let field = |k: usize| record.get(k).unwrap_or("");
        let num = |k: usize| -> Result<f64> {
            field(k).parse::<f64>().map_err(|_| {
                Error::Report(format!(
                    "line {line}: column {} is not a number: {:?}",
                    CSV_HEADER[k],
                    field(k)
                ))
            })
        };
        let count = |k: usize| -> Result<usize> {
            field(k).parse::<usize>().map_err(|_| {
                Error::Report(format!(
                    "line {line}: column {} is not a count: {:?}",
                    CSV_HEADER[k],
                    field(k)
                ))
            })
        };
        let estimator = field(1)
            .parse::<EstimatorKind>()
            .map_err(|e| Error::Report(format!("line {line}: {e}")))?;
        rows.push(ReportRow {
            scenario_id: field(0).to_string(),
            estimator,
            delta_exact: num(2)?,
            mean: num(3)?,
            rb: num(4)?,
            rrmse: num(5)?,
            eff: if field(6).is_empty() { None } else { Some(num(6)?) },
            failures: count(7)?,
            scale1: num(8)?,
            shape1: num(9)?,
            scale2: num(10)?,
            shape2: num(11)?,
            n1: count(12)?,
            n2: count(13)?,
        });
    }
    Ok(rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Family {
    EqualScale,
    EqualShape,
    Different,
    Identical,
}

impl Family {
    fn of(row: &ReportRow) -> Self {
        match (row.scale1 == row.scale2, row.shape1 == row.shape2) {
            (true, true) => Family::Identical,
            (true, false) => Family::EqualScale,
            (false, true) => Family::EqualShape,
            (false, false) => Family::Different,
        }
    }

    fn title(self) -> &'static str {
        match self {
            Family::EqualScale => "Equal scale parameters",
            Family::EqualShape => "Equal shape parameters",
            Family::Different => "Different scale and shape parameters",
            Family::Identical => "Identical distributions",
        }
    }
}

type PairKey = (String, String, String, String);

fn pair_key(r: &ReportRow) -> PairKey {
    (fixed6(r.scale1), fixed6(r.shape1), fixed6(r.scale2), fixed6(r.shape2))
}

fn push_unique<T: PartialEq + Clone>(list: &mut Vec<T>, item: &T) {
    if !list.contains(item) {
        list.push(item.clone());
    }
}

type MetricOf = fn(&ReportRow) -> Option<f64>;

/// Tables grouped by parameter family, one block per pair with RB, RRMSE
/// and EFF rows for each sample size and one column per estimator.
pub fn render_markdown(rows: &[ReportRow]) -> String {
    let mut out = String::new();
    for family in [
        Family::EqualScale,
        Family::EqualShape,
        Family::Different,
        Family::Identical,
    ] {
        let members: Vec<&ReportRow> = rows.iter().filter(|r| Family::of(r) == family).collect();
        if members.is_empty() {
            continue;
        }
        let mut estimators = Vec::new();
        let mut pairs: Vec<PairKey> = Vec::new();
        for r in &members {
            push_unique(&mut estimators, &r.estimator);
            push_unique(&mut pairs, &pair_key(r));
        }
        if !out.is_empty() {
            out.push('\n');
        }
        out.push_str(&format!("## {}\n\n", family.title()));
        out.push_str("| (α₁, α₂) | (β₁, β₂) | Δ exact | (n₁, n₂) | metric |");
        for e in &estimators {
            out.push_str(&format!(" {e} |"));
        }
        out.push_str("\n|---|---|---|---|---|");
        for _ in &estimators {
            out.push_str("---|");
        }
        out.push('\n');
        for key in &pairs {
            let block: Vec<&&ReportRow> = members.iter().filter(|r| &pair_key(r) == key).collect();
            let mut sizes = Vec::new();
            for r in &block {
                push_unique(&mut sizes, &(r.n1, r.n2));
            }
            let mut first_in_block = true;
            for &(n1, n2) in &sizes {
                let cell = |kind: EstimatorKind| block.iter().find(|r| r.estimator == kind && (r.n1, r.n2) == (n1, n2));
                let metrics: [(&str, MetricOf); 3] =
                    [("RB", |r| Some(r.rb)), ("RRMSE", |r| Some(r.rrmse)), ("EFF", |r| r.eff)];
                for (m, (label, get)) in metrics.iter().enumerate() {
                    let (pa, pb, exact) = if first_in_block {
                        (
                            format!("({}, {})", key.0, key.2),
                            format!("({}, {})", key.1, key.3),
                            fixed6(block[0].delta_exact),
                        )
                    } else {
                        Default::default()
                    };
                    first_in_block = false;
                    let size = if m == 0 { format!("({n1}, {n2})") } else { String::new() };
                    out.push_str(&format!("| {pa} | {pb} | {exact} | {size} | {label} |"));
                    for e in &estimators {
                        let v = cell(*e).and_then(|r| get(r)).map(fixed6).unwrap_or_default();
                        out.push_str(&format!(" {v} |"));
                    }
                    out.push('\n');
                }
            }
        }
    }
    out
}
