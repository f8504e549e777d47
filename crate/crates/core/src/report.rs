//! Report and table export. The JSON report is the one serialization shared
//! by the command line and the HTTP service.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::diagnostics::Diagnostic;
use crate::enrollment::table15_compat;
use crate::error::Result;
use crate::evaluate::Evaluation;
use crate::money::{Decimal, Money, RoundingMode};
use crate::series::{sum_series, YearSeries};
use crate::sweep::SweepPoint;
use crate::taxonomy::{Measurability, Tangibility};

pub const REPORT_VERSION: u64 = 1;

/// Document names in export order.
pub const TABLE_NAMES: [&str; 7] = ["table9", "table10", "table11", "table15", "table18", "table19", "matrix"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Markdown,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Markdown => "md",
            Format::Json => "json",
        }
    }
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Markdown),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected json, csv or md)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Amount(Money),
    Count(u64),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub label: String,
    pub cells: Vec<Cell>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub name: &'static str,
    pub title: String,
    /// Header including the label column.
    pub columns: Vec<String>,
    pub rows: Vec<Row>,
}

impl Cell {
    fn exact(&self) -> String {
        match self {
            Cell::Amount(m) => m.to_string(),
            Cell::Count(n) => n.to_string(),
            Cell::Text(t) => t.clone(),
        }
    }

    fn display(&self, mode: RoundingMode, grouped: bool) -> String {
        match self {
            Cell::Amount(m) if grouped => m.round(mode).decimal().grouped(),
            Cell::Amount(m) => m.round(mode).to_string(),
            Cell::Count(n) if grouped => Decimal::from(*n).grouped(),
            other => other.exact(),
        }
    }
}

fn year_columns(horizon: usize) -> Vec<String> {
    let mut cols = vec!["item".to_string()];
    cols.extend((1..=horizon).map(|y| format!("Tahun ke-{y}")));
    cols.push("Jumlah".into());
    cols
}

fn series_row(label: impl Into<String>, s: &YearSeries) -> Result<Row> {
    let mut cells: Vec<Cell> = s.iter().map(Cell::Amount).collect();
    cells.push(Cell::Amount(sum_series(s)?));
    Ok(Row { label: label.into(), cells })
}

fn percent_label(fraction: Decimal) -> String {
    let pct = fraction.checked_mul(Decimal::from_int(100)).unwrap_or(fraction);
    format!("{pct}%")
}

fn table9(e: &Evaluation) -> Result<Table> {
    let mut rows = e.running_costs.iter().map(|l| series_row(&l.name, &l.cost)).collect::<Result<Vec<_>>>()?;
    rows.push(series_row("Total Biaya berjalan", &e.running_total)?);
    Ok(Table { name: "table9", title: "Biaya berjalan proyek".into(), columns: year_columns(e.horizon), rows })
}

fn table10(e: &Evaluation) -> Result<Table> {
    let mut rows =
        e.operational_costs.iter().map(|l| series_row(&l.name, &l.cost)).collect::<Result<Vec<_>>>()?;
    rows.push(series_row("Total", &e.operational_total)?);
    Ok(Table { name: "table10", title: "Biaya operasional".into(), columns: year_columns(e.horizon), rows })
}

fn table11(e: &Evaluation) -> Result<Table> {
    let mut rows = Vec::new();
    for line in &e.operational_costs {
        if let (Some(f), Some(s)) = (line.saving_fraction, &line.saving) {
            rows.push(series_row(format!("{} ({})", line.name, percent_label(f.decimal())), s)?);
        }
    }
    rows.push(series_row("Total Penghematan", &e.savings_total)?);
    Ok(Table {
        name: "table11",
        title: "Penghematan biaya operasional".into(),
        columns: year_columns(e.horizon),
        rows,
    })
}

fn table15(e: &Evaluation) -> Result<Table> {
    let view = |s: &YearSeries| if e.table15_compat { table15_compat(s) } else { Ok(s.clone()) };
    let mut rows = Vec::new();
    for (i, program) in e.programs.iter().enumerate() {
        let mut cells: Vec<Cell> =
            e.intake_by_year.iter().map(|y| Cell::Count(y.per_program.get(i).copied().unwrap_or(0))).collect();
        cells.push(Cell::Count(cells.iter().map(|c| if let Cell::Count(n) = c { *n } else { 0 }).sum()));
        rows.push(Row { label: format!("Mahasiswa {program}"), cells });
    }
    let totals: Vec<u64> = e.intake_by_year.iter().map(|y| y.total).collect();
    let mut cells: Vec<Cell> = totals.iter().map(|&n| Cell::Count(n)).collect();
    cells.push(Cell::Count(totals.iter().sum()));
    rows.push(Row { label: "Jumlah mahasiswa".into(), cells });
    for (program, series) in e.programs.iter().zip(&e.program_revenue) {
        rows.push(series_row(format!("Pendapatan {program}"), &view(series)?)?);
    }
    rows.push(series_row("Total pendapatan", &view(&e.enrollment.revenue)?)?);
    let title = if e.table15_compat {
        "Perkiraan pendapatan dari peningkatan jumlah mahasiswa baru (sepertiga)"
    } else {
        "Perkiraan pendapatan dari peningkatan jumlah mahasiswa baru"
    };
    Ok(Table { name: "table15", title: title.into(), columns: year_columns(e.horizon), rows })
}

fn table18(e: &Evaluation) -> Result<Table> {
    Ok(Table {
        name: "table18",
        title: "Rekapitulasi efisiensi produktivitas kerja".into(),
        columns: year_columns(e.horizon),
        rows: vec![series_row("Peningkatan produktivitas manajemen tingkat atas", &e.productivity)?],
    })
}

fn table19(e: &Evaluation) -> Table {
    let st = &e.result.statement;
    let rows = st
        .lines()
        .into_iter()
        .filter(|(label, amount)| *label != "Pajak" || !amount.is_zero())
        .map(|(label, amount)| Row { label: label.into(), cells: vec![Cell::Amount(amount)] })
        .collect();
    Table { name: "table19", title: "Arus kas bersih".into(), columns: vec!["item".into(), "amount".into()], rows }
}

fn matrix(e: &Evaluation) -> Table {
    let ids = |t, m| {
        let v: Vec<String> = e.matrix.cell_ids(t, m).iter().map(u32::to_string).collect();
        Cell::Text(v.join(" "))
    };
    let rows = [(Tangibility::Tangible, "Tangible"), (Tangibility::Intangible, "Intangible")]
        .into_iter()
        .map(|(t, label)| Row {
            label: label.into(),
            cells: vec![ids(t, Measurability::Measurable), ids(t, Measurability::Immeasurable)],
        })
        .collect();
    Table {
        name: "matrix",
        title: "Matriks manfaat".into(),
        columns: vec!["benefit".into(), "Measurable".into(), "Immeasurable".into()],
        rows,
    }
}

pub fn tables(e: &Evaluation) -> Result<Vec<Table>> {
    Ok(vec![table9(e)?, table10(e)?, table11(e)?, table15(e)?, table18(e)?, table19(e), matrix(e)])
}

fn csv_document(t: &Table, mode: RoundingMode, exact: bool) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(Vec::new());
    w.write_record(&t.columns).expect("in-memory write");
    for row in &t.rows {
        let mut record = vec![row.label.clone()];
        record.extend(row.cells.iter().map(|c| if exact { c.exact() } else { c.display(mode, false) }));
        w.write_record(&record).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

fn md_escape(s: &str) -> String {
    s.replace('|', "\\|")
}

fn markdown_document(t: &Table, mode: RoundingMode, exact: bool) -> String {
    let mut out = format!("## {}\n\n", t.title);
    let header: Vec<String> = t.columns.iter().map(|c| md_escape(c)).collect();
    let _ = writeln!(out, "| {} |", header.join(" | "));
    let align: Vec<&str> = (0..t.columns.len()).map(|i| if i == 0 { "---" } else { "---:" }).collect();
    let _ = writeln!(out, "| {} |", align.join(" | "));
    for row in &t.rows {
        let mut cells = vec![md_escape(&row.label)];
        cells.extend(row.cells.iter().map(|c| md_escape(&if exact { c.exact() } else { c.display(mode, true) })));
        let _ = writeln!(out, "| {} |", cells.join(" | "));
    }
    out
}

fn table_value(t: &Table, mode: RoundingMode) -> Value {
    json!({
        "title": t.title,
        "columns": t.columns,
        "rows": t.rows.iter().map(|r| json!({
            "label": r.label,
            "values": r.cells.iter().map(|c| c.display(mode, false)).collect::<Vec<_>>(),
            "exact": r.cells.iter().map(Cell::exact).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

/// One document per table, named as in [`TABLE_NAMES`]. `exact` switches
/// CSV and Markdown cells from display rounding to full precision; JSON
/// always carries both.
pub fn export_tables(e: &Evaluation, format: Format, exact: bool) -> Result<Vec<(String, String)>> {
    Ok(tables(e)?
        .iter()
        .map(|t| {
            let body = match format {
                Format::Csv => csv_document(t, e.rounding, exact),
                Format::Markdown => markdown_document(t, e.rounding, exact),
                Format::Json => pretty(&table_value(t, e.rounding)),
            };
            (format!("{}.{}", t.name, format.extension()), body)
        })
        .collect())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report values serialize");
    s.push('\n');
    s
}

fn money_pair(m: Money, mode: RoundingMode) -> Value {
    json!({ "display": m.round(mode).to_string(), "exact": m.to_string() })
}

pub fn report_value(e: &Evaluation) -> Result<Value> {
    let mode = e.rounding;
    let r = &e.result;
    let inv = &e.investment;
    let mut tables_map = Map::new();
    for t in tables(e)? {
        tables_map.insert(t.name.into(), table_value(&t, mode));
    }
    let statement: Vec<Value> = table19(e)
        .rows
        .iter()
        .map(|row| {
            let Cell::Amount(m) = row.cells[0] else { unreachable!("statement rows are amounts") };
            json!({ "item": row.label, "amount": m.round(mode).to_string(), "exact": m.to_string() })
        })
        .collect();
    Ok(json!({
        "report_version": REPORT_VERSION,
        "scenario": e.name,
        "currency": e.currency,
        "horizon": e.horizon,
        "investment": {
            "staff": money_pair(inv.staff, mode),
            "hardware": money_pair(inv.hardware, mode),
            "network": money_pair(inv.network, mode),
            "support": money_pair(inv.support, mode),
            "total": money_pair(inv.total, mode),
        },
        "statement": statement,
        "roi_percent": r.roi_display(),
        "roi_percent_exact": r.roi_percent.to_string(),
        "npv": r.npv.map(|n| money_pair(n, mode)),
        "payback_year": r.payback_year,
        "financial_benefits": e.financial_benefit_ids,
        "tables": Value::Object(tables_map),
        "diagnostics": e.diagnostics,
    }))
}

/// Canonical JSON report text. Identical scenarios give identical bytes.
pub fn report_json(e: &Evaluation) -> Result<String> {
    Ok(pretty(&report_value(e)?))
}

/// Body returned when a scenario is rejected.
pub fn diagnostics_json(diagnostics: &[Diagnostic]) -> String {
    pretty(&json!({ "diagnostics": diagnostics }))
}

fn point_value(p: &SweepPoint) -> Value {
    match &p.outcome {
        Ok(r) => json!({
            "value": p.value.to_string(),
            "roi_percent": r.roi_display(),
            "roi_percent_exact": r.roi_percent.to_string(),
            "net_cash_flow": r.statement.net_cash_flow.to_string(),
            "investment": r.investment.to_string(),
            "npv": r.npv.map(|n| n.to_string()),
            "payback_year": r.payback_year,
        }),
        Err(diags) => json!({ "value": p.value.to_string(), "diagnostics": diags }),
    }
}

pub fn sweep_json(param: &str, points: &[SweepPoint]) -> String {
    pretty(&json!({ "param": param, "points": points.iter().map(point_value).collect::<Vec<_>>() }))
}

pub fn sweep_csv(param: &str, points: &[SweepPoint]) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::CRLF).from_writer(Vec::new());
    w.write_record([param, "roi_percent", "net_cash_flow", "npv", "payback_year", "error"])
        .expect("in-memory write");
    for p in points {
        let record = match &p.outcome {
            Ok(r) => [
                p.value.to_string(),
                r.roi_display(),
                r.statement.net_cash_flow.round(RoundingMode::HalfUp).to_string(),
                r.npv.map(|n| n.round(RoundingMode::HalfUp).to_string()).unwrap_or_default(),
                r.payback_year.map(|y| y.to_string()).unwrap_or_default(),
                String::new(),
            ],
            Err(d) => [
                p.value.to_string(),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
                d.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
            ],
        };
        w.write_record(&record).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

pub fn sweep_markdown(param: &str, points: &[SweepPoint]) -> String {
    let mut out = format!("| {} | ROI (%) | Arus Kas Bersih |\n| ---: | ---: | ---: |\n", md_escape(param));
    for p in points {
        match &p.outcome {
            Ok(r) => {
                let ncf = r.statement.net_cash_flow.round(RoundingMode::HalfUp).decimal().grouped();
                let _ = writeln!(out, "| {} | {} | {} |", p.value, r.roi_display(), ncf);
            }
            Err(d) => {
                let msg = d.first().map(ToString::to_string).unwrap_or_default();
                let _ = writeln!(out, "| {} | {} | |", p.value, md_escape(&msg));
            }
        }
    }
    out
}
