//! Table rows for delta sweeps and their flat CSV/JSON record form.

use serde::{Deserialize, Serialize};

use crate::footprint::{self, ProductSpec, TauBound};
use crate::quantum::{self, GvClass, GvVerdict, QuantumError, QuantumParams, SteaneOutcome};

/// One admissible `delta`: the CSS code, its enlargement, and the three
/// dimension-increase figures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub delta: u64,
    pub css: QuantumParams,
    pub css_gv: GvClass,
    pub steane: QuantumParams,
    pub steane_gv: GvClass,
    /// Edge-monomial count, when that guarantee applies.
    pub prop4_increase: Option<u64>,
    /// Closed-form lower bound on `tau(delta - 1)`, when defined.
    pub cor1: Option<TauBound>,
    pub actual_increase: u64,
}

pub fn table_row(spec: &ProductSpec, delta: u64) -> Result<TableRow, QuantumError> {
    let css = quantum::css_params(spec, delta)?;
    let SteaneOutcome { params: steane, increase, .. } = quantum::steane_params(spec, delta)?;
    Ok(TableRow {
        delta,
        css_gv: quantum::gv_classify(&css)?,
        steane_gv: quantum::gv_classify(&steane)?,
        css,
        steane,
        prop4_increase: quantum::enlarge_guarantee(spec, delta),
        cor1: footprint::tau_lower_bound(spec, delta - 1).ok(),
        actual_increase: increase,
    })
}

/// Rows for every `delta` in `lo..=hi`; inadmissible values come back as
/// errors in place, so callers can report and skip them.
pub fn table(spec: &ProductSpec, lo: u64, hi: u64) -> Vec<(u64, Result<TableRow, QuantumError>)> {
    (lo..=hi).map(|d| (d, table_row(spec, d))).collect()
}

/// Flat record; the field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRecord {
    pub delta: u64,
    pub n: u64,
    pub css_k: u64,
    pub steane_k: u64,
    /// Distance guaranteed for the enlarged code.
    pub d: u64,
    pub css_gv: GvVerdict,
    pub steane_gv: GvVerdict,
    pub prop4: Option<u64>,
    pub cor1: Option<u64>,
    pub cor1_exact: bool,
    pub actual: u64,
}

impl From<&TableRow> for TableRecord {
    fn from(row: &TableRow) -> TableRecord {
        TableRecord {
            delta: row.delta,
            n: row.css.n,
            css_k: row.css.k,
            steane_k: row.steane.k,
            d: row.steane.d,
            css_gv: row.css_gv.verdict,
            steane_gv: row.steane_gv.verdict,
            prop4: row.prop4_increase,
            cor1: row.cor1.map(|b| b.bound),
            cor1_exact: row.cor1.is_some_and(|b| b.exact),
            actual: row.actual_increase,
        }
    }
}

pub const CSV_HEADER: &str = "delta,n,css_k,steane_k,d,css_gv,steane_gv,prop4,cor1,cor1_exact,actual";

fn opt(v: Option<u64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

/// Text line: CSS code and marker, enlarged code and marker, then the
/// three increase columns (`*` on an exact closed-form bound).
pub fn render_text_row(row: &TableRow) -> String {
    let steane = QuantumParams {
        d_is_lower_bound: false,
        ..row.steane
    };
    let cor1 = match row.cor1 {
        Some(b) if b.exact => format!("{}*", b.bound),
        Some(b) => b.bound.to_string(),
        None => "-".to_string(),
    };
    format!(
        "{:>3}  {:<20} {:<20} {:>3} {:>4} {:>4}",
        row.delta,
        format!("{} {}", row.css, row.css_gv.verdict.marker()).trim_end(),
        format!("{} {}", steane, row.steane_gv.verdict.marker()).trim_end(),
        opt(row.prop4_increase),
        cor1,
        row.actual_increase
    )
}

pub fn text_header() -> String {
    format!(
        "{:>3}  {:<20} {:<20} {:>3} {:>4} {:>4}",
        "d", "css", "steane", "K", "cor", "tau"
    )
}
