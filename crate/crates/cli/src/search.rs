use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use qcsd_core::{run_search, Family, SearchConfig, SearchHit};

use crate::known::KnownParams;
use crate::CliError;

/// One output row of `search`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HitRow {
    pub beta: Option<u64>,
    pub poly: String,
    #[serde(rename = "K")]
    pub window: usize,
    pub ones: usize,
    pub gamma: Option<u64>,
    pub family: Family,
    pub novel: Option<bool>,
    pub d: Option<usize>,
}

impl HitRow {
    pub fn new(hit: &SearchHit, known: &KnownParams) -> Self {
        let r = &hit.report;
        HitRow {
            beta: r.beta,
            poly: hit.poly.clone(),
            window: hit.window,
            ones: hit.weight,
            gamma: r.gamma,
            family: r.family,
            novel: known.novelty(r.family, r.gamma, r.beta),
            d: r.d,
        }
    }
}

pub fn search(cfg: &SearchConfig, known: &KnownParams) -> Result<Vec<HitRow>, CliError> {
    let hits = run_search(cfg)?;
    Ok(hits.iter().map(|h| HitRow::new(h, known)).collect())
}

pub fn render_text(rows: &[HitRow]) -> String {
    let opt = |v: Option<String>| v.unwrap_or_else(|| "-".to_string());
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:>5}  {:<18} {:>3} {:>4} {:>5} {:<7} {:>5}",
        "beta", "P", "K", "ones", "gamma", "family", "novel"
    );
    for r in rows {
        let _ = writeln!(
            s,
            "{:>5}  {:<18} {:>3} {:>4} {:>5} {:<7} {:>5}",
            opt(r.beta.map(|v| v.to_string())),
            r.poly,
            r.window,
            r.ones,
            opt(r.gamma.map(|v| v.to_string())),
            r.family.to_string(),
            opt(r.novel.map(|v| v.to_string())),
        );
    }
    let _ = writeln!(s, "{} hit(s)", rows.len());
    s
}

pub fn render_json(rows: &[HitRow]) -> String {
    serde_json::to_string_pretty(rows).expect("rows serialize")
}

pub fn render_csv(rows: &[HitRow]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if rows.is_empty() {
        w.write_record(["beta", "poly", "K", "ones", "gamma", "family", "novel", "d"])?;
    }
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Output(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
}
