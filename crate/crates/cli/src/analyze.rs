use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use qcsd_core::{
    classify_enumerator, weight_distribution, CodeReport, Family, Gf2Poly, Parity, QcCode,
};

use crate::known::KnownParams;
use crate::CliError;

/// Everything `analyze` prints. Field names are the stable JSON keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub poly: String,
    pub k: usize,
    #[serde(rename = "K")]
    pub window: usize,
    pub weight_p: u32,
    pub q: String,
    pub rank: usize,
    pub self_dual: bool,
    pub systematic_f: Option<String>,
    pub d: Option<usize>,
    pub beta: Option<u64>,
    pub gamma: Option<u64>,
    pub family: Family,
    pub parity: Parity,
    pub novel: Option<bool>,
    pub a12: u64,
    pub a14: u64,
    pub a16: u64,
    pub distribution: Vec<u64>,
    pub elapsed_ms: u64,
}

impl AnalysisReport {
    /// 0 for a self-dual code, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.self_dual {
            0
        } else {
            2
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".to_string());
        let mut s = String::new();
        let _ = writeln!(s, "poly:         {}", self.poly);
        let _ = writeln!(s, "k:            {}", self.k);
        let _ = writeln!(s, "K:            {}", self.window);
        let _ = writeln!(s, "weight_p:     {}", self.weight_p);
        let _ = writeln!(s, "q:            {}", self.q);
        let _ = writeln!(s, "rank:         {}", self.rank);
        let _ = writeln!(s, "self_dual:    {}", self.self_dual);
        let _ = writeln!(s, "systematic_f: {}", opt(self.systematic_f.clone()));
        let _ = writeln!(s, "d:            {}", opt(self.d.map(|v| v.to_string())));
        let _ = writeln!(s, "beta:         {}", opt(self.beta.map(|v| v.to_string())));
        let _ = writeln!(
            s,
            "gamma:        {}",
            opt(self.gamma.map(|v| v.to_string()))
        );
        let _ = writeln!(s, "family:       {}", self.family);
        let _ = writeln!(s, "parity:       {}", self.parity);
        let _ = writeln!(
            s,
            "novel:        {}",
            opt(self.novel.map(|v| v.to_string()))
        );
        let _ = writeln!(s, "a12:          {}", self.a12);
        let _ = writeln!(s, "a14:          {}", self.a14);
        let _ = writeln!(s, "a16:          {}", self.a16);
        let _ = writeln!(s, "elapsed_ms:   {}", self.elapsed_ms);
        s
    }
}

/// Builds the code for `poly` over `x^k + 1`, enumerates its weight
/// distribution and classifies it.
pub fn analyze(
    poly: &str,
    k: usize,
    workers: usize,
    known: &KnownParams,
) -> Result<AnalysisReport, CliError> {
    let started = Instant::now();
    let p: Gf2Poly = poly.parse()?;
    let code = QcCode::new(p, k)?;
    let window = code.window();

    let dist = weight_distribution(&code, workers)?;
    let mut report = if k == 35 {
        classify_enumerator(&dist).unwrap_or_else(|_| CodeReport::unclassified(&dist))
    } else {
        CodeReport::unclassified(&dist)
    };
    report.novel = known.novelty(report.family, report.gamma, report.beta);

    Ok(AnalysisReport {
        poly: code.p().to_bit_string(window),
        k,
        window,
        weight_p: code.p().weight(),
        q: code.q().to_bit_string(window),
        rank: code.rank_from_gcd(),
        self_dual: code.is_self_dual(),
        systematic_f: code.try_systematic().map(|f| f.to_string()),
        d: report.d,
        beta: report.beta,
        gamma: report.gamma,
        family: report.family,
        parity: report.parity,
        novel: report.novel,
        a12: report.a12,
        a14: report.a14,
        a16: report.a16,
        distribution: dist.counts().to_vec(),
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ring_report() {
        let r = analyze("1101", 9, 2, &KnownParams::literature()).unwrap();
        assert_eq!(r.poly, "1101");
        assert_eq!(r.q, "1011");
        assert_eq!(r.window, 4);
        assert_eq!(r.weight_p, 3);
        assert_eq!(r.family, Family::Unknown);
        assert_eq!(r.novel, None);
        assert_eq!(r.distribution.iter().sum::<u64>(), 1 << 9);
    }

    #[test]
    fn input_errors() {
        let known = KnownParams::literature();
        assert!(matches!(
            analyze("12", 35, 1, &known),
            Err(CliError::Core(_))
        ));
        assert!(matches!(analyze("", 35, 1, &known), Err(CliError::Core(_))));
        assert!(matches!(
            analyze("011", 35, 1, &known),
            Err(CliError::Core(_))
        ));
        assert!(matches!(
            analyze("1", 41, 1, &known),
            Err(CliError::Core(_))
        ));
    }

    #[test]
    fn trailing_zeros_are_dropped() {
        let r = analyze("110100", 7, 1, &KnownParams::literature()).unwrap();
        assert_eq!(r.poly, "1101");
        assert_eq!(r.window, 4);
    }
}
