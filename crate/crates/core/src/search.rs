//! Exhaustive search over tap polynomials.
//!
//! Candidates are `K`-bit patterns with both end coefficients set and a fixed
//! number of ones. Each candidate passes through a divisor filter on
//! `gcd(p, x^k + 1)` and `gcd(reverse(p), x^k + 1)`, a cheap light-codeword
//! prescreen, and finally a full weight enumeration.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2poly::Gf2Poly;
use crate::qccode::QcCode;
use crate::weights::{
    classify_enumerator, prescreen_min_weight, weight_distribution_if_min_weight, CodeReport,
    MAX_ENUMERATION_K,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DivisorMode {
    /// Both `gcd(p, x^k + 1)` and `gcd(q, x^k + 1)` are nontrivial and
    /// coprime to each other.
    RequireNontrivial,
    /// Only require the two gcds to be coprime, i.e. full rank.
    Any,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub k: usize,
    pub window_min: usize,
    pub window_max: usize,
    pub weights: BTreeSet<usize>,
    pub divisor_mode: DivisorMode,
    pub target_d: usize,
    pub prescreen_info_weight: usize,
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            k: 35,
            window_min: 11,
            window_max: 16,
            weights: BTreeSet::from([7, 9]),
            divisor_mode: DivisorMode::RequireNontrivial,
            target_d: 12,
            prescreen_info_weight: 4,
            workers: 1,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.k < 2 || self.k > MAX_ENUMERATION_K {
            return bad(format!("k = {} outside 2..={MAX_ENUMERATION_K}", self.k));
        }
        if self.window_min < 2 || self.window_min > self.window_max || self.window_max > self.k {
            return bad(format!(
                "window range {}..={} must satisfy 2 <= min <= max <= k = {}",
                self.window_min, self.window_max, self.k
            ));
        }
        if self.weights.is_empty() {
            return bad("no polynomial weights given".into());
        }
        if let Some(w) = self.weights.iter().find(|&&w| w < 1 || w > self.window_max) {
            return bad(format!("weight {w} outside 1..={}", self.window_max));
        }
        if !(1..=5).contains(&self.prescreen_info_weight) {
            return bad(format!(
                "prescreen message weight {} outside 1..=5",
                self.prescreen_info_weight
            ));
        }
        if self.workers == 0 {
            return bad("at least one worker is required".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHit {
    /// Lexicographically smaller of the tap string and its reversal.
    pub poly: String,
    pub window: usize,
    pub weight: usize,
    pub report: CodeReport,
}

/// All `window`-bit patterns with both end bits set and `weight` ones, in
/// lexicographic order of the interior string.
#[derive(Debug, Clone)]
pub struct Candidates {
    cells: Vec<(usize, usize)>,
    cell: usize,
    entered: bool,
    pending: Option<u64>,
}

impl Candidates {
    pub fn new(cfg: &SearchConfig) -> Self {
        let cells = (cfg.window_min..=cfg.window_max)
            .flat_map(|w| cfg.weights.iter().map(move |&n| (w, n)))
            .collect();
        Candidates {
            cells,
            cell: 0,
            entered: false,
            pending: None,
        }
    }
}

/// Smallest interior pattern of the cell, if the cell is nonempty.
fn first_interior(window: usize, weight: usize) -> Option<u64> {
    if window < 2 || weight < 2 || weight > window {
        return None;
    }
    Some((1u64 << (weight - 2)) - 1)
}

/// Next larger integer with the same popcount.
fn next_same_popcount(v: u64) -> Option<u64> {
    let low = v & v.wrapping_neg();
    let ripple = v.checked_add(low)?;
    Some((((ripple ^ v) >> 2) / low) | ripple)
}

impl Iterator for Candidates {
    type Item = Gf2Poly;

    fn next(&mut self) -> Option<Gf2Poly> {
        loop {
            let &(window, weight) = self.cells.get(self.cell)?;
            if !self.entered {
                self.entered = true;
                self.pending = first_interior(window, weight);
            }
            let Some(v) = self.pending else {
                self.cell += 1;
                self.entered = false;
                continue;
            };
            let inner = window - 2;
            self.pending = match v {
                0 => None,
                _ => next_same_popcount(v).filter(|&n| n < 1u64 << inner),
            };
            // Interior character j (string position j + 1) is bit inner-1-j,
            // so numeric order is lexicographic order of the string.
            let mut bits = 1u128 | 1u128 << (window - 1);
            for j in 0..inner {
                if (v >> (inner - 1 - j)) & 1 == 1 {
                    bits |= 1u128 << (j + 1);
                }
            }
            return Some(Gf2Poly::from_bits(bits));
        }
    }
}

/// `gcd(p, x^k + 1)` and `gcd(reverse(p), x^k + 1)`.
pub fn divisor_split(p: &Gf2Poly, k: usize) -> Result<(Gf2Poly, Gf2Poly)> {
    let modulus = Gf2Poly::x_pow_k_minus_1(k)?;
    let window = (p.degree() + 1).max(0) as usize;
    let q = p.reverse_window(window)?;
    Ok((p.gcd(&modulus)?, q.gcd(&modulus)?))
}

pub fn divisor_filter(p: &Gf2Poly, k: usize, mode: DivisorMode) -> bool {
    let Ok((g1, g2)) = divisor_split(p, k) else {
        return false;
    };
    let coprime = g1.gcd(&g2).map(|g| g.is_one()).unwrap_or(false);
    match mode {
        DivisorMode::RequireNontrivial => coprime && !g1.is_one() && !g2.is_one(),
        DivisorMode::Any => coprime,
    }
}

/// Lexicographically smaller of `p` and its reversal, as strings of length
/// `window`.
pub fn canonical_form(p: &Gf2Poly, window: usize) -> Result<String> {
    let fwd = p.to_bit_string(window);
    let rev = p.reverse_window(window)?.to_bit_string(window);
    Ok(fwd.min(rev))
}

pub fn run_search(cfg: &SearchConfig) -> Result<Vec<SearchHit>> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .expect("failed to start worker threads");

    // A candidate and its reversal lie in the same cell and give the same
    // code up to swapping halves, so only the canonical one is analyzed.
    let candidates: Vec<(Gf2Poly, String)> = Candidates::new(cfg)
        .filter(|p| divisor_filter(p, cfg.k, cfg.divisor_mode))
        .filter_map(|p| {
            let window = p.degree() as usize + 1;
            let canon = canonical_form(&p, window).ok()?;
            (canon == p.to_bit_string(window)).then_some((p, canon))
        })
        .collect();

    let survivors: Vec<(QcCode, String)> = pool.install(|| {
        candidates
            .into_par_iter()
            .filter_map(|(p, canon)| {
                let code = QcCode::new(p, cfg.k).ok()?;
                let light =
                    prescreen_min_weight(&code, cfg.prescreen_info_weight, cfg.target_d as u32);
                light.is_none().then_some((code, canon))
            })
            .collect()
    });

    let mut hits = Vec::new();
    for (code, canon) in survivors {
        if !code.is_self_dual() {
            continue;
        }
        let started = std::time::Instant::now();
        let Some(dist) = weight_distribution_if_min_weight(&code, cfg.target_d, cfg.workers)?
        else {
            continue;
        };
        if !dist.min_distance().is_some_and(|d| d >= cfg.target_d) {
            continue;
        }
        let mut report = match cfg.k {
            35 => classify_enumerator(&dist).unwrap_or_else(|_| CodeReport::unclassified(&dist)),
            _ => CodeReport::unclassified(&dist),
        };
        report.elapsed_ms = started.elapsed().as_millis() as u64;
        hits.push(SearchHit {
            poly: canon,
            window: code.window(),
            weight: code.p().weight() as usize,
            report,
        });
    }
    hits.sort_by(|a, b| (a.window, a.weight, &a.poly).cmp(&(b.window, b.weight, &b.poly)));
    hits.dedup_by(|a, b| a.poly == b.poly);
    Ok(hits)
}
