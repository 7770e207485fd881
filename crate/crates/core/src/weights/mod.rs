//! Exact weight distributions and their classification.
//!
//! [`weight_distribution`] visits all `2^k` messages. The message space is
//! split into `2^b` blocks by fixing the top `b` message bits; every block
//! is walked in Gray order into a private histogram and the histograms are
//! summed at the end, so the counts do not depend on the worker count.

mod kernel;

use std::fmt;
use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qccode::{Layout, QcCode};

/// Largest dimension [`weight_distribution`] will enumerate.
pub const MAX_ENUMERATION_K: usize = 40;

/// Largest dimension [`weight_distribution_bruteforce`] will enumerate.
pub const MAX_BRUTEFORCE_K: usize = 20;

const TABLE_BITS: usize = 12;
const OVERSUBSCRIBE_BITS: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    k: usize,
    counts: Vec<u64>,
}

impl WeightDistribution {
    /// Wraps raw counts `A_0..A_n`; `n + 1 = counts.len()`.
    pub fn from_counts(k: usize, counts: Vec<u64>) -> Self {
        WeightDistribution { k, counts }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `A_w`, zero outside the stored range.
    pub fn count(&self, w: usize) -> u64 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    /// Number of messages enumerated, `2^k`.
    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    /// Smallest nonzero weight that occurs.
    pub fn min_distance(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&w| self.counts[w] > 0)
    }

    pub fn parity(&self) -> Parity {
        let present = || (1..self.counts.len()).filter(|&w| self.counts[w] > 0);
        if present().any(|w| w % 2 == 1) {
            Parity::NotSelfDualPattern
        } else if present().all(|w| w % 4 == 0) {
            Parity::DoublyEven
        } else {
            Parity::SinglyEven
        }
    }
}

/// Counts codeword weights over all `2^k` messages using `workers` threads.
pub fn weight_distribution(code: &QcCode, workers: usize) -> Result<WeightDistribution> {
    let block_bits =
        workers.max(1).next_power_of_two().trailing_zeros() as usize + OVERSUBSCRIBE_BITS;
    let dist = enumerate(code, workers, block_bits, None)?;
    Ok(dist.expect("enumeration without a stop weight always completes"))
}

/// Like [`weight_distribution`], but returns `None` as soon as some nonzero
/// codeword of weight below `d` is seen. A returned distribution is complete.
pub fn weight_distribution_if_min_weight(
    code: &QcCode,
    d: usize,
    workers: usize,
) -> Result<Option<WeightDistribution>> {
    enumerate(code, workers, EARLY_EXIT_BLOCK_BITS, Some(d))
}

/// Block count used when an enumeration may stop early; small blocks let the
/// stop flag be seen quickly.
const EARLY_EXIT_BLOCK_BITS: usize = 10;

fn enumerate(
    code: &QcCode,
    workers: usize,
    block_bits: usize,
    stop_below: Option<usize>,
) -> Result<Option<WeightDistribution>> {
    let k = code.k();
    if k > MAX_ENUMERATION_K {
        return Err(Error::Capacity {
            k,
            max: MAX_ENUMERATION_K,
        });
    }
    let workers = workers.max(1);
    let rows = code.generator_matrix(Layout::Separated).rows().to_vec();

    let table_bits = k.min(TABLE_BITS);
    let block_bits = block_bits.min(k - table_bits);
    let middle_bits = k - table_bits - block_bits;

    let table = kernel::Table::new(&rows[..table_bits]);
    let middle = &rows[table_bits..table_bits + middle_bits];
    let fixed = &rows[table_bits + middle_bits..];
    let stop = AtomicBool::new(false);
    let run_block = |block: usize| {
        if stop.load(Ordering::Relaxed) {
            return None;
        }
        let base = fixed
            .iter()
            .enumerate()
            .filter(|(i, _)| (block >> i) & 1 == 1)
            .fold(0u128, |acc, (_, r)| acc ^ r);
        let mut hist = [0u64; kernel::WIDTH];
        kernel::accumulate(&table, middle, base, &mut hist);
        if let Some(d) = stop_below {
            if hist[1..d.min(kernel::WIDTH)].iter().any(|&n| n > 0) {
                stop.store(true, Ordering::Relaxed);
            }
        }
        Some(hist)
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("failed to start worker threads");
    let per_block: Vec<Option<[u64; kernel::WIDTH]>> = pool.install(|| {
        (0..1usize << block_bits)
            .into_par_iter()
            .map(run_block)
            .collect()
    });
    if stop.load(Ordering::Relaxed) {
        return Ok(None);
    }

    let mut counts = vec![0u64; 2 * k + 1];
    for hist in per_block.iter().flatten() {
        for (acc, n) in counts.iter_mut().zip(hist) {
            *acc += n;
        }
    }
    Ok(Some(WeightDistribution { k, counts }))
}

/// Reference enumeration: every message in counting order, codeword formed
/// from scratch. Only for small `k`.
pub fn weight_distribution_bruteforce(code: &QcCode) -> Result<WeightDistribution> {
    let k = code.k();
    if k > MAX_BRUTEFORCE_K {
        return Err(Error::Capacity {
            k,
            max: MAX_BRUTEFORCE_K,
        });
    }
    let g = code.generator_matrix(Layout::Separated);
    let rows = g.rows();
    let mut counts = vec![0u64; 2 * k + 1];
    for m in 0u64..1 << k {
        let mut word = 0u128;
        for (i, row) in rows.iter().enumerate() {
            if (m >> i) & 1 == 1 {
                word ^= row;
            }
        }
        counts[word.count_ones() as usize] += 1;
    }
    Ok(WeightDistribution { k, counts })
}

/// Looks for light codewords among messages of weight at most
/// `max_info_weight` that contain bit 0, plus every single row.
///
/// Every nonzero message has a cyclic shift with bit 0 set and shifts keep
/// the codeword weight, so anchoring on bit 0 loses nothing. Returns the
/// lightest weight found below `threshold`; `Some(0)` means a nonzero
/// message maps to the zero word. `None` does not prove `d >= threshold`.
pub fn prescreen_min_weight(code: &QcCode, max_info_weight: usize, threshold: u32) -> Option<u32> {
    assert!(
        (1..=5).contains(&max_info_weight),
        "prescreen message weight must be in 1..=5"
    );
    let g = code.generator_matrix(Layout::Separated);
    let rows = g.rows();
    let mut best = rows
        .iter()
        .map(|r| r.count_ones())
        .min()
        .unwrap_or(u32::MAX);

    fn extend(rows: &[u128], from: usize, word: u128, left: usize, best: &mut u32) {
        *best = (*best).min(word.count_ones());
        if left == 0 {
            return;
        }
        for j in from..rows.len() {
            extend(rows, j + 1, word ^ rows[j], left - 1, best);
        }
    }
    if let Some(&first) = rows.first() {
        extend(rows, 1, first, max_info_weight - 1, &mut best);
    }
    (best < threshold).then_some(best)
}

#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    W70_1,
    W70_2,
    #[serde(rename = "UNKNOWN")]
    Unknown,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::W70_1 => "W70_1",
            Family::W70_2 => "W70_2",
            Family::Unknown => "UNKNOWN",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Parity {
    SinglyEven,
    DoublyEven,
    NotSelfDualPattern,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::SinglyEven => "SINGLY_EVEN",
            Parity::DoublyEven => "DOUBLY_EVEN",
            Parity::NotSelfDualPattern => "NOT_SELF_DUAL_PATTERN",
        })
    }
}

/// Summary of a weight distribution against the two admissible
/// enumerator shapes for `[70, 35, 12]` singly even self-dual codes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    pub d: Option<usize>,
    pub beta: Option<u64>,
    pub gamma: Option<u64>,
    pub family: Family,
    pub parity: Parity,
    /// Whether `(family, gamma, beta)` is absent from a list of previously
    /// reported parameters; filled in by the caller.
    pub novel: Option<bool>,
    pub a12: u64,
    pub a14: u64,
    pub a16: u64,
    pub elapsed_ms: u64,
}

impl CodeReport {
    /// Report with no enumerator classification, for lengths other than 70.
    pub fn unclassified(dist: &WeightDistribution) -> Self {
        CodeReport {
            d: dist.min_distance(),
            beta: None,
            gamma: None,
            family: Family::Unknown,
            parity: dist.parity(),
            novel: None,
            a12: dist.count(12),
            a14: dist.count(14),
            a16: dist.count(16),
            elapsed_ms: 0,
        }
    }

    /// `A_12`, `A_14`, `A_16` implied by the family and its parameters.
    pub fn expected_coefficients(
        family: Family,
        beta: u64,
        gamma: Option<u64>,
    ) -> Option<[i64; 3]> {
        let b = beta as i64;
        match family {
            Family::W70_1 => {
                let g = gamma? as i64;
                Some([2 * b, 11730 - 2 * b - 128 * g, 150535 - 22 * b + 896 * g])
            }
            Family::W70_2 => Some([2 * b, 9682 - 2 * b, 173063 - 22 * b]),
            Family::Unknown => None,
        }
    }
}

/// Reads `d`, `beta`, `gamma` and the enumerator family off a length-70
/// distribution. Both `A_14` and `A_16` must agree before a family is
/// assigned; `A_14` alone cannot separate the families at `gamma = 16`.
pub fn classify_enumerator(dist: &WeightDistribution) -> Result<CodeReport> {
    if dist.counts.len() != 71 || dist.total() != 1u128 << 35 {
        return Err(Error::MalformedDistribution(format!(
            "expected 71 bins summing to 2^35, got {} bins summing to {}",
            dist.counts.len(),
            dist.total()
        )));
    }
    let (a12, a14, a16) = (dist.count(12), dist.count(14), dist.count(16));
    if a12 % 2 == 1 {
        return Err(Error::MalformedDistribution(format!("A_12 = {a12} is odd")));
    }
    let beta = a12 / 2;
    let (b, a14i, a16i) = (beta as i64, a14 as i64, a16 as i64);

    let (family, gamma) = if a14i == 9682 - 2 * b && a16i == 173063 - 22 * b {
        (Family::W70_2, None)
    } else {
        let slack = 11730 - 2 * b - a14i;
        if slack >= 0 && slack % 128 == 0 && a16i == 150535 - 22 * b + 896 * (slack / 128) {
            (Family::W70_1, Some((slack / 128) as u64))
        } else {
            (Family::Unknown, None)
        }
    };

    Ok(CodeReport {
        d: dist.min_distance(),
        beta: Some(beta),
        gamma,
        family,
        parity: dist.parity(),
        novel: None,
        a12,
        a14,
        a16,
        elapsed_ms: 0,
    })
}

/// Upper bound on the minimum distance of a self-dual code of length `n`:
/// `4*floor(n/24) + 6` when `n = 22 (mod 24)`, `4*floor(n/24) + 4` otherwise.
pub fn extremal_bound(n: i64) -> Result<i64> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::InvalidLength(n));
    }
    let base = 4 * (n / 24);
    Ok(if n % 24 == 22 { base + 6 } else { base + 4 })
}
