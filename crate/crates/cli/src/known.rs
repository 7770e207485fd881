//! Weight-enumerator parameters of previously reported `[70, 35, 12]` singly
//! even self-dual codes, used to flag new parameter sets.
//!
//! Some sources state only `beta` (or `beta` and `gamma`) without naming the
//! enumerator family; those entries carry `None` in the missing fields and
//! match any value there.

use qcsd_core::Family;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KnownEntry {
    pub family: Option<Family>,
    pub gamma: Option<u64>,
    pub beta: u64,
}

impl KnownEntry {
    pub fn matches(&self, family: Family, gamma: Option<u64>, beta: u64) -> bool {
        self.beta == beta
            && self.family.map_or(true, |f| f == family)
            && self.gamma.map_or(true, |g| gamma == Some(g))
    }
}

#[derive(Debug, Clone)]
pub struct KnownParams {
    entries: Vec<KnownEntry>,
}

impl KnownParams {
    pub fn literature() -> Self {
        use Family::{W70_1, W70_2};
        let mut entries = Vec::new();
        let mut add = |family: Option<Family>, gamma: Option<u64>, betas: &[u64]| {
            entries.extend(betas.iter().map(|&beta| KnownEntry {
                family,
                gamma,
                beta,
            }));
        };

        add(Some(W70_1), Some(1), &[416]);
        add(
            None,
            Some(0),
            &[1012, 460, 414, 368, 322, 276, 230, 184, 138],
        );
        add(None, None, &(230..=540).step_by(10).collect::<Vec<_>>());
        add(
            Some(W70_1),
            Some(0),
            &(112..=618).step_by(22).collect::<Vec<_>>(),
        );
        add(Some(W70_1), Some(11), &[618, 640, 662, 684, 706]);
        add(Some(W70_1), Some(22), &[684, 750, 772, 794]);
        add(
            Some(W70_2),
            None,
            &(88..=528).step_by(22).collect::<Vec<_>>(),
        );
        add(
            Some(W70_2),
            None,
            &[
                204, 226, 226, 248, 270, 270, 292, 314, 314, 336, 358, 358, 380, 402, 402, 424,
                446, 468, 490, 490, 512, 534, 534, 556, 578, 600, 622, 644, 666, 798, 842,
            ],
        );
        add(
            Some(W70_1),
            Some(0),
            &(102..=612).step_by(34).collect::<Vec<_>>(),
        );

        entries.sort();
        entries.dedup();
        KnownParams { entries }
    }

    pub fn entries(&self) -> &[KnownEntry] {
        &self.entries
    }

    pub fn contains(&self, family: Family, gamma: Option<u64>, beta: u64) -> bool {
        self.entries.iter().any(|e| e.matches(family, gamma, beta))
    }

    /// `Some(true)` when the parameters have not been reported before;
    /// `None` when the code was not classified.
    pub fn novelty(&self, family: Family, gamma: Option<u64>, beta: Option<u64>) -> Option<bool> {
        match (family, beta) {
            (Family::Unknown, _) | (_, None) => None,
            (f, Some(b)) => Some(!self.contains(f, gamma, b)),
        }
    }
}
