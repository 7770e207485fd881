//! Quasi-cyclic binary self-dual codes generated by a circulant pair.
//!
//! A tap polynomial `p` is paired with its coefficient-window reversal to
//! form `G = [P | Q]`. The crate builds these generators, checks
//! self-duality two ways, enumerates exact weight distributions, classifies
//! them against the admissible `[70, 35, 12]` enumerators, and searches the
//! polynomial space for new codes.
//!
//! ```
//! use qcsd_core::{Gf2Poly, QcCode};
//!
//! let p: Gf2Poly = "11111101101".parse().unwrap();
//! let code = QcCode::new(p, 35).unwrap();
//! assert!(code.is_self_dual());
//! assert_eq!(code.q().to_string(), "10110111111");
//! ```

pub mod error;
pub mod gf2poly;
pub mod qccode;
pub mod search;
pub mod weights;

pub use error::{Error, Result};
pub use gf2poly::Gf2Poly;
pub use qccode::{GeneratorMatrix, Layout, QcCode};
pub use search::{run_search, DivisorMode, SearchConfig, SearchHit};
pub use weights::{
    classify_enumerator, extremal_bound, prescreen_min_weight, weight_distribution,
    weight_distribution_bruteforce, weight_distribution_if_min_weight, CodeReport, Family, Parity,
    WeightDistribution,
};
