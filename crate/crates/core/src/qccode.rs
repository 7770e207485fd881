//! Circulant-pair codes `G = [P | Q]`.
//!
//! `P` is the circulant generated by the tap polynomial `p`, and `Q` is the
//! circulant generated by the coefficient-window reversal of `p`. Pairing a
//! polynomial with its reversal makes every pair of generator rows
//! orthogonal, so the code is self-dual as soon as it has full rank `k`.

use crate::error::{Error, Result};
use crate::gf2poly::{Gf2Poly, MAX_RING};

/// Largest circulant size for which a generator row fits in a `u128`.
pub const MAX_CIRCULANT: usize = MAX_RING;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QcCode {
    k: usize,
    p: Gf2Poly,
    q: Gf2Poly,
    window: usize,
}

impl QcCode {
    /// Pairs `p` with its reversal over the window `deg(p) + 1`.
    ///
    /// The resulting generator may be rank deficient; check
    /// [`QcCode::rank_from_gcd`] or [`QcCode::is_self_dual`].
    pub fn new(p: Gf2Poly, k: usize) -> Result<Self> {
        if !(1..=MAX_CIRCULANT).contains(&k) {
            return Err(Error::RingSize {
                k,
                max: MAX_CIRCULANT,
            });
        }
        if p.is_zero() {
            return Err(Error::InvalidTap("zero polynomial"));
        }
        if !p.coeff(0) {
            return Err(Error::InvalidTap("constant coefficient must be 1"));
        }
        if p.degree() >= k as i32 {
            return Err(Error::NotReduced {
                degree: p.degree(),
                k,
            });
        }
        let window = p.degree() as usize + 1;
        let q = p.reverse_window(window)?;
        Ok(QcCode { k, p, q, window })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Code length `2k`.
    pub fn length(&self) -> usize {
        2 * self.k
    }

    pub fn p(&self) -> Gf2Poly {
        self.p
    }

    pub fn q(&self) -> Gf2Poly {
        self.q
    }

    /// Tap window length `K = deg(p) + 1`.
    pub fn window(&self) -> usize {
        self.window
    }

    pub fn generator_matrix(&self, layout: Layout) -> GeneratorMatrix {
        let left = circulant_rows(self.p, self.k);
        let right = circulant_rows(self.q, self.k);
        let rows = left
            .iter()
            .zip(&right)
            .map(|(&l, &r)| {
                let sep = l as u128 | (r as u128) << self.k;
                match layout {
                    Layout::Separated => sep,
                    Layout::Interleaved => interleave(sep, self.k),
                }
            })
            .collect();
        GeneratorMatrix {
            k: self.k,
            rows,
            layout,
        }
    }

    /// True iff `G * G^T = 0` over GF(2).
    ///
    /// The construction guarantees this; a `false` here means a bug.
    pub fn gram_is_zero(&self) -> bool {
        let rows = self.generator_matrix(Layout::Separated).rows;
        rows.iter()
            .enumerate()
            .all(|(i, a)| rows[i..].iter().all(|b| (a & b).count_ones() % 2 == 0))
    }

    /// Rank from `k - deg(gcd(p, q, x^k + 1))`.
    pub fn rank_from_gcd(&self) -> usize {
        let modulus = Gf2Poly::x_pow_k_minus_1(self.k).expect("k validated at construction");
        let g = self
            .p
            .gcd(&self.q)
            .and_then(|g| g.gcd(&modulus))
            .expect("p is nonzero");
        self.k - g.degree() as usize
    }

    /// Self-orthogonal with dimension `k`, i.e. half the length.
    pub fn is_self_dual(&self) -> bool {
        self.gram_is_zero() && self.rank_from_gcd() == self.k
    }

    /// If `p` is a unit modulo `x^k + 1`, returns `f` with `p * f = q`, so
    /// that the code is also generated by `[I | F]`.
    pub fn try_systematic(&self) -> Option<Gf2Poly> {
        let inv = self
            .p
            .inverse_mod(self.k)
            .expect("p reduced at construction")?;
        Some(inv.mul_mod(&self.q, self.k).expect("both operands reduced"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Layout {
    /// Columns `0..k` from `P`, `k..2k` from `Q`.
    Separated,
    /// Mixed polynomial string: `P` column `j` goes to `2j`, `Q` column `j`
    /// to `2j + 1`.
    Interleaved,
}

/// `k` generator rows of `2k` bits; bit `c` of a row is column `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    k: usize,
    rows: Vec<u128>,
    layout: Layout,
}

impl GeneratorMatrix {
    pub fn from_rows(k: usize, rows: Vec<u128>, layout: Layout) -> Self {
        GeneratorMatrix { k, rows, layout }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rows(&self) -> &[u128] {
        &self.rows
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }

    /// Row `i` as a string of `2k` characters, column 0 first.
    pub fn row_string(&self, i: usize) -> String {
        (0..2 * self.k)
            .map(|c| {
                if (self.rows[i] >> c) & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }

    /// GF(2) rank by row reduction.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..128 {
            let bit = 1u128 << col;
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r] & bit != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let pivot_row = rows[rank];
            for r in rows.iter_mut().skip(rank + 1) {
                if *r & bit != 0 {
                    *r ^= pivot_row;
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }
}

fn circulant_rows(first: Gf2Poly, k: usize) -> Vec<u64> {
    let base = first.bits() as u64;
    let mask = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    (0..k)
        .map(|i| {
            if i == 0 {
                base
            } else {
                ((base << i) | (base >> (k - i))) & mask
            }
        })
        .collect()
}

fn interleave(separated: u128, k: usize) -> u128 {
    let mut out = 0u128;
    for j in 0..k {
        out |= ((separated >> j) & 1) << (2 * j);
        out |= ((separated >> (k + j)) & 1) << (2 * j + 1);
    }
    out
}
