//! Polynomials over GF(2), packed into a single `u128`.
//!
//! Bit `i` holds the coefficient of `x^i`. The quotient ring
//! GF(2)\[x\] / (x^k + 1) is supported for `k <= 64`, which keeps every
//! unreduced product inside 128 bits.

use std::fmt;
use std::ops::{Add, BitXor};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Number of coefficients a [`Gf2Poly`] can hold.
pub const CAPACITY: usize = 128;

/// Largest ring size accepted by [`Gf2Poly::mul_mod`] and friends.
pub const MAX_RING: usize = 64;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Poly {
    bits: u128,
}

impl Gf2Poly {
    pub const ZERO: Gf2Poly = Gf2Poly { bits: 0 };
    pub const ONE: Gf2Poly = Gf2Poly { bits: 1 };

    pub const fn from_bits(bits: u128) -> Self {
        Gf2Poly { bits }
    }

    pub const fn bits(&self) -> u128 {
        self.bits
    }

    /// `x^e`. Panics if `e >= CAPACITY`.
    pub fn monomial(e: usize) -> Self {
        assert!(e < CAPACITY, "monomial exponent {e} out of range");
        Gf2Poly { bits: 1u128 << e }
    }

    /// Degree of the polynomial; the zero polynomial has degree -1.
    pub const fn degree(&self) -> i32 {
        127 - self.bits.leading_zeros() as i32
    }

    /// Number of nonzero coefficients.
    pub const fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub const fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub const fn is_one(&self) -> bool {
        self.bits == 1
    }

    pub fn coeff(&self, i: usize) -> bool {
        i < CAPACITY && (self.bits >> i) & 1 == 1
    }

    /// Parses a `'0'`/`'1'` string whose leftmost character is the
    /// coefficient of `x^0`. Trailing zeros are accepted and simply lower
    /// the degree.
    pub fn parse(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::EmptyPolynomial);
        }
        let mut bits = 0u128;
        let mut len = 0;
        for (pos, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' if pos < CAPACITY => bits |= 1u128 << pos,
                '1' => {}
                _ => return Err(Error::InvalidCharacter { pos, ch }),
            }
            len = pos + 1;
        }
        if len > CAPACITY {
            return Err(Error::PolynomialTooLong { len, max: CAPACITY });
        }
        Ok(Gf2Poly { bits })
    }

    /// Renders the first `len` coefficients, `x^0` first.
    pub fn to_bit_string(&self, len: usize) -> String {
        (0..len)
            .map(|i| if self.coeff(i) { '1' } else { '0' })
            .collect()
    }

    /// `x^k + 1`, which over GF(2) is the same as `x^k - 1`.
    pub fn x_pow_k_minus_1(k: usize) -> Result<Self> {
        if !(1..CAPACITY).contains(&k) {
            return Err(Error::RingSize {
                k,
                max: CAPACITY - 1,
            });
        }
        Ok(Gf2Poly {
            bits: (1u128 << k) | 1,
        })
    }

    /// Product in GF(2)\[x\] / (x^k + 1).
    pub fn mul_mod(&self, other: &Gf2Poly, k: usize) -> Result<Self> {
        check_ring(k)?;
        for op in [self, other] {
            if op.degree() >= k as i32 {
                return Err(Error::NotReduced {
                    degree: op.degree(),
                    k,
                });
            }
        }
        Ok(reduce_cyclic(clmul(self.bits, other.bits), k))
    }

    /// Greatest common divisor. Over GF(2) every nonzero polynomial is
    /// already monic, so the result is unique.
    pub fn gcd(&self, other: &Gf2Poly) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut a, mut b) = (*self, *other);
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// Reverses the coefficient window `[0, window)`: bit `i` of the result
    /// is bit `window - 1 - i` of `self`.
    pub fn reverse_window(&self, window: usize) -> Result<Self> {
        if window > CAPACITY || (window as i32) <= self.degree() {
            return Err(Error::WindowTooShort {
                window,
                degree: self.degree(),
            });
        }
        if window == 0 {
            return Ok(Gf2Poly::ZERO);
        }
        Ok(Gf2Poly {
            bits: self.bits.reverse_bits() >> (CAPACITY - window),
        })
    }

    /// Multiplicative inverse in GF(2)\[x\] / (x^k + 1), if `self` is a unit.
    pub fn inverse_mod(&self, k: usize) -> Result<Option<Self>> {
        check_ring(k)?;
        if self.degree() >= k as i32 {
            return Err(Error::NotReduced {
                degree: self.degree(),
                k,
            });
        }
        let modulus = Gf2Poly::x_pow_k_minus_1(k)?;
        // Extended Euclid tracking only the cofactor of `self`.
        let (mut r0, mut r1) = (modulus, *self);
        let (mut s0, mut s1) = (Gf2Poly::ZERO, Gf2Poly::ONE);
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = Gf2Poly::from_bits(s0.bits ^ clmul(q.bits, s1.bits));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s.rem(&modulus);
        }
        if r0.is_one() {
            Ok(Some(s0.rem(&modulus)))
        } else {
            Ok(None)
        }
    }

    /// Long division. Panics on a zero divisor.
    pub(crate) fn div_rem(&self, divisor: &Gf2Poly) -> (Gf2Poly, Gf2Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree();
        let mut quot = 0u128;
        let mut rem = self.bits;
        loop {
            let rd = 127 - rem.leading_zeros() as i32;
            if rd < dd {
                break;
            }
            let shift = (rd - dd) as u32;
            quot |= 1u128 << shift;
            rem ^= divisor.bits << shift;
        }
        (Gf2Poly { bits: quot }, Gf2Poly { bits: rem })
    }

    pub(crate) fn rem(&self, divisor: &Gf2Poly) -> Gf2Poly {
        self.div_rem(divisor).1
    }
}

fn check_ring(k: usize) -> Result<()> {
    if !(1..=MAX_RING).contains(&k) {
        return Err(Error::RingSize { k, max: MAX_RING });
    }
    Ok(())
}

/// Carry-less product. Callers keep `deg a + deg b < 128`.
fn clmul(a: u128, b: u128) -> u128 {
    let mut acc = 0u128;
    let mut rest = a;
    while rest != 0 {
        let i = rest.trailing_zeros();
        acc ^= b << i;
        rest &= rest - 1;
    }
    acc
}

/// Folds exponents `>= k` back using `x^k = 1`. Input degree < 2k.
fn reduce_cyclic(prod: u128, k: usize) -> Gf2Poly {
    let mask = if k == 128 {
        u128::MAX
    } else {
        (1u128 << k) - 1
    };
    Gf2Poly {
        bits: (prod & mask) ^ (prod >> k),
    }
}

impl FromStr for Gf2Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Gf2Poly::parse(s)
    }
}

impl BitXor for Gf2Poly {
    type Output = Gf2Poly;

    fn bitxor(self, rhs: Gf2Poly) -> Gf2Poly {
        Gf2Poly {
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl Add for Gf2Poly {
    type Output = Gf2Poly;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Gf2Poly) -> Gf2Poly {
        self ^ rhs
    }
}

/// Bit string from `x^0` up to the leading coefficient; `"0"` for zero.
impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        f.write_str(&self.to_bit_string(self.degree() as usize + 1))
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = (0..CAPACITY)
            .rev()
            .filter(|&i| self.coeff(i))
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}
