//! Inner loop of the weight enumeration.
//!
//! The low `m` message bits are expanded once into a table of `2^m`
//! codewords (in Gray order). The middle bits are then walked in Gray order,
//! one row XOR per step, and every table entry is combined with the current
//! codeword. Weights are computed two at a time and tallied in a 2-D
//! histogram indexed by the pair, which halves the number of dependent
//! memory increments; the pair histogram is folded into the 1-D one every
//! `FLUSH_EVERY` outer steps, well before a `u32` bin can overflow.

const FLUSH_EVERY: u64 = 256;

/// Codewords of all `2^rows.len()` low messages, in Gray order, split into
/// the low and high 64-bit halves of the 128-bit word.
pub(crate) struct Table {
    lo: Vec<u64>,
    hi: Vec<u64>,
}

impl Table {
    pub(crate) fn new(rows: &[u128]) -> Table {
        let len = 1usize << rows.len();
        let mut lo = Vec::with_capacity(len);
        let mut hi = Vec::with_capacity(len);
        let mut c = 0u128;
        for i in 0..len {
            if i > 0 {
                c ^= rows[i.trailing_zeros() as usize];
            }
            lo.push(c as u64);
            hi.push((c >> 64) as u64);
        }
        Table { lo, hi }
    }
}

/// Bins in the pair histogram's rows; covers weights `0..=80`, i.e. `k <= 40`.
pub(crate) const WIDTH: usize = 81;

/// Adds the weights of `base ^ gray(middle) ^ table[i]` for every middle
/// message and table entry to `out`, indexed by weight.
pub(crate) fn accumulate(table: &Table, middle: &[u128], base: u128, out: &mut [u64; WIDTH]) {
    #[cfg(target_arch = "x86_64")]
    {
        if is_x86_feature_detected!("avx512f")
            && is_x86_feature_detected!("avx512bw")
            && is_x86_feature_detected!("avx512vl")
            && is_x86_feature_detected!("avx512vpopcntdq")
        {
            // SAFETY: the required target features were detected at runtime.
            unsafe { accumulate_avx512(table, middle, base, out) };
            return;
        }
        if is_x86_feature_detected!("popcnt") {
            // SAFETY: as above.
            unsafe { accumulate_popcnt(table, middle, base, out) };
            return;
        }
    }
    accumulate_generic(table, middle, base, out);
}

#[cfg(target_arch = "x86_64")]
#[target_feature(enable = "popcnt,avx2,avx512f,avx512bw,avx512vl,avx512vpopcntdq")]
unsafe fn accumulate_avx512(table: &Table, middle: &[u128], base: u128, out: &mut [u64; WIDTH]) {
    accumulate_generic(table, middle, base, out)
}

#[cfg(target_arch = "x86_64")]
#[target_feature(enable = "popcnt")]
unsafe fn accumulate_popcnt(table: &Table, middle: &[u128], base: u128, out: &mut [u64; WIDTH]) {
    accumulate_generic(table, middle, base, out)
}

/// Pair-histogram plane, rounded up to a power of two so that masking the
/// index proves it in bounds.
const PLANE: usize = (WIDTH * WIDTH).next_power_of_two();

#[inline(always)]
fn accumulate_generic(table: &Table, middle: &[u128], base: u128, out: &mut [u64; WIDTH]) {
    let half = table.lo.len() / 2;
    let (lo0, lo1) = table.lo.split_at(half);
    let (hi0, hi1) = table.hi.split_at(half);

    let mut pairs = vec![0u32; 2 * PLANE];
    let mut idx = vec![0u16; half];
    let mut c = base;
    let steps = 1u64 << middle.len();

    for t in 0..steps {
        if t > 0 {
            c ^= middle[t.trailing_zeros() as usize];
        }
        let (cl, ch) = (c as u64, (c >> 64) as u64);
        for ((((slot, &l0), &l1), &h0), &h1) in idx.iter_mut().zip(lo0).zip(lo1).zip(hi0).zip(hi1) {
            let a = (l0 ^ cl).count_ones().wrapping_add((h0 ^ ch).count_ones());
            let b = (l1 ^ cl).count_ones().wrapping_add((h1 ^ ch).count_ones());
            *slot = (a as u16).wrapping_mul(WIDTH as u16).wrapping_add(b as u16);
        }
        let (even, odd) = pairs.split_at_mut(PLANE);
        let mut chunks = idx.chunks_exact(2);
        for two in &mut chunks {
            let (i, j) = (two[0] as usize & (PLANE - 1), two[1] as usize & (PLANE - 1));
            even[i] = even[i].wrapping_add(1);
            odd[j] = odd[j].wrapping_add(1);
        }
        for &i in chunks.remainder() {
            let i = i as usize & (PLANE - 1);
            even[i] = even[i].wrapping_add(1);
        }
        if t % FLUSH_EVERY == FLUSH_EVERY - 1 {
            fold_pairs(&mut pairs, out);
        }
    }
    fold_pairs(&mut pairs, out);
}

fn fold_pairs(pairs: &mut [u32], out: &mut [u64; WIDTH]) {
    for a in 0..WIDTH {
        for b in 0..WIDTH {
            let j = a * WIDTH + b;
            let n = pairs[j] as u64 + pairs[PLANE + j] as u64;
            out[a] += n;
            out[b] += n;
        }
    }
    pairs.fill(0);
}
