//! Sobol' sequence generator with optional Owen-style scrambling.
//!
//! Points are produced with the Gray-code recurrence: successive points
//! differ by a single direction vector, selected by the lowest zero bit of
//! the previous index. For a power-of-two count the first `2^m` points of
//! the raw sequence (including the all-zeros point) form a (0, m, d)-net in
//! base 2, so every dyadic interval of length `2^-m` in each 1-D projection
//! holds exactly one point.
//!
//! Scrambling is full nested uniform scrambling: for every dimension the
//! binary expansion of each coordinate is walked from the most significant
//! bit down, and the bit is flipped or kept according to a keyed hash of the
//! more significant (unscrambled) bits. Every node of the dyadic tree gets
//! an independent flip decision, which preserves the net structure exactly
//! while randomizing the sequence. The hash is `splitmix64`, keyed by the
//! scramble seed and the dimension index.

use super::direction_numbers::{DIRECTION_SEEDS, MAX_DIMENSION};
use crate::error::{Error, Result};

/// Bits of precision carried per coordinate.
const BITS: u32 = 32;

/// 64-bit finalizing mixer. Used for scramble decisions and for deriving
/// independent sub-seeds; a full-avalanche mixer keeps derived streams
/// uncorrelated even for adjacent keys.
pub(crate) fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Direction vectors for one dimension, scaled to the top `BITS` bits.
fn direction_vectors(dim: usize) -> [u32; BITS as usize] {
    let mut v = [0u32; BITS as usize];
    if dim == 0 {
        // First dimension is the van der Corput sequence in base 2.
        for (k, slot) in v.iter_mut().enumerate() {
            *slot = 1 << (BITS - 1 - k as u32);
        }
        return v;
    }
    let (s, a, m) = DIRECTION_SEEDS[dim - 1];
    let s = s as usize;
    for k in 0..s.min(BITS as usize) {
        v[k] = m[k] << (BITS - 1 - k as u32);
    }
    for k in s..BITS as usize {
        let prev = v[k - s];
        let mut x = prev ^ (prev >> s as u32);
        for i in 1..s {
            if (a >> (s - 1 - i)) & 1 == 1 {
                x ^= v[k - i];
            }
        }
        v[k] = x;
    }
    v
}

/// Raw sequence words for `n` points in `d` dimensions, row-major, starting
/// at sequence index `start` (index 0 is the all-zeros point).
fn raw_words(n: usize, d: usize, start: u64) -> Result<Vec<u32>> {
    if d == 0 || d > MAX_DIMENSION {
        return Err(Error::DimensionUnsupported {
            requested: d,
            available: MAX_DIMENSION,
        });
    }
    let mut out = vec![0u32; n * d];
    for j in 0..d {
        let v = direction_vectors(j);
        // Advance to `start` by XOR-ing the direction vectors selected by the
        // Gray code of the start index, then continue incrementally.
        let gray = start ^ (start >> 1);
        let mut x = 0u32;
        for (k, item) in v.iter().enumerate() {
            if (gray >> k) & 1 == 1 {
                x ^= item;
            }
        }
        if n > 0 {
            out[j] = x;
        }
        for i in 1..n {
            let idx = start + i as u64;
            // The Gray code flips the bit at the lowest zero bit of idx-1,
            // which is the lowest set bit of idx.
            let c = idx.trailing_zeros();
            x ^= v[c as usize];
            out[i * d + j] = x;
        }
    }
    Ok(out)
}

/// Nested uniform scramble of one coordinate word. The flip decision for a
/// bit depends only on the dimension key and the bits above it, so all
/// coordinates sharing a dyadic prefix are permuted together.
fn owen_scramble_word(x: u32, dim_key: u64) -> u32 {
    let mut out = 0u32;
    let wide = x as u64;
    for level in 0..BITS as u64 {
        let bit = BITS as u64 - 1 - level;
        let prefix = wide >> (bit + 1);
        let node = (prefix << 6) | level;
        let flip = (mix64(dim_key ^ node.wrapping_mul(0x9E37_79B9_7F4A_7C15)) & 1) as u32;
        out |= ((((wide >> bit) as u32) & 1) ^ flip) << bit;
    }
    out
}

/// Unscrambled points, skipping the all-zeros point at sequence index 0.
pub(crate) fn unscrambled_words(n: usize, d: usize) -> Result<Vec<u32>> {
    raw_words(n, d, 1)
}

/// Owen-scrambled points. Scrambling maps the all-zeros point to an ordinary
/// interior point, so the sequence starts at index 0 and power-of-two
/// prefixes keep the exact net property.
pub(crate) fn scrambled_words(n: usize, d: usize, seed: u64) -> Result<Vec<u32>> {
    let mut words = raw_words(n, d, 0)?;
    for j in 0..d {
        let dim_key = mix64(seed ^ mix64(j as u64 + 1));
        for i in 0..n {
            let w = &mut words[i * d + j];
            *w = owen_scramble_word(*w, dim_key);
        }
    }
    Ok(words)
}

/// Converts a sequence word to a coordinate in `[0, 1)`.
pub(crate) fn word_to_unit(w: u32) -> f64 {
    w as f64 / (1u64 << BITS) as f64
}
