//! Canonical element tables.
//!
//! Elements are identified with fixed-width keys encoding the image
//! sequence most-significant-point-first, so numeric key order equals
//! lexicographic image order. Width is chosen from the degree: 64,
//! 128 or 192 bits packed (ceil(log2 degree) bits per point), falling
//! back to raw u16 rows beyond that. The table is kept sorted, which
//! makes membership a binary search and gives every group one
//! canonical element numbering for free.

use std::hash::{BuildHasherDefault, Hasher};

/// Multiply-xor hasher for the integer key types; speed matters more
/// than distribution quality here and inputs are already high-entropy.
#[derive(Default)]
pub struct IntHasher(u64);

impl Hasher for IntHasher {
    fn finish(&self) -> u64 {
        self.0
    }
    fn write(&mut self, bytes: &[u8]) {
        for chunk in bytes.chunks(8) {
            let mut buf = [0u8; 8];
            buf[..chunk.len()].copy_from_slice(chunk);
            let v = u64::from_le_bytes(buf);
            self.0 = (self.0 ^ v).wrapping_mul(0x9e37_79b9_7f4a_7c15);
            self.0 ^= self.0 >> 32;
        }
    }
    fn write_u64(&mut self, v: u64) {
        self.0 = (self.0 ^ v).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        self.0 ^= self.0 >> 32;
    }
    fn write_u128(&mut self, v: u128) {
        self.write_u64(v as u64);
        self.write_u64((v >> 64) as u64);
    }
}

pub type IntBuildHasher = BuildHasherDefault<IntHasher>;

pub fn bits_per_point(degree: usize) -> u32 {
    debug_assert!(degree >= 1);
    (usize::BITS - (degree - 1).leading_zeros()).max(1)
}

/// Fixed-width packed key; implemented for u64, u128 and [u64; 3].
pub trait FixedKey: Copy + Eq + Ord + std::hash::Hash + Send + Sync {
    fn capacity_bits() -> u32;
    fn encode(images: &[u16], bits: u32) -> Self;
    fn decode(self, degree: usize, bits: u32, out: &mut [u16]);
    fn into_store(keys: Vec<Self>, bits: u32) -> ElementStore;
}

impl FixedKey for u64 {
    fn capacity_bits() -> u32 {
        64
    }
    fn into_store(keys: Vec<u64>, bits: u32) -> ElementStore {
        ElementStore::U64 { bits, keys }
    }
    #[inline]
    fn encode(images: &[u16], bits: u32) -> Self {
        let mut k = 0u64;
        for &im in images {
            k = (k << bits) | im as u64;
        }
        k
    }
    #[inline]
    fn decode(self, degree: usize, bits: u32, out: &mut [u16]) {
        let mask = (1u64 << bits) - 1;
        let mut k = self;
        for i in (0..degree).rev() {
            out[i] = (k & mask) as u16;
            k >>= bits;
        }
    }
}

impl FixedKey for u128 {
    fn capacity_bits() -> u32 {
        128
    }
    fn into_store(keys: Vec<u128>, bits: u32) -> ElementStore {
        ElementStore::U128 { bits, keys }
    }
    #[inline]
    fn encode(images: &[u16], bits: u32) -> Self {
        let mut k = 0u128;
        for &im in images {
            k = (k << bits) | im as u128;
        }
        k
    }
    #[inline]
    fn decode(self, degree: usize, bits: u32, out: &mut [u16]) {
        let mask = (1u128 << bits) - 1;
        let mut k = self;
        for i in (0..degree).rev() {
            out[i] = (k & mask) as u16;
            k >>= bits;
        }
    }
}

/// 192-bit key as big-endian limbs; lexicographic array order matches
/// the packed bitstring order.
impl FixedKey for [u64; 3] {
    fn capacity_bits() -> u32 {
        192
    }
    fn into_store(keys: Vec<[u64; 3]>, bits: u32) -> ElementStore {
        ElementStore::U192 { bits, keys }
    }
    #[inline]
    fn encode(images: &[u16], bits: u32) -> Self {
        let mut k = [0u64; 3];
        for &im in images {
            // shift the 192-bit value left by `bits`, or in the point
            k[0] = (k[0] << bits) | (k[1] >> (64 - bits));
            k[1] = (k[1] << bits) | (k[2] >> (64 - bits));
            k[2] = (k[2] << bits) | im as u64;
        }
        k
    }
    #[inline]
    fn decode(self, degree: usize, bits: u32, out: &mut [u16]) {
        let mask = (1u64 << bits) - 1;
        let mut k = self;
        for i in (0..degree).rev() {
            out[i] = (k[2] & mask) as u16;
            // shift right by `bits`
            k[2] = (k[2] >> bits) | (k[1] << (64 - bits));
            k[1] = (k[1] >> bits) | (k[0] << (64 - bits));
            k[0] >>= bits;
        }
    }
}

/// Sorted canonical table of group elements.
pub enum ElementStore {
    U64 { bits: u32, keys: Vec<u64> },
    U128 { bits: u32, keys: Vec<u128> },
    U192 { bits: u32, keys: Vec<[u64; 3]> },
    Wide { degree: usize, rows: Vec<u16> },
}

impl ElementStore {
    pub fn len(&self) -> usize {
        match self {
            ElementStore::U64 { keys, .. } => keys.len(),
            ElementStore::U128 { keys, .. } => keys.len(),
            ElementStore::U192 { keys, .. } => keys.len(),
            ElementStore::Wide { degree, rows } => rows.len() / degree,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn decode_into(&self, idx: usize, out: &mut [u16]) {
        match self {
            ElementStore::U64 { bits, keys } => keys[idx].decode(out.len(), *bits, out),
            ElementStore::U128 { bits, keys } => keys[idx].decode(out.len(), *bits, out),
            ElementStore::U192 { bits, keys } => keys[idx].decode(out.len(), *bits, out),
            ElementStore::Wide { degree, rows } => {
                out.copy_from_slice(&rows[idx * degree..(idx + 1) * degree])
            }
        }
    }

    #[inline]
    pub fn find(&self, images: &[u16]) -> Option<u32> {
        match self {
            ElementStore::U64 { bits, keys } => {
                keys.binary_search(&u64::encode(images, *bits)).ok().map(|i| i as u32)
            }
            ElementStore::U128 { bits, keys } => {
                keys.binary_search(&u128::encode(images, *bits)).ok().map(|i| i as u32)
            }
            ElementStore::U192 { bits, keys } => keys
                .binary_search(&<[u64; 3]>::encode(images, *bits))
                .ok()
                .map(|i| i as u32),
            ElementStore::Wide { degree, rows } => {
                let n = rows.len() / degree;
                let mut lo = 0usize;
                let mut hi = n;
                while lo < hi {
                    let mid = (lo + hi) / 2;
                    match rows[mid * degree..(mid + 1) * degree].cmp(images) {
                        std::cmp::Ordering::Less => lo = mid + 1,
                        std::cmp::Ordering::Greater => hi = mid,
                        std::cmp::Ordering::Equal => return Some(mid as u32),
                    }
                }
                None
            }
        }
    }

    /// Build a sorted store from image rows (consumed in any order).
    pub fn from_rows(degree: usize, rows: Vec<Vec<u16>>) -> ElementStore {
        let bits = bits_per_point(degree);
        let total = bits * degree as u32;
        if total <= 64 {
            let mut keys: Vec<u64> = rows.iter().map(|r| u64::encode(r, bits)).collect();
            keys.sort_unstable();
            keys.dedup();
            ElementStore::U64 { bits, keys }
        } else if total <= 128 {
            let mut keys: Vec<u128> = rows.iter().map(|r| u128::encode(r, bits)).collect();
            keys.sort_unstable();
            keys.dedup();
            ElementStore::U128 { bits, keys }
        } else if total <= 192 {
            let mut keys: Vec<[u64; 3]> = rows.iter().map(|r| <[u64; 3]>::encode(r, bits)).collect();
            keys.sort_unstable();
            keys.dedup();
            ElementStore::U192 { bits, keys }
        } else {
            let mut sorted = rows;
            sorted.sort_unstable();
            sorted.dedup();
            let mut flat = Vec::with_capacity(sorted.len() * degree);
            for r in &sorted {
                flat.extend_from_slice(r);
            }
            ElementStore::Wide { degree, rows: flat }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn key_roundtrip_all_widths() {
        for degree in [3usize, 10, 23, 30, 38] {
            let bits = bits_per_point(degree);
            let images: Vec<u16> = (0..degree as u16).rev().collect();
            let mut out = vec![0u16; degree];
            if bits * degree as u32 <= 64 {
                u64::encode(&images, bits).decode(degree, bits, &mut out);
                assert_eq!(out, images);
            }
            if bits * degree as u32 <= 128 {
                u128::encode(&images, bits).decode(degree, bits, &mut out);
                assert_eq!(out, images);
            }
            if bits * degree as u32 <= 192 {
                <[u64; 3]>::encode(&images, bits).decode(degree, bits, &mut out);
                assert_eq!(out, images);
            }
        }
    }

    #[test]
    fn key_order_is_lexicographic() {
        let bits = bits_per_point(30);
        let a: Vec<u16> = (0..30).collect();
        let mut b = a.clone();
        b.swap(7, 8);
        let ka = <[u64; 3]>::encode(&a, bits);
        let kb = <[u64; 3]>::encode(&b, bits);
        assert!(ka < kb);
        assert_eq!(a < b, ka < kb);
    }

    #[test]
    fn store_finds_identity_first() {
        let rows: Vec<Vec<u16>> = vec![vec![1, 2, 0], vec![0, 1, 2], vec![2, 0, 1]];
        let store = ElementStore::from_rows(3, rows);
        assert_eq!(store.find(&[0, 1, 2]), Some(0));
        assert_eq!(store.len(), 3);
    }
}
