//! Conway polynomials.
//!
//! The crate ships a precomputed table covering every prime power
//! p^f <= 2^16 (see `data/conway.txt`, one line per field: `p f c_0
//! c_1 ... c_f` in decimal). The table is generated by the algorithm
//! in [`compute_conway`], exposed so the shipped data can be
//! regenerated and audited (`cargo run -p ffield --bin gen-conway`).
//!
//! A Conway polynomial C_{p,f} is the minimal monic primitive degree-f
//! polynomial over GF(p), under the word order below, that is
//! norm-compatible with C_{p,m} for every proper divisor m of f:
//! C_{p,m}(x^((p^f-1)/(p^m-1))) = 0 (mod C_{p,f}).
//!
//! Word order: write g = x^f + sum_i (-1)^(f-i) c_i x^i and compare the
//! words (c_{f-1}, ..., c_0) lexicographically with 0 < 1 < ... < p-1.

use crate::poly::{self, Poly};
use std::collections::HashMap;
use std::sync::OnceLock;

pub const TABLE_LIMIT: u64 = 1 << 16;

static TABLE: OnceLock<HashMap<(u64, usize), Vec<u64>>> = OnceLock::new();

fn table() -> &'static HashMap<(u64, usize), Vec<u64>> {
    TABLE.get_or_init(|| {
        let raw = include_str!("../data/conway.txt");
        let mut map = HashMap::new();
        for (lineno, line) in raw.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace().map(|t| {
                t.parse::<u64>()
                    .unwrap_or_else(|_| panic!("conway.txt line {}: bad token", lineno + 1))
            });
            let p = it.next().expect("p");
            let f = it.next().expect("f") as usize;
            let coeffs: Vec<u64> = it.collect();
            assert_eq!(coeffs.len(), f + 1, "conway.txt line {}: length", lineno + 1);
            map.insert((p, f), coeffs);
        }
        map
    })
}

/// Look up the shipped Conway polynomial for GF(p^f), little-endian
/// coefficients of length f+1. Covers all p^f <= 2^16.
pub fn conway_polynomial(p: u64, f: usize) -> Option<Vec<u64>> {
    table().get(&(p, f)).cloned()
}

/// Convert a word (c_{f-1}, ..., c_0) into polynomial coefficients.
fn word_to_poly(word: &[u64], p: u64) -> Poly {
    let f = word.len();
    let mut coeffs = vec![0u64; f + 1];
    coeffs[f] = 1;
    for (k, &c) in word.iter().enumerate() {
        // word[k] corresponds to the coefficient index i = f-1-k
        let i = f - 1 - k;
        // poly coefficient a_i with a_i = (-1)^(f-i) c_i
        let a = if (f - i) % 2 == 0 { c % p } else { (p - c % p) % p };
        coeffs[i] = a;
    }
    coeffs
}

/// Compute C_{p,f} from scratch, given all C_{p,m} for proper divisors
/// m | f in `smaller`. Pure search in word order; no table access.
pub fn compute_conway(p: u64, f: usize, smaller: &HashMap<usize, Poly>) -> Poly {
    let q1 = p.checked_pow(f as u32).expect("q fits in u64") - 1;
    let proper: Vec<usize> = (1..f).filter(|m| f % m == 0).collect();
    let mut word = vec![0u64; f];
    loop {
        // constant coefficient 0 can never be primitive
        if word[f - 1] != 0 {
            let cand = word_to_poly(&word, p);
            if poly::is_primitive(&cand, p) && compatible(&cand, p, q1, &proper, smaller) {
                return cand;
            }
        }
        // increment the word as a base-p counter, most significant first
        let mut k = f;
        loop {
            if k == 0 {
                panic!("no Conway polynomial found for p={p} f={f}");
            }
            k -= 1;
            word[k] += 1;
            if word[k] < p {
                break;
            }
            word[k] = 0;
        }
    }
}

fn compatible(cand: &Poly, p: u64, q1: u64, proper: &[usize], smaller: &HashMap<usize, Poly>) -> bool {
    for &m in proper {
        let c_m = &smaller[&m];
        let e = q1 / (p.pow(m as u32) - 1);
        let xe = poly::x_pow_mod(e, cand, p);
        // evaluate c_m at x^e mod cand (Horner)
        let mut acc: Poly = Vec::new();
        for &coef in c_m.iter().rev() {
            acc = poly::mul_mod(&acc, &xe, cand, p);
            if coef != 0 {
                acc = poly::add(&acc, &vec![coef], p);
            }
        }
        if !acc.is_empty() {
            return false;
        }
    }
    true
}

/// All (p, f) with p prime and p^f <= limit, f >= 1.
pub fn fields_up_to(limit: u64) -> Vec<(u64, usize)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= limit {
        if poly::prime_divisors(p) == vec![p] {
            let mut q = p;
            let mut f = 1usize;
            while q <= limit {
                out.push((p, f));
                match q.checked_mul(p) {
                    Some(nq) => q = nq,
                    None => break,
                }
                f += 1;
            }
        }
        p += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn compute_chain(p: u64, f: usize) -> Poly {
        let mut smaller = HashMap::new();
        for m in 1..=f {
            if f % m == 0 {
                let c = compute_conway(p, m, &smaller);
                smaller.insert(m, c);
            }
        }
        smaller.remove(&f).unwrap()
    }

    #[test]
    fn known_small_conway_polynomials() {
        // Anchors with well-known values.
        assert_eq!(compute_chain(2, 1), vec![1, 1]); // x+1
        assert_eq!(compute_chain(2, 2), vec![1, 1, 1]); // x^2+x+1
        assert_eq!(compute_chain(2, 3), vec![1, 1, 0, 1]); // x^3+x+1
        assert_eq!(compute_chain(2, 4), vec![1, 1, 0, 0, 1]); // x^4+x+1
        assert_eq!(compute_chain(3, 1), vec![1, 1]); // x+1 (root 2)
        assert_eq!(compute_chain(3, 2), vec![2, 2, 1]); // x^2+2x+2
        assert_eq!(compute_chain(5, 1), vec![3, 1]); // x+3 (root 2)
        assert_eq!(compute_chain(2, 8), vec![1, 0, 1, 1, 1, 0, 0, 0, 1]); // x^8+x^4+x^3+x^2+1
    }

    #[test]
    fn shipped_table_matches_recomputation_small() {
        for (p, f) in [(2, 1), (2, 6), (3, 3), (5, 2), (7, 2), (11, 1), (13, 2)] {
            let shipped = conway_polynomial(p, f).expect("shipped");
            assert_eq!(shipped, compute_chain(p, f), "p={p} f={f}");
        }
    }

    #[test]
    fn shipped_table_covers_all_fields_up_to_limit() {
        for (p, f) in fields_up_to(TABLE_LIMIT) {
            assert!(conway_polynomial(p, f).is_some(), "missing p={p} f={f}");
        }
    }

    #[test]
    fn shipped_entries_are_monic_and_irreducible_sample() {
        for (p, f) in [(2, 16), (3, 10), (5, 6), (251, 2), (65521, 1)] {
            let c = conway_polynomial(p, f).expect("entry");
            assert_eq!(*c.last().unwrap(), 1);
            assert!(poly::is_primitive(&c, p), "p={p} f={f} not primitive");
        }
    }
}
