//! Regenerates data/conway.txt: Conway polynomials for all p^f <= 2^16.
//!
//! Usage: cargo run --release -p ffield --bin gen-conway > crates/ffield/data/conway.txt

use ffield::conway::{compute_conway, fields_up_to, TABLE_LIMIT};
use std::collections::HashMap;

fn main() {
    println!("# Conway polynomials for all p^f <= 2^16");
    println!("# one line per field: p f c_0 c_1 ... c_f (little-endian, monic)");
    let fields = fields_up_to(TABLE_LIMIT);
    // group by p so each prime's divisor chain is available
    let mut by_p: HashMap<u64, Vec<usize>> = HashMap::new();
    for (p, f) in &fields {
        by_p.entry(*p).or_default().push(*f);
    }
    let mut primes: Vec<u64> = by_p.keys().copied().collect();
    primes.sort_unstable();
    for p in primes {
        let mut degrees = by_p.remove(&p).unwrap();
        degrees.sort_unstable();
        let fmax = *degrees.last().unwrap();
        let mut computed: HashMap<usize, Vec<u64>> = HashMap::new();
        // every divisor of every listed degree is itself listed (p^m <= p^f)
        for f in 1..=fmax {
            if degrees.contains(&f) {
                let c = compute_conway(p, f, &computed);
                let coeffs: Vec<String> = c.iter().map(|c| c.to_string()).collect();
                println!("{} {} {}", p, f, coeffs.join(" "));
                computed.insert(f, c);
            }
        }
        eprintln!("p = {p} done ({} degrees)", degrees.len());
    }
}
