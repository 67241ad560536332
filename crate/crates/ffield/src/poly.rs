//! Dense univariate polynomial arithmetic over GF(p), for prime p.
//!
//! Coefficient vectors are little-endian (index = exponent) and kept
//! normalized (no trailing zeros, except the zero polynomial which is
//! the empty vector). Degrees stay tiny here (at most ~32), so the
//! quadratic algorithms are the right tool.

pub type Poly = Vec<u64>;

pub fn normalize(a: &mut Poly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub fn deg(a: &Poly) -> Option<usize> {
    if a.is_empty() {
        None
    } else {
        Some(a.len() - 1)
    }
}

pub fn add(a: &Poly, b: &Poly, p: u64) -> Poly {
    let mut r = vec![0u64; a.len().max(b.len())];
    for (i, r) in r.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *r = (x + y) % p;
    }
    normalize(&mut r);
    r
}

pub fn sub(a: &Poly, b: &Poly, p: u64) -> Poly {
    let mut r = vec![0u64; a.len().max(b.len())];
    for (i, r) in r.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *r = (x + p - y) % p;
    }
    normalize(&mut r);
    r
}

pub fn mul(a: &Poly, b: &Poly, p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + x * y) % p;
        }
    }
    normalize(&mut r);
    r
}

/// Remainder of `a` modulo the monic polynomial `m`.
pub fn rem(a: &Poly, m: &Poly, p: u64) -> Poly {
    debug_assert_eq!(*m.last().unwrap(), 1, "modulus must be monic");
    let mut r = a.clone();
    normalize(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (j, &c) in m.iter().enumerate() {
                let idx = j + shift;
                r[idx] = (r[idx] + p - lead * c % p) % p;
            }
        }
        r.pop();
        normalize(&mut r);
        if r.len() <= dm {
            break;
        }
    }
    r
}

pub fn mul_mod(a: &Poly, b: &Poly, m: &Poly, p: u64) -> Poly {
    rem(&mul(a, b, p), m, p)
}

/// x^e mod m, by square and multiply.
pub fn x_pow_mod(e: u64, m: &Poly, p: u64) -> Poly {
    pow_mod(&vec![0, 1], e, m, p)
}

pub fn pow_mod(base: &Poly, mut e: u64, m: &Poly, p: u64) -> Poly {
    let mut result = rem(&vec![1], m, p);
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(&result, &b, m, p);
        }
        b = mul_mod(&b, &b, m, p);
        e >>= 1;
    }
    result
}

pub fn gcd(a: &Poly, b: &Poly, p: u64) -> Poly {
    let mut a = a.clone();
    let mut b = b.clone();
    normalize(&mut a);
    normalize(&mut b);
    while !b.is_empty() {
        let monic_b = make_monic(&b, p);
        let r = rem(&a, &monic_b, p);
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        make_monic(&a, p)
    }
}

pub fn make_monic(a: &Poly, p: u64) -> Poly {
    let lead = *a.last().expect("nonzero polynomial");
    if lead == 1 {
        return a.clone();
    }
    let inv = inv_mod_p(lead, p);
    a.iter().map(|&c| c * inv % p).collect()
}

pub fn inv_mod_p(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a nonzero mod p.
    pow_mod_u64(a % p, p - 2, p)
}

pub fn pow_mod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Monic irreducibility test over GF(p) via the x^(p^d) = x criterion:
/// f (monic, degree n >= 1) is irreducible iff x^(p^n) = x mod f and
/// gcd(x^(p^(n/r)) - x, f) = 1 for every prime r | n.
pub fn is_irreducible(f: &Poly, p: u64) -> bool {
    let n = f.len() - 1;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let x = vec![0, 1];
    // x^(p^k) mod f by k successive p-th powers
    let frob = |k: usize| -> Poly {
        let mut t = rem(&x, f, p);
        for _ in 0..k {
            t = pow_mod(&t, p, f, p);
        }
        t
    };
    if frob(n) != rem(&x, f, p) {
        return false;
    }
    for r in prime_divisors(n as u64) {
        let t = frob(n / r as usize);
        let diff = sub(&t, &x, p);
        let g = gcd(&diff, f, p);
        if deg(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// Is the root x of the monic irreducible f a generator of GF(p^n)^*?
pub fn is_primitive(f: &Poly, p: u64) -> bool {
    if !is_irreducible(f, p) {
        return false;
    }
    let n = (f.len() - 1) as u32;
    let q1 = p.pow(n) - 1;
    let one = vec![1];
    for r in prime_divisors(q1) {
        if x_pow_mod(q1 / r, f, p) == one {
            return false;
        }
    }
    true
}

pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rem_reduces_t_squared_in_gf9() {
        // t^2 mod (t^2 + 2t + 2) over GF(3) is t + 1
        let m = vec![2, 2, 1];
        let t2 = vec![0, 0, 1];
        assert_eq!(rem(&t2, &m, 3), vec![1, 1]);
    }

    #[test]
    fn irreducibility_small_cases() {
        assert!(is_irreducible(&vec![1, 1, 1], 2)); // x^2+x+1
        assert!(!is_irreducible(&vec![1, 0, 1], 2)); // x^2+1 = (x+1)^2
        assert!(is_irreducible(&vec![2, 2, 1], 3)); // x^2+2x+2
        assert!(!is_irreducible(&vec![2, 0, 1], 3)); // x^2+2 = (x-1)(x+1)
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive(&vec![1, 1, 1], 2)); // root has order 3
        assert!(is_primitive(&vec![2, 2, 1], 3)); // root has order 8
        assert!(!is_primitive(&vec![1, 0, 1], 3)); // x^2+1: root has order 4, not 8
    }
}
