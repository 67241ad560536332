//! Fully enumerated permutation groups.
//!
//! Enumeration is the deliberate desk-scale strategy: groups are
//! closed breadth-first from their generators, elements live in a
//! sorted canonical table (lexicographic by image sequence), and all
//! further structure (conjugacy classes, subgroup lattices, coset
//! actions) is computed in element-index space.

use crate::perm::{lcm, Perm};
use crate::store::{bits_per_point, ElementStore, FixedKey, IntBuildHasher};
use std::collections::HashSet;
use std::sync::OnceLock;
use thiserror::Error;

/// Default ceiling for full enumeration.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 3_000_000;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group too large to enumerate: found at least {found_at_least} elements (bound {bound})")]
    TooLarge { found_at_least: u64, bound: u64 },
    #[error("generator degree {0} does not match group degree {1}")]
    DegreeMismatch(usize, usize),
    #[error("element is not in the group")]
    NotAnElement,
    #[error("the given set is not a subgroup")]
    NotASubgroup,
    #[error("operation requires a nontrivial group")]
    TrivialGroup,
    #[error("coset index {0} exceeds the degree bound {1}")]
    IndexTooLarge(u64, u64),
    #[error("subgroup enumeration bound exceeded: |G| = {0} > {1}; use the targeted construction path")]
    LatticeBoundExceeded(u64, u64),
}

/// Conjugacy class data: a partition of the element indices, with the
/// canonically least element of each class as representative.
pub struct ClassTable {
    pub class_of: Vec<u32>,
    pub reps: Vec<u32>,
    pub sizes: Vec<u64>,
}

impl ClassTable {
    pub fn class_count(&self) -> usize {
        self.reps.len()
    }
}

pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    pub(crate) store: ElementStore,
    identity_idx: u32,
    classes: OnceLock<ClassTable>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .finish()
    }
}

/// Reusable buffers for the index-space operations.
pub struct OpScratch {
    a: Vec<u16>,
    b: Vec<u16>,
    c: Vec<u16>,
    #[allow(dead_code)]
    d: Vec<u16>,
}

impl PermGroup {
    /// Enumerate the group generated by `gens` on `degree` points.
    pub fn from_generators(
        degree: usize,
        gens: Vec<Perm>,
        bound: u64,
    ) -> Result<PermGroup, GroupError> {
        for g in &gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch(g.degree(), degree));
            }
        }
        let gens: Vec<Perm> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let bits = bits_per_point(degree.max(1));
        let total_bits = bits * degree.max(1) as u32;
        let store = if total_bits <= 64 {
            close_fixed::<u64>(degree, &gens, bits, bound)?
        } else if total_bits <= 128 {
            close_fixed::<u128>(degree, &gens, bits, bound)?
        } else if total_bits <= 192 {
            close_fixed::<[u64; 3]>(degree, &gens, bits, bound)?
        } else {
            close_wide(degree, &gens, bound)?
        };
        let identity = Perm::identity(degree);
        let identity_idx = store.find(identity.images()).expect("identity in closure");
        Ok(PermGroup {
            degree,
            gens,
            store,
            identity_idx,
            classes: OnceLock::new(),
        })
    }

    pub fn from_perms(degree: usize, perms: Vec<Perm>) -> Result<PermGroup, GroupError> {
        // trust-but-verify path for explicit element sets
        let rows: Vec<Vec<u16>> = perms.iter().map(|p| p.images().to_vec()).collect();
        let store = ElementStore::from_rows(degree, rows);
        let identity = Perm::identity(degree);
        let identity_idx = store.find(identity.images()).ok_or(GroupError::NotASubgroup)?;
        let group = PermGroup {
            degree,
            gens: perms,
            store,
            identity_idx,
            classes: OnceLock::new(),
        };
        Ok(group)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.store.len() as u64
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn identity_index(&self) -> u32 {
        self.identity_idx
    }

    pub fn element(&self, idx: u32) -> Perm {
        let mut out = vec![0u16; self.degree];
        self.store.decode_into(idx as usize, &mut out);
        Perm::from_images(out).expect("stored element is a permutation")
    }

    pub fn decode_into(&self, idx: u32, out: &mut [u16]) {
        self.store.decode_into(idx as usize, out);
    }

    pub fn index_of(&self, p: &Perm) -> Option<u32> {
        if p.degree() != self.degree {
            return None;
        }
        self.store.find(p.images())
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index_of(p).is_some()
    }

    pub fn element_indices(&self) -> impl Iterator<Item = u32> {
        0..self.store.len() as u32
    }

    /// `i * j` (apply i, then j) in index space.
    pub fn compose_idx(&self, i: u32, j: u32) -> u32 {
        let mut a = vec![0u16; self.degree];
        let mut b = vec![0u16; self.degree];
        self.store.decode_into(i as usize, &mut a);
        self.store.decode_into(j as usize, &mut b);
        for v in a.iter_mut() {
            *v = b[*v as usize];
        }
        self.store.find(&a).expect("closed under composition")
    }

    pub fn inverse_idx(&self, i: u32) -> u32 {
        let mut a = vec![0u16; self.degree];
        self.store.decode_into(i as usize, &mut a);
        let mut inv = vec![0u16; self.degree];
        for (k, &im) in a.iter().enumerate() {
            inv[im as usize] = k as u16;
        }
        self.store.find(&inv).expect("closed under inversion")
    }

    /// `x^g = g^-1 x g` in index space.
    pub fn conjugate_idx(&self, x: u32, g: u32) -> u32 {
        let mut xb = vec![0u16; self.degree];
        let mut gb = vec![0u16; self.degree];
        self.store.decode_into(x as usize, &mut xb);
        self.store.decode_into(g as usize, &mut gb);
        let mut out = vec![0u16; self.degree];
        for i in 0..self.degree {
            // out[g(i)] = g(x(i))
            out[gb[i] as usize] = gb[xb[i] as usize];
        }
        self.store.find(&out).expect("closed under conjugation")
    }

    pub fn scratch(&self) -> OpScratch {
        OpScratch {
            a: vec![0u16; self.degree],
            b: vec![0u16; self.degree],
            c: vec![0u16; self.degree],
            d: vec![0u16; self.degree],
        }
    }

    pub fn compose_idx_with(&self, i: u32, j: u32, s: &mut OpScratch) -> u32 {
        self.store.decode_into(i as usize, &mut s.a);
        self.store.decode_into(j as usize, &mut s.b);
        for v in s.a.iter_mut() {
            *v = s.b[*v as usize];
        }
        self.store.find(&s.a).expect("closed under composition")
    }

    pub fn conjugate_idx_with(&self, x: u32, g: u32, s: &mut OpScratch) -> u32 {
        self.store.decode_into(x as usize, &mut s.a);
        self.store.decode_into(g as usize, &mut s.b);
        for i in 0..self.degree {
            s.c[s.b[i] as usize] = s.b[s.a[i] as usize];
        }
        self.store.find(&s.c).expect("closed under conjugation")
    }

    /// Conjugate a sorted index set by g, returning a sorted set.
    pub fn conjugate_set_with(&self, set: &[u32], g: u32, s: &mut OpScratch) -> Vec<u32> {
        self.store.decode_into(g as usize, &mut s.b);
        let mut out: Vec<u32> = set
            .iter()
            .map(|&x| {
                self.store.decode_into(x as usize, &mut s.a);
                for i in 0..self.degree {
                    s.c[s.b[i] as usize] = s.b[s.a[i] as usize];
                }
                self.store.find(&s.c).expect("closed under conjugation")
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn order_of_idx(&self, i: u32) -> u64 {
        let mut a = vec![0u16; self.degree];
        self.store.decode_into(i as usize, &mut a);
        let mut seen = vec![false; self.degree];
        let mut order = 1u64;
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                len += 1;
                cur = a[cur] as usize;
            }
            order = lcm(order, len);
        }
        order
    }

    /// Conjugacy classes by breadth-first conjugation by the generators,
    /// scanning start points in canonical order (so class reps are the
    /// least elements and the table is deterministic).
    pub fn classes(&self) -> &ClassTable {
        self.classes.get_or_init(|| {
            let n = self.store.len();
            let mut class_of = vec![u32::MAX; n];
            let mut reps = Vec::new();
            let mut sizes = Vec::new();
            let gen_idx: Vec<u32> = self
                .gens
                .iter()
                .map(|g| self.index_of(g).expect("generator enumerated"))
                .collect();
            let deg = self.degree;
            let mut gbufs: Vec<Vec<u16>> = Vec::new();
            for &g in &gen_idx {
                let mut b = vec![0u16; deg];
                self.store.decode_into(g as usize, &mut b);
                gbufs.push(b);
            }
            let mut xb = vec![0u16; deg];
            let mut out = vec![0u16; deg];
            let mut stack: Vec<u32> = Vec::new();
            for start in 0..n as u32 {
                if class_of[start as usize] != u32::MAX {
                    continue;
                }
                let id = reps.len() as u32;
                reps.push(start);
                class_of[start as usize] = id;
                let mut size = 1u64;
                stack.push(start);
                while let Some(x) = stack.pop() {
                    self.store.decode_into(x as usize, &mut xb);
                    for gb in &gbufs {
                        for i in 0..deg {
                            out[gb[i] as usize] = gb[xb[i] as usize];
                        }
                        let y = self.store.find(&out).expect("closed");
                        if class_of[y as usize] == u32::MAX {
                            class_of[y as usize] = id;
                            size += 1;
                            stack.push(y);
                        }
                    }
                }
                sizes.push(size);
            }
            ClassTable {
                class_of,
                reps,
                sizes,
            }
        })
    }

    pub fn class_of(&self, idx: u32) -> u32 {
        self.classes().class_of[idx as usize]
    }

    pub fn is_conjugate_idx(&self, x: u32, y: u32) -> bool {
        self.class_of(x) == self.class_of(y)
    }

    /// Witness g with x^g = y, found by a fresh parent-tracking BFS.
    pub fn conjugating_witness(&self, x: u32, y: u32) -> Option<u32> {
        if self.class_of(x) != self.class_of(y) {
            return None;
        }
        if x == y {
            return Some(self.identity_idx);
        }
        let gen_idx: Vec<u32> = self
            .gens
            .iter()
            .map(|g| self.index_of(g).expect("generator enumerated"))
            .collect();
        let mut witness: std::collections::HashMap<u32, u32, IntBuildHasher> =
            std::collections::HashMap::default();
        witness.insert(x, self.identity_idx);
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(x);
        while let Some(cur) = queue.pop_front() {
            let w = witness[&cur];
            for &g in &gen_idx {
                let nxt = self.conjugate_idx(cur, g);
                if let std::collections::hash_map::Entry::Vacant(e) = witness.entry(nxt) {
                    let wg = self.compose_idx(w, g);
                    e.insert(wg);
                    if nxt == y {
                        return Some(wg);
                    }
                    queue.push_back(nxt);
                }
            }
        }
        None
    }

    /// Element orders occurring in the group.
    pub fn spectrum(&self) -> std::collections::BTreeSet<u64> {
        let classes = self.classes();
        classes.reps.iter().map(|&r| self.order_of_idx(r)).collect()
    }

    /// Primes dividing the group order.
    pub fn prime_set(&self) -> std::collections::BTreeSet<u64> {
        let mut n = self.order();
        let mut out = std::collections::BTreeSet::new();
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                out.insert(d);
                while n % d == 0 {
                    n /= d;
                }
            }
            d += 1;
        }
        if n > 1 {
            out.insert(n);
        }
        out
    }

    /// Minimum number of points moved by a non-identity element
    /// (on the natural action).
    pub fn minimal_degree(&self) -> Result<u64, GroupError> {
        if self.order() == 1 {
            return Err(GroupError::TrivialGroup);
        }
        let classes = self.classes();
        let mut best = u64::MAX;
        let mut buf = vec![0u16; self.degree];
        for &r in &classes.reps {
            if r == self.identity_idx {
                continue;
            }
            self.store.decode_into(r as usize, &mut buf);
            let fixed = buf.iter().enumerate().filter(|(i, &im)| *i == im as usize).count();
            best = best.min((self.degree - fixed) as u64);
        }
        Ok(best)
    }

    pub fn is_transitive(&self) -> bool {
        crate::action::orbit_of(&self.gens, self.degree, 0).len() == self.degree
    }
}

fn close_fixed<K: FixedKey>(
    degree: usize,
    gens: &[Perm],
    bits: u32,
    bound: u64,
) -> Result<ElementStore, GroupError> {
    let identity: Vec<u16> = (0..degree as u16).collect();
    let mut seen: HashSet<K, IntBuildHasher> = HashSet::default();
    seen.insert(K::encode(&identity, bits));
    let mut frontier: Vec<K> = vec![K::encode(&identity, bits)];
    let mut buf = vec![0u16; degree];
    let mut out = vec![0u16; degree];
    while let Some(k) = frontier.pop() {
        k.decode(degree, bits, &mut buf);
        for g in gens {
            for (i, &b) in buf.iter().enumerate() {
                out[i] = g.apply(b);
            }
            let nk = K::encode(&out, bits);
            if seen.insert(nk) {
                if seen.len() as u64 > bound {
                    return Err(GroupError::TooLarge {
                        found_at_least: seen.len() as u64,
                        bound,
                    });
                }
                frontier.push(nk);
            }
        }
    }
    let mut keys: Vec<K> = seen.into_iter().collect();
    keys.sort_unstable();
    Ok(K::into_store(keys, bits))
}

fn close_wide(degree: usize, gens: &[Perm], bound: u64) -> Result<ElementStore, GroupError> {
    let identity: Vec<u16> = (0..degree as u16).collect();
    let mut seen: HashSet<Box<[u16]>> = HashSet::new();
    seen.insert(identity.clone().into_boxed_slice());
    let mut frontier: Vec<Box<[u16]>> = vec![identity.into_boxed_slice()];
    while let Some(buf) = frontier.pop() {
        for g in gens {
            let out: Box<[u16]> = buf.iter().map(|&b| g.apply(b)).collect();
            if !seen.contains(&out) {
                seen.insert(out.clone());
                if seen.len() as u64 > bound {
                    return Err(GroupError::TooLarge {
                        found_at_least: seen.len() as u64,
                        bound,
                    });
                }
                frontier.push(out);
            }
        }
    }
    let mut rows: Vec<Box<[u16]>> = seen.into_iter().collect();
    rows.sort_unstable();
    let mut flat = Vec::with_capacity(rows.len() * degree);
    for r in &rows {
        flat.extend_from_slice(r);
    }
    Ok(ElementStore::Wide { degree, rows: flat })
}
