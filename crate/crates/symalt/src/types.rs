//! Cycle types and their realizable sets for the intransitive and
//! imprimitive maximal subgroups of the symmetric group.

use permcore::Perm;
use std::collections::BTreeSet;

/// A cycle type: partition of n in decreasing order, fixed points
/// included.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType(Vec<u32>);

impl CycleType {
    pub fn new(mut parts: Vec<u32>) -> CycleType {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(parts)
    }

    pub fn of_perm(p: &Perm) -> CycleType {
        CycleType(p.cycle_lengths())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Parity of the permutations of this type: even iff n - #parts is.
    pub fn is_even(&self) -> bool {
        (self.n() as usize - self.0.len()) % 2 == 0
    }

    /// Does the class of this type split into two alternating-group
    /// classes? Exactly when all parts are odd and pairwise distinct.
    pub fn splits_in_alternating(&self) -> bool {
        self.0.iter().all(|&p| p % 2 == 1)
            && self.0.windows(2).all(|w| w[0] != w[1])
    }

    /// Merge two types on disjoint supports.
    pub fn concat(&self, other: &CycleType) -> CycleType {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        CycleType::new(parts)
    }

    /// Scale every part by t (the effect of a t-cycle of blocks on a
    /// per-block type).
    pub fn scaled(&self, t: u32) -> CycleType {
        CycleType::new(self.0.iter().map(|&p| p * t).collect())
    }
}

/// A class label inside the alternating group: the type plus a split
/// component when the symmetric class splits.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AnClassLabel {
    pub cycle_type: CycleType,
    pub component: SplitComponent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SplitComponent {
    None,
    Plus,
    Minus,
}

/// All partitions of n, in canonical descending order per partition.
pub fn partitions(n: u32) -> Vec<CycleType> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<CycleType>) {
        if remaining == 0 {
            out.push(CycleType(current.clone()));
            return;
        }
        let top = remaining.min(max);
        for part in (1..=top).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// Realizable cycle types of the stabilizer of a k-subset,
/// S_k x S_(n-k): all concatenations of a partition of k with a
/// partition of n-k.
pub fn intransitive_cycle_types(k: u32, n: u32) -> BTreeSet<CycleType> {
    assert!(k >= 1 && k < n);
    let left = partitions(k);
    let right = partitions(n - k);
    let mut out = BTreeSet::new();
    for l in &left {
        for r in &right {
            out.insert(l.concat(r));
        }
    }
    out
}

/// Realizable cycle types of S_a wr S_b in its imprimitive action on
/// ab points: for each cycle of length t of the block permutation, the
/// product of the block entries around it is an arbitrary element of
/// S_a, and each of its cycles of length l contributes a cycle of
/// length t*l.
pub fn wreath_cycle_types(a: u32, b: u32) -> BTreeSet<CycleType> {
    assert!(a >= 1 && b >= 1 && a as u64 * b as u64 <= 10_000);
    let base = partitions(a);
    // contributions of a single block-cycle of length t
    let per_t: Vec<BTreeSet<CycleType>> = (0..=b)
        .map(|t| {
            if t == 0 {
                BTreeSet::new()
            } else {
                base.iter().map(|g| g.scaled(t)).collect()
            }
        })
        .collect();
    // DP over the number of blocks already used
    let mut f: Vec<BTreeSet<CycleType>> = vec![BTreeSet::new(); b as usize + 1];
    f[0].insert(CycleType(Vec::new()));
    for used in 1..=b as usize {
        let mut acc = BTreeSet::new();
        for t in 1..=used as u32 {
            for prev in &f[used - t as usize] {
                for contrib in &per_t[t as usize] {
                    acc.insert(prev.concat(contrib));
                }
            }
        }
        f[used] = acc;
    }
    f[b as usize].clone()
}

/// Generators of S_a wr S_b in the imprimitive action on ab points.
pub fn wreath_gens(a: u16, b: u16) -> Vec<Perm> {
    let n = (a * b) as usize;
    let mut gens = Vec::new();
    if a > 1 {
        gens.push(Perm::from_cycles(n, &[vec![0, 1]]).unwrap());
        gens.push(Perm::from_cycles(n, &[(0..a).collect()]).unwrap());
    }
    if b > 1 {
        // swap the first two blocks, and rotate all blocks
        let swap: Vec<u16> = (0..n as u16)
            .map(|p| {
                let (blk, off) = (p / a, p % a);
                match blk {
                    0 => a + off,
                    1 => off,
                    _ => p,
                }
            })
            .collect();
        let rot: Vec<u16> = (0..n as u16)
            .map(|p| {
                let (blk, off) = (p / a, p % a);
                ((blk + 1) % b) * a + off
            })
            .collect();
        gens.push(Perm::from_images(swap).unwrap());
        gens.push(Perm::from_images(rot).unwrap());
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use permcore::PermGroup;

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(10).len(), 42);
    }

    #[test]
    fn parity_and_splitting() {
        let t = CycleType::new(vec![3, 2]);
        assert!(!t.is_even());
        assert!(CycleType::new(vec![5]).splits_in_alternating());
        assert!(CycleType::new(vec![3, 1, 1]).is_even());
        assert!(!CycleType::new(vec![3, 1, 1]).splits_in_alternating()); // repeated 1s
        assert!(CycleType::new(vec![5, 3, 1]).splits_in_alternating());
        assert!(!CycleType::new(vec![4, 2]).splits_in_alternating());
    }

    #[test]
    fn intransitive_examples() {
        // k = 1: all types with at least one fixed point
        let s = intransitive_cycle_types(1, 5);
        assert!(s.iter().all(|t| t.parts().contains(&1)));
        // (2, 5): [3,2] realizable, [5] not
        let s = intransitive_cycle_types(2, 5);
        assert!(s.contains(&CycleType::new(vec![3, 2])));
        assert!(!s.contains(&CycleType::new(vec![5])));
        // (3, 8): [5,3] realizable
        let s = intransitive_cycle_types(3, 8);
        assert!(s.contains(&CycleType::new(vec![5, 3])));
    }

    #[test]
    fn wreath_small_examples() {
        // (a, 1) gives all cycle types of S_a
        let s = wreath_cycle_types(4, 1);
        assert_eq!(s.len(), partitions(4).len());
        // (2, 2): the dihedral group of order 8 on 4 points
        let s = wreath_cycle_types(2, 2);
        let expect: BTreeSet<CycleType> = [
            CycleType::new(vec![1, 1, 1, 1]),
            CycleType::new(vec![2, 1, 1]),
            CycleType::new(vec![2, 2]),
            CycleType::new(vec![4]),
        ]
        .into_iter()
        .collect();
        assert_eq!(s, expect);
        // (3, 2) on 6 points: [5, 1] is not realizable
        let s = wreath_cycle_types(3, 2);
        assert!(!s.contains(&CycleType::new(vec![5, 1])));
    }

    #[test]
    fn wreath_types_match_brute_force() {
        for (a, b) in [(2u16, 2u16), (2, 3), (3, 2), (2, 4), (4, 2), (3, 3), (5, 2)] {
            let gens = wreath_gens(a, b);
            let g = PermGroup::from_generators((a * b) as usize, gens, 10_000_000).unwrap();
            assert_eq!(g.order(), {
                let fact = |m: u64| (1..=m).product::<u64>();
                fact(a as u64).pow(b as u32) * fact(b as u64)
            });
            let mut brute = BTreeSet::new();
            let mut buf = vec![0u16; g.degree()];
            for idx in 0..g.order() as u32 {
                g.decode_into(idx, &mut buf);
                let p = Perm::from_images(buf.clone()).unwrap();
                brute.insert(CycleType::of_perm(&p));
            }
            assert_eq!(
                wreath_cycle_types(a as u32, b as u32),
                brute,
                "(a,b) = ({a},{b})"
            );
        }
    }

    #[test]
    fn split_rule_matches_brute_force() {
        // a symmetric class splits in A_n iff parts are odd and distinct,
        // and split halves have equal size; checked for n <= 9
        for n in 4..=9usize {
            let sn = PermGroup::from_generators(
                n,
                vec![
                    Perm::from_cycles(n, &[vec![0, 1]]).unwrap(),
                    Perm::from_cycles(n, &[(0..n as u16).collect()]).unwrap(),
                ],
                10_000_000,
            )
            .unwrap();
            let mut an_gens = vec![Perm::from_cycles(n, &[vec![0, 1, 2]]).unwrap()];
            let long: Vec<u16> = if n % 2 == 1 {
                (0..n as u16).collect()
            } else {
                (1..n as u16).collect()
            };
            an_gens.push(Perm::from_cycles(n, &[long]).unwrap());
            let an = PermGroup::from_generators(n, an_gens, 10_000_000).unwrap();
            // count A_n classes per even type
            let mut an_counts: std::collections::HashMap<CycleType, Vec<u64>> =
                std::collections::HashMap::new();
            let cls = an.classes();
            for (i, &rep) in cls.reps.iter().enumerate() {
                let t = CycleType::of_perm(&an.element(rep));
                an_counts.entry(t).or_default().push(cls.sizes[i]);
            }
            let _ = &sn;
            for (t, sizes) in an_counts {
                if t.splits_in_alternating() {
                    assert_eq!(sizes.len(), 2, "n={n} type {:?}", t.parts());
                    assert_eq!(sizes[0], sizes[1]);
                } else {
                    assert_eq!(sizes.len(), 1, "n={n} type {:?}", t.parts());
                }
            }
        }
    }
}
