//! Subgroup enumeration up to conjugacy.
//!
//! The lattice is built by closing the cyclic subgroups under pairwise
//! joins: every subgroup is a join of cyclic ones, and adding one
//! cyclic subgroup at a time walks up to it. Per layer, joins are taken
//! between a class representative S and one representative per
//! N_G(S)-orbit of conjugates of each cyclic class, which is exactly
//! deduplication by conjugacy. Every conjugate of every discovered
//! class is kept, so class lookup, stability tests and containment
//! tests are plain sorted-set operations afterwards.
//!
//! min_order pruning is applied at report time only: subgroups above
//! the cutoff can be joins of subgroups below it.

use crate::group::{GroupError, PermGroup};
use crate::subgroup::{self, Subgroup};
use std::collections::{HashMap, VecDeque};

/// One conjugacy class of subgroups.
pub struct SubgroupClass {
    /// Canonical representative: the conjugate with the least index vector.
    pub rep: Subgroup,
    /// Every conjugate, sorted by index vector.
    pub instances: Vec<Box<[u32]>>,
}

impl SubgroupClass {
    pub fn order(&self) -> u64 {
        self.rep.order()
    }
    pub fn n_conjugates(&self) -> u64 {
        self.instances.len() as u64
    }
}

pub struct SubgroupLattice {
    pub classes: Vec<SubgroupClass>,
    index: HashMap<Box<[u32]>, u32>,
}

/// Default bound on |G| for full lattice enumeration.
pub const DEFAULT_LATTICE_BOUND: u64 = 100_000;

impl SubgroupLattice {
    /// Enumerate all subgroup classes of `parent`.
    pub fn enumerate(parent: &PermGroup, max_group_order: u64) -> Result<SubgroupLattice, GroupError> {
        if parent.order() > max_group_order {
            return Err(GroupError::LatticeBoundExceeded(parent.order(), max_group_order));
        }
        let mut lat = SubgroupLattice {
            classes: Vec::new(),
            index: HashMap::new(),
        };
        let mut scratch = parent.scratch();
        let half = parent.order() / 2;

        // the whole group, registered up front so joins can shortcut to it
        lat.register(parent, Subgroup::whole(parent), &mut scratch);
        lat.register(parent, Subgroup::trivial(parent), &mut scratch);

        // layer 0: cyclic subgroups
        let mut cyclic_ids: Vec<u32> = Vec::new();
        for x in 0..parent.order() as u32 {
            let c = Subgroup::closure(parent, &[x]);
            let key: Box<[u32]> = c.indices.clone().into_boxed_slice();
            if lat.index.contains_key(&key) {
                continue;
            }
            let id = lat.register(parent, c, &mut scratch);
            cyclic_ids.push(id);
        }

        // a generator for each cyclic class instance is recovered as the
        // least element of full order in the instance
        let cyclic_gen = |parent: &PermGroup, inst: &[u32]| -> u32 {
            let n = inst.len() as u64;
            *inst
                .iter()
                .find(|&&x| parent.order_of_idx(x) == n)
                .expect("cyclic subgroup has a generator")
        };

        // layered joins
        let mut worklist: VecDeque<u32> = lat
            .classes
            .iter()
            .enumerate()
            .filter(|(_, c)| c.order() > 1 && c.order() < parent.order())
            .map(|(i, _)| i as u32)
            .collect();
        while let Some(sid) = worklist.pop_front() {
            let s_rep = lat.classes[sid as usize].rep.clone();
            let s_gens = s_rep.small_generating_set(parent);
            let normalizer = subgroup::normalizer(parent, &s_rep);
            let n_gens = normalizer.small_generating_set(parent);
            for &cid in &cyclic_ids {
                // orbit representatives of the cyclic class instances
                // under conjugation by N_G(S)
                let orbit_reps: Vec<Box<[u32]>> = {
                    let insts = &lat.classes[cid as usize].instances;
                    let pos: HashMap<&[u32], usize> =
                        insts.iter().enumerate().map(|(i, b)| (b.as_ref(), i)).collect();
                    let mut seen = vec![false; insts.len()];
                    let mut reps = Vec::new();
                    for start in 0..insts.len() {
                        if seen[start] {
                            continue;
                        }
                        reps.push(insts[start].clone());
                        seen[start] = true;
                        let mut stack = vec![start];
                        while let Some(i) = stack.pop() {
                            for &g in &n_gens {
                                let img = parent.conjugate_set_with(&insts[i], g, &mut scratch);
                                let j = pos[img.as_slice()];
                                if !seen[j] {
                                    seen[j] = true;
                                    stack.push(j);
                                }
                            }
                        }
                    }
                    reps
                };
                for inst in orbit_reps {
                    if inst.iter().all(|x| s_rep.contains_idx(*x)) {
                        continue; // join is S itself
                    }
                    let y = cyclic_gen(parent, &inst);
                    let mut gens = s_gens.clone();
                    gens.push(y);
                    // more than |G|/2 elements forces the whole group (Lagrange),
                    // which is already registered
                    let join = match Subgroup::closure_bounded(parent, &gens, half) {
                        Some(j) => j,
                        None => continue,
                    };
                    let key: Box<[u32]> = join.indices.clone().into_boxed_slice();
                    if !lat.index.contains_key(&key) {
                        let id = lat.register(parent, join, &mut scratch);
                        worklist.push_back(id);
                    }
                }
            }
        }

        // canonical class order: by (order, canonical rep vector)
        let mut order_idx: Vec<u32> = (0..lat.classes.len() as u32).collect();
        order_idx.sort_by(|&a, &b| {
            let (ca, cb) = (&lat.classes[a as usize], &lat.classes[b as usize]);
            ca.order()
                .cmp(&cb.order())
                .then_with(|| ca.rep.indices.cmp(&cb.rep.indices))
        });
        let mut renumber = vec![0u32; lat.classes.len()];
        for (new, &old) in order_idx.iter().enumerate() {
            renumber[old as usize] = new as u32;
        }
        let mut classes: Vec<Option<SubgroupClass>> = lat.classes.into_iter().map(Some).collect();
        let classes: Vec<SubgroupClass> = order_idx
            .iter()
            .map(|&old| classes[old as usize].take().unwrap())
            .collect();
        for v in lat.index.values_mut() {
            *v = renumber[*v as usize];
        }
        lat.classes = classes;
        Ok(lat)
    }

    /// Register a new class: compute its full conjugation orbit.
    fn register(
        &mut self,
        parent: &PermGroup,
        s: Subgroup,
        scratch: &mut crate::group::OpScratch,
    ) -> u32 {
        let id = self.classes.len() as u32;
        let gen_idx: Vec<u32> = parent
            .generators()
            .iter()
            .map(|g| parent.index_of(g).expect("generator enumerated"))
            .collect();
        let first: Box<[u32]> = s.indices.clone().into_boxed_slice();
        let mut instances: Vec<Box<[u32]>> = vec![first.clone()];
        self.index.insert(first, id);
        let mut head = 0;
        while head < instances.len() {
            let cur = instances[head].clone();
            head += 1;
            for &g in &gen_idx {
                let img = parent.conjugate_set_with(&cur, g, scratch);
                let key: Box<[u32]> = img.into_boxed_slice();
                if !self.index.contains_key(&key) {
                    self.index.insert(key.clone(), id);
                    instances.push(key);
                }
            }
        }
        instances.sort_unstable();
        let rep = Subgroup {
            indices: instances[0].to_vec(),
        };
        self.classes.push(SubgroupClass { rep, instances });
        id
    }

    pub fn class_of(&self, s: &Subgroup) -> Option<u32> {
        self.index.get(s.indices.as_slice()).copied()
    }

    /// Is `inner` contained in some conjugate of class `outer`?
    pub fn contained_in_class(&self, inner: &Subgroup, outer: u32) -> bool {
        let oc = &self.classes[outer as usize];
        if inner.order() > oc.order() || oc.order() % inner.order() != 0 {
            return false;
        }
        oc.instances
            .iter()
            .any(|inst| inner.indices.iter().all(|x| inst.binary_search(x).is_ok()))
    }

    /// Total number of subgroups (summed over classes).
    pub fn total_subgroup_count(&self) -> u64 {
        self.classes.iter().map(|c| c.n_conjugates()).sum()
    }

    /// Classes of maximal proper subgroups.
    pub fn maximal_proper_classes(&self, parent: &PermGroup) -> Vec<u32> {
        let whole = parent.order();
        (0..self.classes.len() as u32)
            .filter(|&cid| {
                let c = &self.classes[cid as usize];
                if c.order() == whole {
                    return false;
                }
                // maximal iff no proper class strictly above contains the rep
                !(0..self.classes.len() as u32).any(|did| {
                    let d = &self.classes[did as usize];
                    d.order() > c.order()
                        && d.order() < whole
                        && self.contained_in_class(&c.rep, did)
                })
            })
            .collect()
    }

    /// Report classes with order >= min_order.
    pub fn classes_with_min_order(&self, min_order: u64) -> Vec<u32> {
        (0..self.classes.len() as u32)
            .filter(|&cid| self.classes[cid as usize].order() >= min_order)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ENUMERATION_BOUND;
    use crate::perm::Perm;

    fn symmetric(n: usize) -> PermGroup {
        let gens = vec![
            Perm::from_cycles(n, &[vec![0, 1]]).unwrap(),
            Perm::from_cycles(n, &[(0..n as u16).collect()]).unwrap(),
        ];
        PermGroup::from_generators(n, gens, DEFAULT_ENUMERATION_BOUND).unwrap()
    }

    fn alternating(n: usize) -> PermGroup {
        let mut gens = vec![Perm::from_cycles(n, &[vec![0, 1, 2]]).unwrap()];
        if n > 3 {
            let long: Vec<u16> = if n % 2 == 1 {
                (0..n as u16).collect()
            } else {
                (1..n as u16).collect()
            };
            gens.push(Perm::from_cycles(n, &[long]).unwrap());
        }
        PermGroup::from_generators(n, gens, DEFAULT_ENUMERATION_BOUND).unwrap()
    }

    #[test]
    fn s3_has_four_classes() {
        let s3 = symmetric(3);
        let lat = SubgroupLattice::enumerate(&s3, 1000).unwrap();
        assert_eq!(lat.classes.len(), 4); // 1, C2, C3, S3
        let orders: Vec<u64> = lat.classes.iter().map(|c| c.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
    }

    #[test]
    fn a4_has_five_classes() {
        let a4 = alternating(4);
        let lat = SubgroupLattice::enumerate(&a4, 1000).unwrap();
        let orders: Vec<u64> = lat.classes.iter().map(|c| c.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 12]); // 1, C2, C3, V4, A4
    }

    #[test]
    fn a5_has_nine_classes() {
        let a5 = alternating(5);
        let lat = SubgroupLattice::enumerate(&a5, 1000).unwrap();
        assert_eq!(lat.classes.len(), 9);
        // total subgroup count of A5 is 59
        assert_eq!(lat.total_subgroup_count(), 59);
        // maximal classes: A4, D10, S3
        let max: Vec<u64> = lat
            .maximal_proper_classes(&a5)
            .into_iter()
            .map(|c| lat.classes[c as usize].order())
            .collect();
        assert_eq!(max, vec![6, 10, 12]);
    }

    /// Independent oracle: enumerate every subgroup by subset closure.
    fn all_subgroups_bruteforce(g: &PermGroup) -> std::collections::HashSet<Vec<u32>> {
        let trivial = Subgroup::trivial(g).indices;
        let mut all = std::collections::HashSet::new();
        all.insert(trivial.clone());
        let mut work = vec![trivial];
        while let Some(s) = work.pop() {
            for x in 0..g.order() as u32 {
                if s.binary_search(&x).is_ok() {
                    continue;
                }
                let mut gens = s.clone();
                gens.push(x);
                let t = Subgroup::closure(g, &gens).indices;
                if all.insert(t.clone()) {
                    work.push(t);
                }
            }
        }
        all
    }

    #[test]
    fn lattice_matches_subset_closure_oracle() {
        // groups of order <= 200, including a non-trivial mix
        for g in [symmetric(3), alternating(4), symmetric(4), alternating(5), symmetric(5)] {
            let lat = SubgroupLattice::enumerate(&g, 1000).unwrap();
            let oracle = all_subgroups_bruteforce(&g);
            assert_eq!(lat.total_subgroup_count(), oracle.len() as u64);
            // every oracle subgroup is a known instance
            for s in &oracle {
                let sub = Subgroup { indices: s.clone() };
                assert!(lat.class_of(&sub).is_some());
            }
        }
    }

    #[test]
    fn bound_is_enforced() {
        let s5 = symmetric(5);
        assert!(matches!(
            SubgroupLattice::enumerate(&s5, 10),
            Err(GroupError::LatticeBoundExceeded(120, 10))
        ));
    }
}
