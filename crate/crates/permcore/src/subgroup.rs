//! Subgroups as sorted element-index sets relative to an enumerated
//! parent group.

use crate::group::{GroupError, PermGroup};
use crate::perm::Perm;
use std::collections::BTreeSet;

/// A subgroup of an enumerated parent, stored as the sorted vector of
/// parent element indices. The parent is passed explicitly to the
/// operations; index sets from different parents must not be mixed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subgroup {
    pub indices: Vec<u32>,
}

impl Subgroup {
    pub fn trivial(parent: &PermGroup) -> Subgroup {
        Subgroup {
            indices: vec![parent.identity_index()],
        }
    }

    pub fn whole(parent: &PermGroup) -> Subgroup {
        Subgroup {
            indices: (0..parent.order() as u32).collect(),
        }
    }

    /// Closure of a set of element indices.
    pub fn closure(parent: &PermGroup, gens: &[u32]) -> Subgroup {
        Self::closure_bounded(parent, gens, u64::MAX).expect("unbounded closure")
    }

    /// Closure with an early-exit cap: returns None when the subgroup
    /// would exceed `cap` elements.
    pub fn closure_bounded(parent: &PermGroup, gens: &[u32], cap: u64) -> Option<Subgroup> {
        let mut seen: BTreeSet<u32> = BTreeSet::new();
        seen.insert(parent.identity_index());
        let mut frontier: Vec<u32> = vec![parent.identity_index()];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = parent.compose_idx(x, g);
                if seen.insert(y) {
                    if seen.len() as u64 > cap {
                        return None;
                    }
                    frontier.push(y);
                }
            }
        }
        Some(Subgroup {
            indices: seen.into_iter().collect(),
        })
    }

    pub fn from_perms(parent: &PermGroup, perms: &[Perm]) -> Result<Subgroup, GroupError> {
        let gens: Vec<u32> = perms
            .iter()
            .map(|p| parent.index_of(p).ok_or(GroupError::NotAnElement))
            .collect::<Result<_, _>>()?;
        Ok(Self::closure(parent, &gens))
    }

    pub fn order(&self) -> u64 {
        self.indices.len() as u64
    }

    pub fn contains_idx(&self, idx: u32) -> bool {
        self.indices.binary_search(&idx).is_ok()
    }

    pub fn is_subgroup(&self, parent: &PermGroup) -> bool {
        if !self.contains_idx(parent.identity_index()) {
            return false;
        }
        self.indices.iter().all(|&x| {
            self.contains_idx(parent.inverse_idx(x))
                && self
                    .indices
                    .iter()
                    .all(|&y| self.contains_idx(parent.compose_idx(x, y)))
        })
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        if self.indices.len() > other.indices.len() {
            return false;
        }
        self.indices.iter().all(|&x| other.contains_idx(x))
    }

    /// A small generating set, grown greedily in canonical order.
    pub fn small_generating_set(&self, parent: &PermGroup) -> Vec<u32> {
        let mut gens: Vec<u32> = Vec::new();
        let mut have = Subgroup::trivial(parent);
        for &x in &self.indices {
            if !have.contains_idx(x) {
                gens.push(x);
                have = Subgroup::closure(parent, &gens);
                if have.order() == self.order() {
                    break;
                }
            }
        }
        gens
    }

    /// Conjugate subgroup `self^g`.
    pub fn conjugate(&self, parent: &PermGroup, g: u32) -> Subgroup {
        let mut indices: Vec<u32> = self
            .indices
            .iter()
            .map(|&x| parent.conjugate_idx(x, g))
            .collect();
        indices.sort_unstable();
        Subgroup { indices }
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let indices: Vec<u32> = self
            .indices
            .iter()
            .copied()
            .filter(|&x| other.contains_idx(x))
            .collect();
        Subgroup { indices }
    }

    /// Spectrum (element orders) of the subgroup.
    pub fn spectrum(&self, parent: &PermGroup) -> BTreeSet<u64> {
        self.indices.iter().map(|&x| parent.order_of_idx(x)).collect()
    }

    pub fn prime_set(&self) -> BTreeSet<u64> {
        let mut n = self.order();
        let mut out = BTreeSet::new();
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

    /// Set of parent conjugacy-class ids met by this subgroup.
    pub fn class_id_set(&self, parent: &PermGroup) -> Vec<u32> {
        let classes = parent.classes();
        let mut ids: Vec<u32> = self
            .indices
            .iter()
            .map(|&x| classes.class_of[x as usize])
            .collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    /// Standalone enumerated group on the same points.
    pub fn to_group(&self, parent: &PermGroup) -> PermGroup {
        let perms: Vec<Perm> = self.indices.iter().map(|&x| parent.element(x)).collect();
        PermGroup::from_perms(parent.degree(), perms).expect("subgroup contains identity")
    }

    /// Standalone group on the subgroup's support (moved points),
    /// renumbered; useful for comparing abstract structure.
    pub fn generators(&self, parent: &PermGroup) -> Vec<Perm> {
        self.small_generating_set(parent)
            .iter()
            .map(|&x| parent.element(x))
            .collect()
    }
}

/// Normalizer N_G(S) = {g : S^g = S}, by a scan over the parent.
pub fn normalizer(parent: &PermGroup, s: &Subgroup) -> Subgroup {
    let gens = s.small_generating_set(parent);
    if gens.is_empty() {
        return Subgroup::whole(parent);
    }
    let indices: Vec<u32> = (0..parent.order() as u32)
        .filter(|&g| gens.iter().all(|&x| s.contains_idx(parent.conjugate_idx(x, g))))
        .collect();
    Subgroup { indices }
}

/// Centralizer C_G(x).
pub fn centralizer(parent: &PermGroup, x: u32) -> Subgroup {
    let indices: Vec<u32> = (0..parent.order() as u32)
        .filter(|&g| parent.conjugate_idx(x, g) == x)
        .collect();
    Subgroup { indices }
}

/// Elements of the parent commuting with an arbitrary permutation of
/// the same points (which need not belong to the parent).
pub fn centralizer_of_perm(parent: &PermGroup, pi: &Perm) -> Subgroup {
    let mut buf = vec![0u16; parent.degree()];
    let indices: Vec<u32> = (0..parent.order() as u32)
        .filter(|&g| {
            parent.decode_into(g, &mut buf);
            (0..parent.degree() as u16).all(|pt| {
                // g(pi(pt)) == pi(g(pt))
                buf[pi.apply(pt) as usize] == pi.apply(buf[pt as usize])
            })
        })
        .collect();
    Subgroup { indices }
}

/// Stabilizer of a point in the natural action.
pub fn point_stabilizer(parent: &PermGroup, point: u16) -> Subgroup {
    let mut buf = vec![0u16; parent.degree()];
    let indices: Vec<u32> = (0..parent.order() as u32)
        .filter(|&g| {
            parent.decode_into(g, &mut buf);
            buf[point as usize] == point
        })
        .collect();
    Subgroup { indices }
}

/// Setwise stabilizer of a point set in the natural action.
pub fn setwise_stabilizer(parent: &PermGroup, points: &[u16]) -> Subgroup {
    let mut member = vec![false; parent.degree()];
    for &p in points {
        member[p as usize] = true;
    }
    let mut buf = vec![0u16; parent.degree()];
    let indices: Vec<u32> = (0..parent.order() as u32)
        .filter(|&g| {
            parent.decode_into(g, &mut buf);
            points.iter().all(|&p| member[buf[p as usize] as usize])
        })
        .collect();
    Subgroup { indices }
}
