//! Orbits, blocks, primitivity, fixed-point statistics, and coset
//! actions.

use crate::group::{GroupError, PermGroup};
use crate::perm::Perm;
use crate::subgroup::Subgroup;

/// Orbit of a point under a generator list.
pub fn orbit_of(gens: &[Perm], degree: usize, point: u16) -> Vec<u16> {
    let mut seen = vec![false; degree];
    let mut orbit = vec![point];
    seen[point as usize] = true;
    let mut head = 0;
    while head < orbit.len() {
        let p = orbit[head];
        head += 1;
        for g in gens {
            let q = g.apply(p);
            if !seen[q as usize] {
                seen[q as usize] = true;
                orbit.push(q);
            }
        }
    }
    orbit
}

/// All orbits, each sorted, ordered by least point.
pub fn orbits(gens: &[Perm], degree: usize) -> Vec<Vec<u16>> {
    let mut assigned = vec![false; degree];
    let mut out = Vec::new();
    for p in 0..degree as u16 {
        if assigned[p as usize] {
            continue;
        }
        let mut orb = orbit_of(gens, degree, p);
        for &q in &orb {
            assigned[q as usize] = true;
        }
        orb.sort_unstable();
        out.push(orb);
    }
    out
}

/// Minimal block system containing {alpha, beta} for a transitive
/// action (Atkinson's union-find refinement). Returns the partition as
/// a class id per point.
pub fn minimal_block(gens: &[Perm], degree: usize, alpha: u16, beta: u16) -> Vec<u16> {
    let mut parent: Vec<u16> = (0..degree as u16).collect();
    fn find(parent: &mut [u16], x: u16) -> u16 {
        let mut root = x;
        while parent[root as usize] != root {
            root = parent[root as usize];
        }
        let mut cur = x;
        while parent[cur as usize] != root {
            let next = parent[cur as usize];
            parent[cur as usize] = root;
            cur = next;
        }
        root
    }
    let mut queue = vec![(alpha, beta)];
    parent[beta.max(alpha) as usize] = beta.min(alpha);
    while let Some((a, b)) = queue.pop() {
        for g in gens {
            let (ga, gb) = (g.apply(a), g.apply(b));
            let (ra, rb) = (find(&mut parent, ga), find(&mut parent, gb));
            if ra != rb {
                let (lo, hi) = (ra.min(rb), ra.max(rb));
                parent[hi as usize] = lo;
                queue.push((lo, hi));
            }
        }
    }
    (0..degree as u16).map(|p| find(&mut parent, p)).collect()
}

/// A transitive action is primitive iff every minimal block system
/// through {0, beta} is trivial.
pub fn is_primitive(gens: &[Perm], degree: usize) -> bool {
    if degree <= 1 {
        return true;
    }
    if orbit_of(gens, degree, 0).len() != degree {
        return false;
    }
    if degree == 2 {
        return true;
    }
    for beta in 1..degree as u16 {
        let part = minimal_block(gens, degree, 0, beta);
        let block_of_0 = part[0];
        let size = part.iter().filter(|&&c| c == block_of_0).count();
        if size != degree {
            return false;
        }
    }
    true
}

/// Fixed-point count and ratio of one element on the natural action.
pub fn action_stats(g: &PermGroup, idx: u32) -> (u64, (u64, u64)) {
    let mut buf = vec![0u16; g.degree()];
    g.decode_into(idx, &mut buf);
    let fixed = buf.iter().enumerate().filter(|(i, &im)| *i == im as usize).count() as u64;
    let d = g.degree() as u64;
    let gc = crate::perm::gcd(fixed.max(1), d);
    let ratio = if fixed == 0 { (0, d) } else { (fixed / gc, d / gc) };
    (fixed, ratio)
}

/// Fixed-point ratio via the class-intersection formula
/// |x^G ∩ G_delta| / |x^G| for a transitive G; used to cross-check
/// the direct count.
pub fn fpr_class_formula(g: &PermGroup, idx: u32, stab: &Subgroup) -> (u64, u64) {
    let classes = g.classes();
    let cid = classes.class_of[idx as usize];
    let in_class = stab
        .indices
        .iter()
        .filter(|&&e| classes.class_of[e as usize] == cid)
        .count() as u64;
    let size = classes.sizes[cid as usize];
    let gc = crate::perm::gcd(in_class.max(1), size);
    if in_class == 0 {
        (0, size)
    } else {
        (in_class / gc, size / gc)
    }
}

/// The action of `parent` on the right cosets of a subgroup.
///
/// Cosets are canonicalized by their least element; `coset_reps[i]` is
/// that element's index. Generator images give the permutation action
/// on `0..index`.
pub struct CosetAction {
    pub point_count: usize,
    pub coset_reps: Vec<u32>,
    pub gen_images: Vec<Perm>,
}

impl CosetAction {
    pub fn new(parent: &PermGroup, h: &Subgroup, max_index: u64) -> Result<CosetAction, GroupError> {
        if !h.is_subgroup(parent) {
            return Err(GroupError::NotASubgroup);
        }
        let index = parent.order() / h.order();
        if index > max_index {
            return Err(GroupError::IndexTooLarge(index, max_index));
        }
        let gen_idx: Vec<u32> = parent
            .generators()
            .iter()
            .map(|g| parent.index_of(g).ok_or(GroupError::NotAnElement))
            .collect::<Result<_, _>>()?;
        // coset of g = least element of Hg; the identity coset's rep is
        // the least element of H, i.e. the identity itself
        let coset_min = |g: u32| -> u32 {
            h.indices.iter().map(|&x| parent.compose_idx(x, g)).min().unwrap()
        };
        let mut reps: Vec<u32> = vec![h.indices[0]];
        let mut index_of_rep = std::collections::HashMap::new();
        index_of_rep.insert(reps[0], 0usize);
        let mut images: Vec<Vec<u16>> = vec![Vec::new(); gen_idx.len()];
        let mut head = 0;
        while head < reps.len() {
            let r = reps[head];
            for (gi, &g) in gen_idx.iter().enumerate() {
                let target = coset_min(parent.compose_idx(r, g));
                let ti = *index_of_rep.entry(target).or_insert_with(|| {
                    reps.push(target);
                    reps.len() - 1
                });
                images[gi].push(ti as u16);
            }
            head += 1;
        }
        debug_assert_eq!(reps.len() as u64, index);
        let gen_images = images
            .into_iter()
            .map(|im| Perm::from_images(im).expect("coset action is a permutation"))
            .collect();
        Ok(CosetAction {
            point_count: reps.len(),
            coset_reps: reps,
            gen_images,
        })
    }

    /// Image of an arbitrary parent element on the cosets.
    pub fn image_of(&self, parent: &PermGroup, h: &Subgroup, g: u32) -> Perm {
        let mut images = Vec::with_capacity(self.point_count);
        let coset_min = |x: u32| -> u32 {
            h.indices.iter().map(|&e| parent.compose_idx(e, x)).min().unwrap()
        };
        let pos: std::collections::HashMap<u32, u16> = self
            .coset_reps
            .iter()
            .enumerate()
            .map(|(i, &r)| (r, i as u16))
            .collect();
        for &r in &self.coset_reps {
            let t = coset_min(parent.compose_idx(r, g));
            images.push(pos[&t]);
        }
        Perm::from_images(images).expect("coset action is a permutation")
    }

    /// Number of cosets fixed by a parent element: Hr*g = Hr iff
    /// r g r^-1 in H.
    pub fn fixed_cosets(&self, parent: &PermGroup, h: &Subgroup, g: u32) -> u64 {
        self.coset_reps
            .iter()
            .filter(|&&r| {
                let conj = parent.compose_idx(parent.compose_idx(r, g), parent.inverse_idx(r));
                h.contains_idx(conj)
            })
            .count() as u64
    }

    /// Kernel of the action = the core of H.
    pub fn kernel(&self, parent: &PermGroup, h: &Subgroup) -> Subgroup {
        let mut core: Vec<u32> = h.indices.clone();
        for &r in &self.coset_reps {
            let rinv = parent.inverse_idx(r);
            let conj: Vec<u32> = h
                .indices
                .iter()
                .map(|&x| parent.compose_idx(parent.compose_idx(rinv, x), r))
                .collect();
            let set: std::collections::HashSet<u32> = conj.into_iter().collect();
            core.retain(|x| set.contains(x));
            if core.len() == 1 {
                break;
            }
        }
        core.sort_unstable();
        Subgroup { indices: core }
    }

    /// Enumerate the image group.
    pub fn image_group(&self, bound: u64) -> Result<PermGroup, GroupError> {
        PermGroup::from_generators(self.point_count, self.gen_images.clone(), bound)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ENUMERATION_BOUND;

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
    fn primitivity() {
        let s4 = symmetric(4);
        assert!(is_primitive(s4.generators(), 4));
        // S2 wr S2 on 4 points is imprimitive
        let wreath = vec![
            Perm::from_cycles(4, &[vec![0, 1]]).unwrap(),
            Perm::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap(),
        ];
        assert!(!is_primitive(&wreath, 4));
    }

    #[test]
    fn coset_action_s3_mod_c2() {
        let s3 = symmetric(3);
        let h = Subgroup::closure(&s3, &[s3.index_of(&Perm::from_cycles(3, &[vec![0, 1]]).unwrap()).unwrap()]);
        let act = CosetAction::new(&s3, &h, 100).unwrap();
        assert_eq!(act.point_count, 3);
        let img = act.image_group(100).unwrap();
        assert!(img.is_transitive());
        assert_eq!(img.order(), 6); // faithful: core of C2 in S3 is trivial
        assert_eq!(act.kernel(&s3, &h).order(), 1);
    }

    #[test]
    fn coset_action_a5_mod_s3() {
        let a5 = alternating(5);
        let s3_sub = Subgroup::closure(
            &a5,
            &[
                a5.index_of(&Perm::from_cycles(5, &[vec![0, 1, 2]]).unwrap()).unwrap(),
                a5.index_of(&Perm::from_cycles(5, &[vec![0, 1], vec![3, 4]]).unwrap()).unwrap(),
            ],
        );
        assert_eq!(s3_sub.order(), 6);
        let act = CosetAction::new(&a5, &s3_sub, 100).unwrap();
        assert_eq!(act.point_count, 10);
        // degree * |H| = |G|
        assert_eq!(act.point_count as u64 * s3_sub.order(), a5.order());
    }

    #[test]
    fn fixed_cosets_match_image_perm() {
        let a5 = alternating(5);
        let h = Subgroup::closure(
            &a5,
            &[a5.index_of(&Perm::from_cycles(5, &[vec![0, 1, 2]]).unwrap()).unwrap()],
        );
        let act = CosetAction::new(&a5, &h, 100).unwrap();
        for idx in [0u32, 5, 17, 33] {
            let perm = act.image_of(&a5, &h, idx);
            assert_eq!(perm.fixed_point_count() as u64, act.fixed_cosets(&a5, &h, idx));
        }
    }

    #[test]
    fn product_action_fpr_is_a_minus_3_over_a() {
        // S_5 wr S_2 in product action on 25 points: a 3-cycle in one
        // block fixes (a-3)*a points, fpr = (a-3)/a = 2/5.
        let a = 5u16;
        let point = |i: u16, j: u16| i * a + j;
        let mut x_images = Vec::new();
        let three_cycle = Perm::from_cycles(5, &[vec![0, 1, 2]]).unwrap();
        for i in 0..a {
            for j in 0..a {
                x_images.push(point(three_cycle.apply(i), j));
            }
        }
        let x = Perm::from_images(x_images).unwrap();
        assert_eq!(x.fixed_point_count(), 10);
        let fpr = (x.fixed_point_count() as u64, 25u64);
        assert_eq!(fpr.0 * 5, fpr.1 * 2); // 10/25 = 2/5
    }
}
