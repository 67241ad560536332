//! The central predicates of the fixer theory: is a subgroup K of a
//! transitive group G a fixer of the action on [G:H]? Is it stable
//! (inside a conjugate of H)? Large? What is the best fixer order,
//! and does the exact bound 2|K|^2 < |G||H| hold?
//!
//! Everything is decided in class-id space: each element of H and K is
//! tagged with its G-conjugacy class, and K is a fixer on [G:H] iff
//! its class-id set is contained in H's. One class table per group
//! amortizes over all (H, K) pairs. All order comparisons are exact
//! integers; no floating point participates in any verdict.

pub mod psl2lab;
pub mod witness;

use permcore::{PermGroup, Subgroup, SubgroupLattice};
use serde::Serialize;

/// Outcome of the fixer test, with witnesses.
#[derive(Debug, Clone, Serialize)]
pub struct FixerVerdict {
    pub is_fixer: bool,
    /// For failures: an element index of K (and its G-class id) whose
    /// class misses H.
    pub witness: Option<(u32, u32)>,
    /// Some(true) with a conjugator when K lies in a conjugate of H;
    /// None when stability was not requested.
    pub is_stable: Option<bool>,
    pub conjugator: Option<u32>,
    pub is_large: bool,
    pub is_strictly_large: bool,
}

/// Set of G-class ids met by a subgroup, the unit of all fixer tests.
pub fn class_id_set(g: &PermGroup, s: &Subgroup) -> Vec<u32> {
    s.class_id_set(g)
}

/// Class ids of derangements of G on [G:H]: the classes missing H.
pub fn derangement_classes(g: &PermGroup, h: &Subgroup) -> Vec<u32> {
    let met = h.class_id_set(g);
    let n = g.classes().class_count() as u32;
    (0..n).filter(|c| met.binary_search(c).is_err()).collect()
}

/// D(G,H) is a subset of D(G,K) iff every class meeting K meets H,
/// i.e. K is a fixer of the action on [G:H].
pub fn derangement_containment(g: &PermGroup, h: &Subgroup, k: &Subgroup) -> bool {
    let hset = h.class_id_set(g);
    k.class_id_set(g)
        .iter()
        .all(|c| hset.binary_search(c).is_ok())
}

/// Full fixer test. Stability (K inside a conjugate of H) is searched
/// only when `test_stability` is set; the scan walks G in canonical
/// order pruning on the first generator of K, so witnesses are
/// reproducible.
pub fn is_fixer(
    g: &PermGroup,
    h: &Subgroup,
    k: &Subgroup,
    test_stability: bool,
) -> FixerVerdict {
    let hset = h.class_id_set(g);
    let classes = g.classes();
    let mut witness = None;
    for &x in &k.indices {
        let c = classes.class_of[x as usize];
        if hset.binary_search(&c).is_err() {
            witness = Some((x, c));
            break;
        }
    }
    let fixer = witness.is_none();
    // stability is forced on request, and computed anyway when the
    // largeness verdict depends on it (|K| = |H|)
    let need_stability = test_stability || (fixer && k.order() == h.order());
    let (is_stable, conjugator) = if need_stability {
        match stability_witness(g, h, k) {
            Some(c) => (Some(true), Some(c)),
            None => (Some(false), None),
        }
    } else {
        (None, None)
    };
    let non_stable = is_stable == Some(false) || k.order() > h.order();
    FixerVerdict {
        is_fixer: fixer,
        witness,
        is_stable,
        conjugator,
        is_large: fixer && k.order() >= h.order() && non_stable,
        is_strictly_large: fixer && k.order() > h.order(),
    }
}

/// Find g with K^g inside H, scanning in canonical order.
pub fn stability_witness(g: &PermGroup, h: &Subgroup, k: &Subgroup) -> Option<u32> {
    if k.order() > h.order() || h.order() % k.order() != 0 {
        return None;
    }
    let gens = k.small_generating_set(g);
    if gens.is_empty() {
        return Some(g.identity_index());
    }
    let first = gens[0];
    let mut scratch = g.scratch();
    (0..g.order() as u32).find(|&c| {
        h.contains_idx(g.conjugate_idx_with(first, c, &mut scratch))
            && gens[1..]
                .iter()
                .all(|&x| h.contains_idx(g.conjugate_idx_with(x, c, &mut scratch)))
    })
}

/// Reasons the cheap pre-filters can reject a candidate fixer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PrefilterOutcome {
    Pass,
    /// An element order of K missing from the spectrum of H.
    SpectrumViolation(u64),
    /// A prime dividing |K| but not |H|.
    PrimeViolation(u64),
    /// mu(K) < mu(H) on the natural (auxiliary) action.
    MinimalDegreeViolation { k_mu: u64, h_mu: u64 },
    /// Some x in K has a fixed-point ratio on the natural action shared
    /// by no element of H.
    FprViolation { numerator: u64, denominator: u64 },
    /// |K meet G0| < |K| |H meet G0| / |H| is impossible, so a large K
    /// must meet the socle largely; violated here.
    SocleSizeViolation { k0: u64, needed: u64 },
}

/// Sound rejection filters: a rejected K is never a fixer. The socle
/// check runs only when a socle is supplied.
pub fn prefilter(
    g: &PermGroup,
    h: &Subgroup,
    k: &Subgroup,
    socle: Option<&Subgroup>,
) -> PrefilterOutcome {
    let hspec = h.spectrum(g);
    for o in k.spectrum(g) {
        if !hspec.contains(&o) {
            return PrefilterOutcome::SpectrumViolation(o);
        }
    }
    let hp = h.prime_set();
    for p in k.prime_set() {
        if !hp.contains(&p) {
            return PrefilterOutcome::PrimeViolation(p);
        }
    }
    // fixed-point ratios on the natural action: every ratio occurring
    // in K must occur in H (conjugation preserves them)
    let mut h_ratios = std::collections::BTreeSet::new();
    for &x in &h.indices {
        h_ratios.insert(fixed_ratio(g, x));
    }
    for &x in &k.indices {
        let r = fixed_ratio(g, x);
        if !h_ratios.contains(&r) {
            return PrefilterOutcome::FprViolation {
                numerator: r.0,
                denominator: r.1,
            };
        }
    }
    // minimal degree comparison (both nontrivial)
    if k.order() > 1 && h.order() > 1 {
        let mu = |s: &Subgroup| -> u64 {
            s.indices
                .iter()
                .filter(|&&x| x != g.identity_index())
                .map(|&x| {
                    let mut buf = vec![0u16; g.degree()];
                    g.decode_into(x, &mut buf);
                    (g.degree()
                        - buf.iter().enumerate().filter(|(i, &im)| *i == im as usize).count())
                        as u64
                })
                .min()
                .unwrap_or(u64::MAX)
        };
        let (k_mu, h_mu) = (mu(k), mu(h));
        if k_mu < h_mu {
            return PrefilterOutcome::MinimalDegreeViolation { k_mu, h_mu };
        }
    }
    if let Some(socle) = socle {
        // |K meet G0| >= |K| |H meet G0| / |H| for any subgroup of an
        // almost simple primitive group; candidate fixers violating the
        // arithmetic version are rejected
        let k0 = k.intersection(socle).order();
        let needed_num = k.order() * h.intersection(socle).order();
        if k0 * h.order() < needed_num {
            return PrefilterOutcome::SocleSizeViolation {
                k0,
                needed: needed_num.div_ceil(h.order()),
            };
        }
    }
    PrefilterOutcome::Pass
}

fn fixed_ratio(g: &PermGroup, x: u32) -> (u64, u64) {
    let mut buf = vec![0u16; g.degree()];
    g.decode_into(x, &mut buf);
    let fixed = buf.iter().enumerate().filter(|(i, &im)| *i == im as usize).count() as u64;
    let d = g.degree() as u64;
    if fixed == 0 {
        (0, 1)
    } else {
        let gc = permcore::perm::gcd(fixed, d);
        (fixed / gc, d / gc)
    }
}

/// The exact material of a rho_0 / rho_1 evaluation: the best fixer
/// order found in the given scope and the integer comparison
/// 2|K|^2 vs |G||H| behind "rho_0 < 1/sqrt(2)". Only integers here;
/// decimal displays are derived elsewhere and never feed verdicts.
#[derive(Debug, Clone, Serialize)]
pub struct RhoResult {
    pub best_fixer_order: u64,
    pub h_order: u64,
    pub point_count: u64,
    pub lhs_2k2: u128,
    pub rhs_gh: u128,
    pub strict_bound_holds: bool,
    pub achieved_by: String,
}

fn rho_from_best(g: &PermGroup, h: &Subgroup, best: u64, achieved_by: String) -> RhoResult {
    let lhs = 2u128 * (best as u128) * (best as u128);
    let rhs = g.order() as u128 * h.order() as u128;
    RhoResult {
        best_fixer_order: best,
        h_order: h.order(),
        point_count: g.order() / h.order(),
        lhs_2k2: lhs,
        rhs_gh: rhs,
        strict_bound_holds: lhs < rhs,
        achieved_by,
    }
}

/// Scope of a rho evaluation.
pub enum RhoScope<'a> {
    /// Every subgroup class of G (requires the lattice).
    Exhaustive(&'a SubgroupLattice),
    /// A supplied candidate family (e.g. the named constructions).
    Candidates(&'a [(String, Subgroup)]),
}

/// Maximum |K| over fixers K in scope. K = H itself is always a fixer,
/// so the result is at least |H|.
pub fn rho0(g: &PermGroup, h: &Subgroup, scope: RhoScope) -> RhoResult {
    let hset = h.class_id_set(g);
    let is_fix = |s: &Subgroup| -> bool {
        s.class_id_set(g).iter().all(|c| hset.binary_search(c).is_ok())
    };
    let mut best = h.order();
    let mut by = "H".to_string();
    match scope {
        RhoScope::Exhaustive(lat) => {
            for c in &lat.classes {
                if c.order() > best && c.order() < g.order() && is_fix(&c.rep) {
                    best = c.order();
                    by = format!("class of order {}", c.order());
                }
            }
        }
        RhoScope::Candidates(cands) => {
            for (name, s) in cands {
                if s.order() > best && s.order() < g.order() && is_fix(s) {
                    best = s.order();
                    by = name.clone();
                }
            }
        }
    }
    rho_from_best(g, h, best, by)
}

/// Maximum |K| over fixers that are maximal subgroups of G.
pub fn rho1(g: &PermGroup, h: &Subgroup, lat: &SubgroupLattice) -> RhoResult {
    let hset = h.class_id_set(g);
    let mut best = 0u64;
    let mut by = String::from("none");
    for cid in lat.maximal_proper_classes(g) {
        let c = &lat.classes[cid as usize];
        let fix = c
            .rep
            .class_id_set(g)
            .iter()
            .all(|cc| hset.binary_search(cc).is_ok());
        if fix && c.order() > best {
            best = c.order();
            by = format!("maximal class of order {}", c.order());
        }
    }
    rho_from_best(g, h, best, by)
}

/// Weak-EKR (no fixer beyond |H|) and strict-weak-EKR (no large fixer)
/// for an exhaustively analyzed pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EkrVerdict {
    pub weak_ekr: bool,
    pub strict_weak_ekr: bool,
}

pub fn ekr_predicates(g: &PermGroup, h: &Subgroup, lat: &SubgroupLattice) -> EkrVerdict {
    let hset = h.class_id_set(g);
    let mut weak = true;
    let mut strict = true;
    for c in &lat.classes {
        if c.order() < h.order() || c.order() == g.order() {
            continue;
        }
        let fix = c
            .rep
            .class_id_set(g)
            .iter()
            .all(|cc| hset.binary_search(cc).is_ok());
        if !fix {
            continue;
        }
        if c.order() > h.order() {
            weak = false;
            strict = false;
            break;
        }
        // order equal to |H|: large iff non-stable, i.e. no conjugate
        // of K equals H
        let stable = c
            .instances
            .iter()
            .any(|inst| inst.iter().all(|x| h.contains_idx(*x)));
        if !stable {
            strict = false;
        }
    }
    EkrVerdict {
        weak_ekr: weak,
        strict_weak_ekr: strict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use permcore::{Perm, PermGroup, SubgroupLattice};

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
        PermGroup::from_generators(n, gens, 1_000_000).unwrap()
    }

    fn a5_with_s3_and_a4() -> (PermGroup, Subgroup, Subgroup, Subgroup) {
        let a5 = alternating(5);
        let s3 = Subgroup::from_perms(
            &a5,
            &[
                Perm::from_cycles(5, &[vec![0, 1, 2]]).unwrap(),
                Perm::from_cycles(5, &[vec![0, 1], vec![3, 4]]).unwrap(),
            ],
        )
        .unwrap();
        let a4 = Subgroup::from_perms(
            &a5,
            &[
                Perm::from_cycles(5, &[vec![0, 1, 2]]).unwrap(),
                Perm::from_cycles(5, &[vec![0, 1], vec![2, 3]]).unwrap(),
            ],
        )
        .unwrap();
        let d10 = Subgroup::from_perms(
            &a5,
            &[
                Perm::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap(),
                Perm::from_cycles(5, &[vec![1, 4], vec![2, 3]]).unwrap(),
            ],
        )
        .unwrap();
        (a5, s3, a4, d10)
    }

    #[test]
    fn a4_is_a_large_fixer_of_a5_mod_s3() {
        let (a5, s3, a4, _) = a5_with_s3_and_a4();
        assert_eq!(s3.order(), 6);
        assert_eq!(a4.order(), 12);
        let v = is_fixer(&a5, &s3, &a4, true);
        assert!(v.is_fixer);
        assert_eq!(v.is_stable, Some(false));
        assert!(v.is_large);
        assert!(v.is_strictly_large);
        // K = H is a stable fixer
        let v = is_fixer(&a5, &s3, &s3, true);
        assert!(v.is_fixer);
        assert_eq!(v.is_stable, Some(true));
        assert!(!v.is_large);
    }

    #[test]
    fn d10_is_not_a_fixer_of_a5_mod_s3() {
        let (a5, s3, _, d10) = a5_with_s3_and_a4();
        let v = is_fixer(&a5, &s3, &d10, false);
        assert!(!v.is_fixer);
        // witness: an element of order 5
        let (x, _) = v.witness.unwrap();
        assert_eq!(a5.order_of_idx(x), 5);
        // prefilter also rejects via spectrum: 5 not in {1,2,3}
        assert_eq!(
            prefilter(&a5, &s3, &d10, None),
            PrefilterOutcome::SpectrumViolation(5)
        );
    }

    #[test]
    fn derangement_sets_and_containment() {
        let (a5, s3, a4, d10) = a5_with_s3_and_a4();
        // derangement classes of [A5:S3] are the two 5-classes
        let dc = derangement_classes(&a5, &s3);
        assert_eq!(dc.len(), 2);
        assert!(derangement_containment(&a5, &s3, &a4));
        assert!(!derangement_containment(&a5, &a4, &d10));
    }

    #[test]
    fn rho_bounds_on_a5() {
        let (a5, s3, _, _) = a5_with_s3_and_a4();
        let lat = SubgroupLattice::enumerate(&a5, 1000).unwrap();
        let r0 = rho0(&a5, &s3, RhoScope::Exhaustive(&lat));
        assert_eq!(r0.best_fixer_order, 12);
        // 2*144 = 288 < 360 = 60*6
        assert_eq!(r0.lhs_2k2, 288);
        assert_eq!(r0.rhs_gh, 360);
        assert!(r0.strict_bound_holds);
        // rho1: A4 is maximal, and the equality certificate
        // 5 |K|^2 = 2 |H|^2 |Omega| holds exactly
        let r1 = rho1(&a5, &s3, &lat);
        assert_eq!(r1.best_fixer_order, 12);
        assert_eq!(
            5 * r1.best_fixer_order * r1.best_fixer_order,
            2 * r1.h_order * r1.h_order * r1.point_count
        );
    }

    #[test]
    fn ekr_predicates_on_a5() {
        let (a5, s3, a4, _) = a5_with_s3_and_a4();
        let lat = SubgroupLattice::enumerate(&a5, 1000).unwrap();
        let e = ekr_predicates(&a5, &s3, &lat);
        assert!(!e.weak_ekr);
        assert!(!e.strict_weak_ekr);
        // natural 5-point action: H = A4 is the point stabilizer;
        // 2-transitive, so no strictly large fixer
        let e = ekr_predicates(&a5, &a4, &lat);
        assert!(e.weak_ekr);
        assert!(e.strict_weak_ekr);
    }

    #[test]
    fn prefilter_never_rejects_a_true_fixer() {
        let (a5, s3, _, _) = a5_with_s3_and_a4();
        let lat = SubgroupLattice::enumerate(&a5, 1000).unwrap();
        for c in &lat.classes {
            let v = is_fixer(&a5, &s3, &c.rep, false);
            if v.is_fixer {
                assert_eq!(prefilter(&a5, &s3, &c.rep, None), PrefilterOutcome::Pass);
            }
        }
    }

    #[test]
    fn fixer_soundness_on_realized_cosets() {
        // every reported fixer passes the elementwise definition on the
        // realized coset action
        let (a5, s3, a4, _) = a5_with_s3_and_a4();
        let act = permcore::CosetAction::new(&a5, &s3, 100).unwrap();
        for &x in &a4.indices {
            assert!(act.fixed_cosets(&a5, &s3, x) > 0);
        }
    }
}
