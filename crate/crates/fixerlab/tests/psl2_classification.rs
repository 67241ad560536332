//! Anchor checks for the large-fixer classification at the smallest
//! q, against values stated by the classification theorem itself.

use fixerlab::psl2lab::{HTag, Psl2Instance};
use psl2::GroupSpec;

fn build(spec: GroupSpec) -> Psl2Instance {
    Psl2Instance::build(spec, 1_000_000, 100_000).unwrap()
}

#[test]
fn q4_socle_split_torus_has_exactly_a4() {
    // PSL2(4) = A5 with H = S3: the unique maximal large fixer is A4
    let inst = build(GroupSpec::socle(4));
    let pairs = inst.primitive_pairs().unwrap();
    let pair = pairs.iter().find(|p| p.tag == HTag::TorusSplit).unwrap();
    assert_eq!(pair.h_order, 6);
    let c = inst.classify_large_fixers(pair);
    let max: Vec<u64> = c
        .large
        .iter()
        .filter(|l| l.maximal)
        .map(|l| l.order)
        .collect();
    assert_eq!(max, vec![12]);
    assert_eq!(c.large.len(), 1);
    // the expectation generator realizes the same class
    assert_eq!(inst.expected_maximal_large_fixers(pair), c.maximal_class_ids());
}

#[test]
fn q5_socle_nonsplit_torus_has_exactly_a4() {
    // PSL2(5) = A5 with H = S3 seen from the q = 5 side
    let inst = build(GroupSpec::socle(5));
    let pairs = inst.primitive_pairs().unwrap();
    let pair = pairs.iter().find(|p| p.tag == HTag::TorusNonsplit).unwrap();
    assert_eq!(pair.h_order, 6);
    let c = inst.classify_large_fixers(pair);
    let max: Vec<u64> = c.large.iter().filter(|l| l.maximal).map(|l| l.order).collect();
    assert_eq!(max, vec![12]);
    assert_eq!(inst.expected_maximal_large_fixers(pair), c.maximal_class_ids());
}

#[test]
fn q8_socle_split_torus_best_fixer_is_the_parabolic() {
    // SL2(8) with H = D14: the maximal large fixer is Q:D of order 56,
    // and the exact bound 2*56^2 = 6272 < 504*14 = 7056 holds
    let inst = build(GroupSpec::socle(8));
    let pairs = inst.primitive_pairs().unwrap();
    let pair = pairs.iter().find(|p| p.tag == HTag::TorusSplit).unwrap();
    assert_eq!(pair.h_order, 14);
    let c = inst.classify_large_fixers(pair);
    let max: Vec<u64> = c.large.iter().filter(|l| l.maximal).map(|l| l.order).collect();
    assert_eq!(max, vec![56]);
    assert_eq!(inst.expected_maximal_large_fixers(pair), c.maximal_class_ids());
    let rho = inst.rho0(pair);
    assert_eq!(rho.best_fixer_order, 56);
    assert_eq!(rho.lhs_2k2, 6272);
    assert_eq!(rho.rhs_gh, 7056);
    assert!(rho.strict_bound_holds);
}

#[test]
fn q7_socle_octahedral_pair_swaps_under_delta() {
    // PSL2(7) with H = S4: the partner class under the diagonal twist
    // is the unique maximal large fixer
    let inst = build(GroupSpec::socle(7));
    let pairs = inst.primitive_pairs().unwrap();
    let s4_pairs: Vec<_> = pairs
        .iter()
        .filter(|p| p.tag == HTag::ExtraspecialNorm)
        .collect();
    assert_eq!(s4_pairs.len(), 2, "two classes of S4");
    for pair in s4_pairs {
        assert_eq!(pair.h_order, 24);
        let c = inst.classify_large_fixers(pair);
        let max: Vec<u64> = c.large.iter().filter(|l| l.maximal).map(|l| l.order).collect();
        assert_eq!(max, vec![24]);
        let expect = inst.expected_maximal_large_fixers(pair);
        assert_eq!(expect, c.maximal_class_ids());
        // and it is the other S4 class, not H itself
        assert_ne!(expect[0], pair.h_class);
    }
}

#[test]
fn q7_pgl_split_torus_has_a4() {
    // PGL2(7) with H = D12: A4 is a large fixer (|A4| = |H| = 12)
    let inst = build(GroupSpec::pgl(7));
    let pairs = inst.primitive_pairs().unwrap();
    let pair = pairs.iter().find(|p| p.tag == HTag::TorusSplit).unwrap();
    assert_eq!(pair.h_order, 12);
    let c = inst.classify_large_fixers(pair);
    let max: Vec<u64> = c.large.iter().filter(|l| l.maximal).map(|l| l.order).collect();
    assert_eq!(max, vec![12]);
    assert_eq!(inst.expected_maximal_large_fixers(pair), c.maximal_class_ids());
}

#[test]
fn q4_and_q5_p1_actions_have_no_large_fixers() {
    for spec in [GroupSpec::socle(4), GroupSpec::socle(5)] {
        let inst = build(spec);
        let pairs = inst.primitive_pairs().unwrap();
        let pair = pairs.iter().find(|p| p.tag == HTag::P1).unwrap();
        let c = inst.classify_large_fixers(pair);
        assert!(c.large.is_empty(), "2-transitive actions have no large fixer");
        assert!(inst.expected_maximal_large_fixers(pair).is_empty());
    }
}

#[test]
fn q9_all_pairs_match_expectations() {
    // PSL2(9) = A6: subfield S4 pairs see no large fixers (their
    // 3-element classes split), the icosahedral pairs neither (p = 3)
    let inst = build(GroupSpec::socle(9));
    let pairs = inst.primitive_pairs().unwrap();
    assert!(pairs.iter().any(|p| p.tag == HTag::Icosahedral));
    assert!(pairs.iter().any(|p| matches!(p.tag, HTag::Subfield { .. })));
    for pair in &pairs {
        let c = inst.classify_large_fixers(pair);
        assert_eq!(
            inst.expected_maximal_large_fixers(pair),
            c.maximal_class_ids(),
            "tag {:?}",
            pair.tag
        );
        assert!(c.large.is_empty(), "A6 actions have no large fixers; tag {:?}", pair.tag);
    }
}
