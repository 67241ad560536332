//! The character-difference certificate on its home turf: even-q
//! groups with the torus normalizer against the point stabilizer, and
//! the permutation-equivalent twisted pairs.

use permchar::{spiga_certificate, SpigaVerdict};
use psl2::{GroupSpec, MaximalType, Psl2};

#[test]
fn sl2_8_certificate_triple() {
    let g = Psl2::build(GroupSpec::socle(8), 10_000).unwrap();
    let h = g.maximal_subgroup(MaximalType::TorusSplit).unwrap();
    let k = g.parabolic();
    assert_eq!(h.order(), 14);
    assert_eq!(k.order(), 56);
    match spiga_certificate(&g.group, &h, &k).unwrap() {
        SpigaVerdict::CharacterDifference {
            delta_rank,
            omega_delta,
            omega_orbits,
        } => {
            assert_eq!((delta_rank, omega_delta, omega_orbits), (2, 2, 1));
        }
        other => panic!("expected the certificate, got {other:?}"),
    }
}

#[test]
fn psl2_11_icosahedral_pair_is_permutation_equivalent() {
    let g = Psl2::build(GroupSpec::socle(11), 10_000).unwrap();
    let a5 = g.search_small_subgroup(60, &[1, 2, 3, 5]).unwrap().unwrap();
    let twin = g.conjugate_by_delta(&a5);
    assert_eq!(
        spiga_certificate(&g.group, &a5, &twin).unwrap(),
        SpigaVerdict::Equal
    );
}

#[test]
fn psl2_7_octahedral_pair_is_permutation_equivalent() {
    let g = Psl2::build(GroupSpec::socle(7), 10_000).unwrap();
    let s4 = g.search_small_subgroup(24, &[1, 2, 3, 4]).unwrap().unwrap();
    let twin = g.conjugate_by_delta(&s4);
    assert_eq!(
        spiga_certificate(&g.group, &s4, &twin).unwrap(),
        SpigaVerdict::Equal
    );
}
