//! Constructive fixer verification at q = 64: every element of each
//! family conjugates into the stated point stabilizer with a verified
//! witness, with no enumeration of the ambient group.

use fixerlab::witness::verify_family_fixer;
use psl2::{Family, GroupSpec, VirtualPsl2};

#[test]
fn q64_case_a_socle() {
    let v = VirtualPsl2::new(GroupSpec::socle(64)).unwrap();
    let r = verify_family_fixer(&v, Family::CaseA).unwrap();
    assert_eq!(r.family_order, 64 * 63);
    assert_eq!(r.failures, 0);
    assert_eq!(r.verified, r.family_order);
}

#[test]
fn q64_case_c_with_odd_outer_part() {
    let v = VirtualPsl2::new(GroupSpec {
        q: 64,
        include_delta: false,
        phi_part_order: 3,
    })
    .unwrap();
    let r = verify_family_fixer(&v, Family::CaseC).unwrap();
    assert_eq!(r.family_order, 64 * 9 * 3);
    assert_eq!(r.failures, 0);
}

#[test]
fn q64_subfield_family_full_outer() {
    let v = VirtualPsl2::new(GroupSpec::psigma_l(64, 6)).unwrap();
    let r = verify_family_fixer(&v, Family::LI { f0: 2 }).unwrap();
    assert_eq!(r.family_order, 192 * 6);
    assert_eq!(r.failures, 0);
}
