//! Groups with socle PSL2(q) acting on the projective line, together
//! with the named subgroups driving the fixer analysis: the unipotent
//! radical and split torus, the maximal subgroup types, subfield
//! subgroups, the parabolic-to-affine-semilinear isomorphism, and the
//! explicit fixer families.

pub mod families;
pub mod group;
pub mod semilinear;

pub use families::{perm_to_semilinear, Family, VirtualPsl2};
pub use group::{psl2_order, split_prime_power, GroupSpec, MaximalType, Psl2};
pub use semilinear::{ProjLine, Psl2Error, SemilinearElem};

#[cfg(test)]
mod tests {
    use super::*;
    use permcore::{normalizer, Subgroup};

    #[test]
    fn build_small_groups() {
        let g5 = Psl2::build(GroupSpec::socle(5), 10_000).unwrap();
        assert_eq!(g5.group.order(), 60);
        assert_eq!(g5.group.degree(), 6);

        let g8 = Psl2::build(GroupSpec::pgamma_l(8, 3), 10_000).unwrap();
        assert_eq!(g8.group.order(), 1512);

        let g7 = Psl2::build(GroupSpec::pgl(7), 10_000).unwrap();
        assert_eq!(g7.group.order(), 336);
    }

    #[test]
    fn two_transitive_on_the_line() {
        for q in [4u64, 5, 7, 8, 9, 11, 13] {
            let g = Psl2::build(GroupSpec::socle(q), 100_000).unwrap();
            assert!(g.group.is_transitive());
            // point stabilizer transitive on the remaining q points
            let stab = g.parabolic();
            let stab_group = stab.to_group(&g.group);
            let orbits = permcore::orbits(stab_group.generators(), g.group.degree());
            assert_eq!(orbits.len(), 2, "q={q}");
        }
    }

    #[test]
    fn q_and_d_orders() {
        let g8 = Psl2::build(GroupSpec::socle(8), 10_000).unwrap();
        assert_eq!(g8.subgroup_q().order(), 8);
        assert_eq!(g8.subgroup_d().order(), 7);

        let g9 = Psl2::build(GroupSpec::socle(9), 10_000).unwrap();
        let q9 = g9.subgroup_q();
        assert_eq!(q9.order(), 9);
        // elementary abelian of exponent 3
        assert_eq!(
            q9.spectrum(&g9.group).into_iter().collect::<Vec<_>>(),
            vec![1, 3]
        );
    }

    #[test]
    fn parabolic_is_normalizer_of_q() {
        for q in [5u64, 8, 9] {
            let g = Psl2::build(GroupSpec::socle(q), 10_000).unwrap();
            let qsub = g.subgroup_q();
            assert_eq!(normalizer(&g.group, &qsub).indices, g.parabolic().indices);
        }
        // and in the full PGammaL2(8): order q(q-1)f = 8*7*3
        let g = Psl2::build(GroupSpec::pgamma_l(8, 3), 10_000).unwrap();
        assert_eq!(g.parabolic().order(), 168);
    }

    #[test]
    fn maximal_subgroup_orders() {
        // (PSL2(7), P1) has order 21
        let g7 = Psl2::build(GroupSpec::socle(7), 10_000).unwrap();
        assert_eq!(g7.maximal_subgroup(MaximalType::P1).unwrap().order(), 21);
        // (SL2(8), nonsplit torus normalizer) = D18
        let g8 = Psl2::build(GroupSpec::socle(8), 10_000).unwrap();
        let d18 = g8.maximal_subgroup(MaximalType::TorusNonsplit).unwrap();
        assert_eq!(d18.order(), 18);
        // (PSL2(9), split torus normalizer) = D8
        let g9 = Psl2::build(GroupSpec::socle(9), 10_000).unwrap();
        let d8 = g9.maximal_subgroup(MaximalType::TorusSplit).unwrap();
        assert_eq!(d8.order(), 8);
    }

    #[test]
    fn subfield_subgroups() {
        // q = 9, q0 = 3: PGL2(3) = S4, order 24
        let g9 = Psl2::build(GroupSpec::socle(9), 10_000).unwrap();
        let s4 = g9.subfield_subgroup(1).unwrap();
        assert_eq!(s4.order(), 24);
        assert_eq!(
            s4.spectrum(&g9.group).into_iter().collect::<Vec<_>>(),
            vec![1, 2, 3, 4]
        );
        // q = 8, q0 = 2 is rejected
        let g8 = Psl2::build(GroupSpec::socle(8), 10_000).unwrap();
        assert!(g8.subfield_subgroup(1).is_err());
    }

    #[test]
    fn icosahedral_and_extraspecial_searches() {
        // A4 is maximal in PSL2(5) (normalizer of A4 = A4 there)
        let g5 = Psl2::build(GroupSpec::socle(5), 10_000).unwrap();
        let a4 = g5.maximal_subgroup(MaximalType::ExtraspecialNorm).unwrap();
        assert_eq!(a4.order(), 12);
        // S4 in PSL2(7)
        let g7 = Psl2::build(GroupSpec::socle(7), 10_000).unwrap();
        let s4 = g7.search_small_subgroup(24, &[1, 2, 3, 4]).unwrap().unwrap();
        assert_eq!(s4.order(), 24);
        // A5 in PSL2(9)
        let g9 = Psl2::build(GroupSpec::socle(9), 10_000).unwrap();
        let a5 = g9.maximal_subgroup(MaximalType::Icosahedral).unwrap();
        assert_eq!(a5.order(), 60);
    }

    #[test]
    fn delta_pairs_are_distinct_classes() {
        // the two S4 classes of PSL2(7) are swapped by delta
        let g7 = Psl2::build(GroupSpec::socle(7), 10_000).unwrap();
        let s4 = g7.search_small_subgroup(24, &[1, 2, 3, 4]).unwrap().unwrap();
        let s4d = g7.conjugate_by_delta(&s4);
        assert_eq!(s4d.order(), 24);
        assert!(s4d.is_subgroup(&g7.group));
        // not conjugate inside PSL2(7): no g maps one onto the other
        let conj = (0..g7.group.order() as u32)
            .any(|g| s4.conjugate(&g7.group, g).indices == s4d.indices);
        assert!(!conj);
    }

    #[test]
    fn case_c_family_at_q16() {
        // SL2(16), |L| = 16 * 5 = 80
        let g16 = Psl2::build(GroupSpec::socle(16), 100_000).unwrap();
        let l = g16.fixer_family(Family::CaseC).unwrap();
        assert_eq!(l.order(), 80);
        assert!(l.is_subgroup(&g16.group));
        // contained in the parabolic
        assert!(l.is_subset_of(&g16.parabolic()));
    }

    #[test]
    fn case_a_family_at_q8() {
        // SL2(8): (Q:D).<psi>_{2'} with trivial outer = Q:D, order 56
        let g8 = Psl2::build(GroupSpec::socle(8), 10_000).unwrap();
        let k = g8.fixer_family(Family::CaseA).unwrap();
        assert_eq!(k.order(), 56);
        // PGammaL2(8): odd outer part of order 3 comes in
        let g = Psl2::build(GroupSpec::pgamma_l(8, 3), 10_000).unwrap();
        let k = g.fixer_family(Family::CaseA).unwrap();
        assert_eq!(k.order(), 56 * 3);
    }

    #[test]
    fn virtual_families_at_q64() {
        // |L^I meet G0| = 64 * 3 = 192 for q = 64, q0 = 4, r = 3
        let v = VirtualPsl2::new(GroupSpec::socle(64)).unwrap();
        let li = v.fixer_family_elements(Family::LI { f0: 2 }).unwrap();
        assert_eq!(li.len(), 192);
        assert_eq!(Family::LI { f0: 2 }.socle_order(&v.spec).unwrap(), 192);
        // with the full Frobenius group on top: 192 * 6
        let v6 = VirtualPsl2::new(GroupSpec::psigma_l(64, 6)).unwrap();
        let li6 = v6.fixer_family_elements(Family::LI { f0: 2 }).unwrap();
        assert_eq!(li6.len(), 192 * 6);
        // case c at q = 64: |L| = 64 * 9
        let c = v.fixer_family_elements(Family::CaseC).unwrap();
        assert_eq!(c.len(), 64 * 9);
    }

    #[test]
    fn virtual_trace_zero_m_at_q3125() {
        // q = 5^5: |M| = 5^4 = 625, |L^III meet G0| = 625 * 2 = 1250
        let v = VirtualPsl2::new(GroupSpec::socle(3125)).unwrap();
        let m = v.fixer_family_elements(Family::TraceZeroM { f0: 1 }).unwrap();
        assert_eq!(m.len(), 625);
        let l3 = v.fixer_family_elements(Family::LIII { f0: 1 }).unwrap();
        assert_eq!(l3.len(), 1250);
        assert_eq!(Family::LIII { f0: 1 }.socle_order(&v.spec).unwrap(), 1250);
    }

    #[test]
    fn family_constraints_rejected() {
        let v = VirtualPsl2::new(GroupSpec::socle(16)).unwrap();
        // r = 2 = p excludes L^I
        assert!(v.fixer_family_elements(Family::LI { f0: 2 }).is_err());
        // case c needs f even
        let v8 = VirtualPsl2::new(GroupSpec::socle(8)).unwrap();
        assert!(v8.fixer_family_elements(Family::CaseC).is_err());
        // q = 27 = 3^3: L^II exists structurally (the order comparison
        // with |H| is the classifier's business, not a construction error)
        let g27 = VirtualPsl2::new(GroupSpec::socle(27)).unwrap();
        let l2 = g27.fixer_family_elements(Family::LII { f0: 1 }).unwrap();
        assert_eq!(l2.len() as u64, 27);
    }

    #[test]
    fn fixer_family_members_normalize_q() {
        let g16 = Psl2::build(GroupSpec::socle(16), 100_000).unwrap();
        let l = g16.fixer_family(Family::CaseC).unwrap();
        let nq = g16.parabolic();
        assert!(l.indices.iter().all(|&x| nq.contains_idx(x)));
    }

    #[test]
    fn perm_semilinear_roundtrip() {
        let g9 = Psl2::build(GroupSpec::pgamma_l(9, 2), 100_000).unwrap();
        for idx in [0u32, 3, 100, 500, 1000] {
            let p = g9.group.element(idx);
            let s = perm_to_semilinear(&g9.line, &p).unwrap();
            assert_eq!(s.to_perm(&g9.line), p);
        }
    }

    #[test]
    fn socle_is_normal_of_right_order() {
        let g = Psl2::build(GroupSpec::pgamma_l(9, 2), 100_000).unwrap();
        assert_eq!(g.group.order(), 1440);
        assert_eq!(g.socle.order(), 360);
        let n = normalizer(&g.group, &g.socle);
        assert_eq!(n.order(), g.group.order());
        let _ = Subgroup::trivial(&g.group);
    }
}
