//! Ingestion of external permutation-group data, a named-group
//! registry backed by shipped sporadic fixtures, and constructions of
//! the primitive maximal subgroups used by the small-degree scans.

pub mod builders;
pub mod format;
pub mod registry;

pub use builders::primitive_maximals;
pub use format::{parse_group_file, serialize_group, FormatError, GroupFile};
pub use registry::{
    data_dir, load_generators, load_group_file, registry_lookup, RegistryError,
};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_builtin_names() {
        assert_eq!(registry_lookup("A5").unwrap().order(), 60);
        assert_eq!(registry_lookup("S6").unwrap().order(), 720);
        assert!(registry_lookup("Nope").is_err());
    }

    #[test]
    fn primitive_builders_have_the_right_orders() {
        let check = |n: u32, alt: bool, name: &str, order: u64| {
            let list = primitive_maximals(n, alt);
            let (_, gens) = list
                .iter()
                .find(|(nm, _)| nm == name)
                .unwrap_or_else(|| panic!("{name} missing at n={n}"));
            let g = permcore::PermGroup::from_generators(n as usize, gens.clone(), 10_000_000)
                .unwrap();
            assert_eq!(g.order(), order, "{name}");
            // all inside the right parity
            if alt {
                let mut buf = vec![0u16; n as usize];
                for idx in 0..g.order() as u32 {
                    g.decode_into(idx, &mut buf);
                    assert!(permcore::Perm::from_images(buf.clone()).unwrap().is_even());
                }
            }
        };
        check(5, true, "D10", 10);
        check(5, false, "AGL(1,5)", 20);
        check(6, true, "PSL(2,5)", 60);
        check(6, false, "PGL(2,5)", 120);
        check(7, true, "PSL(3,2)", 168);
        check(7, true, "PSL(3,2)-dual", 168);
        check(7, false, "AGL(1,7)", 42);
        check(8, true, "AGL(3,2)", 1344);
        check(8, true, "AGL(3,2)-twisted", 1344);
        check(8, false, "PGL(2,7)", 336);
        check(9, true, "PGammaL(2,8)", 1512);
        check(9, true, "3^2:2A4", 216);
        check(9, false, "AGL(2,3)", 432);
        check(10, false, "PGammaL(2,9)", 1440);
    }

    #[test]
    fn psl32_classes_are_distinct_in_a7() {
        // the two PSL(3,2) copies are not conjugate inside A7
        let a7 = registry_lookup("A7").unwrap();
        let list = primitive_maximals(7, true);
        let g1 = permcore::Subgroup::from_perms(&a7, &list[0].1).unwrap();
        let g2 = permcore::Subgroup::from_perms(&a7, &list[1].1).unwrap();
        assert_eq!(g1.order(), 168);
        assert_eq!(g2.order(), 168);
        let conj = (0..a7.order() as u32)
            .any(|g| g1.conjugate(&a7, g).indices == g2.indices);
        assert!(!conj);
    }
}
