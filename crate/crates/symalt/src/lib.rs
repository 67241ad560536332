//! Cycle-type calculus for the symmetric and alternating groups:
//! realizable cycle types of the intransitive and imprimitive maximal
//! subgroups, the alternating class-splitting rule, derangement
//! containment decided at type level (with element-level escalation
//! for shared split classes), and the brute-force scan confirming the
//! classification of containment triples at small degree.

pub mod bounds;
pub mod scan;
pub mod types;

pub use bounds::{imprim_order_bounds, ImprimBoundsReport};
pub use scan::{
    ambient, is_maximal_corefree, isomorphic_fingerprint, realize, sn_containment,
    theorem_alt_scan_brute, MaxDesc, ScanHit, TypeVerdict, ESCALATION_LIMIT,
};
pub use types::{
    intransitive_cycle_types, partitions, wreath_cycle_types, wreath_gens, AnClassLabel,
    CycleType, SplitComponent,
};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn containment_trivially_holds_for_equal_descriptors() {
        let h = MaxDesc::Intransitive { k: 2 };
        assert_eq!(sn_containment(7, false, &h, &h), TypeVerdict::Holds);
    }

    #[test]
    fn a5_s3_a4_holds_at_type_level_with_escalation() {
        // H = intransitive(2) in A5 is S3; K = intransitive(1) is A4
        let h = MaxDesc::Intransitive { k: 2 };
        let k = MaxDesc::Intransitive { k: 1 };
        assert_eq!(sn_containment(5, true, &h, &k), TypeVerdict::Holds);
        // and fails in S5 (4-cycles of S4 are derangements on [S5:S2xS3])
        assert_eq!(sn_containment(5, false, &h, &k), TypeVerdict::Fails);
    }

    #[test]
    fn seven_cycle_obstruction_at_n8() {
        // H = imprimitive(4,2), K = intransitive(1): the 7-cycles of
        // S7 appear in no element of S4 wr S2
        let h = MaxDesc::Imprimitive { a: 4, b: 2 };
        let k = MaxDesc::Intransitive { k: 1 };
        assert_eq!(sn_containment(8, false, &h, &k), TypeVerdict::Fails);
    }

    #[test]
    fn undecided_beyond_the_escalation_limit() {
        // a shared split type at large odd n: both sides realize [n]
        // only when... use intransitive pairs sharing [13,3] etc.
        let h = MaxDesc::Intransitive { k: 3 };
        let k = MaxDesc::Intransitive { k: 1 };
        let v = sn_containment(16, true, &h, &k);
        assert!(matches!(
            v,
            TypeVerdict::UndecidedAtTypeLevel | TypeVerdict::Fails
        ));
    }

    #[test]
    fn brute_scan_on_five_and_six() {
        let no_prims = |_: u32, _: bool| Vec::new();
        let hits = theorem_alt_scan_brute(5..=6, &no_prims, None);
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].n, 5);
        assert_eq!(hits[0].group, "A5");
        assert_eq!((hits[0].h_order, hits[0].k_order), (6, 12));
    }
}
