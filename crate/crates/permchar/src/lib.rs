//! Permutation characters as exact class functions.
//!
//! The character of G on [G:H] takes, on each conjugacy class, the
//! number of fixed cosets of a representative. Inner products are
//! computed as exact rationals over the class table; their Burnside
//! readings (orbit counts, rank) back every value used here. No
//! irreducible character tables enter anywhere: the character-
//! difference certificate is exactly the three inner products
//! (<pi_D, pi_D>, <pi_O, pi_D>, <pi_O, 1>) = (2, 2, 1), which force
//! both constituents of pi_D into pi_O.

use fixerlab::derangement_classes;
use num_rational::Ratio;
use num_traits::Zero;
use permcore::{CosetAction, GroupError, PermGroup, Subgroup};
use serde::Serialize;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("class functions belong to different class tables")]
    TableMismatch,
    #[error("group error: {0}")]
    Group(#[from] GroupError),
}

pub type Rational = Ratio<i128>;

/// A rational-valued function on the conjugacy classes of one group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<Rational>,
}

impl ClassFunction {
    pub fn trivial(g: &PermGroup) -> ClassFunction {
        ClassFunction {
            values: vec![Rational::from_integer(1); g.classes().class_count()],
        }
    }

    pub fn degree(&self, g: &PermGroup) -> Rational {
        let id_class = g.class_of(g.identity_index());
        self.values[id_class as usize]
    }
}

/// The permutation character of G on the cosets of H: value on a class
/// is the number of cosets fixed by its representative.
pub fn perm_character(g: &PermGroup, h: &Subgroup) -> Result<ClassFunction, CharError> {
    let act = CosetAction::new(g, h, g.order())?;
    let classes = g.classes();
    let values = classes
        .reps
        .iter()
        .map(|&r| Rational::from_integer(act.fixed_cosets(g, h, r) as i128))
        .collect();
    Ok(ClassFunction { values })
}

/// Exact inner product (1/|G|) sum over classes of size * a * b
/// (permutation characters are real, so no conjugation is needed).
pub fn inner_product(g: &PermGroup, a: &ClassFunction, b: &ClassFunction) -> Result<Rational, CharError> {
    let classes = g.classes();
    if a.values.len() != classes.class_count() || b.values.len() != classes.class_count() {
        return Err(CharError::TableMismatch);
    }
    let mut sum = Rational::zero();
    for (i, &size) in classes.sizes.iter().enumerate() {
        sum += Rational::from_integer(size as i128) * a.values[i] * b.values[i];
    }
    Ok(sum / Rational::from_integer(g.order() as i128))
}

/// Verdict of the derangement-set character certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SpigaVerdict {
    /// The two characters coincide (permutation-equivalent actions).
    Equal,
    /// D(G,H) = D(G,K) and the certificate triple is (2,2,1), so the
    /// difference of the two characters is a genuine character.
    CharacterDifference {
        delta_rank: i128,
        omega_delta: i128,
        omega_orbits: i128,
    },
    /// The derangement sets differ: witnessed by a class id present in
    /// exactly one of them.
    DerangementMismatch { witness_class: u32 },
    /// Equal derangement sets but the three inner products do not form
    /// the certificate.
    Inconclusive { triple: (String, String, String) },
}

/// Run the certificate for the two primitive actions [G:H] (Omega, the
/// larger-index one) and [G:K] (Delta): verify D(G,H) = D(G,K) first,
/// then either equality of characters or the (2,2,1) certificate.
pub fn spiga_certificate(
    g: &PermGroup,
    h: &Subgroup,
    k: &Subgroup,
) -> Result<SpigaVerdict, CharError> {
    let dh = derangement_classes(g, h);
    let dk = derangement_classes(g, k);
    if dh != dk {
        let witness = dh
            .iter()
            .find(|c| dk.binary_search(c).is_err())
            .or_else(|| dk.iter().find(|c| dh.binary_search(c).is_err()))
            .copied()
            .expect("sets differ");
        return Ok(SpigaVerdict::DerangementMismatch {
            witness_class: witness,
        });
    }
    let pi_omega = perm_character(g, h)?;
    let pi_delta = perm_character(g, k)?;
    if pi_omega == pi_delta {
        return Ok(SpigaVerdict::Equal);
    }
    let one = ClassFunction::trivial(g);
    let dd = inner_product(g, &pi_delta, &pi_delta)?;
    let od = inner_product(g, &pi_omega, &pi_delta)?;
    let o1 = inner_product(g, &pi_omega, &one)?;
    let two = Rational::from_integer(2);
    let unit = Rational::from_integer(1);
    if dd == two && od == two && o1 == unit {
        Ok(SpigaVerdict::CharacterDifference {
            delta_rank: 2,
            omega_delta: 2,
            omega_orbits: 1,
        })
    } else {
        Ok(SpigaVerdict::Inconclusive {
            triple: (dd.to_string(), od.to_string(), o1.to_string()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use permcore::Perm;

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

    #[test]
    fn a5_natural_character() {
        // A5 on 5 points: values (5, 1, 2, 0, 0) on (1, 2^2, 3, 5, 5')
        let a5 = alternating(5);
        let point_stab = permcore::point_stabilizer(&a5, 4);
        let pi = perm_character(&a5, &point_stab).unwrap();
        let mut vals: Vec<i128> = pi.values.iter().map(|v| *v.numer()).collect();
        // order classes canonically by the rep's element order for the check
        let orders: Vec<u64> = a5.classes().reps.iter().map(|&r| a5.order_of_idx(r)).collect();
        let mut paired: Vec<(u64, i128)> = orders.into_iter().zip(vals.drain(..)).collect();
        paired.sort();
        assert_eq!(
            paired,
            vec![(1, 5), (2, 1), (3, 2), (5, 0), (5, 0)]
        );
    }

    #[test]
    fn regular_character() {
        let a4 = alternating(4);
        let trivial_sub = Subgroup::trivial(&a4);
        let pi = perm_character(&a4, &trivial_sub).unwrap();
        let id_class = a4.class_of(a4.identity_index());
        for (i, v) in pi.values.iter().enumerate() {
            let expect = if i as u32 == id_class { 12 } else { 0 };
            assert_eq!(*v, Rational::from_integer(expect));
        }
    }

    #[test]
    fn burnside_orbit_counts() {
        // <pi, 1> = number of orbits: 1 for a transitive action;
        // <pi, pi> = 2 exactly for 2-transitive ones
        let a5 = alternating(5);
        let stab = permcore::point_stabilizer(&a5, 0);
        let pi = perm_character(&a5, &stab).unwrap();
        let one = ClassFunction::trivial(&a5);
        assert_eq!(inner_product(&a5, &pi, &one).unwrap(), Rational::from_integer(1));
        assert_eq!(inner_product(&a5, &pi, &pi).unwrap(), Rational::from_integer(2));
        // cross-check rank 2 against a direct pair-orbit count: the
        // stabilizer has exactly 2 orbits on points
        let stab_group = stab.to_group(&a5);
        assert_eq!(permcore::orbits(stab_group.generators(), 5).len(), 2);
    }

    #[test]
    fn equal_verdict_for_identical_subgroups() {
        let a5 = alternating(5);
        let s = permcore::point_stabilizer(&a5, 0);
        assert_eq!(spiga_certificate(&a5, &s, &s).unwrap(), SpigaVerdict::Equal);
    }

    #[test]
    fn a5_s3_a4_is_a_character_difference_instance() {
        // D(A5, S3) = D(A5, A4) = the two 5-classes, the actions are
        // inequivalent, and the certificate triple is (2, 2, 1)
        let a5 = alternating(5);
        let a4 = permcore::point_stabilizer(&a5, 4);
        let s3 = Subgroup::from_perms(
            &a5,
            &[
                Perm::from_cycles(5, &[vec![0, 1, 2]]).unwrap(),
                Perm::from_cycles(5, &[vec![0, 1], vec![3, 4]]).unwrap(),
            ],
        )
        .unwrap();
        match spiga_certificate(&a5, &s3, &a4).unwrap() {
            SpigaVerdict::CharacterDifference { .. } => {}
            other => panic!("expected the certificate, got {other:?}"),
        }
    }

    #[test]
    fn mismatch_verdict_carries_a_witness() {
        // D(A5, D10) = {3-class} while D(A5, A4) = {5-classes}
        let a5 = alternating(5);
        let a4 = permcore::point_stabilizer(&a5, 0);
        let d10 = Subgroup::from_perms(
            &a5,
            &[
                Perm::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap(),
                Perm::from_cycles(5, &[vec![1, 4], vec![2, 3]]).unwrap(),
            ],
        )
        .unwrap();
        match spiga_certificate(&a5, &d10, &a4).unwrap() {
            SpigaVerdict::DerangementMismatch { witness_class } => {
                let rep = a5.classes().reps[witness_class as usize];
                assert!(matches!(a5.order_of_idx(rep), 3 | 5));
            }
            other => panic!("expected mismatch, got {other:?}"),
        }
    }
}
