//! Building the groups PSL2(q) <= G <= PGammaL2(q) on the projective
//! line, and every named subgroup of them used by the fixer analysis:
//! the unipotent radical Q, the split torus D, the maximal subgroup
//! types, subfield subgroups, and the explicit fixer families.

use crate::semilinear::{ProjLine, Psl2Error, SemilinearElem};
use ffield::FieldCtx;
use gammagrp::GammaCtx;
use permcore::{
    centralizer_of_perm, normalizer, point_stabilizer, Perm, PermGroup, Subgroup,
};

/// Which group between the socle and PGammaL2(q) to build: the outer
/// part is a subgroup of <delta> x <phi>, given by a delta flag and the
/// order d of the phi-part (d | f; the phi-part is <phi^(f/d)>).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupSpec {
    pub q: u64,
    pub include_delta: bool,
    pub phi_part_order: usize,
}

impl GroupSpec {
    pub fn socle(q: u64) -> GroupSpec {
        GroupSpec {
            q,
            include_delta: false,
            phi_part_order: 1,
        }
    }

    /// PGL2(q); for even q this is the socle itself (delta is inner).
    pub fn pgl(q: u64) -> GroupSpec {
        GroupSpec {
            q,
            include_delta: q % 2 == 1,
            phi_part_order: 1,
        }
    }

    pub fn psigma_l(q: u64, f: usize) -> GroupSpec {
        GroupSpec {
            q,
            include_delta: false,
            phi_part_order: f,
        }
    }

    /// PGammaL2(q); for even q the delta part is dropped (inner).
    pub fn pgamma_l(q: u64, f: usize) -> GroupSpec {
        GroupSpec {
            q,
            include_delta: q % 2 == 1,
            phi_part_order: f,
        }
    }

    pub fn outer_order(&self, q_even: bool) -> u64 {
        let d = if self.include_delta && !q_even { 2 } else { 1 };
        d * self.phi_part_order as u64
    }

    /// A short name like "PSL(2,9)", "PGL(2,9)", "PSL(2,9).Phi2",
    /// "PGL(2,9).Phi2" identifying the extension.
    pub fn name(&self) -> String {
        let base = if self.include_delta { "PGL" } else { "PSL" };
        if self.phi_part_order > 1 {
            format!("{}(2,{}).Phi{}", base, self.q, self.phi_part_order)
        } else {
            format!("{}(2,{})", base, self.q)
        }
    }
}

pub fn psl2_order(q: u64) -> u64 {
    let d = if q % 2 == 0 { 1 } else { 2 };
    q * (q * q - 1) / d
}

/// A built group with socle PSL2(q) acting on the projective line.
pub struct Psl2 {
    pub spec: GroupSpec,
    pub line: ProjLine,
    pub group: PermGroup,
    /// The socle PSL2(q) as a subgroup of `group`.
    pub socle: Subgroup,
    /// delta as a permutation of the line (may lie outside the group).
    pub delta_perm: Perm,
    /// phi as a permutation of the line (may lie outside the group).
    pub phi_perm: Perm,
}

impl Psl2 {
    /// Enumerate the group described by `spec`.
    pub fn build(spec: GroupSpec, bound: u64) -> Result<Psl2, Psl2Error> {
        let (p, f) = split_prime_power(spec.q)
            .ok_or_else(|| Psl2Error::Unsupported(format!("{} is not a prime power", spec.q)))?;
        if spec.q < 4 {
            return Err(Psl2Error::Unsupported("q >= 4 required for a simple socle".into()));
        }
        if spec.q % 2 == 0 && spec.include_delta {
            return Err(Psl2Error::Unsupported(
                "delta is inner for even q (PGL = PSL)".into(),
            ));
        }
        if f % spec.phi_part_order != 0 {
            return Err(Psl2Error::Unsupported(
                "phi-part order must divide the field degree".into(),
            ));
        }
        let field = FieldCtx::conway(p, f)?;
        let line = ProjLine::new(field);
        let k = &line.field;
        let nu = k.multiplicative_generator();

        let socle_elems = socle_generators(&line)?;
        let mut gens: Vec<SemilinearElem> = socle_elems.clone();
        if spec.include_delta {
            gens.push(SemilinearElem::diagonal(&line, nu, k.one())?);
        }
        if spec.phi_part_order > 1 {
            gens.push(SemilinearElem::field_auto(&line, f / spec.phi_part_order));
        }
        let perms: Vec<Perm> = gens.iter().map(|e| e.to_perm(&line)).collect();
        let group = PermGroup::from_generators(line.point_count(), perms, bound)?;
        let expected = psl2_order(spec.q) * spec.outer_order(spec.q % 2 == 0);
        if group.order() != expected {
            return Err(Psl2Error::Unsupported(format!(
                "closure order {} does not match |PSL2({})| * |O| = {}",
                group.order(),
                spec.q,
                expected
            )));
        }
        let socle_perms: Vec<Perm> = socle_elems.iter().map(|e| e.to_perm(&line)).collect();
        let socle = Subgroup::from_perms(&group, &socle_perms)?;
        debug_assert_eq!(socle.order(), psl2_order(spec.q));
        let delta_perm = SemilinearElem::diagonal(&line, nu, k.one())?.to_perm(&line);
        let phi_perm = SemilinearElem::field_auto(&line, 1).to_perm(&line);
        Ok(Psl2 {
            spec,
            line,
            group,
            socle,
            delta_perm,
            phi_perm,
        })
    }

    pub fn gamma_ctx(&self) -> GammaCtx {
        GammaCtx::new(self.line.field.clone())
    }

    /// Unipotent radical Q = upper-triangular unipotents, order q.
    pub fn subgroup_q(&self) -> Subgroup {
        let perms: Vec<Perm> = self
            .line
            .field
            .elements()
            .skip(1)
            .map(|a| SemilinearElem::unipotent(&self.line, a).to_perm(&self.line))
            .collect();
        let mut indices: Vec<u32> = perms
            .iter()
            .map(|p| self.group.index_of(p).expect("Q lies in the socle"))
            .collect();
        indices.push(self.group.identity_index());
        indices.sort_unstable();
        indices.dedup();
        Subgroup { indices }
    }

    /// Split torus D meet G: the diagonal subgroup, cyclic of order
    /// (q-1)/(2,q-1) in the socle, (q-1) when delta is present.
    pub fn subgroup_d(&self) -> Subgroup {
        let k = &self.line.field;
        let nu = k.multiplicative_generator();
        let mut gens = vec![torus_socle_generator(&self.line)];
        if self.spec.include_delta {
            gens.push(SemilinearElem::diagonal(&self.line, nu, k.one()).unwrap());
        }
        let perms: Vec<Perm> = gens.iter().map(|e| e.to_perm(&self.line)).collect();
        Subgroup::from_perms(&self.group, &perms).expect("torus lies in the group")
    }

    /// N_G(Q), the maximal parabolic (stabilizer of infinity).
    pub fn parabolic(&self) -> Subgroup {
        point_stabilizer(&self.group, self.line.infinity())
    }

    /// Index of a semilinear element in the built group.
    pub fn index_of(&self, e: &SemilinearElem) -> Option<u32> {
        self.group.index_of(&e.to_perm(&self.line))
    }

    /// Conjugate a subgroup by the diagonal automorphism (as a set map;
    /// delta normalizes the group whether or not it lies inside).
    pub fn conjugate_by_delta(&self, s: &Subgroup) -> Subgroup {
        let dinv = self.delta_perm.inverse();
        let mut indices: Vec<u32> = s
            .indices
            .iter()
            .map(|&x| {
                let p = dinv.compose(&self.group.element(x)).compose(&self.delta_perm);
                self.group.index_of(&p).expect("delta normalizes the group")
            })
            .collect();
        indices.sort_unstable();
        Subgroup { indices }
    }
}

fn socle_generators(line: &ProjLine) -> Result<Vec<SemilinearElem>, Psl2Error> {
    let k = &line.field;
    Ok(vec![
        SemilinearElem::unipotent(line, k.one()),
        SemilinearElem::new(line, [k.one(), k.zero(), k.one(), k.one()], 0)?,
        torus_socle_generator(line),
    ])
}

/// diag(nu, nu^-1), which lies in the socle for every q and generates
/// the split torus of PSL2(q) modulo scalars.
fn torus_socle_generator(line: &ProjLine) -> SemilinearElem {
    let k = &line.field;
    let nu = k.multiplicative_generator();
    SemilinearElem::diagonal(line, nu, k.inv(nu).unwrap()).unwrap()
}

pub fn split_prime_power(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut rest = q;
            let mut f = 0;
            while rest % p == 0 {
                rest /= p;
                f += 1;
            }
            return if rest == 1 { Some((p, f)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

/// The maximal subgroup types of groups with socle PSL2(q), named as
/// in the classical classification of subgroup structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MaximalType {
    /// Point stabilizer N_G(Q).
    P1,
    /// Normalizer of the split torus, type GL1(q) wr S2.
    TorusSplit,
    /// Normalizer of a nonsplit torus, type GL1(q^2).
    TorusNonsplit,
    /// Subfield subgroup of type GL2(q0), q = q0^r with r prime.
    Subfield { f0: usize },
    /// Type 2^(1+2)_-.O2^-(2): an S4 or A4 class (q = p odd).
    ExtraspecialNorm,
    /// Type A5 (q = p or p^2 under the usual congruences).
    Icosahedral,
}

impl Psl2 {
    /// Construct one representative subgroup of each requested type.
    /// The returned subgroup need not be maximal for small q; callers
    /// verify maximality (the classification op checks it via the
    /// subgroup lattice or coset-action primitivity).
    pub fn maximal_subgroup(&self, ty: MaximalType) -> Result<Subgroup, Psl2Error> {
        match ty {
            MaximalType::P1 => Ok(self.parabolic()),
            MaximalType::TorusSplit => {
                let t = self.torus_split_socle();
                Ok(normalizer(&self.group, &t))
            }
            MaximalType::TorusNonsplit => {
                let t = self.torus_nonsplit_socle()?;
                Ok(normalizer(&self.group, &t))
            }
            MaximalType::Subfield { f0 } => self.subfield_subgroup(f0),
            MaximalType::ExtraspecialNorm => {
                let a4 = self
                    .search_small_subgroup(12, &[1, 2, 3])?
                    .ok_or_else(|| Psl2Error::Unsupported("no A4 subgroup found".into()))?;
                // the maximal subgroup of this type is N_G(A4): A4 itself,
                // or S4 when the normalizer is larger
                Ok(normalizer(&self.group, &a4))
            }
            MaximalType::Icosahedral => {
                let a5 = self
                    .search_small_subgroup(60, &[1, 2, 3, 5])?
                    .ok_or_else(|| Psl2Error::Unsupported("no A5 subgroup found".into()))?;
                Ok(normalizer(&self.group, &a5))
            }
        }
    }

    /// The split torus of the socle.
    pub fn torus_split_socle(&self) -> Subgroup {
        let perm = torus_socle_generator(&self.line).to_perm(&self.line);
        Subgroup::from_perms(&self.group, &[perm]).expect("torus in socle")
    }

    /// A nonsplit torus of the socle: the canonically least element of
    /// order (q+1)/(2,q-1).
    pub fn torus_nonsplit_socle(&self) -> Result<Subgroup, Psl2Error> {
        let d = if self.spec.q % 2 == 0 { 1 } else { 2 };
        let target = (self.spec.q + 1) / d;
        for &x in &self.socle.indices {
            if self.group.order_of_idx(x) == target {
                return Ok(Subgroup::closure(&self.group, &[x]));
            }
        }
        Err(Psl2Error::Unsupported(format!(
            "no element of order {target} in the socle"
        )))
    }

    /// Subfield subgroup C_G(phi^f0) of type GL2(p^f0), where
    /// q = (p^f0)^r with r prime. Rejected for q even with p^f0 = 2
    /// (not maximal there, by the standard conditions).
    pub fn subfield_subgroup(&self, f0: usize) -> Result<Subgroup, Psl2Error> {
        let k = &self.line.field;
        let f = k.f();
        if f0 == 0 || f % f0 != 0 {
            return Err(Psl2Error::Unsupported("subfield degree must divide f".into()));
        }
        let r = f / f0;
        if !is_prime(r as u64) {
            return Err(Psl2Error::Unsupported("subfield index must be prime".into()));
        }
        let q0 = k.p().pow(f0 as u32);
        if k.p() == 2 && q0 == 2 {
            return Err(Psl2Error::Unsupported(
                "q0 = 2 subfield subgroups are excluded for even q".into(),
            ));
        }
        let phi_f0 = SemilinearElem::field_auto(&self.line, f0).to_perm(&self.line);
        Ok(centralizer_of_perm(&self.group, &phi_f0))
    }

    /// Deterministic search for a subgroup of the given order and
    /// spectrum (as a set of element orders), via pairs (involution,
    /// conjugate of an order-3 element).
    pub fn search_small_subgroup(
        &self,
        order: u64,
        spectrum: &[u64],
    ) -> Result<Option<Subgroup>, Psl2Error> {
        let spec_set: std::collections::BTreeSet<u64> = spectrum.iter().copied().collect();
        let classes = self.group.classes();
        let invol = (0..self.group.order() as u32)
            .find(|&x| self.group.order_of_idx(x) == 2 && self.socle.contains_idx(x));
        let three = (0..self.group.order() as u32)
            .find(|&x| self.group.order_of_idx(x) == 3 && self.socle.contains_idx(x));
        let (Some(u), Some(v)) = (invol, three) else {
            return Ok(None);
        };
        let _ = classes;
        // scan conjugates of v in canonical order
        let mut scratch = self.group.scratch();
        for g in 0..self.group.order() as u32 {
            let w = self.group.conjugate_idx_with(v, g, &mut scratch);
            if let Some(cand) = Subgroup::closure_bounded(&self.group, &[u, w], order) {
                if cand.order() == order && cand.spectrum(&self.group) == spec_set {
                    return Ok(Some(cand));
                }
            }
        }
        Ok(None)
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}
