//! The explicit fixer families inside the parabolic: the subgroups
//! written L^I, L^II, L^III (subfield-stabilizer cases), the
//! trace-zero unipotent group M, and the two even-q families (the full
//! parabolic core extended by the odd part of the field automorphisms,
//! and the unipotent-by-norm-one-torus group).
//!
//! Each family exists in two forms: as a [`Subgroup`] of an enumerated
//! group, selected by its Gamma-side characterization, and as a closed
//! list of semilinear elements for groups too large to enumerate
//! ("virtual" handling: elements and named subgroups multiply
//! correctly without a permutation table).

use crate::group::{psl2_order, split_prime_power, GroupSpec, Psl2};
use crate::semilinear::{ProjLine, Psl2Error, SemilinearElem};
use ffield::{FFElem, FieldCtx};
use gammagrp::GammaCtx;
use permcore::Subgroup;
use std::collections::HashSet;

/// Selector for the explicit families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// L^I = Q:(H meet (D:<phi>)), for q = q0^r, r an odd prime, r != p.
    LI { f0: usize },
    /// L^II = Q:(H meet (D:<phi>_{p'})), for r = p odd.
    LII { f0: usize },
    /// L^III = M:(H meet (D:<phi>)), for r = p.
    LIII { f0: usize },
    /// M alone: unipotents with trace-zero parameter, for r = p.
    TraceZeroM { f0: usize },
    /// (Q:D).<psi>_{2'}, for q even (torus-normalizer case).
    CaseA,
    /// Q:(C:<psi>) with |C| = 2^(f/2)+1, for q = q0^2 even and odd
    /// outer part (subfield case).
    CaseC,
}

impl Family {
    /// Check the parameter constraints of the named condition; returns
    /// the (p, f) split on success.
    pub fn check(&self, spec: &GroupSpec) -> Result<(u64, usize), Psl2Error> {
        let (p, f) = split_prime_power(spec.q)
            .ok_or_else(|| Psl2Error::Unsupported(format!("{} is not a prime power", spec.q)))?;
        let prime = |n: usize| n >= 2 && (2..n).all(|d| n % d != 0);
        match *self {
            Family::LI { f0 } => {
                if f0 == 0 || f % f0 != 0 {
                    return Err(Psl2Error::Unsupported("q0 must define a subfield".into()));
                }
                let r = f / f0;
                if !prime(r) || r % 2 == 0 || r as u64 == p {
                    return Err(Psl2Error::Unsupported(
                        "L^I requires q = q0^r with r an odd prime, r != p".into(),
                    ));
                }
            }
            Family::LII { f0 } | Family::LIII { f0 } | Family::TraceZeroM { f0 } => {
                if f0 == 0 || f % f0 != 0 {
                    return Err(Psl2Error::Unsupported("q0 must define a subfield".into()));
                }
                let r = f / f0;
                if r as u64 != p || p == 2 {
                    return Err(Psl2Error::Unsupported(
                        "L^II / L^III / M require q = q0^p with p odd".into(),
                    ));
                }
            }
            Family::CaseA => {
                if p != 2 {
                    return Err(Psl2Error::Unsupported("this family requires even q".into()));
                }
            }
            Family::CaseC => {
                if p != 2 || f % 2 != 0 {
                    return Err(Psl2Error::Unsupported(
                        "this family requires q = q0^2 even".into(),
                    ));
                }
                if spec.phi_part_order % 2 == 0 {
                    return Err(Psl2Error::Unsupported(
                        "this family requires odd outer part".into(),
                    ));
                }
            }
        }
        Ok((p, f))
    }

    /// Expected order of the family's meet with the socle.
    pub fn socle_order(&self, spec: &GroupSpec) -> Result<u64, Psl2Error> {
        let (p, f) = self.check(spec)?;
        let q = spec.q;
        let d2 = if q % 2 == 0 { 1 } else { 2 };
        Ok(match *self {
            Family::LI { f0 } | Family::LII { f0 } => {
                let q0 = p.pow(f0 as u32);
                q * ((q0 - 1) / d2)
            }
            Family::LIII { f0 } => {
                let q0 = p.pow(f0 as u32);
                p.pow((f - f / p as usize) as u32) * ((q0 - 1) / d2)
            }
            Family::TraceZeroM { .. } => p.pow((f - f / p as usize) as u32),
            Family::CaseA => q * (q - 1),
            Family::CaseC => {
                let q0 = 1u64 << (f / 2);
                q * (q0 + 1)
            }
        })
    }
}

/// Gamma-side membership test for the family, applied to elements of
/// the parabolic. The lambda slot of rho(g) carries the torus part,
/// the a slot the unipotent parameter, and i the Frobenius exponent;
/// each family is a condition on these three.
fn gamma_side_test(
    fam: Family,
    spec: &GroupSpec,
    field: &FieldCtx,
    a: FFElem,
    lambda: FFElem,
    i: usize,
) -> bool {
    let f = field.f();
    let d = spec.phi_part_order;
    let step = if d == 0 { f } else { f / d };
    let in_phi_subgroup = |i: usize, sub_step: usize| i % sub_step == 0;
    match fam {
        Family::LI { f0 } | Family::LII { f0 } => {
            let lam_ok = field.subfield_membership(lambda, f0).unwrap();
            let phi_ok = match fam {
                Family::LI { .. } => true,
                _ => {
                    // p'-part of the phi-part: exponents divisible by step * d_p
                    let p = field.p() as usize;
                    let mut dp = 1usize;
                    let mut rest = d;
                    while rest % p == 0 {
                        dp *= p;
                        rest /= p;
                    }
                    in_phi_subgroup(i, step * dp)
                }
            };
            let _ = a;
            lam_ok && phi_ok
        }
        Family::LIII { f0 } => {
            field.subfield_membership(lambda, f0).unwrap()
                && field.is_zero(field.rel_trace(a, f0).unwrap())
        }
        Family::TraceZeroM { f0 } => {
            lambda == field.one() && i == 0 && field.is_zero(field.rel_trace(a, f0).unwrap())
        }
        Family::CaseA => {
            // odd part of the phi-part of the outer group
            let mut d2 = 1usize;
            let mut rest = d;
            while rest % 2 == 0 {
                d2 *= 2;
                rest /= 2;
            }
            in_phi_subgroup(i, step * d2)
        }
        Family::CaseC => {
            let q0 = 1u64 << (f / 2);
            let lam_ok = field.is_zero(lambda) == false && {
                let o = field.mult_order(lambda).unwrap();
                (q0 + 1) % o == 0
            };
            lam_ok
        }
    }
}

impl Psl2 {
    /// The family as a subgroup of the enumerated group: elements of
    /// the parabolic whose Gamma image satisfies the family condition.
    pub fn fixer_family(&self, fam: Family) -> Result<Subgroup, Psl2Error> {
        fam.check(&self.spec)?;
        let gamma = self.gamma_ctx();
        let parabolic = self.parabolic();
        let mut indices = Vec::new();
        for &x in &parabolic.indices {
            let e = self.group.element(x);
            let s = perm_to_semilinear(&self.line, &e)?;
            let g = s.to_gamma(&self.line, &gamma)?;
            if gamma_side_test(fam, &self.spec, &self.line.field, g.a, g.lambda, g.i) {
                indices.push(x);
            }
        }
        let sub = Subgroup { indices };
        debug_assert!(sub.is_subgroup(&self.group));
        Ok(sub)
    }
}

/// Recover the semilinear form of a permutation of the line that is
/// known to act semilinearly (i.e. lies in PGammaL2(q)): the Frobenius
/// exponent is detected by testing which twist makes the map
/// fractional-linear through three points.
pub fn perm_to_semilinear(line: &ProjLine, perm: &permcore::Perm) -> Result<SemilinearElem, Psl2Error> {
    let k = &line.field;
    for i in 0..k.f() {
        // candidate matrix from the images of 0, infinity and 1 under
        // the untwisted part
        let untwist = SemilinearElem::field_auto(line, (k.f() - i) % k.f()).to_perm(line);
        let twisted: Vec<u16> = (0..line.point_count() as u16)
            .map(|pt| perm.apply(untwist.apply(pt)))
            .collect();
        // twisted should now be x -> (a x + b) / (c x + d)
        if let Some(m) = moebius_from_images(line, &twisted) {
            if let Ok(cand) = SemilinearElem::new(line, m, i) {
                if &cand.to_perm(line) == perm {
                    return Ok(cand);
                }
            }
        }
    }
    Err(Psl2Error::Unsupported(
        "permutation is not a semilinear map of the line".into(),
    ))
}

/// Fit a fractional-linear map from its images of 0, 1 and infinity.
fn moebius_from_images(line: &ProjLine, images: &[u16]) -> Option<[FFElem; 4]> {
    let k = &line.field;
    let inf = line.infinity();
    let decode = |pt: u16| -> (FFElem, FFElem) {
        if pt == inf {
            (k.one(), k.zero())
        } else {
            (k.elem(pt as u64).unwrap(), k.one())
        }
    };
    let (x0, y0) = decode(images[0]); // image of 0: b/d
    let (xi, yi) = decode(images[inf as usize]); // image of inf: a/c
    let (x1, y1) = decode(images[1]); // image of 1: (a+b)/(c+d)
    // write a = xi*s, c = yi*s, b = x0*t, d = y0*t; solve the ratio s:t
    // from the image of 1: (xi s + x0 t) * (yi s + y0 t applied to 1...)
    // cross-multiplying: (xi s + x0 t) y1 = (yi s + y0 t) x1
    let lhs_s = k.mul(xi, y1).ok()?;
    let lhs_t = k.mul(x0, y1).ok()?;
    let rhs_s = k.mul(yi, x1).ok()?;
    let rhs_t = k.mul(y0, x1).ok()?;
    // s (lhs_s - rhs_s) = t (rhs_t - lhs_t)
    let cs = k.sub(lhs_s, rhs_s).ok()?;
    let ct = k.sub(rhs_t, lhs_t).ok()?;
    let (s, t) = if k.is_zero(cs) && k.is_zero(ct) {
        return None;
    } else if k.is_zero(cs) {
        (k.one(), k.zero())
    } else if k.is_zero(ct) {
        (k.zero(), k.one())
    } else {
        (ct, cs)
    };
    Some([
        k.mul(xi, s).ok()?,
        k.mul(x0, t).ok()?,
        k.mul(yi, s).ok()?,
        k.mul(y0, t).ok()?,
    ])
}

/// A group with socle PSL2(q) handled without enumeration: elements
/// and named subgroups are semilinear values that multiply correctly;
/// fixer verdicts for these go through the class-invariant route.
pub struct VirtualPsl2 {
    pub spec: GroupSpec,
    pub line: ProjLine,
}

impl VirtualPsl2 {
    pub fn new(spec: GroupSpec) -> Result<VirtualPsl2, Psl2Error> {
        let (p, f) = split_prime_power(spec.q)
            .ok_or_else(|| Psl2Error::Unsupported(format!("{} is not a prime power", spec.q)))?;
        if spec.include_delta && p == 2 {
            return Err(Psl2Error::Unsupported("delta is inner for even q".into()));
        }
        if f % spec.phi_part_order != 0 {
            return Err(Psl2Error::Unsupported("phi-part must divide f".into()));
        }
        let field = FieldCtx::conway(p, f)?;
        Ok(VirtualPsl2 {
            spec,
            line: ProjLine::new(field),
        })
    }

    pub fn order(&self) -> u64 {
        psl2_order(self.spec.q) * self.spec.outer_order(self.spec.q % 2 == 0)
    }

    pub fn gamma_ctx(&self) -> GammaCtx {
        GammaCtx::new(self.line.field.clone())
    }

    /// Enumerate a fixer family by closing its generators in
    /// semilinear space (families stay small even when the ambient
    /// group is huge).
    pub fn fixer_family_elements(&self, fam: Family) -> Result<Vec<SemilinearElem>, Psl2Error> {
        fam.check(&self.spec)?;
        let k = &self.line.field;
        let f = k.f();
        let d = self.spec.phi_part_order;
        let step = f / d.max(1);
        let mut gens: Vec<SemilinearElem> = Vec::new();
        let push_unipotent_basis = |gens: &mut Vec<SemilinearElem>, trace_zero_to: Option<usize>| {
            for code in 0..k.q() {
                let a = k.elem(code).unwrap();
                if k.is_zero(a) {
                    continue;
                }
                if let Some(f0) = trace_zero_to {
                    if !k.is_zero(k.rel_trace(a, f0).unwrap()) {
                        continue;
                    }
                }
                gens.push(SemilinearElem::unipotent(&self.line, a));
            }
        };
        let nu = k.multiplicative_generator();
        match fam {
            Family::LI { f0 } | Family::LII { f0 } => {
                push_unipotent_basis(&mut gens, None);
                // torus part over the subfield, restricted to the group
                let q0 = k.p().pow(f0 as u32);
                let nu0 = k.pow(nu, ((k.q() - 1) / (q0 - 1)) as i64)?;
                if k.q() % 2 == 0 || self.spec.include_delta {
                    gens.push(SemilinearElem::diagonal(&self.line, nu0, k.one())?);
                } else {
                    gens.push(SemilinearElem::diagonal(&self.line, nu0, k.inv(nu0)?)?);
                }
                let phi_step = if matches!(fam, Family::LII { .. }) {
                    let p = k.p() as usize;
                    let mut dp = 1usize;
                    let mut rest = d;
                    while rest % p == 0 {
                        dp *= p;
                        rest /= p;
                    }
                    step * dp
                } else {
                    step
                };
                if phi_step < f {
                    gens.push(SemilinearElem::field_auto(&self.line, phi_step));
                }
            }
            Family::LIII { f0 } | Family::TraceZeroM { f0 } => {
                push_unipotent_basis(&mut gens, Some(f0));
                if matches!(fam, Family::LIII { .. }) {
                    let q0 = k.p().pow(f0 as u32);
                    let nu0 = k.pow(nu, ((k.q() - 1) / (q0 - 1)) as i64)?;
                    if self.spec.include_delta {
                        gens.push(SemilinearElem::diagonal(&self.line, nu0, k.one())?);
                    } else {
                        gens.push(SemilinearElem::diagonal(&self.line, nu0, k.inv(nu0)?)?);
                    }
                    if step < f {
                        gens.push(SemilinearElem::field_auto(&self.line, step));
                    }
                }
            }
            Family::CaseA => {
                push_unipotent_basis(&mut gens, None);
                gens.push(SemilinearElem::diagonal(&self.line, nu, k.one())?);
                let mut d2 = 1usize;
                let mut rest = d;
                while rest % 2 == 0 {
                    d2 *= 2;
                    rest /= 2;
                }
                if step * d2 < f {
                    gens.push(SemilinearElem::field_auto(&self.line, step * d2));
                }
            }
            Family::CaseC => {
                push_unipotent_basis(&mut gens, None);
                let q0 = 1u64 << (f / 2);
                let c_gen = k.pow(nu, (q0 - 1) as i64)?;
                gens.push(SemilinearElem::diagonal(&self.line, c_gen, k.one())?);
                if step < f {
                    gens.push(SemilinearElem::field_auto(&self.line, step));
                }
            }
        }
        // closure in semilinear space
        let mut seen: HashSet<SemilinearElem> = HashSet::new();
        let id = SemilinearElem::identity(&self.line);
        seen.insert(id);
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = x.mul(&self.line, g);
                if seen.insert(y) {
                    frontier.push(y);
                }
            }
        }
        let mut out: Vec<SemilinearElem> = seen.into_iter().collect();
        out.sort_by_key(|e| (e.frob, e.m.map(|x| x.code())));
        Ok(out)
    }

    /// Membership in the subfield subgroup H = C_G(phi^f0): the matrix
    /// part is defined over GF(p^f0) modulo scalars.
    pub fn in_subfield_h(&self, e: &SemilinearElem, f0: usize) -> bool {
        let k = &self.line.field;
        e.m.iter().all(|&x| k.subfield_membership(x, f0).unwrap())
    }

    /// Membership in the torus-normalizer H = D:(<z> x <psi>): the
    /// matrix part is diagonal or antidiagonal modulo scalars.
    pub fn in_torus_normalizer_h(&self, e: &SemilinearElem) -> bool {
        let k = &self.line.field;
        (k.is_zero(e.m[1]) && k.is_zero(e.m[2])) || (k.is_zero(e.m[0]) && k.is_zero(e.m[3]))
    }
}
