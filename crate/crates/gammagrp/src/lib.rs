//! The group Gamma = (F_q^+ : F_q^x) : <phi> of affine semilinear maps
//! of the line, as an abstract group of triples (a, lambda) phi^i with
//! the multiplication
//!
//! ```text
//! (a,l)phi^i (b,m)phi^j = (a + l^-1 b^(phi^-i), l m^(phi^-i)) phi^(i+j)
//! ```
//!
//! Gamma is deliberately kept abstract (never a permutation group) so
//! that element-wise work stays cheap up to q = 2^16; brute-force
//! class enumeration is available up to |Gamma| = q(q-1)f <= 10^6 and
//! is the oracle for every conjugacy predicate here.
//!
//! The conjugacy machinery mirrors the trace/norm criteria it
//! implements: elements (a,1)phi^i with equal traces are conjugated by
//! an additive Hilbert-90 witness; nonzero traces are first scaled
//! through the subfield torus; trace zero against trace nonzero is an
//! order obstruction. All returned conjugators are verified by
//! substitution.

use ffield::{FFElem, FieldCtx, FieldError};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GammaError {
    #[error("field error: {0}")]
    Field(#[from] FieldError),
    #[error("lambda must be nonzero")]
    ZeroLambda,
    #[error("element shape mismatch: {0}")]
    ShapeMismatch(&'static str),
    #[error("hypothesis violated: {0}")]
    Hypothesis(&'static str),
    #[error("|Gamma| = {0} exceeds the brute-force bound {1}")]
    TooLarge(u64, u64),
    #[error("no conjugator found (hypotheses not satisfied?)")]
    NoConjugator,
}

/// An element (a, lambda) phi^i of Gamma.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GammaElem {
    pub a: FFElem,
    pub lambda: FFElem,
    pub i: usize,
}

pub const CLASS_BOUND: u64 = 1_000_000;

/// Gamma over a fixed field context.
pub struct GammaCtx {
    field: FieldCtx,
}

impl GammaCtx {
    pub fn new(field: FieldCtx) -> GammaCtx {
        GammaCtx { field }
    }

    pub fn conway(p: u64, f: usize) -> Result<GammaCtx, GammaError> {
        Ok(GammaCtx {
            field: FieldCtx::conway(p, f)?,
        })
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn order(&self) -> u64 {
        let q = self.field.q();
        q * (q - 1) * self.field.f() as u64
    }

    pub fn make(&self, a: FFElem, lambda: FFElem, i: usize) -> Result<GammaElem, GammaError> {
        if self.field.is_zero(lambda) {
            return Err(GammaError::ZeroLambda);
        }
        Ok(GammaElem {
            a,
            lambda,
            i: i % self.field.f(),
        })
    }

    pub fn identity(&self) -> GammaElem {
        GammaElem {
            a: self.field.zero(),
            lambda: self.field.one(),
            i: 0,
        }
    }

    pub fn mul(&self, x: GammaElem, y: GammaElem) -> Result<GammaElem, GammaError> {
        let k = &self.field;
        let twist = k.frobenius(y.a, -(x.i as i64))?;
        let a = k.add(x.a, k.mul(k.inv(x.lambda)?, twist)?)?;
        let lambda = k.mul(x.lambda, k.frobenius(y.lambda, -(x.i as i64))?)?;
        Ok(GammaElem {
            a,
            lambda,
            i: (x.i + y.i) % k.f(),
        })
    }

    pub fn inv(&self, x: GammaElem) -> Result<GammaElem, GammaError> {
        let k = &self.field;
        let f = k.f();
        let j = (f - x.i % f) % f;
        // solve (x.a, x.lambda)phi^i (b, m)phi^j = identity
        let m = k.inv(k.frobenius(x.lambda, x.i as i64)?)?;
        let b = k.frobenius(k.neg(k.mul(x.lambda, x.a)?)?, x.i as i64)?;
        Ok(GammaElem { a: b, lambda: m, i: j })
    }

    /// x^g = g^-1 x g.
    pub fn conj(&self, x: GammaElem, g: GammaElem) -> Result<GammaElem, GammaError> {
        self.mul(self.mul(self.inv(g)?, x)?, g)
    }

    pub fn pow(&self, x: GammaElem, e: u64) -> Result<GammaElem, GammaError> {
        let mut acc = self.identity();
        let mut b = x;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b)?;
            }
            b = self.mul(b, b)?;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn order_of(&self, x: GammaElem) -> Result<u64, GammaError> {
        let mut cur = x;
        let mut n = 1u64;
        let id = self.identity();
        while cur != id {
            cur = self.mul(cur, x)?;
            n += 1;
            debug_assert!(n <= self.order());
        }
        Ok(n)
    }

    /// Iterate all elements in canonical order (i, lambda code, a code).
    pub fn elements(&self) -> impl Iterator<Item = GammaElem> + '_ {
        let k = &self.field;
        let q = k.q();
        (0..k.f()).flat_map(move |i| {
            (1..q).flat_map(move |l| {
                (0..q).map(move |a| GammaElem {
                    a: k.elem(a).unwrap(),
                    lambda: k.elem(l).unwrap(),
                    i,
                })
            })
        })
    }

    fn elem_index(&self, x: GammaElem) -> usize {
        let q = self.field.q();
        ((x.i as u64 * (q - 1) + (x.lambda.code() - 1)) * q + x.a.code()) as usize
    }

    /// Order of phi^i in the Galois group, with the degree q1 of its
    /// fixed field: q = q1^s.
    pub fn phi_order(&self, i: usize) -> (u64, usize) {
        let f = self.field.f();
        let i = i % f;
        if i == 0 {
            (1, f)
        } else {
            let d = gcd(i, f);
            ((f / d) as u64, d)
        }
    }

    /// Brute-force conjugacy classes of Gamma: class id per element
    /// index (see `elem_index`), plus canonical representatives.
    pub fn classes(&self) -> Result<GammaClasses, GammaError> {
        let n = self.order();
        if n > CLASS_BOUND {
            return Err(GammaError::TooLarge(n, CLASS_BOUND));
        }
        let k = &self.field;
        // group generators: an additive translation, a torus generator,
        // and the field automorphism
        let mut gens = vec![
            self.make(k.one(), k.one(), 0)?,
            self.make(k.zero(), k.multiplicative_generator(), 0)?,
        ];
        if k.f() > 1 {
            gens.push(self.make(k.zero(), k.one(), 1)?);
        }
        let mut class_of = vec![u32::MAX; n as usize];
        let mut reps = Vec::new();
        let mut stack = Vec::new();
        for x in self.elements() {
            let xi = self.elem_index(x);
            if class_of[xi] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(x);
            class_of[xi] = id;
            stack.push(x);
            while let Some(y) = stack.pop() {
                for &g in &gens {
                    let z = self.conj(y, g)?;
                    let zi = self.elem_index(z);
                    if class_of[zi] == u32::MAX {
                        class_of[zi] = id;
                        stack.push(z);
                    }
                }
            }
        }
        Ok(GammaClasses { class_of, reps })
    }

    /// Conjugacy of (a,1)phi and (b,1)phi in Gamma: the trace criterion
    /// Tr(a)Tr(b) != 0 or Tr(a) = Tr(b) = 0 (traces to the prime field).
    pub fn conj_frobenius_layer(&self, x: GammaElem, y: GammaElem) -> Result<bool, GammaError> {
        let k = &self.field;
        if x.i != 1 || y.i != 1 || x.lambda != k.one() || y.lambda != k.one() {
            return Err(GammaError::ShapeMismatch("expected (a,1)phi with lambda = 1, i = 1"));
        }
        let ta = k.rel_trace(x.a, 1)?;
        let tb = k.rel_trace(y.a, 1)?;
        Ok((!k.is_zero(ta) && !k.is_zero(tb)) || (k.is_zero(ta) && k.is_zero(tb)))
    }

    /// Case analysis for (a,1)phi^i vs (b,1)phi^i with s = |phi^i| and
    /// q = q1^s:
    /// equal traces to F_q1 give an additive conjugator in F_q^+;
    /// two nonzero traces give a conjugator in F_q^+ : F_q1^x;
    /// trace zero against trace nonzero forces different orders.
    pub fn conj_same_layer(&self, x: GammaElem, y: GammaElem) -> Result<LayerVerdict, GammaError> {
        let k = &self.field;
        if x.i != y.i || x.lambda != k.one() || y.lambda != k.one() {
            return Err(GammaError::ShapeMismatch("expected (a,1)phi^i and (b,1)phi^i, same i"));
        }
        let (_, d) = self.phi_order(x.i);
        let ta = k.rel_trace(x.a, d)?;
        let tb = k.rel_trace(y.a, d)?;
        if ta == tb {
            // additive Hilbert 90 on b - a
            let c = k.hilbert90_additive(k.sub(y.a, x.a)?, x.i as i64)?;
            let g = self.make(c, k.one(), 0)?;
            let check = self.conj(x, g)?;
            debug_assert_eq!(check, y);
            if check != y {
                return Err(GammaError::NoConjugator);
            }
            return Ok(LayerVerdict::Conjugate { by: g });
        }
        if !k.is_zero(ta) && !k.is_zero(tb) {
            // scale through the subfield torus, then the additive step
            let lam = k.div(tb, ta)?;
            debug_assert!(k.subfield_membership(lam, d)?);
            let scale = self.make(k.zero(), lam, 0)?;
            let mid = self.conj(x, scale)?;
            // mid = (lam*a, 1)phi^i has the same trace as y
            match self.conj_same_layer(mid, y)? {
                LayerVerdict::Conjugate { by } => {
                    let g = self.mul(scale, by)?;
                    let check = self.conj(x, g)?;
                    if check != y {
                        return Err(GammaError::NoConjugator);
                    }
                    Ok(LayerVerdict::Conjugate { by: g })
                }
                _ => Err(GammaError::NoConjugator),
            }
        } else {
            // exactly one trace vanishes: witness the order gap
            let ox = self.order_of(x)?;
            let oy = self.order_of(y)?;
            debug_assert_ne!(ox, oy);
            Ok(LayerVerdict::OrderObstruction { orders: (ox, oy) })
        }
    }

    /// Reduce (a,1)phi^i to (b,1)phi^i with b in the subfield GF(q0),
    /// q = q0^r with r prime, under the hypothesis r does not divide s
    /// or r != p. The witness lies in F_q^+ : F_q^x.
    pub fn subfield_reduce(&self, x: GammaElem, f0: usize) -> Result<(GammaElem, GammaElem), GammaError> {
        let k = &self.field;
        if x.lambda != k.one() {
            return Err(GammaError::ShapeMismatch("expected (a,1)phi^i"));
        }
        let f = k.f();
        if f0 == 0 || f % f0 != 0 {
            return Err(GammaError::Hypothesis("q0 does not define a subfield"));
        }
        let r = f / f0;
        if !is_prime(r as u64) {
            return Err(GammaError::Hypothesis("index of the subfield must be prime"));
        }
        let (s, d) = self.phi_order(x.i);
        if r as u64 == k.p() && s % r as u64 == 0 {
            return Err(GammaError::Hypothesis("r = p and r | s: subfield reduction unavailable"));
        }
        let ta = k.rel_trace(x.a, d)?;
        let target_a = if k.is_zero(ta) {
            k.zero()
        } else {
            // some b in GF(q0) has nonzero trace: under the hypothesis
            // the trace image of the subfield is GF(q1) meet GF(q0),
            // which is not {0}; scan in code order for determinism
            k.elements()
                .find(|&b| {
                    k.subfield_membership(b, f0).unwrap()
                        && !k.is_zero(k.rel_trace(b, d).unwrap())
                })
                .ok_or(GammaError::Hypothesis("no subfield element of nonzero trace"))?
        };
        let y = self.make(target_a, k.one(), x.i)?;
        match self.conj_same_layer(x, y)? {
            LayerVerdict::Conjugate { by } => {
                let check = self.conj(x, by)?;
                if check != y {
                    return Err(GammaError::NoConjugator);
                }
                Ok((y, by))
            }
            _ => Err(GammaError::NoConjugator),
        }
    }
}

/// Outcome of the same-layer conjugacy analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LayerVerdict {
    Conjugate { by: GammaElem },
    OrderObstruction { orders: (u64, u64) },
}

pub struct GammaClasses {
    class_of: Vec<u32>,
    pub reps: Vec<GammaElem>,
}

impl GammaClasses {
    pub fn class_count(&self) -> usize {
        self.reps.len()
    }
}

impl GammaCtx {
    pub fn class_id(&self, classes: &GammaClasses, x: GammaElem) -> u32 {
        classes.class_of[self.elem_index(x)]
    }
}

/// An explicitly enumerated subgroup of Gamma.
pub struct GammaSubgroup {
    pub elements: Vec<GammaElem>,
    members: std::collections::HashSet<GammaElem>,
}

impl GammaSubgroup {
    pub fn closure(ctx: &GammaCtx, gens: &[GammaElem]) -> Result<GammaSubgroup, GammaError> {
        let mut members = std::collections::HashSet::new();
        members.insert(ctx.identity());
        let mut frontier = vec![ctx.identity()];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = ctx.mul(x, g)?;
                if members.insert(y) {
                    if members.len() as u64 > CLASS_BOUND {
                        return Err(GammaError::TooLarge(members.len() as u64, CLASS_BOUND));
                    }
                    frontier.push(y);
                }
            }
        }
        let mut elements: Vec<GammaElem> = members.iter().copied().collect();
        elements.sort_by_key(|e| (e.i, e.lambda, e.a));
        Ok(GammaSubgroup { elements, members })
    }

    pub fn whole(ctx: &GammaCtx) -> Result<GammaSubgroup, GammaError> {
        let k = ctx.field();
        let mut gens = vec![
            ctx.make(k.one(), k.one(), 0)?,
            ctx.make(k.zero(), k.multiplicative_generator(), 0)?,
        ];
        if k.f() > 1 {
            gens.push(ctx.make(k.zero(), k.one(), 1)?);
        }
        Self::closure(ctx, &gens)
    }

    pub fn contains(&self, x: GammaElem) -> bool {
        self.members.contains(&x)
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    /// Does this subgroup contain F_q^+ : <phi>_p (a Sylow p-subgroup
    /// of Gamma)?
    pub fn contains_sylow_p_of_gamma(&self, ctx: &GammaCtx) -> Result<bool, GammaError> {
        let k = ctx.field();
        for code in 0..k.q() {
            let t = ctx.make(k.elem(code)?, k.one(), 0)?;
            if !self.contains(t) {
                return Ok(false);
            }
        }
        // <phi>_p is generated by phi^(f_{p'})
        let f = k.f() as u64;
        let p = k.p();
        let mut fp = 1u64;
        let mut rest = f;
        while rest % p == 0 {
            fp *= p;
            rest /= p;
        }
        if fp == 1 {
            return Ok(true);
        }
        let gen = ctx.make(k.zero(), k.one(), rest as usize)?;
        Ok(self.contains(gen))
    }
}

impl GammaCtx {
    /// Reduce x (with <x> meeting F_q^+ trivially) to an element of
    /// X meet (F_q^x : <phi>), conjugating inside X. X must contain
    /// F_q^+ : <phi>_p. Follows the Sylow/Hall argument constructively:
    /// a multiplicative Hilbert-90 step aligns the p-part of x onto a
    /// pure phi power, an additive step kills its translation part, and
    /// a twisted-linear solve moves the p'-part into the torus. A
    /// search over X backs up any step the closed forms cannot reach.
    pub fn reduce_to_torus(
        &self,
        x_sub: &GammaSubgroup,
        x: GammaElem,
    ) -> Result<(GammaElem, GammaElem), GammaError> {
        let k = &self.field;
        if !x_sub.contains(x) {
            return Err(GammaError::Hypothesis("x is not in X"));
        }
        if !x_sub.contains_sylow_p_of_gamma(self)? {
            return Err(GammaError::Hypothesis("X does not contain F_q^+ : <phi>_p"));
        }
        // <x> meets F_q^+ trivially
        {
            let mut cur = x;
            let id = self.identity();
            while cur != id {
                if cur.i == 0 && cur.lambda == k.one() {
                    return Err(GammaError::Hypothesis("<x> meets F_q^+ nontrivially"));
                }
                cur = self.mul(cur, x)?;
            }
        }
        if let Some(pair) = self.reduce_to_torus_constructive(x)? {
            let (g, y) = pair;
            if x_sub.contains(g) && self.conj(x, g)? == y && y.a == k.zero() {
                return Ok((y, g));
            }
        }
        // exhaustive fallback inside X
        for &g in &x_sub.elements {
            let y = self.conj(x, g)?;
            if y.a == k.zero() {
                return Ok((y, g));
            }
        }
        Err(GammaError::NoConjugator)
    }

    /// The closed-form core of the torus reduction, usable on its own
    /// when the Sylow hypothesis bookkeeping is handled by the caller:
    /// returns (conjugator, image) with image translation-free, or None
    /// when a closed-form step has no solution.
    pub fn reduce_to_torus_constructive(
        &self,
        x: GammaElem,
    ) -> Result<Option<(GammaElem, GammaElem)>, GammaError> {
        let k = &self.field;
        // first try the direct translation-kill: conjugating by (d,1)
        // maps (a,l)phi^i to (a + l^-1 d^(phi^-i) - d, l) phi^i, so a
        // solvable twisted-linear equation finishes in one step and
        // leaves the torus part untouched (this is the only step needed
        // whenever <x> meets the translation subgroup trivially)
        if k.is_zero(x.a) {
            return Ok(Some((self.identity(), x)));
        }
        if let Some(d) = self.translation_kill(x, k.f())? {
            let g = self.make(d, k.one(), 0)?;
            let img = self.conj(x, g)?;
            debug_assert!(k.is_zero(img.a));
            return Ok(Some((g, img)));
        }
        let n = self.order_of(x)?;
        let p = k.p();
        let mut rest = n;
        while rest % p == 0 {
            rest /= p;
        }
        // y generates the Sylow p-part of <x>
        let y = self.pow(x, rest)?;
        let mut g_acc = self.identity();
        let mut xc = x;
        let mut yc = y;
        if yc != self.identity() {
            // step 1: strip the torus part of y via multiplicative H90
            if yc.lambda != k.one() {
                let lam_inv = k.inv(yc.lambda)?;
                let mu = match k.hilbert90_multiplicative(lam_inv, yc.i as i64) {
                    Ok(mu) => mu,
                    Err(_) => return Ok(None),
                };
                let g = self.make(k.zero(), mu, 0)?;
                yc = self.conj(yc, g)?;
                xc = self.conj(xc, g)?;
                g_acc = self.mul(g_acc, g)?;
                if yc.lambda != k.one() {
                    return Ok(None);
                }
            }
            // step 2: kill the translation part of y via additive H90
            if !k.is_zero(yc.a) {
                let c = match k.hilbert90_additive(k.neg(yc.a)?, yc.i as i64) {
                    Ok(c) => c,
                    Err(_) => return Ok(None),
                };
                let g = self.make(c, k.one(), 0)?;
                yc = self.conj(yc, g)?;
                xc = self.conj(xc, g)?;
                g_acc = self.mul(g_acc, g)?;
                if !k.is_zero(yc.a) || yc.lambda != k.one() {
                    return Ok(None);
                }
            }
        }
        // now y is a pure phi power (or trivial); move the p'-part of x
        // into the torus by solving the twisted linear equation
        // lambda^-1 d^(phi^-j) - d = -a over the centralizer subfield
        let (_, dfix) = self.phi_order(yc.i);
        let sub_deg = if yc == self.identity() { k.f() } else { dfix };
        if !k.is_zero(xc.a) {
            let d = match self.translation_kill(xc, sub_deg)? {
                Some(d) => d,
                None => return Ok(None),
            };
            let g = self.make(d, k.one(), 0)?;
            xc = self.conj(xc, g)?;
            g_acc = self.mul(g_acc, g)?;
        }
        if k.is_zero(xc.a) {
            Ok(Some((g_acc, xc)))
        } else {
            Ok(None)
        }
    }

    /// Find d in GF(p^sub_deg) with l^-1 d^(phi^-i) - d = -a for
    /// x = (a, l) phi^i, by a scan in code order.
    fn translation_kill(&self, x: GammaElem, sub_deg: usize) -> Result<Option<FFElem>, GammaError> {
        let k = &self.field;
        let target = k.neg(x.a)?;
        let linv = k.inv(x.lambda)?;
        for code in 0..k.q() {
            let d = k.elem(code)?;
            if sub_deg < k.f() && !k.subfield_membership(d, sub_deg)? {
                continue;
            }
            let lhs = k.sub(k.mul(linv, k.frobenius(d, -(x.i as i64))?)?, d)?;
            if lhs == target {
                return Ok(Some(d));
            }
        }
        Ok(None)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gamma(p: u64, f: usize) -> GammaCtx {
        GammaCtx::conway(p, f).unwrap()
    }

    #[test]
    fn group_axioms_small() {
        for (p, f) in [(2u64, 2usize), (2, 3)] {
            let g = gamma(p, f);
            let elems: Vec<GammaElem> = g.elements().collect();
            assert_eq!(elems.len() as u64, g.order());
            let id = g.identity();
            for &x in &elems {
                assert_eq!(g.mul(x, id).unwrap(), x);
                assert_eq!(g.mul(id, x).unwrap(), x);
                assert_eq!(g.mul(x, g.inv(x).unwrap()).unwrap(), id);
            }
            // associativity, exhaustive
            for &x in &elems {
                for &y in &elems {
                    for &z in &elems {
                        assert_eq!(
                            g.mul(g.mul(x, y).unwrap(), z).unwrap(),
                            g.mul(x, g.mul(y, z).unwrap()).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn gamma_orders() {
        assert_eq!(gamma(2, 2).order(), 24);
        assert_eq!(gamma(2, 3).order(), 168);
    }

    #[test]
    fn frobenius_layer_power_identity() {
        // ((a,1)phi^i)^s = (Tr_{q/q1}(a), 1)
        for (p, f) in [(2u64, 2usize), (2, 4), (3, 2), (2, 6)] {
            let g = gamma(p, f);
            let k = g.field();
            for i in 1..f {
                let (s, d) = g.phi_order(i);
                for a in k.elements() {
                    let x = g.make(a, k.one(), i).unwrap();
                    let xs = g.pow(x, s).unwrap();
                    assert_eq!(xs.i, 0);
                    assert_eq!(xs.lambda, k.one());
                    assert_eq!(xs.a, k.rel_trace(a, d).unwrap());
                }
            }
        }
    }

    #[test]
    fn q4_order_examples() {
        let g = gamma(2, 2);
        let k = g.field();
        let w = k.gen_x();
        // ((w,1)phi)^2 = (Tr w, 1) = (1,1): order 4
        let x = g.make(w, k.one(), 1).unwrap();
        let x2 = g.pow(x, 2).unwrap();
        assert_eq!(x2, g.make(k.one(), k.one(), 0).unwrap());
        assert_eq!(g.order_of(x).unwrap(), 4);
        // ((1,1)phi)^2 = (Tr 1, 1) = identity: order 2
        let y = g.make(k.one(), k.one(), 1).unwrap();
        assert_eq!(g.order_of(y).unwrap(), 2);
    }

    #[test]
    fn frobenius_layer_criterion_vs_brute_force() {
        let g = gamma(2, 2);
        let k = g.field();
        let classes = g.classes().unwrap();
        let w = k.gen_x();
        let w2 = k.frobenius(w, 1).unwrap();
        let mk = |a| g.make(a, k.one(), 1).unwrap();
        // a = b trivially conjugate
        assert!(g.conj_frobenius_layer(mk(w), mk(w)).unwrap());
        // Tr(w) = Tr(w^2) = 1: conjugate
        assert!(g.conj_frobenius_layer(mk(w), mk(w2)).unwrap());
        assert_eq!(g.class_id(&classes, mk(w)), g.class_id(&classes, mk(w2)));
        // Tr(1) = 0 vs Tr(w) = 1: not conjugate
        assert!(!g.conj_frobenius_layer(mk(k.one()), mk(w)).unwrap());
        assert_ne!(g.class_id(&classes, mk(k.one())), g.class_id(&classes, mk(w)));
    }

    #[test]
    fn same_layer_conjugators_verify() {
        // q = 16, i = 2 (s = 2, q1 = 4)
        let g = gamma(2, 4);
        let k = g.field();
        for a_code in 0..k.q() {
            for b_code in 0..k.q() {
                let a = k.elem(a_code).unwrap();
                let b = k.elem(b_code).unwrap();
                let x = g.make(a, k.one(), 2).unwrap();
                let y = g.make(b, k.one(), 2).unwrap();
                let ta = k.rel_trace(a, 2).unwrap();
                let tb = k.rel_trace(b, 2).unwrap();
                match g.conj_same_layer(x, y).unwrap() {
                    LayerVerdict::Conjugate { by } => {
                        assert_eq!(g.conj(x, by).unwrap(), y);
                        assert!(
                            ta == tb || (!k.is_zero(ta) && !k.is_zero(tb)),
                            "conjugate but trace pattern excludes it"
                        );
                    }
                    LayerVerdict::OrderObstruction { orders } => {
                        assert_ne!(orders.0, orders.1);
                        assert!(k.is_zero(ta) != k.is_zero(tb));
                    }
                }
            }
        }
    }

    #[test]
    fn subfield_reduce_valid_and_rejected() {
        // q = 64, q0 = 4, r = 3 != p = 2: any a reduces, verified
        let g = gamma(2, 6);
        let k = g.field();
        for i in [2usize, 3] {
            for a_code in [0u64, 5, 17, 40, 63] {
                let x = g.make(k.elem(a_code).unwrap(), k.one(), i).unwrap();
                let (y, by) = g.subfield_reduce(x, 2).unwrap();
                assert!(k.subfield_membership(y.a, 2).unwrap());
                assert_eq!(g.conj(x, by).unwrap(), y);
            }
        }
        // q = 16, q0 = 4: r = p = 2 and s even is rejected for i = 2
        let g16 = gamma(2, 4);
        let k16 = g16.field();
        let x = g16.make(k16.gen_x(), k16.one(), 2).unwrap();
        assert!(matches!(
            g16.subfield_reduce(x, 2),
            Err(GammaError::Hypothesis(_))
        ));
        // a already in the subfield is admissible output
        let g9 = gamma(3, 2);
        let k9 = g9.field();
        let x = g9.make(k9.one(), k9.one(), 1).unwrap();
        let (y, by) = g9.subfield_reduce(x, 1).unwrap();
        assert!(k9.subfield_membership(y.a, 1).unwrap());
        assert_eq!(g9.conj(x, by).unwrap(), y);
    }

    #[test]
    fn torus_reduction_in_full_gamma() {
        // q = 8, X = Gamma, x of order 7 with nonzero translation part
        let g = gamma(2, 3);
        let k = g.field();
        let x_sub = GammaSubgroup::whole(&g).unwrap();
        assert_eq!(x_sub.order(), 168);
        let mut checked = 0;
        for &x in &x_sub.elements {
            if x == g.identity() {
                continue;
            }
            // hypothesis: <x> meets F_q^+ trivially
            let meets = {
                let mut cur = x;
                let mut meets = false;
                while cur != g.identity() {
                    if cur.i == 0 && cur.lambda == k.one() {
                        meets = true;
                        break;
                    }
                    cur = g.mul(cur, x).unwrap();
                }
                meets
            };
            if meets {
                assert!(g.reduce_to_torus(&x_sub, x).is_err());
                continue;
            }
            let (y, by) = g.reduce_to_torus(&x_sub, x).unwrap();
            assert_eq!(g.conj(x, by).unwrap(), y);
            assert!(k.is_zero(y.a));
            checked += 1;
        }
        assert!(checked > 100);
    }

    #[test]
    fn torus_reduction_in_proper_subgroup() {
        // q = 16, X = F_q^+ : (F_q^x : <phi>_2) = full Gamma here since
        // f = 4 is a 2-power; use X = F_q^+ : (C5 : <phi>) instead
        let g = gamma(2, 4);
        let k = g.field();
        let gen = k.multiplicative_generator();
        let c5 = k.pow(gen, 3).unwrap(); // order 5
        let gens = vec![
            g.make(k.one(), k.one(), 0).unwrap(),
            g.make(k.zero(), c5, 0).unwrap(),
            g.make(k.zero(), k.one(), 1).unwrap(),
        ];
        let x_sub = GammaSubgroup::closure(&g, &gens).unwrap();
        assert_eq!(x_sub.order(), 16 * 5 * 4);
        for &x in &x_sub.elements {
            if x == g.identity() {
                continue;
            }
            let meets = {
                let mut cur = x;
                let mut m = false;
                while cur != g.identity() {
                    if cur.i == 0 && cur.lambda == k.one() {
                        m = true;
                        break;
                    }
                    cur = g.mul(cur, x).unwrap();
                }
                m
            };
            if meets {
                continue;
            }
            let (y, by) = g.reduce_to_torus(&x_sub, x).unwrap();
            assert!(x_sub.contains(by));
            assert_eq!(g.conj(x, by).unwrap(), y);
            assert!(k.is_zero(y.a));
        }
    }
}

