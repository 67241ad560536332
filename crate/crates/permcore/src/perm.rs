//! Permutations on `0..n`, acting on the right: points are written
//! `i^p = p.apply(i)`, and `p * q` means "apply p, then q".

use std::fmt;
use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq, Clone)]
pub enum PermError {
    #[error("images are not a bijection of 0..{0}")]
    NotABijection(usize),
    #[error("point {0} out of range for degree {1}")]
    PointOutOfRange(usize, usize),
    #[error("cycles overlap at point {0}")]
    OverlappingCycles(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
}

/// A permutation of `{0, ..., n-1}` stored by its image sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Box<[u16]>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n as u16).collect(),
        }
    }

    pub fn from_images(images: Vec<u16>) -> Result<Perm, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &im in &images {
            if (im as usize) >= n || seen[im as usize] {
                return Err(PermError::NotABijection(n));
            }
            seen[im as usize] = true;
        }
        Ok(Perm {
            images: images.into_boxed_slice(),
        })
    }

    /// From disjoint cycles over 0-based points.
    pub fn from_cycles(n: usize, cycles: &[Vec<u16>]) -> Result<Perm, PermError> {
        let mut images: Vec<u16> = (0..n as u16).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for w in 0..cycle.len() {
                let a = cycle[w] as usize;
                let b = cycle[(w + 1) % cycle.len()] as usize;
                if a >= n || b >= n {
                    return Err(PermError::PointOutOfRange(a.max(b), n));
                }
                if touched[a] {
                    return Err(PermError::OverlappingCycles(a));
                }
                touched[a] = true;
                images[a] = b as u16;
            }
        }
        Ok(Perm {
            images: images.into_boxed_slice(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u16) -> u16 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im as usize)
    }

    /// `self * other`: apply self first, then other.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&im| other.images[im as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.degree()];
        for (i, &im) in self.images.iter().enumerate() {
            inv[im as usize] = i as u16;
        }
        Perm {
            images: inv.into_boxed_slice(),
        }
    }

    /// `self^g = g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        let ginv = g.inverse();
        let mut images = vec![0u16; self.degree()];
        for i in 0..self.degree() as u16 {
            images[i as usize] = g.apply(self.apply(ginv.apply(i)));
        }
        Perm {
            images: images.into_boxed_slice(),
        }
    }

    /// Cycle lengths in decreasing order (including fixed points as 1s).
    pub fn cycle_lengths(&self) -> Vec<u32> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                len += 1;
                cur = self.images[cur] as usize;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// Nontrivial cycles, each rotated so its least point is first,
    /// sorted by least point.
    pub fn cycles(&self) -> Vec<Vec<u16>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cyc.push(cur as u16);
                cur = self.images[cur] as usize;
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    /// Order = lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_lengths()
            .into_iter()
            .fold(1u64, |acc, len| lcm(acc, len as u64))
    }

    pub fn is_even(&self) -> bool {
        let moved_cycles = self.cycles();
        let transpositions: usize = moved_cycles.iter().map(|c| c.len() - 1).sum();
        transpositions % 2 == 0
    }

    pub fn fixed_point_count(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &im)| *i == im as usize)
            .count()
    }

    /// Restrict to an invariant subset of points, renumbering them in
    /// increasing order. The subset must be setwise invariant.
    pub fn restrict(&self, points: &[u16]) -> Result<Perm, PermError> {
        let mut pos = vec![u16::MAX; self.degree()];
        for (k, &p) in points.iter().enumerate() {
            pos[p as usize] = k as u16;
        }
        let mut images = Vec::with_capacity(points.len());
        for &p in points {
            let im = self.apply(p);
            if pos[im as usize] == u16::MAX {
                return Err(PermError::PointOutOfRange(im as usize, points.len()));
            }
            images.push(pos[im as usize]);
        }
        Perm::from_images(images)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({self})")
    }
}

impl fmt::Display for Perm {
    /// Cycle notation over 1-based points, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cyc in cycles {
            write!(f, "(")?;
            for (k, &p) in cyc.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_then_inverse_is_identity() {
        let p = Perm::from_cycles(5, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.order(), 6);
        assert_eq!(p.cycle_lengths(), vec![3, 2]);
    }

    #[test]
    fn right_action_convention() {
        // p = (0 1), q = (1 2): p*q sends 0 -> 1 -> 2
        let p = Perm::from_cycles(3, &[vec![0, 1]]).unwrap();
        let q = Perm::from_cycles(3, &[vec![1, 2]]).unwrap();
        assert_eq!(p.compose(&q).apply(0), 2);
        // conjugation relabels points: (0 1)^(0 2) = (2 1)
        let g = Perm::from_cycles(3, &[vec![0, 2]]).unwrap();
        let c = p.conjugate_by(&g);
        assert_eq!(c, Perm::from_cycles(3, &[vec![1, 2]]).unwrap());
    }

    #[test]
    fn parity() {
        assert!(Perm::from_cycles(4, &[vec![0, 1, 2]]).unwrap().is_even());
        assert!(!Perm::from_cycles(4, &[vec![0, 1]]).unwrap().is_even());
        assert!(Perm::identity(4).is_even());
    }

    #[test]
    fn bad_inputs_rejected() {
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn display_cycles() {
        let p = Perm::from_cycles(5, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
        assert_eq!(Perm::identity(3).to_string(), "()");
    }
}
