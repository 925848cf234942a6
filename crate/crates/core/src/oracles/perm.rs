//! Explicit permutations and a small multiplication-table model of `S_d`.
//!
//! Composition is right-to-left: `(a * b)(i) = a(b(i))`.

use std::fmt;

use crate::partitions::Partition;

/// A permutation of `{0, …, d-1}`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(d: usize) -> Self {
        Perm((0..d).collect())
    }

    /// Builds from an image array; `None` if it is not a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            if x >= d || std::mem::replace(&mut seen[x], true) {
                return None;
            }
        }
        Some(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycle lengths as a partition of `d`.
    pub fn cycle_type(&self) -> Partition {
        let d = self.0.len();
        let mut seen = vec![false; d];
        let mut lens = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }

    /// Lehmer-code rank in `0..d!` (lexicographic order of image arrays).
    pub fn rank(&self) -> usize {
        let d = self.0.len();
        let mut rank = 0;
        for i in 0..d {
            let smaller = self.0[i + 1..].iter().filter(|&&x| x < self.0[i]).count();
            rank = rank * (d - i) + smaller;
        }
        rank
    }

    pub fn unrank(d: usize, mut rank: usize) -> Perm {
        let mut digits = vec![0; d];
        for i in (0..d).rev() {
            let base = d - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<usize> = (0..d).collect();
        Perm(digits.into_iter().map(|k| pool.remove(k)).collect())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All permutations of `{0, …, d-1}` in rank order.
pub fn all_perms(d: usize) -> Vec<Perm> {
    let n: usize = (1..=d).product();
    (0..n).map(|r| Perm::unrank(d, r)).collect()
}

/// `S_d` with elements indexed by rank, a full multiplication table and the
/// conjugacy class of every element. Only built for small `d`.
pub struct SymmetricGroup {
    d: usize,
    elements: Vec<Perm>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    class: Vec<Partition>,
}

impl SymmetricGroup {
    /// Largest degree for which the `(d!)²` table is built.
    pub const MAX_TABLE_DEGREE: usize = 6;

    pub fn new(d: usize) -> Self {
        assert!(
            d <= Self::MAX_TABLE_DEGREE,
            "multiplication table for S_{d} is too large"
        );
        let elements = all_perms(d);
        let n = elements.len();
        let mut mul = vec![0u32; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                mul[i * n + j] = a.compose(b).rank() as u32;
            }
        }
        let inv = elements.iter().map(|p| p.inverse().rank() as u32).collect();
        let class = elements.iter().map(Perm::cycle_type).collect();
        SymmetricGroup {
            d,
            elements,
            mul,
            inv,
            class,
        }
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    /// Index of the identity (always rank 0).
    pub fn identity(&self) -> usize {
        0
    }

    /// Index of `a ∘ b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.elements.len() + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn class_of(&self, a: usize) -> &Partition {
        &self.class[a]
    }

    /// Indices of all elements of cycle type `delta`.
    pub fn class_members(&self, delta: &Partition) -> Vec<usize> {
        (0..self.order())
            .filter(|&i| &self.class[i] == delta)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_roundtrip() {
        for d in 0..=5 {
            for (r, p) in all_perms(d).iter().enumerate() {
                assert_eq!(p.rank(), r);
            }
        }
        assert!(Perm::unrank(3, 0).is_identity());
    }

    #[test]
    fn composition_is_right_to_left() {
        let a = Perm::from_images(vec![1, 0, 2]).unwrap();
        let b = Perm::from_images(vec![0, 2, 1]).unwrap();
        // (a∘b)(1) = a(b(1)) = a(2) = 2
        assert_eq!(a.compose(&b).apply(1), 2);
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn cycle_types() {
        assert_eq!(
            Perm::from_images(vec![1, 2, 0])
                .unwrap()
                .cycle_type()
                .parts(),
            &[3]
        );
        assert_eq!(
            Perm::from_images(vec![1, 0, 2])
                .unwrap()
                .cycle_type()
                .parts(),
            &[2, 1]
        );
        assert!(Perm::from_images(vec![0, 0]).is_none());
    }

    #[test]
    fn class_sizes_from_group() {
        let g = SymmetricGroup::new(4);
        for delta in crate::partitions::enumerate_partitions(4) {
            assert_eq!(g.class_members(&delta).len() as u64, delta.class_size());
        }
        for a in 0..g.order() {
            assert_eq!(g.mul(a, g.inv(a)), g.identity());
        }
    }
}
