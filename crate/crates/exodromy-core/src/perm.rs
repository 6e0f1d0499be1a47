//! Permutations in one-line (image array) form.

use alloc::vec::Vec;

/// A bijection on the points `0..degree`, stored as its image array:
/// `images[i]` is where point `i` goes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// Builds a permutation from an image array, checking bijectivity.
    pub fn new(images: Vec<usize>) -> Option<Perm> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return None;
            }
            seen[img] = true;
        }
        Some(Perm { images })
    }

    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// `self * other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: (0..self.degree())
                .map(|i| self.apply(other.apply(i)))
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = alloc::vec![0; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Perm { images }
    }

    /// Builds a permutation from disjoint cycles over `0..degree`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Option<Perm> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for window in 0..cycle.len() {
                let from = *cycle.get(window)?;
                let to = cycle[(window + 1) % cycle.len()];
                if from >= degree || to >= degree {
                    return None;
                }
                images[from] = to;
            }
        }
        Perm::new(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_lex_minimal() {
        // every non-identity permutation is lexicographically above the
        // identity, so sorting element lists puts the identity first
        let id = Perm::identity(4);
        let p = Perm::from_cycles(4, &[&[0, 1]]).unwrap();
        let q = Perm::from_cycles(4, &[&[2, 3]]).unwrap();
        assert!(id < p);
        assert!(id < q);
    }

    #[test]
    fn compose_and_inverse() {
        let p = Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let q = p.inverse();
        assert!(p.compose(&q).is_identity());
        assert_eq!(p.compose(&p).images(), q.images());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::new(alloc::vec![0, 0, 1]).is_none());
        assert!(Perm::new(alloc::vec![0, 3]).is_none());
    }
}
