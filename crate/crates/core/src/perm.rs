//! Permutations of `{0..n-1}` in one-line image notation.
//!
//! Composition follows the functional convention `(f·g)(x) = f(g(x))`, so the
//! product of two permutations applies the right factor first.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// Builds a permutation from its images, returning `None` unless `images`
    /// is a bijection of `{0..images.len()-1}`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        if is_bijection(&images) {
            Some(Perm(images))
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self · other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.len(), other.len());
        Perm(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// True iff `images` is a permutation of `{0..images.len()-1}`.
pub fn is_bijection(images: &[usize]) -> bool {
    let mut seen = vec![false; images.len()];
    for &x in images {
        if x >= images.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}
