//! Finite set-theoretic solutions `(X, r)` of the Yang–Baxter equation.
//!
//! `X` is always `{0..n-1}`. The braid relation is checked as
//! `r12 r23 r12 = r23 r12 r23` with the rightmost factor applied first, where
//! `r12(a, b, c) = (r(a, b), c)` and `r23(a, b, c) = (a, r(b, c))`.

use crate::error::{Error, Result};
use crate::perm::{is_bijection, Perm};

/// A bijection `r` of `X × X` for `X = {0..n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SolutionTable {
    n: usize,
    /// `images[i * n + j] = k * n + l` encodes `r(i, j) = (k, l)`.
    images: Vec<usize>,
}

/// The component maps of `r(x, y) = (sigma[x](y), tau[y](x))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalMaps {
    pub sigma: Vec<Vec<usize>>,
    pub tau: Vec<Vec<usize>>,
}

/// A triple on which the two sides of the braid relation differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWitness {
    pub triple: [usize; 3],
    pub left: [usize; 3],
    pub right: [usize; 3],
}

impl SolutionTable {
    /// `pairs[i * n + j]` is the image of `(i, j)`.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if pairs.len() != n * n {
            return Err(Error::Dimension { expected: n * n, got: pairs.len() });
        }
        let mut images = Vec::with_capacity(n * n);
        for (pos, &(k, l)) in pairs.iter().enumerate() {
            if k >= n || l >= n {
                return Err(Error::EntryOutOfRange { position: pos, value: k.max(l), n });
            }
            images.push(k * n + l);
        }
        let mut seen = vec![false; n * n];
        for &img in &images {
            if seen[img] {
                return Err(Error::NotBijective(img / n, img % n));
            }
            seen[img] = true;
        }
        Ok(SolutionTable { n, images })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> (usize, usize)) -> Result<Self> {
        let pairs: Vec<_> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| f(i, j)).collect();
        Self::new(n, &pairs)
    }

    /// Builds from already-encoded pair indices; caller guarantees bijectivity.
    pub(crate) fn from_encoded(n: usize, images: Vec<usize>) -> Self {
        debug_assert!(is_bijection(&images));
        SolutionTable { n, images }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        let img = self.images[x * self.n + y];
        (img / self.n, img % self.n)
    }

    pub fn pairs(&self) -> impl Iterator<Item = ((usize, usize), (usize, usize))> + '_ {
        let n = self.n;
        (0..n * n).map(move |p| ((p / n, p % n), self.apply(p / n, p % n)))
    }

    pub fn extract_diagonal(&self) -> DiagonalMaps {
        let n = self.n;
        let mut sigma = vec![vec![0; n]; n];
        let mut tau = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                let (u, v) = self.apply(x, y);
                sigma[x][y] = u;
                tau[y][x] = v;
            }
        }
        DiagonalMaps { sigma, tau }
    }

    fn braid_sides(&self, a: usize, b: usize, c: usize) -> ([usize; 3], [usize; 3]) {
        let r12 = |[a, b, c]: [usize; 3]| {
            let (x, y) = self.apply(a, b);
            [x, y, c]
        };
        let r23 = |[a, b, c]: [usize; 3]| {
            let (y, z) = self.apply(b, c);
            [a, y, z]
        };
        let t = [a, b, c];
        (r12(r23(r12(t))), r23(r12(r23(t))))
    }

    /// First triple (lexicographically) violating the braid relation.
    pub fn braid_witness(&self) -> Option<BraidWitness> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (left, right) = self.braid_sides(a, b, c);
                    if left != right {
                        return Some(BraidWitness { triple: [a, b, c], left, right });
                    }
                }
            }
        }
        None
    }

    pub fn is_ybe(&self) -> bool {
        self.braid_witness().is_none()
    }

    pub fn is_nondegenerate(&self) -> bool {
        let d = self.extract_diagonal();
        d.sigma.iter().chain(d.tau.iter()).all(|m| is_bijection(m))
    }

    pub fn is_involutive(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &img)| self.images[img] == p)
    }

    /// Conjugates the table by `p × p`: the result maps `(p(x), p(y))` to
    /// `(p × p)(r(x, y))`.
    pub fn relabel(&self, p: &Perm) -> SolutionTable {
        let n = self.n;
        let mut images = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let (u, v) = self.apply(x, y);
                images[p.apply(x) * n + p.apply(y)] = p.apply(u) * n + p.apply(v);
            }
        }
        SolutionTable { n, images }
    }
}

impl DiagonalMaps {
    /// Reassembles `r(x, y) = (sigma[x](y), tau[y](x))`.
    pub fn reassemble(&self) -> Result<SolutionTable> {
        let n = self.sigma.len();
        SolutionTable::from_fn(n, |x, y| (self.sigma[x][y], self.tau[y][x]))
    }

    pub fn sigma_perm(&self, x: usize) -> Option<Perm> {
        Perm::from_images(self.sigma[x].clone())
    }

    pub fn tau_perm(&self, y: usize) -> Option<Perm> {
        Perm::from_images(self.tau[y].clone())
    }
}

/// The flip `r(x, y) = (y, x)`.
pub fn make_flip(n: usize) -> Result<SolutionTable> {
    SolutionTable::from_fn(n, |x, y| (y, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn shift(n: usize) -> SolutionTable {
        SolutionTable::from_fn(n, |x, y| ((y + 1) % n, (x + 1) % n)).unwrap()
    }

    fn identity_table(n: usize) -> SolutionTable {
        SolutionTable::from_fn(n, |x, y| (x, y)).unwrap()
    }

    /// Swaps (0,0) and (0,1), fixes (1,0) and (1,1).
    fn swap_table() -> SolutionTable {
        SolutionTable::new(2, &[(0, 1), (0, 0), (1, 0), (1, 1)]).unwrap()
    }

    #[test]
    fn diagonal_of_flip_is_identity() {
        let d = make_flip(2).unwrap().extract_diagonal();
        for x in 0..2 {
            assert_eq!(d.sigma[x], vec![0, 1]);
            assert_eq!(d.tau[x], vec![0, 1]);
        }
    }

    #[test]
    fn diagonal_of_shift_is_transposition() {
        let d = shift(2).extract_diagonal();
        for x in 0..2 {
            assert_eq!(d.sigma[x], vec![1, 0]);
            assert_eq!(d.tau[x], vec![1, 0]);
        }
    }

    #[test]
    fn diagonal_of_identity_table_is_constant() {
        let d = identity_table(2).extract_diagonal();
        assert_eq!(d.sigma[0], vec![0, 0]);
        assert_eq!(d.sigma[1], vec![1, 1]);
        assert!(d.sigma_perm(0).is_none());
    }

    #[test]
    fn ybe_examples() {
        for n in 1..=4 {
            assert!(make_flip(n).unwrap().is_ybe());
            assert!(identity_table(n).is_ybe());
        }
        let w = swap_table().braid_witness().expect("not a solution");
        assert_eq!(w.triple, [0, 0, 0]);
        assert_eq!(w.left, [0, 0, 0]);
        assert_eq!(w.right, [0, 1, 1]);
    }

    #[test]
    fn nondegeneracy_examples() {
        assert!(make_flip(3).unwrap().is_nondegenerate());
        assert!(!identity_table(2).is_nondegenerate());
        assert!(!swap_table().is_nondegenerate());
    }

    #[test]
    fn involutivity_examples() {
        assert!(make_flip(3).unwrap().is_involutive());
        assert!(!shift(3).is_involutive());
        assert!(shift(2).is_involutive());
    }

    #[test]
    fn flip_entries() {
        let f1 = make_flip(1).unwrap();
        assert_eq!(f1.apply(0, 0), (0, 0));
        let f2 = make_flip(2).unwrap();
        assert_eq!(f2.apply(0, 1), (1, 0));
        for n in 1..=4 {
            let f = make_flip(n).unwrap();
            assert!(f.is_ybe() && f.is_nondegenerate() && f.is_involutive());
        }
        assert_eq!(make_flip(0), Err(Error::EmptyCarrier));
    }

    #[test]
    fn rejects_non_bijective_tables() {
        let err = SolutionTable::new(2, &[(0, 0), (0, 0), (1, 0), (1, 1)]).unwrap_err();
        assert_eq!(err, Error::NotBijective(0, 0));
    }

    fn arb_solution_table() -> impl Strategy<Value = SolutionTable> {
        (1usize..=3).prop_flat_map(|n| {
            Just((0..n * n).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(move |images| SolutionTable { n, images })
        })
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Perm> {
        Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn diagonal_reassembles(sol in arb_solution_table()) {
            prop_assert_eq!(sol.extract_diagonal().reassemble().unwrap(), sol);
        }

        #[test]
        fn ybe_invariant_under_relabeling(
            (sol, p) in arb_solution_table().prop_flat_map(|s| { let n = s.size(); (Just(s), arb_perm(n)) })
        ) {
            let relabeled = sol.relabel(&p);
            prop_assert_eq!(sol.is_ybe(), relabeled.is_ybe());
            prop_assert_eq!(sol.is_nondegenerate(), relabeled.is_nondegenerate());
            prop_assert_eq!(sol.is_involutive(), relabeled.is_involutive());
        }
    }
}
