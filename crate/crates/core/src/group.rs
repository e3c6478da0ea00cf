//! Finite groups given by Cayley tables.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::Perm;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupTable {
    n: usize,
    op: Vec<usize>,
    identity: usize,
}

impl GroupTable {
    /// Validates the group axioms by full table scan.
    pub fn new(n: usize, op: Vec<usize>, identity: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if op.len() != n * n {
            return Err(Error::Dimension { expected: n * n, got: op.len() });
        }
        if let Some(pos) = op.iter().position(|&v| v >= n) {
            return Err(Error::EntryOutOfRange { position: pos, value: op[pos], n });
        }
        if identity >= n {
            return Err(Error::ElementOutOfRange(identity));
        }
        let g = GroupTable { n, op, identity };
        if let Some(msg) = g.axiom_failure() {
            return Err(Error::NotAGroup(msg));
        }
        Ok(g)
    }

    pub(crate) fn new_unchecked(n: usize, op: Vec<usize>, identity: usize) -> Self {
        GroupTable { n, op, identity }
    }

    fn axiom_failure(&self) -> Option<String> {
        let n = self.n;
        let e = self.identity;
        for a in 0..n {
            if self.mul(e, a) != a || self.mul(a, e) != a {
                return Some(format!("{e} is not a two-sided identity at {a}"));
            }
        }
        for a in 0..n {
            if !(0..n).any(|b| self.mul(a, b) == e && self.mul(b, a) == e) {
                return Some(format!("{a} has no inverse"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some(format!("associativity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        None
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.op[a * self.n + b]
    }

    pub fn table(&self) -> &[usize] {
        &self.op
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.n).find(|&b| self.mul(a, b) == self.identity).expect("group element without inverse")
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Relabels by the bijection `p` (old index -> new index).
    pub fn relabel(&self, p: &Perm) -> GroupTable {
        let n = self.n;
        let mut op = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                op[p.apply(a) * n + p.apply(b)] = p.apply(self.mul(a, b));
            }
        }
        GroupTable { n, op, identity: p.apply(self.identity) }
    }

    /// Swaps labels so that the identity becomes element 0.
    pub fn with_identity_at_zero(&self) -> GroupTable {
        if self.identity == 0 {
            return self.clone();
        }
        let mut images: Vec<usize> = (0..self.n).collect();
        images.swap(0, self.identity);
        self.relabel(&Perm::from_images(images).expect("swap is a permutation"))
    }

    /// The opposite group `a ·ᵒᵖ b = b · a`.
    pub fn opposite(&self) -> GroupTable {
        let n = self.n;
        let op = (0..n * n).map(|p| self.mul(p % n, p / n)).collect();
        GroupTable { n, op, identity: self.identity }
    }

    /// The cyclic group `Z/n` under addition.
    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(n, (0..n * n).map(|p| (p / n + p % n) % n.max(1)).collect(), 0)
    }

    pub fn direct_product(&self, other: &GroupTable) -> GroupTable {
        let (n, m) = (self.n, other.n);
        let size = n * m;
        let mut op = vec![0; size * size];
        for a in 0..size {
            for b in 0..size {
                let (a1, a2) = (a / m, a % m);
                let (b1, b2) = (b / m, b % m);
                op[a * size + b] = self.mul(a1, b1) * m + other.mul(a2, b2);
            }
        }
        GroupTable { n: size, op, identity: self.identity * m + other.identity }
    }

    /// The permutation group generated by `generators`, as a Cayley table with
    /// identity 0 and elements numbered in breadth-first order.
    pub fn from_permutations(generators: &[Perm]) -> Result<Self> {
        let degree = generators.first().map(Perm::len).ok_or(Error::EmptyCarrier)?;
        let mut elements = vec![Perm::identity(degree)];
        let mut index: HashMap<Perm, usize> = HashMap::from([(elements[0].clone(), 0)]);
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head].clone();
            for g in generators {
                let next = current.compose(g);
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            head += 1;
        }
        let n = elements.len();
        let mut op = vec![0; n * n];
        for (a, pa) in elements.iter().enumerate() {
            for (b, pb) in elements.iter().enumerate() {
                op[a * n + b] = index[&pa.compose(pb)];
            }
        }
        Ok(GroupTable { n, op, identity: 0 })
    }

    pub fn symmetric3() -> Self {
        let s = Perm::from_images(vec![1, 0, 2]).expect("perm");
        let t = Perm::from_images(vec![1, 2, 0]).expect("perm");
        Self::from_permutations(&[s, t]).expect("S3")
    }

    /// Dihedral group of order `2k`, acting on a `k`-gon.
    pub fn dihedral(k: usize) -> Self {
        let rot = Perm::from_images((0..k).map(|i| (i + 1) % k).collect()).expect("perm");
        let refl = Perm::from_images((0..k).map(|i| (k - i) % k).collect()).expect("perm");
        Self::from_permutations(&[rot, refl]).expect("dihedral")
    }

    pub fn quaternion() -> Self {
        // Left-regular action on {±1, ±i, ±j, ±k} encoded as 0..8.
        // 0=1, 1=i, 2=j, 3=k, 4=-1, 5=-i, 6=-j, 7=-k
        let i = Perm::from_images(vec![1, 4, 3, 6, 5, 0, 7, 2]).expect("perm");
        let j = Perm::from_images(vec![2, 7, 4, 1, 6, 3, 0, 5]).expect("perm");
        Self::from_permutations(&[i, j]).expect("Q8")
    }

    pub fn center(&self) -> Vec<bool> {
        (0..self.n).map(|z| (0..self.n).all(|g| self.mul(z, g) == self.mul(g, z))).collect()
    }

    /// Upper central series `Z_0 = {e} ⊆ Z_1 ⊆ …` until stabilization, where
    /// `Z_{i+1} = { g : g x g⁻¹ x⁻¹ ∈ Z_i for all x }`.
    pub fn upper_central_series(&self) -> Vec<Vec<bool>> {
        let n = self.n;
        let mut current = vec![false; n];
        current[self.identity] = true;
        let mut series = vec![current.clone()];
        loop {
            let next: Vec<bool> = (0..n)
                .map(|g| {
                    (0..n).all(|x| {
                        let comm = self.mul(self.mul(g, x), self.mul(self.inverse(g), self.inverse(x)));
                        current[comm]
                    })
                })
                .collect();
            if next == current {
                return series;
            }
            series.push(next.clone());
            current = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_groups_have_expected_orders() {
        assert_eq!(GroupTable::symmetric3().order(), 6);
        assert_eq!(GroupTable::dihedral(4).order(), 8);
        assert_eq!(GroupTable::quaternion().order(), 8);
        assert!(!GroupTable::quaternion().is_abelian());
        let q = GroupTable::quaternion();
        assert_eq!((0..8).filter(|&a| q.element_order(a) == 4).count(), 6);
    }

    #[test]
    fn rejects_non_groups() {
        // x·y = x on two elements has no identity
        assert!(matches!(GroupTable::new(2, vec![0, 0, 1, 1], 0), Err(Error::NotAGroup(_))));
        assert!(matches!(GroupTable::new(2, vec![0, 1, 1], 0), Err(Error::Dimension { .. })));
    }

    #[test]
    fn identity_moves_to_zero() {
        let g = GroupTable::new(2, vec![1, 0, 0, 1], 1).unwrap();
        let h = g.with_identity_at_zero();
        assert_eq!(h.identity(), 0);
        assert_eq!(h.table(), &[0, 1, 1, 0]);
    }

    #[test]
    fn central_series_of_d4() {
        let d4 = GroupTable::dihedral(4);
        let series = d4.upper_central_series();
        let sizes: Vec<usize> = series.iter().map(|s| s.iter().filter(|&&b| b).count()).collect();
        assert_eq!(sizes, vec![1, 2, 8]);
        let s3 = GroupTable::symmetric3();
        assert_eq!(s3.upper_central_series().len(), 1);
    }
}
