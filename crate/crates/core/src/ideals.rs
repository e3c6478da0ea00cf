//! Sub-structures of a finite skew brace: left ideals, ideals, quotients,
//! socle, annihilator, `B⁽²⁾`, ascending series and conjugates.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;

use rayon::prelude::*;

use crate::brace::FiniteSkewBrace;
use crate::error::{Error, Result};

/// A subset of the carrier `{0..n-1}` of some brace.
///
/// Ordered by bit pattern: element `i` contributes bit `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementSubset {
    mask: Vec<bool>,
}

impl ElementSubset {
    pub fn empty(n: usize) -> Self {
        ElementSubset { mask: vec![false; n] }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_elements(n, [0])
    }

    pub fn full(n: usize) -> Self {
        ElementSubset { mask: vec![true; n] }
    }

    /// Elements `>= n` are ignored.
    pub fn from_elements(n: usize, elements: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for e in elements {
            if e < n {
                s.mask[e] = true;
            }
        }
        s
    }

    pub fn from_mask(mask: Vec<bool>) -> Self {
        ElementSubset { mask }
    }

    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        self.mask.get(e).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, e: usize) -> bool {
        !std::mem::replace(&mut self.mask[e], true)
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.elements().collect()
    }

    pub fn is_full(&self) -> bool {
        self.mask.iter().all(|&b| b)
    }

    pub fn is_zero(&self) -> bool {
        self.to_vec() == [0]
    }

    pub fn is_subset_of(&self, other: &ElementSubset) -> bool {
        self.elements().all(|e| other.contains(e))
    }

    pub fn intersection(&self, other: &ElementSubset) -> ElementSubset {
        ElementSubset { mask: self.mask.iter().zip(&other.mask).map(|(a, b)| *a && *b).collect() }
    }

    pub fn union(&self, other: &ElementSubset) -> ElementSubset {
        ElementSubset { mask: self.mask.iter().zip(&other.mask).map(|(a, b)| *a || *b).collect() }
    }
}

impl Ord for ElementSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.mask
            .len()
            .cmp(&other.mask.len())
            .then_with(|| self.mask.iter().rev().cmp(other.mask.iter().rev()))
    }
}

impl PartialOrd for ElementSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// An ascending chain of ideals starting at `{0}`, strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AscendingSeries {
    pub terms: Vec<ElementSubset>,
}

impl AscendingSeries {
    /// Number of strict steps after `{0}`.
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn last(&self) -> &ElementSubset {
        self.terms.last().expect("series starts at {0}")
    }

    pub fn reaches_whole(&self) -> bool {
        self.last().is_full()
    }
}

/// A quotient brace together with the projection from the parent.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub brace: FiniteSkewBrace,
    /// `projection[a]` is the class of `a`.
    pub projection: Vec<usize>,
    /// Smallest element of each class; `representatives[0] == 0`.
    pub representatives: Vec<usize>,
}

fn closed_under_add(b: &FiniteSkewBrace, s: &ElementSubset) -> bool {
    let elems = s.to_vec();
    elems.iter().all(|&x| elems.iter().all(|&y| s.contains(b.add(x, y))))
}

/// The additive subgroup generated by `seed` (finite, so closure under `+`
/// from 0 suffices).
pub fn additive_closure(b: &FiniteSkewBrace, seed: impl IntoIterator<Item = usize>) -> ElementSubset {
    let n = b.order();
    let mut set = ElementSubset::zero(n);
    let mut list = vec![0];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for s in seed {
        if set.insert(s) {
            list.push(s);
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        let snapshot = list.clone();
        for t in snapshot {
            for y in [b.add(x, t), b.add(t, x)] {
                if set.insert(y) {
                    list.push(y);
                    queue.push_back(y);
                }
            }
        }
    }
    set
}

pub fn is_left_ideal(b: &FiniteSkewBrace, s: &ElementSubset) -> bool {
    let n = b.order();
    if s.universe() != n || !s.contains(0) || !closed_under_add(b, s) {
        return false;
    }
    let ok = s.elements().all(|x| (0..n).all(|a| s.contains(b.lambda(a, x))));
    debug_assert!(!ok || s.elements().all(|x| s.elements().all(|y| s.contains(b.mul(x, y)))), "left ideal not multiplicatively closed");
    ok
}

pub fn is_ideal(b: &FiniteSkewBrace, s: &ElementSubset) -> bool {
    let n = b.order();
    is_left_ideal(b, s)
        && s.elements().all(|x| {
            (0..n).all(|g| s.contains(b.sub(b.add(g, x), g)) && s.contains(b.mul(b.mul(g, x), b.inv(g))))
        })
}

/// The smallest ideal containing `seed`.
pub fn ideal_closure(b: &FiniteSkewBrace, seed: &ElementSubset) -> ElementSubset {
    let n = b.order();
    let mut set = ElementSubset::zero(n);
    let mut list = vec![0];
    let mut queue: VecDeque<usize> = VecDeque::new();
    let push = |y: usize, set: &mut ElementSubset, list: &mut Vec<usize>, queue: &mut VecDeque<usize>| {
        if set.insert(y) {
            list.push(y);
            queue.push_back(y);
        }
    };
    for s in seed.elements() {
        push(s, &mut set, &mut list, &mut queue);
    }
    while let Some(x) = queue.pop_front() {
        let snapshot = list.clone();
        for t in snapshot {
            push(b.add(x, t), &mut set, &mut list, &mut queue);
            push(b.add(t, x), &mut set, &mut list, &mut queue);
        }
        for g in 0..n {
            push(b.lambda(g, x), &mut set, &mut list, &mut queue);
            push(b.sub(b.add(g, x), g), &mut set, &mut list, &mut queue);
            push(b.mul(b.mul(g, x), b.inv(g)), &mut set, &mut list, &mut queue);
            push(b.star(g, x), &mut set, &mut list, &mut queue);
            push(b.star(x, g), &mut set, &mut list, &mut queue);
        }
    }
    set
}

/// `B / I`. Classes are numbered by increasing smallest representative.
pub fn quotient(b: &FiniteSkewBrace, i: &ElementSubset) -> Result<Quotient> {
    if !is_ideal(b, i) {
        return Err(Error::NotAnIdeal);
    }
    let n = b.order();
    let mut projection = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for a in 0..n {
        if projection[a] != usize::MAX {
            continue;
        }
        let class = representatives.len();
        representatives.push(a);
        let additive: ElementSubset = ElementSubset::from_elements(n, i.elements().map(|x| b.add(a, x)));
        let multiplicative: ElementSubset = ElementSubset::from_elements(n, i.elements().map(|x| b.mul(a, x)));
        if additive != multiplicative {
            return Err(Error::Construction(format!("a + I ≠ a∘I at {a}")));
        }
        for e in additive.elements() {
            projection[e] = class;
        }
    }
    let m = representatives.len();
    let mut add = vec![0; m * m];
    let mut mul = vec![0; m * m];
    for p in 0..m {
        for q in 0..m {
            let (x, y) = (representatives[p], representatives[q]);
            add[p * m + q] = projection[b.add(x, y)];
            mul[p * m + q] = projection[b.mul(x, y)];
        }
    }
    let brace = FiniteSkewBrace::from_tables(m, add, mul)
        .map_err(|e| Error::Construction(format!("quotient failed verification: {e}")))?;
    Ok(Quotient { brace, projection, representatives })
}

impl Quotient {
    /// All elements of the parent projecting into `s`.
    pub fn preimage(&self, s: &ElementSubset) -> ElementSubset {
        ElementSubset::from_mask(self.projection.iter().map(|&c| s.contains(c)).collect())
    }
}

/// `Soc(B) = Ker(λ) ∩ Z(B, +)`.
pub fn socle(b: &FiniteSkewBrace) -> ElementSubset {
    let n = b.order();
    ElementSubset::from_mask(
        (0..n)
            .map(|a| (0..n).all(|x| b.lambda(a, x) == x && b.add(a, x) == b.add(x, a)))
            .collect(),
    )
}

/// `Ann(B) = Soc(B) ∩ Z(B, ∘)`.
pub fn annihilator(b: &FiniteSkewBrace) -> ElementSubset {
    let n = b.order();
    let soc = socle(b);
    ElementSubset::from_mask((0..n).map(|a| soc.contains(a) && (0..n).all(|x| b.mul(a, x) == b.mul(x, a))).collect())
}

/// `B⁽²⁾`: the additive subgroup generated by all `a ∗ c`.
pub fn derived_ideal(b: &FiniteSkewBrace) -> ElementSubset {
    let n = b.order();
    additive_closure(b, (0..n).flat_map(|a| (0..n).map(move |c| (a, c))).map(|(a, c)| b.star(a, c)))
}

fn upper_series(b: &FiniteSkewBrace, operator: fn(&FiniteSkewBrace) -> ElementSubset) -> AscendingSeries {
    let n = b.order();
    let mut terms = vec![ElementSubset::zero(n)];
    loop {
        let current = terms.last().expect("nonempty");
        let q = quotient(b, current).expect("series terms are ideals");
        let next = q.preimage(&operator(&q.brace));
        if &next == current {
            return AscendingSeries { terms };
        }
        terms.push(next);
    }
}

/// `Ann_0 = {0}`, `Ann_{k+1} / Ann_k = Ann(B / Ann_k)`, until stabilization.
pub fn upper_annihilator_series(b: &FiniteSkewBrace) -> AscendingSeries {
    upper_series(b, annihilator)
}

/// As [`upper_annihilator_series`] with `Soc` in place of `Ann`.
pub fn upper_socle_series(b: &FiniteSkewBrace) -> AscendingSeries {
    upper_series(b, socle)
}

pub fn is_annihilator_nilpotent(b: &FiniteSkewBrace) -> bool {
    upper_annihilator_series(b).reaches_whole()
}

/// How [`all_ideals`] finds candidates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealSearch {
    /// Subgroup enumeration up to order 12, closure joins beyond.
    Auto,
    /// Enumerate every additive subgroup and keep the ideals.
    Subgroups,
    /// Join ideal closures of single elements, starting from `{0}`.
    Closures,
}

/// Largest order for which [`IdealSearch::Auto`] enumerates subgroups.
pub const SUBGROUP_SEARCH_LIMIT: usize = 12;

/// Every ideal, sorted by bit pattern.
pub fn all_ideals(b: &FiniteSkewBrace, mode: IdealSearch) -> Vec<ElementSubset> {
    let n = b.order();
    let use_subgroups = match mode {
        IdealSearch::Auto => n <= SUBGROUP_SEARCH_LIMIT,
        IdealSearch::Subgroups => true,
        IdealSearch::Closures => false,
    };
    let join = |h: &ElementSubset, g: usize| -> ElementSubset {
        if use_subgroups {
            additive_closure(b, h.elements().chain([g]))
        } else {
            let mut seed = h.clone();
            seed.insert(g);
            ideal_closure(b, &seed)
        }
    };
    let start = ElementSubset::zero(n);
    let mut seen: HashSet<ElementSubset> = HashSet::from([start.clone()]);
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let next: Vec<ElementSubset> = frontier
            .par_iter()
            .flat_map_iter(|h| (0..n).filter(|&g| !h.contains(g)).map(|g| join(h, g)).collect::<Vec<_>>())
            .collect();
        frontier = next.into_iter().filter(|s| seen.insert(s.clone())).collect();
    }
    let mut ideals: Vec<ElementSubset> =
        seen.into_iter().filter(|s| !use_subgroups || is_ideal(b, s)).collect();
    ideals.sort();
    ideals
}

pub fn is_simple(b: &FiniteSkewBrace) -> bool {
    let n = b.order();
    all_ideals(b, IdealSearch::Auto) == [ElementSubset::zero(n), ElementSubset::full(n)]
}

/// All `g ∗ x`, `x ∗ g`, `g ∘ x ∘ g⁻¹` and `g + x − g`.
pub fn conjugates(b: &FiniteSkewBrace, x: usize) -> Result<ElementSubset> {
    let n = b.order();
    if x >= n {
        return Err(Error::ElementOutOfRange(x));
    }
    let mut set = ElementSubset::empty(n);
    for g in 0..n {
        set.insert(b.star(g, x));
        set.insert(b.star(x, g));
        set.insert(b.mul(b.mul(g, x), b.inv(g)));
        set.insert(b.sub(b.add(g, x), g));
    }
    Ok(set)
}

/// `k·x = x + … + x` (`k` terms); `0·x = 0`.
pub fn additive_multiple(b: &FiniteSkewBrace, k: usize, x: usize) -> usize {
    (0..k).fold(0, |acc, _| b.add(acc, x))
}

/// `{ k·s : s ∈ Soc(B) }`.
pub fn socle_multiples(b: &FiniteSkewBrace, k: usize) -> ElementSubset {
    let soc = socle(b);
    ElementSubset::from_elements(b.order(), soc.elements().map(|s| additive_multiple(b, k, s)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{make_almost_trivial, make_trivial};
    use crate::group::GroupTable;

    fn z(n: usize) -> FiniteSkewBrace {
        make_trivial(&GroupTable::cyclic(n).unwrap())
    }

    fn s3_almost() -> (GroupTable, FiniteSkewBrace) {
        let g = GroupTable::symmetric3();
        let b = make_almost_trivial(&g);
        (g, b)
    }

    fn three_cycles(g: &GroupTable) -> ElementSubset {
        ElementSubset::from_elements(6, (0..6).filter(|&a| g.element_order(a) != 2))
    }

    #[test]
    fn subset_order_is_bit_pattern() {
        let a = ElementSubset::from_elements(4, [0, 3]);
        let b = ElementSubset::from_elements(4, [0, 1, 2]);
        assert!(a > b);
        assert_eq!(a.to_string(), "{0, 3}");
    }

    #[test]
    fn left_ideal_examples() {
        for b in [z(4), s3_almost().1] {
            let n = b.order();
            assert!(is_left_ideal(&b, &ElementSubset::zero(n)));
            assert!(is_left_ideal(&b, &ElementSubset::full(n)));
            assert!(is_ideal(&b, &ElementSubset::zero(n)));
            assert!(is_ideal(&b, &ElementSubset::full(n)));
        }
        let half = ElementSubset::from_elements(4, [0, 2]);
        assert!(is_left_ideal(&z(4), &half));
        assert!(is_ideal(&z(4), &half));
        let (g, b) = s3_almost();
        let a3 = three_cycles(&g);
        assert_eq!(a3.len(), 3);
        assert!(is_left_ideal(&b, &a3));
        assert!(is_ideal(&b, &a3));
        // A transposition subgroup is additive but not λ-closed
        let t = (0..6).find(|&a| g.element_order(a) == 2).unwrap();
        assert!(!is_left_ideal(&b, &ElementSubset::from_elements(6, [0, t])));
    }

    #[test]
    fn closure_examples() {
        let b = z(5);
        assert_eq!(ideal_closure(&b, &ElementSubset::empty(5)), ElementSubset::zero(5));
        assert_eq!(ideal_closure(&b, &ElementSubset::zero(5)), ElementSubset::zero(5));
        assert_eq!(ideal_closure(&b, &ElementSubset::from_elements(5, [3])), ElementSubset::full(5));
        let (g, b) = s3_almost();
        let c = (0..6).find(|&a| g.element_order(a) == 3).unwrap();
        assert_eq!(ideal_closure(&b, &ElementSubset::from_elements(6, [c])), three_cycles(&g));
    }

    #[test]
    fn quotient_examples() {
        let b = z(4);
        let q = quotient(&b, &ElementSubset::full(4)).unwrap();
        assert_eq!(q.brace.order(), 1);
        let q = quotient(&b, &ElementSubset::zero(4)).unwrap();
        assert_eq!(q.brace, b);
        let (g, b) = s3_almost();
        let q = quotient(&b, &three_cycles(&g)).unwrap();
        assert_eq!(q.brace, z(2));
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(q.projection[b.add(x, y)], q.brace.add(q.projection[x], q.projection[y]));
                assert_eq!(q.projection[b.mul(x, y)], q.brace.mul(q.projection[x], q.projection[y]));
            }
        }
        let t = (0..6).find(|&a| g.element_order(a) == 2).unwrap();
        assert!(matches!(quotient(&b, &ElementSubset::from_elements(6, [0, t])), Err(Error::NotAnIdeal)));
    }

    #[test]
    fn socle_annihilator_derived() {
        let b = z(6);
        assert!(socle(&b).is_full());
        assert!(annihilator(&b).is_full());
        assert!(derived_ideal(&b).is_zero());
        let (g, b) = s3_almost();
        assert!(socle(&b).is_zero());
        assert!(annihilator(&b).is_zero());
        assert_eq!(derived_ideal(&b), three_cycles(&g));
        for s in [socle(&b), annihilator(&b), derived_ideal(&b)] {
            assert!(is_ideal(&b, &s));
        }
    }

    #[test]
    fn series_examples() {
        let series = upper_annihilator_series(&z(4));
        assert_eq!(series.terms, vec![ElementSubset::zero(4), ElementSubset::full(4)]);
        assert_eq!(series.length(), 1);
        let (_, b) = s3_almost();
        let series = upper_annihilator_series(&b);
        assert_eq!(series.terms, vec![ElementSubset::zero(6)]);
        assert!(!is_annihilator_nilpotent(&b));
        assert!(upper_socle_series(&b).terms.iter().all(|t| is_ideal(&b, t)));

        let d4 = GroupTable::dihedral(4);
        let b = make_trivial(&d4);
        let expected: Vec<ElementSubset> =
            d4.upper_central_series().into_iter().map(ElementSubset::from_mask).collect();
        assert_eq!(upper_annihilator_series(&b).terms, expected);
    }

    #[test]
    fn simplicity() {
        for p in [2, 3, 5, 7] {
            assert!(is_simple(&z(p)));
            assert!(is_annihilator_nilpotent(&z(p)));
        }
        assert!(!is_simple(&z(4)));
        assert!(!is_simple(&z(1)));
        let ideals = all_ideals(&z(4), IdealSearch::Auto);
        assert!(ideals.contains(&ElementSubset::from_elements(4, [0, 2])));
    }

    #[test]
    fn ideal_search_modes_agree() {
        let (_, b) = s3_almost();
        let d4 = make_almost_trivial(&GroupTable::dihedral(4));
        for b in [z(6), b, d4, z(12)] {
            assert_eq!(all_ideals(&b, IdealSearch::Subgroups), all_ideals(&b, IdealSearch::Closures));
        }
    }

    #[test]
    fn conjugate_examples() {
        let b = z(5);
        assert_eq!(conjugates(&b, 2).unwrap(), ElementSubset::from_elements(5, [0, 2]));
        assert_eq!(conjugates(&b, 0).unwrap(), ElementSubset::zero(5));
        let (g, b) = s3_almost();
        let t = (0..6).find(|&a| g.element_order(a) == 2).unwrap();
        let c = conjugates(&b, t).unwrap();
        assert!((0..6).filter(|&a| g.element_order(a) == 2).all(|a| c.contains(a)));
        assert_eq!(conjugates(&b, 0).unwrap(), ElementSubset::zero(6));
        assert!(conjugates(&b, 6).is_err());
    }

    #[test]
    fn socle_multiple_examples() {
        let b = z(4);
        assert_eq!(socle_multiples(&b, 1), socle(&b));
        assert_eq!(socle_multiples(&b, 2), ElementSubset::from_elements(4, [0, 2]));
        assert!(is_ideal(&b, &socle_multiples(&b, 3)));
    }
}
