//! Finite skew braces given by an addition table and a multiplication table on
//! `{0..n-1}`, with 0 the identity of both groups.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::perm::{is_bijection, Perm};
use crate::solution::SolutionTable;

/// A finite skew brace `(B, +, ∘)`.
///
/// The additive inverse, multiplicative inverse and the λ-table
/// `λ_a(b) = −a + a∘b` are cached at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSkewBrace {
    n: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    inv: Vec<usize>,
    lambda: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    AdditiveIdentity,
    AdditiveInverse,
    AdditiveAssociativity,
    SharedIdentity,
    MultiplicativeInverse,
    MultiplicativeAssociativity,
    SkewDistributivity,
    LambdaAutomorphism,
    LambdaHomomorphism,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::AdditiveIdentity => "additive identity",
            Axiom::AdditiveInverse => "additive inverse",
            Axiom::AdditiveAssociativity => "additive associativity",
            Axiom::SharedIdentity => "shared identity",
            Axiom::MultiplicativeInverse => "multiplicative inverse",
            Axiom::MultiplicativeAssociativity => "multiplicative associativity",
            Axiom::SkewDistributivity => "skew distributivity",
            Axiom::LambdaAutomorphism => "lambda automorphism",
            Axiom::LambdaHomomorphism => "lambda homomorphism",
        }
    }
}

/// One violated axiom with its lexicographically smallest witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.axiom.name(), self.detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn find_index(n: usize, pred: impl Fn(usize) -> bool) -> Option<usize> {
    (0..n).find(|&b| pred(b))
}

impl FiniteSkewBrace {
    /// Builds and verifies; any violated axiom is an error.
    pub fn from_tables(n: usize, add: Vec<usize>, mul: Vec<usize>) -> Result<Self> {
        let b = Self::unverified(n, add, mul)?;
        let report = b.verify();
        if report.passed() {
            Ok(b)
        } else {
            Err(Error::NotABrace(report.violations))
        }
    }

    /// Checks only table shape and entry ranges. The caches are filled on a
    /// best-effort basis; call [`FiniteSkewBrace::verify`] before relying on them.
    pub fn unverified(n: usize, add: Vec<usize>, mul: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        for table in [&add, &mul] {
            if table.len() != n * n {
                return Err(Error::Dimension { expected: n * n, got: table.len() });
            }
            if let Some(pos) = table.iter().position(|&v| v >= n) {
                return Err(Error::EntryOutOfRange { position: pos, value: table[pos], n });
            }
        }
        let neg: Vec<usize> =
            (0..n).map(|a| find_index(n, |b| add[a * n + b] == 0).unwrap_or(a)).collect();
        let inv: Vec<usize> =
            (0..n).map(|a| find_index(n, |b| mul[a * n + b] == 0).unwrap_or(a)).collect();
        let mut lambda = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                lambda[a * n + b] = add[neg[a] * n + mul[a * n + b]];
            }
        }
        Ok(FiniteSkewBrace { n, add, mul, neg, inv, lambda })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `a − b = a + (−b)`.
    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `λ_a(b)`.
    #[inline]
    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.lambda[a * self.n + b]
    }

    /// `a ∗ c = λ_a(c) − c`.
    #[inline]
    pub fn star(&self, a: usize, c: usize) -> usize {
        self.sub(self.lambda(a, c), c)
    }

    pub fn add_table(&self) -> &[usize] {
        &self.add
    }

    pub fn mul_table(&self) -> &[usize] {
        &self.mul
    }

    fn check_element(&self, a: usize) -> Result<()> {
        if a < self.n {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange(a))
        }
    }

    /// The row `λ_a` as a permutation of the carrier.
    pub fn lambda_of(&self, a: usize) -> Result<Perm> {
        self.check_element(a)?;
        let row = self.lambda[a * self.n..(a + 1) * self.n].to_vec();
        Perm::from_images(row).ok_or_else(|| Error::Construction(format!("λ_{a} is not a permutation")))
    }

    pub fn try_star(&self, a: usize, c: usize) -> Result<usize> {
        self.check_element(a)?;
        self.check_element(c)?;
        Ok(self.star(a, c))
    }

    /// True iff the two tables coincide.
    pub fn is_trivial(&self) -> bool {
        self.add == self.mul
    }

    pub fn additive_group(&self) -> GroupTable {
        GroupTable::new_unchecked(self.n, self.add.clone(), 0)
    }

    pub fn multiplicative_group(&self) -> GroupTable {
        GroupTable::new_unchecked(self.n, self.mul.clone(), 0)
    }

    /// Relabels by a bijection `p` fixing 0 (old index -> new index).
    pub fn relabel(&self, p: &Perm) -> FiniteSkewBrace {
        assert_eq!(p.apply(0), 0, "relabeling must fix the identity");
        let n = self.n;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                add[p.apply(a) * n + p.apply(b)] = p.apply(self.add(a, b));
                mul[p.apply(a) * n + p.apply(b)] = p.apply(self.mul(a, b));
            }
        }
        Self::unverified(n, add, mul).expect("relabeling preserves shape")
    }

    /// Checks every axiom and reports each violated one with the
    /// lexicographically smallest witness.
    pub fn verify(&self) -> VerificationReport {
        let n = self.n;
        let mut violations = Vec::new();
        let mut push = |axiom, witness: Vec<usize>, detail: String| {
            violations.push(Violation { axiom, witness, detail });
        };

        if let Some(a) = find_index(n, |a| self.add(0, a) != a || self.add(a, 0) != a) {
            push(Axiom::AdditiveIdentity, vec![a], format!("0 + {a} or {a} + 0 differs from {a}"));
        }
        if let Some(a) = find_index(n, |a| !(0..n).any(|b| self.add(a, b) == 0 && self.add(b, a) == 0)) {
            push(Axiom::AdditiveInverse, vec![a], format!("{a} has no additive inverse"));
        }
        if let Some(w) = first_triple(n, |a, b, c| self.add(self.add(a, b), c) != self.add(a, self.add(b, c))) {
            push(Axiom::AdditiveAssociativity, w.to_vec(), format!("({} + {}) + {} ≠ {} + ({} + {})", w[0], w[1], w[2], w[0], w[1], w[2]));
        }

        if find_index(n, |a| self.mul(0, a) != a || self.mul(a, 0) != a).is_some() {
            let two_sided = |e: usize| (0..n).all(|a| self.mul(e, a) == a && self.mul(a, e) == a);
            match find_index(n, two_sided) {
                Some(e) => push(Axiom::SharedIdentity, vec![e], format!("0 ≠ {e}")),
                None => {
                    let a = find_index(n, |a| self.mul(0, a) != a || self.mul(a, 0) != a).unwrap_or(0);
                    push(Axiom::SharedIdentity, vec![a], format!("0 is not a multiplicative identity at {a}"));
                }
            }
        }
        if let Some(a) = find_index(n, |a| !(0..n).any(|b| self.mul(a, b) == 0 && self.mul(b, a) == 0)) {
            push(Axiom::MultiplicativeInverse, vec![a], format!("{a} has no multiplicative inverse"));
        }
        if let Some(w) = first_triple(n, |a, b, c| self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))) {
            push(Axiom::MultiplicativeAssociativity, w.to_vec(), format!("({} o {}) o {} ≠ {} o ({} o {})", w[0], w[1], w[2], w[0], w[1], w[2]));
        }

        if let Some(w) = first_triple(n, |a, b, c| {
            self.mul(a, self.add(b, c)) != self.add(self.sub(self.mul(a, b), a), self.mul(a, c))
        }) {
            push(Axiom::SkewDistributivity, w.to_vec(), format!("{0} o ({1} + {2}) ≠ {0} o {1} - {0} + {0} o {2}", w[0], w[1], w[2]));
        }

        if let Some(a) = find_index(n, |a| !is_bijection(&self.lambda[a * n..(a + 1) * n])) {
            push(Axiom::LambdaAutomorphism, vec![a], format!("λ_{a} is not a permutation"));
        } else if let Some(w) = first_triple(n, |a, b, c| {
            self.lambda(a, self.add(b, c)) != self.add(self.lambda(a, b), self.lambda(a, c))
        }) {
            push(Axiom::LambdaAutomorphism, w.to_vec(), format!("λ_{0}({1} + {2}) ≠ λ_{0}({1}) + λ_{0}({2})", w[0], w[1], w[2]));
        }
        if let Some(w) = first_triple(n, |a, b, c| self.lambda(self.mul(a, b), c) != self.lambda(a, self.lambda(b, c))) {
            push(Axiom::LambdaHomomorphism, w.to_vec(), format!("λ_({0} o {1})({2}) ≠ λ_{0}(λ_{1}({2}))", w[0], w[1], w[2]));
        }

        VerificationReport { violations }
    }
}

fn first_triple(n: usize, bad: impl Fn(usize, usize, usize) -> bool) -> Option<[usize; 3]> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if bad(a, b, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// `(G, ·, ·)`, with the identity relabeled to 0.
pub fn make_trivial(g: &GroupTable) -> FiniteSkewBrace {
    let g = g.with_identity_at_zero();
    FiniteSkewBrace::unverified(g.order(), g.table().to_vec(), g.table().to_vec()).expect("group table shape")
}

/// `(G, ·ᵒᵖ, ·)`, with the identity relabeled to 0.
pub fn make_almost_trivial(g: &GroupTable) -> FiniteSkewBrace {
    let g = g.with_identity_at_zero();
    let op = g.opposite();
    FiniteSkewBrace::unverified(g.order(), op.table().to_vec(), g.table().to_vec()).expect("group table shape")
}

/// The semidirect product `(B, +) ⋊ (B, ∘)` with
/// `(a, b)(c, d) = (a + λ_b(c), b ∘ d)`. The pair `(a, b)` has index `a * n + b`.
pub fn semidirect(b: &FiniteSkewBrace) -> GroupTable {
    let n = b.order();
    let size = n * n;
    let mut op = vec![0; size * size];
    for x in 0..size {
        let (a, bb) = (x / n, x % n);
        for y in 0..size {
            let (c, d) = (y / n, y % n);
            op[x * size + y] = b.add(a, b.lambda(bb, c)) * n + b.mul(bb, d);
        }
    }
    GroupTable::new_unchecked(size, op, 0)
}

/// `r_B(a, c) = (λ_a(c), λ_a(c)⁻¹ ∘ a ∘ c)`.
pub fn solution_from_brace(b: &FiniteSkewBrace) -> SolutionTable {
    let n = b.order();
    let images = (0..n * n)
        .map(|p| {
            let (a, c) = (p / n, p % n);
            let l = b.lambda(a, c);
            l * n + b.mul(b.inv(l), b.mul(a, c))
        })
        .collect();
    SolutionTable::from_encoded(n, images)
}

/// Instance-wise checks of the identities every skew brace satisfies.
pub mod laws {
    use super::*;

    /// `a + b = a∘λ_a⁻¹(b)`, `a∘b = a + λ_a(b)`, `−a = λ_a(a⁻¹)`; returns the
    /// failing identity and pair.
    pub fn identity_pack(b: &FiniteSkewBrace) -> Option<(&'static str, [usize; 2])> {
        let n = b.order();
        let inverse_rows: Vec<Perm> =
            (0..n).map(|a| b.lambda_of(a).expect("verified brace").inverse()).collect();
        for a in 0..n {
            if b.neg(a) != b.lambda(a, b.inv(a)) {
                return Some(("-a = λ_a(a⁻¹)", [a, a]));
            }
            for c in 0..n {
                if b.add(a, c) != b.mul(a, inverse_rows[a].apply(c)) {
                    return Some(("a + b = a∘λ_a⁻¹(b)", [a, c]));
                }
                if b.mul(a, c) != b.add(a, b.lambda(a, c)) {
                    return Some(("a∘b = a + λ_a(b)", [a, c]));
                }
            }
        }
        None
    }

    /// `a∗(b+c) = a∗b + b + a∗c − b` and `(a∘b)∗c = a∗(b∗c) + b∗c + a∗c`.
    pub fn star_identities(b: &FiniteSkewBrace) -> Option<(&'static str, [usize; 3])> {
        first_triple(b.order(), |x, y, z| {
            let lhs = b.star(x, b.add(y, z));
            let rhs = b.sub(b.add(b.add(b.star(x, y), y), b.star(x, z)), y);
            lhs != rhs
        })
        .map(|w| ("a∗(b+c) = a∗b + b + a∗c − b", w))
        .or_else(|| {
            first_triple(b.order(), |x, y, z| {
                let lhs = b.star(b.mul(x, y), z);
                let rhs = b.add(b.add(b.star(x, b.star(y, z)), b.star(y, z)), b.star(x, z));
                lhs != rhs
            })
            .map(|w| ("(a∘b)∗c = a∗(b∗c) + b∗c + a∗c", w))
        })
    }

    /// `[(0, a), (c, 0)] = (a∗c, 0)` in the semidirect product, with
    /// `[x, y] = x y x⁻¹ y⁻¹`.
    pub fn commutator_identity(b: &FiniteSkewBrace) -> Option<[usize; 2]> {
        let n = b.order();
        let g = semidirect(b);
        let pair = |x: usize, y: usize| x * n + y;
        for a in 0..n {
            for c in 0..n {
                let x = pair(0, a);
                let y = pair(c, 0);
                let comm = g.mul(g.mul(x, y), g.mul(g.inverse(x), g.inverse(y)));
                if comm != pair(b.star(a, c), 0) {
                    return Some([a, c]);
                }
            }
        }
        None
    }

    /// `λ_{a∘b} = λ_a·λ_b` as permutations.
    pub fn lambda_homomorphism(b: &FiniteSkewBrace) -> Option<[usize; 2]> {
        let n = b.order();
        let rows: Vec<Perm> = (0..n).map(|a| b.lambda_of(a).expect("verified brace")).collect();
        for a in 0..n {
            for c in 0..n {
                if rows[b.mul(a, c)] != rows[a].compose(&rows[c]) {
                    return Some([a, c]);
                }
            }
        }
        None
    }
}
