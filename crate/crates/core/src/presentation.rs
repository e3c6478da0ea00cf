//! Skew brace presentations: generators plus relator b-words, each asserted
//! to evaluate to 0.
//!
//! Emitters here produce presentations together with the canonical
//! assignment of generators into the brace they describe, so soundness (every
//! relator evaluates to 0) can be checked by evaluation.

use std::collections::HashSet;

use crate::brace::FiniteSkewBrace;
use crate::bword::{Assignment, BWord};
use crate::error::{Error, Result};
use crate::ideals::{quotient, ElementSubset};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewBracePresentation {
    generators: Vec<String>,
    relators: Vec<BWord>,
}

impl SkewBracePresentation {
    /// Fails with [`Error::UnboundGenerator`] if a relator mentions an
    /// undeclared name.
    pub fn new(generators: Vec<String>, relators: Vec<BWord>) -> Result<Self> {
        let declared: HashSet<&str> = generators.iter().map(String::as_str).collect();
        for r in &relators {
            if let Some(name) = r.generators().into_iter().find(|g| !declared.contains(g)) {
                return Err(Error::UnboundGenerator(name.to_string()));
            }
        }
        Ok(SkewBracePresentation { generators, relators })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[BWord] {
        &self.relators
    }

    /// Values of every relator under `assignment`, which must cover every
    /// generator.
    pub fn evaluate(&self, b: &FiniteSkewBrace, assignment: &Assignment) -> Result<Vec<usize>> {
        if let Some(g) = self.generators.iter().find(|g| !assignment.contains_key(*g)) {
            return Err(Error::UnboundGenerator(g.clone()));
        }
        self.relators.iter().map(|r| r.eval(b, assignment)).collect()
    }

    /// Indices of relators that do not evaluate to 0.
    pub fn failing_relators(&self, b: &FiniteSkewBrace, assignment: &Assignment) -> Result<Vec<usize>> {
        Ok(self.evaluate(b, assignment)?.iter().enumerate().filter(|(_, &v)| v != 0).map(|(i, _)| i).collect())
    }
}

fn table_relators(b: &FiniteSkewBrace, name: &impl Fn(usize) -> BWord) -> Vec<BWord> {
    let n = b.order();
    let mut relators = Vec::with_capacity(2 * n * n + 1);
    for a in 0..n {
        for c in 0..n {
            relators.push(BWord::difference(BWord::sum(name(a), name(c)), name(b.add(a, c))));
            relators.push(BWord::quotient(BWord::prod(name(a), name(c)), name(b.mul(a, c))));
        }
    }
    relators.push(name(0));
    relators
}

/// One generator `g<e>` per element; for every pair `(a, c)` the relators
/// `((g_a + g_c) + (- g_{a+c}))` and `((g_a o g_c) o (g_{a∘c} ~))`, then `g0`.
pub fn table_presentation(b: &FiniteSkewBrace) -> (SkewBracePresentation, Assignment) {
    let n = b.order();
    let name = |e: usize| BWord::Gen(format!("g{e}"));
    let generators: Vec<String> = (0..n).map(|e| format!("g{e}")).collect();
    let assignment = generators.iter().cloned().zip(0..n).collect();
    let relators = table_relators(b, &name);
    (SkewBracePresentation { generators, relators }, assignment)
}

/// A trivial brace on `⊕ Z/k_i` (with `k_i = 0` meaning `Z`).
///
/// Per generator `x`: `x∗x`, `x∗(−x)`, `(−x)∗(−x)`, and `k·x` when `k ≥ 1`.
/// For distinct generators `x_i, x_j`: the additive commutator relator and
/// the relators `x_i∗x_j`, `x_i∗(−x_j)` for every ordered pair.
pub fn trivial_brace_presentation(cyclic_orders: &[usize]) -> SkewBracePresentation {
    let generators: Vec<String> = (1..=cyclic_orders.len()).map(|i| format!("x{i}")).collect();
    let x = |i: usize| BWord::Gen(generators[i].clone());
    let mut relators = Vec::new();
    for (i, &k) in cyclic_orders.iter().enumerate() {
        relators.push(BWord::star(x(i), x(i)));
        relators.push(BWord::star(x(i), BWord::neg(x(i))));
        relators.push(BWord::star(BWord::neg(x(i)), BWord::neg(x(i))));
        if k >= 1 {
            relators.push(BWord::multiple(k, x(i)));
        }
    }
    let m = cyclic_orders.len();
    for i in 0..m {
        for j in (i + 1)..m {
            relators.push(BWord::difference(BWord::sum(x(i), x(j)), BWord::sum(x(j), x(i))));
        }
    }
    for i in 0..m {
        for j in 0..m {
            if i != j {
                relators.push(BWord::star(x(i), x(j)));
                relators.push(BWord::star(x(i), BWord::neg(x(j))));
            }
        }
    }
    SkewBracePresentation { generators, relators }
}

/// Sizes of the relator families emitted by [`extend_presentation`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExtensionFamilies {
    /// Number of `y` generators (non-zero cosets).
    pub m: usize,
    /// Number of `x` generators (non-zero ideal elements).
    pub n: usize,
    /// `y_i∘y_j` rewritten as a coset representative plus an ideal element.
    pub products: usize,
    /// `y_i⁻¹` rewritten likewise.
    pub inverses: usize,
    /// Table relators of the ideal (`ℓ`).
    pub ideal_table: usize,
    /// `λ_{y_j}(x_i)`, `x_i^{∘,y_j}`, `x_i^{+,y_j}`, `λ_{y_j⁻¹}(x_i)`.
    pub actions: usize,
    /// Lifted skew brace table relators of the quotient (`s`).
    pub quotient_table: usize,
    /// Lifted additive-group table relators of the quotient (`r`).
    pub quotient_additive: usize,
}

impl ExtensionFamilies {
    pub fn total(&self) -> usize {
        self.products + self.inverses + self.ideal_table + self.actions + self.quotient_table + self.quotient_additive
    }
}

/// A presentation of `b` built from the ideal `i` and the quotient `b / i`.
///
/// Generators are `y1..ym` for the smallest representatives of the non-zero
/// cosets and `x1..xn` for the non-zero elements of `i`, in increasing order.
/// Every rewriting target that lies in `i` is named directly by its `x`
/// generator (or `0`), so each relator has the shape `L + (−R)`.
pub fn extend_presentation(
    b: &FiniteSkewBrace,
    i: &ElementSubset,
) -> Result<(SkewBracePresentation, Assignment, ExtensionFamilies)> {
    let q = quotient(b, i)?;
    let ideal: Vec<usize> = i.to_vec();
    let m = q.brace.order() - 1;
    let n = ideal.len() - 1;

    let y_name = |j: usize| format!("y{j}");
    let x_name = |k: usize| format!("x{k}");
    // position of an ideal element in `ideal`; 0 ↦ 0
    let mut ideal_pos = vec![usize::MAX; b.order()];
    for (k, &e) in ideal.iter().enumerate() {
        ideal_pos[e] = k;
    }
    let x_word = |e: usize| -> BWord {
        let k = ideal_pos[e];
        debug_assert!(k != usize::MAX, "{e} is not in the ideal");
        if k == 0 {
            BWord::Zero
        } else {
            BWord::Gen(x_name(k))
        }
    };
    let y_word = |class: usize| -> BWord {
        if class == 0 {
            BWord::Zero
        } else {
            BWord::Gen(y_name(class))
        }
    };
    let rep = |class: usize| q.representatives[class];

    let mut generators: Vec<String> = (1..=m).map(y_name).collect();
    generators.extend((1..=n).map(x_name));
    let mut assignment = Assignment::new();
    for j in 1..=m {
        assignment.insert(y_name(j), rep(j));
    }
    for k in 1..=n {
        assignment.insert(x_name(k), ideal[k]);
    }

    let mut relators = Vec::new();
    let mut families = ExtensionFamilies { m, n, ..Default::default() };

    // y_i∘y_j = y_k + d
    for yi in 1..=m {
        for yj in 1..=m {
            let value = b.mul(rep(yi), rep(yj));
            let class = q.projection[value];
            let d = b.add(b.neg(rep(class)), value);
            relators.push(BWord::difference(
                BWord::prod(y_word(yi), y_word(yj)),
                BWord::sum(y_word(class), x_word(d)),
            ));
        }
    }
    families.products = m * m;

    // y_i⁻¹ = y_k + d
    for yi in 1..=m {
        let value = b.inv(rep(yi));
        let class = q.projection[value];
        let d = b.add(b.neg(rep(class)), value);
        relators.push(BWord::difference(BWord::inv(y_word(yi)), BWord::sum(y_word(class), x_word(d))));
    }
    families.inverses = m;

    // table relators of the ideal itself, on the x generators
    let sub = sub_brace(b, &ideal)?;
    let ideal_table = table_relators(&sub, &|k| if k == 0 { BWord::Zero } else { BWord::Gen(x_name(k)) });
    families.ideal_table = ideal_table.len();
    relators.extend(ideal_table);

    // λ_{y_j}(x_i), x_i^{∘,y_j}, x_i^{+,y_j}, λ_{y_j⁻¹}(x_i)
    for k in 1..=n {
        let a = ideal[k];
        for yj in 1..=m {
            let bj = rep(yj);
            let (xk, yw) = (x_word(a), y_word(yj));
            relators.push(BWord::difference(BWord::lambda(yw.clone(), xk.clone()), x_word(b.lambda(bj, a))));
            relators.push(BWord::difference(
                BWord::mul_conjugate(xk.clone(), yw.clone()),
                x_word(b.mul(b.mul(bj, a), b.inv(bj))),
            ));
            relators.push(BWord::difference(
                BWord::add_conjugate(xk.clone(), yw.clone()),
                x_word(b.sub(b.add(bj, a), bj)),
            ));
            relators.push(BWord::difference(BWord::lambda(BWord::inv(yw), xk), x_word(b.lambda(b.inv(bj), a))));
        }
    }
    families.actions = 4 * n * m;

    if m > 0 {
        let lift = |w: &BWord| -> Result<BWord> {
            let lifted = w.substitute(&|name: &str| {
                let class: usize = name[1..].parse().expect("generated name");
                y_word(class)
            });
            let value = lifted.eval(b, &assignment)?;
            Ok(BWord::difference(lifted, x_word(value)))
        };
        let name = |c: usize| BWord::Gen(format!("g{c}"));
        let quotient_table = table_relators(&q.brace, &name);
        families.quotient_table = quotient_table.len();
        for w in &quotient_table {
            relators.push(lift(w)?);
        }
        let qm = q.brace.order();
        for p in 0..qm {
            for c in 0..qm {
                let w = BWord::difference(BWord::sum(name(p), name(c)), name(q.brace.add(p, c)));
                relators.push(lift(&w)?);
            }
        }
        families.quotient_additive = qm * qm;
    }

    debug_assert_eq!(relators.len(), families.total());
    Ok((SkewBracePresentation { generators, relators }, assignment, families))
}

/// The sub-brace on `elements` (sorted, starting with 0), relabeled `0..len`.
fn sub_brace(b: &FiniteSkewBrace, elements: &[usize]) -> Result<FiniteSkewBrace> {
    let k = elements.len();
    let mut pos = vec![usize::MAX; b.order()];
    for (i, &e) in elements.iter().enumerate() {
        pos[e] = i;
    }
    let mut add = vec![0; k * k];
    let mut mul = vec![0; k * k];
    for (i, &x) in elements.iter().enumerate() {
        for (j, &y) in elements.iter().enumerate() {
            add[i * k + j] = pos[b.add(x, y)];
            mul[i * k + j] = pos[b.mul(x, y)];
        }
    }
    if add.contains(&usize::MAX) || mul.contains(&usize::MAX) {
        return Err(Error::NotAnIdeal);
    }
    FiniteSkewBrace::from_tables(k, add, mul)
}
