//! The permutation skew brace of a finite non-degenerate solution, and the
//! multiplicative and additive presentations of its structure skew brace.
//!
//! The carrier is the subgroup of `Sym(X) × Sym(X)` generated by the pairs
//! `g_x = (σ_x, τ_x⁻¹)`. Addition is grown from the rule
//! `a + g_y = a ∘ g_{f_a⁻¹(y)}`, where `f_a` is the first component of `a`;
//! this is `a + b = a ∘ λ_a⁻¹(b)` with `λ_a(g_y) = g_{f_a(y)}`. The finished
//! tables are then checked with [`FiniteSkewBrace::verify`].

use std::collections::HashMap;

use crate::brace::FiniteSkewBrace;
use crate::bword::{Assignment, BWord};
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::presentation::SkewBracePresentation;
use crate::solution::SolutionTable;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PermPair {
    pub first: Perm,
    pub second: Perm,
}

impl PermPair {
    pub fn identity(n: usize) -> Self {
        PermPair { first: Perm::identity(n), second: Perm::identity(n) }
    }

    pub fn compose(&self, other: &PermPair) -> PermPair {
        PermPair { first: self.first.compose(&other.first), second: self.second.compose(&other.second) }
    }
}

#[derive(Clone, Debug)]
pub struct PermBraceResult {
    pub brace: FiniteSkewBrace,
    /// `labels[e]` is the permutation pair of element `e`.
    pub labels: Vec<PermPair>,
    /// `generator_map[x]` is the element `g_x`.
    pub generator_map: Vec<usize>,
    /// For each element, solution indices `y_1 … y_k` with
    /// `e = g_{y_1} + … + g_{y_k}` (empty for 0).
    pub additive_certificates: Vec<Vec<usize>>,
}

fn require_solution(sol: &SolutionTable) -> Result<()> {
    if !sol.is_ybe() {
        return Err(Error::NotASolution);
    }
    if !sol.is_nondegenerate() {
        return Err(Error::Degenerate);
    }
    Ok(())
}

pub fn permutation_brace(sol: &SolutionTable) -> Result<PermBraceResult> {
    require_solution(sol)?;
    let n = sol.size();
    let diag = sol.extract_diagonal();
    let generators: Vec<PermPair> = (0..n)
        .map(|x| PermPair {
            first: diag.sigma_perm(x).expect("non-degenerate"),
            second: diag.tau_perm(x).expect("non-degenerate").inverse(),
        })
        .collect();

    // multiplicative closure, breadth-first from the identity
    let mut labels = vec![PermPair::identity(n)];
    let mut index: HashMap<PermPair, usize> = HashMap::from([(labels[0].clone(), 0)]);
    let mut head = 0;
    while head < labels.len() {
        let current = labels[head].clone();
        for g in &generators {
            let next = current.compose(g);
            if !index.contains_key(&next) {
                index.insert(next.clone(), labels.len());
                labels.push(next);
            }
        }
        head += 1;
    }
    let size = labels.len();
    let generator_map: Vec<usize> = generators.iter().map(|g| index[g]).collect();
    let mut mul = vec![0; size * size];
    for a in 0..size {
        for c in 0..size {
            mul[a * size + c] = index[&labels[a].compose(&labels[c])];
        }
    }

    // a + g_y = a ∘ g_{f_a⁻¹(y)}
    let first_inverse: Vec<Perm> = labels.iter().map(|l| l.first.inverse()).collect();
    let add_generator = |a: usize, y: usize| mul[a * size + generator_map[first_inverse[a].apply(y)]];

    let mut certificates: Vec<Option<Vec<usize>>> = vec![None; size];
    certificates[0] = Some(Vec::new());
    let mut order = vec![0];
    let mut head = 0;
    while head < order.len() {
        let a = order[head];
        for y in 0..n {
            let next = add_generator(a, y);
            if certificates[next].is_none() {
                let mut word = certificates[a].clone().expect("visited");
                word.push(y);
                certificates[next] = Some(word);
                order.push(next);
            }
        }
        head += 1;
    }
    if order.len() != size {
        return Err(Error::Construction(format!(
            "additive closure has {} elements, multiplicative closure {size}",
            order.len()
        )));
    }
    let additive_certificates: Vec<Vec<usize>> = certificates.into_iter().map(|c| c.expect("closure is full")).collect();

    let mut add = vec![0; size * size];
    for a in 0..size {
        for c in 0..size {
            add[a * size + c] = additive_certificates[c].iter().fold(a, |acc, &y| add_generator(acc, y));
        }
    }

    let brace = FiniteSkewBrace::from_tables(size, add, mul).map_err(|e| Error::Construction(e.to_string()))?;
    Ok(PermBraceResult { brace, labels, generator_map, additive_certificates })
}

fn generator_word(x: usize) -> BWord {
    BWord::Gen(format!("x{}", x + 1))
}

fn generator_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// Relators `(x∘y)∘(σ_x(y)∘τ_y(x))⁻¹` for every ordered pair `(x, y)`.
pub fn emit_mul_presentation(sol: &SolutionTable) -> SkewBracePresentation {
    let n = sol.size();
    let relators = sol
        .pairs()
        .map(|((x, y), (s, t))| {
            BWord::quotient(
                BWord::prod(generator_word(x), generator_word(y)),
                BWord::prod(generator_word(s), generator_word(t)),
            )
        })
        .collect();
    SkewBracePresentation::new(generator_names(n), relators).expect("generators declared")
}

/// Relators `(x + σ_x(y)) − (σ_x(y) + σ_{σ_x(y)}(τ_y(x)))` for every ordered
/// pair `(x, y)`.
pub fn emit_add_presentation(sol: &SolutionTable) -> SkewBracePresentation {
    let n = sol.size();
    let relators = sol
        .pairs()
        .map(|((x, _), (s, t))| {
            let u = sol.apply(s, t).0;
            BWord::difference(
                BWord::sum(generator_word(x), generator_word(s)),
                BWord::sum(generator_word(s), generator_word(u)),
            )
        })
        .collect();
    SkewBracePresentation::new(generator_names(n), relators).expect("generators declared")
}

/// The assignment `x_i ↦ g_{x_i}` into the permutation brace.
pub fn generator_assignment(pb: &PermBraceResult) -> Assignment {
    pb.generator_map.iter().enumerate().map(|(x, &e)| (format!("x{}", x + 1), e)).collect()
}

/// True iff both structure presentations hold in the permutation brace under
/// `x_i ↦ g_{x_i}`.
pub fn check_image_relations(sol: &SolutionTable, pb: &PermBraceResult) -> Result<bool> {
    let assignment = generator_assignment(pb);
    let mul_ok = emit_mul_presentation(sol).failing_relators(&pb.brace, &assignment)?.is_empty();
    let add_ok = emit_add_presentation(sol).failing_relators(&pb.brace, &assignment)?.is_empty();
    Ok(mul_ok && add_ok)
}
