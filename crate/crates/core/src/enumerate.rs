//! Brute-force generators of small groups, skew braces and solutions, plus
//! isomorphism testing. These are the reference catalogs the rest of the
//! crate is checked against.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;

use crate::brace::FiniteSkewBrace;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::perm::Perm;
use crate::solution::SolutionTable;

pub const MAX_GROUP_ORDER: usize = 8;
pub const MAX_NAIVE_BRACE_ORDER: usize = 4;
pub const MAX_SOLUTION_SIZE: usize = 3;

fn check_range(n: usize, max: usize) -> Result<()> {
    if (1..=max).contains(&n) {
        Ok(())
    } else {
        Err(Error::UnsupportedOrder { n, min: 1, max })
    }
}

// ---------------------------------------------------------------------------
// Groups

/// Partial Cayley table search state. `None` cells are unfilled.
#[derive(Clone)]
struct PartialTable {
    n: usize,
    cells: Vec<Option<usize>>,
}

impl PartialTable {
    fn new(n: usize) -> Self {
        let mut cells = vec![None; n * n];
        for a in 0..n {
            cells[a] = Some(a);
            cells[a * n] = Some(a);
        }
        PartialTable { n, cells }
    }

    fn get(&self, a: usize, b: usize) -> Option<usize> {
        self.cells[a * self.n + b]
    }

    fn latin_ok(&self, a: usize, b: usize, v: usize) -> bool {
        let n = self.n;
        (0..n).all(|c| c == b || self.get(a, c) != Some(v)) && (0..n).all(|r| r == a || self.get(r, b) != Some(v))
    }

    /// Sets a cell, returning false on a Latin conflict.
    fn set(&mut self, a: usize, b: usize, v: usize) -> bool {
        match self.get(a, b) {
            Some(w) => w == v,
            None => {
                if !self.latin_ok(a, b, v) {
                    return false;
                }
                self.cells[a * self.n + b] = Some(v);
                true
            }
        }
    }

    /// Associativity propagation to a fixpoint; false on contradiction.
    fn propagate(&mut self) -> bool {
        let n = self.n;
        loop {
            let mut changed = false;
            for a in 1..n {
                for b in 1..n {
                    let Some(ab) = self.get(a, b) else { continue };
                    for c in 1..n {
                        let Some(bc) = self.get(b, c) else { continue };
                        match (self.get(ab, c), self.get(a, bc)) {
                            (Some(x), Some(y)) if x != y => return false,
                            (Some(x), None) => {
                                if !self.set(a, bc, x) {
                                    return false;
                                }
                                changed = true;
                            }
                            (None, Some(y)) => {
                                if !self.set(ab, c, y) {
                                    return false;
                                }
                                changed = true;
                            }
                            _ => {}
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn first_empty(&self) -> Option<(usize, usize)> {
        self.cells.iter().position(Option::is_none).map(|p| (p / self.n, p % self.n))
    }

    fn search(self, out: &mut Vec<GroupTable>) {
        match self.first_empty() {
            None => {
                let op: Vec<usize> = self.cells.iter().map(|c| c.expect("filled")).collect();
                let g = GroupTable::new_unchecked(self.n, op, 0);
                debug_assert!(GroupTable::new(self.n, g.table().to_vec(), 0).is_ok());
                out.push(g);
            }
            Some((a, b)) => {
                for v in 0..self.n {
                    let mut next = self.clone();
                    if next.set(a, b, v) && next.propagate() {
                        next.search(out);
                    }
                }
            }
        }
    }
}

/// Every group Cayley table on `{0..n-1}` with identity 0.
pub fn labeled_group_tables(n: usize) -> Result<Vec<GroupTable>> {
    check_range(n, MAX_GROUP_ORDER)?;
    let mut out = Vec::new();
    let mut start = PartialTable::new(n);
    if start.propagate() {
        start.search(&mut out);
    }
    Ok(out)
}

/// A generating set chosen greedily: each new generator is the smallest
/// element outside the subgroup generated so far.
fn greedy_generators(n: usize, mul: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut inside = vec![false; n];
    inside[0] = true;
    let mut members = vec![0];
    let mut gens = Vec::new();
    while let Some(g) = (0..n).find(|&x| !inside[x]) {
        gens.push(g);
        let mut head = 0;
        while head < members.len() {
            let e = members[head];
            for &s in &gens {
                let x = mul(e, s);
                if !inside[x] {
                    inside[x] = true;
                    members.push(x);
                }
            }
            head += 1;
        }
    }
    gens
}

/// Tries to extend `gen_images` (images of `gens`) to an isomorphism from
/// `(n, mul_a)` to `(n, mul_b)`, both with identity 0.
fn extend_to_isomorphism(
    n: usize,
    gens: &[usize],
    gen_images: &[usize],
    mul_a: &impl Fn(usize, usize) -> usize,
    mul_b: &impl Fn(usize, usize) -> usize,
) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    let mut order = vec![0];
    let mut head = 0;
    while head < order.len() {
        let e = order[head];
        for (&s, &t) in gens.iter().zip(gen_images) {
            let x = mul_a(e, s);
            let y = mul_b(map[e], t);
            if map[x] == usize::MAX {
                if used[y] {
                    return None;
                }
                map[x] = y;
                used[y] = true;
                order.push(x);
            } else if map[x] != y {
                return None;
            }
        }
        head += 1;
    }
    if order.len() != n {
        return None;
    }
    for a in 0..n {
        for b in 0..n {
            if map[mul_a(a, b)] != mul_b(map[a], map[b]) {
                return None;
            }
        }
    }
    Some(map)
}

fn order_profile(g: &GroupTable) -> Vec<usize> {
    let mut orders: Vec<usize> = (0..g.order()).map(|a| g.element_order(a)).collect();
    orders.sort_unstable();
    orders
}

/// All isomorphisms `g → h` (as element maps), for tables with identity 0.
fn group_isomorphisms(g: &GroupTable, h: &GroupTable, first_only: bool) -> Vec<Vec<usize>> {
    let n = g.order();
    if n != h.order() {
        return Vec::new();
    }
    let gens = greedy_generators(n, |a, b| g.mul(a, b));
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| (0..n).filter(|&t| h.element_order(t) == g.element_order(s)).collect())
        .collect();
    let mut out = Vec::new();
    for images in candidates.iter().map(|c| c.iter().copied()).multi_cartesian_product() {
        if let Some(map) = extend_to_isomorphism(n, &gens, &images, &|a, b| g.mul(a, b), &|a, b| h.mul(a, b)) {
            out.push(map);
            if first_only {
                break;
            }
        }
    }
    if out.is_empty() && gens.is_empty() {
        out.push(vec![0]);
    }
    out
}

pub fn groups_isomorphic(g: &GroupTable, h: &GroupTable) -> bool {
    let (g, h) = (g.with_identity_at_zero(), h.with_identity_at_zero());
    order_profile(&g) == order_profile(&h) && !group_isomorphisms(&g, &h, true).is_empty()
}

/// `Aut(g)` as permutations of the carrier; `g` must have identity 0.
pub fn automorphisms(g: &GroupTable) -> Vec<Perm> {
    let mut auts: Vec<Perm> = group_isomorphisms(g, g, false)
        .into_iter()
        .map(|m| Perm::from_images(m).expect("isomorphism is a bijection"))
        .collect();
    auts.sort();
    auts.dedup();
    auts
}

/// Groups of order `n` up to isomorphism, in canonical form and sorted.
pub fn enumerate_groups(n: usize) -> Result<Vec<GroupTable>> {
    let mut reps: Vec<GroupTable> = Vec::new();
    for g in labeled_group_tables(n)? {
        if !reps.iter().any(|r| groups_isomorphic(r, &g)) {
            reps.push(g);
        }
    }
    let mut canon: Vec<GroupTable> = reps.iter().map(canonical_group).collect();
    canon.sort_by(|a, b| a.table().cmp(b.table()));
    Ok(canon)
}

/// Lexicographically minimal relabeling of a group table fixing 0.
pub fn canonical_group(g: &GroupTable) -> GroupTable {
    let g = g.with_identity_at_zero();
    let n = g.order();
    let best = lex_min_relabeling(n, &[g.table()]);
    GroupTable::new_unchecked(n, best.into_iter().next().expect("one table"), 0)
}

// ---------------------------------------------------------------------------
// Canonical forms

/// Relabels each table by every bijection fixing 0 and keeps the
/// lexicographically smallest concatenation.
fn lex_min_relabeling(n: usize, tables: &[&[usize]]) -> Vec<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    let mut candidate = Vec::with_capacity(n * n * tables.len());
    for tail in (1..n).permutations(n - 1) {
        // p maps old -> new; inv maps new -> old
        let mut p = vec![0; n];
        for (new, &old) in std::iter::once(&0).chain(tail.iter()).enumerate() {
            p[old] = new;
        }
        let inv: Vec<usize> = std::iter::once(0).chain(tail.iter().copied()).collect();
        candidate.clear();
        let mut worse = false;
        let mut decided_better = best.is_none();
        'outer: for t in tables {
            for i in 0..n {
                for j in 0..n {
                    let v = p[t[inv[i] * n + inv[j]]];
                    if !decided_better {
                        let b = best.as_ref().expect("best set")[candidate.len()];
                        if v > b {
                            worse = true;
                            break 'outer;
                        }
                        if v < b {
                            decided_better = true;
                        }
                    }
                    candidate.push(v);
                }
            }
        }
        if !worse && decided_better {
            best = Some(candidate.clone());
        }
    }
    let flat = best.unwrap_or_else(|| tables.iter().flat_map(|t| t.iter().copied()).collect());
    flat.chunks(n * n).map(<[usize]>::to_vec).collect()
}

/// The lexicographically minimal `(add, mul)` pair over relabelings fixing 0.
pub fn canonical_form(b: &FiniteSkewBrace) -> Result<FiniteSkewBrace> {
    check_range(b.order(), MAX_GROUP_ORDER)?;
    let n = b.order();
    let mut tables = lex_min_relabeling(n, &[b.add_table(), b.mul_table()]).into_iter();
    let add = tables.next().expect("add");
    let mul = tables.next().expect("mul");
    FiniteSkewBrace::unverified(n, add, mul)
}

pub fn are_isomorphic(b1: &FiniteSkewBrace, b2: &FiniteSkewBrace) -> Result<bool> {
    if b1.order() != b2.order() {
        return Err(Error::OrderMismatch(b1.order(), b2.order()));
    }
    Ok(canonical_form(b1)? == canonical_form(b2)?)
}

// ---------------------------------------------------------------------------
// Skew braces

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationMethod {
    Naive,
    Holomorph,
}

impl fmt::Display for EnumerationMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnumerationMethod::Naive => "naive",
            EnumerationMethod::Holomorph => "holomorph",
        })
    }
}

impl FromStr for EnumerationMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "naive" => Ok(EnumerationMethod::Naive),
            "holomorph" => Ok(EnumerationMethod::Holomorph),
            other => Err(format!("unknown method `{other}`")),
        }
    }
}

/// Skew braces of one order, up to isomorphism, each in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraceCatalog {
    pub order: usize,
    pub method: EnumerationMethod,
    pub braces: Vec<FiniteSkewBrace>,
}

pub fn enumerate_skew_braces(n: usize, method: EnumerationMethod) -> Result<BraceCatalog> {
    let braces = match method {
        EnumerationMethod::Naive => naive_braces(n)?,
        EnumerationMethod::Holomorph => holomorph_braces(n)?,
    };
    Ok(BraceCatalog { order: n, method, braces })
}

fn sorted_canonical(braces: Vec<FiniteSkewBrace>) -> Result<Vec<FiniteSkewBrace>> {
    let mut canon: Vec<FiniteSkewBrace> = braces.par_iter().map(canonical_form).collect::<Result<_>>()?;
    canon.sort_by(|a, b| (a.add_table(), a.mul_table()).cmp(&(b.add_table(), b.mul_table())));
    canon.dedup();
    Ok(canon)
}

fn naive_braces(n: usize) -> Result<Vec<FiniteSkewBrace>> {
    check_range(n, MAX_NAIVE_BRACE_ORDER)?;
    let tables = labeled_group_tables(n)?;
    let mut found = Vec::new();
    for add in &tables {
        for mul in &tables {
            let b = FiniteSkewBrace::unverified(n, add.table().to_vec(), mul.table().to_vec())?;
            let distributive = (0..n).all(|a| {
                (0..n).all(|x| (0..n).all(|y| b.mul(a, b.add(x, y)) == b.add(b.sub(b.mul(a, x), a), b.mul(a, y))))
            });
            if distributive {
                found.push(b);
            }
        }
    }
    sorted_canonical(found)
}

/// λ-maps `A → Aut(A)` (as indices into `auts`) that close up to a regular
/// subgroup `{(a, λ_a)}` of the holomorph: `λ_{a + λ_a(b)} = λ_a λ_b`.
fn regular_subgroups(a: &GroupTable, auts: &[Perm]) -> Vec<Vec<usize>> {
    let n = a.order();
    let index: HashMap<&Perm, usize> = auts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let compose: Vec<Vec<usize>> =
        auts.iter().map(|f| auts.iter().map(|g| index[&f.compose(g)]).collect()).collect();
    let identity = index[&Perm::identity(n)];

    fn propagate(a: &GroupTable, auts: &[Perm], compose: &[Vec<usize>], lambda: &mut [Option<usize>]) -> bool {
        let n = a.order();
        loop {
            let mut changed = false;
            for x in 0..n {
                let Some(lx) = lambda[x] else { continue };
                for y in 0..n {
                    let Some(ly) = lambda[y] else { continue };
                    let target = a.mul(x, auts[lx].apply(y));
                    let required = compose[lx][ly];
                    match lambda[target] {
                        Some(v) if v != required => return false,
                        Some(_) => {}
                        None => {
                            lambda[target] = Some(required);
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn search(
        a: &GroupTable,
        auts: &[Perm],
        compose: &[Vec<usize>],
        lambda: Vec<Option<usize>>,
        out: &mut Vec<Vec<usize>>,
    ) {
        match lambda.iter().position(Option::is_none) {
            None => out.push(lambda.into_iter().map(|l| l.expect("complete")).collect()),
            Some(x) => {
                for f in 0..auts.len() {
                    let mut next = lambda.clone();
                    next[x] = Some(f);
                    if propagate(a, auts, compose, &mut next) {
                        search(a, auts, compose, next, out);
                    }
                }
            }
        }
    }

    let mut lambda = vec![None; n];
    lambda[0] = Some(identity);
    let mut out = Vec::new();
    if propagate(a, auts, &compose, &mut lambda) {
        search(a, auts, &compose, lambda, &mut out);
    }
    out
}

fn holomorph_braces(n: usize) -> Result<Vec<FiniteSkewBrace>> {
    check_range(n, MAX_GROUP_ORDER)?;
    let groups = enumerate_groups(n)?;
    let per_group: Vec<Result<Vec<FiniteSkewBrace>>> = groups
        .par_iter()
        .map(|a| {
            let auts = automorphisms(a);
            let mut reps: Vec<FiniteSkewBrace> = Vec::new();
            for lambda in regular_subgroups(a, &auts) {
                let mul: Vec<usize> =
                    (0..n * n).map(|p| a.mul(p / n, auts[lambda[p / n]].apply(p % n))).collect();
                let b = FiniteSkewBrace::from_tables(n, a.table().to_vec(), mul)
                    .map_err(|e| Error::Construction(format!("holomorph brace failed verification: {e}")))?;
                // same additive table, so isomorphisms are automorphisms of A
                let duplicate = reps.iter().any(|r| {
                    auts.iter().any(|f| {
                        (0..n).all(|x| (0..n).all(|y| f.apply(b.mul(x, y)) == r.mul(f.apply(x), f.apply(y))))
                    })
                });
                if !duplicate {
                    reps.push(b);
                }
            }
            Ok(reps)
        })
        .collect();
    let mut all = Vec::new();
    for r in per_group {
        all.extend(r?);
    }
    sorted_canonical(all)
}

// ---------------------------------------------------------------------------
// Solutions

fn keep(sol: &SolutionTable, require_nondegenerate: bool, require_involutive: bool) -> bool {
    sol.is_ybe()
        && (!require_nondegenerate || sol.is_nondegenerate())
        && (!require_involutive || sol.is_involutive())
}

/// Scans all `(n²)!` bijections of `X × X`.
pub fn naive_solutions(n: usize, require_nondegenerate: bool, require_involutive: bool) -> Result<Vec<SolutionTable>> {
    check_range(n, MAX_SOLUTION_SIZE)?;
    let pairs = n * n;
    let mut out: Vec<SolutionTable> = (0..pairs)
        .permutations(pairs)
        .par_bridge()
        .map(|images| SolutionTable::from_encoded(n, images))
        .filter(|sol| keep(sol, require_nondegenerate, require_involutive))
        .collect();
    out.sort();
    Ok(out)
}

/// Ranges over families of permutations `σ_x`, `τ_y` and keeps the
/// bijective solutions. Only produces non-degenerate solutions.
pub fn nondegenerate_solutions(n: usize, require_involutive: bool) -> Result<Vec<SolutionTable>> {
    check_range(n, MAX_SOLUTION_SIZE)?;
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let families: Vec<Vec<&Vec<usize>>> =
        (0..n).map(|_| perms.iter()).multi_cartesian_product().collect();
    let mut out: Vec<SolutionTable> = families
        .par_iter()
        .flat_map_iter(|sigma| {
            families.iter().filter_map(move |tau| {
                let images: Vec<usize> = (0..n * n).map(|p| sigma[p / n][p % n] * n + tau[p % n][p / n]).collect();
                if !crate::perm::is_bijection(&images) {
                    return None;
                }
                let sol = SolutionTable::from_encoded(n, images);
                keep(&sol, true, require_involutive).then_some(sol)
            })
        })
        .collect();
    out.sort();
    Ok(out)
}

/// All solutions of size `n` as raw tables, sorted. Non-degenerate requests
/// use the `(σ, τ)` generator; otherwise the full bijection scan.
pub fn enumerate_solutions(n: usize, require_nondegenerate: bool, require_involutive: bool) -> Result<Vec<SolutionTable>> {
    if require_nondegenerate {
        nondegenerate_solutions(n, require_involutive)
    } else {
        naive_solutions(n, false, require_involutive)
    }
}
