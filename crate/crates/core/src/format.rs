//! Text formats for solutions, braces, presentations, catalogs and
//! permutation-brace labels.
//!
//! All indices are 0-based. Writers emit one trailing newline; parsers accept
//! any amount of whitespace between tokens and ignore trailing blank lines.

use std::collections::HashSet;

use thiserror::Error;

use crate::brace::FiniteSkewBrace;
use crate::bword::parse_bword;
use crate::enumerate::{BraceCatalog, EnumerationMethod};
use crate::perm::Perm;
use crate::presentation::SkewBracePresentation;
use crate::solution::SolutionTable;
use crate::structure::PermPair;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

type Parsed<T> = Result<T, FormatError>;

/// A word on a line together with its 1-based column.
#[derive(Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl<'a> Line<'a> {
    fn tokens(&self) -> Vec<Token<'a>> {
        let mut out = Vec::new();
        let mut start = None;
        for (i, c) in self.text.char_indices().chain(std::iter::once((self.text.len(), ' '))) {
            match (c.is_whitespace(), start) {
                (true, Some(s)) => {
                    out.push(Token { text: &self.text[s..i], column: self.text[..s].chars().count() + 1 });
                    start = None;
                }
                (false, None) => start = Some(i),
                _ => {}
            }
        }
        out
    }

    fn error<T>(&self, column: usize, message: impl Into<String>) -> Parsed<T> {
        Err(FormatError { line: self.number, column, message: message.into() })
    }

    fn end_column(&self) -> usize {
        self.text.chars().count() + 1
    }
}

struct Lines<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str, first_line: usize) -> Self {
        let mut lines: Vec<Line<'a>> =
            text.lines().enumerate().map(|(i, t)| Line { number: first_line + i, text: t }).collect();
        while lines.last().is_some_and(|l| l.text.trim().is_empty()) {
            lines.pop();
        }
        Lines { lines, pos: 0 }
    }

    fn next(&mut self, what: &str) -> Parsed<&Line<'a>> {
        let last = self.lines.last().map(|l| l.number + 1).unwrap_or(1);
        let line = self
            .lines
            .get(self.pos)
            .ok_or_else(|| FormatError { line: last, column: 1, message: format!("unexpected end of input, expected {what}") })?;
        self.pos += 1;
        Ok(line)
    }

    fn finish(&self) -> Parsed<()> {
        match self.lines.get(self.pos) {
            Some(l) => l.error(1, "unexpected trailing content"),
            None => Ok(()),
        }
    }
}

fn parse_index(tok: Token<'_>, line: &Line<'_>, bound: Option<usize>) -> Parsed<usize> {
    let v: usize = match tok.text.parse() {
        Ok(v) => v,
        Err(_) => return line.error(tok.column, format!("expected a non-negative integer, found `{}`", tok.text)),
    };
    if let Some(n) = bound {
        if v >= n {
            return line.error(tok.column, format!("index {v} out of range for size {n}"));
        }
    }
    Ok(v)
}

/// Parses `keyword <n>` with `n >= 1`.
fn parse_header(line: &Line<'_>, keyword: &str) -> Parsed<usize> {
    let toks = line.tokens();
    match toks.as_slice() {
        [k, n] if k.text == keyword => {
            let n = parse_index(*n, line, None)?;
            if n == 0 {
                return line.error(toks[1].column, "size must be positive");
            }
            Ok(n)
        }
        _ => line.error(1, format!("expected `{keyword} <n>`")),
    }
}

fn expect_keyword(line: &Line<'_>, keyword: &str) -> Parsed<()> {
    let toks = line.tokens();
    match toks.as_slice() {
        [k] if k.text == keyword => Ok(()),
        _ => line.error(1, format!("expected `{keyword}`")),
    }
}

// ---------------------------------------------------------------------------
// Solutions

pub fn write_solution(sol: &SolutionTable) -> String {
    let mut out = format!("solution {}\n", sol.size());
    for ((i, j), (k, l)) in sol.pairs() {
        out.push_str(&format!("{i} {j} -> {k} {l}\n"));
    }
    out
}

pub fn parse_solution(text: &str) -> Parsed<SolutionTable> {
    let mut lines = Lines::new(text, 1);
    let header = lines.next("`solution <n>`")?;
    let n = parse_header(header, "solution")?;
    let mut images: Vec<Option<(usize, usize)>> = vec![None; n * n];
    let mut hit = vec![false; n * n];
    for _ in 0..n * n {
        let line = lines.next("a pair line `i j -> k l`")?;
        let toks = line.tokens();
        if toks.len() != 5 || toks[2].text != "->" {
            return line.error(1, "expected `i j -> k l`");
        }
        let i = parse_index(toks[0], line, Some(n))?;
        let j = parse_index(toks[1], line, Some(n))?;
        let k = parse_index(toks[3], line, Some(n))?;
        let l = parse_index(toks[4], line, Some(n))?;
        if images[i * n + j].is_some() {
            return line.error(toks[0].column, format!("duplicate pair ({i}, {j})"));
        }
        if std::mem::replace(&mut hit[k * n + l], true) {
            return line.error(toks[3].column, format!("image ({k}, {l}) already taken; the map must be a bijection"));
        }
        images[i * n + j] = Some((k, l));
    }
    lines.finish()?;
    if let Some(p) = images.iter().position(Option::is_none) {
        return Err(FormatError { line: 1, column: 1, message: format!("missing pair ({}, {})", p / n, p % n) });
    }
    let pairs: Vec<(usize, usize)> = images.into_iter().map(|p| p.expect("checked")).collect();
    SolutionTable::new(n, &pairs).map_err(|e| FormatError { line: 1, column: 1, message: e.to_string() })
}

// ---------------------------------------------------------------------------
// Braces

fn write_table(out: &mut String, n: usize, cell: impl Fn(usize, usize) -> usize) {
    for a in 0..n {
        let row: Vec<String> = (0..n).map(|b| cell(a, b).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

pub fn write_brace(b: &FiniteSkewBrace) -> String {
    let n = b.order();
    let mut out = format!("brace {n}\nadd\n");
    write_table(&mut out, n, |x, y| b.add(x, y));
    out.push_str("mul\n");
    write_table(&mut out, n, |x, y| b.mul(x, y));
    out
}

fn parse_table(lines: &mut Lines<'_>, n: usize, name: &str) -> Parsed<Vec<usize>> {
    expect_keyword(lines.next(&format!("`{name}`"))?, name)?;
    let mut table = Vec::with_capacity(n * n);
    for _ in 0..n {
        let line = lines.next(&format!("a row of the {name} table"))?;
        let toks = line.tokens();
        if toks.len() != n {
            return line.error(
                toks.get(n).map(|t| t.column).unwrap_or_else(|| line.end_column()),
                format!("row has {} entries, expected {n}", toks.len()),
            );
        }
        for t in toks {
            table.push(parse_index(t, line, Some(n))?);
        }
    }
    Ok(table)
}

fn parse_brace_lines(lines: &mut Lines<'_>) -> Parsed<FiniteSkewBrace> {
    let header = lines.next("`brace <n>`")?;
    let n = parse_header(header, "brace")?;
    let line_no = header.number;
    let add = parse_table(lines, n, "add")?;
    let mul = parse_table(lines, n, "mul")?;
    FiniteSkewBrace::unverified(n, add, mul).map_err(|e| FormatError { line: line_no, column: 1, message: e.to_string() })
}

/// Parses tables only; the axioms are left to [`FiniteSkewBrace::verify`].
pub fn parse_brace(text: &str) -> Parsed<FiniteSkewBrace> {
    let mut lines = Lines::new(text, 1);
    let b = parse_brace_lines(&mut lines)?;
    lines.finish()?;
    Ok(b)
}

// ---------------------------------------------------------------------------
// Permutation brace labels

pub fn write_perm_brace(b: &FiniteSkewBrace, labels: &[PermPair]) -> String {
    let mut out = write_brace(b);
    out.push_str("labels\n");
    for (e, l) in labels.iter().enumerate() {
        out.push_str(&format!("{e} : {} | {}\n", l.first, l.second));
    }
    out
}

pub fn parse_perm_brace(text: &str) -> Parsed<(FiniteSkewBrace, Vec<PermPair>)> {
    let mut lines = Lines::new(text, 1);
    let b = parse_brace_lines(&mut lines)?;
    expect_keyword(lines.next("`labels`")?, "labels")?;
    let mut labels = Vec::with_capacity(b.order());
    let mut seen = HashSet::new();
    for e in 0..b.order() {
        let line = lines.next("a label line `e : p1 | p2`")?;
        let toks = line.tokens();
        let bar = toks.iter().position(|t| t.text == "|");
        let (Some(bar), true) = (bar, toks.len() >= 4 && toks[1].text == ":") else {
            return line.error(1, "expected `e : p1 | p2`");
        };
        let idx = parse_index(toks[0], line, None)?;
        if idx != e {
            return line.error(toks[0].column, format!("expected label for element {e}, found {idx}"));
        }
        let perm = |part: &[Token<'_>]| -> Parsed<Perm> {
            let images = part.iter().map(|t| parse_index(*t, line, Some(part.len()))).collect::<Parsed<Vec<_>>>()?;
            Perm::from_images(images).map_or_else(|| line.error(part.first().map_or(1, |t| t.column), "not a permutation"), Ok)
        };
        let first = perm(&toks[2..bar])?;
        let second = perm(&toks[bar + 1..])?;
        if first.len() != second.len() {
            return line.error(toks[bar].column, "components have different degrees");
        }
        let pair = PermPair { first, second };
        if !seen.insert(pair.clone()) {
            return line.error(1, "labels must be distinct");
        }
        labels.push(pair);
    }
    lines.finish()?;
    Ok((b, labels))
}

// ---------------------------------------------------------------------------
// Presentations

pub fn write_presentation(p: &SkewBracePresentation) -> String {
    let mut out = String::from("presentation\ngens");
    for g in p.generators() {
        out.push(' ');
        out.push_str(g);
    }
    out.push('\n');
    for r in p.relators() {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit())
}

pub fn parse_presentation(text: &str) -> Parsed<SkewBracePresentation> {
    let mut lines = Lines::new(text, 1);
    expect_keyword(lines.next("`presentation`")?, "presentation")?;
    let gens_line = lines.next("`gens …`")?;
    let toks = gens_line.tokens();
    if toks.first().map(|t| t.text) != Some("gens") {
        return gens_line.error(1, "expected `gens <name>…`");
    }
    let mut generators = Vec::new();
    let mut declared = HashSet::new();
    for t in &toks[1..] {
        if !valid_name(t.text) {
            return gens_line.error(t.column, format!("invalid generator name `{}`", t.text));
        }
        if !declared.insert(t.text) {
            return gens_line.error(t.column, format!("duplicate generator `{}`", t.text));
        }
        generators.push(t.text.to_string());
    }
    let mut relators = Vec::new();
    while lines.pos < lines.lines.len() {
        let line = lines.next("a relator")?;
        let w = parse_bword(line.text).map_err(|e| FormatError { line: line.number, column: e.column, message: e.message })?;
        if let Some(g) = w.generators().into_iter().find(|g| !declared.contains(g)) {
            return line.error(1, format!("undeclared generator `{g}`"));
        }
        relators.push(w);
    }
    SkewBracePresentation::new(generators, relators).map_err(|e| FormatError { line: 2, column: 1, message: e.to_string() })
}

// ---------------------------------------------------------------------------
// Catalogs

pub fn write_catalog(c: &BraceCatalog) -> String {
    let mut out = format!("catalog {} {} {}\n", c.order, c.braces.len(), c.method);
    let blocks: Vec<String> = c.braces.iter().map(write_brace).collect();
    out.push_str(&blocks.join("\n"));
    out
}

pub fn parse_catalog(text: &str) -> Parsed<BraceCatalog> {
    let mut lines = Lines::new(text, 1);
    let header = lines.next("`catalog <n> <count> <method>`")?;
    let toks = header.tokens();
    if toks.len() != 4 || toks[0].text != "catalog" {
        return header.error(1, "expected `catalog <n> <count> <method>`");
    }
    let order = parse_index(toks[1], header, None)?;
    let count = parse_index(toks[2], header, None)?;
    let method: EnumerationMethod = toks[3].text.parse().map_or_else(|e: String| header.error(toks[3].column, e), Ok)?;
    let mut braces = Vec::with_capacity(count);
    for k in 0..count {
        if k > 0 {
            let sep = lines.next("a blank separator line")?;
            if !sep.text.trim().is_empty() {
                return sep.error(1, "expected a blank line between braces");
            }
        }
        let b = parse_brace_lines(&mut lines)?;
        if b.order() != order {
            let line = &lines.lines[lines.pos.saturating_sub(1)];
            return line.error(1, format!("brace has order {}, catalog declares {order}", b.order()));
        }
        braces.push(b);
    }
    lines.finish()?;
    Ok(BraceCatalog { order, method, braces })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::make_trivial;
    use crate::group::GroupTable;
    use crate::solution::make_flip;

    #[test]
    fn flip_round_trips() {
        let text = write_solution(&make_flip(2).unwrap());
        assert_eq!(text, "solution 2\n0 0 -> 0 0\n0 1 -> 1 0\n1 0 -> 0 1\n1 1 -> 1 1\n");
        assert_eq!(write_solution(&parse_solution(&text).unwrap()), text);
    }

    #[test]
    fn solution_errors() {
        let dup = "solution 2\n0 0 -> 0 0\n0 0 -> 1 0\n1 0 -> 0 1\n1 1 -> 1 1\n";
        let e = parse_solution(dup).unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("duplicate"));
        let missing = "solution 2\n0 0 -> 0 0\n0 1 -> 1 0\n1 0 -> 0 1\n";
        assert!(parse_solution(missing).unwrap_err().message.contains("end of input"));
        let range = "solution 1\n0 0 -> 0 1\n";
        let e = parse_solution(range).unwrap_err();
        assert_eq!((e.line, e.column), (2, 10));
    }

    #[test]
    fn brace_round_trips() {
        let b = make_trivial(&GroupTable::symmetric3());
        let text = write_brace(&b);
        assert!(text.starts_with("brace 6\nadd\n0 1 2 3 4 5\n"));
        assert_eq!(parse_brace(&text).unwrap(), b);
        assert_eq!(write_brace(&parse_brace(&text).unwrap()), text);
    }

    #[test]
    fn short_row_reports_line() {
        let text = "brace 2\nadd\n0 1\n1\nmul\n0 1\n1 0\n";
        let e = parse_brace(text).unwrap_err();
        assert_eq!(e.line, 4);
    }

    #[test]
    fn presentation_errors() {
        let text = "presentation\ngens x1\n(x1 + x2)\n";
        let e = parse_presentation(text).unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("x2"));
        let p = parse_presentation("presentation\ngens\n0\n").unwrap();
        assert!(p.generators().is_empty());
        assert_eq!(write_presentation(&p), "presentation\ngens\n0\n");
    }
}
