//! End-to-end acceptance checks, one printed PASS/FAIL line each.
//!
//! Runs without the libtest harness so the summary is always shown:
//! `cargo test -p skewbrace-cli --test acceptance`.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use skewbrace::brace::laws;
use skewbrace::bword::BWord;
use skewbrace::enumerate::{enumerate_groups, enumerate_skew_braces, enumerate_solutions, naive_solutions, BraceCatalog, EnumerationMethod};
use skewbrace::format;
use skewbrace::group::GroupTable;
use skewbrace::ideals::{self, ElementSubset, IdealSearch};
use skewbrace::presentation::{extend_presentation, table_presentation, trivial_brace_presentation};
use skewbrace::structure::{check_image_relations, emit_add_presentation, emit_mul_presentation, permutation_brace};
use skewbrace::{make_flip, make_trivial, solution_from_brace, Assignment, FiniteSkewBrace};

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Catalogs(Vec<BraceCatalog>);

impl Catalogs {
    fn up_to(n: usize) -> Catalogs {
        Catalogs(
            (1..=n)
                .map(|k| enumerate_skew_braces(k, EnumerationMethod::Holomorph).expect("supported order"))
                .collect(),
        )
    }

    fn braces(&self) -> impl Iterator<Item = &FiniteSkewBrace> {
        self.0.iter().flat_map(|c| c.braces.iter())
    }
}

fn axiom_battery(cats: &Catalogs) -> Check {
    let counts: Vec<usize> = cats.0.iter().map(|c| c.braces.len()).collect();
    ensure(counts == [1, 1, 1, 4, 1, 6], || format!("catalog sizes {counts:?}"))?;
    for b in cats.braces() {
        let report = b.verify();
        ensure(report.passed(), || format!("order {} brace fails: {}", b.order(), report.violations[0]))?;
        if let Some((law, w)) = laws::identity_pack(b) {
            return Err(format!("{law} fails at {w:?}"));
        }
        if let Some((law, w)) = laws::star_identities(b) {
            return Err(format!("{law} fails at {w:?}"));
        }
        if let Some(w) = laws::commutator_identity(b) {
            return Err(format!("commutator identity fails at {w:?}"));
        }
    }
    Ok(format!("{} braces, catalog sizes {counts:?}", counts.iter().sum::<usize>()))
}

fn oracle_agreement() -> Check {
    let mut counts = Vec::new();
    for n in 1..=4 {
        let naive = enumerate_skew_braces(n, EnumerationMethod::Naive).map_err(|e| e.to_string())?;
        let holo = enumerate_skew_braces(n, EnumerationMethod::Holomorph).map_err(|e| e.to_string())?;
        ensure(naive.braces == holo.braces, || format!("methods disagree at order {n}"))?;
        counts.push(naive.braces.len());
    }
    ensure(counts[..3] == [1, 1, 1], || format!("counts {counts:?}"))?;
    for n in 1..=3 {
        let cat = enumerate_skew_braces(n, EnumerationMethod::Naive).map_err(|e| e.to_string())?;
        ensure(cat.braces.iter().all(FiniteSkewBrace::is_trivial), || format!("non-trivial brace at order {n}"))?;
    }
    Ok(format!("naive = holomorph for n <= 4, counts {counts:?}"))
}

fn solution_functor(cats: &Catalogs) -> Check {
    let mut checked = 0;
    for b in cats.braces() {
        let sol = solution_from_brace(b);
        ensure(sol.is_ybe() && sol.is_nondegenerate(), || format!("order {} brace gives a bad solution", b.order()))?;
        checked += 1;
    }
    Ok(format!("{checked} solutions are non-degenerate YBE solutions"))
}

fn structure_soundness() -> Check {
    for n in 1..=2 {
        let naive = naive_solutions(n, true, false).map_err(|e| e.to_string())?;
        let fast = enumerate_solutions(n, true, false).map_err(|e| e.to_string())?;
        ensure(naive == fast, || format!("solution generators disagree at size {n}"))?;
    }
    let mut sizes = Vec::new();
    let mut largest = 0;
    for n in 1..=3 {
        let sols = enumerate_solutions(n, true, false).map_err(|e| e.to_string())?;
        sizes.push(sols.len());
        for sol in &sols {
            let pb = permutation_brace(sol).map_err(|e| format!("{e} for\n{}", format::write_solution(sol)))?;
            ensure(pb.brace.verify().passed(), || format!("permutation brace fails verify for\n{}", format::write_solution(sol)))?;
            let ok = check_image_relations(sol, &pb).map_err(|e| e.to_string())?;
            ensure(ok, || format!("image relations fail for\n{}", format::write_solution(sol)))?;
            largest = largest.max(pb.brace.order());
        }
    }
    Ok(format!("solutions per size {sizes:?}, largest permutation brace {largest}"))
}

fn presentation_soundness(cats: &Catalogs) -> Check {
    let mut extensions = 0;
    let mut relators = 0;
    for b in cats.braces() {
        let (p, a) = table_presentation(b);
        ensure(p.failing_relators(b, &a).map_err(|e| e.to_string())?.is_empty(), || {
            format!("table presentation fails on order {}", b.order())
        })?;
        for i in ideals::all_ideals(b, IdealSearch::Auto) {
            if i.is_zero() || i.is_full() {
                continue;
            }
            let (p, a, _) = extend_presentation(b, &i).map_err(|e| e.to_string())?;
            let failing = p.failing_relators(b, &a).map_err(|e| e.to_string())?;
            ensure(failing.is_empty(), || {
                format!("extension relator {} fails for ideal {i} of\n{}", failing[0], format::write_brace(b))
            })?;
            extensions += 1;
            relators += p.relators().len();
        }
    }
    for k in 1..=8 {
        let b = make_trivial(&GroupTable::cyclic(k).map_err(|e| e.to_string())?);
        let p = trivial_brace_presentation(&[k]);
        let a = Assignment::from([("x1".to_string(), 1 % k)]);
        ensure(p.failing_relators(&b, &a).map_err(|e| e.to_string())?.is_empty(), || {
            format!("trivial presentation fails for Z/{k}")
        })?;
    }
    Ok(format!("{extensions} ideal extensions, {relators} relators; trivial Z/k for k <= 8"))
}

fn socle_claims(cats: &Catalogs) -> Check {
    let mut orbit_total = 0;
    for b in cats.braces() {
        let n = b.order();
        let soc = ideals::socle(b);
        for a in 0..n {
            for c in soc.elements() {
                let conj = b.mul(b.mul(a, c), b.inv(a));
                ensure(b.lambda(a, c) == conj, || format!("λ_{a}({c}) ≠ {a}∘{c}∘{a}⁻¹ in order {n}"))?;
            }
        }
        for k in 0..=6 {
            let m = ideals::socle_multiples(b, k);
            ensure(ideals::is_ideal(b, &m), || format!("{k}·Soc is not an ideal in order {n}"))?;
        }
        for x in 0..n {
            let c = ideals::conjugates(b, x).map_err(|e| e.to_string())?;
            ensure(c.contains(x) || x == 0, || format!("conjugates of {x} miss {x}"))?;
            orbit_total += c.len();
        }
    }
    Ok(format!("λ_a(c) = a∘c∘a⁻¹ on every socle; k·Soc ideals for k <= 6; {orbit_total} conjugate elements in total"))
}

fn series_coherence() -> Check {
    let mut groups = 0;
    for n in 1..=8 {
        for g in enumerate_groups(n).map_err(|e| e.to_string())? {
            let b = make_trivial(&g);
            let series: Vec<Vec<bool>> =
                ideals::upper_annihilator_series(&b).terms.iter().map(|t| (0..n).map(|e| t.contains(e)).collect()).collect();
            ensure(series == g.upper_central_series(), || format!("series mismatch for a group of order {n}"))?;
            if g.is_abelian() {
                let expected: Vec<ElementSubset> = if n == 1 {
                    vec![ElementSubset::zero(1)]
                } else {
                    vec![ElementSubset::zero(n), ElementSubset::full(n)]
                };
                ensure(ideals::upper_annihilator_series(&b).terms == expected, || {
                    format!("abelian group of order {n} has a longer series")
                })?;
            }
            groups += 1;
        }
    }
    Ok(format!("{groups} groups of order <= 8"))
}

fn flip_degeneration() -> Check {
    for n in 1..=4 {
        let flip = make_flip(n).map_err(|e| e.to_string())?;
        let pb = permutation_brace(&flip).map_err(|e| e.to_string())?;
        ensure(pb.brace.order() == 1, || format!("flip on {n} points gives order {}", pb.brace.order()))?;
        let p = emit_mul_presentation(&flip);
        for ((x, y), _) in flip.pairs() {
            let gen = |i: usize| BWord::gen(format!("x{}", i + 1));
            let commutation = BWord::quotient(BWord::prod(gen(x), gen(y)), BWord::prod(gen(y), gen(x)));
            ensure(p.relators()[x * n + y] == commutation, || format!("relator ({x}, {y}) is {}", p.relators()[x * n + y]))?;
        }
    }
    Ok("one-element brace and commutation relators for n <= 4".into())
}

fn round_trip<T: PartialEq>(text: &str, parse: impl Fn(&str) -> Result<T, format::FormatError>, write: impl Fn(&T) -> String) -> Result<(), String> {
    let value = parse(text).map_err(|e| format!("{e} in\n{text}"))?;
    ensure(write(&value) == text, || format!("not byte-exact:\n{text}"))
}

const MALFORMED: [(&str, &[&str]); 10] = [
    ("brace_short_row.brc", &["verify-brace"]),
    ("brace_entry_out_of_range.brc", &["verify-brace"]),
    ("brace_truncated.brc", &["invariants"]),
    ("brace_bad_header.brc", &["verify-brace"]),
    ("solution_duplicate_pair.sol", &["verify-solution"]),
    ("solution_missing_arrow.sol", &["verify-solution"]),
    ("solution_out_of_range.sol", &["perm-brace"]),
    ("solution_not_bijective.sol", &["verify-solution"]),
    ("presentation_undeclared_generator.prs", &["check-presentation"]),
    ("presentation_unbalanced.prs", &["check-presentation"]),
];

fn format_round_trips(cats: &Catalogs) -> Check {
    let mut files = 0;
    for n in 1..=3 {
        for sol in enumerate_solutions(n, true, false).map_err(|e| e.to_string())? {
            round_trip(&format::write_solution(&sol), format::parse_solution, format::write_solution)?;
            let pb = permutation_brace(&sol).map_err(|e| e.to_string())?;
            let text = format::write_perm_brace(&pb.brace, &pb.labels);
            round_trip(&text, format::parse_perm_brace, |(b, l)| format::write_perm_brace(b, l))?;
            for p in [emit_mul_presentation(&sol), emit_add_presentation(&sol)] {
                round_trip(&format::write_presentation(&p), format::parse_presentation, format::write_presentation)?;
            }
            files += 5;
        }
    }
    for cat in &cats.0 {
        round_trip(&format::write_catalog(cat), format::parse_catalog, format::write_catalog)?;
        files += 1;
        for b in &cat.braces {
            round_trip(&format::write_brace(b), format::parse_brace, format::write_brace)?;
            round_trip(&format::write_presentation(&table_presentation(b).0), format::parse_presentation, format::write_presentation)?;
            files += 2;
            for i in ideals::all_ideals(b, IdealSearch::Auto) {
                let (p, _, _) = extend_presentation(b, &i).map_err(|e| e.to_string())?;
                round_trip(&format::write_presentation(&p), format::parse_presentation, format::write_presentation)?;
                files += 1;
            }
        }
    }
    let naive4 = enumerate_skew_braces(4, EnumerationMethod::Naive).map_err(|e| e.to_string())?;
    round_trip(&format::write_catalog(&naive4), format::parse_catalog, format::write_catalog)?;

    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let good_brace = dir.join("z2.brc");
    for (name, cmd) in MALFORMED {
        let path = dir.join("malformed").join(name);
        ensure(path.exists(), || format!("missing fixture {name}"))?;
        let mut args: Vec<String> = vec!["skewbrace".into()];
        args.extend(cmd.iter().map(|s| s.to_string()));
        args.push(path.display().to_string());
        if cmd[0] == "check-presentation" {
            args.extend(["--in".into(), good_brace.display().to_string(), "--assign".into(), "x1=1".into()]);
        }
        let result = skewbrace_cli::run(&args);
        ensure(result.status == 2, || format!("{name} exits {} with\n{}", result.status, result.report))?;
    }
    Ok(format!("{files} canonical files round-trip; {} malformed fixtures rejected", MALFORMED.len()))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let cats = Catalogs::up_to(6);
    let criteria: Vec<Criterion> = vec![
        ("axiom battery", Box::new(|| axiom_battery(&cats)), Duration::from_secs(120)),
        ("oracle agreement", Box::new(oracle_agreement), Duration::MAX),
        ("solution functor", Box::new(|| solution_functor(&cats)), Duration::MAX),
        ("structure-brace soundness", Box::new(structure_soundness), Duration::from_secs(300)),
        ("presentation soundness", Box::new(|| presentation_soundness(&cats)), Duration::from_secs(180)),
        ("socle identity, socle multiples, conjugates", Box::new(|| socle_claims(&cats)), Duration::MAX),
        ("series coherence", Box::new(series_coherence), Duration::MAX),
        ("flip degeneration", Box::new(flip_degeneration), Duration::MAX),
        ("format round-trips", Box::new(|| format_round_trips(&cats)), Duration::MAX),
    ];
    let mut failed = 0;
    for (k, (name, check, budget)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = check();
        let elapsed = t.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > *budget => Err(format!("{msg}; took {elapsed:.2?}, budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {}: PASS  {name} ({msg}) [{elapsed:.2?}]", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {msg} [{elapsed:.2?}]", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed in {:.2?}", criteria.len() - failed, criteria.len(), start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
