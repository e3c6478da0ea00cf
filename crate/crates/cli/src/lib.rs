//! Command-line front end for `skewbrace`.
//!
//! [`run`] parses arguments, dispatches to a subcommand and renders a
//! [`CommandResult`]; the binary only prints it and exits with its status.
//! Status 0 means success or a positive answer, 1 a negative mathematical
//! answer on well-formed input, and 2 a usage, I/O or format error.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use skewbrace::enumerate::{enumerate_skew_braces, enumerate_solutions, EnumerationMethod};
use skewbrace::format::{self, FormatError};
use skewbrace::ideals::{self, ElementSubset, IdealSearch, SUBGROUP_SEARCH_LIMIT};
use skewbrace::presentation::{extend_presentation, table_presentation, trivial_brace_presentation};
use skewbrace::structure::{check_image_relations, emit_add_presentation, emit_mul_presentation, permutation_brace};
use skewbrace::{solution_from_brace, Assignment, Error, FiniteSkewBrace, SkewBracePresentation, SolutionTable};

pub const STATUS_OK: i32 = 0;
pub const STATUS_NEGATIVE: i32 = 1;
pub const STATUS_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "skewbrace", version, about = "Finite skew braces and Yang-Baxter solutions")]
struct Cli {
    /// Emit a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the braid relation, non-degeneracy and involutivity of a solution.
    VerifySolution { file: PathBuf },
    /// Check every skew brace axiom of a pair of tables.
    VerifyBrace { file: PathBuf },
    /// Print the solution r(a, c) = (λ_a(c), λ_a(c)⁻¹∘a∘c) of a skew brace.
    BraceToSolution { file: PathBuf },
    /// Print the component maps σ_x and τ_y of a solution.
    SolutionDiagonal { file: PathBuf },
    /// Build the permutation skew brace of a non-degenerate solution.
    PermBrace {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the multiplicative or additive structure presentation.
    #[command(group(ArgGroup::new("kind").required(true).args(["mul", "add"])))]
    PresentStructure {
        file: PathBuf,
        #[arg(long)]
        mul: bool,
        #[arg(long)]
        add: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the multiplication-table presentation of a skew brace.
    PresentTable { file: PathBuf },
    /// Emit the presentation of the trivial skew brace on a product of cyclic groups (0 = infinite).
    PresentTrivial {
        #[arg(long, value_delimiter = ',', required = true)]
        orders: Vec<usize>,
    },
    /// Emit the presentation built from an ideal and its quotient.
    ExtendPresentation {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        ideal: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate every relator of a presentation in a skew brace.
    CheckPresentation {
        file: PathBuf,
        #[arg(long = "in")]
        brace: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "")]
        assign: Vec<String>,
    },
    /// Socle, annihilator, B⁽²⁾, ascending series, simplicity and ideals.
    Invariants { file: PathBuf },
    /// The orbit of an element under the action of B on itself.
    Conjugates {
        file: PathBuf,
        #[arg(long)]
        element: usize,
    },
    /// All skew braces of an order, up to isomorphism.
    EnumerateBraces {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value = "holomorph")]
        method: EnumerationMethod,
    },
    /// All solutions on a set of the given size, as raw tables.
    EnumerateSolutions {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        nondegenerate: bool,
        #[arg(long)]
        involutive: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::VerifySolution { .. } => "verify-solution",
            Command::VerifyBrace { .. } => "verify-brace",
            Command::BraceToSolution { .. } => "brace-to-solution",
            Command::SolutionDiagonal { .. } => "solution-diagonal",
            Command::PermBrace { .. } => "perm-brace",
            Command::PresentStructure { .. } => "present-structure",
            Command::PresentTable { .. } => "present-table",
            Command::PresentTrivial { .. } => "present-trivial",
            Command::ExtendPresentation { .. } => "extend-presentation",
            Command::CheckPresentation { .. } => "check-presentation",
            Command::Invariants { .. } => "invariants",
            Command::Conjugates { .. } => "conjugates",
            Command::EnumerateBraces { .. } => "enumerate-braces",
            Command::EnumerateSolutions { .. } => "enumerate-solutions",
        }
    }
}

/// Outcome of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandResult {
    pub status: i32,
    /// Text (or JSON when `--json` was given) for the report stream.
    pub report: String,
    /// Files written by `--out`.
    pub outputs: Vec<PathBuf>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    command: &'a str,
    status: i32,
    report: &'a str,
    witnesses: &'a [Value],
    counts: &'a BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "serde_json::Map::is_empty")]
    data: &'a serde_json::Map<String, Value>,
}

#[derive(Default)]
struct Report {
    status: i32,
    text: String,
    witnesses: Vec<Value>,
    counts: BTreeMap<String, usize>,
    data: serde_json::Map<String, Value>,
    outputs: Vec<PathBuf>,
}

impl Report {
    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn count(&mut self, key: &str, v: usize) {
        self.counts.insert(key.to_string(), v);
    }

    fn witness(&mut self, v: Value) {
        self.witnesses.push(v);
    }

    fn data(&mut self, key: &str, v: impl Into<Value>) {
        self.data.insert(key.to_string(), v.into());
    }

    fn negative(&mut self) {
        self.status = STATUS_NEGATIVE;
    }
}

/// A usage, I/O or format problem (status 2).
struct Failure(String);

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<Report, Failure>;

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn located(path: &Path, e: FormatError) -> Failure {
    Failure(format!("{}:{}:{}: {}", path.display(), e.line, e.column, e.message))
}

fn load_solution(path: &Path) -> Result<SolutionTable, Failure> {
    format::parse_solution(&read(path)?).map_err(|e| located(path, e))
}

fn load_brace_tables(path: &Path) -> Result<FiniteSkewBrace, Failure> {
    format::parse_brace(&read(path)?).map_err(|e| located(path, e))
}

fn load_presentation(path: &Path) -> Result<SkewBracePresentation, Failure> {
    format::parse_presentation(&read(path)?).map_err(|e| located(path, e))
}

fn violation_witnesses(report: &mut Report, b: &FiniteSkewBrace) -> bool {
    let v = b.verify();
    for violation in &v.violations {
        report.line(format!("violation: {violation} at {:?}", violation.witness));
        report.witness(json!({
            "axiom": violation.axiom.name(),
            "elements": violation.witness,
            "detail": violation.detail,
        }));
    }
    v.passed()
}

/// Loads a brace file and checks the axioms; `Err(report)` carries the
/// negative answer with its witnesses.
fn load_brace(path: &Path) -> Result<Result<FiniteSkewBrace, Report>, Failure> {
    let b = load_brace_tables(path)?;
    let mut report = Report::default();
    if violation_witnesses(&mut report, &b) {
        return Ok(Ok(b));
    }
    report.line("skew brace: no");
    report.negative();
    Ok(Err(report))
}

macro_rules! brace_or_return {
    ($path:expr) => {
        match load_brace($path)? {
            Ok(b) => b,
            Err(report) => return Ok(report),
        }
    };
}

/// Rejects anything that is not a non-degenerate solution, with witnesses.
fn solution_problem(sol: &SolutionTable) -> Option<Report> {
    let mut report = Report::default();
    if let Some(w) = sol.braid_witness() {
        braid_lines(&mut report, &w);
        report.line("solution: no");
    } else if !sol.is_nondegenerate() {
        degeneracy_lines(&mut report, sol);
        report.line("non-degenerate: no");
    } else {
        return None;
    }
    report.negative();
    Some(report)
}

fn braid_lines(report: &mut Report, w: &skewbrace::solution::BraidWitness) {
    let [x, y, z] = w.triple;
    report.line(format!(
        "braid relation fails at ({x}, {y}, {z}): r12 r23 r12 gives {:?}, r23 r12 r23 gives {:?}",
        w.left, w.right
    ));
    report.witness(json!({ "kind": "braid", "triple": w.triple, "left": w.left, "right": w.right }));
}

fn degeneracy_lines(report: &mut Report, sol: &SolutionTable) {
    let diag = sol.extract_diagonal();
    for x in 0..sol.size() {
        if diag.sigma_perm(x).is_none() {
            report.line(format!("sigma_{x} is not a bijection"));
            report.witness(json!({ "kind": "sigma", "element": x }));
            return;
        }
        if diag.tau_perm(x).is_none() {
            report.line(format!("tau_{x} is not a bijection"));
            report.witness(json!({ "kind": "tau", "element": x }));
            return;
        }
    }
}

fn emit(report: &mut Report, text: String, out: Option<&Path>, summary: impl FnOnce(&mut Report)) -> Result<(), Failure> {
    report.data("text", text.clone());
    match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            report.outputs.push(path.to_path_buf());
            summary(report);
            report.line(format!("wrote {}", path.display()));
        }
        None => report.text.push_str(&text),
    }
    Ok(())
}

fn verify_solution(file: &Path) -> Outcome {
    let sol = load_solution(file)?;
    let mut report = Report::default();
    let ybe = sol.braid_witness();
    let nondeg = sol.is_nondegenerate();
    let invol = sol.is_involutive();
    report.line(format!(
        "YBE: {}; non-degenerate: {}; involutive: {}",
        yes_no(ybe.is_none()),
        yes_no(nondeg),
        yes_no(invol)
    ));
    if let Some(w) = &ybe {
        braid_lines(&mut report, w);
        report.negative();
    }
    if !nondeg {
        degeneracy_lines(&mut report, &sol);
    }
    report.count("size", sol.size());
    report.data("ybe", ybe.is_none());
    report.data("nondegenerate", nondeg);
    report.data("involutive", invol);
    Ok(report)
}

fn verify_brace(file: &Path) -> Outcome {
    let b = brace_or_return!(file);
    let mut report = Report::default();
    report.line("skew brace: yes");
    let abelian = b.additive_group().is_abelian();
    report.line(format!(
        "order: {}; additive group abelian: {}; trivial: {}",
        b.order(),
        yes_no(abelian),
        yes_no(b.is_trivial())
    ));
    report.count("order", b.order());
    report.data("abelian", abelian);
    report.data("trivial", b.is_trivial());
    Ok(report)
}

fn brace_to_solution(file: &Path) -> Outcome {
    let b = brace_or_return!(file);
    let mut report = Report::default();
    let sol = solution_from_brace(&b);
    report.count("size", sol.size());
    emit(&mut report, format::write_solution(&sol), None, |_| {})?;
    Ok(report)
}

fn solution_diagonal(file: &Path) -> Outcome {
    let sol = load_solution(file)?;
    let diag = sol.extract_diagonal();
    let mut report = Report::default();
    let row = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    for (x, s) in diag.sigma.iter().enumerate() {
        report.line(format!("sigma {x}: {}", row(s)));
    }
    for (y, t) in diag.tau.iter().enumerate() {
        report.line(format!("tau {y}: {}", row(t)));
    }
    report.count("size", sol.size());
    report.data("sigma", json!(diag.sigma));
    report.data("tau", json!(diag.tau));
    Ok(report)
}

fn perm_brace(file: &Path, out: Option<&Path>) -> Outcome {
    let sol = load_solution(file)?;
    if let Some(report) = solution_problem(&sol) {
        return Ok(report);
    }
    let pb = permutation_brace(&sol).map_err(|e| Failure(e.to_string()))?;
    let images = check_image_relations(&sol, &pb).map_err(|e| Failure(e.to_string()))?;
    let mut report = Report::default();
    report.count("order", pb.brace.order());
    report.data("generator_map", json!(pb.generator_map));
    report.data("image_relations", images);
    if !images {
        report.negative();
        report.witness(json!({ "kind": "image_relations" }));
    }
    let text = format::write_perm_brace(&pb.brace, &pb.labels);
    emit(&mut report, text, out, |r| {
        r.line(format!("permutation brace: order {}", pb.brace.order()));
        let gens: Vec<String> = pb.generator_map.iter().enumerate().map(|(x, e)| format!("g_{x} = {e}")).collect();
        r.line(format!("generators: {}", gens.join(", ")));
        r.line(format!("structure relations hold in image: {}", yes_no(images)));
    })?;
    Ok(report)
}

fn present_structure(file: &Path, mul: bool, out: Option<&Path>) -> Outcome {
    let sol = load_solution(file)?;
    if let Some(report) = solution_problem(&sol) {
        return Ok(report);
    }
    let p = if mul { emit_mul_presentation(&sol) } else { emit_add_presentation(&sol) };
    presentation_output(p, out)
}

fn presentation_output(p: SkewBracePresentation, out: Option<&Path>) -> Outcome {
    let mut report = Report::default();
    report.count("generators", p.generators().len());
    report.count("relators", p.relators().len());
    let text = format::write_presentation(&p);
    emit(&mut report, text, out, |r| {
        r.line(format!("{} generators, {} relators", p.generators().len(), p.relators().len()));
    })?;
    Ok(report)
}

fn present_table(file: &Path) -> Outcome {
    let b = brace_or_return!(file);
    presentation_output(table_presentation(&b).0, None)
}

fn present_trivial(orders: &[usize]) -> Outcome {
    presentation_output(trivial_brace_presentation(orders), None)
}

fn parse_subset(b: &FiniteSkewBrace, elements: &[usize]) -> Result<ElementSubset, Failure> {
    if let Some(e) = elements.iter().find(|&&e| e >= b.order()) {
        return Err(Failure(format!("element {e} is out of range for order {}", b.order())));
    }
    Ok(ElementSubset::from_elements(b.order(), elements.iter().copied().chain([0])))
}

fn extend(file: &Path, ideal: &[usize], out: Option<&Path>) -> Outcome {
    let b = brace_or_return!(file);
    let i = parse_subset(&b, ideal)?;
    if !ideals::is_ideal(&b, &i) {
        let mut report = Report::default();
        let closure = ideals::ideal_closure(&b, &i);
        report.line(format!("{i} is not an ideal; the ideal it generates is {closure}"));
        report.witness(json!({ "kind": "ideal_closure", "elements": closure.to_vec() }));
        report.negative();
        return Ok(report);
    }
    let (p, assignment, families) = extend_presentation(&b, &i).map_err(|e| Failure(e.to_string()))?;
    let mut report = presentation_output(p, None)?;
    if let Some(path) = out {
        let text = report.text.clone();
        report.text.clear();
        std::fs::write(path, &text).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        report.outputs.push(path.to_path_buf());
        report.line(format!(
            "{} + {} generators, {} relators",
            families.m,
            families.n,
            families.total()
        ));
        report.line(format!("assignment: {}", render_assignment(&assignment)));
        report.line(format!("wrote {}", path.display()));
    }
    for (key, v) in [
        ("products", families.products),
        ("inverses", families.inverses),
        ("ideal_table", families.ideal_table),
        ("actions", families.actions),
        ("quotient_table", families.quotient_table),
        ("quotient_additive", families.quotient_additive),
    ] {
        report.count(key, v);
    }
    report.data("assignment", json!(assignment));
    Ok(report)
}

fn render_assignment(a: &Assignment) -> String {
    a.iter().map(|(g, e)| format!("{g}={e}")).collect::<Vec<_>>().join(",")
}

fn parse_assignment(items: &[String], order: usize) -> Result<Assignment, Failure> {
    let mut out = Assignment::new();
    for item in items.iter().filter(|s| !s.is_empty()) {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| Failure(format!("assignment `{item}` is not of the form g=e")))?;
        let e: usize = value
            .trim()
            .parse()
            .map_err(|_| Failure(format!("assignment `{item}`: `{value}` is not an element")))?;
        if e >= order {
            return Err(Failure(format!("assignment `{item}`: element {e} is out of range for order {order}")));
        }
        if out.insert(name.trim().to_string(), e).is_some() {
            return Err(Failure(format!("generator `{name}` is assigned twice")));
        }
    }
    Ok(out)
}

fn check_presentation(file: &Path, brace: &Path, assign: &[String]) -> Outcome {
    let p = load_presentation(file)?;
    let b = brace_or_return!(brace);
    let assignment = parse_assignment(assign, b.order())?;
    if let Some(name) = assignment.keys().find(|g| !p.generators().contains(g)) {
        return Err(Failure(format!("`{name}` is not a generator of the presentation")));
    }
    let values = p.evaluate(&b, &assignment).map_err(|e| match e {
        Error::UnboundGenerator(g) => Failure(format!("generator `{g}` has no assigned element")),
        other => Failure(other.to_string()),
    })?;
    let mut report = Report::default();
    let total = values.len();
    let failing: Vec<usize> = (0..total).filter(|&k| values[k] != 0).collect();
    report.count("relators", total);
    report.count("failing", failing.len());
    if failing.is_empty() {
        report.line(format!("all {total} relators evaluate to 0"));
    } else {
        report.negative();
        report.line(format!("{} of {total} relators do not evaluate to 0", failing.len()));
        for &k in &failing {
            let word = p.relators()[k].to_string();
            report.line(format!("relator {k} evaluates to {}: {word}", values[k]));
            report.witness(json!({ "relator": k, "value": values[k], "word": word }));
        }
    }
    Ok(report)
}

fn render_series(s: &ideals::AscendingSeries) -> String {
    s.terms.iter().map(ToString::to_string).collect::<Vec<_>>().join(" < ")
}

fn invariants(file: &Path) -> Outcome {
    let b = brace_or_return!(file);
    let mut report = Report::default();
    let soc = ideals::socle(&b);
    let ann = ideals::annihilator(&b);
    let b2 = ideals::derived_ideal(&b);
    let ann_series = ideals::upper_annihilator_series(&b);
    let soc_series = ideals::upper_socle_series(&b);
    let simple = ideals::is_simple(&b);
    let nilpotent = ideals::is_annihilator_nilpotent(&b);
    report.line(format!("order: {}", b.order()));
    report.line(format!("socle: {soc}"));
    report.line(format!("annihilator: {ann}"));
    report.line(format!("B(2): {b2}"));
    report.line(format!("upper annihilator series: {}", render_series(&ann_series)));
    report.line(format!("upper socle series: {}", render_series(&soc_series)));
    report.line(format!("simple: {}", yes_no(simple)));
    report.line(format!("annihilator-nilpotent: {}", yes_no(nilpotent)));
    report.count("order", b.order());
    report.count("socle", soc.len());
    report.count("annihilator", ann.len());
    report.count("derived", b2.len());
    report.count("annihilator_series_length", ann_series.length());
    report.count("socle_series_length", soc_series.length());
    report.data("socle", json!(soc.to_vec()));
    report.data("annihilator", json!(ann.to_vec()));
    report.data("derived", json!(b2.to_vec()));
    report.data("annihilator_series", json!(ann_series.terms.iter().map(ElementSubset::to_vec).collect::<Vec<_>>()));
    report.data("socle_series", json!(soc_series.terms.iter().map(ElementSubset::to_vec).collect::<Vec<_>>()));
    report.data("simple", simple);
    report.data("annihilator_nilpotent", nilpotent);
    if b.order() <= SUBGROUP_SEARCH_LIMIT {
        let all = ideals::all_ideals(&b, IdealSearch::Auto);
        report.line(format!("ideals ({}):", all.len()));
        for i in &all {
            report.line(format!("  {i}"));
        }
        report.count("ideals", all.len());
        report.data("ideals", json!(all.iter().map(ElementSubset::to_vec).collect::<Vec<_>>()));
    }
    Ok(report)
}

fn conjugates(file: &Path, element: usize) -> Outcome {
    let b = brace_or_return!(file);
    if element >= b.order() {
        return Err(Failure(format!("element {element} is out of range for order {}", b.order())));
    }
    let c = ideals::conjugates(&b, element).map_err(|e| Failure(e.to_string()))?;
    let mut report = Report::default();
    report.line(format!("conjugates of {element}: {c}"));
    report.line(format!("size: {}", c.len()));
    report.count("size", c.len());
    report.data("conjugates", json!(c.to_vec()));
    Ok(report)
}

fn range_failure(e: Error) -> Failure {
    Failure(e.to_string())
}

fn enumerate_braces(order: usize, method: EnumerationMethod) -> Outcome {
    let catalog = enumerate_skew_braces(order, method).map_err(range_failure)?;
    let mut report = Report::default();
    report.count("braces", catalog.braces.len());
    emit(&mut report, format::write_catalog(&catalog), None, |_| {})?;
    Ok(report)
}

fn enumerate_sols(size: usize, nondegenerate: bool, involutive: bool) -> Outcome {
    let sols = enumerate_solutions(size, nondegenerate, involutive).map_err(range_failure)?;
    let mut report = Report::default();
    report.count("solutions", sols.len());
    let blocks: Vec<String> = sols.iter().map(format::write_solution).collect();
    let text = format!("solutions {size} {}\n{}", sols.len(), blocks.join("\n"));
    emit(&mut report, text, None, |_| {})?;
    Ok(report)
}

fn dispatch(command: &Command) -> Outcome {
    match command {
        Command::VerifySolution { file } => verify_solution(file),
        Command::VerifyBrace { file } => verify_brace(file),
        Command::BraceToSolution { file } => brace_to_solution(file),
        Command::SolutionDiagonal { file } => solution_diagonal(file),
        Command::PermBrace { file, out } => perm_brace(file, out.as_deref()),
        Command::PresentStructure { file, mul, add: _, out } => present_structure(file, *mul, out.as_deref()),
        Command::PresentTable { file } => present_table(file),
        Command::PresentTrivial { orders } => present_trivial(orders),
        Command::ExtendPresentation { file, ideal, out } => extend(file, ideal, out.as_deref()),
        Command::CheckPresentation { file, brace, assign } => check_presentation(file, brace, assign),
        Command::Invariants { file } => invariants(file),
        Command::Conjugates { file, element } => conjugates(file, *element),
        Command::EnumerateBraces { order, method } => enumerate_braces(*order, *method),
        Command::EnumerateSolutions { size, nondegenerate, involutive } => {
            enumerate_sols(*size, *nondegenerate, *involutive)
        }
    }
}

fn render(command: &str, json_mode: bool, report: Report) -> CommandResult {
    let text = if json_mode {
        let doc = JsonReport {
            command,
            status: report.status,
            report: &report.text,
            witnesses: &report.witnesses,
            counts: &report.counts,
            data: &report.data,
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
        s.push('\n');
        s
    } else {
        report.text
    };
    CommandResult { status: report.status, report: text, outputs: report.outputs }
}

fn failure(command: &str, json_mode: bool, message: String) -> CommandResult {
    let report = Report { status: STATUS_ERROR, text: format!("error: {message}\n"), ..Report::default() };
    render(command, json_mode, report)
}

/// Runs one command line; `args[0]` is the program name.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let json_mode = args.iter().skip(1).any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let status = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => STATUS_OK,
                _ => STATUS_ERROR,
            };
            let text = e.render().to_string();
            if status == STATUS_OK {
                return CommandResult { status, report: text, outputs: Vec::new() };
            }
            return failure("usage", json_mode, text.trim_end().trim_start_matches("error: ").to_string());
        }
    };
    let name = cli.command.name();
    match dispatch(&cli.command) {
        Ok(report) => render(name, cli.json, report),
        Err(Failure(message)) => failure(name, cli.json, message),
    }
}
