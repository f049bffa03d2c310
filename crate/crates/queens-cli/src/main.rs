use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use queens::construct::{
    jacobsthal_digraph, polya_composite, polya_doubling, strong_cycle, three_cycles_placement,
};
use queens::enumerate::{
    achievable_cycle_types, count_modular, count_standard, enumerate_modular, enumerate_standard,
    modular_bound_check, AssignmentMode,
};
use queens::{
    check_diff_condition, check_sum_condition, diff_multiset, oh_product, sum_multiset,
    to_placement, verify_board, verify_modular_queen, verify_queen, FamilyAssignment,
    LabeledDigraph, Placement, VerificationReport,
};
use queens_cli::docs::{
    load_assignment, load_digraph, load_document, to_json, DigraphDocument, DocError, Document,
    PlacementDocument,
};
use queens_cli::render::render_ascii;

/// Exit codes: 0 success or valid, 1 invalid verification, 2 usage error.
#[derive(Parser)]
#[command(name = "queens", version, about = "Construct, compose, verify and enumerate solutions of the standard and modular n-queens problems")]
struct Cli {
    /// Wrap results in a single JSON document on stdout.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate or count the solutions of one board.
    Solve {
        /// Board size.
        #[arg(long)]
        n: usize,
        /// Solve the modular (toroidal) problem.
        #[arg(long)]
        modular: bool,
        /// Print only the number of solutions.
        #[arg(long, conflicts_with = "limit")]
        count: bool,
        /// Stop after this many solutions.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Verify a digraph or placement document.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Check the modular conditions instead of the standard ones.
        #[arg(long)]
        modular: bool,
    },
    /// Build one of the explicit solution families.
    Construct {
        #[arg(long)]
        method: Method,
        /// Odd board order (jacobsthal).
        #[arg(long)]
        n: Option<usize>,
        /// Modulus (doubling).
        #[arg(long)]
        p: Option<u64>,
        /// Block parameter (three-cycles).
        #[arg(long)]
        m: Option<usize>,
        /// Cycle length (strong-cycle).
        #[arg(long)]
        k: Option<usize>,
        /// Standard solution documents, one per flag (polya-composite).
        #[arg(long)]
        standard: Vec<PathBuf>,
        /// Comma-separated 0-based indices into the standard list, one per
        /// residue (polya-composite).
        #[arg(long)]
        pi: Option<String>,
        /// Modular solution document (polya-composite).
        #[arg(long)]
        modular_g: Option<PathBuf>,
    },
    /// Compose a digraph with a family of digraphs.
    Product {
        /// Base digraph document.
        #[arg(long)]
        d: PathBuf,
        /// Family member documents, in index order; repeat the flag.
        #[arg(long, required = true)]
        family: Vec<PathBuf>,
        /// Assignment document mapping arcs to family indices.
        #[arg(long)]
        assign: PathBuf,
        /// Verify the product modularly.
        #[arg(long)]
        modular: bool,
        /// Also evaluate the sum and difference side conditions.
        #[arg(long)]
        check_conditions: bool,
    },
    /// Report cycle type, sum/difference multisets and their totals.
    Analyze {
        #[arg(long)]
        input: PathBuf,
    },
    /// List the cycle types realized by the solutions of one board.
    Types {
        #[arg(long)]
        n: usize,
    },
    /// Render a board as ASCII.
    Render {
        #[arg(long)]
        input: PathBuf,
    },
    /// Generate modular products of solutions and report validity,
    /// distinctness and the realized counting bound.
    BoundCheck {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Exhaustive mode: family of the lexicographically first solutions.
        #[arg(long, conflicts_with = "samples")]
        family_size: Option<usize>,
        /// Sampling mode: number of sampled assignments.
        #[arg(long)]
        samples: Option<usize>,
        /// Seed for the sampling mode.
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Doubling,
    Jacobsthal,
    ThreeCycles,
    StrongCycle,
    PolyaComposite,
}

enum CliError {
    Doc(DocError),
    Usage(String),
}

impl From<DocError> for CliError {
    fn from(e: DocError) -> Self {
        CliError::Doc(e)
    }
}

impl From<queens::Error> for CliError {
    fn from(e: queens::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Doc(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Practical enumeration bound; larger boards stop being desk scale.
const MAX_SOLVE: usize = 14;

fn run(cli: &Cli) -> Result<u8, CliError> {
    match &cli.command {
        Command::Solve {
            n,
            modular,
            count,
            limit,
        } => solve(cli.json, *n, *modular, *count, *limit),
        Command::Verify { input, modular } => verify(cli.json, input, *modular),
        Command::Construct {
            method,
            n,
            p,
            m,
            k,
            standard,
            pi,
            modular_g,
        } => construct(*method, *n, *p, *m, *k, standard, pi.as_deref(), modular_g.as_deref()),
        Command::Product {
            d,
            family,
            assign,
            modular,
            check_conditions,
        } => product(cli.json, d, family, assign, *modular, *check_conditions),
        Command::Analyze { input } => analyze(cli.json, input),
        Command::Types { n } => types(cli.json, *n),
        Command::Render { input } => render(input),
        Command::BoundCheck {
            m,
            n,
            family_size,
            samples,
            seed,
        } => bound_check(cli.json, *m, *n, *family_size, *samples, *seed),
    }
}

fn check_board_size(n: usize) -> Result<(), CliError> {
    if n == 0 || n > MAX_SOLVE {
        return Err(CliError::Usage(format!(
            "board size must lie in [1, {MAX_SOLVE}], got {n}"
        )));
    }
    Ok(())
}

fn solve(
    json: bool,
    n: usize,
    modular: bool,
    count: bool,
    limit: Option<usize>,
) -> Result<u8, CliError> {
    check_board_size(n)?;
    if count {
        let total = if modular {
            count_modular(n)
        } else {
            count_standard(n)
        };
        if json {
            println!("{}", json!({ "n": n, "modular": modular, "count": total }));
        } else {
            println!("{total}");
        }
        return Ok(0);
    }
    let stream = if modular {
        enumerate_modular(n, limit)
    } else {
        enumerate_standard(n, limit)
    };
    let docs: Vec<PlacementDocument> = stream
        .map(|p| PlacementDocument::from_placement(&p, Some(modular)))
        .collect();
    if json {
        println!(
            "{}",
            json!({ "n": n, "modular": modular, "solutions": docs })
        );
    } else {
        for doc in &docs {
            println!("{}", serde_json::to_string(doc).expect("documents serialize"));
        }
    }
    Ok(0)
}

fn report_json(report: &VerificationReport) -> serde_json::Value {
    json!({
        "is_valid": report.is_valid(),
        "failures": report
            .failures
            .iter()
            .map(|f| json!({
                "condition": f.condition.to_string(),
                "witness": f.witness.map(|(a, b)| [[a.0, a.1], [b.0, b.1]]),
            }))
            .collect::<Vec<_>>(),
    })
}

fn print_report(report: &VerificationReport) {
    if report.is_valid() {
        println!("valid");
    } else {
        println!("invalid");
        for failure in &report.failures {
            println!("  {failure}");
        }
    }
}

fn verify(json: bool, input: &Path, modular: bool) -> Result<u8, CliError> {
    let (kind, report) = match load_document(input)? {
        Document::Digraph(doc) => {
            let d = doc.to_digraph()?;
            let report = if modular {
                verify_modular_queen(&d)
            } else {
                verify_queen(&d)
            };
            ("digraph", report)
        }
        Document::Placement(doc) => {
            let p = doc.to_placement()?;
            ("placement", verify_board(&p, modular))
        }
    };
    if json {
        let mut value = report_json(&report);
        value["kind"] = json!(kind);
        value["modular"] = json!(modular);
        println!("{value}");
    } else {
        print_report(&report);
    }
    Ok(if report.is_valid() { 0 } else { 1 })
}

fn require<T>(value: Option<T>, flag: &str, method: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("--{flag} is required for --method {method}")))
}

#[allow(clippy::too_many_arguments)]
fn construct(
    method: Method,
    n: Option<usize>,
    p: Option<u64>,
    m: Option<usize>,
    k: Option<usize>,
    standard: &[PathBuf],
    pi: Option<&str>,
    modular_g: Option<&Path>,
) -> Result<u8, CliError> {
    let output = match method {
        Method::Doubling => {
            let p = require(p, "p", "doubling")?;
            if p == 0 {
                return Err(CliError::Usage("--p must be at least 1".into()));
            }
            to_json(&DigraphDocument::from_digraph(&polya_doubling(p)))
        }
        Method::Jacobsthal => {
            let n = require(n, "n", "jacobsthal")?;
            to_json(&DigraphDocument::from_digraph(&jacobsthal_digraph(n)?))
        }
        Method::StrongCycle => {
            let k = require(k, "k", "strong-cycle")?;
            if k == 0 {
                return Err(CliError::Usage("--k must be at least 1".into()));
            }
            to_json(&DigraphDocument::from_digraph(&strong_cycle(k)))
        }
        Method::ThreeCycles => {
            let m = require(m, "m", "three-cycles")?;
            let placement = three_cycles_placement(m)?;
            to_json(&PlacementDocument::from_placement(&placement, Some(false)))
        }
        Method::PolyaComposite => {
            if standard.is_empty() {
                return Err(CliError::Usage(
                    "--standard is required for --method polya-composite".into(),
                ));
            }
            let pi_text = require(pi, "pi", "polya-composite")?;
            let g_path = require(modular_g, "modular-g", "polya-composite")?;
            let mut factors = Vec::with_capacity(standard.len());
            for path in standard {
                factors.push(load_placement(path)?);
            }
            let g = load_placement(g_path)?;
            let pi: Vec<usize> = pi_text
                .split(',')
                .map(|part| {
                    part.trim()
                        .parse::<usize>()
                        .map_err(|_| CliError::Usage(format!("bad pi entry {part:?}")))
                })
                .collect::<Result<_, _>>()?;
            let placement = polya_composite(&factors, &pi, &g)?;
            to_json(&PlacementDocument::from_placement(&placement, Some(false)))
        }
    };
    print!("{output}");
    Ok(0)
}

fn load_placement(path: &Path) -> Result<Placement, CliError> {
    match load_document(path)? {
        Document::Placement(doc) => Ok(doc.to_placement()?),
        Document::Digraph(_) => Err(CliError::Usage(format!(
            "{}: expected a placement document",
            path.display()
        ))),
    }
}

fn product(
    json: bool,
    d_path: &Path,
    family: &[PathBuf],
    assign: &Path,
    modular: bool,
    check_conditions: bool,
) -> Result<u8, CliError> {
    let d = load_digraph(d_path)?;
    let mut gamma = Vec::with_capacity(family.len());
    for path in family {
        gamma.push(load_digraph(path)?);
    }
    let assignment = load_assignment(assign)?;
    let fa = FamilyAssignment::new(gamma, assignment.entries())?;
    let result = oh_product(&d, &fa)?;
    let report = if modular {
        verify_modular_queen(&result)
    } else {
        verify_queen(&result)
    };
    let conditions = if check_conditions {
        Some((
            check_sum_condition(&d, &fa)?,
            check_diff_condition(&d, &fa)?,
        ))
    } else {
        None
    };
    let doc = DigraphDocument::from_digraph(&result);
    if json {
        let mut value = json!({
            "product": doc,
            "modular": modular,
            "report": report_json(&report),
        });
        if let Some((sum, diff)) = &conditions {
            value["sum_condition"] = report_json(sum);
            value["diff_condition"] = report_json(diff);
        }
        println!("{value}");
    } else {
        print!("{}", to_json(&doc));
        eprintln!(
            "product of order {}: {}",
            result.n(),
            if report.is_valid() { "valid" } else { "invalid" }
        );
        for failure in &report.failures {
            eprintln!("  {failure}");
        }
        if let Some((sum, diff)) = &conditions {
            eprintln!(
                "sum condition: {}; diff condition: {}",
                if sum.is_valid() { "pass" } else { "fail" },
                if diff.is_valid() { "pass" } else { "fail" }
            );
        }
    }
    Ok(if report.is_valid() { 0 } else { 1 })
}

fn analyze(json: bool, input: &Path) -> Result<u8, CliError> {
    let d = match load_document(input)? {
        Document::Digraph(doc) => doc.to_digraph()?,
        Document::Placement(doc) => {
            let p = doc.to_placement()?;
            LabeledDigraph::from_arcs(p.n(), p.queens().iter().copied())
                .expect("placement positions are valid arcs")
        }
    };
    let sums = sum_multiset(&d);
    let diffs = diff_multiset(&d);
    let sum_total: i64 = sums.iter().sum();
    let diff_total: i64 = diffs.iter().sum();
    let one_regular = d.is_one_regular();
    let cycle_type = one_regular.then(|| d.cycle_type().expect("checked regular"));
    let queen = verify_queen(&d).is_valid();
    let modular = verify_modular_queen(&d).is_valid();
    if json {
        println!(
            "{}",
            json!({
                "n": d.n(),
                "arcs": d.arcs().len(),
                "one_regular": one_regular,
                "cycle_type": cycle_type.as_ref().map(|ct| ct.lengths().to_vec()),
                "sum_multiset": sums,
                "sum_total": sum_total,
                "diff_multiset": diffs,
                "diff_total": diff_total,
                "queen_valid": queen,
                "modular_queen_valid": modular,
            })
        );
    } else {
        println!("n: {}", d.n());
        println!("arcs: {}", d.arcs().len());
        println!("one-regular: {one_regular}");
        if let Some(ct) = &cycle_type {
            println!("cycle type: {ct}");
        }
        println!("sums: {sums:?} (total {sum_total})");
        println!("diffs: {diffs:?} (total {diff_total})");
        println!("queen valid: {queen}");
        println!("modular queen valid: {modular}");
    }
    Ok(0)
}

fn types(json: bool, n: usize) -> Result<u8, CliError> {
    check_board_size(n)?;
    if n > 12 {
        return Err(CliError::Usage(format!(
            "cycle-type surveys are capped at n = 12, got {n}"
        )));
    }
    let all = achievable_cycle_types(n);
    if json {
        let lists: Vec<Vec<usize>> = all.iter().map(|ct| ct.lengths().to_vec()).collect();
        println!("{}", json!({ "n": n, "cycle_types": lists }));
    } else {
        for ct in &all {
            println!("{ct}");
        }
    }
    Ok(0)
}

fn render(input: &Path) -> Result<u8, CliError> {
    let placement = match load_document(input)? {
        Document::Placement(doc) => doc.to_placement()?,
        Document::Digraph(doc) => to_placement(&doc.to_digraph()?),
    };
    print!("{}", render_ascii(&placement));
    Ok(0)
}

fn bound_check(
    json: bool,
    m: usize,
    n: usize,
    family_size: Option<usize>,
    samples: Option<usize>,
    seed: u64,
) -> Result<u8, CliError> {
    let mode = match (family_size, samples) {
        (_, Some(samples)) => AssignmentMode::Sampled { samples, seed },
        (size, None) => AssignmentMode::Exhaustive {
            family_size: size.unwrap_or(2),
        },
    };
    let report = modular_bound_check(m, n, mode)?;
    if json {
        println!(
            "{}",
            json!({
                "m": m,
                "n": n,
                "generated": report.generated,
                "valid": report.valid,
                "distinct": report.distinct,
                "bound": report.bound,
            })
        );
    } else {
        println!("generated: {}", report.generated);
        println!("valid: {}", report.valid);
        println!("distinct: {}", report.distinct);
        println!("realized bound: {}", report.bound);
    }
    Ok(if report.all_valid() && report.distinct {
        0
    } else {
        1
    })
}
