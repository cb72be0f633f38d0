//! `ncgb`: batch front end for the exact noncommutative Gröbner engine
//! and the anti-Jordan triple-system toolkit.
//!
//! Exit codes: 0 success, 1 verification failure, 2 resource bound
//! exceeded, 3 input error.  Data goes to stdout (or `--output`);
//! progress and diagnostics go to stderr only.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ncgb::ajts::{AxiomViolation, RelationMode, TripleSystem, DEFAULT_QUINTUPLE_CAP};
use ncgb::center::{center_basis, is_central};
use ncgb::decomp::{
    check_inequivalence, check_representation, matrix_units, resolution_of_identity,
    standard_representations, verify_unit_relations, wedderburn_summary,
};
use ncgb::envelope::{oracle_diff, EnvelopeAlgebra, EnvelopeError};
use ncgb::freealg::{parse_poly, Alphabet, NcPoly};
use ncgb::groebner::{self, GroebnerError, RewriteSystem};

const EXIT_VERIFICATION: u8 = 1;
const EXIT_RESOURCE: u8 = 2;
const EXIT_INPUT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "ncgb",
    version,
    about = "Exact noncommutative Groebner bases and anti-Jordan triple-system envelopes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: CommonOpts,
}

#[derive(Args)]
struct CommonOpts {
    /// Use the built-in n×n matrix triple system.
    #[arg(long, global = true, value_name = "INT")]
    matrix_n: Option<usize>,
    /// Load a triple system from a JSON file.
    #[arg(long, global = true, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Which presentation of the envelope ideal to complete.
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Full)]
    mode: ModeArg,
    /// Degree cap for completion and growth profiles
    /// (default: NCGB_MAX_DEGREE or 3 × the maximal generator degree).
    #[arg(long, global = true, value_name = "INT")]
    max_degree: Option<usize>,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Cap on worker threads for parallel checks.
    #[arg(long, global = true, value_name = "INT")]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Full,
    Paper,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the anti-Jordan axioms of a triple system.
    Check,
    /// Complete the envelope relations and print the Gröbner basis.
    Gb,
    /// Dimension of the envelope, or INFINITE with a growth profile.
    Dim,
    /// List the normal-word basis of a finite envelope.
    Basis,
    /// Multiply two polynomials in the matrix-system envelope.
    Mul { x: String, y: String },
    /// Dump the full multiplication table of the matrix-system envelope.
    Table,
    /// Compare the envelope table against the closed-form product oracle.
    OracleDiff,
    /// Compute the center of the matrix-system envelope.
    Center,
    /// Run all matrix-unit and block-decomposition checks.
    Decompose,
    /// Verify the four degree-n representations and their inequivalence.
    Reps,
    /// Per-degree normal-word counts of the envelope.
    Growth,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    if let Some(jobs) = cli.opts.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(EXIT_INPUT);
        }
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(&cli) {
        Ok(report) => {
            if let Err(e) = emit(&cli.opts, &report.body) {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_INPUT);
            }
            ExitCode::from(report.exit)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            if let Some(body) = failure.partial {
                let _ = emit(&cli.opts, &body);
            }
            ExitCode::from(failure.exit)
        }
    }
}

struct Report {
    body: String,
    exit: u8,
}

impl Report {
    fn ok(body: String) -> Result<Report, Failure> {
        Ok(Report { body, exit: 0 })
    }

    fn failed(body: String) -> Result<Report, Failure> {
        Ok(Report {
            body,
            exit: EXIT_VERIFICATION,
        })
    }
}

struct Failure {
    message: String,
    exit: u8,
    partial: Option<String>,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure {
            message: message.into(),
            exit: EXIT_INPUT,
            partial: None,
        }
    }
}

fn emit(opts: &CommonOpts, body: &str) -> std::io::Result<()> {
    match &opts.output {
        Some(path) => std::fs::write(path, body),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn json_body<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization");
    s.push('\n');
    s
}

// -------------------------------------------------------------------
// Input resolution
// -------------------------------------------------------------------

fn load_system(opts: &CommonOpts) -> Result<TripleSystem, Failure> {
    match (&opts.matrix_n, &opts.input) {
        (Some(n), None) => {
            if *n < 1 || *n > 8 {
                return Err(Failure::input("--matrix-n must lie in 1..=8"));
            }
            Ok(TripleSystem::matrix(*n))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
            TripleSystem::from_json_str(&text).map_err(|e| Failure::input(e.to_string()))
        }
        _ => Err(Failure::input(
            "exactly one of --matrix-n and --input must be given",
        )),
    }
}

fn relation_mode(opts: &CommonOpts) -> RelationMode {
    match opts.mode {
        ModeArg::Full => RelationMode::Full,
        ModeArg::Paper => RelationMode::Paper,
    }
}

fn resolve_max_degree(opts: &CommonOpts, gens: &[NcPoly]) -> Result<usize, Failure> {
    let explicit =
        match opts.max_degree {
            Some(d) => Some(d),
            None => match std::env::var("NCGB_MAX_DEGREE") {
                Ok(v) => Some(v.parse().map_err(|_| {
                    Failure::input(format!("NCGB_MAX_DEGREE=`{v}` is not an integer"))
                })?),
                Err(_) => None,
            },
        };
    let gen_degree = gens.iter().filter_map(NcPoly::degree).max().unwrap_or(1);
    let degree = explicit.unwrap_or(3 * gen_degree.max(1));
    if degree < 3 {
        return Err(Failure::input("--max-degree must be at least 3"));
    }
    if degree < gen_degree {
        return Err(Failure::input(format!(
            "--max-degree {degree} is below the maximal generator degree {gen_degree}"
        )));
    }
    Ok(degree)
}

fn complete_system(
    sys: &TripleSystem,
    opts: &CommonOpts,
) -> Result<(RewriteSystem, usize), Failure> {
    let gens = sys
        .envelope_relations(relation_mode(opts))
        .map_err(|e| Failure::input(e.to_string()))?;
    let max_degree = resolve_max_degree(opts, &gens)?;
    eprintln!(
        "completing {} relations over {} symbols (degree cap {max_degree})...",
        gens.len(),
        sys.dim()
    );
    let gb = groebner::complete(gens, max_degree).map_err(|e| match e {
        GroebnerError::DegreeBound {
            ref offending,
            ref partial,
            ..
        } => Failure {
            message: format!("{e}; offending element: {offending}"),
            exit: EXIT_RESOURCE,
            partial: Some(
                partial
                    .iter()
                    .map(|g| g.to_string() + "\n")
                    .collect::<String>(),
            ),
        },
        other => Failure {
            message: other.to_string(),
            exit: EXIT_INPUT,
            partial: None,
        },
    })?;
    Ok((gb, max_degree))
}

fn build_envelope(opts: &CommonOpts) -> Result<EnvelopeAlgebra, Failure> {
    let Some(n) = opts.matrix_n else {
        return Err(Failure::input(
            "this command operates on the matrix-system envelope; pass --matrix-n",
        ));
    };
    if !(2..=8).contains(&n) {
        return Err(Failure::input("--matrix-n must lie in 2..=8 here"));
    }
    let sys = TripleSystem::matrix(n);
    let (gb, max_degree) = complete_system(&sys, opts)?;
    EnvelopeAlgebra::from_groebner(n, gb, max_degree).map_err(|e| match e {
        EnvelopeError::Infinite { .. } => Failure {
            message: e.to_string(),
            exit: EXIT_VERIFICATION,
            partial: None,
        },
        other => Failure::input(other.to_string()),
    })
}

// -------------------------------------------------------------------
// Commands
// -------------------------------------------------------------------

fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Check => cmd_check(&cli.opts),
        Command::Gb => cmd_gb(&cli.opts),
        Command::Dim => cmd_dim(&cli.opts),
        Command::Basis => cmd_basis(&cli.opts),
        Command::Mul { x, y } => cmd_mul(&cli.opts, x, y),
        Command::Table => cmd_table(&cli.opts),
        Command::OracleDiff => cmd_oracle_diff(&cli.opts),
        Command::Center => cmd_center(&cli.opts),
        Command::Decompose => cmd_decompose(&cli.opts),
        Command::Reps => cmd_reps(&cli.opts),
        Command::Growth => cmd_growth(&cli.opts),
    }
}

#[derive(Serialize)]
struct CheckReport {
    dim: usize,
    passed: bool,
    quintuples_checked: u64,
    sampled: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    violation: Option<String>,
}

fn cmd_check(opts: &CommonOpts) -> Result<Report, Failure> {
    let sys = load_system(opts)?;
    let report = sys.check_axioms(DEFAULT_QUINTUPLE_CAP);
    let violation = report.violation.as_ref().map(|v| match v {
        AxiomViolation::Antisymmetry { triple, lhs, rhs } => {
            format!("antisymmetry fails at {triple:?}: <abc> = {lhs:?}, -<cba> = {rhs:?}")
        }
        AxiomViolation::FiveTermIdentity {
            quintuple,
            lhs,
            rhs,
        } => format!("five-term identity fails at {quintuple:?}: lhs = {lhs:?}, rhs = {rhs:?}"),
    });
    let out = CheckReport {
        dim: sys.dim(),
        passed: report.passed(),
        quintuples_checked: report.quintuples_checked,
        sampled: report.sampled,
        violation,
    };
    let body = match opts.format {
        FormatArg::Json => json_body(&out),
        FormatArg::Text => {
            let mut s = String::new();
            if out.passed {
                let _ = writeln!(
                    s,
                    "PASS (dim {}, {} quintuples checked{})",
                    out.dim,
                    out.quintuples_checked,
                    if out.sampled { ", sampled" } else { "" }
                );
            } else {
                let _ = writeln!(s, "FAIL: {}", out.violation.as_deref().unwrap_or("?"));
            }
            s
        }
    };
    if out.passed {
        Report::ok(body)
    } else {
        Report::failed(body)
    }
}

fn cmd_gb(opts: &CommonOpts) -> Result<Report, Failure> {
    let sys = load_system(opts)?;
    let (gb, _) = complete_system(&sys, opts)?;
    let body = match opts.format {
        FormatArg::Json => json_body(&gb.to_json(sys.alphabet())),
        FormatArg::Text => {
            let mut s = String::new();
            for line in gb.to_text_lines() {
                let _ = writeln!(s, "{line}");
            }
            s
        }
    };
    Report::ok(body)
}

#[derive(Serialize)]
struct DimReport {
    finite: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    dim: Option<u64>,
    counts: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cycle: Option<Vec<String>>,
}

fn normal_word_report(
    sys: &TripleSystem,
    opts: &CommonOpts,
) -> Result<(ncgb::groebner::NormalWordReport, RewriteSystem), Failure> {
    let (gb, max_degree) = complete_system(&sys.clone(), opts)?;
    let report = gb.normal_words(sys.alphabet(), max_degree);
    Ok((report, gb))
}

fn cmd_dim(opts: &CommonOpts) -> Result<Report, Failure> {
    let sys = load_system(opts)?;
    let (report, _) = normal_word_report(&sys, opts)?;
    let out = DimReport {
        finite: report.finite,
        dim: report.total(),
        counts: report.counts.clone(),
        cycle: report
            .cycle
            .as_ref()
            .map(|c| c.iter().map(|w| w.to_string()).collect()),
    };
    let body = match opts.format {
        FormatArg::Json => json_body(&out),
        FormatArg::Text => {
            if report.finite {
                format!("{}\n", out.dim.expect("finite"))
            } else {
                let counts: Vec<String> = out.counts.iter().map(|c| c.to_string()).collect();
                format!(
                    "INFINITE\ncounts by degree (0..={}): {}\n",
                    out.counts.len() - 1,
                    counts.join(" ")
                )
            }
        }
    };
    Report::ok(body)
}

#[derive(Serialize)]
struct BasisReport {
    alphabet: Alphabet,
    dim: usize,
    words: Vec<String>,
}

fn cmd_basis(opts: &CommonOpts) -> Result<Report, Failure> {
    let sys = load_system(opts)?;
    let (report, _) = normal_word_report(&sys, opts)?;
    let Some(words) = report.basis else {
        return Err(Failure {
            message: "the quotient is infinite-dimensional; use `growth` for its profile"
                .to_string(),
            exit: EXIT_VERIFICATION,
            partial: None,
        });
    };
    let out = BasisReport {
        alphabet: sys.alphabet().clone(),
        dim: words.len(),
        words: words.iter().map(|w| w.to_string()).collect(),
    };
    let body = match opts.format {
        FormatArg::Json => json_body(&out),
        FormatArg::Text => {
            let mut s = String::new();
            for w in &out.words {
                let _ = writeln!(s, "{w}");
            }
            s
        }
    };
    Report::ok(body)
}

#[derive(Serialize)]
struct MulReport {
    product: String,
}

fn cmd_mul(opts: &CommonOpts, x: &str, y: &str) -> Result<Report, Failure> {
    let alg = build_envelope(opts)?;
    let parse = |s: &str| -> Result<NcPoly, Failure> {
        parse_poly(s).map_err(|e| Failure::input(format!("in `{s}`: {e}")))
    };
    let x = alg.from_poly(&parse(x)?);
    let y = alg.from_poly(&parse(y)?);
    let product = alg.to_poly(&alg.multiply(&x, &y)).to_string();
    let body = match opts.format {
        FormatArg::Json => json_body(&MulReport { product }),
        FormatArg::Text => format!("{product}\n"),
    };
    Report::ok(body)
}

fn cmd_table(opts: &CommonOpts) -> Result<Report, Failure> {
    let alg = build_envelope(opts)?;
    let body = match opts.format {
        FormatArg::Json => json_body(&alg.table_json()),
        FormatArg::Text => {
            let mut s = String::new();
            for i in 0..alg.dim() {
                for j in 0..alg.dim() {
                    let mut product = NcPoly::zero();
                    for (k, c) in alg.table_entry(i, j) {
                        product.add_term(alg.basis_word(*k).clone(), c.clone());
                    }
                    let _ = writeln!(
                        s,
                        "{} * {} = {}",
                        alg.basis_word(i),
                        alg.basis_word(j),
                        product
                    );
                }
            }
            s
        }
    };
    Report::ok(body)
}

#[derive(Serialize)]
struct OracleDiffReport {
    n: usize,
    dim: usize,
    pairs: usize,
    mismatches: Vec<OracleDiffEntry>,
}

#[derive(Serialize)]
struct OracleDiffEntry {
    left: String,
    right: String,
    engine: String,
    oracle: String,
}

fn cmd_oracle_diff(opts: &CommonOpts) -> Result<Report, Failure> {
    let alg = build_envelope(opts)?;
    let mismatches = oracle_diff(&alg).map_err(|e| Failure {
        message: e.to_string(),
        exit: EXIT_VERIFICATION,
        partial: None,
    })?;
    let out = OracleDiffReport {
        n: alg.n(),
        dim: alg.dim(),
        pairs: alg.dim() * alg.dim(),
        mismatches: mismatches
            .iter()
            .map(|m| OracleDiffEntry {
                left: alg.basis_word(m.i).to_string(),
                right: alg.basis_word(m.j).to_string(),
                engine: m.engine.to_string(),
                oracle: m.oracle.to_string(),
            })
            .collect(),
    };
    let body = match opts.format {
        FormatArg::Json => json_body(&out),
        FormatArg::Text => {
            let mut s = format!(
                "{} mismatches over {} basis-pair products\n",
                out.mismatches.len(),
                out.pairs
            );
            for m in &out.mismatches {
                let _ = writeln!(
                    s,
                    "  {} * {}: engine {} vs oracle {}",
                    m.left, m.right, m.engine, m.oracle
                );
            }
            s
        }
    };
    if out.mismatches.is_empty() {
        Report::ok(body)
    } else {
        Report::failed(body)
    }
}

#[derive(Serialize)]
struct CenterReport {
    dim_center: usize,
    basis: Vec<String>,
}

fn cmd_center(opts: &CommonOpts) -> Result<Report, Failure> {
    let alg = build_envelope(opts)?;
    let basis = center_basis(&alg, false);
    for z in &basis {
        if !is_central(&alg, z) {
            return Err(Failure {
                message: format!("computed center vector is not central: {}", alg.to_poly(z)),
                exit: EXIT_VERIFICATION,
                partial: None,
            });
        }
    }
    let out = CenterReport {
        dim_center: basis.len(),
        basis: basis.iter().map(|z| alg.to_poly(z).to_string()).collect(),
    };
    let body = match opts.format {
        FormatArg::Json => json_body(&out),
        FormatArg::Text => {
            let mut s = format!("dimension: {}\n", out.dim_center);
            for b in &out.basis {
                let _ = writeln!(s, "{b}");
            }
            s
        }
    };
    Report::ok(body)
}

#[derive(Serialize)]
struct DecomposeReport {
    n: usize,
    dim: usize,
    blocks: Vec<usize>,
    unit_pairs_checked: u64,
    idempotents: Vec<String>,
    checks: Vec<String>,
}

fn cmd_decompose(opts: &CommonOpts) -> Result<Report, Failure> {
    let alg = build_envelope(opts)?;
    let summary = wedderburn_summary(&alg).map_err(|e| Failure {
        message: e.to_string(),
        exit: EXIT_VERIFICATION,
        partial: None,
    })?;
    let families = matrix_units(&alg);
    verify_unit_relations(&alg, &families).map_err(|e| Failure {
        message: e.to_string(),
        exit: EXIT_VERIFICATION,
        partial: None,
    })?;
    resolution_of_identity(&alg, &families).map_err(|e| Failure {
        message: e.to_string(),
        exit: EXIT_VERIFICATION,
        partial: None,
    })?;
    let out = DecomposeReport {
        n: alg.n(),
        dim: summary.dim,
        blocks: summary.blocks.clone(),
        unit_pairs_checked: summary.unit_pairs_checked,
        idempotents: families
            .iter()
            .map(|f| format!("{}: {}", f.kind, alg.to_poly(&f.diagonal_sum(alg.dim()))))
            .collect(),
        checks: vec![
            "unit relations: PASS".to_string(),
            "resolution of identity: PASS".to_string(),
            "unit span has full rank: PASS".to_string(),
        ],
    };
    let body = match opts.format {
        FormatArg::Json => json_body(&out),
        FormatArg::Text => {
            let blocks: Vec<String> = out.blocks.iter().map(|b| b.to_string()).collect();
            let mut s = format!(
                "blocks: [{}]  (dim {} = 1 + 4n^2)\n",
                blocks.join(", "),
                out.dim
            );
            let _ = writeln!(s, "unit pairs checked: {}", out.unit_pairs_checked);
            for c in &out.checks {
                let _ = writeln!(s, "{c}");
            }
            for idem in &out.idempotents {
                let _ = writeln!(s, "idempotent {idem}");
            }
            s
        }
    };
    Report::ok(body)
}

#[derive(Serialize)]
struct RepsReport {
    n: usize,
    representations: Vec<RepEntry>,
    inequivalent_pairs: Vec<PairEntry>,
}

#[derive(Serialize)]
struct RepEntry {
    name: String,
    triples_checked: u64,
}

#[derive(Serialize)]
struct PairEntry {
    left: String,
    right: String,
    witness: String,
    left_trace: String,
    right_trace: String,
}

fn cmd_reps(opts: &CommonOpts) -> Result<Report, Failure> {
    let Some(n) = opts.matrix_n else {
        return Err(Failure::input("reps requires --matrix-n"));
    };
    if !(2..=8).contains(&n) {
        return Err(Failure::input("--matrix-n must lie in 2..=8 here"));
    }
    let sys = TripleSystem::matrix(n);
    let reps = standard_representations(n);
    let mut entries = Vec::new();
    for rho in &reps {
        let checked = check_representation(&sys, rho).map_err(|e| Failure {
            message: e.to_string(),
            exit: EXIT_VERIFICATION,
            partial: None,
        })?;
        entries.push(RepEntry {
            name: rho.name.clone(),
            triples_checked: checked,
        });
    }
    let mut pairs = Vec::new();
    for a in 0..reps.len() {
        for b in a + 1..reps.len() {
            let witness = check_inequivalence(&sys, &reps[a], &reps[b]).map_err(|e| Failure {
                message: e.to_string(),
                exit: EXIT_VERIFICATION,
                partial: None,
            })?;
            let idx = witness.basis_index;
            let (i, j) = ((idx - 1) / n + 1, (idx - 1) % n + 1);
            pairs.push(PairEntry {
                left: reps[a].name.clone(),
                right: reps[b].name.clone(),
                witness: format!("e[{i},{j}]"),
                left_trace: witness.left_trace.to_string(),
                right_trace: witness.right_trace.to_string(),
            });
        }
    }
    let out = RepsReport {
        n,
        representations: entries,
        inequivalent_pairs: pairs,
    };
    let body = match opts.format {
        FormatArg::Json => json_body(&out),
        FormatArg::Text => {
            let mut s = format!(
                "{} representations pass, {} pairs inequivalent\n",
                out.representations.len(),
                out.inequivalent_pairs.len()
            );
            for r in &out.representations {
                let _ = writeln!(s, "{}: PASS ({} triples)", r.name, r.triples_checked);
            }
            for p in &out.inequivalent_pairs {
                let _ = writeln!(
                    s,
                    "{} vs {}: trace({}) = {} vs {}",
                    p.left, p.right, p.witness, p.left_trace, p.right_trace
                );
            }
            s
        }
    };
    Report::ok(body)
}

#[derive(Serialize)]
struct GrowthReport {
    finite: bool,
    counts: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    total: Option<u64>,
}

fn cmd_growth(opts: &CommonOpts) -> Result<Report, Failure> {
    let sys = load_system(opts)?;
    let (report, _) = normal_word_report(&sys, opts)?;
    let out = GrowthReport {
        finite: report.finite,
        counts: report.counts.clone(),
        total: report.total(),
    };
    let body = match opts.format {
        FormatArg::Json => json_body(&out),
        FormatArg::Text => {
            let mut s = format!("{}\n", if out.finite { "FINITE" } else { "INFINITE" });
            for (degree, count) in out.counts.iter().enumerate() {
                let _ = writeln!(s, "degree {degree}: {count}");
            }
            if let Some(total) = out.total {
                let _ = writeln!(s, "total: {total}");
            }
            s
        }
    };
    Report::ok(body)
}
