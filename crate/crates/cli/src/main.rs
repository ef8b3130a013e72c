//! `brace-forge`: command-line front end.
//!
//! Exit status: 0 success, 1 property failure or counterexample, 2 input or
//! usage error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use brace_forge::corpus::{self, BraceDocument, GroupSpec, Variant};
use brace_forge::ideals::{enumerate_ideals_with_cap, is_semiprime, quotient, SemiprimeMethod};
use brace_forge::products::{semidirect, validate_sigma, wreath, SigmaAction};
use brace_forge::verify::{self, Case, ProductSweep, SweepReport};
use brace_forge::ybe::{check_braid, check_nondegenerate, solution_map};
use brace_forge::{brace, limits, Error, FiniteSkewBrace, SubSet};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "brace-forge", version, about = "Compute with finite skew braces")]
struct Cli {
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the skew brace axioms of every document.
    Validate { input: Option<PathBuf> },
    /// List all ideals.
    Ideals { input: Option<PathBuf> },
    /// Decide semiprimality.
    Semiprime {
        #[arg(long, value_enum, default_value = "fast")]
        method: Method,
        input: Option<PathBuf>,
    },
    /// Print the quotient by an ideal given as comma-separated indices.
    Quotient {
        #[arg(long)]
        ideal: String,
        input: Option<PathBuf>,
    },
    /// Build a product of the first two documents (G then H).
    Product {
        #[arg(value_enum)]
        kind: ProductKind,
        /// Action for `semidirect`: one permutation of G per element of H,
        /// separated by `;` (default: trivial).
        #[arg(long)]
        sigma: Option<String>,
        input: Option<PathBuf>,
    },
    /// Print the Yang–Baxter solution of each brace.
    Ybe {
        /// Also verify the braid relation and non-degeneracy.
        #[arg(long)]
        check: bool,
        input: Option<PathBuf>,
    },
    /// Generate braces.
    Corpus {
        #[command(subcommand)]
        command: CorpusCommand,
    },
    /// Run a verification sweep.
    Verify {
        #[arg(value_enum)]
        statement: VerifyStatement,
        #[command(flatten)]
        sweep: SweepArgs,
        /// Largest |G|^|H| for the wreath base (lemma31, lemma32).
        #[arg(long)]
        max_base: Option<usize>,
    },
    /// Search for counterexamples.
    Search {
        #[arg(value_enum)]
        question: SearchQuestion,
        #[command(flatten)]
        sweep: SweepArgs,
        /// Largest |H|.
        #[arg(long, default_value_t = 4)]
        max_h: usize,
    },
    /// Re-run a single case written by a failing sweep.
    Replay { case: PathBuf },
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// All skew braces whose additive group is the given group.
    Enumerate {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = corpus::DEFAULT_HOLOMORPH_LIMIT)]
        max_order: usize,
    },
    /// The trivial or almost-trivial brace on a group.
    Group {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "trivial")]
        variant: String,
    },
    /// The brace of a radical ring gZ/MZ.
    Radical {
        #[arg(long)]
        modulus: usize,
        #[arg(long)]
        generator: usize,
    },
}

#[derive(clap::Args)]
struct SweepArgs {
    /// Largest corpus order.
    #[arg(long)]
    max_order: Option<usize>,
    #[arg(long)]
    sigma_budget: Option<usize>,
    /// Print only failing cases and the summary.
    #[arg(long)]
    quiet: bool,
    /// Where replay files for failing cases are written.
    #[arg(long, default_value = "counterexamples")]
    dump_dir: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Fast,
    Exhaustive,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductKind {
    Semidirect,
    Wreath,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyStatement {
    Lemma31,
    Lemma32,
    Cor28,
    Thm33,
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchQuestion {
    Q34,
}

enum Failure {
    Property,
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let mut out = io::stdout().lock();
    match run(cli.command, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Property) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            let _ = out.flush();
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Validate { input } => validate(&read_input(input.as_deref())?, out),
        Command::Ideals { input } => {
            for b in load(input.as_deref())? {
                let ideals = enumerate_ideals_with_cap(&b, limits::max_order())?;
                writeln!(out, "# {}: {} ideals", b.name(), ideals.len())?;
                for i in ideals {
                    writeln!(out, "{i}")?;
                }
            }
            Ok(())
        }
        Command::Semiprime { method, input } => {
            let method = match method {
                Method::Fast => SemiprimeMethod::Fast,
                Method::Exhaustive => SemiprimeMethod::Exhaustive,
            };
            let mut all = true;
            for b in load(input.as_deref())? {
                let v = is_semiprime(&b, method)?;
                all &= v.semiprime;
                writeln!(out, "{v}")?;
            }
            verdict(all)
        }
        Command::Quotient { ideal, input } => {
            for b in load(input.as_deref())? {
                let members = SubSet::from_indices(b.order(), parse_indices(&ideal, ',')?)?;
                let (q, map) = quotient(&b, &members)?;
                write!(out, "{}", BraceDocument::from_brace(&q))?;
                writeln!(out, "# coset map {}", join(&map, " "))?;
            }
            Ok(())
        }
        Command::Product { kind, sigma, input } => {
            let braces = load(input.as_deref())?;
            let [g, h] = <[FiniteSkewBrace; 2]>::try_from(braces)
                .map_err(|_| Failure::Input("product needs exactly two documents (G then H)".into()))?;
            let p = match kind {
                ProductKind::Wreath => wreath(&g, &h)?,
                ProductKind::Semidirect => {
                    let sigma = match sigma {
                        None => SigmaAction::trivial(&g, &h),
                        Some(s) => {
                            let perms = s.split(';').map(|p| parse_indices(p, ' ')).collect::<Result<_, _>>()?;
                            validate_sigma(&g, &h, perms)?
                        }
                    };
                    semidirect(&g, &h, &sigma)?
                }
            };
            write!(out, "{}", BraceDocument::from_brace(&p))?;
            Ok(())
        }
        Command::Ybe { check, input } => {
            let mut all = true;
            for b in load(input.as_deref())? {
                let s = solution_map(&b);
                write!(out, "{s}")?;
                if check {
                    match check_braid(&s) {
                        Ok(()) => writeln!(out, "# braid OK")?,
                        Err([x, y, z]) => {
                            all = false;
                            writeln!(out, "# braid FAIL at ({x},{y},{z})")?;
                        }
                    }
                    let nd = check_nondegenerate(&s);
                    all &= nd;
                    writeln!(out, "# nondegenerate {}", if nd { "OK" } else { "FAIL" })?;
                }
            }
            verdict(all)
        }
        Command::Corpus { command } => {
            let braces = match command {
                CorpusCommand::Enumerate { group, max_order } => {
                    corpus::holomorph_enumerate(&group.parse::<GroupSpec>()?, max_order)?
                }
                CorpusCommand::Group { group, variant } => {
                    vec![corpus::group_brace(&group.parse()?, variant.parse::<Variant>()?)?]
                }
                CorpusCommand::Radical { modulus, generator } => {
                    vec![corpus::radical_ring_brace(modulus, generator)?]
                }
            };
            for b in braces {
                write!(out, "{}", BraceDocument::from_brace(&b))?;
            }
            Ok(())
        }
        Command::Verify { statement, sweep, max_base } => {
            let max_order = sweep.max_order.unwrap_or(8);
            let corpus = corpus::standard_corpus(max_order.min(corpus::DEFAULT_HOLOMORPH_LIMIT), max_order)?;
            let reports = match statement {
                VerifyStatement::Lemma31 => vec![verify::verify_lemma31(&corpus, max_base.unwrap_or(64))?],
                VerifyStatement::Lemma32 => vec![verify::verify_lemma32(&corpus, &corpus, max_base.unwrap_or(3600))?],
                VerifyStatement::Cor28 | VerifyStatement::Thm33 => {
                    let params = ProductSweep {
                        max_order,
                        sigma_budget: sweep.sigma_budget.unwrap_or(16),
                        ..ProductSweep::default()
                    };
                    let (cor, thm) = verify::verify_cor28_thm33(&corpus, params)?;
                    match statement {
                        VerifyStatement::Cor28 => vec![cor],
                        _ => {
                            let mut thm = thm;
                            thm.notes.splice(0..0, cor.notes);
                            vec![thm]
                        }
                    }
                }
            };
            emit(&reports, &sweep, out)
        }
        Command::Search { question: SearchQuestion::Q34, sweep, max_h } => {
            let max_g = sweep.max_order.unwrap_or(6);
            let corpus = corpus::standard_corpus(max_g.max(max_h).min(corpus::DEFAULT_HOLOMORPH_LIMIT), max_g.max(max_h))?;
            let report = verify::search_q34(&corpus, max_g, max_h, sweep.sigma_budget.unwrap_or(usize::MAX))?;
            emit(&[report], &sweep, out)
        }
        Command::Replay { case } => {
            let case = Case::parse(&fs::read_to_string(&case)?)?;
            let outcome = case.check()?;
            match (outcome.passed, outcome.witness) {
                (true, _) => writeln!(out, "PASS")?,
                (false, Some(w)) => writeln!(out, "FAIL witness {w}")?,
                (false, None) => writeln!(out, "FAIL")?,
            }
            verdict(outcome.passed)
        }
    }
}

fn validate(text: &str, out: &mut impl Write) -> Outcome {
    let mut all = true;
    for doc in corpus::parse_documents(text)? {
        let (report, _) = brace::validate(&doc.name, &doc.add, &doc.circ)?;
        if report.ok() {
            writeln!(out, "OK order={}", doc.order)?;
        } else {
            all = false;
            writeln!(out, "INVALID {}: {report}", doc.name)?;
        }
    }
    verdict(all)
}

fn emit(reports: &[SweepReport], sweep: &SweepArgs, out: &mut impl Write) -> Outcome {
    let mut failed = false;
    for report in reports {
        for n in &report.notes {
            writeln!(out, "{n}")?;
        }
        let mut dumped = report.counterexamples.iter();
        for (k, line) in report.lines.iter().enumerate() {
            if line.passed {
                if !sweep.quiet {
                    writeln!(out, "CASE {} #{k} {} PASS", report.statement.id(), line.label)?;
                }
                continue;
            }
            let cx = dumped.next().expect("one counterexample per failing line");
            let witness = cx.witness.as_ref().map(|w| format!(" witness {w}")).unwrap_or_default();
            writeln!(out, "CASE {} #{k} {} FAIL{witness}", report.statement.id(), line.label)?;
            let path = dump(&sweep.dump_dir, report.statement.id(), k, &cx.case)?;
            writeln!(out, "REPLAY brace-forge replay {}", path.display())?;
        }
        writeln!(out, "{}", report.summary())?;
        eprintln!("{}: {:.2?}", report.statement.id(), report.wall_time);
        failed |= !report.ok();
    }
    verdict(!failed)
}

fn dump(dir: &Path, id: &str, k: usize, case: &Case) -> Result<PathBuf, Failure> {
    fs::create_dir_all(dir)?;
    let path = dir.join(format!("{id}-{k}.case"));
    fs::write(&path, case.to_text())?;
    Ok(path)
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Failure::Property)
    }
}

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => Ok(fs::read_to_string(p)?),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn load(path: Option<&Path>) -> Result<Vec<FiniteSkewBrace>, Failure> {
    let braces = corpus::parse_braces(&read_input(path)?)?;
    if braces.is_empty() {
        return Err(Failure::Input("no documents in input".into()));
    }
    Ok(braces)
}

fn parse_indices(s: &str, sep: char) -> Result<Vec<usize>, Failure> {
    s.split(sep)
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Failure::Input(format!("bad index {t:?}"))))
        .collect()
}

fn join(xs: &[usize], sep: &str) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(sep)
}
