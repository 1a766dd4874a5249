//! `qckit`: command-line front end.
//!
//! Exit codes: 0 the property holds (or the command succeeded), 1 the
//! property fails, 2 error or inconclusive.

mod render;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qckit::arith::prime_power;
use qckit::cyclic::multiplier_map;
use qckit::format::{self, CodeFile, LoadedCode, FORMAT_VERSION};
use qckit::linear_code::DEFAULT_CUTOFF;
use qckit::quasi_cyclic::{self, IsodualStrategy, Verdict};
use qckit::selftest::{self, DEFAULT_SEED};
use qckit::{construct_isodual_cyclic, factor_cyclic_modulus, CyclicCode, EquivalenceMode, Field, IsodualVariant};
use qckit::{equivalence_search, QuasiCyclicCode};

#[derive(Parser, Debug)]
#[command(name = "qckit", version, about = "Quasi-cyclic codes over finite fields")]
struct Cli {
    /// Print machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized corpora.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Largest length handed to exhaustive equivalence search.
    #[arg(long, global = true, default_value_t = DEFAULT_CUTOFF)]
    cutoff: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Classify the irreducible factors of Y^m - 1 over F_q.
    Factor {
        #[arg(long)]
        q: String,
        #[arg(long)]
        m: usize,
    },
    /// Print the constituent codes of a quasi-cyclic code.
    Decompose { file: PathBuf },
    /// Compute the Euclidean dual.
    Dual {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Decide self-duality componentwise and directly.
    Selfdual { file: PathBuf },
    /// Decide whether the code is permutation equivalent to its dual.
    Isodual {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = StrategyArg::Components)]
        strategy: StrategyArg,
    },
    /// Equivalence of two codes.
    #[command(subcommand)]
    Equiv(EquivCmd),
    /// Build codes from the standard constructions.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Enumerate the multiplier selections of a prime-index code.
    Enumerate { file: PathBuf },
    /// Run the invariant suites under a fixed seed.
    Selftest {
        /// Run a single suite by key.
        #[arg(long)]
        suite: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum EquivCmd {
    /// Permutation or monomial equivalence of linear codes.
    Linear {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Permutation)]
        mode: ModeArg,
    },
    /// Multiplier equivalence of cyclic codes.
    Cyclic { a: PathBuf, b: PathBuf },
    /// Slotwise multiplier equivalence of quasi-cyclic codes.
    Qc { a: PathBuf, b: PathBuf },
}

#[derive(Subcommand, Debug)]
enum ConstructCmd {
    /// Length-2s isodual cyclic code.
    IsodualCyclic {
        #[arg(long)]
        q: String,
        #[arg(long)]
        s: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::A)]
        variant: VariantArg,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Self-dual quasi-cyclic code of even index.
    SelfdualQc {
        #[arg(long)]
        q: String,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Quasi-cyclic code of index 2s with cyclic constituents.
    IsodualQc {
        #[arg(long)]
        q: String,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum StrategyArg {
    Components,
    Bruteforce,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    Permutation,
    Monomial,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum VariantArg {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
}

struct Failure {
    kind: String,
    message: String,
}

impl From<qckit::Error> for Failure {
    fn from(e: qckit::Error) -> Self {
        Failure { kind: e.kind().into(), message: e.to_string() }
    }
}

impl Failure {
    fn new(kind: &str, message: impl Into<String>) -> Self {
        Failure { kind: kind.into(), message: message.into() }
    }

    fn to_json(&self) -> Value {
        json!({"error": {"kind": self.kind, "message": self.message, "format_version": FORMAT_VERSION}})
    }
}

/// A finished command: its JSON report, its table form and its exit code.
struct Outcome {
    report: Value,
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(report: Value, text: String) -> Self {
        Outcome { report, text, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                emit(&e.to_string());
                return ExitCode::SUCCESS;
            }
            let json = std::env::args().any(|a| a == "--json");
            let failure = Failure::new("Usage", e.render().to_string().trim());
            report_failure(&failure, json);
            return ExitCode::from(2);
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            if cli.json {
                emit(&json_text(&out.report));
            } else {
                emit(&out.text);
            }
            ExitCode::from(out.code)
        }
        Err(failure) => {
            report_failure(&failure, cli.json);
            ExitCode::from(2)
        }
    }
}

fn report_failure(f: &Failure, json: bool) {
    if json {
        emit(&json_text(&f.to_json()));
    } else {
        eprintln!("error [{}]: {}", f.kind, f.message);
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

/// Writes to stdout; a closed pipe is not an error worth reporting.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn dispatch(cli: &Cli) -> Result<Outcome, Failure> {
    let cutoff = cli.cutoff;
    match &cli.cmd {
        Cmd::Factor { q, m } => {
            let cls = factor_cyclic_modulus(&parse_q(q)?, *m)?;
            Ok(Outcome::ok(format::factor_json(&cls), render::factor(&cls)))
        }
        Cmd::Decompose { file } => {
            let c = load_qc(file)?;
            let d = quasi_cyclic::crt_decompose(&c)?;
            Ok(Outcome::ok(format::decomposition_json(&d), render::decomposition(&d)))
        }
        Cmd::Dual { file, output } => {
            let loaded = load(file)?;
            let out = if let Some(c) = &loaded.qc {
                CodeFile::from_qc(&c.dual()?)?
            } else if let Some(c) = &loaded.cyclic {
                CodeFile::from_cyclic(&c.dual()?)?
            } else {
                CodeFile::from_linear(&loaded.code.euclidean_dual())?
            };
            let dual = out.load()?.code;
            if let Some(path) = output {
                write(path, &out.to_json())?;
            }
            let report = json!({
                "n": dual.len(),
                "k": dual.dim(),
                "output": output.as_ref().map(|p| p.display().to_string()),
                "code": serde_json::to_value(&out).expect("code files serialize"),
            });
            Ok(Outcome::ok(report, render::dual(&dual, output.as_deref())))
        }
        Cmd::Selfdual { file } => {
            let c = load_qc(file)?;
            let r = c.selfdual_report()?;
            if !r.agree() {
                return Err(qckit::Error::RouteMismatch("componentwise self-duality disagrees with C = C^perp").into());
            }
            Ok(Outcome { report: format::selfdual_json(&r), text: render::selfdual(&r), code: exit_for(r.direct) })
        }
        Cmd::Isodual { file, strategy } => {
            let c = load_qc(file)?;
            let strategy = match strategy {
                StrategyArg::Components => IsodualStrategy::Components,
                StrategyArg::Bruteforce => IsodualStrategy::Bruteforce,
            };
            let v = quasi_cyclic::is_isodual(&c, strategy, cutoff)?;
            Ok(Outcome {
                report: format::verdict_json(&v, c.field()),
                text: render::verdict(&v),
                code: verdict_exit(v.result),
            })
        }
        Cmd::Equiv(e) => equiv(e, cutoff),
        Cmd::Construct(c) => construct(c, cutoff),
        Cmd::Enumerate { file } => {
            let c = load_qc(file)?;
            let r = quasi_cyclic::enumerate_multiplier_equivalents(&c)?;
            Ok(Outcome::ok(format::enumeration_json(&r), render::enumeration(&r)))
        }
        Cmd::Selftest { suite } => {
            let report = match suite {
                None => selftest::run(cli.seed),
                Some(key) => selftest::SelftestReport {
                    seed: cli.seed,
                    suites: vec![selftest::run_suite(key, cli.seed)
                        .ok_or_else(|| Failure::new("UnknownSuite", format!("no suite named {key:?}")))?],
                },
            };
            Ok(Outcome { report: report.to_json(), text: report.table(), code: exit_for(report.passed()) })
        }
    }
}

fn equiv(cmd: &EquivCmd, cutoff: usize) -> Result<Outcome, Failure> {
    match cmd {
        EquivCmd::Linear { a, b, mode } => {
            let (a, b) = (load(a)?.code, load(b)?.code);
            let mode = match mode {
                ModeArg::Permutation => EquivalenceMode::Permutation,
                ModeArg::Monomial => EquivalenceMode::Monomial,
            };
            let w = equivalence_search(&a, &b, mode, cutoff)?;
            let report = json!({
                "equivalent": w.is_some(),
                "mode": mode.name(),
                "witness": w.as_ref().map(|w| format::map_json(w, a.field())),
            });
            let text = render::equivalence(w.as_ref(), mode.name());
            Ok(Outcome { report, text, code: exit_for(w.is_some()) })
        }
        EquivCmd::Cyclic { a, b } => {
            let (a, b) = (load_cyclic(a)?, load_cyclic(b)?);
            let w = a.multiplier_equivalent(&b)?;
            let map = w.map(|k| multiplier_map(a.len(), k)).transpose()?;
            let report = json!({
                "equivalent": w.is_some(),
                "multiplier": w,
                "witness": map.as_ref().map(|m| format::map_json(m, a.field())),
            });
            let text = match w {
                Some(k) => format!("multiplier equivalent: mu_{k} (i -> {k} i mod {})\n", a.len()),
                None => "not multiplier equivalent\n".into(),
            };
            Ok(Outcome { report, text, code: exit_for(w.is_some()) })
        }
        EquivCmd::Qc { a, b } => {
            let (a, b) = (load_qc(a)?, load_qc(b)?);
            let w = a.multiplier_equivalent(&b)?;
            let report = json!({"equivalent": w.is_some(), "multipliers": w});
            let text = match &w {
                Some(t) => format!("multiplier equivalent slot by slot: {t:?}\n"),
                None => "not multiplier equivalent\n".into(),
            };
            Ok(Outcome { report, text, code: exit_for(w.is_some()) })
        }
    }
}

fn construct(cmd: &ConstructCmd, cutoff: usize) -> Result<Outcome, Failure> {
    match cmd {
        ConstructCmd::IsodualCyclic { q, s, variant, output } => {
            let variant = match variant {
                VariantArg::A => IsodualVariant::A,
                VariantArg::B => IsodualVariant::B,
            };
            let c = construct_isodual_cyclic(&parse_q(q)?, *s, variant)?;
            if let Some(path) = output {
                write(path, &CodeFile::from_cyclic(&c.code)?.to_json())?;
            }
            Ok(Outcome::ok(format::isodual_cyclic_json(&c), render::isodual_cyclic(&c)))
        }
        ConstructCmd::SelfdualQc { q, l, m, output } => {
            let c = quasi_cyclic::construct_selfdual_qc(&parse_q(q)?, *l, *m)?;
            let file = CodeFile::from_qc(&c)?;
            if let Some(path) = output {
                write(path, &file.to_json())?;
            }
            let report = json!({"selfdual": true, "code": serde_json::to_value(&file).expect("code files serialize")});
            Ok(Outcome::ok(report, render::code("self-dual quasi-cyclic code", c.code())))
        }
        ConstructCmd::IsodualQc { q, l, m, output } => {
            let c = quasi_cyclic::construct_isodual_qc(&parse_q(q)?, *l, *m, cutoff)?;
            if let Some(path) = output {
                write(path, &CodeFile::from_qc(&c.code)?.to_json())?;
            }
            let decisive = c.bruteforce.as_ref().unwrap_or(&c.verdict).result;
            Ok(Outcome { report: format::isodual_qc_json(&c), text: render::isodual_qc(&c), code: verdict_exit(decisive) })
        }
    }
}

fn exit_for(holds: bool) -> u8 {
    if holds {
        0
    } else {
        1
    }
}

fn verdict_exit(v: Verdict) -> u8 {
    match v {
        Verdict::Isodual => 0,
        Verdict::NotIsodual => 1,
        Verdict::Inconclusive => 2,
    }
}

/// `p^e` or a prime-power integer.
fn parse_q(text: &str) -> Result<Field, Failure> {
    let bad = || Failure::new("BadParameters", format!("cannot read field size {text:?}"));
    let (p, e) = match text.split_once('^') {
        Some((p, e)) => (p.trim().parse::<u32>().map_err(|_| bad())?, e.trim().parse::<u32>().map_err(|_| bad())?),
        None => {
            let q: u64 = text.trim().parse().map_err(|_| bad())?;
            let (p, e) = prime_power(q).ok_or(qckit::Error::NotPrimePower(q))?;
            (p as u32, e)
        }
    };
    Ok(Field::new(p, e)?)
}

fn load(path: &Path) -> Result<LoadedCode, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::new("Io", format!("{}: {e}", path.display())))?;
    Ok(format::load_code(&text)?)
}

/// The `qc` block, or the whole code as index `n` with co-index 1.
fn load_qc(path: &Path) -> Result<QuasiCyclicCode, Failure> {
    let loaded = load(path)?;
    match loaded.qc {
        Some(c) => Ok(c),
        None => {
            let n = loaded.code.len();
            Ok(QuasiCyclicCode::from_linear(loaded.code, n)?)
        }
    }
}

fn load_cyclic(path: &Path) -> Result<CyclicCode, Failure> {
    let loaded = load(path)?;
    match loaded.cyclic {
        Some(c) => Ok(c),
        None => Ok(CyclicCode::from_linear(&loaded.code)?),
    }
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::new("Io", format!("{}: {e}", path.display())))
}
