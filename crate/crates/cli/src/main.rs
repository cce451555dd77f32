//! `nfk`: batch front end for the nichols-fk library.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget refusal.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nichols_fk::fk::{fk_presentation, hilbert_series_with, QuadraticPresentation};
use nichols_fk::nichols::{graded_dims, Budget, FieldMode};
use nichols_fk::quiver::BiOneRsc;
use nichols_fk::report::DimensionReport;
use nichols_fk::verify::{self, Verdict};
use nichols_fk::yd::{build, CharacterSpec, YdModule};
use nichols_fk::Error;

#[derive(Parser, Debug)]
#[command(
    name = "nfk",
    version,
    about = "Nichols algebras over S_n and Fomin-Kirillov algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with_all = ["csv", "text"])]
    json: bool,

    /// Emit CSV (dimension reports only).
    #[arg(long, global = true, conflicts_with = "text")]
    csv: bool,

    /// Emit plain text (default).
    #[arg(long, global = true)]
    text: bool,

    /// Worker threads; 1 gives a fully sequential run.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Lift the default cap on tensor-power sizes.
    #[arg(long, global = true)]
    allow_large: bool,

    /// Add wall-clock time to dimension reports.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FieldArg {
    Rational,
    Modp,
}

#[derive(Args, Debug)]
struct FieldOpts {
    /// Field for ranks.
    #[arg(long, value_enum, default_value_t = FieldArg::Rational)]
    field: FieldArg,

    /// Seed for the random primes; required with `--field modp`.
    #[arg(long)]
    seed: Option<u64>,
}

impl FieldOpts {
    fn mode(&self) -> Result<FieldMode, String> {
        match (self.field, self.seed) {
            (FieldArg::Rational, None) => Ok(FieldMode::Rational),
            (FieldArg::Modp, Some(seed)) => Ok(FieldMode::TwoPrimes { seed }),
            (FieldArg::Rational, Some(_)) => Err("--seed only applies to --field modp".into()),
            (FieldArg::Modp, None) => Err("--field modp requires --seed".into()),
        }
    }
}

#[derive(Args, Debug)]
struct ModuleOpts {
    #[arg(long)]
    n: Option<usize>,

    /// sgn-sgn, eps-sgn, phi1, phi2 or custom:<+1|-1>:<sgn|trivial>.
    #[arg(long, default_value = "eps-sgn")]
    character: CharacterSpec,

    /// Read the module from a JSON file instead.
    #[arg(long, conflicts_with_all = ["n"])]
    module: Option<PathBuf>,
}

impl ModuleOpts {
    fn load(&self) -> Result<YdModule, Failure> {
        match (&self.module, self.n) {
            (Some(path), _) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                Ok(YdModule::from_json(&text)?)
            }
            (None, Some(n)) => Ok(build(n, self.character)?),
            (None, None) => Err(Failure::Usage("one of --n or --module is required".into())),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert series of E_n or of a quadratic presentation, by Gröbner basis.
    Hilbert {
        #[arg(long, required_unless_present = "presentation")]
        n: Option<usize>,
        #[arg(long, default_value_t = 16)]
        max_degree: usize,
        /// Relations file, one relation per line.
        #[arg(long, conflicts_with = "n")]
        presentation: Option<PathBuf>,
    },
    /// Graded dimensions of the Nichols algebra of a module.
    NicholsDims {
        #[command(flatten)]
        module: ModuleOpts,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[command(flatten)]
        field: FieldOpts,
    },
    /// Braid equation for the module braiding.
    BraidCheck {
        #[command(flatten)]
        module: ModuleOpts,
    },
    /// Module/comodule compatibility.
    YdCheck {
        #[command(flatten)]
        module: ModuleOpts,
    },
    /// The module agrees with the unit arrows of the Hopf quiver.
    PsiCheck {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "eps-sgn")]
        character: CharacterSpec,
    },
    /// Quadratic sign table of M(O_(12), eps-sgn).
    Table1 {
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
    /// Coset-representative product identities.
    Lemma61 {
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
    /// Diagonal isomorphism between two module families.
    IsoCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        left: CharacterSpec,
        #[arg(long)]
        right: CharacterSpec,
        /// Fail unless the outcome matches.
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Twisted relations of E_n in ker(1 + c) and degreewise dimension bound.
    Compare {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[command(flatten)]
        field: FieldOpts,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Expect {
    Isomorphic,
    NotIsomorphic,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

enum Failure {
    Usage(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

enum Outcome {
    Dims(DimensionReport),
    Verdict(Verdict),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let g = &cli.global;
    let format = if g.json {
        Format::Json
    } else if g.csv {
        Format::Csv
    } else {
        Format::Text
    };
    if let Some(threads) = g.threads {
        if threads == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .expect("thread pool is configured once");
    }
    let budget = if g.allow_large {
        Budget::unlimited()
    } else {
        Budget::default()
    };
    let start = Instant::now();
    match run(&cli.command, budget) {
        Ok(Outcome::Dims(mut report)) => {
            if g.timing {
                report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            print!("{}", render_dims(&report, format));
            ExitCode::SUCCESS
        }
        Ok(Outcome::Verdict(v)) => {
            if format == Format::Csv {
                eprintln!("error: --csv applies to dimension reports only");
                return ExitCode::from(2);
            }
            print!("{}", render_verdict(&v, format));
            if v.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg} (pass --allow-large to proceed)");
            ExitCode::from(3)
        }
    }
}

fn run(command: &Command, budget: Budget) -> Result<Outcome, Failure> {
    Ok(match command {
        Command::Hilbert {
            n,
            max_degree,
            presentation,
        } => {
            let pres = match (presentation, n) {
                (Some(path), _) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    QuadraticPresentation::parse(&text)?
                }
                (None, Some(n)) => fk_presentation(*n)?,
                (None, None) => unreachable!("clap requires one of them"),
            };
            Outcome::Dims(hilbert_series_with(&pres, *max_degree, budget)?)
        }
        Command::NicholsDims {
            module,
            max_degree,
            field,
        } => {
            let mode = field.mode().map_err(Failure::Usage)?;
            Outcome::Dims(graded_dims(&module.load()?, *max_degree, mode, budget)?)
        }
        Command::BraidCheck { module } => Outcome::Verdict(verify::braid_suite(&module.load()?)),
        Command::YdCheck { module } => Outcome::Verdict(verify::yd_suite(&module.load()?)),
        Command::PsiCheck { n, character } => {
            Outcome::Verdict(verify::psi_suite(&BiOneRsc::new(*n, *character)?)?)
        }
        Command::Table1 { n } => {
            let report = verify::table1_check(*n)?;
            Outcome::Verdict(report.verdict().with_details(&report.rows))
        }
        Command::Lemma61 { n } => Outcome::Verdict(verify::lemma61_suite(*n)?),
        Command::IsoCheck {
            n,
            left,
            right,
            expect,
        } => {
            let (m1, m2) = (build(*n, *left)?, build(*n, *right)?);
            let expect = expect.map(|e| e == Expect::Isomorphic);
            Outcome::Verdict(verify::iso_suite(&m1, &m2, expect)?)
        }
        Command::Compare {
            n,
            max_degree,
            field,
        } => {
            let mode = field.mode().map_err(Failure::Usage)?;
            let report = verify::theorem48_check(*n, *max_degree, mode, budget)?;
            Outcome::Verdict(report.verdict().with_details(&report))
        }
    })
}

fn render_dims(report: &DimensionReport, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", report.to_json()),
        Format::Csv => report.to_csv(),
        Format::Text => {
            let mut out = format!("{:?} n={}", report.algebra, report.n).to_lowercase();
            if let Some(c) = report.character {
                out.push_str(&format!(" character={c}"));
            }
            out.push_str(&format!(" field={}\n", report.field));
            for (d, v) in report.degrees.iter().zip(&report.dims) {
                out.push_str(&format!("{d:>4} {v}\n"));
            }
            match report.total {
                Some(t) => out.push_str(&format!("total {t}\n")),
                None => out.push_str("total unknown (no zero component reached)\n"),
            }
            if let Some(ms) = report.elapsed_ms {
                out.push_str(&format!("elapsed {ms} ms\n"));
            }
            out
        }
    }
}

fn render_verdict(v: &Verdict, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", v.to_json()),
        _ => {
            let status = if v.passed() { "PASS" } else { "FAIL" };
            let mut out = format!(
                "{} n={}: {status} ({} of {} cases failed)\n",
                v.suite, v.n, v.cases_failed, v.cases_total
            );
            for w in &v.witnesses {
                out.push_str(&format!("  {w}\n"));
            }
            if let Some(d) = &v.details {
                if let Some(result) = d.get("result") {
                    out.push_str(&format!("  {result}\n"));
                }
            }
            out
        }
    }
}
