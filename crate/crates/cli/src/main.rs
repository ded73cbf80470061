use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fermconic::conicsystem::{export_frame_system, SimplexFrame};
use fermconic::oracle::{replay, CrossReport, SectionInstance};
use fermconic::report::Report;
use fermconic::suites;

const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), " (rev ", env!("FERMCONIC_REV"), ")");

/// Environment variable that takes precedence over --seed.
const SEED_ENV: &str = "FERMCONIC_SEED";

#[derive(Parser, Debug)]
#[command(name = "fermconic", version = VERSION, about = "Conics in the Fermat quintic threefold: exact checks and a finite-field oracle")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// write the report here instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Kernel, base-locus, involution and S-table identities, plus the Dwork round trip
    Identities {
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Export the conic system of a built-in frame
    Derive {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        option: u8,
        /// also emit the four d-free residuals
        #[arg(long)]
        eliminate: bool,
    },
    /// The exceptional-locus computation
    Casestudy,
    /// The two symmetric example families and the line-count constant
    Examples,
    /// Cross-validate the equations against brute-force factorization over F_p
    Oracle {
        #[arg(long, default_value_t = 101)]
        prime: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// JSON file with one SectionInstance or an array of them
        #[arg(long)]
        replay: Option<PathBuf>,
    },
    /// The S_mn table of a built-in frame as JSON keyed S_m_n
    DumpSmn {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        option: u8,
        /// largest m + n
        #[arg(long, default_value_t = 5)]
        max_total: u32,
    },
}

struct Outcome {
    reports: Vec<Report>,
    data: Option<Value>,
    failure: Option<Value>,
}

impl Outcome {
    fn reports(reports: Vec<Report>) -> Self {
        Outcome {
            reports,
            data: None,
            failure: None,
        }
    }

    fn passed(&self) -> bool {
        self.failure.is_none() && self.reports.iter().all(Report::passed)
    }

    fn failures(&self) -> Value {
        if let Some(f) = &self.failure {
            return f.clone();
        }
        let items: Vec<Value> = self
            .reports
            .iter()
            .flat_map(|r| {
                r.failures()
                    .map(move |c| json!({"suite": r.title, "name": c.name, "detail": c.detail}))
            })
            .collect();
        Value::Array(items)
    }
}

/// An error in the configuration rather than in a check.
struct UsageError(String);

fn seed_override(seed: u64) -> Result<u64, UsageError> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| UsageError(format!("{SEED_ENV}={v} is not an unsigned integer"))),
        Err(_) => Ok(seed),
    }
}

fn frame(option: u8, max_total: u32) -> SimplexFrame {
    if option == 1 {
        SimplexFrame::option1(max_total)
    } else {
        SimplexFrame::option2(max_total)
    }
}

fn read_instances(path: &PathBuf) -> Result<Vec<SectionInstance>, UsageError> {
    let text = fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    // accept a bare instance, an array, or an AgreementFailure payload
    let v = match v.get("instance") {
        Some(inner) => inner.clone(),
        None => v,
    };
    let parsed = match v {
        Value::Array(_) => serde_json::from_value(v),
        _ => serde_json::from_value(v).map(|i| vec![i]),
    };
    parsed.map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn oracle_outcome(run: CrossReport) -> Outcome {
    let failure = run.first_failure().map(|e| {
        let instance = run.outcomes.iter().find(|o| !o.agreed).map(|o| o.instance.clone());
        json!({"error": e.to_string(), "instance": instance})
    });
    let failure =
        failure.or_else(|| (!run.bounds_ok()).then(|| json!({"error": "a Schwartz-Zippel bound exceeds 2^-40"})));
    Outcome {
        reports: vec![run.to_report()],
        data: Some(serde_json::to_value(&run).expect("serializable")),
        failure,
    }
}

fn run(cmd: &Command) -> Result<Outcome, UsageError> {
    Ok(match cmd {
        Command::Identities { seed } => Outcome::reports(vec![suites::identities_suite(seed_override(*seed)?)]),
        Command::Casestudy => Outcome::reports(vec![suites::exceptional_suite()]),
        Command::Examples => Outcome::reports(vec![suites::examples_suite(), suites::constants_suite()]),
        Command::Derive { option, eliminate } => {
            let ex = export_frame_system(&frame(*option, 5), *eliminate).map_err(|e| UsageError(e.to_string()))?;
            let mut r = Report::new(&format!("derive option {option}"));
            r.check("E1..E5 built", ex.equations.len() == 5, "");
            if let Some(res) = &ex.residuals {
                r.check(
                    "d-free residuals",
                    res.len() == 4 && res.iter().all(|(n, _)| !n.vars().is_empty()),
                    format!("{} residuals", res.len()),
                );
            }
            Outcome {
                reports: vec![r],
                data: Some(ex.to_json()),
                failure: None,
            }
        }
        Command::Oracle {
            prime,
            trials,
            seed,
            replay: file,
        } => {
            let seed = seed_override(*seed)?;
            let run = match file {
                Some(path) => replay(read_instances(path)?, seed),
                None => suites::oracle_suite(*trials, *prime, seed),
            };
            oracle_outcome(run.map_err(|e| UsageError(e.to_string()))?)
        }
        Command::DumpSmn { option, max_total } => {
            let f = frame(*option, *max_total);
            Outcome {
                reports: Vec::new(),
                data: Some(f.table.to_json()),
                failure: None,
            }
        }
    })
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Identities { .. } => "identities",
        Command::Derive { .. } => "derive",
        Command::Casestudy => "casestudy",
        Command::Examples => "examples",
        Command::Oracle { .. } => "oracle",
        Command::DumpSmn { .. } => "dump-smn",
    }
}

fn render(cli: &Cli, out: &Outcome) -> String {
    let name = command_name(&cli.command);
    match cli.format {
        Format::Json => {
            let mut doc = json!({
                "command": name,
                "passed": out.passed(),
                "reports": out.reports,
            });
            if let Some(d) = &out.data {
                doc["data"] = d.clone();
            }
            if !out.passed() {
                doc["failures"] = out.failures();
            }
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Text => {
            let mut s: String = out.reports.iter().map(|r| r.to_string()).collect();
            if out.reports.is_empty() || matches!(cli.command, Command::Derive { .. }) {
                if let Some(d) = &out.data {
                    s += &serde_json::to_string_pretty(d).expect("serializable");
                    s.push('\n');
                }
            }
            s
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let start = Instant::now();
    eprintln!("fermconic {}: running {}", VERSION, command_name(&cli.command));
    let out = match run(&cli.command) {
        Ok(o) => o,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    eprintln!("fermconic: finished in {:.2?}", start.elapsed());
    let text = render(&cli, &out);
    match &cli.output {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if out.passed() {
        ExitCode::SUCCESS
    } else {
        if cli.format == Format::Text {
            eprintln!("{}", json!({"failures": out.failures()}));
        }
        ExitCode::from(1)
    }
}
