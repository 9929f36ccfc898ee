use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rug::Float;
use serde_json::json;

use thuekit::corpus::{family_form, write_atomic, write_outputs, run_corpus, CorpusConfig, FamilyKind};
use thuekit::interval::Interval;
use thuekit::matveev::{counting_constants, matveev_bound, MatveevInput};
use thuekit::report::{analyze_labeled, ReportOptions};
use thuekit::roots::DEFAULT_BITS;
use thuekit::solver::DEFAULT_Y_MAX;
use thuekit::{BinaryForm, Error};

#[derive(Parser)]
#[command(name = "thuekit", version, about = "Solve |F(x, y)| = 1 in a box and check the counting inequalities")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    F1,
    Even,
}

#[derive(Subcommand)]
enum Cmd {
    /// Analyze one form given as "a_n ... a_0", a file holding that line, or a family.
    Solve {
        form: Option<String>,
        #[arg(long, value_enum, conflicts_with = "form", requires_all = ["n", "p"])]
        family: Option<Family>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_Y_MAX)]
        y_max: u64,
        #[arg(long, default_value_t = DEFAULT_BITS)]
        precision_bits: u32,
        #[arg(long, default_value_t = 1000)]
        random_pairs: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every form of a TOML config; writes summary.csv and one JSON per form.
    Corpus {
        config: PathBuf,
        #[arg(long, default_value = "corpus-out")]
        out_dir: PathBuf,
    },
    /// Matveev's constants and the derived K, K1, D0.
    Matveev {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        d: u64,
        #[arg(long = "B", default_value_t = 1.0)]
        b: f64,
        #[arg(long, default_value_t = 1)]
        chi: u32,
        /// Height bounds A_1, ..., A_n, comma separated.
        #[arg(long, value_delimiter = ',')]
        a: Vec<f64>,
        #[arg(long, default_value_t = DEFAULT_BITS)]
        precision_bits: u32,
        #[arg(long)]
        json: bool,
    },
}

fn read_form(arg: &str) -> Result<BinaryForm, Error> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{arg}: {e}")))?;
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .ok_or_else(|| Error::Parse(format!("{arg}: no coefficient line")))?;
        BinaryForm::parse(line)
    } else {
        BinaryForm::parse(arg)
    }
}

fn sci(log: &Interval) -> String {
    let v = log.exp().to_f64();
    if (1e-3..1e6).contains(&v.abs()) {
        format!("{v:.6}")
    } else if v.is_finite() {
        format!("{v:.6e}")
    } else {
        let l10 = log.to_f64() / std::f64::consts::LN_10;
        format!("~1e{:.0}", l10)
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Solve {
            form,
            family,
            n,
            p,
            y_max,
            precision_bits,
            random_pairs,
            seed,
            out,
        } => {
            let (f, label) = match (form, family) {
                (Some(s), None) => (read_form(&s)?, None),
                (None, Some(fam)) => {
                    let (n, p) = (n.unwrap(), p.unwrap());
                    let kind = match fam {
                        Family::F1 => FamilyKind::F1,
                        Family::Even => FamilyKind::Even,
                    };
                    (family_form(kind, n, p)?, Some(thuekit::corpus::family_label(kind, n, p)))
                }
                _ => return Err(Error::InvalidInput("give a form or --family".into())),
            };
            let opts = ReportOptions {
                y_max,
                precision_bits,
                random_pairs,
                seed,
            };
            let report = analyze_labeled(&f, label, &opts)?;
            let text = report.to_json();
            match out {
                Some(path) => write_atomic(&path, &text)?,
                None => println!("{text}"),
            }
            for v in report.failures() {
                eprintln!("{v}");
            }
            Ok(if report.failures().next().is_some() { ExitCode::from(2) } else { ExitCode::SUCCESS })
        }
        Cmd::Corpus { config, out_dir } => {
            let cfg = CorpusConfig::load(&config)?;
            let reports = run_corpus(&cfg)?;
            write_outputs(&out_dir, &reports)?;
            let mut failed = false;
            for r in &reports {
                for v in r.failures() {
                    failed = true;
                    eprintln!("{}: {v}", r.form.label.as_deref().unwrap_or_default());
                }
            }
            eprintln!("{} forms written to {}", reports.len(), out_dir.display());
            Ok(if failed { ExitCode::from(2) } else { ExitCode::SUCCESS })
        }
        Cmd::Matveev {
            n,
            d,
            b,
            chi,
            a,
            precision_bits,
            json,
        } => {
            let p = precision_bits;
            let to_iv = |x: f64| Interval::point(Float::with_val(p, x));
            if !b.is_finite() {
                return Err(Error::InvalidInput("B must be finite".into()));
            }
            let input = MatveevInput {
                n: n as usize,
                chi,
                d,
                a: a.iter().map(|&x| to_iv(x)).collect(),
                b: to_iv(b),
            };
            let out = matveev_bound(&input, p)?;
            let pc = counting_constants(n as usize, p).ok();
            if json {
                let v = json!({ "matveev": out, "counting_constants": pc });
                println!("{}", serde_json::to_string_pretty(&v).expect("serializes"));
                return Ok(ExitCode::SUCCESS);
            }
            println!("{:<14}{:>24}{:>18}", "quantity", "log", "value");
            let row = |name: &str, log: &Interval| println!("{name:<14}{:>24.12}{:>18}", log.to_f64(), sci(log));
            row("C(n,chi)", &out.log_c);
            row("C0", &out.c0.ln());
            row("W0", &out.w0.ln());
            if let Some(lo) = &out.log_omega {
                row("Omega", lo);
            }
            if let Some(lp) = &out.log_product {
                row("C C0 W0 d^2 Om", lp);
            }
            match &pc {
                Some(pc) => {
                    row("K", &pc.log_k);
                    row("K1", &pc.log_k1);
                    println!("{:<14}{:>24.12}{:>18}", "D0", pc.log_d0.to_f64(), pc.d0);
                }
                None => println!("K, K1, D0 need n >= 3"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
