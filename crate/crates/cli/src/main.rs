use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use frobnil::cliffordodd::OddNilHecke;
use frobnil::frobenius::{Builtin, FrobeniusSuperalgebra};
use frobnil::nilcoxeter::NilCoxeter;
use frobnil::nilhecke::NilHecke;
use frobnil::polynomial::Polynomial;
use frobnil::presentation::GeneratedAlgebra;
use frobnil::report::Report;
use frobnil::suites::{self, SuiteOptions};
use frobnil::textio::{self, TextError};

#[derive(Parser)]
#[command(name = "frobnil", version, about = "Normal forms and verification in Frobenius nilHecke superalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Built-in algebra: ground, clifford_odd, clifford_even, dual_numbers, cyclic_group(m)
    #[arg(long, conflicts_with = "config", required_unless_present = "config")]
    algebra: Option<String>,
    /// Algebra config file
    #[arg(long)]
    config: Option<PathBuf>,
    /// Number of strands
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SuiteArgs {
    /// Dot degree bound of exhaustive sweeps
    #[arg(long, default_value_t = 6)]
    degree_cap: u32,
    /// Random instances per randomized check
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl SuiteArgs {
    fn options(&self) -> SuiteOptions {
        SuiteOptions {
            degree_cap: self.degree_cap,
            sample_degree: self.degree_cap.min(3),
            samples: self.samples,
            seed: self.seed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    /// NH_n(A)
    Nh,
    /// P_n(A)
    Pol,
    /// N_n(A)
    Nc,
    /// ONH_n ⊗ Cl^{⊗n}
    Onh,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of an expression
    Normalize {
        expr: String,
        #[command(flatten)]
        common: Common,
        #[arg(long = "in", value_enum, default_value = "nh")]
        target: Target,
    },
    /// Apply an element of NH_n(A) to a polynomial
    Act {
        expr: String,
        #[arg(long)]
        on: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run the relation and invariant suites
    Verify {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        suite: SuiteArgs,
    },
    /// Print the dual basis
    DualBasis {
        #[command(flatten)]
        common: Common,
    },
    /// Print the teleporter elements τ_i
    Tau {
        #[command(flatten)]
        common: Common,
    },
    /// Print the Nakayama automorphism
    Nakayama {
        #[command(flatten)]
        common: Common,
    },
    /// Check NH_n(Cl) ≅ ONH_n ⊗ Cl^{⊗n}
    IsoCheck {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        suite: SuiteArgs,
    },
    /// Print the Z-degree and parity of each term
    Grade {
        expr: String,
        #[command(flatten)]
        common: Common,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<TextError> for Failure {
    fn from(e: TextError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<frobnil::Error> for Failure {
    fn from(e: frobnil::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn load(common: &Common) -> Result<FrobeniusSuperalgebra, Failure> {
    match (&common.algebra, &common.config) {
        (Some(name), _) => Ok(FrobeniusSuperalgebra::builtin(name.parse::<Builtin>()?)),
        (None, Some(path)) => Ok(textio::load_config(path)?),
        (None, None) => Err(Failure::Usage("one of --algebra or --config is required".into())),
    }
}

fn emit(json: bool, text: &str, value: Value) {
    if json {
        println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    } else {
        println!("{text}");
    }
}

fn normal_form<A: GeneratedAlgebra>(target: &A, expr: &str) -> Result<String, Failure> {
    Ok(target.format(&textio::read(target, expr)?))
}

fn emit_reports(json: bool, reports: &[Report]) -> Result<(), Failure> {
    let passed = reports.iter().all(Report::passed);
    if json {
        emit(true, "", json!({ "passed": passed, "reports": reports }));
    } else {
        for r in reports {
            println!("{r}");
        }
        println!("{}", if passed { "PASS" } else { "FAIL" });
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Normalize { expr, common, target } => {
            let n = common.n;
            let out = match target {
                Target::Nh => normal_form(&NilHecke::new(load(&common)?, n)?, &expr)?,
                Target::Pol => normal_form(&Polynomial::new(load(&common)?, n)?, &expr)?,
                Target::Nc => normal_form(&NilCoxeter::new(load(&common)?, n)?, &expr)?,
                Target::Onh => normal_form(&OddNilHecke::new(n)?, &expr)?,
            };
            emit(common.json, &out, json!({ "input": expr, "normal_form": out }));
        }
        Command::Act { expr, on, common } => {
            let nh = NilHecke::new(load(&common)?, common.n)?;
            let e = textio::read(&nh, &expr)?;
            let f = textio::read(nh.polynomial(), &on)?;
            let out = nh.polynomial().format(&nh.act_pol(&e, &f));
            emit(common.json, &out, json!({ "element": expr, "on": on, "result": out }));
        }
        Command::Verify { common, suite } => {
            let a = load(&common)?;
            let reports = suites::verify_all(&a, common.n, &suite.options())?;
            emit_reports(common.json, &reports)?;
        }
        Command::DualBasis { common } => {
            let a = load(&common)?;
            let rows: Vec<(String, String)> =
                (0..a.dim()).map(|b| (a.label(b).to_string(), a.format_element(a.dual(b)))).collect();
            let text = rows.iter().map(|(b, d)| format!("{b}^∨ = {d}")).collect::<Vec<_>>().join("\n");
            let value: Value = rows.iter().map(|(b, d)| json!({ "basis": b, "dual": d })).collect();
            emit(common.json, &text, value);
        }
        Command::Tau { common } => {
            let a = load(&common)?;
            let nc = NilCoxeter::new(a.clone(), common.n.max(2))?;
            let taus = (1..nc.n())
                .map(|i| Ok(nc.format(&nc.tensor(&a.tau_at(nc.n(), i)?))))
                .collect::<Result<Vec<_>, frobnil::Error>>()?;
            let text = taus.iter().enumerate().map(|(i, t)| format!("tau{} = {t}", i + 1)).collect::<Vec<_>>().join("\n");
            emit(common.json, &text, json!({ "n": nc.n(), "tau": taus }));
        }
        Command::Nakayama { common } => {
            let a = load(&common)?;
            let psi = a.nakayama()?;
            let rows: Vec<(String, String)> = psi.iter().enumerate().map(|(b, img)| (a.label(b).to_string(), a.format_element(img))).collect();
            let mut text = rows.iter().map(|(b, img)| format!("psi({b}) = {img}")).collect::<Vec<_>>();
            text.push(format!("symmetric: {}", a.is_symmetric()));
            let images: Value = rows.iter().map(|(b, img)| json!({ "basis": b, "image": img })).collect();
            emit(common.json, &text.join("\n"), json!({ "symmetric": a.is_symmetric(), "psi": images }));
        }
        Command::IsoCheck { n, json, suite } => {
            let mut opts = suite.options();
            opts.degree_cap = opts.degree_cap.min(3);
            emit_reports(json, &[suites::clifford_bridge_suite(n, &opts)?])?;
        }
        Command::Grade { expr, common } => {
            let nh = NilHecke::new(load(&common)?, common.n)?;
            let e = textio::read(&nh, &expr)?;
            let mut lines = Vec::new();
            let mut values = Vec::new();
            for (k, c) in &e {
                let term = nh.format(&frobnil::linear::Element::term(k.clone(), c.clone()));
                let g = nh.z_degree(k)?;
                let parity = if g.parity.is_odd() { "odd" } else { "even" };
                lines.push(format!("{term}: degree {}, {parity}", g.z_degree));
                values.push(json!({ "term": term, "degree": g.z_degree, "parity": g.parity }));
            }
            if lines.is_empty() {
                lines.push("0".into());
            }
            emit(common.json, &lines.join("\n"), Value::Array(values));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
