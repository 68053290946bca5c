use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use csp_lab::qpoly::{self, IntPolynomial};
use csp_lab::sieve::registry::FAMILIES;
use csp_lab::sieve::{check, Caps, Checker, CspInstance, Family, SieveError};
use csp_lab::Partition;

mod render;

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

/// Exact verification of cyclic sieving phenomena.
#[derive(Parser)]
#[command(name = "csp-lab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the registered families and their parameters.
    List,
    /// Check #X^g = f(omega) for every group element.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        /// Which checker(s) to run.
        #[arg(long, default_value = "both", value_parser = ["roots", "orbits", "both"])]
        checker: String,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
        /// Write the report to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Test hook: add 1 to this coefficient of f before checking.
        #[arg(long, value_name = "I")]
        corrupt_coeff: Option<usize>,
    },
    /// Print the orbits of the action with their stabilizer orders.
    Orbits {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        json: bool,
    },
    /// Print a named polynomial, its coefficients, and its value at q = 1.
    Poly {
        /// qint, qfactorial, qbinom, qcatalan, qfuss, eulerian, qsyt, face,
        /// cyclotomic, or proper.
        name: String,
        args: Vec<String>,
    },
}

#[derive(Args)]
struct FamilyArgs {
    /// Family id (see `list`).
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Partition, e.g. 3,2,1.
    #[arg(long)]
    lambda: Option<String>,
    /// Generator on [n] in cycle notation, e.g. "(1,2)(3,4)".
    #[arg(long)]
    gen: Option<String>,
    /// Base family for plethysm, e.g. cycle:n=5.
    #[arg(long)]
    base: Option<String>,
    /// Plethysm kind: h (multisets) or e (subsets).
    #[arg(long)]
    kind: Option<String>,
    /// Largest allowed #X; overrides CSP_LAB_CAP.
    #[arg(long)]
    cap: Option<u64>,
    /// Largest allowed group order.
    #[arg(long)]
    order_cap: Option<u64>,
}

impl FamilyArgs {
    fn params(&self) -> BTreeMap<String, String> {
        let mut p = BTreeMap::new();
        let nums = [("n", self.n), ("k", self.k), ("m", self.m)];
        for (key, v) in nums {
            if let Some(v) = v {
                p.insert(key.to_string(), v.to_string());
            }
        }
        let strs = [("lambda", &self.lambda), ("gen", &self.gen), ("base", &self.base), ("kind", &self.kind)];
        for (key, v) in strs {
            if let Some(v) = v {
                p.insert(key.to_string(), v.clone());
            }
        }
        p
    }

    fn caps(&self) -> Result<Caps, String> {
        let mut caps = Caps::default();
        if let Ok(raw) = std::env::var("CSP_LAB_CAP") {
            caps.size = raw
                .trim()
                .parse()
                .map_err(|_| format!("CSP_LAB_CAP={raw:?} is not a positive integer"))?;
        }
        if let Some(c) = self.cap {
            caps.size = c;
        }
        if let Some(c) = self.order_cap {
            caps.order = c;
        }
        if caps.size == 0 || caps.order == 0 {
            return Err("caps must be positive".into());
        }
        Ok(caps)
    }

    fn instantiate(&self) -> Result<CspInstance, Failure> {
        let caps = self.caps().map_err(Failure::Usage)?;
        let family = Family::from_params(&self.family, &self.params()).map_err(Failure::from)?;
        family.instantiate(&caps).map_err(Failure::from)
    }
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<SieveError> for Failure {
    fn from(e: SieveError) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::List => {
            print!("{}", render::family_list(FAMILIES));
            Ok(0)
        }
        Command::Verify { family, checker, json, out, corrupt_coeff } => {
            let mut inst = family.instantiate()?;
            if let Some(i) = corrupt_coeff {
                inst = inst.corrupted(i);
            }
            let checker: Checker = checker.parse().map_err(Failure::from)?;
            let report = check(&inst, checker);
            let text = if json {
                serde_json::to_string_pretty(&report).map_err(|e| Failure::Internal(e.to_string()))? + "\n"
            } else {
                render::report(&report)
            };
            match out {
                Some(path) => {
                    std::fs::write(&path, &text)
                        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
                    println!("verdict: {}", render::verdict(report.verdict));
                }
                None => print!("{text}"),
            }
            Ok(if report.verdict.passed() { 0 } else { EXIT_MISMATCH })
        }
        Command::Orbits { family, json } => {
            let inst = family.instantiate()?;
            let table = render::OrbitTable::new(&inst);
            if json {
                let s = serde_json::to_string_pretty(&table).map_err(|e| Failure::Internal(e.to_string()))?;
                println!("{s}");
            } else {
                print!("{}", table.to_text());
            }
            Ok(0)
        }
        Command::Poly { name, args } => {
            let f = named_poly(&name, &args)?;
            println!("{f}");
            let coeffs: Vec<String> = f.coeffs().iter().map(ToString::to_string).collect();
            println!("coefficients: [{}]", coeffs.join(", "));
            println!("f(1) = {}", f.eval_at_one());
            Ok(0)
        }
    }
}

fn named_poly(name: &str, args: &[String]) -> Result<IntPolynomial, Failure> {
    let usage = |want: &str| Failure::Usage(format!("usage: poly {name} {want}"));
    let int = |i: usize, want: &str| -> Result<usize, Failure> {
        args.get(i).and_then(|a| a.parse().ok()).ok_or_else(|| usage(want))
    };
    let arity = |k: usize, want: &str| -> Result<(), Failure> {
        if args.len() == k {
            Ok(())
        } else {
            Err(usage(want))
        }
    };
    let qerr = |e: qpoly::QPolyError| Failure::Usage(e.to_string());
    Ok(match name {
        "qint" => {
            arity(1, "N")?;
            qpoly::q_int(int(0, "N")?)
        }
        "qfactorial" => {
            arity(1, "N")?;
            qpoly::q_factorial(int(0, "N")?)
        }
        "qbinom" => {
            arity(2, "N K")?;
            qpoly::gaussian_binomial(int(0, "N K")?, int(1, "N K")? as i64)
        }
        "qcatalan" => {
            arity(1, "N")?;
            qpoly::q_catalan(int(0, "N")?).map_err(qerr)?
        }
        "qfuss" => {
            arity(2, "N M")?;
            qpoly::q_fuss_catalan_a(int(0, "N M")?, int(1, "N M")?).map_err(qerr)?
        }
        "eulerian" => {
            arity(1, "N")?;
            let n = int(0, "N")?;
            if n > 10 {
                return Err(Failure::Usage("eulerian enumerates S_n; n must be at most 10".into()));
            }
            qpoly::eulerian_poly(n)
        }
        "qsyt" => {
            arity(1, "LAMBDA")?;
            let la: Partition = args[0].parse().map_err(|_| usage("LAMBDA"))?;
            csp_lab::tableaux::q_count_syt(&la).map_err(qerr)?
        }
        "face" => {
            arity(3, "K N D")?;
            qpoly::face_poly(int(0, "K N D")?, int(1, "K N D")?, int(2, "K N D")?).map_err(qerr)?
        }
        "cyclotomic" => {
            arity(1, "D")?;
            let d = int(0, "D")?;
            if d == 0 {
                return Err(usage("D (D >= 1)"));
            }
            qpoly::cyclotomic(d as u64)
        }
        "proper" => {
            arity(1, "N (even)")?;
            let n = int(0, "N (even)")?;
            if n == 0 || n % 2 == 1 {
                return Err(usage("N (even, N >= 2)"));
            }
            csp_lab::sieve::registry::roichman_sagan_poly(n / 2).map_err(Failure::from)?
        }
        _ => {
            return Err(Failure::Usage(format!(
                "unknown polynomial {name:?}; try qint, qfactorial, qbinom, qcatalan, qfuss, eulerian, qsyt, face, cyclotomic, proper"
            )))
        }
    })
}
