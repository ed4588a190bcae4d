//! `sbmotive`: build decomposition certificates and run identity suites.

mod verify;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use sbmotive::motives::{build_decomposition, compose, CertificateRecord, Correspondence, CorrespondenceRecord};
use sbmotive::poincare::{gaussian_binomial, modn_multiplicities};
use sbmotive::serial::SCHEMA_VERSION;
use sbmotive::tableaux::EnumerationBudget;
use sbmotive::{Error, Verdict};
use serde_json::json;

use verify::{Bounds, Suite};

const OK: u8 = 0;
const FAILED: u8 = 1;
const INVALID: u8 = 2;

#[derive(Parser)]
#[command(name = "sbmotive", version, about = "Exact motivic decomposition certificates for generalized Severi-Brauer varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build and check alpha, beta for (n, d, r).
    ///
    /// Exit status 0 when the certificate verifies, 1 when d r is not +-1 mod n,
    /// 2 for unsupported or invalid input.
    Decompose {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
        /// Write the certificate here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run an identity suite and print a JSON report.
    ///
    /// Exit status 0 when every check passes, 1 otherwise, 2 for bad bounds.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        bounds: Bounds,
        /// Write the report here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Include wall time in the report (makes it non-reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Print LEFT o RIGHT (RIGHT applied first).
    ///
    /// Each argument is a correspondence file, or `cert.json#alpha`,
    /// `#beta` or `#projector` to pick a part of a certificate.
    Compose {
        left: String,
        right: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print P(Gr_d(n), t) and, for coprime (n, d), its quotient by P(P^{n-1}, t).
    Poincare {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let status = match cli.command {
        Command::Decompose { n, d, r, output, format } => decompose(n, d, r, output.as_deref(), format),
        Command::Verify { suite, bounds, output, timing } => run_verify(suite, &bounds, output.as_deref(), timing),
        Command::Compose { left, right, format } => run_compose(&left, &right, format),
        Command::Poincare { n, d } => poincare(n, d),
    };
    ExitCode::from(status)
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), u8> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| {
            eprintln!("error: cannot write {}: {e}", path.display());
            INVALID
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(|_| INVALID)
        }
    }
}

fn status_of(e: &Error) -> u8 {
    match e {
        Error::Invariant(_) => FAILED,
        _ => INVALID,
    }
}

fn pretty<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn decompose(n: u32, d: u32, r: i64, output: Option<&Path>, format: Format) -> u8 {
    let cert = match build_decomposition(n, d, r) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return status_of(&e);
        }
    };
    let text = match format {
        Format::Json => pretty(&CertificateRecord::from(&cert)),
        Format::Text => {
            let mut s = format!("n = {n}, d = {d}, r = {r}, d*r mod n = {}\n", (i64::from(d) * r).rem_euclid(n.into()));
            s += &format!("route: {:?}\n", cert.route);
            match cert.verdict {
                Verdict::Verified => {
                    let (alpha, beta) = (cert.alpha.as_ref().unwrap(), cert.beta.as_ref().unwrap());
                    s += &format!("sign case: {:?}\n", cert.sign_case.unwrap());
                    s += &format!("alpha: {} terms on {} x {}\n", alpha.cycle().len(), alpha.source(), alpha.target());
                    s += &format!("beta: {} terms on {} x {}\n", beta.cycle().len(), beta.source(), beta.target());
                    s += &format!("beta o alpha = {}\n", cert.composition.as_ref().unwrap());
                    s += "alpha o beta is idempotent\n";
                    s += "verdict: verified\n";
                }
                Verdict::CriterionFailed => {
                    s += &format!(
                        "top coefficients of g: {} and {}; no multiplier makes both +-1 mod {n}\n",
                        cert.witness.g0, cert.witness.g1
                    );
                    s += "verdict: criterion failed\n";
                }
            }
            s
        }
    };
    if let Err(code) = emit(&text, output) {
        return code;
    }
    match cert.verdict {
        Verdict::Verified => OK,
        Verdict::CriterionFailed => FAILED,
    }
}

fn run_verify(suite: Suite, bounds: &Bounds, output: Option<&Path>, timing: bool) -> u8 {
    let start = Instant::now();
    let mut report = match verify::run(suite, bounds, EnumerationBudget::from_env()) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}", e.0);
            return INVALID;
        }
    };
    if timing {
        report.wall_time_secs = Some(start.elapsed().as_secs_f64());
    }
    if let Err(code) = emit(&pretty(&report), output) {
        return code;
    }
    eprintln!("{}: {}/{} checks passed", report.suite, report.summary.passed, report.summary.total);
    if report.all_passed() {
        OK
    } else {
        FAILED
    }
}

fn load_correspondence(arg: &str) -> Result<Correspondence, String> {
    let (path, part) = match arg.rsplit_once('#') {
        Some((p, part)) => (p, Some(part)),
        None => (arg, None),
    };
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    let record: CorrespondenceRecord = match part {
        None => serde_json::from_str(&text).map_err(|e| format!("{path}: {e}"))?,
        Some(part) => {
            let cert: CertificateRecord = serde_json::from_str(&text).map_err(|e| format!("{path}: {e}"))?;
            let chosen = match part {
                "alpha" => cert.alpha,
                "beta" => cert.beta,
                "projector" => cert.projector,
                other => return Err(format!("unknown certificate part {other:?}")),
            };
            chosen.ok_or_else(|| format!("{path} has no {part} (verdict {:?})", cert.verdict))?
        }
    };
    Correspondence::try_from(&record).map_err(|e| format!("{arg}: {e}"))
}

fn run_compose(left: &str, right: &str, format: Format) -> u8 {
    let loaded = load_correspondence(left).and_then(|l| Ok((l, load_correspondence(right)?)));
    let (l, r) = match loaded {
        Ok(pair) => pair,
        Err(e) => {
            eprintln!("error: {e}");
            return INVALID;
        }
    };
    let result = match compose(&l, &r) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return INVALID;
        }
    };
    let text = match format {
        Format::Json => pretty(&CorrespondenceRecord::from(&result)),
        Format::Text => format!("{}\n", result.cycle()),
    };
    emit(&text, None).err().unwrap_or(OK)
}

fn poincare(n: u32, d: u32) -> u8 {
    let p = match gaussian_binomial(n, d) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return INVALID;
        }
    };
    let quotient = match modn_multiplicities(n, d) {
        Ok(q) => Some(q.iter().map(ToString::to_string).collect::<Vec<_>>()),
        Err(Error::Divisibility(_)) => None,
        Err(e) => {
            eprintln!("error: {e}");
            return status_of(&e);
        }
    };
    let doc = json!({
        "schema": SCHEMA_VERSION,
        "n": n,
        "d": d,
        "poincare": p,
        "divisible_by_projective": quotient.is_some(),
        "multiplicities": quotient,
    });
    emit(&pretty(&doc), None).err().unwrap_or(OK)
}
