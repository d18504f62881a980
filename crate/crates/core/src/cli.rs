//! Command-line surface: argument parsing into a [`CommandPlan`] and
//! execution into a deterministic JSON [`Certificate`].

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::arith::{parse_rational, rat_to_string};
use crate::error::Error;
use crate::isomgroup::{
    classify_isometry, entropy, has_simple_spectrum, is_primary_charpoly, order, verify_isometry, IsometryKind,
    Order,
};
use crate::json::{bigint_to_value, value_to_matrix, value_to_vector, vector_to_value};
use crate::k3pipeline::{run_pipeline, verify_construction, PrimeSelection};
use crate::latticecore::{classify, discriminant_group, signature, vectors_of_norm, GramLattice};
use crate::polyalg::{classify_salem, enumerate_salem, IntPolynomial, SalemVerdict};
use crate::rankkit::abelian_rank_of_image;

pub const SCHEMA: &str = "salem-lattice/1";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug, Clone, PartialEq, Eq)]
#[command(name = "salemlat", version, about = "Exact Salem-number and lattice-isometry certificates")]
pub struct CommandPlan {
    /// Write the certificate here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Decide whether a polynomial is a Salem polynomial.
    SalemTest {
        /// Comma-separated ascending coefficients.
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Width of the Salem-number enclosure, e.g. `1/1000000`.
        #[arg(long, default_value = "1/1099511627776")]
        precision: String,
    },
    /// List Salem polynomials of a degree with a trace range.
    SalemEnum {
        #[arg(long)]
        degree: usize,
        #[arg(long, allow_hyphen_values = true)]
        trace_min: i64,
        #[arg(long, allow_hyphen_values = true)]
        trace_max: i64,
    },
    /// Signature, class and discriminant group of a lattice.
    LatticeInfo {
        #[arg(long)]
        lattice: PathBuf,
    },
    /// All vectors of a given norm in a definite lattice.
    LatticeVectors {
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        norm: BigInt,
    },
    /// Verify and classify an isometry.
    IsomClassify {
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Run the K3 construction for a prime selection.
    K3Run {
        #[arg(long)]
        config: PathBuf,
        /// Lattice checks only.
        #[arg(long)]
        skip_extension: bool,
    },
    /// Rank of the subgroup generated by integer vectors.
    Rank {
        #[arg(long)]
        vectors: PathBuf,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::SalemTest { .. } => "salem-test",
            Command::SalemEnum { .. } => "salem-enum",
            Command::LatticeInfo { .. } => "lattice-info",
            Command::LatticeVectors { .. } => "lattice-vectors",
            Command::IsomClassify { .. } => "isom-classify",
            Command::K3Run { .. } => "k3-run",
            Command::Rank { .. } => "rank",
        }
    }

    fn echo(&self) -> Value {
        let path = |p: &Path| Value::String(p.display().to_string());
        let args = match self {
            Command::SalemTest { poly, precision } => json!({ "poly": poly, "precision": precision }),
            Command::SalemEnum {
                degree,
                trace_min,
                trace_max,
            } => json!({ "degree": degree, "trace_min": trace_min, "trace_max": trace_max }),
            Command::LatticeInfo { lattice } => json!({ "lattice": path(lattice) }),
            Command::LatticeVectors { lattice, norm } => {
                json!({ "lattice": path(lattice), "norm": norm.to_string() })
            }
            Command::IsomClassify { lattice, matrix } => json!({ "lattice": path(lattice), "matrix": path(matrix) }),
            Command::K3Run { config, skip_extension } => {
                json!({ "config": path(config), "skip_extension": skip_extension })
            }
            Command::Rank { vectors } => json!({ "vectors": path(vectors) }),
        };
        json!({ "subcommand": self.name(), "inputs": args })
    }
}

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Success = 0,
    ChecksFailed = 1,
    Usage = 2,
    Io = 3,
}

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or invalid input data.
    Usage(String),
    /// `--help` / `--version` output.
    Info(String),
    Io(String),
}

impl CliError {
    pub fn exit(&self) -> Exit {
        match self {
            CliError::Usage(_) => Exit::Usage,
            CliError::Info(_) => Exit::Success,
            CliError::Io(_) => Exit::Io,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Info(m) => f.write_str(m),
            CliError::Io(m) => write!(f, "I/O error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// One named pass/fail entry.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckEntry {
    pub name: String,
    pub pass: bool,
    pub witness: Option<Value>,
}

impl CheckEntry {
    fn new(name: impl Into<String>, pass: bool, witness: Option<Value>) -> Self {
        Self {
            name: name.into(),
            pass,
            witness,
        }
    }

    fn to_json(&self) -> Value {
        let mut v = json!({ "name": self.name, "pass": self.pass });
        if let Some(w) = &self.witness {
            v["witness"] = w.clone();
        }
        v
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub tool_version: String,
    pub command: Value,
    pub result: Value,
    pub checks: Vec<CheckEntry>,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn exit(&self) -> Exit {
        if self.passed() {
            Exit::Success
        } else {
            Exit::ChecksFailed
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": SCHEMA,
            "tool_version": self.tool_version,
            "command": self.command,
            "result": self.result,
            "checks": self.checks.iter().map(CheckEntry::to_json).collect::<Vec<_>>(),
        })
    }

    /// Pretty JSON with a trailing newline.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
        s.push('\n');
        s
    }
}

/// Parses arguments without the program name.
pub fn parse_command<I, S>(argv: I) -> Result<CommandPlan, CliError>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once(std::ffi::OsString::from("salemlat")).chain(argv.into_iter().map(Into::into));
    CommandPlan::try_parse_from(args).map_err(|e| {
        use clap::error::ErrorKind;
        match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliError::Info(e.to_string()),
            // bare `salemlat` prints help but is still a usage error
            _ => CliError::Usage(e.to_string()),
        }
    })
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: invalid JSON: {e}", path.display())))
}

fn read_lattice(path: &Path) -> Result<GramLattice, CliError> {
    Ok(GramLattice::from_json(&read_json(path)?)?)
}

fn interval_json(lo: &BigRational, hi: &BigRational) -> Value {
    json!({ "lo": rat_to_string(lo), "hi": rat_to_string(hi) })
}

fn salem_test(poly: &str, precision: &str) -> Result<Certificate, CliError> {
    let p = IntPolynomial::parse_csv(poly)?;
    let eps = parse_rational(precision)?;
    let verdict = classify_salem(&p, &eps)?;
    let (result, pass) = match &verdict {
        SalemVerdict::Salem(cert) => (json!({ "salem": true, "certificate": cert }), true),
        SalemVerdict::Rejected(r) => (json!({ "salem": false, "reason": r.reason() }), false),
    };
    Ok(Certificate {
        tool_version: TOOL_VERSION.into(),
        command: Value::Null,
        result,
        checks: vec![CheckEntry::new("salem", pass, None)],
    })
}

fn salem_enum(degree: usize, tmin: i64, tmax: i64) -> Result<Certificate, CliError> {
    let certs = enumerate_salem(degree, tmin, tmax)?;
    let eps = crate::arith::rat(1, 1 << 20);
    let recheck = certs
        .iter()
        .all(|c| classify_salem(&c.polynomial, &eps).map(|v| v.is_salem()).unwrap_or(false));
    Ok(Certificate {
        tool_version: TOOL_VERSION.into(),
        command: Value::Null,
        result: json!({ "count": certs.len(), "polynomials": certs }),
        checks: vec![CheckEntry::new("reclassified_salem", recheck, None)],
    })
}

fn lattice_info(path: &Path) -> Result<Certificate, CliError> {
    let l = read_lattice(path)?;
    let s = signature(&l);
    let disc = discriminant_group(&l).ok();
    let result = json!({
        "rank": l.rank(),
        "even": l.is_even(),
        "det": bigint_to_value(&l.det()),
        "signature": [s.n_plus, s.n_zero, s.n_minus],
        "class": classify(&l),
        "discriminant_group": disc.map(|d| json!({
            "invariant_factors": vector_to_value(&d.invariant_factors),
            "order": bigint_to_value(&d.order),
        })),
    });
    Ok(Certificate {
        tool_version: TOOL_VERSION.into(),
        command: Value::Null,
        result,
        checks: Vec::new(),
    })
}

fn lattice_vectors(path: &Path, norm: &BigInt) -> Result<Certificate, CliError> {
    let l = read_lattice(path)?;
    let vs = vectors_of_norm(&l, norm)?;
    let bad = vs.iter().find(|v| &l.norm(v) != norm);
    Ok(Certificate {
        tool_version: TOOL_VERSION.into(),
        command: Value::Null,
        result: json!({
            "norm": norm.to_string(),
            "pairs": vs.len(),
            "count": 2 * vs.len(),
            "vectors": vs.iter().map(|v| vector_to_value(v)).collect::<Vec<_>>(),
        }),
        checks: vec![CheckEntry::new("norms", bad.is_none(), bad.map(|v| vector_to_value(v)))],
    })
}

fn isom_classify(lattice: &Path, matrix: &Path) -> Result<Certificate, CliError> {
    let l = read_lattice(lattice)?;
    let mv = read_json(matrix)?;
    let m = value_to_matrix(mv.get("matrix").unwrap_or(&mv))?;
    let g = match verify_isometry(&m, &l) {
        Ok(g) => g,
        Err(e @ (Error::GramViolation { .. } | Error::Determinant(_))) => {
            let witness = match &e {
                Error::GramViolation { i, j } => json!([i, j]),
                _ => json!(m.det().to_string()),
            };
            return Ok(Certificate {
                tool_version: TOOL_VERSION.into(),
                command: Value::Null,
                result: json!({ "isometry": false, "error": e.to_string() }),
                checks: vec![CheckEntry::new("isometry", false, Some(witness))],
            });
        }
        Err(e) => return Err(e.into()),
    };
    let class = classify_isometry(&g);
    let eps = crate::arith::rat(1, 1 << 30);
    let h = entropy(&g, &eps)?;
    let mut checks = vec![CheckEntry::new("isometry", true, None)];
    if let IsometryKind::SalemType { determinant, .. } = &class.kind {
        checks.push(CheckEntry::new(
            "salem_type_determinant_plus_one",
            *determinant == BigInt::from(1),
            Some(bigint_to_value(determinant)),
        ));
    }
    let result = json!({
        "isometry": true,
        "determinant": bigint_to_value(&g.det()),
        "char_poly": crate::isomgroup::char_poly(&g),
        "order": match order(&g) { Order::Finite(k) => json!(k), Order::Infinite => json!("infinite") },
        "primary": is_primary_charpoly(&g),
        "simple_spectrum": has_simple_spectrum(&g),
        "classification": class.to_json(),
        "entropy": interval_json(&h.lo, &h.hi),
    });
    Ok(Certificate {
        tool_version: TOOL_VERSION.into(),
        command: Value::Null,
        result,
        checks,
    })
}

fn k3_run(config: &Path, skip_extension: bool) -> Result<Certificate, CliError> {
    let primes = PrimeSelection::from_json(&read_json(config)?)?;
    let report = if skip_extension {
        verify_construction(&primes)?
    } else {
        run_pipeline(&primes)?
    };
    let checks = report
        .checks
        .iter()
        .map(|c| CheckEntry::new(c.name, c.passed, c.witness.as_ref().map(|w| vector_to_value(w))))
        .collect();
    Ok(Certificate {
        tool_version: TOOL_VERSION.into(),
        command: Value::Null,
        result: report.to_json(),
        checks,
    })
}

fn rank(path: &Path) -> Result<Certificate, CliError> {
    let v = read_json(path)?;
    let vs = v
        .get("vectors")
        .unwrap_or(&v)
        .as_array()
        .ok_or_else(|| CliError::Usage("expected an array of vectors".into()))?
        .iter()
        .map(value_to_vector)
        .collect::<crate::Result<Vec<_>>>()?;
    let r = abelian_rank_of_image(&vs)?;
    Ok(Certificate {
        tool_version: TOOL_VERSION.into(),
        command: Value::Null,
        result: json!({ "count": vs.len(), "rank": r }),
        checks: Vec::new(),
    })
}

/// Runs a plan; the certificate's command field echoes the plan.
pub fn execute(plan: &CommandPlan) -> Result<Certificate, CliError> {
    let mut cert = match &plan.command {
        Command::SalemTest { poly, precision } => salem_test(poly, precision),
        Command::SalemEnum {
            degree,
            trace_min,
            trace_max,
        } => salem_enum(*degree, *trace_min, *trace_max),
        Command::LatticeInfo { lattice } => lattice_info(lattice),
        Command::LatticeVectors { lattice, norm } => lattice_vectors(lattice, norm),
        Command::IsomClassify { lattice, matrix } => isom_classify(lattice, matrix),
        Command::K3Run { config, skip_extension } => k3_run(config, *skip_extension),
        Command::Rank { vectors } => rank(vectors),
    }?;
    cert.command = plan.command.echo();
    Ok(cert)
}

/// Parse, execute, and write; returns the exit code. Diagnostics go to stderr.
pub fn run<I, S>(argv: I) -> Exit
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let plan = match parse_command(argv) {
        Ok(p) => p,
        Err(CliError::Info(msg)) => {
            print!("{msg}");
            return Exit::Success;
        }
        Err(e) => {
            eprint!("{e}");
            return e.exit();
        }
    };
    let cert = match execute(&plan) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("salemlat {}: {e}", plan.command.name());
            return e.exit();
        }
    };
    let text = cert.render();
    match &plan.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("salemlat: I/O error: {}: {e}", path.display());
                return Exit::Io;
            }
        }
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return Exit::Io;
            }
        }
    }
    cert.exit()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        let p = parse_command(["salem-test", "--poly", "1,-1,-1,-1,1"]).unwrap();
        assert_eq!(p.command.name(), "salem-test");
        let p = parse_command(["k3-run", "--config", "primes.json"]).unwrap();
        assert_eq!(
            p.command,
            Command::K3Run {
                config: "primes.json".into(),
                skip_extension: false
            }
        );
        assert!(matches!(parse_command(["bogus"]), Err(CliError::Usage(_))));
        assert!(matches!(parse_command(["salem-test"]), Err(CliError::Usage(_))));
        assert!(matches!(parse_command(["--help"]), Err(CliError::Info(_))));
    }

    #[test]
    fn salem_test_certificate() {
        let plan = parse_command(["salem-test", "--poly", "1,-1,-1,-1,1"]).unwrap();
        let cert = execute(&plan).unwrap();
        assert_eq!(cert.exit(), Exit::Success);
        let v = cert.to_json();
        assert_eq!(v["schema"], SCHEMA);
        assert!(v["result"]["certificate"]["salem_lo"].is_string());
        assert!(v["result"]["certificate"]["salem_hi"].is_string());
        let plan = parse_command(["salem-test", "--poly", "1,-3,1"]).unwrap();
        assert_eq!(execute(&plan).unwrap().exit(), Exit::Success);
        let plan = parse_command(["salem-test", "--poly", "1,1,1"]).unwrap();
        assert_eq!(execute(&plan).unwrap().exit(), Exit::ChecksFailed);
    }
}
