//! Command-line front end.
//!
//! Exit codes: 0 = SAT / VALID / true, 1 = UNSAT / NOT-VALID / false,
//! 2 = usage, parse or input error, 3 = atom enumeration cap exceeded.

use crate::cspec::{ConstantSpec, CsFlags};
use crate::error::Error;
use crate::jsem::{atom_jsat, jformula_witness};
use crate::solver::{check_model, solve, valid, SmallModel, Verdict};
use crate::syntax::{atoms_of, parse_jformula, parse_pformula, Basis, DEFAULT_ATOM_CAP};
use clap::{Args, Parser, Subcommand};
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "pjsat",
    version,
    about = "Decide probabilistic justification logic formulas"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide satisfiability of a probabilistic formula and print a small model.
    Sat(RunConfig),
    /// Decide validity of a probabilistic formula.
    Valid(RunConfig),
    /// Decide satisfiability of a justification formula.
    Jsat(RunConfig),
    /// List the atoms of a formula with their J-satisfiability.
    Atoms(RunConfig),
    /// Re-verify a model file against a probabilistic formula.
    Check(RunConfig),
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// File containing the formula.
    #[arg(required_unless_present = "expr", conflicts_with = "expr")]
    pub formula_path: Option<PathBuf>,

    /// Formula given inline instead of a file.
    #[arg(short = 'e', long)]
    pub expr: Option<String>,

    /// Constant specification file; defaults to one constant per axiom scheme.
    #[arg(long = "cs")]
    pub cs_path: Option<PathBuf>,

    /// Largest number of basic formulas whose atoms may be enumerated.
    #[arg(long, default_value_t = DEFAULT_ATOM_CAP)]
    pub cap: usize,

    /// Print the linear systems to stderr.
    #[arg(long)]
    pub dump_lp: bool,

    #[arg(long)]
    pub require_injective: bool,

    #[arg(long)]
    pub require_appropriate: bool,

    /// Also write the model to this file (`sat`).
    #[arg(long)]
    pub model_out: Option<PathBuf>,

    /// Model file to verify (`check`).
    #[arg(long)]
    pub model: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceCap { .. } => Failure::Resource(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl RunConfig {
    fn formula_text(&self) -> Result<String, Failure> {
        match (&self.expr, &self.formula_path) {
            (Some(e), _) => Ok(e.clone()),
            (None, Some(p)) => std::fs::read_to_string(p)
                .map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
            (None, None) => Err(Failure::Usage("no formula given".into())),
        }
    }

    fn constant_spec(&self, err: &mut dyn Write) -> Result<ConstantSpec, Failure> {
        let mut cs = match &self.cs_path {
            Some(p) => ConstantSpec::load(p)?,
            None => ConstantSpec::default_spec(),
        };
        cs.flags = CsFlags {
            require_injective: self.require_injective,
            require_appropriate: self.require_appropriate,
        };
        let diags = cs.validate();
        for d in &diags {
            writeln!(err, "cs: {d}")?;
        }
        if !diags.is_empty() {
            return Err(Failure::Usage("constant specification rejected".into()));
        }
        Ok(cs)
    }
}

pub fn run(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(command, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Resource(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_RESOURCE
        }
    }
}

fn dispatch(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Sat(cfg) => {
            let a = parse_pformula(&cfg.formula_text()?)?;
            let cs = cfg.constant_spec(err)?;
            let report = solve(&a, &cs, cfg.cap)?;
            if cfg.dump_lp {
                for (i, s) in report.systems.iter().enumerate() {
                    writeln!(err, "# disjunct {}", i + 1)?;
                    write!(err, "{s}")?;
                }
            }
            let text = match &report.verdict {
                Verdict::Unsat => "UNSAT\n".to_string(),
                Verdict::Sat(m) => {
                    if !check_model(m, &a)? {
                        return Err(Failure::Usage(
                            "internal error: model re-verification failed".into(),
                        ));
                    }
                    format!("SAT\n{m}check PASS\n")
                }
            };
            out.write_all(text.as_bytes())?;
            if let Some(path) = &cfg.model_out {
                std::fs::write(path, &text)?;
            }
            Ok(if report.verdict.is_sat() {
                EXIT_YES
            } else {
                EXIT_NO
            })
        }
        Command::Valid(cfg) => {
            let a = parse_pformula(&cfg.formula_text()?)?;
            let cs = cfg.constant_spec(err)?;
            let yes = valid(&a, &cs, cfg.cap)?;
            writeln!(out, "{}", if yes { "VALID" } else { "NOT-VALID" })?;
            Ok(if yes { EXIT_YES } else { EXIT_NO })
        }
        Command::Jsat(cfg) => {
            let alpha = parse_jformula(&cfg.formula_text()?)?;
            let cs = cfg.constant_spec(err)?;
            match jformula_witness(&alpha, &cs, cfg.cap)? {
                Some(atom) => {
                    writeln!(out, "SAT\nwitness {atom}")?;
                    Ok(EXIT_YES)
                }
                None => {
                    writeln!(out, "UNSAT")?;
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Atoms(cfg) => {
            let text = cfg.formula_text()?;
            let basis = match parse_pformula(&text) {
                Ok(a) => Basis::of_pformula(&a),
                Err(_) => Basis::of_jformula(&parse_jformula(&text)?),
            };
            let cs = cfg.constant_spec(err)?;
            for atom in atoms_of(&basis, cfg.cap)? {
                let status = if atom_jsat(&atom, &cs) {
                    "jsat"
                } else {
                    "junsat"
                };
                writeln!(out, "atom {} {status} {atom}", atom.index() + 1)?;
            }
            Ok(EXIT_YES)
        }
        Command::Check(cfg) => {
            let a = parse_pformula(&cfg.formula_text()?)?;
            let path = cfg
                .model
                .as_ref()
                .ok_or_else(|| Failure::Usage("check needs --model".into()))?;
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let Some(model) = SmallModel::parse(&text)? else {
                writeln!(out, "check FAIL (model file is UNSAT)")?;
                return Ok(EXIT_NO);
            };
            let ok = check_model(&model, &a)?;
            writeln!(out, "check {}", if ok { "PASS" } else { "FAIL" })?;
            Ok(if ok { EXIT_YES } else { EXIT_NO })
        }
    }
}

/// Parses process arguments and runs; returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
        }
    };
    run(
        &cli.command,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
