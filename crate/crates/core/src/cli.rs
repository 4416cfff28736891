//! The `buchi` command line.
//!
//! Exit codes: 0 on success, including a `false` verdict; 1 when `check`
//! finds a counterexample; 2 on usage, parse or input errors; 3 when an
//! internal invariant breaks.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::automaton::{Dfa, Equivalence};
use crate::error::{Error, Result};
use crate::interp::{
    base_square_transform, build_interpretation, digit_embed_transform, format_plan, interleave_transform,
    refute_pairing, Interpretation, PlanStep,
};
use crate::logic::{compile, decide, parse};
use crate::numeral::{Base, Codec};
use crate::oracle::{check_interpretation, check_internal_model};

#[derive(Parser, Debug)]
#[command(name = "buchi", version, about = "Decision procedure and interpretations for Büchi arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide a sentence in (ℕ, =, +, V_n).
    Decide {
        #[arg(long)]
        base: u32,
        formula: String,
    },
    /// Compile a formula to its minimal automaton.
    Compile {
        #[arg(long)]
        base: u32,
        formula: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Apply one interpretation transform to an automaton.
    Transform {
        #[arg(long = "in", global = true)]
        input: Option<PathBuf>,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json", global = true)]
        format: Format,
        /// Close the result under trailing zero padding and minimize it.
        #[arg(long, global = true)]
        close: bool,
        #[command(subcommand)]
        kind: TransformKind,
    },
    /// Interpret BA_source in BA_target and write the bundle.
    Interpret {
        #[arg(long)]
        source: u32,
        #[arg(long)]
        target: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a bundle against brute-force arithmetic.
    Check {
        #[arg(long)]
        bundle: PathBuf,
        /// Values below this bound are checked on both sides of the codec.
        #[arg(long, default_value_t = 100)]
        bound: u64,
        /// Domain elements below this bound are checked for the internal
        /// model axioms; 0 skips them.
        #[arg(long, default_value_t = 10_000)]
        model_bound: u64,
    },
    /// Find a pair misclassified by a claimed automaton for {(2^k, 2^2k)}.
    Refute {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Compare the languages of two automata.
    Equiv { left: PathBuf, right: PathBuf },
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum TransformKind {
    /// Digit interleaving of m-tuple arguments.
    Interleave {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
    },
    /// Base k² to base k.
    Square,
    /// Base k to base k+1.
    Embed,
}

/// Contents of `bundle.json`; the automata live next to it.
#[derive(Serialize, Deserialize)]
struct Manifest {
    source_base: Base,
    target_base: Base,
    dimension: usize,
    codec: Codec,
    plan: Vec<PlanStep>,
    domain: String,
    equality: String,
    addition: String,
    valuation: String,
}

const NAMES: [&str; 4] = ["domain", "equality", "addition", "valuation"];

enum Failure {
    Input(Error),
    CheckFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Dfa> {
    Dfa::from_json(&read(path)?)
}

fn render(dfa: &Dfa, format: Format) -> String {
    match format {
        Format::Json => dfa.to_json() + "\n",
        Format::Dot => dfa.to_dot(),
    }
}

/// Writes `dfa` to `path` and `summary` to `out`, or without a path the
/// automaton to `out` and the summary to `err`.
fn emit(dfa: &Dfa, format: Format, path: Option<&Path>, summary: &str, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => {
            write(p, &render(dfa, format))?;
            out.write_all(summary.as_bytes())?;
        }
        None => {
            out.write_all(render(dfa, format).as_bytes())?;
            err.write_all(summary.as_bytes())?;
        }
    }
    Ok(())
}

/// Writes an interpretation as `bundle.json` plus one file per automaton.
pub fn write_bundle(interp: &Interpretation, dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::Malformed(format!("{}: {e}", dir.display())))?;
    for (name, dfa) in interp.automata() {
        write(&dir.join(format!("{name}.json")), &(dfa.to_json() + "\n"))?;
    }
    let file = |n: &str| format!("{n}.json");
    let manifest = Manifest {
        source_base: interp.source_base,
        target_base: interp.target_base,
        dimension: interp.dimension,
        codec: interp.codec.clone(),
        plan: interp.plan.clone(),
        domain: file(NAMES[0]),
        equality: file(NAMES[1]),
        addition: file(NAMES[2]),
        valuation: file(NAMES[3]),
    };
    write(&dir.join("bundle.json"), &(serde_json::to_string_pretty(&manifest)? + "\n"))
}

/// Reads a bundle written by [`write_bundle`] and validates it.
pub fn read_bundle(dir: &Path) -> Result<Interpretation> {
    let manifest: Manifest = serde_json::from_str(&read(&dir.join("bundle.json"))?)?;
    let interp = Interpretation {
        source_base: manifest.source_base,
        target_base: manifest.target_base,
        dimension: manifest.dimension,
        domain: load(&dir.join(&manifest.domain))?,
        equality: load(&dir.join(&manifest.equality))?,
        addition: load(&dir.join(&manifest.addition))?,
        valuation: load(&dir.join(&manifest.valuation))?,
        codec: manifest.codec,
        plan: manifest.plan,
    };
    interp.validate()?;
    Ok(interp)
}

fn tracks_line(vars: &[String]) -> String {
    format!("tracks: [{}]", vars.join(", "))
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> std::result::Result<(), Failure> {
    match cli.command {
        Command::Decide { base, formula } => {
            let verdict = decide(&parse(&formula)?, Base::new(base)?)?;
            writeln!(out, "{verdict}").map_err(Error::from)?;
        }
        Command::Compile { base, formula, out: path, format } => {
            let f = parse(&formula)?;
            let dfa = compile(&f, Base::new(base)?)?;
            let summary = format!("states: {}\n{}\n", dfa.num_states(), tracks_line(&f.free_vars()));
            emit(&dfa, format, path.as_deref(), &summary, out, err)?;
        }
        Command::Transform { input, out: path, format, close, kind } => {
            let input = input.ok_or_else(|| Error::Malformed("transform needs --in".into()))?;
            let before = load(&input)?;
            let mut after = match kind {
                TransformKind::Interleave { m, r } => interleave_transform(&before, m, r)?,
                TransformKind::Square => base_square_transform(&before)?,
                TransformKind::Embed => digit_embed_transform(&before)?,
            };
            if close {
                after = after.close_padding().minimize();
            }
            let summary = format!(
                "states: {} -> {}\nbase: {} -> {}\n",
                before.num_states(),
                after.num_states(),
                before.base(),
                after.base()
            );
            emit(&after, format, path.as_deref(), &summary, out, err)?;
        }
        Command::Interpret { source, target, out: dir } => {
            let interp = build_interpretation(Base::new(source)?, Base::new(target)?)?;
            write_bundle(&interp, &dir)?;
            writeln!(out, "plan: {}", format_plan(&interp.plan)).map_err(Error::from)?;
            for (name, dfa) in interp.automata() {
                writeln!(out, "{name}: {} states", dfa.num_states()).map_err(Error::from)?;
            }
        }
        Command::Check { bundle, bound, model_bound } => {
            let interp = read_bundle(&bundle)?;
            let mut report = check_interpretation(&interp, bound)?;
            if model_bound > 0 {
                report = report.and(|| check_internal_model(&interp, model_bound, 8))?;
            }
            writeln!(out, "{report}").map_err(Error::from)?;
            if !report.is_pass() {
                return Err(Failure::CheckFailed);
            }
        }
        Command::Refute { input } => {
            let witness = refute_pairing(&load(&input)?)?;
            writeln!(out, "{witness}").map_err(Error::from)?;
        }
        Command::Equiv { left, right } => {
            let verdict = match load(&left)?.equivalent(&load(&right)?)? {
                Equivalence::Equal => "equivalent".to_string(),
                Equivalence::Differ(w) => format!("differ on {w}"),
            };
            writeln!(out, "{verdict}").map_err(Error::from)?;
        }
    }
    Ok(())
}

/// Runs one command line (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                2
            } else {
                let _ = out.write_all(text.as_bytes());
                0
            };
        }
    };
    match catch_unwind(AssertUnwindSafe(|| execute(cli, out, err))) {
        Ok(Ok(())) => 0,
        Ok(Err(Failure::CheckFailed)) => 1,
        Ok(Err(Failure::Input(e))) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
        Err(_) => {
            let _ = writeln!(err, "error: internal invariant violated");
            3
        }
    }
}
