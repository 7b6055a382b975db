//! `gnd`: check, synthesize, elaborate and translate proof scripts.
//!
//! Exit codes: 0 success, 1 rejected proof, 2 usage or parse error,
//! 3 semantically negative answer (countermodel, invalid).

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gnd_core::completeness::{prove, Outcome};
use gnd_core::derived::elaborate_script;
use gnd_core::hilbert::{check_hilbert, g_to_hilbert, hilbert_to_g, looks_like_hilbert, parse_hilbert};
use gnd_core::intuitionistic::{int_provable, int_provable_sequent};
use gnd_core::semantics::{sequent_valid, tautology, Verdict};
use gnd_core::translate::{translate_proof, TranslationId};
use gnd_core::{check_script, parse_formula, parse_script, parse_sequent, CheckReport, Mode, ProofScript, SystemId};

#[derive(Parser)]
#[command(name = "gnd", version, about = "Sequent-style natural deduction toolkit")]
struct Cli {
    /// Emit line-oriented key=value records instead of prose
    #[arg(long, global = true)]
    porcelain: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a sequent or Hilbert script (`-` reads stdin)
    Check {
        file: PathBuf,
        /// Reject derived rules regardless of the script's mode
        #[arg(long)]
        strict: bool,
    },
    /// Synthesize a proof of a valid sequent, or print a countermodel
    Prove {
        sequent: String,
        #[arg(long, default_value = "G")]
        system: SystemId,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expand derived rules into primitive steps
    Elaborate {
        #[arg(default_value = "-")]
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Translate a proof between systems
    Translate {
        #[arg(long)]
        from: SystemId,
        #[arg(long)]
        to: SystemId,
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide classical (or, with --int, intuitionistic) validity
    Decide {
        text: String,
        #[arg(long)]
        int: bool,
    },
}

/// Failure carrying its exit code and a one-line diagnostic.
struct Fail(u8, String);

fn usage(msg: impl std::fmt::Display) -> Fail {
    Fail(2, msg.to_string())
}

type Run = Result<u8, Fail>;

fn read_input(path: &Path) -> Result<String, Fail> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
    }
}

fn emit(out: Option<&Path>, command: &str, body: &str) -> Result<(), Fail> {
    let text = format!("# generated-by gnd {command}\n{body}");
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn report(porcelain: bool, report: &CheckReport) -> u8 {
    if porcelain {
        for v in &report.violations {
            println!("violation={}:{}", v.line, v.kind);
        }
        println!("status={}", if report.accepted() { "accepted" } else { "rejected" });
    } else {
        print!("{}", report.render());
    }
    if report.accepted() {
        0
    } else {
        1
    }
}

/// Parses and checks a sequent script, failing with exit 1 if rejected.
fn load_accepted(text: &str) -> Result<ProofScript, Fail> {
    let script = parse_script(text).map_err(usage)?;
    let r = check_script(&script);
    if !r.accepted() {
        return Err(Fail(1, format!("input script rejected ({} violations)", r.violations.len())));
    }
    Ok(script)
}

fn check(porcelain: bool, file: &Path, strict: bool) -> Run {
    let text = read_input(file)?;
    if looks_like_hilbert(&text) {
        let script = parse_hilbert(&text).map_err(usage)?;
        return Ok(report(porcelain, &check_hilbert(&script)));
    }
    let mut script = parse_script(&text).map_err(usage)?;
    if strict {
        script.mode = Mode::Strict;
    }
    Ok(report(porcelain, &check_script(&script)))
}

fn countermodel(porcelain: bool, v: &gnd_core::semantics::Valuation) -> u8 {
    if porcelain {
        println!("result=countermodel");
        for (k, b) in v.iter() {
            println!("{k}={}", if b { "T" } else { "F" });
        }
    } else {
        println!("countermodel: {v}");
    }
    3
}

fn prove_cmd(porcelain: bool, text: &str, system: SystemId, out: Option<&Path>) -> Run {
    if system != SystemId::G {
        return Err(usage(format!("prove synthesizes G proofs only; use translate for {system}")));
    }
    let s = parse_sequent(text).map_err(usage)?;
    match prove(&s).map_err(usage)? {
        Outcome::Proof(script) => {
            if porcelain {
                println!("result=proof");
                println!("lines={}", script.lines.len());
                if let Some(path) = out {
                    emit(Some(path), "prove", &script.render())?;
                }
            } else {
                emit(out, "prove", &script.render())?;
            }
            Ok(0)
        }
        Outcome::Countermodel(v) => Ok(countermodel(porcelain, &v)),
    }
}

fn elaborate(file: &Path, out: Option<&Path>) -> Run {
    let script = load_accepted(&read_input(file)?)?;
    let strict = elaborate_script(&script).map_err(|e| Fail(1, e.to_string()))?;
    emit(out, "elaborate", &strict.render())?;
    Ok(0)
}

fn translate(from: SystemId, to: SystemId, file: &Path, out: Option<&Path>) -> Run {
    let text = read_input(file)?;
    let command = format!("translate --from {from} --to {to}");
    if from.is_hilbert() {
        if to != SystemId::G {
            return Err(usage(format!("no translation from {from} to {to}")));
        }
        let script = parse_hilbert(&text).map_err(usage)?;
        if script.system != from {
            return Err(usage(format!("expected a {from} script, found {}", script.system)));
        }
        let g = hilbert_to_g(&script).map_err(|e| Fail(1, e.to_string()))?;
        emit(out, &command, &g.render())?;
        return Ok(0);
    }
    let script = load_accepted(&text)?;
    if script.system != from {
        return Err(usage(format!("expected a {from} script, found {}", script.system)));
    }
    let body = if to == SystemId::HL3 && from == SystemId::G {
        g_to_hilbert(&script).map_err(|e| Fail(1, e.to_string()))?.render()
    } else {
        let t = TranslationId::between(from, to).ok_or_else(|| usage(format!("no translation from {from} to {to}")))?;
        translate_proof(t, &script).map_err(|e| Fail(1, e.to_string()))?.render()
    };
    emit(out, &command, &body)?;
    Ok(0)
}

fn decide(porcelain: bool, text: &str, int: bool) -> Run {
    let sequent = if text.contains("->") {
        parse_sequent(text).map_err(usage)?
    } else {
        gnd_core::Sequent::theorem(parse_formula(text).map_err(usage)?)
    };
    if int {
        let valid = if sequent.antecedent.is_empty() {
            int_provable(&sequent.succedent)
        } else {
            int_provable_sequent(&sequent)
        };
        let word = if valid { "int-valid" } else { "int-invalid" };
        if porcelain {
            println!("result={word}");
        } else {
            println!("{word}");
        }
        return Ok(if valid { 0 } else { 3 });
    }
    let verdict = if sequent.antecedent.is_empty() { tautology(&sequent.succedent) } else { sequent_valid(&sequent) };
    match verdict {
        Verdict::Valid => {
            println!("{}", if porcelain { "result=valid" } else { "valid" });
            Ok(0)
        }
        Verdict::Countermodel(v) => Ok(countermodel(porcelain, &v)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let p = cli.porcelain;
    let result = match &cli.command {
        Command::Check { file, strict } => check(p, file, *strict),
        Command::Prove { sequent, system, out } => prove_cmd(p, sequent, *system, out.as_deref()),
        Command::Elaborate { file, out } => elaborate(file, out.as_deref()),
        Command::Translate { from, to, file, out } => translate(*from, *to, file, out.as_deref()),
        Command::Decide { text, int } => decide(p, text, *int),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            if p {
                println!("error={msg}");
            } else {
                eprintln!("gnd: {msg}");
            }
            ExitCode::from(code)
        }
    }
}
