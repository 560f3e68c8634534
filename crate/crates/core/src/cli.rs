//! The `rigproof` command line.
//!
//! Exit codes: 0 success or found, 1 fails, invalid or not found, 2 input
//! error, 3 hypothesis violation.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::chain::{Certificate, ChainError, Verification};
use crate::hypotheses::{check_complex_route, full_report, HypothesisReport, RingVerdict};
use crate::models::{find_counterexample, Model, DEFAULT_BOUND};
use crate::poly::NatPoly;
use crate::synth::{bfs_search, synthesize, SynthError};
use crate::trees::{apply_bijection, parse_value, random_value, Bijection, Run};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;

pub const DEFAULT_SEED: u64 = 0x5EED;

#[derive(Parser, Debug)]
#[command(
    name = "rigproof",
    version,
    about = "Certificates for polynomial identities in rigs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Triple {
    /// Generator p in x = p(x)
    #[arg(short = 'p', long = "p")]
    p: String,
    #[arg(long = "q1")]
    q1: String,
    #[arg(long = "q2")]
    q2: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report hypotheses and whether the ring implication holds
    Check {
        /// Generator p; shorthand for --p1 x --p2 p
        #[arg(short = 'p', long = "p", required_unless_present_all = ["p1", "p2"])]
        p: Option<String>,
        #[arg(long = "p1", requires = "p2", conflicts_with = "p")]
        p1: Option<String>,
        #[arg(long = "p2", requires = "p1")]
        p2: Option<String>,
        #[arg(long = "q1")]
        q1: String,
        #[arg(long = "q2")]
        q2: String,
        #[arg(long)]
        json: bool,
    },
    /// Synthesize a certificate for q1 ~ q2
    Prove {
        #[command(flatten)]
        t: Triple,
        #[arg(
            short = 'o',
            long = "out",
            default_value = "certificate.json",
            conflicts_with = "stdout"
        )]
        out: PathBuf,
        #[arg(long)]
        stdout: bool,
    },
    /// Replay a certificate file
    Verify { file: PathBuf },
    /// Apply a certificate's bijection to a tree value
    Run {
        cert: PathBuf,
        /// Value over the start (or end, with --backward), e.g. 0(0,1(0,0))
        value: Option<String>,
        #[arg(long)]
        backward: bool,
        /// Check N random values in both directions instead
        #[arg(long, value_name = "N", conflicts_with = "value")]
        roundtrip: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long = "max-nodes", default_value_t = 50)]
        max_nodes: usize,
    },
    /// Bounded search for a shortest chain
    Search {
        #[command(flatten)]
        t: Triple,
        #[arg(long = "max-steps", default_value_t = 18)]
        max_steps: usize,
        #[arg(long = "max-degree", default_value_t = 8)]
        max_degree: u32,
        #[arg(long = "max-mass", default_value_t = 64)]
        max_mass: u64,
        #[arg(long)]
        json: bool,
    },
    /// Look for a model element where p1 = p2 holds but q1 = q2 fails
    Counterexample {
        #[arg(long = "p1")]
        p1: String,
        #[arg(long = "p2")]
        p2: String,
        #[arg(long = "q1")]
        q1: String,
        #[arg(long = "q2")]
        q2: String,
        #[arg(long)]
        model: Model,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u64,
    },
}

/// Rewrites the single-dash multi-letter flags (`-q1`, `-p2`, …) into the
/// long form clap understands.
fn normalize<I, T>(args: I) -> Vec<OsString>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    args.into_iter()
        .map(|a| {
            let a: OsString = a.into();
            match a.to_str() {
                Some(s @ ("-q1" | "-q2" | "-p1" | "-p2")) => OsString::from(format!("-{s}")),
                _ => a,
            }
        })
        .collect()
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

macro_rules! say {
    ($w:expr, $($arg:tt)*) => {{
        let _ = writeln!($w, $($arg)*);
    }};
}

fn parse_nat(io: &mut Io, name: &str, text: &str) -> Result<NatPoly, i32> {
    text.parse::<NatPoly>().map_err(|e| {
        say!(io.err, "error: {name}: {e}");
        EXIT_INPUT
    })
}

/// Runs the command line with `args` (program name first).
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let cli = match Cli::try_parse_from(normalize(args)) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let mut io = Io { out, err };
    let result = match cli.command {
        Command::Check {
            p,
            p1,
            p2,
            q1,
            q2,
            json,
        } => cmd_check(&mut io, p, p1, p2, &q1, &q2, json),
        Command::Prove { t, out, stdout } => cmd_prove(&mut io, &t, (!stdout).then_some(out)),
        Command::Verify { file } => cmd_verify(&mut io, &file),
        Command::Run {
            cert,
            value,
            backward,
            roundtrip,
            seed,
            max_nodes,
        } => cmd_run(
            &mut io,
            &cert,
            value.as_deref(),
            backward,
            roundtrip,
            seed,
            max_nodes,
        ),
        Command::Search {
            t,
            max_steps,
            max_degree,
            max_mass,
            json,
        } => cmd_search(&mut io, &t, max_steps, max_degree, max_mass, json),
        Command::Counterexample {
            p1,
            p2,
            q1,
            q2,
            model,
            bound,
        } => cmd_counterexample(&mut io, [&p1, &p2, &q1, &q2], model, bound),
    };
    result.unwrap_or_else(|code| code)
}

/// [`run_with`] on the process's own arguments and streams.
pub fn main_with_env() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[derive(Serialize)]
struct CheckJson<'a> {
    ok: bool,
    hypotheses: &'a HypothesisReport,
    failures: Vec<&'static str>,
    ring: &'a RingVerdict,
}

fn flag(f: Option<bool>) -> &'static str {
    match f {
        Some(true) => "yes",
        Some(false) => "NO",
        None => "-",
    }
}

fn cmd_check(
    io: &mut Io,
    p: Option<String>,
    p1: Option<String>,
    p2: Option<String>,
    q1: &str,
    q2: &str,
    json: bool,
) -> Result<i32, i32> {
    let q1 = parse_nat(io, "q1", q1)?;
    let q2 = parse_nat(io, "q2", q2)?;
    let (p1, p2) = match (p, p1, p2) {
        (Some(p), _, _) => (NatPoly::x(), parse_nat(io, "p", &p)?),
        (None, Some(a), Some(b)) => (parse_nat(io, "p1", &a)?, parse_nat(io, "p2", &b)?),
        _ => unreachable!("clap enforces -p or both --p1 and --p2"),
    };
    let (report, verdict, main_theorem) = if p1 == NatPoly::x() {
        let (r, v) = full_report(&p2, &q1, &q2);
        (r, v, true)
    } else {
        let ints = [&p1, &p2, &q1, &q2].map(NatPoly::to_int);
        match check_complex_route(&ints[0], &ints[1], &ints[2], &ints[3]) {
            Ok((r, v)) => (r, v, false),
            Err(e) => {
                say!(io.err, "error: {e}");
                return Err(EXIT_INPUT);
            }
        }
    };
    let code = if main_theorem && !report.main_theorem_ok() {
        EXIT_HYPOTHESIS
    } else if !verdict.holds {
        EXIT_FAIL
    } else {
        EXIT_OK
    };
    if json {
        let doc = CheckJson {
            ok: code == EXIT_OK,
            hypotheses: &report,
            failures: report.failures(),
            ring: &verdict,
        };
        say!(
            io.out,
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializable")
        );
        return Ok(code);
    }
    say!(io.out, "relation  {p1} = {p2}");
    say!(io.out, "goal      {q1} = {q2}");
    for (name, f) in [
        ("p(0) != 0", report.constant_term_ok),
        ("deg p >= 2", report.degree_ok),
        ("q1 non-constant", report.q1_nonconstant),
        ("q2 non-constant", report.q2_nonconstant),
        ("divisor primitive", report.primitive),
        ("divisor squarefree", report.squarefree),
        ("roots condition", report.roots_condition),
    ] {
        say!(io.out, "  {name:<20} {}", flag(f));
    }
    match (&verdict.cofactor, &verdict.remainder) {
        (Some(r), _) => say!(
            io.out,
            "ring implication holds: q1 - q2 = ({r}) * ({})",
            &p2.to_int() - &p1.to_int()
        ),
        (None, Some(rem)) => say!(io.out, "ring implication fails: remainder {rem}"),
        (None, None) => say!(io.out, "ring implication fails"),
    }
    Ok(code)
}

fn parse_triple(io: &mut Io, t: &Triple) -> Result<(NatPoly, NatPoly, NatPoly), i32> {
    Ok((
        parse_nat(io, "p", &t.p)?,
        parse_nat(io, "q1", &t.q1)?,
        parse_nat(io, "q2", &t.q2)?,
    ))
}

fn cmd_prove(io: &mut Io, t: &Triple, out: Option<PathBuf>) -> Result<i32, i32> {
    let (p, q1, q2) = parse_triple(io, t)?;
    let cert = match synthesize(&p, &q1, &q2) {
        Ok(c) => c,
        Err(e @ SynthError::Hypotheses(_)) => {
            say!(io.err, "refused: {e}");
            return Err(EXIT_HYPOTHESIS);
        }
        Err(e @ SynthError::RingImplication(_)) => {
            say!(io.err, "refused: {e}");
            return Err(EXIT_FAIL);
        }
        Err(e) => {
            say!(io.err, "error: {e}");
            return Err(EXIT_FAIL);
        }
    };
    let text = cert.to_json();
    match out {
        None => {
            let _ = io.out.write_all(text.as_bytes());
        }
        Some(path) => {
            if let Err(e) = fs::write(&path, &text) {
                say!(io.err, "error: cannot write {}: {e}", path.display());
                return Err(EXIT_INPUT);
            }
            say!(io.out, "{} steps written to {}", cert.len(), path.display());
        }
    }
    Ok(EXIT_OK)
}

fn load_certificate(io: &mut Io, path: &PathBuf) -> Result<Certificate, i32> {
    let text = fs::read_to_string(path).map_err(|e| {
        say!(io.err, "error: cannot read {}: {e}", path.display());
        EXIT_INPUT
    })?;
    Certificate::from_json(&text).map_err(|e: ChainError| {
        say!(io.err, "error: {}: {e}", path.display());
        EXIT_INPUT
    })
}

fn cmd_verify(io: &mut Io, path: &PathBuf) -> Result<i32, i32> {
    let cert = load_certificate(io, path)?;
    match cert.verify() {
        Verification::Valid => {
            say!(
                io.out,
                "valid: {} ~ {} in {} steps",
                cert.start,
                cert.end,
                cert.len()
            );
            Ok(EXIT_OK)
        }
        Verification::Invalid { index, reason } => {
            say!(io.out, "invalid at step {index}: {reason}");
            Ok(EXIT_FAIL)
        }
    }
}

fn cmd_run(
    io: &mut Io,
    path: &PathBuf,
    value: Option<&str>,
    backward: bool,
    roundtrip: Option<usize>,
    seed: u64,
    max_nodes: usize,
) -> Result<i32, i32> {
    let cert = load_certificate(io, path)?;
    if let Verification::Invalid { index, reason } = cert.verify() {
        say!(
            io.err,
            "error: certificate invalid at step {index}: {reason}"
        );
        return Err(EXIT_FAIL);
    }
    if let Some(n) = roundtrip {
        let bij = Bijection::new(&cert).expect("verified above");
        let mut failures = 0;
        for i in 0..n as u64 {
            let s = seed.wrapping_add(i);
            for (over, there, back) in [
                (&cert.start, Run::Forward, Run::Backward),
                (&cert.end, Run::Backward, Run::Forward),
            ] {
                let ok = random_value(over, &cert.p, max_nodes, s)
                    .and_then(|v| Ok(bij.run(bij.run(v.clone(), there)?, back)? == v))
                    .unwrap_or(false);
                if !ok {
                    failures += 1;
                }
            }
        }
        say!(
            io.out,
            "roundtrip: {} values each way, {failures} failures",
            n
        );
        return Ok(if failures == 0 { EXIT_OK } else { EXIT_FAIL });
    }
    let Some(text) = value else {
        say!(io.err, "error: give a value or --roundtrip N");
        return Err(EXIT_INPUT);
    };
    let (over, run) = if backward {
        (&cert.end, Run::Backward)
    } else {
        (&cert.start, Run::Forward)
    };
    let v = parse_value(text, over, &cert.p).map_err(|e| {
        say!(io.err, "error: value over {over}: {e}");
        EXIT_INPUT
    })?;
    match apply_bijection(&cert, &v, run) {
        Ok(w) => {
            say!(io.out, "{w}");
            Ok(EXIT_OK)
        }
        Err(e) => {
            say!(io.err, "error: {e}");
            Err(EXIT_INPUT)
        }
    }
}

fn cmd_search(
    io: &mut Io,
    t: &Triple,
    max_steps: usize,
    max_degree: u32,
    max_mass: u64,
    json: bool,
) -> Result<i32, i32> {
    let (p, q1, q2) = parse_triple(io, t)?;
    let Some(cert) = bfs_search(&p, &q1, &q2, max_steps, max_degree, max_mass) else {
        say!(io.out, "not found");
        return Ok(EXIT_FAIL);
    };
    if json {
        let _ = io.out.write_all(cert.to_json().as_bytes());
        return Ok(EXIT_OK);
    }
    say!(io.out, "found {} steps", cert.len());
    let terms = cert.replay().expect("search output replays");
    for t in terms {
        say!(io.out, "  {t}");
    }
    Ok(EXIT_OK)
}

fn cmd_counterexample(
    io: &mut Io,
    texts: [&String; 4],
    model: Model,
    bound: u64,
) -> Result<i32, i32> {
    let names = ["p1", "p2", "q1", "q2"];
    let mut polys = Vec::with_capacity(4);
    for (name, text) in names.iter().zip(texts) {
        polys.push(parse_nat(io, name, text)?);
    }
    match find_counterexample(&polys[0], &polys[1], &polys[2], &polys[3], model, bound) {
        Some(a) => {
            say!(io.out, "{a}");
            Ok(EXIT_OK)
        }
        None => {
            say!(io.out, "none within bound");
            Ok(EXIT_FAIL)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(
            std::iter::once("rigproof").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn flag_normalization() {
        let v = normalize(["rigproof", "-q1", "x", "-p", "1+x^2", "-q2x"]);
        assert_eq!(
            v,
            ["rigproof", "--q1", "x", "-p", "1+x^2", "-q2x"].map(OsString::from)
        );
    }

    #[test]
    fn check_exit_codes() {
        assert_eq!(
            run(&["check", "-p", "1+x^2", "-q1", "x^7", "-q2", "x"]).0,
            EXIT_OK
        );
        assert_eq!(
            run(&["check", "-p", "1+x^2", "-q1", "x^6", "-q2", "1"]).0,
            EXIT_HYPOTHESIS
        );
        assert_eq!(
            run(&["check", "-p", "1+x^2", "-q1", "x^2", "-q2", "x"]).0,
            EXIT_FAIL
        );
        assert_eq!(
            run(&["check", "-p", "1+", "-q1", "x", "-q2", "x"]).0,
            EXIT_INPUT
        );
        assert_eq!(run(&["check", "-q1", "x", "-q2", "x"]).0, EXIT_INPUT);
        let (code, out, _) = run(&[
            "check", "-p1", "x", "-p2", "1 + x^2", "-q1", "x^7", "-q2", "x", "--json",
        ]);
        assert_eq!(code, EXIT_OK);
        let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(doc["ok"], true);
        assert_eq!(doc["hypotheses"]["squarefree"], true);
    }

    #[test]
    fn counterexample_and_search() {
        let (code, out, _) = run(&[
            "counterexample",
            "-p1",
            "x",
            "-p2",
            "x+x^2",
            "-q1",
            "x^2",
            "-q2",
            "x^3",
            "--model",
            "codegrees",
        ]);
        assert_eq!((code, out.trim()), (EXIT_OK, "ε¹"));
        let (code, out, _) = run(&[
            "counterexample",
            "-p1",
            "x",
            "-p2",
            "1+x^2",
            "-q1",
            "x^7",
            "-q2",
            "x",
            "--model",
            "degrees",
        ]);
        assert_eq!((code, out.trim()), (EXIT_FAIL, "none within bound"));
        assert_eq!(
            run(&[
                "counterexample",
                "-p1",
                "x",
                "-p2",
                "x",
                "-q1",
                "x",
                "-q2",
                "x",
                "--model",
                "reals"
            ])
            .0,
            EXIT_INPUT
        );
        let (code, out, _) = run(&[
            "search",
            "-p",
            "1+x^2",
            "-q1",
            "x^7",
            "-q2",
            "x",
            "--max-steps",
            "18",
        ]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("found 18 steps"));
        assert_eq!(
            run(&["search", "-p", "1+x^2", "-q1", "x^6", "-q2", "1"]).0,
            EXIT_FAIL
        );
    }

    #[test]
    fn prove_refusals() {
        assert_eq!(
            run(&["prove", "-p", "x+x^2", "-q1", "x^2", "-q2", "x^3", "--stdout"]).0,
            EXIT_HYPOTHESIS
        );
        assert_eq!(
            run(&["prove", "-p", "1+x^2", "-q1", "x^2", "-q2", "x", "--stdout"]).0,
            EXIT_FAIL
        );
        let (code, out, _) = run(&[
            "prove", "-p", "1+x^2", "-q1", "x^3", "-q2", "x^3", "--stdout",
        ]);
        assert_eq!(code, EXIT_OK);
        assert!(Certificate::from_json(&out).unwrap().is_empty());
    }
}
