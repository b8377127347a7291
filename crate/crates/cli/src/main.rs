use std::fmt::Write as _;
use std::process::ExitCode;

use bicoh_core::decide::{decide, oracle_equal, OracleConfig, OracleResult, Verdict};
use bicoh_core::maximality::{collapse_witness_dicart, collapse_witness_l, CollapseWitness};
use bicoh_core::models::{counterexample_pair, interp_term, model_equal, uniform_assignment, Assignment, ModelVariant};
use bicoh_core::normalize::{normalize, standard_form, RewriteTrace};
use bicoh_core::relfun::g_of;
use bicoh_core::{parse_term, typecheck, Formula, Letter, System, Term};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "bicoh", version, about = "Type, relate, normalize and compare proof terms")]
struct Cli {
    /// Free category the terms live in.
    #[arg(long, global = true, default_value = "L", value_parser = parse_system)]
    system: System,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Star,
    StarEmpty,
}

impl From<Variant> for ModelVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Star => ModelVariant::Star,
            Variant::StarEmpty => ModelVariant::StarEmpty,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Typecheck a term and print its type.
    Check { term: String },
    /// Print the occurrence relation of a term.
    Rel { term: String },
    /// Eliminate compositions.
    Normalize {
        term: String,
        /// Also print every rewrite step.
        #[arg(long)]
        trace: bool,
    },
    /// Split an arrow term into a hat part followed by a check part.
    StandardForm {
        term: String,
        #[arg(long)]
        trace: bool,
    },
    /// Decide whether two terms denote the same arrow.
    Decide {
        #[command(flatten)]
        pair: TermPair,
        /// Also run the bounded equational search up to this many steps.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Print a pair with equal relations whose equality is not settled.
    Counterexample {
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long, default_value = "p")]
        letter: String,
        /// Also run the bounded equational search up to this many steps.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Build contexts turning two distinct arrows into a collapsing equation.
    Witness {
        #[command(flatten)]
        pair: TermPair,
        /// Reduce the source instead of the target (dicartesian only).
        #[arg(long)]
        refine: bool,
    },
    /// Interpret one term in pointed sets, or compare two.
    Model {
        term: String,
        other: Option<String>,
        #[arg(long, value_enum, default_value_t = Variant::Star)]
        variant: Variant,
        /// Number of elements, basepoint included, assigned to each letter.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=3))]
        size: u8,
    },
}

#[derive(Args)]
struct TermPair {
    first: String,
    second: String,
}

fn parse_system(s: &str) -> Result<System, String> {
    s.parse()
}

/// A failure reported with exit code 2.
struct Failure {
    kind: &'static str,
    message: String,
    position: Option<usize>,
}

impl Failure {
    fn new(kind: &'static str, message: impl ToString) -> Self {
        Failure {
            kind,
            message: message.to_string(),
            position: None,
        }
    }
}

macro_rules! failure_from {
    ($($ty:ty => $kind:literal),* $(,)?) => {
        $(impl From<$ty> for Failure {
            fn from(e: $ty) -> Self {
                Failure::new($kind, e)
            }
        })*
    };
}

failure_from! {
    bicoh_core::TypeError => "type_error",
    bicoh_core::relfun::RelError => "relation_error",
    bicoh_core::decide::DecideError => "decide_error",
    bicoh_core::normalize::NormalizeError => "normalize_error",
    bicoh_core::maximality::MaximalityError => "witness_error",
    bicoh_core::models::ModelError => "model_error",
    std::io::Error => "io_error",
}

impl From<bicoh_core::ParseError> for Failure {
    fn from(e: bicoh_core::ParseError) -> Self {
        Failure {
            kind: "parse_error",
            position: Some(e.pos),
            message: e.to_string(),
        }
    }
}

/// What a command prints and the exit code it ends with.
struct Report {
    text: String,
    json: Value,
    dot: Option<String>,
    code: u8,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, dot: None, code: 0 }
    }
}

/// Reads `@path` arguments from disk; anything else is the input itself.
fn read_input(arg: &str) -> Result<String, Failure> {
    match arg.strip_prefix('@') {
        Some(path) => Ok(std::fs::read_to_string(path)?.trim().to_string()),
        None => Ok(arg.to_string()),
    }
}

fn term_arg(arg: &str) -> Result<Term, Failure> {
    Ok(parse_term(&read_input(arg)?)?)
}

fn verdict_code(v: &Verdict) -> u8 {
    match v {
        Verdict::Equal { .. } => 0,
        Verdict::NotEqual { .. } => 1,
        Verdict::Unknown { .. } => 3,
    }
}

fn oracle_json(r: &OracleResult) -> Value {
    match r {
        OracleResult::ConnectedWithin(d) => json!({"result": "connected_within", "depth": d}),
        OracleResult::NotConnectedWithin(d) => json!({"result": "not_connected_within", "depth": d}),
        OracleResult::CapExceeded { visited } => json!({"result": "cap_exceeded", "visited": visited}),
    }
}

fn oracle_text(r: &OracleResult) -> String {
    match r {
        OracleResult::ConnectedWithin(d) => format!("oracle: connected within {d} steps"),
        OracleResult::NotConnectedWithin(d) => format!("oracle: not connected within {d} steps"),
        OracleResult::CapExceeded { visited } => format!("oracle: search budget exhausted after {visited} terms"),
    }
}

fn trace_json(trace: &RewriteTrace) -> Value {
    trace
        .steps
        .iter()
        .map(|s| {
            json!({
                "rule": s.rule,
                "path": s.path.to_string(),
                "before": s.before.to_string(),
                "after": s.after.to_string(),
            })
        })
        .collect()
}

fn trace_text(out: &mut String, trace: &RewriteTrace, full: bool) {
    let _ = writeln!(out, "steps: {}", trace.len());
    if full {
        for s in &trace.steps {
            let _ = writeln!(out, "  {s}");
        }
    }
}

fn witness_text(w: &CollapseWitness) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "equation: {} ({})", w.equation, w.equation.name());
    let _ = writeln!(out, "separating pair: ({},{})", w.separating_pair.0, w.separating_pair.1);
    let _ = writeln!(out, "pre: {}", w.pre_context);
    let _ = writeln!(out, "post: {}", w.post_context);
    let _ = writeln!(out, "first: {}", w.composites.0);
    let _ = writeln!(out, "second: {}", w.composites.1);
    let _ = writeln!(out, "images: {} vs {}", w.check_images.0, w.check_images.1);
    for c in bicoh_core::maximality::derived_consequences(w) {
        let _ = writeln!(out, "consequence {}: {}", c.name, c.statement);
    }
    out
}

fn assignment_for(terms: &[&Term], size: u8) -> Assignment {
    let mut letters = Vec::new();
    for t in terms {
        letters.extend(t.letters());
    }
    letters.sort();
    letters.dedup();
    uniform_assignment(&letters, size as usize)
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let system = cli.system;
    match &cli.command {
        Command::Check { term } => {
            let t = term_arg(term)?;
            let ty = typecheck(&t, system)?;
            Ok(Report::ok(
                ty.to_string(),
                json!({
                    "term": t.to_string(),
                    "system": system.name(),
                    "source": ty.source.to_string(),
                    "target": ty.target.to_string(),
                }),
            ))
        }
        Command::Rel { term } => {
            let t = term_arg(term)?;
            let rel = g_of(&t, system)?;
            Ok(Report {
                text: rel.to_string(),
                json: rel.to_json(),
                dot: Some(rel.to_dot()),
                code: 0,
            })
        }
        Command::Normalize { term, trace } => {
            let t = term_arg(term)?;
            let (nf, steps) = normalize(&t, system)?;
            let mut text = nf.to_string();
            text.push('\n');
            trace_text(&mut text, &steps, *trace);
            Ok(Report::ok(
                text,
                json!({
                    "input": t.to_string(),
                    "system": system.name(),
                    "output": nf.to_string(),
                    "steps": trace_json(&steps),
                }),
            ))
        }
        Command::StandardForm { term, trace } => {
            let t = term_arg(term)?;
            let sf = standard_form(&t, system)?;
            let mut text = format!("hat: {}\ncheck: {}\n", sf.hat, sf.check);
            trace_text(&mut text, &sf.trace, *trace);
            Ok(Report::ok(
                text,
                json!({
                    "input": t.to_string(),
                    "system": system.name(),
                    "hat": sf.hat.to_string(),
                    "check": sf.check.to_string(),
                    "steps": trace_json(&sf.trace),
                }),
            ))
        }
        Command::Decide { pair, depth } => {
            let (f, g) = (term_arg(&pair.first)?, term_arg(&pair.second)?);
            let verdict = decide(&f, &g, system)?;
            let mut text = verdict.to_string();
            let mut out = verdict.to_json();
            if let Some(d) = depth {
                let r = oracle_equal(&f, &g, system, *d, OracleConfig::default())?;
                text = format!("{text}\n{}", oracle_text(&r));
                out["oracle"] = oracle_json(&r);
            }
            Ok(Report {
                code: verdict_code(&verdict),
                text,
                json: out,
                dot: None,
            })
        }
        Command::Counterexample { n, letter, depth } => {
            let a = Formula::Letter(Letter::new(letter));
            let (f, g) = counterexample_pair(*n, &a);
            let rel = g_of(&f.term, System::Ltopbot)?;
            let verdict = decide(&f.term, &g.term, System::Ltopbot)?;
            let mut text = format!(
                "type: {}\nf: {}\ng: {}\nrelation: {}\n{}",
                f.ty, f.term, g.term, rel, verdict
            );
            let mut out = json!({
                "n": n,
                "source": f.ty.source.to_string(),
                "target": f.ty.target.to_string(),
                "f": f.term.to_string(),
                "g": g.term.to_string(),
                "relation": rel.to_json(),
                "decision": verdict.to_json(),
            });
            if let Some(d) = depth {
                let r = oracle_equal(&f.term, &g.term, System::Ltopbot, *d, OracleConfig::default())?;
                text = format!("{text}\n{}", oracle_text(&r));
                out["oracle"] = oracle_json(&r);
            }
            Ok(Report::ok(text, out))
        }
        Command::Witness { pair, refine } => {
            let (f, g) = (term_arg(&pair.first)?, term_arg(&pair.second)?);
            let w = match system {
                System::L => collapse_witness_l(&f, &g)?,
                System::Ltopbot => collapse_witness_dicart(&f, &g, *refine)?,
                other => {
                    return Err(Failure::new(
                        "unsupported_system",
                        format!("witnesses are built in L or Ltopbot, not {other}"),
                    ))
                }
            };
            Ok(Report::ok(witness_text(&w), w.to_json()))
        }
        Command::Model {
            term,
            other,
            variant,
            size,
        } => {
            let variant = ModelVariant::from(*variant);
            let f = term_arg(term)?;
            typecheck(&f, system)?;
            match other {
                None => {
                    let asg = assignment_for(&[&f], *size);
                    let table = interp_term(&f, &asg, variant)?;
                    Ok(Report::ok(
                        table.to_string(),
                        json!({"variant": variant.name(), "function": table.to_json()}),
                    ))
                }
                Some(other) => {
                    let g = term_arg(other)?;
                    typecheck(&g, system)?;
                    let asg = assignment_for(&[&f, &g], *size);
                    let equal = model_equal(&f, &g, &asg, variant)?;
                    let (tf, tg) = (interp_term(&f, &asg, variant)?, interp_term(&g, &asg, variant)?);
                    Ok(Report {
                        text: format!("equal: {equal}\nfirst: {tf}\nsecond: {tg}"),
                        json: json!({
                            "variant": variant.name(),
                            "equal": equal,
                            "first": tf.to_json(),
                            "second": tg.to_json(),
                        }),
                        dot: None,
                        code: if equal { 0 } else { 1 },
                    })
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report.json).expect("json values serialize")),
                Format::Dot => match report.dot {
                    Some(dot) => print!("{dot}"),
                    None => {
                        eprintln!("error: dot output is only available for rel");
                        return ExitCode::from(2);
                    }
                },
                Format::Text => println!("{}", report.text.trim_end()),
            }
            ExitCode::from(report.code)
        }
        Err(e) => {
            if cli.format == Format::Json {
                let mut v = json!({"error": e.kind, "message": e.message});
                if let Some(p) = e.position {
                    v["position"] = json!(p);
                }
                println!("{}", serde_json::to_string_pretty(&v).expect("json values serialize"));
            }
            eprintln!("error: {}", e.message);
            ExitCode::from(2)
        }
    }
}
