//! The `tarski` command line.
//!
//! Output is collected in full before anything is written, so a failing
//! invocation leaves standard output empty. Exit codes: 0 success, 1 usage
//! error, 2 a negative domain result (paradox, stratification violation,
//! failed adequacy check, number that codes nothing), 3 malformed input.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::formula::{parse_formula, render, Formula, Signature, Term, Variable};
use crate::godel::{decode, encode, numeral, GodelError, SymbolTable};
use crate::metatheory::{
    definition_for_sentences, liar_report, stratify, t_instance, verify_material_adequacy,
    LeveledCorpus, Naming, Stratification,
};
use crate::paradox::{consistent_valuations, explain, watergate, Scenario, Valuation};
use crate::semantics::{
    build_class_model, evaluate, is_true, presets, satisfying_assignments, Assignment, Model,
    DEFAULT_ENUMERATION_CAP,
};

#[derive(Parser, Debug)]
#[command(
    name = "tarski",
    version,
    about = "Satisfaction, truth and self-reference over finite models"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a formula; print its tree, free variables and subformulas.
    Parse {
        #[arg(long)]
        formula: String,
        #[command(flatten)]
        model: ModelArgs,
        /// Signature file (JSON); defaults to the class calculus `{I: 2}`.
        #[arg(long, conflicts_with_all = ["model", "class_model_rank"])]
        signature: Option<PathBuf>,
    },
    /// Decide whether an assignment satisfies a formula.
    Eval {
        #[arg(long)]
        formula: String,
        #[command(flatten)]
        model: ModelArgs,
        /// Variable bindings, e.g. `x1=Sócrates,x2=Platão`.
        #[arg(long, value_delimiter = ',')]
        bind: Vec<String>,
        /// Element for every unbound variable (defaults to the first element).
        #[arg(long)]
        default: Option<String>,
        /// Use one of the four sample sequences of the philosophers model.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4), conflicts_with_all = ["bind", "default"])]
        sequence: Option<u8>,
    },
    /// Decide whether a sentence is true in a model.
    Truth {
        #[arg(long)]
        formula: String,
        #[command(flatten)]
        model: ModelArgs,
    },
    /// List the bindings of the free variables that satisfy a formula.
    Enum {
        #[arg(long)]
        formula: String,
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u64,
    },
    /// T-schema instances, finite truth definitions and adequacy checks.
    Tschema {
        #[command(subcommand)]
        action: TschemaAction,
    },
    /// Gödel coding of symbol strings.
    Godel {
        #[command(subcommand)]
        action: GodelAction,
        /// Symbol table file (JSON object of character -> code).
        #[arg(long, global = true)]
        table: Option<PathBuf>,
    },
    /// Print the numeral `s(...s(0)...)` for a natural number.
    Numeral {
        #[arg(value_parser = clap::value_parser!(u64).range(0..=MAX_NUMERAL))]
        n: u64,
    },
    /// Assign minimal levels to a corpus of truth ascriptions.
    Stratify { corpus: PathBuf },
    /// Derive the contradiction from the liar sentence, step by step.
    Liar,
    /// Empirically grounded paradoxes.
    Kripke {
        #[command(subcommand)]
        action: KripkeAction,
    },
    /// Print a built-in model as JSON.
    Model {
        #[command(flatten)]
        model: ModelArgs,
    },
}

const MAX_NUMERAL: u64 = 1_000_000;

#[derive(Args, Debug, Default)]
struct ModelArgs {
    /// `philosophers` or a model file (JSON).
    #[arg(long, conflicts_with = "class_model_rank")]
    model: Option<String>,
    /// Hereditarily finite sets up to this rank, with `I` as inclusion.
    #[arg(long)]
    class_model_rank: Option<u32>,
}

#[derive(Subcommand, Debug)]
enum TschemaAction {
    /// `True(<name>) <-> <sentence>` for one sentence.
    Instance {
        #[arg(long)]
        formula: String,
        #[arg(long, value_enum, default_value_t = NamingArg::Quote)]
        naming: NamingArg,
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        signature: Option<PathBuf>,
    },
    /// The finite disjunctive truth definition for the given sentences.
    Define {
        #[arg(long = "formula", required = true)]
        formulas: Vec<String>,
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        signature: Option<PathBuf>,
    },
    /// Compare the definition's verdicts with truth in a model.
    Adequacy {
        #[arg(long = "formula", required = true)]
        formulas: Vec<String>,
        #[command(flatten)]
        model: ModelArgs,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum NamingArg {
    Quote,
    Godel,
}

#[derive(Subcommand, Debug)]
enum GodelAction {
    /// Code a string (read from standard input when omitted).
    Encode { text: Option<String> },
    /// Decode a decimal natural (read from standard input when omitted).
    Decode { number: Option<String> },
}

#[derive(Subcommand, Debug)]
enum KripkeAction {
    /// List the consistent valuations of a scenario file.
    Solve {
        scenario: PathBuf,
        /// Also show the per-claim check for each valuation.
        #[arg(long)]
        explain: bool,
    },
    /// Print the Watergate scenario as JSON.
    Watergate {
        /// Nixon's ground assertions: k true and k false.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(0..=9))]
        k: u64,
        /// Jones also asserts one false ground statement.
        #[arg(long)]
        dissolved: bool,
    },
}

enum Failure {
    Usage(String),
    /// Complete output describing a negative result.
    Domain(String),
    Malformed(String),
}

fn malformed(e: impl std::fmt::Display) -> Failure {
    Failure::Malformed(e.to_string())
}

type Outcome = Result<String, Failure>;

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return 0;
                }
                _ => 1,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match dispatch(cli.command, stdin) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(Failure::Domain(text)) => {
            let _ = out.write_all(text.as_bytes());
            2
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Malformed(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            3
        }
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read) -> Outcome {
    match command {
        Command::Parse {
            formula,
            model,
            signature,
        } => {
            let sig = signature_from(&model, signature.as_ref())?;
            let f = parse_formula(&formula, &sig).map_err(malformed)?;
            Ok(describe(&f))
        }
        Command::Eval {
            formula,
            model,
            bind,
            default,
            sequence,
        } => {
            let m = require_model(&model)?;
            let f = parse_formula(&formula, m.signature()).map_err(malformed)?;
            let a = match sequence {
                Some(i) => presets::philosophers_sequences()[usize::from(i) - 1].clone(),
                None => assignment_from(&m, &bind, default)?,
            };
            let verdict = evaluate(&m, &a, &f).map_err(malformed)?;
            let mut out = format!("{}\n", verdict.value);
            if let Some((v, e)) = verdict.witness {
                writeln!(out, "decided by {v} = {e}").unwrap();
            }
            Ok(out)
        }
        Command::Truth { formula, model } => {
            let m = require_model(&model)?;
            let f = parse_formula(&formula, m.signature()).map_err(malformed)?;
            Ok(format!("{}\n", is_true(&m, &f).map_err(malformed)?))
        }
        Command::Enum {
            formula,
            model,
            cap,
        } => {
            let m = require_model(&model)?;
            let f = parse_formula(&formula, m.signature()).map_err(malformed)?;
            let mut out = String::new();
            for b in satisfying_assignments(&m, &f, cap).map_err(malformed)? {
                let parts: Vec<String> = b.iter().map(|(v, e)| format!("{v}={e}")).collect();
                writeln!(out, "{{{}}}", parts.join(", ")).unwrap();
            }
            Ok(out)
        }
        Command::Tschema { action } => tschema(action),
        Command::Godel { action, table } => {
            let table = match table {
                Some(path) => SymbolTable::from_json(&read(&path)?).map_err(malformed)?,
                None => SymbolTable::default(),
            };
            godel(action, &table, stdin)
        }
        Command::Numeral { n } => Ok(format!("{}\n", numeral(n as usize))),
        Command::Stratify { corpus } => {
            let c = LeveledCorpus::from_json(&read(&corpus)?).map_err(malformed)?;
            match stratify(&c) {
                Stratification::Levels(levels) => {
                    let mut out = String::new();
                    for e in c.entries() {
                        writeln!(out, "{}: level {}", e.label, levels[&e.label]).unwrap();
                    }
                    Ok(out)
                }
                Stratification::Cycle(cycle) => Err(Failure::Domain(format!(
                    "VIOLATION: truth-reference cycle {}\n",
                    cycle.join(" -> ")
                ))),
            }
        }
        Command::Liar => {
            let r = liar_report().map_err(malformed)?;
            let mut out = String::new();
            for s in &r.steps {
                writeln!(
                    out,
                    "({}) {}    [{}] {}",
                    s.number,
                    s.formula,
                    s.justification,
                    if s.certified {
                        "certified"
                    } else {
                        "NOT CERTIFIED"
                    }
                )
                .unwrap();
            }
            writeln!(
                out,
                "without the T-schema instance (6) {}",
                if r.contradiction_without_t_instance {
                    "still follows"
                } else {
                    "does not follow"
                }
            )
            .unwrap();
            Ok(out)
        }
        Command::Kripke { action } => kripke(action),
        Command::Model { model } => Ok(format!("{}\n", require_model(&model)?.to_json())),
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Malformed(format!("{}: {e}", path.display())))
}

fn load_model(args: &ModelArgs) -> Result<Option<Model>, Failure> {
    match (&args.model, args.class_model_rank) {
        (Some(name), _) if name == "philosophers" => Ok(Some(presets::philosophers())),
        (Some(path), _) => Ok(Some(
            Model::from_json(&read(&PathBuf::from(path))?).map_err(malformed)?,
        )),
        (None, Some(rank)) => Ok(Some(build_class_model(rank).map_err(malformed)?)),
        (None, None) => Ok(None),
    }
}

fn require_model(args: &ModelArgs) -> Result<Model, Failure> {
    load_model(args)?
        .ok_or_else(|| Failure::Usage("a model is required (--model or --class-model-rank)".into()))
}

fn signature_from(model: &ModelArgs, signature: Option<&PathBuf>) -> Result<Signature, Failure> {
    if let Some(path) = signature {
        return Signature::from_json(&read(path)?).map_err(malformed);
    }
    Ok(load_model(model)?.map_or_else(Signature::class_calculus, |m| m.signature().clone()))
}

fn assignment_from(
    m: &Model,
    bind: &[String],
    default: Option<String>,
) -> Result<Assignment, Failure> {
    let mut a = Assignment::constant(default.unwrap_or_else(|| m.domain()[0].clone()));
    for b in bind {
        let (var, element) = b.split_once('=').ok_or_else(|| {
            Failure::Malformed(format!("binding `{b}` is not of the form xK=element"))
        })?;
        let index = var
            .trim()
            .strip_prefix('x')
            .and_then(|k| k.parse::<u32>().ok())
            .and_then(Variable::try_new)
            .ok_or_else(|| Failure::Malformed(format!("`{var}` is not a variable")))?;
        a.bind(index, element.trim());
    }
    Ok(a)
}

fn sexpr(f: &Formula) -> String {
    match f {
        Formula::Atom(p, terms) => {
            let ts: Vec<String> = terms
                .iter()
                .map(|t| match t {
                    Term::Var(v) => v.to_string(),
                    Term::Const(c) => format!("'{c}"),
                })
                .collect();
            format!("({p} {})", ts.join(" "))
        }
        Formula::Not(a) => format!("(not {})", sexpr(a)),
        Formula::Or(a, b) => format!("(or {} {})", sexpr(a), sexpr(b)),
        Formula::Forall(v, a) => format!("(forall {v} {})", sexpr(a)),
    }
}

fn describe(f: &Formula) -> String {
    let free: Vec<String> = f.free_variables().iter().map(ToString::to_string).collect();
    let mut out = String::new();
    writeln!(out, "formula: {}", render(f)).unwrap();
    writeln!(out, "ast: {}", sexpr(f)).unwrap();
    writeln!(out, "free: {{{}}}", free.join(", ")).unwrap();
    writeln!(out, "sentence: {}", f.is_sentence()).unwrap();
    writeln!(out, "subformulas:").unwrap();
    for (path, sub) in f.subformulas() {
        let path: Vec<String> = path.iter().map(ToString::to_string).collect();
        writeln!(out, "  [{}] {}", path.join("."), render(sub)).unwrap();
    }
    out
}

fn tschema(action: TschemaAction) -> Outcome {
    match action {
        TschemaAction::Instance {
            formula,
            naming,
            model,
            signature,
        } => {
            let sig = signature_from(&model, signature.as_ref())?;
            let f = parse_formula(&formula, &sig).map_err(malformed)?;
            let naming = match naming {
                NamingArg::Quote => Naming::Quote,
                NamingArg::Godel => Naming::GodelNumeral,
            };
            let inst = t_instance(&f, naming, &SymbolTable::default()).map_err(malformed)?;
            Ok(format!("{}\n", inst.display))
        }
        TschemaAction::Define {
            formulas,
            model,
            signature,
        } => {
            let sig = signature_from(&model, signature.as_ref())?;
            let sentences = formulas
                .iter()
                .map(|t| parse_formula(t, &sig))
                .collect::<Result<Vec<_>, _>>()
                .map_err(malformed)?;
            let d = definition_for_sentences(sentences).map_err(malformed)?;
            Ok(format!("{d}\n"))
        }
        TschemaAction::Adequacy { formulas, model } => {
            let m = require_model(&model)?;
            let sentences = formulas
                .iter()
                .map(|t| parse_formula(t, m.signature()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(malformed)?;
            let d = definition_for_sentences(sentences).map_err(malformed)?;
            let report = verify_material_adequacy(&d, &m).map_err(malformed)?;
            let mut out = String::new();
            for r in &report.rows {
                writeln!(
                    out,
                    "{}: definition={} model={} {}",
                    r.name,
                    r.definitional,
                    r.direct,
                    if r.agrees() { "agree" } else { "DISAGREE" }
                )
                .unwrap();
            }
            if report.passed() {
                out.push_str("PASS\n");
                Ok(out)
            } else {
                out.push_str("FAIL\n");
                Err(Failure::Domain(out))
            }
        }
    }
}

fn godel(action: GodelAction, table: &SymbolTable, stdin: &mut dyn Read) -> Outcome {
    let mut from_stdin = || -> Result<String, Failure> {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(malformed)?;
        Ok(s.trim_end_matches(['\n', '\r']).to_string())
    };
    match action {
        GodelAction::Encode { text } => {
            let text = match text {
                Some(t) => t,
                None => from_stdin()?,
            };
            let code = encode(table, &text).map_err(malformed)?;
            Ok(format!("{}\n", code.value()))
        }
        GodelAction::Decode { number } => {
            let digits = match number {
                Some(n) => n,
                None => from_stdin()?.trim().to_string(),
            };
            let n: BigUint = digits
                .parse()
                .ok()
                .filter(|_| !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()))
                .ok_or_else(|| {
                    Failure::Malformed(format!("`{digits}` is not a decimal natural number"))
                })?;
            match decode(table, &n) {
                Ok(d) => Ok(format!(
                    "{}\n{}\n",
                    d.text,
                    if d.well_formed {
                        "WELL-FORMED"
                    } else {
                        "NOT WELL-FORMED"
                    }
                )),
                Err(e @ (GodelError::NotACode(_) | GodelError::UnknownCode { .. })) => {
                    Err(Failure::Domain(format!("NOT A CODE: {e}\n")))
                }
                Err(e) => Err(malformed(e)),
            }
        }
    }
}

fn valuation_line(v: &Valuation) -> String {
    v.iter()
        .map(|(id, b)| format!("{id}={b}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn kripke(action: KripkeAction) -> Outcome {
    match action {
        KripkeAction::Solve {
            scenario,
            explain: show,
        } => {
            let s = Scenario::from_json(&read(&scenario)?).map_err(malformed)?;
            let vals = consistent_valuations(&s).map_err(malformed)?;
            if vals.is_empty() {
                return Err(Failure::Domain("PARADOX: no consistent valuation\n".into()));
            }
            let mut out = String::new();
            for v in &vals {
                writeln!(out, "{}", valuation_line(v)).unwrap();
                if show {
                    for row in explain(&s, v).map_err(malformed)? {
                        writeln!(out, "  {row}").unwrap();
                    }
                }
            }
            Ok(out)
        }
        KripkeAction::Watergate { k, dissolved } => {
            Ok(format!("{}\n", watergate(k as usize, dissolved).to_json()))
        }
    }
}
