//! The `iterwb` command line: evaluate and type λ-terms, run the iteration
//! primitives with optional traces, emit reflected translation terms, and
//! drive the differential campaigns.

use std::collections::{HashMap, HashSet};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use iterwb::dsl::StepDsl;
use iterwb::harness::lemmas::{check_lemma, falsify_lemma, LemmaId};
use iterwb::harness::trace_report;
use iterwb::iterators;
use iterwb::lambda::eval::{evaluate_capped, Assignment, Value};
use iterwb::lambda::infer::{infer_closed, infer_type};
use iterwb::lambda::parse::{parse_term, parse_term_with_context};
use iterwb::lambda::print::{print_term, print_type};
use iterwb::translations::reflect;
use iterwb::word::Word;
use iterwb::DEFAULT_CAP;

#[derive(Parser)]
#[command(name = "iterwb", about = "workbench for bounded and revision-limited iteration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse, type-check, and evaluate a term file
    Eval {
        file: PathBuf,
        /// NAME=TERMFILE assignments for free variables
        #[arg(long = "bind")]
        bind: Vec<String>,
        /// resource-guard cap on produced word lengths, in bits
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Print the inferred type of a term file
    Type { file: PathBuf },
    /// Run one iteration primitive on DSL step functions
    Run {
        #[arg(long)]
        primitive: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        phi: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: Option<String>,
        #[arg(long)]
        psi: Option<String>,
        #[arg(long)]
        c: String,
        /// write the revision trace as JSON
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Emit the reflected λ-term of a translation
    Translate {
        #[arg(long)]
        lemma: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(short)]
        o: PathBuf,
    },
    /// Run a differential campaign for one lemma (or all)
    Check {
        #[arg(long)]
        lemma: String,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long = "max-len")]
        max_len: Option<usize>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Adversarial search for counterexamples against one lemma
    Falsify {
        #[arg(long)]
        lemma: String,
        #[arg(long, default_value_t = 10.0)]
        budget: f64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long = "max-len", default_value_t = 24)]
        max_len: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn effective_cap(explicit: Option<usize>) -> usize {
    explicit
        .or_else(|| {
            std::env::var("ITERWB_CAP")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(DEFAULT_CAP)
}

fn read_term(path: &PathBuf, context: &HashSet<String>) -> Result<iterwb::lambda::ast::Term, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {}", path.display(), e))?;
    parse_term_with_context(&text, context).map_err(|e| format!("{}: {}", path.display(), e))
}

fn cmd_eval(file: PathBuf, bind: Vec<String>, cap: Option<usize>) -> Result<(), String> {
    let cap = effective_cap(cap);
    let mut env = Assignment::new();
    let mut ty_ctx: HashMap<String, iterwb::lambda::ast::Ty> = HashMap::new();
    for spec in &bind {
        let (name, path) = spec
            .split_once('=')
            .ok_or_else(|| format!("--bind wants NAME=TERMFILE, got `{}`", spec))?;
        let term = read_term(&PathBuf::from(path), &HashSet::new())?;
        let ty = infer_closed(&term).map_err(|e| format!("{}: {}", path, e))?;
        let value =
            evaluate_capped(&term, &Assignment::new(), cap).map_err(|e| format!("{}: {}", path, e))?;
        ty_ctx.insert(name.to_string(), ty);
        env.insert(name.to_string(), value);
    }
    let context: HashSet<String> = ty_ctx.keys().cloned().collect();
    let term = read_term(&file, &context)?;
    let ty = infer_type(&term, &ty_ctx).map_err(|e| format!("type error: {}", e))?;
    let value = evaluate_capped(&term, &env, cap).map_err(|e| format!("evaluation error: {}", e))?;
    match value {
        Value::Ground(w) => println!("'{}'", w),
        Value::Func(_) => println!("<function> : {}", print_type(&ty)),
    }
    Ok(())
}

fn cmd_type(file: PathBuf) -> Result<(), String> {
    let term = read_term(&file, &HashSet::new())?;
    let ty = infer_closed(&term).map_err(|e| format!("type error: {}", e))?;
    println!("{}", print_type(&ty));
    Ok(())
}

fn parse_word(s: &str) -> Result<Word, String> {
    let trimmed = s.trim_matches('\'');
    trimmed.parse().map_err(|e| format!("bad word `{}`: {:?}", s, e))
}

fn cmd_run(
    primitive: String,
    k: Option<usize>,
    phi: String,
    a: String,
    b: Option<String>,
    psi: Option<String>,
    c: String,
    trace_out: Option<PathBuf>,
) -> Result<(), String> {
    let cap = effective_cap(None);
    let phi_dsl: StepDsl = phi.parse().map_err(|e| format!("--phi: {}", e))?;
    let phi_fn = phi_dsl.step(cap);
    let a = parse_word(&a)?;
    let c = parse_word(&c)?;
    let need_b = || {
        b.as_deref()
            .ok_or_else(|| format!("--b is required for {}", primitive))
            .and_then(parse_word)
    };
    let need_k = || k.ok_or_else(|| format!("--k is required for {}", primitive));
    let mut trace_json: Option<String> = None;
    let result = match primitive.as_str() {
        "iter" => iterators::iter(&phi_fn, &need_b()?, &a, &c).map_err(|e| e.to_string())?,
        "jter" => iterators::jter(&phi_fn, &need_b()?, &a, &c).map_err(|e| e.to_string())?,
        "rec" => {
            let psi_src = psi.ok_or("--psi is required for rec")?;
            let psi_dsl: StepDsl = psi_src.parse().map_err(|e| format!("--psi: {}", e))?;
            let psi_fn = psi_dsl.step(cap);
            let phi2 = |_d: &Word, t: &Word| phi_fn(t);
            iterators::rec(&phi2, &psi_fn, &a, &c).map_err(|e| e.to_string())?
        }
        "rec0" => {
            let phi2 = |_d: &Word, t: &Word| phi_fn(t);
            iterators::rec0(&phi2, &need_b()?, &a, &c).map_err(|e| e.to_string())?
        }
        "iterk" | "jterk" => {
            let budget = need_k()?;
            let (word, trace) = if primitive == "iterk" {
                iterators::iter_k(budget, &phi_fn, &a, &c).map_err(|e| e.to_string())?
            } else {
                iterators::jter_k(budget, &phi_fn, &a, &c).map_err(|e| e.to_string())?
            };
            print!("{}", trace_report(&trace));
            trace_json = Some(serde_json::to_string_pretty(&trace).unwrap());
            word
        }
        other => return Err(format!("unknown primitive `{}`", other)),
    };
    println!("'{}'", result);
    if let Some(path) = trace_out {
        let json = trace_json.ok_or("--trace is only available for iterk/jterk")?;
        std::fs::write(&path, json).map_err(|e| format!("cannot write {}: {}", path.display(), e))?;
    }
    Ok(())
}

fn cmd_translate(lemma: String, k: usize, out: PathBuf) -> Result<(), String> {
    let term = reflect::term_for(&lemma, k)
        .ok_or_else(|| format!("no reflected term for `{}`", lemma))?;
    let text = print_term(&term);
    // sanity: what we emit must re-parse to the same term
    debug_assert_eq!(parse_term(&text).as_ref(), Ok(&term));
    std::fs::write(&out, format!("{}\n", text))
        .map_err(|e| format!("cannot write {}: {}", out.display(), e))?;
    println!("wrote {} ({})", out.display(), lemma);
    Ok(())
}

fn cmd_check(
    lemma: String,
    trials: u64,
    seed: u64,
    max_len: Option<usize>,
    json: Option<PathBuf>,
) -> Result<bool, String> {
    let ids: Vec<LemmaId> = if lemma == "all" {
        LemmaId::all()
    } else {
        vec![lemma.parse()?]
    };
    let reports: Vec<_> = ids
        .iter()
        .map(|&id| check_lemma(id, trials, seed, max_len.unwrap_or_else(|| id.default_max_len())))
        .collect();
    for r in &reports {
        print!("{}", r.render_text());
    }
    if let Some(path) = json {
        let body = if reports.len() == 1 {
            reports[0].to_json()
        } else {
            serde_json::to_string_pretty(&reports).unwrap()
        };
        std::fs::write(&path, body)
            .map_err(|e| format!("cannot write {}: {}", path.display(), e))?;
    }
    Ok(reports.iter().all(|r| r.passed()))
}

fn cmd_falsify(
    lemma: String,
    budget: f64,
    seed: u64,
    max_len: usize,
    json: Option<PathBuf>,
) -> Result<bool, String> {
    let id: LemmaId = lemma.parse()?;
    let report = falsify_lemma(id, budget, seed, max_len);
    print!("{}", report.render_text());
    if let Some(path) = json {
        std::fs::write(&path, report.to_json())
            .map_err(|e| format!("cannot write {}: {}", path.display(), e))?;
    }
    Ok(report.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Eval { file, bind, cap } => cmd_eval(file, bind, cap).map(|()| true),
        Command::Type { file } => cmd_type(file).map(|()| true),
        Command::Run {
            primitive,
            k,
            phi,
            a,
            b,
            psi,
            c,
            trace,
        } => cmd_run(primitive, k, phi, a, b, psi, c, trace).map(|()| true),
        Command::Translate { lemma, k, o } => cmd_translate(lemma, k, o).map(|()| true),
        Command::Check {
            lemma,
            trials,
            seed,
            max_len,
            json,
        } => cmd_check(lemma, trials, seed, max_len, json),
        Command::Falsify {
            lemma,
            budget,
            seed,
            max_len,
            json,
        } => cmd_falsify(lemma, budget, seed, max_len, json),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
