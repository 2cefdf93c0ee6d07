//! Command-line front end. [`run`] parses arguments, evaluates one
//! subcommand and returns the payload with its status; the binary only
//! prints and exits.

use clap::{Parser, Subcommand, ValueEnum};
use num::Signed;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::arith::{parse_rational, serde_rational, Rational};
use crate::condition_c::{alpha_from_beta, check_condition_c_with_width, default_width};
use crate::constructions::{
    augment, build_p1, build_p2, build_p3, derived_triple, special_lagrangian_alpha, verify_interlacing,
    verify_p3_real_rooted, verify_p_decomposition,
};
use crate::error::Error;
use crate::inequalities::{
    certify_complex, general_newton_q, general_newton_s, maclaurin_chain_s, newton_gap_e, newton_gap_s, q_gap,
    sigma_gap, GapForm,
};
use crate::search::{find_counterexample, sweep_gap, SearchConfig};
use crate::symmfn::{e_mean, q_eval, s_eval, sigma_all, AlphaVector, SymmetricMeans, VariableVector};

pub const DEFAULT_SAMPLES: u64 = 100_000;
pub const DEFAULT_BOUND: u64 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Violated,
    InputError,
    HypothesisError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Violated => 1,
            Status::InputError => 2,
            Status::HypothesisError => 3,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    /// What the binary prints: pretty JSON with `--json`, text otherwise.
    pub output: String,
}

#[derive(Parser, Debug)]
#[command(name = "symmean", version, about = "Exact checks of Newton and Maclaurin type inequalities")]
struct Cli {
    /// Print the payload as JSON
    #[arg(long, global = true)]
    json: bool,
    /// Input document: inline JSON starting with '{', '-' for stdin, or a file path
    #[arg(long, global = true, value_name = "DOC")]
    input: Option<String>,
    /// Exit with status 1 when a checked inequality fails
    #[arg(long = "assert", global = true)]
    assert_holds: bool,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    samples: Option<u64>,
    /// Root isolation width, a positive rational
    #[arg(long, global = true, value_name = "W")]
    width: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// sigma_0..sigma_n of x
    Sigma,
    /// E_k of x, or all means when k is absent
    EMean,
    /// S_{k;s}(x)
    EvalS,
    /// Q_{k;s}(x)
    EvalQ,
    /// Real-rootedness of f from alpha (or beta)
    ConditionC,
    GapE,
    GapSigma,
    GapS,
    GapQ,
    Maclaurin,
    ChainS,
    ChainQ,
    CertifyComplex,
    Construct {
        #[arg(value_enum)]
        what: ConstructKind,
    },
    Augment,
    Lagrangian,
    Search,
    Sweep,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConstructKind {
    P1,
    P2,
    P3,
    Decompose,
    Interlace,
    P3Real,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(transparent)]
struct Rationals(#[serde(with = "serde_rational::vec")] Vec<Rational>);

#[derive(Debug, Default, Deserialize)]
#[serde(default)]
struct Input {
    x: Option<VariableVector>,
    alpha: Option<AlphaVector>,
    beta: Option<Rationals>,
    #[serde(alias = "E")]
    e: Option<Rationals>,
    k: Option<i64>,
    l: Option<i64>,
    n: Option<usize>,
    #[serde(with = "serde_rational::option")]
    b: Option<Rational>,
    grid: Option<Vec<VariableVector>>,
    form: Option<GapForm>,
    samples: Option<u64>,
    numerator_bound: Option<u64>,
    denominator_bound: Option<u64>,
    seed: Option<u64>,
    #[serde(with = "serde_rational::option")]
    width: Option<Rational>,
}

struct Failure {
    status: Status,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Hypothesis(_) => Status::HypothesisError,
            _ => Status::InputError,
        };
        Failure {
            status,
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        status: Status::InputError,
        message: message.into(),
    }
}

fn need<T>(v: Option<T>, field: &str) -> Result<T, Failure> {
    v.ok_or_else(|| input_error(format!("missing input field \"{field}\"")))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("payload types serialize")
}

/// Runs one command; `args` excludes the program name.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let argv = std::iter::once("symmean".to_string()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Status::Ok,
                _ => Status::InputError,
            };
            let text = e.render().to_string();
            let payload = if status == Status::Ok {
                json!({ "status": status, "help": text })
            } else {
                json!({ "status": status, "error": text.trim_end() })
            };
            return CommandResult {
                status,
                payload,
                output: text,
            };
        }
    };
    let json_mode = cli.json;
    let assert_holds = cli.assert_holds;
    match execute(cli) {
        Ok(payload) => {
            let status = if assert_holds && has_failed_check(&payload) {
                Status::Violated
            } else {
                Status::Ok
            };
            let output = if json_mode {
                serde_json::to_string_pretty(&payload).expect("json")
            } else {
                render_text(&payload)
            };
            CommandResult { status, payload, output }
        }
        Err(f) => {
            let payload = json!({ "status": f.status, "error": f.message });
            let output = if json_mode {
                serde_json::to_string_pretty(&payload).expect("json")
            } else {
                format!("error: {}", f.message)
            };
            CommandResult {
                status: f.status,
                payload,
                output,
            }
        }
    }
}

fn read_input(doc: Option<&str>) -> Result<Input, Failure> {
    let Some(doc) = doc else {
        return Ok(Input::default());
    };
    let text = if doc.trim_start().starts_with('{') {
        doc.to_string()
    } else if doc == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| input_error(format!("reading stdin: {e}")))?
    } else {
        std::fs::read_to_string(doc).map_err(|e| input_error(format!("reading {doc}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| input_error(format!("bad input document: {e}")))
}

fn execute(cli: Cli) -> Result<Value, Failure> {
    let input = read_input(cli.input.as_deref())?;
    let width = match (&cli.width, &input.width) {
        (Some(w), _) => parse_rational(w)?,
        (None, Some(w)) => w.clone(),
        (None, None) => default_width(),
    };
    if !width.is_positive() {
        return Err(input_error("width must be positive"));
    }

    match cli.command {
        Command::Sigma => {
            let x = need(input.x, "x")?;
            Ok(json!({ "sigma": rationals(&sigma_all(&x)) }))
        }
        Command::EMean => {
            let x = need(input.x, "x")?;
            match input.k {
                Some(k) => Ok(json!({ "k": k, "value": text(&e_mean(&x, k)?) })),
                None => Ok(json!({ "means": rationals(SymmetricMeans::new(&x).means()) })),
            }
        }
        Command::EvalS | Command::EvalQ => {
            let x = need(input.x, "x")?;
            let alpha = need(input.alpha, "alpha")?;
            let k = need(input.k, "k")?;
            let value = if matches!(cli.command, Command::EvalS) {
                s_eval(&x, &alpha, k)?
            } else {
                q_eval(&x, &alpha, k)?
            };
            Ok(json!({ "k": k, "value": text(&value) }))
        }
        Command::ConditionC => {
            let alpha = alpha_input(input.alpha, input.beta)?;
            Ok(to_value(&check_condition_c_with_width(&alpha, &width)?))
        }
        Command::GapE => Ok(to_value(&newton_gap_e(&need(input.x, "x")?, need(input.k, "k")?)?)),
        Command::GapSigma => Ok(to_value(&sigma_gap(&need(input.x, "x")?, need(input.k, "k")?)?)),
        Command::GapS | Command::GapQ | Command::Maclaurin => {
            let x = need(input.x, "x")?;
            let alpha = alpha_input(input.alpha, input.beta)?;
            let k = need(input.k, "k")?;
            Ok(match cli.command {
                Command::GapS => to_value(&newton_gap_s(&x, &alpha, k)?),
                Command::GapQ => to_value(&q_gap(&x, &alpha, k)?),
                _ => to_value(&maclaurin_chain_s(&x, &alpha, k)?),
            })
        }
        Command::ChainS | Command::ChainQ => {
            let x = need(input.x, "x")?;
            let alpha = alpha_input(input.alpha, input.beta)?;
            let (l, k) = (need(input.l, "l")?, need(input.k, "k")?);
            Ok(if matches!(cli.command, Command::ChainS) {
                to_value(&general_newton_s(&x, &alpha, l, k)?)
            } else {
                to_value(&general_newton_q(&x, &alpha, l, k)?)
            })
        }
        Command::CertifyComplex => {
            let e = need(input.e, "e")?;
            let alpha = alpha_input(input.alpha, input.beta)?;
            let cert = certify_complex(&e.0, &alpha, need(input.k, "k")?)?;
            Ok(json!({
                "complex_roots": cert.is_some(),
                "certificate": cert.map(|c| to_value(&c)),
            }))
        }
        Command::Construct { what } => {
            let x = need(input.x, "x")?;
            Ok(match what {
                ConstructKind::P1 => json!({ "polynomial": to_value(&build_p1(&x)?) }),
                ConstructKind::P2 => json!({ "polynomial": to_value(&build_p2(&x)?) }),
                ConstructKind::P3 => json!({ "polynomial": to_value(&build_p3(&x, &need(input.b, "b")?)?) }),
                ConstructKind::Decompose => {
                    let mut v = to_value(&derived_triple(&x)?);
                    v["holds"] = json!(verify_p_decomposition(&x)?);
                    v
                }
                ConstructKind::Interlace => to_value(&verify_interlacing(&x)?),
                ConstructKind::P3Real => to_value(&verify_p3_real_rooted(&x, &need(input.b, "b")?)?),
            })
        }
        Command::Augment => {
            let x = need(input.x, "x")?;
            let beta = need(input.beta, "beta")?.0;
            let y = augment(&x, &beta);
            let alpha = if beta.is_empty() {
                Value::Null
            } else {
                to_value(&alpha_from_beta(&beta)?)
            };
            Ok(json!({ "y": to_value(&y), "alpha": alpha }))
        }
        Command::Lagrangian => Ok(to_value(&special_lagrangian_alpha(need(input.n, "n")?)?)),
        Command::Search => {
            let seed = cli
                .seed
                .or(input.seed)
                .ok_or_else(|| input_error("search requires a seed (--seed or \"seed\")"))?;
            let form = input.form.unwrap_or(GapForm::Q);
            let cfg = SearchConfig {
                alpha: need(input.alpha, "alpha")?,
                k: need(input.k, "k")?,
                n: need(input.n, "n")?,
                samples: cli.samples.or(input.samples).unwrap_or(DEFAULT_SAMPLES),
                numerator_bound: input.numerator_bound.unwrap_or(DEFAULT_BOUND),
                denominator_bound: input.denominator_bound.unwrap_or(DEFAULT_BOUND),
                seed,
                target: form,
            };
            let found = find_counterexample(&cfg)?;
            let mut out = json!({
                "found": found.is_some(),
                "alpha": to_value(&cfg.alpha),
                "k": cfg.k,
                "n": cfg.n,
                "form": form,
                "seed": seed,
                "samples": cfg.samples,
            });
            if let Some(w) = found {
                for (key, v) in to_value(&w).as_object().expect("object") {
                    out[key] = v.clone();
                }
            }
            Ok(out)
        }
        Command::Sweep => {
            let alpha = alpha_input(input.alpha, input.beta)?;
            let grid = need(input.grid, "grid")?;
            let reports = sweep_gap(&alpha, need(input.k, "k")?, &grid, input.form.unwrap_or(GapForm::Q));
            Ok(json!({ "reports": to_value(&reports) }))
        }
    }
}

fn alpha_input(alpha: Option<AlphaVector>, beta: Option<Rationals>) -> Result<AlphaVector, Failure> {
    match (alpha, beta) {
        (Some(a), _) => Ok(a),
        (None, Some(b)) => Ok(alpha_from_beta(&b.0)?),
        (None, None) => Err(input_error("missing input field \"alpha\" (or \"beta\")")),
    }
}

fn text(r: &Rational) -> Value {
    Value::String(crate::arith::format_rational(r))
}

fn rationals(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(text).collect())
}

/// True when any `"holds": false` appears anywhere in the payload.
fn has_failed_check(v: &Value) -> bool {
    match v {
        Value::Object(map) => {
            map.get("holds") == Some(&Value::Bool(false)) || map.values().any(has_failed_check)
        }
        Value::Array(items) => items.iter().any(has_failed_check),
        _ => false,
    }
}

fn render_text(v: &Value) -> String {
    let mut lines = Vec::new();
    match v {
        Value::Object(map) => render_object(map, &mut lines),
        other => lines.push(scalar(other)),
    }
    lines.join("\n")
}

fn render_object(map: &Map<String, Value>, lines: &mut Vec<String>) {
    if let (Some(gap), Some(Value::Bool(holds))) = (map.get("gap"), map.get("holds")) {
        let verdict = match (holds, map.get("equality")) {
            (false, _) => "violated",
            (true, Some(Value::Bool(true))) => "equality",
            (true, _) => "holds",
        };
        lines.push(format!("gap = {} ({verdict})", scalar(gap)));
    }
    for (key, value) in map {
        if key == "gap" && map.contains_key("holds") {
            continue;
        }
        lines.push(format!("{key} = {}", scalar(value)));
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".to_string(),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            format!("[{}]", items.iter().map(scalar).collect::<Vec<_>>().join(", "))
        }
        other => other.to_string(),
    }
}
