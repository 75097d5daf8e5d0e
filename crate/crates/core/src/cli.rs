//! Report rendering for the `reesval` binary.
//!
//! Every subcommand builds a [`Report`] and prints it either as text or,
//! with `--json`, as one JSON document with sorted keys. Integers are
//! emitted as exact JSON numbers of any size.
//!
//! Exit codes: 0 on success, 2 on bad input, 3 when an internal
//! cross-check fails.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use num_traits::Signed;
use serde_json::{json, Map, Number, Value};
use thiserror::Error;

use crate::dvrcalc::{check_fundamental, general_k_extension, ExtensionStep};
use crate::itoh::{
    itoh_structure, radicality_equivalence, ItohError, ItohReport, ReesData, SemilocalIdeal,
};
use crate::krull::{
    build_system, cor_co2_plan, realizability_gate, realize_plan, system_warnings, Component,
    ComponentOutcome, ComponentPlan, ConsistentSystem, Decision, DirectSumReport, KrullError,
    RealizationContext, RealizationReport, SystemFamily,
};
use crate::monomial::{
    integral_closure_power, parse_ideal, rees_valuations, MonomialIdeal, ParseError, ReesPackage,
};
use crate::numcore::{lcm_list, Int};
use crate::puiseux::{oracle_extension, PuiseuxModel};

/// Largest integer accepted for Rees integers, `k` and `e` on the command line.
pub const MAX_FLAG_VALUE: i64 = 1_000_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "reesval", version, about = "Exact Rees valuation calculus")]
pub struct Cli {
    /// Emit one JSON document instead of a text report.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rees valuations of a monomial ideal read from a file.
    Rees { file: PathBuf },
    /// Itoh valuations of u^{1/k} over the given Rees integers.
    Itoh {
        #[arg(long)]
        rees: String,
        #[arg(long)]
        k: String,
    },
    /// The extension V ⊂ V_k obtained by adjoining u^{1/k}.
    Tower {
        #[arg(long)]
        e: String,
        #[arg(long)]
        k: String,
        /// Cross-check against the value-group oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// A consistent system, its realizability and its realization numbers.
    Krull {
        #[arg(long)]
        rees: String,
        #[arg(long)]
        k: String,
        /// One of S, T, U, EXP2.
        #[arg(long)]
        family: String,
        #[arg(long)]
        has_extra_dvr: bool,
        #[arg(long)]
        has_separable_approximation: bool,
        #[arg(long)]
        alg_closed_residue: bool,
    },
    /// Direct-sum planning over components, e.g. --components "2,3;1".
    Co2 {
        #[arg(long, allow_hyphen_values = true)]
        components: String,
        #[arg(long)]
        e: String,
    },
    /// Minimal generators of the integral closure of I^k.
    Closure {
        file: PathBuf,
        #[arg(long)]
        k: String,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("bad flag: {0}")]
    BadFlag(String),
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Input(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => EXIT_VERIFY,
            _ => EXIT_INPUT,
        }
    }
}

impl From<ItohError> for CliError {
    fn from(e: ItohError) -> Self {
        match e {
            ItohError::EquivalenceViolation { .. } => CliError::Verification(e.to_string()),
            ItohError::BadK(_) => CliError::BadFlag(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<KrullError> for CliError {
    fn from(e: KrullError) -> Self {
        match e {
            KrullError::InconsistentSystem { .. }
            | KrullError::NonUniform(_)
            | KrullError::ShapeMismatch { .. } => CliError::Verification(e.to_string()),
            KrullError::BadK(_) | KrullError::NonPositiveK(_) => CliError::BadFlag(e.to_string()),
            KrullError::Itoh(inner) => inner.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

/// A finished command: structured content plus the text rendering.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub input: Value,
    pub payload: Value,
    pub warnings: Vec<String>,
    pub text: String,
    /// Set when the command completed but a cross-check disagreed.
    pub verification_failed: bool,
}

impl Report {
    fn new(command: &str, input: Value, payload: Value, text: String) -> Self {
        Report {
            command: command.to_string(),
            input,
            payload,
            warnings: Vec::new(),
            text,
            verification_failed: false,
        }
    }

    pub fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "input": self.input,
            "payload": self.payload,
            "warnings": self.warnings,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("values serialize");
        s.push('\n');
        s
    }
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code: EXIT_INPUT,
                }
            } else {
                Outcome {
                    stdout: rendered,
                    stderr: String::new(),
                    code: EXIT_OK,
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            let stdout = if cli.json {
                report.to_json()
            } else {
                report.text.clone()
            };
            let mut stderr = String::new();
            for w in &report.warnings {
                let _ = writeln!(stderr, "warning: {w}");
            }
            let code = if report.verification_failed {
                EXIT_VERIFY
            } else {
                EXIT_OK
            };
            Outcome {
                stdout,
                stderr,
                code,
            }
        }
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        },
    }
}

pub fn execute(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Rees { file } => cmd_rees(&read_ideal(file)?),
        Command::Itoh { rees, k } => cmd_itoh(&parse_rees(rees)?, &parse_int("k", k)?),
        Command::Tower { e, k, oracle } => {
            cmd_tower(&parse_int("e", e)?, &parse_int("k", k)?, *oracle)
        }
        Command::Krull {
            rees,
            k,
            family,
            has_extra_dvr,
            has_separable_approximation,
            alg_closed_residue,
        } => {
            let ctx = RealizationContext {
                has_extra_dvr: *has_extra_dvr,
                has_separable_approximation: *has_separable_approximation,
                residue_fields_algebraically_closed: *alg_closed_residue,
            };
            cmd_krull(
                &parse_rees(rees)?,
                &parse_int("k", k)?,
                parse_family(family)?,
                &ctx,
            )
        }
        Command::Co2 { components, e } => {
            cmd_co2(&parse_components(components)?, &parse_int("e", e)?)
        }
        Command::Closure { file, k } => {
            let k = parse_int("k", k)?;
            let k = i64::try_from(&k).expect("bounded by MAX_FLAG_VALUE");
            cmd_closure(&read_ideal(file)?, k)
        }
    }
}

fn read_ideal(path: &PathBuf) -> Result<MonomialIdeal, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: shown.clone(),
        message: e.to_string(),
    })?;
    parse_ideal(&text).map_err(|source| CliError::Parse {
        path: shown,
        source,
    })
}

/// A positive integer no larger than [`MAX_FLAG_VALUE`].
pub fn parse_int(name: &str, raw: &str) -> Result<Int, CliError> {
    let value = Int::from_str(raw.trim())
        .map_err(|_| CliError::BadFlag(format!("--{name} expects an integer, got {raw:?}")))?;
    if !value.is_positive() {
        return Err(CliError::BadFlag(format!(
            "--{name} must be positive, got {value}"
        )));
    }
    if value > Int::from(MAX_FLAG_VALUE) {
        return Err(CliError::BadFlag(format!(
            "--{name} must be at most {MAX_FLAG_VALUE}, got {value}"
        )));
    }
    Ok(value)
}

fn parse_list(raw: &str) -> Result<Vec<Int>, CliError> {
    raw.split(',').map(|part| parse_int("rees", part)).collect()
}

/// A comma list of Rees integers, e.g. `2,3`.
pub fn parse_rees(raw: &str) -> Result<ReesData, CliError> {
    if raw.trim().is_empty() {
        return Err(CliError::BadFlag(
            "--rees needs at least one integer".into(),
        ));
    }
    Ok(ReesData::new(parse_list(raw)?)?)
}

/// Semicolon-separated comma lists; an empty list marks a component that
/// does not participate.
pub fn parse_components(raw: &str) -> Result<ComponentPlan, CliError> {
    let components = raw
        .split(';')
        .map(|part| {
            if part.trim().is_empty() {
                Ok(Component {
                    rees_integers: Vec::new(),
                    participates: false,
                })
            } else {
                Ok(Component {
                    rees_integers: parse_list(part)?,
                    participates: true,
                })
            }
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(ComponentPlan { components })
}

pub fn parse_family(raw: &str) -> Result<SystemFamily, CliError> {
    match raw.to_ascii_uppercase().as_str() {
        "S" => Ok(SystemFamily::S),
        "T" => Ok(SystemFamily::T),
        "U" => Ok(SystemFamily::U),
        "EXP2" => Ok(SystemFamily::Exp2),
        _ => Err(CliError::BadFlag(format!(
            "--family must be one of S, T, U, EXP2, got {raw:?}"
        ))),
    }
}

fn num(n: &Int) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integers are valid JSON numbers"))
}

fn nums(ns: &[Int]) -> Value {
    Value::Array(ns.iter().map(num).collect())
}

fn small(n: i64) -> Value {
    Value::Number(Number::from(n))
}

fn opt_num(n: &Option<Int>) -> Value {
    n.as_ref().map_or(Value::Null, num)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join(ns: &[Int]) -> String {
    let parts: Vec<String> = ns.iter().map(Int::to_string).collect();
    parts.join(",")
}

fn ideal_value(ideal: &MonomialIdeal) -> Value {
    json!({
        "dim": ideal.dim(),
        "generators": ideal
            .generators()
            .iter()
            .map(|g| Value::Array(g.coords().iter().map(|&c| small(c)).collect()))
            .collect::<Vec<_>>(),
    })
}

fn rees_value(r: &ReesData) -> Value {
    nums(r.integers())
}

pub fn cmd_rees(ideal: &MonomialIdeal) -> Result<Report, CliError> {
    let package: ReesPackage = rees_valuations(ideal);
    let integers: Vec<Int> = package.rees_integers().into_iter().map(Int::from).collect();
    let lcm = lcm_list(&integers).map_err(|e| CliError::Verification(e.to_string()))?;

    let mut text = format!(
        "ideal: {ideal}\nrees valuations: {}\n",
        package.valuations.len()
    );
    for v in &package.valuations {
        let _ = writeln!(
            text,
            "  normal {}  rees integer {}",
            v.normal, v.rees_integer
        );
    }
    let _ = writeln!(text, "lcm of rees integers: {lcm}");

    let payload = json!({
        "valuations": package
            .valuations
            .iter()
            .map(|v| json!({
                "normal": v.normal.coords().iter().map(|&c| small(c)).collect::<Vec<_>>(),
                "rees_integer": small(v.rees_integer),
            }))
            .collect::<Vec<_>>(),
        "rees_integers": nums(&integers),
        "lcm": num(&lcm),
    });
    Ok(Report::new(
        "rees",
        json!({ "ideal": ideal_value(ideal) }),
        payload,
        text,
    ))
}

fn itoh_payload(report: &ItohReport) -> Value {
    json!({
        "k": num(&report.k),
        "valuations": report
            .per_valuation
            .iter()
            .map(|v| json!({
                "rees_integer": num(&v.rees_integer),
                "degree": num(&v.tower_degree),
                "ramification": num(&v.ramification),
                "residue_degree": num(&v.residue_degree),
                "root_exponent": num(&v.h),
            }))
            .collect::<Vec<_>>(),
        "root_exponents": nums(report.root_exponents().exponents()),
        "radical": report.is_radical,
        "least_radical_k": num(&report.least_radical_k),
    })
}

pub fn cmd_itoh(rees: &ReesData, k: &Int) -> Result<Report, CliError> {
    let report = itoh_structure(rees, k)?;
    // Errors out if the four radicality tests disagree.
    radicality_equivalence(rees, k)?;
    let h: SemilocalIdeal = report.root_exponents();

    let mut text = format!("rees integers: ({})\nk: {k}\n", join(rees.integers()));
    for (j, v) in report.per_valuation.iter().enumerate() {
        let _ = writeln!(
            text,
            "  V{}: e={}  degree {}, ramification {}, residue degree {}, u^(1/k) exponent {}",
            j + 1,
            v.rees_integer,
            v.tower_degree,
            v.ramification,
            v.residue_degree,
            v.h
        );
    }
    let _ = writeln!(text, "h: {h}");
    let _ = writeln!(text, "radical: {}", yes_no(report.is_radical));
    let _ = writeln!(text, "least radical k: {}", report.least_radical_k);

    Ok(Report::new(
        "itoh",
        json!({ "rees": rees_value(rees), "k": num(k) }),
        itoh_payload(&report),
        text,
    ))
}

fn step_value(step: &ExtensionStep) -> Value {
    json!({
        "degree": num(&step.degree),
        "ramification": num(&step.ramification),
        "residue_degree": num(&step.residue_degree),
        "no_splitting": step.no_splitting,
    })
}

pub fn cmd_tower(e: &Int, k: &Int, oracle: bool) -> Result<Report, CliError> {
    let step = general_k_extension(e, k).map_err(|err| CliError::Input(err.to_string()))?;
    let fundamental = check_fundamental(&step);
    let mut text = format!(
        "e: {e}\nk: {k}\ndegree {}, ramification {}, residue degree {}\nfundamental equality: {}\n",
        step.degree,
        step.ramification,
        step.residue_degree,
        yes_no(fundamental.equality_holds)
    );
    let mut payload = Map::new();
    payload.insert("extension".into(), step_value(&step));
    payload.insert(
        "fundamental_equality".into(),
        Value::Bool(fundamental.equality_holds),
    );

    let mut agree = true;
    if oracle {
        let model = PuiseuxModel::new(e.clone(), k.clone())
            .map_err(|err| CliError::Input(err.to_string()))?;
        let found =
            oracle_extension(&model).map_err(|err| CliError::Verification(err.to_string()))?;
        agree = found.ramification == step.ramification
            && found.residue_degree == step.residue_degree
            && found.degree == step.degree;
        let _ = writeln!(
            text,
            "oracle: degree {}, ramification {}, residue degree {}\nagreement: {}",
            found.degree,
            found.ramification,
            found.residue_degree,
            yes_no(agree)
        );
        payload.insert(
            "oracle".into(),
            json!({
                "degree": num(&found.degree),
                "ramification": num(&found.ramification),
                "residue_degree": num(&found.residue_degree),
                "agreement": agree,
            }),
        );
    }
    let mut report = Report::new(
        "tower",
        json!({ "e": num(e), "k": num(k), "oracle": oracle }),
        Value::Object(payload),
        text,
    );
    if !agree || !fundamental.consistent {
        report.verification_failed = true;
        report
            .warnings
            .push("value-group oracle and tower calculus disagree".into());
    }
    Ok(report)
}

fn system_value(system: &ConsistentSystem) -> Value {
    json!({
        "family": system.family.as_str(),
        "m": num(&system.m),
        "per_valuation": system
            .per_valuation
            .iter()
            .map(|entries| entries
                .iter()
                .map(|e| json!({
                    "residue_degree": num(&e.residue_degree),
                    "ramification": num(&e.ramification),
                    "multiplicity": num(&e.multiplicity),
                }))
                .collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

fn realization_value(r: &RealizationReport) -> Value {
    json!({
        "extension_degree": num(&r.extension_degree),
        "maximal_ideal_count": num(&r.maximal_ideal_count),
        "extended_ideal_exponents": nums(r.extended_ideal_exponents.exponents()),
        "residue_degrees": nums(&r.residue_degrees),
        "jacobson_exponent": opt_num(&r.jacobson_exponent),
        "uniform_rees_integer": opt_num(&r.uniform_rees_integer),
    })
}

fn write_realization(text: &mut String, r: &RealizationReport) {
    let _ = writeln!(text, "extension degree: {}", r.extension_degree);
    let _ = writeln!(text, "maximal ideals: {}", r.maximal_ideal_count);
    let _ = writeln!(
        text,
        "extended ideal exponents: {}",
        r.extended_ideal_exponents
    );
    match &r.uniform_rees_integer {
        Some(u) => {
            let _ = writeln!(text, "uniform rees integer: {u}");
        }
        None => text.push_str("uniform rees integer: none\n"),
    }
}

pub fn cmd_krull(
    rees: &ReesData,
    k: &Int,
    family: SystemFamily,
    ctx: &RealizationContext,
) -> Result<Report, CliError> {
    let system = build_system(family, rees, k)?;
    let decision = realizability_gate(&system, ctx)?;
    let realization = realize_plan(&system, rees)?;

    let mut text = format!(
        "rees integers: ({})\nk: {k}\nfamily: {family}\nm: {}\n",
        join(rees.integers()),
        system.m
    );
    for (j, entries) in system.per_valuation.iter().enumerate() {
        let parts: Vec<String> = entries
            .iter()
            .map(|e| {
                format!(
                    "(f={}, e={}) x{}",
                    e.residue_degree, e.ramification, e.multiplicity
                )
            })
            .collect();
        let _ = writeln!(text, "  S{}: {}", j + 1, parts.join(", "));
    }
    text.push_str("consistent: yes\n");
    let decision_value = match decision {
        Decision::Realizable(c) => {
            let _ = writeln!(text, "realizability: realizable via ({})", c.tag());
            json!({ "verdict": "realizable", "condition": c.tag() })
        }
        Decision::Undecided => {
            text.push_str("realizability: undecided\n");
            json!({ "verdict": "undecided", "condition": Value::Null })
        }
    };
    write_realization(&mut text, &realization);

    let payload = json!({
        "system": system_value(&system),
        "consistent": true,
        "decision": decision_value,
        "realization": realization_value(&realization),
    });
    let input = json!({
        "rees": rees_value(rees),
        "k": num(k),
        "family": family.as_str(),
        "has_extra_dvr": ctx.has_extra_dvr,
        "has_separable_approximation": ctx.has_separable_approximation,
        "alg_closed_residue": ctx.residue_fields_algebraically_closed,
    });
    let mut report = Report::new("krull", input, payload, text);
    if decision == Decision::Undecided {
        report.warnings.push(
            "no sufficient realizability condition applies; realizability is undecided".into(),
        );
    }
    report.warnings.extend(system_warnings(&system, ctx));
    Ok(report)
}

fn direct_sum_value(rep: &DirectSumReport) -> Value {
    json!({
        "e": num(&rep.e),
        "lcm": num(&rep.lcm),
        "rees_union": nums(&rep.rees_union),
        "uniform_rees_integer": num(&rep.uniform_rees_integer),
        "components": rep
            .components
            .iter()
            .map(|c| match c {
                ComponentOutcome::Planned { rees, system, report } => json!({
                    "status": "planned",
                    "rees": rees_value(rees),
                    "k": num(&(&rep.e / rees.lcm())),
                    "system": system_value(system),
                    "realization": realization_value(report),
                }),
                ComponentOutcome::Passthrough => json!({ "status": "passthrough" }),
            })
            .collect::<Vec<_>>(),
    })
}

pub fn cmd_co2(plan: &ComponentPlan, e: &Int) -> Result<Report, CliError> {
    let rep = cor_co2_plan(plan, e)?;
    let mut text = format!("e: {e}\nlcm: {}\n", rep.lcm);
    for (i, c) in rep.components.iter().enumerate() {
        match c {
            ComponentOutcome::Planned { rees, report, .. } => {
                let _ = writeln!(
                    text,
                    "  component {}: rees ({}), degree {}, maximal ideals {}, uniform rees integer {}",
                    i + 1,
                    join(rees.integers()),
                    report.extension_degree,
                    report.maximal_ideal_count,
                    report
                        .uniform_rees_integer
                        .as_ref()
                        .map_or_else(|| "none".to_string(), Int::to_string)
                );
            }
            ComponentOutcome::Passthrough => {
                let _ = writeln!(text, "  component {}: passthrough", i + 1);
            }
        }
    }
    let _ = writeln!(
        text,
        "rees integers of the sum: ({})",
        join(&rep.rees_union)
    );
    let _ = writeln!(text, "uniform rees integer: {}", rep.uniform_rees_integer);

    let input = json!({
        "components": plan
            .components
            .iter()
            .map(|c| json!({ "rees": nums(&c.rees_integers), "participates": c.participates }))
            .collect::<Vec<_>>(),
        "e": num(e),
    });
    Ok(Report::new("co2", input, direct_sum_value(&rep), text))
}

pub fn cmd_closure(ideal: &MonomialIdeal, k: i64) -> Result<Report, CliError> {
    let closure = integral_closure_power(ideal, k).map_err(|e| CliError::Input(e.to_string()))?;
    let mut text = format!("ideal: {ideal}\nk: {k}\nintegral closure of I^k: {closure}\n");
    for g in closure.generators().iter().rev() {
        let _ = writeln!(text, "  {}  {}", g.monomial(), g);
    }
    Ok(Report::new(
        "closure",
        json!({ "ideal": ideal_value(ideal), "k": small(k) }),
        json!({ "generators": ideal_value(&closure)["generators"].clone() }),
        text,
    ))
}
