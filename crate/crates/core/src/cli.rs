//! The `exact2` command line: load JSON artifacts, run one operation and
//! emit a schema-versioned report.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails,
//! 2 for invalid input (including usage errors), 3 when a size bound is hit.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::sync::Arc;

use clap::builder::{PossibleValuesParser, TypedValueParser};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::abcat::json::{ring_from_value, ring_hom_from_value, ring_hom_to_value, ring_to_value, RING_HOM_SCHEMA, RING_SCHEMA};
use crate::abcat::{ab_effectivity, ab_quotient, counterexample_report};
use crate::factorization::{classify, factor, orthogonal};
use crate::fincat::json::{
    category_from_value, category_to_value, from_value_at, functor_to_value, nat_from_value, parse_value,
    to_canonical_string, to_value, FunctorDoc, CATEGORY_SCHEMA, FUNCTOR_SCHEMA, NAT_SCHEMA,
};
use crate::fincat::{FinCategory, FinFunctor, ValidationReport};
use crate::internal_cat::json::{
    internal_from_value, internal_functor_from_value, internal_functor_to_value, internal_pair_from_value,
    internal_to_value, INTERNAL_FUNCTOR_SCHEMA, INTERNAL_PAIR_SCHEMA, INTERNAL_SCHEMA,
};
use crate::internal_cat::{internal_classify, internal_factor, internal_ff_coequalizer, InternalFunctor};
use crate::kernels::json::{kernel_from_value, kernel_to_value, KERNEL_SCHEMA};
use crate::kernels::{kernel, KernelData};
use crate::quotients::{check_effective, is_congruence, quotient};
use crate::suite::{run_one, run_suite, Mutation, SuiteConfig, DEFAULT_SEED, SuiteReport};
use crate::{Error, SizeBound, System};

pub const REPORT_SCHEMA: &str = "exact2-report/v1";

#[derive(Debug, Parser)]
#[command(name = "exact2", version, about = "Kernels, quotients and effectivity checks for finite categories")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Enumeration limit in objects (morphisms get five times as much);
    /// 0 disables enumeration. Defaults to EXACT2_SIZE_BOUND, then 6.
    #[arg(long, global = true)]
    pub size_bound: Option<usize>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

fn system_arg() -> impl TypedValueParser<Value = System> {
    PossibleValuesParser::new(System::ALL.map(System::as_str))
        .map(|s| s.parse::<System>().expect("possible values are systems"))
}

fn mutation_arg() -> impl TypedValueParser<Value = Mutation> {
    PossibleValuesParser::new(Mutation::ALL.map(Mutation::as_str))
        .map(|s| s.parse::<Mutation>().expect("possible values are mutations"))
}

#[derive(Debug, Args)]
pub struct InputArg {
    /// JSON document to read; `-` reads stdin.
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the laws of any supported document.
    Validate(InputArg),
    /// Class membership flags of a functor.
    Classify(InputArg),
    /// Factor a functor through the left and right classes of a system.
    Factorize {
        #[arg(long, value_parser = system_arg())]
        system: System,
        #[command(flatten)]
        input: InputArg,
    },
    /// Kernel data of a functor.
    Kernel {
        #[arg(long, value_parser = system_arg())]
        system: System,
        #[command(flatten)]
        input: InputArg,
    },
    /// Test kernel data against the congruence conditions of its system.
    CheckCongruence {
        #[arg(long, value_parser = system_arg())]
        system: Option<System>,
        #[command(flatten)]
        input: InputArg,
    },
    /// Quotient of a congruence.
    Quotient {
        #[arg(long, value_parser = system_arg())]
        system: Option<System>,
        #[command(flatten)]
        input: InputArg,
    },
    /// Whether a congruence (or the kernel of a functor) is effective.
    CheckEffective {
        #[arg(long, value_parser = system_arg())]
        system: Option<System>,
        #[command(flatten)]
        input: InputArg,
    },
    /// Orthogonality of `f` and `g` given as `{"f": .., "g": ..}`.
    Orthogonal(InputArg),
    /// Quotients of kernels of ring homomorphisms.
    Abcat {
        #[command(subcommand)]
        command: AbcatCommand,
    },
    /// Internal categories in finite sets and finite presheaves.
    Internal {
        #[command(subcommand)]
        command: InternalCommand,
    },
    /// The property battery.
    Suite {
        /// Inject a broken law; the matching criterion should then fail.
        #[arg(long, value_parser = mutation_arg())]
        mutation: Option<Mutation>,
        /// Run a single criterion.
        #[arg(long)]
        criterion: Option<u32>,
    },
}

#[derive(Debug, Subcommand)]
pub enum AbcatCommand {
    /// The F2 -> F4 counterexample.
    Demo,
    /// Quotient of the kernel of a ring homomorphism.
    Quotient {
        #[arg(long, value_parser = system_arg())]
        system: System,
        #[command(flatten)]
        input: InputArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum InternalCommand {
    /// Factor an internal functor.
    Factorize {
        #[arg(long, value_parser = system_arg())]
        system: System,
        #[command(flatten)]
        input: InputArg,
    },
    /// Coequalizer of a fully faithful internal equivalence relation.
    Coeq(InputArg),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    CheckFailed,
    InvalidInput,
    SizeBound,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::CheckFailed => 1,
            Status::InvalidInput => 2,
            Status::SizeBound => 3,
        }
    }

    fn from_check(ok: bool) -> Status {
        if ok {
            Status::Ok
        } else {
            Status::CheckFailed
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub size_bound: SizeBound,
    pub status: Status,
    pub result: Value,
}

impl Report {
    pub fn to_value(&self) -> Value {
        to_value(self)
    }

    pub fn render(&self, format: Format) -> String {
        let v = self.to_value();
        match format {
            Format::Json => to_canonical_string(&v) + "\n",
            Format::Text => {
                let mut out = String::new();
                render_text(&mut out, &v, 0);
                out
            }
        }
    }
}

type Done = (Status, Value);

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate(_) => "validate",
            Command::Classify(_) => "classify",
            Command::Factorize { .. } => "factorize",
            Command::Kernel { .. } => "kernel",
            Command::CheckCongruence { .. } => "check-congruence",
            Command::Quotient { .. } => "quotient",
            Command::CheckEffective { .. } => "check-effective",
            Command::Orthogonal(_) => "orthogonal",
            Command::Abcat { command: AbcatCommand::Demo } => "abcat demo",
            Command::Abcat { command: AbcatCommand::Quotient { .. } } => "abcat quotient",
            Command::Internal { command: InternalCommand::Factorize { .. } } => "internal factorize",
            Command::Internal { command: InternalCommand::Coeq(_) } => "internal coeq",
            Command::Suite { .. } => "suite",
        }
    }
}

/// Run a parsed command. Never panics on bad input; every failure is a report.
pub fn execute(cli: &Cli) -> Report {
    let bound = match cli.global.size_bound {
        Some(n) => SizeBound::with_enumeration(n),
        None => SizeBound::from_env(),
    };
    let (status, result) = dispatch(&cli.command, &bound, cli.global.seed).unwrap_or_else(|e| error_report(&e));
    Report {
        schema: REPORT_SCHEMA,
        command: cli.command.name().to_string(),
        size_bound: bound,
        status,
        result,
    }
}

/// Parse `args` (program name first), execute, write the report and return
/// the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let report = execute(&cli);
    let text = report.render(cli.global.format);
    let written = match &cli.global.output {
        Some(path) => std::fs::write(path, text.as_bytes()),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("exact2: cannot write report: {e}");
        return 2;
    }
    report.status.exit_code()
}

fn error_report(e: &Error) -> Done {
    let status = match e {
        Error::SizeBound { .. } => Status::SizeBound,
        Error::SegalFailure { .. } => Status::CheckFailed,
        _ => Status::InvalidInput,
    };
    let kind = match e {
        Error::SizeBound { .. } => "size-bound",
        Error::NotACongruence { .. } => "not-a-congruence",
        Error::NotAnEquivalenceRelation(_) => "not-an-equivalence-relation",
        Error::NotFullyFaithful(_) => "not-fully-faithful",
        Error::NotFFEquivalenceRelation(_) => "not-ff-equivalence-relation",
        Error::SegalFailure { .. } => "segal-failure",
        Error::InvalidInput { .. } => "invalid-input",
        Error::Precondition(_) => "precondition",
        Error::Io(_) => "io",
    };
    let mut out = Map::new();
    out.insert("error".into(), json!(kind));
    out.insert("message".into(), json!(e.to_string()));
    match e {
        Error::InvalidInput { path, .. } => {
            out.insert("path".into(), json!(path));
        }
        Error::NotACongruence { verdict, .. } => {
            out.insert("verdict".into(), to_value(verdict));
        }
        Error::SizeBound { what, actual, limit } => {
            out.insert("what".into(), json!(what));
            out.insert("actual".into(), json!(actual));
            out.insert("limit".into(), json!(limit));
        }
        _ => {}
    }
    (status, Value::Object(out))
}

fn read_input(input: &InputArg) -> Result<Value, Error> {
    let mut text = String::new();
    if input.input.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(&input.input)?;
    }
    parse_value(&text)
}

/// Report for structurally invalid input; `None` when `report` is clean.
fn invalid_structure(what: &str, report: ValidationReport) -> Option<Done> {
    (!report.is_valid()).then(|| {
        (
            Status::InvalidInput,
            json!({
                "error": "invalid-input",
                "message": format!("{what} violates its laws"),
                "violations": to_value(&report),
            }),
        )
    })
}

fn functor_report(f: &FinFunctor) -> ValidationReport {
    let mut r = ValidationReport::default();
    r.extend_prefixed("source", f.source().validate());
    r.extend_prefixed("target", f.target().validate());
    r.extend_prefixed("functor", f.validate());
    r
}

fn kernel_categories(k: &KernelData) -> Vec<(&'static str, &Arc<FinCategory>)> {
    match k {
        KernelData::Bo(b) => vec![("X1", &b.x1), ("X2", &b.x2), ("X3", &b.x3)],
        KernelData::So(s) => vec![("X1", &s.bo.x1), ("X2", &s.bo.x2), ("X3", &s.bo.x3), ("X2p", &s.x2p)],
        KernelData::Bof(b) => vec![("X1", &b.x1), ("X2", &b.x2)],
    }
}

fn kernel_report(k: &KernelData) -> ValidationReport {
    let mut r = ValidationReport::default();
    for (name, c) in kernel_categories(k) {
        r.extend_prefixed(name, c.validate());
    }
    r.extend_prefixed("kernel", k.validate());
    r
}

fn internal_functor_report(f: &InternalFunctor) -> ValidationReport {
    let mut r = ValidationReport::default();
    r.extend_prefixed("source", f.source.validate());
    r.extend_prefixed("target", f.target.validate());
    r.extend_prefixed("functor", f.validate());
    r
}

fn load_functor_at(v: &Value, path: &str) -> Result<FinFunctor, Error> {
    let prefix = if path.is_empty() { String::new() } else { format!("{path}.") };
    from_value_at::<FunctorDoc>(v, path)?.to_functor(&prefix)
}

/// A functor whose categories and functoriality have been checked.
fn valid_functor(v: &Value, path: &str) -> Result<Result<FinFunctor, Done>, Error> {
    let f = load_functor_at(v, path)?;
    let what = if path.is_empty() { "functor".to_string() } else { format!("functor {path}") };
    Ok(match invalid_structure(&what, functor_report(&f)) {
        Some(done) => Err(done),
        None => Ok(f),
    })
}

/// Kernel data checked for structural validity and, when `system` is given,
/// for agreement with the document.
fn valid_kernel(v: &Value, system: Option<System>) -> Result<Result<KernelData, Done>, Error> {
    let k = kernel_from_value(v)?;
    if let Some(s) = system {
        if s != k.system() {
            return Err(Error::InvalidInput {
                path: "system".into(),
                message: format!("document is {} kernel data, --system says {s}", k.system()),
            });
        }
    }
    Ok(match invalid_structure("kernel data", kernel_report(&k)) {
        Some(done) => Err(done),
        None => Ok(k),
    })
}

macro_rules! valid {
    ($e:expr) => {
        match $e? {
            Ok(x) => x,
            Err(done) => return Ok(done),
        }
    };
}

fn factorisation_value(f: &FinFunctor, system: System) -> Result<Done, Error> {
    let fz = factor(f, system)?;
    let (e, m) = (crate::factorization::classify_direct(&fz.e), crate::factorization::classify_direct(&fz.m));
    let composite = fz.composite() == *f;
    let ok = composite && e.in_left_class(system) && m.in_right_class(system);
    Ok((
        Status::from_check(ok),
        json!({
            "system": system,
            "middle": category_to_value(&fz.middle),
            "e": functor_to_value(&fz.e),
            "m": functor_to_value(&fz.m),
            "composite_equals_input": composite,
            "e_in_left_class": e.in_left_class(system),
            "m_in_right_class": m.in_right_class(system),
        }),
    ))
}

fn quotient_value(q: &crate::quotients::Quotient) -> Value {
    json!({
        "system": q.system,
        "category": category_to_value(q.category()),
        "q": functor_to_value(&q.q),
    })
}

/// Kernel data from a `kernel/v1` document, or the kernel of a functor.
fn kernel_or_functor(v: &Value, system: Option<System>, bound: &SizeBound) -> Result<Result<KernelData, Done>, Error> {
    if document_kind(v)? == Kind::Functor {
        let system = system.ok_or_else(|| Error::InvalidInput {
            path: "system".into(),
            message: "--system is required when the input is a functor".into(),
        })?;
        return Ok(match valid_functor(v, "")? {
            Ok(f) => Ok(kernel(&f, system, bound)?),
            Err(done) => Err(done),
        });
    }
    valid_kernel(v, system)
}

fn dispatch(cmd: &Command, bound: &SizeBound, seed: u64) -> Result<Done, Error> {
    match cmd {
        Command::Validate(input) => validate(&read_input(input)?),
        Command::Classify(input) => {
            let f = valid!(valid_functor(&read_input(input)?, ""));
            let c = classify(&f, bound);
            let ok = c.cross_check.agrees;
            Ok((Status::from_check(ok), to_value(&c)))
        }
        Command::Factorize { system, input } => {
            let f = valid!(valid_functor(&read_input(input)?, ""));
            factorisation_value(&f, *system)
        }
        Command::Kernel { system, input } => {
            let f = valid!(valid_functor(&read_input(input)?, ""));
            let k = kernel(&f, *system, bound)?;
            let report = k.validate();
            Ok((
                Status::from_check(report.is_valid()),
                json!({ "kernel": kernel_to_value(&k), "violations": to_value(&report) }),
            ))
        }
        Command::CheckCongruence { system, input } => {
            let k = valid!(kernel_or_functor(&read_input(input)?, *system, bound));
            let verdict = is_congruence(&k);
            Ok((Status::from_check(verdict.is_congruence), to_value(&verdict)))
        }
        Command::Quotient { system, input } => {
            let k = valid!(kernel_or_functor(&read_input(input)?, *system, bound));
            let q = quotient(&k)?;
            let report = q.verify(&k)?;
            let mut v = quotient_value(&q);
            v["violations"] = to_value(&report);
            Ok((Status::from_check(report.is_valid()), v))
        }
        Command::CheckEffective { system, input } => {
            let k = valid!(kernel_or_functor(&read_input(input)?, *system, bound));
            let r = check_effective(&k, bound)?;
            let levels: Vec<&str> = r
                .iso_witness
                .iter()
                .flat_map(|w| w.levels.iter().map(|(n, _)| n.as_str()))
                .collect();
            Ok((
                Status::from_check(r.is_effective()),
                json!({
                    "system": r.system,
                    "effective": r.is_effective(),
                    "quotient": quotient_value(&r.quotient),
                    "recomputed_kernel": kernel_to_value(&r.recomputed_kernel),
                    "iso_levels": levels,
                    "failures": to_value(&r.failures),
                }),
            ))
        }
        Command::Orthogonal(input) => {
            let v = read_input(input)?;
            for key in ["f", "g"] {
                if v.get(key).is_none() {
                    return Err(Error::InvalidInput {
                        path: key.into(),
                        message: "expected an object with functors \"f\" and \"g\"".into(),
                    });
                }
            }
            let f = valid!(valid_functor(&v["f"], "f"));
            let g = valid!(valid_functor(&v["g"], "g"));
            let o = orthogonal(&f, &g, bound)?;
            Ok((Status::from_check(o.orthogonal), to_value(&o)))
        }
        Command::Abcat { command } => match command {
            AbcatCommand::Demo => {
                let r = counterexample_report()?;
                Ok((Status::from_check(r.reproduces()), to_value(&r)))
            }
            AbcatCommand::Quotient { system, input } => {
                let phi = ring_hom_from_value(&read_input(input)?)?;
                let mut report = ValidationReport::default();
                report.extend_prefixed("source", phi.source.validate());
                report.extend_prefixed("target", phi.target.validate());
                report.extend_prefixed("hom", phi.validate());
                if let Some(done) = invalid_structure("ring homomorphism", report) {
                    return Ok(done);
                }
                let q = ab_quotient(&phi, *system)?;
                let theta: Map<String, Value> = phi
                    .target
                    .elements()
                    .map(|s| (phi.target.name(s).to_string(), json!(q.ring.name(q.theta[s]))))
                    .collect();
                Ok((
                    Status::Ok,
                    json!({
                        "system": q.system,
                        "presentation": q.presentation,
                        "ring": ring_to_value(&q.ring),
                        "psi": ring_hom_to_value(&q.psi),
                        "theta": theta,
                        "ambient_size": q.ambient_size,
                        "ideal_size": q.ideal_size,
                        "unit_condition_automatic": q.unit_condition_automatic,
                        "effectivity": to_value(&ab_effectivity(&phi, &q)),
                    }),
                ))
            }
        },
        Command::Internal { command } => match command {
            InternalCommand::Factorize { system, input } => {
                let f = internal_functor_from_value(&read_input(input)?)?;
                if let Some(done) = invalid_structure("internal functor", internal_functor_report(&f)) {
                    return Ok(done);
                }
                let fz = internal_factor(&f, *system);
                let (e, m) = (internal_classify(&fz.e), internal_classify(&fz.m));
                let composite = fz.composes_to(&f);
                let ok = composite && e.in_left_class(*system) && m.in_right_class(*system);
                Ok((
                    Status::from_check(ok),
                    json!({
                        "system": system,
                        "middle": internal_to_value(&fz.middle),
                        "e": internal_functor_to_value(&fz.e),
                        "m": internal_functor_to_value(&fz.m),
                        "e_classification": to_value(&e),
                        "m_classification": to_value(&m),
                        "composite_equals_input": composite,
                    }),
                ))
            }
            InternalCommand::Coeq(input) => {
                let (s, t) = internal_pair_from_value(&read_input(input)?)?;
                let mut report = internal_functor_report(&s);
                report.extend_prefixed("t", t.validate());
                if let Some(done) = invalid_structure("internal pair", report) {
                    return Ok(done);
                }
                let c = internal_ff_coequalizer(&s, &t)?;
                let ok = c.kernel_pair_recovered && c.q_fully_faithful && c.segal.iter().all(|x| x.invertible);
                Ok((
                    Status::from_check(ok),
                    json!({
                        "quotient": internal_to_value(&c.quotient),
                        "q": internal_functor_to_value(&c.q),
                        "segal": to_value(&c.segal),
                        "q_fully_faithful": c.q_fully_faithful,
                        "kernel_pair_recovered": c.kernel_pair_recovered,
                    }),
                ))
            }
        },
        Command::Suite { mutation, criterion } => {
            let cfg = SuiteConfig {
                seed,
                bound: *bound,
                mutation: *mutation,
            };
            let report = match criterion {
                None => run_suite(&cfg),
                Some(id) => {
                    let one = run_one(&cfg, *id).ok_or_else(|| Error::InvalidInput {
                        path: "criterion".into(),
                        message: format!("no criterion {id}"),
                    })?;
                    SuiteReport::single(&cfg, one)
                }
            };
            Ok((Status::from_check(report.all_pass()), to_value(&report)))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Category,
    Functor,
    Nat,
    Kernel,
    Internal,
    InternalFunctor,
    InternalPair,
    Ring,
    RingHom,
}

impl Kind {
    const SCHEMAS: [(&'static str, Kind); 9] = [
        (CATEGORY_SCHEMA, Kind::Category),
        (FUNCTOR_SCHEMA, Kind::Functor),
        (NAT_SCHEMA, Kind::Nat),
        (KERNEL_SCHEMA, Kind::Kernel),
        (INTERNAL_SCHEMA, Kind::Internal),
        (INTERNAL_FUNCTOR_SCHEMA, Kind::InternalFunctor),
        (INTERNAL_PAIR_SCHEMA, Kind::InternalPair),
        (RING_SCHEMA, Kind::Ring),
        (RING_HOM_SCHEMA, Kind::RingHom),
    ];

    fn schema(self) -> &'static str {
        Kind::SCHEMAS.iter().find(|(_, k)| *k == self).map(|(s, _)| *s).expect("every kind has a schema")
    }
}

/// The document type, from `schema` when present and otherwise from the keys.
fn document_kind(v: &Value) -> Result<Kind, Error> {
    let obj = v.as_object().ok_or_else(|| Error::InvalidInput {
        path: String::new(),
        message: "expected a JSON object".into(),
    })?;
    if let Some(s) = obj.get("schema").and_then(Value::as_str) {
        return Kind::SCHEMAS
            .iter()
            .find(|(name, _)| *name == s)
            .map(|(_, k)| *k)
            .ok_or_else(|| Error::InvalidInput {
                path: "schema".into(),
                message: format!("unknown schema {s:?}"),
            });
    }
    let has = |k: &str| obj.contains_key(k);
    Ok(if has("system") {
        Kind::Kernel
    } else if has("components") {
        Kind::Nat
    } else if has("s") && has("t") {
        Kind::InternalPair
    } else if has("f0") {
        Kind::InternalFunctor
    } else if has("c0") {
        Kind::Internal
    } else if has("source") {
        if v["source"].get("elements").is_some() {
            Kind::RingHom
        } else {
            Kind::Functor
        }
    } else if has("elements") {
        Kind::Ring
    } else if has("objects") {
        Kind::Category
    } else {
        return Err(Error::InvalidInput {
            path: String::new(),
            message: "unrecognised document".into(),
        });
    })
}

fn validate(v: &Value) -> Result<Done, Error> {
    let kind = document_kind(v)?;
    let report = match kind {
        Kind::Category => category_from_value(v)?.validate(),
        Kind::Functor => functor_report(&load_functor_at(v, "")?),
        Kind::Nat => {
            let n = nat_from_value(v)?;
            let mut r = functor_report(n.source());
            r.extend_prefixed("target functor", n.target().validate());
            r.extend_prefixed("transformation", n.validate());
            r
        }
        Kind::Kernel => kernel_report(&kernel_from_value(v)?),
        Kind::Internal => internal_from_value(v)?.validate(),
        Kind::InternalFunctor => internal_functor_report(&internal_functor_from_value(v)?),
        Kind::InternalPair => {
            let (s, t) = internal_pair_from_value(v)?;
            let mut r = internal_functor_report(&s);
            r.extend_prefixed("t", t.validate());
            r
        }
        Kind::Ring => ring_from_value(v)?.validate(),
        Kind::RingHom => {
            let h = ring_hom_from_value(v)?;
            let mut r = ValidationReport::default();
            r.extend_prefixed("source", h.source.validate());
            r.extend_prefixed("target", h.target.validate());
            r.extend_prefixed("hom", h.validate());
            r
        }
    };
    Ok((
        Status::from_check(report.is_valid()),
        json!({
            "kind": kind.schema(),
            "valid": report.is_valid(),
            "violations": to_value(&report),
        }),
    ))
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.is_empty() => Some("[]".into()),
        Value::Object(o) if o.is_empty() => Some("{}".into()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

/// Indented `key: value` lines; nested arrays are listed with `-`.
fn render_text(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(out, x, depth + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render_text(out, x, depth + 1);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}
