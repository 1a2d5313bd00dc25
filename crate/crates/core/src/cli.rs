//! The `mckay` command-line front end.
//!
//! Exit codes: 0 on success, 2 for input or precondition errors, 3 when an
//! internal consistency check fails.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::criteria::{
    generated_by_pseudo_reflections, generated_by_symplectic_reflections, passes_pure_codim2,
    CriteriaError, ReflectionGeneration, Verdict,
};
use crate::epoly::EPoly;
use crate::group_input::{load_group, InputError};
use crate::hilbcurve::{
    check_goettsche_vs_strata, goettsche_series, hilb_poincare_strata, CurveError, CurveVerdict,
};
use crate::matgroup::{GroupError, MatrixGroup, DEFAULT_CLOSURE_CAP};
use crate::matrix::CycMatrix;
use crate::mckay::{euler_tpn, hodge_tpn_detail, stringy_e_linear_symplectic, McKayError};
use crate::series::TPoly;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "mckay",
    version,
    about = "Exact McKay-correspondence invariants"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Maximum group order explored by closure.
    #[arg(long, global = true, default_value_t = DEFAULT_CLOSURE_CAP)]
    pub cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Product,
    Strata,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Group structure.
    #[command(subcommand)]
    Group(GroupCommand),
    /// E-functions, Hodge numbers and Poincaré series.
    #[command(subcommand)]
    Compute(ComputeCommand),
    /// Necessary conditions and smoothness tests.
    #[command(subcommand)]
    Check(CheckCommand),
}

#[derive(Debug, Subcommand)]
pub enum GroupCommand {
    /// Order, element orders, class counts and scalar subgroup.
    Info {
        /// JSON file or `catalog:<name>`.
        #[arg(long)]
        group: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum ComputeCommand {
    /// Stringy E-function of C^{2n}/G for G in Sp(2n).
    Stringy {
        #[arg(long)]
        group: String,
        /// Replace G ⊂ GL(n) by its action on Cⁿ ⊕ (Cⁿ)* first.
        #[arg(long)]
        cotangent: bool,
    },
    /// Hodge numbers of a symplectic resolution of T*Pⁿ/G for G in SL(n+1).
    Tpn {
        #[arg(long)]
        group: String,
    },
    /// Poincaré polynomials of Hilbⁿ(T*Σ) for a genus-g curve.
    Hilb {
        #[arg(long)]
        genus: i64,
        /// Highest power of q.
        #[arg(long)]
        terms: i64,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
}

#[derive(Debug, Subcommand)]
pub enum CheckCommand {
    /// Pure-codimension-2 and symplectic-reflection conditions.
    Sympres {
        #[arg(long)]
        group: String,
        #[arg(long)]
        cotangent: bool,
    },
    /// Whether Cⁿ/G is smooth (G generated by pseudo-reflections).
    SmoothQuotient {
        #[arg(long)]
        group: String,
    },
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn input(message: impl ToString) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.to_string(),
        }
    }

    fn internal(message: impl ToString) -> Self {
        Self {
            code: EXIT_INTERNAL,
            message: message.to_string(),
        }
    }
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        match e {
            InputError::Group(g) => g.into(),
            e => Self::input(e),
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::NonIntegerMultiplicity { .. } => Self::internal(e),
            e => Self::input(e),
        }
    }
}

impl From<McKayError> for CliError {
    fn from(e: McKayError) -> Self {
        match e {
            McKayError::Group(g) => g.into(),
            e @ McKayError::InconsistentLifts { .. } => Self::internal(e),
            e => Self::input(e),
        }
    }
}

impl From<CriteriaError> for CliError {
    fn from(e: CriteriaError) -> Self {
        match e {
            CriteriaError::Group(g) => g.into(),
            e => Self::input(e),
        }
    }
}

impl From<CurveError> for CliError {
    fn from(e: CurveError) -> Self {
        Self::input(e)
    }
}

/// Result of one command: a JSON document, its text rendering, and the
/// exit code to report.
#[derive(Debug)]
pub struct Report {
    pub json: Value,
    pub text: String,
    pub code: i32,
}

fn report(
    command: &str,
    input_summary: Value,
    result: Value,
    extra: Vec<(&str, Value)>,
    text: String,
) -> Report {
    let mut doc = Map::new();
    doc.insert("command".into(), json!(command));
    doc.insert("input_summary".into(), input_summary);
    doc.insert("result".into(), result);
    for (k, v) in extra {
        doc.insert(k.into(), v);
    }
    Report {
        json: Value::Object(doc),
        text,
        code: EXIT_OK,
    }
}

fn group_summary(reference: &str, group: &MatrixGroup) -> Value {
    json!({
        "group": reference,
        "order": group.order(),
        "size": group.dim(),
        "cyclotomic_order": group.field_order(),
    })
}

fn polynomial_json(e: &EPoly) -> Value {
    json!({
        "polynomial": e.to_json_terms(),
        "rendered": e.to_string(),
    })
}

/// `I`, `-I`, `(c)*I` for scalars, the entry list otherwise.
pub fn describe_matrix(m: &CycMatrix) -> String {
    match m.as_scalar() {
        Some(c) if c.is_one() => "I".to_owned(),
        Some(c) if (-&c).is_one() => "-I".to_owned(),
        Some(c) => format!("({c})*I"),
        None => m.to_string(),
    }
}

fn generation_text(what: &str, g: &ReflectionGeneration, order: usize) -> String {
    format!(
        "generated by {what}: {} ({} {what}, subgroup order {} of {order})",
        if g.generated { "YES" } else { "NO" },
        g.reflections.len(),
        g.subgroup_order,
    )
}

fn generation_json(g: &ReflectionGeneration) -> Value {
    json!({
        "generated": g.generated,
        "reflections": g.reflections,
        "subgroup_order": g.subgroup_order,
    })
}

fn group_info(reference: &str, cap: usize) -> Result<Report, CliError> {
    let group = load_group(reference, cap)?;
    let hist = group.element_order_histogram()?;
    let classes = group.class_count();
    let projective = group.projective_class_count();
    let scalars = group.scalar_subgroup().len();
    let mut text = String::new();
    writeln!(text, "order: {}", group.order()).unwrap();
    writeln!(text, "size: {}", group.dim()).unwrap();
    writeln!(text, "cyclotomic order: {}", group.field_order()).unwrap();
    let orders: Vec<String> = hist.iter().map(|(o, c)| format!("{o}:{c}")).collect();
    writeln!(text, "element orders: {}", orders.join(" ")).unwrap();
    writeln!(text, "conjugacy classes: {classes}").unwrap();
    writeln!(text, "projective classes: {projective}").unwrap();
    write!(text, "scalar subgroup order: {scalars}").unwrap();
    let hist_json: Map<String, Value> = hist
        .iter()
        .map(|(o, c)| (o.to_string(), json!(c)))
        .collect();
    Ok(report(
        "group info",
        group_summary(reference, &group),
        json!({
            "order": group.order(),
            "element_orders": hist_json,
            "classes": classes,
            "projective_classes": projective,
            "scalar_subgroup_order": scalars,
        }),
        vec![],
        text,
    ))
}

fn maybe_lift(group: MatrixGroup, cotangent: bool) -> MatrixGroup {
    if cotangent {
        group.cotangent_lift()
    } else {
        group
    }
}

fn compute_stringy(reference: &str, cotangent: bool, cap: usize) -> Result<Report, CliError> {
    let group = maybe_lift(load_group(reference, cap)?, cotangent);
    let e = stringy_e_linear_symplectic(&group)?;
    let euler = e.euler_number();
    let text = format!("E = {e}; Euler = {euler}");
    let mut summary = group_summary(reference, &group);
    summary["cotangent"] = json!(cotangent);
    Ok(report(
        "compute stringy",
        summary,
        polynomial_json(&e),
        vec![("euler", json!(euler.to_string()))],
        text,
    ))
}

fn compute_tpn(reference: &str, cap: usize) -> Result<Report, CliError> {
    let group = load_group(reference, cap)?;
    let detail = hodge_tpn_detail(&group)?;
    let euler = euler_tpn(&group)?;
    let direct = detail.polynomial.euler_number();
    if euler != direct {
        return Err(CliError::internal(format!(
            "Euler number mismatch: (n+1)c(G) = {euler}, E(-1,-1) = {direct}"
        )));
    }
    let mut text = String::new();
    writeln!(text, "n = {}", detail.n).unwrap();
    writeln!(text, "projective classes: {}", detail.classes.len()).unwrap();
    for c in &detail.classes {
        writeln!(
            text,
            "  element {:>4}  size {:>4}  k_i = {:?}",
            c.representative, c.size, c.multiplicities
        )
        .unwrap();
    }
    write!(text, "E = {}; Euler = {euler}", detail.polynomial).unwrap();
    let classes: Vec<Value> = detail
        .classes
        .iter()
        .map(|c| {
            json!({
                "representative": c.representative,
                "size": c.size,
                "multiplicities": c.multiplicities,
                "contribution": c.contribution.to_json_terms(),
            })
        })
        .collect();
    let mut summary = group_summary(reference, &group);
    summary["n"] = json!(detail.n);
    Ok(report(
        "compute tpn",
        summary,
        polynomial_json(&detail.polynomial),
        vec![
            ("euler", json!(euler.to_string())),
            ("classes", Value::Array(classes)),
        ],
        text,
    ))
}

fn tpoly_json(n: usize, p: &TPoly) -> Value {
    json!({
        "n": n,
        "coeffs": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "rendered": p.to_string(),
    })
}

fn compute_hilb(genus: i64, terms: i64, method: Method) -> Result<Report, CliError> {
    let product = match method {
        Method::Product | Method::Both => Some(goettsche_series(genus, terms)?),
        Method::Strata => None,
    };
    let strata = match method {
        Method::Strata | Method::Both => Some(
            (0..=terms.max(0))
                .map(|n| hilb_poincare_strata(n, genus))
                .collect::<Result<Vec<_>, _>>()?,
        ),
        Method::Product => None,
    };
    let series: Vec<TPoly> = match (&product, &strata) {
        (Some(p), _) => p.coeffs().to_vec(),
        (None, Some(s)) => s.clone(),
        (None, None) => unreachable!(),
    };
    let mut text = format!(
        "genus = {genus}, terms = {terms}, method = {}\n",
        match method {
            Method::Product => "product",
            Method::Strata => "strata",
            Method::Both => "both",
        }
    );
    for (n, p) in series.iter().enumerate() {
        writeln!(text, "q^{n}: {p}").unwrap();
    }
    let mut result = json!({
        "series": series.iter().enumerate().map(|(n, p)| tpoly_json(n, p)).collect::<Vec<_>>(),
    });
    let mut code = EXIT_OK;
    if method == Method::Both {
        match check_goettsche_vs_strata(genus, terms)? {
            CurveVerdict::Pass => {
                text.push_str("verdict: PASS");
                result["verdict"] = json!("pass");
            }
            CurveVerdict::Mismatch { n, product, strata } => {
                write!(
                    text,
                    "verdict: FAIL at q^{n}: product {product}, strata {strata}"
                )
                .unwrap();
                result["verdict"] = json!({
                    "mismatch": n,
                    "product": product.to_string(),
                    "strata": strata.to_string(),
                });
                code = EXIT_INTERNAL;
            }
        }
    } else {
        text.pop();
    }
    let mut r = report(
        "compute hilb",
        json!({"genus": genus, "terms": terms}),
        result,
        vec![],
        text,
    );
    r.code = code;
    Ok(r)
}

fn check_sympres(reference: &str, cotangent: bool, cap: usize) -> Result<Report, CliError> {
    let group = maybe_lift(load_group(reference, cap)?, cotangent);
    let verdict = passes_pure_codim2(&group)?;
    let generation = generated_by_symplectic_reflections(&group)?;
    let (line, codim_json) = match &verdict {
        Verdict::Pass => (
            "pure codimension 2: PASS".to_owned(),
            json!({"verdict": "pass"}),
        ),
        Verdict::Fail {
            witness,
            fixed_dimension,
            codimension,
        } => {
            let m = describe_matrix(group.element(*witness));
            (
                format!("pure codimension 2: FAIL: witness {m}, fixed codim {codimension}"),
                json!({
                    "verdict": "fail",
                    "witness": witness,
                    "witness_matrix": m,
                    "fixed_dimension": fixed_dimension,
                    "fixed_codim": codimension,
                }),
            )
        }
    };
    let text = format!(
        "{line}\n{}",
        generation_text("symplectic reflections", &generation, group.order())
    );
    let mut summary = group_summary(reference, &group);
    summary["cotangent"] = json!(cotangent);
    Ok(report(
        "check sympres",
        summary,
        json!({
            "verdict": {
                "pure_codim2": codim_json,
                "symplectic_reflections": generation_json(&generation),
            }
        }),
        vec![],
        text,
    ))
}

fn check_smooth(reference: &str, cap: usize) -> Result<Report, CliError> {
    let group = load_group(reference, cap)?;
    let generation = generated_by_pseudo_reflections(&group);
    let text = format!(
        "{}\nquotient is {}",
        generation_text("pseudo-reflections", &generation, group.order()),
        if generation.generated {
            "smooth"
        } else {
            "singular"
        }
    );
    Ok(report(
        "check smooth-quotient",
        group_summary(reference, &group),
        json!({
            "verdict": {
                "smooth": generation.generated,
                "pseudo_reflections": generation_json(&generation),
            }
        }),
        vec![],
        text,
    ))
}

pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Group(GroupCommand::Info { group }) => group_info(group, cli.cap),
        Command::Compute(ComputeCommand::Stringy { group, cotangent }) => {
            compute_stringy(group, *cotangent, cli.cap)
        }
        Command::Compute(ComputeCommand::Tpn { group }) => compute_tpn(group, cli.cap),
        Command::Compute(ComputeCommand::Hilb {
            genus,
            terms,
            method,
        }) => compute_hilb(*genus, *terms, *method),
        Command::Check(CheckCommand::Sympres { group, cotangent }) => {
            check_sympres(group, *cotangent, cli.cap)
        }
        Command::Check(CheckCommand::SmoothQuotient { group }) => check_smooth(group, cli.cap),
    }
}

/// Parses `args` (program name first), runs the command and writes the
/// output. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{e}");
            return code;
        }
    };
    match execute(&cli) {
        Ok(r) => {
            let body = match cli.format {
                Format::Text => r.text,
                Format::Json => serde_json::to_string_pretty(&r.json).expect("serializable"),
            };
            let _ = writeln!(out, "{body}");
            r.code
        }
        Err(e) => {
            match cli.format {
                Format::Text => {
                    let _ = writeln!(err, "error: {}", e.message);
                }
                Format::Json => {
                    let doc = json!({"error": e.message, "exit_code": e.code});
                    let _ = writeln!(out, "{doc}");
                    let _ = writeln!(err, "error: {}", e.message);
                }
            }
            e.code
        }
    }
}
