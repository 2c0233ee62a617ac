use khovanskii::homogenize::{homogenize_ideal, initial_ideal, multi_homogenize_with, Method, WeightSystem};
use khovanskii::khovanskii::{khovanskii_basis, verify_khovanskii, KhovanskiiOptions, RunStatus, Verdict};
use khovanskii::muvak::{muvak_basis, MuvakOptions};
use khovanskii::subduction::{subduct, SubductionStatus, DEFAULT_MAX_ITER};
use khovanskii::{GradedElement, Ideal, MonomialValuation, Polynomial};
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::problem::ProblemFile;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Subduct,
    Khovanskii,
    Muvak,
    Homogenize,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Subduct => "subduct",
            Command::Khovanskii => "khovanskii",
            Command::Muvak => "muvak",
            Command::Homogenize => "homogenize",
        }
    }
}

/// Settings after merging command line flags over problem file options.
#[derive(Debug, Clone, Default)]
pub struct Settings {
    pub max_iter: Option<usize>,
    pub max_rounds: Option<usize>,
    pub method: Option<Method>,
    pub target: Option<String>,
    pub target_degree: Option<Vec<i64>>,
    pub sign: Option<i8>,
    pub certificates: bool,
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_CAP: u8 = 2;

pub struct Outcome {
    pub exit: u8,
    pub report: Value,
}

fn strings<'a>(polys: impl IntoIterator<Item = &'a Polynomial>) -> Value {
    Value::Array(polys.into_iter().map(|p| Value::String(p.to_string())).collect())
}

fn element(e: &GradedElement) -> Value {
    json!({ "poly": e.poly.to_string(), "degree": e.degree.to_vec() })
}

fn elements<'a>(es: impl IntoIterator<Item = &'a GradedElement>) -> Value {
    Value::Array(es.into_iter().map(element).collect())
}

fn ideal(i: &Ideal) -> Result<Value, CliError> {
    Ok(strings(i.reduced()?.gens()))
}

fn run_status(s: RunStatus) -> (&'static str, u8) {
    match s {
        RunStatus::Complete => ("complete", EXIT_OK),
        RunStatus::RoundCapHit => ("round_cap_hit", EXIT_CAP),
    }
}

fn single_valuation(problem: &ProblemFile) -> Result<&MonomialValuation, CliError> {
    match problem.valuations.as_slice() {
        [v] => Ok(v),
        vs => Err(CliError::Usage(format!("this command needs exactly one valuation, the problem has {}", vs.len()))),
    }
}

pub fn run_command(cmd: Command, problem: &ProblemFile, settings: &Settings) -> Result<Outcome, CliError> {
    let mut report = Map::new();
    report.insert("command".into(), cmd.name().into());
    report.insert("ring".into(), problem.ring.names().into());
    let exit = match cmd {
        Command::Subduct => subduct_report(problem, settings, &mut report)?,
        Command::Khovanskii => khovanskii_report(problem, settings, &mut report)?,
        Command::Muvak => muvak_report(problem, settings, &mut report)?,
        Command::Homogenize => homogenize_report(problem, settings, &mut report)?,
    };
    Ok(Outcome { exit, report: Value::Object(report) })
}

fn subduct_report(problem: &ProblemFile, s: &Settings, out: &mut Map<String, Value>) -> Result<u8, CliError> {
    let v = single_valuation(problem)?;
    let text = s.target.as_deref().ok_or_else(|| CliError::Usage("subduct needs a target (`--target`)".into()))?;
    let target = Polynomial::parse(&problem.ring, text)?;
    let degree = match &s.target_degree {
        Some(d) => problem.group.degree(d)?,
        None if problem.group.width() == 0 => problem.group.zero(),
        None => return Err(CliError::Usage("a nontrivial grading needs `--target-degree`".into())),
    };
    let max_iter = s.max_iter.unwrap_or(DEFAULT_MAX_ITER);
    let res =
        subduct(&GradedElement::new(target.clone(), degree.clone()), &problem.generators, v, &problem.group, max_iter)?;
    let (status, exit) = match res.status {
        SubductionStatus::ReducedToZero => ("reduced_to_zero", EXIT_OK),
        SubductionStatus::IrreducibleRemainder => ("irreducible_remainder", EXIT_OK),
        SubductionStatus::IterationCapHit => ("iteration_cap_hit", EXIT_CAP),
    };
    out.insert("target".into(), element(&GradedElement::new(target, degree)));
    out.insert("basis".into(), elements(&problem.generators));
    out.insert("status".into(), status.into());
    out.insert("iterations".into(), res.iterations().into());
    out.insert("remainder".into(), res.remainder.to_string().into());
    out.insert("witness".into(), res.h.to_string().into());
    out.insert("used".into(), res.used.iter().map(|i| i + 1).collect::<Vec<_>>().into());
    if s.certificates {
        out.insert("values".into(), Value::Array(res.trace.iter().map(|g| g.clone().into()).collect()));
    }
    Ok(exit)
}

fn khovanskii_report(problem: &ProblemFile, s: &Settings, out: &mut Map<String, Value>) -> Result<u8, CliError> {
    let v = single_valuation(problem)?;
    let defaults = KhovanskiiOptions::default();
    let opts = KhovanskiiOptions {
        max_rounds: s.max_rounds.unwrap_or(defaults.max_rounds),
        max_iter: s.max_iter.unwrap_or(defaults.max_iter),
    };
    let run = khovanskii_basis(&problem.generators, v, &problem.group, opts)?;
    let (status, exit) = run_status(run.status);
    out.insert("status".into(), status.into());
    out.insert("rounds".into(), run.rounds.into());
    out.insert("basis".into(), elements(&run.basis));
    if s.certificates {
        let rounds = run
            .log
            .iter()
            .map(|r| {
                json!({
                    "kernel": strings(&r.kernel_generators),
                    "added": elements(&r.added),
                    "deferred": strings(&r.deferred),
                })
            })
            .collect();
        out.insert("log".into(), Value::Array(rounds));
        let cert = verify_khovanskii(&run.basis, v, &problem.group, opts.max_iter)?;
        let verdict = match &cert.verdict {
            Verdict::Verified => json!({ "verdict": "verified" }),
            Verdict::Refuted { generator, witness } => {
                json!({ "verdict": "refuted", "generator": generator.to_string(), "witness": element(witness) })
            }
            Verdict::Inconclusive { generator } => {
                json!({ "verdict": "inconclusive", "generator": generator.to_string() })
            }
        };
        let mut verification = verdict.as_object().cloned().expect("object");
        verification.insert(
            "witnesses".into(),
            Value::Array(
                cert.witnesses
                    .iter()
                    .map(|(g, h)| json!({ "kernel": g.to_string(), "witness": h.to_string() }))
                    .collect(),
            ),
        );
        verification.insert("initial_ideal_agrees".into(), cert.initial_ideal_agrees.into());
        out.insert("verification".into(), Value::Object(verification));
    }
    Ok(exit)
}

fn muvak_report(problem: &ProblemFile, s: &Settings, out: &mut Map<String, Value>) -> Result<u8, CliError> {
    let defaults = MuvakOptions::default();
    let opts = MuvakOptions {
        max_rounds: s.max_rounds.unwrap_or(defaults.max_rounds),
        method: s.method.unwrap_or(defaults.method),
    };
    let run = muvak_basis(&problem.generators, &problem.valuations, &problem.group, opts)?;
    let (status, exit) = run_status(run.status);
    out.insert("status".into(), status.into());
    out.insert("rounds".into(), run.rounds.into());
    out.insert("basis".into(), elements(&run.basis));
    out.insert("warnings".into(), run.warnings.clone().into());
    if s.certificates {
        let mut rounds = Vec::new();
        for r in &run.log {
            let mut checks = Vec::new();
            for c in &r.checks {
                checks.push(json!({
                    "valuation": c.valuation + 1,
                    "i_hom": ideal(&c.i_hom)?,
                    "j_hom": ideal(&c.j_hom)?,
                    "offending": strings(&c.offending),
                }));
            }
            rounds.push(json!({ "checks": checks, "added": elements(&r.added) }));
        }
        out.insert("log".into(), Value::Array(rounds));
    }
    Ok(exit)
}

fn homogenize_report(problem: &ProblemFile, s: &Settings, out: &mut Map<String, Value>) -> Result<u8, CliError> {
    let rows = problem
        .valuations
        .iter()
        .map(|v| match v.rows() {
            [row] => Ok(row.clone()),
            _ => Err(CliError::Usage("homogenization needs weight valuations".into())),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if rows.is_empty() {
        return Err(CliError::Usage("homogenization needs at least one weight".into()));
    }
    let sign = s.sign.unwrap_or(-1);
    let ws = WeightSystem::new(rows.clone(), vec![sign; rows.len()])?;
    let (methods, warnings) = ws.resolve_methods(s.method.unwrap_or(Method::Bayer));
    let input = Ideal::new(&problem.ring, problem.generators.iter().map(|e| e.poly.clone()).collect())?;
    let hom = if rows.len() == 1 {
        homogenize_ideal(&input, &rows[0], sign, methods[0])?
    } else {
        multi_homogenize_with(&input, &ws, &methods)?
    };
    out.insert("sign".into(), sign.into());
    out.insert("weights".into(), Value::Array(rows.iter().map(|r| r.clone().into()).collect()));
    out.insert(
        "methods".into(),
        methods.iter().map(|m| if *m == Method::Bayer { "bayer" } else { "saturation" }).collect::<Vec<_>>().into(),
    );
    out.insert("warnings".into(), warnings.into());
    out.insert("homogenized_ring".into(), hom.ring().names().into());
    out.insert("generators".into(), ideal(&hom)?);
    if s.certificates && sign == -1 {
        let initial = rows.iter().map(|w| ideal(&initial_ideal(&input, w)?)).collect::<Result<Vec<_>, CliError>>()?;
        out.insert("initial_ideals".into(), Value::Array(initial));
    }
    Ok(EXIT_OK)
}
