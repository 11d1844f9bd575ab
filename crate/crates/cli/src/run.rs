use std::fmt::Write as _;
use std::time::Instant;

use halfdeg_core::hyperbolic::{hyperbolic_roots, is_hyperbolic, ROOT_TOLERANCE};
use halfdeg_core::reduction::principle_instances;
use halfdeg_core::search::{check_nonnegativity, find_zero, lemma42_experiment, SliceStatus};
use halfdeg_core::symmetric::{decompose_counting, structural_split};
use halfdeg_core::{
    Error as CoreError, Mode, MultiPoly, Rational, SearchConfig, UniPoly, Verdict, VerdictStatus,
    Witness,
};
use num_traits::{One, Signed};
use serde_json::{json, Map, Value};

use crate::args::{mode, Cli, Command, PolyArgs, SearchArgs};
use crate::parse::{parse_polynomial, parse_rationals, ParseError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Clean = 0,
    Counterexample = 1,
    Usage = 2,
    Invariant = 3,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Core(#[from] CoreError),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    pub fn exit(&self) -> Exit {
        match self {
            CliError::Parse(_) => Exit::Usage,
            CliError::Core(CoreError::Invariant(_)) | CliError::Invariant(_) => Exit::Invariant,
            CliError::Core(_) => Exit::Usage,
        }
    }
}

/// Result of one invocation: what to print and how to exit.
#[derive(Debug)]
pub struct Outcome {
    pub exit: Exit,
    pub stdout: String,
    pub warnings: Vec<String>,
}

struct Report {
    verb: &'static str,
    config: Value,
    body_key: &'static str,
    body: Value,
    witness: Option<Value>,
    text: String,
    exit: Exit,
    warnings: Vec<String>,
}

pub fn exact(q: &Rational) -> Value {
    Value::String(q.to_string())
}

pub fn approx(x: f64) -> Value {
    json!({ "approx": x.to_string() })
}

fn exact_list(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(exact).collect())
}

fn tuple(v: &[Rational]) -> String {
    let items: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", items.join(", "))
}

fn config_json(cfg: &SearchConfig, extra: &[(&str, Value)]) -> Value {
    let mut m = Map::new();
    m.insert("box".into(), json!([approx(cfg.lo), approx(cfg.hi)]));
    m.insert("grid".into(), json!(cfg.grid));
    m.insert("steps".into(), json!(cfg.descent_steps));
    m.insert("tolerance".into(), approx(cfg.tolerance));
    m.insert("seed".into(), json!(cfg.seed));
    m.insert("max_denominator".into(), json!(cfg.max_denominator));
    for (k, v) in extra {
        m.insert((*k).into(), v.clone());
    }
    Value::Object(m)
}

fn poly(args: &PolyArgs) -> Result<MultiPoly, CliError> {
    Ok(parse_polynomial(&args.polynomial, args.n)?)
}

pub fn run(cli: &Cli) -> Outcome {
    let start = Instant::now();
    let report = match &cli.command {
        Command::Decompose(p) => decompose(p),
        Command::Hyperbolic { coeffs } => hyperbolic(coeffs),
        Command::Reduce {
            poly,
            principle,
            orthant,
        } => reduce(poly, (*principle).into(), mode(*orthant)),
        Command::Check {
            poly,
            orthant,
            search,
        } => check(poly, mode(*orthant), search),
        Command::FindZero { poly, search } => zero(poly, search),
        Command::Lemma42 {
            n,
            s,
            a,
            c,
            samples,
            search,
        } => lemma42(*n, *s, a, c, *samples, search),
    };
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    match report {
        Err(e) => Outcome {
            exit: e.exit(),
            stdout: String::new(),
            warnings: vec![format!("error: {e}")],
        },
        Ok(r) => {
            let stdout = if cli.json {
                let mut m = Map::new();
                m.insert("verb".into(), json!(r.verb));
                m.insert("config".into(), r.config);
                m.insert(r.body_key.into(), r.body);
                if let Some(w) = r.witness {
                    m.insert("witness".into(), w);
                }
                m.insert("timing".into(), json!({ "elapsed_ms": approx(elapsed) }));
                format!("{}\n", Value::Object(m))
            } else {
                r.text
            };
            Outcome {
                exit: r.exit,
                stdout,
                warnings: r.warnings,
            }
        }
    }
}

fn decompose(args: &PolyArgs) -> Result<Report, CliError> {
    let f = poly(args)?;
    let (g, steps) = decompose_counting(&f)?;
    let split = structural_split(&g)?;
    if split.reassemble() != *g.inner() || g.expand() != f {
        return Err(CliError::Invariant("decomposition does not reassemble".into()));
    }
    let mut text = String::new();
    writeln!(text, "G = {}", g.inner().pretty("z")).unwrap();
    writeln!(text, "steps: {steps}").unwrap();
    writeln!(text, "split at k = {}:", split.half).unwrap();
    writeln!(text, "  G1 = {}", split.g1.pretty("z")).unwrap();
    for (i, t) in &split.tail {
        writeln!(text, "  tail[{i}] = {}", t.pretty("z")).unwrap();
    }
    let tail: Map<String, Value> = split
        .tail
        .iter()
        .map(|(i, t)| (i.to_string(), json!(t.pretty("z").to_string())))
        .collect();
    Ok(Report {
        verb: "decompose",
        config: json!({ "n": f.nvars() }),
        body_key: "result",
        body: json!({
            "g": g.inner().pretty("z").to_string(),
            "degree": g.source_degree(),
            "steps": steps,
            "split": { "k": split.half, "g1": split.g1.pretty("z").to_string(), "tail": tail },
        }),
        witness: None,
        text,
        exit: Exit::Clean,
        warnings: vec![],
    })
}

fn hyperbolic(coeffs: &str) -> Result<Report, CliError> {
    let raw = UniPoly::new(parse_rationals(coeffs)?);
    let mut warnings = Vec::new();
    let f = match raw.leading() {
        Some(l) if !l.is_one() => {
            warnings.push(format!("warning: dividing by leading coefficient {l}"));
            raw.to_monic()?
        }
        _ => raw,
    };
    let h = is_hyperbolic(&f)?;
    let summary = format!(
        "{}; rank {}, signature {}",
        if h.hyperbolic { "hyperbolic" } else { "not hyperbolic" },
        h.inertia.rank(),
        h.inertia.signature()
    );
    let mut text = String::new();
    writeln!(text, "f = {f}").unwrap();
    writeln!(text, "S(f) =").unwrap();
    for line in h.matrix.to_string().lines() {
        writeln!(text, "  {line}").unwrap();
    }
    writeln!(
        text,
        "inertia: {} positive, {} negative, {} zero",
        h.inertia.positive, h.inertia.negative, h.inertia.zero
    )
    .unwrap();
    writeln!(text, "{summary}").unwrap();
    let mut roots = Value::Null;
    if h.hyperbolic {
        let profile = hyperbolic_roots(&f, ROOT_TOLERANCE)?;
        if profile.distinct_count != h.distinct_roots {
            return Err(CliError::Invariant(format!(
                "{} roots located but rank is {}",
                profile.distinct_count, h.distinct_roots
            )));
        }
        let items: Vec<String> = profile
            .roots
            .iter()
            .map(|(x, m)| format!("{x} (x{m})"))
            .collect();
        writeln!(text, "roots: {}", items.join(", ")).unwrap();
        roots = Value::Array(
            profile
                .roots
                .iter()
                .map(|(x, m)| json!({ "value": approx(*x), "multiplicity": m }))
                .collect(),
        );
    }
    let matrix: Vec<Value> = h.matrix.rows().iter().map(|r| exact_list(r)).collect();
    Ok(Report {
        verb: "hyperbolic",
        config: json!({ "coeffs": exact_list(f.coeffs()), "root_tolerance": approx(ROOT_TOLERANCE) }),
        body_key: "result",
        body: json!({
            "summary": summary,
            "hyperbolic": h.hyperbolic,
            "rank": h.inertia.rank(),
            "signature": h.inertia.signature(),
            "inertia": { "positive": h.inertia.positive, "negative": h.inertia.negative, "zero": h.inertia.zero },
            "matrix": matrix,
            "roots": roots,
        }),
        witness: None,
        text,
        exit: Exit::Clean,
        warnings,
    })
}

fn reduce(args: &PolyArgs, principle: halfdeg_core::Principle, mode: Mode) -> Result<Report, CliError> {
    let f = poly(args)?;
    let instances = principle_instances(&f, principle, mode)?;
    let mut text = String::new();
    let mut list = Vec::new();
    for inst in &instances {
        let reduced = inst.reduced.pretty("t").to_string();
        writeln!(text, "{}: {reduced}", inst.pattern).unwrap();
        list.push(json!({
            "parts": inst.pattern.parts(),
            "zero_block": inst.pattern.zero_block(),
            "reduced": reduced,
        }));
    }
    let principle_name = match principle {
        halfdeg_core::Principle::Degree => "degree",
        halfdeg_core::Principle::HalfDegree => "half",
    };
    Ok(Report {
        verb: "reduce",
        config: json!({
            "n": f.nvars(),
            "principle": principle_name,
            "orthant": mode == Mode::Orthant,
        }),
        body_key: "result",
        body: json!({ "instances": list }),
        witness: None,
        text,
        exit: Exit::Clean,
        warnings: vec![],
    })
}

fn witness_json(w: &Witness) -> Value {
    json!({
        "pattern": { "parts": w.pattern.parts(), "zero_block": w.pattern.zero_block() },
        "t": exact_list(&w.t_values),
        "point": exact_list(&w.point),
        "value": exact(&w.value),
    })
}

/// Re-evaluates the witness in exact arithmetic before anything is reported.
fn confirm(f: &MultiPoly, v: &Verdict, tolerance: f64) -> Result<(), CliError> {
    let Some(w) = &v.witness else { return Ok(()) };
    let value = f.evaluate(&w.point)?;
    let holds = value == w.value
        && match v.status {
            VerdictStatus::CounterexampleFound => value.is_negative(),
            VerdictStatus::ZeroFound => {
                halfdeg_core::poly::to_f64(&value).abs() <= tolerance
            }
            _ => false,
        };
    if holds {
        Ok(())
    } else {
        Err(CliError::Invariant(format!(
            "witness {} does not confirm {}",
            tuple(&w.point),
            v.status.as_str()
        )))
    }
}

fn verdict_report(
    verb: &'static str,
    f: &MultiPoly,
    v: Verdict,
    config: Value,
    cfg: &SearchConfig,
) -> Result<Report, CliError> {
    confirm(f, &v, cfg.tolerance)?;
    let mut text = String::new();
    writeln!(text, "{}", v.status.as_str()).unwrap();
    if let Some(w) = &v.witness {
        writeln!(text, "pattern {}: t = {}", w.pattern, tuple(&w.t_values)).unwrap();
        writeln!(text, "point = {}", tuple(&w.point)).unwrap();
        writeln!(text, "value = {}", w.value).unwrap();
    }
    writeln!(text, "best value ~ {}", v.best_value).unwrap();
    if matches!(
        v.status,
        VerdictStatus::NoCounterexampleFound | VerdictStatus::NoZeroFound
    ) {
        writeln!(text, "(grid search is incomplete; this is not a proof)").unwrap();
    }
    let exit = if v.status == VerdictStatus::CounterexampleFound {
        Exit::Counterexample
    } else {
        Exit::Clean
    };
    Ok(Report {
        verb,
        config,
        body_key: "verdict",
        body: json!({ "status": v.status.as_str(), "best_value": approx(v.best_value) }),
        witness: v.witness.as_ref().map(witness_json),
        text,
        exit,
        warnings: vec![],
    })
}

fn check(args: &PolyArgs, mode: Mode, search: &SearchArgs) -> Result<Report, CliError> {
    let f = poly(args)?;
    let cfg = search.config();
    let v = check_nonnegativity(&f, mode, &cfg)?;
    let config = config_json(
        &cfg,
        &[("n", json!(f.nvars())), ("orthant", json!(mode == Mode::Orthant))],
    );
    verdict_report("check", &f, v, config, &cfg)
}

fn zero(args: &PolyArgs, search: &SearchArgs) -> Result<Report, CliError> {
    let f = poly(args)?;
    let cfg = search.config();
    let v = find_zero(&f, &cfg)?;
    let config = config_json(&cfg, &[("n", json!(f.nvars()))]);
    verdict_report("find-zero", &f, v, config, &cfg)
}

fn lemma42(
    n: usize,
    s: usize,
    a: &str,
    c: &str,
    samples: usize,
    search: &SearchArgs,
) -> Result<Report, CliError> {
    let a = parse_rationals(a)?;
    let c = parse_rationals(c)?;
    let cfg = search.config();
    let r = lemma42_experiment(n, s, &a, &c, samples, &cfg)?;
    let feasible = r.status == SliceStatus::Feasible;
    let mut text = String::new();
    writeln!(text, "slice: {}", if feasible { "feasible" } else { "empty" }).unwrap();
    match &r.constant_objective {
        Some(q) => writeln!(text, "objective is constant: {q}").unwrap(),
        None => writeln!(text, "best objective ~ {}", r.best_objective).unwrap(),
    }
    if feasible {
        let roots: Vec<String> = r.best_roots.iter().map(ToString::to_string).collect();
        writeln!(text, "best roots ~ ({})", roots.join(", ")).unwrap();
        writeln!(
            text,
            "distinct values: {} (cluster tolerance {}), bound s = {}",
            r.distinct_count, r.cluster_tolerance, r.s
        )
        .unwrap();
        writeln!(text, "minimum over <= {} parts ~ {}", r.s, r.pattern_min).unwrap();
        writeln!(text, "samples on slice: {}", r.samples_accepted).unwrap();
    }
    Ok(Report {
        verb: "lemma42",
        config: config_json(
            &cfg,
            &[
                ("n", json!(n)),
                ("s", json!(s)),
                ("a", exact_list(&a)),
                ("c", exact_list(&c)),
                ("samples", json!(samples)),
            ],
        ),
        body_key: "result",
        body: json!({
            "status": if feasible { "feasible" } else { "empty" },
            "constant_objective": r.constant_objective.as_ref().map(exact),
            "best_objective": approx(r.best_objective),
            "best_roots": r.best_roots.iter().map(|x| approx(*x)).collect::<Vec<_>>(),
            "distinct_count": r.distinct_count,
            "cluster_tolerance": approx(r.cluster_tolerance),
            "within_bound": r.within_bound(),
            "pattern_min": approx(r.pattern_min),
            "samples_accepted": r.samples_accepted,
        }),
        witness: None,
        text,
        exit: if r.within_bound() { Exit::Clean } else { Exit::Counterexample },
        warnings: vec![],
    })
}
