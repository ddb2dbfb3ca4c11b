//! `k43`: coset tables, triple classification, sampling and verification
//! runs for the three-term relations of `K`.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use k43::coxeter_d6::classify_triple;
use k43::error::Error;
use k43::hyper_eval::HyperplanePoint;
use k43::mk_cosets::{tables, CosetRep};
use k43::relation_engine::{
    all_triples, build_relation, max_residual, stratified_triples, three_term_sweep, two_term_suite, verify_relation,
    EvalPath, KEvaluator, RelationCertificate,
};
use k43::sampler::{Sampler, SamplerKind};
use k43::suites::{all_passed, barnes_lemma_suite, lemma21_suite, terminating_suite, SuiteRow};

use output::{Format, Output};

#[derive(Parser, Debug)]
#[command(
    name = "k43",
    version,
    about = "Symmetries and three-term relations of the K function"
)]
struct Cli {
    #[command(flatten)]
    cfg: RunConfig,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Debug, Clone)]
struct RunConfig {
    /// Working precision in bits.
    #[arg(long, global = true, default_value_t = 128, env = "K43_PRECISION")]
    precision: u32,
    /// Residual tolerance; each check has its own default.
    #[arg(long, global = true, env = "K43_TOL")]
    tol: Option<f64>,
    /// Number of random points.
    #[arg(long, global = true, env = "K43_POINTS")]
    points: Option<usize>,
    #[arg(long, global = true, default_value_t = 1, env = "K43_SEED")]
    seed: u64,
    /// How `K` is evaluated.
    #[arg(long, global = true, value_enum, default_value_t = PathArg::Series, env = "K43_PATH")]
    path: PathArg,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text, env = "K43_FORMAT")]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true, env = "K43_OUT")]
    out: Option<PathBuf>,
    /// Point distribution for sampling.
    #[arg(long, global = true, value_enum, default_value_t = SamplerArg::Central, env = "K43_SAMPLER")]
    sampler: SamplerArg,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum PathArg {
    Series,
    Integral,
    Both,
}

impl PathArg {
    fn paths(self) -> Vec<EvalPath> {
        match self {
            PathArg::Series => vec![EvalPath::Series],
            PathArg::Integral => vec![EvalPath::Integral],
            PathArg::Both => vec![EvalPath::Series, EvalPath::Integral],
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SamplerArg {
    Central,
    Box,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the 32 coset representatives with labels and parameter images.
    Cosets,
    /// Print the label of a representative (`p3`, `n12`).
    Label { rep: String },
    /// Hamming type of a triple of representatives.
    Classify { reps: Vec<String> },
    /// Random points of the hyperplane in generic position.
    Sample,
    /// Numerical verification runs.
    Verify {
        #[command(subcommand)]
        scope: VerifyScope,
    },
    /// Barnes-integral checks.
    Barnes {
        #[command(subcommand)]
        action: BarnesAction,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyScope {
    /// `K(gx) = K(x)` for all 720 elements of `G_K`.
    TwoTerm,
    /// Three-term relations for one triple or all 4960.
    ThreeTerm {
        /// Every triple of distinct cosets.
        #[arg(long, conflicts_with_all = ["triple", "subsample"])]
        all: bool,
        /// A single triple.
        #[arg(long, num_args = 3, value_names = ["REP1", "REP2", "REP3"])]
        triple: Option<Vec<String>>,
        /// A seeded sample of this many triples per Hamming type.
        #[arg(long, conflicts_with = "triple")]
        subsample: Option<usize>,
        /// Include every certificate in JSON output.
        #[arg(long)]
        certificates: bool,
    },
    /// Barnes' lemma and the four-gamma integral with `z^t`.
    Barnes,
    /// The terminating identity and invariance in exact arithmetic.
    Terminating,
}

#[derive(Subcommand, Debug)]
enum BarnesAction {
    /// Barnes' lemma and the four-gamma integral with `z^t`.
    Check,
}

/// Outcome of a command: `Ok(true)` passes, `Ok(false)` is a numeric
/// failure.
type Outcome = Result<bool, Error>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = validate(&cli.cfg) {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let mut out = match Output::new(cli.cfg.format, cli.cfg.out.as_deref()) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let r = run(&cli, &mut out);
    if let Err(e) = out.finish() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match r {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if is_config_error(&e) { 2 } else { 1 })
        }
    }
}

fn validate(cfg: &RunConfig) -> Result<(), String> {
    if cfg.precision < 64 {
        return Err(format!("precision must be at least 64 bits, got {}", cfg.precision));
    }
    if let Some(t) = cfg.tol {
        let floor = (8.0 - cfg.precision as f64).exp2();
        if !(t >= floor) {
            return Err(format!("tolerance {t:e} is below 2^(8-precision) = {floor:e}"));
        }
    }
    if cfg.points == Some(0) {
        return Err("--points must be positive".into());
    }
    Ok(())
}

fn is_config_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_) | Error::UnknownRepresentative(_) | Error::NonDistinct | Error::IllegalType(_)
    )
}

fn run(cli: &Cli, out: &mut Output) -> Outcome {
    let cfg = &cli.cfg;
    match &cli.cmd {
        Command::Cosets => cmd_cosets(out),
        Command::Label { rep } => {
            let r = tables().rep_by_name(rep)?;
            out.value(
                &r.label.label(),
                &json!({ "rep": r.name(), "label": r.label.label() }),
                &["rep", "label"],
                &[vec![r.name(), r.label.label()]],
            );
            Ok(true)
        }
        Command::Classify { reps } => cmd_classify(reps, out),
        Command::Sample => cmd_sample(cfg, out),
        Command::Verify { scope } => match scope {
            VerifyScope::TwoTerm => cmd_two_term(cfg, out),
            VerifyScope::ThreeTerm {
                all,
                triple,
                subsample,
                certificates,
            } => cmd_three_term(cfg, *all, triple.as_deref(), *subsample, *certificates, out),
            VerifyScope::Barnes => cmd_barnes(cfg, out),
            VerifyScope::Terminating => cmd_terminating(cfg, out),
        },
        Command::Barnes {
            action: BarnesAction::Check,
        } => cmd_barnes(cfg, out),
    }
}

fn rep_row(r: &CosetRep) -> Vec<String> {
    let mut v = vec![r.name(), r.label.label()];
    v.extend(r.image().iter().map(|f| f.to_string()));
    v
}

fn cmd_cosets(out: &mut Output) -> Outcome {
    let reps = tables().coset_representatives();
    let rows: Vec<Vec<String>> = reps.iter().map(rep_row).collect();
    let text: Vec<String> = reps
        .iter()
        .map(|r| format!("{:<4} {}  {}", r.name(), r.label.label(), r.image_string()))
        .collect();
    let js: Vec<_> = reps
        .iter()
        .map(|r| json!({ "rep": r.name(), "label": r.label.label(), "image": r.image().iter().map(|f| f.to_string()).collect::<Vec<_>>() }))
        .collect();
    out.value(
        &text.join("\n"),
        &json!({ "schema": 1, "representatives": js }),
        &["rep", "label", "a", "b", "c", "d", "e", "f", "g"],
        &rows,
    );
    Ok(true)
}

fn parse_triple(reps: &[String]) -> Result<[&'static CosetRep; 3], Error> {
    if reps.len() != 3 {
        return Err(Error::Parse(format!(
            "expected three representatives, got {}",
            reps.len()
        )));
    }
    let tb = tables();
    Ok([
        tb.rep_by_name(&reps[0])?,
        tb.rep_by_name(&reps[1])?,
        tb.rep_by_name(&reps[2])?,
    ])
}

fn cmd_classify(reps: &[String], out: &mut Output) -> Outcome {
    let t = parse_triple(reps)?;
    let labels = t.map(|r| r.label);
    let ty = classify_triple(&labels)?;
    let names = t.map(|r| r.name());
    let ls = labels.map(|l| l.label());
    out.value(
        &ty.to_string(),
        &json!({ "triple": names, "labels": ls, "type": ty }),
        &["rep1", "rep2", "rep3", "type"],
        &[vec![
            names[0].clone(),
            names[1].clone(),
            names[2].clone(),
            ty.to_string(),
        ]],
    );
    Ok(true)
}

fn sampler(cfg: &RunConfig) -> Sampler {
    let kind = match cfg.sampler {
        SamplerArg::Central => SamplerKind::Central,
        SamplerArg::Box => SamplerKind::Box,
    };
    Sampler::new(cfg.seed, kind, cfg.precision)
}

fn cmd_sample(cfg: &RunConfig, out: &mut Output) -> Outcome {
    let pts = sampler(cfg).points(cfg.points.unwrap_or(5));
    out.points(&pts, cfg.precision);
    Ok(true)
}

fn evaluator(path: EvalPath, tol: f64) -> KEvaluator {
    KEvaluator::new(path).with_quadrature_tol(tol / 100.0)
}

fn cmd_two_term(cfg: &RunConfig, out: &mut Output) -> Outcome {
    let tol = cfg.tol.unwrap_or(1e-8);
    let pts = sampler(cfg).points(cfg.points.unwrap_or(3));
    let mut ok = true;
    let mut reports = Vec::new();
    for path in cfg.path.paths() {
        let r = two_term_suite(&pts, &evaluator(path, tol))?;
        ok &= r.max_residual <= tol;
        reports.push(r);
    }
    let text: Vec<String> = reports
        .iter()
        .map(|r| {
            format!(
                "two-term {:<8} points {} elements {} max residual {:.3e} (tol {tol:e}) {:.1}s {}",
                r.path.to_string(),
                r.points,
                r.elements,
                r.max_residual,
                r.elapsed.as_secs_f64(),
                pass(r.max_residual <= tol)
            )
        })
        .collect();
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.path.to_string(),
                r.points.to_string(),
                r.elements.to_string(),
                format!("{:e}", r.max_residual),
                format!("{:.3}", r.elapsed.as_secs_f64()),
            ]
        })
        .collect();
    out.value(
        &text.join("\n"),
        &json!({ "schema": 1, "tolerance": tol, "reports": reports, "passed": ok }),
        &["path", "points", "elements", "max_residual", "seconds"],
        &rows,
    );
    Ok(ok)
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn cmd_three_term(
    cfg: &RunConfig,
    all: bool,
    triple: Option<&[String]>,
    subsample: Option<usize>,
    certificates: bool,
    out: &mut Output,
) -> Outcome {
    let tol = cfg.tol.unwrap_or(1e-8);
    let pts: Vec<HyperplanePoint> = sampler(cfg).points(cfg.points.unwrap_or(2));
    if let Some(t) = triple {
        let reps = parse_triple(t)?;
        let mut certs: Vec<RelationCertificate> = Vec::new();
        for path in cfg.path.paths() {
            let c = build_relation(reps)?;
            certs.push(verify_relation(c, &pts, tol, &evaluator(path, tol))?);
        }
        let ok = certs.iter().all(|c| c.verified == Some(true));
        let mut text = Vec::new();
        for c in &certs {
            text.push(format!(
                "triple ({}) labels ({}) type {}",
                c.triple.join(", "),
                c.labels.join(", "),
                c.hamming_type
            ));
            for i in 0..3 {
                text.push(format!("  K_{}: {}", c.triple[i], c.coefficients[i]));
            }
            let path = c.residuals.first().map(|r| r.path.to_string()).unwrap_or_default();
            text.push(format!(
                "  {path} max residual {:.3e} (tol {tol:e}) {}",
                max_residual(c),
                pass(c.verified == Some(true))
            ));
        }
        let rows: Vec<Vec<String>> = certs
            .iter()
            .flat_map(|c| {
                c.residuals.iter().enumerate().map(move |(i, r)| {
                    vec![
                        c.triple.join(" "),
                        c.hamming_type.to_string(),
                        r.path.to_string(),
                        i.to_string(),
                        format!("{:e}", r.residual),
                    ]
                })
            })
            .collect();
        let js = if certs.len() == 1 {
            json!(certs[0])
        } else {
            json!(certs)
        };
        out.value(
            &text.join("\n"),
            &js,
            &["triple", "type", "path", "point", "residual"],
            &rows,
        );
        return Ok(ok);
    }
    let triples = if all {
        all_triples()
    } else if let Some(n) = subsample {
        stratified_triples(n, cfg.seed)?
    } else {
        return Err(Error::Parse(
            "three-term needs --all, --subsample N or --triple R1 R2 R3".into(),
        ));
    };
    let mut ok = true;
    let mut text = Vec::new();
    let mut rows = Vec::new();
    let mut reports = Vec::new();
    let mut kept = Vec::new();
    let start = Instant::now();
    for path in cfg.path.paths() {
        let rep = three_term_sweep(&triples, &pts, tol, &evaluator(path, tol), |c| {
            if certificates {
                kept.push(c)
            }
        })?;
        ok &= rep.passed();
        text.push(format!(
            "three-term {:<8} certificates {} verified {} max residual {:.3e} (tol {tol:e}) {:.1}s {}",
            path.to_string(),
            rep.certificates,
            rep.verified,
            rep.max_residual,
            rep.elapsed.as_secs_f64(),
            pass(rep.passed())
        ));
        for (t, s) in &rep.by_type {
            text.push(format!(
                "  type {t}: {} certificates, {} verified, max residual {:.3e}",
                s.count, s.verified, s.max_residual
            ));
            rows.push(vec![
                path.to_string(),
                t.to_string(),
                s.count.to_string(),
                s.verified.to_string(),
                format!("{:e}", s.max_residual),
            ]);
        }
        for (name, why) in rep.failures.iter().take(20) {
            text.push(format!("  failed {name}: {why}"));
        }
        reports.push(rep);
    }
    text.push(format!("wall time {:.1}s", start.elapsed().as_secs_f64()));
    let mut js = json!({ "schema": 1, "tolerance": tol, "points": pts, "reports": reports, "passed": ok });
    if certificates {
        js["certificates"] = json!(kept);
    }
    out.value(
        &text.join("\n"),
        &js,
        &["path", "type", "count", "verified", "max_residual"],
        &rows,
    );
    Ok(ok)
}

fn suite_output(rows: &[SuiteRow], out: &mut Output) -> bool {
    let ok = all_passed(rows);
    let mut text: Vec<String> = rows
        .iter()
        .map(|r| {
            format!(
                "{:<26} {:.3e} <= {:.0e} {}  [{}]",
                r.suite,
                r.residual,
                r.tolerance,
                pass(r.passed),
                r.params
            )
        })
        .collect();
    text.push(format!(
        "{} checks, {} failed",
        rows.len(),
        rows.iter().filter(|r| !r.passed).count()
    ));
    let csv: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.suite.clone(),
                r.params.clone(),
                format!("{:e}", r.residual),
                format!("{:e}", r.tolerance),
                r.passed.to_string(),
            ]
        })
        .collect();
    out.value(
        &text.join("\n"),
        &json!({ "schema": 1, "rows": rows, "passed": ok }),
        &["suite", "params", "residual", "tolerance", "passed"],
        &csv,
    );
    ok
}

fn cmd_barnes(cfg: &RunConfig, out: &mut Output) -> Outcome {
    let n = cfg.points.unwrap_or(50);
    let mut rows = barnes_lemma_suite(n, cfg.seed, cfg.tol.unwrap_or(1e-12))?;
    rows.extend(lemma21_suite(
        &[0.3, 0.8, 1.25, 3.0],
        n.div_ceil(10).max(1),
        cfg.seed,
        cfg.tol.unwrap_or(1e-10),
    )?);
    Ok(suite_output(&rows, out))
}

fn cmd_terminating(cfg: &RunConfig, out: &mut Output) -> Outcome {
    let rows = terminating_suite(5, cfg.points.unwrap_or(4), cfg.seed)?;
    Ok(suite_output(&rows, out))
}
