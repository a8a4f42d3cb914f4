//! `gaussian verify <command>`: runs verification scenarios and prints a
//! JSON report.
//!
//! Exit status: 0 when every scenario passes, 1 when a claim fails, 2 on
//! usage errors, 3 when a budget ran out before a verdict.

mod config;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gaussian_core::par::Parallelism;
use gaussian_core::scenario::{
    default_suite, run_scenario, run_suite, AlgebraKind, GraphSpec, IdealSource, Report, Scenario, ScenarioSpec,
};
use gaussian_core::FieldSpec;

use config::Config;

const USAGE_ERROR: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "gaussian", version, about = "Verify identities among contents of generic polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Top,
}

#[derive(Subcommand, Debug)]
enum Top {
    /// Run one verification (or the whole suite).
    Verify(Verify),
}

#[derive(Args, Debug)]
struct Verify {
    /// Coefficient field: `q` or `gf:<prime>`.
    #[arg(long, global = true, env = "GAUSSIAN_FIELD")]
    field: Option<FieldSpec>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// TOML file with defaults, degree sweeps or suite scenarios.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Wall-clock limit per scenario in seconds.
    #[arg(long, global = true)]
    timeout: Option<u64>,
    /// Reduction-step limit per Gröbner computation.
    #[arg(long, global = true)]
    max_reductions: Option<u64>,
    /// Worker threads for independent scenarios.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    check: Check,
}

#[derive(Args, Debug, Clone, Default)]
struct Degrees {
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args, Debug, Clone, Default)]
struct Degrees3 {
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum IdealKind {
    Product,
    Graph,
    Gens,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Algebra {
    Polynomial,
    Cyclic,
}

#[derive(Subcommand, Debug)]
enum Check {
    /// c(fg)·c(g)^m = c(f)·c(g)^(m+1) and its multiplied form.
    DedekindMertens(Degrees),
    /// The content formula fails with exponent m − 1.
    Sharpness(Degrees),
    /// Reduction number of c(fg) in c(f)c(g); with --p, of c(fgh).
    ReductionNumber(Degrees3),
    /// c(fg) = c(f) ∩ c(g) ∩ L(f,g) and codim L(f,g).
    PrimaryDecomp2(Degrees),
    /// Seven-component decomposition of c(fgh).
    PrimaryDecomp3 {
        #[command(flatten)]
        degrees: Degrees3,
        /// Also check the two-polynomial decompositions and content formulas it rests on.
        #[arg(long)]
        steps: bool,
    },
    /// Banded-matrix identities specializing to L(f,g).
    HuSpecialization(Degrees),
    /// Toric ideal of k[x_i y_j] against the 2×2 minors.
    ToricKernel(Degrees),
    /// The h_q form a Noether normalization of the fiber.
    Noether(Degrees),
    /// Reduction number of the fiber from its Artinian reduction.
    FiberReduction(Degrees3),
    /// IC(I^q) = I^q for q up to a bound.
    Normality {
        #[arg(long, value_enum)]
        ideal: IdealKind,
        #[command(flatten)]
        degrees: Degrees3,
        /// Graph file (JSON or edge list) for `--ideal graph`.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Comma-separated variable names for `--ideal gens`.
        #[arg(long, value_delimiter = ',')]
        vars: Vec<String>,
        /// Comma-separated monomials for `--ideal gens`.
        #[arg(long, value_delimiter = ',')]
        gens: Vec<String>,
        #[arg(long)]
        up_to: u32,
        /// Expect a witness of non-normality instead.
        #[arg(long)]
        expect_not_normal: bool,
    },
    /// Normality of I + J + (X)(Y). Sides: `cycle:N`, `path:N`, `vars:N`
    /// (zero ideal) or a graph file path.
    JoinNormality {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        up_to: u32,
    },
    /// Contents in structure-constant algebras.
    StructContent {
        #[arg(long, value_enum, default_value = "polynomial")]
        algebra: Algebra,
        #[command(flatten)]
        degrees: Degrees,
        #[arg(long, default_value_t = 3)]
        r_max: u32,
    },
    /// The full battery, or the scenarios listed in --config.
    Suite,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE_ERROR)
}

/// Degree tuples from flags, or from the config sweep when no flag is set.
fn tuples(flags: &[Option<usize>], cfg: &Config, required: usize) -> Result<Vec<Vec<usize>>, String> {
    if flags.iter().any(Option::is_some) {
        let given: Vec<usize> = flags.iter().map_while(|f| *f).collect();
        if given.len() < required || flags.iter().skip(given.len()).any(Option::is_some) {
            return Err("degree flags must be given in order (--m, --n, --p)".into());
        }
        return Ok(vec![given]);
    }
    if cfg.sweep.is_empty() {
        return Err("give --m/--n or a config with a sweep".into());
    }
    for t in &cfg.sweep {
        if t.len() < required || t.len() > flags.len() {
            return Err(format!("sweep entry {t:?} has the wrong length"));
        }
    }
    Ok(cfg.sweep.clone())
}

fn side(spec: &str, prefix: &str) -> Result<IdealSource, String> {
    let parse_n = |s: &str| s.parse::<usize>().map_err(|_| format!("bad size in {spec:?}"));
    let graph = |g| IdealSource::Graph { graph: g, prefix: prefix.into() };
    Ok(match spec.split_once(':') {
        Some(("cycle", n)) => graph(GraphSpec::Cycle(parse_n(n)?)),
        Some(("path", n)) => graph(GraphSpec::Path(parse_n(n)?)),
        Some(("vars", n)) => IdealSource::Zero { prefix: prefix.into(), count: parse_n(n)? },
        _ => graph(GraphSpec::Text(std::fs::read_to_string(spec).map_err(|e| format!("{spec}: {e}"))?)),
    })
}

fn scenarios(check: &Check, cfg: &Config) -> Result<Vec<Scenario>, String> {
    let two = |d: &Degrees| tuples(&[d.m, d.n], cfg, 2);
    let three = |d: &Degrees3, required| tuples(&[d.m, d.n, d.p], cfg, required);
    let each2 = |d: &Degrees, f: &dyn Fn(usize, usize) -> Scenario| -> Result<Vec<Scenario>, String> {
        Ok(two(d)?.iter().map(|t| f(t[0], t[1])).collect())
    };
    Ok(match check {
        Check::DedekindMertens(d) => each2(d, &|m, n| Scenario::DedekindMertens { m, n })?,
        Check::Sharpness(d) => each2(d, &|m, n| Scenario::Sharpness { m, n })?,
        Check::ReductionNumber(d) => three(d, 2)?
            .into_iter()
            .map(|t| Scenario::ReductionNumber { m: t[0], n: t[1], p: t.get(2).copied() })
            .collect(),
        Check::PrimaryDecomp2(d) => each2(d, &|m, n| Scenario::PrimaryDecomp2 { m, n })?,
        Check::PrimaryDecomp3 { degrees, steps } => three(degrees, 3)?
            .into_iter()
            .map(|t| Scenario::PrimaryDecomp3 { m: t[0], n: t[1], p: t[2], steps: *steps })
            .collect(),
        Check::HuSpecialization(d) => each2(d, &|m, n| Scenario::HuSpecialization { m, n })?,
        Check::ToricKernel(d) => each2(d, &|m, n| Scenario::ToricKernel { m, n })?,
        Check::Noether(d) => each2(d, &|m, n| Scenario::Noether { m, n })?,
        Check::FiberReduction(d) => {
            three(d, 2)?.into_iter().map(|degrees| Scenario::FiberReduction { degrees }).collect()
        }
        Check::Normality { ideal, degrees, graph, vars, gens, up_to, expect_not_normal } => {
            let sources = match ideal {
                IdealKind::Product => three(degrees, 1)?.into_iter().map(|degrees| IdealSource::Product { degrees }).collect(),
                IdealKind::Graph => {
                    let path = graph.as_ref().ok_or("--ideal graph needs --graph FILE")?;
                    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
                    vec![IdealSource::Graph { graph: GraphSpec::Text(text), prefix: "x".into() }]
                }
                IdealKind::Gens => {
                    if vars.is_empty() || gens.is_empty() {
                        return Err("--ideal gens needs --vars and --gens".into());
                    }
                    vec![IdealSource::Gens { vars: vars.clone(), gens: gens.clone() }]
                }
            };
            sources
                .into_iter()
                .map(|ideal| Scenario::Normality { ideal, up_to: *up_to, expect_normal: !expect_not_normal })
                .collect()
        }
        Check::JoinNormality { left, right, up_to } => {
            vec![Scenario::JoinNormality { left: side(left, "x")?, right: side(right, "y")?, up_to: *up_to }]
        }
        Check::StructContent { algebra, degrees, r_max } => {
            let algebra = match algebra {
                Algebra::Polynomial => AlgebraKind::Polynomial,
                Algebra::Cyclic => AlgebraKind::Cyclic,
            };
            each2(degrees, &|m, n| Scenario::StructContent { algebra, m, n, r_max: *r_max })?
        }
        Check::Suite => unreachable!("suite is handled separately"),
    })
}

fn scenario_name(s: &Scenario) -> String {
    let params: Vec<String> = match s {
        Scenario::DedekindMertens { m, n }
        | Scenario::Sharpness { m, n }
        | Scenario::PrimaryDecomp2 { m, n }
        | Scenario::HuSpecialization { m, n }
        | Scenario::ToricKernel { m, n }
        | Scenario::Noether { m, n }
        | Scenario::StructContent { m, n, .. } => vec![m.to_string(), n.to_string()],
        Scenario::ReductionNumber { m, n, p } => {
            [Some(*m), Some(*n), *p].iter().flatten().map(ToString::to_string).collect()
        }
        Scenario::PrimaryDecomp3 { m, n, p, .. } => vec![m.to_string(), n.to_string(), p.to_string()],
        Scenario::FiberReduction { degrees } => degrees.iter().map(ToString::to_string).collect(),
        Scenario::Normality { up_to, .. } | Scenario::JoinNormality { up_to, .. } => vec![format!("q{up_to}")],
    };
    std::iter::once(s.command().to_string()).chain(params).collect::<Vec<_>>().join("-")
}

fn run(cli: Cli) -> Result<Report, ExitCode> {
    let Top::Verify(v) = cli.command;
    let cfg = match &v.config {
        Some(path) => Config::load(path).map_err(usage)?,
        None => Config::default(),
    };
    let field = v.field.or(cfg.field).unwrap_or(FieldSpec::PrimeField(gaussian_core::field::DEFAULT_PRIME));
    let timeout = v.timeout.or(cfg.timeout_secs);
    let max_reductions = v.max_reductions.or(cfg.max_reductions);
    let jobs = v.jobs.or(cfg.jobs);
    let apply = |mut spec: ScenarioSpec| {
        if timeout.is_some() {
            spec.timeout_secs = timeout;
        }
        if max_reductions.is_some() {
            spec.max_reductions = max_reductions;
        }
        spec
    };

    if let Check::Suite = v.check {
        let specs: Vec<ScenarioSpec> = if cfg.scenario.is_empty() {
            default_suite()
                .into_iter()
                .map(|mut s| {
                    // an explicit field only replaces the prime-field runs
                    if v.field.is_some() && s.field != FieldSpec::Rationals {
                        s.field = field;
                    }
                    s
                })
                .collect()
        } else {
            cfg.scenario.clone()
        };
        return Ok(run_suite(&specs.into_iter().map(apply).collect::<Vec<_>>(), jobs));
    }

    let list = scenarios(&v.check, &cfg).map_err(usage)?;
    let specs: Vec<ScenarioSpec> =
        list.into_iter().map(|s| apply(ScenarioSpec::new(scenario_name(&s), field, s))).collect();
    if specs.len() == 1 {
        return Ok(Report::new(vec![run_scenario(&specs[0], Parallelism::default())]));
    }
    Ok(run_suite(&specs, jobs))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match &cli.command {
        Top::Verify(v) => v.out.clone(),
    };
    let report = match run(cli) {
        Ok(r) => r,
        Err(code) => return code,
    };
    let json = report.to_json();
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, json + "\n") {
                return usage(format!("{}: {e}", path.display()));
            }
        }
        None => {
            // a closed pipe (e.g. `| head`) is not an error
            let _ = writeln!(std::io::stdout(), "{json}");
        }
    }
    ExitCode::from(report.exit_code() as u8)
}
