//! Named verification scenarios and the versioned JSON report they produce.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::fiber::{check_fiber_reduction, check_minors_equal_kernel, check_noether_normalization};
use crate::gauss::{
    check_content_sharpness, check_decomposition3_steps, check_dedekind_mertens, check_primary_decomposition2,
    check_primary_decomposition3, check_reduction_number, gauss_lemma_probe, hu_check, reduction_number,
    struct_content, struct_reduction_probe, GenericSetup, StructureAlgebra,
};
use crate::groebner::{ideal_equal, Budget};
use crate::monomial::{
    edge_ideal, is_normal_up_to_with, join, product_ideal, zero_ideal, Graph, MonomialIdeal, Normality,
};
use crate::par::{run_jobs, Parallelism};
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};
use crate::report::CheckReport;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Default wall-clock budget per scenario over a prime field; runs over
/// the rationals get ten times as much.
pub const DEFAULT_TIMEOUT_SECS: u64 = 120;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    BudgetExceeded,
}

/// Source of a monomial ideal for the normality scenarios.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum IdealSource {
    /// `(x_i y_j z_k …)` for blocks of the given sizes minus one.
    Product { degrees: Vec<usize> },
    /// Edge ideal in variables `{prefix}0, {prefix}1, …`.
    Graph { graph: GraphSpec, prefix: String },
    /// Monomials in the listed variables, e.g. `["x^2", "y^2"]`.
    Gens { vars: Vec<String>, gens: Vec<String> },
    /// The zero ideal in `count` variables `{prefix}0, …`.
    Zero { prefix: String, count: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphSpec {
    Cycle(usize),
    Path(usize),
    /// Inline JSON or edge-list text.
    Text(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraKind {
    /// Truncated polynomial algebra; elements of degree `m` and `n`.
    Polynomial,
    /// Group algebra of a cyclic group of order `n`.
    Cyclic,
}

/// One check with its parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Scenario {
    DedekindMertens { m: usize, n: usize },
    Sharpness { m: usize, n: usize },
    ReductionNumber { m: usize, n: usize, p: Option<usize> },
    PrimaryDecomp2 { m: usize, n: usize },
    /// With `steps`, the smaller identities the decomposition rests on are
    /// checked as well.
    PrimaryDecomp3 { m: usize, n: usize, p: usize, steps: bool },
    HuSpecialization { m: usize, n: usize },
    ToricKernel { m: usize, n: usize },
    Noether { m: usize, n: usize },
    FiberReduction { degrees: Vec<usize> },
    Normality { ideal: IdealSource, up_to: u32, expect_normal: bool },
    JoinNormality { left: IdealSource, right: IdealSource, up_to: u32 },
    StructContent { algebra: AlgebraKind, m: usize, n: usize, r_max: u32 },
}

impl Scenario {
    pub fn command(&self) -> &'static str {
        match self {
            Scenario::DedekindMertens { .. } => "dedekind-mertens",
            Scenario::Sharpness { .. } => "sharpness",
            Scenario::ReductionNumber { .. } => "reduction-number",
            Scenario::PrimaryDecomp2 { .. } => "primary-decomp2",
            Scenario::PrimaryDecomp3 { .. } => "primary-decomp3",
            Scenario::HuSpecialization { .. } => "hu-specialization",
            Scenario::ToricKernel { .. } => "toric-kernel",
            Scenario::Noether { .. } => "noether",
            Scenario::FiberReduction { .. } => "fiber-reduction",
            Scenario::Normality { .. } => "normality",
            Scenario::JoinNormality { .. } => "join-normality",
            Scenario::StructContent { .. } => "struct-content",
        }
    }

    /// The statement the scenario verifies.
    pub fn anchor(&self) -> &'static str {
        match self {
            Scenario::DedekindMertens { .. } => "c(fg)·c(g)^m = c(f)·c(g)^(m+1) for generic f, g of degrees m ≤ n",
            Scenario::Sharpness { .. } => "the exponent m in the content formula cannot be lowered",
            Scenario::ReductionNumber { p: None, .. } => "reduction number of c(fg) in c(f)c(g) is min(m, n)",
            Scenario::ReductionNumber { p: Some(_), .. } => {
                "reduction number of c(fgh) in c(f)c(g)c(h) is m + n for m ≤ n ≤ p"
            }
            Scenario::PrimaryDecomp2 { .. } => "c(fg) = c(f) ∩ c(g) ∩ L(f,g) with codim L(f,g) = m + n + 2",
            Scenario::PrimaryDecomp3 { .. } => {
                "c(fgh) = c(f) ∩ c(g) ∩ c(h) ∩ L(f,g) ∩ L(f,h) ∩ L(g,h) ∩ L(f,g,h)"
            }
            Scenario::HuSpecialization { .. } => "(X·φ) = c(fg), (X)^(n+1) = c(f)^(n+1), I_(m+1)(φ) = c(g)^(m+1)",
            Scenario::ToricKernel { .. } => "the toric ideal of k[x_i y_j] is I_2 of the generic matrix, of height mn",
            Scenario::Noether { .. } => "k[h_q] is a Noether normalization of k[x_i y_j]",
            Scenario::FiberReduction { .. } => "reduction number of the special fiber from its Artinian reduction",
            Scenario::Normality { .. } => "the integral closure of I^q equals I^q",
            Scenario::JoinNormality { .. } => {
                "the join of normal square-free ideals generated in one degree t ≥ 2 is normal"
            }
            Scenario::StructContent { .. } => "c(uv) is a reduction of c(u)c(v) for structure-constant algebras",
        }
    }

    fn parameters(&self) -> BTreeMap<String, serde_json::Value> {
        match serde_json::to_value(self) {
            Ok(serde_json::Value::Object(map)) => map.into_iter().filter(|(k, _)| k != "command").collect(),
            _ => BTreeMap::new(),
        }
    }
}

/// A scenario with its name, field and budget.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScenarioSpec {
    pub name: String,
    pub field: FieldSpec,
    /// Wall-clock limit; defaults by field when absent.
    #[serde(default)]
    pub timeout_secs: Option<u64>,
    #[serde(default)]
    pub max_reductions: Option<u64>,
    #[serde(flatten)]
    pub scenario: Scenario,
}

impl ScenarioSpec {
    pub fn new(name: impl Into<String>, field: FieldSpec, scenario: Scenario) -> Self {
        ScenarioSpec { name: name.into(), field, timeout_secs: None, max_reductions: None, scenario }
    }

    pub fn with_timeout(mut self, secs: u64) -> Self {
        self.timeout_secs = Some(secs);
        self
    }

    pub fn timeout(&self) -> Duration {
        let default = match self.field {
            FieldSpec::Rationals => 10 * DEFAULT_TIMEOUT_SECS,
            FieldSpec::PrimeField(_) => DEFAULT_TIMEOUT_SECS,
        };
        Duration::from_secs(self.timeout_secs.unwrap_or(default))
    }

    fn budget(&self) -> Budget {
        let mut b = Budget::default().with_timeout(self.timeout());
        if let Some(r) = self.max_reductions {
            b = b.with_max_reductions(r);
        }
        b
    }
}

/// Verdict of one scenario.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScenarioResult {
    pub name: String,
    pub command: String,
    pub anchor: String,
    pub field: FieldSpec,
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub status: Status,
    /// Set when the inputs fall outside the hypotheses of the statement.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub exploratory: bool,
    pub claims: Vec<crate::report::Claim>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub elapsed_ms: u64,
}

/// Versioned collection of scenario results.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool_version: String,
    pub verdict: Status,
    pub scenarios: Vec<ScenarioResult>,
}

impl Report {
    pub fn new(scenarios: Vec<ScenarioResult>) -> Self {
        let verdict = aggregate(scenarios.iter().map(|s| s.status));
        Report { schema_version: SCHEMA_VERSION, tool_version: TOOL_VERSION.to_string(), verdict, scenarios }
    }

    /// 0 when everything passed, 1 on any failure, 3 when the only problem
    /// is an exhausted budget.
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::BudgetExceeded => 3,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn aggregate(statuses: impl Iterator<Item = Status>) -> Status {
    statuses.fold(Status::Pass, |acc, s| match (acc, s) {
        (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
        (Status::BudgetExceeded, _) | (_, Status::BudgetExceeded) => Status::BudgetExceeded,
        _ => Status::Pass,
    })
}

/// Runs one scenario; budget exhaustion and other errors become statuses.
pub fn run_scenario(spec: &ScenarioSpec, par: Parallelism) -> ScenarioResult {
    let start = Instant::now();
    let budget = spec.budget();
    let outcome = execute(spec, &budget, par);
    let (status, exploratory, claims, error) = match outcome {
        Ok((report, exploratory)) => {
            let status = if report.passed() { Status::Pass } else { Status::Fail };
            (status, exploratory, report.claims, None)
        }
        Err(e) if e.is_budget() => (Status::BudgetExceeded, false, Vec::new(), Some(e.to_string())),
        Err(e) => (Status::Fail, false, Vec::new(), Some(e.to_string())),
    };
    ScenarioResult {
        name: spec.name.clone(),
        command: spec.scenario.command().to_string(),
        anchor: spec.scenario.anchor().to_string(),
        field: spec.field,
        parameters: spec.scenario.parameters(),
        status,
        exploratory,
        claims,
        error,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// Runs scenarios on `workers` threads (all cores when `None`), results in
/// input order. Each scenario runs single-threaded.
pub fn run_suite(specs: &[ScenarioSpec], workers: Option<usize>) -> Report {
    let jobs: Vec<_> = specs.iter().map(|s| move || run_scenario(s, Parallelism::Sequential)).collect();
    Report::new(run_jobs(jobs, workers))
}

/// Builds the monomial ideal a source describes.
pub fn build_ideal(src: &IdealSource, field: FieldSpec) -> Result<MonomialIdeal> {
    match src {
        IdealSource::Product { degrees } => product_ideal(degrees, field),
        IdealSource::Graph { graph, prefix } => {
            let g = match graph {
                GraphSpec::Cycle(n) => Graph::cycle(*n)?,
                GraphSpec::Path(n) => Graph::path(*n)?,
                GraphSpec::Text(t) => Graph::parse(t)?,
            };
            edge_ideal(&g, prefix, field)
        }
        IdealSource::Gens { vars, gens } => {
            let ring = PolyRing::new(vars.iter().cloned(), field, MonomialOrder::DegRevLex)?;
            let monos = gens
                .iter()
                .map(|g| {
                    let p = Polynomial::parse(&ring, g)?;
                    match p.terms() {
                        [t] => Ok::<Monomial, Error>(t.mono.clone()),
                        _ => Err(Error::InvalidArgument(format!("{g} is not a monomial"))),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            MonomialIdeal::new(&ring, monos)
        }
        IdealSource::Zero { prefix, count } => zero_ideal(prefix, *count, field),
    }
}

fn two(m: usize, n: usize, field: FieldSpec) -> Result<GenericSetup> {
    GenericSetup::two(m, n, field)
}

fn normality_claim(report: &mut CheckReport, label: &str, i: &MonomialIdeal, up_to: u32, expect: bool, par: Parallelism) -> Result<bool> {
    let statement = if expect {
        format!("{label} is normal up to q = {up_to}")
    } else {
        format!("{label} is not normal within q ≤ {up_to}")
    };
    report.check_detail(statement, || {
        let verdict = is_normal_up_to_with(i, up_to, par)?;
        let detail = match &verdict {
            Normality::Normal { .. } => format!("IC(I^q) = I^q for q = 1..{up_to}"),
            Normality::NotNormal { q, witness } => {
                let one = i.ring().scalar(1);
                let w = Polynomial::monomial(i.ring(), one, witness.clone());
                format!("witness {w} in IC(I^{q}) but not in I^{q}")
            }
        };
        Ok((verdict.is_normal() == expect, detail))
    })
}

/// Hypotheses of the join statement for one side: square-free, generated
/// in a single degree `t ≥ 2`.
fn join_side_degree(i: &MonomialIdeal) -> Option<u32> {
    i.is_squarefree().then(|| i.equigenerated_degree()).flatten().filter(|&t| t >= 2)
}

fn execute(spec: &ScenarioSpec, budget: &Budget, par: Parallelism) -> Result<(CheckReport, bool)> {
    let field = spec.field;
    let report = match &spec.scenario {
        Scenario::DedekindMertens { m, n } => check_dedekind_mertens(&two(*m, *n, field)?, budget)?,
        Scenario::Sharpness { m, n } => check_content_sharpness(&two(*m, *n, field)?, budget)?,
        Scenario::ReductionNumber { m, n, p } => {
            let s = match p {
                None => two(*m, *n, field)?,
                Some(p) => GenericSetup::three(*m, *n, *p, field)?,
            };
            let d = s.degrees();
            let expected = (d.iter().sum::<usize>() - d[d.len() - 1]) as u32;
            let mut report = CheckReport::new();
            let (j, i) = (s.gaussian()?, s.content_product()?);
            let found = reduction_number(&j, &i, expected + 1, budget)?;
            report.check_detail(format!("reduction number = {expected}"), || {
                Ok((found == Some(expected), format!("r = {}", found.map_or("none".into(), |r| r.to_string()))))
            })?;
            report.extend(check_reduction_number(&s, expected, budget)?);
            report
        }
        Scenario::PrimaryDecomp2 { m, n } => check_primary_decomposition2(&two(*m, *n, field)?, budget)?,
        Scenario::PrimaryDecomp3 { m, n, p, steps } => {
            let s = GenericSetup::three(*m, *n, *p, field)?;
            let mut report = CheckReport::new();
            if *steps {
                report.extend(check_decomposition3_steps(&s, budget)?);
            }
            report.extend(check_primary_decomposition3(&s, budget)?);
            report
        }
        Scenario::HuSpecialization { m, n } => hu_check(&two(*m, *n, field)?, budget)?,
        Scenario::ToricKernel { m, n } => check_minors_equal_kernel(*m, *n, field, budget)?,
        Scenario::Noether { m, n } => check_noether_normalization(*m, *n, field, budget)?,
        Scenario::FiberReduction { degrees } => check_fiber_reduction(degrees, field, budget)?,
        Scenario::Normality { ideal, up_to, expect_normal } => {
            let i = build_ideal(ideal, field)?;
            let mut report = CheckReport::new();
            normality_claim(&mut report, &format!("I = {i}"), &i, *up_to, *expect_normal, par)?;
            report
        }
        Scenario::JoinNormality { left, right, up_to } => {
            let (a, b) = (build_ideal(left, field)?, build_ideal(right, field)?);
            let l = join(&a, &b)?;
            let mut report = CheckReport::new();
            let (ta, tb) = (join_side_degree(&a), join_side_degree(&b));
            // one side zero is the product-with-variables shape
            let in_hypothesis = match (ta, tb) {
                (Some(x), Some(y)) => x == y,
                (Some(_), None) => b.is_zero(),
                (None, Some(_)) => a.is_zero(),
                (None, None) => false,
            };
            for (label, side) in [("I", &a), ("J", &b)] {
                if !side.is_zero() {
                    normality_claim(&mut report, &format!("{label} = {side}"), side, *up_to, true, par)?;
                }
            }
            normality_claim(&mut report, "I∗J", &l, *up_to, true, par)?;
            return Ok((report, !in_hypothesis));
        }
        Scenario::StructContent { algebra, m, n, r_max } => struct_content_report(*algebra, *m, *n, *r_max, field, budget)?,
    };
    Ok((report, false))
}

fn struct_content_report(
    algebra: AlgebraKind,
    m: usize,
    n: usize,
    r_max: u32,
    field: FieldSpec,
    budget: &Budget,
) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    match algebra {
        AlgebraKind::Polynomial => {
            let s = two(m, n, field)?;
            let (m, n) = (s.degrees()[0], s.degrees()[1]);
            let a = StructureAlgebra::truncated_polynomial(s.ring(), m + n + 1)?;
            let xs: Vec<String> = (0..=m).map(|i| format!("x{i}")).collect();
            let ys: Vec<String> = (0..=n).map(|j| format!("y{j}")).collect();
            let u = a.generic_element(&xs.iter().map(String::as_str).collect::<Vec<_>>())?;
            let v = a.generic_element(&ys.iter().map(String::as_str).collect::<Vec<_>>())?;
            report.check("algebra is associative", || a.is_associative())?;
            report.check("c(uv) = c(fg) for the matching polynomials", || {
                ideal_equal(&struct_content(&a, &a.multiply(&u, &v)?)?, &s.gaussian()?, budget)
            })?;
            report.check_detail(format!("c(uv) is a reduction of c(u)c(v) with r = {m}"), || {
                let r = struct_reduction_probe(&a, &u, &v, r_max.max(m as u32), budget)?;
                Ok((r == Some(m as u32), format!("r = {r:?}")))
            })?;
        }
        AlgebraKind::Cyclic => {
            let order = n.max(2);
            let vars: Vec<String> =
                (0..order).map(|i| format!("x{i}")).chain((0..order).map(|j| format!("y{j}"))).collect();
            let ring = PolyRing::new(vars.iter().cloned(), field, MonomialOrder::DegRevLex)?;
            let a = StructureAlgebra::cyclic_group(&ring, order)?;
            let names: Vec<&str> = vars.iter().map(String::as_str).collect();
            let u = a.generic_element(&names[..order])?;
            let v = a.generic_element(&names[order..])?;
            report.check("every (c_ij0, …, c_ijr) generates the unit ideal", || a.unit_condition(budget))?;
            report.check_detail("zero divisors exist, so the Gauss lemma fails without a well-ordered basis", || {
                let found = gauss_lemma_probe(&a, 1)?;
                let detail = match &found {
                    Some((x, y)) => format!("{x:?} · {y:?} = 0"),
                    None => "no zero divisor with entries in {-1, 0, 1}".into(),
                };
                Ok((found.is_some(), detail))
            })?;
            report.check_detail(format!("c(uv) is not a reduction of c(u)c(v) for r ≤ {r_max}"), || {
                let r = struct_reduction_probe(&a, &u, &v, r_max, budget)?;
                Ok((r.is_none(), format!("r = {r:?}")))
            })?;
        }
    }
    Ok(report)
}

/// Scenarios covering every statement the tool verifies, at the sizes of
/// the acceptance battery.
pub fn default_suite() -> Vec<ScenarioSpec> {
    let gf = FieldSpec::PrimeField(crate::field::DEFAULT_PRIME);
    let q = FieldSpec::Rationals;
    let mut out = Vec::new();
    for (m, n) in [(1, 1), (1, 2), (1, 3), (2, 2), (1, 4), (2, 3)] {
        out.push(ScenarioSpec::new(format!("dedekind-mertens-{m}-{n}-gf"), gf, Scenario::DedekindMertens { m, n }));
        if m + n <= 4 {
            out.push(ScenarioSpec::new(format!("dedekind-mertens-{m}-{n}-q"), q, Scenario::DedekindMertens { m, n }));
        }
    }
    out.push(ScenarioSpec::new("sharpness-2-2", gf, Scenario::Sharpness { m: 2, n: 2 }));
    for (m, n) in [(1, 1), (1, 2), (2, 2), (1, 3)] {
        out.push(ScenarioSpec::new(format!("reduction-number-{m}-{n}"), gf, Scenario::ReductionNumber { m, n, p: None }));
    }
    out.push(ScenarioSpec::new("reduction-number-1-1-1", gf, Scenario::ReductionNumber { m: 1, n: 1, p: Some(1) }));
    for (m, n) in [(1, 1), (1, 2), (2, 2)] {
        out.push(ScenarioSpec::new(format!("toric-kernel-{m}-{n}"), gf, Scenario::ToricKernel { m, n }));
        out.push(ScenarioSpec::new(format!("noether-{m}-{n}"), gf, Scenario::Noether { m, n }));
        out.push(ScenarioSpec::new(format!("primary-decomp2-{m}-{n}"), gf, Scenario::PrimaryDecomp2 { m, n }));
    }
    for (m, n) in [(1, 1), (1, 2)] {
        out.push(ScenarioSpec::new(format!("hu-specialization-{m}-{n}"), gf, Scenario::HuSpecialization { m, n }));
    }
    out.push(
        ScenarioSpec::new("primary-decomp3-1-1-1", gf, Scenario::PrimaryDecomp3 { m: 1, n: 1, p: 1, steps: true })
            .with_timeout(600),
    );
    out.push(ScenarioSpec::new("fiber-reduction-1-1-1", gf, Scenario::FiberReduction { degrees: vec![1, 1, 1] }));
    for degrees in [vec![1, 1, 1], vec![1, 1, 2]] {
        let name = format!("normality-product-{}", degrees.iter().map(ToString::to_string).collect::<Vec<_>>().join("-"));
        out.push(ScenarioSpec::new(
            name,
            gf,
            Scenario::Normality { ideal: IdealSource::Product { degrees }, up_to: 4, expect_normal: true },
        ));
    }
    out.push(ScenarioSpec::new(
        "normality-negative-control",
        gf,
        Scenario::Normality {
            ideal: IdealSource::Gens { vars: vec!["x".into(), "y".into()], gens: vec!["x^2".into(), "y^2".into()] },
            up_to: 1,
            expect_normal: false,
        },
    ));
    let c4 = |prefix: &str| IdealSource::Graph { graph: GraphSpec::Cycle(4), prefix: prefix.into() };
    out.push(ScenarioSpec::new("join-normality-c4-c4", gf, Scenario::JoinNormality { left: c4("x"), right: c4("y"), up_to: 3 }));
    out.push(ScenarioSpec::new(
        "join-normality-c4-variables",
        gf,
        Scenario::JoinNormality { left: c4("x"), right: IdealSource::Zero { prefix: "y".into(), count: 2 }, up_to: 3 },
    ));
    out.push(ScenarioSpec::new(
        "struct-content-polynomial-1-2",
        gf,
        Scenario::StructContent { algebra: AlgebraKind::Polynomial, m: 1, n: 2, r_max: 2 },
    ));
    out.push(ScenarioSpec::new(
        "struct-content-cyclic-2",
        gf,
        Scenario::StructContent { algebra: AlgebraKind::Cyclic, m: 1, n: 2, r_max: 2 },
    ));
    out
}
