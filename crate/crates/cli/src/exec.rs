//! Executes tasks against a problem file and collects the report.

use std::collections::HashMap;
use std::time::Instant;

use hkit_core::hilbert::{
    default_n_max, hilbert_report, hs_function, is_reduction, k_plus_j_hilbert,
    k_plus_j_parameter_hilbert, lambda_map, sample_reductions, ParameterIdeal, QuotientRing, DEFAULT_REDUCTION_CAP,
};
use hkit_core::secmethods::{
    annihilator_length, e1_e2_via_kernel, e1_via_slice, is_d_sequence, is_d_sequence_any_order, is_superficial,
    sally_lengths, sally_rank, unmixed_component, ArtinAlgebra, DEFAULT_KERNEL_WINDOW,
};
use hkit_core::suite::{run_suite, SuiteConfig};
use hkit_core::{parse_poly, Error, Field, Ideal, MonomialOrder, Polynomial, Result, Ring, RingSpec};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::problem::{IdealRef, ProblemFile, Task};

/// Global flags that override or complete the problem file.
#[derive(Clone, Debug, Default)]
pub struct Flags {
    pub field: Option<Field>,
    pub order: Option<MonomialOrder>,
    pub seed: u64,
    pub n_max: Option<u32>,
    pub cutoff: Option<u32>,
    pub timings: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TaskResult {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub value: Value,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub detail: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<Value>,
    /// `None` when the task had no expectation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pass: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub field: String,
    pub seed: u64,
    pub tasks: Vec<TaskResult>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    pub pass: bool,
}

/// Process exit status for a finished run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    ExpectationFailed = 1,
    InputError = 2,
    ResourceLimit = 3,
}

impl Status {
    fn rank(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::ExpectationFailed => 1,
            Status::ResourceLimit => 2,
            Status::InputError => 3,
        }
    }

    pub fn worst(self, other: Status) -> Status {
        if other.rank() > self.rank() {
            other
        } else {
            self
        }
    }

    pub fn of_error(e: &Error) -> Status {
        match e {
            Error::ResourceLimit(_)
            | Error::NotLocallyFinite { .. }
            | Error::NotFinite { .. }
            | Error::SamplingExhausted { .. }
            | Error::NoPolynomialTail(_)
            | Error::NonIntegerCoefficient(_)
            | Error::BoundViolation(_) => Status::ResourceLimit,
            _ => Status::InputError,
        }
    }
}

struct Outcome {
    value: Value,
    detail: Value,
    warnings: Vec<String>,
}

impl Outcome {
    fn plain(value: Value) -> Outcome {
        Outcome {
            value,
            detail: Value::Null,
            warnings: Vec::new(),
        }
    }

    fn with_detail(value: Value, detail: impl Serialize) -> Outcome {
        Outcome {
            value,
            detail: serde_json::to_value(detail).expect("serializable"),
            warnings: Vec::new(),
        }
    }
}

pub struct Session {
    problem: ProblemFile,
    ring: Ring,
    order: MonomialOrder,
    flags: Flags,
    ideals: HashMap<String, Ideal>,
    quotients: HashMap<String, QuotientRing>,
}

fn input(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn to_json<T: Serialize>(v: T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

impl Session {
    pub fn new(problem: ProblemFile, flags: Flags) -> Result<Session> {
        let field = match (flags.field, &problem.ring.field) {
            (Some(f), _) => f,
            (None, Some(s)) => Field::parse(s)?,
            (None, None) => Field::default(),
        };
        let order = match (flags.order, &problem.ring.order) {
            (Some(o), _) => o,
            (None, Some(s)) => MonomialOrder::parse(s)?,
            (None, None) => MonomialOrder::default(),
        };
        let mut limits = problem.ring.limits.clone().unwrap_or_default();
        if let Some(c) = flags.cutoff {
            limits.colength_max = c;
        }
        let ring = RingSpec::with_limits(&problem.ring.variables, field, limits)?;
        Ok(Session {
            problem,
            ring,
            order,
            flags,
            ideals: HashMap::new(),
            quotients: HashMap::new(),
        })
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }

    fn poly(&self, s: &str) -> Result<Polynomial> {
        parse_poly(&self.ring, s)
    }

    fn polys(&self, gens: &[String]) -> Result<Vec<Polynomial>> {
        gens.iter().map(|g| self.poly(g)).collect()
    }

    fn named_ideal(&mut self, name: &str) -> Result<Ideal> {
        if let Some(i) = self.ideals.get(name) {
            return Ok(i.clone());
        }
        let ideal = if name == "m" && !self.problem.ideals.contains_key("m") {
            Ideal::maximal(&self.ring)
        } else {
            let gens = self
                .problem
                .ideals
                .get(name)
                .ok_or_else(|| input(format!("unknown ideal `{name}`")))?
                .clone();
            Ideal::new(&self.ring, self.polys(&gens)?)
        };
        self.ideals.insert(name.to_string(), ideal.clone());
        Ok(ideal)
    }

    fn resolve_ideal(&mut self, r: &IdealRef) -> Result<Ideal> {
        match r {
            IdealRef::Name(n) => self.named_ideal(n),
            IdealRef::Gens(g) => Ok(Ideal::new(&self.ring, self.polys(g)?)),
        }
    }

    fn arg<'a>(args: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
        args.get(key).ok_or_else(|| input(format!("missing argument `{key}`")))
    }

    fn ideal_arg(&mut self, args: &Map<String, Value>, key: &str) -> Result<Ideal> {
        let r: IdealRef = serde_json::from_value(Self::arg(args, key)?.clone())
            .map_err(|_| input(format!("`{key}` must be a name or a list of polynomials")))?;
        self.resolve_ideal(&r)
    }

    fn quotient_arg(&mut self, args: &Map<String, Value>) -> Result<QuotientRing> {
        match Self::arg(args, "quotient")? {
            Value::String(name) => {
                if let Some(q) = self.quotients.get(name) {
                    return Ok(q.clone());
                }
                let def = self
                    .problem
                    .quotients
                    .get(name)
                    .ok_or_else(|| input(format!("unknown quotient `{name}`")))?
                    .clone();
                let q = QuotientRing::new(self.resolve_ideal(&def.defining)?, def.dim)?;
                self.quotients.insert(name.clone(), q.clone());
                Ok(q)
            }
            v => {
                let def: crate::problem::QuotientDef = serde_json::from_value(v.clone())
                    .map_err(|e| input(format!("`quotient`: {e}")))?;
                QuotientRing::new(self.resolve_ideal(&def.defining)?, def.dim)
            }
        }
    }

    fn param_gens(&self, v: &Value) -> Result<Vec<Polynomial>> {
        match v {
            Value::String(name) => {
                let gens = self
                    .problem
                    .parameters
                    .get(name)
                    .ok_or_else(|| input(format!("unknown parameter ideal `{name}`")))?;
                self.polys(gens)
            }
            v => {
                let gens: Vec<String> = serde_json::from_value(v.clone())
                    .map_err(|_| input("parameters must be a name or a list of polynomials"))?;
                self.polys(&gens)
            }
        }
    }

    fn params_arg(&self, args: &Map<String, Value>, a: &QuotientRing) -> Result<ParameterIdeal> {
        ParameterIdeal::new(a, self.param_gens(Self::arg(args, "params")?)?)
    }

    fn artinian_arg(&mut self, args: &Map<String, Value>) -> Result<ArtinAlgebra> {
        let c = match Self::arg(args, "artinian")? {
            Value::String(name) => match self.problem.artinian.get(name) {
                Some(g) => Ideal::new(&self.ring, self.polys(&g.clone())?),
                None => self.named_ideal(name)?,
            },
            v => {
                let gens: Vec<String> =
                    serde_json::from_value(v.clone()).map_err(|_| input("`artinian` must be a name or a list"))?;
                Ideal::new(&self.ring, self.polys(&gens)?)
            }
        };
        ArtinAlgebra::new(&c)
    }

    fn poly_arg(&self, args: &Map<String, Value>, key: &str) -> Result<Polynomial> {
        let s = Self::arg(args, key)?
            .as_str()
            .ok_or_else(|| input(format!("`{key}` must be a polynomial string")))?;
        self.poly(s)
    }

    fn uint_arg(args: &Map<String, Value>, key: &str) -> Result<Option<u64>> {
        match args.get(key) {
            None => Ok(None),
            Some(v) => v
                .as_u64()
                .map(Some)
                .ok_or_else(|| input(format!("`{key}` must be a nonnegative integer"))),
        }
    }

    fn n_max(&self, args: &Map<String, Value>, dim: usize) -> Result<u32> {
        Ok(match Self::uint_arg(args, "nmax")? {
            Some(n) => n as u32,
            None => self.flags.n_max.unwrap_or(default_n_max(dim)),
        })
    }

    fn seed(&self, args: &Map<String, Value>) -> Result<u64> {
        Ok(Self::uint_arg(args, "seed")?.unwrap_or(self.flags.seed))
    }

    fn execute(&mut self, task: &Task) -> Result<Outcome> {
        let args = &task.args;
        match task.command.as_str() {
            "gb" => {
                let ideal = self.ideal_arg(args, "ideal")?;
                let order = match args.get("order").and_then(Value::as_str) {
                    Some(o) => MonomialOrder::parse(o)?,
                    None => self.order,
                };
                let gb = ideal.groebner(order)?;
                let basis: Vec<String> = gb.elements().iter().map(|p| p.to_string()).collect();
                Ok(Outcome::plain(to_json(basis)))
            }
            "colength" => {
                let mut ideal = self.ideal_arg(args, "ideal")?;
                if args.contains_key("quotient") {
                    let a = self.quotient_arg(args)?;
                    ideal = a.extend(ideal.gens());
                }
                let mode = args.get("mode").and_then(Value::as_str).unwrap_or("local");
                let v = match mode {
                    "local" => ideal.local_colength()?,
                    "global" => ideal
                        .gb()?
                        .standard_monomials(self.ring.limits().max_standard)
                        .ok_or_else(|| Error::NotFinite {
                            cutoff: self.ring.limits().colength_max,
                        })?
                        .len(),
                    "truncated" => {
                        let n = Self::uint_arg(args, "n")?.ok_or_else(|| input("truncated mode needs `n`"))?;
                        ideal.truncated_colength(n as u32)?
                    }
                    "saturation" => ideal.sat_quotient_length()?,
                    other => return Err(input(format!("unknown colength mode `{other}`"))),
                };
                Ok(Outcome::plain(json!(v)))
            }
            "hilb" => {
                let a = self.quotient_arg(args)?;
                let q = self.params_arg(args, &a)?;
                let h = hs_function(&a, &q, self.n_max(args, a.dim())?)?;
                Ok(Outcome::plain(to_json(h.values().collect::<Vec<_>>())))
            }
            "coeffs" => {
                let a = self.quotient_arg(args)?;
                let q = self.params_arg(args, &a)?;
                let r = hilbert_report(&a, &q, self.n_max(args, a.dim())?)?;
                Ok(Outcome::with_detail(to_json(&r.coeffs), &r))
            }
            "kernel-e1" => {
                let c = self.artinian_arg(args)?;
                let gens = self.param_gens(Self::arg(args, "params")?)?;
                if gens.len() != 2 {
                    return Err(input("the kernel method needs exactly two parameters"));
                }
                let e0 = match Self::uint_arg(args, "e0")? {
                    Some(e) => e as i64,
                    None => {
                        let a = self
                            .quotient_arg(args)
                            .map_err(|_| input("kernel-e1 needs `e0` or a `quotient` to fit it from"))?;
                        let q = ParameterIdeal::new(&a, gens.clone())?;
                        hilbert_report(&a, &q, self.n_max(args, a.dim())?)?.coeffs[0]
                    }
                };
                let window = Self::uint_arg(args, "window")?.map_or(DEFAULT_KERNEL_WINDOW, |w| w as u32);
                let act = c.action_pair(&gens[0], &gens[1]);
                let r = e1_e2_via_kernel(&c, &act, e0, window)?;
                Ok(Outcome::with_detail(json!([r.e1, r.e2]), &r))
            }
            "ann-length" => {
                let c = self.artinian_arg(args)?;
                let f = self.poly_arg(args, "elem")?;
                Ok(Outcome::plain(json!(annihilator_length(&c, &f))))
            }
            "slice-e1" => {
                let a = self.quotient_arg(args)?;
                let f = self.poly_arg(args, "elem")?;
                Ok(Outcome::plain(json!(e1_via_slice(&a, &f)?)))
            }
            "dseq" => {
                let a = self.quotient_arg(args)?;
                let gens = self.param_gens(Self::arg(args, "params")?)?;
                let any = args.get("any_order").and_then(Value::as_bool).unwrap_or(false);
                let v = if any {
                    is_d_sequence_any_order(&a, &gens)?
                } else {
                    is_d_sequence(&a, &gens)?
                };
                Ok(Outcome::plain(json!(v)))
            }
            "superficial" => {
                let a = self.quotient_arg(args)?;
                let q = self.params_arg(args, &a)?;
                let f = self.poly_arg(args, "elem")?;
                let window = match args.get("window") {
                    None => (1, 6),
                    Some(v) => serde_json::from_value::<(u32, u32)>(v.clone())
                        .map_err(|_| input("`window` must be [lo, hi]"))?,
                };
                let r = is_superficial(&a, &q, &f, window)?;
                let mut out = Outcome::with_detail(json!(r.holds), &r);
                if r.holds {
                    out.warnings.push(format!(
                        "superficiality only checked for n in {}..={}",
                        window.0.max(1),
                        window.1
                    ));
                }
                Ok(out)
            }
            "unmixed" => {
                let a = self.quotient_arg(args)?;
                let gens = self.param_gens(Self::arg(args, "params")?)?;
                if gens.len() != 2 {
                    return Err(input("unmixed needs two elements [a, b]"));
                }
                let u = unmixed_component(&a, &gens[0], &gens[1])?;
                let gb = u.ideal.gb()?;
                let basis: Vec<String> = gb.elements().iter().map(|p| p.to_string()).collect();
                Ok(Outcome::with_detail(json!(u.length_over_a), json!({ "basis": basis })))
            }
            "reduction" => {
                let a = self.quotient_arg(args)?;
                let q = self.params_arg(args, &a)?;
                let i = self.ideal_arg(args, "ideal")?;
                let cap = Self::uint_arg(args, "cap")?.map_or(DEFAULT_REDUCTION_CAP, |c| c as u32);
                let cert = is_reduction(&a, &q, &i, cap)?;
                Ok(Outcome::with_detail(json!(cert.is_some()), json!({ "reduction_number_at_most": cert })))
            }
            "sample-reductions" => {
                let a = self.quotient_arg(args)?;
                let i = self.ideal_arg(args, "ideal")?;
                let count = Self::uint_arg(args, "count")?.unwrap_or(5) as usize;
                let s = sample_reductions(&a, &i, count, self.seed(args)?)?;
                let gens: Vec<Vec<String>> = s.reductions.iter().map(|q| q.to_strings()).collect();
                Ok(Outcome {
                    value: to_json(&gens),
                    detail: json!({ "certificates": s.certificates, "tried": s.tried }),
                    warnings: s.warnings,
                })
            }
            "lambda" => {
                let a = self.quotient_arg(args)?;
                let i = self.ideal_arg(args, "ideal")?;
                let count = Self::uint_arg(args, "count")?.unwrap_or(5) as usize;
                let mut named = Vec::new();
                if let Some(v) = args.get("named") {
                    let names: Vec<String> =
                        serde_json::from_value(v.clone()).map_err(|_| input("`named` must be a list of names"))?;
                    for n in names {
                        let q = ParameterIdeal::new(&a, self.param_gens(&Value::String(n.clone()))?)?;
                        named.push((n, q));
                    }
                }
                let n_max = self.n_max(args, a.dim())?;
                let r = lambda_map(&a, &i, count, self.seed(args)?, n_max, &named)?;
                Ok(Outcome {
                    value: to_json(&r.distinct),
                    detail: to_json(&r.entries),
                    warnings: r.warnings,
                })
            }
            "sally" => {
                let a = self.quotient_arg(args)?;
                let i = self.ideal_arg(args, "ideal")?;
                let q = self.params_arg(args, &a)?;
                let n = Self::uint_arg(args, "nmax")?.map_or(4, |n| n as u32);
                let lens = sally_lengths(&a, &i, &q, n)?;
                Ok(Outcome::plain(to_json(lens.values().collect::<Vec<_>>())))
            }
            "sally-rank" => {
                let a = self.quotient_arg(args)?;
                let i = self.ideal_arg(args, "ideal")?;
                let q = self.params_arg(args, &a)?;
                let r = sally_rank(&a, &i, &q, self.n_max(args, a.dim())?)?;
                Ok(Outcome::with_detail(json!(r.rank), &r))
            }
            "kplusj" => {
                let b = self.quotient_arg(args)?;
                let j = self.ideal_arg(args, "ideal")?;
                let n_max = self.n_max(args, b.dim())?;
                let r = if args.contains_key("params") {
                    let q = ParameterIdeal::unchecked(self.param_gens(&args["params"])?);
                    k_plus_j_parameter_hilbert(&b, &j, &q, n_max)?
                } else {
                    k_plus_j_hilbert(&b, &j, n_max)?
                };
                Ok(Outcome::with_detail(to_json(&r.coeffs), &r))
            }
            "suite" => {
                let name = args.get("name").and_then(Value::as_str).unwrap_or("examples");
                if !crate::SUITE_NAMES.contains(&name) {
                    return Err(input(format!("unknown suite `{name}`")));
                }
                let r = run_suite(&SuiteConfig {
                    field: self.field(),
                    seed: self.flags.seed,
                    n_max: self.flags.n_max,
                    ..SuiteConfig::default()
                })?;
                Ok(Outcome {
                    value: json!(r.all_pass()),
                    detail: to_json(&r.checks),
                    warnings: r.warnings,
                })
            }
            other => Err(input(format!("unknown command `{other}`"))),
        }
    }

    /// Runs every task in order. Input errors abort the run; other
    /// failures are recorded and the run continues.
    pub fn run(&mut self) -> (Report, Status) {
        let mut status = Status::Ok;
        let mut results = Vec::new();
        let tasks = self.problem.tasks.clone();
        for task in &tasks {
            let start = Instant::now();
            let outcome = self.execute(task);
            let millis = self.flags.timings.then(|| start.elapsed().as_millis() as u64);
            let mut res = TaskResult {
                command: task.command.clone(),
                label: task.label.clone(),
                value: Value::Null,
                detail: Value::Null,
                expect: task.expect.clone(),
                pass: None,
                warnings: Vec::new(),
                error: None,
                millis,
            };
            match outcome {
                Ok(o) => {
                    res.pass = task.expect.as_ref().map(|e| *e == o.value);
                    if res.pass == Some(false) {
                        status = status.worst(Status::ExpectationFailed);
                    }
                    res.value = o.value;
                    res.detail = o.detail;
                    res.warnings = o.warnings;
                }
                Err(e) => {
                    let s = Status::of_error(&e);
                    status = status.worst(s);
                    res.error = Some(e.to_string());
                    if task.expect.is_some() {
                        res.pass = Some(false);
                    }
                    results.push(res);
                    if s == Status::InputError {
                        break;
                    }
                    continue;
                }
            }
            results.push(res);
        }
        let mut warnings: Vec<String> = results.iter().flat_map(|r| r.warnings.clone()).collect();
        warnings.sort();
        warnings.dedup();
        let report = Report {
            field: self.field().to_string(),
            seed: self.flags.seed,
            pass: status == Status::Ok,
            tasks: results,
            warnings,
        };
        (report, status)
    }
}

pub fn run_problem(problem: ProblemFile, flags: Flags) -> (Option<Report>, Status, Option<String>) {
    match Session::new(problem, flags) {
        Ok(mut s) => {
            let (r, st) = s.run();
            (Some(r), st, None)
        }
        Err(e) => (None, Status::of_error(&e), Some(e.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trips_through_json() {
        let text = r#"{
          "ring": {"variables": ["x", "y"], "field": "qq"},
          "ideals": {"J": ["x^2", "y^3"]},
          "quotients": {"A": {"defining": [], "dim": 2}},
          "tasks": [
            {"command": "colength", "label": "J", "args": {"ideal": "J"}, "expect": 6},
            {"command": "coeffs", "args": {"quotient": "A", "params": ["x^2", "y"]}},
            {"command": "lambda", "args": {"quotient": "A", "ideal": "m", "count": 2}},
            {"command": "colength", "args": {"ideal": ["x"]}}
          ]
        }"#;
        let problem = ProblemFile::from_json(text).unwrap();
        let flags = Flags {
            timings: true,
            ..Flags::default()
        };
        let (report, status, _) = run_problem(problem, flags);
        let report = report.unwrap();
        assert_eq!(status, Status::ResourceLimit);
        assert_eq!(report.tasks[1].value, json!([2, 0, 0]));
        let emitted = serde_json::to_string(&report).unwrap();
        let back: Report = serde_json::from_str(&emitted).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn problem_file_round_trips() {
        let text = r#"{"ring": {"variables": ["x"]}, "ideals": {"I": ["x^2"]},
            "tasks": [{"command": "colength", "args": {"ideal": "I"}, "expect": 2}]}"#;
        let p = ProblemFile::from_json(text).unwrap();
        let back = ProblemFile::from_json(&serde_json::to_string(&p).unwrap()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn input_errors_outrank_resource_limits() {
        assert_eq!(Status::ResourceLimit.worst(Status::InputError), Status::InputError);
        assert_eq!(Status::InputError.worst(Status::ExpectationFailed), Status::InputError);
        assert_eq!(Status::Ok.worst(Status::ExpectationFailed), Status::ExpectationFailed);
    }
}
