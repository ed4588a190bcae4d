//! Identity suites behind `sbmotive verify`.

use std::collections::BTreeMap;

use num_integer::Integer;
use rayon::prelude::*;
use sbmotive::chow::{omega1_power, Basis, Monomial};
use sbmotive::exactmath::{degree_coefficient, is_prime};
use sbmotive::motives::{cong2_exact, sb_indecomposable, sb_iso_criterion, verify_congruence};
use sbmotive::partitions::{enumerate_partitions, jumps, BoxShape};
use sbmotive::poincare::{divides, gaussian_binomial};
use sbmotive::serial::SCHEMA_VERSION;
use sbmotive::tableaux::{count_syt, rs_identity, rs_identity_enumerated, EnumerationBudget};
use sbmotive::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Rs,
    Cong,
    Cong2,
    Pieri,
    Poincare,
    Sb,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Rs => "rs",
            Suite::Cong => "cong",
            Suite::Cong2 => "cong2",
            Suite::Pieri => "pieri",
            Suite::Poincare => "poincare",
            Suite::Sb => "sb",
            Suite::All => "all",
        }
    }
}

/// Bounds for every suite; unset options fall back to per-suite defaults.
#[derive(Clone, Debug, Default, clap::Args)]
pub struct Bounds {
    /// Largest alphabet size d for the RS identity.
    #[arg(long)]
    pub d_max: Option<u32>,
    /// Largest weight m for the RS identity (closed forms).
    #[arg(long)]
    pub m_max: Option<u32>,
    /// Largest weight checked by full tableau enumeration in the RS suite.
    #[arg(long)]
    pub enum_m_max: Option<u32>,
    /// Comma-separated primes for the congruence and projective-space suites.
    #[arg(long, value_delimiter = ',')]
    pub primes: Option<Vec<u32>>,
    /// Largest m for the two-term sum.
    #[arg(long)]
    pub max_m: Option<u32>,
    /// Largest n for the Pieri and Poincare suites.
    #[arg(long)]
    pub max_n: Option<u32>,
}

#[derive(Debug)]
pub struct BadBounds(pub String);

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub parameters: BTreeMap<&'static str, Value>,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: &'static str,
    pub suite: &'static str,
    pub parameters: BTreeMap<&'static str, Value>,
    pub checks: Vec<Check>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_secs: Option<f64>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

fn params<const N: usize>(pairs: [(&'static str, Value); N]) -> BTreeMap<&'static str, Value> {
    pairs.into_iter().collect()
}

fn check(name: &str, parameters: BTreeMap<&'static str, Value>, expected: Value, actual: Value) -> Check {
    Check {
        name: name.to_string(),
        pass: expected == actual,
        parameters,
        expected,
        actual,
    }
}

fn failed(name: &str, parameters: BTreeMap<&'static str, Value>, expected: Value, err: impl ToString) -> Check {
    Check {
        name: name.to_string(),
        parameters,
        expected,
        actual: json!({ "error": err.to_string() }),
        pass: false,
    }
}

fn s(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

/// Resolved bounds for one run.
struct Plan {
    d_max: u32,
    m_max: u32,
    enum_m_max: u32,
    cong_primes: Vec<u32>,
    sb_primes: Vec<u32>,
    max_m: u32,
    pieri_max_n: u32,
    poincare_max_n: u32,
}

fn plan(suite: Suite, b: &Bounds, budget: EnumerationBudget) -> Result<Plan, BadBounds> {
    let p = Plan {
        d_max: b.d_max.unwrap_or(4),
        m_max: b.m_max.unwrap_or(12),
        enum_m_max: b.enum_m_max.unwrap_or(8.min(budget.max_weight)),
        cong_primes: b.primes.clone().unwrap_or_else(|| vec![5, 7, 11, 13]),
        sb_primes: b.primes.clone().unwrap_or_else(|| vec![3, 5, 7]),
        max_m: b.max_m.unwrap_or(30),
        pieri_max_n: b.max_n.unwrap_or(9),
        poincare_max_n: b.max_n.unwrap_or(20),
    };
    let uses = |s: Suite| suite == s || suite == Suite::All;
    if uses(Suite::Rs) {
        if p.d_max == 0 || p.d_max > 8 || p.m_max > 40 {
            return Err(BadBounds(format!("RS bounds need 1 <= d-max <= 8 and m-max <= 40, got {} and {}", p.d_max, p.m_max)));
        }
        if p.enum_m_max > budget.max_weight {
            return Err(BadBounds(format!(
                "enum-m-max {} exceeds the enumeration budget {} (set SBMOTIVE_ENUM_BUDGET to raise it)",
                p.enum_m_max, budget.max_weight
            )));
        }
    }
    if uses(Suite::Cong) {
        for &n in &p.cong_primes {
            if !is_prime(n.into()) || !(5..=31).contains(&n) {
                return Err(BadBounds(format!("congruence primes must be primes in 5..=31, got {n}")));
            }
        }
    }
    if uses(Suite::Sb) {
        for &n in &p.sb_primes {
            if !is_prime(n.into()) || n > 13 {
                return Err(BadBounds(format!("projective-space scans need primes up to 13, got {n}")));
            }
        }
    }
    if uses(Suite::Cong2) && p.max_m > 500 {
        return Err(BadBounds(format!("max-m {} above 500", p.max_m)));
    }
    if uses(Suite::Pieri) && !(2..=14).contains(&p.pieri_max_n) {
        return Err(BadBounds(format!("Pieri max-n must be in 2..=14, got {}", p.pieri_max_n)));
    }
    if uses(Suite::Poincare) && !(2..=60).contains(&p.poincare_max_n) {
        return Err(BadBounds(format!("Poincare max-n must be in 2..=60, got {}", p.poincare_max_n)));
    }
    Ok(p)
}

fn rs_checks(p: &Plan, budget: EnumerationBudget) -> Vec<Check> {
    let mut jobs: Vec<(u32, u32, bool)> = Vec::new();
    for d in 1..=p.d_max {
        for m in 0..=p.m_max {
            jobs.push((d, m, false));
        }
    }
    for d in 1..=p.d_max.min(3) {
        for m in 0..=p.enum_m_max {
            jobs.push((d, m, true));
        }
    }
    jobs.par_iter()
        .map(|&(d, m, enumerate)| {
            let name = if enumerate { "rs_enumerated" } else { "rs_closed_form" };
            let par = params([("d", json!(d)), ("m", json!(m))]);
            let expected = s(&BigInt::from(d).pow(m));
            let result = if enumerate { rs_identity_enumerated(d, m, budget) } else { rs_identity(d, m) };
            match result {
                Ok((lhs, _)) => check(name, par, expected, s(&lhs)),
                Err(e) => failed(name, par, expected, e),
            }
        })
        .collect()
}

fn cong_checks(p: &Plan) -> Vec<Check> {
    let mut jobs = Vec::new();
    for &n in &p.cong_primes {
        for d in 2..=n / 2 {
            for m in 0..n {
                jobs.push((n, d, m));
            }
        }
    }
    jobs.par_iter()
        .map(|&(n, d, m)| {
            let par = params([("n", json!(n)), ("d", json!(d)), ("m", json!(m))]);
            let target = BigInt::from(d).pow(m) % BigInt::from(n);
            let expected = json!({ "residue": target.to_string(), "routes_agree": true });
            match verify_congruence(n, d, m) {
                Ok(c) => {
                    let residue = ((&c.lhs % BigInt::from(n)) + BigInt::from(n)) % BigInt::from(n);
                    let agree = c.lhs == c.schubert_sum;
                    Check {
                        name: "congruence".into(),
                        pass: residue == target && agree && c.holds,
                        parameters: par,
                        expected,
                        actual: json!({ "residue": residue.to_string(), "routes_agree": agree, "lhs": c.lhs.to_string() }),
                    }
                }
                Err(e) => failed("congruence", par, expected, e),
            }
        })
        .collect()
}

fn cong2_checks(p: &Plan) -> Vec<Check> {
    (0..=p.max_m)
        .into_par_iter()
        .map(|m| {
            let par = params([("m", json!(m))]);
            let expected = s(&(BigInt::from(1) << m));
            match cong2_exact(m) {
                Ok(v) => check("two_term_sum", par, expected, s(&v)),
                Err(e) => failed("two_term_sum", par, expected, e),
            }
        })
        .collect()
}

fn pieri_checks(p: &Plan) -> Vec<Check> {
    let mut jobs = Vec::new();
    for n in 2..=p.pieri_max_n {
        for d in 1..n {
            let area = d * (n - d);
            for m in 0..n.min(area + 1) {
                jobs.push((n, d, m));
            }
        }
    }
    jobs.par_iter()
        .map(|&(n, d, m)| {
            let par = params([("n", json!(n)), ("d", json!(d)), ("m", json!(m))]);
            let run = || -> sbmotive::Result<(Value, Value)> {
                let shape = BoxShape::grassmannian(d, n)?;
                let power = omega1_power(m, d, n)?;
                let mut expected = serde_json::Map::new();
                let mut actual = serde_json::Map::new();
                for rho in enumerate_partitions(m, shape) {
                    let formula = degree_coefficient(m.into(), &jumps(&rho, shape)?)?;
                    let syt = count_syt(&rho);
                    let c = power.coefficient(&Monomial::Single(Basis::Omega(rho.clone())));
                    expected.insert(rho.to_string(), json!([formula.to_string(), formula.to_string()]));
                    actual.insert(rho.to_string(), json!([c.to_string(), syt.to_string()]));
                }
                Ok((Value::Object(expected), Value::Object(actual)))
            };
            match run() {
                Ok((expected, actual)) => check("omega1_power_coefficients", par, expected, actual),
                Err(e) => failed("omega1_power_coefficients", par, Value::Null, e),
            }
        })
        .collect()
}

fn poincare_checks(p: &Plan) -> Vec<Check> {
    let mut jobs = Vec::new();
    for n in 2..=p.poincare_max_n {
        for d in 1..n {
            jobs.push((n, d));
        }
    }
    jobs.par_iter()
        .map(|&(n, d)| {
            let par = params([("n", json!(n)), ("d", json!(d))]);
            let coprime = n.gcd(&d) == 1;
            let expected = json!({ "divides": coprime });
            let run = || -> sbmotive::Result<Value> {
                let q = divides(&gaussian_binomial(n, 1)?, &gaussian_binomial(n, d)?)?;
                Ok(json!({ "divides": q.is_some() }))
            };
            match run() {
                Ok(actual) => check("projective_divides_grassmannian", par, expected, actual),
                Err(e) => failed("projective_divides_grassmannian", par, expected, e),
            }
        })
        .collect()
}

fn sb_checks(p: &Plan) -> Vec<Check> {
    let mut jobs: Vec<(u32, Option<i64>)> = Vec::new();
    for &n in &p.sb_primes {
        jobs.push((n, None));
        for r in 0..i64::from(n) {
            jobs.push((n, Some(r)));
        }
    }
    jobs.par_iter()
        .map(|&(n, r)| match r {
            None => {
                let par = params([("n", json!(n))]);
                match sb_indecomposable(n) {
                    Ok(v) => check("projective_motive_indecomposable", par, json!(true), json!(v)),
                    Err(e) => failed("projective_motive_indecomposable", par, json!(true), e),
                }
            }
            Some(r) => {
                let par = params([("n", json!(n)), ("r", json!(r))]);
                let expected = json!(r == 1 || r == i64::from(n) - 1);
                match sb_iso_criterion(n, r) {
                    Ok(v) => check("projective_motive_isomorphism", par, expected, json!(v)),
                    Err(e) => failed("projective_motive_isomorphism", par, expected, e),
                }
            }
        })
        .collect()
}

pub fn run(suite: Suite, bounds: &Bounds, budget: EnumerationBudget) -> Result<Report, BadBounds> {
    let p = plan(suite, bounds, budget)?;
    let uses = |s: Suite| suite == s || suite == Suite::All;
    let mut checks = Vec::new();
    let mut parameters = BTreeMap::new();
    if uses(Suite::Rs) {
        parameters.insert("d_max", json!(p.d_max));
        parameters.insert("m_max", json!(p.m_max));
        parameters.insert("enum_m_max", json!(p.enum_m_max));
        checks.extend(rs_checks(&p, budget));
    }
    if uses(Suite::Cong) {
        parameters.insert("cong_primes", json!(p.cong_primes));
        checks.extend(cong_checks(&p));
    }
    if uses(Suite::Cong2) {
        parameters.insert("max_m", json!(p.max_m));
        checks.extend(cong2_checks(&p));
    }
    if uses(Suite::Pieri) {
        parameters.insert("pieri_max_n", json!(p.pieri_max_n));
        checks.extend(pieri_checks(&p));
    }
    if uses(Suite::Poincare) {
        parameters.insert("poincare_max_n", json!(p.poincare_max_n));
        checks.extend(poincare_checks(&p));
    }
    if uses(Suite::Sb) {
        parameters.insert("sb_primes", json!(p.sb_primes));
        checks.extend(sb_checks(&p));
    }
    parameters.insert("enumeration_budget", json!(budget.max_weight));
    let passed = checks.iter().filter(|c| c.pass).count();
    Ok(Report {
        schema: SCHEMA_VERSION,
        command: "verify",
        suite: suite.name(),
        parameters,
        summary: Summary {
            total: checks.len(),
            passed,
            failed: checks.len() - passed,
        },
        checks,
        wall_time_secs: None,
    })
}
