//! Verification campaigns over parameter grids.
//!
//! A campaign expands its grid into independent cases, evaluates them in
//! parallel batches and hands every finished [`CaseRecord`] to an optional
//! observer in grid order. Each [`Check`] stores the computed and claimed values
//! as JSON together with the relation between them, so pass/fail can be recomputed
//! from a serialized report with [`VerificationReport::replay`].

use std::time::Instant;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::divpow::{
    direct_sum_matrix, is_permutation_matrix, multi_indices, multinomial_composite_check, product_coefficient,
    shuffle_product_coefficient, MultiIndex,
};
use crate::error::{Error, Result};
use crate::functors::{c_presentation, q_presentation, ClassicalFunctor};
use crate::padic::{
    compositions, digit_sum, msn_bruteforce, msn_valuation_formula, multinomial_coefficient, prime_power_root,
    primes_up_to, torsion_interval, valuation, Prime,
};
use crate::structure::{blockwise_gcd_decomposition, classical_weight_decomposition, degree_via_cross_effects};
use crate::zlinalg::{ab_structure, ab_structure_dense, AbGroup};

/// Q-cells `(p^r, n)` on which additivity `Q^{p^r}(ℤⁿ) ≅ (ℤ/p)ⁿ` is checked.
pub const Q_ADDITIVITY_GRID: &[(usize, usize)] = &[
    (2, 1),
    (2, 2),
    (2, 3),
    (4, 1),
    (4, 2),
    (4, 3),
    (8, 1),
    (8, 2),
    (3, 1),
    (3, 2),
    (3, 3),
    (9, 1),
    (9, 2),
    (5, 1),
    (5, 2),
    (7, 1),
    (7, 2),
];

/// Largest `s` at which cokernel groups are also recomputed by dense SNF.
pub const DENSE_ORACLE_MAX_S: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// The two JSON values are identical.
    Equal,
    /// Both are natural numbers (decimal strings or JSON integers) and computed divides claimed.
    Divides,
    /// Claimed is an array containing computed.
    MemberOf,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub relation: Relation,
    pub computed: Value,
    pub claimed: Value,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, relation: Relation, computed: impl Serialize, claimed: impl Serialize) -> Self {
        let computed = to_value(computed);
        let claimed = to_value(claimed);
        let pass = Check::evaluate(relation, &computed, &claimed);
        Check { name: name.into(), relation, computed, claimed, pass }
    }

    pub fn equal(name: impl Into<String>, computed: impl Serialize, claimed: impl Serialize) -> Self {
        Check::new(name, Relation::Equal, computed, claimed)
    }

    fn failure(name: impl Into<String>, err: &Error) -> Self {
        Check::new(name, Relation::Equal, json!({ "error": err.to_string() }), "ok")
    }

    pub fn evaluate(relation: Relation, computed: &Value, claimed: &Value) -> bool {
        match relation {
            Relation::Equal => computed == claimed,
            Relation::Divides => match (natural(computed), natural(claimed)) {
                (Some(a), Some(b)) if !a.is_zero() => (b % a).is_zero(),
                _ => false,
            },
            Relation::MemberOf => claimed.as_array().is_some_and(|xs| xs.contains(computed)),
        }
    }

    /// Whether the stored verdict matches a fresh evaluation of the stored values.
    pub fn replays(&self) -> bool {
        self.pass == Check::evaluate(self.relation, &self.computed, &self.claimed)
    }
}

fn to_value(x: impl Serialize) -> Value {
    serde_json::to_value(x).expect("campaign values serialize to JSON")
}

fn natural(v: &Value) -> Option<BigUint> {
    match v {
        Value::Number(n) => n.as_u64().map(BigUint::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub params: Map<String, Value>,
    pub checks: Vec<Check>,
    /// Measured quantities that are reported but never asserted.
    pub observations: Map<String, Value>,
    pub pass: bool,
}

impl CaseRecord {
    fn new(params: Value) -> Self {
        let params = match params {
            Value::Object(m) => m,
            other => Map::from_iter([("value".to_string(), other)]),
        };
        CaseRecord { params, checks: Vec::new(), observations: Map::new(), pass: true }
    }

    fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    fn observe(&mut self, key: impl Into<String>, value: impl Serialize) {
        self.observations.insert(key.into(), to_value(value));
    }

    fn finish(mut self) -> Self {
        self.pass = self.checks.iter().all(|c| c.pass);
        self
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Run `body`, turning an error into a failing check so the campaign continues.
fn guarded(params: Value, body: impl FnOnce(&mut CaseRecord) -> Result<()>) -> CaseRecord {
    let mut record = CaseRecord::new(params);
    if let Err(e) = body(&mut record) {
        record.push(Check::failure("error", &e));
    }
    record.finish()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub checks: usize,
    pub checks_failed: usize,
}

impl Summary {
    fn tally(records: &[CaseRecord]) -> Self {
        let passed = records.iter().filter(|r| r.pass).count();
        let checks = records.iter().map(|r| r.checks.len()).sum();
        let checks_failed = records.iter().map(|r| r.failed_checks().count()).sum();
        Summary { cases: records.len(), passed, failed: records.len() - passed, checks, checks_failed }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub campaign: String,
    pub grid: Map<String, Value>,
    pub records: Vec<CaseRecord>,
    pub summary: Summary,
    pub duration_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// 0 when every case passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    /// Recompute every verdict and the summary from the recorded values.
    pub fn replay(&self) -> bool {
        self.records
            .iter()
            .all(|r| r.checks.iter().all(Check::replays) && r.pass == r.checks.iter().all(|c| c.pass))
            && self.summary == Summary::tally(&self.records)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The JSON form with the wall-clock field removed.
    pub fn canonical_json(&self) -> String {
        let mut v = to_value(self);
        if let Value::Object(m) = &mut v {
            m.remove("duration_ms");
        }
        serde_json::to_string_pretty(&v).expect("report serializes")
    }
}

type Observer<'o> = Box<dyn FnMut(&CaseRecord) + 'o>;
type Case<'a> = Box<dyn FnOnce() -> CaseRecord + Send + 'a>;

/// Executes campaigns, optionally streaming each record as soon as its batch completes.
#[derive(Default)]
pub struct Runner<'o> {
    observer: Option<Observer<'o>>,
}

impl<'o> Runner<'o> {
    pub fn new() -> Self {
        Runner { observer: None }
    }

    pub fn with_observer(observer: impl FnMut(&CaseRecord) + 'o) -> Self {
        Runner { observer: Some(Box::new(observer)) }
    }

    fn run(&mut self, campaign: &str, grid: Value, cases: Vec<Case<'_>>) -> VerificationReport {
        let start = Instant::now();
        let batch = 2 * rayon::current_num_threads().max(1);
        let mut records = Vec::with_capacity(cases.len());
        let mut pending = cases.into_iter().peekable();
        while pending.peek().is_some() {
            let chunk: Vec<Case<'_>> = pending.by_ref().take(batch).collect();
            let done: Vec<CaseRecord> = chunk.into_par_iter().map(|case| case()).collect();
            if let Some(observe) = self.observer.as_mut() {
                done.iter().for_each(observe);
            }
            records.extend(done);
        }
        let grid = match grid {
            Value::Object(m) => m,
            _ => Map::new(),
        };
        VerificationReport {
            campaign: campaign.to_string(),
            grid,
            summary: Summary::tally(&records),
            records,
            duration_ms: start.elapsed().as_millis() as u64,
        }
    }

    /// Brute-force valuations of `M(s, n)` against the closed formula, `1 ≤ n ≤ s ≤ s_max`.
    pub fn msn(&mut self, s_max: usize) -> Result<VerificationReport> {
        positive("s_max", s_max)?;
        let mut cases: Vec<Case<'_>> = Vec::new();
        for s in 1..=s_max {
            for n in 1..=s {
                cases.push(Box::new(move || msn_case(s, n)));
            }
        }
        Ok(self.run("msn", json!({ "s_max": s_max }), cases))
    }

    /// `Q^s(ℤⁿ)` for every `s ≤ s_max`, `n ≤ n_max`.
    pub fn q_classification(&mut self, s_max: usize, n_max: usize) -> Result<VerificationReport> {
        positive("s_max", s_max)?;
        positive("n_max", n_max)?;
        let cells: Vec<_> = (1..=s_max).flat_map(|s| (1..=n_max).map(move |n| (s, n))).collect();
        let grid = json!({ "s_max": s_max, "n_max": n_max });
        Ok(self.q_run(grid, &cells))
    }

    /// `Q^s(ℤⁿ)` on an explicit list of cells.
    pub fn q_cells(&mut self, cells: &[(usize, usize)]) -> Result<VerificationReport> {
        for &(s, n) in cells {
            positive("s", s)?;
            positive("n", n)?;
        }
        Ok(self.q_run(json!({ "cells": cells }), cells))
    }

    fn q_run(&mut self, grid: Value, cells: &[(usize, usize)]) -> VerificationReport {
        let cases = cells.iter().map(|&(s, n)| -> Case<'_> { Box::new(move || q_case(s, n)) }).collect();
        self.run("q", grid, cases)
    }

    /// Free rank 0 and exponent `| M(s, d+1)` for `C_{s,d+1}(ℤⁿ)`, `s ≤ s_max`, `n ≤ n_max`.
    pub fn torsion_bound(&mut self, s_max: usize, n_max: usize) -> Result<VerificationReport> {
        positive("s_max", s_max)?;
        positive("n_max", n_max)?;
        let mut cases: Vec<Case<'_>> = Vec::new();
        for s in 2..=s_max {
            for d in 1..s {
                for n in 1..=n_max {
                    cases.push(Box::new(move || cokernel_case(s, d, n, false)));
                }
            }
        }
        Ok(self.run("torsion", json!({ "s_max": s_max, "n_max": n_max }), cases))
    }

    /// The per-prime degree and exponent bounds for `C_{s,d+1}(ℤⁿ)`, all `1 ≤ d < s`.
    pub fn main_theorem(&mut self, s: usize, n: usize) -> Result<VerificationReport> {
        check_main(s, n)?;
        let cases = (1..s).map(|d| -> Case<'_> { Box::new(move || cokernel_case(s, d, n, true)) }).collect();
        Ok(self.run("main", json!({ "s": s, "n": n }), cases))
    }

    /// [`Runner::main_theorem`] at `n = s` for every `s ≤ s_max`.
    pub fn main_theorem_range(&mut self, s_max: usize) -> Result<VerificationReport> {
        positive("s_max", s_max)?;
        let mut cases: Vec<Case<'_>> = Vec::new();
        for s in 2..=s_max {
            for d in 1..s {
                cases.push(Box::new(move || cokernel_case(s, d, s, true)));
            }
        }
        Ok(self.run("main", json!({ "s_max": s_max, "n": "s" }), cases))
    }

    /// Composite scalars `multinomial(s, λ)` over all compositions of `s ≤ s_max`
    /// at `n ≤ n_max`, and the direct-sum decomposition of `Γ^s(ℤ^{n₁+n₂})`.
    pub fn gamma_identities(&mut self, s_max: usize, n_max: usize) -> Result<VerificationReport> {
        positive("s_max", s_max)?;
        positive("n_max", n_max)?;
        let mut cases: Vec<Case<'_>> = Vec::new();
        for s in 1..=s_max {
            for len in 1..=s {
                for lambda in compositions(s, len) {
                    for n in 1..=n_max {
                        let lambda = lambda.clone();
                        cases.push(Box::new(move || {
                            guarded(json!({ "kind": "composite", "s": s, "lambda": lambda.parts(), "n": n }), |r| {
                                let scalar = multinomial_composite_check(&lambda, n)?;
                                let claimed = multinomial_coefficient(lambda.parts());
                                r.push(Check::equal("scalar", scalar.to_string(), claimed.to_string()));
                                Ok(())
                            })
                        }));
                    }
                }
            }
            for n in 2..=n_max {
                for n1 in 1..n {
                    cases.push(Box::new(move || {
                        guarded(json!({ "kind": "direct_sum", "s": s, "n1": n1, "n2": n - n1 }), |r| {
                            let m = direct_sum_matrix(s, n1, n - n1)?;
                            r.push(Check::equal("permutation", is_permutation_matrix(&m), true));
                            Ok(())
                        })
                    }));
                }
            }
        }
        Ok(self.run("gamma", json!({ "s_max": s_max, "n_max": n_max }), cases))
    }

    /// The shuffle-product oracle against `∏ C(αⱼ+βⱼ, αⱼ)` for all
    /// `α, β ∈ ℕⁿ` with `|α| + |β| ≤ total_max`, `n ≤ n_max`.
    pub fn shuffle_products(&mut self, total_max: usize, n_max: usize) -> Result<VerificationReport> {
        positive("n_max", n_max)?;
        let mut cases: Vec<Case<'_>> = Vec::new();
        for n in 1..=n_max {
            for total in 0..=total_max {
                for a in 0..=total {
                    for alpha in multi_indices(n, a) {
                        for beta in multi_indices(n, total - a) {
                            let alpha = alpha.clone();
                            cases.push(Box::new(move || shuffle_case(alpha, beta)));
                        }
                    }
                }
            }
        }
        Ok(self.run("shuffle", json!({ "total_max": total_max, "n_max": n_max }), cases))
    }

    /// Cross-effect degree and maximal weight length at `n = d` for classical
    /// functors of weight `d ≤ d_max`: the four powers and all two-factor products.
    pub fn degrees(&mut self, d_max: usize) -> Result<VerificationReport> {
        positive("d_max", d_max)?;
        let cases = classical_functors(d_max)
            .into_iter()
            .map(|f| -> Case<'_> { Box::new(move || degree_case(f)) })
            .collect();
        Ok(self.run("degrees", json!({ "d_max": d_max }), cases))
    }
}

pub fn verify_msn(s_max: usize) -> Result<VerificationReport> {
    Runner::new().msn(s_max)
}

pub fn verify_q_classification(s_max: usize, n_max: usize) -> Result<VerificationReport> {
    Runner::new().q_classification(s_max, n_max)
}

pub fn verify_torsion_bound(s_max: usize, n_max: usize) -> Result<VerificationReport> {
    Runner::new().torsion_bound(s_max, n_max)
}

pub fn verify_main_theorem(s: usize, n: usize) -> Result<VerificationReport> {
    Runner::new().main_theorem(s, n)
}

pub fn verify_gamma_identities(s_max: usize, n_max: usize) -> Result<VerificationReport> {
    Runner::new().gamma_identities(s_max, n_max)
}

pub fn verify_shuffle_products(total_max: usize, n_max: usize) -> Result<VerificationReport> {
    Runner::new().shuffle_products(total_max, n_max)
}

pub fn verify_degrees(d_max: usize) -> Result<VerificationReport> {
    Runner::new().degrees(d_max)
}

fn positive(name: &str, x: usize) -> Result<()> {
    if x == 0 {
        return Err(Error::InvalidParameter(format!("{name} must be at least 1")));
    }
    Ok(())
}

fn check_main(s: usize, n: usize) -> Result<()> {
    positive("s", s)?;
    if n < s {
        return Err(Error::RankBelowWeight { rank: n, weight: s });
    }
    Ok(())
}

fn msn_case(s: usize, n: usize) -> CaseRecord {
    guarded(json!({ "s": s, "n": n }), |r| {
        let m = msn_bruteforce(s, n)?;
        r.observe("m", m.to_string());
        let mut cofactor = m.clone();
        for p in primes_up_to(s as u64) {
            let v = valuation(p, &m)?;
            let formula = msn_valuation_formula(p, s, n)?;
            r.push(Check::equal(format!("v_{p}"), v, formula));
            cofactor /= BigUint::from(p.get()).pow(v as u32);
        }
        // The formula gives no valuation for p > s, so M(s, n) must be supported on primes ≤ s.
        r.push(Check::equal("cofactor", cofactor.to_string(), "1"));
        Ok(())
    })
}

/// `(ℤ/p)ⁿ` for `s = p^r`, `ℤⁿ` for `s = 1`, trivial otherwise.
pub fn expected_q(s: usize, n: usize) -> AbGroup {
    if s == 1 {
        return AbGroup::free(n);
    }
    match prime_power_root(s as u64) {
        Some((p, _)) => AbGroup::from_orders(0, vec![BigUint::from(p.get()); n]),
        None => AbGroup::trivial(),
    }
}

fn q_case(s: usize, n: usize) -> CaseRecord {
    guarded(json!({ "s": s, "n": n }), |r| {
        let group = ab_structure(q_presentation(s, n)?.presentation());
        r.push(Check::equal("group", &group, expected_q(s, n)));
        Ok(())
    })
}

fn exponent_string(g: &AbGroup) -> String {
    g.exponent().to_string()
}

fn cokernel_case(s: usize, d: usize, n: usize, per_prime: bool) -> CaseRecord {
    guarded(json!({ "s": s, "d": d, "n": n }), |r| {
        let v = c_presentation(s, d, n)?;
        let dec = blockwise_gcd_decomposition(&v)?;
        let total = dec.total();
        r.observe("group", &total);
        r.push(Check::equal("free_rank", total.free_rank(), 0));
        let bound = msn_bruteforce(s, d + 1)?;
        r.push(Check::new("exponent_divides_msn", Relation::Divides, exponent_string(&total), bound.to_string()));
        if s <= DENSE_ORACLE_MAX_S {
            r.push(Check::equal("dense_oracle", ab_structure_dense(v.presentation()), &total));
        }
        if !per_prime {
            return Ok(());
        }
        let degree = dec.max_length();
        r.observe("degree", degree);
        r.observe("degree_at_most_d", degree.finite().is_none_or(|k| k <= d));
        for p in primes_up_to(s as u64) {
            let part = dec.p_primary_total(p);
            if part.is_trivial() {
                continue;
            }
            let dp = dec.p_primary_max_length(p).finite().expect("nonzero primary part has a weight");
            let interval = torsion_interval(p, s as u64)?;
            r.push(Check::new(format!("p{p}_degree_in_interval"), Relation::MemberOf, dp, &interval.members));
            let r_exp = bound_exponent(p, s, dp);
            let p_bound = BigUint::from(p.get()).pow(r_exp as u32);
            r.push(Check::new(
                format!("p{p}_exponent_bound"),
                Relation::Divides,
                exponent_string(&part),
                p_bound.to_string(),
            ));
            let mut lengths: Vec<usize> = dec
                .blocks()
                .iter()
                .filter(|(_, g)| !g.p_primary(p).is_trivial())
                .map(|(label, _)| label.length())
                .collect();
            lengths.sort_unstable();
            lengths.dedup();
            let outside: Vec<usize> = lengths.iter().copied().filter(|&k| !interval.contains(k as u64)).collect();
            r.observe(
                format!("p{p}"),
                json!({
                    "degree": dp,
                    "exponent": exponent_string(&part),
                    "bound": p_bound.to_string(),
                    "block_lengths": lengths,
                    "lengths_outside_interval": outside,
                }),
            );
        }
        Ok(())
    })
}

/// `⌈(deg + 1 − DIG_p(s)) / (p − 1)⌉`, or 0 when the numerator is not positive.
pub fn bound_exponent(p: Prime, s: usize, degree: usize) -> u64 {
    let dig = digit_sum(p, s as u64);
    let top = degree as u64 + 1;
    if top <= dig {
        0
    } else {
        (top - dig).div_ceil(p.get() - 1)
    }
}

fn shuffle_case(alpha: MultiIndex, beta: MultiIndex) -> CaseRecord {
    let params = json!({ "alpha": alpha.entries(), "beta": beta.entries() });
    guarded(params, |r| {
        let oracle = shuffle_product_coefficient(&alpha, &beta)?;
        let closed = product_coefficient(&alpha, &beta)?;
        r.push(Check::equal("shuffle_vs_closed_form", oracle.to_string(), closed.to_string()));
        Ok(())
    })
}

/// `Γ^d, S^d, Λ^d, ⊗^d` for `d ≤ d_max`, then every `F ⊗ G` of those kinds with
/// positive weights summing to at most `d_max`.
pub fn classical_functors(d_max: usize) -> Vec<ClassicalFunctor> {
    use ClassicalFunctor::*;
    let kinds: [fn(usize) -> ClassicalFunctor; 4] = [DividedPower, Symmetric, Exterior, TensorPower];
    let mut out = Vec::new();
    for d in 1..=d_max {
        out.extend(kinds.iter().map(|k| k(d)));
    }
    for d in 2..=d_max {
        for a in 1..d {
            for f in &kinds {
                for g in &kinds {
                    out.push(TensorProduct(vec![f(a), g(d - a)]));
                }
            }
        }
    }
    out
}

fn degree_case(f: ClassicalFunctor) -> CaseRecord {
    let d = f.weight();
    guarded(json!({ "functor": f.to_string(), "d": d }), |r| {
        let cross = degree_via_cross_effects(&f);
        let weights = classical_weight_decomposition(&f, d)?.max_length();
        r.push(Check::equal("cross_effect_degree", cross, d));
        r.push(Check::equal("max_weight_length", weights, d));
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(report: &VerificationReport, params: Value) -> &CaseRecord {
        report.records.iter().find(|r| Value::Object(r.params.clone()) == params).expect("record present")
    }

    fn check<'a>(record: &'a CaseRecord, name: &str) -> &'a Check {
        record.checks.iter().find(|c| c.name == name).expect("check present")
    }

    #[test]
    fn relations() {
        assert!(Check::evaluate(Relation::Divides, &json!("3"), &json!("12")));
        assert!(Check::evaluate(Relation::Divides, &json!(3), &json!("3")));
        assert!(!Check::evaluate(Relation::Divides, &json!("5"), &json!("12")));
        assert!(!Check::evaluate(Relation::Divides, &json!("infinite"), &json!("12")));
        assert!(Check::evaluate(Relation::MemberOf, &json!(2), &json!([2, 4])));
        assert!(!Check::evaluate(Relation::MemberOf, &json!(3), &json!([2, 4])));
    }

    #[test]
    fn msn_examples() {
        let report = verify_msn(1).unwrap();
        assert_eq!(report.summary.cases, 1);
        assert_eq!(report.records[0].observations["m"], json!("1"));
        let report = verify_msn(5).unwrap();
        assert!(report.passed());
        let c = check(record(&report, json!({ "s": 4, "n": 3 })), "v_2");
        assert_eq!((c.computed.clone(), c.claimed.clone()), (json!(2), json!(2)));
        assert!(verify_msn(0).is_err());
    }

    #[test]
    fn q_examples() {
        let report = verify_q_classification(4, 3).unwrap();
        assert!(report.passed());
        let g = &check(record(&report, json!({ "s": 4, "n": 3 })), "group").computed;
        assert_eq!(g["invariant_factors"], json!(["2", "2", "2"]));
        let g = &check(record(&report, json!({ "s": 1, "n": 2 })), "group").computed;
        assert_eq!(g["free_rank"], json!(2));
        assert_eq!(expected_q(6, 1), AbGroup::trivial());
    }

    #[test]
    fn main_theorem_examples() {
        let report = verify_main_theorem(4, 4).unwrap();
        assert!(report.passed(), "{}", report.to_json());
        let r = record(&report, json!({ "s": 4, "d": 2, "n": 4 }));
        assert_eq!(check(r, "p3_degree_in_interval").computed, json!(2));
        assert_eq!(check(r, "p3_degree_in_interval").claimed, json!([2, 4]));
        assert_eq!(check(r, "p3_exponent_bound").computed, json!("3"));
        assert_eq!(check(r, "p3_exponent_bound").claimed, json!("3"));

        let report = verify_main_theorem(2, 2).unwrap();
        let r = &report.records[0];
        assert_eq!(check(r, "p2_exponent_bound").computed, json!("2"));
        assert_eq!(check(r, "p2_exponent_bound").claimed, json!("2"));
        assert!(matches!(verify_main_theorem(4, 3), Err(Error::RankBelowWeight { .. })));
    }

    #[test]
    fn bound_exponents() {
        let p2 = Prime::new(2).unwrap();
        let p3 = Prime::new(3).unwrap();
        assert_eq!(bound_exponent(p2, 2, 1), 1);
        assert_eq!(bound_exponent(p2, 4, 4), 4);
        assert_eq!(bound_exponent(p3, 4, 2), 1);
        assert_eq!(bound_exponent(p2, 4, 0), 0);
    }

    #[test]
    fn gamma_examples() {
        let report = verify_gamma_identities(4, 1).unwrap();
        assert!(report.passed());
        let r = record(&report, json!({ "kind": "composite", "s": 2, "lambda": [1, 1], "n": 1 }));
        assert_eq!(check(r, "scalar").computed, json!("2"));
        let r = record(&report, json!({ "kind": "composite", "s": 4, "lambda": [2, 2], "n": 1 }));
        assert_eq!(check(r, "scalar").computed, json!("6"));
    }

    #[test]
    fn degree_examples() {
        let report = verify_degrees(3).unwrap();
        assert!(report.passed());
        assert_eq!(report.summary.cases, 12 + 16 * 3);
    }

    #[test]
    fn failures_are_recorded_and_replayable() {
        let mut report = verify_msn(3).unwrap();
        assert!(report.replay());
        let first = &mut report.records[0].checks[0];
        first.claimed = json!("tampered");
        assert!(!report.replay());
        let bad = guarded(json!({}), |_| Err(Error::InvalidParameter("boom".into())));
        assert!(!bad.pass);
        assert_eq!(bad.checks[0].computed["error"], json!("invalid parameter: boom"));
    }

    #[test]
    fn observer_sees_records_in_order() {
        let mut seen = Vec::new();
        let report = Runner::with_observer(|r: &CaseRecord| seen.push(r.params.clone())).msn(6).unwrap();
        let params: Vec<_> = report.records.iter().map(|r| r.params.clone()).collect();
        assert_eq!(seen, params);
    }

    #[test]
    fn deterministic_json() {
        let a = verify_main_theorem(3, 3).unwrap();
        let b = verify_main_theorem(3, 3).unwrap();
        assert_eq!(a.canonical_json(), b.canonical_json());
        let back: VerificationReport = serde_json::from_str(&a.to_json()).unwrap();
        assert_eq!(back, a);
        assert!(back.replay());
    }
}
