//! Oracle sweeps over ranges of discriminants and conductors.
//!
//! Each check runs its cases independently (in parallel when requested) and
//! reports a pass/fail row. These drive the CLI `selftest` command and the
//! benchmarks.

use std::collections::BTreeSet;

use crate::arith::{self, Discriminant, Int};
use crate::error::Result;
use crate::form::{Form, IntMatrix2};
use crate::nesting;
use crate::oracle::{self, OrbitBudget, OrbitVerdict};
use crate::par::{self, Execution};
use crate::reduction;

/// Sweep parameters: negative discriminants in `dmin..=dmax` and odd prime conductors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub dmin: Int,
    pub dmax: Int,
    pub primes: Vec<Int>,
    pub exec: Execution,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { dmin: -200, dmax: -3, primes: vec![3, 5, 7], exec: Execution::default() }
    }
}

impl SweepConfig {
    /// Valid negative discriminants in range.
    pub fn discriminants(&self) -> Vec<Int> {
        (self.dmin..=self.dmax.min(-1)).filter(|&d| Discriminant::new(d).is_ok()).collect()
    }

    pub fn fundamental_discriminants(&self) -> Vec<Int> {
        self.discriminants()
            .into_iter()
            .filter(|&d| Discriminant::new(d).is_ok_and(Discriminant::is_fundamental))
            .collect()
    }

    fn grid(&self, ds: Vec<Int>) -> Vec<(Int, Int)> {
        ds.into_iter().flat_map(|d| self.primes.iter().map(move |&f| (d, f))).collect()
    }
}

/// One line of a sweep report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRow {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl CheckRow {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

type CaseResult = std::result::Result<(), String>;

fn run<T, F>(name: &'static str, cases: Vec<T>, exec: Execution, check: F) -> CheckRow
where
    T: Send,
    F: Fn(T) -> CaseResult + Sync + Send,
{
    let n = cases.len();
    let outcomes = par::map_vec(cases, exec, check);
    let failures: Vec<String> = outcomes.into_iter().filter_map(|r| r.err()).collect();
    CheckRow { name, cases: n, failures: failures.len(), first_failure: failures.into_iter().next() }
}

fn err<E: std::fmt::Display>(context: impl std::fmt::Display) -> impl FnOnce(E) -> String {
    move |e| format!("{context}: {e}")
}

/// `|class_set(D)|` against the triple-scan count for every discriminant in range.
pub fn class_count_check(cfg: &SweepConfig) -> CheckRow {
    run("class-count", cfg.discriminants(), cfg.exec, |d| {
        let fast = reduction::class_set_with(d, Execution::Sequential).map_err(err(d))?.len();
        let slow = oracle::exhaustive_class_count(d).map_err(err(d))?;
        if fast == slow {
            Ok(())
        } else {
            Err(format!("D={d}: class_set has {fast}, scan has {slow}"))
        }
    })
}

/// The set of descended bases of `H(D f^2)`.
pub fn descended_classes(d: Int, f: Int) -> Result<BTreeSet<Form>> {
    let upper = reduction::class_set_with(d * f * f, Execution::Sequential)?;
    upper
        .iter()
        .map(|big_q| {
            let r = nesting::descend(big_q, f)?;
            debug_assert_eq!(r.base.act(&r.lift).as_ref(), Ok(big_q));
            Ok(r.base)
        })
        .collect()
}

fn surjectivity_case((d, f): (Int, Int)) -> CaseResult {
    let ctx = format!("D={d} f={f}");
    let upper = reduction::class_set_with(d * f * f, Execution::Sequential).map_err(err(&ctx))?;
    let mut images = BTreeSet::new();
    for big_q in upper.iter() {
        let r = nesting::descend(big_q, f).map_err(err(&ctx))?;
        if r.base.act(&r.lift).as_ref() != Ok(big_q) || r.lift.det() != Ok(f) {
            return Err(format!("{ctx}: bad descent witness for {big_q}"));
        }
        images.insert(r.base);
    }
    let base: BTreeSet<Form> = reduction::class_set_with(d, Execution::Sequential)
        .map_err(err(&ctx))?
        .iter()
        .copied()
        .collect();
    if images == base {
        Ok(())
    } else {
        Err(format!("{ctx}: descended {} classes, H(D) has {}", images.len(), base.len()))
    }
}

/// Descending all of `H(D f^2)` yields exactly `H(D)`, for fundamental `D`.
pub fn surjectivity_check(cfg: &SweepConfig) -> CheckRow {
    run("surjectivity", cfg.grid(cfg.fundamental_discriminants()), cfg.exec, surjectivity_case)
}

fn fiber_case((d, f): (Int, Int)) -> CaseResult {
    let ctx = format!("D={d} f={f}");
    let expected = f - arith::kronecker(d, f).map_err(err(&ctx))? as Int;
    let mut total = 0usize;
    for q in reduction::class_set_with(d, Execution::Sequential).map_err(err(&ctx))?.iter() {
        let (normalized, w) = reduction::normalize_coprime(q, f).map_err(err(&ctx))?;
        if !w.certifies(q, &normalized) {
            return Err(format!("{ctx}: normalization witness failed for {q}"));
        }
        let q = normalized;
        let classes = nesting::fiber(&q, f).map_err(err(&ctx))?;
        if classes.len() as Int != expected {
            return Err(format!("{ctx}: fiber of {q} has {} classes, expected {expected}", classes.len()));
        }
        total += classes.len();
    }
    let upper = reduction::class_set_with(d * f * f, Execution::Sequential).map_err(err(&ctx))?.len();
    if total == upper {
        Ok(())
    } else {
        Err(format!("{ctx}: fibers sum to {total}, H(D f^2) has {upper}"))
    }
}

/// Fiber sizes `f - (D/f)` for `D < -4`, and their sum equals `|H(D f^2)|`.
pub fn fiber_cardinality_check(cfg: &SweepConfig) -> CheckRow {
    let ds = cfg.fundamental_discriminants().into_iter().filter(|&d| d < -4).collect();
    run("fiber-cardinality", cfg.grid(ds), cfg.exec, fiber_case)
}

fn exceptional_case((d, f): (Int, Int)) -> CaseResult {
    let ctx = format!("D={d} f={f}");
    let q = Form::principal(Discriminant::new(d).map_err(err(&ctx))?).map_err(err(&ctx))?;
    let mut fast: Vec<Vec<Int>> = nesting::fiber(&q, f)
        .map_err(err(&ctx))?
        .into_iter()
        .map(|c| c.indices.iter().map(|i| i.g()).collect())
        .collect();
    fast.iter_mut().for_each(|g| g.sort());
    fast.sort();
    let predicted = oracle::exceptional_index_groups(d, f).map_err(err(&ctx))?;
    let orbit = oracle::exhaustive_fiber_check(&q, f).map_err(err(&ctx))?;
    if orbit.inconclusive {
        return Err(format!("{ctx}: orbit search inconclusive, raise the budget"));
    }
    let size = if d == -4 { 2 } else { 3 };
    if fast != predicted || orbit.groups != predicted || fast.iter().any(|g| g.len() != size) {
        return Err(format!("{ctx}: fiber {fast:?}, formula {predicted:?}, orbit {:?}", orbit.groups));
    }
    Ok(())
}

/// Lift groupings at `D = -4` (pairs) and `D = -3` (triples): fiber, index
/// formula and orbit search agree.
pub fn exceptional_check(cfg: &SweepConfig) -> CheckRow {
    let ds = [-4, -3].into_iter().filter(|d| (cfg.dmin..=cfg.dmax).contains(d)).collect();
    run("exceptional-grouping", cfg.grid(ds), cfg.exec, exceptional_case)
}

fn orbit_case(d: Int) -> CaseResult {
    let members: Vec<Form> =
        reduction::class_set_with(d, Execution::Sequential).map_err(err(d))?.iter().copied().collect();
    let mix = IntMatrix2::new(2, 1, 5, 3);
    for q1 in &members {
        let moved = q1.act(&mix).map_err(err(d))?;
        for q2 in &members {
            let fast = reduction::equivalent(&moved, q2).map_err(err(d))?;
            if let Some(w) = &fast {
                if !w.certifies(&moved, q2) {
                    return Err(format!("D={d}: witness {w} fails for {moved} -> {q2}"));
                }
            }
            let slow = oracle::orbit_equivalent(&moved, q2, OrbitBudget::for_forms([&moved, q2]));
            let agree = match slow {
                OrbitVerdict::Equivalent => fast.is_some(),
                OrbitVerdict::Inequivalent => fast.is_none(),
                OrbitVerdict::Inconclusive => return Err(format!("D={d}: inconclusive orbit search")),
            };
            if !agree {
                return Err(format!("D={d}: equivalent and orbit search disagree on {moved}, {q2}"));
            }
        }
    }
    Ok(())
}

/// Reduction-based equivalence against orbit search on translated class members.
pub fn orbit_agreement_check(cfg: &SweepConfig) -> CheckRow {
    run("orbit-agreement", cfg.discriminants(), cfg.exec, orbit_case)
}

/// Every check, in report order.
pub fn selftest(cfg: &SweepConfig) -> Vec<CheckRow> {
    vec![
        class_count_check(cfg),
        orbit_agreement_check(cfg),
        surjectivity_check(cfg),
        fiber_cardinality_check(cfg),
        exceptional_check(cfg),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_selftest_passes() {
        let cfg = SweepConfig { dmin: -120, dmax: -3, primes: vec![3, 5], exec: Execution::Parallel };
        for row in selftest(&cfg) {
            assert!(row.passed(), "{row:?}");
            assert!(row.cases > 0, "{row:?}");
        }
    }

    #[test]
    fn descended_classes_cover_base() {
        let base: BTreeSet<Form> = reduction::class_set(-23).unwrap().iter().copied().collect();
        assert_eq!(descended_classes(-23, 3).unwrap(), base);
    }

    #[test]
    fn execution_modes_agree() {
        let mut cfg = SweepConfig { dmin: -80, dmax: -3, primes: vec![3], exec: Execution::Sequential };
        let seq = selftest(&cfg);
        cfg.exec = Execution::Parallel;
        assert_eq!(seq, selftest(&cfg));
    }
}
