use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{AdjoinStep, RealizationTrace};
use crate::catenary::{
    betti_elements, catenary_element_with, catenary_set, default_window, monoid_catenary,
    CatenaryConfig,
};
use crate::monoid::NumericalMonoid;

/// Limits on how much direct recomputation `verify_trace` does.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyBudget {
    /// Largest default window swept element by element.
    pub window: u64,
    /// Largest `frobenius + 2·n_k` for which Betti elements are rescanned.
    pub betti_scan: u64,
    /// Elements of the result monoid checked against the closed form, on
    /// top of the Betti elements and their neighbours.
    pub samples: usize,
}

impl Default for VerifyBudget {
    fn default() -> Self {
        VerifyBudget {
            window: 20_000,
            betti_scan: 20_000_000,
            samples: 64,
        }
    }
}

impl VerifyBudget {
    pub fn with_window(window: u64) -> Self {
        VerifyBudget {
            window,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Passed,
    Failed,
    /// Over budget; nothing was concluded.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    /// `"base"` or `"step i (c=…)"`.
    pub scope: String,
    pub check: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    /// No check failed. Skipped checks do not count against the trace.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Failed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Failed)
    }

    fn push(&mut self, scope: &str, check: &'static str, status: CheckStatus, detail: String) {
        self.checks.push(CheckOutcome {
            scope: scope.into(),
            check,
            status,
            detail,
        });
    }
}

fn status(ok: bool) -> CheckStatus {
    if ok {
        CheckStatus::Passed
    } else {
        CheckStatus::Failed
    }
}

fn show(set: &BTreeSet<u64>) -> String {
    format!("{set:?}")
}

/// Recomputes what the budget allows and compares it with the trace.
///
/// Small monoids get a full catenary sweep. Every step also gets the
/// structural checks: minimal generation, Betti transport, and the closed
/// form against direct computation on sampled elements.
pub fn verify_trace(trace: &RealizationTrace, budget: &VerifyBudget) -> VerifyReport {
    let mut report = VerifyReport::default();
    check_monoid_set(&mut report, "base", &trace.base_monoid, &trace.base_set, None, budget);

    for (i, entry) in trace.steps.iter().enumerate() {
        let step = &entry.step;
        let scope = format!("step {} (c={})", i + 1, step.c);

        let listed = {
            let mut g = step.construction_generators();
            g.sort_unstable();
            g
        };
        let minimal = NumericalMonoid::new(&listed).map(|m| m.generators() == listed.as_slice());
        report.push(
            &scope,
            "minimal_generation",
            status(minimal == Ok(true)),
            format!("{} generators", listed.len()),
        );

        let transported = step.betti();
        if step.result.betti_bound() <= budget.betti_scan {
            let direct = betti_elements(&step.result);
            report.push(
                &scope,
                "betti_transport",
                status(direct == transported),
                format!("closed form {transported:?}, direct {direct:?}"),
            );
        } else {
            report.push(
                &scope,
                "betti_transport",
                CheckStatus::Skipped,
                format!("scan bound {} exceeds budget", step.result.betti_bound()),
            );
        }

        check_formula(&mut report, &scope, step, &transported, budget);

        let window = step.result.betti_bound()
            + transported.last().copied().unwrap_or(0)
            + step.result.multiplicity();
        check_monoid_set(
            &mut report,
            &scope,
            &step.result,
            &entry.claimed_set,
            Some(window),
            budget,
        );
    }
    report
}

fn check_monoid_set(
    report: &mut VerifyReport,
    scope: &str,
    monoid: &NumericalMonoid,
    claimed: &BTreeSet<u64>,
    window_hint: Option<u64>,
    budget: &VerifyBudget,
) {
    let window = window_hint.unwrap_or_else(|| default_window(monoid));
    if window <= budget.window {
        match catenary_set(monoid, Some(window)) {
            Ok((set, _)) => report.push(
                scope,
                "catenary_set_direct",
                status(&set == claimed),
                format!("claimed {}, direct {} on [0, {window}]", show(claimed), show(&set)),
            ),
            Err(e) => report.push(scope, "catenary_set_direct", CheckStatus::Skipped, format!("{e}")),
        }
    } else if monoid.betti_bound() <= budget.betti_scan && window_hint.is_none() {
        let expected = claimed.last().copied().unwrap_or(0);
        match monoid_catenary(monoid) {
            Ok(found) => report.push(
                scope,
                "catenary_degree_direct",
                status(found == expected),
                format!("claimed {expected}, direct {found}"),
            ),
            Err(e) => report.push(scope, "catenary_degree_direct", CheckStatus::Skipped, format!("{e}")),
        }
    } else {
        report.push(
            scope,
            "catenary_set_direct",
            CheckStatus::Skipped,
            format!("window {window} exceeds budget {}", budget.window),
        );
    }
}

/// Closed form vs. direct computation at Betti elements, their sums with
/// each atom, and the smallest nonzero elements.
fn check_formula(
    report: &mut VerifyReport,
    scope: &str,
    step: &AdjoinStep,
    betti: &[u64],
    budget: &VerifyBudget,
) {
    let t = &step.result;
    let mut samples: BTreeSet<u64> = BTreeSet::new();
    for &b in betti {
        samples.insert(b);
        for &g in t.generators() {
            samples.insert(b + g);
        }
    }
    let mut n = 1u64;
    let mut small = 0;
    while small < budget.samples {
        if t.is_element(n) {
            samples.insert(n);
            small += 1;
        }
        n += 1;
    }

    let config = CatenaryConfig::default();
    let (mut compared, mut skipped) = (0usize, 0usize);
    let mut mismatch: Option<(u64, u64, u64)> = None;
    for &n in &samples {
        let direct = match catenary_element_with(t, n as i64, &config) {
            Ok(d) => d,
            // Over the factorization cap, or not an element.
            Err(_) => {
                skipped += 1;
                continue;
            }
        };
        match step.catenary_element_with(n as i64, &config) {
            Ok(formula) => {
                compared += 1;
                if formula != direct && mismatch.is_none() {
                    mismatch = Some((n, formula, direct));
                }
            }
            Err(_) => skipped += 1,
        }
    }
    let detail = match mismatch {
        Some((n, f, d)) => format!("c({n}): closed form {f}, direct {d}"),
        None => format!("{compared} elements agree, {skipped} skipped"),
    };
    let outcome = if mismatch.is_some() {
        CheckStatus::Failed
    } else if compared == 0 {
        CheckStatus::Skipped
    } else {
        CheckStatus::Passed
    };
    report.push(scope, "formula_consistency", outcome, detail);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{realize, BPolicy};

    fn set(v: &[u64]) -> BTreeSet<u64> {
        v.iter().copied().collect()
    }

    #[test]
    fn base_only_trace() {
        let trace = realize(&set(&[0, 3]), &BPolicy::Smallest).unwrap();
        let report = verify_trace(&trace, &VerifyBudget::default());
        assert!(report.passed());
        assert_eq!(report.checks.len(), 1);
        assert_eq!(report.checks[0].check, "catenary_set_direct");
        assert_eq!(report.checks[0].status, CheckStatus::Passed);
    }

    #[test]
    fn first_chain_step_direct() {
        let trace = realize(&set(&[0, 2, 7, 20]), &BPolicy::Explicit(alloc::vec![51])).unwrap();
        let report = verify_trace(&trace, &VerifyBudget::default());
        assert!(report.passed(), "{report:?}");
        let direct = report
            .checks
            .iter()
            .find(|c| c.scope.starts_with("step 1") && c.check == "catenary_set_direct")
            .unwrap();
        assert_eq!(direct.status, CheckStatus::Passed);
    }

    #[test]
    fn tampered_claim_fails() {
        let mut trace =
            realize(&set(&[0, 2, 7, 20]), &BPolicy::Explicit(alloc::vec![51])).unwrap();
        trace.steps[0].claimed_set.insert(9);
        let report = verify_trace(&trace, &VerifyBudget::default());
        assert!(!report.passed());
        assert_eq!(report.failures().count(), 1);
    }
}
