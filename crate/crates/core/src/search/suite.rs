use rayon::prelude::*;
use serde::Serialize;

use super::corpus::{build_corpus, check_corpus, common_divisor_sweep, CorpusSpec};
use super::family::{alpha_c_orders, enumerate_alpha_c, AlphaCFamilyQuery};
use super::report::{invariant_report, InvariantReport};
use super::verify::{check_alpha_c, check_multiple_of_p5, check_p5_claim, Verification};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::presentation::{coset_enumerate_with, parse_presentation, CosetTable, ORDER_64_PRESENTATION};
use crate::series::Nilpotency;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Suite {
    /// Everything below at its default bounds.
    All,
    AlphaC { max_order: usize },
    P5 { p: usize },
    MultipleOfP5 { p: usize, k_max: usize },
    Order64,
    Corpus,
}

impl Suite {
    pub fn name(&self) -> String {
        match self {
            Suite::All => "paper".into(),
            Suite::AlphaC { max_order } => format!("alpha-c(<={max_order})"),
            Suite::P5 { p } => format!("p5(p={p})"),
            Suite::MultipleOfP5 { p, k_max } => format!("multiple-of-p5(p={p}, k<={k_max})"),
            Suite::Order64 => "order64".into(),
            Suite::Corpus => "corpus".into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub verifications: Vec<Verification>,
    /// Orders reached by the alpha-C family within the suite's bound.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub alpha_c_orders: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub reports: Vec<InvariantReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.verifications.iter().all(Verification::passed)
    }

    pub fn failures(&self) -> Vec<String> {
        self.verifications.iter().flat_map(Verification::failures).collect()
    }

    pub fn check_count(&self) -> usize {
        self.verifications.iter().map(|v| v.checks.len()).sum()
    }

    pub fn into_result(self) -> Result<Self> {
        if self.passed() {
            Ok(self)
        } else {
            Err(Error::VerificationFailure(self.failures()))
        }
    }

    fn merge(&mut self, other: SuiteReport) {
        self.verifications.extend(other.verifications);
        if self.alpha_c_orders.is_empty() {
            self.alpha_c_orders = other.alpha_c_orders;
        }
        self.reports.extend(other.reports);
    }
}

/// The order-64 example: exactly 64 cosets, class 3, a C-group.
pub fn check_order_64(limits: &Limits) -> Result<Verification> {
    let p = parse_presentation(ORDER_64_PRESENTATION)?;
    let mut v = Verification::new("pres(order64)");
    let table = CosetTable::enumerate(&p, limits.max_cosets)?;
    v.expect_eq("enumeration closes with 64 cosets", 64, table.live_count());
    let g = coset_enumerate_with(&p, limits)?;
    let r = invariant_report("pres(order64)", &g, limits)?;
    v.expect_eq("nilpotency class is 3", Nilpotency::Class(3), r.nilpotency_class);
    v.check(
        "is a C-group",
        r.is_c_group,
        format!("rk(G) = {}, rk(Z(G)) = {}", r.rank, r.center_rank),
    );
    v.report = Some(r);
    Ok(v)
}

/// Runs a suite. Failed claims are collected in the report; only errors
/// that stop a whole leg (caps, bad arguments) are returned as `Err`.
pub fn run_suite(suite: &Suite, limits: &Limits) -> Result<SuiteReport> {
    let mut out = SuiteReport {
        suite: suite.name(),
        verifications: Vec::new(),
        alpha_c_orders: Vec::new(),
        reports: Vec::new(),
    };
    match *suite {
        Suite::All => {
            let max = limits.order_cap.min(512);
            for s in [
                Suite::AlphaC { max_order: max },
                Suite::P5 { p: 2 },
                Suite::P5 { p: 3 },
                Suite::MultipleOfP5 { p: 2, k_max: 4 },
                Suite::Order64,
                Suite::Corpus,
            ] {
                out.merge(run_suite(&s, limits)?);
            }
        }
        Suite::AlphaC { max_order } => {
            let params = enumerate_alpha_c(&AlphaCFamilyQuery::up_to(max_order));
            let checked = params
                .into_par_iter()
                .map(|p| check_alpha_c(p, limits))
                .collect::<Result<Vec<_>>>()?;
            out.reports = checked.iter().filter_map(|v| v.report.clone()).collect();
            out.verifications = checked;
            out.alpha_c_orders = alpha_c_orders(max_order).into_iter().collect();
        }
        Suite::P5 { p } => {
            let v = check_p5_claim(p, limits)?;
            out.reports.extend(v.report.clone());
            out.verifications.push(v);
        }
        Suite::MultipleOfP5 { p, k_max } => {
            out.verifications.push(check_multiple_of_p5(p, k_max, limits)?)
        }
        Suite::Order64 => {
            let v = check_order_64(limits)?;
            out.reports.extend(v.report.clone());
            out.verifications.push(v);
        }
        Suite::Corpus => {
            let corpus = build_corpus(&CorpusSpec::default(), limits)?;
            let (v, reports) = check_corpus(&corpus, limits)?;
            out.verifications.push(v);
            out.verifications.push(common_divisor_sweep(200, 3, limits)?);
            out.reports = reports;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_c_suite_small() {
        let r = run_suite(&Suite::AlphaC { max_order: 64 }, &Limits::default()).unwrap();
        assert!(r.passed(), "{:?}", r.failures());
        assert_eq!(r.alpha_c_orders, vec![32, 64]);
        assert_eq!(r.verifications.len(), 3);
    }

    #[test]
    fn order_64() {
        let v = check_order_64(&Limits::default()).unwrap();
        assert!(v.passed(), "{:?}", v.failures());
    }

    #[test]
    fn cap_errors_propagate() {
        assert!(run_suite(&Suite::P5 { p: 5 }, &Limits::default())
            .unwrap_err()
            .is_cap_error());
    }
}
