//! C-group detection, the alpha-C family, the corpus and the verification
//! suites built on them.

mod corpus;
mod family;
mod report;
mod suite;
mod verify;

pub use corpus::{build_corpus, check_corpus, corpus_reports, common_divisor_sweep, CorpusEntry, CorpusSpec};
pub use family::{alpha_c_orders, enumerate_alpha_c, AlphaCFamilyQuery};
pub use report::{invariant_report, is_c_group, is_c_group_with, reports_to_tsv, InvariantReport, Timings, TSV_HEADER};
pub use suite::{check_order_64, run_suite, Suite, SuiteReport};
pub use verify::{
    check_alpha_c, check_multiple_of_p5, check_p5_claim, verify_alpha_c, verify_multiple_of_p5,
    verify_p5_claim, Check, Verification,
};
