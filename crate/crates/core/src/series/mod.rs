//! Pump displacement, suborder classification and exact verification of
//! the extracted series against closed forms and printed data.

mod appendix;
mod classify;
mod expand;
mod moments;
mod sequences;
mod sums;
mod verify;

pub use appendix::{verify_appendix_a, AppendixReport, TermMismatch, FIXTURE_ORDER};
pub use classify::{classify, Classification, PatternSeries};
pub use expand::{back_substitute, substitute_pump, ExpandedKey, ExpandedMonomial, ExpandedPolynomial};
pub use moments::{verify_moment_series, MomentMismatch, MomentSeriesReport};
pub use sequences::{sequence, table1, verify_table1, Sequence, TableCell, TableCheck, TableReport};
pub use sums::sum_form;
pub use verify::{
    verify_all, verify_main_text, verify_mode, verify_series, verify_sum_forms, IdentityCheck, Mismatch, ModeReport,
    SeriesReport, SeriesVerification, Status, TaylorOracle, DEFAULT_MAX_ORDER,
};
