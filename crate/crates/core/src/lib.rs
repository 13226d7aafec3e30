//! Exact Weil sums of binomials `sum_x psi(x^s - u x)` over small finite
//! fields: spectra in `Z[zeta_p]`, the Galois action on value sets,
//! point counts of the associated algebraic sets, and the group algebra
//! identities tying them together.

pub mod algebraic_sets;
pub mod characters;
pub mod checks;
pub mod cyclotomic;
pub mod error;
pub mod field;
pub mod group_algebra;
pub mod report;
pub mod spectrum;
pub mod survey;

pub use algebraic_sets::{q_count, u_table, v_bracket, v_table, verify_q_lemmas, PowerMap, QQuery, VBracket};
pub use characters::{verify_characters, CharacterTable};
pub use checks::{CheckOutcome, CheckReport};
pub use cyclotomic::{vp_int, CycInt, Histogram, QuadDecomp, Valuation};
pub use error::{Error, Result};
pub use field::{Field, FieldElement, FieldSpec};
pub use group_algebra::{psi_element, verify_identities, w_bracket, weil_element, GroupAlgebraElement};
pub use report::{spectrum_report, verify_all, SpectrumReport};
pub use spectrum::{
    classify, exponent_classes, is_degenerate, spectrum, tau_action, weil_sum, ClassificationRecord, TauAction,
    WeilSpectrum, WeilValue,
};
pub use survey::{survey, OutputFormat, SurveyConfig, SurveyResult, SurveyRow, SurveySummary};
