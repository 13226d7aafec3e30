//! Single-pair reports: the full spectrum with its checks, and the combined
//! verification of every identity suite.

use std::fmt::Write as _;

use serde::Serialize;

use crate::algebraic_sets::verify_q_lemmas;
use crate::characters::verify_characters;
use crate::checks::CheckReport;
use crate::cyclotomic::CycInt;
use crate::error::Result;
use crate::field::{Field, FieldSpec};
use crate::group_algebra::verify_identities;
use crate::spectrum::{
    check_spectrum, classification_record, per_unit_values, spectrum, tau_action, ClassificationRecord,
    SpectrumCheckOptions, TauAction, WeilValue,
};

#[derive(Clone, Debug, Serialize)]
pub struct UnitValue {
    /// Enumeration index of `u`.
    pub u: u32,
    pub value: String,
    pub histogram: Vec<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValueEntry {
    pub value: String,
    pub frequency: u64,
    pub exact: CycInt,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quad: Option<crate::cyclotomic::QuadDecomp>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub field: FieldSpec,
    pub record: ClassificationRecord,
    pub values: Vec<ValueEntry>,
    pub per_unit: Vec<UnitValue>,
    pub tau: TauAction,
    pub checks: CheckReport,
}

impl SpectrumReport {
    pub fn passed(&self) -> bool {
        self.checks.passed()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let r = &self.record;
        let mut out = String::new();
        let modulus = self.field.modulus.as_ref().map(|m| format!(" modulus {m:?}")).unwrap_or_default();
        let _ = writeln!(out, "field F_{} (p = {}, n = {}){modulus}, s = {}", r.q, r.p, r.n, r.s);
        let _ = writeln!(
            out,
            "class representative {}; {} values; degenerate: {}; rational: {}",
            r.s_canonical, r.num_values, r.is_degenerate, r.is_rational
        );
        let _ = writeln!(out, "\nvalue set (frequency):");
        for v in &self.values {
            let _ = writeln!(out, "  {:>6}  {}", v.frequency, v.value);
        }
        let cycles: Vec<String> = self
            .tau
            .cycles
            .iter()
            .map(|c| format!("({})", c.iter().map(|i| self.values[*i].value.clone()).collect::<Vec<_>>().join(" ")))
            .collect();
        let _ = writeln!(
            out,
            "\ntau: lambda = {}, order {}, cycle type {:?}",
            self.tau.lambda, self.tau.order, self.tau.cycle_type
        );
        let _ = writeln!(out, "  {}", cycles.join(" "));
        let _ = writeln!(out, "\nper unit:");
        for u in &self.per_unit {
            let _ = writeln!(out, "  u=#{:<5} {}", u.u, u.value);
        }
        let _ = writeln!(out, "\nchecks:");
        let _ = write!(out, "{}", self.checks);
        out
    }
}

fn render(v: &WeilValue) -> String {
    v.render()
}

/// Spectrum, Galois action and every per-pair invariant for one field and exponent.
pub fn spectrum_report(field_spec: &str, s: u64) -> Result<SpectrumReport> {
    let field = Field::parse(field_spec)?;
    report_for(&field, s)
}

pub fn report_for(field: &Field, s: u64) -> Result<SpectrumReport> {
    let spec = spectrum(field, s)?;
    let tau = tau_action(&spec)?;
    let opts = SpectrumCheckOptions { full_galois: field.q() <= 1 << 12, ..Default::default() };
    let checks = check_spectrum(&spec, &tau, opts);
    let record = classification_record(&spec, &tau)?;
    let values = spec
        .entries()
        .iter()
        .map(|e| ValueEntry {
            value: render(&e.value),
            frequency: e.frequency,
            exact: e.value.value.clone(),
            quad: e.value.quad.clone(),
        })
        .collect();
    let per_unit = per_unit_values(&spec)
        .map(|(u, v)| UnitValue { u: u.index(), value: render(v), histogram: v.histogram.counts.clone() })
        .collect();
    Ok(SpectrumReport { field: field.spec(), record, values, per_unit, tau, checks })
}

/// Every check for one pair: spectrum invariants, point counts, group
/// algebra identities and character sums. Sizes are chosen so the run stays
/// interactive for `q` up to a few hundred.
pub fn verify_all(field_spec: &str, s: u64, seed: u64) -> Result<CheckReport> {
    let field = Field::parse(field_spec)?;
    verify_field(&field, s, seed)
}

pub fn verify_field(field: &Field, s: u64, seed: u64) -> Result<CheckReport> {
    let q = field.q();
    let mut report = report_for(field, s)?.checks;
    let k_max = match q {
        0..=13 => 3,
        14..=64 => 2,
        _ => 1,
    };
    report.merge(verify_q_lemmas(field, s, k_max, seed)?);
    if q <= 64 {
        report.merge(verify_identities(field, s, seed)?);
        report.merge(verify_characters(field, seed));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports() {
        let r = spectrum_report("5", 3).unwrap();
        assert!(r.passed());
        assert_eq!(r.values.len(), 4);
        assert!(r.to_text().contains("(5 + sqrt(5))/2"));
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["record"]["num_values"], 4);
        assert_eq!(json["values"][0]["quad"]["I"], 5);

        let r = spectrum_report("2^3", 3).unwrap();
        assert_eq!((r.record.num_values, r.record.is_rational), (3, true));
        let r = spectrum_report("7", 1).unwrap();
        let mut vf: Vec<_> = r.values.iter().map(|v| (v.value.clone(), v.frequency)).collect();
        vf.sort();
        assert_eq!(vf, vec![("0".to_string(), 5), ("7".to_string(), 1)]);
    }

    #[test]
    fn verify_examples() {
        assert!(verify_all("5", 3, 42).unwrap().passed());
        assert!(verify_all("9", 5, 42).unwrap().passed());
        assert!(matches!(verify_all("5", 2, 42), Err(crate::Error::NotInvertibleExponent { .. })));
    }
}
