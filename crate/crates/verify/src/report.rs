use std::fmt::Write as _;

use finsleroid_core::numerics::Tolerances;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;
use serde_json::value::RawValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    #[serde(rename = "PD")]
    Pd,
    #[serde(rename = "SR")]
    Sr,
    #[serde(rename = "MAP")]
    Map,
    #[serde(rename = "DUAL")]
    Dual,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::Pd => "PD",
            Family::Sr => "SR",
            Family::Map => "MAP",
            Family::Dual => "DUAL",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WorstInput {
    #[serde(serialize_with = "sig17")]
    pub g: f64,
    #[serde(serialize_with = "sig17_seq")]
    pub point: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub name: String,
    pub family: Family,
    pub samples: usize,
    /// `inf` when a sample could not be evaluated; serialised as `null`.
    #[serde(serialize_with = "sig17")]
    pub max_residual: f64,
    #[serde(serialize_with = "sig17")]
    pub tolerance: f64,
    pub pass: bool,
    pub worst_case_input: Option<WorstInput>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

/// Seventeen significant digits, round-trip exact for `f64`.
pub(crate) fn format_sig17(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

fn raw(x: f64) -> Option<Box<RawValue>> {
    if !x.is_finite() {
        return None;
    }
    Some(RawValue::from_string(format_sig17(x)).expect("exponent notation is valid JSON"))
}

fn sig17<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    raw(*x).serialize(s)
}

fn sig17_seq<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&raw(*x))?;
    }
    seq.end()
}

pub fn to_json(reports: &[VerificationReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports always serialise")
}

/// Fixed-width table, one row per check, followed by totals.
pub fn summary_table(reports: &[VerificationReport]) -> String {
    let width = reports.iter().map(|r| r.name.len()).max().unwrap_or(4).max(5);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<width$}  {:<4}  {:>7}  {:>12}  {:>9}  result",
        "check", "fam", "samples", "max_resid", "tol"
    );
    for r in reports {
        let _ = writeln!(
            out,
            "{:<width$}  {:<4}  {:>7}  {:>12.3e}  {:>9.1e}  {}",
            r.name,
            r.family.label(),
            r.samples,
            r.max_residual,
            r.tolerance,
            if r.pass { "ok" } else { "FAIL" }
        );
        if let Some(d) = &r.diagnostic {
            let _ = writeln!(out, "    {d}");
        }
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    let _ = writeln!(
        out,
        "{} checks, {} passed, {} failed; singular-region exclusion radius {:e}",
        reports.len(),
        reports.len() - failed,
        failed,
        Tolerances::DEFAULT.exclusion_radius
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(pass: bool, residual: f64) -> VerificationReport {
        VerificationReport {
            name: "pd.example".into(),
            family: Family::Pd,
            samples: 3,
            max_residual: residual,
            tolerance: 1e-12,
            pass,
            worst_case_input: Some(WorstInput {
                g: -0.0,
                point: vec![1.0, -0.5],
            }),
            diagnostic: None,
        }
    }

    #[test]
    fn json_keys_and_number_format() {
        let json = to_json(&[sample(true, 0.375)]);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let obj = v[0].as_object().unwrap();
        let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        for k in [
            "name",
            "family",
            "samples",
            "max_residual",
            "tolerance",
            "pass",
            "worst_case_input",
        ] {
            assert!(keys.contains(&k), "missing {k}");
        }
        assert!(!keys.contains(&"diagnostic"));
        assert_eq!(obj["family"], "PD");
        assert!(json.contains("3.7500000000000000e-1"));
        assert!(json.contains("\"g\": 0.0000000000000000e0"));
        assert_eq!(obj["max_residual"].as_f64(), Some(0.375));
    }

    #[test]
    fn infinite_residual_is_null() {
        let mut r = sample(false, f64::INFINITY);
        r.diagnostic = Some("domain error".into());
        let v: serde_json::Value = serde_json::from_str(&to_json(&[r])).unwrap();
        assert!(v[0]["max_residual"].is_null());
        assert_eq!(v[0]["diagnostic"], "domain error");
    }

    #[test]
    fn sig17_round_trips() {
        for x in [0.1, 1.0 / 3.0, -2.5e-300, 6.02e23, f64::MIN_POSITIVE] {
            assert_eq!(format_sig17(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn table_mentions_failures() {
        let t = summary_table(&[sample(true, 0.0), sample(false, 1.0)]);
        assert!(t.contains("FAIL"));
        assert!(t.contains("2 checks, 1 passed, 1 failed"));
    }
}
