//! The audit report attached to every deformation.
//!
//! The report is plain data and serializes to the versioned JSON schema
//! (`"schema": 1`) written by the command-line front-end.

use std::collections::BTreeMap;

use cs_codes::{min_weight_logical, CssCode, Distance, Side, MAX_UNCAPPED_QUBITS};
use cs_core::Homology;
use serde::{Deserialize, Serialize};

/// Which form the deformed code is kept in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CodeKind {
    Css,
    Stabilizer,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// Measured maxima against their bounds, keyed by name (`w21`, `q21`,
/// `w10`, `q10` for CSS outputs; `generator_weight`, `qubit_degree` for
/// stabilizer outputs).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightsReport {
    pub measured: BTreeMap<String, usize>,
    pub bounds: BTreeMap<String, usize>,
    pub pass: bool,
}

impl WeightsReport {
    pub fn new(entries: &[(&str, usize, usize)]) -> Self {
        let measured = entries
            .iter()
            .map(|&(k, m, _)| (k.to_string(), m))
            .collect();
        let bounds = entries
            .iter()
            .map(|&(k, _, b)| (k.to_string(), b))
            .collect();
        let pass = entries.iter().all(|&(_, m, b)| m <= b);
        Self {
            measured,
            bounds,
            pass,
        }
    }

    /// `name=value > bound` for every exceeded bound.
    pub fn violations(&self) -> Vec<String> {
        self.measured
            .iter()
            .filter_map(|(k, &m)| {
                let b = self.bounds[k];
                (m > b).then(|| format!("{k}={m} > {b}"))
            })
            .collect()
    }
}

/// Homology dimensions `(h2, h1, h0)` of the three complexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub data: Homology,
    pub cone: Homology,
    pub deformed: Homology,
}

/// One distance comparison: the deformed code's distance on `side` against
/// a bound derived from the data code's distance on the same side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceCheck {
    /// `X` or `Z`: the Pauli type of the logicals searched.
    pub side: String,
    /// Distance of the data code.
    pub data: String,
    /// Distance of the deformed code (as far as it was searched).
    pub value: String,
    pub bound: Option<usize>,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceReport {
    /// `exhaustive` when at least one search ran, otherwise `skipped`.
    pub method: String,
    /// Largest weight searched.
    pub cap: usize,
    pub checks: Vec<DistanceCheck>,
}

impl DistanceReport {
    pub fn skipped(cap: usize, reason: &str) -> Self {
        Self {
            method: "skipped".into(),
            cap,
            checks: vec![DistanceCheck {
                side: "-".into(),
                data: "-".into(),
                value: "-".into(),
                bound: None,
                status: CheckStatus::Skipped,
                note: Some(reason.into()),
            }],
        }
    }
}

/// The Cheeger certificate of the measurement graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheegerReport {
    /// `exact`, `spectral`, or `trivial` for a single-vertex graph.
    pub method: String,
    pub value: Option<f64>,
    /// The exact ratio, when known.
    pub exact: Option<String>,
}

/// Limits on the exhaustive distance search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AuditOptions {
    /// Largest weight searched. A bound above the cap is reported as skipped.
    pub distance_cap: usize,
    /// Largest number of supports enumerated in one search.
    pub search_budget: u64,
}

impl Default for AuditOptions {
    fn default() -> Self {
        Self {
            distance_cap: 24,
            search_budget: 500_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub schema: u32,
    pub kind: CodeKind,
    pub n_before: usize,
    pub n_after: usize,
    pub k_before: usize,
    pub k_after: Option<usize>,
    /// `∂∂ = 0` for CSS outputs; all generators commute for stabilizer ones.
    pub complex_ok: bool,
    pub chain_map_ok: bool,
    /// The failed attachment checks.
    #[serde(default)]
    pub chain_map_failures: Vec<String>,
    /// The measured logical (padded with identities) is a stabilizer.
    pub logical_is_stabilizer: bool,
    /// Generators (X-checks for CSS outputs) whose product is the logical.
    pub stabilizer_witness: Option<Vec<usize>>,
    /// Stabilizer inputs: the adjoint Cliffords restored every original
    /// generator on the data qubits.
    pub bases_restored: Option<bool>,
    /// Stabilizer inputs: the output happens to be CSS.
    pub css_detected: Option<bool>,
    pub weights: WeightsReport,
    pub homology: Option<HomologyReport>,
    pub distance: DistanceReport,
    pub cheeger: CheegerReport,
}

impl AuditReport {
    /// Human-readable descriptions of every failed check.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.complex_ok {
            out.push(match self.kind {
                CodeKind::Css => "boundary of boundary is nonzero".to_string(),
                CodeKind::Stabilizer => "deformed generators do not commute".to_string(),
            });
        }
        if !self.chain_map_ok {
            out.push(format!(
                "attachment is not a chain map ({})",
                self.chain_map_failures.join(", ")
            ));
        }
        match self.k_after {
            Some(k) if k + 1 == self.k_before => {}
            Some(k) => out.push(format!(
                "logical count went from {} to {k}, expected {}",
                self.k_before,
                self.k_before.saturating_sub(1)
            )),
            None => out.push("logical count of the deformed code is undefined".into()),
        }
        if !self.logical_is_stabilizer {
            out.push("the measured logical is not in the deformed stabilizer group".into());
        }
        if self.bases_restored == Some(false) {
            out.push("original generator bases were not restored".into());
        }
        out.extend(
            self.weights
                .violations()
                .into_iter()
                .map(|v| format!("weight bound: {v}")),
        );
        for c in &self.distance.checks {
            if c.status == CheckStatus::Fail {
                out.push(format!(
                    "{}-distance {} is below the bound {}",
                    c.side,
                    c.value,
                    c.bound.unwrap_or(0)
                ));
            }
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

fn binomial_sum(n: usize, w: usize) -> f64 {
    let mut term = 1.0f64;
    let mut total = 0.0;
    for i in 1..=w.min(n) {
        term = term * (n + 1 - i) as f64 / i as f64;
        total += term;
    }
    total
}

/// Compares the deformed code's distance on `side` with
/// `bound(d(data))`, searching only up to the bound.
pub(crate) fn distance_check(
    side: Side,
    before: &CssCode,
    after: &CssCode,
    bound: impl Fn(usize) -> usize,
    opts: &AuditOptions,
) -> DistanceCheck {
    let mut check = DistanceCheck {
        side: side.to_string(),
        data: "-".into(),
        value: "-".into(),
        bound: None,
        status: CheckStatus::Skipped,
        note: None,
    };
    let data_cap = (before.n() > MAX_UNCAPPED_QUBITS).then_some(opts.distance_cap);
    if binomial_sum(before.n(), data_cap.unwrap_or(before.n())) > opts.search_budget as f64 {
        check.note = Some("data code too large for the search budget".into());
        return check;
    }
    let d = match min_weight_logical(before, side, data_cap) {
        Ok(s) => s.distance,
        Err(e) => {
            check.note = Some(e.to_string());
            return check;
        }
    };
    check.data = d.to_string();
    let d = match d {
        Distance::Exact(d) => d,
        Distance::ExceedsCap(_) => {
            check.note = Some("data distance exceeds the cap".into());
            return check;
        }
        Distance::NoLogicals => {
            check.note = Some("data code has no logicals".into());
            return check;
        }
    };
    let b = bound(d);
    check.bound = Some(b);
    if b > opts.distance_cap {
        check.note = Some(format!("bound {b} exceeds the distance cap"));
        return check;
    }
    if binomial_sum(after.n(), b) > opts.search_budget as f64 {
        check.note = Some("deformed code too large for the search budget".into());
        return check;
    }
    match min_weight_logical(after, side, Some(b)) {
        Ok(s) => {
            check.value = s.distance.to_string();
            check.status = if s.distance.at_least(b) {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            };
        }
        Err(e) => check.note = Some(e.to_string()),
    }
    check
}

/// Distance checks after measuring a logical of type `measured`: the other
/// side keeps `d(M) ≥ d(D)`, the measured side `d ≥ ⌈min(h, 1)·d(D)⌉`.
pub(crate) fn distance_report(
    before: &CssCode,
    after: &CssCode,
    measured: Side,
    expansion: impl Fn(usize) -> usize,
    opts: &AuditOptions,
) -> DistanceReport {
    let checks = vec![
        distance_check(measured.other(), before, after, |d| d, opts),
        distance_check(measured, before, after, expansion, opts),
    ];
    let method = if checks.iter().any(|c| c.status != CheckStatus::Skipped) {
        "exhaustive"
    } else {
        "skipped"
    };
    DistanceReport {
        method: method.into(),
        cap: opts.distance_cap,
        checks,
    }
}
