use serde::Serialize;

/// A named identity and how far the construction is from satisfying it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Residual {
    pub label: String,
    /// Which family of identities this belongs to.
    pub anchor: String,
    pub value: f64,
}

impl Residual {
    pub fn new(label: impl Into<String>, anchor: impl Into<String>, value: f64) -> Self {
        Self { label: label.into(), anchor: anchor.into(), value }
    }
}

/// Largest residual in a list (0 when empty, ∞ if any entry is NaN).
pub fn worst(rs: &[Residual]) -> f64 {
    rs.iter().map(|r| if r.value.is_nan() { f64::INFINITY } else { r.value }).fold(0.0, f64::max)
}

/// One verified identity with its verdict.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub label: String,
    pub anchor: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Reported for the record; never fails the suite.
    pub informational: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    /// Passes when `residual <= tolerance` (a NaN residual never passes).
    pub fn gate(r: Residual, tolerance: f64) -> Self {
        let pass = r.value <= tolerance;
        Self { label: r.label, anchor: r.anchor, residual: r.value, tolerance, pass, informational: false, note: None }
    }

    pub fn info(r: Residual) -> Self {
        Self {
            label: r.label,
            anchor: r.anchor,
            residual: r.value,
            tolerance: f64::INFINITY,
            pass: true,
            informational: true,
            note: None,
        }
    }

    /// A check that could not be evaluated.
    pub fn failed(label: impl Into<String>, anchor: impl Into<String>, why: impl ToString) -> Self {
        Self {
            label: label.into(),
            anchor: anchor.into(),
            residual: f64::INFINITY,
            tolerance: 0.0,
            pass: false,
            informational: false,
            note: Some(why.to_string()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub backend: String,
    pub delta: String,
    pub checks: Vec<Check>,
    pub overall_pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, backend: impl Into<String>, delta: impl Into<String>, checks: Vec<Check>) -> Self {
        let overall_pass = checks.iter().all(|c| c.pass);
        Self { suite: suite.into(), backend: backend.into(), delta: delta.into(), checks, overall_pass, wall_time_ms: None }
    }

    pub fn max_gated_residual(&self) -> f64 {
        self.checks.iter().filter(|c| !c.informational).map(|c| c.residual).fold(0.0, f64::max)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}
