//! Report objects. JSON field order is fixed by the struct definitions, so
//! identical inputs give byte-identical output.

use serde::Serialize;
use trilie_core::cohomology::{CohomologyReport, GraphCorrespondence};
use trilie_core::Scalar;

use crate::error::{texts, CliError};
use crate::OutputFormat;

pub trait Render: Serialize {
    fn text(&self) -> String;

    fn render(&self, fmt: OutputFormat) -> String {
        match fmt {
            OutputFormat::Json => serde_json::to_string(self).expect("reports serialize"),
            OutputFormat::Text => self.text(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub status: &'static str,
    pub check: &'static str,
    pub count: usize,
    #[serde(skip)]
    unit: &'static str,
}

impl CheckReport {
    pub fn ok(check: &'static str, count: usize, unit: &'static str) -> CheckReport {
        CheckReport { status: "ok", check, count, unit }
    }
}

impl Render for CheckReport {
    fn text(&self) -> String {
        format!("{}: OK ({} {})", self.check, self.count, self.unit)
    }
}

#[derive(Debug, Serialize)]
pub struct ResidualEntry {
    pub at: [usize; 3],
    pub value: Vec<String>,
}

impl ResidualEntry {
    /// `triple` is 0-based.
    pub fn new(triple: [usize; 3], value: &[Scalar]) -> ResidualEntry {
        ResidualEntry { at: triple.map(|i| i + 1), value: texts(value) }
    }
}

#[derive(Debug, Serialize)]
pub struct MorphismResidual {
    pub zero: bool,
    pub entries: Vec<ResidualEntry>,
}

impl Render for MorphismResidual {
    fn text(&self) -> String {
        if self.zero {
            return "MC residual: zero".into();
        }
        let mut lines = vec![format!("MC residual: {} nonzero triples", self.entries.len())];
        for e in &self.entries {
            lines.push(format!("  ({}, {}, {}) -> [{}]", e.at[0], e.at[1], e.at[2], e.value.join(", ")));
        }
        lines.join("\n")
    }
}

#[derive(Debug, Serialize)]
pub struct DegreeReport {
    pub degree: usize,
    #[serde(rename = "dimC")]
    pub dim_c: usize,
    #[serde(rename = "dimZ")]
    pub dim_z: usize,
    #[serde(rename = "dimB")]
    pub dim_b: usize,
    #[serde(rename = "dimH")]
    pub dim_h: usize,
    pub verdict: Option<&'static str>,
}

impl DegreeReport {
    pub fn new(r: &CohomologyReport, verdict: Option<&'static str>) -> DegreeReport {
        DegreeReport { degree: r.degree, dim_c: r.dim_c, dim_z: r.dim_z, dim_b: r.dim_b, dim_h: r.dim_h, verdict }
    }
}

#[derive(Debug, Serialize)]
pub struct CohomologyTable {
    pub reports: Vec<DegreeReport>,
}

impl Render for CohomologyTable {
    fn text(&self) -> String {
        let mut lines = vec!["degree  dimC  dimZ  dimB  dimH  verdict".to_string()];
        for r in &self.reports {
            lines.push(format!(
                "{:>6}  {:>4}  {:>4}  {:>4}  {:>4}  {}",
                r.degree,
                r.dim_c,
                r.dim_z,
                r.dim_b,
                r.dim_h,
                r.verdict.unwrap_or("-")
            ));
        }
        lines.join("\n")
    }
}

#[derive(Debug, Serialize)]
pub struct RigidityReport {
    #[serde(rename = "dimH1")]
    pub dim_h1: usize,
    pub verdict: &'static str,
}

impl Render for RigidityReport {
    fn text(&self) -> String {
        format!("dim H1 = {}: {}", self.dim_h1, self.verdict)
    }
}

#[derive(Debug, Serialize)]
pub struct StabilityReport {
    #[serde(rename = "dimH2")]
    pub dim_h2: usize,
    #[serde(rename = "dimZ1")]
    pub dim_z1: usize,
    pub verdict: &'static str,
}

impl Render for StabilityReport {
    fn text(&self) -> String {
        format!("dim H2 = {}, dim Z1 = {}: {}", self.dim_h2, self.dim_z1, self.verdict)
    }
}

#[derive(Debug, Serialize)]
pub struct GraphReport {
    pub degree: usize,
    pub morphism: DegreeReport,
    pub graph: DegreeReport,
    pub agree: bool,
    #[serde(rename = "xiBijective")]
    pub xi_bijective: bool,
    pub intertwines: bool,
}

impl From<&GraphCorrespondence> for GraphReport {
    fn from(g: &GraphCorrespondence) -> GraphReport {
        GraphReport {
            degree: g.degree,
            morphism: DegreeReport::new(&g.morphism, None),
            graph: DegreeReport::new(&g.graph, None),
            agree: g.dimensions_agree(),
            xi_bijective: g.xi_bijective,
            intertwines: g.intertwines,
        }
    }
}

impl Render for GraphReport {
    fn text(&self) -> String {
        format!(
            "degree {}: dim H(f) = {}, dim H(graph) = {}, {}; xi bijective: {}, intertwines: {}",
            self.degree,
            self.morphism.dim_h,
            self.graph.dim_h,
            if self.agree { "equal" } else { "different" },
            self.xi_bijective,
            self.intertwines
        )
    }
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    status: &'static str,
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    path: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    column: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    location: Option<&'a str>,
    message: String,
}

pub fn error_json(e: &CliError) -> String {
    let base = |kind, path: Option<&std::path::Path>, message: &str| ErrorReport {
        status: "error",
        kind,
        path: path.map(|p| p.display().to_string()),
        line: None,
        column: None,
        location: None,
        message: message.to_string(),
    };
    let report = match e {
        CliError::Validation(w) => return serde_json::to_string(w).expect("witness serializes"),
        CliError::Io { path, message } => base("io", Some(path), message),
        CliError::Schema { path, line, column, message } => {
            ErrorReport { line: Some(*line), column: Some(*column), ..base("schema", Some(path), message) }
        }
        CliError::Invalid { path, location, message } => {
            ErrorReport { location: Some(location), ..base("invalid", Some(path), message) }
        }
        CliError::Usage(message) => base("usage", None, message),
    };
    serde_json::to_string(&report).expect("errors serialize")
}
