use std::path::PathBuf;

use serde::Serialize;
use trilie_core::{Error, Matrix, Scalar};

/// What a failed check found, with 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub status: &'static str,
    pub check: &'static str,
    pub at: Vec<usize>,
    pub residual: Residual,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Residual {
    Vector(Vec<String>),
    Matrix(Vec<Vec<String>>),
}

impl Witness {
    pub fn new(check: &'static str, at: &[usize], residual: Residual) -> Witness {
        Witness { status: "invalid", check, at: at.iter().map(|i| i + 1).collect(), residual }
    }

    pub fn vector(check: &'static str, at: &[usize], v: &[Scalar]) -> Witness {
        Witness::new(check, at, Residual::Vector(texts(v)))
    }

    pub fn text(&self) -> String {
        let residual = match &self.residual {
            Residual::Vector(v) => format!("[{}]", v.join(", ")),
            Residual::Matrix(rows) => {
                let rows: Vec<String> = rows.iter().map(|r| format!("[{}]", r.join(", "))).collect();
                format!("[{}]", rows.join(", "))
            }
        };
        let at: Vec<String> = self.at.iter().map(ToString::to_string).collect();
        format!("{}: FAILED at ({}), residual {residual}", self.check, at.join(", "))
    }
}

pub fn texts(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_text).collect()
}

fn matrix_texts(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| texts(m.row(r))).collect()
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {message}", path = path.display())]
    Io { path: PathBuf, message: String },

    #[error("{path}:{line}:{column}: {message}", path = path.display())]
    Schema { path: PathBuf, line: usize, column: usize, message: String },

    #[error("{path}: {location}: {message}", path = path.display())]
    Invalid { path: PathBuf, location: String, message: String },

    #[error("{0}")]
    Usage(String),

    #[error("{}", .0.text())]
    Validation(Witness),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            _ => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::FundamentalIdentityViolation { tuple, residual } => {
                CliError::Validation(Witness::vector("fundamental identity", &tuple, &residual))
            }
            Error::RepresentationAxiomViolation { axiom, tuple, residual } => {
                let check = if axiom == 1 { "representation axiom 1" } else { "representation axiom 2" };
                CliError::Validation(Witness::new(check, &tuple, Residual::Matrix(matrix_texts(&residual))))
            }
            Error::NotASubalgebra { triple, residual } => {
                CliError::Validation(Witness::vector("subalgebra", &triple, &residual))
            }
            Error::NotAMorphism { triple, defect } => CliError::Validation(Witness::vector("morphism", &triple, &defect)),
            Error::BaseNotMorphism { triple, defect } => {
                CliError::Validation(Witness::vector("base morphism", &triple, &defect))
            }
            Error::NotFirstOrderDeformation { triple, residual } => {
                CliError::Validation(Witness::vector("first-order deformation", &triple, &residual))
            }
            other => CliError::Usage(other.to_string()),
        }
    }
}
