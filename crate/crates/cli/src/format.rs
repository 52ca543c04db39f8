//! JSON input files. Indices are 1-based in files and 0-based everywhere
//! else; the conversion happens here and in the witness rendering only.
//!
//! Rationals are written as integers, `"n/d"` strings, or `[n, d]` pairs.

use std::fmt;
use std::path::Path;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::Deserialize;
use trilie_core::{BracketTensor, LinearMap, Matrix, Representation, Scalar, Subspace, ThreeLieAlgebra};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rational(pub Scalar);

struct RationalVisitor;

impl<'de> Visitor<'de> for RationalVisitor {
    type Value = Rational;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an integer, a string \"n/d\", or a pair [n, d]")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rational, E> {
        Ok(Rational(Scalar::from_integer(v)))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rational, E> {
        self.visit_str(&v.to_string())
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Rational, E> {
        v.parse().map(Rational).map_err(|e| E::custom(format!("{e}, found {v:?}")))
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Rational, A::Error> {
        let num: Rational = seq.next_element()?.ok_or_else(|| de::Error::invalid_length(0, &self))?;
        let den: Rational = seq.next_element()?.ok_or_else(|| de::Error::invalid_length(1, &self))?;
        if seq.next_element::<de::IgnoredAny>()?.is_some() {
            return Err(de::Error::invalid_length(3, &self));
        }
        let (num, den) = (num.0, den.0);
        if !num.is_integer() || !den.is_integer() {
            return Err(de::Error::custom("both parts of [n, d] must be integers"));
        }
        let den = den.recip().ok_or_else(|| de::Error::custom("zero denominator"))?;
        Ok(Rational(&num * &den))
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        d.deserialize_any(RationalVisitor)
    }
}

/// `[i, j, k, c_1, .., c_d]`: the coordinates of `π(e_i, e_j, e_k)`.
#[derive(Debug)]
struct BracketEntry {
    indices: [usize; 3],
    values: Vec<Scalar>,
}

impl<'de> Deserialize<'de> for BracketEntry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<BracketEntry, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = BracketEntry;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("[i, j, k, coordinates...]")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<BracketEntry, A::Error> {
                let mut indices = [0; 3];
                for (n, slot) in indices.iter_mut().enumerate() {
                    *slot = seq.next_element()?.ok_or_else(|| de::Error::invalid_length(n, &self))?;
                }
                let mut values = Vec::new();
                while let Some(Rational(v)) = seq.next_element()? {
                    values.push(v);
                }
                Ok(BracketEntry { indices, values })
            }
        }
        d.deserialize_seq(V)
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    dim: usize,
    bracket: Vec<BracketEntry>,
}

/// `[i, j, rows]`: the matrix of `ρ(e_i, e_j)`.
#[derive(Debug)]
struct PairEntry {
    i: usize,
    j: usize,
    rows: Vec<Vec<Rational>>,
}

impl<'de> Deserialize<'de> for PairEntry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<PairEntry, D::Error> {
        let (i, j, rows) = <(usize, usize, Vec<Vec<Rational>>)>::deserialize(d)?;
        Ok(PairEntry { i, j, rows })
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepresentationFile {
    dim: usize,
    pairs: Vec<PairEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapFile {
    rows: usize,
    cols: usize,
    matrix: Vec<Vec<Rational>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SubspaceFile {
    dim: usize,
    basis: Vec<Vec<Rational>>,
}

fn parse<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.into(), message: e.to_string() })?;
    serde_json::from_str(&text).map_err(|e| CliError::Schema {
        path: path.into(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn invalid(path: &Path, location: String, message: impl Into<String>) -> CliError {
    CliError::Invalid { path: path.into(), location, message: message.into() }
}

fn to_matrix(path: &Path, location: &str, rows: Vec<Vec<Rational>>, r: usize, c: usize) -> Result<Matrix, CliError> {
    if rows.len() != r {
        return Err(invalid(path, location.into(), format!("expected {r} rows, found {}", rows.len())));
    }
    let mut out = Vec::with_capacity(r);
    for (n, row) in rows.into_iter().enumerate() {
        if row.len() != c {
            return Err(invalid(path, format!("{location}[{n}]"), format!("expected {c} entries, found {}", row.len())));
        }
        out.push(row.into_iter().map(|x| x.0).collect());
    }
    Ok(Matrix::from_rows(out).unwrap_or_else(|_| Matrix::zeros(r, c)))
}

fn one_based(path: &Path, location: String, index: usize, dim: usize) -> Result<usize, CliError> {
    if index == 0 || index > dim {
        return Err(invalid(path, location, format!("index {index} outside 1..={dim}")));
    }
    Ok(index - 1)
}

/// The bracket tensor of an algebra file, not yet checked for the
/// fundamental identity.
pub fn load_tensor(path: &Path) -> Result<BracketTensor, CliError> {
    let file: AlgebraFile = parse(path)?;
    let d = file.dim;
    let mut triples = Vec::with_capacity(file.bracket.len());
    for (n, entry) in file.bracket.into_iter().enumerate() {
        let location = format!("bracket[{n}]");
        let mut idx = [0; 3];
        for (slot, &i) in entry.indices.iter().enumerate() {
            idx[slot] = one_based(path, location.clone(), i, d)?;
        }
        if !(idx[0] < idx[1] && idx[1] < idx[2]) {
            return Err(invalid(path, location, "indices must satisfy i < j < k"));
        }
        if entry.values.len() != d {
            return Err(invalid(path, location, format!("expected {d} coordinates, found {}", entry.values.len())));
        }
        if triples.iter().any(|(t, _)| *t == idx) {
            return Err(invalid(path, location, "triple listed twice"));
        }
        triples.push((idx, entry.values));
    }
    BracketTensor::from_triples(d, &triples).map_err(|e| invalid(path, "bracket".into(), e.to_string()))
}

pub fn load_algebra(path: &Path) -> Result<ThreeLieAlgebra, CliError> {
    Ok(ThreeLieAlgebra::new(load_tensor(path)?)?)
}

pub fn load_representation(path: &Path, algebra: &ThreeLieAlgebra) -> Result<Representation, CliError> {
    let file: RepresentationFile = parse(path)?;
    let d = algebra.dim();
    let m = file.dim;
    let mut pairs = Vec::with_capacity(file.pairs.len());
    for (n, entry) in file.pairs.into_iter().enumerate() {
        let location = format!("pairs[{n}]");
        let i = one_based(path, location.clone(), entry.i, d)?;
        let j = one_based(path, location.clone(), entry.j, d)?;
        if i >= j {
            return Err(invalid(path, location, "indices must satisfy i < j"));
        }
        if pairs.iter().any(|(a, b, _)| (*a, *b) == (i, j)) {
            return Err(invalid(path, location, "pair listed twice"));
        }
        pairs.push((i, j, to_matrix(path, &location, entry.rows, m, m)?));
    }
    Ok(Representation::from_pairs(algebra.clone(), m, &pairs)?)
}

/// A map file; `rows` is the target dimension and `cols` the source.
pub fn load_map(path: &Path) -> Result<LinearMap, CliError> {
    let file: MapFile = parse(path)?;
    Ok(LinearMap::new(to_matrix(path, "matrix", file.matrix, file.rows, file.cols)?))
}

pub fn load_map_with_shape(path: &Path, target: usize, source: usize) -> Result<LinearMap, CliError> {
    let map = load_map(path)?;
    if (map.target_dim(), map.source_dim()) != (target, source) {
        return Err(invalid(
            path,
            "matrix".into(),
            format!(
                "expected a {target} x {source} matrix, found {} x {}",
                map.target_dim(),
                map.source_dim()
            ),
        ));
    }
    Ok(map)
}

pub fn load_subspace(path: &Path, ambient: usize) -> Result<Subspace, CliError> {
    let file: SubspaceFile = parse(path)?;
    if file.dim != ambient {
        return Err(invalid(path, "dim".into(), format!("expected ambient dimension {ambient}, found {}", file.dim)));
    }
    let mut vectors = Vec::with_capacity(file.basis.len());
    for (n, v) in file.basis.into_iter().enumerate() {
        if v.len() != ambient {
            return Err(invalid(path, format!("basis[{n}]"), format!("expected {ambient} coordinates, found {}", v.len())));
        }
        vectors.push(v.into_iter().map(|x| x.0).collect());
    }
    Subspace::new(ambient, &vectors).map_err(|e| invalid(path, "basis".into(), e.to_string()))
}
