//! Text formats: the algebra file (JSON), exact rational literals, and the
//! subspace syntax used on the command line.
//!
//! An algebra file lists the nonzero brackets `[e_i, e_j]` with `i < j`:
//!
//! ```text
//! {
//!   "dim": 3,
//!   "name": "H(1)",
//!   "brackets": [
//!     [0, 1, [[2, "1"]]]
//!   ]
//! }
//! ```

use num::{BigInt, One, Signed, Zero};
use serde::Deserialize;
use thiserror::Error;

use crate::lie::{LieAlgebra, LieError};
use crate::ratlin::{LinalgError, Rational, Subspace};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed algebra file at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("invalid rational literal {0:?}")]
    Rational(String),
    #[error("invalid subspace spec {spec:?}: {message}")]
    Spec { spec: String, message: String },
    #[error("structure constants rejected: {0}")]
    Lie(#[from] LieError),
}

/// Parses `"p/q"`, `"-p/q"` or an integer. Zero denominators and empty text
/// are rejected.
pub fn parse_rational(text: &str) -> Result<Rational, FormatError> {
    let t = text.trim();
    let bad = || FormatError::Rational(text.to_owned());
    if t.is_empty() {
        return Err(bad());
    }
    let parse_int = |s: &str| -> Result<BigInt, FormatError> {
        let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    match t.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(t)?)),
        Some((p, q)) => {
            let p = parse_int(p)?;
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// `p/q` in lowest terms with `q > 0`; integers without the `/1`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        debug_assert!(r.denom().is_positive());
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CoefficientText {
    Text(String),
    Int(i64),
}

type RawBracket = (usize, usize, Vec<(usize, CoefficientText)>);

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    dim: usize,
    #[serde(default)]
    name: Option<String>,
    brackets: Vec<RawBracket>,
}

pub fn parse_algebra_file(text: &str) -> Result<LieAlgebra, FormatError> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| FormatError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let dim = file.dim;
    let mut brackets = Vec::with_capacity(file.brackets.len());
    let mut seen = std::collections::BTreeSet::new();
    for (pos, (i, j, comps)) in file.brackets.into_iter().enumerate() {
        let field = |msg: String| FormatError::Field {
            field: format!("brackets[{pos}]"),
            message: msg,
        };
        if i >= j {
            return Err(field(format!("need i < j, got ({i}, {j})")));
        }
        if j >= dim {
            return Err(field(format!("index {j} out of range for dim {dim}")));
        }
        if !seen.insert((i, j)) {
            return Err(field(format!("pair ({i}, {j}) listed twice")));
        }
        let mut parsed = Vec::with_capacity(comps.len());
        for (cpos, (k, coeff)) in comps.into_iter().enumerate() {
            if k >= dim {
                return Err(FormatError::Field {
                    field: format!("brackets[{pos}][2][{cpos}]"),
                    message: format!("index {k} out of range for dim {dim}"),
                });
            }
            let value = match coeff {
                CoefficientText::Text(s) => parse_rational(&s).map_err(|e| FormatError::Field {
                    field: format!("brackets[{pos}][2][{cpos}]"),
                    message: e.to_string(),
                })?,
                CoefficientText::Int(v) => Rational::from_integer(BigInt::from(v)),
            };
            parsed.push((k, value));
        }
        brackets.push((i, j, parsed));
    }
    let algebra = LieAlgebra::from_brackets(dim, &brackets)?;
    Ok(match file.name {
        Some(n) => algebra.with_name(n),
        None => algebra,
    })
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// Canonical text: pairs ascending, components ascending, zeros omitted.
pub fn write_algebra_file(l: &LieAlgebra) -> String {
    let n = l.dim();
    let mut lines = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let comps: Vec<String> = l
                .bracket_basis(i, j)
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| format!("[{k}, {}]", json_string(&format_rational(c))))
                .collect();
            if !comps.is_empty() {
                lines.push(format!("    [{i}, {j}, [{}]]", comps.join(", ")));
            }
        }
    }
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"dim\": {n},\n"));
    if let Some(name) = l.name() {
        out.push_str(&format!("  \"name\": {},\n", json_string(name)));
    }
    if lines.is_empty() {
        out.push_str("  \"brackets\": []\n");
    } else {
        out.push_str("  \"brackets\": [\n");
        out.push_str(&lines.join(",\n"));
        out.push_str("\n  ]\n");
    }
    out.push_str("}\n");
    out
}

/// Parses a subspace of `Q^ambient`: either coordinate shorthand
/// `e0,e2` or vectors separated by `,` with coordinates separated by `;`
/// (`1;0;1/2,0;1;0`). The empty string and `0` denote the zero subspace.
pub fn parse_subspace(spec: &str, ambient: usize) -> Result<Subspace, FormatError> {
    let err = |message: String| FormatError::Spec {
        spec: spec.to_owned(),
        message,
    };
    let t = spec.trim();
    if t.is_empty() || t == "0" {
        return Ok(Subspace::zero(ambient));
    }
    let parts: Vec<&str> = t.split(',').map(str::trim).collect();
    if parts.iter().all(|p| p.starts_with('e') && !p.contains(';')) {
        let mut idx = Vec::with_capacity(parts.len());
        for p in parts {
            let i: usize = p[1..]
                .parse()
                .map_err(|_| err(format!("bad coordinate index {p:?}")))?;
            if i >= ambient {
                return Err(err(format!(
                    "coordinate e{i} out of range for dim {ambient}"
                )));
            }
            idx.push(i);
        }
        return Subspace::coordinate(ambient, &idx).map_err(|e| err(e.to_string()));
    }
    let mut vectors = Vec::with_capacity(parts.len());
    for p in parts {
        let coords = p
            .split(';')
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| err(e.to_string()))?;
        vectors.push(coords);
    }
    Subspace::span(ambient, vectors).map_err(|e: LinalgError| err(e.to_string()))
}
