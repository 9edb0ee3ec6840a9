//! Lie algebras given by structure constants, and the structural invariants
//! consumed by the multiplier bounds: `L^2`, `Z(L)`, the Frattini
//! subalgebra, the lower central series, quotients and direct sums.

use std::fmt;

use num::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::ratlin::{kernel_basis, LinalgError, Matrix, Rational, Subspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("invalid structure constants: {0}")]
    Invalid(ValidationReport),
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("subspace is not closed under the bracket")]
    NotASubalgebra,
    #[error(
        "algebra is not nilpotent (lower central series stabilises at dimension {stable_dim})"
    )]
    NotNilpotent { stable_dim: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// One failed axiom, located by basis indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Shape {
        expected: usize,
        found: usize,
    },
    Antisymmetry {
        i: usize,
        j: usize,
        k: usize,
    },
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        component: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape { expected, found } => {
                write!(f, "table has {found} entries, expected {expected}")
            }
            Violation::Antisymmetry { i, j, k } => {
                write!(f, "antisymmetry fails at ({i},{j},{k})")
            }
            Violation::Jacobi { i, j, k, component } => {
                write!(
                    f,
                    "Jacobi identity fails for ({i},{j},{k}) in component {component}"
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

fn idx(n: usize, i: usize, j: usize, k: usize) -> usize {
    (i * n + j) * n + k
}

/// Checks the Lie axioms on a raw table laid out as `c[i][j][k]` at
/// `(i*n + j)*n + k`.
pub fn validate_table(dim: usize, table: &[Rational]) -> ValidationReport {
    let mut violations = Vec::new();
    let expected = dim * dim * dim;
    if table.len() != expected {
        violations.push(Violation::Shape {
            expected,
            found: table.len(),
        });
        return ValidationReport { violations };
    }
    let n = dim;
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let a = &table[idx(n, i, j, k)];
                let b = &table[idx(n, j, i, k)];
                if !(a + b).is_zero() {
                    violations.push(Violation::Antisymmetry { i, j, k });
                }
            }
        }
    }
    if !violations.is_empty() {
        return ValidationReport { violations };
    }
    // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
    let bracket_with = |coeffs_from: (usize, usize), other: usize, out: &mut [Rational]| {
        let (a, b) = coeffs_from;
        for l in 0..n {
            let c = &table[idx(n, a, b, l)];
            if c.is_zero() {
                continue;
            }
            for (comp, o) in out.iter_mut().enumerate() {
                let d = &table[idx(n, l, other, comp)];
                if !d.is_zero() {
                    *o += c * d;
                }
            }
        }
    };
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let mut acc = vec![Rational::zero(); n];
                bracket_with((i, j), k, &mut acc);
                bracket_with((j, k), i, &mut acc);
                bracket_with((k, i), j, &mut acc);
                if let Some(component) = acc.iter().position(|x| !x.is_zero()) {
                    violations.push(Violation::Jacobi { i, j, k, component });
                }
            }
        }
    }
    ValidationReport { violations }
}

/// A finite-dimensional Lie algebra over Q with `[e_i, e_j] = sum_k c[i][j][k] e_k`.
///
/// `(i, j, [(k, c)])`: the nonzero components of `[e_i, e_j]`.
pub type BracketSpec = (usize, usize, Vec<(usize, Rational)>);

/// The full table is stored, both `c[i][j]` and `c[j][i]`; construction through
/// [`LieAlgebra::new`] guarantees antisymmetry and the Jacobi identity.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    table: Vec<Rational>,
    name: Option<String>,
}

impl LieAlgebra {
    pub fn new(dim: usize, table: Vec<Rational>) -> Result<Self, LieError> {
        let report = validate_table(dim, &table);
        if !report.is_ok() {
            return Err(LieError::Invalid(report));
        }
        Ok(LieAlgebra {
            dim,
            table,
            name: None,
        })
    }

    /// Builds from the brackets `[e_i, e_j]` with `i < j`; the antisymmetric
    /// partner is filled in.
    pub fn from_brackets(dim: usize, brackets: &[BracketSpec]) -> Result<Self, LieError> {
        let mut table = vec![Rational::zero(); dim * dim * dim];
        for (i, j, comps) in brackets {
            let (i, j) = (*i, *j);
            if i >= dim || j >= dim {
                return Err(LieError::Invalid(ValidationReport {
                    violations: vec![Violation::Shape {
                        expected: dim,
                        found: i.max(j) + 1,
                    }],
                }));
            }
            for (k, c) in comps {
                if *k >= dim {
                    return Err(LieError::Invalid(ValidationReport {
                        violations: vec![Violation::Shape {
                            expected: dim,
                            found: k + 1,
                        }],
                    }));
                }
                table[idx(dim, i, j, *k)] += c;
                table[idx(dim, j, i, *k)] -= c;
            }
        }
        LieAlgebra::new(dim, table)
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            table: vec![Rational::zero(); dim * dim * dim],
            name: None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn table(&self) -> &[Rational] {
        &self.table
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.table[idx(self.dim, i, j, k)]
    }

    pub fn validate(&self) -> ValidationReport {
        validate_table(self.dim, &self.table)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Zero::is_zero)
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        let start = idx(self.dim, i, j, 0);
        self.table[start..start + self.dim].to_vec()
    }

    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() || i == j {
                    continue;
                }
                let ab = a * b;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        *o += &ab * c;
                    }
                }
            }
        }
        out
    }

    fn check_ambient(&self, s: &Subspace) -> Result<(), LieError> {
        if s.ambient_dim() != self.dim {
            return Err(LinalgError::AmbientMismatch {
                left: self.dim,
                right: s.ambient_dim(),
            }
            .into());
        }
        Ok(())
    }

    /// `[U, V]`: span of brackets of basis vectors.
    pub fn bracket_subspaces(&self, u: &Subspace, v: &Subspace) -> Result<Subspace, LieError> {
        self.check_ambient(u)?;
        self.check_ambient(v)?;
        let mut vectors = Vec::new();
        for a in u.basis_vectors() {
            for b in v.basis_vectors() {
                let w = self.bracket(&a, &b);
                if w.iter().any(|x| !x.is_zero()) {
                    vectors.push(w);
                }
            }
        }
        Ok(Subspace::span(self.dim, vectors)?)
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.dim)
    }

    /// `L^2 = [L, L]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        let mut vectors = Vec::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let w = self.bracket_basis(i, j);
                if w.iter().any(|x| !x.is_zero()) {
                    vectors.push(w);
                }
            }
        }
        Subspace::span(self.dim, vectors).expect("bracket vectors have ambient length")
    }

    pub fn center(&self) -> Subspace {
        // Row (j,k), column i: c[i][j][k]; the kernel is {x : [x, e_j] = 0 for all j}.
        let n = self.dim;
        let mut m = Matrix::zeros(n * n, n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    m.set(j * n + k, i, self.constant(i, j, k).clone());
                }
            }
        }
        kernel_basis(&m)
    }

    pub fn is_ideal(&self, u: &Subspace) -> Result<bool, LieError> {
        let image = self.bracket_subspaces(&self.full(), u)?;
        Ok(u.contains_subspace(&image)?)
    }

    pub fn is_central(&self, u: &Subspace) -> Result<bool, LieError> {
        self.check_ambient(u)?;
        Ok(self.center().contains_subspace(u)?)
    }

    pub fn lower_central_series(&self) -> LowerCentralSeries {
        let mut terms = vec![self.full()];
        loop {
            let last = terms.last().expect("series starts non-empty");
            if last.is_zero() {
                // Class is the index of the last nonzero term (1-based).
                let class = terms.len() - 1;
                return LowerCentralSeries {
                    terms,
                    class: Some(class),
                };
            }
            let next = self
                .bracket_subspaces(&self.full(), last)
                .expect("terms live in the ambient space");
            if next.dim() == last.dim() {
                return LowerCentralSeries { terms, class: None };
            }
            terms.push(next);
        }
    }

    pub fn nilpotency_class(&self) -> Result<usize, LieError> {
        let series = self.lower_central_series();
        series.class.ok_or_else(|| LieError::NotNilpotent {
            stable_dim: series.terms.last().map_or(0, Subspace::dim),
        })
    }

    /// Frattini subalgebra; for nilpotent algebras it coincides with `L^2`.
    pub fn frattini(&self) -> Result<Subspace, LieError> {
        self.nilpotency_class()?;
        Ok(self.derived_subalgebra())
    }

    pub fn structural_profile(&self) -> Result<StructuralProfile, LieError> {
        let c = self.nilpotency_class()?;
        let m = self.derived_subalgebra().dim();
        Ok(StructuralProfile {
            n: self.dim,
            m,
            d: self.center().dim(),
            c,
            gens: self.dim - m,
        })
    }

    /// `L / I`, using the non-pivot coordinates of `I`'s echelon basis as the
    /// complement.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient, LieError> {
        self.check_ambient(ideal)?;
        if !self.is_ideal(ideal)? {
            return Err(LieError::NotAnIdeal);
        }
        let complement = ideal.non_pivot_columns();
        let q = complement.len();
        let mut table = vec![Rational::zero(); q * q * q];
        let quotient = Quotient {
            algebra: LieAlgebra::abelian(0),
            ideal: ideal.clone(),
            complement: complement.clone(),
        };
        for (a, &ka) in complement.iter().enumerate() {
            for (b, &kb) in complement.iter().enumerate() {
                let img = quotient.project(&self.bracket_basis(ka, kb))?;
                for (c, v) in img.into_iter().enumerate() {
                    table[idx(q, a, b, c)] = v;
                }
            }
        }
        let mut algebra = LieAlgebra::new(q, table)?;
        if let Some(name) = &self.name {
            algebra.name = Some(format!("{name}/I"));
        }
        Ok(Quotient {
            algebra,
            ..quotient
        })
    }

    /// The algebra induced on a subalgebra, in coordinates of its echelon basis.
    pub fn subalgebra(&self, s: &Subspace) -> Result<LieAlgebra, LieError> {
        self.check_ambient(s)?;
        let basis = s.basis_vectors();
        let r = basis.len();
        let mut table = vec![Rational::zero(); r * r * r];
        for a in 0..r {
            for b in 0..r {
                let w = self.bracket(&basis[a], &basis[b]);
                let coords = s.coordinates(&w)?.ok_or(LieError::NotASubalgebra)?;
                for (c, v) in coords.into_iter().enumerate() {
                    table[idx(r, a, b, c)] = v;
                }
            }
        }
        LieAlgebra::new(r, table)
    }

    /// Structure constants in the basis `f_a = sum_i p[a][i] e_i`.
    pub fn change_basis(&self, p: &Matrix) -> Result<LieAlgebra, LieError> {
        let inv = p.inverse()?;
        let n = self.dim;
        let rows = p.row_vecs();
        let mut table = vec![Rational::zero(); n * n * n];
        for a in 0..n {
            for b in 0..n {
                let w = self.bracket(&rows[a], &rows[b]);
                let coords = inv.left_apply(&w)?;
                for (c, v) in coords.into_iter().enumerate() {
                    table[idx(n, a, b, c)] = v;
                }
            }
        }
        let mut out = LieAlgebra::new(n, table)?;
        out.name = self.name.clone();
        Ok(out)
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LieAlgebra({}, dim {}) {{",
            self.name.as_deref().unwrap_or("?"),
            self.dim
        )?;
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let w = self.bracket_basis(i, j);
                if w.iter().all(Zero::is_zero) {
                    continue;
                }
                let terms: Vec<String> = w
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| {
                        if c.is_one() {
                            format!("e{k}")
                        } else {
                            format!("{c}*e{k}")
                        }
                    })
                    .collect();
                write!(f, " [e{i},e{j}]={}", terms.join("+"))?;
            }
        }
        write!(f, " }}")
    }
}

#[derive(Debug, Clone)]
pub struct LowerCentralSeries {
    /// `L^1 = L, L^2, ...` down to the zero term, or to the stable term when
    /// the algebra is not nilpotent.
    pub terms: Vec<Subspace>,
    /// `None` for non-nilpotent algebras.
    pub class: Option<usize>,
}

/// `(n, m, d, c, gens)`: dimensions of `L`, `L^2`, `Z(L)`, the nilpotency
/// class, and `dim L/L^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructuralProfile {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub c: usize,
    pub gens: usize,
}

#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    pub ideal: Subspace,
    /// Ambient coordinates whose images form the quotient basis.
    pub complement: Vec<usize>,
}

impl Quotient {
    pub fn project(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        let reduced = self.ideal.reduce(v)?;
        Ok(self
            .complement
            .iter()
            .map(|&k| reduced[k].clone())
            .collect())
    }

    pub fn project_subspace(&self, s: &Subspace) -> Result<Subspace, LinalgError> {
        let images = s
            .basis_vectors()
            .iter()
            .map(|v| self.project(v))
            .collect::<Result<Vec<_>, _>>()?;
        Subspace::span(self.complement.len(), images)
    }
}

/// Block-diagonal sum; `h` occupies the first `h.dim()` coordinates.
pub fn direct_sum(h: &LieAlgebra, k: &LieAlgebra) -> LieAlgebra {
    let (a, b) = (h.dim, k.dim);
    let n = a + b;
    let mut table = vec![Rational::zero(); n * n * n];
    for i in 0..a {
        for j in 0..a {
            for l in 0..a {
                table[idx(n, i, j, l)] = h.constant(i, j, l).clone();
            }
        }
    }
    for i in 0..b {
        for j in 0..b {
            for l in 0..b {
                table[idx(n, a + i, a + j, a + l)] = k.constant(i, j, l).clone();
            }
        }
    }
    let name = match (&h.name, &k.name) {
        (Some(x), Some(y)) => Some(format!("{x}+{y}")),
        _ => None,
    };
    LieAlgebra {
        dim: n,
        table,
        name,
    }
}
