//! Built-in corpus of named algebras with their expected invariants, and the
//! sweep that re-derives those invariants and runs every bound and identity
//! check on each entry.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::bound_report;
use crate::constructions::{abelian, filiform, free_nilpotent, heisenberg, ConstructionError};
use crate::homology::{multiplier_dim, ChainBoundaries};
use crate::lie::{direct_sum, LieAlgebra};
use crate::ratlin::Subspace;
use crate::relative::{
    central_quotient_check, check_pair_bounds, triple_inequality_check, PairContext, TripleContext,
};

const CATALOG_DATA: &str = include_str!("../data/catalog.json");

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecipeError {
    #[error("cannot parse recipe {0:?}")]
    Syntax(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

/// How to build a catalog algebra: `A(n)`, `H(m)`, `F(n,c)`, `filiform<n>`,
/// or `+`-separated direct sums of those (left-associated).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recipe {
    Abelian(usize),
    Heisenberg(usize),
    FreeNilpotent(usize, usize),
    Filiform(usize),
    Sum(Box<Recipe>, Box<Recipe>),
}

impl Recipe {
    pub fn build(&self) -> Result<LieAlgebra, ConstructionError> {
        Ok(match self {
            Recipe::Abelian(n) => abelian(*n),
            Recipe::Heisenberg(m) => heisenberg(*m)?,
            Recipe::FreeNilpotent(n, c) => free_nilpotent(*n, *c)?,
            Recipe::Filiform(n) => filiform(*n)?,
            Recipe::Sum(a, b) => direct_sum(&a.build()?, &b.build()?),
        })
    }

    pub fn dim(&self) -> Result<usize, ConstructionError> {
        Ok(self.build()?.dim())
    }

    /// The two summands of a top-level direct sum.
    pub fn summands(&self) -> Option<(&Recipe, &Recipe)> {
        match self {
            Recipe::Sum(a, b) => Some((a, b)),
            _ => None,
        }
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Abelian(n) => write!(f, "A({n})"),
            Recipe::Heisenberg(m) => write!(f, "H({m})"),
            Recipe::FreeNilpotent(n, c) => write!(f, "F({n},{c})"),
            Recipe::Filiform(n) => write!(f, "filiform{n}"),
            Recipe::Sum(a, b) => write!(f, "{a}+{b}"),
        }
    }
}

fn parse_args(text: &str, head: &str) -> Option<Vec<usize>> {
    let inner = text
        .strip_prefix(head)?
        .strip_prefix('(')?
        .strip_suffix(')')?;
    inner.split(',').map(|s| s.trim().parse().ok()).collect()
}

impl FromStr for Recipe {
    type Err = RecipeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || RecipeError::Syntax(s.to_owned());
        let mut terms = s.split('+').map(str::trim).map(|t| {
            if let Some(a) = parse_args(t, "A") {
                return match a[..] {
                    [n] => Ok(Recipe::Abelian(n)),
                    _ => Err(err()),
                };
            }
            if let Some(a) = parse_args(t, "H") {
                return match a[..] {
                    [m] => Ok(Recipe::Heisenberg(m)),
                    _ => Err(err()),
                };
            }
            if let Some(a) = parse_args(t, "F") {
                return match a[..] {
                    [n, c] => Ok(Recipe::FreeNilpotent(n, c)),
                    _ => Err(err()),
                };
            }
            if let Some(n) = t.strip_prefix("filiform") {
                return n.parse().map(Recipe::Filiform).map_err(|_| err());
            }
            Err(err())
        });
        let first = terms.next().ok_or_else(err)??;
        terms.try_fold(first, |acc, t| Ok(Recipe::Sum(Box::new(acc), Box::new(t?))))
    }
}

/// Invariants stored with each entry; all produced by the homology and
/// structure pipeline, never entered by hand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedInvariants {
    pub dim: usize,
    pub derived_dim: usize,
    pub center_dim: usize,
    pub class: usize,
    pub multiplier: usize,
}

impl ExpectedInvariants {
    pub fn compute(l: &LieAlgebra) -> Result<Self, crate::lie::LieError> {
        let p = l.structural_profile()?;
        Ok(ExpectedInvariants {
            dim: p.n,
            derived_dim: p.m,
            center_dim: p.d,
            class: p.c,
            multiplier: multiplier_dim(l),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub name: String,
    pub recipe: String,
    pub provenance: String,
    pub expected: ExpectedInvariants,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub recipe: Recipe,
    pub expected: Option<ExpectedInvariants>,
}

impl CatalogEntry {
    pub fn build(&self) -> Result<LieAlgebra, ConstructionError> {
        Ok(self.recipe.build()?.with_name(self.name.clone()))
    }
}

/// Catalog recipes in listing order.
pub fn catalog_recipes() -> Vec<(&'static str, &'static str)> {
    vec![
        ("A(0)", "A(0)"),
        ("A(1)", "A(1)"),
        ("A(2)", "A(2)"),
        ("A(3)", "A(3)"),
        ("A(4)", "A(4)"),
        ("A(5)", "A(5)"),
        ("A(6)", "A(6)"),
        ("H(1)", "H(1)"),
        ("H(2)", "H(2)"),
        ("H(3)", "H(3)"),
        ("H(1)+A(1)", "H(1)+A(1)"),
        ("H(1)+A(2)", "H(1)+A(2)"),
        ("H(1)+A(3)", "H(1)+A(3)"),
        ("filiform4", "filiform4"),
        ("F(2,1)", "F(2,1)"),
        ("F(2,2)", "F(2,2)"),
        ("F(2,3)", "F(2,3)"),
        ("F(3,2)", "F(3,2)"),
        ("A(2)+A(3)", "A(2)+A(3)"),
        ("H(2)+A(1)", "H(2)+A(1)"),
        ("H(1)+H(1)", "H(1)+H(1)"),
        ("filiform4+A(1)", "filiform4+A(1)"),
    ]
}

pub fn stored_records() -> Vec<CatalogRecord> {
    serde_json::from_str(CATALOG_DATA).expect("bundled catalog data is well-formed")
}

pub fn catalog_entries() -> Vec<CatalogEntry> {
    let records = stored_records();
    catalog_recipes()
        .into_iter()
        .map(|(name, recipe)| CatalogEntry {
            name: name.to_owned(),
            recipe: recipe.parse().expect("built-in recipes parse"),
            expected: records.iter().find(|r| r.name == name).map(|r| r.expected),
        })
        .collect()
}

pub fn lookup(name: &str) -> Result<CatalogEntry, RecipeError> {
    catalog_entries()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| RecipeError::UnknownEntry(name.to_owned()))
}

/// Recomputes the records from the recipes.
pub fn derive_records() -> Result<Vec<CatalogRecord>, RecipeError> {
    catalog_recipes()
        .into_iter()
        .map(|(name, recipe)| {
            let l = recipe.parse::<Recipe>()?.build()?;
            let expected = ExpectedInvariants::compute(&l).map_err(ConstructionError::from)?;
            Ok(CatalogRecord {
                name: name.to_owned(),
                recipe: recipe.to_owned(),
                provenance: "derived".to_owned(),
                expected,
            })
        })
        .collect()
}

/// Outcome of every check run on one entry.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct EntryCheck {
    pub name: String,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl EntryCheck {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn expect(&mut self, cond: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !cond {
            self.failures.push(what());
        }
    }
}

fn coord(n: usize, idx: &[usize]) -> Subspace {
    Subspace::coordinate(n, idx).expect("indices below ambient dimension")
}

/// Standard basis vectors that are central.
pub fn central_coordinates(l: &LieAlgebra) -> Vec<usize> {
    let z = l.center();
    (0..l.dim())
        .filter(|&i| {
            let mut v = vec![num::zero(); l.dim()];
            v[i] = num::one();
            z.contains(&v).expect("length matches")
        })
        .collect()
}

fn check_direct_sum(out: &mut EntryCheck, l: &LieAlgebra, left: &LieAlgebra, right: &LieAlgebra) {
    let n = l.dim();
    let a = left.dim();
    let left_block: Vec<usize> = (0..a).collect();
    let right_block: Vec<usize> = (a..n).collect();
    let all: Vec<usize> = (0..n).collect();
    let gens = |x: &LieAlgebra| x.dim() - x.derived_subalgebra().dim();

    let kunneth = multiplier_dim(left) + multiplier_dim(right) + gens(left) * gens(right);
    let mult = multiplier_dim(l);
    out.expect(mult == kunneth, || {
        format!("Künneth: dim M(L) = {mult}, sum of parts = {kunneth}")
    });

    for (ideal, comp) in [
        (&right_block, &left_block),
        (&left_block, &right_block),
        (&all, &vec![]),
        (&vec![], &all),
    ] {
        let ctx = match PairContext::new(l.clone(), coord(n, ideal), Some(coord(n, comp))) {
            Ok(c) => c,
            Err(e) => {
                out.expect(false, || format!("pair context N={ideal:?}: {e}"));
                continue;
            }
        };
        match check_pair_bounds(&ctx) {
            Ok(r) => out.expect(r.holds, || {
                format!(
                    "pair bounds N={ideal:?}: {} <= {} <= {} fails",
                    r.lower, r.exterior, r.upper
                )
            }),
            Err(e) => out.expect(false, || format!("pair bounds N={ideal:?}: {e}")),
        }
        let quotient = l.quotient(&coord(n, ideal)).expect("blocks are ideals");
        let pair = ctx.multiplier_dim().expect("complement present");
        out.expect(pair + multiplier_dim(&quotient.algebra) == mult, || {
            format!("complement decomposition fails for N={ideal:?}")
        });
    }

    for (i_block, j_block) in [(&left_block, &right_block), (&right_block, &left_block)] {
        let (ib, jb) = (coord(n, i_block), coord(n, j_block));
        let ctx = match TripleContext::new(l.clone(), ib.clone(), jb.clone(), None) {
            Ok(c) => c,
            Err(e) => {
                out.expect(false, || format!("triple context: {e}"));
                continue;
            }
        };
        let (gi, gj) = (
            ib.dim() - l.subalgebra(&ib).expect("ideal").derived_subalgebra().dim(),
            jb.dim() - l.subalgebra(&jb).expect("ideal").derived_subalgebra().dim(),
        );
        let triple = ctx.multiplier_dim().expect("valid triple");
        out.expect(triple == gi * gj, || {
            format!(
                "triple identity: dim M(L,I,J) = {triple}, gens product = {}",
                gi * gj
            )
        });

        let mut ks: Vec<Subspace> = vec![Subspace::zero(n)];
        if l.is_central(&jb).expect("same ambient") && !jb.is_zero() {
            ks.push(jb.clone());
        }
        for c in central_coordinates(l) {
            if j_block.contains(&c) {
                ks.push(coord(n, &[c]));
            }
        }
        for k in ks {
            let kdim = k.dim();
            let r = TripleContext::new(l.clone(), ib.clone(), jb.clone(), Some(k))
                .and_then(|c| triple_inequality_check(&c, false));
            match r {
                Ok(r) => out.expect(r.holds, || {
                    format!(
                        "triple inequality (dim K = {kdim}): {} <= {} fails",
                        r.lhs, r.rhs
                    )
                }),
                Err(e) => out.expect(false, || format!("triple inequality: {e}")),
            }
        }
    }
}

/// Runs the full check suite on one entry.
pub fn check_entry(entry: &CatalogEntry) -> EntryCheck {
    let mut out = EntryCheck {
        name: entry.name.clone(),
        ..Default::default()
    };
    let l = match entry.build() {
        Ok(l) => l,
        Err(e) => {
            out.expect(false, || format!("construction failed: {e}"));
            return out;
        }
    };
    let report = l.validate();
    out.expect(report.is_ok(), || format!("validation: {report}"));

    match ExpectedInvariants::compute(&l) {
        Ok(got) => match entry.expected {
            Some(exp) => out.expect(got == exp, || {
                format!("expected {exp:?}, recomputed {got:?}")
            }),
            None => out.expect(false, || "no stored invariants".to_owned()),
        },
        Err(e) => out.expect(false, || format!("profile: {e}")),
    }

    out.expect(ChainBoundaries::new(&l).composite_is_zero(), || {
        "d2 * d3 is not zero".to_owned()
    });

    let mult = multiplier_dim(&l);
    let n = l.dim();
    let batten = n * n.saturating_sub(1) / 2;
    out.expect((mult == batten) == l.is_abelian(), || {
        format!("abelian characterization: dim M(L) = {mult}, n(n-1)/2 = {batten}")
    });

    match bound_report(&l) {
        Ok(r) => out.expect(r.all_hold(), || {
            let bad: Vec<_> = r
                .entries
                .iter()
                .filter(|e| e.asserted && e.holds == Some(false))
                .map(|e| format!("{} = {}", e.name.label(), e.value))
                .collect();
            format!(
                "bounds violated (multiplier {}): {}",
                r.multiplier,
                bad.join(", ")
            )
        }),
        Err(e) => out.expect(false, || format!("bound report: {e}")),
    }

    let mut zs = vec![l.center()];
    zs.extend(central_coordinates(&l).into_iter().map(|c| coord(n, &[c])));
    for z in zs {
        let zd = z.dim();
        match central_quotient_check(&l, &z, false) {
            Ok(r) => out.expect(r.holds, || {
                format!(
                    "central quotient (dim Z = {zd}): {} <= {} <= {} fails",
                    r.left, r.middle, r.right
                )
            }),
            Err(e) => out.expect(false, || format!("central quotient: {e}")),
        }
    }

    if let Some((a, b)) = entry.recipe.summands() {
        match (a.build(), b.build()) {
            (Ok(left), Ok(right)) => check_direct_sum(&mut out, &l, &left, &right),
            _ => out.expect(false, || "summand construction failed".to_owned()),
        }
    }
    out
}

pub fn check_catalog() -> Vec<EntryCheck> {
    catalog_entries().iter().map(check_entry).collect()
}
