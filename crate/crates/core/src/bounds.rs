//! Closed-form upper bounds on `dim M(L)` in terms of `n = dim L`,
//! `m = dim L^2`, `d = dim Z(L)`, the class `c` and the generator count, and
//! a per-algebra report checking each of them against the computed value.

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::constructions::{witt_dim, ConstructionError};
use crate::homology::multiplier_dim;
use crate::lie::{LieAlgebra, LieError, StructuralProfile};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("bound needs 1 <= m (got n={n}, m={m})")]
    DerivedZero { n: u64, m: u64 },
    #[error("parameters out of range: {0}")]
    Domain(String),
    #[error(transparent)]
    Witt(#[from] ConstructionError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// `n(n-1)/2`.
pub fn batten_bound(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// `(m - m^2 + 2mn - 2n)/2`, evaluated as printed; may be negative.
pub fn yankosky_bound(n: u64, m: u64) -> Result<i64, BoundError> {
    if m == 0 {
        return Err(BoundError::DerivedZero { n, m });
    }
    if n == 0 || m > n {
        return Err(BoundError::Domain(format!(
            "need 1 <= m <= n, got n={n}, m={m}"
        )));
    }
    let (n, m) = (n as i64, m as i64);
    let twice = m - m * m + 2 * m * n - 2 * n;
    // m - m^2 is always even, as is 2mn - 2n.
    Ok(twice / 2)
}

/// `(n+m-2)(n-m-1)/2 + 1`.
pub fn nice_bound(n: u64, m: u64) -> Result<u64, BoundError> {
    if m == 0 || m + 1 > n {
        return Err(BoundError::Domain(format!(
            "need 1 <= m <= n-1, got n={n}, m={m}"
        )));
    }
    Ok((n + m - 2) * (n - m - 1) / 2 + 1)
}

/// `(n-m)(n-m-1)/2 + m(n-d-1)`.
pub fn salemkar_bound(n: u64, m: u64, d: u64) -> Result<u64, BoundError> {
    if n == 0 || m > n || d == 0 || d > n || (m > 0 && d + 1 > n) {
        return Err(BoundError::Domain(format!(
            "need n >= 1, m <= n, 1 <= d <= n and d <= n-1 when m > 0; got n={n}, m={m}, d={d}"
        )));
    }
    let k = n - m;
    let tail = if m > 0 { m * (n - d - 1) } else { 0 };
    Ok(k * k.saturating_sub(1) / 2 + tail)
}

/// `sum_{j=1}^{c} l_gens(j+1)`.
pub fn bosko_bound(gens: u64, c: u64) -> Result<u128, BoundError> {
    if gens == 0 || c == 0 {
        return Err(BoundError::Domain(format!(
            "need gens >= 1 and c >= 1, got gens={gens}, c={c}"
        )));
    }
    let mut total = 0u128;
    for j in 1..=c {
        total += witt_dim(gens, j + 1)?;
    }
    Ok(total)
}

/// `n >= 3`, `d >= 1` and `m <= floor((n-2)/(d+1))`.
pub fn theorem1_region(n: u64, m: u64, d: u64) -> bool {
    n >= 3 && d >= 1 && m <= (n - 2) / (d + 1)
}

/// Named bound for report entries; order here is report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Batten,
    Yankosky,
    Nice,
    Salemkar,
    Bosko,
}

impl BoundKind {
    pub fn label(self) -> &'static str {
        match self {
            BoundKind::Batten => "batten",
            BoundKind::Yankosky => "yankosky",
            BoundKind::Nice => "nice",
            BoundKind::Salemkar => "salemkar",
            BoundKind::Bosko => "bosko",
        }
    }
}

/// A bound value, or "n/a" when the bound's parameter range excludes the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundValue {
    Value(i128),
    NotApplicable,
}

impl Serialize for BoundValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            BoundValue::Value(v) => s.serialize_i128(*v),
            BoundValue::NotApplicable => s.serialize_str("n/a"),
        }
    }
}

impl std::fmt::Display for BoundValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundValue::Value(v) => write!(f, "{v}"),
            BoundValue::NotApplicable => write!(f, "n/a"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub name: BoundKind,
    pub value: BoundValue,
    pub asserted: bool,
    /// `multiplier <= value`; `None` when not applicable.
    pub holds: Option<bool>,
    pub equality: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub name: Option<String>,
    pub profile: StructuralProfile,
    pub multiplier: usize,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn entry(&self, kind: BoundKind) -> &BoundEntry {
        self.entries
            .iter()
            .find(|e| e.name == kind)
            .expect("every bound kind has an entry")
    }

    /// True when every asserted, applicable bound holds.
    pub fn all_hold(&self) -> bool {
        self.entries
            .iter()
            .filter(|e| e.asserted)
            .all(|e| e.holds != Some(false))
    }
}

fn entry(kind: BoundKind, value: Option<i128>, asserted: bool, multiplier: usize) -> BoundEntry {
    match value {
        Some(v) => BoundEntry {
            name: kind,
            value: BoundValue::Value(v),
            asserted,
            holds: Some(multiplier as i128 <= v),
            equality: Some(multiplier as i128 == v),
        },
        None => BoundEntry {
            name: kind,
            value: BoundValue::NotApplicable,
            asserted: false,
            holds: None,
            equality: None,
        },
    }
}

/// Evaluates every bound for a nilpotent algebra. The Yankosky expression is
/// reported but never asserted: it evaluates to 0 on `H(1)`, whose
/// multiplier is 2.
pub fn bound_report(l: &LieAlgebra) -> Result<BoundReport, BoundError> {
    let profile = l.structural_profile()?;
    let multiplier = multiplier_dim(l);
    let (n, m, d, c, gens) = (
        profile.n as u64,
        profile.m as u64,
        profile.d as u64,
        profile.c as u64,
        profile.gens as u64,
    );
    let nonabelian = m > 0;
    let batten = Some(batten_bound(n) as i128);
    let yank = if nonabelian {
        yankosky_bound(n, m).ok().map(i128::from)
    } else {
        None
    };
    let nice = if nonabelian {
        nice_bound(n, m).ok().map(i128::from)
    } else {
        None
    };
    let salemkar = if nonabelian {
        salemkar_bound(n, m, d).ok().map(i128::from)
    } else {
        None
    };
    let bosko = bosko_bound(gens, c).ok().map(|v| v as i128);
    let entries = vec![
        entry(BoundKind::Batten, batten, true, multiplier),
        entry(BoundKind::Yankosky, yank, false, multiplier),
        entry(BoundKind::Nice, nice, true, multiplier),
        entry(BoundKind::Salemkar, salemkar, true, multiplier),
        entry(BoundKind::Bosko, bosko, true, multiplier),
    ];
    Ok(BoundReport {
        name: l.name().map(str::to_owned),
        profile,
        multiplier,
        entries,
    })
}

/// One row of the nice-versus-salemkar comparison table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegionRow {
    pub n: u64,
    pub m: u64,
    pub d: u64,
    pub nice: u64,
    pub salemkar: u64,
    pub region_flag: bool,
    /// `nice <= salemkar`.
    pub dominance: bool,
}

/// All `(n, m, d)` with `3 <= n <= n_max`, `1 <= m < n`, `1 <= d <= n-1`
/// where both bounds are defined.
pub fn region_table(n_max: u64) -> Vec<RegionRow> {
    let mut rows = Vec::new();
    for n in 3..=n_max {
        for m in 1..n {
            for d in 1..n {
                let (Ok(nice), Ok(salemkar)) = (nice_bound(n, m), salemkar_bound(n, m, d)) else {
                    continue;
                };
                rows.push(RegionRow {
                    n,
                    m,
                    d,
                    nice,
                    salemkar,
                    region_flag: theorem1_region(n, m, d),
                    dominance: nice <= salemkar,
                });
            }
        }
    }
    rows
}
