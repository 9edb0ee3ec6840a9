//! Multipliers of pairs `(L, N)` and triples `(L, I, J)`, and checkers for
//! the dimension inequalities relating them.
//!
//! `dim M(L, N)` is only computed when `N` has a complement ideal, where
//! `M(L) ≅ M(L, N) ⊕ M(L/N)` turns it into a difference of two absolute
//! multipliers. Statements that need the epicenter `Z*(L)` are checked only
//! under a caller-asserted hypothesis; the epicenter itself is never computed.

use serde::Serialize;
use thiserror::Error;

use crate::homology::multiplier_dim;
use crate::lie::{LieAlgebra, LieError};
use crate::ratlin::{LinalgError, Subspace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RelativeError {
    #[error("{0} is not an ideal")]
    NotAnIdeal(&'static str),
    #[error("a complement ideal is required to compute the pair multiplier")]
    ComplementRequired,
    #[error("{0} and its complement do not span the algebra")]
    SumNotFull(&'static str),
    #[error("{0} meets its complement nontrivially")]
    IntersectionNonzero(&'static str),
    #[error("K must be central")]
    KNotCentral,
    #[error("K must lie inside {0}")]
    KNotContained(&'static str),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn require_ideal(l: &LieAlgebra, s: &Subspace, what: &'static str) -> Result<(), RelativeError> {
    if !l.is_ideal(s)? {
        return Err(RelativeError::NotAnIdeal(what));
    }
    Ok(())
}

fn require_complement(
    l: &LieAlgebra,
    a: &Subspace,
    b: &Subspace,
    what: &'static str,
) -> Result<(), RelativeError> {
    if !a.sum(b)?.is_full() {
        return Err(RelativeError::SumNotFull(what));
    }
    if !a.intersection(b)?.is_zero() {
        return Err(RelativeError::IntersectionNonzero(what));
    }
    require_ideal(l, b, "complement")
}

/// `dim M(L, N)` for an ideal `N` with a complement ideal.
fn complemented_pair_dim(l: &LieAlgebra, n: &Subspace) -> Result<usize, RelativeError> {
    let q = l.quotient(n)?;
    Ok(multiplier_dim(l) - multiplier_dim(&q.algebra))
}

/// An ideal `N` of `L`, with an optional complement ideal.
#[derive(Debug, Clone)]
pub struct PairContext {
    pub algebra: LieAlgebra,
    pub ideal: Subspace,
    pub complement: Option<Subspace>,
    /// `dim L/N`
    pub u: usize,
    /// `dim L/(N + Φ(L))`
    pub s: usize,
    /// `dim N/(N ∩ Φ(L))`
    pub t: usize,
    /// `[L, N]`
    pub bracket: Subspace,
}

impl PairContext {
    /// `s` and `t` use `Φ(L) = L^2`, so `L` must be nilpotent.
    pub fn new(
        algebra: LieAlgebra,
        ideal: Subspace,
        complement: Option<Subspace>,
    ) -> Result<Self, RelativeError> {
        require_ideal(&algebra, &ideal, "N")?;
        if let Some(c) = &complement {
            require_complement(&algebra, &ideal, c, "N")?;
        }
        let phi = algebra.frattini()?;
        let n = algebra.dim();
        let u = n - ideal.dim();
        let s = n - ideal.sum(&phi)?.dim();
        let t = ideal.dim() - ideal.intersection(&phi)?.dim();
        let bracket = algebra.bracket_subspaces(&algebra.full(), &ideal)?;
        Ok(PairContext {
            algebra,
            ideal,
            complement,
            u,
            s,
            t,
            bracket,
        })
    }

    /// `dim M(L, N) = dim M(L) - dim M(L/N)`.
    pub fn multiplier_dim(&self) -> Result<usize, RelativeError> {
        if self.complement.is_none() {
            return Err(RelativeError::ComplementRequired);
        }
        complemented_pair_dim(&self.algebra, &self.ideal)
    }

    /// `dim L∧N = dim M(L, N) + dim [L, N]`.
    pub fn exterior_dim(&self) -> Result<usize, RelativeError> {
        Ok(self.multiplier_dim()? + self.bracket.dim())
    }
}

/// `dim N (2u + dim N - 1) / 2`.
pub fn pair_upper_bound(dim_n: u64, u: u64) -> u64 {
    if dim_n == 0 {
        return 0;
    }
    dim_n * (2 * u + dim_n - 1) / 2
}

/// `t (2s + t - 1) / 2`.
pub fn pair_lower_bound(s: u64, t: u64) -> u64 {
    if t == 0 {
        return 0;
    }
    t * (2 * s + t - 1) / 2
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairBoundsReport {
    pub dim_l: usize,
    pub dim_n: usize,
    pub u: usize,
    pub s: usize,
    pub t: usize,
    pub pair_multiplier: usize,
    pub bracket_dim: usize,
    /// `dim M(L,N) + dim [L,N]`
    pub exterior: usize,
    pub lower: u64,
    /// Upper bound with `n = dim N`; this is the asserted one.
    pub upper: u64,
    /// Upper bound with `n = dim L`, reported for comparison.
    pub upper_dim_l: u64,
    pub holds: bool,
}

pub fn check_pair_bounds(ctx: &PairContext) -> Result<PairBoundsReport, RelativeError> {
    let pair = ctx.multiplier_dim()?;
    let bracket_dim = ctx.bracket.dim();
    let exterior = pair + bracket_dim;
    let lower = pair_lower_bound(ctx.s as u64, ctx.t as u64);
    let upper = pair_upper_bound(ctx.ideal.dim() as u64, ctx.u as u64);
    let upper_dim_l = pair_upper_bound(ctx.algebra.dim() as u64, ctx.u as u64);
    let q = exterior as u64;
    Ok(PairBoundsReport {
        dim_l: ctx.algebra.dim(),
        dim_n: ctx.ideal.dim(),
        u: ctx.u,
        s: ctx.s,
        t: ctx.t,
        pair_multiplier: pair,
        bracket_dim,
        exterior,
        lower,
        upper,
        upper_dim_l,
        holds: lower <= q && q <= upper,
    })
}

/// An equality implied by assuming `K ⊆ Z*(L)`, evaluated on the data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EpicenterCheck {
    pub lhs: i64,
    pub rhs: i64,
    /// Whether the data agrees with the hypothesis.
    pub consistent: bool,
}

impl EpicenterCheck {
    fn new(lhs: i64, rhs: i64) -> Self {
        EpicenterCheck {
            lhs,
            rhs,
            consistent: lhs == rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplementCentralReport {
    pub pair_multiplier: usize,
    pub k_cap_bracket: usize,
    pub quotient_pair_multiplier: usize,
    pub k_multiplier: usize,
    pub k_dim: usize,
    pub quotient_gens: usize,
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
    pub epicenter: Option<EpicenterCheck>,
}

/// `dim M(L/K, N/K)` for a central `K ⊆ N`, where `N` has complement `C` in
/// `L` and `(C + K)/K` complements `N/K` in `L/K`.
fn quotient_pair_dim(
    l: &LieAlgebra,
    n: &Subspace,
    complement: &Subspace,
    k: &Subspace,
) -> Result<usize, RelativeError> {
    let q = l.quotient(k)?;
    let n_bar = q.project_subspace(n)?;
    let c_bar = q.project_subspace(&complement.sum(k)?)?;
    require_complement(&q.algebra, &n_bar, &c_bar, "N/K")?;
    complemented_pair_dim(&q.algebra, &n_bar)
}

fn check_k(
    l: &LieAlgebra,
    k: &Subspace,
    inside: &Subspace,
    what: &'static str,
) -> Result<(), RelativeError> {
    if !l.is_central(k)? {
        return Err(RelativeError::KNotCentral);
    }
    if !inside.contains_subspace(k)? {
        return Err(RelativeError::KNotContained(what));
    }
    Ok(())
}

/// `dim M(L,N) + dim K∩[L,N] <= dim M(L/K,N/K) + dim M(K) + dim L/(L^2+K) · dim K`
/// for central `K ⊆ N`. With `assume_epicentral`, also evaluates the
/// equality `dim M(L,N) + dim K∩[L,N] = dim M(L/K,N/K)`.
pub fn complement_central_check(
    ctx: &PairContext,
    k: &Subspace,
    assume_epicentral: bool,
) -> Result<ComplementCentralReport, RelativeError> {
    let complement = ctx
        .complement
        .as_ref()
        .ok_or(RelativeError::ComplementRequired)?;
    let l = &ctx.algebra;
    check_k(l, k, &ctx.ideal, "N")?;
    let pair = ctx.multiplier_dim()?;
    let k_cap_bracket = k.intersection(&ctx.bracket)?.dim();
    let quotient_pair = quotient_pair_dim(l, &ctx.ideal, complement, k)?;
    let k_multiplier = multiplier_dim(&l.subalgebra(k)?);
    let quotient_gens = l.dim() - l.derived_subalgebra().sum(k)?.dim();
    let lhs = pair + k_cap_bracket;
    let rhs = quotient_pair + k_multiplier + quotient_gens * k.dim();
    Ok(ComplementCentralReport {
        pair_multiplier: pair,
        k_cap_bracket,
        quotient_pair_multiplier: quotient_pair,
        k_multiplier,
        k_dim: k.dim(),
        quotient_gens,
        lhs,
        rhs,
        holds: lhs <= rhs,
        epicenter: assume_epicentral.then(|| EpicenterCheck::new(lhs as i64, quotient_pair as i64)),
    })
}

/// `L = I ⊕ J` with both summands ideals, plus an optional central `K ⊆ J`.
#[derive(Debug, Clone)]
pub struct TripleContext {
    pub algebra: LieAlgebra,
    pub i: Subspace,
    pub j: Subspace,
    pub k: Option<Subspace>,
}

impl TripleContext {
    pub fn new(
        algebra: LieAlgebra,
        i: Subspace,
        j: Subspace,
        k: Option<Subspace>,
    ) -> Result<Self, RelativeError> {
        require_ideal(&algebra, &i, "I")?;
        require_ideal(&algebra, &j, "J")?;
        require_complement(&algebra, &j, &i, "J")?;
        if let Some(k) = &k {
            check_k(&algebra, k, &j, "J")?;
        }
        Ok(TripleContext { algebra, i, j, k })
    }

    /// `dim M(L, J)` with `I` as complement.
    pub fn pair_dim(&self) -> Result<usize, RelativeError> {
        complemented_pair_dim(&self.algebra, &self.j)
    }

    /// `dim M(J)` on the structure constants induced on `J`.
    pub fn j_multiplier_dim(&self) -> Result<usize, RelativeError> {
        Ok(multiplier_dim(&self.algebra.subalgebra(&self.j)?))
    }

    /// `dim M(L, I, J) = dim M(L, J) - dim M(J)`.
    pub fn multiplier_dim(&self) -> Result<usize, RelativeError> {
        Ok(self.pair_dim()? - self.j_multiplier_dim()?)
    }

    pub fn swapped(&self) -> Result<TripleContext, RelativeError> {
        TripleContext::new(self.algebra.clone(), self.j.clone(), self.i.clone(), None)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleReport {
    pub triple_multiplier: usize,
    pub pair_multiplier: usize,
    pub j_multiplier: usize,
    pub k_dim: usize,
    pub k_cap_bracket: usize,
    pub quotient_pair_multiplier: usize,
    pub k_multiplier: usize,
    pub quotient_gens: usize,
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
    pub epicenter: Option<EpicenterCheck>,
}

/// `dim M(L,I,J) + dim M(J) + dim K∩[L,J]
///   <= dim M(L/K,J/K) + dim M(K) + dim L/(L^2+K) · dim K`.
///
/// Without a `K` in the context, `K = 0` is used. With `assume_epicentral`,
/// also evaluates `dim M(L,I,J) = dim M(L/K,J/K) - dim K∩[L,J] - dim M(J)`.
pub fn triple_inequality_check(
    ctx: &TripleContext,
    assume_epicentral: bool,
) -> Result<TripleReport, RelativeError> {
    let l = &ctx.algebra;
    let zero = Subspace::zero(l.dim());
    let k = ctx.k.as_ref().unwrap_or(&zero);
    let pair = ctx.pair_dim()?;
    let j_mult = ctx.j_multiplier_dim()?;
    let triple = pair - j_mult;
    let bracket_lj = l.bracket_subspaces(&l.full(), &ctx.j)?;
    let k_cap_bracket = k.intersection(&bracket_lj)?.dim();
    let quotient_pair = quotient_pair_dim(l, &ctx.j, &ctx.i, k)?;
    let k_multiplier = multiplier_dim(&l.subalgebra(k)?);
    let quotient_gens = l.dim() - l.derived_subalgebra().sum(k)?.dim();
    let lhs = triple + j_mult + k_cap_bracket;
    let rhs = quotient_pair + k_multiplier + quotient_gens * k.dim();
    let epicenter = assume_epicentral.then(|| {
        EpicenterCheck::new(
            triple as i64,
            quotient_pair as i64 - k_cap_bracket as i64 - j_mult as i64,
        )
    });
    Ok(TripleReport {
        triple_multiplier: triple,
        pair_multiplier: pair,
        j_multiplier: j_mult,
        k_dim: k.dim(),
        k_cap_bracket,
        quotient_pair_multiplier: quotient_pair,
        k_multiplier,
        quotient_gens,
        lhs,
        rhs,
        holds: lhs <= rhs,
        epicenter,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralQuotientReport {
    pub quotient_multiplier: usize,
    pub multiplier: usize,
    pub derived_cap_z: usize,
    pub z_dim: usize,
    pub gens: usize,
    /// `dim M(L/Z)`
    pub left: usize,
    /// `dim M(L) + dim L^2 ∩ Z`
    pub middle: usize,
    /// `dim M(L/Z) + dim Z · dim L/L^2`
    pub right: usize,
    pub holds: bool,
    pub epicenter: Option<EpicenterCheck>,
}

/// `dim M(L/Z) <= dim M(L) + dim L^2∩Z <= dim M(L/Z) + dim Z · dim L/L^2`
/// for central `Z`. With `assume_epicentral`, also evaluates
/// `dim M(L) + dim L^2∩Z = dim M(L/Z)`.
pub fn central_quotient_check(
    l: &LieAlgebra,
    z: &Subspace,
    assume_epicentral: bool,
) -> Result<CentralQuotientReport, RelativeError> {
    if !l.is_central(z)? {
        return Err(RelativeError::KNotCentral);
    }
    let q = l.quotient(z)?;
    let quotient_multiplier = multiplier_dim(&q.algebra);
    let multiplier = multiplier_dim(l);
    let derived = l.derived_subalgebra();
    let derived_cap_z = derived.intersection(z)?.dim();
    let gens = l.dim() - derived.dim();
    let left = quotient_multiplier;
    let middle = multiplier + derived_cap_z;
    let right = quotient_multiplier + z.dim() * gens;
    Ok(CentralQuotientReport {
        quotient_multiplier,
        multiplier,
        derived_cap_z,
        z_dim: z.dim(),
        gens,
        left,
        middle,
        right,
        holds: left <= middle && middle <= right,
        epicenter: assume_epicentral.then(|| EpicenterCheck::new(middle as i64, left as i64)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{abelian, heisenberg};
    use crate::lie::direct_sum;

    fn coord(n: usize, idx: &[usize]) -> Subspace {
        Subspace::coordinate(n, idx).unwrap()
    }

    fn pair(l: &LieAlgebra, n: &[usize], c: &[usize]) -> PairContext {
        let d = l.dim();
        PairContext::new(l.clone(), coord(d, n), Some(coord(d, c))).unwrap()
    }

    #[test]
    fn pair_multiplier_examples() {
        let h = heisenberg(1).unwrap();
        assert_eq!(pair(&h, &[0, 1, 2], &[]).multiplier_dim().unwrap(), 2);
        assert_eq!(pair(&h, &[], &[0, 1, 2]).multiplier_dim().unwrap(), 0);
        let l = direct_sum(&abelian(2), &abelian(3));
        assert_eq!(pair(&l, &[2, 3, 4], &[0, 1]).multiplier_dim().unwrap(), 9);
    }

    #[test]
    fn complement_is_required() {
        let h = heisenberg(1).unwrap();
        let ctx = PairContext::new(h, coord(3, &[2]), None).unwrap();
        assert_eq!(ctx.multiplier_dim(), Err(RelativeError::ComplementRequired));
    }

    #[test]
    fn bad_complement_is_rejected() {
        let l = direct_sum(&heisenberg(1).unwrap(), &abelian(1));
        let err = PairContext::new(l.clone(), coord(4, &[3]), Some(coord(4, &[0, 1]))).unwrap_err();
        assert_eq!(err, RelativeError::SumNotFull("N"));
        let err =
            PairContext::new(l.clone(), coord(4, &[2, 3]), Some(coord(4, &[0, 1, 2]))).unwrap_err();
        assert_eq!(err, RelativeError::IntersectionNonzero("N"));
        let err = PairContext::new(l, coord(4, &[0]), None).unwrap_err();
        assert_eq!(err, RelativeError::NotAnIdeal("N"));
    }

    #[test]
    fn pair_exterior_examples() {
        let h = heisenberg(1).unwrap();
        assert_eq!(pair(&h, &[0, 1, 2], &[]).exterior_dim().unwrap(), 3);
        assert_eq!(pair(&h, &[], &[0, 1, 2]).exterior_dim().unwrap(), 0);
        let l = direct_sum(&h, &abelian(1));
        assert_eq!(pair(&l, &[3], &[0, 1, 2]).exterior_dim().unwrap(), 2);
    }

    #[test]
    fn pair_bound_formulas() {
        for n in 0..10 {
            assert_eq!(pair_upper_bound(n, 0), n * n.saturating_sub(1) / 2);
        }
        assert_eq!(pair_upper_bound(0, 5), 0);
        assert_eq!(pair_upper_bound(1, 2), 2);
        assert_eq!(pair_lower_bound(3, 0), 0);
        assert_eq!(pair_lower_bound(0, 4), 6);
        assert_eq!(pair_lower_bound(1, 2), 3);
    }

    #[test]
    fn pair_bounds_examples() {
        let h = heisenberg(1).unwrap();
        let r = check_pair_bounds(&pair(&h, &[0, 1, 2], &[])).unwrap();
        assert_eq!((r.lower, r.exterior, r.upper), (1, 3, 3));
        assert!(r.holds);

        let l = direct_sum(&abelian(2), &abelian(3));
        let r = check_pair_bounds(&pair(&l, &[2, 3, 4], &[0, 1])).unwrap();
        assert_eq!((r.s, r.t, r.u), (2, 3, 2));
        assert_eq!((r.lower, r.exterior, r.upper), (9, 9, 9));

        let l = direct_sum(&h, &abelian(1));
        let r = check_pair_bounds(&pair(&l, &[3], &[0, 1, 2])).unwrap();
        assert_eq!((r.s, r.t), (2, 1));
        assert_eq!((r.lower, r.exterior, r.upper), (2, 2, 3));
        assert_eq!(r.upper_dim_l, 4 * (6 + 3) / 2);
    }

    #[test]
    fn s_plus_t_is_generator_count() {
        let l = direct_sum(&heisenberg(1).unwrap(), &abelian(2));
        for (n, c) in [
            (vec![3, 4], vec![0, 1, 2]),
            (vec![0, 1, 2], vec![3, 4]),
            (vec![3], vec![0, 1, 2, 4]),
        ] {
            let ctx = pair(&l, &n, &c);
            assert_eq!(ctx.s + ctx.t, l.dim() - l.derived_subalgebra().dim());
        }
    }

    #[test]
    fn triple_examples() {
        let h = heisenberg(1).unwrap();
        let ctx = TripleContext::new(h.clone(), coord(3, &[]), coord(3, &[0, 1, 2]), None).unwrap();
        assert_eq!(ctx.multiplier_dim().unwrap(), 0);

        let l = direct_sum(&abelian(2), &abelian(3));
        let ctx = TripleContext::new(l, coord(5, &[0, 1]), coord(5, &[2, 3, 4]), None).unwrap();
        assert_eq!(ctx.pair_dim().unwrap(), 9);
        assert_eq!(ctx.multiplier_dim().unwrap(), 6);

        let l = direct_sum(&h, &abelian(2));
        let ctx = TripleContext::new(l, coord(5, &[0, 1, 2]), coord(5, &[3, 4]), None).unwrap();
        assert_eq!(ctx.multiplier_dim().unwrap(), 4);
        assert_eq!(ctx.swapped().unwrap().multiplier_dim().unwrap(), 4);
    }

    #[test]
    fn triple_inequality_examples() {
        let h = heisenberg(1).unwrap();
        let l = direct_sum(&h, &abelian(1));
        let ctx =
            TripleContext::new(l.clone(), coord(4, &[0, 1, 2]), coord(4, &[3]), None).unwrap();
        let r = triple_inequality_check(&ctx, false).unwrap();
        assert_eq!(r.lhs, r.rhs);

        let ctx = TripleContext::new(
            l,
            coord(4, &[0, 1, 2]),
            coord(4, &[3]),
            Some(coord(4, &[3])),
        )
        .unwrap();
        let r = triple_inequality_check(&ctx, false).unwrap();
        assert_eq!((r.lhs, r.rhs), (2, 2));
        assert!(r.holds);

        let l = direct_sum(&abelian(2), &abelian(2));
        for k in [vec![2], vec![3]] {
            let ctx = TripleContext::new(
                l.clone(),
                coord(4, &[0, 1]),
                coord(4, &[2, 3]),
                Some(coord(4, &k)),
            )
            .unwrap();
            assert!(triple_inequality_check(&ctx, false).unwrap().holds);
        }
    }

    #[test]
    fn triple_rejects_bad_k() {
        let l = direct_sum(&abelian(1), &heisenberg(1).unwrap());
        let err = TripleContext::new(
            l.clone(),
            coord(4, &[0]),
            coord(4, &[1, 2, 3]),
            Some(coord(4, &[1])),
        )
        .unwrap_err();
        assert_eq!(err, RelativeError::KNotCentral);
        let err = TripleContext::new(
            l,
            coord(4, &[1, 2, 3]),
            coord(4, &[0]),
            Some(coord(4, &[3])),
        )
        .unwrap_err();
        assert_eq!(err, RelativeError::KNotContained("J"));
    }

    #[test]
    fn central_quotient_examples() {
        let h = heisenberg(1).unwrap();
        let r = central_quotient_check(&h, &h.center(), false).unwrap();
        assert_eq!((r.left, r.middle, r.right), (1, 3, 3));
        assert!(r.holds);
        let r = central_quotient_check(&h, &coord(3, &[]), false).unwrap();
        assert_eq!((r.left, r.middle, r.right), (2, 2, 2));
        let a = abelian(5);
        let r = central_quotient_check(&a, &coord(5, &[1, 3]), false).unwrap();
        assert_eq!((r.left, r.middle, r.right), (3, 10, 3 + 2 * 5));
        assert_eq!(
            central_quotient_check(&h, &coord(3, &[0]), false).unwrap_err(),
            RelativeError::KNotCentral
        );
    }

    #[test]
    fn epicenter_hypothesis_is_checked_against_data() {
        // H(1) is capable, so its center is not epicentral and the implied
        // equality 2 + 1 = 1 fails.
        let h = heisenberg(1).unwrap();
        let r = central_quotient_check(&h, &h.center(), true).unwrap();
        assert_eq!(
            r.epicenter,
            Some(EpicenterCheck {
                lhs: 3,
                rhs: 1,
                consistent: false
            })
        );
        // Trivially epicentral: Z = 0.
        let r = central_quotient_check(&h, &coord(3, &[]), true).unwrap();
        assert!(r.epicenter.unwrap().consistent);
    }

    #[test]
    fn complement_central_examples() {
        let l = direct_sum(&abelian(2), &abelian(1));
        let ctx = pair(&l, &[2], &[0, 1]);
        let r = complement_central_check(&ctx, &coord(3, &[]), false).unwrap();
        assert_eq!(r.lhs, ctx.multiplier_dim().unwrap());
        assert_eq!(r.lhs, r.rhs);
        let r = complement_central_check(&ctx, &coord(3, &[2]), false).unwrap();
        assert_eq!((r.lhs, r.rhs), (2, 2));

        let l = direct_sum(&heisenberg(1).unwrap(), &abelian(1));
        let ctx = pair(&l, &[3], &[0, 1, 2]);
        let r = complement_central_check(&ctx, &coord(4, &[3]), false).unwrap();
        assert_eq!((r.lhs, r.rhs), (2, 2));
        assert!(matches!(
            complement_central_check(&ctx, &coord(4, &[2]), false),
            Err(RelativeError::KNotContained("N"))
        ));
    }
}
