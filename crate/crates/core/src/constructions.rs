//! Named algebras: abelian `A(n)`, Heisenberg `H(m)`, the standard filiform
//! algebras, free nilpotent algebras on a Hall basis, and the Möbius/Witt
//! counting functions that size the free Lie algebra's graded pieces.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{BigInt, One, Zero};
use thiserror::Error;

use crate::lie::{LieAlgebra, LieError};
use crate::ratlin::{rat, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("Heisenberg algebra H(m) needs m >= 1")]
    HeisenbergRank,
    #[error("Möbius function is defined for r >= 1")]
    MobiusZero,
    #[error("Witt formula needs n >= 1 and d >= 1 (got n={n}, d={d})")]
    WittDomain { n: u64, d: u64 },
    #[error("Witt dimension l_{n}({d}) overflows 128 bits")]
    WittOverflow { n: u64, d: u64 },
    #[error("free nilpotent algebra needs n >= 1 and c >= 1 (got n={n}, c={c})")]
    FreeDomain { n: usize, c: usize },
    #[error("filiform algebra needs dimension >= 2")]
    FiliformDim,
    #[error("cocycle has {found} coordinates, expected {expected}")]
    CocycleLength { expected: usize, found: usize },
    #[error(transparent)]
    Lie(#[from] LieError),
}

pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::abelian(n).with_name(format!("A({n})"))
}

/// Basis `v_1..v_{2m}, v` (indices `0..2m`, then `2m`), with
/// `[v_{2i-1}, v_{2i}] = v`.
pub fn heisenberg(m: usize) -> Result<LieAlgebra, ConstructionError> {
    if m == 0 {
        return Err(ConstructionError::HeisenbergRank);
    }
    let brackets: Vec<_> = (0..m)
        .map(|i| (2 * i, 2 * i + 1, vec![(2 * m, rat(1))]))
        .collect();
    Ok(LieAlgebra::from_brackets(2 * m + 1, &brackets)?.with_name(format!("H({m})")))
}

/// Model filiform algebra `[e_0, e_i] = e_{i+1}` for `1 <= i <= n-2`.
pub fn filiform(n: usize) -> Result<LieAlgebra, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::FiliformDim);
    }
    let brackets: Vec<_> = (1..n - 1).map(|i| (0, i, vec![(i + 1, rat(1))])).collect();
    Ok(LieAlgebra::from_brackets(n, &brackets)?.with_name(format!("filiform{n}")))
}

pub fn mobius(r: u64) -> Result<i8, ConstructionError> {
    if r == 0 {
        return Err(ConstructionError::MobiusZero);
    }
    let mut rest = r;
    let mut distinct = 0u32;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            rest /= p;
            if rest.is_multiple_of(p) {
                return Ok(0);
            }
            distinct += 1;
        }
        p += 1;
    }
    if rest > 1 {
        distinct += 1;
    }
    Ok(if distinct.is_multiple_of(2) { 1 } else { -1 })
}

fn divisors(d: u64) -> Vec<u64> {
    (1..=d).filter(|r| d.is_multiple_of(*r)).collect()
}

/// `l_n(d) = (1/d) sum_{r | d} mu(r) n^{d/r}`, the dimension of the degree-`d`
/// piece of the free Lie algebra on `n` generators.
pub fn witt_dim(n: u64, d: u64) -> Result<u128, ConstructionError> {
    if n == 0 || d == 0 {
        return Err(ConstructionError::WittDomain { n, d });
    }
    let mut sum = BigInt::zero();
    for r in divisors(d) {
        let mu = mobius(r)?;
        if mu == 0 {
            continue;
        }
        let exp = u32::try_from(d / r).map_err(|_| ConstructionError::WittOverflow { n, d })?;
        let term = num::pow(BigInt::from(n), exp as usize);
        if mu > 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let (q, rem) = num::Integer::div_rem(&sum, &BigInt::from(d));
    assert!(rem.is_zero(), "Witt sum not divisible by d");
    u128::try_from(q).map_err(|_| ConstructionError::WittOverflow { n, d })
}

/// A Hall word: a generator or a bracket of two earlier words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HallShape {
    Generator(usize),
    Bracket(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallWord {
    pub degree: usize,
    pub shape: HallShape,
}

/// Basic commutators up to a degree cap, in Hall order: by degree, then by
/// the positions of the two factors.
///
/// `[a, b]` is basic when `a > b` and, if `a = [a1, a2]`, also `a2 <= b`.
#[derive(Debug, Clone)]
pub struct HallBasis {
    pub generators: usize,
    pub class_cap: usize,
    pub words: Vec<HallWord>,
}

impl HallBasis {
    pub fn new(n: usize, c: usize) -> Self {
        let mut words: Vec<HallWord> = (0..n)
            .map(|g| HallWord {
                degree: 1,
                shape: HallShape::Generator(g),
            })
            .collect();
        for degree in 2..=c {
            let mut fresh = Vec::new();
            for a in 0..words.len() {
                for b in 0..a {
                    if words[a].degree + words[b].degree != degree {
                        continue;
                    }
                    if let HallShape::Bracket(_, a2) = words[a].shape {
                        if a2 > b {
                            continue;
                        }
                    }
                    fresh.push((a, b));
                }
            }
            fresh.sort_unstable();
            words.extend(fresh.into_iter().map(|(a, b)| HallWord {
                degree,
                shape: HallShape::Bracket(a, b),
            }));
        }
        HallBasis {
            generators: n,
            class_cap: c,
            words,
        }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn degree_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.class_cap];
        for w in &self.words {
            counts[w.degree - 1] += 1;
        }
        counts
    }

    /// Word at `i` written with generators `x1, x2, ...`.
    pub fn render(&self, i: usize) -> String {
        match self.words[i].shape {
            HallShape::Generator(g) => format!("x{}", g + 1),
            HallShape::Bracket(a, b) => format!("[{},{}]", self.render(a), self.render(b)),
        }
    }

    fn index_of_bracket(&self, a: usize, b: usize) -> Option<usize> {
        let degree = self.words[a].degree + self.words[b].degree;
        self.words
            .iter()
            .position(|w| w.degree == degree && w.shape == HallShape::Bracket(a, b))
    }
}

impl fmt::Display for HallBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = (0..self.len()).map(|i| self.render(i)).collect();
        write!(f, "{}", words.join(", "))
    }
}

pub fn hall_basis(n: usize, c: usize) -> HallBasis {
    HallBasis::new(n, c)
}

type Combo = BTreeMap<usize, BigInt>;

fn add_scaled(acc: &mut Combo, other: &Combo, scale: &BigInt) {
    for (k, v) in other {
        let e = acc.entry(*k).or_insert_with(BigInt::zero);
        *e += v * scale;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

/// Rewrites brackets of Hall words into the Hall basis, dropping anything
/// of degree above the cap.
struct HallRewriter<'a> {
    basis: &'a HallBasis,
    memo: HashMap<(usize, usize), Combo>,
}

impl<'a> HallRewriter<'a> {
    fn bracket_words(&mut self, u: usize, v: usize) -> Combo {
        if u == v || self.basis.words[u].degree + self.basis.words[v].degree > self.basis.class_cap
        {
            return Combo::new();
        }
        if let Some(hit) = self.memo.get(&(u, v)) {
            return hit.clone();
        }
        let result = if u < v {
            let mut r = self.bracket_words(v, u);
            for x in r.values_mut() {
                *x = -x.clone();
            }
            r
        } else {
            match self.basis.words[u].shape {
                HallShape::Bracket(u1, u2) if u2 > v => {
                    // [[u1,u2],v] = [[u1,v],u2] + [u1,[u2,v]]
                    let left = self.bracket_words(u1, v);
                    let mut out = self.bracket_combo_word(&left, u2);
                    let right = self.bracket_words(u2, v);
                    let tail = self.bracket_word_combo(u1, &right);
                    add_scaled(&mut out, &tail, &BigInt::one());
                    out
                }
                _ => {
                    let k = self
                        .basis
                        .index_of_bracket(u, v)
                        .expect("standard bracket within the cap is a Hall word");
                    Combo::from([(k, BigInt::one())])
                }
            }
        };
        self.memo.insert((u, v), result.clone());
        result
    }

    fn bracket_combo_word(&mut self, x: &Combo, w: usize) -> Combo {
        let mut out = Combo::new();
        for (k, c) in x {
            let r = self.bracket_words(*k, w);
            add_scaled(&mut out, &r, c);
        }
        out
    }

    fn bracket_word_combo(&mut self, w: usize, x: &Combo) -> Combo {
        let mut out = Combo::new();
        for (k, c) in x {
            let r = self.bracket_words(w, *k);
            add_scaled(&mut out, &r, c);
        }
        out
    }
}

/// Free nilpotent Lie algebra on `n` generators of class `c`, with the Hall
/// basis of degree `<= c` as its basis.
pub fn free_nilpotent(n: usize, c: usize) -> Result<LieAlgebra, ConstructionError> {
    if n == 0 || c == 0 {
        return Err(ConstructionError::FreeDomain { n, c });
    }
    let basis = hall_basis(n, c);
    let mut rw = HallRewriter {
        basis: &basis,
        memo: HashMap::new(),
    };
    let dim = basis.len();
    let mut brackets = Vec::new();
    for i in 0..dim {
        for j in (i + 1)..dim {
            let combo = rw.bracket_words(i, j);
            if combo.is_empty() {
                continue;
            }
            let comps = combo
                .into_iter()
                .map(|(k, v)| (k, Rational::from_integer(v)))
                .collect();
            brackets.push((i, j, comps));
        }
    }
    Ok(LieAlgebra::from_brackets(dim, &brackets)?.with_name(format!("F({n},{c})")))
}

/// One-dimensional central extension by the 2-cocycle `omega`, given in the
/// lexicographic pair basis: `[e_i, e_j]' = [e_i, e_j] + omega(i,j) z` with
/// `z` appended as the last basis vector.
pub fn central_extension(
    l: &LieAlgebra,
    omega: &[Rational],
) -> Result<LieAlgebra, ConstructionError> {
    let n = l.dim();
    let expected = n * n.saturating_sub(1) / 2;
    if omega.len() != expected {
        return Err(ConstructionError::CocycleLength {
            expected,
            found: omega.len(),
        });
    }
    let mut brackets = Vec::new();
    let mut pos = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            let mut comps: Vec<(usize, Rational)> = l
                .bracket_basis(i, j)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if !omega[pos].is_zero() {
                comps.push((n, omega[pos].clone()));
            }
            if !comps.is_empty() {
                brackets.push((i, j, comps));
            }
            pos += 1;
        }
    }
    Ok(LieAlgebra::from_brackets(n + 1, &brackets)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::multiplier_dim;

    #[test]
    fn abelian_examples() {
        assert_eq!(abelian(0).dim(), 0);
        let a = abelian(3);
        assert_eq!(a.dim(), 3);
        assert_eq!(a.derived_subalgebra().dim(), 0);
        assert_eq!(multiplier_dim(&abelian(5)), 10);
    }

    #[test]
    fn heisenberg_examples() {
        let h = heisenberg(1).unwrap();
        let p = h.structural_profile().unwrap();
        assert_eq!((p.n, p.m, p.d, p.c, p.gens), (3, 1, 1, 2, 2));
        let h2 = heisenberg(2).unwrap();
        assert_eq!(h2.dim(), 5);
        assert_eq!(h2.center().dim(), 1);
        assert!(heisenberg(3).unwrap().validate().is_ok());
        assert_eq!(heisenberg(0), Err(ConstructionError::HeisenbergRank));
    }

    #[test]
    fn heisenberg_derived_equals_center() {
        for m in 1..=3 {
            let h = heisenberg(m).unwrap();
            assert_eq!(h.derived_subalgebra(), h.center());
        }
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(1), Ok(1));
        assert_eq!(mobius(4), Ok(0));
        assert_eq!(mobius(6), Ok(1));
        assert_eq!(mobius(2), Ok(-1));
        assert_eq!(mobius(30), Ok(-1));
        assert_eq!(mobius(12), Ok(0));
        assert_eq!(mobius(0), Err(ConstructionError::MobiusZero));
    }

    #[test]
    fn witt_examples() {
        for n in 1..6 {
            assert_eq!(witt_dim(n, 1).unwrap(), n as u128);
        }
        assert_eq!(witt_dim(2, 2).unwrap(), 1);
        assert_eq!(witt_dim(2, 3).unwrap(), 2);
        assert_eq!(witt_dim(3, 2).unwrap(), 3);
        assert_eq!(witt_dim(2, 4).unwrap(), 3);
        assert!(witt_dim(0, 3).is_err());
        assert!(witt_dim(3, 0).is_err());
    }

    #[test]
    fn hall_basis_examples() {
        assert_eq!(hall_basis(2, 1).len(), 2);
        assert_eq!(hall_basis(2, 2).degree_counts(), vec![2, 1]);
        let b = hall_basis(2, 3);
        assert_eq!(b.degree_counts(), vec![2, 1, 2]);
        assert_eq!(b.to_string(), "x1, x2, [x2,x1], [[x2,x1],x1], [[x2,x1],x2]");
    }

    #[test]
    fn free_nilpotent_examples() {
        assert!(free_nilpotent(2, 1).unwrap().is_abelian());
        let f = free_nilpotent(2, 2).unwrap();
        assert_eq!(f.dim(), 3);
        assert_eq!(
            f.structural_profile().unwrap(),
            heisenberg(1).unwrap().structural_profile().unwrap()
        );
        let f = free_nilpotent(2, 3).unwrap();
        assert_eq!(f.dim(), 5);
        assert_eq!(f.derived_subalgebra().dim(), 3);
        assert_eq!(f.nilpotency_class().unwrap(), 3);
        assert_eq!(multiplier_dim(&f), 3);
        assert_eq!(f.frattini().unwrap().dim(), 3);
        assert_eq!(free_nilpotent(2, 2).unwrap().frattini().unwrap().dim(), 1);
        assert!(free_nilpotent(0, 2).is_err());
    }

    #[test]
    fn free_nilpotent_quotient_by_last_term() {
        let f = free_nilpotent(2, 3).unwrap();
        let series = f.lower_central_series();
        let q = f.quotient(&series.terms[2]).unwrap();
        let f22 = free_nilpotent(2, 2).unwrap();
        assert_eq!(
            q.algebra.structural_profile().unwrap(),
            f22.structural_profile().unwrap()
        );
        assert_eq!(multiplier_dim(&q.algebra), multiplier_dim(&f22));
    }

    #[test]
    fn filiform_four_is_the_catalog_algebra() {
        let f = filiform(4).unwrap();
        assert_eq!(f.nilpotency_class().unwrap(), 3);
        assert_eq!(multiplier_dim(&f), 2);
    }

    #[test]
    fn central_extension_by_cocycle_is_valid() {
        let h = heisenberg(1).unwrap();
        // Pair basis for n=3: (0,1),(0,2),(1,2); (0,2) is a cocycle direction.
        let omega = vec![rat(0), rat(1), rat(0)];
        let e = central_extension(&h, &omega).unwrap();
        assert_eq!(e.dim(), 4);
        assert_eq!(e.nilpotency_class().unwrap(), 3);
        assert!(central_extension(&h, &[rat(1)]).is_err());
    }
}
