//! Second homology with trivial coefficients from the standard chain complex
//!
//! ```text
//! Λ³L --d3--> Λ²L --d2--> L
//! ```
//!
//! so that `dim M(L) = dim ker d2 - rank d3 = C(n,2) - rank d2 - rank d3`.
//! Exterior bases are lexicographic on increasing index tuples.

use num::Zero;

use crate::lie::LieAlgebra;
use crate::ratlin::{kernel_basis, rank, Matrix, Rational, Subspace};

/// Position of `e_i ∧ e_j` (`i < j`) in the lexicographic basis of `Λ²`.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    // Pairs starting with a < i come first: sum_{a<i} (n-1-a).
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect()
}

pub fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                out.push((i, j, k));
            }
        }
    }
    out
}

pub fn binomial2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The two boundary maps with their basis orderings.
#[derive(Debug, Clone)]
pub struct ChainBoundaries {
    pub d2: Matrix,
    pub d3: Matrix,
    pub pairs: Vec<(usize, usize)>,
    pub triples: Vec<(usize, usize, usize)>,
}

impl ChainBoundaries {
    pub fn new(l: &LieAlgebra) -> Self {
        ChainBoundaries {
            d2: boundary_d2(l),
            d3: boundary_d3(l),
            pairs: pairs(l.dim()),
            triples: triples(l.dim()),
        }
    }

    pub fn composite_is_zero(&self) -> bool {
        self.d2
            .mul(&self.d3)
            .expect("d2 columns match d3 rows")
            .is_zero()
    }
}

/// `n × C(n,2)`; column `(i,j)` holds the coordinates of `[e_i, e_j]`.
pub fn boundary_d2(l: &LieAlgebra) -> Matrix {
    let n = l.dim();
    let ps = pairs(n);
    let mut m = Matrix::zeros(n, ps.len());
    for (col, &(i, j)) in ps.iter().enumerate() {
        for (k, c) in l.bracket_basis(i, j).into_iter().enumerate() {
            if !c.is_zero() {
                m.set(k, col, c);
            }
        }
    }
    m
}

/// Adds `coeff * (x ∧ e_z)` into the `Λ²` column, where `x` has coordinates `w`.
fn add_wedge(col: &mut [Rational], n: usize, w: &[Rational], z: usize, sign: i32) {
    for (k, c) in w.iter().enumerate() {
        if c.is_zero() || k == z {
            continue;
        }
        let (pos, flip) = if k < z {
            (pair_index(n, k, z), false)
        } else {
            (pair_index(n, z, k), true)
        };
        if flip == (sign > 0) {
            col[pos] -= c;
        } else {
            col[pos] += c;
        }
    }
}

/// `C(n,2) × C(n,3)`; column `(i,j,k)` is
/// `[e_i,e_j]∧e_k - [e_i,e_k]∧e_j + [e_j,e_k]∧e_i`.
pub fn boundary_d3(l: &LieAlgebra) -> Matrix {
    let n = l.dim();
    let ts = triples(n);
    let rows = binomial2(n);
    let mut m = Matrix::zeros(rows, ts.len());
    for (col, &(i, j, k)) in ts.iter().enumerate() {
        let mut column = vec![Rational::zero(); rows];
        add_wedge(&mut column, n, &l.bracket_basis(i, j), k, 1);
        add_wedge(&mut column, n, &l.bracket_basis(i, k), j, -1);
        add_wedge(&mut column, n, &l.bracket_basis(j, k), i, 1);
        for (r, v) in column.into_iter().enumerate() {
            if !v.is_zero() {
                m.set(r, col, v);
            }
        }
    }
    m
}

/// `dim M(L) = dim H_2(L)` over Q.
pub fn multiplier_dim(l: &LieAlgebra) -> usize {
    let n = l.dim();
    let r2 = rank(&boundary_d2(l));
    let r3 = rank(&boundary_d3(l));
    binomial2(n) - r2 - r3
}

/// `dim L∧L = dim M(L) + dim L^2`.
pub fn exterior_square_dim(l: &LieAlgebra) -> usize {
    multiplier_dim(l) + l.derived_subalgebra().dim()
}

/// 2-cocycles with trivial coefficients: functionals on `Λ²` (in the pair
/// basis) vanishing on the image of `d3`.
pub fn cocycle_space(l: &LieAlgebra) -> Subspace {
    kernel_basis(&boundary_d3(l).transpose())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::direct_sum;
    use crate::ratlin::rat;

    fn h(m: usize) -> LieAlgebra {
        let brackets: Vec<_> = (0..m)
            .map(|i| (2 * i, 2 * i + 1, vec![(2 * m, rat(1))]))
            .collect();
        LieAlgebra::from_brackets(2 * m + 1, &brackets).unwrap()
    }

    fn filiform4() -> LieAlgebra {
        LieAlgebra::from_brackets(4, &[(0, 1, vec![(2, rat(1))]), (0, 2, vec![(3, rat(1))])])
            .unwrap()
    }

    #[test]
    fn pair_index_is_lexicographic() {
        for n in 0..7 {
            for (pos, (i, j)) in pairs(n).into_iter().enumerate() {
                assert_eq!(pair_index(n, i, j), pos);
            }
        }
    }

    #[test]
    fn d2_examples() {
        assert!(boundary_d2(&LieAlgebra::abelian(4)).is_zero());
        assert_eq!(rank(&boundary_d2(&h(1))), 1);
        assert_eq!(rank(&boundary_d2(&filiform4())), 2);
    }

    #[test]
    fn d3_examples() {
        assert!(boundary_d3(&LieAlgebra::abelian(4)).is_zero());
        assert_eq!(rank(&boundary_d3(&h(1))), 0);
        assert_eq!(rank(&boundary_d3(&h(2))), 4);
    }

    #[test]
    fn multiplier_examples() {
        assert_eq!(multiplier_dim(&LieAlgebra::abelian(4)), 6);
        assert_eq!(multiplier_dim(&h(1)), 2);
        assert_eq!(multiplier_dim(&h(2)), 5);
        assert_eq!(multiplier_dim(&filiform4()), 2);
        assert_eq!(multiplier_dim(&LieAlgebra::abelian(0)), 0);
        assert_eq!(multiplier_dim(&LieAlgebra::abelian(1)), 0);
    }

    #[test]
    fn exterior_square_examples() {
        assert_eq!(exterior_square_dim(&LieAlgebra::abelian(5)), 10);
        assert_eq!(exterior_square_dim(&h(1)), 3);
        assert_eq!(exterior_square_dim(&h(2)), 6);
    }

    #[test]
    fn complex_property_on_small_algebras() {
        for l in [h(1), h(2), filiform4(), direct_sum(&h(1), &filiform4())] {
            assert!(ChainBoundaries::new(&l).composite_is_zero());
        }
    }

    #[test]
    fn cocycles_contain_coboundaries() {
        // dim Z^2 = dim M(L)^* + dim B^2, with dim B^2 = rank d2.
        let l = filiform4();
        let z2 = cocycle_space(&l).dim();
        assert_eq!(z2, multiplier_dim(&l) + rank(&boundary_d2(&l)));
    }
}
