//! Index of the lattice spanned by a circuit's support inside its
//! saturation in the column lattice.
//!
//! For columns `S` of `A`:
//! 1. `L1` = integer span of the columns in `S` (HNF basis `B1`);
//! 2. `Z A` = integer span of all columns (HNF basis `B_A`);
//! 3. the rational span of `S` is `{x : N x = 0}` where the rows of `N`
//!    form a kernel basis of `A_S^T`;
//! 4. `L2 = Z A ∩ span_Q(S)` = `B_A · ker_Z(N B_A)`;
//! 5. writing `B1 = B2 · X` over the rationals, the index `[L2 : L1]` is
//!    `|det X|` (and `X` is integral since `L1 ⊆ L2`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::hnf::{column_hnf, integer_kernel};
use super::IntegerMatrix;
use crate::binomial::Binomial;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::walk::{classify_circuit, CircuitKind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeIndexResult {
    pub rank: usize,
    #[serde(serialize_with = "super::serialize_decimal")]
    pub index: BigInt,
}

/// `[ (span_Q S) ∩ Z A : Z S ]` for the columns `support` of `a`.
pub fn sublattice_index(a: &IntegerMatrix, support: &[usize]) -> Result<LatticeIndexResult> {
    let a_s = a.select_columns(support);
    let b1 = lattice_basis(&a_s);
    let b_a = lattice_basis(a);
    let n_rows = integer_kernel(&a_s.transpose()).transpose();
    let b2 = if n_rows.rows() == 0 {
        b_a
    } else {
        let k = integer_kernel(&n_rows.mul(&b_a));
        b_a.mul(&k)
    };
    let r = b1.cols();
    if b2.cols() != r {
        return Err(Error::DegenerateSupport);
    }
    if r == 0 {
        return Ok(LatticeIndexResult {
            rank: 0,
            index: BigInt::one(),
        });
    }
    let x = solve_coordinates(&b2, &b1).ok_or(Error::DegenerateSupport)?;
    let det = x.determinant().abs();
    if det.is_zero() {
        return Err(Error::DegenerateSupport);
    }
    Ok(LatticeIndexResult { rank: r, index: det })
}

/// Nonzero columns of the column HNF: a basis of the column lattice.
fn lattice_basis(a: &IntegerMatrix) -> IntegerMatrix {
    let hnf = column_hnf(a);
    let cols: Vec<usize> = (0..hnf.rank).collect();
    hnf.h.select_columns(&cols)
}

/// Integer `X` with `basis · X = target`, when `basis` has full column rank
/// and the solution is integral.
fn solve_coordinates(basis: &IntegerMatrix, target: &IntegerMatrix) -> Option<IntegerMatrix> {
    // normal equations (BᵀB) X = Bᵀ T, solved exactly over Q
    let bt = basis.transpose();
    let lhs = bt.mul(basis).to_rational_rows();
    let rhs = bt.mul(target).to_rational_rows();
    let r = lhs.len();
    let c = rhs.first().map_or(0, |row| row.len());
    let mut aug: Vec<Vec<BigRational>> = lhs
        .into_iter()
        .zip(rhs)
        .map(|(mut l, rr)| {
            l.extend(rr);
            l
        })
        .collect();
    for col in 0..r {
        let piv = (col..r).find(|&i| !aug[i][col].is_zero())?;
        aug.swap(piv, col);
        let p = aug[col][col].clone();
        for x in aug[col].iter_mut() {
            *x = &*x / &p;
        }
        for i in 0..r {
            if i != col && !aug[i][col].is_zero() {
                let f = aug[i][col].clone();
                let pivot_row = aug[col].clone();
                for (x, y) in aug[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    let mut x = IntegerMatrix::zeros(r, c);
    for i in 0..r {
        for j in 0..c {
            let v = &aug[i][r + j];
            if !v.is_integer() {
                return None;
            }
            x[(i, j)] = v.to_integer();
        }
    }
    if &basis.mul(&x) != target {
        return None;
    }
    Some(x)
}

/// Index of a circuit of `g`; rejects binomials that are not circuits.
pub fn circuit_index(g: &Graph, circuit: &Binomial) -> Result<LatticeIndexResult> {
    if classify_circuit(g, circuit) == CircuitKind::NotACircuit {
        return Err(Error::NotACircuit);
    }
    let a = IntegerMatrix::from_rows(&g.incidence_matrix());
    let support = circuit.support();
    // a circuit's support carries a rank-one kernel
    if integer_kernel(&a.select_columns(&support)).cols() != 1 {
        return Err(Error::DegenerateSupport);
    }
    sublattice_index(&a, &support)
}

/// `degree(C) · index(C)`.
pub fn true_degree(g: &Graph, circuit: &Binomial) -> Result<BigInt> {
    let idx = circuit_index(g, circuit)?;
    Ok(BigInt::from(circuit.degree()) * idx.index)
}
