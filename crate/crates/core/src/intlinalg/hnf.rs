use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntegerMatrix;

/// Column-style Hermite normal form `H = A·U` with `U` unimodular.
///
/// `H` is in column echelon form: its first `rank` columns carry positive
/// pivots in strictly increasing rows, entries left of a pivot are reduced
/// into `[0, pivot)`, and the remaining columns are zero. The matching
/// columns of `U` are therefore a lattice basis of `ker_Z A`.
#[derive(Debug, Clone)]
pub struct ColumnHnf {
    pub h: IntegerMatrix,
    pub u: IntegerMatrix,
    pub rank: usize,
    /// Row index of each pivot.
    pub pivot_rows: Vec<usize>,
}

pub fn column_hnf(a: &IntegerMatrix) -> ColumnHnf {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = IntegerMatrix::identity(n);
    let mut pc = 0;
    let mut pivot_rows = Vec::new();
    for r in 0..m {
        if pc == n {
            break;
        }
        loop {
            let best = (pc..n)
                .filter(|&j| !h[(r, j)].is_zero())
                .min_by(|&x, &y| h[(r, x)].abs().cmp(&h[(r, y)].abs()));
            let Some(j) = best else { break };
            h.swap_columns(j, pc);
            u.swap_columns(j, pc);
            let mut done = true;
            for j in pc + 1..n {
                if h[(r, j)].is_zero() {
                    continue;
                }
                let q = -h[(r, j)].div_floor(&h[(r, pc)]);
                h.add_column_multiple(j, pc, &q);
                u.add_column_multiple(j, pc, &q);
                if !h[(r, j)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(r, pc)].is_zero() {
            continue;
        }
        if h[(r, pc)].is_negative() {
            h.negate_column(pc);
            u.negate_column(pc);
        }
        let p = h[(r, pc)].clone();
        for j in 0..pc {
            let q: BigInt = -h[(r, j)].div_floor(&p);
            h.add_column_multiple(j, pc, &q);
            u.add_column_multiple(j, pc, &q);
        }
        pivot_rows.push(r);
        pc += 1;
    }
    ColumnHnf {
        h,
        u,
        rank: pc,
        pivot_rows,
    }
}

/// Lattice basis of `{x ∈ Z^n : A x = 0}` as the columns of the result.
pub fn integer_kernel(a: &IntegerMatrix) -> IntegerMatrix {
    let hnf = column_hnf(a);
    let cols: Vec<usize> = (hnf.rank..a.cols()).collect();
    hnf.u.select_columns(&cols)
}
