use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntegerMatrix;

/// `A = U · D · V` with `U`, `V` unimodular and `D` diagonal,
/// `d_1 | d_2 | …`, all `d_i ≥ 0`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .filter(|x| !x.is_zero())
            .collect()
    }
}

/// Alternating row/column reduction. Row operations on the working matrix
/// are mirrored as inverse column operations on `U`, column operations as
/// inverse row operations on `V`, so `A = U·D·V` holds throughout.
pub fn smith_normal_form(a: &IntegerMatrix) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntegerMatrix::identity(m);
    let mut v = IntegerMatrix::identity(n);

    for t in 0..m.min(n) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if !d[(i, j)].is_zero() && best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            d.swap_rows(bi, t);
            u.swap_columns(bi, t);
            d.swap_columns(bj, t);
            v.swap_rows(bj, t);

            let mut clean = true;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = d[(i, t)].div_floor(&d[(t, t)]);
                // row_i -= q row_t ; U: col_t += q col_i
                d.add_row_multiple(i, t, &-q.clone());
                u.add_column_multiple(t, i, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = d[(t, j)].div_floor(&d[(t, t)]);
                // col_j -= q col_t ; V: row_t += q row_j
                d.add_column_multiple(j, t, &-q.clone());
                v.add_row_multiple(t, j, &q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let p = d[(t, t)].clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    // row_t += row_i ; U: col_i -= col_t
                    d.add_row_multiple(t, i, &BigInt::from(1));
                    u.add_column_multiple(i, t, &BigInt::from(-1));
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_column(t);
        }
    }
    SmithForm { u, d, v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::complete_graph;
    use num_traits::One;
    use proptest::prelude::*;

    fn check(a: &IntegerMatrix) -> SmithForm {
        let s = smith_normal_form(a);
        assert_eq!(&s.u.mul(&s.d).mul(&s.v), a);
        assert!(s.u.determinant().abs().is_one());
        assert!(s.v.determinant().abs().is_one());
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        let divs = s.elementary_divisors();
        for w in divs.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn identity() {
        let s = check(&IntegerMatrix::identity(3));
        assert_eq!(s.d, IntegerMatrix::identity(3));
    }

    #[test]
    fn diag_2_3() {
        let s = check(&IntegerMatrix::from_rows(&[vec![2i64, 0], vec![0, 3]]));
        assert_eq!(s.elementary_divisors(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn k4_incidence() {
        let a = IntegerMatrix::from_rows(&complete_graph(4).unwrap().incidence_matrix());
        let s = check(&a);
        // non-bipartite connected: rank 4, cokernel Z/2 from the parity of degree sums
        assert_eq!(
            s.elementary_divisors(),
            vec![BigInt::from(1), BigInt::from(1), BigInt::from(1), BigInt::from(2)]
        );
    }

    proptest! {
        #[test]
        fn reconstructs(entries in proptest::collection::vec(-5i64..6, 12)) {
            let a = IntegerMatrix::from_rows(&[entries[0..3].to_vec(), entries[3..6].to_vec(), entries[6..9].to_vec(), entries[9..12].to_vec()]);
            check(&a);
        }
    }
}
