//! Term orders given by an elimination block, nonnegative weight rows and a
//! lexicographic tiebreak.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};

/// A multiplicative total order on monomials in `num_vars` variables.
///
/// Monomials `u`, `v` are compared by
/// 1. total degree in the elimination variables (larger wins);
/// 2. the first weight row `r` with `r·u ≠ r·v` (larger wins);
/// 3. lexicographically along `tiebreak` (larger exponent wins).
///
/// All weights are nonnegative and the tiebreak is total, so `1` is the
/// smallest monomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermOrder {
    num_vars: usize,
    elimination: Vec<usize>,
    weight_rows: Vec<Vec<u64>>,
    tiebreak: Vec<usize>,
}

impl TermOrder {
    pub fn new(
        num_vars: usize,
        mut elimination: Vec<usize>,
        weight_rows: Vec<Vec<u64>>,
        tiebreak: Vec<usize>,
    ) -> Result<Self> {
        elimination.sort_unstable();
        elimination.dedup();
        if let Some(&e) = elimination.iter().find(|&&e| e >= num_vars) {
            return Err(Error::InvalidParameters(format!(
                "elimination variable {e} out of range"
            )));
        }
        if let Some(r) = weight_rows.iter().find(|r| r.len() != num_vars) {
            return Err(Error::LengthMismatch {
                expected: num_vars,
                got: r.len(),
            });
        }
        let mut seen = vec![false; num_vars];
        if tiebreak.len() != num_vars
            || tiebreak
                .iter()
                .any(|&i| i >= num_vars || std::mem::replace(&mut seen[i], true))
        {
            return Err(Error::InvalidParameters("tiebreak is not a permutation".into()));
        }
        Ok(TermOrder {
            num_vars,
            elimination,
            weight_rows,
            tiebreak,
        })
    }

    /// Pure lexicographic order with `x_0` largest.
    pub fn lex(num_vars: usize) -> Self {
        TermOrder::new(num_vars, vec![], vec![], (0..num_vars).collect()).unwrap()
    }

    /// Total degree, then lexicographic.
    pub fn graded_lex(num_vars: usize) -> Self {
        TermOrder::new(num_vars, vec![], vec![vec![1; num_vars]], (0..num_vars).collect()).unwrap()
    }

    /// Weighted order in which, among monomials of equal `grading` degree,
    /// a smaller power of `var` is larger. For ideals homogeneous with
    /// respect to `grading`, `x_var` dividing a leading term forces it to
    /// divide the whole binomial.
    pub fn cheapest_variable(grading: &[u64], var: usize) -> Self {
        let mut second = grading.to_vec();
        second[var] = 0;
        let n = grading.len();
        TermOrder::new(n, vec![], vec![grading.to_vec(), second], (0..n).collect()).unwrap()
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn elimination_set(&self) -> &[usize] {
        &self.elimination
    }

    pub fn weight_rows(&self) -> &[Vec<u64>] {
        &self.weight_rows
    }

    pub fn tiebreak(&self) -> &[usize] {
        &self.tiebreak
    }

    /// Compares two exponent vectors; `Greater` means `u` is larger.
    pub fn compare(&self, u: &[u32], v: &[u32]) -> Result<Ordering> {
        for w in [u, v] {
            if w.len() != self.num_vars {
                return Err(Error::LengthMismatch {
                    expected: self.num_vars,
                    got: w.len(),
                });
            }
        }
        Ok(self.cmp_monomials(u, v))
    }

    /// As [`compare`](Self::compare) without the length check.
    pub fn cmp_monomials(&self, u: &[u32], v: &[u32]) -> Ordering {
        let elim = |w: &[u32]| -> u64 { self.elimination.iter().map(|&i| u64::from(w[i])).sum() };
        let ord = elim(u).cmp(&elim(v));
        if ord != Ordering::Equal {
            return ord;
        }
        for row in &self.weight_rows {
            let mut diff: i128 = 0;
            for ((&r, &a), &b) in row.iter().zip(u).zip(v) {
                if r != 0 && a != b {
                    diff += i128::from(r) * (i128::from(a) - i128::from(b));
                }
            }
            match diff.cmp(&0) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        for &i in &self.tiebreak {
            match u[i].cmp(&v[i]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// `Σ row·(u − v)` for each weight row, as exact signed integers.
    pub fn weight_differences(&self, u: &[u32], v: &[u32]) -> Vec<i128> {
        self.weight_rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(u.iter().zip(v))
                    .map(|(&r, (&a, &b))| i128::from(r) * (i128::from(a) - i128::from(b)))
                    .sum()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sample_order() -> TermOrder {
        TermOrder::new(4, vec![3], vec![vec![2, 2, 0, 0], vec![0, 1, 1, 0]], vec![2, 0, 1, 3]).unwrap()
    }

    #[test]
    fn equal_monomials() {
        let o = sample_order();
        assert_eq!(o.compare(&[1, 2, 3, 0], &[1, 2, 3, 0]).unwrap(), Ordering::Equal);
    }

    #[test]
    fn elimination_variable_dominates() {
        let o = sample_order();
        assert_eq!(o.compare(&[0, 0, 0, 1], &[5, 5, 5, 0]).unwrap(), Ordering::Greater);
    }

    #[test]
    fn zero_weight_difference_uses_tiebreak() {
        let o = sample_order();
        // both rows tie: row0 2 vs 2, row1 1 vs 1; tiebreak looks at x2 first
        assert_eq!(o.compare(&[1, 0, 1, 0], &[0, 1, 0, 0]).unwrap(), Ordering::Greater);
        assert_eq!(o.weight_differences(&[1, 0, 1, 0], &[0, 1, 0, 0]), vec![0, 0]);
    }

    #[test]
    fn length_mismatch() {
        assert!(matches!(
            sample_order().compare(&[1, 2], &[1, 2, 3, 4]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn rejects_bad_tiebreak() {
        assert!(TermOrder::new(3, vec![], vec![], vec![0, 0, 1]).is_err());
    }

    proptest! {
        #[test]
        fn total_and_multiplicative(
            u in proptest::collection::vec(0u32..5, 4),
            v in proptest::collection::vec(0u32..5, 4),
            w in proptest::collection::vec(0u32..5, 4),
        ) {
            let o = sample_order();
            let uv = o.cmp_monomials(&u, &v);
            prop_assert_eq!(uv, o.cmp_monomials(&v, &u).reverse());
            prop_assert_eq!(uv == Ordering::Equal, u == v);
            let add = |a: &[u32], b: &[u32]| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>();
            prop_assert_eq!(o.cmp_monomials(&add(&u, &w), &add(&v, &w)), uv);
            if uv == Ordering::Greater && o.cmp_monomials(&v, &w) == Ordering::Greater {
                prop_assert_eq!(o.cmp_monomials(&u, &w), Ordering::Greater);
            }
            prop_assert_ne!(o.cmp_monomials(&[0; 4], &w), Ordering::Greater);
        }
    }
}
