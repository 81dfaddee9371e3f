use num_traits::{Signed, ToPrimitive, Zero};

use super::{buchberger_reduced, BinomialSet, MonomialPair, OracleBudget};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::intlinalg::{integer_kernel, IntegerMatrix};
use crate::order::TermOrder;

/// Column sums of a nonnegative matrix, used as a positive grading.
fn grading(a: &IntegerMatrix) -> Result<Vec<u64>> {
    (0..a.cols())
        .map(|j| {
            let col = a.column(j);
            if col.iter().any(|x| x.is_negative()) {
                return Err(Error::InvalidParameters("matrix has a negative entry".into()));
            }
            let s: num_bigint::BigInt = col.iter().sum();
            match s.to_u64() {
                Some(v) if v > 0 => Ok(v),
                _ => Err(Error::InvalidParameters(format!("column {j} is zero or too large"))),
            }
        })
        .collect()
}

/// A generating set of the toric ideal `I_A`.
///
/// Starts from the binomials of an integer kernel basis and saturates by
/// each variable in ascending order: a Gröbner basis under an order that
/// makes `x_i` cheapest, with the highest common power of `x_i` divided out
/// of every element.
pub fn toric_ideal(a: &IntegerMatrix, budget: &OracleBudget) -> Result<BinomialSet> {
    let n = a.cols();
    let grade = grading(a)?;
    let kernel = integer_kernel(a);
    let mut items = Vec::with_capacity(kernel.cols());
    for j in 0..kernel.cols() {
        let col = kernel.column(j);
        if col.iter().all(|x| x.is_zero()) {
            continue;
        }
        let v = col
            .iter()
            .map(|x| x.to_i64())
            .collect::<Option<Vec<i64>>>()
            .ok_or_else(|| Error::BudgetExceeded("kernel entry exceeds 64 bits".into()))?;
        items.push(MonomialPair::from_signed(&v));
    }
    let mut ideal = BinomialSet::new(n, items);
    for var in 0..n {
        if ideal.is_empty() {
            break;
        }
        budget.check_deadline()?;
        let order = TermOrder::cheapest_variable(&grade, var);
        let gb = buchberger_reduced(&ideal, &order, budget)?;
        let items = gb
            .items
            .into_iter()
            .map(|mut p| {
                let k = p.lead[var].min(p.trail[var]);
                p.lead[var] -= k;
                p.trail[var] -= k;
                p
            })
            .collect();
        ideal = BinomialSet::new(n, items);
    }
    ideal.items.sort();
    Ok(ideal)
}

pub fn toric_ideal_of_graph(g: &Graph, budget: &OracleBudget) -> Result<BinomialSet> {
    toric_ideal(&IntegerMatrix::from_rows(&g.incidence_matrix()), budget)
}
