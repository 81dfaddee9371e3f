use num_bigint::BigInt;

use super::{buchberger_reduced, toric_ideal, BinomialSet, MonomialPair, OracleBudget};
use crate::binomial::Binomial;
use crate::error::Result;
use crate::graph::Graph;
use crate::intlinalg::IntegerMatrix;
use crate::order::TermOrder;

/// The lifted matrix `[[A, 0], [I, I]]`.
pub fn lawrence_lifting(a: &IntegerMatrix) -> IntegerMatrix {
    let (r, n) = (a.rows(), a.cols());
    let mut out = IntegerMatrix::zeros(r + n, 2 * n);
    for i in 0..r {
        for j in 0..n {
            out[(i, j)] = a[(i, j)].clone();
        }
    }
    for j in 0..n {
        out[(r + j, j)] = BigInt::from(1);
        out[(r + j, n + j)] = BigInt::from(1);
    }
    out
}

/// Graver basis of `A`: a reduced Gröbner basis of the Lawrence lifting,
/// projected onto the first block of variables. Each element is oriented
/// with the lexicographically larger exponent vector first.
pub fn graver_oracle(a: &IntegerMatrix, budget: &OracleBudget) -> Result<BinomialSet> {
    let n = a.cols();
    let lifted = lawrence_lifting(a);
    let gens = toric_ideal(&lifted, budget)?;
    let gb = buchberger_reduced(&gens, &TermOrder::graded_lex(2 * n), budget)?;
    let mut items: Vec<MonomialPair> = gb
        .items
        .into_iter()
        .map(|p| {
            let (u, v) = (p.lead[..n].to_vec(), p.trail[..n].to_vec());
            if u >= v {
                MonomialPair::new(u, v)
            } else {
                MonomialPair::new(v, u)
            }
        })
        .filter(|p| p.lead != p.trail)
        .collect();
    items.sort();
    items.dedup();
    Ok(BinomialSet::new(n, items))
}

pub fn graver_oracle_for_graph(g: &Graph, budget: &OracleBudget) -> Result<Vec<Binomial>> {
    graver_oracle(&IntegerMatrix::from_rows(&g.incidence_matrix()), budget)?.to_binomials(g)
}

fn support(p: &MonomialPair) -> Vec<bool> {
    p.lead.iter().zip(&p.trail).map(|(&a, &b)| a + b > 0).collect()
}

/// Elements whose support is minimal under inclusion within `graver`.
pub fn circuits_from_graver(graver: &BinomialSet) -> BinomialSet {
    let supports: Vec<Vec<bool>> = graver.items.iter().map(support).collect();
    let strictly_inside = |s: &[bool], t: &[bool]| s != t && s.iter().zip(t).all(|(&x, &y)| !x || y);
    let items = graver
        .items
        .iter()
        .zip(&supports)
        .filter(|(_, s)| !supports.iter().any(|t| strictly_inside(t, s)))
        .map(|(p, _)| p.clone())
        .collect();
    BinomialSet::new(graver.num_vars, items)
}
