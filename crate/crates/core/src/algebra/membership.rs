use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{buchberger_reduced, toric_ideal, BinomialSet, MonomialPair, OracleBudget};
use crate::binomial::Binomial;
use crate::error::{Error, Result};
use crate::intlinalg::{lp_feasible_strict, IntegerMatrix};
use crate::order::TermOrder;

/// Outcome of the exact universal Gröbner basis membership test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub member: bool,
    /// Whether the witness makes `plus` the leading term.
    pub plus_leads: Option<bool>,
    /// Weight vector separating the required comparisons.
    pub witness: Option<Vec<BigRational>>,
}

fn le(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn diff(a: &[u32], b: &[u32]) -> Vec<BigRational> {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| BigRational::from_integer(BigInt::from(i64::from(x) - i64::from(y))))
        .collect()
}

/// Rows `r` such that `r·c > 0` for all rows iff, under any term order
/// refining `c`, `x^lead − x^trail` is in the reduced Gröbner basis.
///
/// Since the Graver basis is a universal Gröbner basis, that happens iff
/// `lead > trail`, no Graver leading term divides `trail`, and no Graver
/// leading term properly divides `lead`.
fn constraint_rows(lead: &[u32], trail: &[u32], graver: &[Binomial]) -> Vec<Vec<BigRational>> {
    let mut rows = vec![diff(lead, trail)];
    for g in graver {
        for (a, a2) in [(g.plus(), g.minus()), (g.minus(), g.plus())] {
            if (a == lead && a2 == trail) || (a == trail && a2 == lead) {
                continue;
            }
            if le(a, trail) || (le(a, lead) && a != lead) {
                rows.push(diff(a2, a));
            }
        }
    }
    rows
}

/// Decides whether `b` lies in the universal Gröbner basis, given the full
/// Graver basis, by exact LP over both orientations of `b`.
pub fn ugb_membership_lp(b: &Binomial, graver: &[Binomial], lp_iterations: usize) -> Result<MembershipVerdict> {
    if !graver.iter().any(|g| g == b) {
        return Err(Error::NotInGraver);
    }
    for (plus_leads, lead, trail) in [(true, b.plus(), b.minus()), (false, b.minus(), b.plus())] {
        let rows = constraint_rows(lead, trail, graver);
        let res = lp_feasible_strict(&rows, b.edge_count(), lp_iterations)?;
        if res.feasible {
            return Ok(MembershipVerdict {
                member: true,
                plus_leads: Some(plus_leads),
                witness: res.witness,
            });
        }
    }
    Ok(MembershipVerdict {
        member: false,
        plus_leads: None,
        witness: None,
    })
}

/// Turns a rational weight vector into a term order: scaled to integers,
/// shifted to be nonnegative, then broken by lex. The shift adds the same
/// constant to every variable, which preserves comparisons between
/// monomials of equal total degree (all graph binomials are such pairs).
pub fn weight_order(c: &[BigRational]) -> Result<TermOrder> {
    let n = c.len();
    let denom = c.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = c
        .iter()
        .map(|x| (x * BigRational::from_integer(denom.clone())).to_integer())
        .collect();
    let min = ints.iter().cloned().min().unwrap_or_else(BigInt::zero);
    let shift = if min.is_negative() { -min } else { BigInt::zero() };
    let row = ints
        .iter()
        .map(|x| (x + &shift).to_u64())
        .collect::<Option<Vec<u64>>>()
        .ok_or_else(|| Error::BudgetExceeded("weight vector does not fit in 64 bits".into()))?;
    TermOrder::new(n, vec![], vec![row], (0..n).collect())
}

/// Whether `b` (up to sign) is in the reduced Gröbner basis of `I_A` for
/// `order`.
pub fn reduced_gb_contains(b: &Binomial, a: &IntegerMatrix, order: &TermOrder, budget: &OracleBudget) -> Result<bool> {
    let gens = toric_ideal(a, budget)?;
    reduced_gb_contains_in(b, &gens, order, budget)
}

/// As [`reduced_gb_contains`], reusing a precomputed generating set.
pub fn reduced_gb_contains_in(
    b: &Binomial,
    toric_gens: &BinomialSet,
    order: &TermOrder,
    budget: &OracleBudget,
) -> Result<bool> {
    let gb = buchberger_reduced(toric_gens, order, budget)?;
    Ok(gb.contains_up_to_sign(&MonomialPair::from_binomial(b)))
}
