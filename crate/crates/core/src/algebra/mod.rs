//! Independent algebraic oracle for toric ideals: binomial Buchberger,
//! toric ideals by saturation, Graver bases by Lawrence lifting and an exact
//! LP test for universal Gröbner basis membership.

mod buchberger;
mod graver;
mod membership;
mod toric;

use std::time::Instant;

use serde::Serialize;

pub use buchberger::{buchberger_reduced, is_reduced, normal_form};
pub use graver::{circuits_from_graver, graver_oracle, graver_oracle_for_graph, lawrence_lifting};
pub use membership::{reduced_gb_contains, reduced_gb_contains_in, ugb_membership_lp, weight_order, MembershipVerdict};
pub use toric::{toric_ideal, toric_ideal_of_graph};

use crate::binomial::Binomial;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::intlinalg::IntegerMatrix;

/// Integer matrix whose columns are the points of the configuration.
pub type MatrixPresentation = IntegerMatrix;

/// `x^lead − x^trail`, with no disjointness or orientation requirement.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MonomialPair {
    pub lead: Vec<u32>,
    pub trail: Vec<u32>,
}

impl MonomialPair {
    pub fn new(lead: Vec<u32>, trail: Vec<u32>) -> Self {
        MonomialPair { lead, trail }
    }

    pub fn from_binomial(b: &Binomial) -> Self {
        MonomialPair::new(b.plus().to_vec(), b.minus().to_vec())
    }

    /// `x^{v⁺} − x^{v⁻}` for an integer vector `v`.
    pub fn from_signed(v: &[i64]) -> Self {
        let pos = v.iter().map(|&x| x.max(0) as u32).collect();
        let neg = v.iter().map(|&x| (-x).max(0) as u32).collect();
        MonomialPair::new(pos, neg)
    }

    pub fn num_vars(&self) -> usize {
        self.lead.len()
    }

    /// Same binomial up to sign.
    pub fn same_up_to_sign(&self, other: &MonomialPair) -> bool {
        (self.lead == other.lead && self.trail == other.trail) || (self.lead == other.trail && self.trail == other.lead)
    }

    pub fn to_binomial(&self, g: &Graph) -> Result<Binomial> {
        Binomial::new(g, self.lead.clone(), self.trail.clone())
    }
}

/// A list of binomials over a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinomialSet {
    pub num_vars: usize,
    pub items: Vec<MonomialPair>,
}

impl BinomialSet {
    pub fn new(num_vars: usize, items: Vec<MonomialPair>) -> Self {
        BinomialSet { num_vars, items }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn contains_up_to_sign(&self, p: &MonomialPair) -> bool {
        self.items.iter().any(|q| q.same_up_to_sign(p))
    }

    /// Whether every element is balanced for `a` (`a·lead = a·trail`).
    pub fn is_balanced_for(&self, a: &IntegerMatrix) -> bool {
        self.items.iter().all(|p| {
            (0..a.rows()).all(|i| {
                let row = a.row(i);
                let side = |v: &[u32]| -> num_bigint::BigInt {
                    row.iter().zip(v).map(|(x, &e)| x * num_bigint::BigInt::from(e)).sum()
                };
                side(&p.lead) == side(&p.trail)
            })
        })
    }

    /// Converts to graph binomials, canonicalized and sorted.
    pub fn to_binomials(&self, g: &Graph) -> Result<Vec<Binomial>> {
        let mut out = self
            .items
            .iter()
            .map(|p| p.to_binomial(g))
            .collect::<Result<Vec<_>>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

/// Resource limits for the oracle computations.
#[derive(Debug, Clone)]
pub struct OracleBudget {
    /// Largest intermediate Gröbner basis.
    pub max_basis: usize,
    /// S-pairs examined per Buchberger run.
    pub max_pairs: usize,
    pub lp_iterations: usize,
    pub deadline: Option<Instant>,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_basis: 50_000,
            max_pairs: 20_000_000,
            lp_iterations: 1_000_000,
            deadline: None,
        }
    }
}

impl OracleBudget {
    pub(crate) fn check_deadline(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::BudgetExceeded("time budget".into())),
            _ => Ok(()),
        }
    }
}
