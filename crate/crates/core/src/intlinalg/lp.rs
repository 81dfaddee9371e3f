//! Strict feasibility of `M c > 0` by an exact rational simplex.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictFeasibility {
    pub feasible: bool,
    /// Optimal margin `δ`; positive iff feasible.
    pub margin: BigRational,
    /// `c` with `M c ≥ δ·1`, `‖c‖∞ ≤ 1`, present when feasible.
    pub witness: Option<Vec<BigRational>>,
}

/// Decides whether some `c` satisfies every row of `rows` strictly
/// (`row·c > 0`).
///
/// Solves `max δ` subject to `M c ≥ δ·1`, `−1 ≤ c ≤ 1`, `0 ≤ δ ≤ 1` with
/// `c = c⁺ − c⁻`, so the all-slack basis is feasible and no phase one is
/// needed. Pivoting uses Bland's rule.
pub fn lp_feasible_strict(
    rows: &[Vec<BigRational>],
    num_vars: usize,
    max_iterations: usize,
) -> Result<StrictFeasibility> {
    if let Some(r) = rows.iter().find(|r| r.len() != num_vars) {
        return Err(Error::LengthMismatch {
            expected: num_vars,
            got: r.len(),
        });
    }
    if rows.is_empty() {
        return Ok(StrictFeasibility {
            feasible: true,
            margin: BigRational::one(),
            witness: Some(vec![BigRational::zero(); num_vars]),
        });
    }
    // structural variables: c⁺ (0..n), c⁻ (n..2n), δ (2n)
    let n = num_vars;
    let nstruct = 2 * n + 1;
    let ncons = rows.len() + 2 * n + 1;
    let width = nstruct + ncons + 1; // + slacks + rhs
    let zero = BigRational::zero();
    let one = BigRational::one();
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(ncons + 1);
    for (i, r) in rows.iter().enumerate() {
        let mut line = vec![zero.clone(); width];
        for j in 0..n {
            line[j] = -r[j].clone();
            line[n + j] = r[j].clone();
        }
        line[2 * n] = one.clone();
        line[nstruct + i] = one.clone();
        t.push(line);
    }
    for j in 0..nstruct {
        let mut line = vec![zero.clone(); width];
        line[j] = one.clone();
        line[nstruct + rows.len() + j] = one.clone();
        line[width - 1] = one.clone();
        t.push(line);
    }
    // objective row holds reduced costs of max δ: z − δ = 0
    let mut obj = vec![zero.clone(); width];
    obj[2 * n] = -one.clone();
    let mut basis: Vec<usize> = (nstruct..nstruct + ncons).collect();

    let mut iterations = 0;
    while let Some(enter) = (0..width - 1).find(|&j| obj[j].is_negative()) {
        let mut leave: Option<usize> = None;
        for i in 0..ncons {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = &t[i][width - 1] / &t[i][enter];
            leave = match leave {
                None => Some(i),
                Some(l) => {
                    let best = &t[l][width - 1] / &t[l][enter];
                    if ratio < best || (ratio == best && basis[i] < basis[l]) {
                        Some(i)
                    } else {
                        Some(l)
                    }
                }
            };
        }
        let leave = leave.expect("all variables are bounded");
        pivot(&mut t, &mut obj, leave, enter);
        basis[leave] = enter;
        iterations += 1;
        if iterations > max_iterations {
            return Err(Error::BudgetExceeded(format!(
                "simplex exceeded {max_iterations} pivots"
            )));
        }
    }

    let mut value = vec![zero.clone(); nstruct];
    for (i, &b) in basis.iter().enumerate() {
        if b < nstruct {
            value[b] = t[i][width - 1].clone();
        }
    }
    let margin = value[2 * n].clone();
    let feasible = margin.is_positive();
    let witness = feasible.then(|| (0..n).map(|j| &value[j] - &value[n + j]).collect::<Vec<_>>());
    if let Some(c) = &witness {
        debug_assert!(rows.iter().all(|r| dot(r, c).is_positive()));
    }
    Ok(StrictFeasibility {
        feasible,
        margin,
        witness,
    })
}

fn pivot(t: &mut [Vec<BigRational>], obj: &mut [BigRational], row: usize, col: usize) {
    let p = t[row][col].clone();
    for x in t[row].iter_mut() {
        if !x.is_zero() {
            *x = &*x / &p;
        }
    }
    let pivot_row = t[row].clone();
    let eliminate = |line: &mut [BigRational]| {
        let f = line[col].clone();
        if f.is_zero() {
            return;
        }
        for (x, y) in line.iter_mut().zip(&pivot_row) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    };
    for (i, line) in t.iter_mut().enumerate() {
        if i != row {
            eliminate(line);
        }
    }
    eliminate(obj);
}

pub(crate) fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter()
        .zip(b)
        .map(|(x, y)| x * y)
        .fold(BigRational::zero(), |acc, v| acc + v)
}
