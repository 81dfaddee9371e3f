//! Structural results against the algebraic oracle.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use toric_graph::algebra::{
    circuits_from_graver, graver_oracle, reduced_gb_contains_in, toric_ideal, ugb_membership_lp, OracleBudget,
};
use toric_graph::binomial::BinomialJson;
use toric_graph::enumerate::{enumerate_circuits, enumerate_graver};
use toric_graph::intlinalg::IntegerMatrix;
use toric_graph::{analyze, in_ugb_structural, pure_block_certificate, witness_order, Binomial, Graph, TermOrder};

use crate::{Failure, RunConfig};

#[derive(Debug, Serialize)]
pub struct SetComparison {
    pub structural: usize,
    pub oracle: usize,
    pub equal: bool,
    pub structural_only: Vec<BinomialJson>,
    pub oracle_only: Vec<BinomialJson>,
}

fn compare(structural: &[Binomial], oracle: &[Binomial]) -> SetComparison {
    let only = |a: &[Binomial], b: &[Binomial]| -> Vec<BinomialJson> {
        a.iter()
            .filter(|x| b.binary_search(x).is_err())
            .map(|x| x.to_json_value())
            .collect()
    };
    let structural_only = only(structural, oracle);
    let oracle_only = only(oracle, structural);
    SetComparison {
        structural: structural.len(),
        oracle: oracle.len(),
        equal: structural_only.is_empty() && oracle_only.is_empty(),
        structural_only,
        oracle_only,
    }
}

#[derive(Debug, Serialize)]
pub struct CheckList {
    pub checked: usize,
    pub failures: Vec<BinomialJson>,
}

#[derive(Debug, Serialize)]
pub struct Verification {
    pub vertices: usize,
    pub edges: usize,
    pub circuits: SetComparison,
    pub graver: SetComparison,
    pub ugb: SetComparison,
    /// Exact LP verdict against the mixed-walk test, per Graver element.
    pub lp_vs_mixed: CheckList,
    /// Mixed elements missing from the reduced basis of their witness order.
    pub witness_orders: CheckList,
    /// Excluded elements found in a sampled reduced basis, or not refuted
    /// by their pure-block certificate.
    pub sampled_orders: CheckList,
    pub samples_per_element: usize,
    pub ok: bool,
}

fn sorted(mut v: Vec<Binomial>) -> Vec<Binomial> {
    v.sort();
    v.dedup();
    v
}

fn random_order(m: usize, rng: &mut ChaCha8Rng) -> TermOrder {
    let w: Vec<u64> = (0..m).map(|_| rng.random_range(1..=1000u64)).collect();
    TermOrder::new(m, vec![], vec![w], (0..m).collect()).expect("valid order")
}

pub fn run(g: &Graph, cfg: &RunConfig, samples: usize) -> Result<Verification, Failure> {
    let enum_cfg = cfg.enum_config(true);
    let s_circuits = enumerate_circuits(g, &enum_cfg)?.binomials();
    let s_graver_report = enumerate_graver(g, &enum_cfg)?;
    let s_graver = s_graver_report.binomials();
    let s_ugb: Vec<Binomial> = s_graver_report
        .entries
        .iter()
        .filter(|e| e.ugb == Some(true))
        .map(|e| e.binomial.clone())
        .collect();

    let budget = OracleBudget {
        lp_iterations: cfg.lp_iterations,
        deadline: cfg.deadline(),
        ..OracleBudget::default()
    };
    let a = IntegerMatrix::from_rows(&g.incidence_matrix());
    let o_set = graver_oracle(&a, &budget)?;
    let o_graver = sorted(o_set.to_binomials(g)?);
    let o_circuits = sorted(circuits_from_graver(&o_set).to_binomials(g)?);

    let mut o_ugb = Vec::new();
    let mut lp_fail = Vec::new();
    for b in &o_graver {
        let member = ugb_membership_lp(b, &o_graver, cfg.lp_iterations)?.member;
        if member {
            o_ugb.push(b.clone());
        }
        if member != in_ugb_structural(g, b) {
            lp_fail.push(b.to_json_value());
        }
    }

    let gens = toric_ideal(&a, &budget)?;
    let mut witness_fail = Vec::new();
    for b in &s_ugb {
        let order = witness_order(&analyze(g, b))?;
        if !reduced_gb_contains_in(b, &gens, &order, &budget)? {
            witness_fail.push(b.to_json_value());
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let excluded: Vec<&Binomial> = s_graver.iter().filter(|b| s_ugb.binary_search(b).is_err()).collect();
    let mut sample_fail = Vec::new();
    for b in &excluded {
        let cert = pure_block_certificate(g, &analyze(g, b))?;
        let mut bad = false;
        for _ in 0..samples {
            let order = random_order(g.edge_count(), &mut rng);
            if reduced_gb_contains_in(b, &gens, &order, &budget)? || !cert.refutes(&order, b) {
                bad = true;
            }
        }
        if bad {
            sample_fail.push(b.to_json_value());
        }
    }

    let circuits = compare(&s_circuits, &o_circuits);
    let graver = compare(&s_graver, &o_graver);
    let ugb = compare(&s_ugb, &o_ugb);
    let ok = circuits.equal
        && graver.equal
        && ugb.equal
        && lp_fail.is_empty()
        && witness_fail.is_empty()
        && sample_fail.is_empty();
    Ok(Verification {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        circuits,
        graver,
        ugb,
        lp_vs_mixed: CheckList {
            checked: o_graver.len(),
            failures: lp_fail,
        },
        witness_orders: CheckList {
            checked: s_ugb.len(),
            failures: witness_fail,
        },
        sampled_orders: CheckList {
            checked: excluded.len(),
            failures: sample_fail,
        },
        samples_per_element: samples,
        ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use toric_graph::enumerate::EnumConfig;
    use toric_graph::families::complete_graph;

    #[test]
    fn comparison_sorts_mismatches() {
        let g = complete_graph(4).unwrap();
        let all = enumerate_graver(&g, &EnumConfig::default()).unwrap().binomials();
        let c = compare(&all[..2], &all[1..]);
        assert!(!c.equal);
        assert_eq!(c.structural_only, vec![all[0].to_json_value()]);
        assert_eq!(c.oracle_only, vec![all[2].to_json_value()]);
        assert!(compare(&all, &all).equal);
    }
}
