use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use toric_graph::algebra::{
    circuits_from_graver, graver_oracle, reduced_gb_contains_in, toric_ideal, ugb_membership_lp, OracleBudget,
};
use toric_graph::enumerate::{enumerate_circuits, enumerate_graver, enumerate_ugb, EnumConfig};
use toric_graph::families::{complete_graph, family_graph};
use toric_graph::intlinalg::IntegerMatrix;
use toric_graph::{analyze, in_ugb_structural, witness_order, Binomial, Graph};

const LP_ITERATIONS: usize = 1_000_000;

/// Connected graph on `n` vertices: a random tree plus `extra` random chords.
fn random_graph(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.random_range(0..v), v)).collect();
    let mut tries = 0;
    while edges.len() < n - 1 + extra && tries < 100 {
        tries += 1;
        let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
        let (u, v) = (u.min(v), u.max(v));
        if u != v && !edges.contains(&(u, v)) && !edges.contains(&(v, u)) {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).unwrap()
}

fn sorted(mut v: Vec<Binomial>) -> Vec<Binomial> {
    v.sort();
    v
}

fn check(g: &Graph) {
    let cfg = EnumConfig::default();
    let budget = OracleBudget::default();
    let a = IntegerMatrix::from_rows(&g.incidence_matrix());
    let oracle = graver_oracle(&a, &budget).unwrap();
    let o_graver = sorted(oracle.to_binomials(g).unwrap());
    let o_circuits = sorted(circuits_from_graver(&oracle).to_binomials(g).unwrap());

    let s_graver = enumerate_graver(g, &cfg).unwrap().binomials();
    assert_eq!(s_graver, o_graver, "Graver basis of {}", g.to_json());
    assert_eq!(
        enumerate_circuits(g, &cfg).unwrap().binomials(),
        o_circuits,
        "circuits of {}",
        g.to_json()
    );

    let s_ugb = enumerate_ugb(g, &cfg).unwrap().binomials();
    let o_ugb: Vec<Binomial> = o_graver
        .iter()
        .filter(|b| ugb_membership_lp(b, &o_graver, LP_ITERATIONS).unwrap().member)
        .cloned()
        .collect();
    assert_eq!(s_ugb, o_ugb, "UGB of {}", g.to_json());

    if s_ugb.is_empty() {
        return;
    }
    let gens = toric_ideal(&a, &budget).unwrap();
    for b in &s_ugb {
        let order = witness_order(&analyze(g, b)).unwrap();
        assert!(reduced_gb_contains_in(b, &gens, &order, &budget).unwrap());
    }
}

#[test]
fn random_graphs_agree_with_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..120 {
        let n = rng.random_range(4..=9);
        let extra = rng.random_range(1..=5);
        check(&random_graph(&mut rng, n, extra));
    }
}

#[test]
fn named_graphs_agree_with_oracle() {
    check(&complete_graph(4).unwrap());
    check(&complete_graph(5).unwrap());
    check(&family_graph(3, 3).unwrap());
    // two triangles joined by a path of length two
    check(&Graph::new(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)]).unwrap());
}

#[test]
fn lp_verdict_matches_mixed_walks() {
    let g = family_graph(4, 3).unwrap();
    let graver = enumerate_graver(&g, &EnumConfig::default()).unwrap().binomials();
    let mut excluded = 0;
    for b in &graver {
        let verdict = ugb_membership_lp(b, &graver, LP_ITERATIONS).unwrap();
        assert_eq!(verdict.member, in_ugb_structural(&g, b));
        assert_eq!(verdict.member, verdict.witness.is_some());
        excluded += usize::from(!verdict.member);
    }
    assert_eq!(excluded, 1);
}

#[test]
fn sequential_matches_parallel() {
    for g in [complete_graph(7).unwrap(), family_graph(5, 5).unwrap()] {
        let seq = enumerate_graver(&g, &EnumConfig::sequential()).unwrap();
        let par = enumerate_graver(&g, &EnumConfig::default()).unwrap();
        assert_eq!(seq.to_json(), par.to_json());
    }
}
