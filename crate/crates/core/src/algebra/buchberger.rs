use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};

use super::{BinomialSet, MonomialPair, OracleBudget};
use crate::error::{Error, Result};
use crate::order::TermOrder;

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}

/// `mono · x^trail / x^lead`, assuming `lead | mono`.
fn rewrite(mono: &mut [u32], p: &MonomialPair) {
    for ((m, &l), &t) in mono.iter_mut().zip(&p.lead).zip(&p.trail) {
        *m = *m - l + t;
    }
}

fn orient(order: &TermOrder, u: Vec<u32>, v: Vec<u32>) -> Option<MonomialPair> {
    match order.cmp_monomials(&u, &v) {
        Ordering::Greater => Some(MonomialPair::new(u, v)),
        Ordering::Less => Some(MonomialPair::new(v, u)),
        Ordering::Equal => None,
    }
}

/// Reduces a monomial to its normal form modulo the leading terms of
/// `basis`. Each rewrite strictly decreases the monomial, so this stops.
pub fn normal_form(mono: &[u32], basis: &[MonomialPair]) -> Vec<u32> {
    let mut m = mono.to_vec();
    while let Some(p) = basis.iter().find(|p| divides(&p.lead, &m)) {
        rewrite(&mut m, p);
    }
    m
}

/// Reduced Gröbner basis of the binomial ideal generated by `gens`.
///
/// Standard Buchberger on binomials: S-pairs and normal forms of binomials
/// stay binomials. Pairs are processed by increasing lcm degree and pruned
/// with the coprime-leading-term and chain criteria. The output is
/// interreduced (minimal leading terms, tails in normal form) and sorted.
pub fn buchberger_reduced(gens: &BinomialSet, order: &TermOrder, budget: &OracleBudget) -> Result<BinomialSet> {
    let n = gens.num_vars;
    if order.num_vars() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: order.num_vars(),
        });
    }
    let mut basis: Vec<MonomialPair> = Vec::new();
    let mut heap: BinaryHeap<Reverse<(u64, usize, usize)>> = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let push_pairs = |basis: &Vec<MonomialPair>,
                      heap: &mut BinaryHeap<Reverse<(u64, usize, usize)>>,
                      pending: &mut HashSet<(usize, usize)>| {
        let j = basis.len() - 1;
        for i in 0..j {
            let deg: u64 = lcm(&basis[i].lead, &basis[j].lead).iter().map(|&x| u64::from(x)).sum();
            heap.push(Reverse((deg, i, j)));
            pending.insert((i, j));
        }
    };

    for p in &gens.items {
        let u = normal_form(&p.lead, &basis);
        let v = normal_form(&p.trail, &basis);
        if let Some(q) = orient(order, u, v) {
            basis.push(q);
            push_pairs(&basis, &mut heap, &mut pending);
        }
    }

    let mut examined = 0usize;
    while let Some(Reverse((_, i, j))) = heap.pop() {
        pending.remove(&(i, j));
        examined += 1;
        if examined > budget.max_pairs {
            return Err(Error::BudgetExceeded(format!("more than {} S-pairs", budget.max_pairs)));
        }
        if examined.is_multiple_of(1024) {
            budget.check_deadline()?;
        }
        let (a, b) = (&basis[i], &basis[j]);
        if coprime(&a.lead, &b.lead) {
            continue;
        }
        let l = lcm(&a.lead, &b.lead);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(&basis[k].lead, &l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let mut s1 = l.clone();
        rewrite(&mut s1, a);
        let mut s2 = l;
        rewrite(&mut s2, b);
        let u = normal_form(&s1, &basis);
        let v = normal_form(&s2, &basis);
        if let Some(q) = orient(order, u, v) {
            basis.push(q);
            if basis.len() > budget.max_basis {
                return Err(Error::BudgetExceeded(format!(
                    "Gröbner basis larger than {}",
                    budget.max_basis
                )));
            }
            push_pairs(&basis, &mut heap, &mut pending);
        }
    }

    Ok(BinomialSet::new(n, interreduce(basis, order)))
}

fn interreduce(mut basis: Vec<MonomialPair>, order: &TermOrder) -> Vec<MonomialPair> {
    basis.sort_by(|a, b| order.cmp_monomials(&a.lead, &b.lead));
    let mut minimal: Vec<MonomialPair> = Vec::new();
    for p in basis {
        if !minimal.iter().any(|q| divides(&q.lead, &p.lead)) {
            minimal.push(p);
        }
    }
    let leads_only = minimal.clone();
    let mut out: Vec<MonomialPair> = minimal
        .into_iter()
        .map(|p| {
            let trail = normal_form(&p.trail, &leads_only);
            MonomialPair::new(p.lead, trail)
        })
        .collect();
    out.sort();
    out
}

/// Checks the defining properties of a reduced Gröbner basis's shape:
/// every lead exceeds its trail, and no lead divides another lead or any
/// trail.
pub fn is_reduced(set: &BinomialSet, order: &TermOrder) -> bool {
    set.items.iter().enumerate().all(|(i, p)| {
        order.cmp_monomials(&p.lead, &p.trail) == Ordering::Greater
            && set
                .items
                .iter()
                .enumerate()
                .all(|(j, q)| (i == j || !divides(&q.lead, &p.lead)) && !divides(&q.lead, &p.trail))
    })
}
