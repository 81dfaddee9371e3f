//! Structural classifiers for binomials of closed even walks: circuit shape,
//! primitivity, purity of cyclic blocks and universal Gröbner basis
//! membership, plus the witness term order of a mixed walk.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::binomial::{Binomial, Class};
use crate::blocks::{block_decomposition_of_edges, BlockDecomposition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::order::TermOrder;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CircuitKind {
    EvenCycle,
    TwoOddCyclesSharedVertex,
    TwoOddCyclesJoinedByPath,
    NotACircuit,
}

/// First condition of the primitivity characterization that fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PrimitivityFailure {
    DisconnectedSupport,
    BlockNotCycleOrEdge { block: usize },
    BadMultiplicity { edge: usize },
    CutVertexBlockCount { vertex: usize, blocks: usize },
    NotASink { vertex: usize, block: usize },
}

/// Everything the classifiers derive from a binomial's support.
#[derive(Debug, Clone, Serialize)]
pub struct WalkAnalysis {
    pub binomial: Binomial,
    /// Support edges, ascending.
    pub support: Vec<usize>,
    /// Per edge of the ambient graph: `plus + minus` exponent.
    pub multiplicity: Vec<u32>,
    pub class: Vec<Option<Class>>,
    pub blocks: BlockDecomposition,
    /// Indices (into `blocks.blocks`) of the blocks that are cycles.
    pub cyclic_blocks: Vec<usize>,
    /// Per block: cyclic with all edges in one class.
    pub pure: Vec<bool>,
    /// Cut vertex → blocks it is a sink of.
    pub sinks: BTreeMap<usize, Vec<usize>>,
    pub primitive: bool,
    pub failure: Option<PrimitivityFailure>,
}

impl WalkAnalysis {
    pub fn degree(&self) -> u64 {
        self.binomial.degree()
    }

    pub fn pure_blocks(&self) -> Vec<usize> {
        (0..self.pure.len()).filter(|&b| self.pure[b]).collect()
    }

    /// Number of edges of `block` in `class`.
    pub fn class_count(&self, block: usize, class: Class) -> u64 {
        self.blocks.blocks[block]
            .iter()
            .filter(|&&e| self.class[e] == Some(class))
            .count() as u64
    }
}

/// Computes the support structure of `b` and evaluates the primitivity
/// characterization:
/// 1. every block of the support is a cycle or a cut edge;
/// 2. every edge with exponent at least 2 has exponent exactly 2 and is a
///    cut edge;
/// 3. every cut vertex lies in exactly two blocks and is a sink of both.
pub fn analyze(g: &Graph, b: &Binomial) -> WalkAnalysis {
    let m = g.edge_count();
    let support = b.support();
    let multiplicity: Vec<u32> = (0..m).map(|e| b.exponent(e)).collect();
    let class: Vec<Option<Class>> = (0..m).map(|e| b.class_of(e)).collect();
    let blocks = block_decomposition_of_edges(g, &support);
    let nb = blocks.blocks.len();
    let cyclic_blocks: Vec<usize> = (0..nb).filter(|&i| blocks.is_cycle(i)).collect();
    let pure: Vec<bool> = (0..nb)
        .map(|i| {
            blocks.is_cycle(i) && {
                let c0 = class[blocks.blocks[i][0]];
                blocks.blocks[i].iter().all(|&e| class[e] == c0)
            }
        })
        .collect();

    let mut sinks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &v in &blocks.cut_vertices {
        let mut of = Vec::new();
        for bi in blocks.blocks_at(v) {
            if is_sink(g, &blocks, &class, bi, v) {
                of.push(bi);
            }
        }
        sinks.insert(v, of);
    }

    let failure = primitivity_failure(&blocks, &multiplicity, &sinks);
    WalkAnalysis {
        binomial: b.clone(),
        support,
        multiplicity,
        class,
        blocks,
        cyclic_blocks,
        pure,
        sinks,
        primitive: failure.is_none(),
        failure,
    }
}

/// `v` is a sink of `block` when two of the block's edges at `v` share a
/// class; both endpoints of a cut-edge block are sinks.
fn is_sink(g: &Graph, d: &BlockDecomposition, class: &[Option<Class>], block: usize, v: usize) -> bool {
    let edges = &d.blocks[block];
    if edges.len() == 1 {
        return true;
    }
    let at_v: Vec<Class> = edges
        .iter()
        .filter(|&&e| g.other_end(e, v).is_some())
        .filter_map(|&e| class[e])
        .collect();
    let plus = at_v.iter().filter(|&&c| c == Class::Plus).count();
    plus >= 2 || at_v.len() - plus >= 2
}

fn primitivity_failure(
    d: &BlockDecomposition,
    multiplicity: &[u32],
    sinks: &BTreeMap<usize, Vec<usize>>,
) -> Option<PrimitivityFailure> {
    if d.components != 1 {
        return Some(PrimitivityFailure::DisconnectedSupport);
    }
    for b in 0..d.blocks.len() {
        if !(d.is_cycle(b) || d.is_cut_edge_block(b)) {
            return Some(PrimitivityFailure::BlockNotCycleOrEdge { block: b });
        }
    }
    for (e, &x) in multiplicity.iter().enumerate() {
        if x >= 2 && (x != 2 || !d.cut_edges.contains(&e)) {
            return Some(PrimitivityFailure::BadMultiplicity { edge: e });
        }
    }
    for (&v, of) in sinks {
        let at = d.blocks_at(v);
        if at.len() != 2 {
            return Some(PrimitivityFailure::CutVertexBlockCount {
                vertex: v,
                blocks: at.len(),
            });
        }
        if let Some(&b) = at.iter().find(|b| !of.contains(b)) {
            return Some(PrimitivityFailure::NotASink { vertex: v, block: b });
        }
    }
    None
}

/// Primitivity verdict together with the full analysis.
pub fn is_primitive(g: &Graph, b: &Binomial) -> (bool, WalkAnalysis) {
    let a = analyze(g, b);
    (a.primitive, a)
}

/// No cyclic block has all of its edges in one class.
pub fn is_mixed(analysis: &WalkAnalysis) -> bool {
    !analysis.pure.iter().any(|&p| p)
}

/// Membership in the universal Gröbner basis: primitive and mixed.
pub fn in_ugb_structural(g: &Graph, b: &Binomial) -> bool {
    let a = analyze(g, b);
    a.primitive && is_mixed(&a)
}

/// Circuit shape of `b`, or `NotACircuit`.
pub fn classify_circuit(g: &Graph, b: &Binomial) -> CircuitKind {
    classify_analysis(g, &analyze(g, b))
}

pub(crate) fn classify_analysis(g: &Graph, a: &WalkAnalysis) -> CircuitKind {
    let d = &a.blocks;
    if d.components != 1 {
        return CircuitKind::NotACircuit;
    }
    let cyc = &a.cyclic_blocks;
    let ones_on = |block: usize| d.blocks[block].iter().all(|&e| a.multiplicity[e] == 1);
    if d.blocks.len() == 1 && cyc.len() == 1 {
        let len = d.blocks[0].len();
        if len.is_multiple_of(2) && ones_on(0) {
            return CircuitKind::EvenCycle;
        }
        return CircuitKind::NotACircuit;
    }
    if cyc.len() != 2 || !cyc.iter().all(|&c| d.blocks[c].len() % 2 == 1 && ones_on(c)) {
        return CircuitKind::NotACircuit;
    }
    let (c1, c2) = (cyc[0], cyc[1]);
    let path_blocks: Vec<usize> = (0..d.blocks.len()).filter(|b| !cyc.contains(b)).collect();
    if path_blocks.is_empty() {
        let shared: Vec<_> = d.block_vertices[c1]
            .iter()
            .filter(|v| d.block_vertices[c2].binary_search(v).is_ok())
            .collect();
        if shared.len() == 1 {
            return CircuitKind::TwoOddCyclesSharedVertex;
        }
        return CircuitKind::NotACircuit;
    }
    // remaining blocks must be doubled cut edges forming one path whose ends
    // lie on different cycles and whose interior avoids both
    if !path_blocks
        .iter()
        .all(|&b| d.is_cut_edge_block(b) && a.multiplicity[d.blocks[b][0]] == 2)
    {
        return CircuitKind::NotACircuit;
    }
    let mut deg: BTreeMap<usize, usize> = BTreeMap::new();
    for &b in &path_blocks {
        let (u, v) = g.edge(d.blocks[b][0]);
        *deg.entry(u).or_default() += 1;
        *deg.entry(v).or_default() += 1;
    }
    if deg.len() != path_blocks.len() + 1 || deg.values().any(|&k| k > 2) {
        return CircuitKind::NotACircuit;
    }
    let on = |c: usize, v: usize| d.block_vertices[c].binary_search(&v).is_ok();
    let ends: Vec<usize> = deg.iter().filter(|(_, &k)| k == 1).map(|(&v, _)| v).collect();
    let disjoint = !d.block_vertices[c1].iter().any(|&v| on(c2, v));
    let interior_clear = deg
        .iter()
        .filter(|(_, &k)| k == 2)
        .all(|(&v, _)| !on(c1, v) && !on(c2, v));
    let ends_ok = ends.len() == 2
        && ((on(c1, ends[0]) && on(c2, ends[1])) || (on(c2, ends[0]) && on(c1, ends[1])))
        && ends.iter().all(|&v| !(on(c1, v) && on(c2, v)));
    if disjoint && interior_clear && ends_ok {
        CircuitKind::TwoOddCyclesJoinedByPath
    } else {
        CircuitKind::NotACircuit
    }
}

/// The term order under which a mixed primitive binomial lies in the
/// reduced Gröbner basis.
///
/// Edges outside the support form the elimination block. Each cyclic block
/// `B_i` (in block order) contributes one weight row: `t_i⁻` on its plus
/// edges, `t_i⁺` on its minus edges and 0 elsewhere, where `t_i^±` counts
/// the block's edges in each class. Ties fall back to lex on edge index.
pub fn witness_order(analysis: &WalkAnalysis) -> Result<TermOrder> {
    if !analysis.primitive {
        return Err(Error::NotPrimitive);
    }
    if !is_mixed(analysis) {
        return Err(Error::NotMixed);
    }
    let m = analysis.multiplicity.len();
    let elimination: Vec<usize> = (0..m).filter(|&e| analysis.multiplicity[e] == 0).collect();
    let rows = analysis
        .cyclic_blocks
        .iter()
        .map(|&b| {
            let t_plus = analysis.class_count(b, Class::Plus);
            let t_minus = analysis.class_count(b, Class::Minus);
            let mut row = vec![0u64; m];
            for &e in &analysis.blocks.blocks[b] {
                row[e] = match analysis.class[e] {
                    Some(Class::Plus) => t_minus,
                    Some(Class::Minus) => t_plus,
                    None => 0,
                };
            }
            row
        })
        .collect();
    TermOrder::new(m, elimination, rows, (0..m).collect())
}

/// Binomials showing that a walk with a pure cyclic block lies in no reduced
/// Gröbner basis.
///
/// With the pure block's edges `ε_1..ε_s` in cyclic order and `w_i` the odd
/// closed subwalk hanging at the vertex between `ε_{i−1}` and `ε_i`:
/// `F_i = E⁺(w_i)E⁺(w_{i+1}) − ε_i² E⁻(w_i)E⁻(w_{i+1})` for every `i`, and
/// either the even cycle `G = ε_1ε_3⋯ − ε_2ε_4⋯` (s even) or
/// `G_i = E⁺(w_i) ε_{i+1}ε_{i+3}⋯ε_{i+s−2} − E⁻(w_i) ε_iε_{i+2}⋯ε_{i+s−1}`
/// (s odd). Here `E⁻` denotes the class of the pure block.
#[derive(Debug, Clone, Serialize)]
pub struct PureBlockCertificate {
    pub block: usize,
    /// Block edges in cyclic order; `epsilons[i]` joins `vertices[i]` and
    /// `vertices[i + 1]`.
    pub epsilons: Vec<usize>,
    pub vertices: Vec<usize>,
    pub f: Vec<Binomial>,
    pub g: Vec<Binomial>,
}

impl PureBlockCertificate {
    pub fn all(&self) -> impl Iterator<Item = &Binomial> {
        self.f.iter().chain(&self.g)
    }

    /// Whether some certificate binomial `h` rules out `b` from the reduced
    /// Gröbner basis of `order`: the leading term of `h` either divides the
    /// trailing term of `b` or properly divides its leading term.
    pub fn refutes(&self, order: &TermOrder, b: &Binomial) -> bool {
        let (lead_b, trail_b) = oriented(order, b.plus(), b.minus());
        self.all().any(|h| {
            let (lead_h, _) = oriented(order, h.plus(), h.minus());
            divides(lead_h, trail_b) || (divides(lead_h, lead_b) && lead_h != lead_b)
        })
    }
}

fn oriented<'a>(order: &TermOrder, u: &'a [u32], v: &'a [u32]) -> (&'a [u32], &'a [u32]) {
    if order.cmp_monomials(u, v) == std::cmp::Ordering::Greater {
        (u, v)
    } else {
        (v, u)
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Builds the certificate for the first pure cyclic block of `analysis`.
pub fn pure_block_certificate(g: &Graph, analysis: &WalkAnalysis) -> Result<PureBlockCertificate> {
    if !analysis.primitive {
        return Err(Error::NotPrimitive);
    }
    let block = *analysis.pure_blocks().first().ok_or(Error::NoPureBlock)?;
    let m = g.edge_count();
    let block_edges: BTreeSet<usize> = analysis.blocks.blocks[block].iter().copied().collect();
    let eps_class = analysis.class[*block_edges.iter().next().unwrap()].expect("support edge");

    // walk the cycle from its smallest vertex
    let start = analysis.blocks.block_vertices[block][0];
    let mut vertices = vec![start];
    let mut epsilons = Vec::new();
    let mut prev_edge = usize::MAX;
    let mut v = start;
    loop {
        let (w, e) = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&(_, e)| block_edges.contains(&e) && e != prev_edge)
            .min_by_key(|&(w, _)| w)
            .expect("cycle block has two edges at each vertex");
        epsilons.push(e);
        prev_edge = e;
        if w == start {
            break;
        }
        vertices.push(w);
        v = w;
    }
    let s = epsilons.len();

    // hanging part at each cycle vertex: support edges reachable without
    // crossing the block, split by class
    let support: BTreeSet<usize> = analysis.support.iter().copied().collect();
    let mut hang_eps = Vec::with_capacity(s); // same class as the ε's
    let mut hang_other = Vec::with_capacity(s);
    for &root in &vertices {
        let mut eps_side = vec![0u32; m];
        let mut other_side = vec![0u32; m];
        let mut seen_v = BTreeSet::from([root]);
        let mut seen_e = BTreeSet::new();
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            for &(y, e) in g.neighbors(x) {
                if !support.contains(&e) || block_edges.contains(&e) || !seen_e.insert(e) {
                    continue;
                }
                if analysis.class[e] == Some(eps_class) {
                    eps_side[e] = analysis.multiplicity[e];
                } else {
                    other_side[e] = analysis.multiplicity[e];
                }
                if seen_v.insert(y) {
                    stack.push(y);
                }
            }
        }
        hang_eps.push(eps_side);
        hang_other.push(other_side);
    }

    let add = |acc: &mut Vec<u32>, v: &[u32]| {
        for (a, &x) in acc.iter_mut().zip(v) {
            *a += x;
        }
    };
    let mut f = Vec::with_capacity(s);
    for i in 0..s {
        let j = (i + 1) % s;
        let mut lhs = hang_other[i].clone();
        add(&mut lhs, &hang_other[j]);
        let mut rhs = hang_eps[i].clone();
        add(&mut rhs, &hang_eps[j]);
        rhs[epsilons[i]] += 2;
        f.push(Binomial::new(g, lhs, rhs)?);
    }
    let mut gs = Vec::new();
    if s % 2 == 0 {
        let mut lhs = vec![0u32; m];
        let mut rhs = vec![0u32; m];
        for (i, &e) in epsilons.iter().enumerate() {
            if i % 2 == 0 {
                lhs[e] += 1;
            } else {
                rhs[e] += 1;
            }
        }
        gs.push(Binomial::new(g, lhs, rhs)?);
    } else {
        for i in 0..s {
            let mut lhs = hang_other[i].clone();
            let mut rhs = hang_eps[i].clone();
            for t in 0..s {
                let e = epsilons[(i + t) % s];
                if t % 2 == 0 {
                    rhs[e] += 1;
                } else {
                    lhs[e] += 1;
                }
            }
            gs.push(Binomial::new(g, lhs, rhs)?);
        }
    }
    Ok(PureBlockCertificate {
        block,
        epsilons,
        vertices,
        f,
        g: gs,
    })
}

/// Classification record in the report JSON layout.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub circuit: CircuitKind,
    pub primitive: bool,
    pub mixed: bool,
    pub ugb: bool,
    pub degree: u64,
}

/// Runs every classifier on `b`. `mixed` is reported as computed on the
/// support even for non-primitive input; `ugb` requires both.
pub fn classify(g: &Graph, b: &Binomial) -> Classification {
    let a = analyze(g, b);
    let mixed = is_mixed(&a);
    Classification {
        circuit: classify_analysis(g, &a),
        primitive: a.primitive,
        mixed,
        ugb: a.primitive && mixed,
        degree: b.degree(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::binomial_of_walk;
    use crate::families::*;
    use crate::graph::parse_graph;

    fn c4_binomial() -> (Graph, Binomial) {
        let g = cycle_graph(4).unwrap();
        let b = binomial_of_walk(&g, &[0, 1, 2, 3]).unwrap();
        (g, b)
    }

    fn bowtie_binomial() -> (Graph, Binomial) {
        let g = bowtie();
        let b = binomial_of_walk(&g, &[0, 1, 2, 3, 4, 5]).unwrap();
        (g, b)
    }

    fn family_full(s: usize, l: usize) -> (Graph, Binomial) {
        let g = family_graph(s, l).unwrap();
        let b = binomial_of_walk(&g, &family_full_walk(s, l).unwrap()).unwrap();
        (g, b)
    }

    #[test]
    fn c4_classification() {
        let (g, b) = c4_binomial();
        let c = classify(&g, &b);
        assert_eq!(c.circuit, CircuitKind::EvenCycle);
        assert!(c.primitive && c.mixed && c.ugb);
        assert_eq!(c.degree, 2);
    }

    #[test]
    fn bowtie_shared_vertex() {
        let (g, b) = bowtie_binomial();
        assert_eq!(classify_circuit(&g, &b), CircuitKind::TwoOddCyclesSharedVertex);
        assert!(in_ugb_structural(&g, &b));
    }

    #[test]
    fn joined_by_path() {
        // triangles 0-1-2 and 4-5-6 joined by the path 2-3-4
        let g = parse_graph("0 1\n1 2\n2 0\n2 3\n3 4\n4 5\n5 6\n6 4").unwrap();
        let b = binomial_of_walk(&g, &[0, 1, 3, 4, 5, 6, 7, 4, 3, 2]).unwrap();
        assert_eq!(b.exponent(3), 2);
        assert_eq!(b.degree(), 5);
        assert_eq!(classify_circuit(&g, &b), CircuitKind::TwoOddCyclesJoinedByPath);
        let (p, a) = is_primitive(&g, &b);
        assert!(p && is_mixed(&a));
    }

    #[test]
    fn k4_doubled_matching_not_primitive() {
        let g = complete_graph(4).unwrap();
        // edges: 0:{0,1} 1:{0,2} 2:{0,3} 3:{1,2} 4:{1,3} 5:{2,3}
        // (e01 e23)^2 - (e02 e13)(e03 e12)
        let b = Binomial::new(&g, vec![2, 0, 0, 0, 0, 2], vec![0, 1, 1, 1, 1, 0]).unwrap();
        // it is the sum of two circuit vectors
        let c1 = binomial_of_walk(&g, &[0, 4, 5, 1]).unwrap(); // 0-1-3-2-0
        let c2 = binomial_of_walk(&g, &[0, 3, 5, 2]).unwrap(); // 0-1-2-3-0
        let sum: Vec<i64> = c1
            .difference()
            .iter()
            .zip(c2.difference())
            .map(|(a, b)| a + b)
            .collect();
        assert_eq!(sum, b.difference());
        let (p, a) = is_primitive(&g, &b);
        assert!(!p);
        assert!(matches!(
            a.failure,
            Some(PrimitivityFailure::BlockNotCycleOrEdge { .. }) | Some(PrimitivityFailure::BadMultiplicity { .. })
        ));
        assert_eq!(classify_circuit(&g, &b), CircuitKind::NotACircuit);
    }

    #[test]
    fn family_full_walk_pure() {
        let (g, b) = family_full(3, 3);
        assert_eq!(b.degree(), 6);
        let (p, a) = is_primitive(&g, &b);
        assert!(p);
        assert!(!is_mixed(&a));
        assert_eq!(a.pure_blocks(), vec![0]);
        assert!(!in_ugb_structural(&g, &b));
        assert_eq!(witness_order(&a), Err(Error::NotMixed));
    }

    #[test]
    fn family_mixed_walk_is_mixed() {
        let g = family_graph(3, 3).unwrap();
        let b = binomial_of_walk(&g, &family_mixed_walk(3, 3).unwrap()).unwrap();
        let (p, a) = is_primitive(&g, &b);
        assert!(p && is_mixed(&a));
        assert!(in_ugb_structural(&g, &b));
    }

    #[test]
    fn witness_rows() {
        let (_, b) = c4_binomial();
        let g = cycle_graph(4).unwrap();
        let a = analyze(&g, &b);
        let o = witness_order(&a).unwrap();
        assert_eq!(o.weight_rows(), &[vec![2, 2, 2, 2]]);
        assert!(o.elimination_set().is_empty());
        assert_eq!(o.weight_differences(b.plus(), b.minus()), vec![0]);

        let (g, b) = bowtie_binomial();
        let a = analyze(&g, &b);
        let o = witness_order(&a).unwrap();
        assert_eq!(o.weight_rows().len(), 2);
        for (i, row) in o.weight_rows().iter().enumerate() {
            let tp = a.class_count(a.cyclic_blocks[i], Class::Plus);
            let tm = a.class_count(a.cyclic_blocks[i], Class::Minus);
            let dot = |v: &[u32]| row.iter().zip(v).map(|(&r, &x)| r * u64::from(x)).sum::<u64>();
            assert_eq!(dot(b.plus()), tp * tm);
            assert_eq!(dot(b.minus()), tp * tm);
        }
    }

    #[test]
    fn certificate_odd_block() {
        let (g, b) = family_full(3, 3);
        let a = analyze(&g, &b);
        let cert = pure_block_certificate(&g, &a).unwrap();
        assert_eq!(cert.f.len(), 3);
        assert_eq!(cert.g.len(), 3);
        // Binomial::new already enforces balance; check degrees by hand
        assert!(cert.f.iter().all(|h| h.degree() == 4));
        assert!(cert.g.iter().all(|h| h.degree() == 3));
    }

    #[test]
    fn certificate_even_block() {
        let (g, b) = family_full(4, 3);
        let a = analyze(&g, &b);
        let cert = pure_block_certificate(&g, &a).unwrap();
        assert_eq!(cert.f.len(), 4);
        assert_eq!(cert.g.len(), 1);
        let g0 = &cert.g[0];
        assert_eq!(g0.support(), vec![0, 1, 2, 3]);
        assert_eq!(g0.degree(), 2);
    }

    #[test]
    fn certificate_requires_pure_block() {
        let (g, b) = c4_binomial();
        assert_eq!(
            pure_block_certificate(&g, &analyze(&g, &b)).unwrap_err(),
            Error::NoPureBlock
        );
    }

    #[test]
    fn classification_json_layout() {
        let (g, b) = c4_binomial();
        let text = serde_json::to_string(&classify(&g, &b)).unwrap();
        assert_eq!(
            text,
            r#"{"circuit":"EvenCycle","primitive":true,"mixed":true,"ugb":true,"degree":2}"#
        );
    }
}
