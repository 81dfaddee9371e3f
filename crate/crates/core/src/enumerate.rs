//! Structural enumeration of circuits, Graver basis and universal Gröbner
//! basis, plus degree statistics.
//!
//! A primitive binomial's support is a tree of pieces (cycles and cut
//! edges) in which every articulation vertex lies in exactly two pieces and
//! is a sink of both. Such a support carries exactly one binomial up to
//! sign: cycle edges have exponent 1 and alternate classes except at sinks,
//! cut edges have exponent 2, and classes are opposite across an
//! articulation. The search grows these trees from a root piece, which is
//! the piece holding the smallest support edge, so every support is built
//! exactly once.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::time::Instant;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use serde::Serialize;

use crate::binomial::{Binomial, Class};
use crate::cycles::{enumerate_cycles_with, has_cycle_longer_than, Cycle};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::intlinalg::true_degree;
use crate::par;
use crate::walk::{analyze, classify_analysis, classify_circuit, is_mixed, CircuitKind};

/// Enumeration limits. Exceeding any of them is an error, never a silent
/// truncation.
#[derive(Debug, Clone, Serialize)]
pub struct EnumConfig {
    /// Longest cycle considered; `None` means the vertex count.
    pub max_cycle_len: Option<usize>,
    /// Most pieces in a support; `None` means the vertex count.
    pub max_blocks: Option<usize>,
    pub max_degree: Option<u64>,
    /// Search nodes visited (and cycles listed) before giving up.
    pub max_candidates: u64,
    #[serde(skip)]
    pub deadline: Option<Instant>,
    pub parallel: bool,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            max_cycle_len: None,
            max_blocks: None,
            max_degree: None,
            max_candidates: 10_000_000,
            deadline: None,
            parallel: true,
        }
    }
}

impl EnumConfig {
    pub fn sequential() -> Self {
        EnumConfig {
            parallel: false,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Structural,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    Circuits,
    Graver,
    Ugb,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportEntry {
    pub binomial: Binomial,
    pub circuit: CircuitKind,
    pub primitive: bool,
    /// Absent for oracle reports, which do not run structural tests.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mixed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ugb: Option<bool>,
    pub degree: u64,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "serialize_opt_decimal")]
    pub true_degree: Option<BigInt>,
}

fn serialize_opt_decimal<S: serde::Serializer>(x: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

/// A set of binomials with per-element tags, sorted by degree and then by
/// exponent vectors, without duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisReport {
    pub kind: BasisKind,
    pub provenance: Provenance,
    pub count: usize,
    pub max_degree: u64,
    pub entries: Vec<ReportEntry>,
}

impl BasisReport {
    /// Tags every binomial with the structural classifiers.
    pub fn structural(g: &Graph, kind: BasisKind, mut items: Vec<Binomial>, parallel: bool) -> Self {
        items.sort();
        items.dedup();
        let entries = par::map_collect(&items, parallel, |b| {
            let a = analyze(g, b);
            let mixed = is_mixed(&a);
            ReportEntry {
                binomial: b.clone(),
                circuit: classify_analysis(g, &a),
                primitive: a.primitive,
                mixed: Some(mixed),
                ugb: Some(a.primitive && mixed),
                degree: b.degree(),
                true_degree: None,
            }
        });
        Self::assemble(kind, Provenance::Structural, entries)
    }

    /// Oracle output: every element is primitive by construction; circuits
    /// are the support-minimal ones (named by the shape classifier) and
    /// `ugb` carries the LP verdicts when given.
    pub fn oracle(g: &Graph, kind: BasisKind, graver: &[Binomial], ugb: Option<&[bool]>) -> Self {
        let supports: Vec<Vec<usize>> = graver.iter().map(|b| b.support()).collect();
        let minimal = |i: usize| {
            !supports.iter().enumerate().any(|(j, t)| {
                j != i && t.len() < supports[i].len() && t.iter().all(|e| supports[i].binary_search(e).is_ok())
            })
        };
        let mut entries: Vec<ReportEntry> = graver
            .iter()
            .enumerate()
            .map(|(i, b)| ReportEntry {
                binomial: b.clone(),
                circuit: if minimal(i) {
                    classify_circuit(g, b)
                } else {
                    CircuitKind::NotACircuit
                },
                primitive: true,
                mixed: None,
                ugb: ugb.map(|u| u[i]),
                degree: b.degree(),
                true_degree: None,
            })
            .collect();
        entries.sort_by(|a, b| a.binomial.cmp(&b.binomial));
        entries.dedup_by(|a, b| a.binomial == b.binomial);
        Self::assemble(kind, Provenance::Oracle, entries)
    }

    fn assemble(kind: BasisKind, provenance: Provenance, entries: Vec<ReportEntry>) -> Self {
        BasisReport {
            kind,
            provenance,
            count: entries.len(),
            max_degree: entries.iter().map(|e| e.degree).max().unwrap_or(0),
            entries,
        }
    }

    pub fn binomials(&self) -> Vec<Binomial> {
        self.entries.iter().map(|e| e.binomial.clone()).collect()
    }

    pub fn contains(&self, b: &Binomial) -> bool {
        self.entries.binary_search_by(|e| e.binomial.cmp(b)).is_ok()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Fills `true_degree` for every circuit entry.
    pub fn compute_true_degrees(&mut self, g: &Graph) -> Result<()> {
        for e in &mut self.entries {
            if e.circuit != CircuitKind::NotACircuit {
                e.true_degree = Some(true_degree(g, &e.binomial)?);
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Degree summary of a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub count: usize,
    pub min_degree: u64,
    pub max_degree: u64,
    pub histogram: BTreeMap<u64, usize>,
    /// `n − 2` for `n` vertices, an upper bound on universal Gröbner basis
    /// degrees.
    pub vertex_bound: u64,
    pub within_vertex_bound: bool,
}

impl DegreeStats {
    pub fn histogram_csv(&self) -> String {
        let mut out = String::from("degree,count\n");
        for (d, c) in &self.histogram {
            out.push_str(&format!("{d},{c}\n"));
        }
        out
    }
}

pub fn degree_stats(g: &Graph, report: &BasisReport) -> Result<DegreeStats> {
    if report.is_empty() {
        return Err(Error::InvalidParameters("degree statistics of an empty report".into()));
    }
    let mut histogram = BTreeMap::new();
    for e in &report.entries {
        *histogram.entry(e.degree).or_insert(0) += 1;
    }
    let min_degree = *histogram.keys().next().expect("nonempty");
    let max_degree = *histogram.keys().next_back().expect("nonempty");
    let vertex_bound = g.vertex_count().saturating_sub(2) as u64;
    Ok(DegreeStats {
        count: report.len(),
        min_degree,
        max_degree,
        histogram,
        vertex_bound,
        within_vertex_bound: max_degree <= vertex_bound,
    })
}

/// Shared, read-only search context.
struct Ctx<'a> {
    g: &'a Graph,
    cycles: Vec<Cycle>,
    cycles_at: Vec<Vec<usize>>,
    cycle_min_edge: Vec<usize>,
    max_blocks: usize,
    max_degree: Option<u64>,
    max_candidates: u64,
    deadline: Option<Instant>,
    visited: AtomicU64,
}

impl<'a> Ctx<'a> {
    fn new(g: &'a Graph, config: &EnumConfig) -> Result<Self> {
        let n = g.vertex_count();
        let max_len = config.max_cycle_len.unwrap_or(n).max(3);
        if max_len < n && has_cycle_longer_than(g, max_len) {
            return Err(Error::CapExceeded(format!("graph has cycles longer than {max_len}")));
        }
        let count_cap = usize::try_from(config.max_candidates).unwrap_or(usize::MAX);
        let cycles = enumerate_cycles_with(g, max_len, count_cap, config.parallel)?;
        let mut cycles_at = vec![Vec::new(); n];
        for (i, c) in cycles.iter().enumerate() {
            for &v in &c.vertices {
                cycles_at[v].push(i);
            }
        }
        let cycle_min_edge: Vec<usize> = cycles
            .iter()
            .map(|c| *c.edge_cycle.iter().min().expect("cycles are nonempty"))
            .collect();
        // largest minimum edge first, so the search can stop scanning early
        for list in &mut cycles_at {
            list.sort_by_key(|&c| std::cmp::Reverse(cycle_min_edge[c]));
        }
        Ok(Ctx {
            g,
            cycles,
            cycles_at,
            cycle_min_edge,
            max_blocks: config.max_blocks.unwrap_or(n),
            max_degree: config.max_degree,
            max_candidates: config.max_candidates,
            deadline: config.deadline,
            visited: AtomicU64::new(0),
        })
    }

    fn tick(&self) -> Result<()> {
        let k = self.visited.fetch_add(1, AtomicOrdering::Relaxed) + 1;
        if k > self.max_candidates {
            return Err(Error::BudgetExceeded(format!(
                "more than {} search candidates",
                self.max_candidates
            )));
        }
        if k.is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    return Err(Error::BudgetExceeded("time budget".into()));
                }
            }
        }
        Ok(())
    }

    /// The binomial carried by a tree of pieces; `None` when the class
    /// assignment is inconsistent.
    fn build(&self, pieces: &[Piece], cut: &FixedBitSet) -> Result<Option<Binomial>> {
        let m = self.g.edge_count();
        let mut class: Vec<Option<Class>> = vec![None; m];
        let mut expo = vec![0u32; m];
        for p in pieces {
            let start = match p.attach {
                None => Class::Plus,
                Some((v, parent)) => self.class_at(&pieces[parent], v, &class).flip(),
            };
            match p.kind {
                PieceKind::Edge(e) => {
                    class[e] = Some(start);
                    expo[e] = 2;
                }
                PieceKind::Cycle(c) => {
                    let cyc = &self.cycles[c];
                    let len = cyc.len();
                    let k = p.attach.map_or(0, |(v, _)| cyc.position(v).expect("attached on cycle"));
                    let mut cls = start;
                    for t in 0..len {
                        let j = (k + t) % len;
                        let e = cyc.edge_cycle[j];
                        class[e] = Some(cls);
                        expo[e] = 1;
                        if !cut.contains(cyc.vertices[(j + 1) % len]) {
                            cls = cls.flip();
                        }
                    }
                    if cls != start {
                        return Ok(None);
                    }
                }
            }
        }
        let degree: u64 = expo.iter().map(|&x| u64::from(x)).sum::<u64>() / 2;
        if let Some(cap) = self.max_degree {
            if degree > cap {
                return Err(Error::CapExceeded(format!("element of degree {degree} above {cap}")));
            }
        }
        let side = |want: Class| -> Vec<u32> {
            (0..m)
                .map(|e| if class[e] == Some(want) { expo[e] } else { 0 })
                .collect()
        };
        Ok(Binomial::new(self.g, side(Class::Plus), side(Class::Minus)).ok())
    }

    /// Class of `piece`'s edges at the sink `v`.
    fn class_at(&self, piece: &Piece, v: usize, class: &[Option<Class>]) -> Class {
        let e = match piece.kind {
            PieceKind::Edge(e) => e,
            PieceKind::Cycle(c) => {
                let cyc = &self.cycles[c];
                cyc.edge_cycle[cyc.position(v).expect("sink on cycle")]
            }
        };
        class[e].expect("parent classes are assigned first")
    }
}

#[derive(Debug, Clone, Copy)]
enum PieceKind {
    Cycle(usize),
    Edge(usize),
}

#[derive(Debug, Clone, Copy)]
struct Piece {
    kind: PieceKind,
    /// Articulation vertex and parent piece.
    attach: Option<(usize, usize)>,
}

/// Mutable state of one tree growth.
struct Growth {
    pieces: Vec<Piece>,
    cut_count: Vec<usize>,
    undecided: Vec<usize>,
    cut: FixedBitSet,
    used: FixedBitSet,
    queue: Vec<(usize, usize)>,
    root_min: usize,
}

impl Growth {
    fn parity_ok(&self, ctx: &Ctx, p: usize) -> bool {
        match self.pieces[p].kind {
            PieceKind::Edge(_) => true,
            PieceKind::Cycle(c) => (ctx.cycles[c].len() - self.cut_count[p]).is_multiple_of(2),
        }
    }

    fn push_cycle(&mut self, ctx: &Ctx, c: usize, at: usize, parent: usize) {
        let cyc = &ctx.cycles[c];
        let k = cyc.position(at).expect("attached on cycle");
        self.pieces.push(Piece {
            kind: PieceKind::Cycle(c),
            attach: Some((at, parent)),
        });
        self.cut_count.push(1);
        self.undecided.push(cyc.len() - 1);
        let id = self.pieces.len() - 1;
        for t in 1..cyc.len() {
            let w = cyc.vertices[(k + t) % cyc.len()];
            self.used.insert(w);
            self.queue.push((w, id));
        }
    }

    fn pop_cycle(&mut self, ctx: &Ctx, c: usize) {
        let len = ctx.cycles[c].len();
        for _ in 1..len {
            let (w, _) = self.queue.pop().expect("pushed by push_cycle");
            self.used.set(w, false);
        }
        self.pieces.pop();
        self.cut_count.pop();
        self.undecided.pop();
    }

    fn push_edge(&mut self, e: usize, at: usize, far: usize, parent: usize) {
        self.pieces.push(Piece {
            kind: PieceKind::Edge(e),
            attach: Some((at, parent)),
        });
        self.cut_count.push(1);
        self.undecided.push(1);
        self.used.insert(far);
        self.queue.push((far, self.pieces.len() - 1));
    }

    fn pop_edge(&mut self) {
        let (w, _) = self.queue.pop().expect("pushed by push_edge");
        self.used.set(w, false);
        self.pieces.pop();
        self.cut_count.pop();
        self.undecided.pop();
    }
}

fn grow(ctx: &Ctx, st: &mut Growth, head: usize, out: &mut Vec<Binomial>) -> Result<()> {
    ctx.tick()?;
    if head == st.queue.len() {
        if let Some(b) = ctx.build(&st.pieces, &st.cut)? {
            out.push(b);
        }
        return Ok(());
    }
    let (v, p) = st.queue[head];

    // v stays inside its piece; edge endpoints must be articulations
    if let PieceKind::Cycle(_) = st.pieces[p].kind {
        st.undecided[p] -= 1;
        if st.undecided[p] > 0 || st.parity_ok(ctx, p) {
            grow(ctx, st, head + 1, out)?;
        }
        st.undecided[p] += 1;
    }

    // v joins p to exactly one new piece
    st.undecided[p] -= 1;
    st.cut_count[p] += 1;
    st.cut.insert(v);
    if st.undecided[p] > 0 || st.parity_ok(ctx, p) {
        st.used.set(v, false);
        let fits: Vec<usize> = ctx.cycles_at[v]
            .iter()
            .copied()
            .take_while(|&c| ctx.cycle_min_edge[c] > st.root_min)
            .filter(|&c| st.used.is_disjoint(&ctx.cycles[c].vertex_mask))
            .collect();
        st.used.insert(v);
        for c in fits {
            if st.pieces.len() >= ctx.max_blocks {
                return Err(Error::CapExceeded(format!(
                    "support with more than {} blocks",
                    ctx.max_blocks
                )));
            }
            st.push_cycle(ctx, c, v, p);
            let r = grow(ctx, st, head + 1, out);
            st.pop_cycle(ctx, c);
            r?;
        }
        for &(w, e) in ctx.g.neighbors(v) {
            if e <= st.root_min || st.used.contains(w) {
                continue;
            }
            if st.pieces.len() >= ctx.max_blocks {
                return Err(Error::CapExceeded(format!(
                    "support with more than {} blocks",
                    ctx.max_blocks
                )));
            }
            st.push_edge(e, v, w, p);
            let r = grow(ctx, st, head + 1, out);
            st.pop_edge();
            r?;
        }
    }
    st.cut.set(v, false);
    st.cut_count[p] -= 1;
    st.undecided[p] += 1;
    Ok(())
}

#[derive(Debug, Clone, Copy)]
enum Root {
    Cycle(usize),
    Edge(usize),
}

fn grow_from(ctx: &Ctx, root: Root) -> Result<Vec<Binomial>> {
    let n = ctx.g.vertex_count();
    let mut st = Growth {
        pieces: Vec::new(),
        cut_count: vec![0],
        undecided: Vec::new(),
        cut: FixedBitSet::with_capacity(n),
        used: FixedBitSet::with_capacity(n),
        queue: Vec::new(),
        root_min: 0,
    };
    match root {
        Root::Cycle(c) => {
            let cyc = &ctx.cycles[c];
            st.pieces.push(Piece {
                kind: PieceKind::Cycle(c),
                attach: None,
            });
            st.undecided.push(cyc.len());
            st.root_min = ctx.cycle_min_edge[c];
            for &v in &cyc.vertices {
                st.used.insert(v);
                st.queue.push((v, 0));
            }
        }
        Root::Edge(e) => {
            let (a, b) = ctx.g.edge(e);
            st.pieces.push(Piece {
                kind: PieceKind::Edge(e),
                attach: None,
            });
            st.undecided.push(2);
            st.root_min = e;
            for v in [a, b] {
                st.used.insert(v);
                st.queue.push((v, 0));
            }
        }
    }
    let mut out = Vec::new();
    grow(ctx, &mut st, 0, &mut out)?;
    Ok(out)
}

fn collect(parts: Vec<Result<Vec<Binomial>>>) -> Result<Vec<Binomial>> {
    let mut all = Vec::new();
    for p in parts {
        all.extend(p?);
    }
    all.sort();
    all.dedup();
    Ok(all)
}

/// All primitive binomials, checked individually against the primitivity
/// characterization.
fn graver_binomials(g: &Graph, config: &EnumConfig) -> Result<Vec<Binomial>> {
    let ctx = Ctx::new(g, config)?;
    let roots: Vec<Root> = (0..ctx.cycles.len())
        .map(Root::Cycle)
        .chain((0..g.edge_count()).map(Root::Edge))
        .collect();
    let parts = par::map_collect(&roots, config.parallel, |&r| grow_from(&ctx, r));
    collect(parts)
}

/// Even cycles, odd cycle pairs sharing one vertex, and vertex-disjoint odd
/// cycle pairs joined by a path.
fn circuit_binomials(g: &Graph, config: &EnumConfig) -> Result<Vec<Binomial>> {
    let ctx = Ctx::new(g, config)?;
    let n = g.vertex_count();
    let idx: Vec<usize> = (0..ctx.cycles.len()).collect();
    let parts = par::map_collect(&idx, config.parallel, |&i| -> Result<Vec<Binomial>> {
        let mut out = Vec::new();
        let c1 = &ctx.cycles[i];
        let mut cut = FixedBitSet::with_capacity(n);
        let root = Piece {
            kind: PieceKind::Cycle(i),
            attach: None,
        };
        if !c1.is_odd() {
            ctx.tick()?;
            out.extend(ctx.build(&[root], &cut)?);
            return Ok(out);
        }
        for (j, c2) in ctx.cycles.iter().enumerate().skip(i + 1) {
            if !c2.is_odd() {
                continue;
            }
            ctx.tick()?;
            let shared: Vec<usize> = c1.vertex_mask.intersection(&c2.vertex_mask).collect();
            match shared.len() {
                1 => {
                    let v = shared[0];
                    cut.insert(v);
                    let second = Piece {
                        kind: PieceKind::Cycle(j),
                        attach: Some((v, 0)),
                    };
                    out.extend(ctx.build(&[root, second], &cut)?);
                    cut.set(v, false);
                }
                0 => {
                    for path in joining_paths(g, c1, c2) {
                        ctx.tick()?;
                        let mut pieces = vec![root];
                        for (k, &(e, from)) in path.iter().enumerate() {
                            pieces.push(Piece {
                                kind: PieceKind::Edge(e),
                                attach: Some((from, k)),
                            });
                            cut.insert(from);
                        }
                        let (last_e, last_from) = *path.last().expect("paths are nonempty");
                        let end = g.other_end(last_e, last_from).expect("path edge");
                        cut.insert(end);
                        pieces.push(Piece {
                            kind: PieceKind::Cycle(j),
                            attach: Some((end, path.len())),
                        });
                        out.extend(ctx.build(&pieces, &cut)?);
                        cut.clear();
                    }
                }
                _ => {}
            }
        }
        Ok(out)
    });
    collect(parts)
}

/// Paths from `c1` to `c2` with interior outside both cycles, as
/// `(edge, vertex the edge leaves)` steps.
fn joining_paths(g: &Graph, c1: &Cycle, c2: &Cycle) -> Vec<Vec<(usize, usize)>> {
    fn dfs(
        g: &Graph,
        v: usize,
        c1: &Cycle,
        c2: &Cycle,
        seen: &mut FixedBitSet,
        path: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        for &(w, e) in g.neighbors(v) {
            if c2.vertex_mask.contains(w) {
                path.push((e, v));
                out.push(path.clone());
                path.pop();
            } else if !c1.vertex_mask.contains(w) && !seen.contains(w) {
                seen.insert(w);
                path.push((e, v));
                dfs(g, w, c1, c2, seen, path, out);
                path.pop();
                seen.set(w, false);
            }
        }
    }
    let mut out = Vec::new();
    let mut seen = FixedBitSet::with_capacity(g.vertex_count());
    for &a in &c1.vertices {
        dfs(g, a, c1, c2, &mut seen, &mut Vec::new(), &mut out);
    }
    out
}

pub fn enumerate_circuits(g: &Graph, config: &EnumConfig) -> Result<BasisReport> {
    let items = circuit_binomials(g, config)?;
    Ok(BasisReport::structural(g, BasisKind::Circuits, items, config.parallel))
}

/// The Graver basis. Every element produced by the search is re-checked
/// with the primitivity classifier; a failure there is a bug and is
/// reported as [`Error::NotPrimitive`].
pub fn enumerate_graver(g: &Graph, config: &EnumConfig) -> Result<BasisReport> {
    let items = graver_binomials(g, config)?;
    let report = BasisReport::structural(g, BasisKind::Graver, items, config.parallel);
    if report.entries.iter().any(|e| !e.primitive) {
        return Err(Error::NotPrimitive);
    }
    Ok(report)
}

/// The universal Gröbner basis: Graver elements that are mixed.
pub fn enumerate_ugb(g: &Graph, config: &EnumConfig) -> Result<BasisReport> {
    let graver = enumerate_graver(g, config)?;
    let entries: Vec<ReportEntry> = graver.entries.into_iter().filter(|e| e.ugb == Some(true)).collect();
    Ok(BasisReport::assemble(BasisKind::Ugb, Provenance::Structural, entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::binomial_of_walk;
    use crate::families::*;

    fn counts(g: &Graph) -> (usize, usize, usize) {
        let cfg = EnumConfig::default();
        (
            enumerate_circuits(g, &cfg).unwrap().len(),
            enumerate_ugb(g, &cfg).unwrap().len(),
            enumerate_graver(g, &cfg).unwrap().len(),
        )
    }

    #[test]
    fn small_graphs() {
        assert_eq!(counts(&cycle_graph(4).unwrap()), (1, 1, 1));
        assert_eq!(counts(&cycle_graph(5).unwrap()), (0, 0, 0));
        assert_eq!(counts(&complete_graph(4).unwrap()), (3, 3, 3));
        assert_eq!(counts(&complete_graph(5).unwrap()), (30, 30, 30));
        assert_eq!(counts(&bowtie()), (1, 1, 1));
    }

    #[test]
    fn family_three_three() {
        let g = family_graph(3, 3).unwrap();
        let cfg = EnumConfig::default();
        let gr = enumerate_graver(&g, &cfg).unwrap();
        let ugb = enumerate_ugb(&g, &cfg).unwrap();
        let full = binomial_of_walk(&g, &family_full_walk(3, 3).unwrap()).unwrap();
        assert!(gr.contains(&full));
        assert!(!ugb.contains(&full));
        assert_eq!(gr.len(), 10);
        assert_eq!(gr.max_degree, 6);
    }

    #[test]
    fn sequential_matches_parallel() {
        let g = complete_graph(6).unwrap();
        let a = enumerate_graver(&g, &EnumConfig::default()).unwrap();
        let b = enumerate_graver(&g, &EnumConfig::sequential()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn circuits_are_support_minimal_graver_elements() {
        for g in [complete_graph(6).unwrap(), family_graph(3, 3).unwrap()] {
            let cfg = EnumConfig::default();
            let gr = enumerate_graver(&g, &cfg).unwrap();
            let circ = enumerate_circuits(&g, &cfg).unwrap();
            let tagged: Vec<Binomial> = gr
                .entries
                .iter()
                .filter(|e| e.circuit != CircuitKind::NotACircuit)
                .map(|e| e.binomial.clone())
                .collect();
            assert_eq!(tagged, circ.binomials());
        }
    }

    #[test]
    fn caps_are_errors() {
        let g = complete_graph(6).unwrap();
        let tight = EnumConfig {
            max_candidates: 300,
            ..EnumConfig::default()
        };
        assert!(matches!(enumerate_graver(&g, &tight), Err(Error::BudgetExceeded(_))));
        let short = EnumConfig {
            max_cycle_len: Some(4),
            ..EnumConfig::default()
        };
        assert!(matches!(enumerate_graver(&g, &short), Err(Error::CapExceeded(_))));
        let low = EnumConfig {
            max_degree: Some(3),
            ..EnumConfig::default()
        };
        assert!(matches!(enumerate_graver(&g, &low), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn stats_and_csv() {
        let g = complete_graph(5).unwrap();
        let r = enumerate_ugb(&g, &EnumConfig::default()).unwrap();
        let s = degree_stats(&g, &r).unwrap();
        assert_eq!(s.max_degree, 3);
        assert_eq!(s.histogram[&2], 15);
        assert_eq!(s.histogram[&3], 15);
        assert!(s.within_vertex_bound);
        assert_eq!(s.histogram_csv(), "degree,count\n2,15\n3,15\n");
    }
}
