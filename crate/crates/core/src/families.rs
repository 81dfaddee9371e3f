//! Graph generators and the closed walks used by the degree examples.
//!
//! `family_graph(s, l)` indexing:
//! - vertices `0..s` form the central cycle, edge `i` joins `i` and `(i + 1) % s`;
//! - the outer cycle hung at central vertex `i` uses vertices
//!   `s + i·(l − 1) + j` for `j < l − 1` and edges `s + i·l + t` for `t < l`,
//!   traversed `i → s + i·(l−1) → … → s + i·(l−1) + l − 2 → i`.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `K_n` with edges in lexicographic pair order.
pub fn complete_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!("K_n needs n >= 3, got {n}")));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges)
}

/// The cycle `C_n` with edge `i` joining `i` and `(i + 1) % n`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!("C_n needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Two triangles `0-1-2` and `0-3-4` sharing vertex 0.
pub fn bowtie() -> Graph {
    Graph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).expect("bowtie is valid")
}

/// A central `s`-cycle with an odd `l`-cycle glued at each central vertex.
pub fn family_graph(s: usize, l: usize) -> Result<Graph> {
    check_family(s, l)?;
    let n = s + s * (l - 1);
    let mut edges: Vec<(usize, usize)> = (0..s).map(|i| (i, (i + 1) % s)).collect();
    for i in 0..s {
        let base = s + i * (l - 1);
        let mut prev = i;
        for j in 0..l - 1 {
            edges.push((prev, base + j));
            prev = base + j;
        }
        edges.push((prev, i));
    }
    Graph::new(n, edges)
}

fn check_family(s: usize, l: usize) -> Result<()> {
    if s < 3 {
        return Err(Error::InvalidParameters(format!("s must be >= 3, got {s}")));
    }
    if l < 3 || l.is_multiple_of(2) {
        return Err(Error::InvalidParameters(format!("l must be odd and >= 3, got {l}")));
    }
    Ok(())
}

fn outer_cycle(s: usize, l: usize, i: usize) -> impl Iterator<Item = usize> {
    (0..l).map(move |t| s + i * l + t)
}

/// Closed walk through every edge of `family_graph(s, l)`: each outer cycle
/// followed by the next central edge. Degree `s(l + 1)/2`.
pub fn family_full_walk(s: usize, l: usize) -> Result<Vec<usize>> {
    check_family(s, l)?;
    let mut walk = Vec::with_capacity(s * (l + 1));
    for i in 0..s {
        walk.extend(outer_cycle(s, l, i));
        walk.push(i);
    }
    Ok(walk)
}

/// Closed walk over the central cycle and the outer cycles at central
/// vertices `0..s − 2` (the last two are skipped).
pub fn family_mixed_walk(s: usize, l: usize) -> Result<Vec<usize>> {
    check_family(s, l)?;
    let mut walk = Vec::new();
    for i in 0..s {
        if i + 2 < s {
            walk.extend(outer_cycle(s, l, i));
        }
        walk.push(i);
    }
    Ok(walk)
}

/// Closed walk of the longest circuit: the outer cycles at vertices 0 and 1
/// joined by the length `s − 1` central path `0, s−1, …, 2, 1`.
pub fn family_longest_circuit_walk(s: usize, l: usize) -> Result<Vec<usize>> {
    check_family(s, l)?;
    let mut walk: Vec<usize> = outer_cycle(s, l, 0).collect();
    walk.extend((1..s).rev());
    walk.extend(outer_cycle(s, l, 1));
    walk.extend(1..s);
    Ok(walk)
}
