//! Simple cycle enumeration in canonical form.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par;

/// A simple cycle stored in canonical form: smallest vertex first, then the
/// smaller of its two cycle neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    /// `edge_cycle[j]` joins `vertices[j]` and `vertices[j + 1]` (cyclically).
    pub edge_cycle: Vec<usize>,
    #[serde(skip)]
    pub vertex_mask: FixedBitSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Cycle {
    /// Builds a cycle from a closed vertex sequence (first vertex not
    /// repeated), canonicalizing rotation and reflection.
    ///
    /// Returns `None` when the sequence is not a simple cycle of `g`.
    pub fn from_vertices(g: &Graph, seq: &[usize]) -> Option<Cycle> {
        let k = seq.len();
        if k < 3 {
            return None;
        }
        let mut mask = FixedBitSet::with_capacity(g.vertex_count());
        for &v in seq {
            if v >= g.vertex_count() || mask.contains(v) {
                return None;
            }
            mask.insert(v);
        }
        let vertices = canonical_rotation(seq);
        let mut edge_cycle = Vec::with_capacity(k);
        for j in 0..k {
            edge_cycle.push(g.edge_between(vertices[j], vertices[(j + 1) % k])?);
        }
        Some(Cycle {
            vertices,
            edge_cycle,
            vertex_mask: mask,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn parity(&self) -> Parity {
        if self.len().is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(&self) -> bool {
        self.len() % 2 == 1
    }

    /// Edge indices, ascending.
    pub fn edge_set(&self) -> Vec<usize> {
        let mut e = self.edge_cycle.clone();
        e.sort_unstable();
        e
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertex_mask.contains(v)
    }

    /// Position of `v` on the cycle.
    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }
}

/// Rotates so the minimum comes first and reflects so the smaller neighbor
/// comes second.
pub fn canonical_rotation(seq: &[usize]) -> Vec<usize> {
    let k = seq.len();
    let start = (0..k).min_by_key(|&i| seq[i]).unwrap_or(0);
    let fwd = seq[(start + 1) % k];
    let bwd = seq[(start + k - 1) % k];
    if fwd <= bwd {
        (0..k).map(|i| seq[(start + i) % k]).collect()
    } else {
        (0..k).map(|i| seq[(start + k - i) % k]).collect()
    }
}

/// All simple cycles of length at most `max_len`, each reported once in
/// canonical form, sorted by length then vertex sequence.
///
/// Fails with [`Error::CapExceeded`] when more than `max_count` cycles exist.
pub fn enumerate_cycles(g: &Graph, max_len: usize, max_count: usize) -> Result<Vec<Cycle>> {
    enumerate_cycles_with(g, max_len, max_count, true)
}

pub(crate) fn enumerate_cycles_with(g: &Graph, max_len: usize, max_count: usize, parallel: bool) -> Result<Vec<Cycle>> {
    if max_len < 3 {
        return Err(Error::InvalidParameters("max_len must be at least 3".into()));
    }
    let starts: Vec<usize> = (0..g.vertex_count()).collect();
    let per_start = par::map_collect(&starts, parallel, |&s| {
        let mut out = Vec::new();
        let mut path = vec![s];
        let mut on_path = FixedBitSet::with_capacity(g.vertex_count());
        on_path.insert(s);
        cycles_from(g, s, max_len, max_count, &mut path, &mut on_path, &mut out)?;
        Ok(out)
    });
    let mut all = Vec::new();
    for r in per_start {
        all.extend(r?);
        if all.len() > max_count {
            return Err(Error::CapExceeded(format!("more than {max_count} cycles")));
        }
    }
    all.sort_by(|a: &Cycle, b: &Cycle| (a.len(), &a.vertices).cmp(&(b.len(), &b.vertices)));
    Ok(all)
}

fn cycles_from(
    g: &Graph,
    s: usize,
    max_len: usize,
    max_count: usize,
    path: &mut Vec<usize>,
    on_path: &mut FixedBitSet,
    out: &mut Vec<Cycle>,
) -> Result<()> {
    let v = *path.last().expect("path starts non-empty");
    for &(w, _) in g.neighbors(v) {
        if w == s {
            // report each cycle once: second vertex below the last one
            if path.len() >= 3 && path[1] < v {
                out.push(Cycle::from_vertices(g, path).expect("path closes a cycle"));
                if out.len() > max_count {
                    return Err(Error::CapExceeded(format!("more than {max_count} cycles")));
                }
            }
        } else if w > s && !on_path.contains(w) && path.len() < max_len {
            path.push(w);
            on_path.insert(w);
            cycles_from(g, s, max_len, max_count, path, on_path, out)?;
            on_path.set(w, false);
            path.pop();
        }
    }
    Ok(())
}

/// Whether `g` has a simple cycle strictly longer than `k`.
pub fn has_cycle_longer_than(g: &Graph, k: usize) -> bool {
    fn search(g: &Graph, s: usize, k: usize, path: &mut Vec<usize>, on: &mut FixedBitSet) -> bool {
        let v = *path.last().unwrap();
        for &(w, _) in g.neighbors(v) {
            if w == s && path.len() > k && path.len() >= 3 {
                return true;
            }
            if w > s && !on.contains(w) {
                path.push(w);
                on.insert(w);
                if search(g, s, k, path, on) {
                    return true;
                }
                on.set(w, false);
                path.pop();
            }
        }
        false
    }
    if k >= g.vertex_count() {
        return false;
    }
    (0..g.vertex_count()).any(|s| {
        let mut on = FixedBitSet::with_capacity(g.vertex_count());
        on.insert(s);
        search(g, s, k, &mut vec![s], &mut on)
    })
}
