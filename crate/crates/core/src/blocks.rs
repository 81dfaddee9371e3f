//! Biconnected components (blocks), cut vertices and cut edges.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::graph::Graph;

/// Block decomposition of a graph or of an edge-induced subgraph.
///
/// Blocks are sorted by their smallest edge index; edges inside a block are
/// sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<usize>>,
    /// Vertex set of each block, ascending.
    pub block_vertices: Vec<Vec<usize>>,
    pub cut_vertices: BTreeSet<usize>,
    pub cut_edges: BTreeSet<usize>,
    /// Edges of the block-cut tree as `(block index, cut vertex)` pairs.
    pub block_tree: Vec<(usize, usize)>,
    /// Number of connected components spanned by the edge set.
    pub components: usize,
}

impl BlockDecomposition {
    /// Index of the block containing edge `e`, if `e` is in the decomposed
    /// edge set.
    pub fn block_of_edge(&self, e: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&e).is_ok())
    }

    /// Blocks containing vertex `v`.
    pub fn blocks_at(&self, v: usize) -> Vec<usize> {
        self.block_vertices
            .iter()
            .enumerate()
            .filter(|(_, vs)| vs.binary_search(&v).is_ok())
            .map(|(i, _)| i)
            .collect()
    }

    /// A block is a cycle when it has at least three edges and as many
    /// vertices as edges (a biconnected graph with |E| = |V|).
    pub fn is_cycle(&self, block: usize) -> bool {
        let k = self.blocks[block].len();
        k >= 3 && self.block_vertices[block].len() == k
    }

    pub fn is_cut_edge_block(&self, block: usize) -> bool {
        self.blocks[block].len() == 1
    }
}

/// Decomposes the whole graph.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let all: Vec<usize> = (0..g.edge_count()).collect();
    block_decomposition_of_edges(g, &all)
}

/// Decomposes the subgraph formed by `edge_set` (vertices not touched by the
/// set are ignored). Iterative Hopcroft–Tarjan over an edge stack.
pub fn block_decomposition_of_edges(g: &Graph, edge_set: &[usize]) -> BlockDecomposition {
    let n = g.vertex_count();
    let mut in_set = vec![false; g.edge_count()];
    for &e in edge_set {
        in_set[e] = true;
    }
    let sub_adj: Vec<Vec<(usize, usize)>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().filter(|&(_, e)| in_set[e]).collect())
        .collect();

    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut raw_blocks: Vec<Vec<usize>> = Vec::new();
    let mut components = 0;

    for root in 0..n {
        if disc[root] != UNSEEN || sub_adj[root].is_empty() {
            continue;
        }
        components += 1;
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, edge used to reach it, next neighbor position)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(frame) = stack.last_mut() {
            let (v, parent_edge, pos) = *frame;
            if pos < sub_adj[v].len() {
                frame.2 += 1;
                let (w, e) = sub_adj[v][pos];
                if e == parent_edge {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(f) = edge_stack.pop() {
                            block.push(f);
                            if f == parent_edge {
                                break;
                            }
                        }
                        block.sort_unstable();
                        raw_blocks.push(block);
                    }
                }
            }
        }
    }

    raw_blocks.sort_by_key(|b| b[0]);
    let block_vertices: Vec<Vec<usize>> = raw_blocks
        .iter()
        .map(|b| {
            let set: BTreeSet<usize> = b
                .iter()
                .flat_map(|&e| {
                    let (u, v) = g.edge(e);
                    [u, v]
                })
                .collect();
            set.into_iter().collect()
        })
        .collect();

    let mut count = vec![0usize; n];
    for vs in &block_vertices {
        for &v in vs {
            count[v] += 1;
        }
    }
    let cut_vertices: BTreeSet<usize> = (0..n).filter(|&v| count[v] >= 2).collect();
    let cut_edges: BTreeSet<usize> = raw_blocks.iter().filter(|b| b.len() == 1).map(|b| b[0]).collect();
    let mut block_tree = Vec::new();
    for (i, vs) in block_vertices.iter().enumerate() {
        for &v in vs {
            if cut_vertices.contains(&v) {
                block_tree.push((i, v));
            }
        }
    }

    BlockDecomposition {
        blocks: raw_blocks,
        block_vertices,
        cut_vertices,
        cut_edges,
        block_tree,
        components,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_graph, family_graph};
    use crate::graph::parse_graph;

    fn bowtie() -> Graph {
        parse_graph("0 1\n1 2\n2 0\n0 3\n3 4\n4 0").unwrap()
    }

    #[test]
    fn k4_is_one_block() {
        let d = block_decomposition(&complete_graph(4).unwrap());
        assert_eq!(d.blocks.len(), 1);
        assert!(d.cut_vertices.is_empty());
        assert!(!d.is_cycle(0));
    }

    #[test]
    fn bowtie_two_blocks() {
        let d = block_decomposition(&bowtie());
        assert_eq!(d.blocks, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert_eq!(d.cut_vertices.iter().copied().collect::<Vec<_>>(), vec![0]);
        assert!(d.is_cycle(0) && d.is_cycle(1));
        assert_eq!(d.block_tree, vec![(0, 0), (1, 0)]);
    }

    #[test]
    fn path_edges_are_cut_edges() {
        // two triangles joined by a path of length 2
        let g = parse_graph("0 1\n1 2\n2 0\n2 3\n3 4\n4 5\n5 6\n6 4").unwrap();
        let d = block_decomposition(&g);
        assert_eq!(d.blocks.len(), 4);
        assert_eq!(d.cut_edges.iter().copied().collect::<Vec<_>>(), vec![3, 4]);
        assert_eq!(d.cut_vertices.iter().copied().collect::<Vec<_>>(), vec![2, 3, 4]);
    }

    #[test]
    fn family_3_3_blocks() {
        let d = block_decomposition(&family_graph(3, 3).unwrap());
        assert_eq!(d.blocks.len(), 4);
        assert_eq!(d.cut_vertices.len(), 3);
        assert!(d.cut_edges.is_empty());
        assert!((0..4).all(|b| d.is_cycle(b)));
    }

    #[test]
    fn subgraph_decomposition_counts_components() {
        let g = bowtie();
        let d = block_decomposition_of_edges(&g, &[0, 4]);
        assert_eq!(d.components, 2);
        assert_eq!(d.blocks, vec![vec![0], vec![4]]);
        assert!(d.cut_vertices.is_empty());
    }
}
