//! Cointervality of spanning subgraphs given as bitmasks over a host's edge list.

use crate::graph::{Edge, Graph, VertexSet};
use crate::interval::is_interval;

/// Edge subsets of at most this many host edges can be scanned exhaustively.
pub const HARD_EDGE_LIMIT: usize = 28;

pub(crate) struct HostEdges {
    n: usize,
    edges: Vec<Edge>,
    // for edge i: (j, mask of host edges joining edge i to edge j) over j > i with disjoint endpoints
    disjoint: Vec<Vec<(usize, u32)>>,
}

impl HostEdges {
    pub(crate) fn new(n: usize, edges: Vec<Edge>) -> Self {
        assert!(edges.len() <= HARD_EDGE_LIMIT);
        let index = |e: Edge| {
            let e = (e.0.min(e.1), e.0.max(e.1));
            edges.iter().position(|&f| f == e)
        };
        let mut disjoint = vec![Vec::new(); edges.len()];
        for (i, &(a, b)) in edges.iter().enumerate() {
            for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                let cross = [(a, c), (a, d), (b, c), (b, d)]
                    .into_iter()
                    .filter_map(index)
                    .fold(0u32, |m, k| m | 1 << k);
                disjoint[i].push((j, cross));
            }
        }
        HostEdges { n, edges, disjoint }
    }

    pub(crate) fn len(&self) -> usize {
        self.edges.len()
    }

    pub(crate) fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Whether the spanning subgraph with edge set `mask` is cointerval.
    pub(crate) fn is_cointerval(&self, mask: u32) -> bool {
        // cointerval graphs have no induced 2K_2 (their complements have no induced C_4)
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            for &(j, cross) in &self.disjoint[i] {
                if mask >> j & 1 == 1 && mask & cross == 0 {
                    return false;
                }
            }
        }
        // a clique-cap overflow means more cliques than vertices, hence not interval
        is_interval(&self.complement_on_support(mask))
            .map(|r| r.is_interval())
            .unwrap_or(false)
    }

    // Complement of the subgraph restricted to the endpoints of `mask`. Isolated
    // vertices only add universal vertices to the complement, which never affects
    // intervality.
    fn complement_on_support(&self, mask: u32) -> Graph {
        let mut support = VertexSet::empty();
        let mut bits = mask;
        while bits != 0 {
            let (u, v) = self.edges[bits.trailing_zeros() as usize];
            support = support.with(u).with(v);
            bits &= bits - 1;
        }
        if support.is_empty() {
            return Graph::empty(1).expect("K_1");
        }
        let mut label = [0usize; 64];
        for (k, v) in support.iter().enumerate() {
            label[v] = k;
        }
        let mut adj = vec![0u64; support.len()];
        let mut bits = mask;
        while bits != 0 {
            let (u, v) = self.edges[bits.trailing_zeros() as usize];
            adj[label[u]] |= 1 << label[v];
            adj[label[v]] |= 1 << label[u];
            bits &= bits - 1;
        }
        debug_assert!(support.max().is_none_or(|m| m < self.n));
        Graph::from_masks(adj).complement()
    }
}

/// Ascending bit positions of `mask`.
pub(crate) fn bit_positions(mask: u32) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        (rest != 0).then(|| {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            i
        })
    })
}

/// Lexicographic order on the ascending index lists of two masks.
pub(crate) fn lex_cmp(a: u32, b: u32) -> std::cmp::Ordering {
    bit_positions(a).cmp(bit_positions(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeSet;
    use crate::interval::is_cointerval;

    #[test]
    fn matches_direct_test() {
        let g = crate::generators::Family::Cycle(5).build().unwrap().complement();
        let host = HostEdges::new(g.n(), g.edges().collect());
        for mask in 0u32..1 << host.len() {
            let part = EdgeSet::new(
                g.n(),
                bit_positions(mask).map(|i| host.edges()[i]),
            )
            .unwrap();
            assert_eq!(
                host.is_cointerval(mask),
                is_cointerval(&Graph::spanning(&part)).unwrap(),
                "mask {mask:b}"
            );
        }
    }

    #[test]
    fn lex_order_on_index_lists() {
        use std::cmp::Ordering::*;
        assert_eq!(lex_cmp(0b011, 0b101), Less); // [0,1] < [0,2]
        assert_eq!(lex_cmp(0b001, 0b011), Less); // prefix first
        assert_eq!(lex_cmp(0b100, 0b011), Greater);
    }
}
