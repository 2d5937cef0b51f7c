//! Multi-word graphs for lexicographic products beyond 64 vertices.
//!
//! Only the operations needed to check the composition identity on products
//! like `G[G]` with `|G| <= 16` live here.

use num_bigint::BigUint;

use super::independence::{count_independent_sets, VertexSet};
use super::{Graph, GraphError};
use crate::poly::IntPoly;

const WORDS: usize = 4;

/// Largest vertex count of a [`WideGraph`].
pub const MAX_WIDE_VERTICES: usize = 64 * WORDS;

type Row = [u64; WORDS];

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WideGraph {
    n: usize,
    adj: Vec<Row>,
}

impl WideGraph {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::count).sum::<usize>() / 2
    }

    /// Same independence-polynomial algorithm as [`Graph`], with
    /// arbitrary-precision counts.
    pub fn independence_polynomial(&self) -> IntPoly {
        count_independent_sets::<Row, BigUint>(&self.adj)
    }

    /// Converts back to a [`Graph`] when the order allows it.
    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        if self.n > super::MAX_VERTICES {
            return Err(GraphError::SizeOverflow { needed: self.n, cap: super::MAX_VERTICES });
        }
        Graph::from_rows(self.adj.iter().map(|r| r[0]).collect())
    }
}

impl From<&Graph> for WideGraph {
    fn from(g: &Graph) -> Self {
        let adj = g.rows().iter().map(|&r| [r, 0, 0, 0]).collect();
        WideGraph { n: g.order(), adj }
    }
}

impl Graph {
    /// [`Graph::lexicographic_product`] without the 64-vertex cap, for
    /// products of up to 256 vertices.
    pub fn lexicographic_product_wide(&self, other: &Graph) -> Result<WideGraph, GraphError> {
        let m = other.order();
        let n = self.order() * m;
        if n > MAX_WIDE_VERTICES {
            return Err(GraphError::SizeOverflow { needed: n, cap: MAX_WIDE_VERTICES });
        }
        let mut adj = vec![Row::empty(); n];
        for u in 0..self.order() {
            for v in 0..m {
                let mut row = Row::empty();
                for w in 0..self.order() {
                    if self.has_edge(u, w) {
                        for x in 0..m {
                            row = row.with(w * m + x);
                        }
                    }
                }
                for x in 0..m {
                    if other.has_edge(v, x) {
                        row = row.with(u * m + x);
                    }
                }
                adj[u * m + v] = row;
            }
        }
        Ok(WideGraph { n, adj })
    }
}
