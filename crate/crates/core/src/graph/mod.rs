//! Simple undirected graphs on at most 64 vertices.
//!
//! Row `i` of the adjacency array is a `u64` bitset of the neighbours of
//! vertex `i`. Every constructor keeps the three structural invariants:
//! symmetric rows, empty diagonal, and no bits at or above `n`.

mod canon;
mod graph6;
mod independence;
mod stats;
mod wide;

pub use canon::{canonical_form, canonical_labeling, MAX_CANONICAL_VERTICES};
pub use graph6::Graph6Error;
pub use independence::{independence_polynomial_by_subsets, MAX_SUBSET_ORACLE_VERTICES};
pub use stats::GraphStats;
pub use wide::{WideGraph, MAX_WIDE_VERTICES};

use std::fmt;

/// Largest vertex count of a [`Graph`].
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {n} outside 1..={max}")]
    InvalidOrder { n: usize, max: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("result would need {needed} vertices, cap is {cap}")]
    SizeOverflow { needed: usize, cap: usize },
    #[error("canonical form supports at most {cap} vertices, got {n}")]
    CanonicalCap { n: usize, cap: usize },
    #[error("subset enumeration supports at most {cap} vertices, got {n}")]
    OracleCap { n: usize, cap: usize },
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn bits(mut set: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::InvalidOrder { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn edgeless(n: usize) -> Result<Self, GraphError> {
        Self::new(n)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::new(n)?;
        let all = low_mask(n);
        for (i, row) in g.adj.iter_mut().enumerate() {
            *row = all & !(1 << i);
        }
        Ok(g)
    }

    /// Path `0 - 1 - … - (n-1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::path(n)?;
        if n >= 3 {
            g.add_edge(0, n - 1)?;
        }
        Ok(g)
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::from_edges(leaves + 1, &edges)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking every invariant.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        let g = Graph { n, adj: rows };
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::InvalidOrder { n, max: MAX_VERTICES });
        }
        for i in 0..n {
            let row = g.adj[i];
            if row & !low_mask(n) != 0 {
                let v = (row & !low_mask(n)).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if row >> i & 1 == 1 {
                return Err(GraphError::SelfLoop(i));
            }
            for j in bits(row) {
                if g.adj[j] >> i & 1 == 0 {
                    return Err(GraphError::VertexOutOfRange { v: j, n });
                }
            }
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|&r| r == 0)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
    }

    pub fn complement(&self) -> Graph {
        let all = low_mask(self.n);
        let adj = self.adj.iter().enumerate().map(|(i, &r)| !r & all & !(1 << i)).collect();
        Graph { n: self.n, adj }
    }

    /// Vertices of `self` first, then those of `other` shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::SizeOverflow { needed: n, cap: MAX_VERTICES });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// `self[other]`: vertex `(u, v)` is numbered `u·|other| + v`, and
    /// `(u,v) ~ (u',v')` iff `u ~ u'`, or `u = u'` and `v ~ v'`.
    pub fn lexicographic_product(&self, other: &Graph) -> Result<Graph, GraphError> {
        let m = other.n;
        let n = self.n * m;
        if n > MAX_VERTICES {
            return Err(GraphError::SizeOverflow { needed: n, cap: MAX_VERTICES });
        }
        let block = low_mask(m);
        let mut adj = vec![0u64; n];
        for u in 0..self.n {
            let mut across = 0u64;
            for w in bits(self.adj[u]) {
                across |= block << (w * m);
            }
            for v in 0..m {
                adj[u * m + v] = across | other.adj[v] << (u * m);
            }
        }
        Ok(Graph { n, adj })
    }

    /// Applies a relabelling: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for (v, &pv) in perm.iter().enumerate() {
            adj[pv] = bits(self.adj[v]).fold(0u64, |acc, w| acc | 1 << perm[w]);
        }
        Graph { n: self.n, adj }
    }

    /// True iff a traversal from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        let all = low_mask(self.n);
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let next = bits(frontier).fold(0u64, |acc, v| acc | self.adj[v]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen == all
    }

    /// Number of triangles.
    pub fn triangle_count(&self) -> u64 {
        let mut t = 0u64;
        for (u, v) in self.edges() {
            t += (self.adj[u] & self.adj[v] & !low_mask(v + 1)).count_ones() as u64;
        }
        t
    }

    /// Size of a largest independent set.
    pub fn independence_number(&self) -> usize {
        self.independence_polynomial().degree().unwrap_or(0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} vertices, {:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPoly;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn construction_invariants() {
        assert!(Graph::new(0).is_err());
        assert!(Graph::new(65).is_err());
        let g = Graph::complete(64).unwrap();
        assert_eq!(g.edge_count(), 64 * 63 / 2);
        let mut h = Graph::new(3).unwrap();
        assert_eq!(h.add_edge(1, 1), Err(GraphError::SelfLoop(1)));
        assert_eq!(h.add_edge(0, 3), Err(GraphError::VertexOutOfRange { v: 3, n: 3 }));
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn complement_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.complement(), Graph::new(4).unwrap());
        let p4 = Graph::path(4).unwrap();
        assert_eq!(p4.complement().complement(), p4);
        // P4 is self-complementary: 1-3-0-2 in the complement.
        let c = p4.complement();
        assert_eq!(c.edge_count(), 3);
        assert_eq!(canonical_form(&c).unwrap(), canonical_form(&p4).unwrap());
    }

    #[test]
    fn complement_partitions_pairs() {
        let g = Graph::from_edges(6, &[(0, 1), (2, 5), (3, 4), (1, 5)]).unwrap();
        let c = g.complement();
        for u in 0..6 {
            for v in 0..6 {
                if u != v {
                    assert!(g.has_edge(u, v) ^ c.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn disjoint_union_examples() {
        let k1 = Graph::new(1).unwrap();
        let two = k1.disjoint_union(&k1).unwrap();
        assert_eq!(two, Graph::new(2).unwrap());
        assert!(!two.is_connected());
        let g = Graph::path(2).unwrap().disjoint_union(&Graph::new(2).unwrap()).unwrap();
        assert_eq!(g.independence_polynomial(), p(&[1, 4, 5, 2]));
        let big = Graph::new(40).unwrap();
        assert!(matches!(big.disjoint_union(&big), Err(GraphError::SizeOverflow { needed: 80, .. })));
    }

    #[test]
    fn lexicographic_product_examples() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(k2.lexicographic_product(&k2).unwrap(), Graph::complete(4).unwrap());
        let e = Graph::new(3).unwrap().lexicographic_product(&Graph::new(4).unwrap()).unwrap();
        assert_eq!(e, Graph::new(12).unwrap());
        let p3 = Graph::path(3).unwrap();
        let prod = p3.lexicographic_product(&k2).unwrap();
        // (0,0)~(0,1) inside a copy, (0,v)~(1,v') across, (0,v)!~(2,v').
        assert!(prod.has_edge(0, 1));
        assert!(prod.has_edge(0, 3) && prod.has_edge(1, 2));
        assert!(!prod.has_edge(0, 4));
        assert!(Graph::new(9).unwrap().lexicographic_product(&Graph::new(8).unwrap()).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(Graph::new(1).unwrap().is_connected());
        assert!(!Graph::new(2).unwrap().is_connected());
        assert!(Graph::path(4).unwrap().is_connected());
        assert!(Graph::path(64).unwrap().is_connected());
    }

    #[test]
    fn edges_iterate_upper_triangle() {
        let g = Graph::cycle(4).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(Graph::complete(5).unwrap().triangle_count(), 10);
    }

    #[test]
    fn relabel_preserves_structure() {
        let g = Graph::path(4).unwrap();
        let r = g.relabel(&[2, 0, 3, 1]);
        assert_eq!(r.edge_count(), 3);
        assert!(r.has_edge(2, 0) && r.has_edge(0, 3) && r.has_edge(3, 1));
    }
}
