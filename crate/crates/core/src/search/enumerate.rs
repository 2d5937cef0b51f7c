//! Isomorph-free generation of graphs with prescribed clique counts.
//!
//! Independent sets of `G` are the cliques of its complement `H`, so a graph
//! with independence polynomial `1 + Nz + a2 z² + a3 z³ + a4 z⁴` is the
//! complement of a graph on `N` vertices with `a2` edges, `a3` triangles,
//! `a4` four-cliques and no five-clique. Those are generated one edge at a
//! time: each level holds one canonical representative per isomorphism class,
//! children add a single edge, and children are merged by canonical form.
//! Clique counts and connectivity of the complement only move one way as
//! edges are added, which makes them safe pruning rules.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::SearchError;
use crate::graph::{bits, canonical_labeling, Graph, MAX_CANONICAL_VERTICES};
use crate::poly::IntPoly;
use num_traits::ToPrimitive;

/// Largest vertex count handled by [`enumerate_complements`].
pub const MAX_ENUM_VERTICES: usize = 12;

/// Target counts for the complement `H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConstraints {
    pub vertices: usize,
    pub edges: usize,
    pub triangles: u64,
    pub k4: u64,
    /// Reject any five-clique.
    pub k5_free: bool,
    /// Keep only `H` whose complement is connected.
    pub require_co_connected: bool,
}

impl EnumConstraints {
    /// Constraints for the complements of graphs with independence
    /// polynomial `target`, which must have degree 1 to 4 and constant term 1.
    pub fn from_target(target: &IntPoly, require_co_connected: bool) -> Result<Self, SearchError> {
        let bad = || SearchError::UnsupportedTarget(target.to_string());
        let degree = target.degree().ok_or_else(bad)?;
        if !(1..=4).contains(&degree) || target.coeff(0) != 1.into() {
            return Err(bad());
        }
        let c = |i: usize| target.coeff(i).to_u64().ok_or_else(bad);
        let vertices = usize::try_from(c(1)?).map_err(|_| bad())?;
        if vertices == 0 {
            return Err(bad());
        }
        Ok(EnumConstraints {
            vertices,
            edges: usize::try_from(c(2)?).map_err(|_| bad())?,
            triangles: c(3)?,
            k4: c(4)?,
            k5_free: true,
            require_co_connected,
        })
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Node {
    graph: Graph,
    triangles: u64,
    k4: u64,
}

fn co_connected(h: &Graph) -> bool {
    h.complement().is_connected()
}

/// Edge count inside `set`.
fn edges_within(h: &Graph, set: u64) -> u64 {
    bits(set).map(|v| u64::from((h.neighbors(v) & set).count_ones())).sum::<u64>() / 2
}

fn triangles_within(h: &Graph, set: u64) -> bool {
    bits(set).any(|v| {
        let nv = h.neighbors(v) & set;
        bits(nv).any(|w| h.neighbors(w) & nv != 0)
    })
}

fn canonical(graph: &Graph) -> Graph {
    canonical_labeling(graph).expect("order within canonical cap").0
}

/// Children of `node` with one more edge that stay within the budgets.
fn children(node: &Node, c: &EnumConstraints) -> Vec<Node> {
    let h = &node.graph;
    let n = h.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if h.has_edge(u, v) {
                continue;
            }
            let common = h.neighbors(u) & h.neighbors(v);
            let triangles = node.triangles + u64::from(common.count_ones());
            if triangles > c.triangles {
                continue;
            }
            let k4 = node.k4 + edges_within(h, common);
            if k4 > c.k4 || (c.k5_free && k4 > node.k4 && triangles_within(h, common)) {
                continue;
            }
            let mut graph = h.clone();
            graph.add_edge(u, v).expect("vertices in range");
            if c.require_co_connected && !co_connected(&graph) {
                continue;
            }
            out.push(Node { graph: canonical(&graph), triangles, k4 });
        }
    }
    out
}

fn next_level(level: &[Node], c: &EnumConstraints) -> Vec<Node> {
    let merged: BTreeSet<Node> =
        level.par_iter().map(|node| children(node, c)).flatten_iter().collect::<Vec<_>>().into_iter().collect();
    merged.into_iter().collect()
}

fn check_order(n: usize) -> Result<(), SearchError> {
    if n > MAX_ENUM_VERTICES.min(MAX_CANONICAL_VERTICES) {
        return Err(SearchError::CapExceeded { n, cap: MAX_ENUM_VERTICES });
    }
    Ok(())
}

/// Every graph `H` up to isomorphism on `vertices` vertices with exactly
/// `edges` edges, `triangles` triangles and `k4` four-cliques, with no
/// five-clique if `k5_free` is set, and with connected complement if requested. Returned in
/// canonical labelling, sorted by graph6.
pub fn enumerate_complements(c: &EnumConstraints) -> Result<Vec<Graph>, SearchError> {
    let n = c.vertices;
    check_order(n)?;
    if c.edges > n * (n - 1) / 2 {
        return Err(SearchError::TooManyEdges { n, edges: c.edges });
    }
    let root = Graph::new(n)?;
    if c.require_co_connected && !co_connected(&root) {
        return Ok(Vec::new());
    }
    let mut level = vec![Node { graph: root, triangles: 0, k4: 0 }];
    for _ in 0..c.edges {
        level = next_level(&level, c);
        if level.is_empty() {
            break;
        }
    }
    let mut out: Vec<Graph> = level
        .into_iter()
        .filter(|node| node.triangles == c.triangles && node.k4 == c.k4)
        .map(|node| node.graph)
        .collect();
    out.sort_by_cached_key(Graph::to_graph6);
    Ok(out)
}

/// Every graph up to isomorphism with independence polynomial `target`,
/// restricted to connected graphs if `connected` is set. Each graph is
/// checked against `target` before it is returned.
pub fn enumerate_for_poly(target: &IntPoly, connected: bool) -> Result<Vec<Graph>, SearchError> {
    let c = EnumConstraints::from_target(target, connected)?;
    if c.edges > c.vertices * (c.vertices - 1) / 2 {
        return Ok(Vec::new());
    }
    let mut out: Vec<Graph> = enumerate_complements(&c)?.into_iter().map(|h| canonical(&h.complement())).collect();
    for g in &out {
        assert_eq!(&g.independence_polynomial(), target, "enumeration produced {}", g.to_graph6());
    }
    out.sort_by_cached_key(Graph::to_graph6);
    Ok(out)
}

/// All graphs on `n` vertices up to isomorphism, by edge count then graph6.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>, SearchError> {
    check_order(n)?;
    let c = EnumConstraints {
        vertices: n,
        edges: n * (n - 1) / 2,
        triangles: u64::MAX,
        k4: u64::MAX,
        k5_free: false,
        require_co_connected: false,
    };
    let mut level = vec![Node { graph: Graph::new(n)?, triangles: 0, k4: 0 }];
    let mut out = Vec::new();
    for _ in 0..c.edges {
        let next = next_level(&level, &c);
        let mut graphs: Vec<Graph> = level.into_iter().map(|node| node.graph).collect();
        graphs.sort_by_cached_key(Graph::to_graph6);
        out.extend(graphs);
        level = next;
    }
    out.extend(level.into_iter().map(|node| node.graph));
    Ok(out)
}
