//! Vertex, edge, triangle and edge-local statistics.
//!
//! For an edge `uv`, `n0`, `n1` and `n2` count the other vertices adjacent
//! to neither, exactly one, or both endpoints. Summed over edges they give
//! `T1` (induced `P2 ∪ K1`), `2·T2` (induced 3-vertex paths) and `3·T`
//! (triangles). Triangles and 4-cliques are counted separately by direct
//! bitset intersection, so the identities linking them are real checks.

use num_rational::BigRational;
use serde::Serialize;

use super::{bits, low_mask, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub vertices: u64,
    pub edges: u64,
    pub triangles: u64,
    pub k4: u64,
    pub degrees: Vec<u32>,
    pub sum_deg_sq: u64,
    /// Induced copies of `P2 ∪ K1`.
    pub t1: u64,
    /// Three-vertex paths not contained in a triangle.
    pub t2: u64,
}

impl GraphStats {
    /// `T1 + 2·T2 + 3·T = (N − 2)·E`.
    pub fn edge_partition_identity_holds(&self) -> bool {
        let lhs = i128::from(self.t1) + 2 * i128::from(self.t2) + 3 * i128::from(self.triangles);
        lhs == (i128::from(self.vertices) - 2) * i128::from(self.edges)
    }

    /// `2·T2 + 6·T = Σ deg² − 2·E`.
    pub fn degree_identity_holds(&self) -> bool {
        2 * self.t2 + 6 * self.triangles + 2 * self.edges == self.sum_deg_sq
    }

    /// The lower bound `E(4E − N²)/(3N)` on the triangle count, meaningful
    /// when `4E > N²`.
    pub fn triangle_lower_bound(&self) -> BigRational {
        let n = self.vertices as i64;
        let e = self.edges as i64;
        BigRational::new((e * (4 * e - n * n)).into(), (3 * n).into())
    }

    /// Whether `T >= E(4E − N²)/(3N)` holds, vacuously true unless `4E > N²`.
    pub fn triangle_bound_holds(&self) -> bool {
        let (n, e, t) = (self.vertices as i128, self.edges as i128, self.triangles as i128);
        4 * e <= n * n || 3 * n * t >= e * (4 * e - n * n)
    }
}

impl Graph {
    pub fn stats(&self) -> GraphStats {
        let n = self.order();
        let rows = self.rows();
        let degrees: Vec<u32> = (0..n).map(|v| self.degree(v)).collect();
        let sum_deg_sq = degrees.iter().map(|&d| u64::from(d) * u64::from(d)).sum();
        let (mut triangles, mut k4) = (0u64, 0u64);
        let (mut t1, mut sum_n1) = (0u64, 0u64);
        let mut edges = 0u64;
        for (u, v) in self.edges() {
            edges += 1;
            let others = low_mask(n) & !(1 << u) & !(1 << v);
            let nu = rows[u] & others;
            let nv = rows[v] & others;
            t1 += u64::from((others & !(nu | nv)).count_ones());
            sum_n1 += u64::from((nu ^ nv).count_ones());
            let common_above = rows[u] & rows[v] & !low_mask(v + 1);
            triangles += u64::from(common_above.count_ones());
            for w in bits(common_above) {
                k4 += u64::from((common_above & rows[w] & !low_mask(w + 1)).count_ones());
            }
        }
        GraphStats { vertices: n as u64, edges, triangles, k4, degrees, sum_deg_sq, t1, t2: sum_n1 / 2 }
    }
}
