//! Canonical labelling by partition refinement and individualization.
//!
//! The search tree is the usual one: refine an ordered partition to an
//! equitable one, individualize each vertex of the first smallest
//! non-singleton cell in turn, recurse. Every leaf is a discrete partition,
//! i.e. a relabelling, and the canonical form is the lexicographically
//! largest relabelled adjacency matrix over all leaves.
//!
//! Two prunings keep the tree small on the sparse, highly symmetric graphs
//! seen during enumeration:
//! - twins: if `u` and `v` share a cell and `N(u) \ {v} = N(v) \ {u}`, the
//!   transposition `(u v)` is an automorphism fixing the current node, so
//!   only one of them is individualized;
//! - automorphisms: two leaves with the same relabelled graph yield an
//!   automorphism; children in the same orbit of the automorphisms that fix
//!   the current prefix pointwise lead to identical subtrees.

use super::{bits, Graph, GraphError};

/// Canonical forms are computed for graphs of at most this many vertices.
pub const MAX_CANONICAL_VERTICES: usize = 16;

type Matrix = [u16; MAX_CANONICAL_VERTICES];

/// Ordered partition stored as a vertex sequence plus cell start markers.
#[derive(Clone)]
struct Partition {
    order: Vec<usize>,
    /// `cell_start[i]` is true when position `i` begins a cell.
    cell_start: Vec<bool>,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut cell_start = vec![false; n];
        cell_start[0] = true;
        Partition { order: (0..n).collect(), cell_start }
    }

    fn cells(&self) -> Vec<(usize, usize)> {
        let n = self.order.len();
        let mut out = Vec::new();
        let mut start = 0;
        for i in 1..=n {
            if i == n || self.cell_start[i] {
                out.push((start, i));
                start = i;
            }
        }
        out
    }

    fn is_discrete(&self) -> bool {
        self.cell_start.iter().all(|&b| b)
    }

    fn cell_mask(&self, (a, b): (usize, usize)) -> u64 {
        self.order[a..b].iter().fold(0u64, |m, &v| m | 1 << v)
    }

    /// Refines to the coarsest equitable partition finer than `self`.
    /// Cells split by neighbour count into the splitter, in ascending count
    /// order, which keeps the procedure label-invariant.
    fn refine(&mut self, rows: &[u64]) {
        loop {
            let cells = self.cells();
            let mut changed = false;
            for &splitter in &cells {
                let smask = self.cell_mask(splitter);
                for &(a, b) in self.cells().iter() {
                    if b - a == 1 {
                        continue;
                    }
                    let mut keyed: Vec<(u32, usize)> =
                        self.order[a..b].iter().map(|&v| ((rows[v] & smask).count_ones(), v)).collect();
                    if keyed.iter().all(|k| k.0 == keyed[0].0) {
                        continue;
                    }
                    keyed.sort_unstable();
                    for (i, &(_, v)) in keyed.iter().enumerate() {
                        self.order[a + i] = v;
                    }
                    for i in (a + 1)..b {
                        if keyed[i - a].0 != keyed[i - a - 1].0 {
                            self.cell_start[i] = true;
                        }
                    }
                    changed = true;
                }
                if changed {
                    break;
                }
            }
            if !changed {
                return;
            }
        }
    }

    /// Moves `v` to the front of its cell and makes it a singleton.
    fn individualize(&mut self, (a, _b): (usize, usize), v: usize) {
        let pos = self.order.iter().position(|&x| x == v).expect("vertex in partition");
        self.order.swap(a, pos);
        let tail_start = a + 1;
        // Keep the remainder of the cell in ascending vertex order; the
        // relative order within a cell carries no information.
        let end = (tail_start..self.order.len()).find(|&i| self.cell_start[i]).unwrap_or(self.order.len());
        self.order[tail_start..end].sort_unstable();
        if tail_start < self.order.len() {
            self.cell_start[tail_start] = true;
        }
    }
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    best: Option<(Matrix, Vec<usize>)>,
    first: Option<(Matrix, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Relabelled adjacency: vertex at position `i` of the discrete
    /// partition gets label `i`.
    fn leaf_matrix(&self, order: &[usize]) -> (Matrix, Vec<usize>) {
        let mut label = vec![0usize; self.n];
        for (i, &v) in order.iter().enumerate() {
            label[v] = i;
        }
        let mut m = [0u16; MAX_CANONICAL_VERTICES];
        for (i, &v) in order.iter().enumerate() {
            m[i] = bits(self.rows[v]).fold(0u16, |acc, w| acc | 1 << (self.n - 1 - label[w]));
        }
        (m, label)
    }

    fn record_automorphism(&mut self, a: &[usize], b: &[usize]) {
        // Both leaves map vertices to labels; v goes to the vertex carrying
        // v's label under the other leaf.
        let mut inv_b = vec![0usize; self.n];
        for (v, &l) in b.iter().enumerate() {
            inv_b[l] = v;
        }
        let perm: Vec<usize> = (0..self.n).map(|v| inv_b[a[v]]).collect();
        if perm.iter().enumerate().any(|(i, &p)| i != p) && !self.automorphisms.contains(&perm) {
            self.automorphisms.push(perm);
        }
    }

    fn visit_leaf(&mut self, order: &[usize]) {
        let (m, label) = self.leaf_matrix(order);
        match &self.first {
            None => {
                self.first = Some((m, label.clone()));
                self.best = Some((m, label));
                return;
            }
            Some((fm, fl)) if *fm == m => {
                let fl = fl.clone();
                self.record_automorphism(&fl, &label);
            }
            _ => {}
        }
        let (bm, bl) = self.best.as_ref().expect("best set with first");
        if m > *bm {
            self.best = Some((m, label));
        } else if m == *bm {
            let bl = bl.clone();
            self.record_automorphism(&bl, &label);
        }
    }

    /// Orbit representatives among `cands` under automorphisms fixing
    /// `prefix` pointwise.
    fn orbit_filter(&self, prefix: &[usize], cands: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for g in &self.automorphisms {
            if prefix.iter().all(|&v| g[v] == v) {
                for (v, &gv) in g.iter().enumerate() {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, gv));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut seen = Vec::new();
        let mut out = Vec::new();
        for &c in cands {
            let r = find(&mut parent, c);
            if !seen.contains(&r) {
                seen.push(r);
                out.push(c);
            }
        }
        out
    }

    fn descend(&mut self, mut part: Partition, prefix: &mut Vec<usize>) {
        part.refine(self.rows);
        if part.is_discrete() {
            self.visit_leaf(&part.order);
            return;
        }
        let target = part
            .cells()
            .into_iter()
            .filter(|(a, b)| b - a > 1)
            .min_by_key(|(a, b)| b - a)
            .expect("non-discrete partition has a large cell");
        let cell: Vec<usize> = part.order[target.0..target.1].to_vec();
        // Twin pruning.
        let mut cands: Vec<usize> = Vec::new();
        for &v in &cell {
            let twin = cands.iter().any(|&u| {
                let (nu, nv) = (self.rows[u] & !(1 << v), self.rows[v] & !(1 << u));
                nu == nv
            });
            if !twin {
                cands.push(v);
            }
        }
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cands {
            if tried.iter().any(|&t| self.same_orbit(prefix, t, v)) {
                continue;
            }
            tried.push(v);
            let mut child = part.clone();
            child.individualize(target, v);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    fn same_orbit(&self, prefix: &[usize], a: usize, b: usize) -> bool {
        self.orbit_filter(prefix, &[a, b]).len() == 1
    }
}

/// Canonical relabelling of `g`: returns the canonical graph and the map
/// `vertex -> canonical label`.
pub fn canonical_labeling(g: &Graph) -> Result<(Graph, Vec<usize>), GraphError> {
    let n = g.order();
    if n > MAX_CANONICAL_VERTICES {
        return Err(GraphError::CanonicalCap { n, cap: MAX_CANONICAL_VERTICES });
    }
    let mut search = Search { rows: g.rows(), n, best: None, first: None, automorphisms: Vec::new() };
    search.descend(Partition::unit(n), &mut Vec::new());
    let (_, label) = search.best.expect("search visits at least one leaf");
    Ok((g.relabel(&label), label))
}

/// Isomorphism-invariant byte string: the graph6 encoding of the canonical
/// relabelling. Equal iff the graphs are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>, GraphError> {
    canonical_labeling(g).map(|(c, _)| c.to_graph6().into_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        (0u64..1 << pairs.len()).map(move |mask| {
            let edges: Vec<_> = bits(mask).map(|k| pairs[k]).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == used.len() {
                out.push(cur.clone());
                return;
            }
            for v in 0..used.len() {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    fn isomorphic_brute(a: &Graph, b: &Graph) -> bool {
        a.order() == b.order()
            && a.edge_count() == b.edge_count()
            && permutations(a.order()).iter().any(|p| a.relabel(p) == *b)
    }

    #[test]
    fn path_relabelings_agree() {
        let p4 = Graph::path(4).unwrap();
        let form = canonical_form(&p4).unwrap();
        for perm in permutations(4) {
            assert_eq!(canonical_form(&p4.relabel(&perm)).unwrap(), form);
        }
        assert_ne!(canonical_form(&Graph::star(3).unwrap()).unwrap(), form);
    }

    #[test]
    fn class_counts_small_orders() {
        // Isomorphism classes of graphs on 4, 5 and 6 vertices.
        for (n, classes) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)] {
            let forms: HashSet<Vec<u8>> = all_labeled(n).map(|g| canonical_form(&g).unwrap()).collect();
            assert_eq!(forms.len(), classes, "n = {n}");
        }
    }

    #[test]
    fn canonical_graph_is_isomorphic_and_fixed() {
        for g in all_labeled(5).step_by(37) {
            let (c, label) = canonical_labeling(&g).unwrap();
            assert_eq!(g.relabel(&label), c);
            assert_eq!(canonical_labeling(&c).unwrap().0, c);
        }
    }

    #[test]
    fn symmetric_sparse_graphs() {
        // Perfect matching plus isolated vertices: large automorphism group.
        let edges: Vec<_> = (0..6).map(|i| (2 * i, 2 * i + 1)).collect();
        let g = Graph::from_edges(16, &edges).unwrap();
        let shuffled = g.relabel(&[5, 9, 0, 15, 3, 12, 7, 1, 14, 2, 10, 6, 11, 4, 13, 8]);
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&shuffled).unwrap());
        assert!(canonical_form(&Graph::new(17).unwrap()).is_err());
        let e = Graph::new(16).unwrap();
        assert_eq!(canonical_labeling(&e).unwrap().0, e);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1usize..=max_n).prop_flat_map(|n| {
            prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |flags| {
                let mut g = Graph::new(n).unwrap();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if flags[k] {
                            g.add_edge(i, j).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn invariant_under_relabeling(g in arb_graph(16), seed in any::<u64>()) {
            let n = g.order();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&g.relabel(&perm)).unwrap());
        }

        #[test]
        fn equal_forms_iff_isomorphic(a in arb_graph(6), b in arb_graph(6)) {
            let same = canonical_form(&a).unwrap() == canonical_form(&b).unwrap();
            prop_assert_eq!(same, isomorphic_brute(&a, &b));
        }
    }
}
