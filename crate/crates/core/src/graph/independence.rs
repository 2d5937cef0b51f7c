//! Independence polynomial counting.
//!
//! The main path branches on a maximum-degree vertex `v` of the surviving
//! vertex set `S`, using `I(S) = I(S - v) + z·I(S - N[v])`, splits `S` into
//! connected components (whose polynomials multiply), closes edgeless sets
//! with binomial rows, and memoizes on `S`. The subset-enumeration oracle in
//! [`independence_polynomial_by_subsets`] shares no code with it.

use std::collections::HashMap;
use std::hash::Hash;
use std::ops::{AddAssign, Mul};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{Graph, GraphError};
use crate::poly::IntPoly;

/// Largest graph accepted by the `2^n` subset oracle.
pub const MAX_SUBSET_ORACLE_VERTICES: usize = 24;

/// Fixed-width vertex bitset.
pub(crate) trait VertexSet: Copy + Eq + Hash {
    fn empty() -> Self;
    fn full(n: usize) -> Self;
    fn is_empty(&self) -> bool;
    fn contains(&self, v: usize) -> bool;
    fn with(self, v: usize) -> Self;
    fn without(self, v: usize) -> Self;
    fn and(self, other: Self) -> Self;
    fn or(self, other: Self) -> Self;
    fn and_not(self, other: Self) -> Self;
    fn count(&self) -> usize;
    fn first(&self) -> Option<usize>;
    fn for_each(&self, f: impl FnMut(usize));
}

impl VertexSet for u64 {
    fn empty() -> Self {
        0
    }
    fn full(n: usize) -> Self {
        super::low_mask(n)
    }
    fn is_empty(&self) -> bool {
        *self == 0
    }
    fn contains(&self, v: usize) -> bool {
        self >> v & 1 == 1
    }
    fn with(self, v: usize) -> Self {
        self | 1 << v
    }
    fn without(self, v: usize) -> Self {
        self & !(1 << v)
    }
    fn and(self, other: Self) -> Self {
        self & other
    }
    fn or(self, other: Self) -> Self {
        self | other
    }
    fn and_not(self, other: Self) -> Self {
        self & !other
    }
    fn count(&self) -> usize {
        self.count_ones() as usize
    }
    fn first(&self) -> Option<usize> {
        (*self != 0).then(|| self.trailing_zeros() as usize)
    }
    fn for_each(&self, mut f: impl FnMut(usize)) {
        let mut s = *self;
        while s != 0 {
            f(s.trailing_zeros() as usize);
            s &= s - 1;
        }
    }
}

impl<const W: usize> VertexSet for [u64; W] {
    fn empty() -> Self {
        [0; W]
    }
    fn full(n: usize) -> Self {
        let mut s = [0; W];
        for (i, w) in s.iter_mut().enumerate() {
            let lo = i * 64;
            if n > lo {
                *w = super::low_mask(n - lo);
            }
        }
        s
    }
    fn is_empty(&self) -> bool {
        self.iter().all(|&w| w == 0)
    }
    fn contains(&self, v: usize) -> bool {
        self[v / 64] >> (v % 64) & 1 == 1
    }
    fn with(mut self, v: usize) -> Self {
        self[v / 64] |= 1 << (v % 64);
        self
    }
    fn without(mut self, v: usize) -> Self {
        self[v / 64] &= !(1 << (v % 64));
        self
    }
    fn and(self, other: Self) -> Self {
        std::array::from_fn(|i| self[i] & other[i])
    }
    fn or(self, other: Self) -> Self {
        std::array::from_fn(|i| self[i] | other[i])
    }
    fn and_not(self, other: Self) -> Self {
        std::array::from_fn(|i| self[i] & !other[i])
    }
    fn count(&self) -> usize {
        self.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn first(&self) -> Option<usize> {
        self.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
    fn for_each(&self, mut f: impl FnMut(usize)) {
        for (i, &w) in self.iter().enumerate() {
            let mut s = w;
            while s != 0 {
                f(i * 64 + s.trailing_zeros() as usize);
                s &= s - 1;
            }
        }
    }
}

/// Coefficient arithmetic needed by the counter.
pub(crate) trait Count: Clone + Zero + One + for<'a> AddAssign<&'a Self> {
    fn mul_ref(&self, other: &Self) -> Self;
    fn into_bigint(self) -> BigInt;
}

impl Count for u128 {
    fn mul_ref(&self, other: &Self) -> Self {
        self.checked_mul(*other).expect("independent-set count fits in u128")
    }
    fn into_bigint(self) -> BigInt {
        BigInt::from(self)
    }
}

impl Count for BigUint {
    fn mul_ref(&self, other: &Self) -> Self {
        Mul::mul(self, other)
    }
    fn into_bigint(self) -> BigInt {
        BigInt::from(self)
    }
}

struct Counter<'a, S: VertexSet, C: Count> {
    rows: &'a [S],
    memo: HashMap<S, Vec<C>>,
}

impl<S: VertexSet, C: Count> Counter<'_, S, C> {
    fn component_of(&self, set: S, start: usize) -> S {
        let mut seen = S::empty().with(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = S::empty();
            frontier.for_each(|v| next = next.or(self.rows[v]));
            next = next.and(set).and_not(seen);
            seen = seen.or(next);
            frontier = next;
        }
        seen
    }

    fn count(&mut self, set: S) -> Vec<C> {
        let Some(start) = set.first() else {
            return vec![C::one()];
        };
        if let Some(hit) = self.memo.get(&set) {
            return hit.clone();
        }
        let comp = self.component_of(set, start);
        let result = if comp != set {
            let a = self.count(comp);
            let b = self.count(set.and_not(comp));
            poly_mul(&a, &b)
        } else {
            let mut best = (start, 0usize);
            set.for_each(|v| {
                let d = self.rows[v].and(set).count();
                if d > best.1 {
                    best = (v, d);
                }
            });
            let (v, degree) = best;
            if degree == 0 {
                binomial_row(set.count())
            } else {
                let mut without = self.count(set.without(v));
                let with = self.count(set.and_not(self.rows[v]).without(v));
                if without.len() < with.len() + 1 {
                    without.resize(with.len() + 1, C::zero());
                }
                for (i, c) in with.iter().enumerate() {
                    without[i + 1] += c;
                }
                without
            }
        };
        self.memo.insert(set, result.clone());
        result
    }
}

fn poly_mul<C: Count>(a: &[C], b: &[C]) -> Vec<C> {
    let mut out = vec![C::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &x.mul_ref(y);
        }
    }
    out
}

fn binomial_row<C: Count>(n: usize) -> Vec<C> {
    let mut row = vec![C::one()];
    for _ in 0..n {
        let mut next = row.clone();
        next.push(C::zero());
        for (i, c) in row.iter().enumerate() {
            next[i + 1] += c;
        }
        row = next;
    }
    row
}

pub(crate) fn count_independent_sets<S: VertexSet, C: Count>(rows: &[S]) -> IntPoly {
    let mut counter = Counter::<S, C> { rows, memo: HashMap::new() };
    let coeffs = counter.count(S::full(rows.len()));
    IntPoly::from_coeffs(coeffs.into_iter().map(Count::into_bigint).collect())
}

impl Graph {
    /// `I_G(z) = Σ a_i z^i` with `a_i` the number of independent `i`-sets.
    pub fn independence_polynomial(&self) -> IntPoly {
        // At most 2^64 independent sets in total, so u128 cannot overflow.
        count_independent_sets::<u64, u128>(self.rows())
    }
}

/// Independence polynomial by testing all `2^n` vertex subsets.
pub fn independence_polynomial_by_subsets(g: &Graph) -> Result<IntPoly, GraphError> {
    let n = g.order();
    if n > MAX_SUBSET_ORACLE_VERTICES {
        return Err(GraphError::OracleCap { n, cap: MAX_SUBSET_ORACLE_VERTICES });
    }
    let rows = g.rows();
    let mut counts = vec![0u64; n + 1];
    for mask in 0u64..(1u64 << n) {
        let mut rest = mask;
        let mut independent = true;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            if rows[v] & mask != 0 {
                independent = false;
                break;
            }
            rest &= rest - 1;
        }
        if independent {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(IntPoly::from_coeffs(counts.into_iter().map(BigInt::from).collect()))
}
