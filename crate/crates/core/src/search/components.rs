use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::SearchError;
use crate::poly::IntPoly;

/// Shape of a factorization of the segment quartic into component
/// polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseKind {
    /// Four linear factors `1 + n_i z`.
    FourComponents,
    /// `(1 + n1 z)(1 + n2 z)(1 + n3 z + m z²)`.
    ThreeComponents,
    /// `(1 + n1 z + m1 z²)(1 + n2 z + m2 z²)`.
    TwoComponents22,
    /// `(1 + n1 z)(1 + n2 z + m1 z² + m2 z³)`.
    TwoComponents13,
}

impl CaseKind {
    pub const ALL: [CaseKind; 4] =
        [CaseKind::FourComponents, CaseKind::ThreeComponents, CaseKind::TwoComponents22, CaseKind::TwoComponents13];

    pub fn cli_name(&self) -> &'static str {
        match self {
            CaseKind::FourComponents => "4comp",
            CaseKind::ThreeComponents => "3comp",
            CaseKind::TwoComponents22 => "2comp-22",
            CaseKind::TwoComponents13 => "2comp-13",
        }
    }

    /// Column names of the parameter tuple, in table order.
    pub fn columns(&self) -> [&'static str; 4] {
        match self {
            CaseKind::FourComponents => ["n1", "n2", "n3", "n4"],
            CaseKind::ThreeComponents => ["m", "n1", "n2", "n3"],
            CaseKind::TwoComponents22 => ["m1", "m2", "n1", "n2"],
            CaseKind::TwoComponents13 => ["n1", "m2", "n2", "m1"],
        }
    }
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for CaseKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CaseKind::ALL
            .into_iter()
            .find(|c| c.cli_name() == s)
            .ok_or_else(|| format!("unknown case {s:?}; expected one of 4comp, 3comp, 2comp-22, 2comp-13"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentSolution {
    pub case: CaseKind,
    pub k: u32,
    pub params: [u64; 4],
    #[serde(serialize_with = "serialize_polys")]
    pub factors: Vec<IntPoly>,
}

fn serialize_polys<S: serde::Serializer>(factors: &[IntPoly], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(factors.iter().map(|f| f.to_string()))
}

impl ComponentSolution {
    /// Factors sorted by coefficient vector.
    pub fn factor_multiset(&self) -> Vec<IntPoly> {
        let mut f = self.factors.clone();
        f.sort();
        f
    }
}

/// `1 + 16z + 20k·z² + 8k²·z³ + k³·z⁴`.
pub fn segment_quartic(k: u32) -> IntPoly {
    let k = i64::from(k);
    IntPoly::from_i64(&[1, 16, 20 * k, 8 * k * k, k * k * k])
}

fn lin(n: u64) -> IntPoly {
    IntPoly::from_coeffs(vec![1, n])
}

fn quad(n: u64, m: u64) -> IntPoly {
    IntPoly::from_coeffs(vec![1, n, m])
}

fn cubic(n: u64, m1: u64, m2: u64) -> IntPoly {
    IntPoly::from_coeffs(vec![1, n, m1, m2])
}

/// All positive integer solutions of the coefficient equations for `case`.
///
/// Rows are in lexicographic order of the parameter tuple. Tuples that differ
/// only by swapping two interchangeable components are both kept; use
/// [`dedup_symmetric`] to collapse them. For four linear factors the
/// parameters are listed nondecreasing, since every order gives the same
/// factors.
pub fn solve_components(case: CaseKind, k: u32) -> Result<Vec<ComponentSolution>, SearchError> {
    if !(1..=4).contains(&k) {
        return Err(SearchError::BadSegmentIndex(k));
    }
    let kk = u64::from(k);
    let (e2, e3, e4) = (20 * kk, 8 * kk * kk, kk * kk * kk);
    let mut out = Vec::new();
    let mut push = |params: [u64; 4], factors: Vec<IntPoly>| {
        out.push(ComponentSolution { case, k, params, factors });
    };
    match case {
        CaseKind::FourComponents => {
            for n1 in 1..=13u64 {
                for n2 in n1..=13 {
                    for n3 in n2..=13 {
                        let Some(n4) = 16u64.checked_sub(n1 + n2 + n3) else { continue };
                        if n4 < n3 {
                            continue;
                        }
                        let n = [n1, n2, n3, n4];
                        let pairs: u64 =
                            (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).map(|(i, j)| n[i] * n[j]).sum();
                        let triples = n1 * n2 * n3 + n1 * n2 * n4 + n1 * n3 * n4 + n2 * n3 * n4;
                        if pairs == e2 && triples == e3 && n1 * n2 * n3 * n4 == e4 {
                            push(n, n.iter().map(|&x| lin(x)).collect());
                        }
                    }
                }
            }
        }
        CaseKind::ThreeComponents => {
            for m in 1..=e4 {
                for n1 in 1..=14u64 {
                    for n2 in 1..=15 - n1 {
                        let n3 = 16 - n1 - n2;
                        if m * n1 * n2 == e4
                            && n1 * n2 * n3 + m * (n1 + n2) == e3
                            && n1 * n2 + n1 * n3 + n2 * n3 + m == e2
                        {
                            push([m, n1, n2, n3], vec![lin(n1), lin(n2), quad(n3, m)]);
                        }
                    }
                }
            }
        }
        CaseKind::TwoComponents22 => {
            for m1 in 1..=e4 {
                for m2 in 1..=e4 {
                    for n1 in 1..=15u64 {
                        let n2 = 16 - n1;
                        if m1 * m2 == e4 && n1 * m2 + n2 * m1 == e3 && n1 * n2 + m1 + m2 == e2 {
                            push([m1, m2, n1, n2], vec![quad(n1, m1), quad(n2, m2)]);
                        }
                    }
                }
            }
        }
        CaseKind::TwoComponents13 => {
            for n1 in 1..=15u64 {
                let n2 = 16 - n1;
                for m2 in 1..=e4 {
                    for m1 in 1..=e3 {
                        if n1 * m2 == e4 && n1 * m1 + m2 == e3 && n1 * n2 + m1 == e2 {
                            push([n1, m2, n2, m1], vec![lin(n1), cubic(n2, m1, m2)]);
                        }
                    }
                }
            }
        }
    }
    out.sort_by_key(|s| s.params);
    Ok(out)
}

/// Keeps the first row of each group with the same factor multiset.
pub fn dedup_symmetric(solutions: Vec<ComponentSolution>) -> Vec<ComponentSolution> {
    let mut seen = std::collections::HashSet::new();
    solutions.into_iter().filter(|s| seen.insert(s.factor_multiset())).collect()
}
