//! Realizability of the segment quartics by disconnected graphs.
//!
//! A disconnected graph's polynomial is the product of its components', so
//! each factorization of the quartic into at least two positive factors is a
//! candidate component split. A split is realized when every factor is the
//! polynomial of some connected graph.

use std::collections::HashMap;

use num_integer::binomial;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::components::segment_quartic;
use super::enumerate::{enumerate_for_poly, MAX_ENUM_VERTICES};
use super::SearchError;
use crate::graph::Graph;
use crate::poly::{factorizations_positive, IntPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Realizable,
    NotRealizable,
    /// Some factor has more vertices than the enumeration handles.
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorRealization {
    pub factor: IntPoly,
    pub multiplicity: usize,
    /// Connected graphs with this polynomial, or `None` past the
    /// enumeration cap.
    pub graphs: Option<Vec<Graph>>,
}

/// One split of the quartic into components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub factors: Vec<FactorRealization>,
    /// Disconnected graphs up to isomorphism realizing this split, when
    /// every factor was enumerated.
    pub count: Option<u128>,
    pub verdict: Verdict,
}

impl Realization {
    pub fn product(&self) -> IntPoly {
        let mut p = IntPoly::one();
        for f in &self.factors {
            for _ in 0..f.multiplicity {
                p = &p * &f.factor;
            }
        }
        p
    }
}

fn connected_realizations(factor: &IntPoly) -> Result<Option<Vec<Graph>>, SearchError> {
    let n = factor.coeff(1).to_usize().unwrap_or(usize::MAX);
    if factor.degree() == Some(1) {
        return Ok(Some(vec![Graph::complete(n)?]));
    }
    if n > MAX_ENUM_VERTICES {
        return Ok(None);
    }
    enumerate_for_poly(factor, true).map(Some)
}

/// Every split of `1 + 16z + 20k·z² + 8k²·z³ + k³·z⁴` into two or more
/// positive factors, with the connected graphs realizing each factor.
///
/// Identical components are unordered, so a factor with `r` realizations used
/// `c` times contributes `C(r + c − 1, c)` choices.
pub fn realize_disconnected(k: u32) -> Result<Vec<Realization>, SearchError> {
    if !(1..=4).contains(&k) {
        return Err(SearchError::BadSegmentIndex(k));
    }
    let splits = factorizations_positive(&segment_quartic(k), 4)?;
    let mut cache: HashMap<IntPoly, Option<Vec<Graph>>> = HashMap::new();
    let mut out = Vec::new();
    for split in splits.into_iter().filter(|s| s.len() >= 2) {
        let mut factors: Vec<FactorRealization> = Vec::new();
        for f in split {
            match factors.last_mut() {
                Some(last) if last.factor == f => last.multiplicity += 1,
                _ => {
                    let graphs = match cache.get(&f) {
                        Some(g) => g.clone(),
                        None => {
                            let g = connected_realizations(&f)?;
                            cache.insert(f.clone(), g.clone());
                            g
                        }
                    };
                    factors.push(FactorRealization { factor: f, multiplicity: 1, graphs });
                }
            }
        }
        let empty = factors.iter().any(|f| f.graphs.as_ref().is_some_and(Vec::is_empty));
        let count: Option<u128> = factors
            .iter()
            .map(|f| {
                let r = f.graphs.as_ref()?.len() as u128;
                let c = f.multiplicity as u128;
                Some(if r == 0 { 0 } else { binomial(r + c - 1, c) })
            })
            .product();
        let verdict = if empty {
            Verdict::NotRealizable
        } else if count.is_some() {
            Verdict::Realizable
        } else {
            Verdict::Undetermined
        };
        out.push(Realization { factors, count, verdict });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_k_has_no_split() {
        assert!(realize_disconnected(1).unwrap().is_empty());
        assert!(realize_disconnected(2).unwrap().is_empty());
        assert!(realize_disconnected(5).is_err());
    }

    #[test]
    fn segment_splits() {
        let k4 = realize_disconnected(4).unwrap();
        assert_eq!(k4.len(), 1);
        assert_eq!(k4[0].factors[0].factor, IntPoly::from_i64(&[1, 8, 8]));
        assert_eq!(k4[0].factors[0].multiplicity, 2);
        assert_eq!(k4[0].factors[0].graphs.as_ref().unwrap().len(), 69);
        assert_eq!(k4[0].count, Some(2415));
        assert_eq!(k4[0].verdict, Verdict::Realizable);

        let k3 = realize_disconnected(3).unwrap();
        let verdicts: Vec<Verdict> = k3.iter().map(|r| r.verdict).collect();
        use Verdict::*;
        assert_eq!(verdicts, vec![Realizable, Undetermined, Undetermined, Realizable]);
        let pair = &k3[3];
        assert_eq!(pair.factors[0].factor, IntPoly::from_i64(&[1, 4, 3]));
        assert_eq!(pair.factors[1].factor, IntPoly::from_i64(&[1, 12, 9]));
        assert_eq!(pair.count, Some(641));
    }

    #[test]
    fn products_match() {
        for k in [3, 4] {
            for r in realize_disconnected(k).unwrap() {
                assert_eq!(r.product(), segment_quartic(k));
            }
        }
    }
}
