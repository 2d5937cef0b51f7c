//! Exact classification of independence attractors.
//!
//! The decision is made on integer coefficients alone:
//!
//! 1. an edgeless graph has attractor `{-1}`;
//! 2. a complete graph (independence number 1) has attractor `{0}`;
//! 3. a graph with independence number `n`, `n²` vertices and reduced
//!    polynomial `P` satisfying `(k/2)·P(z) + 1 = T_n((k/2)·z + 1)` for some
//!    `k ∈ {1, 2, 3, 4}` has attractor `[-4/k, 0]`;
//! 4. everything else is reported as general.
//!
//! Case 3 is also sufficient, not just necessary: `P` is then affinely
//! conjugate to `T_n`, whose Julia set is `[-1, 1]`, so the Julia set of `P`
//! is the affine image `[-4/k, 0]`. Since `-1` is never a multiple root in
//! that case, the attractor and the Julia set coincide.
//!
//! The multiplicity of `-1` as a root of `I_G` fixes the relation between the
//! attractor and the fractal: multiplicity 0 or 1 gives equality, while a
//! multiple root makes `-1` a super-attracting fixed point and the attractor
//! is the disjoint union of the fractal with the backward orbit of `-1`.
//!
//! Numeric backward orbits only corroborate a segment verdict, never decide.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::chebyshev::{candidate, conjugate_coefficients, segment_left_end, ConjugationParams, SEGMENT_KS};
use crate::dynamics::{backward_orbit, hausdorff_to_segment, DynError, SOLVER_TOL};
use crate::graph::Graph;
use crate::poly::IntPoly;

/// Depth of the corroborating backward orbit.
pub const CORROBORATION_DEPTH: usize = 10;
/// Point cap of the corroborating backward orbit.
pub const CORROBORATION_CAP: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AttractorClass {
    /// Complete graphs: `{0}`.
    PointZero,
    /// Edgeless graphs: `{-1}`.
    PointMinusOne,
    /// `[-4/k, 0]`.
    Segment {
        k: u32,
    },
    General,
}

impl AttractorClass {
    pub fn name(&self) -> &'static str {
        match self {
            AttractorClass::PointZero => "PointZero",
            AttractorClass::PointMinusOne => "PointMinusOne",
            AttractorClass::Segment { .. } => "Segment",
            AttractorClass::General => "General",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FractalRelation {
    /// `-1` is not a root of `I_G`.
    Equal,
    /// `-1` is a simple root of `I_G`.
    EqualSimpleRoot,
    /// `-1` is a multiple root: attractor = fractal ⊔ backward orbit of `-1`.
    DisjointUnion,
}

impl FractalRelation {
    pub fn from_multiplicity(m: usize) -> Self {
        match m {
            0 => FractalRelation::Equal,
            1 => FractalRelation::EqualSimpleRoot,
            _ => FractalRelation::DisjointUnion,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FractalRelation::Equal => "equal",
            FractalRelation::EqualSimpleRoot => "equal-simple-root",
            FractalRelation::DisjointUnion => "disjoint-union",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct NumericCorroboration {
    pub depth: usize,
    pub cloud_size: usize,
    pub thinned: bool,
    pub hausdorff_to_segment: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AttractorReport {
    pub alpha: usize,
    pub vertices: usize,
    pub klass: AttractorClass,
    pub fractal_relation: FractalRelation,
    pub minus_one_multiplicity: usize,
    pub connected: bool,
    pub independence_polynomial: IntPoly,
    pub numeric: Option<NumericCorroboration>,
}

impl AttractorReport {
    pub fn k(&self) -> Option<u32> {
        match self.klass {
            AttractorClass::Segment { k } => Some(k),
            _ => None,
        }
    }

    /// `[-4/k, 0]` for segment classes.
    pub fn segment(&self) -> Option<(f64, f64)> {
        self.k().map(|k| (segment_left_end(k), 0.0))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    /// Run the backward-orbit corroboration for segment classes.
    pub corroborate: bool,
    pub depth: usize,
    pub cap: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { corroborate: true, depth: CORROBORATION_DEPTH, cap: CORROBORATION_CAP }
    }
}

impl ReportOptions {
    pub fn exact_only() -> Self {
        ReportOptions { corroborate: false, ..Self::default() }
    }
}

/// The segment index `k` when the reduced polynomial matches a conjugate of
/// `T_alpha` and the vertex count is `alpha²`.
pub fn segment_index(reduced: &IntPoly, alpha: usize, vertices: usize) -> Option<u32> {
    if alpha < 2 || vertices != alpha * alpha {
        return None;
    }
    SEGMENT_KS.into_iter().find(|&k| candidate(alpha as u32, k).ok().flatten().is_some_and(|c| &c == reduced))
}

pub fn attractor_report(g: &Graph) -> Result<AttractorReport, DynError> {
    attractor_report_with(g, &ReportOptions::default())
}

pub fn attractor_report_with(g: &Graph, options: &ReportOptions) -> Result<AttractorReport, DynError> {
    let poly = g.independence_polynomial();
    let alpha = poly.degree().unwrap_or(0);
    let vertices = g.order();
    let minus_one_multiplicity = poly.multiplicity_at(-1);
    let reduced = poly.reduced()?;
    let klass = if g.is_edgeless() {
        AttractorClass::PointMinusOne
    } else if alpha == 1 {
        AttractorClass::PointZero
    } else if let Some(k) = segment_index(&reduced, alpha, vertices) {
        AttractorClass::Segment { k }
    } else {
        AttractorClass::General
    };
    let numeric = match klass {
        AttractorClass::Segment { k } if options.corroborate => {
            let levels = backward_orbit(&reduced, Complex64::new(-1.0, 0.0), options.depth, options.cap, SOLVER_TOL)?;
            levels
                .last()
                .map(|last| -> Result<_, DynError> {
                    Ok(NumericCorroboration {
                        depth: options.depth,
                        cloud_size: last.cloud.len(),
                        thinned: levels.iter().any(|l| l.thinned),
                        hausdorff_to_segment: hausdorff_to_segment(&last.cloud, -segment_left_end(k))?,
                    })
                })
                .transpose()?
        }
        _ => None,
    };
    Ok(AttractorReport {
        alpha,
        vertices,
        klass,
        fractal_relation: FractalRelation::from_multiplicity(minus_one_multiplicity),
        minus_one_multiplicity,
        connected: g.is_connected(),
        independence_polynomial: poly,
        numeric,
    })
}

/// The would-be complement statistics of a graph whose reduced polynomial is
/// the `k = 5` conjugate of `T_n`, against the triangle lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K5Exclusion {
    pub n: u32,
    pub vertices: BigRational,
    pub edges: BigRational,
    pub triangles: BigRational,
    pub bound: BigRational,
    pub violated: bool,
}

/// Complement of such a graph would have `N = n²` vertices, `E = a_2` edges
/// and `T = a_3` triangles (`T = 0` when `n = 2`), and every graph satisfies
/// `T >= E(4E − N²)/(3N)`; `violated` reports that the bound fails.
pub fn exclude_k5(n: u32) -> K5Exclusion {
    let params = ConjugationParams::from_segment_index(5, n.max(2)).expect("a = 5/2 is positive");
    let a = conjugate_coefficients(&params);
    let vertices = BigRational::from_integer(BigInt::from(n) * n);
    let edges = a.get(1).cloned().unwrap_or_else(BigRational::zero);
    let triangles = a.get(2).cloned().unwrap_or_else(BigRational::zero);
    let four = BigRational::from_integer(4.into());
    let three = BigRational::from_integer(3.into());
    let bound = &edges * (&four * &edges - &vertices * &vertices) / (three * &vertices);
    let violated = triangles < bound;
    K5Exclusion { n, vertices, edges, triangles, bound, violated }
}

/// True exactly for `(1+z)^n − 1` with `n >= 2`.
pub fn circle_check(reduced: &IntPoly) -> bool {
    let Some(n) = reduced.degree() else {
        return false;
    };
    if n < 2 || !reduced.coeff(0).is_zero() {
        return false;
    }
    (1..=n).all(|i| reduced.coeff(i) == BigInt::from(binomial(n as u64, i as u64)))
}

/// `(1+z)^n`.
pub(crate) fn binomial_poly(n: usize) -> IntPoly {
    IntPoly::from_coeffs((0..=n).map(|i| BigInt::from(binomial(n as u64, i as u64))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn k4k4k1() -> Graph {
        let k4 = Graph::complete(4).unwrap();
        k4.disjoint_union(&k4).unwrap().disjoint_union(&Graph::new(1).unwrap()).unwrap()
    }

    #[test]
    fn union_of_cliques_is_unit_segment() {
        let r = attractor_report(&k4k4k1()).unwrap();
        assert_eq!(r.klass, AttractorClass::Segment { k: 4 });
        assert_eq!(r.segment(), Some((-1.0, 0.0)));
        assert_eq!(r.minus_one_multiplicity, 1);
        assert_eq!(r.fractal_relation, FractalRelation::EqualSimpleRoot);
        assert!(!r.connected);
        let numeric = r.numeric.unwrap();
        assert_eq!(numeric.depth, 10);
        assert!(numeric.hausdorff_to_segment <= 0.05);
    }

    #[test]
    fn points() {
        let r = attractor_report(&Graph::complete(7).unwrap()).unwrap();
        assert_eq!(r.klass, AttractorClass::PointZero);
        let r = attractor_report(&Graph::new(5).unwrap()).unwrap();
        assert_eq!(r.klass, AttractorClass::PointMinusOne);
        assert_eq!(r.minus_one_multiplicity, 5);
        assert!(circle_check(&r.independence_polynomial.reduced().unwrap()));
    }

    #[test]
    fn edge_plus_two_isolated() {
        let g = Graph::from_edges(4, &[(0, 1)]).unwrap();
        let r = attractor_report(&g).unwrap();
        assert_eq!(r.independence_polynomial, IntPoly::from_i64(&[1, 4, 5, 2]));
        assert_eq!(r.klass, AttractorClass::General);
        assert_eq!(r.minus_one_multiplicity, 2);
        assert_eq!(r.fractal_relation, FractalRelation::DisjointUnion);
    }

    #[test]
    fn square_of_quadratic() {
        // 2K2 has I = (1+2z)^2 = 1+4z+4z^2; C4 has 1+4z+2z^2.
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let r = attractor_report_with(&two_k2, &ReportOptions::exact_only()).unwrap();
        assert_eq!(r.klass, AttractorClass::Segment { k: 4 });
        assert!(r.numeric.is_none());
        let r = attractor_report(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(r.klass, AttractorClass::Segment { k: 2 });
        assert!(r.numeric.unwrap().hausdorff_to_segment <= 0.05);
        // 4 vertices, alpha 2, a_2 = k for every k.
        for k in 1..=4 {
            let p = IntPoly::from_i64(&[0, 4, k]);
            assert_eq!(segment_index(&p, 2, 4), Some(k as u32));
        }
        let p = IntPoly::from_i64(&[0, 16, 80, 128, 64]);
        assert_eq!(segment_index(&p, 4, 16), Some(4));
        assert_eq!(segment_index(&p, 4, 15), None);
    }

    #[test]
    fn k5_exclusion_records() {
        let e = exclude_k5(2);
        assert_eq!((e.vertices.clone(), e.edges.clone(), e.triangles.clone()), (rat(4, 1), rat(5, 1), rat(0, 1)));
        assert_eq!(e.bound, rat(5, 3));
        assert!(e.violated);
        for n in 2..=50u32 {
            let e = exclude_k5(n);
            let nn = BigRational::from_integer((n * n).into());
            let one = BigRational::one();
            assert_eq!(e.edges, rat(5, 12) * &nn * (&nn - &one));
            if n >= 3 {
                assert_eq!(e.triangles, rat(5, 72) * &nn * (&nn - &one) * (&nn - rat(4, 1)));
            }
            assert!(e.violated, "n = {n}");
        }
    }

    #[test]
    fn circle_examples() {
        assert!(circle_check(&(&binomial_poly(3) - &IntPoly::one())));
        assert!(!circle_check(&IntPoly::from_i64(&[0, 16, 20, 8, 1])));
        assert!(!circle_check(&IntPoly::from_i64(&[0, 5])));
        assert!(!circle_check(&(&binomial_poly(1) - &IntPoly::one())));
    }
}
