//! Self-check suite behind `indatt verify`.
//!
//! Each check exercises one module against an independent oracle or a closed
//! form and takes at most a few seconds in an optimized build.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

use crate::chebyshev::{
    cheb_derivative_at_one, chebyshev, conjugacy_holds, conjugate_coefficients, segment_candidates, ConjugationParams,
};
use crate::classifier::{
    attractor_report_with, binomial_poly, circle_check, exclude_k5, AttractorClass, FractalRelation, ReportOptions,
};
use crate::dynamics::{
    backward_orbit, classify_fixed_point, hausdorff, hausdorff_to_segment, roots, FixedPointKind, PointCloud,
    SOLVER_TOL,
};
use crate::graph::{canonical_form, independence_polynomial_by_subsets, Graph};
use crate::poly::{factorizations_positive, product, IntPoly};
use crate::search::{
    all_graphs, enumerate_complements, realize_disconnected, segment_quartic, solve_components, CaseKind,
    EnumConstraints,
};

#[derive(Debug, Clone)]
pub struct Check {
    pub module: &'static str,
    pub name: &'static str,
    pub passed: bool,
    /// Failure message, empty on success.
    pub detail: String,
    pub elapsed: Duration,
}

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn small_graphs() -> Vec<Graph> {
    (1..=6).flat_map(|n| all_graphs(n).expect("n within cap")).collect()
}

fn graph6_round_trip() -> Outcome {
    ensure(Graph::from_graph6("Ch").map_err(|e| e.to_string())? == Graph::path(4).unwrap(), || "Ch is not P4".into())?;
    let c4 = Graph::from_graph6("Cr").map_err(|e| e.to_string())?;
    ensure(canonical_form(&c4) == canonical_form(&Graph::cycle(4).unwrap()), || "Cr is not C4".into())?;
    for g in small_graphs() {
        let text = g.to_graph6();
        let back = Graph::from_graph6(&text).map_err(|e| e.to_string())?;
        ensure(back == g, || format!("{text} does not round-trip"))?;
    }
    Ok(())
}

fn independence_oracle() -> Outcome {
    for g in small_graphs() {
        let fast = g.independence_polynomial();
        let slow = independence_polynomial_by_subsets(&g).map_err(|e| e.to_string())?;
        ensure(fast == slow, || format!("{}: {fast} vs {slow}", g.to_graph6()))?;
    }
    ensure(Graph::path(4).unwrap().independence_polynomial().to_string() == "1+4z+3z^2", || "I(P4)".into())
}

fn class_counts() -> Outcome {
    let counts: Vec<usize> = (1..=6).map(|n| all_graphs(n).map(|v| v.len()).unwrap_or(0)).collect();
    ensure(counts == [1, 2, 4, 11, 34, 156], || format!("class counts {counts:?}"))?;
    let mut forms: Vec<Vec<u8>> = small_graphs().iter().map(|g| canonical_form(g).unwrap()).collect();
    forms.sort();
    forms.dedup();
    ensure(forms.len() == 208, || format!("{} distinct canonical forms", forms.len()))
}

fn composition_identity() -> Outcome {
    let mut fixtures =
        vec![Graph::path(4).unwrap(), Graph::complete(2).unwrap(), Graph::cycle(5).unwrap(), Graph::star(3).unwrap()];
    fixtures.extend(all_graphs(4).unwrap());
    for g in fixtures {
        let i = g.independence_polynomial();
        let lhs = g.lexicographic_product(&g).map_err(|e| e.to_string())?.independence_polynomial();
        let rhs = i.compose(&i.reduced().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("{}: {lhs} vs {rhs}", g.to_graph6()))?;
    }
    Ok(())
}

fn stats_identities() -> Outcome {
    for g in small_graphs() {
        let s = g.stats();
        ensure(s.edge_partition_identity_holds(), || format!("edge partition identity fails on {}", g.to_graph6()))?;
        ensure(s.degree_identity_holds(), || format!("degree identity fails on {}", g.to_graph6()))?;
        ensure(s.triangle_bound_holds(), || format!("triangle bound fails on {}", g.to_graph6()))?;
        ensure(s.triangles == g.triangle_count(), || format!("triangle count mismatch on {}", g.to_graph6()))?;
    }
    Ok(())
}

fn poly_text_and_factors() -> Outcome {
    for text in ["1+4z+3z^2", "1+16z+20z^2+8z^3+z^4", "-3z+2z^5", "0", "7"] {
        let p: IntPoly = text.parse().map_err(|e| format!("{text}: {e}"))?;
        ensure(p.to_string() == text, || format!("{text} prints as {p}"))?;
    }
    for k in 1..=4 {
        let q = segment_quartic(k);
        for split in factorizations_positive(&q, 4).map_err(|e| e.to_string())? {
            ensure(product(&split) == q, || format!("split of {q} does not multiply back"))?;
        }
    }
    Ok(())
}

fn chebyshev_conjugacy() -> Outcome {
    for n in 2..=8u32 {
        for (k, c) in segment_candidates(n).map_err(|e| e.to_string())? {
            let params = ConjugationParams::from_segment_index(k, n).map_err(|e| e.to_string())?;
            ensure(conjugacy_holds(&c, &params), || format!("n={n} k={k}: {c} is not conjugate"))?;
        }
        let mut d = chebyshev(n);
        for m in 0..=n {
            let exact = cheb_derivative_at_one(n, m).map_err(|e| e.to_string())?;
            ensure(d.eval_int(&BigInt::from(1)) == exact, || format!("T_{n}^({m})(1)"))?;
            d = d.derivative();
        }
    }
    for k in 1..=4i64 {
        let params = ConjugationParams::new(BigRational::new(k.into(), 2.into()), 4).map_err(|e| e.to_string())?;
        let got = conjugate_coefficients(&params);
        let want: Vec<BigRational> =
            [16, 20 * k, 8 * k * k, k * k * k].iter().map(|&v| BigRational::from_integer(v.into())).collect();
        ensure(got == want, || format!("k={k}: {got:?}"))?;
    }
    Ok(())
}

fn dynamics_closed_forms() -> Outcome {
    let minus_one = Complex64::new(-1.0, 0.0);
    for n in 2..=6i64 {
        let levels =
            backward_orbit(&IntPoly::from_i64(&[0, n]), minus_one, 8, 1000, SOLVER_TOL).map_err(|e| e.to_string())?;
        for (m, level) in levels.iter().enumerate() {
            let want = -1.0 / (n as f64).powi(m as i32 + 1);
            ensure(level.cloud.len() == 1 && (level.cloud.points()[0] - want).norm() <= 1e-12, || {
                format!("K_{n} level {}", m + 1)
            })?;
        }
        let binomial = binomial_poly(n as usize).reduced().map_err(|e| e.to_string())?;
        for level in backward_orbit(&binomial, minus_one, 5, 1000, SOLVER_TOL).map_err(|e| e.to_string())? {
            ensure(level.cloud.points() == [minus_one], || format!("(1+z)^{n}-1 leaves -1"))?;
        }
    }
    let r = roots(&IntPoly::from_i64(&[1, 4, 3]), SOLVER_TOL).map_err(|e| e.to_string())?;
    let want = [Complex64::new(-1.0, 0.0), Complex64::new(-1.0 / 3.0, 0.0)];
    ensure(r.len() == 2 && r.points().iter().zip(want).all(|(a, b)| (a - b).norm() < 1e-12), || {
        format!("roots of 1+4z+3z^2: {:?}", r.points())
    })
}

fn fixed_points_and_distances() -> Outcome {
    let zero = Complex64::new(0.0, 0.0);
    let f = classify_fixed_point(&IntPoly::from_i64(&[0, 4, 3]), zero).map_err(|e| e.to_string())?;
    ensure(f.kind == FixedPointKind::Repelling, || format!("{:?}", f.kind))?;
    let f = classify_fixed_point(&IntPoly::from_i64(&[0, 4, 5, 2]), Complex64::new(-1.0, 0.0))
        .map_err(|e| e.to_string())?;
    ensure(f.kind == FixedPointKind::SuperAttracting, || format!("{:?}", f.kind))?;
    let a = PointCloud::new(vec![Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.0)]);
    let b = PointCloud::new(vec![zero]);
    ensure(hausdorff(&a, &b).map_err(|e| e.to_string())? == 1.0, || "hausdorff of {-1,1} and {0}".into())?;
    let pts: Vec<Complex64> = (0..=400).map(|i| Complex64::new(-4.0 * i as f64 / 400.0, 0.0)).collect();
    let d = hausdorff_to_segment(&PointCloud::new(pts), 4.0).map_err(|e| e.to_string())?;
    ensure((d - 0.005).abs() < 1e-12, || format!("grid distance {d}"))
}

fn classifier_fixtures() -> Outcome {
    let opts = ReportOptions::exact_only();
    let k4 = Graph::complete(4).unwrap();
    let g = k4.disjoint_union(&k4).unwrap().disjoint_union(&Graph::complete(1).unwrap()).unwrap();
    let r = attractor_report_with(&g, &opts).map_err(|e| e.to_string())?;
    ensure(r.klass == AttractorClass::Segment { k: 4 }, || format!("K4+K4+K1: {:?}", r.klass))?;
    let p2 = Graph::path(2).unwrap().disjoint_union(&Graph::edgeless(2).unwrap()).unwrap();
    let r = attractor_report_with(&p2, &opts).map_err(|e| e.to_string())?;
    ensure(r.minus_one_multiplicity == 2 && r.fractal_relation == FractalRelation::DisjointUnion, || {
        format!("P2+2K1: {r:?}")
    })?;
    for n in 2..=50 {
        ensure(exclude_k5(n).violated, || format!("k=5 not excluded at n={n}"))?;
    }
    for g in small_graphs() {
        let reduced = g.independence_polynomial().reduced().map_err(|e| e.to_string())?;
        let binomial = g.order() >= 2 && g.is_edgeless();
        ensure(circle_check(&reduced) == binomial, || format!("circle check on {}", g.to_graph6()))?;
    }
    Ok(())
}

fn component_tables() -> Outcome {
    let expected: [(CaseKind, u32, &[[u64; 4]]); 4] = [
        (CaseKind::ThreeComponents, 3, &[[9, 1, 3, 12], [9, 3, 1, 12]]),
        (CaseKind::TwoComponents22, 3, &[[3, 9, 4, 12], [9, 3, 12, 4]]),
        (CaseKind::TwoComponents22, 4, &[[8, 8, 8, 8]]),
        (CaseKind::TwoComponents13, 3, &[[1, 27, 15, 45], [3, 9, 13, 21]]),
    ];
    for case in CaseKind::ALL {
        for k in 1..=4 {
            let got: Vec<[u64; 4]> =
                solve_components(case, k).map_err(|e| e.to_string())?.into_iter().map(|s| s.params).collect();
            let want = expected.iter().find(|(c, kk, _)| *c == case && *kk == k).map_or(&[][..], |e| e.2);
            ensure(got == want, || format!("{case} k={k}: {got:?}"))?;
        }
    }
    Ok(())
}

fn split_cross_oracle() -> Outcome {
    for k in 1..=4 {
        let mut from_tables: Vec<Vec<IntPoly>> =
            CaseKind::ALL.iter().flat_map(|&c| solve_components(c, k).unwrap()).map(|s| s.factor_multiset()).collect();
        from_tables.sort();
        from_tables.dedup();
        let mut splits: Vec<Vec<IntPoly>> = factorizations_positive(&segment_quartic(k), 4)
            .map_err(|e| e.to_string())?
            .into_iter()
            .filter(|s| s.len() >= 2)
            .collect();
        splits.sort();
        ensure(from_tables == splits, || format!("k={k}: tables {} splits {}", from_tables.len(), splits.len()))?;
    }
    Ok(())
}

fn enumeration_counts() -> Outcome {
    let count = |vertices, edges| {
        let c = EnumConstraints { vertices, edges, triangles: 0, k4: 0, k5_free: true, require_co_connected: true };
        enumerate_complements(&c).map(|v| v.len()).map_err(|e| e.to_string())
    };
    ensure(count(4, 3)? == 1, || "N=4 E=3".into())?;
    let n8 = count(8, 8)?;
    ensure(n8 == 69, || format!("N=8 E=8 gives {n8}"))?;
    let k4 = realize_disconnected(4).map_err(|e| e.to_string())?;
    ensure(k4.len() == 1 && k4[0].count == Some(2415), || "k=4 realizations".into())?;
    ensure(realize_disconnected(1).map_err(|e| e.to_string())?.is_empty(), || "k=1 has splits".into())
}

type Entry = (&'static str, &'static str, fn() -> Outcome);

const CHECKS: &[Entry] = &[
    ("graph", "graph6 round trip", graph6_round_trip),
    ("graph", "independence polynomial vs subsets", independence_oracle),
    ("graph", "canonical class counts", class_counts),
    ("graph", "lexicographic composition", composition_identity),
    ("graph", "edge and triangle identities", stats_identities),
    ("poly", "text format and factor products", poly_text_and_factors),
    ("chebyshev", "conjugacy and derivatives at 1", chebyshev_conjugacy),
    ("dynamics", "closed-form backward orbits", dynamics_closed_forms),
    ("dynamics", "fixed points and distances", fixed_points_and_distances),
    ("classifier", "fixtures, k=5 exclusion, circle check", classifier_fixtures),
    ("search", "component tables", component_tables),
    ("search", "splits vs tables", split_cross_oracle),
    ("search", "enumeration counts", enumeration_counts),
];

/// Runs every check; a panic inside a check counts as a failure.
pub fn run_all() -> Vec<Check> {
    CHECKS
        .iter()
        .map(|&(module, name, f)| {
            let start = Instant::now();
            let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
            Check {
                module,
                name,
                passed: outcome.is_ok(),
                detail: outcome.err().unwrap_or_default(),
                elapsed: start.elapsed(),
            }
        })
        .collect()
}
