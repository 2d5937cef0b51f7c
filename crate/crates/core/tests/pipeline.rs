use std::collections::{BTreeMap, HashSet};

use num_complex::Complex64;
use proptest::prelude::*;

use indatt::chebyshev::{conjugacy_holds, ConjugationParams, SEGMENT_KS};
use indatt::classifier::{attractor_report_with, AttractorClass, ReportOptions};
use indatt::dynamics::{backward_orbit, DEFAULT_CLOUD_TOL, SOLVER_TOL};
use indatt::graph::{canonical_form, Graph};
use indatt::poly::IntPoly;
use indatt::search::{all_graphs, enumerate_for_poly};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

#[test]
fn enumeration_matches_exhaustive_six() {
    let mut by_poly: BTreeMap<IntPoly, HashSet<Vec<u8>>> = BTreeMap::new();
    let mut connected: BTreeMap<IntPoly, usize> = BTreeMap::new();
    for g in all_graphs(6).unwrap() {
        let p = g.independence_polynomial();
        if p.degree().unwrap() > 4 {
            continue;
        }
        if g.is_connected() {
            *connected.entry(p.clone()).or_default() += 1;
        }
        by_poly.entry(p).or_default().insert(canonical_form(&g).unwrap());
    }
    for (p, classes) in &by_poly {
        let found = enumerate_for_poly(p, false).unwrap();
        assert_eq!(found.len(), classes.len(), "{p}");
        for g in &found {
            assert!(classes.contains(&canonical_form(g).unwrap()));
        }
        let found = enumerate_for_poly(p, true).unwrap();
        assert_eq!(found.len(), connected.get(p).copied().unwrap_or(0), "{p} connected");
    }
}

#[test]
fn segment_class_matches_conjugacy() {
    let options = ReportOptions::exact_only();
    let mut segments = 0;
    for g in (1..=7).flat_map(|n| all_graphs(n).unwrap()) {
        let report = attractor_report_with(&g, &options).unwrap();
        let reduced = report.independence_polynomial.reduced().unwrap();
        let alpha = report.alpha as u32;
        let conjugate: Option<u32> = if alpha >= 2 && g.order() == (alpha * alpha) as usize {
            SEGMENT_KS
                .into_iter()
                .find(|&k| conjugacy_holds(&reduced, &ConjugationParams::from_segment_index(k, alpha).unwrap()))
        } else {
            None
        };
        match report.klass {
            AttractorClass::Segment { k } => {
                segments += 1;
                assert_eq!(conjugate, Some(k), "{}", g.to_graph6());
            }
            _ => assert_eq!(conjugate, None, "{}", g.to_graph6()),
        }
    }
    // All on four vertices: K4 minus an edge (k=1), C4 and the paw (k=2),
    // P4 and K3 ∪ K1 (k=3), 2K2 (k=4).
    assert_eq!(segments, 6);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_identity(g in arb_graph(8)) {
        let i = g.independence_polynomial();
        let rhs = i.compose(&i.reduced().unwrap()).unwrap();
        prop_assert_eq!(g.lexicographic_product(&g).unwrap().independence_polynomial(), rhs.clone());
        prop_assert_eq!(g.lexicographic_product_wide(&g).unwrap().independence_polynomial(), rhs);
    }

    #[test]
    fn union_multiplies(a in arb_graph(10), b in arb_graph(10)) {
        let u = a.disjoint_union(&b).unwrap();
        prop_assert_eq!(u.independence_polynomial(), &a.independence_polynomial() * &b.independence_polynomial());
    }

    #[test]
    fn stats_identities(g in arb_graph(12)) {
        let s = g.stats();
        prop_assert!(s.edge_partition_identity_holds());
        prop_assert!(s.degree_identity_holds());
        prop_assert!(s.triangle_bound_holds());
    }

    #[test]
    fn orbit_symmetry_and_no_positive_reals(g in arb_graph(6)) {
        prop_assume!(g.edge_count() > 0);
        let p = g.independence_polynomial().reduced().unwrap();
        for level in backward_orbit(&p, Complex64::new(-1.0, 0.0), 3, 5000, SOLVER_TOL).unwrap() {
            for &z in level.cloud.points() {
                prop_assert!(level.cloud.contains_near(z.conj(), DEFAULT_CLOUD_TOL));
                prop_assert!(!(z.im.abs() <= DEFAULT_CLOUD_TOL && z.re > DEFAULT_CLOUD_TOL), "{}", z);
            }
        }
    }
}
