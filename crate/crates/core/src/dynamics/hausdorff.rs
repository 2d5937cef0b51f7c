//! Hausdorff distances between point clouds and to real segments.

use num_complex::Complex64;
use rayon::prelude::*;

use super::cloud::{total_cmp, PointCloud};
use super::DynError;

/// Nearest-neighbour distance from `z` into `sorted` (sorted by real part),
/// scanning outwards from the insertion point until the real-part gap alone
/// exceeds the best distance so far.
fn nearest(sorted: &[Complex64], z: Complex64) -> f64 {
    let start = sorted.partition_point(|p| p.re < z.re);
    let mut best = f64::INFINITY;
    for p in &sorted[start..] {
        if p.re - z.re >= best {
            break;
        }
        best = best.min((p - z).norm());
    }
    for p in sorted[..start].iter().rev() {
        if z.re - p.re >= best {
            break;
        }
        best = best.min((p - z).norm());
    }
    best
}

fn directed(a: &[Complex64], b_sorted: &[Complex64]) -> f64 {
    a.par_iter().map(|&z| nearest(b_sorted, z)).reduce(|| 0.0, f64::max)
}

/// Exact symmetric Hausdorff distance `max(sup_a d(a, B), sup_b d(b, A))`.
pub fn hausdorff(a: &PointCloud, b: &PointCloud) -> Result<f64, DynError> {
    if a.is_empty() || b.is_empty() {
        return Err(DynError::EmptyCloud);
    }
    // Clouds are already sorted by (re, im), hence by re.
    debug_assert!(a.points().windows(2).all(|w| total_cmp(&w[0], &w[1]).is_le()));
    Ok(directed(a.points(), b.points()).max(directed(b.points(), a.points())))
}

/// Distance from `z` to the segment `[lo, 0]` on the real axis.
fn to_segment(z: Complex64, lo: f64) -> f64 {
    Complex64::new(z.re - z.re.clamp(lo, 0.0), z.im).norm()
}

/// Hausdorff distance between the cloud and the real segment `[-r, 0]`.
///
/// The cloud-to-segment side is the closed-form point-to-segment distance.
/// The segment-to-cloud side is computed exactly: for `s` on the segment the
/// squared distance to point `(x, y)` is `s² − 2xs + (x² + y²)`, so the
/// nearest-point distance is `s²` plus the lower envelope of lines
/// `−2x·s + (x² + y²)`. On each envelope piece that sum is convex in `s`, so
/// its maximum lies at a breakpoint of the envelope or an end of the segment.
pub fn hausdorff_to_segment(a: &PointCloud, r: f64) -> Result<f64, DynError> {
    if a.is_empty() {
        return Err(DynError::EmptyCloud);
    }
    assert!(r > 0.0, "segment length must be positive");
    let lo = -r;
    let to_seg = a.points().par_iter().map(|&z| to_segment(z, lo)).reduce(|| 0.0, f64::max);
    Ok(to_seg.max(segment_to_cloud(a.points(), lo)))
}

/// For each real part keep the point closest to the axis, in ascending `x`.
fn envelope_candidates(points: &[Complex64]) -> Vec<(f64, f64)> {
    let mut out: Vec<(f64, f64)> = Vec::with_capacity(points.len());
    for z in points {
        let y2 = z.im * z.im;
        match out.last_mut() {
            Some(last) if last.0 == z.re => last.1 = last.1.min(y2),
            _ => out.push((z.re, y2)),
        }
    }
    out
}

/// Abscissa where points `(x1, y1²)` and `(x2, y2²)`, `x1 < x2`, are
/// equidistant from the real point `s`.
fn crossing(p: (f64, f64), q: (f64, f64)) -> f64 {
    (p.0 + q.0) / 2.0 + (q.1 - p.1) / (2.0 * (q.0 - p.0))
}

fn segment_to_cloud(points: &[Complex64], lo: f64) -> f64 {
    // Points sorted by x; as s grows the nearest point moves right, so the
    // envelope visits points in increasing x. A point is dropped when the
    // crossing with its successor is not after the crossing with its
    // predecessor.
    let cands = envelope_candidates(points);
    let mut hull: Vec<(f64, f64)> = Vec::with_capacity(cands.len());
    for c in cands {
        while hull.len() >= 2 {
            let (p, q) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            if crossing(q, c) <= crossing(p, q) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(c);
    }
    let dist = |s: f64, p: (f64, f64)| ((s - p.0) * (s - p.0) + p.1).sqrt();
    // Walk the envelope pieces together with the segment ends.
    let mut best = 0.0f64;
    let mut piece = 0;
    while piece + 1 < hull.len() && crossing(hull[piece], hull[piece + 1]) <= lo {
        piece += 1;
    }
    best = best.max(dist(lo, hull[piece]));
    while piece + 1 < hull.len() {
        let s = crossing(hull[piece], hull[piece + 1]);
        if s >= 0.0 {
            break;
        }
        best = best.max(dist(s, hull[piece]));
        piece += 1;
    }
    best.max(dist(0.0, hull[piece]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn cloud(pts: &[(f64, f64)]) -> PointCloud {
        PointCloud::new(pts.iter().map(|&(x, y)| c(x, y)).collect())
    }

    fn brute(a: &PointCloud, b: &PointCloud) -> f64 {
        let d = |x: &PointCloud, y: &PointCloud| {
            x.points()
                .iter()
                .map(|p| y.points().iter().map(|q| (p - q).norm()).fold(f64::INFINITY, f64::min))
                .fold(0.0, f64::max)
        };
        d(a, b).max(d(b, a))
    }

    fn brute_segment(a: &PointCloud, r: f64, samples: usize) -> f64 {
        let fwd = a.points().iter().map(|&z| to_segment(z, -r)).fold(0.0, f64::max);
        let back = (0..=samples)
            .map(|i| {
                let s = -r * i as f64 / samples as f64;
                a.points().iter().map(|z| (z - s).norm()).fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max);
        fwd.max(back)
    }

    #[test]
    fn point_examples() {
        let x = cloud(&[(0.3, 0.1), (-2.0, 1.0)]);
        assert_eq!(hausdorff(&x, &x).unwrap(), 0.0);
        assert_eq!(hausdorff(&cloud(&[(-1.0, 0.0), (1.0, 0.0)]), &cloud(&[(0.0, 0.0)])).unwrap(), 1.0);
        assert_eq!(hausdorff(&cloud(&[(0.0, 0.0)]), &cloud(&[(3.0, 0.0), (0.0, 4.0)])).unwrap(), 4.0);
        assert!(hausdorff(&PointCloud::new(vec![]), &x).is_err());
    }

    #[test]
    fn segment_examples() {
        for r in [1.0, 4.0 / 3.0, 2.0, 4.0] {
            let d = hausdorff_to_segment(&cloud(&[(0.0, 0.0), (-r / 2.0, 0.0), (-r, 0.0)]), r).unwrap();
            assert!((d - r / 4.0).abs() < 1e-15);
            let n = 10_000;
            let samples: Vec<_> = (0..n).map(|i| (-r * i as f64 / (n - 1) as f64, 0.0)).collect();
            assert!(hausdorff_to_segment(&cloud(&samples), r).unwrap() <= 2.0 * r / 1e4);
        }
        assert_eq!(hausdorff_to_segment(&cloud(&[(1.0, 0.0)]), 4.0).unwrap(), 5.0);
        assert!(hausdorff_to_segment(&PointCloud::new(vec![]), 1.0).is_err());
    }

    #[test]
    fn off_axis_points() {
        // Single point above the middle: the farther segment end dominates.
        let d = hausdorff_to_segment(&cloud(&[(-1.0, 1.0)]), 2.0).unwrap();
        assert!((d - 2f64.sqrt()).abs() < 1e-15);
        let d = hausdorff_to_segment(&cloud(&[(-3.0, 0.5), (-3.0, -0.25), (-0.5, 0.0)]), 4.0).unwrap();
        let expected = brute_segment(&cloud(&[(-3.0, 0.5), (-3.0, -0.25), (-0.5, 0.0)]), 4.0, 400_000);
        assert!((d - expected).abs() < 1e-5);
    }

    fn arb_cloud() -> impl Strategy<Value = PointCloud> {
        prop::collection::vec((-5.0f64..1.0, -2.0f64..2.0), 1..40)
            .prop_map(|v| PointCloud::new(v.into_iter().map(|(x, y)| c(x, y)).collect()))
    }

    proptest! {
        #[test]
        fn matches_brute_force(a in arb_cloud(), b in arb_cloud()) {
            prop_assert_eq!(hausdorff(&a, &b).unwrap(), brute(&a, &b));
        }

        #[test]
        fn metric_axioms(a in arb_cloud(), b in arb_cloud(), c in arb_cloud()) {
            let ab = hausdorff(&a, &b).unwrap();
            prop_assert_eq!(ab, hausdorff(&b, &a).unwrap());
            prop_assert!(ab <= hausdorff(&a, &c).unwrap() + hausdorff(&c, &b).unwrap() + 1e-12);
            prop_assert_eq!(hausdorff(&a, &a).unwrap(), 0.0);
        }

        #[test]
        fn segment_matches_dense_sampling(a in arb_cloud(), r in 0.5f64..5.0) {
            let exact = hausdorff_to_segment(&a, r).unwrap();
            let sampled = brute_segment(&a, r, 20_000);
            // Sampling can only underestimate, by at most half the spacing.
            prop_assert!(sampled <= exact + 1e-12);
            prop_assert!(exact <= sampled + r / 20_000.0);
        }
    }
}
