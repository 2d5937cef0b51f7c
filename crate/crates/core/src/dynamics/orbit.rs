//! Backward orbits `P^{-m}(seed)`.
//!
//! For a real seed and a real polynomial each level is closed under complex
//! conjugation. The orbit is carried as its upper half `U` (points folded to
//! `im >= 0`, with `|im| <= tol` snapped onto the real axis); each level is
//! `U` plus the mirror images of its non-real points, so the symmetry holds
//! exactly rather than up to solver noise.

use num_complex::Complex64;
use rayon::prelude::*;

use super::cloud::{PointCloud, DEFAULT_CLOUD_TOL};
use super::roots::preimage_points;
use super::DynError;
use crate::poly::IntPoly;

pub const DEFAULT_DEPTH: usize = 12;
pub const DEFAULT_CAP: usize = 200_000;

/// One level of a backward orbit.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitLevel {
    pub cloud: PointCloud,
    /// Size before thinning.
    pub raw_size: usize,
    /// Whether the level was thinned to respect the cap.
    pub thinned: bool,
}

fn fold(z: Complex64, tol: f64) -> Complex64 {
    if z.im.abs() <= tol {
        Complex64::new(z.re, 0.0)
    } else {
        Complex64::new(z.re, z.im.abs())
    }
}

fn mirrored_size(upper: &[Complex64], tol: f64) -> usize {
    upper.len() + upper.iter().filter(|z| z.im > tol).count()
}

fn mirror(upper: &[Complex64], tol: f64) -> PointCloud {
    let mut all = upper.to_vec();
    all.extend(upper.iter().filter(|z| z.im > tol).map(|z| z.conj()));
    PointCloud::from_points(all, tol)
}

/// Keeps every `j`-th point for the smallest `j` whose result satisfies
/// `size(kept) <= cap`.
fn thin(points: Vec<Complex64>, cap: usize, size: impl Fn(&[Complex64]) -> usize) -> (Vec<Complex64>, bool) {
    if size(&points) <= cap {
        return (points, false);
    }
    let mut j = 2;
    loop {
        let kept: Vec<Complex64> = points.iter().step_by(j).copied().collect();
        if size(&kept) <= cap {
            return (kept, true);
        }
        j += 1;
    }
}

fn all_preimages(
    p: &IntPoly,
    coeffs: &[f64],
    points: &[Complex64],
    tol: f64,
    level: usize,
) -> Result<Vec<Complex64>, DynError> {
    let per_point: Vec<Vec<Complex64>> = points
        .par_iter()
        .map(|&w| preimage_points(p, coeffs, w, tol))
        .collect::<Result<_, _>>()
        .map_err(|e| DynError::Level { level, source: Box::new(e) })?;
    Ok(per_point.into_iter().flatten().collect())
}

/// Levels `1..=depth` of the backward orbit of `seed` under `p`.
///
/// A level larger than `cap` is thinned deterministically by keeping every
/// `j`-th point of its canonical order (of the upper half, for real seeds),
/// with `j` minimal, and later levels grow from the thinned set.
pub fn backward_orbit(
    p: &IntPoly,
    seed: Complex64,
    depth: usize,
    cap: usize,
    tol: f64,
) -> Result<Vec<OrbitLevel>, DynError> {
    let degree = p.degree().unwrap_or(0);
    if degree < 1 {
        return Err(DynError::DegreeTooLow { degree, min: 1 });
    }
    let coeffs = p.to_f64()?;
    let ctol = DEFAULT_CLOUD_TOL;
    let symmetric = seed.im == 0.0;
    let mut current = vec![seed];
    let mut levels = Vec::with_capacity(depth);
    for level in 1..=depth {
        let raw = all_preimages(p, &coeffs, &current, tol, level)?;
        if symmetric {
            let upper = PointCloud::from_points(raw.into_iter().map(|z| fold(z, ctol)).collect(), ctol).into_points();
            let raw_size = mirrored_size(&upper, ctol);
            let (upper, thinned) = thin(upper, cap, |u| mirrored_size(u, ctol));
            levels.push(OrbitLevel { cloud: mirror(&upper, ctol), raw_size, thinned });
            current = upper;
        } else {
            let cloud = PointCloud::from_points(raw, ctol).into_points();
            let raw_size = cloud.len();
            let (kept, thinned) = thin(cloud, cap, <[Complex64]>::len);
            let cloud = PointCloud::from_points(kept, ctol);
            current = cloud.points().to_vec();
            levels.push(OrbitLevel { cloud, raw_size, thinned });
        }
    }
    Ok(levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::SOLVER_TOL;

    const MINUS_ONE: Complex64 = Complex64::new(-1.0, 0.0);

    #[test]
    fn complete_graph_levels() {
        for n in 2..=9i64 {
            let p = IntPoly::from_i64(&[0, n]);
            let levels = backward_orbit(&p, MINUS_ONE, 8, DEFAULT_CAP, SOLVER_TOL).unwrap();
            for (m, level) in levels.iter().enumerate() {
                let expected = -1.0 / (n as f64).powi(m as i32 + 1);
                assert_eq!(level.cloud.len(), 1);
                assert!((level.cloud.points()[0] - expected).norm() <= 1e-12);
            }
        }
        assert!(backward_orbit(&IntPoly::from_i64(&[3]), MINUS_ONE, 1, DEFAULT_CAP, SOLVER_TOL).is_err());
    }

    #[test]
    fn binomial_levels_stay_at_minus_one() {
        for n in 2..=6usize {
            let coeffs: Vec<i64> = (0..=n).map(|i| num_integer::binomial(n as i64, i as i64)).collect();
            let p = &IntPoly::from_i64(&coeffs) - &IntPoly::one();
            for level in backward_orbit(&p, MINUS_ONE, 6, DEFAULT_CAP, SOLVER_TOL).unwrap() {
                assert_eq!(level.cloud.points(), &[MINUS_ONE]);
            }
        }
    }

    #[test]
    fn levels_are_symmetric_and_avoid_positive_reals() {
        let p = IntPoly::from_i64(&[0, 5, 7, 2]);
        let levels = backward_orbit(&p, MINUS_ONE, 6, DEFAULT_CAP, SOLVER_TOL).unwrap();
        assert_eq!(levels[0].cloud.len(), 3);
        for level in &levels {
            for z in level.cloud.points() {
                assert!(level.cloud.contains_near(z.conj(), DEFAULT_CLOUD_TOL));
                assert!(!(z.im.abs() <= DEFAULT_CLOUD_TOL && z.re > DEFAULT_CLOUD_TOL));
            }
        }
        assert_eq!(levels[5].cloud.len(), 729);
    }

    #[test]
    fn thinning_is_flagged() {
        let p = IntPoly::from_i64(&[0, 5, 7, 2]);
        let levels = backward_orbit(&p, MINUS_ONE, 5, 100, SOLVER_TOL).unwrap();
        assert!(!levels[2].thinned);
        assert!(levels[4].thinned);
        assert!(levels.iter().all(|l| l.cloud.len() <= 100));
        assert!(levels[4].raw_size > 100);
    }

    #[test]
    fn thread_count_independent() {
        let p = IntPoly::from_i64(&[0, 9, 24, 16]);
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| backward_orbit(&p, MINUS_ONE, 6, 500, SOLVER_TOL).unwrap())
        };
        assert_eq!(run(1), run(4));
    }

    #[test]
    fn non_real_seed() {
        let p = IntPoly::from_i64(&[0, 2, 1]);
        let levels = backward_orbit(&p, Complex64::new(0.0, 1.0), 3, DEFAULT_CAP, SOLVER_TOL).unwrap();
        assert_eq!(levels[2].cloud.len(), 8);
    }
}
