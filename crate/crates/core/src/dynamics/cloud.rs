use std::cmp::Ordering;
use std::collections::HashMap;
use std::io::{self, Write};

use num_complex::Complex64;

/// Default dedupe tolerance for point clouds.
pub const DEFAULT_CLOUD_TOL: f64 = 1e-9;

/// A finite set of complex points, deduplicated to `tol` and sorted by
/// `(re, im)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    points: Vec<Complex64>,
    tol: f64,
}

pub(crate) fn total_cmp(a: &Complex64, b: &Complex64) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

fn cell(z: Complex64, tol: f64) -> (i64, i64) {
    // Saturating casts keep far-away points in the edge cells, which is
    // harmless: the distance test below is exact.
    ((z.re / tol).floor() as i64, (z.im / tol).floor() as i64)
}

impl PointCloud {
    /// Sorts `points`, then keeps each point unless a previously kept point
    /// lies within `tol`. The survivors are in canonical order.
    pub fn from_points(mut points: Vec<Complex64>, tol: f64) -> Self {
        assert!(tol > 0.0, "cloud tolerance must be positive");
        points.sort_by(total_cmp);
        let mut grid: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
        let mut kept: Vec<Complex64> = Vec::with_capacity(points.len());
        for z in points {
            let (cx, cy) = cell(z, tol);
            let mut clash = false;
            'search: for dx in -1..=1 {
                for dy in -1..=1 {
                    let key = (cx.saturating_add(dx), cy.saturating_add(dy));
                    if let Some(ids) = grid.get(&key) {
                        if ids.iter().any(|&i| (kept[i] - z).norm() <= tol) {
                            clash = true;
                            break 'search;
                        }
                    }
                }
            }
            if !clash {
                grid.entry((cx, cy)).or_default().push(kept.len());
                kept.push(z);
            }
        }
        PointCloud { points: kept, tol }
    }

    pub fn new(points: Vec<Complex64>) -> Self {
        Self::from_points(points, DEFAULT_CLOUD_TOL)
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn into_points(self) -> Vec<Complex64> {
        self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Whether some point lies within `tol` of `z` (linear scan).
    pub fn contains_near(&self, z: Complex64, tol: f64) -> bool {
        self.points.iter().any(|p| (p - z).norm() <= tol)
    }

    /// One `re,im` line per point, 17 significant digits.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        for z in &self.points {
            writeln!(out, "{:.16e},{:.16e}", z.re, z.im)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn dedupe_and_order() {
        let cloud = PointCloud::new(vec![c(1.0, 0.0), c(-1.0, 2.0), c(1.0 + 1e-12, 0.0), c(-1.0, -2.0)]);
        assert_eq!(cloud.points(), &[c(-1.0, -2.0), c(-1.0, 2.0), c(1.0, 0.0)]);
    }

    #[test]
    fn order_independent() {
        let pts: Vec<_> = (0..200).map(|i| c((i as f64 * 0.37).sin(), (i as f64 * 0.11).cos())).collect();
        let mut rev = pts.clone();
        rev.reverse();
        assert_eq!(PointCloud::new(pts), PointCloud::new(rev));
    }

    #[test]
    fn no_two_points_within_tol() {
        let pts: Vec<_> = (0..500).map(|i| c(i as f64 * 4e-10, 0.0)).collect();
        let cloud = PointCloud::new(pts);
        for w in cloud.points().windows(2) {
            assert!((w[1] - w[0]).norm() > DEFAULT_CLOUD_TOL);
        }
    }

    #[test]
    fn csv_lines() {
        let mut buf = Vec::new();
        PointCloud::new(vec![c(-0.25, 0.0)]).write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "-2.5000000000000000e-1,0.0000000000000000e0\n");
    }
}
