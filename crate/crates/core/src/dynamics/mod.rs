//! Numerical dynamics of integer polynomials: roots, backward orbits,
//! Hausdorff distances, fixed points and escape-time rasters.
//!
//! All point sets come out as [`PointCloud`]s in canonical order, and every
//! per-point computation is sequential, so results do not depend on the
//! number of worker threads.

mod cloud;
mod fixed;
mod hausdorff;
mod orbit;
mod raster;
mod roots;

pub use cloud::{PointCloud, DEFAULT_CLOUD_TOL};
pub use fixed::{classify_fixed_point, FixedPointClass, FixedPointKind};
pub use hausdorff::{hausdorff, hausdorff_to_segment};
pub use orbit::{backward_orbit, OrbitLevel, DEFAULT_CAP, DEFAULT_DEPTH};
pub use raster::{escape_radius, filled_julia_raster, Raster, Window};
pub use roots::{preimages, roots, MAX_ITERATIONS, SOLVER_TOL};

use num_complex::Complex64;

use crate::poly::PolyError;

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum DynError {
    #[error("degree {degree} is below the required minimum {min}")]
    DegreeTooLow { degree: usize, min: usize },
    #[error("root solver did not converge in {iterations} iterations")]
    NoConvergence { iterations: usize, best: Vec<Complex64> },
    #[error("root {root} has residual {residual:e}, above the bound {bound:e}")]
    Residual { root: Complex64, residual: f64, bound: f64 },
    #[error("point cloud is empty")]
    EmptyCloud,
    #[error("point {z} is not fixed: |p(z) - z| = {residual:e}")]
    NotFixed { z: Complex64, residual: f64 },
    #[error("backward orbit level {level}: {source}")]
    Level { level: usize, source: Box<DynError> },
    #[error(transparent)]
    Poly(#[from] PolyError),
}
