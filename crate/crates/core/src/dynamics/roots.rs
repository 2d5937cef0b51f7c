//! Polynomial roots by Aberth–Ehrlich simultaneous iteration.
//!
//! When the polynomial has integer coefficients its square-free part is
//! computed exactly first, so repeated roots (like `(1+z)^n` at `-1`) are
//! found as simple roots to full precision instead of as a smeared cluster.

use num_bigint::BigInt;
use num_complex::Complex64;

use super::cloud::{PointCloud, DEFAULT_CLOUD_TOL};
use super::DynError;
use crate::poly::IntPoly;

/// Relative step size at which the iteration stops.
pub const SOLVER_TOL: f64 = 1e-12;

/// Iteration budget of the simultaneous solver.
pub const MAX_ITERATIONS: usize = 500;

const POLISH_STEPS: usize = 2;

fn eval_with_derivative_c(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// `Σ|a_i|`, the scale of the residual bound.
fn coeff_mass(coeffs: &[Complex64]) -> f64 {
    coeffs.iter().map(|c| c.norm()).sum()
}

/// Roots of `Σ coeffs[i] z^i` with simple-root assumptions. `coeffs` must
/// have a nonzero last entry and length at least 2.
pub(crate) fn solve(coeffs: &[Complex64], tol: f64) -> Result<Vec<Complex64>, DynError> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    if n == 1 {
        return Ok(vec![-coeffs[0] / lead]);
    }
    // Fujiwara bound on root moduli sets the starting circle.
    let radius = (0..n)
        .map(|i| {
            let r = (coeffs[i] / lead).norm();
            let r = if i == 0 { r / 2.0 } else { r };
            r.powf(1.0 / (n - i) as f64)
        })
        .fold(0.0f64, f64::max)
        * 2.0;
    let radius = if radius > 0.0 { radius } else { 1.0 };
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    let mut converged = false;
    for _ in 0..MAX_ITERATIONS {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let (p, dp) = eval_with_derivative_c(coeffs, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    s += (z[i] - z[j]).inv();
                }
            }
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if step.re.is_finite() && step.im.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if max_step <= tol {
            converged = true;
            break;
        }
    }
    for zi in z.iter_mut() {
        for _ in 0..POLISH_STEPS {
            let (p, dp) = eval_with_derivative_c(coeffs, *zi);
            if dp.norm() == 0.0 {
                break;
            }
            let next = *zi - p / dp;
            if eval_with_derivative_c(coeffs, next).0.norm() < p.norm() {
                *zi = next;
            }
        }
    }
    if !converged && check_residuals(coeffs, &z, tol).is_err() {
        return Err(DynError::NoConvergence { iterations: MAX_ITERATIONS, best: z });
    }
    Ok(z)
}

/// Accepts a root when `|p(r)| <= tol·(1 + Σ|a_i|)`, or when the residual is
/// within the Horner rounding bound `γ_2n·Σ|a_i||r|^i` (for roots far outside
/// the unit disk the first bound is below what double precision can reach).
fn check_residuals(coeffs: &[Complex64], roots: &[Complex64], tol: f64) -> Result<(), DynError> {
    let bound = tol * (1.0 + coeff_mass(coeffs));
    let gamma = 2.0 * coeffs.len() as f64 * f64::EPSILON;
    for &r in roots {
        let residual = eval_with_derivative_c(coeffs, r).0.norm();
        let rounding = gamma * coeffs.iter().rev().fold(0.0, |acc, a| acc * r.norm() + a.norm());
        if residual > bound.max(rounding) {
            return Err(DynError::Residual { root: r, residual, bound });
        }
    }
    Ok(())
}

fn to_complex(coeffs: Vec<f64>) -> Vec<Complex64> {
    coeffs.into_iter().map(|c| Complex64::new(c, 0.0)).collect()
}

fn int_roots(p: &IntPoly, tol: f64) -> Result<Vec<Complex64>, DynError> {
    let degree = p.degree().unwrap_or(0);
    if degree < 1 {
        return Err(DynError::DegreeTooLow { degree, min: 1 });
    }
    let sf = p.squarefree_part();
    let found = solve(&to_complex(sf.to_f64()?), tol)?;
    check_residuals(&to_complex(p.to_f64()?), &found, tol)?;
    Ok(found)
}

/// Distinct roots of `p`, deduplicated at the default cloud tolerance.
pub fn roots(p: &IntPoly, tol: f64) -> Result<PointCloud, DynError> {
    Ok(PointCloud::from_points(int_roots(p, tol)?, DEFAULT_CLOUD_TOL))
}

/// `w` is an integer small enough to shift the constant term exactly.
fn as_exact_integer(w: Complex64) -> Option<i64> {
    (w.im == 0.0 && w.re.fract() == 0.0 && w.re.abs() < 9.0e15).then_some(w.re as i64)
}

/// Preimages of a point: the solutions of `p(z) = w` as raw values.
pub(crate) fn preimage_points(p: &IntPoly, coeffs: &[f64], w: Complex64, tol: f64) -> Result<Vec<Complex64>, DynError> {
    if let Some(k) = as_exact_integer(w) {
        let shifted = p - &IntPoly::constant(BigInt::from(k));
        return int_roots(&shifted, tol);
    }
    let mut c: Vec<Complex64> = coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    c[0] -= w;
    let found = solve(&c, tol)?;
    check_residuals(&c, &found, tol)?;
    Ok(found)
}

/// Solutions of `p(z) = w`.
pub fn preimages(p: &IntPoly, w: Complex64, tol: f64) -> Result<PointCloud, DynError> {
    let degree = p.degree().unwrap_or(0);
    if degree < 1 {
        return Err(DynError::DegreeTooLow { degree, min: 1 });
    }
    let coeffs = p.to_f64()?;
    let pts = preimage_points(p, &coeffs, w, tol)?;
    Ok(PointCloud::from_points(pts, DEFAULT_CLOUD_TOL))
}
