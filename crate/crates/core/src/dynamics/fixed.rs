use num_complex::Complex64;
use serde::Serialize;

use super::DynError;
use crate::poly::IntPoly;

const FIXED_TOL: f64 = 1e-9;
const SUPER_TOL: f64 = 1e-9;
const UNIT_TOL: f64 = 1e-9;
const ROOT_OF_UNITY_TOL: f64 = 1e-6;
const MAX_ROOT_ORDER: i32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FixedPointKind {
    SuperAttracting,
    Attracting,
    Repelling,
    RationallyIndifferent,
    IrrationallyIndifferent,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedPointClass {
    pub kind: FixedPointKind,
    pub multiplier: Complex64,
}

/// Classifies the fixed point `z0` of `p` by its multiplier `λ = p'(z0)`.
///
/// Thresholds: super-attracting if `|λ| <= 1e-9`, attracting below
/// `1 − 1e-9`, repelling above `1 + 1e-9`. Otherwise `λ` is treated as on the
/// unit circle and called rationally indifferent when `|λ^q − 1| <= 1e-6` for
/// some `q <= 64`.
pub fn classify_fixed_point(p: &IntPoly, z0: Complex64) -> Result<FixedPointClass, DynError> {
    let residual = (p.evaluate(z0)? - z0).norm();
    if residual > FIXED_TOL {
        return Err(DynError::NotFixed { z: z0, residual });
    }
    let multiplier = p.derivative().evaluate(z0)?;
    let m = multiplier.norm();
    let kind = if m <= SUPER_TOL {
        FixedPointKind::SuperAttracting
    } else if m < 1.0 - UNIT_TOL {
        FixedPointKind::Attracting
    } else if m > 1.0 + UNIT_TOL {
        FixedPointKind::Repelling
    } else if (1..=MAX_ROOT_ORDER).any(|q| (multiplier.powi(q) - 1.0).norm() <= ROOT_OF_UNITY_TOL) {
        FixedPointKind::RationallyIndifferent
    } else {
        FixedPointKind::IrrationallyIndifferent
    };
    Ok(FixedPointClass { kind, multiplier })
}
