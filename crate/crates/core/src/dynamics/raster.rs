//! Escape-time rasters of filled Julia sets.

use std::io::{self, Write};

use num_complex::Complex64;
use rayon::prelude::*;

use super::DynError;
use crate::poly::{horner, IntPoly};

/// Rectangle `[re_min, re_max] × [im_min, im_max]` in the complex plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl Window {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Self {
        Window { re_min, re_max, im_min, im_max }
    }

    /// Centre of pixel `(col, row)`; row 0 is the top (largest imaginary part).
    pub fn pixel_center(&self, col: usize, row: usize, width: usize, height: usize) -> Complex64 {
        let re = self.re_min + (col as f64 + 0.5) * (self.re_max - self.re_min) / width as f64;
        let im = self.im_max - (row as f64 + 0.5) * (self.im_max - self.im_min) / height as f64;
        Complex64::new(re, im)
    }
}

/// Per-pixel escape iteration, row-major from the top-left; 0 marks pixels
/// that stayed within the escape radius for the whole budget.
#[derive(Debug, Clone, PartialEq)]
pub struct Raster {
    pub width: usize,
    pub height: usize,
    pub window: Window,
    pub values: Vec<u32>,
}

/// `max(2, 1 + Σ_{i<n} |a_i| / |a_n|)`.
pub fn escape_radius(p: &IntPoly) -> Result<f64, DynError> {
    let c = p.to_f64()?;
    let lead = c.last().copied().unwrap_or(0.0).abs();
    if lead == 0.0 {
        return Err(DynError::DegreeTooLow { degree: 0, min: 1 });
    }
    let rest: f64 = c[..c.len() - 1].iter().map(|a| a.abs()).sum();
    Ok(f64::max(2.0, 1.0 + rest / lead))
}

pub fn filled_julia_raster(
    p: &IntPoly,
    window: Window,
    width: usize,
    height: usize,
    max_iter: u32,
) -> Result<Raster, DynError> {
    let degree = p.degree().unwrap_or(0);
    if degree < 1 {
        return Err(DynError::DegreeTooLow { degree, min: 1 });
    }
    let coeffs = p.to_f64()?;
    let radius = escape_radius(p)?;
    let values = (0..width * height)
        .into_par_iter()
        .map(|i| {
            let mut z = window.pixel_center(i % width, i / width, width, height);
            for it in 1..=max_iter {
                z = horner(&coeffs, z);
                if z.norm() > radius || z.is_nan() {
                    return it;
                }
            }
            0
        })
        .collect();
    Ok(Raster { width, height, window, values })
}

/// Sixteen-colour cycle for escaping pixels: escape count `v` uses entry
/// `(v − 1) mod 16`, running from deep blue through white to orange.
pub const PALETTE: [[u8; 3]; 16] = [
    [9, 1, 47],
    [4, 4, 73],
    [0, 7, 100],
    [12, 44, 138],
    [24, 82, 177],
    [57, 125, 209],
    [134, 181, 229],
    [211, 236, 248],
    [241, 233, 191],
    [248, 201, 95],
    [255, 170, 0],
    [204, 128, 0],
    [153, 87, 0],
    [106, 52, 3],
    [66, 30, 15],
    [25, 7, 26],
];

impl Raster {
    pub fn color(value: u32) -> [u8; 3] {
        if value == 0 {
            [0, 0, 0]
        } else {
            PALETTE[((value - 1) % 16) as usize]
        }
    }

    /// Binary PPM (P6), non-escaping pixels black.
    pub fn write_ppm<W: Write>(&self, mut out: W) -> io::Result<()> {
        write!(out, "P6\n{} {}\n255\n", self.width, self.height)?;
        let mut bytes = Vec::with_capacity(self.values.len() * 3);
        for &v in &self.values {
            bytes.extend_from_slice(&Self::color(v));
        }
        out.write_all(&bytes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radius() {
        assert_eq!(escape_radius(&IntPoly::from_i64(&[0, 2])).unwrap(), 2.0);
        assert_eq!(escape_radius(&IntPoly::from_i64(&[0, 16, 20, 8, 1])).unwrap(), 45.0);
    }

    #[test]
    fn doubling_map_keeps_only_origin() {
        let r =
            filled_julia_raster(&IntPoly::from_i64(&[0, 2]), Window::new(-1.0, 1.0, -1.0, 1.0), 21, 21, 200).unwrap();
        let bounded: Vec<usize> = (0..r.values.len()).filter(|&i| r.values[i] == 0).collect();
        assert_eq!(bounded, vec![10 * 21 + 10]);
    }

    #[test]
    fn binomial_fills_disk() {
        let w = Window::new(-2.5, 0.5, -1.5, 1.5);
        let (n, iters) = (120, 200);
        let r = filled_julia_raster(&IntPoly::from_i64(&[0, 2, 1]), w, n, n, iters).unwrap();
        let pixel = 3.0 / n as f64;
        for row in 0..n {
            for col in 0..n {
                let z = w.pixel_center(col, row, n, n);
                let d = (z + 1.0).norm();
                let v = r.values[row * n + col];
                if d < 1.0 - 2.0 * pixel {
                    assert_eq!(v, 0, "inside at {z}");
                } else if d > 1.0 + 2.0 * pixel {
                    assert_ne!(v, 0, "outside at {z}");
                }
            }
        }
    }

    #[test]
    fn segment_candidate_hugs_segment() {
        let w = Window::new(-5.0, 1.0, -1.0, 1.0);
        let r = filled_julia_raster(&IntPoly::from_i64(&[0, 16, 20, 8, 1]), w, 121, 41, 100).unwrap();
        for (i, &v) in r.values.iter().enumerate() {
            if v == 0 {
                let z = w.pixel_center(i % 121, i / 121, 121, 41);
                assert!(z.im.abs() < 0.1 && z.re > -4.1 && z.re < 0.1, "bounded pixel at {z}");
            }
        }
        assert!(r.values.contains(&0));
    }

    #[test]
    fn ppm_layout() {
        let r = Raster { width: 2, height: 1, window: Window::new(0.0, 1.0, 0.0, 1.0), values: vec![0, 17] };
        let mut buf = Vec::new();
        r.write_ppm(&mut buf).unwrap();
        let mut expected = b"P6\n2 1\n255\n".to_vec();
        expected.extend_from_slice(&[0, 0, 0]);
        expected.extend_from_slice(&PALETTE[0]);
        assert_eq!(buf, expected);
    }
}
