//! Exhaustive factorization into polynomials with constant term 1 and
//! positive integer coefficients.
//!
//! A factor `f` of `t` with `t = f·g` and both sides positive satisfies
//! `f_i <= t_i` coordinatewise, so the candidate space is finite. Because
//! `f_0 = 1`, the cofactor `g` is the power-series quotient `t / f`, whose
//! first `j` coefficients depend only on `f_1..f_j`; the search fixes `f`
//! one coefficient at a time and prunes as soon as a cofactor coefficient
//! leaves its admissible range.

use num_traits::ToPrimitive;

use super::{IntPoly, PolyError};

/// Largest target degree accepted by [`factorizations_positive`].
pub const MAX_FACTOR_DEGREE: usize = 6;

/// Every multiset of at most `max_factors` positive factors whose product is
/// `target`, including the trivial one-factor multiset `{target}`.
///
/// Factors within a multiset are sorted by coefficient vector and the list of
/// multisets is sorted the same way, so the output is canonical.
pub fn factorizations_positive(target: &IntPoly, max_factors: usize) -> Result<Vec<Vec<IntPoly>>, PolyError> {
    let degree = target.degree().unwrap_or(0);
    if degree > MAX_FACTOR_DEGREE {
        return Err(PolyError::DegreeCapExceeded { degree, cap: MAX_FACTOR_DEGREE });
    }
    if !target.is_independence_form() {
        return Err(PolyError::NotPositiveTarget);
    }
    let coeffs: Vec<i128> = target
        .coeffs()
        .iter()
        .map(|c| c.to_i64().map(i128::from))
        .collect::<Option<_>>()
        .ok_or(PolyError::NotPositiveTarget)?;
    if degree == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut acc = Vec::new();
    search(&coeffs, None, max_factors, &mut acc, &mut out);
    let mut result: Vec<Vec<IntPoly>> = out.into_iter().map(|m| m.into_iter().map(to_poly).collect()).collect();
    result.sort_by_key(|m| key(m));
    result.dedup();
    Ok(result)
}

fn key(m: &[IntPoly]) -> Vec<Vec<num_bigint::BigInt>> {
    m.iter().map(|f| f.coeffs().to_vec()).collect()
}

fn to_poly(c: Vec<i128>) -> IntPoly {
    IntPoly::from_coeffs(c)
}

fn search(rem: &[i128], min: Option<&[i128]>, left: usize, acc: &mut Vec<Vec<i128>>, out: &mut Vec<Vec<Vec<i128>>>) {
    if left == 0 {
        return;
    }
    let total = rem.len() - 1;
    let ok_order = |f: &[i128]| min.is_none_or(|m| f >= m);
    if ok_order(rem) {
        let mut done = acc.clone();
        done.push(rem.to_vec());
        out.push(done);
    }
    if left == 1 {
        return;
    }
    for d in 1..total {
        let mut f = vec![0i128; d + 1];
        f[0] = 1;
        let mut g = vec![0i128; total + 1];
        g[0] = 1;
        let mut found = Vec::new();
        extend(rem, d, 1, &mut f, &mut g, &mut found);
        for (factor, quot) in found {
            if !ok_order(&factor) || quot < factor {
                continue;
            }
            acc.push(factor.clone());
            search(&quot, Some(&factor), left - 1, acc, out);
            acc.pop();
        }
    }
}

/// Fixes `f[j]` and recurses; `g[..j]` already holds the quotient prefix.
fn extend(
    rem: &[i128],
    d: usize,
    j: usize,
    f: &mut Vec<i128>,
    g: &mut Vec<i128>,
    found: &mut Vec<(Vec<i128>, Vec<i128>)>,
) {
    let total = rem.len() - 1;
    let gdeg = total - d;
    if j > d {
        // f is complete; finish the quotient and confirm the division is exact.
        for i in (d + 1)..=total {
            let v = quotient_coeff(rem, f, g, i);
            let ok = if i <= gdeg { v >= 1 } else { v == 0 };
            if !ok {
                return;
            }
            g[i] = v;
        }
        found.push((f.clone(), g[..=gdeg].to_vec()));
        return;
    }
    for c in 1..=rem[j] {
        if j == d && rem[total] % c != 0 {
            continue;
        }
        f[j] = c;
        let v = quotient_coeff(rem, f, g, j);
        let ok = if j <= gdeg { v >= 1 } else { v == 0 };
        // Quotient coefficients only shrink as f[j] grows.
        if j <= gdeg && v < 1 {
            break;
        }
        if !ok {
            continue;
        }
        g[j] = v;
        extend(rem, d, j + 1, f, g, found);
    }
    f[j] = 0;
}

fn quotient_coeff(rem: &[i128], f: &[i128], g: &[i128], i: usize) -> i128 {
    let mut v = rem[i];
    for t in 1..=i.min(f.len() - 1) {
        v -= f[t] * g[i - t];
    }
    v
}
