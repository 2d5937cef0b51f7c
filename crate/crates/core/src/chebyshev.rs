//! Chebyshev polynomials of the first kind and their affine conjugates.
//!
//! If `a·P(z) + 1 = T_n(a·z + 1)` then the coefficients of `P` are
//! `a_m = a^(m-1) · T_n^(m)(1) / m!`, and `T_n^(m)(1)` has the closed form
//! `∏_{k<m} (n² − k²)/(2k + 1)`. The Julia set of `T_n` is `[-1, 1]`, so the
//! Julia set of such a `P` is the segment `[-2/a, 0]`. With `a = k/2` the
//! segment is `[-4/k, 0]`.
//!
//! Everything here is exact.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::IntPoly;

/// Segment indices that can occur for independence polynomials.
pub const SEGMENT_KS: [u32; 4] = [1, 2, 3, 4];

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ChebError {
    #[error("conjugation needs a > 0, got {0}")]
    NonPositiveScale(BigRational),
    #[error("conjugation needs degree n >= 2, got {0}")]
    DegreeTooSmall(u32),
    #[error("T_{n}^({m})(1) came out non-integral")]
    NonIntegral { n: u32, m: u32 },
}

/// `T_n` by the three-term recurrence `T_n = 2z·T_{n-1} − T_{n-2}`.
pub fn chebyshev(n: u32) -> IntPoly {
    let mut prev = IntPoly::one();
    if n == 0 {
        return prev;
    }
    let two_z = IntPoly::monomial(2, 1);
    let mut cur = IntPoly::identity();
    for _ in 1..n {
        let next = &(&two_z * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `T_n^(m)(1) = ∏_{k=0}^{m-1} (n² − k²)/(2k + 1)`; `m = 0` gives `T_n(1) = 1`.
pub fn cheb_derivative_at_one(n: u32, m: u32) -> Result<BigInt, ChebError> {
    let nn = BigInt::from(n) * n;
    let mut acc = BigRational::one();
    for k in 0..m {
        let k = BigInt::from(k);
        acc *= BigRational::new(&nn - &k * &k, BigInt::from(2) * &k + 1);
    }
    if acc.is_integer() {
        Ok(acc.to_integer())
    } else {
        Err(ChebError::NonIntegral { n, m })
    }
}

/// The affine map `φ(z) = a·z + 1` paired with the degree `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugationParams {
    a: BigRational,
    n: u32,
}

impl ConjugationParams {
    pub fn new(a: BigRational, n: u32) -> Result<Self, ChebError> {
        if !a.is_positive() {
            return Err(ChebError::NonPositiveScale(a));
        }
        if n < 2 {
            return Err(ChebError::DegreeTooSmall(n));
        }
        Ok(Self { a, n })
    }

    /// `a = k/2`, the parametrization by segment index.
    pub fn from_segment_index(k: u32, n: u32) -> Result<Self, ChebError> {
        Self::new(BigRational::new(k.into(), 2.into()), n)
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

/// `[a_1, …, a_n]` with `a_m = a^(m-1) · T_n^(m)(1) / m!`.
pub fn conjugate_coefficients(p: &ConjugationParams) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(p.n as usize);
    let mut a_pow = BigRational::one();
    let mut factorial = BigInt::one();
    for m in 1..=p.n {
        factorial *= m;
        let d = cheb_derivative_at_one(p.n, m).expect("derivative product is integral");
        out.push(&a_pow * BigRational::new(d, factorial.clone()));
        a_pow *= &p.a;
    }
    out
}

/// The reduced polynomial `Σ a_m z^m` for `a = k/2`, or `None` when some
/// coefficient is not an integer.
pub fn candidate(n: u32, k: u32) -> Result<Option<IntPoly>, ChebError> {
    let params = ConjugationParams::from_segment_index(k, n)?;
    let coeffs = conjugate_coefficients(&params);
    if !coeffs.iter().all(|c| c.is_integer()) {
        return Ok(None);
    }
    let mut ints = vec![BigInt::zero()];
    ints.extend(coeffs.into_iter().map(|c| c.to_integer()));
    Ok(Some(IntPoly::from_coeffs(ints)))
}

/// Candidates for `k ∈ {1, 2, 3, 4}`, all of which have integer coefficients.
pub fn segment_candidates(n: u32) -> Result<BTreeMap<u32, IntPoly>, ChebError> {
    let mut out = BTreeMap::new();
    for k in SEGMENT_KS {
        let p = candidate(n, k)?.expect("k <= 4 candidates are integral");
        out.insert(k, p);
    }
    Ok(out)
}

fn rat_poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

/// Checks `a·P(z) + 1 = T_n(a·z + 1)` as an identity of rational polynomials.
pub fn conjugacy_holds(p: &IntPoly, params: &ConjugationParams) -> bool {
    let cheb = chebyshev(params.n);
    let phi = [BigRational::one(), params.a.clone()];
    let mut rhs = vec![BigRational::zero()];
    for c in cheb.coeffs().iter().rev() {
        rhs = rat_poly_mul(&rhs, &phi);
        rhs[0] += BigRational::from_integer(c.clone());
    }
    let mut lhs: Vec<BigRational> =
        p.coeffs().iter().map(|c| &params.a * BigRational::from_integer(c.clone())).collect();
    if lhs.is_empty() {
        lhs.push(BigRational::zero());
    }
    lhs[0] += BigRational::one();
    trim(lhs) == trim(rhs)
}

/// Right endpoint is 0, left endpoint `-4/k`.
pub fn segment_left_end(k: u32) -> f64 {
    -4.0 / f64::from(k)
}
