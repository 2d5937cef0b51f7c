//! Exact dense polynomials over arbitrary-precision integers.
//!
//! [`IntPoly`] stores coefficients in ascending order of power with no
//! trailing zeros, so structural equality is polynomial equality. It houses
//! independence polynomials, their reduced forms, Chebyshev polynomials and
//! iterated compositions.

mod factor;
mod text;

pub use factor::factorizations_positive;
pub use text::ParsePolyError;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Complex sample point used by evaluation and the dynamics module.
pub type ComplexValue = Complex64;

/// Default coefficient-size guard: one million decimal digits.
pub const DEFAULT_MAX_DIGITS: u64 = 1_000_000;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("constant term must be 1 for an independence polynomial, found {0}")]
    ConstantTermNotOne(BigInt),
    #[error("coefficient exceeds the guard of {max_digits} decimal digits")]
    CoefficientTooLarge { max_digits: u64 },
    #[error("evaluation overflowed to a non-finite value")]
    NonFinite,
    #[error("degree {degree} exceeds the factorization cap of {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("factorization target must have constant term 1 and positive coefficients")]
    NotPositiveTarget,
    #[error("division is not exact")]
    InexactDivision,
}

/// Guard against runaway coefficient growth in repeated composition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoefficientGuard {
    pub max_digits: u64,
}

impl Default for CoefficientGuard {
    fn default() -> Self {
        CoefficientGuard { max_digits: DEFAULT_MAX_DIGITS }
    }
}

impl CoefficientGuard {
    pub fn new(max_digits: u64) -> Self {
        CoefficientGuard { max_digits }
    }

    /// Checks every coefficient of `p`. The digit count is estimated from the
    /// bit length, which can only overestimate by one digit.
    pub fn check(&self, p: &IntPoly) -> Result<(), PolyError> {
        // bits * log10(2) >= digits - 1
        let max_bits = (self.max_digits as f64 / std::f64::consts::LOG10_2).ceil() as u64 + 4;
        if p.coeffs.iter().any(|c| c.bits() > max_bits) {
            return Err(PolyError::CoefficientTooLarge { max_digits: self.max_digits });
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The identity polynomial `z`.
    pub fn identity() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial<T: Into<BigInt>>(c: T, power: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs<T: Into<BigInt>>(coeffs: Vec<T>) -> Self {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `z^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// True when `a_0 = 1` and `a_i >= 1` for every `1 <= i <= degree`.
    pub fn is_independence_form(&self) -> bool {
        self.coeffs.first().is_some_and(One::is_one) && self.coeffs.iter().skip(1).all(|c| c.is_positive())
    }

    /// The reduced form `p - 1` of an independence polynomial.
    pub fn reduced(&self) -> Result<IntPoly, PolyError> {
        let a0 = self.coeff(0);
        if !a0.is_one() {
            return Err(PolyError::ConstantTermNotOne(a0));
        }
        Ok(self - &IntPoly::one())
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    /// `self(inner(z))`, checked against the default coefficient guard.
    pub fn compose(&self, inner: &IntPoly) -> Result<IntPoly, PolyError> {
        self.compose_guarded(inner, &CoefficientGuard::default())
    }

    /// Horner composition; the guard is checked after every multiplication.
    pub fn compose_guarded(&self, inner: &IntPoly, guard: &CoefficientGuard) -> Result<IntPoly, PolyError> {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &IntPoly::constant(c.clone());
            guard.check(&acc)?;
        }
        Ok(acc)
    }

    /// The `m`-fold self-composition `p∘p∘…∘p`; `m = 0` gives `z`.
    pub fn iterate(&self, m: usize, guard: &CoefficientGuard) -> Result<IntPoly, PolyError> {
        let mut acc = IntPoly::identity();
        for _ in 0..m {
            acc = self.compose_guarded(&acc, guard)?;
        }
        Ok(acc)
    }

    /// Exact evaluation at an integer.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation in double precision.
    ///
    /// Rounding error follows the usual backward-error bound of Horner's rule:
    /// the computed value is exact for coefficients perturbed by at most
    /// `2·deg·ε` relatively.
    pub fn evaluate(&self, z: ComplexValue) -> Result<ComplexValue, PolyError> {
        let coeffs = self.to_f64()?;
        let v = horner(&coeffs, z);
        if v.re.is_finite() && v.im.is_finite() {
            Ok(v)
        } else {
            Err(PolyError::NonFinite)
        }
    }

    /// Coefficients as doubles; errors if any coefficient overflows.
    pub fn to_f64(&self) -> Result<Vec<f64>, PolyError> {
        self.coeffs.iter().map(|c| c.to_f64().filter(|v| v.is_finite()).ok_or(PolyError::NonFinite)).collect()
    }

    /// Largest `k` with `(z - x)^k` dividing `self`, by repeated synthetic
    /// division. The zero polynomial reports 0.
    pub fn multiplicity_at(&self, x: i64) -> usize {
        if self.is_zero() {
            return 0;
        }
        let x = BigInt::from(x);
        let mut k = 0;
        let mut cur = self.coeffs.clone();
        while cur.len() > 1 {
            let (quot, rem) = synthetic_division(&cur, &x);
            if !rem.is_zero() {
                break;
            }
            k += 1;
            cur = quot;
        }
        k
    }

    /// Quotient and remainder of division by a polynomial whose leading
    /// coefficient divides every intermediate leading term; `None` otherwise.
    pub fn div_rem_exact(&self, divisor: &IntPoly) -> Option<(IntPoly, IntPoly)> {
        let d = divisor.degree()?;
        let lead = divisor.leading()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Some((IntPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + d];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * dc;
            }
            quot[i] = q;
        }
        Some((IntPoly::from_coeffs(quot), IntPoly::from_coeffs(rem)))
    }

    /// Exact quotient `self / divisor`, or an error if there is a remainder.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly, PolyError> {
        match self.div_rem_exact(divisor) {
            Some((q, r)) if r.is_zero() => Ok(q),
            _ => Err(PolyError::InexactDivision),
        }
    }

    /// Gcd of the coefficients, always non-negative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        IntPoly::from_coeffs(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Primitive gcd over the integers (primitive pseudo-remainder sequence).
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_remainder(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    fn pseudo_remainder(&self, divisor: &IntPoly) -> IntPoly {
        let d = divisor.degree().expect("non-zero divisor");
        let lead = divisor.leading().expect("non-zero divisor").clone();
        let mut rem = self.coeffs.clone();
        while rem.len() > d {
            let top = rem.last().cloned().unwrap_or_default();
            let shift = rem.len() - 1 - d;
            for c in rem.iter_mut() {
                *c *= &lead;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] -= &top * dc;
            }
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        IntPoly::from_coeffs(rem)
    }

    /// The product of the distinct irreducible factors, made primitive. Every
    /// root of `self` is a simple root of the result.
    pub fn squarefree_part(&self) -> IntPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.primitive_part();
        }
        // g is primitive, so it divides over the integers (Gauss's lemma).
        self.div_exact(&g).expect("gcd divides the polynomial").primitive_part()
    }
}

pub(crate) fn horner(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

fn synthetic_division(coeffs: &[BigInt], x: &BigInt) -> (Vec<BigInt>, BigInt) {
    let n = coeffs.len();
    let mut quot = vec![BigInt::zero(); n - 1];
    let mut carry = BigInt::zero();
    for i in (0..n).rev() {
        let v = &coeffs[i] + &carry * x;
        if i == 0 {
            return (quot, v);
        }
        quot[i - 1] = v.clone();
        carry = v;
    }
    unreachable!("loop returns at i = 0")
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Product of a slice of polynomials; the empty product is 1.
pub fn product(factors: &[IntPoly]) -> IntPoly {
    factors.iter().fold(IntPoly::one(), |acc, f| &acc * f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn trailing_zeros_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert_eq!(p(&[0, 0]).degree(), None);
    }

    #[test]
    fn reduced_examples() {
        assert_eq!(p(&[1, 7]).reduced().unwrap(), p(&[0, 7]));
        assert_eq!(p(&[1, 4, 3]).reduced().unwrap(), p(&[0, 4, 3]));
        let cube = p(&[1, 3, 3, 1]);
        assert_eq!(cube.reduced().unwrap(), p(&[0, 3, 3, 1]));
        assert_eq!(p(&[2, 1]).reduced(), Err(PolyError::ConstantTermNotOne(BigInt::from(2))));
    }

    #[test]
    fn compose_identity_both_sides() {
        let q = p(&[0, 4, 3]);
        assert_eq!(q.compose(&IntPoly::identity()).unwrap(), q);
        assert_eq!(IntPoly::identity().compose(&q).unwrap(), q);
    }

    #[test]
    fn iterate_linear() {
        let guard = CoefficientGuard::default();
        for n in 2..6i64 {
            for m in 0..6u32 {
                let it = p(&[0, n]).iterate(m as usize, &guard).unwrap();
                assert_eq!(it, IntPoly::monomial(n.pow(m), 1));
            }
        }
    }

    #[test]
    fn guard_trips() {
        let q = p(&[0, 10]);
        let guard = CoefficientGuard::new(5);
        assert!(q.iterate(4, &guard).is_ok());
        assert_eq!(q.iterate(7, &guard), Err(PolyError::CoefficientTooLarge { max_digits: 5 }));
    }

    #[test]
    fn evaluate_examples() {
        let z0 = ComplexValue::new(0.0, 0.0);
        assert_eq!(p(&[0, 4, 3]).evaluate(z0).unwrap(), z0);
        for n in 1..20i64 {
            let v = p(&[0, n]).evaluate(ComplexValue::new(-1.0 / n as f64, 0.0)).unwrap();
            assert!((v - ComplexValue::new(-1.0, 0.0)).norm() < 1e-15);
        }
        let q = p(&[0, 2, 1]);
        assert_eq!(q.evaluate(ComplexValue::new(-1.0, 0.0)).unwrap(), ComplexValue::new(-1.0, 0.0));
    }

    #[test]
    fn evaluate_overflow_is_error() {
        let q = p(&[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(q.evaluate(ComplexValue::new(1e40, 0.0)), Err(PolyError::NonFinite));
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(p(&[1, 4, 5, 2]).multiplicity_at(-1), 2);
        assert_eq!(p(&[1, 9, 24, 16]).multiplicity_at(-1), 1);
        assert_eq!(p(&[1, 4, 3]).multiplicity_at(-1), 1);
        assert_eq!(p(&[1, 4, 3]).multiplicity_at(1), 0);
        assert_eq!(p(&[1, 5, 10, 10, 5, 1]).multiplicity_at(-1), 5);
    }

    #[test]
    fn squarefree_collapses_repeated_roots() {
        let q = p(&[1, 4, 5, 2]); // (1+z)^2 (1+2z)
        assert_eq!(q.squarefree_part(), p(&[1, 3, 2]));
        assert_eq!(p(&[1, 4, 6, 4, 1]).squarefree_part(), p(&[1, 1]));
        assert_eq!(p(&[0, 4, 3]).squarefree_part(), p(&[0, 4, 3]));
    }

    #[test]
    fn gcd_and_division() {
        let a = &p(&[1, 1]) * &p(&[2, 0, 1]);
        let b = &p(&[1, 1]) * &p(&[3, 1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert_eq!(a.div_exact(&p(&[1, 1])).unwrap(), p(&[2, 0, 1]));
        assert_eq!(a.div_exact(&p(&[1, 2])), Err(PolyError::InexactDivision));
    }

    fn arb_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-20i64..20, 0..5).prop_map(|c| IntPoly::from_i64(&c))
    }

    proptest! {
        #[test]
        fn compose_is_associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            let left = a.compose(&b).unwrap().compose(&c).unwrap();
            let right = a.compose(&b.compose(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn leibniz_rule(a in arb_poly(), b in arb_poly()) {
            let lhs = (&a * &b).derivative();
            let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn multiplicity_matches_derivatives(a in arb_poly(), k in 0usize..4, x in -3i64..3) {
            prop_assume!(!a.is_zero());
            let factor = p(&[-x, 1]);
            let mut q = a.clone();
            for _ in 0..k {
                q = &q * &factor;
            }
            let mult = q.multiplicity_at(x);
            prop_assert!(mult >= k);
            let xb = BigInt::from(x);
            let mut d = q.clone();
            for _ in 0..mult {
                prop_assert!(d.eval_int(&xb).is_zero());
                d = d.derivative();
            }
            prop_assert!(!d.eval_int(&xb).is_zero());
        }
    }
}
