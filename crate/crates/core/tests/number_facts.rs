use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{Pow, Zero};

#[test]
fn six_power_below_binomial() {
    for n in 3u32..=20 {
        let lhs = BigInt::from(6).pow(n - 1);
        let rhs = binomial(BigInt::from(n * n), BigInt::from(n));
        assert!(lhs < rhs, "n={n}: {lhs} >= {rhs}");
    }
    // Fails at n = 2: 6 = C(4, 2).
    assert_eq!(BigInt::from(6), binomial(BigInt::from(4), BigInt::from(2)));
}

#[test]
fn coprime_powers_do_not_divide() {
    let values: Vec<i64> = (-20..=20).filter(|v: &i64| v.abs() > 1).collect();
    let mut checked = 0;
    for &a in &values {
        for &b in &values {
            if a.gcd(&b) != 1 {
                continue;
            }
            for n in 1u32..=6 {
                let (an, bn) = (BigInt::from(a).pow(n), BigInt::from(b).pow(n));
                assert!(!(&bn % &an).is_zero(), "{a}^{n} divides {b}^{n}");
                checked += 1;
            }
        }
    }
    assert!(checked > 1000);
}
