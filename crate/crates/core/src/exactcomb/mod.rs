//! Exact integer combinatorics and half-integer spin labels.
//!
//! Every prefactor in the matrix-element formulas is a ratio of factorials or
//! binomials. These are formed exactly and only rounded to `f64` once, at the
//! point where they meet floating-point monomials.

mod halfint;

pub use halfint::{check_l, check_spin, is_valid_spin, HalfInt};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `n!` exactly.
pub fn factorial(n: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::domain(format!("factorial of negative number {n}")));
    }
    Ok((2..=n).fold(BigInt::one(), |acc, k| acc * k))
}

/// Largest `n` for which every `C(n, k)` fits in a `u64`.
const U64_BINOMIAL_MAX_N: u64 = 62;

fn binomial_u64(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact: acc * (n - i) is divisible by i + 1
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// `C(n, k)` exactly; zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = k as u64;
    if n <= U64_BINOMIAL_MAX_N {
        return BigInt::from(binomial_u64(n, k));
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `C(n, k)` rounded once to `f64`.
pub fn binomial_f64(n: u64, k: i64) -> f64 {
    if k < 0 || k as u64 > n {
        return 0.0;
    }
    if n <= U64_BINOMIAL_MAX_N {
        return binomial_u64(n, k as u64) as f64;
    }
    bigint_to_f64(&binomial(n, k))
}

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &BigRational, k: u32) -> BigRational {
    let mut acc = BigRational::one();
    let mut factor = a.clone();
    for _ in 0..k {
        acc *= &factor;
        factor += BigInt::one();
    }
    acc
}

pub(crate) fn bigint_to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

pub(crate) fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `sqrt(num / den)` for positive integers, with the quotient formed exactly.
pub fn sqrt_ratio(num: &BigInt, den: &BigInt) -> f64 {
    rational_to_f64(&BigRational::new(num.clone(), den.clone())).sqrt()
}

/// `sqrt(C(2l, l-n) / C(2l, l-m))`, the basis renormalization factor relating
/// column `n` to row `m`.
pub fn sqrt_binom_ratio(l: HalfInt, m: HalfInt, n: HalfInt) -> Result<f64> {
    check_spin(l, m)?;
    check_spin(l, n)?;
    let two_l = l.twice() as u64;
    let num_k = (l - n).int();
    let den_k = (l - m).int();
    if two_l <= U64_BINOMIAL_MAX_N {
        let num = binomial_u64(two_l, num_k as u64);
        let den = binomial_u64(two_l, den_k as u64);
        if num == den {
            return Ok(1.0);
        }
        if num < (1 << 53) && den < (1 << 53) {
            return Ok((num as f64 / den as f64).sqrt());
        }
    }
    Ok(sqrt_ratio(&binomial(two_l, num_k), &binomial(two_l, den_k)))
}

/// `sqrt(prod(num!) / prod(den!))` with all factorials exact.
pub(crate) fn sqrt_factorial_ratio(num: &[i64], den: &[i64]) -> f64 {
    let prod = |xs: &[i64]| {
        xs.iter().fold(BigInt::one(), |acc, &k| {
            acc * factorial(k).expect("factorial argument is a nonnegative spin difference")
        })
    };
    sqrt_ratio(&prod(num), &prod(den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Pascal's triangle built by repeated addition.
    fn pascal_row(n: usize) -> Vec<BigInt> {
        let mut row = vec![BigInt::one()];
        for _ in 0..n {
            let mut next = vec![BigInt::one(); row.len() + 1];
            for k in 1..row.len() {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
        }
        row
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0).unwrap(), BigInt::one());
        assert_eq!(factorial(5).unwrap(), BigInt::from(120));
        let iterated = (1..=20u64).product::<u64>();
        assert_eq!(iterated, 2432902008176640000);
        assert_eq!(factorial(20).unwrap(), BigInt::from(iterated));
        assert!(factorial(-1).is_err());
        assert_eq!(factorial(200).unwrap().to_string().len(), 375);
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(4, 5), BigInt::zero());
        assert_eq!(binomial(4, -1), BigInt::zero());
        let row = pascal_row(40);
        assert_eq!(row[20], BigInt::from(137846528820u64));
        assert_eq!(binomial(40, 20), row[20]);
    }

    #[test]
    fn binomial_matches_pascal_beyond_u64_path() {
        let row = pascal_row(90);
        for (k, expected) in row.iter().enumerate() {
            assert_eq!(&binomial(90, k as i64), expected);
        }
        assert_eq!(binomial_f64(90, 45), bigint_to_f64(&row[45]));
    }

    #[test]
    fn binomial_symmetry() {
        for n in 0..=60u64 {
            for k in 0..=n as i64 {
                assert_eq!(binomial(n, k), binomial(n, n as i64 - k));
            }
        }
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(&rat(3, 1), 2), rat(12, 1));
        assert_eq!(pochhammer(&rat(-2, 1), 3), rat(0, 1));
        assert_eq!(pochhammer(&rat(1, 2), 3), rat(15, 8));
        assert_eq!(pochhammer(&rat(-7, 3), 0), rat(1, 1));
    }

    #[test]
    fn pochhammer_factorial_identities() {
        for n in 0..=30i64 {
            for k in 0..=n {
                let n_fact = factorial(n).unwrap();
                let rising = BigRational::new(factorial(n + k).unwrap(), n_fact.clone());
                assert_eq!(rising, pochhammer(&rat(n + 1, 1), k as u32));
                let falling = BigRational::new(n_fact, factorial(n - k).unwrap());
                let sign = if k % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
                assert_eq!(falling, sign * pochhammer(&rat(-n, 1), k as u32));
            }
        }
    }

    #[test]
    fn sqrt_binom_ratio_values() {
        let h = HalfInt::from_twice;
        assert_eq!(sqrt_binom_ratio(h(2), h(2), h(2)).unwrap(), 1.0);
        let v = sqrt_binom_ratio(h(2), h(0), h(2)).unwrap();
        assert!((v - std::f64::consts::FRAC_1_SQRT_2).abs() <= 2.0 * f64::EPSILON * v);
        assert_eq!(sqrt_binom_ratio(h(1), h(1), h(-1)).unwrap(), 1.0);
        assert!(sqrt_binom_ratio(h(2), h(1), h(0)).is_err());
    }

    #[test]
    fn sqrt_binom_ratio_large_spin_within_two_ulp() {
        let h = HalfInt::from_twice;
        // 2l = 140 leaves the u64 path
        let v = sqrt_binom_ratio(h(140), h(0), h(140)).unwrap();
        let exact = BigRational::new(BigInt::one(), binomial(140, 70));
        let expected = rational_to_f64(&exact).sqrt();
        assert!((v - expected).abs() <= 2.0 * f64::EPSILON * expected);
    }

    proptest! {
        #[test]
        fn sqrt_binom_ratio_is_reciprocal(l2 in 0i64..40, i in 0i64..40, j in 0i64..40) {
            let l = HalfInt::from_twice(l2);
            let m = HalfInt::from_twice(-l2 + 2 * (i % (l2 + 1)));
            let n = HalfInt::from_twice(-l2 + 2 * (j % (l2 + 1)));
            let forward = sqrt_binom_ratio(l, m, n).unwrap();
            let back = sqrt_binom_ratio(l, n, m).unwrap();
            prop_assert!((forward * back - 1.0).abs() < 4.0 * f64::EPSILON);
        }
    }
}
