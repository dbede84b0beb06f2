//! Evaluation of finite power series whose coefficients are known exactly.
//!
//! Terminating hypergeometric sums and Jacobi expansions alternate in sign and
//! can cancel badly. The fast path sums in `f64` while tracking a running
//! error bound; when the bound is not small relative to the result the sum is
//! redone in exact rational arithmetic at the (exactly representable) argument.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactcomb::rational_to_f64;

/// Relative accuracy the fast path must certify before its result is kept.
const ACCEPT_REL: f64 = 1.0 / (1u64 << 46) as f64;

/// `sum_k coeffs[k] * y^k` where `approx[k]` approximates `coeffs[k]` with a
/// relative error of at most `coeff_ulps` units of roundoff.
pub(crate) fn eval_guarded<F>(approx: &[f64], coeff_ulps: f64, y: f64, exact: F) -> f64
where
    F: FnOnce() -> Vec<BigRational>,
{
    let mut sum = 0.0;
    let mut magnitude = 0.0;
    let mut power = 1.0;
    for &c in approx {
        let term = c * power;
        sum += term;
        magnitude += term.abs();
        power *= y;
    }
    let ops = approx.len() as f64;
    let bound = (coeff_ulps + 2.0 * ops + 2.0) * f64::EPSILON * magnitude;
    if !y.is_finite() || !sum.is_finite() || bound <= ACCEPT_REL * sum.abs() {
        return sum;
    }
    eval_exact(&exact(), y)
}

/// Exact evaluation at the rational value of `y`, rounded once.
///
/// `y = Y / 2^e` is dyadic, so with `c_k = N_k / D` the sum equals
/// `sum_k N_k Y^k 2^(e (n - k)) / (D 2^(e n))`, an integer Horner loop.
pub(crate) fn eval_exact(coeffs: &[BigRational], y: f64) -> f64 {
    let Some(yr) = BigRational::from_float(y) else {
        return f64::NAN;
    };
    if coeffs.is_empty() {
        return 0.0;
    }
    let (num_y, den_y) = (yr.numer().clone(), yr.denom().clone());
    let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    let mut acc = BigInt::zero();
    let mut shift = BigInt::one();
    for (i, n) in scaled.iter().rev().enumerate() {
        if i > 0 {
            shift *= &den_y;
        }
        acc = acc * &num_y + n * &shift;
    }
    let total_den = den * shift;
    rational_to_f64(&BigRational::new(acc, total_den))
}

/// Evaluates coefficients that are already exact; the fast path uses their
/// correctly rounded `f64` values.
pub(crate) fn eval_exact_coeffs(coeffs: &[BigRational], y: f64) -> f64 {
    let approx: Vec<f64> = coeffs.iter().map(rational_to_f64).collect();
    eval_guarded(&approx, 1.0, y, || coeffs.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catastrophic_cancellation_falls_back_to_exact() {
        // (1 - y)^20 expanded, evaluated near y = 1
        let coeffs: Vec<BigRational> = (0..=20)
            .map(|k| {
                let c = crate::exactcomb::binomial(20, k);
                let c = if k % 2 == 0 { c } else { -c };
                BigRational::from_integer(c)
            })
            .collect();
        let y = 0.75;
        let v = eval_exact_coeffs(&coeffs, y);
        let expected = 0.25f64.powi(20);
        assert!((v - expected).abs() <= 2.0 * f64::EPSILON * expected);
    }

    #[test]
    fn well_conditioned_sum_keeps_fast_path() {
        let coeffs = vec![BigRational::from_integer(BigInt::from(1)); 5];
        let v = eval_exact_coeffs(&coeffs, 0.5);
        assert!((v - 1.9375).abs() < 1e-15);
    }

    #[test]
    fn integer_horner_matches_rational_horner() {
        let coeffs: Vec<BigRational> = (0..12i64)
            .map(|k| BigRational::new(BigInt::from(3 * k * k - 7), BigInt::from(2 * k + 3)))
            .collect();
        for y in [-0.8125, -0.3, 0.0, 1e-5, 0.7, 3.25] {
            let yr = BigRational::from_float(y).unwrap();
            let mut acc = BigRational::zero();
            for c in coeffs.iter().rev() {
                acc = acc * &yr + c;
            }
            assert_eq!(eval_exact(&coeffs, y), rational_to_f64(&acc));
        }
        assert_eq!(eval_exact(&[], 0.5), 0.0);
    }
}
