use num_bigint::BigInt;
use num_rational::BigRational;

use super::hyper::{hyp2f1_terminating, Hyp21Spec};
use super::intpoly;
use super::series;
use crate::error::{Error, Result};
use crate::exactcomb::{binomial, factorial, pochhammer, rational_to_f64};

/// Degree and parameters of a Jacobi polynomial `P_n^(alpha, beta)`.
///
/// The polynomial is defined for every real `alpha`, `beta`; only the
/// orthogonality weight needs `alpha, beta > -1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams {
    pub alpha: f64,
    pub beta: f64,
    pub n: u32,
}

impl JacobiParams {
    pub fn new(alpha: f64, beta: f64, n: u32) -> Result<Self> {
        if !alpha.is_finite() || !beta.is_finite() {
            return Err(Error::domain("Jacobi parameters must be finite"));
        }
        Ok(JacobiParams { alpha, beta, n })
    }

    pub fn legendre(n: u32) -> Self {
        JacobiParams {
            alpha: 0.0,
            beta: 0.0,
            n,
        }
    }

    fn integer_params(&self) -> Option<(i64, i64)> {
        let int = |v: f64| (v.fract() == 0.0 && v.abs() < 1e15).then_some(v as i64);
        Some((int(self.alpha)?, int(self.beta)?))
    }
}

fn exact(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite parameter")
}

/// Exact coefficients `c_k` of `P_n^(alpha,beta)(x) = sum_k c_k ((x-1)/2)^k`,
/// `c_k = (n+alpha+beta+1)_k (alpha+k+1)_{n-k} / (k! (n-k)!)`.
pub fn jacobi_coefficients(p: &JacobiParams) -> Vec<BigRational> {
    let n = p.n;
    if let Some((a, b)) = p.integer_params().filter(|&(a, b)| a >= 0 && b >= 0) {
        // c_k = C(n+a+b+k, k) C(n+a, n-k)
        let (a, b, n) = (a as u64, b as u64, n as u64);
        return (0..=n)
            .map(|k| {
                let c = binomial(n + a + b + k, k as i64) * binomial(n + a, (n - k) as i64);
                BigRational::from_integer(c)
            })
            .collect();
    }
    let (alpha, beta) = (exact(p.alpha), exact(p.beta));
    let top = &alpha + &beta + BigRational::from_integer(BigInt::from(n + 1));
    (0..=n)
        .map(|k| {
            let low = &alpha + BigRational::from_integer(BigInt::from(k + 1));
            let num = pochhammer(&top, k) * pochhammer(&low, n - k);
            let den = factorial(k as i64).unwrap() * factorial((n - k) as i64).unwrap();
            num / BigRational::from_integer(den)
        })
        .collect()
}

fn jacobi_coefficients_f64(p: &JacobiParams) -> Vec<f64> {
    let n = p.n;
    let top = p.n as f64 + p.alpha + p.beta + 1.0;
    let poch = |a: f64, k: u32| (0..k).fold(1.0, |acc, j| acc * (a + j as f64));
    let fact = |k: u32| (1..=k).fold(1.0, |acc, j| acc * j as f64);
    (0..=n)
        .map(|k| poch(top, k) * poch(p.alpha + k as f64 + 1.0, n - k) / (fact(k) * fact(n - k)))
        .collect()
}

/// `P_n^(alpha,beta)(x)` from its explicit expansion in powers of `(x-1)/2`.
pub fn jacobi_eval(p: &JacobiParams, x: f64) -> f64 {
    // (x - 1)/2 is rounded once; the sum is then exact at the rounded point
    let y = (x - 1.0) / 2.0;
    if p.integer_params().is_some_and(|(a, b)| a >= 0 && b >= 0) {
        let coeffs = jacobi_coefficients(p);
        return series::eval_exact_coeffs(&coeffs, y);
    }
    let approx = jacobi_coefficients_f64(p);
    let ulps = 4.0 * p.n as f64 + 4.0;
    series::eval_guarded(&approx, ulps, y, || jacobi_coefficients(p))
}

/// `P_n^(alpha,beta)(x) = (alpha+1)_n / n! * 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2)`.
pub fn jacobi_via_2f1(p: &JacobiParams, x: f64) -> Result<f64> {
    let n = p.n as f64;
    let spec = Hyp21Spec::new(-n, n + p.alpha + p.beta + 1.0, p.alpha + 1.0, (1.0 - x) / 2.0)
        .map_err(|e| match e {
            Error::Domain(msg) => Error::domain(format!(
                "hypergeometric form of P_{}^({},{}) undefined: {msg}",
                p.n, p.alpha, p.beta
            )),
            other => other,
        })?;
    let lead = pochhammer(&exact(p.alpha + 1.0), p.n)
        / BigRational::from_integer(factorial(p.n as i64).unwrap());
    Ok(rational_to_f64(&lead) * hyp2f1_terminating(&spec))
}

/// Exact monomial coefficients of `P_n^(alpha,beta)` for integer
/// `alpha, beta >= 0` from the Rodrigues formula
/// `(-1)^n / (2^n n!) (1-x)^-alpha (1+x)^-beta d^n/dx^n [(1-x)^(n+alpha) (1+x)^(n+beta)]`.
///
/// The weight factors are cancelled by exact polynomial division, so the
/// result is valid at `x = ±1`.
pub fn jacobi_rodrigues_coefficients(n: u32, alpha: u32, beta: u32) -> Vec<BigRational> {
    let n_ = n as u64;
    let product = intpoly::mul(
        &intpoly::linear_power(-1, n_ + alpha as u64),
        &intpoly::linear_power(1, n_ + beta as u64),
    );
    let mut poly = intpoly::derivative(&product, n as usize);
    for _ in 0..alpha {
        poly = intpoly::divide_linear(&poly, -1).expect("(1-x)^alpha divides the derivative");
    }
    for _ in 0..beta {
        poly = intpoly::divide_linear(&poly, 1).expect("(1+x)^beta divides the derivative");
    }
    let mut scale = BigInt::from(2u32).pow(n) * factorial(n as i64).unwrap();
    if n % 2 == 1 {
        scale = -scale;
    }
    poly.into_iter()
        .map(|c| BigRational::new(c, scale.clone()))
        .collect()
}

pub fn jacobi_rodrigues(p: &JacobiParams, x: f64) -> Result<f64> {
    let (alpha, beta) = p
        .integer_params()
        .filter(|&(a, b)| a >= 0 && b >= 0)
        .ok_or_else(|| {
            Error::domain(format!(
                "Rodrigues route needs nonnegative integer parameters, got ({}, {})",
                p.alpha, p.beta
            ))
        })?;
    let coeffs = jacobi_rodrigues_coefficients(p.n, alpha as u32, beta as u32);
    Ok(series::eval_exact_coeffs(&coeffs, x))
}

/// Legendre polynomial `P_l = P_l^(0,0)`.
pub fn legendre(l: u32, x: f64) -> f64 {
    jacobi_eval(&JacobiParams::legendre(l), x)
}

/// Squared norm `h_n^(alpha,beta) = int_{-1}^{1} P_n^2 (1-x)^alpha (1+x)^beta dx`.
pub fn jacobi_norm(p: &JacobiParams) -> Result<f64> {
    if p.alpha <= -1.0 || p.beta <= -1.0 {
        return Err(Error::domain(format!(
            "Jacobi weight needs alpha, beta > -1, got ({}, {})",
            p.alpha, p.beta
        )));
    }
    if let Some((alpha, beta)) = p.integer_params() {
        return Ok(rational_to_f64(&jacobi_norm_exact(p.n, alpha as u32, beta as u32)));
    }
    let n = p.n as f64;
    let (a, b) = (p.alpha, p.beta);
    let rising = (0..p.n).fold(1.0, |acc, j| acc * (n + a + b + 1.0 + j as f64));
    let ln = (a + b + 1.0) * std::f64::consts::LN_2
        + statrs::function::gamma::ln_gamma(n + a + 1.0)
        + statrs::function::gamma::ln_gamma(n + b + 1.0)
        - statrs::function::gamma::ln_gamma(2.0 * n + a + b + 2.0)
        - statrs::function::factorial::ln_factorial(p.n as u64);
    Ok(rising * ln.exp())
}

/// `h_n^(alpha,beta)` for nonnegative integer parameters, where every gamma
/// value is a factorial.
pub fn jacobi_norm_exact(n: u32, alpha: u32, beta: u32) -> BigRational {
    let (n, a, b) = (n as i64, alpha as i64, beta as i64);
    let f = |k: i64| factorial(k).unwrap();
    let rising = pochhammer(&BigRational::from_integer(BigInt::from(n + a + b + 1)), n as u32);
    let num = BigInt::from(2u32).pow((a + b + 1) as u32) * f(n + a) * f(n + b);
    let den = f(n) * f(2 * n + a + b + 1);
    rising * BigRational::new(num, den)
}
