//! Orthogonality checks built on the SU(2) quadrature.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use super::quadrature::{gauss_legendre, integrate, integrate_many, HaarGrid};
use crate::error::{Error, Result};
use crate::exactcomb::{check_l, factorial, rational_to_f64, HalfInt};
use crate::group::{diag_element, sample_haar, Mat2C};
use crate::specfun::{jacobi_eval, jacobi_norm, legendre, JacobiParams};
use crate::wigner::{character, oracle_matrix, rotation};
use num_rational::BigRational;

/// Result of a Schur orthogonality check.
#[derive(Debug, Clone, PartialEq)]
pub struct SchurReport {
    pub l: HalfInt,
    pub l_prime: HalfInt,
    pub integrals: usize,
    pub max_deviation: f64,
    /// `(m, n, m', n')` of the largest deviation.
    pub worst: (HalfInt, HalfInt, HalfInt, HalfInt),
}

/// `max |int t^l_{m,n} conj(t^{l'}_{m',n'}) dmu - delta / (2l + 1)|` over all
/// index tuples.
pub fn schur_check(grid: &HaarGrid, l: HalfInt, l_prime: HalfInt) -> Result<SchurReport> {
    check_l(l)?;
    check_l(l_prime)?;
    grid.require(l)?;
    grid.require(l_prime)?;
    let (d, dp) = (dim(l), dim(l_prime));
    let values = integrate_many(grid, d * d * dp * dp, |g, out| {
        let t = oracle_matrix(l, g)?;
        let u = oracle_matrix(l_prime, g)?;
        let mut k = 0;
        for x in t.entries() {
            for y in u.entries() {
                out[k] = x * y.conj();
                k += 1;
            }
        }
        Ok(())
    })?;
    let target = 1.0 / d as f64;
    let mut report = SchurReport {
        l,
        l_prime,
        integrals: values.len(),
        max_deviation: -1.0,
        worst: (HalfInt::ZERO, HalfInt::ZERO, HalfInt::ZERO, HalfInt::ZERO),
    };
    let proj: Vec<HalfInt> = l.projections().collect();
    let proj_p: Vec<HalfInt> = l_prime.projections().collect();
    for (i, v) in values.iter().enumerate() {
        let (row, col) = (i / (dp * dp), i % (dp * dp));
        let (m, n) = (proj[row / d], proj[row % d]);
        let (mp, np) = (proj_p[col / dp], proj_p[col % dp]);
        let want = if l == l_prime && m == mp && n == np { target } else { 0.0 };
        let dev = (v - want).norm();
        if dev > report.max_deviation {
            report.max_deviation = dev;
            report.worst = (m, n, mp, np);
        }
    }
    Ok(report)
}

/// `int |chi_l|^2 dmu`; equal to one because `t^l` is irreducible.
pub fn character_norm(grid: &HaarGrid, l: HalfInt) -> Result<f64> {
    check_l(l)?;
    grid.require(l)?;
    let mut err = None;
    let v = integrate(grid, |g| match character(l, g) {
        Ok(chi) => Complex64::new(chi.norm_sqr(), 0.0),
        Err(e) => {
            err.get_or_insert(e);
            Complex64::new(0.0, 0.0)
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(v.re),
    }
}

/// Largest deviation of the Gram matrix of `sqrt(2l + 1) t^l_{m,n}`,
/// `l <= max_l`, from the identity.
pub fn peter_weyl_gram(grid: &HaarGrid, max_l: HalfInt) -> Result<f64> {
    check_l(max_l)?;
    grid.require(max_l)?;
    let spins: Vec<HalfInt> =
        (0..=max_l.twice()).map(HalfInt::from_twice).collect();
    let count: usize = spins.iter().map(|&l| dim(l) * dim(l)).sum();
    let values = integrate_many(grid, count * count, |g, out| {
        let mut f = Vec::with_capacity(count);
        for &l in &spins {
            let s = (dim(l) as f64).sqrt();
            f.extend(oracle_matrix(l, g)?.entries().iter().map(|x| x * s));
        }
        for (i, x) in f.iter().enumerate() {
            for (j, y) in f.iter().enumerate() {
                out[i * count + j] = x * y.conj();
            }
        }
        Ok(())
    })?;
    Ok(values
        .iter()
        .enumerate()
        .map(|(k, v)| {
            let want = if k / count == k % count { 1.0 } else { 0.0 };
            (v - want).norm()
        })
        .fold(0.0, f64::max))
}

/// Deviation of the substituted Jacobi form of the orthogonality relation
/// from `delta_{l,l'} / (2l + 1)`, for `m + n >= 0` and `m - n >= 0`.
pub fn jacobi_orthogonality_check(l: HalfInt, l_prime: HalfInt, m: HalfInt, n: HalfInt) -> Result<f64> {
    check_l(l)?;
    check_l(l_prime)?;
    let (s, d) = (m + n, m - n);
    if !s.is_integer() || s.twice() < 0 || d.twice() < 0 {
        return Err(Error::domain(format!("(m, n) = ({m}, {n}) is not in the quadrant m >= |n|")));
    }
    if m.twice() > l.twice() || m.twice() > l_prime.twice() {
        return Err(Error::domain(format!("m = {m} exceeds l = {l} or l' = {l_prime}")));
    }
    if !(l - m).is_integer() || !(l_prime - m).is_integer() {
        return Err(Error::domain("l - m and l' - m must be integers"));
    }
    let (alpha, beta) = (s.to_int()? as u32, d.to_int()? as u32);
    let (k1, k2) = ((l - m).to_int()? as u32, (l_prime - m).to_int()? as u32);
    let p1 = JacobiParams::new(alpha as f64, beta as f64, k1)?;
    let p2 = JacobiParams::new(alpha as f64, beta as f64, k2)?;
    let degree = (k1 + k2 + alpha + beta) as usize;
    let (xs, ws) = gauss_legendre(degree / 2 + 1)?;
    let integral: f64 = xs
        .iter()
        .zip(&ws)
        .map(|(&x, w)| {
            w * jacobi_eval(&p1, x)
                * jacobi_eval(&p2, x)
                * (1.0 - x).powi(alpha as i32)
                * (1.0 + x).powi(beta as i32)
        })
        .sum();
    let fact = |h: HalfInt| -> Result<num_bigint::BigInt> { factorial(h.to_int()?) };
    let prefactor = rational_to_f64(&BigRational::new(
        fact(l + m)? * fact(l - m)?,
        fact(l + n)? * fact(l - n)? * num_bigint::BigInt::from(2u8).pow(alpha + beta + 1),
    ));
    let want = if l == l_prime { 1.0 / dim(l) as f64 } else { 0.0 };
    Ok((prefactor * integral - want).abs())
}

/// Deviation of `int P_n1 P_n2 (1-x)^alpha (1+x)^beta dx` from `h_n delta`,
/// relative to `sqrt(h_n1 h_n2)`.
pub fn jacobi_weight_orthogonality(alpha: u32, beta: u32, n1: u32, n2: u32) -> Result<f64> {
    let p1 = JacobiParams::new(alpha as f64, beta as f64, n1)?;
    let p2 = JacobiParams::new(alpha as f64, beta as f64, n2)?;
    let degree = (n1 + n2 + alpha + beta) as usize;
    let (xs, ws) = gauss_legendre(degree / 2 + 1)?;
    let integral: f64 = xs
        .iter()
        .zip(&ws)
        .map(|(&x, w)| {
            w * jacobi_eval(&p1, x)
                * jacobi_eval(&p2, x)
                * (1.0 - x).powi(alpha as i32)
                * (1.0 + x).powi(beta as i32)
        })
        .sum();
    let (h1, h2) = (jacobi_norm(&p1)?, jacobi_norm(&p2)?);
    let want = if n1 == n2 { h1 } else { 0.0 };
    Ok((integral - want).abs() / (h1 * h2).sqrt())
}

/// `|P_l(cos t1) P_l(cos t2) - (1/2pi) int P_l(cos t1 cos t2 + sin t1 sin t2 cos phi) dphi|`
/// with the `n_phi`-point trapezoidal rule.
pub fn legendre_product_check(l: u32, theta1: f64, theta2: f64, n_phi: usize) -> Result<f64> {
    if n_phi < 2 * l as usize + 1 {
        return Err(Error::domain(format!("n_phi = {n_phi} is below 2l + 1 = {}", 2 * l + 1)));
    }
    let (s1, c1) = theta1.sin_cos();
    let (s2, c2) = theta2.sin_cos();
    let mean = (0..n_phi)
        .map(|i| legendre(l, c1 * c2 + s1 * s2 * (TAU * i as f64 / n_phi as f64).cos()))
        .sum::<f64>()
        / n_phi as f64;
    Ok((legendre(l, c1) * legendre(l, c2) - mean).abs())
}

/// The factorized element
/// `k(t1/2) a_{phi/2} [[sin(t2/2), cos(t2/2)], [-cos(t2/2), sin(t2/2)]]`.
pub fn addition_element(theta1: f64, theta2: f64, phi: f64) -> Mat2C {
    rotation(theta1 / 2.0) * diag_element(phi / 2.0) * rotation(theta2 / 2.0).transpose()
}

/// Largest deviation of `t^l_{0,0}` at [`addition_element`] from the
/// Legendre addition formula and from its expansion over `k`.
pub fn addition_formula_check(l: u32, theta1: f64, theta2: f64, phi: f64) -> Result<f64> {
    let lh = HalfInt::from_int(l as i64);
    let t = oracle_matrix(lh, &addition_element(theta1, theta2, phi))?.get(HalfInt::ZERO, HalfInt::ZERO)?;
    let (s1, c1) = theta1.sin_cos();
    let (s2, c2) = theta2.sin_cos();
    let closed = legendre(l, c1 * c2 + s1 * s2 * phi.cos());
    let left = oracle_matrix(lh, &rotation(theta1 / 2.0))?;
    let right = oracle_matrix(lh, &rotation(theta2 / 2.0).transpose())?;
    let mut expansion = Complex64::new(0.0, 0.0);
    for k in lh.projections() {
        let phase = Complex64::from_polar(1.0, -(k.to_f64()) * phi);
        expansion += left.get(HalfInt::ZERO, k)? * right.get(k, HalfInt::ZERO)? * phase;
    }
    Ok((t - closed).norm().max((expansion - closed).norm()))
}

/// Monte Carlo estimate of a real integral over SU(2).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MonteCarloEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub samples: usize,
}

/// Averages `f` over `samples` seeded Haar-random elements.
pub fn monte_carlo<F>(seed: u64, samples: usize, mut f: F) -> Result<MonteCarloEstimate>
where
    F: FnMut(&Mat2C) -> Result<f64>,
{
    if samples < 2 {
        return Err(Error::domain("Monte Carlo needs at least two samples"));
    }
    let values = sample_haar(seed, samples).iter().map(&mut f).collect::<Result<Vec<f64>>>()?;
    let n = samples as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    Ok(MonteCarloEstimate { mean, std_error: (var / n).sqrt(), samples })
}

fn dim(l: HalfInt) -> usize {
    (l.twice() + 1) as usize
}
