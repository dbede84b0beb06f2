use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use super::matrix::{index_of, WignerMatrix};
use super::poly::{ipow, HomogPoly2};
use super::symmetry::{apply_symmetry, to_quadrant, Symmetry};
use crate::error::{Error, Result};
use crate::exactcomb::{
    bigint_to_f64, binomial_f64, check_l, factorial, check_spin, rational_to_f64, sqrt_binom_ratio, sqrt_factorial_ratio,
    HalfInt,
};
use crate::group::{euler_matrix, from_euler, EulerAngles, Mat2C};
use crate::specfun::{
    intpoly, jacobi_coefficients, jacobi_eval, krawtchouk, series, Hyp21Spec, JacobiParams,
};

fn check_pair(l: HalfInt, m: HalfInt, n: HalfInt) -> Result<()> {
    check_spin(l, m)?;
    check_spin(l, n)
}

fn exp_i(x: f64) -> Complex64 {
    Complex64::from_polar(1.0, x)
}

fn horner(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// All matrix elements by symbolic expansion of the generating function
/// `sqrt(C(2l,l-n)) (a z1 + c z2)^(l-n) (b z1 + d z2)^(l+n)`; the coefficient
/// of `z1^(l-m) z2^(l+m)` is `sqrt(C(2l,l-m)) t^l_{m,n}`.
///
/// Defined on all of GL(2, C) and used as the reference for every other route.
pub fn oracle_matrix(l: HalfInt, g: &Mat2C) -> Result<WignerMatrix> {
    check_l(l)?;
    let dim = (l.twice() + 1) as usize;
    let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
    for n in l.projections() {
        let j = index_of(l, n);
        let column = &HomogPoly2::linear_pow(g.a, g.c, (l - n).int() as u32)
            * &HomogPoly2::linear_pow(g.b, g.d, (l + n).int() as u32);
        for m in l.projections() {
            let i = index_of(l, m);
            entries[i * dim + j] = sqrt_binom_ratio(l, m, n)? * column.coeff(i);
        }
    }
    WignerMatrix::from_entries(l, entries)
}

/// `t^l_{m,n}` from the explicit sum over
/// `C(l-n, j) C(l+n, l-m-j) a^j b^(l-m-j) c^(l-n-j) d^(n+m+j)`.
pub fn tmn_sum(l: HalfInt, m: HalfInt, n: HalfInt, g: &Mat2C) -> Result<Complex64> {
    check_pair(l, m, n)?;
    let (lm, ln, lpn, mn) = ((l - m).int(), (l - n).int(), (l + n).int(), (m + n).int());
    let lo = 0.max(-mn);
    let hi = lm.min(ln);
    let mut sum = Complex64::new(0.0, 0.0);
    for j in lo..=hi {
        let weight = binomial_f64(ln as u64, j) * binomial_f64(lpn as u64, lm - j);
        let mono = ipow(g.a, j as u32)
            * ipow(g.b, (lm - j) as u32)
            * ipow(g.c, (ln - j) as u32)
            * ipow(g.d, (mn + j) as u32);
        sum += weight * mono;
    }
    Ok(sqrt_binom_ratio(l, m, n)? * sum)
}

fn hyp_coefficients_f64(a: i64, b: i64, c: i64) -> Result<Vec<f64>> {
    let spec = Hyp21Spec::new(a as f64, b as f64, c as f64, 0.0)?;
    Ok(spec.coefficients().iter().map(rational_to_f64).collect())
}

/// `t^l_{m,n}` for `m + n >= 0` through
/// `2F1(-l+m, -l+n; m+n+1; ad/(bc))` with prefactor
/// `sqrt((l+m)!(l+n)!/((l-m)!(l-n)!)) b^(l-m) c^(l-n) d^(m+n) / (m+n)!`.
pub fn tmn_hyp(l: HalfInt, m: HalfInt, n: HalfInt, g: &Mat2C) -> Result<Complex64> {
    check_pair(l, m, n)?;
    if (m + n).twice() < 0 {
        return Err(Error::domain(format!("hypergeometric form needs m+n >= 0, got m={m}, n={n}")));
    }
    if g.b.norm() == 0.0 || g.c.norm() == 0.0 {
        return Err(Error::unavailable("hyp", "b = 0 or c = 0 (argument ad/(bc) undefined)"));
    }
    let (lm, ln, lpm, lpn, mn) = ((l - m).int(), (l - n).int(), (l + m).int(), (l + n).int(), (m + n).int());
    let coeffs = hyp_coefficients_f64(-lm, -ln, mn + 1)?;
    let z = g.a * g.d / (g.b * g.c);
    let pre = sqrt_factorial_ratio(&[lpm, lpn], &[lm, ln]) / bigint_to_f64(&factorial(mn)?);
    let mono = ipow(g.b, lm as u32) * ipow(g.c, ln as u32) * ipow(g.d, mn as u32);
    Ok(pre * mono * horner(&coeffs, z))
}

/// `t^l_{m,n}` for `m + n >= 0` through the complementary series
/// `sqrt(C(2l,l-m) C(2l,l-n)) b^(l-m) c^(l-n) d^(m+n) 2F1(-l+m, -l+n; -2l; (bc-ad)/(bc))`.
pub fn tmn_hyp_complementary(l: HalfInt, m: HalfInt, n: HalfInt, g: &Mat2C) -> Result<Complex64> {
    check_pair(l, m, n)?;
    if (m + n).twice() < 0 {
        return Err(Error::domain(format!("hypergeometric form needs m+n >= 0, got m={m}, n={n}")));
    }
    let bc = g.b * g.c;
    if bc.norm() == 0.0 {
        return Err(Error::unavailable("hyp", "b = 0 or c = 0 (argument (bc-ad)/(bc) undefined)"));
    }
    let (lm, ln, mn) = ((l - m).int(), (l - n).int(), (m + n).int());
    let two_l = l.twice() as u64;
    let coeffs = hyp_coefficients_f64(-lm, -ln, -(two_l as i64))?;
    let z = (bc - g.a * g.d) / bc;
    let pre = (binomial_f64(two_l, lm) * binomial_f64(two_l, ln)).sqrt();
    let mono = ipow(g.b, lm as u32) * ipow(g.c, ln as u32) * ipow(g.d, mn as u32);
    Ok(pre * mono * horner(&coeffs, z))
}

/// `P_n^(alpha,beta)` at a complex point, from the exact expansion in powers
/// of `(w-1)/2`. Real points go through [`jacobi_eval`].
fn jacobi_at(p: &JacobiParams, w: Complex64) -> Complex64 {
    if w.im == 0.0 {
        return jacobi_eval(p, w.re).into();
    }
    let coeffs: Vec<f64> = jacobi_coefficients(p).iter().map(rational_to_f64).collect();
    horner(&coeffs, (w - 1.0) / 2.0)
}

/// `t^l_{m,n}` for `m >= |n|` through
/// `sqrt((l+m)!(l-m)!/((l+n)!(l-n)!)) c^(m-n) d^(m+n) (bc-ad)^(l-m)
///  P_{l-m}^(m+n, m-n)((bc+ad)/(bc-ad))`.
pub fn tmn_jacobi(l: HalfInt, m: HalfInt, n: HalfInt, g: &Mat2C) -> Result<Complex64> {
    check_pair(l, m, n)?;
    if (m + n).twice() < 0 || (m - n).twice() < 0 {
        return Err(Error::domain(format!(
            "Jacobi form needs m+n >= 0 and m-n >= 0, got m={m}, n={n}"
        )));
    }
    let bc = g.b * g.c;
    let ad = g.a * g.d;
    let diff = bc - ad;
    if diff.norm() == 0.0 {
        return Err(Error::unavailable("jacobi", "bc = ad (singular matrix)"));
    }
    let (lm, ln, lpm, lpn) = ((l - m).int(), (l - n).int(), (l + m).int(), (l + n).int());
    let (mn, m_n) = ((m + n).int(), (m - n).int());
    let p = JacobiParams::new(mn as f64, m_n as f64, lm as u32)?;
    let pre = sqrt_factorial_ratio(&[lpm, lm], &[lpn, ln]);
    let mono = ipow(g.c, m_n as u32) * ipow(g.d, mn as u32) * ipow(diff, lm as u32);
    Ok(pre * mono * jacobi_at(&p, (bc + ad) / diff))
}

/// The sector `m >= |n|` of the Euler-angle form:
/// `(-1)^(l-m) sqrt(...) e^{-i(m+n)phi} e^{i(m-n)psi} sin^(m+n) cos^(m-n) P_{l-m}^(m+n,m-n)(cos 2 theta)`.
fn euler_quadrant(l: HalfInt, m: HalfInt, n: HalfInt, theta: f64, phi: f64, psi: f64) -> Complex64 {
    let (lm, ln, lpm, lpn) = ((l - m).int(), (l - n).int(), (l + m).int(), (l + n).int());
    let (mn, m_n) = ((m + n).int(), (m - n).int());
    let sign = if lm % 2 == 0 { 1.0 } else { -1.0 };
    let pre = sign * sqrt_factorial_ratio(&[lpm, lm], &[lpn, ln]);
    let (s, c) = theta.sin_cos();
    let p = JacobiParams {
        alpha: mn as f64,
        beta: m_n as f64,
        n: lm as u32,
    };
    let radial = s.powi(mn as i32) * c.powi(m_n as i32) * jacobi_eval(&p, (2.0 * theta).cos());
    pre * radial * exp_i(-(mn as f64) * phi + (m_n as f64) * psi)
}

/// The Wigner matrix at Euler angles: the sector `m >= |n|` in closed form,
/// the other three sectors through the index symmetries, which act on the
/// Euler angles as `psi -> pi - psi` and/or `phi -> -phi`.
pub fn dmatrix_euler(l: HalfInt, angles: &EulerAngles) -> Result<WignerMatrix> {
    let (theta, phi, psi) = (angles.theta(), angles.phi(), angles.psi());
    WignerMatrix::from_fn(l, |m, n| {
        let (mq, nq, phi_q, psi_q) = match super::symmetry::quadrant_symmetry(m, n) {
            None => (m, n, phi, psi),
            Some(Symmetry::TransposeBc) => (n, m, phi, PI - psi),
            Some(Symmetry::FlipSigns) => (-m, -n, -phi, PI - psi),
            Some(Symmetry::AntiTranspose) => (-n, -m, -phi, psi),
        };
        Ok(euler_quadrant(l, mq, nq, theta, phi_q, psi_q))
    })
}

fn check_theta(theta: f64) -> Result<()> {
    if !(0.0..=FRAC_PI_2).contains(&theta) {
        return Err(Error::domain(format!("theta={theta} outside [0, pi/2]")));
    }
    Ok(())
}

/// `t^l_{m,n}` of the rotation `[[sin t, -cos t], [cos t, sin t]]` from the
/// Rodrigues-type formula
/// `sqrt((l+m)!/((l-m)!(l+n)!(l-n)!)) 2^(-l-m) sin^(-m-n) cos^(n-m)
///  (d/ds)^(l-m) [(1-s)^(l+n) (1+s)^(l-n)]` at `s = cos 2t`, for every `m, n`.
pub fn tmn_rodrigues(l: HalfInt, m: HalfInt, n: HalfInt, theta: f64) -> Result<f64> {
    check_pair(l, m, n)?;
    check_theta(theta)?;
    if theta == 0.0 || theta == FRAC_PI_2 {
        return Err(Error::unavailable("rodrigues", "theta in {0, pi/2} (sin or cos vanishes)"));
    }
    let (lm, ln, lpm, lpn) = ((l - m).int(), (l - n).int(), (l + m).int(), (l + n).int());
    let product = intpoly::mul(
        &intpoly::linear_power(-1, lpn as u64),
        &intpoly::linear_power(1, ln as u64),
    );
    let derivative: Vec<_> = intpoly::derivative(&product, lm as usize)
        .into_iter()
        .map(num_rational::BigRational::from_integer)
        .collect();
    let (s, c) = theta.sin_cos();
    let value = series::eval_exact_coeffs(&derivative, (2.0 * theta).cos());
    let pre = sqrt_factorial_ratio(&[lpm], &[lm, lpn, ln]) * 2f64.powi(-(lpm as i32));
    let mn = (m + n).int() as i32;
    let m_n = (m - n).int() as i32;
    Ok(pre * s.powi(-mn) * c.powi(-m_n) * value)
}

/// `t^l_{m,n}` of the rotation `[[sin t, -cos t], [cos t, sin t]]` through
/// Krawtchouk polynomials:
/// `sqrt(C(2l,l-m) C(2l,l-n)) (-1)^(l-m) cos^(2l-m-n) sin^(m+n) K_{l-m}(l-n; cos^2 t, 2l)`.
pub fn tmn_krawtchouk(l: HalfInt, m: HalfInt, n: HalfInt, theta: f64) -> Result<f64> {
    check_pair(l, m, n)?;
    check_theta(theta)?;
    let (s, c) = theta.sin_cos();
    if theta == FRAC_PI_2 || c == 0.0 {
        return Err(Error::unavailable("krawtchouk", "cos^2 theta = 0 (p = 0)"));
    }
    let mn = (m + n).int();
    if mn < 0 && s == 0.0 {
        return Err(Error::unavailable("krawtchouk", "theta = 0 with m+n < 0 (negative power of sin)"));
    }
    let two_l = l.twice() as u64;
    let (lm, ln) = ((l - m).int(), (l - n).int());
    let pre = (binomial_f64(two_l, lm) * binomial_f64(two_l, ln)).sqrt();
    let sign = if lm % 2 == 0 { 1.0 } else { -1.0 };
    let k = krawtchouk(lm as u64, ln as f64, c * c, two_l)?;
    Ok(sign * pre * c.powi((two_l as i64 - mn) as i32) * s.powi(mn as i32) * k)
}

/// Trace of `t^l(A)`.
pub fn character(l: HalfInt, g: &Mat2C) -> Result<Complex64> {
    Ok(oracle_matrix(l, g)?.trace())
}

/// How a full matrix is assembled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    Oracle,
    Sum,
    Hyp,
    Jacobi,
    Euler,
    Rodrigues,
    Krawtchouk,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Oracle => "oracle",
            Route::Sum => "sum",
            Route::Hyp => "hyp",
            Route::Jacobi => "jacobi",
            Route::Euler => "euler",
            Route::Rodrigues => "rodrigues",
            Route::Krawtchouk => "krawtchouk",
        }
    }

    /// Routes that only make sense on Euler-angle input.
    pub fn needs_angles(self) -> bool {
        matches!(self, Route::Euler | Route::Rodrigues | Route::Krawtchouk)
    }
}

/// `t^l(A)` by a matrix route. Entries outside a closed form's sector are
/// mapped in through the index symmetries.
pub fn matrix_via(route: Route, l: HalfInt, g: &Mat2C) -> Result<WignerMatrix> {
    match route {
        Route::Oracle => oracle_matrix(l, g),
        Route::Sum => WignerMatrix::from_fn(l, |m, n| tmn_sum(l, m, n, g)),
        Route::Hyp => WignerMatrix::from_fn(l, |m, n| {
            if (m + n).twice() >= 0 {
                tmn_hyp(l, m, n, g)
            } else {
                let (m, n, g) = apply_symmetry(Symmetry::FlipSigns, m, n, g);
                tmn_hyp(l, m, n, &g)
            }
        }),
        Route::Jacobi => WignerMatrix::from_fn(l, |m, n| {
            let (m, n, g) = to_quadrant(m, n, g);
            tmn_jacobi(l, m, n, &g)
        }),
        Route::Euler | Route::Rodrigues | Route::Krawtchouk => Err(Error::domain(format!(
            "route `{}` needs Euler-angle input",
            route.name()
        ))),
    }
}

/// `t^l` at Euler angles by any route. The Rodrigues and Krawtchouk routes
/// need `phi = psi = 0`.
pub fn matrix_via_angles(route: Route, l: HalfInt, angles: &EulerAngles) -> Result<WignerMatrix> {
    match route {
        Route::Euler => dmatrix_euler(l, angles),
        Route::Rodrigues | Route::Krawtchouk => {
            if angles.phi() != 0.0 || angles.psi() != 0.0 {
                return Err(Error::domain(format!(
                    "route `{}` is defined on the rotation subgroup phi = psi = 0",
                    route.name()
                )));
            }
            let theta = angles.theta();
            WignerMatrix::from_fn(l, |m, n| {
                let v = if route == Route::Rodrigues {
                    tmn_rodrigues(l, m, n, theta)?
                } else {
                    tmn_krawtchouk(l, m, n, theta)?
                };
                Ok(v.into())
            })
        }
        _ => matrix_via(route, l, &from_euler(angles)),
    }
}

/// The rotation `[[sin t, -cos t], [cos t, sin t]]` for any real `t`.
pub fn rotation(theta: f64) -> Mat2C {
    euler_matrix(theta, 0.0, 0.0)
}
