//! 2×2 complex matrices, the SU(2) subgroup and its Euler-angle chart.

use std::f64::consts::{PI, TAU};
use std::ops::Mul;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Tolerance of the SU(2) membership predicate.
pub const SU2_TOL: f64 = 1e-12;

/// The matrix `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2C {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl Mat2C {
    pub const fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Mat2C { a, b, c, d }
    }

    pub fn real(a: f64, b: f64, c: f64, d: f64) -> Self {
        Mat2C::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Mat2C::real(1.0, 0.0, 0.0, 1.0)
    }

    /// The SU(2) element `[[a, -conj(c)], [c, conj(a)]]`.
    pub fn su2(a: Complex64, c: Complex64) -> Self {
        Mat2C::new(a, -c.conj(), c, a.conj())
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn is_invertible(&self) -> bool {
        self.det().norm() > 0.0
    }

    /// `|a|^2 + |c|^2 = 1`, `b = -conj(c)` and `d = conj(a)`, each to [`SU2_TOL`].
    pub fn is_su2(&self) -> bool {
        (self.a.norm_sqr() + self.c.norm_sqr() - 1.0).abs() <= SU2_TOL
            && (self.b + self.c.conj()).norm() <= SU2_TOL
            && (self.d - self.a.conj()).norm() <= SU2_TOL
    }

    pub fn inverse(&self) -> Result<Mat2C> {
        let det = self.det();
        if det.norm() == 0.0 {
            return Err(Error::domain("singular matrix has no inverse"));
        }
        Ok(Mat2C::new(self.d / det, -self.b / det, -self.c / det, self.a / det))
    }

    pub fn transpose(&self) -> Mat2C {
        Mat2C::new(self.a, self.c, self.b, self.d)
    }

    pub fn adjoint(&self) -> Mat2C {
        Mat2C::new(self.a.conj(), self.c.conj(), self.b.conj(), self.d.conj())
    }

    pub fn scale(&self, s: Complex64) -> Mat2C {
        Mat2C::new(s * self.a, s * self.b, s * self.c, s * self.d)
    }

    pub fn entries(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn max_abs_diff(&self, other: &Mat2C) -> f64 {
        self.entries()
            .iter()
            .zip(other.entries())
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }
}

impl Mul for Mat2C {
    type Output = Mat2C;
    fn mul(self, r: Mat2C) -> Mat2C {
        Mat2C::new(
            self.a * r.a + self.b * r.c,
            self.a * r.b + self.b * r.d,
            self.c * r.a + self.d * r.c,
            self.c * r.b + self.d * r.d,
        )
    }
}

pub fn multiply(a: &Mat2C, b: &Mat2C) -> Mat2C {
    *a * *b
}

pub fn inverse(a: &Mat2C) -> Result<Mat2C> {
    a.inverse()
}

/// Coordinates `(theta, phi, psi)` of SU(2), `theta` in `[0, pi/2]` and
/// `phi`, `psi` in `[0, 2 pi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerAngles {
    theta: f64,
    phi: f64,
    psi: f64,
}

impl EulerAngles {
    pub fn new(theta: f64, phi: f64, psi: f64) -> Result<Self> {
        if !(0.0..=PI / 2.0).contains(&theta) {
            return Err(Error::domain(format!("theta={theta} outside [0, pi/2]")));
        }
        for (name, v) in [("phi", phi), ("psi", psi)] {
            if !(0.0..TAU).contains(&v) {
                return Err(Error::domain(format!("{name}={v} outside [0, 2pi)")));
            }
        }
        Ok(EulerAngles { theta, phi, psi })
    }

    /// The rotation subgroup `phi = psi = 0`.
    pub fn rotation(theta: f64) -> Result<Self> {
        Self::new(theta, 0.0, 0.0)
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
    pub fn phi(&self) -> f64 {
        self.phi
    }
    pub fn psi(&self) -> f64 {
        self.psi
    }
}

/// `[[sin t e^{i phi}, -cos t e^{-i psi}], [cos t e^{i psi}, sin t e^{-i phi}]]`
/// for any real angles.
pub(crate) fn euler_matrix(theta: f64, phi: f64, psi: f64) -> Mat2C {
    let (s, c) = theta.sin_cos();
    let a = Complex64::from_polar(s, phi);
    let cc = Complex64::from_polar(c, psi);
    Mat2C::su2(a, cc)
}

pub fn from_euler(angles: &EulerAngles) -> Mat2C {
    euler_matrix(angles.theta, angles.phi, angles.psi)
}

/// `a_phi = diag(e^{i phi}, e^{-i phi})`.
pub fn diag_element(phi: f64) -> Mat2C {
    let e = Complex64::from_polar(1.0, phi);
    Mat2C::new(e, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), e.conj())
}

/// Haar-distributed Euler angles: `cos 2 theta` uniform on `[-1, 1]`, `phi`
/// and `psi` uniform on `[0, 2 pi)`.
pub fn sample_haar_angles(seed: u64, count: usize) -> Vec<EulerAngles> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let x: f64 = rng.gen_range(-1.0..=1.0);
            let theta = (x.acos() / 2.0).clamp(0.0, PI / 2.0);
            let phi = rng.gen_range(0.0..TAU);
            let psi = rng.gen_range(0.0..TAU);
            EulerAngles { theta, phi, psi }
        })
        .collect()
}

/// Haar-distributed SU(2) elements, reproducible for a fixed seed.
pub fn sample_haar(seed: u64, count: usize) -> Vec<Mat2C> {
    sample_haar_angles(seed, count).iter().map(from_euler).collect()
}

/// Random GL(2, C) elements with entries uniform in the unit disc and
/// `|det| >= min_det`.
pub fn sample_gl2(seed: u64, count: usize, min_det: f64) -> Vec<Mat2C> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut disc = move || {
        let r = rng.gen::<f64>().sqrt();
        Complex64::from_polar(r, rng.gen_range(0.0..TAU))
    };
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let m = Mat2C::new(disc(), disc(), disc(), disc());
        if m.det().norm() >= min_det {
            out.push(m);
        }
    }
    out
}

/// Random unimodular matrices `ad - bc = 1`, entries of modulus at most ~1.
pub fn sample_sl2(seed: u64, count: usize) -> Vec<Mat2C> {
    sample_gl2(seed, count, 0.2)
        .into_iter()
        .map(|m| {
            let root = m.det().sqrt();
            m.scale(root.inv())
        })
        .collect()
}
