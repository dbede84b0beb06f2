use std::ops::Mul;

use num_complex::Complex64;

use crate::exactcomb::binomial_f64;

/// Homogeneous polynomial in `(z1, z2)`: `coeffs[k]` multiplies
/// `z1^(degree-k) z2^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct HomogPoly2 {
    coeffs: Vec<Complex64>,
}

impl HomogPoly2 {
    pub fn from_coeffs(coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "a homogeneous polynomial has at least one coefficient");
        HomogPoly2 { coeffs }
    }

    pub fn constant(c: Complex64) -> Self {
        HomogPoly2 { coeffs: vec![c] }
    }

    /// `alpha z1 + beta z2`.
    pub fn linear(alpha: Complex64, beta: Complex64) -> Self {
        HomogPoly2 {
            coeffs: vec![alpha, beta],
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs[k]
    }

    /// `(alpha z1 + beta z2)^p` by the binomial theorem; only valid for linear
    /// forms.
    pub fn linear_pow(alpha: Complex64, beta: Complex64, p: u32) -> Self {
        let coeffs = (0..=p)
            .map(|k| binomial_f64(p as u64, k as i64) * ipow(alpha, p - k) * ipow(beta, k))
            .collect();
        HomogPoly2 { coeffs }
    }

    pub fn pow(&self, p: u32) -> Self {
        if self.degree() == 1 {
            return Self::linear_pow(self.coeffs[0], self.coeffs[1], p);
        }
        (0..p).fold(Self::constant(Complex64::new(1.0, 0.0)), |acc, _| &acc * self)
    }

    pub fn eval(&self, z1: Complex64, z2: Complex64) -> Complex64 {
        let d = self.degree() as u32;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * ipow(z1, d - k as u32) * ipow(z2, k as u32))
            .sum()
    }
}

impl Mul for &HomogPoly2 {
    type Output = HomogPoly2;
    fn mul(self, rhs: &HomogPoly2) -> HomogPoly2 {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += x * y;
            }
        }
        HomogPoly2 { coeffs }
    }
}

/// `z^e` by repeated squaring, with `0^0 = 1`.
pub(crate) fn ipow(z: Complex64, mut e: u32) -> Complex64 {
    let mut base = z;
    let mut acc = Complex64::new(1.0, 0.0);
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        e >>= 1;
        if e > 0 {
            base *= base;
        }
    }
    acc
}
