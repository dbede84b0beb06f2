use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exactcomb::{check_l, check_spin, HalfInt};

/// The `(2l+1)×(2l+1)` matrix `(t^l_{m,n})`. Row `i` holds `m = -l + i` and
/// column `j` holds `n = -l + j`; entries are stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct WignerMatrix {
    l: HalfInt,
    entries: Vec<Complex64>,
}

/// Position of the projection `m` in a spin-`l` row or column.
pub fn index_of(l: HalfInt, m: HalfInt) -> usize {
    debug_assert!(crate::exactcomb::is_valid_spin(l, m));
    ((m.twice() + l.twice()) / 2) as usize
}

impl WignerMatrix {
    pub fn from_fn<F>(l: HalfInt, mut f: F) -> Result<Self>
    where
        F: FnMut(HalfInt, HalfInt) -> Result<Complex64>,
    {
        check_l(l)?;
        let mut entries = Vec::with_capacity(Self::dim_of(l).pow(2));
        for m in l.projections() {
            for n in l.projections() {
                entries.push(f(m, n)?);
            }
        }
        Ok(WignerMatrix { l, entries })
    }

    /// Builds from row-major entries; the length must be `(2l+1)^2`.
    pub fn from_entries(l: HalfInt, entries: Vec<Complex64>) -> Result<Self> {
        check_l(l)?;
        if entries.len() != Self::dim_of(l).pow(2) {
            return Err(Error::domain(format!(
                "spin {l} needs {} entries, got {}",
                Self::dim_of(l).pow(2),
                entries.len()
            )));
        }
        Ok(WignerMatrix { l, entries })
    }

    pub fn identity(l: HalfInt) -> Result<Self> {
        Self::from_fn(l, |m, n| Ok(Complex64::new(if m == n { 1.0 } else { 0.0 }, 0.0)))
    }

    fn dim_of(l: HalfInt) -> usize {
        (l.twice() + 1) as usize
    }

    pub fn l(&self) -> HalfInt {
        self.l
    }

    pub fn dim(&self) -> usize {
        Self::dim_of(self.l)
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn at(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.dim() + j]
    }

    /// `t^l_{m,n}`.
    pub fn get(&self, m: HalfInt, n: HalfInt) -> Result<Complex64> {
        check_spin(self.l, m)?;
        check_spin(self.l, n)?;
        Ok(self.at(index_of(self.l, m), index_of(self.l, n)))
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Complex64]> {
        self.entries.chunks(self.dim())
    }

    pub fn product(&self, rhs: &WignerMatrix) -> Result<WignerMatrix> {
        if self.l != rhs.l {
            return Err(Error::domain(format!(
                "cannot multiply spin {} by spin {}",
                self.l, rhs.l
            )));
        }
        let d = self.dim();
        let mut out = vec![Complex64::new(0.0, 0.0); d * d];
        for i in 0..d {
            for k in 0..d {
                let x = self.at(i, k);
                for j in 0..d {
                    out[i * d + j] += x * rhs.at(k, j);
                }
            }
        }
        Ok(WignerMatrix {
            l: self.l,
            entries: out,
        })
    }

    pub fn adjoint(&self) -> WignerMatrix {
        let d = self.dim();
        let entries = (0..d * d).map(|idx| self.at(idx % d, idx / d).conj()).collect();
        WignerMatrix { l: self.l, entries }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim()).map(|i| self.at(i, i)).sum()
    }

    pub fn max_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of `self - other`; infinite on a spin mismatch.
    pub fn max_abs_diff(&self, other: &WignerMatrix) -> f64 {
        if self.l != other.l {
            return f64::INFINITY;
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    /// `max |(T T*) - I|`.
    pub fn unitarity_deviation(&self) -> f64 {
        let gram = self.product(&self.adjoint()).expect("same spin");
        gram.max_abs_diff(&WignerMatrix::identity(self.l).expect("valid spin"))
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}
