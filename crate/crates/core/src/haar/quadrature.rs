//! Gauss–Legendre rules, the product grid on SU(2) and deterministic
//! pairwise accumulation.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exactcomb::HalfInt;
use crate::group::{euler_matrix, Mat2C};

/// Nodes (ascending) and weights of the `n`-point Gauss–Legendre rule on
/// `[-1, 1]`, exact for polynomials of degree `2n - 1`.
pub fn gauss_legendre(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 {
        return Err(Error::domain("Gauss-Legendre rule needs at least one node"));
    }
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= 1e-16 * x.abs().max(1.0) {
                dp = legendre_with_derivative(n, x).1;
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    Ok((nodes, weights))
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    (p1, n as f64 * (x * p1 - p0) / (x * x - 1.0))
}

/// Streaming pairwise summation of equal-length vectors.
///
/// Partial sums are merged like a binary counter, so the association order
/// depends only on the number of pushed vectors.
#[derive(Debug, Clone)]
pub(crate) struct PairwiseSum {
    len: usize,
    levels: Vec<Option<Vec<Complex64>>>,
}

impl PairwiseSum {
    pub(crate) fn new(len: usize) -> Self {
        PairwiseSum { len, levels: Vec::new() }
    }

    pub(crate) fn push(&mut self, mut carry: Vec<Complex64>) {
        debug_assert_eq!(carry.len(), self.len);
        for slot in self.levels.iter_mut() {
            match slot.take() {
                None => {
                    *slot = Some(carry);
                    return;
                }
                Some(older) => {
                    for (c, o) in carry.iter_mut().zip(older) {
                        *c = o + *c;
                    }
                }
            }
        }
        self.levels.push(Some(carry));
    }

    pub(crate) fn finish(self) -> Vec<Complex64> {
        let mut total = vec![Complex64::new(0.0, 0.0); self.len];
        for older in self.levels.into_iter().rev().flatten() {
            for (t, o) in total.iter_mut().zip(older) {
                *t += o;
            }
        }
        total
    }
}

/// A quadrature node on SU(2) in Euler angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HaarNode {
    pub theta: f64,
    pub phi: f64,
    pub psi: f64,
    pub weight: f64,
}

impl HaarNode {
    pub fn element(&self) -> Mat2C {
        euler_matrix(self.theta, self.phi, self.psi)
    }
}

/// Largest spin `l` whose products `t^l_{m,n} conj(t^{l'}_{m',n'})`,
/// `l' <= l`, a grid integrates exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactnessBudget {
    pub max_l: HalfInt,
}

impl ExactnessBudget {
    /// Requires `n_theta >= 2l + 1` and `n_phi, n_psi >= 4l + 1`.
    pub fn of_sizes(n_theta: usize, n_phi: usize, n_psi: usize) -> Self {
        let twice = (n_theta as i64 - 1)
            .min((n_phi as i64 - 1) / 2)
            .min((n_psi as i64 - 1) / 2)
            .max(0);
        ExactnessBudget { max_l: HalfInt::from_twice(twice) }
    }

    pub fn covers(&self, l: HalfInt) -> bool {
        l.twice() <= self.max_l.twice()
    }
}

/// Product rule: Gauss–Legendre in `x = cos 2 theta`, trapezoidal in `phi`
/// and `psi`. The weights sum to one.
#[derive(Debug, Clone, PartialEq)]
pub struct HaarGrid {
    n_theta: usize,
    n_phi: usize,
    n_psi: usize,
    nodes: Vec<HaarNode>,
}

impl HaarGrid {
    pub fn with_sizes(n_theta: usize, n_phi: usize, n_psi: usize) -> Result<Self> {
        if n_phi == 0 || n_psi == 0 {
            return Err(Error::domain("grid sizes must be positive"));
        }
        let (xs, ws) = gauss_legendre(n_theta)?;
        let mut nodes = Vec::with_capacity(n_theta * n_phi * n_psi);
        let scale = 0.5 / (n_phi as f64 * n_psi as f64);
        for (x, w) in xs.iter().zip(&ws) {
            let theta = x.acos() / 2.0;
            for i in 0..n_phi {
                let phi = TAU * i as f64 / n_phi as f64;
                for j in 0..n_psi {
                    let psi = TAU * j as f64 / n_psi as f64;
                    nodes.push(HaarNode { theta, phi, psi, weight: w * scale });
                }
            }
        }
        Ok(HaarGrid { n_theta, n_phi, n_psi, nodes })
    }

    pub fn n_theta(&self) -> usize {
        self.n_theta
    }

    pub fn n_phi(&self) -> usize {
        self.n_phi
    }

    pub fn n_psi(&self) -> usize {
        self.n_psi
    }

    pub fn nodes(&self) -> &[HaarNode] {
        &self.nodes
    }

    pub fn budget(&self) -> ExactnessBudget {
        ExactnessBudget::of_sizes(self.n_theta, self.n_phi, self.n_psi)
    }

    pub(crate) fn require(&self, l: HalfInt) -> Result<()> {
        if self.budget().covers(l) {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "spin {l} exceeds the exactness budget {} of a {}x{}x{} grid",
                self.budget().max_l,
                self.n_theta,
                self.n_phi,
                self.n_psi
            )))
        }
    }
}

/// The smallest grid whose exactness budget is `max_l`.
pub fn build_grid(max_l: HalfInt) -> Result<HaarGrid> {
    if max_l.twice() < 0 {
        return Err(Error::domain(format!("spin {max_l} is negative")));
    }
    let t = max_l.twice() as usize;
    HaarGrid::with_sizes(t + 1, 2 * t + 1, 2 * t + 1)
}

/// `sum_i w_i f(g_i)`.
pub fn integrate<F>(grid: &HaarGrid, mut f: F) -> Result<Complex64>
where
    F: FnMut(&Mat2C) -> Complex64,
{
    let v = integrate_many(grid, 1, |g, out| {
        out[0] = f(g);
        Ok(())
    })?;
    Ok(v[0])
}

/// Integrates `len` functions at once; `f` writes their values at `g` into
/// the output slice.
pub fn integrate_many<F>(grid: &HaarGrid, len: usize, mut f: F) -> Result<Vec<Complex64>>
where
    F: FnMut(&Mat2C, &mut [Complex64]) -> Result<()>,
{
    let mut acc = PairwiseSum::new(len);
    for (index, node) in grid.nodes.iter().enumerate() {
        let mut values = vec![Complex64::new(0.0, 0.0); len];
        f(&node.element(), &mut values)?;
        if values.iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
            return Err(Error::NonFinite {
                index,
                theta: node.theta,
                phi: node.phi,
                psi: node.psi,
            });
        }
        for v in values.iter_mut() {
            *v *= node.weight;
        }
        acc.push(values);
    }
    Ok(acc.finish())
}
