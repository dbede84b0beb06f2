//! Dense univariate polynomials with big-integer coefficients, lowest degree
//! first. Only what the Rodrigues-type formulas need.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactcomb::binomial;

pub(crate) type IntPoly = Vec<BigInt>;

/// `(1 + sign*x)^p` with `sign = ±1`.
pub(crate) fn linear_power(sign: i64, p: u64) -> IntPoly {
    (0..=p as i64)
        .map(|k| {
            let c = binomial(p, k);
            if sign < 0 && k % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect()
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `n`-th derivative.
pub(crate) fn derivative(p: &[BigInt], n: usize) -> IntPoly {
    if n >= p.len() {
        return vec![BigInt::zero()];
    }
    (n..p.len())
        .map(|k| {
            let falling = ((k - n + 1)..=k).fold(BigInt::one(), |acc, j| acc * j);
            &p[k] * falling
        })
        .collect()
}

/// Exact quotient by `(1 + sign*x)`; `None` if the division leaves a remainder.
pub(crate) fn divide_linear(p: &[BigInt], sign: i64) -> Option<IntPoly> {
    if p.len() < 2 {
        return p.iter().all(Zero::is_zero).then(|| vec![BigInt::zero()]);
    }
    // (1 + s x) q(x) = p(x)  =>  q_k = p_k - s q_{k-1}
    let s = BigInt::from(sign);
    let mut q = Vec::with_capacity(p.len() - 1);
    let mut prev = BigInt::zero();
    for pk in &p[..p.len() - 1] {
        let qk = pk - &s * &prev;
        q.push(qk.clone());
        prev = qk;
    }
    (p[p.len() - 1] == &s * &prev).then_some(q)
}
