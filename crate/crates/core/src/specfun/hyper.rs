use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::series;
use crate::error::{Error, Result};

pub(crate) fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x.fract() == 0.0
}

/// Parameters of a terminating Gauss series `2F1(a, b; c; z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyp21Spec {
    a: f64,
    b: f64,
    c: f64,
    z: f64,
    terms: usize,
}

impl Hyp21Spec {
    /// At least one of `a`, `b` must be a nonpositive integer. The series stops
    /// after the term `N = min(-a, -b)` over those parameters, and `(c)_k` must
    /// not vanish for `k <= N`.
    pub fn new(a: f64, b: f64, c: f64, z: f64) -> Result<Self> {
        if ![a, b, c, z].iter().all(|v| v.is_finite()) {
            return Err(Error::domain("non-finite hypergeometric parameter"));
        }
        let last = [a, b]
            .into_iter()
            .filter(|&p| is_nonpositive_integer(p))
            .map(|p| (-p) as usize)
            .min()
            .ok_or_else(|| {
                Error::domain(format!(
                    "2F1({a}, {b}; {c}; z) does not terminate: no nonpositive integer numerator parameter"
                ))
            })?;
        if is_nonpositive_integer(c) && ((-c) as usize) < last {
            return Err(Error::domain(format!(
                "2F1 lower parameter c={c} hits zero before the series terminates at k={last}"
            )));
        }
        Ok(Hyp21Spec {
            a,
            b,
            c,
            z,
            terms: last + 1,
        })
    }

    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn z(&self) -> f64 {
        self.z
    }
    /// Number of retained terms, `N + 1`.
    pub fn terms(&self) -> usize {
        self.terms
    }

    /// Exact coefficients `(a)_k (b)_k / ((c)_k k!)` for `k = 0..terms`.
    pub fn coefficients(&self) -> Vec<BigRational> {
        hyp2f1_coefficients_exact(self.a, self.b, self.c, self.terms)
    }
}

fn exact(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite parameter")
}

fn hyp2f1_coefficients_exact(a: f64, b: f64, c: f64, terms: usize) -> Vec<BigRational> {
    let (a, b, c) = (exact(a), exact(b), exact(c));
    let mut coeffs = Vec::with_capacity(terms);
    let mut coef = BigRational::one();
    for k in 0..terms {
        coeffs.push(coef.clone());
        if k + 1 == terms {
            break;
        }
        let kk = BigRational::from_integer(BigInt::from(k));
        let num = (&a + &kk) * (&b + &kk);
        if num.is_zero() {
            coeffs.resize(terms, BigRational::zero());
            break;
        }
        let den = (&c + &kk) * (kk + BigRational::one());
        coef = coef * num / den;
    }
    coeffs
}

/// `sum_{k=0}^{N} (a)_k (b)_k / ((c)_k k!) z^k` with the coefficient ratios
/// formed exactly.
pub fn hyp2f1_terminating(spec: &Hyp21Spec) -> f64 {
    series::eval_exact_coeffs(&spec.coefficients(), spec.z)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(a: f64, b: f64, c: f64, z: f64) -> f64 {
        hyp2f1_terminating(&Hyp21Spec::new(a, b, c, z).unwrap())
    }

    /// Term-by-term float evaluation, straight from the definition.
    fn direct(a: f64, b: f64, c: f64, z: f64, last: usize) -> f64 {
        let poch = |x: f64, k: usize| (0..k).map(|j| x + j as f64).product::<f64>();
        let fact = |k: usize| (1..=k).map(|j| j as f64).product::<f64>();
        (0..=last)
            .map(|k| poch(a, k) * poch(b, k) / (poch(c, k) * fact(k)) * z.powi(k as i32))
            .sum()
    }

    #[test]
    fn examples() {
        assert_eq!(f(-1.0, 2.0, 4.0, 1.0), 0.5);
        assert_eq!(f(-2.0, -1.0, 1.0, 1.0), 3.0);
        assert_eq!(f(0.0, 7.0, 3.0, 0.9), 1.0);
    }

    #[test]
    fn termination_length() {
        assert_eq!(Hyp21Spec::new(-3.0, -5.0, 1.0, 0.2).unwrap().terms(), 4);
        assert_eq!(Hyp21Spec::new(2.5, -5.0, 1.0, 0.2).unwrap().terms(), 6);
    }

    #[test]
    fn rejects_nonterminating_and_zero_denominators() {
        assert!(Hyp21Spec::new(0.5, 1.5, 2.0, 0.3).is_err());
        assert!(Hyp21Spec::new(-4.0, 1.0, -2.0, 0.3).is_err());
        // c = -N with N >= termination index is fine
        assert!(Hyp21Spec::new(-2.0, 1.0, -2.0, 0.3).is_ok());
        assert!(Hyp21Spec::new(-2.0, f64::NAN, 1.0, 0.3).is_err());
    }

    #[test]
    fn agrees_with_definition() {
        for &(a, b, c, z) in &[
            (-3.0, 1.5, 2.25, 0.4),
            (-6.0, -4.0, 0.5, -0.8),
            (-5.0, 7.0, 3.0, 0.5),
        ] {
            let last = Hyp21Spec::new(a, b, c, z).unwrap().terms() - 1;
            let want = direct(a, b, c, z, last);
            assert!((f(a, b, c, z) - want).abs() < 1e-12 * want.abs().max(1.0));
        }
    }
}
