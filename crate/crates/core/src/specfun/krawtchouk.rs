use super::hyper::{hyp2f1_terminating, Hyp21Spec};
use crate::error::{Error, Result};

/// Krawtchouk polynomial `K_n(x; p, N) = 2F1(-n, -x; -N; 1/p)`.
///
/// The series terminates on `-n`, so `x` may be any real number.
pub fn krawtchouk(n: u64, x: f64, p: f64, big_n: u64) -> Result<f64> {
    if n > big_n {
        return Err(Error::domain(format!("Krawtchouk degree n={n} exceeds N={big_n}")));
    }
    if p == 0.0 {
        return Err(Error::domain("Krawtchouk parameter p must be nonzero"));
    }
    let spec = Hyp21Spec::new(-(n as f64), -x, -(big_n as f64), 1.0 / p)?;
    Ok(hyp2f1_terminating(&spec))
}
