use crate::exactcomb::HalfInt;
use crate::group::Mat2C;

/// The three index symmetries of the matrix elements, each an identity
/// `t^l_{m,n}(A) = t^l_{m',n'}(A')`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    /// `(m, n) -> (n, m)` and `b <-> c`.
    TransposeBc,
    /// `(m, n) -> (-m, -n)` and `[[a,b],[c,d]] -> [[d,c],[b,a]]`.
    FlipSigns,
    /// `(m, n) -> (-n, -m)` and `[[a,b],[c,d]] -> [[d,b],[c,a]]`.
    AntiTranspose,
}

pub fn apply_symmetry(
    which: Symmetry,
    m: HalfInt,
    n: HalfInt,
    a: &Mat2C,
) -> (HalfInt, HalfInt, Mat2C) {
    match which {
        Symmetry::TransposeBc => (n, m, Mat2C::new(a.a, a.c, a.b, a.d)),
        Symmetry::FlipSigns => (-m, -n, Mat2C::new(a.d, a.c, a.b, a.a)),
        Symmetry::AntiTranspose => (-n, -m, Mat2C::new(a.d, a.b, a.c, a.a)),
    }
}

/// The symmetry carrying `(m, n)` into the sector `m + n >= 0, m - n >= 0`, or
/// `None` if it is already there.
pub fn quadrant_symmetry(m: HalfInt, n: HalfInt) -> Option<Symmetry> {
    let (m, n) = (m.twice(), n.twice());
    if m >= n.abs() {
        None
    } else if n >= m.abs() {
        Some(Symmetry::TransposeBc)
    } else if -m >= n.abs() {
        Some(Symmetry::FlipSigns)
    } else {
        Some(Symmetry::AntiTranspose)
    }
}

/// `(m', n', A')` with `m' >= |n'|` and `t^l_{m,n}(A) = t^l_{m',n'}(A')`.
pub fn to_quadrant(m: HalfInt, n: HalfInt, a: &Mat2C) -> (HalfInt, HalfInt, Mat2C) {
    match quadrant_symmetry(m, n) {
        None => (m, n, *a),
        Some(s) => apply_symmetry(s, m, n, a),
    }
}
