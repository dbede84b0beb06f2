use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};

/// A spin label in `{..., -1, -1/2, 0, 1/2, 1, ...}`, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// The integer value, or a domain error for a proper half-integer.
    pub fn to_int(self) -> Result<i64> {
        if self.is_integer() {
            Ok(self.twice / 2)
        } else {
            Err(Error::domain(format!("{self} is not an integer")))
        }
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub fn abs(self) -> Self {
        HalfInt {
            twice: self.twice.abs(),
        }
    }

    /// Integer value of a quantity known to be integral, such as `l - m` for a
    /// valid spin pair.
    pub(crate) fn int(self) -> i64 {
        debug_assert!(self.is_integer(), "{self} is not an integer");
        self.twice / 2
    }

    /// The values `-l, -l+1, ..., l`.
    pub fn projections(self) -> impl DoubleEndedIterator<Item = HalfInt> + Clone {
        let l = self.twice;
        (0..=l.max(-1)).map(move |i| HalfInt::from_twice(2 * i - l))
    }
}

/// `(l, m)` is a valid spin pair: `l >= 0`, `|m| <= l`, and `l - m` integral.
pub fn is_valid_spin(l: HalfInt, m: HalfInt) -> bool {
    l.twice >= 0 && m.twice.abs() <= l.twice && (l.twice - m.twice) % 2 == 0
}

pub fn check_spin(l: HalfInt, m: HalfInt) -> Result<()> {
    if is_valid_spin(l, m) {
        Ok(())
    } else {
        Err(Error::domain(format!("invalid spin pair (l={l}, m={m})")))
    }
}

pub fn check_l(l: HalfInt) -> Result<()> {
    if l.twice >= 0 {
        Ok(())
    } else {
        Err(Error::domain(format!("negative spin l={l}")))
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn integer_conversion() {
        assert_eq!(HalfInt::from_twice(6).to_int(), Ok(3));
        assert!(HalfInt::from_twice(3).to_int().is_err());
        assert_eq!(HalfInt::from_twice(-3).to_string(), "-3/2");
    }

    #[test]
    fn spin_validity() {
        let l = HalfInt::from_twice(3);
        assert!(is_valid_spin(l, HalfInt::from_twice(-3)));
        assert!(is_valid_spin(l, HalfInt::from_twice(1)));
        assert!(!is_valid_spin(l, HalfInt::from_twice(2)));
        assert!(!is_valid_spin(l, HalfInt::from_twice(5)));
        assert!(!is_valid_spin(HalfInt::from_twice(-1), HalfInt::from_twice(-1)));
    }

    #[test]
    fn projections_cover_range() {
        let ms: Vec<i64> = HalfInt::from_twice(3).projections().map(HalfInt::twice).collect();
        assert_eq!(ms, vec![-3, -1, 1, 3]);
        assert_eq!(HalfInt::ZERO.projections().count(), 1);
        assert_eq!(HalfInt::from_twice(-2).projections().count(), 0);
    }

    proptest! {
        #[test]
        fn spin_pair_round_trip(l2 in 0i64..200, k in 0i64..200) {
            let l = HalfInt::from_twice(l2);
            let m = HalfInt::from_twice(-l2 + 2 * (k % (l2 + 1)));
            prop_assert!(is_valid_spin(l, m));
            let lm = l - m;
            let lp = l + m;
            prop_assert!(lm.is_integer() && lp.is_integer());
            prop_assert!(lm.twice() >= 0 && lp.twice() >= 0);
            prop_assert_eq!(lm + lp, HalfInt::from_twice(2 * l2));
            prop_assert_eq!(-(-m), m);
        }
    }
}
