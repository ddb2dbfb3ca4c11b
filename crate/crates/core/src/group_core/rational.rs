use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Exact rational number, always in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(rug::Rational);

impl Rational {
    pub fn zero() -> Self {
        Rational(rug::Rational::new())
    }

    pub fn one() -> Self {
        Rational::from(1)
    }

    /// Builds `num / den`. Panics if `den` is zero.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(rug::Rational::from((num, den)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.cmp0() == std::cmp::Ordering::Equal
    }

    pub fn is_integer(&self) -> bool {
        *self.0.denom() == 1
    }

    pub fn signum(&self) -> i32 {
        match self.0.cmp0() {
            std::cmp::Ordering::Less => -1,
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => 1,
        }
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.clone().abs())
    }

    pub fn recip(&self) -> Option<Rational> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.clone().recip()))
        }
    }

    /// Largest integer not exceeding `self`.
    pub fn floor(&self) -> rug::Integer {
        self.0.clone().floor().into_numer_denom().0
    }

    pub fn numer(&self) -> &rug::Integer {
        self.0.numer()
    }

    pub fn denom(&self) -> &rug::Integer {
        self.0.denom()
    }

    pub fn as_rug(&self) -> &rug::Rational {
        &self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational(rug::Rational::from(v))
    }
}

impl From<i32> for Rational {
    fn from(v: i32) -> Self {
        Rational(rug::Rational::from(v))
    }
}

impl From<rug::Integer> for Rational {
    fn from(v: rug::Integer) -> Self {
        Rational(rug::Rational::from(v))
    }
}

impl From<rug::Rational> for Rational {
    fn from(v: rug::Rational) -> Self {
        Rational(v)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        rug::Rational::from_str(s)
            .map(Rational)
            .map_err(|e| Error::Parse(format!("rational {s:?}: {e}")))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                Rational(rug::Rational::from(&self.0 $op &rhs.0))
            }
        }
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(rug::Rational::from(&self.0 / &rhs.0))
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(rug::Rational::from(-&self.0))
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let r = Rational::new(6, -4);
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(*r.denom(), 2);
        assert_eq!(r, "-3/2".parse().unwrap());
    }

    #[test]
    fn floor_of_negative_fraction() {
        assert_eq!(Rational::new(-1, 2).floor(), -1);
        assert_eq!(Rational::new(5, 2).floor(), 2);
    }
}
