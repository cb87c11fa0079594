//! The quadratic ring `Q(√2)`, represented as pairs `a + b√2`.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::rational::Rational;

/// An element `a + b√2` with exact rational components.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSqrt2 {
    pub a: Rational,
    pub b: Rational,
}

impl QSqrt2 {
    pub fn zero() -> Self {
        QSqrt2 {
            a: Rational::zero(),
            b: Rational::zero(),
        }
    }

    pub fn one() -> Self {
        QSqrt2 {
            a: Rational::one(),
            b: Rational::zero(),
        }
    }

    pub fn from_rational(a: Rational) -> Self {
        QSqrt2 {
            a,
            b: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_int(n))
    }

    /// `√2`.
    pub fn sqrt2() -> Self {
        QSqrt2 {
            a: Rational::zero(),
            b: Rational::one(),
        }
    }

    /// `√2 / 2`.
    pub fn half_sqrt2() -> Self {
        QSqrt2 {
            a: Rational::zero(),
            b: Rational::new(1, 2),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True if the `√2` component vanishes.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Canonical form `p/q` or `p/q+r/s√2` (minus sign absorbed into `r`).
    pub fn canonical_string(&self) -> String {
        use alloc::format;
        if self.b.is_zero() {
            self.a.ratio_string()
        } else if self.b.is_negative() {
            format!("{}-{}√2", self.a.ratio_string(), (-&self.b).ratio_string())
        } else {
            format!("{}+{}√2", self.a.ratio_string(), self.b.ratio_string())
        }
    }
}

impl Add for &QSqrt2 {
    type Output = QSqrt2;
    fn add(self, rhs: &QSqrt2) -> QSqrt2 {
        QSqrt2 {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, rhs: &QSqrt2) -> QSqrt2 {
        QSqrt2 {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Mul for &QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, rhs: &QSqrt2) -> QSqrt2 {
        // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
        QSqrt2 {
            a: &(&self.a * &rhs.a) + &(&(&self.b * &rhs.b) * &Rational::from_int(2)),
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.a),
        }
    }
}

impl Neg for &QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2 {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl AddAssign<&QSqrt2> for QSqrt2 {
    fn add_assign(&mut self, rhs: &QSqrt2) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}√2", self.b)
        } else {
            write!(f, "{}", self.canonical_string())
        }
    }
}

impl fmt::Debug for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt2_squares_to_two() {
        let r2 = QSqrt2::sqrt2();
        assert_eq!(&r2 * &r2, QSqrt2::from_int(2));
        assert_eq!(&QSqrt2::half_sqrt2() * &QSqrt2::sqrt2(), QSqrt2::one());
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(
            QSqrt2::from_rational(Rational::new(-1, 2)).canonical_string(),
            "-1/2"
        );
        let x = QSqrt2 {
            a: Rational::new(1, 2),
            b: Rational::new(-3, 4),
        };
        assert_eq!(x.canonical_string(), "1/2-3/4√2");
        assert_eq!(QSqrt2::sqrt2().canonical_string(), "0/1+1/1√2");
    }
}
