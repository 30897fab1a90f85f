use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, Signed, Zero};

use crate::index::Sign;

use super::GeometryError;

pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(text: &str) -> Result<Rational, GeometryError> {
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let p = BigInt::from_str(p.trim())
            .map_err(|_| GeometryError::Parse(format!("bad rational `{text}`")))?;
        let q = BigInt::from_str(q.trim())
            .map_err(|_| GeometryError::Parse(format!("bad rational `{text}`")))?;
        if q.is_zero() {
            return Err(GeometryError::Parse(format!(
                "zero denominator in `{text}`"
            )));
        }
        Ok(Rational::new(p, q))
    } else {
        BigInt::from_str(text)
            .map(Rational::from_integer)
            .map_err(|_| GeometryError::Parse(format!("bad rational `{text}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    pub x: Rational,
    pub y: Rational,
}

impl RationalPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(integer(x), integer(y))
    }

    pub fn origin() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn dot(&self, other: &Self) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    /// z-component of the cross product.
    pub fn cross(&self, other: &Self) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn norm_squared(&self) -> Rational {
        self.dot(self)
    }

    /// Counterclockwise rotation by a quarter turn.
    pub fn rotate_quarter(&self) -> Self {
        Self::new(-self.y.clone(), self.x.clone())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.x * k, &self.y * k)
    }

    /// `self + t (to - self)`.
    pub fn lerp(&self, to: &Self, t: &Rational) -> Self {
        self + &(to - self).scale(t)
    }

    pub fn to_strings(&self) -> [String; 2] {
        [self.x.to_string(), self.y.to_string()]
    }

    pub fn parse(coords: &[String; 2]) -> Result<Self, GeometryError> {
        Ok(Self::new(
            parse_rational(&coords[0])?,
            parse_rational(&coords[1])?,
        ))
    }
}

impl<'a> Add<&'a RationalPoint> for &'a RationalPoint {
    type Output = RationalPoint;
    fn add(self, rhs: &RationalPoint) -> RationalPoint {
        RationalPoint::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl<'a> Sub<&'a RationalPoint> for &'a RationalPoint {
    type Output = RationalPoint;
    fn sub(self, rhs: &RationalPoint) -> RationalPoint {
        RationalPoint::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl<'a> Mul<&'a Rational> for &'a RationalPoint {
    type Output = RationalPoint;
    fn mul(self, k: &Rational) -> RationalPoint {
        self.scale(k)
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Result of the exact orientation predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Turn {
    /// Positive determinant: counterclockwise.
    Positive,
    Negative,
    Zero,
}

impl Turn {
    pub fn sign(self) -> Option<Sign> {
        match self {
            Turn::Positive => Some(Sign::Pos),
            Turn::Negative => Some(Sign::Neg),
            Turn::Zero => None,
        }
    }

    fn of(v: &Rational) -> Self {
        if v.is_positive() {
            Turn::Positive
        } else if v.is_negative() {
            Turn::Negative
        } else {
            Turn::Zero
        }
    }
}

/// Sign of `det(q - p, r - p)`.
pub fn orientation(p: &RationalPoint, q: &RationalPoint, r: &RationalPoint) -> Turn {
    Turn::of(&(q - p).cross(&(r - p)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_examples() {
        let o = RationalPoint::origin();
        let e1 = RationalPoint::from_ints(1, 0);
        let e2 = RationalPoint::from_ints(0, 1);
        assert_eq!(orientation(&o, &e1, &e2), Turn::Positive);
        assert_eq!(orientation(&e1, &o, &e2), Turn::Negative);
        let diag = [
            RationalPoint::from_ints(0, 0),
            RationalPoint::from_ints(1, 1),
            RationalPoint::from_ints(2, 2),
        ];
        assert_eq!(orientation(&diag[0], &diag[1], &diag[2]), Turn::Zero);
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("-1/2").unwrap(), rational(-1, 2));
        assert_eq!(parse_rational("3").unwrap(), integer(3));
        assert_eq!(parse_rational(" 4/8 ").unwrap(), rational(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(rational(-1, 2).to_string(), "-1/2");
    }
}
