use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use super::GeometryError;

/// Coordinates are kept below 2^60 so that any orientation determinant
/// (a product of two coordinate differences) fits in `i128` exactly.
pub const MAX_COORD: i64 = 1 << 60;

/// A point of the integer grid.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn checked(x: i64, y: i64) -> Result<Self, GeometryError> {
        if x.abs() >= MAX_COORD {
            return Err(GeometryError::CoordinateTooLarge(x));
        }
        if y.abs() >= MAX_COORD {
            return Err(GeometryError::CoordinateTooLarge(y));
        }
        Ok(Point { x, y })
    }

    pub fn sub(self, other: Point) -> (i128, i128) {
        (
            self.x as i128 - other.x as i128,
            self.y as i128 - other.y as i128,
        )
    }

    /// Squared Euclidean distance, exact.
    pub fn dist2(self, other: Point) -> i128 {
        let (dx, dy) = self.sub(other);
        dx * dx + dy * dy
    }

    pub fn to_rational(self) -> RationalPoint {
        RationalPoint {
            x: BigRational::from(BigInt::from(self.x)),
            y: BigRational::from(BigInt::from(self.y)),
        }
    }
}

pub fn pt(x: i64, y: i64) -> Point {
    Point::new(x, y)
}

/// Exact rational point. Used for crossing points of integer segments and for
/// guide-disk centers; never a polygon vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalPoint {
    pub x: BigRational,
    pub y: BigRational,
}

impl RationalPoint {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        RationalPoint { x, y }
    }

    pub fn dist2(&self, other: &RationalPoint) -> BigRational {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &dx * &dx + &dy * &dy
    }

    /// Nearest integer point (round half away from zero, per coordinate).
    pub fn round(&self) -> Point {
        Point {
            x: round_rational(&self.x),
            y: round_rational(&self.y),
        }
    }
}

pub fn round_rational(r: &BigRational) -> i64 {
    let two = BigInt::from(2);
    let num = r.numer();
    let den = r.denom();
    // floor((2*num + den) / (2*den)) rounds half up for positive, and the
    // mirrored formula keeps rounding symmetric for negatives.
    let q = if num.is_negative() {
        -(((-num) * &two + den) / (den * &two))
    } else {
        (num * &two + den) / (den * &two)
    };
    let digits = q.to_string();
    digits.parse::<i64>().expect("rounded rational out of i64 range")
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn big_rational_is_zero(r: &BigRational) -> bool {
    r.is_zero()
}
