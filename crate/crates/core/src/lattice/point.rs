use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A point of ℤ² with arbitrary-precision coordinates.
///
/// Also used for difference vectors and normal vectors; the derived `Ord`
/// is the lexicographic order (x, then y) used throughout for vertex
/// normalization.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    pub x: BigInt,
    pub y: BigInt,
}

impl LatticePoint {
    pub fn new<X: Into<BigInt>, Y: Into<BigInt>>(x: X, y: Y) -> Self {
        Self { x: x.into(), y: y.into() }
    }

    pub fn origin() -> Self {
        Self::new(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Dot product with another point/vector.
    pub fn dot(&self, other: &Self) -> BigInt {
        &self.x * &other.x + &self.y * &other.y
    }

    /// gcd(|x|, |y|); the lattice length of this vector.
    pub fn content(&self) -> BigInt {
        self.x.gcd(&self.y)
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Add for &LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: &LatticePoint) -> LatticePoint {
        LatticePoint::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub for &LatticePoint {
    type Output = LatticePoint;
    fn sub(self, rhs: &LatticePoint) -> LatticePoint {
        LatticePoint::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Neg for &LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        LatticePoint::new(-&self.x, -&self.y)
    }
}

impl Mul<&LatticePoint> for &BigInt {
    type Output = LatticePoint;
    fn mul(self, rhs: &LatticePoint) -> LatticePoint {
        LatticePoint::new(self * &rhs.x, self * &rhs.y)
    }
}

/// 2×2 determinant `u.x * v.y - u.y * v.x`.
pub fn det2(u: &LatticePoint, v: &LatticePoint) -> BigInt {
    &u.x * &v.y - &u.y * &v.x
}

/// Orientation of the triple (o, a, b): `det2(a - o, b - o)`.
/// Positive means a left turn (counter-clockwise).
pub fn cross(o: &LatticePoint, a: &LatticePoint, b: &LatticePoint) -> BigInt {
    det2(&(a - o), &(b - o))
}

/// The primitive vector in the direction of `v`. Panics on the zero vector.
pub fn primitive(v: &LatticePoint) -> LatticePoint {
    assert!(!v.is_zero(), "zero vector has no direction");
    let g = v.content();
    LatticePoint::new(&v.x / &g, &v.y / &g)
}

/// gcd of two big integers, always nonnegative.
pub fn gcd_nonneg(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_is_x_then_y() {
        let a = LatticePoint::new(0, 5);
        let b = LatticePoint::new(1, 0);
        assert!(a < b);
        assert!(LatticePoint::new(1, -1) < LatticePoint::new(1, 0));
    }

    #[test]
    fn cross_orientation() {
        let o = LatticePoint::origin();
        let a = LatticePoint::new(1, 0);
        let b = LatticePoint::new(0, 1);
        assert!(cross(&o, &a, &b) > BigInt::zero());
        assert!(cross(&o, &b, &a) < BigInt::zero());
    }

    #[test]
    fn primitive_divides_by_content() {
        let v = LatticePoint::new(-4, 6);
        assert_eq!(primitive(&v), LatticePoint::new(-2, 3));
        assert_eq!(v.content(), BigInt::from(2));
    }
}
