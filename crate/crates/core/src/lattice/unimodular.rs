use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use rand::Rng;

use crate::error::{Error, Result};

use super::point::LatticePoint;

/// An affine map x ↦ Mx + t with M ∈ GL₂(ℤ), i.e. |det M| = 1.
///
/// These maps preserve the lattice and every lattice invariant of a
/// polytope; two polytopes are considered equivalent when one is the image
/// of the other under such a map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularMap {
    m: [[BigInt; 2]; 2],
    t: [BigInt; 2],
}

impl UnimodularMap {
    /// Builds the map from matrix rows `[[a, b], [c, d]]` and translation
    /// `(tx, ty)`, rejecting non-unimodular matrices.
    pub fn new(m: [[BigInt; 2]; 2], t: [BigInt; 2]) -> Result<Self> {
        let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular { det: det.to_string() });
        }
        Ok(Self { m, t })
    }

    pub fn identity() -> Self {
        Self {
            m: [[BigInt::one(), BigInt::from(0)], [BigInt::from(0), BigInt::one()]],
            t: [BigInt::from(0), BigInt::from(0)],
        }
    }

    pub fn translation<X: Into<BigInt>, Y: Into<BigInt>>(tx: X, ty: Y) -> Self {
        Self {
            m: [[BigInt::one(), BigInt::from(0)], [BigInt::from(0), BigInt::one()]],
            t: [tx.into(), ty.into()],
        }
    }

    /// The linear part sending the primitive vector `e` to `(1, 0)`.
    ///
    /// Completes `e = (p, q)` to a unimodular basis via Bézout and inverts;
    /// the second row is determined up to shears, fixed here arbitrarily.
    pub fn sending_to_x_axis(e: &LatticePoint) -> Self {
        let (g, s, t) = extended_gcd(&e.x, &e.y);
        assert!(g.is_one(), "direction must be primitive, got content {g}");
        // Rows (s, t) and (-q, p): determinant s*p + t*q = 1.
        let m = [[s, t], [-e.y.clone(), e.x.clone()]];
        Self { m, t: [BigInt::from(0), BigInt::from(0)] }
    }

    pub fn determinant(&self) -> BigInt {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    pub fn apply_point(&self, p: &LatticePoint) -> LatticePoint {
        LatticePoint::new(
            &self.m[0][0] * &p.x + &self.m[0][1] * &p.y + &self.t[0],
            &self.m[1][0] * &p.x + &self.m[1][1] * &p.y + &self.t[1],
        )
    }

    /// Applies only the linear part (useful for direction vectors).
    pub fn apply_vector(&self, v: &LatticePoint) -> LatticePoint {
        LatticePoint::new(
            &self.m[0][0] * &v.x + &self.m[0][1] * &v.y,
            &self.m[1][0] * &v.x + &self.m[1][1] * &v.y,
        )
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        let m = [
            [
                &self.m[0][0] * &other.m[0][0] + &self.m[0][1] * &other.m[1][0],
                &self.m[0][0] * &other.m[0][1] + &self.m[0][1] * &other.m[1][1],
            ],
            [
                &self.m[1][0] * &other.m[0][0] + &self.m[1][1] * &other.m[1][0],
                &self.m[1][0] * &other.m[0][1] + &self.m[1][1] * &other.m[1][1],
            ],
        ];
        let t = [
            &self.m[0][0] * &other.t[0] + &self.m[0][1] * &other.t[1] + &self.t[0],
            &self.m[1][0] * &other.t[0] + &self.m[1][1] * &other.t[1] + &self.t[1],
        ];
        Self { m, t }
    }

    /// A pseudo-random affine unimodular map: a short word in shears, the
    /// quarter rotation and a reflection, plus a bounded translation.
    pub fn random<R: Rng>(rng: &mut R) -> Self {
        let mut map = Self::identity();
        let rot = Self { m: [[0.into(), (-1).into()], [1.into(), 0.into()]], t: [0.into(), 0.into()] };
        let refl = Self { m: [[1.into(), 0.into()], [0.into(), (-1).into()]], t: [0.into(), 0.into()] };
        for _ in 0..rng.gen_range(2..6) {
            let factor = match rng.gen_range(0..4u8) {
                0 => {
                    let k = BigInt::from(rng.gen_range(-3..=3i32));
                    Self { m: [[1.into(), k], [0.into(), 1.into()]], t: [0.into(), 0.into()] }
                }
                1 => {
                    let k = BigInt::from(rng.gen_range(-3..=3i32));
                    Self { m: [[1.into(), 0.into()], [k, 1.into()]], t: [0.into(), 0.into()] }
                }
                2 => rot.clone(),
                _ => refl.clone(),
            };
            map = factor.compose(&map);
        }
        let tx = rng.gen_range(-20..=20i32);
        let ty = rng.gen_range(-20..=20i32);
        Self::translation(tx, ty).compose(&map)
    }
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g ≥ 0.
fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    (e.gcd, e.x, e.y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rejects_non_unimodular() {
        let m = [[BigInt::from(2), BigInt::from(0)], [BigInt::from(0), BigInt::from(1)]];
        assert!(UnimodularMap::new(m, [0.into(), 0.into()]).is_err());
    }

    #[test]
    fn sending_to_x_axis_hits_target() {
        for (p, q) in [(1i32, 0i32), (0, 1), (2, 3), (-5, 7), (-1, -1), (4, -9)] {
            let e = LatticePoint::new(p, q);
            let m = UnimodularMap::sending_to_x_axis(&e);
            assert_eq!(m.apply_vector(&e), LatticePoint::new(1, 0));
            assert!(m.determinant().is_one());
        }
    }

    #[test]
    fn random_maps_are_unimodular() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let u = UnimodularMap::random(&mut rng);
            assert!(u.determinant().abs().is_one());
        }
    }
}
