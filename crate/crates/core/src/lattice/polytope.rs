use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

use super::point::{cross, det2, primitive, LatticePoint};
use super::unimodular::UnimodularMap;

/// Dimension of a convex lattice polytope in the plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dim {
    Empty,
    Point,
    Segment,
    Polygon,
}

impl Dim {
    pub fn as_str(self) -> &'static str {
        match self {
            Dim::Empty => "empty",
            Dim::Point => "0",
            Dim::Segment => "1",
            Dim::Polygon => "2",
        }
    }
}

/// A convex lattice polytope of dimension ≤ 2, stored by its exact vertex
/// set.
///
/// Invariants (enforced by [`LatticePolytope::hull`], the only public
/// constructor):
/// - a polygon's vertices are strictly convex, counter-clockwise, starting
///   at the lexicographically smallest vertex;
/// - a segment is stored as its two endpoints, smaller first;
/// - the vertex list is exactly the vertex set of its own convex hull.
///
/// The number of stored vertices therefore determines the dimension.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePolytope {
    verts: Vec<LatticePoint>,
}

/// Facet data of one polygon edge.
///
/// The edge lies on the line ⟨inner_normal, x⟩ = support and the polygon
/// satisfies ⟨inner_normal, x⟩ ≥ support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeDatum {
    pub inner_normal: LatticePoint,
    pub support: BigInt,
    /// Number of lattice steps along the edge: gcd of the coordinate
    /// differences of its endpoints.
    pub lattice_length: BigInt,
}

impl LatticePolytope {
    /// Convex hull of the given points, normalized to the vertex-order
    /// invariant. The empty iterator yields the empty polytope.
    pub fn hull<I: IntoIterator<Item = LatticePoint>>(points: I) -> Self {
        let mut pts: Vec<LatticePoint> = points.into_iter().collect();
        pts.sort();
        pts.dedup();
        match pts.len() {
            0 => Self { verts: vec![] },
            1 => Self { verts: pts },
            _ => {
                if pts.iter().all(|p| cross(&pts[0], pts.last().unwrap(), p).is_zero()) {
                    // Collinear: keep the two lex-extreme points.
                    let last = pts.pop().unwrap();
                    let first = pts.swap_remove(0);
                    Self { verts: vec![first, last] }
                } else {
                    Self { verts: monotone_chain(&pts) }
                }
            }
        }
    }

    pub fn empty() -> Self {
        Self { verts: vec![] }
    }

    /// Rebuilds a polytope from a vertex cycle already known to be strictly
    /// convex; only re-normalizes orientation and starting vertex.
    pub(crate) fn from_convex_cycle(mut verts: Vec<LatticePoint>) -> Self {
        match verts.len() {
            0 | 1 => Self { verts },
            2 => {
                verts.sort();
                Self { verts }
            }
            _ => {
                let n = verts.len();
                let orient = cross(&verts[0], &verts[1], &verts[2]);
                debug_assert!(!orient.is_zero(), "cycle not strictly convex");
                if orient.is_negative() {
                    verts.reverse();
                }
                let start = (0..n).min_by_key(|&i| verts[i].clone()).unwrap();
                verts.rotate_left(start);
                Self { verts }
            }
        }
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.verts
    }

    pub fn dim(&self) -> Dim {
        match self.verts.len() {
            0 => Dim::Empty,
            1 => Dim::Point,
            2 => Dim::Segment,
            _ => Dim::Polygon,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    /// Image under an affine unimodular map, re-normalized.
    pub fn apply(&self, map: &UnimodularMap) -> Self {
        Self::hull(self.verts.iter().map(|p| map.apply_point(p)))
    }

    pub fn translate(&self, dx: &BigInt, dy: &BigInt) -> Self {
        Self {
            verts: self
                .verts
                .iter()
                .map(|p| LatticePoint::new(&p.x + dx, &p.y + dy))
                .collect(),
        }
    }

    /// Bounding box `((min_x, min_y), (max_x, max_y))`; `None` when empty.
    pub fn bbox(&self) -> Option<(LatticePoint, LatticePoint)> {
        if self.verts.is_empty() {
            return None;
        }
        let min_x = self.verts.iter().map(|p| &p.x).min().unwrap().clone();
        let max_x = self.verts.iter().map(|p| &p.x).max().unwrap().clone();
        let min_y = self.verts.iter().map(|p| &p.y).min().unwrap().clone();
        let max_y = self.verts.iter().map(|p| &p.y).max().unwrap().clone();
        Some((LatticePoint::new(min_x, min_y), LatticePoint::new(max_x, max_y)))
    }

    /// One datum per edge, in the cyclic order of the vertices.
    pub fn edge_data(&self) -> Result<Vec<EdgeDatum>> {
        if self.dim() != Dim::Polygon {
            return Err(Error::NotTwoDimensional { op: "edge_data", dim: self.dim().as_str() });
        }
        let n = self.verts.len();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = &self.verts[i];
            let b = &self.verts[(i + 1) % n];
            let e = b - a;
            // Counter-clockwise boundary: the inner normal is the left
            // normal (-e.y, e.x), made primitive.
            let normal = primitive(&LatticePoint::new(-&e.y, e.x.clone()));
            let support = normal.dot(a);
            out.push(EdgeDatum {
                inner_normal: normal,
                support,
                lattice_length: e.content(),
            });
        }
        Ok(out)
    }

    /// Membership test (boundary included). Empty contains nothing.
    pub fn contains(&self, p: &LatticePoint) -> bool {
        match self.dim() {
            Dim::Empty => false,
            Dim::Point => *p == self.verts[0],
            Dim::Segment => {
                let (a, b) = (&self.verts[0], &self.verts[1]);
                cross(a, b, p).is_zero()
                    && (p - a).dot(&(b - a)) >= BigInt::zero()
                    && (p - b).dot(&(a - b)) >= BigInt::zero()
            }
            Dim::Polygon => self.half_plane_test(p, false),
        }
    }

    /// Strict interior membership in the ambient plane; always false for
    /// dimension ≤ 1 (the relative interior is deliberately not used).
    pub fn strictly_contains(&self, p: &LatticePoint) -> bool {
        self.dim() == Dim::Polygon && self.half_plane_test(p, true)
    }

    fn half_plane_test(&self, p: &LatticePoint, strict: bool) -> bool {
        let n = self.verts.len();
        (0..n).all(|i| {
            let c = cross(&self.verts[i], &self.verts[(i + 1) % n], p);
            if strict {
                c.is_positive()
            } else {
                !c.is_negative()
            }
        })
    }

    /// All lattice points of the polytope, by bounding-box scan with
    /// half-plane membership.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        self.scan_points(false)
    }

    /// Interior lattice points (ambient interior; empty for dim ≤ 1).
    pub fn interior_lattice_points(&self) -> Vec<LatticePoint> {
        if self.dim() != Dim::Polygon {
            return vec![];
        }
        self.scan_points(true)
    }

    fn scan_points(&self, strict: bool) -> Vec<LatticePoint> {
        let Some((lo, hi)) = self.bbox() else { return vec![] };
        let mut out = Vec::new();
        let mut y = lo.y.clone();
        while y <= hi.y {
            let mut x = lo.x.clone();
            while x <= hi.x {
                let p = LatticePoint::new(x.clone(), y.clone());
                let inside = if strict { self.strictly_contains(&p) } else { self.contains(&p) };
                if inside {
                    out.push(p);
                }
                x += 1;
            }
            y += 1;
        }
        out
    }

    /// Twice the Euclidean area, from the shoelace formula. Zero for
    /// dimension ≤ 1.
    pub fn double_area(&self) -> BigInt {
        if self.dim() != Dim::Polygon {
            return BigInt::zero();
        }
        let n = self.verts.len();
        let mut s = BigInt::zero();
        for i in 0..n {
            s += det2(&self.verts[i], &self.verts[(i + 1) % n]);
        }
        debug_assert!(s.is_positive());
        s
    }

    /// Number of boundary lattice points: Σ gcd over edges for polygons,
    /// endpoint count conventions for lower dimensions.
    pub fn boundary_count(&self) -> BigInt {
        match self.dim() {
            Dim::Empty => BigInt::zero(),
            Dim::Point => BigInt::from(1),
            Dim::Segment => (&self.verts[1] - &self.verts[0]).content() + 1,
            Dim::Polygon => {
                let n = self.verts.len();
                (0..n)
                    .map(|i| (&self.verts[(i + 1) % n] - &self.verts[i]).content())
                    .sum()
            }
        }
    }
}

impl fmt::Debug for LatticePolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polytope{:?}", self.verts)
    }
}

/// Andrew's monotone chain on lex-sorted, deduplicated, non-collinear
/// input. Returns the strict hull counter-clockwise from the lex minimum.
fn monotone_chain(pts: &[LatticePoint]) -> Vec<LatticePoint> {
    let build = |iter: &mut dyn Iterator<Item = &LatticePoint>| {
        let mut chain: Vec<LatticePoint> = Vec::new();
        for p in iter {
            while chain.len() >= 2
                && !cross(&chain[chain.len() - 2], &chain[chain.len() - 1], p).is_positive()
            {
                chain.pop();
            }
            chain.push(p.clone());
        }
        chain
    };
    let mut lower = build(&mut pts.iter());
    let mut upper = build(&mut pts.iter().rev());
    lower.pop();
    upper.pop();
    lower.append(&mut upper);
    lower
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn poly(coords: &[(i64, i64)]) -> LatticePolytope {
        LatticePolytope::hull(coords.iter().map(|&(x, y)| pt(x, y)))
    }

    #[test]
    fn hull_unit_square() {
        let p = poly(&[(0, 0), (1, 0), (0, 1), (1, 1)]);
        assert_eq!(p.vertices(), &[pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)]);
        assert_eq!(p.dim(), Dim::Polygon);
    }

    #[test]
    fn hull_collinear_input_gives_segment() {
        let p = poly(&[(0, 0), (2, 0), (1, 0)]);
        assert_eq!(p.vertices(), &[pt(0, 0), pt(2, 0)]);
        assert_eq!(p.dim(), Dim::Segment);
    }

    #[test]
    fn hull_absorbs_interior_point() {
        let p = poly(&[(0, 0), (3, 0), (0, 3), (1, 1)]);
        assert_eq!(p.vertices(), &[pt(0, 0), pt(3, 0), pt(0, 3)]);
    }

    #[test]
    fn hull_empty_and_point() {
        assert_eq!(LatticePolytope::hull(vec![]).dim(), Dim::Empty);
        assert_eq!(poly(&[(5, 7)]).vertices(), &[pt(5, 7)]);
    }

    #[test]
    fn hull_is_idempotent() {
        let p = poly(&[(0, 0), (4, 1), (1, 4), (3, 3), (2, 0)]);
        let q = LatticePolytope::hull(p.vertices().to_vec());
        assert_eq!(p, q);
    }

    #[test]
    fn edge_data_unit_triangle() {
        let p = poly(&[(0, 0), (1, 0), (0, 1)]);
        let ed = p.edge_data().unwrap();
        assert_eq!(ed.len(), 3);
        assert_eq!(ed[0].inner_normal, pt(0, 1));
        assert_eq!(ed[0].support, BigInt::zero());
        assert_eq!(ed[1].inner_normal, pt(-1, -1));
        assert_eq!(ed[1].support, BigInt::from(-1));
        assert_eq!(ed[2].inner_normal, pt(1, 0));
        assert_eq!(ed[2].support, BigInt::zero());
        assert!(ed.iter().all(|e| e.lattice_length == BigInt::from(1)));
    }

    #[test]
    fn edge_data_box3() {
        let p = poly(&[(0, 0), (3, 0), (3, 3), (0, 3)]);
        let ed = p.edge_data().unwrap();
        assert_eq!(ed.len(), 4);
        assert!(ed.iter().all(|e| e.lattice_length == BigInt::from(3)));
        let normals: Vec<_> = ed.iter().map(|e| e.inner_normal.clone()).collect();
        assert_eq!(normals, vec![pt(0, 1), pt(-1, 0), pt(0, -1), pt(1, 0)]);
    }

    #[test]
    fn edge_data_singular_triangle_all_length_one() {
        let p = poly(&[(0, 0), (2, 1), (1, 2)]);
        let ed = p.edge_data().unwrap();
        assert!(ed.iter().all(|e| e.lattice_length == BigInt::from(1)));
    }

    #[test]
    fn edge_data_rejects_low_dim() {
        assert!(poly(&[(0, 0), (2, 0)]).edge_data().is_err());
        assert!(poly(&[(1, 1)]).edge_data().is_err());
    }

    #[test]
    fn boundary_sum_matches_enumeration() {
        for coords in [
            vec![(0i64, 0i64), (3, 0), (0, 3)],
            vec![(0, 0), (4, 0), (4, 2), (0, 2)],
            vec![(0, 0), (2, 1), (1, 2)],
        ] {
            let p = poly(&coords);
            let by_scan = p
                .lattice_points()
                .into_iter()
                .filter(|q| !p.strictly_contains(q))
                .count();
            assert_eq!(p.boundary_count(), BigInt::from(by_scan));
        }
    }

    #[test]
    fn apply_shear_preserves_counts() {
        let p = poly(&[(0, 0), (1, 0), (0, 1), (1, 1)]);
        let shear = UnimodularMap::new(
            [[1.into(), 1.into()], [0.into(), 1.into()]],
            [0.into(), 0.into()],
        )
        .unwrap();
        let q = p.apply(&shear);
        assert_eq!(p.double_area(), q.double_area());
        assert_eq!(p.boundary_count(), q.boundary_count());
        assert_eq!(p.lattice_points().len(), q.lattice_points().len());
    }

    #[test]
    fn apply_translation_moves_point() {
        let p = poly(&[(0, 0)]);
        let t = UnimodularMap::translation(5, 7);
        assert_eq!(p.apply(&t).vertices(), &[pt(5, 7)]);
    }
}
