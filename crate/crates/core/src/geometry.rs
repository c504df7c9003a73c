//! Points, matrices and affine maps over `Z[1/2]`, and the triangle
//! invariants (side types, boundary type, area) used throughout.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::dyadic::{odd_gcd, Dyadic};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Dyadic,
    pub y: Dyadic,
}

impl Point {
    pub fn new(x: impl Into<Dyadic>, y: impl Into<Dyadic>) -> Self {
        Point {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn origin() -> Self {
        Point::new(Dyadic::zero(), Dyadic::zero())
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn add(&self, other: &Point) -> Point {
        Point::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn scale(&self, r: &Dyadic) -> Point {
        Point::new(&self.x * r, &self.y * r)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

/// `p(1 - r) + q r`. With `r = 1/2` this is the midpoint `p ∘ q`.
pub fn weighted_mean(p: &Point, q: &Point, r: &Dyadic) -> Point {
    let s = &Dyadic::one() - r;
    p.scale(&s).add(&q.scale(r))
}

pub fn midpoint(p: &Point, q: &Point) -> Point {
    weighted_mean(p, q, &Dyadic::pow2(-1))
}

/// `x1*y2 - x2*y1`.
pub fn cross(u: &Point, v: &Point) -> Dyadic {
    &u.x * &v.y - &v.x * &u.y
}

/// Row-major `[[a, b], [c, d]]`, acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix2 {
    pub a: Dyadic,
    pub b: Dyadic,
    pub c: Dyadic,
    pub d: Dyadic,
}

impl Matrix2 {
    pub fn new(
        a: impl Into<Dyadic>,
        b: impl Into<Dyadic>,
        c: impl Into<Dyadic>,
        d: impl Into<Dyadic>,
    ) -> Self {
        Matrix2 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn identity() -> Self {
        Matrix2::new(1, 0, 0, 1)
    }

    pub fn diag(x: Dyadic, y: Dyadic) -> Self {
        Matrix2::new(x, Dyadic::zero(), Dyadic::zero(), y)
    }

    pub fn det(&self) -> Dyadic {
        &self.a * &self.d - &self.b * &self.c
    }

    /// Invertible over `Z[1/2]`: the determinant is `±2^k`.
    pub fn is_unit(&self) -> bool {
        self.det().is_unit()
    }

    pub fn transpose(&self) -> Matrix2 {
        Matrix2::new(
            self.a.clone(),
            self.c.clone(),
            self.b.clone(),
            self.d.clone(),
        )
    }

    pub fn mul(&self, o: &Matrix2) -> Matrix2 {
        Matrix2::new(
            &self.a * &o.a + &self.b * &o.c,
            &self.a * &o.b + &self.b * &o.d,
            &self.c * &o.a + &self.d * &o.c,
            &self.c * &o.b + &self.d * &o.d,
        )
    }

    pub fn apply(&self, p: &Point) -> Point {
        Point::new(
            &self.a * &p.x + &self.b * &p.y,
            &self.c * &p.x + &self.d * &p.y,
        )
    }

    pub fn inverse(&self) -> Result<Matrix2> {
        let det = self.det();
        let inv = det
            .unit_inverse()
            .ok_or_else(|| Error::NotInvertibleOverD(det.to_string()))?;
        Ok(Matrix2::new(
            &self.d * &inv,
            -(&self.b * &inv),
            -(&self.c * &inv),
            &self.a * &inv,
        ))
    }

    pub fn rows(&self) -> [[&Dyadic; 2]; 2] {
        [[&self.a, &self.b], [&self.c, &self.d]]
    }
}

/// `p ↦ linear·p + translation`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    pub linear: Matrix2,
    pub translation: Point,
}

impl AffineMap {
    pub fn new(linear: Matrix2, translation: Point) -> Self {
        AffineMap {
            linear,
            translation,
        }
    }

    pub fn identity() -> Self {
        AffineMap::new(Matrix2::identity(), Point::origin())
    }

    pub fn translation(t: Point) -> Self {
        AffineMap::new(Matrix2::identity(), t)
    }

    pub fn linear(m: Matrix2) -> Self {
        AffineMap::new(m, Point::origin())
    }

    pub fn apply(&self, p: &Point) -> Point {
        self.linear.apply(p).add(&self.translation)
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &AffineMap) -> AffineMap {
        AffineMap::new(
            self.linear.mul(&inner.linear),
            self.apply(&inner.translation),
        )
    }

    /// Follow `self` with `outer`.
    pub fn then(&self, outer: &AffineMap) -> AffineMap {
        outer.compose(self)
    }

    pub fn is_unit(&self) -> bool {
        self.linear.is_unit()
    }

    pub fn invert(&self) -> Result<AffineMap> {
        let inv = self.linear.inverse()?;
        let t = inv.apply(&self.translation);
        Ok(AffineMap::new(inv, Point::new(-t.x, -t.y)))
    }
}

/// A permutation of three vertex labels: `image[k]` is where vertex `k` goes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub [usize; 3]);

impl Perm {
    pub const IDENTITY: Perm = Perm([0, 1, 2]);

    pub const ALL: [Perm; 6] = [
        Perm([0, 1, 2]),
        Perm([0, 2, 1]),
        Perm([1, 0, 2]),
        Perm([1, 2, 0]),
        Perm([2, 0, 1]),
        Perm([2, 1, 0]),
    ];

    pub fn new(image: [usize; 3]) -> Option<Perm> {
        let mut seen = [false; 3];
        for &k in &image {
            if k > 2 || seen[k] {
                return None;
            }
            seen[k] = true;
        }
        Some(Perm(image))
    }

    pub fn image(&self, k: usize) -> usize {
        self.0[k]
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = [0; 3];
        for (k, &v) in self.0.iter().enumerate() {
            inv[v] = k;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        *self == Perm::IDENTITY
    }

    /// Number of fixed labels: 3 for the identity, 1 for a transposition, 0 for a 3-cycle.
    pub fn fixed_points(&self) -> usize {
        (0..3).filter(|&k| self.0[k] == k).count()
    }

    /// Images of A, B, C as letters, e.g. `"ACB"` swaps B and C.
    pub fn label(&self) -> String {
        self.0.iter().map(|&k| (b'A' + k as u8) as char).collect()
    }

    pub fn from_label(s: &str) -> Option<Perm> {
        let bytes = s.as_bytes();
        if bytes.len() != 3 {
            return None;
        }
        let mut image = [0; 3];
        for (slot, &c) in image.iter_mut().zip(bytes) {
            if !(b'A'..=b'C').contains(&c) {
                return None;
            }
            *slot = (c - b'A') as usize;
        }
        Perm::new(image)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Three non-collinear dyadic points. The dyadic triangle is the real hull
/// of the vertices intersected with `D²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangle {
    vertices: [Point; 3],
}

impl Triangle {
    pub fn new(a: Point, b: Point, c: Point) -> Result<Self> {
        let t = Triangle {
            vertices: [a, b, c],
        };
        if t.signed_twice_area().is_zero() {
            return Err(Error::DegenerateTriangle);
        }
        Ok(t)
    }

    pub fn from_ints(v: [(i64, i64); 3]) -> Result<Self> {
        let [a, b, c] = v.map(|(x, y)| Point::new(x, y));
        Triangle::new(a, b, c)
    }

    pub fn vertices(&self) -> &[Point; 3] {
        &self.vertices
    }

    pub fn vertex(&self, k: usize) -> &Point {
        &self.vertices[k]
    }

    /// Positive when the vertices run counter-clockwise.
    pub fn signed_twice_area(&self) -> Dyadic {
        let [a, b, c] = &self.vertices;
        cross(&b.sub(a), &c.sub(a))
    }

    pub fn twice_area(&self) -> Dyadic {
        self.signed_twice_area().abs()
    }

    pub fn is_clockwise(&self) -> bool {
        self.signed_twice_area().signum() < 0
    }

    pub fn image(&self, f: &AffineMap) -> Result<Triangle> {
        let [a, b, c] = &self.vertices;
        Triangle::new(f.apply(a), f.apply(b), f.apply(c))
    }

    /// Same vertices, relabelled so that vertex `k` of the result is
    /// vertex `order[k]` of `self`.
    pub fn reordered(&self, order: [usize; 3]) -> Triangle {
        Triangle {
            vertices: order.map(|k| self.vertices[k].clone()),
        }
    }

    pub fn boundary_type(&self) -> BoundaryType {
        let [a, b, c] = &self.vertices;
        let ty = |p: &Point, q: &Point| segment_type(p, q).expect("vertices are distinct");
        BoundaryType::new(ty(a, b), ty(b, c), ty(c, a))
    }

    /// Boundary type read with the vertices in clockwise order, which is
    /// how types of differently oriented triangles are compared.
    pub fn clockwise_boundary_type(&self) -> BoundaryType {
        if self.is_clockwise() {
            self.boundary_type()
        } else {
            self.reordered([0, 2, 1]).boundary_type()
        }
    }

    /// Closed real-hull membership.
    pub fn contains(&self, p: &Point) -> bool {
        let [a, b, c] = &self.vertices;
        let s = [
            cross(&b.sub(a), &p.sub(a)).signum(),
            cross(&c.sub(b), &p.sub(b)).signum(),
            cross(&a.sub(c), &p.sub(c)).signum(),
        ];
        s.iter().all(|&x| x >= 0) || s.iter().all(|&x| x <= 0)
    }
}

/// Side type of the segment `pq`: the odd `k` with `pq ≅ [0, k]`.
pub fn segment_type(p: &Point, q: &Point) -> Result<BigInt> {
    let d = q.sub(p);
    let shift = match (d.x.val2(), d.y.val2()) {
        (Err(_), Err(_)) => return Err(Error::EqualPoints),
        (Ok(a), Err(_)) => a,
        (Err(_), Ok(b)) => b,
        (Ok(a), Ok(b)) => a.min(b),
    };
    let x = d.x.shift(-shift).to_integer().expect("cleared");
    let y = d.y.shift(-shift).to_integer().expect("cleared");
    odd_gcd(&x, &y)
}

/// Side types of `(AB, BC, CA)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundaryType {
    pub r: BigInt,
    pub s: BigInt,
    pub t: BigInt,
}

impl BoundaryType {
    pub fn new(r: BigInt, s: BigInt, t: BigInt) -> Self {
        BoundaryType { r, s, t }
    }

    fn as_array(&self) -> [&BigInt; 3] {
        [&self.r, &self.s, &self.t]
    }

    /// Equal up to cyclic rotation.
    pub fn is_rotation_of(&self, other: &BoundaryType) -> bool {
        let a = self.as_array();
        let b = other.as_array();
        (0..3).any(|k| (0..3).all(|n| a[n] == b[(n + k) % 3]))
    }

    /// Equal to a rotation of the reversed triple: the type read with the
    /// opposite orientation.
    pub fn is_reversal_of(&self, other: &BoundaryType) -> bool {
        let rev = BoundaryType::new(other.t.clone(), other.s.clone(), other.r.clone());
        self.is_rotation_of(&rev)
    }

    pub fn equivalent(&self, other: &BoundaryType) -> bool {
        self.is_rotation_of(other) || self.is_reversal_of(other)
    }

    pub fn all_equal(&self) -> bool {
        self.r == self.s && self.s == self.t
    }

    pub fn all_distinct(&self) -> bool {
        self.r != self.s && self.s != self.t && self.r != self.t
    }

    pub fn is_valid(&self) -> bool {
        is_valid_boundary_triple(&self.r, &self.s, &self.t)
    }
}

impl fmt::Display for BoundaryType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.s, self.t)
    }
}

/// `gcd(r, s) = gcd(s, t) = gcd(r, t)`.
pub fn is_valid_boundary_triple(r: &BigInt, s: &BigInt, t: &BigInt) -> bool {
    let rs = r.gcd(s);
    rs == s.gcd(t) && rs == r.gcd(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn dy(n: i64, e: i64) -> Dyadic {
        Dyadic::new(n, e)
    }

    fn hat(i: i64, j: i64, m: i64) -> Triangle {
        Triangle::from_ints([(0, 0), (i, j), (m, 0)]).unwrap()
    }

    #[test]
    fn weighted_mean_examples() {
        let half = dy(1, -1);
        assert_eq!(
            weighted_mean(&Point::new(0, 0), &Point::new(1, 1), &half),
            Point::new(half.clone(), half.clone())
        );
        let a = Point::new(dy(3, -2), 7);
        assert_eq!(
            weighted_mean(&a, &Point::new(5, 5), &Dyadic::zero()),
            a
        );
        assert_eq!(
            weighted_mean(&Point::new(0, 0), &Point::new(8, 4), &dy(3, -3)),
            Point::new(3, dy(3, -1))
        );
    }

    #[test]
    fn det_and_units() {
        let (i, j, m) = (15, 9, 21);
        let mb = Matrix2::new(-1, 0, (2 * i - m) / j, 1);
        assert_eq!(mb.det(), Dyadic::from_int(-1));
        assert!(mb.is_unit());
        assert!(Matrix2::identity().is_unit());
        let two = Matrix2::new(2, 0, 0, 1);
        assert_eq!(two.det(), Dyadic::from_int(2));
        assert!(two.is_unit());
        assert!(!Matrix2::new(3, 0, 0, 1).is_unit());
        assert!(!Matrix2::new(1, 1, 1, 1).is_unit());
    }

    #[test]
    fn affine_examples() {
        let t = AffineMap::translation(Point::new(-4, -9));
        assert_eq!(t.apply(&Point::new(4, 9)), Point::origin());

        let m = 7;
        let phi = AffineMap::new(Matrix2::new(-1, 0, 0, 1), Point::new(2 * m, 0));
        assert_eq!(phi.apply(&Point::new(m, 3 * m)), Point::new(m, 3 * m));

        let f = AffineMap::linear(Matrix2::new(1, 0, 0, 2));
        let inv = f.invert().unwrap();
        assert_eq!(inv.linear, Matrix2::new(1, 0, 0, dy(1, -1)));
        assert_eq!(inv.compose(&f), AffineMap::identity());

        let bad = AffineMap::linear(Matrix2::new(3, 0, 0, 1));
        assert!(matches!(bad.invert(), Err(Error::NotInvertibleOverD(_))));
    }

    #[test]
    fn areas() {
        assert_eq!(hat(3, 27, 21).twice_area(), Dyadic::from_int(21 * 27));
        assert_eq!(
            Triangle::from_ints([(0, 0), (1, 1), (2, 2)]),
            Err(Error::DegenerateTriangle)
        );
        let small = Triangle::new(
            Point::new(0, 0),
            Point::new(dy(1, -1), 0),
            Point::new(0, dy(1, -1)),
        )
        .unwrap();
        assert_eq!(small.twice_area(), dy(1, -2));
        assert!(hat(1, 3, 5).is_clockwise());
    }

    #[test]
    fn segment_types() {
        let o = Point::origin();
        assert_eq!(segment_type(&o, &Point::new(15, 9)).unwrap(), big(3));
        assert_eq!(segment_type(&o, &Point::new(2, 0)).unwrap(), big(1));
        assert_eq!(segment_type(&o, &Point::new(7, 0)).unwrap(), big(7));
        assert_eq!(
            segment_type(&Point::new(dy(3, -1), 1), &Point::new(dy(3, -1), 1)),
            Err(Error::EqualPoints)
        );
    }

    #[test]
    fn boundary_types() {
        let bt = |i, j, m| {
            let b = hat(i, j, m).boundary_type();
            (b.r, b.s, b.t)
        };
        assert_eq!(bt(21, 9, 3), (big(3), big(9), big(3)));
        assert_eq!(bt(3, 7, 1), (big(1), big(1), big(1)));
        assert_eq!(bt(1, 3, 5), (big(1), big(1), big(5)));
        assert_eq!(bt(15, 9, 21), (big(3), big(3), big(21)));
        assert_eq!(bt(3, 27, 21), (big(3), big(9), big(21)));
    }

    #[test]
    fn boundary_triple_condition() {
        assert!(is_valid_boundary_triple(&big(3), &big(9), &big(21)));
        assert!(is_valid_boundary_triple(&big(1), &big(1), &big(1)));
        assert!(!is_valid_boundary_triple(&big(3), &big(3), &big(5)));
    }

    #[test]
    fn boundary_equivalence() {
        let b = BoundaryType::new(big(1), big(3), big(5));
        assert!(b.is_rotation_of(&BoundaryType::new(big(3), big(5), big(1))));
        assert!(!b.is_rotation_of(&BoundaryType::new(big(5), big(3), big(1))));
        assert!(b.is_reversal_of(&BoundaryType::new(big(5), big(3), big(1))));
        assert!(!b.equivalent(&BoundaryType::new(big(1), big(3), big(7))));
    }

    #[test]
    fn membership() {
        let t = hat(1, 1, 1);
        let simplex = Triangle::from_ints([(0, 0), (1, 0), (0, 1)]).unwrap();
        assert!(simplex.contains(&Point::new(dy(1, -1), dy(1, -2))));
        for v in t.vertices() {
            assert!(t.contains(v));
        }
        assert!(!simplex.contains(&Point::new(2, 2)));
        assert!(simplex.contains(&Point::new(dy(1, -1), dy(1, -1))));
    }

    #[test]
    fn perms() {
        assert_eq!(Perm([0, 2, 1]).label(), "ACB");
        assert_eq!(Perm::from_label("CAB"), Some(Perm([2, 0, 1])));
        assert_eq!(Perm::from_label("AAB"), None);
        for p in Perm::ALL {
            assert_eq!(Perm::from_label(&p.label()), Some(p));
            let inv = p.inverse();
            for k in 0..3 {
                assert_eq!(inv.image(p.image(k)), k);
            }
        }
    }

    fn arb_dyadic() -> impl Strategy<Value = Dyadic> {
        (-200i64..200, -4i64..4).prop_map(|(n, e)| Dyadic::new(n, e))
    }

    fn arb_point() -> impl Strategy<Value = Point> {
        (arb_dyadic(), arb_dyadic()).prop_map(|(x, y)| Point::new(x, y))
    }

    /// Random unit map: `diag(±1, ±2^k)` sandwiched between integer shears.
    fn arb_unit_map() -> impl Strategy<Value = AffineMap> {
        (-5i64..5, -5i64..5, -3i64..=3, any::<bool>(), any::<bool>(), arb_point()).prop_map(
            |(s1, s2, k, fx, fy, t)| {
                let d = Matrix2::diag(
                    Dyadic::from_int(if fx { -1 } else { 1 }),
                    Dyadic::new(if fy { -1 } else { 1 }, k),
                );
                let lin = Matrix2::new(1, s1, 0, 1)
                    .mul(&d)
                    .mul(&Matrix2::new(1, 0, s2, 1));
                AffineMap::new(lin, t)
            },
        )
    }

    proptest! {
        #[test]
        fn maps_are_mean_homomorphisms(f in arb_unit_map(), a in arb_point(), b in arb_point(), r in arb_dyadic()) {
            prop_assert_eq!(
                f.apply(&weighted_mean(&a, &b, &r)),
                weighted_mean(&f.apply(&a), &f.apply(&b), &r)
            );
            prop_assert_eq!(f.invert().unwrap().compose(&f), AffineMap::identity());
        }

        #[test]
        fn segment_type_invariances(p in arb_point(), q in arb_point(), t in arb_point(), k in -6i64..6) {
            prop_assume!(p != q);
            let base = segment_type(&p, &q).unwrap();
            prop_assert_eq!(&segment_type(&q, &p).unwrap(), &base);
            prop_assert_eq!(&segment_type(&p.add(&t), &q.add(&t)).unwrap(), &base);
            let scaled = p.add(&q.sub(&p).scale(&Dyadic::pow2(k)));
            prop_assert_eq!(&segment_type(&p, &scaled).unwrap(), &base);
        }

        #[test]
        fn boundary_type_under_maps(f in arb_unit_map(), a in arb_point(), b in arb_point(), c in arb_point()) {
            let t = match Triangle::new(a, b, c) {
                Ok(t) => t,
                Err(_) => return Ok(()),
            };
            let img = t.image(&f).unwrap();
            let (bt, bi) = (t.clockwise_boundary_type(), img.clockwise_boundary_type());
            prop_assert_eq!(img.boundary_type(), t.boundary_type());
            prop_assert!(bt.is_valid());
            if f.linear.det().signum() > 0 {
                prop_assert!(bi.is_rotation_of(&bt));
            } else {
                prop_assert!(bi.is_reversal_of(&bt));
            }
            prop_assert_eq!(img.twice_area(), &t.twice_area() * &f.linear.det().abs());
        }

        #[test]
        fn hull_closed_under_midpoints(a in arb_point(), b in arb_point(), c in arb_point(),
                                       w in proptest::collection::vec((0i64..=16, 0i64..=16), 2)) {
            let t = match Triangle::new(a.clone(), b.clone(), c.clone()) {
                Ok(t) => t,
                Err(_) => return Ok(()),
            };
            // convex combinations with weights in multiples of 1/32
            let pts: Vec<Point> = w.iter().map(|&(u, v)| {
                let (u, v) = (Dyadic::new(u, -5), Dyadic::new(v, -5));
                let rest = &(&Dyadic::one() - &u) - &v;
                a.scale(&u).add(&b.scale(&v)).add(&c.scale(&rest))
            }).collect();
            prop_assert!(t.contains(&pts[0]) && t.contains(&pts[1]));
            prop_assert!(t.contains(&midpoint(&pts[0], &pts[1])));
        }
    }
}
