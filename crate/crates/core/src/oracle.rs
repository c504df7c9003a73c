//! Ground truth independent of the number-theoretic criteria.
//!
//! A vertex correspondence between two triangles determines at most one
//! affine map. We solve for it over `Q` and accept it only when every entry
//! lies in `Z[1/2]` and the determinant is a unit `±2^k`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::geometry::{midpoint, AffineMap, Matrix2, Perm, Point, Triangle};

/// Vertex `k` of the source goes to vertex `image(k)` of the target.
pub type Correspondence = Perm;

/// Order in which [`oracle_isomorphic`] tries correspondences: the
/// presentations `A'B'C'`, `C'B'A'`, `A'C'B'`, `C'A'B'`, `B'C'A'`, `B'A'C'`.
pub const CASE_ORDER: [Correspondence; 6] = [
    Perm([0, 1, 2]),
    Perm([2, 1, 0]),
    Perm([0, 2, 1]),
    Perm([1, 2, 0]),
    Perm([2, 0, 1]),
    Perm([1, 0, 2]),
];

fn to_rational(d: &Dyadic) -> BigRational {
    let e = d.exp();
    if e >= 0 {
        BigRational::from_integer(d.num() << e as u64)
    } else {
        BigRational::new(d.num().clone(), BigInt::one() << (-e) as u64)
    }
}

fn to_dyadic(q: &BigRational) -> Option<Dyadic> {
    let den = q.denom();
    let tz = den.trailing_zeros().unwrap_or(0);
    if (den >> tz) != BigInt::one() {
        return None;
    }
    Some(Dyadic::new(q.numer().clone(), -(tz as i64)))
}

type QVec = [BigRational; 2];
type QMat = [[BigRational; 2]; 2];

fn qpoint(p: &Point) -> QVec {
    [to_rational(&p.x), to_rational(&p.y)]
}

fn qsub(a: &QVec, b: &QVec) -> QVec {
    [&a[0] - &b[0], &a[1] - &b[1]]
}

/// Matrix with the given vectors as columns.
fn columns(u: &QVec, v: &QVec) -> QMat {
    [[u[0].clone(), v[0].clone()], [u[1].clone(), v[1].clone()]]
}

fn qmul(x: &QMat, y: &QMat) -> QMat {
    let e = |r: usize, c: usize| &x[r][0] * &y[0][c] + &x[r][1] * &y[1][c];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn qinv(x: &QMat) -> Option<QMat> {
    let det = &x[0][0] * &x[1][1] - &x[0][1] * &x[1][0];
    if det.is_zero() {
        return None;
    }
    Some([
        [&x[1][1] / &det, -&x[0][1] / &det],
        [-&x[1][0] / &det, &x[0][0] / &det],
    ])
}

/// The affine map over `Q` sending vertex `k` of `src` to vertex `c(k)` of `dst`.
fn solve_rational(src: &Triangle, dst: &Triangle, c: Correspondence) -> (QMat, QVec) {
    let p: Vec<QVec> = src.vertices().iter().map(qpoint).collect();
    let q: Vec<QVec> = (0..3).map(|k| qpoint(dst.vertex(c.image(k)))).collect();
    let ps = columns(&qsub(&p[1], &p[0]), &qsub(&p[2], &p[0]));
    let qs = columns(&qsub(&q[1], &q[0]), &qsub(&q[2], &q[0]));
    let lin = qmul(&qs, &qinv(&ps).expect("source is non-degenerate"));
    let lp0 = [
        &lin[0][0] * &p[0][0] + &lin[0][1] * &p[0][1],
        &lin[1][0] * &p[0][0] + &lin[1][1] * &p[0][1],
    ];
    let t = qsub(&q[0], &lp0);
    (lin, t)
}

/// The unique dyadic affine automorphism of the plane realising `c`, if any.
pub fn solve_correspondence(
    src: &Triangle,
    dst: &Triangle,
    c: Correspondence,
) -> Option<AffineMap> {
    let (lin, t) = solve_rational(src, dst, c);
    let linear = Matrix2 {
        a: to_dyadic(&lin[0][0])?,
        b: to_dyadic(&lin[0][1])?,
        c: to_dyadic(&lin[1][0])?,
        d: to_dyadic(&lin[1][1])?,
    };
    let translation = Point {
        x: to_dyadic(&t[0])?,
        y: to_dyadic(&t[1])?,
    };
    if !linear.is_unit() {
        return None;
    }
    Some(AffineMap::new(linear, translation))
}

/// First correspondence in [`CASE_ORDER`] admitting a dyadic map.
pub fn oracle_isomorphic(src: &Triangle, dst: &Triangle) -> Option<(Correspondence, AffineMap)> {
    CASE_ORDER
        .iter()
        .find_map(|&c| solve_correspondence(src, dst, c).map(|f| (c, f)))
}

/// All realisable self-correspondences, identity first.
pub fn oracle_automorphisms(t: &Triangle) -> Vec<(Correspondence, AffineMap)> {
    Perm::ALL
        .iter()
        .filter_map(|&c| solve_correspondence(t, t, c).map(|f| (c, f)))
        .collect()
}

pub fn oracle_aut_count(t: &Triangle) -> usize {
    oracle_automorphisms(t).len()
}

pub const MAX_CLOSURE_DEPTH: u32 = 12;

/// `depth` rounds of closing `generators` under the midpoint operation.
pub fn closure_sample(generators: &BTreeSet<Point>, depth: u32) -> Result<BTreeSet<Point>> {
    if depth > MAX_CLOSURE_DEPTH {
        return Err(Error::DepthTooLarge(depth));
    }
    let mut set = generators.clone();
    for _ in 0..depth {
        let pts: Vec<&Point> = set.iter().collect();
        let mut next = set.clone();
        for (n, p) in pts.iter().enumerate() {
            for q in &pts[n + 1..] {
                next.insert(midpoint(p, q));
            }
        }
        set = next;
    }
    Ok(set)
}
