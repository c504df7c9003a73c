#![allow(dead_code)]

use dytri::geometry::midpoint;
use dytri::{AffineMap, Dyadic, Hat, Matrix2, Point, Triangle};
use rand::Rng;

/// Representative hats with odd `j, m <= bound` and `i` in `{1, …, 2j-1}`.
pub fn grid_hats(bound: i64) -> Vec<Hat> {
    let mut out = Vec::new();
    for j in (1..=bound).step_by(2) {
        for m in (1..=bound).step_by(2) {
            for i in (1..2 * j).step_by(2) {
                out.push(Hat::representative(i, j, m).unwrap());
            }
        }
    }
    out
}

pub fn random_dyadic<R: Rng>(rng: &mut R, span: i64, max_exp: i64) -> Dyadic {
    Dyadic::new(rng.gen_range(-span..=span), -rng.gen_range(0..=max_exp))
}

/// One generator of the unit affine group: a dyadic translation, an integer
/// shear, or `diag(±1, ±2^k)` with `|k| <= 3`.
pub fn random_generator<R: Rng>(rng: &mut R) -> AffineMap {
    match rng.gen_range(0..4) {
        0 => AffineMap::translation(Point::new(
            random_dyadic(rng, 40, 3),
            random_dyadic(rng, 40, 3),
        )),
        1 => AffineMap::linear(Matrix2::new(1, rng.gen_range(-4i64..=4), 0, 1)),
        2 => AffineMap::linear(Matrix2::new(1, 0, rng.gen_range(-4i64..=4), 1)),
        _ => {
            let sx = if rng.gen_bool(0.5) { 1 } else { -1 };
            let sy = if rng.gen_bool(0.5) { 1 } else { -1 };
            AffineMap::linear(Matrix2::diag(
                Dyadic::from_int(sx),
                Dyadic::new(sy, rng.gen_range(-3i64..=3)),
            ))
        }
    }
}

/// Composition of at most six generators.
pub fn random_unit_map<R: Rng>(rng: &mut R) -> AffineMap {
    let n = rng.gen_range(1..=6);
    (0..n).fold(AffineMap::identity(), |acc, _| {
        acc.then(&random_generator(rng))
    })
}

/// A point strictly inside `t`: a convex combination with positive dyadic weights.
pub fn random_interior<R: Rng>(rng: &mut R, t: &Triangle) -> Point {
    let total = 64i64;
    let a = rng.gen_range(1..total - 1);
    let b = rng.gen_range(1..total - a);
    let c = total - a - b;
    let [p, q, r] = t.vertices();
    let w = |k: i64| Dyadic::new(k, -6);
    p.scale(&w(a)).add(&q.scale(&w(b))).add(&r.scale(&w(c)))
}

/// A witness map is valid when it carries `src` vertex `k` to `dst` vertex
/// `image[k]`, has a dyadic inverse, and commutes with the midpoint on
/// `samples` random interior pairs.
pub fn witness_is_valid<R: Rng>(
    rng: &mut R,
    src: &Triangle,
    dst: &Triangle,
    image: [usize; 3],
    f: &AffineMap,
    samples: usize,
) -> bool {
    let vertices_ok = (0..3).all(|k| f.apply(src.vertex(k)) == *dst.vertex(image[k]));
    let inverse_ok = match f.invert() {
        Ok(g) => g.compose(f) == AffineMap::identity() && (0..3).all(|k| g.apply(dst.vertex(image[k])) == *src.vertex(k)),
        Err(_) => false,
    };
    let hom_ok = (0..samples).all(|_| {
        let (p, q) = (random_interior(rng, src), random_interior(rng, src));
        let fp = f.apply(&p);
        dst.contains(&fp) && f.apply(&midpoint(&p, &q)) == midpoint(&fp, &f.apply(&q))
    });
    vertices_ok && inverse_ok && hom_ok
}
