//! Hats, the re-pointing isomorphism `κ`, reduction of arbitrary dyadic
//! triangles to representative hats, and encoding triples.
//!
//! A hat `T̄(i, j, m)` has vertices `A = (0,0)`, `B = (i,j)`, `C = (m,0)` in
//! clockwise order, with `j` and `m` odd and positive. It is representative
//! when `i` is odd as well. Encoding triples pick the unique odd `i` in
//! `{1, 3, …, 2j-1}` out of each pointed class.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::dyadic::{dyadic_mod_odd, Dyadic};
use crate::error::{Error, Result};
use crate::geometry::{AffineMap, Matrix2, Perm, Point, Triangle};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hat {
    i: BigInt,
    j: BigInt,
    m: BigInt,
}

impl Hat {
    /// An almost representative hat; `i` may be any integer.
    pub fn new(i: impl Into<BigInt>, j: impl Into<BigInt>, m: impl Into<BigInt>) -> Result<Self> {
        let (i, j, m) = (i.into(), j.into(), m.into());
        let reason = if !j.is_positive() || !m.is_positive() {
            Some("j and m must be positive")
        } else if j.is_even() || m.is_even() {
            Some("j and m must be odd")
        } else {
            None
        };
        match reason {
            Some(reason) => Err(Error::InvalidHat {
                i: i.to_string(),
                j: j.to_string(),
                m: m.to_string(),
                reason,
            }),
            None => Ok(Hat { i, j, m }),
        }
    }

    /// A representative hat: all of `i`, `j`, `m` odd.
    pub fn representative(
        i: impl Into<BigInt>,
        j: impl Into<BigInt>,
        m: impl Into<BigInt>,
    ) -> Result<Self> {
        let h = Hat::new(i, j, m)?;
        if !h.is_representative() {
            return Err(Error::InvalidHat {
                i: h.i.to_string(),
                j: h.j.to_string(),
                m: h.m.to_string(),
                reason: "i must be odd for a representative hat",
            });
        }
        Ok(h)
    }

    pub fn i(&self) -> &BigInt {
        &self.i
    }

    pub fn j(&self) -> &BigInt {
        &self.j
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn is_representative(&self) -> bool {
        self.i.is_odd()
    }

    pub fn to_triangle(&self) -> Triangle {
        Triangle::new(
            Point::origin(),
            Point::new(self.i.clone(), self.j.clone()),
            Point::new(self.m.clone(), 0),
        )
        .expect("j, m > 0 so a hat is never degenerate")
    }

    /// `T̄(i,j,m) ≅ T̄(m-i,j,m)`, re-pointed at `C` by `x ↦ m - x`.
    pub fn kappa(&self) -> Hat {
        Hat {
            i: &self.m - &self.i,
            j: self.j.clone(),
            m: self.m.clone(),
        }
    }

    /// The affine map realising [`Hat::kappa`]; it sends `A, B, C` to `C', B', A'`.
    pub fn kappa_map(&self) -> AffineMap {
        AffineMap::new(
            Matrix2::new(-1, 0, 0, 1),
            Point::new(self.m.clone(), 0),
        )
    }

    pub fn pointed_canonical(&self) -> EncodingTriple {
        EncodingTriple {
            i: odd_representative(&self.i.mod_floor(&self.j), &self.j),
            j: self.j.clone(),
            m: self.m.clone(),
        }
    }

    /// Twice the area of the real hull, `m*j`.
    pub fn twice_area(&self) -> BigInt {
        &self.m * &self.j
    }
}

impl fmt::Display for Hat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.is_representative() { "T" } else { "TT" };
        write!(f, "{tag} {} {} {}", self.i, self.j, self.m)
    }
}

/// The odd integer in `[1, 2j-1]` congruent to `r` mod `j`, for `0 <= r < j`.
fn odd_representative(r: &BigInt, j: &BigInt) -> BigInt {
    if r.is_odd() {
        r.clone()
    } else {
        r + j
    }
}

/// Canonical pointed-oriented class label `(i, j, m)` with `i` odd in `[1, 2j-1]`.
///
/// Ordered lexicographically by `(j, m, i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EncodingTriple {
    i: BigInt,
    j: BigInt,
    m: BigInt,
}

impl EncodingTriple {
    pub fn new(i: impl Into<BigInt>, j: impl Into<BigInt>, m: impl Into<BigInt>) -> Result<Self> {
        let h = Hat::representative(i, j, m)?;
        if h.i < BigInt::one() || h.i >= BigInt::from(2) * &h.j {
            return Err(Error::InvalidHat {
                i: h.i.to_string(),
                j: h.j.to_string(),
                m: h.m.to_string(),
                reason: "encoding triple needs 1 <= i <= 2j-1",
            });
        }
        Ok(EncodingTriple {
            i: h.i,
            j: h.j,
            m: h.m,
        })
    }

    pub fn i(&self) -> &BigInt {
        &self.i
    }

    pub fn j(&self) -> &BigInt {
        &self.j
    }

    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn hat(&self) -> Hat {
        Hat {
            i: self.i.clone(),
            j: self.j.clone(),
            m: self.m.clone(),
        }
    }

    pub fn in_fundamental_domain(&self) -> bool {
        self.i.is_odd() && self.i >= BigInt::one() && self.i < BigInt::from(2) * &self.j
    }
}

impl Ord for EncodingTriple {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.j, &self.m, &self.i).cmp(&(&other.j, &other.m, &other.i))
    }
}

impl PartialOrd for EncodingTriple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for EncodingTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.i, self.j, self.m)
    }
}

/// Which vertex of the input plays which role in the hat: `roles[0]` goes to
/// the origin, `roles[1]` to the apex `(i, j)`, `roles[2]` to `(m, 0)`.
pub type Roles = Perm;

/// A representative hat together with the unit map carrying the input
/// triangle onto it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub roles: Roles,
    pub hat: Hat,
    pub map: AffineMap,
}

/// Reduces a triangle to a representative hat with `i` in `{1, …, 2j-1}`.
///
/// Pipeline, each step a unit affine map:
/// translate the pointed vertex to the origin; rotate the base onto the
/// positive x-axis with an `SL(2,Z)` matrix and a power-of-two scaling;
/// reflect if the apex lies below; scale `y` so `j` is an odd integer;
/// shear `x ↦ x + c*y` to move `i` onto the odd representative of its class.
pub fn normalize(t: &Triangle, roles: Roles) -> Result<Normalized> {
    let x = t.vertex(roles.image(0));
    let y = t.vertex(roles.image(1));
    let z = t.vertex(roles.image(2));
    if Triangle::new(x.clone(), y.clone(), z.clone()).is_err() {
        return Err(Error::DegenerateTriangle);
    }

    let mut map = AffineMap::translation(Point::new(-&x.x, -&x.y));
    let v = z.sub(x);

    let alpha = match (v.x.val2(), v.y.val2()) {
        (Ok(a), Ok(b)) => a.min(b),
        (Ok(a), Err(_)) => a,
        (Err(_), Ok(b)) => b,
        (Err(_), Err(_)) => unreachable!("base has positive length"),
    };
    let a = v.x.shift(-alpha).to_integer().expect("cleared");
    let b = v.y.shift(-alpha).to_integer().expect("cleared");
    let eg = a.extended_gcd(&b);
    let (g, ex, ey) = if eg.gcd.is_negative() {
        (-eg.gcd, -eg.x, -eg.y)
    } else {
        (eg.gcd, eg.x, eg.y)
    };
    let rot = Matrix2::new(ex, ey, -(&b / &g), &a / &g);
    let scale = Dyadic::pow2(-alpha);
    let rot = Matrix2::new(
        &rot.a * &scale,
        &rot.b * &scale,
        &rot.c * &scale,
        &rot.d * &scale,
    );
    map = map.then(&AffineMap::linear(rot));

    let apex = map.apply(y);
    if apex.y.signum() < 0 {
        map = map.then(&AffineMap::linear(Matrix2::new(1, 0, 0, -1)));
    }

    let apex = map.apply(y);
    let k = apex.y.val2().expect("non-degenerate");
    map = map.then(&AffineMap::linear(Matrix2::diag(
        Dyadic::one(),
        Dyadic::pow2(-k),
    )));

    let apex = map.apply(y);
    let j = apex.y.to_integer().expect("odd integer after scaling");
    let r = dyadic_mod_odd(&apex.x, &j)?;
    let target = odd_representative(r.value(), &j);
    let c = (&Dyadic::from_int(target.clone()) - &apex.x)
        .exact_div(&Dyadic::from_int(j.clone()))
        .expect("target agrees with apex.x modulo j");
    map = map.then(&AffineMap::linear(Matrix2::new(
        Dyadic::one(),
        c,
        Dyadic::zero(),
        Dyadic::one(),
    )));

    let base = map.apply(z);
    debug_assert!(base.y.is_zero());
    let m = base.x.to_integer().expect("base is (m, 0)");
    let hat = Hat::representative(target, j, m)?;
    debug_assert_eq!(map.apply(y), Point::new(hat.i.clone(), hat.j.clone()));
    Ok(Normalized { roles, hat, map })
}

/// Normalizations of `t` under all six role assignments.
pub fn all_normalizations(t: &Triangle) -> Result<Vec<Normalized>> {
    Perm::ALL.iter().map(|&r| normalize(t, r)).collect()
}

pub fn all_encoding_triples(t: &Triangle) -> Result<BTreeSet<EncodingTriple>> {
    Ok(all_normalizations(t)?
        .into_iter()
        .map(|n| n.hat.pointed_canonical())
        .collect())
}

/// The least encoding triple of `t` under the `(j, m, i)` order.
pub fn canonical_form(t: &Triangle) -> Result<EncodingTriple> {
    Ok(all_encoding_triples(t)?
        .into_iter()
        .next()
        .expect("six role assignments"))
}
