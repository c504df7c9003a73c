//! Exact arithmetic in the ring `Z[1/2]` of dyadic rationals, plus the small
//! amount of odd-modulus number theory the classification criteria reduce to.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element `num * 2^exp` of `Z[1/2]`.
///
/// The numerator is odd, or the value is zero and stored as `(0, 0)`, so two
/// values are equal exactly when their fields are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic {
            num: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic::from_int(1)
    }

    /// Builds `num * 2^exp`, reducing to canonical form.
    pub fn new(num: impl Into<BigInt>, exp: i64) -> Self {
        let mut num = num.into();
        if num.is_zero() {
            return Dyadic::zero();
        }
        let tz = num.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            num >>= tz;
        }
        Dyadic {
            num,
            exp: exp + tz as i64,
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Dyadic::new(n, 0)
    }

    /// `2^k`.
    pub fn pow2(k: i64) -> Self {
        Dyadic {
            num: BigInt::one(),
            exp: k,
        }
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn exp(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn signum(&self) -> i32 {
        if self.num.is_positive() {
            1
        } else if self.num.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            num: self.num.abs(),
            exp: self.exp,
        }
    }

    /// True when the value is an integer.
    pub fn is_integer(&self) -> bool {
        self.exp >= 0
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.exp < 0 {
            None
        } else {
            Some(&self.num << self.exp as u64)
        }
    }

    /// A unit of `Z[1/2]` is `±2^k`.
    pub fn is_unit(&self) -> bool {
        self.num.abs().is_one()
    }

    /// Multiplies by `2^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic {
            num: self.num.clone(),
            exp: self.exp + k,
        }
    }

    /// 2-adic valuation, i.e. the exponent of the canonical form.
    pub fn val2(&self) -> Result<i64> {
        if self.is_zero() {
            Err(Error::ZeroArgument)
        } else {
            Ok(self.exp)
        }
    }

    /// `self / rhs`, provided the quotient lies in `Z[1/2]`.
    pub fn exact_div(&self, rhs: &Dyadic) -> Result<Dyadic> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Dyadic::zero());
        }
        let (q, r) = self.num.div_rem(&rhs.num);
        if !r.is_zero() {
            return Err(Error::NotDyadic(format!("{self}/{rhs}")));
        }
        Ok(Dyadic::new(q, self.exp - rhs.exp))
    }

    /// Inverse of a unit `±2^k`.
    pub fn unit_inverse(&self) -> Option<Dyadic> {
        if self.is_unit() {
            Some(Dyadic {
                num: self.num.clone(),
                exp: -self.exp,
            })
        } else {
            None
        }
    }
}

impl fmt::Display for Dyadic {
    /// Integers print as `n`, everything else as `n/d` with `d` a power of two.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp >= 0 {
            write!(f, "{}", &self.num << self.exp as u64)
        } else {
            let den = BigInt::one() << (-self.exp) as u64;
            write!(f, "{}/{}", self.num, den)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dyadic({self})")
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::from_int(n)
    }
}

impl From<BigInt> for Dyadic {
    fn from(n: BigInt) -> Self {
        Dyadic::from_int(n)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: &'a Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(rhs.exp);
        let a = &self.num << (self.exp - e) as u64;
        let b = &rhs.num << (rhs.exp - e) as u64;
        Dyadic::new(a + b, e)
    }
}

impl<'a> Sub<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: &'a Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;

    fn mul(self, rhs: &'a Dyadic) -> Dyadic {
        if self.is_zero() || rhs.is_zero() {
            return Dyadic::zero();
        }
        // odd * odd is odd, no renormalisation needed
        Dyadic {
            num: &self.num * &rhs.num,
            exp: self.exp + rhs.exp,
        }
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic {
            num: -&self.num,
            exp: self.exp,
        }
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $f(self, rhs: Dyadic) -> Dyadic {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $f(self, rhs: &'a Dyadic) -> Dyadic {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<Dyadic> for &'a Dyadic {
            type Output = Dyadic;
            fn $f(self, rhs: Dyadic) -> Dyadic {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// `n / 2^{v2(n)}`, keeping the sign.
pub fn odd_part(n: &BigInt) -> Result<BigInt> {
    match n.trailing_zeros() {
        None => Err(Error::ZeroArgument),
        Some(tz) => Ok(n >> tz),
    }
}

/// Odd part of `gcd(|a|, |b|)`; always positive.
pub fn odd_gcd(a: &BigInt, b: &BigInt) -> Result<BigInt> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    odd_part(&a.gcd(b))
}

/// A residue class `value mod modulus` with odd positive modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Residue {
    value: BigInt,
    modulus: BigInt,
}

impl Residue {
    pub fn new(value: &BigInt, modulus: &BigInt) -> Result<Self> {
        check_odd_modulus(modulus)?;
        Ok(Residue {
            value: value.mod_floor(modulus),
            modulus: modulus.clone(),
        })
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn contains(&self, x: &BigInt) -> bool {
        x.mod_floor(&self.modulus) == self.value
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

fn check_odd_modulus(n: &BigInt) -> Result<()> {
    if n.is_positive() && n.is_odd() {
        Ok(())
    } else {
        Err(Error::EvenModulus(n.to_string()))
    }
}

/// Inverse of `a` modulo `n`, when `gcd(a, n) = 1`.
pub(crate) fn mod_inverse(a: &BigInt, n: &BigInt) -> Option<BigInt> {
    if n.is_one() {
        return Some(BigInt::zero());
    }
    let e = a.mod_floor(n).extended_gcd(n);
    if e.gcd.abs().is_one() {
        Some((e.x * e.gcd).mod_floor(n))
    } else {
        None
    }
}

/// Solves `a*x = b (mod n)`; the solutions form one class modulo `n / gcd(a, n)`.
pub fn solve_congruence(a: &BigInt, b: &BigInt, n: &BigInt) -> Result<Residue> {
    check_odd_modulus(n)?;
    let g = a.mod_floor(n).gcd(n);
    if !b.mod_floor(&g).is_zero() {
        return Err(Error::NoSolution {
            a: a.to_string(),
            b: b.to_string(),
            n: n.to_string(),
        });
    }
    let n1 = n / &g;
    let a1 = a / &g;
    let b1 = b / &g;
    let inv = mod_inverse(&a1, &n1).expect("a/g is coprime to n/g");
    Residue::new(&(b1 * inv), &n1)
}

/// Reduces a dyadic rational modulo an odd integer, reading `2^-1` as the
/// inverse of 2 in `Z/nZ`.
pub fn dyadic_mod_odd(d: &Dyadic, n: &BigInt) -> Result<Residue> {
    check_odd_modulus(n)?;
    let base = if d.exp >= 0 {
        BigInt::from(2)
    } else {
        (n + 1u32) / 2u32
    };
    let scale = base.modpow(&BigInt::from(d.exp.unsigned_abs()), n);
    Residue::new(&(&d.num * scale), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(num: i64, exp: i64) -> Dyadic {
        Dyadic::new(num, exp)
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn add_examples() {
        assert_eq!(d(1, -1) + d(1, -1), d(1, 0));
        assert_eq!(d(7, -3) + Dyadic::zero(), d(7, -3));
        let s = d(3, -3) + d(5, -1);
        assert_eq!((s.num().clone(), s.exp()), (big(23), -3));
    }

    #[test]
    fn mul_sub_neg_examples() {
        assert_eq!(d(3, -1) * d(1, 1), d(3, 0));
        assert_eq!(d(9, -5) * Dyadic::one(), d(9, -5));
        let p = d(5, -2) * d(3, -1);
        assert_eq!((p.num().clone(), p.exp()), (big(15), -3));
        assert_eq!(d(1, 0) - d(1, -1), d(1, -1));
        assert_eq!(-d(3, 2), d(-3, 2));
    }

    #[test]
    fn canonical_zero() {
        let z = d(5, 3) - d(5, 3);
        assert_eq!((z.num().clone(), z.exp()), (big(0), 0));
        assert_eq!(Dyadic::new(0, -7), Dyadic::zero());
        assert_eq!(Dyadic::new(12, 0), d(3, 2));
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(Dyadic::from_int(9).exact_div(&d(3, 0)).unwrap(), d(3, 0));
        let q = d(9, -1).exact_div(&d(3, 2)).unwrap();
        assert_eq!((q.num().clone(), q.exp()), (big(3), -3));
        assert!(matches!(
            Dyadic::one().exact_div(&d(3, 0)),
            Err(Error::NotDyadic(_))
        ));
        assert_eq!(
            Dyadic::one().exact_div(&Dyadic::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn valuation_and_odd_part() {
        assert_eq!(d(3, -2).val2().unwrap(), -2);
        assert_eq!(Dyadic::zero().val2(), Err(Error::ZeroArgument));
        assert_eq!(odd_part(&big(24)).unwrap(), big(3));
        assert_eq!(odd_part(&big(-7)).unwrap(), big(-7));
        assert_eq!(odd_part(&big(0)), Err(Error::ZeroArgument));
    }

    #[test]
    fn odd_gcd_examples() {
        assert_eq!(odd_gcd(&big(15), &big(9)).unwrap(), big(3));
        assert_eq!(odd_gcd(&big(1), &big(40)).unwrap(), big(1));
        assert_eq!(odd_gcd(&big(12), &big(18)).unwrap(), big(3));
        assert_eq!(odd_gcd(&big(-12), &big(0)).unwrap(), big(3));
        assert_eq!(odd_gcd(&big(0), &big(0)), Err(Error::BothZero));
    }

    #[test]
    fn congruence_examples() {
        let r = solve_congruence(&big(1), &big(1), &big(3)).unwrap();
        assert_eq!((r.value().clone(), r.modulus().clone()), (big(1), big(3)));
        // a = 1 scaled by m = 5 gives k = 5, the hat T_{5,15,1}
        assert_eq!(r.value() * big(5), big(5));
        let r = solve_congruence(&big(4), &big(2), &big(9)).unwrap();
        assert_eq!((r.value().clone(), r.modulus().clone()), (big(5), big(9)));
        let r = solve_congruence(&big(3), &big(6), &big(9)).unwrap();
        assert_eq!((r.value().clone(), r.modulus().clone()), (big(2), big(3)));
        assert!(matches!(
            solve_congruence(&big(3), &big(1), &big(9)),
            Err(Error::NoSolution { .. })
        ));
        assert!(matches!(
            solve_congruence(&big(1), &big(1), &big(4)),
            Err(Error::EvenModulus(_))
        ));
    }

    #[test]
    fn dyadic_mod_odd_examples() {
        assert_eq!(dyadic_mod_odd(&d(1, -1), &big(3)).unwrap().value(), &big(2));
        assert_eq!(dyadic_mod_odd(&d(5, 0), &big(3)).unwrap().value(), &big(2));
        assert_eq!(dyadic_mod_odd(&d(3, -3), &big(5)).unwrap().value(), &big(1));
        assert_eq!(dyadic_mod_odd(&d(-1, 2), &big(7)).unwrap().value(), &big(3));
        assert_eq!(dyadic_mod_odd(&d(5, -2), &big(1)).unwrap().value(), &big(0));
    }

    #[test]
    fn display() {
        assert_eq!(d(3, -3).to_string(), "3/8");
        assert_eq!(d(-5, -1).to_string(), "-5/2");
        assert_eq!(d(3, 2).to_string(), "12");
        assert_eq!(Dyadic::zero().to_string(), "0");
    }

    #[test]
    fn ordering() {
        assert!(d(1, -1) < d(1, 0));
        assert!(d(-3, 5) < d(1, -9));
        assert_eq!(d(6, 0).cmp(&d(3, 1)), Ordering::Equal);
    }

    fn arb_dyadic() -> impl Strategy<Value = Dyadic> {
        (-10_000i64..10_000, -20i64..20).prop_map(|(n, e)| Dyadic::new(n, e))
    }

    fn is_canonical(x: &Dyadic) -> bool {
        (x.num().is_zero() && x.exp() == 0) || x.num().is_odd()
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_dyadic(), b in arb_dyadic(), c in arb_dyadic()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &Dyadic::zero(), a.clone());
            prop_assert_eq!(&a * &Dyadic::one(), a.clone());
            prop_assert_eq!(&a - &a, Dyadic::zero());
            for x in [&a + &b, &a * &b, &a - &c, -&a] {
                prop_assert!(is_canonical(&x));
            }
        }

        #[test]
        fn exact_div_inverts_mul(a in arb_dyadic(), b in arb_dyadic()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        }

        #[test]
        fn mod_odd_is_additive(a in arb_dyadic(), b in arb_dyadic(), k in 0u32..200) {
            let n = BigInt::from(2 * k + 1);
            let lhs = dyadic_mod_odd(&(&a + &b), &n).unwrap();
            let sum = dyadic_mod_odd(&a, &n).unwrap().value() + dyadic_mod_odd(&b, &n).unwrap().value();
            prop_assert!(lhs.contains(&sum));
        }

        #[test]
        fn mod_odd_is_multiplicative(a in arb_dyadic(), b in arb_dyadic(), k in 0u32..200) {
            let n = BigInt::from(2 * k + 1);
            let lhs = dyadic_mod_odd(&(&a * &b), &n).unwrap();
            let prod = dyadic_mod_odd(&a, &n).unwrap().value() * dyadic_mod_odd(&b, &n).unwrap().value();
            prop_assert!(lhs.contains(&prod));
        }
    }
}
