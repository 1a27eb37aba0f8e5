//! Exact field elements.
//!
//! A [`Scalar`] is either an arbitrary-precision rational or a residue modulo
//! an odd prime, tagged with its [`FieldSpec`]. There is no rounding and no
//! square root anywhere. Operands must share a field: the `try_*` methods
//! report [`Error::MixedFields`], while the operator impls treat a mismatch as
//! a programming error and panic. Geometric constructors validate fields up
//! front, so the kernel uses operators internally.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest accepted prime modulus; primality is checked by trial division.
pub const MAX_MODULUS: u64 = u32::MAX as u64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Kind {
    Rational,
    Prime(u64),
}

/// Which field a scalar lives in: the rationals or `F_p` for an odd prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec(Kind);

impl FieldSpec {
    pub const RATIONAL: FieldSpec = FieldSpec(Kind::Rational);

    pub fn rational() -> Self {
        Self::RATIONAL
    }

    /// `F_p`; rejects 2, composites and anything above [`MAX_MODULUS`].
    pub fn prime(p: u64) -> Result<Self> {
        if !(3..=MAX_MODULUS).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(FieldSpec(Kind::Prime(p)))
    }

    pub fn modulus(self) -> Option<u64> {
        match self.0 {
            Kind::Rational => None,
            Kind::Prime(p) => Some(p),
        }
    }

    pub fn is_rational(self) -> bool {
        self.0 == Kind::Rational
    }

    pub fn characteristic(self) -> u64 {
        self.modulus().unwrap_or(0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Kind::Rational => f.write_str("rational"),
            Kind::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `rational` (or `q`) and `fp:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("rational") || t.eq_ignore_ascii_case("q") {
            return Ok(Self::RATIONAL);
        }
        let digits = t
            .strip_prefix("fp:")
            .or_else(|| t.strip_prefix("FP:"))
            .ok_or_else(|| Error::Parse {
                input: s.to_string(),
                reason: "expected `rational` or `fp:<prime>`".into(),
            })?;
        let p: u64 = digits.parse().map_err(|_| Error::Parse {
            input: s.to_string(),
            reason: "modulus is not a non-negative integer".into(),
        })?;
        FieldSpec::prime(p)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Mod { value: u64, modulus: u64 },
}

/// An exact element of a [`FieldSpec`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a == 0 {
        return None;
    }
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    Some(t0.rem_euclid(p as i128) as u64)
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits u64")
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Self {
        Self::from_i64(0, field)
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::from_i64(1, field)
    }

    pub fn from_i64(n: i64, field: FieldSpec) -> Self {
        match field.0 {
            Kind::Rational => Scalar(Repr::Rational(BigRational::from_integer(n.into()))),
            Kind::Prime(p) => Scalar(Repr::Mod {
                value: (n as i128).rem_euclid(p as i128) as u64,
                modulus: p,
            }),
        }
    }

    pub fn from_bigint(n: &BigInt, field: FieldSpec) -> Self {
        match field.0 {
            Kind::Rational => Scalar(Repr::Rational(BigRational::from_integer(n.clone()))),
            Kind::Prime(p) => Scalar(Repr::Mod {
                value: reduce_bigint(n, p),
                modulus: p,
            }),
        }
    }

    /// `num / den` in `field`.
    pub fn from_ratio(num: i64, den: i64, field: FieldSpec) -> Result<Self> {
        Self::from_i64(num, field).try_div(&Self::from_i64(den, field))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Scalar(Repr::Rational(q))
    }

    pub fn field(&self) -> FieldSpec {
        match self.0 {
            Repr::Rational(_) => FieldSpec::RATIONAL,
            Repr::Mod { modulus, .. } => FieldSpec(Kind::Prime(modulus)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_zero(),
            Repr::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_one(),
            Repr::Mod { value, .. } => *value == 1,
        }
    }

    /// The rational value, if this scalar is rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(q) => Some(q),
            Repr::Mod { .. } => None,
        }
    }

    /// The residue in `[0, p)`, if this scalar lives in a prime field.
    pub fn residue(&self) -> Option<u64> {
        match self.0 {
            Repr::Rational(_) => None,
            Repr::Mod { value, .. } => Some(value),
        }
    }

    /// Nearest `f64`, rationals only. Used for drawing, never for geometry.
    pub fn to_f64(&self) -> Option<f64> {
        self.as_rational().and_then(|q| q.to_f64())
    }

    fn check_same(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::MixedFields(
                self.field().to_string(),
                other.field().to_string(),
            ))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(self * other)
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(self * &other.inv()?)
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Scalar> {
        match &self.0 {
            Repr::Rational(q) => {
                if q.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar(Repr::Rational(q.recip())))
                }
            }
            Repr::Mod { value, modulus } => inv_mod(*value, *modulus)
                .map(|v| {
                    Scalar(Repr::Mod {
                        value: v,
                        modulus: *modulus,
                    })
                })
                .ok_or(Error::DivisionByZero),
        }
    }

    /// `self / 2`; always defined because no supported field has characteristic two.
    pub fn halve(&self) -> Scalar {
        match &self.0 {
            Repr::Rational(q) => Scalar(Repr::Rational(q / BigInt::from(2))),
            Repr::Mod { value, modulus } => {
                // (p + 1) / 2 is the inverse of 2 for odd p.
                let half = (*modulus).div_ceil(2);
                Scalar(Repr::Mod {
                    value: mul_mod(*value, half, *modulus),
                    modulus: *modulus,
                })
            }
        }
    }

    pub fn square(&self) -> Scalar {
        self * self
    }

    /// `k * self` for a small integer `k`.
    pub fn scale(&self, k: i64) -> Scalar {
        match &self.0 {
            Repr::Rational(q) => Scalar(Repr::Rational(q * BigInt::from(k))),
            Repr::Mod { value, modulus } => {
                let kk = (k as i128).rem_euclid(*modulus as i128) as u64;
                Scalar(Repr::Mod {
                    value: mul_mod(*value, kk, *modulus),
                    modulus: *modulus,
                })
            }
        }
    }

    /// Parses `n` or `n/d` (optional leading sign) into `field`.
    pub fn parse(text: &str, field: FieldSpec) -> Result<Scalar> {
        let bad = |reason: &str| Error::Parse {
            input: text.to_string(),
            reason: reason.to_string(),
        };
        let t = text.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (t, None),
        };
        let parse_int = |s: &str| -> Result<BigInt> {
            let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad("expected an integer or `num/den`"));
            }
            s.parse::<BigInt>()
                .map_err(|_| bad("expected an integer or `num/den`"))
        };
        let n = parse_int(num)?;
        let d = match den {
            Some(d) => {
                if d.starts_with(['-', '+']) {
                    return Err(bad("sign belongs on the numerator"));
                }
                parse_int(d)?
            }
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match field.0 {
            Kind::Rational => Ok(Scalar(Repr::Rational(BigRational::new(n, d)))),
            Kind::Prime(_) => {
                Scalar::from_bigint(&n, field).try_div(&Scalar::from_bigint(&d, field))
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Repr::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(_) => write!(f, "{self}"),
            Repr::Mod { modulus, .. } => write!(f, "{self} (mod {modulus})"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn mixed(a: &Scalar, b: &Scalar) -> ! {
    panic!(
        "arithmetic on mixed fields: {} and {}",
        a.field(),
        b.field()
    )
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a + b)),
            (
                Repr::Mod {
                    value: a,
                    modulus: p,
                },
                Repr::Mod {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Scalar(Repr::Mod {
                value: add_mod(*a, *b, *p),
                modulus: *p,
            }),
            _ => mixed(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a - b)),
            (
                Repr::Mod {
                    value: a,
                    modulus: p,
                },
                Repr::Mod {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Scalar(Repr::Mod {
                value: sub_mod(*a, *b, *p),
                modulus: *p,
            }),
            _ => mixed(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a * b)),
            (
                Repr::Mod {
                    value: a,
                    modulus: p,
                },
                Repr::Mod {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Scalar(Repr::Mod {
                value: mul_mod(*a, *b, *p),
                modulus: *p,
            }),
            _ => mixed(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Rational(a) => Scalar(Repr::Rational(-a)),
            Repr::Mod { value, modulus } => Scalar(Repr::Mod {
                value: sub_mod(0, *value, *modulus),
                modulus: *modulus,
            }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Sign of a rational scalar; `None` in a prime field.
pub fn signum(x: &Scalar) -> Option<i8> {
    x.as_rational().map(|q| {
        if q.is_positive() {
            1
        } else if q.is_negative() {
            -1
        } else {
            0
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Scalar {
        Scalar::parse(s, FieldSpec::RATIONAL).unwrap()
    }

    fn f7(n: i64) -> Scalar {
        Scalar::from_i64(n, FieldSpec::prime(7).unwrap())
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(q("2/3").try_add(&q("1/6")).unwrap(), q("5/6"));
        assert_eq!(f7(3).try_mul(&f7(5)).unwrap(), f7(1));
        assert_eq!(-q("0"), q("0"));
        assert_eq!(q("1").try_div(&q("2")).unwrap().to_string(), "1/2");
        assert_eq!(f7(1).try_div(&f7(2)).unwrap(), f7(4));
        assert_eq!(q("5").try_div(&q("0")), Err(Error::DivisionByZero));
        assert_eq!(f7(5).try_div(&f7(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn halving() {
        assert_eq!(q("37").halve().to_string(), "37/2");
        assert_eq!(f7(3).halve(), f7(5));
        assert!(q("0").halve().is_zero());
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(q("49/16").to_string(), "49/16");
        assert_eq!(q("-6/4").to_string(), "-3/2");
        assert_eq!(q("4/2").to_string(), "2");
        let f = FieldSpec::prime(7).unwrap();
        assert_eq!(Scalar::parse("10", f).unwrap().to_string(), "3");
        assert_eq!(Scalar::parse("-1", f).unwrap().to_string(), "6");
        assert_eq!(Scalar::parse("1/2", f).unwrap().to_string(), "4");
        assert_eq!(Scalar::parse("1/7", f), Err(Error::DivisionByZero));
        assert_eq!(
            Scalar::parse("3/0", FieldSpec::RATIONAL),
            Err(Error::DivisionByZero)
        );
        for bad in ["", "x", "1/", "/2", "1.5", "1/-2", "--1", "1/2/3"] {
            assert!(
                matches!(
                    Scalar::parse(bad, FieldSpec::RATIONAL),
                    Err(Error::Parse { .. })
                ),
                "{bad:?} should not parse"
            );
        }
    }

    #[test]
    fn field_specs() {
        assert_eq!(FieldSpec::prime(2), Err(Error::InvalidModulus(2)));
        assert_eq!(FieldSpec::prime(9), Err(Error::InvalidModulus(9)));
        assert_eq!(FieldSpec::prime(1), Err(Error::InvalidModulus(1)));
        assert!(FieldSpec::prime(3).is_ok());
        assert_eq!(FieldSpec::prime(13).unwrap(), FieldSpec::prime(13).unwrap());
        assert_ne!(FieldSpec::prime(13).unwrap(), FieldSpec::prime(7).unwrap());
        assert_ne!(FieldSpec::prime(13).unwrap(), FieldSpec::RATIONAL);
        assert_eq!("fp:13".parse::<FieldSpec>().unwrap().modulus(), Some(13));
        assert!("rational".parse::<FieldSpec>().unwrap().is_rational());
        assert_eq!("fp:4".parse::<FieldSpec>(), Err(Error::InvalidModulus(4)));
    }

    #[test]
    fn mixed_fields_rejected() {
        let r = q("1").try_add(&f7(1));
        assert!(matches!(r, Err(Error::MixedFields(..))));
        let f13 = Scalar::one(FieldSpec::prime(13).unwrap());
        assert!(matches!(f7(1).try_mul(&f13), Err(Error::MixedFields(..))));
    }

    #[test]
    #[should_panic(expected = "mixed fields")]
    fn operator_panics_on_mixed_fields() {
        let _ = &q("1") + &f7(1);
    }
}
