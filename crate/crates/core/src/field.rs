//! Exact coefficient fields: arbitrary-precision rationals and prime fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Prime used for fast runs.
pub const DEFAULT_PRIME: u32 = 32003;

/// The coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

impl FieldSpec {
    /// Prime field GF(p); fails unless `p` is prime.
    pub fn prime(p: u32) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::InvalidArgument(format!("{p} is not prime")))
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(Box::new(BigRational::from_integer(v.into()))),
            FieldSpec::PrimeField(p) => {
                Scalar::Modular { value: v.rem_euclid(p as i64) as u32, modulus: p }
            }
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(Box::new(BigRational::from_integer(v.clone()))),
            FieldSpec::PrimeField(p) => {
                let r = v.mod_floor(&BigInt::from(p)).to_u32().expect("residue fits u32");
                Scalar::Modular { value: r, modulus: p }
            }
        }
    }

    /// `num / den` in this field; errors when `den` vanishes in the field.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        match self {
            FieldSpec::Rationals => {
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Rational(Box::new(BigRational::new(num.clone(), den.clone()))))
            }
            FieldSpec::PrimeField(_) => self.from_bigint(num).checked_div(&self.from_bigint(den)),
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (FieldSpec::Rationals, Scalar::Rational(_)) => true,
            (FieldSpec::PrimeField(p), Scalar::Modular { modulus, .. }) => p == modulus,
            _ => false,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::PrimeField(p) => write!(f, "gf:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `q` or `gf:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(p) = s.strip_prefix("gf:") {
            let p: u32 = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad prime modulus in field spec `{s}`")))?;
            return FieldSpec::prime(p);
        }
        Err(Error::Parse(format!("unknown field `{s}` (expected `q` or `gf:<p>`)")))
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`FieldSpec`].
///
/// Operator impls panic when the operands live in different fields; the
/// polynomial layer never mixes fields, and the `try_*` methods report the
/// mismatch as an error instead.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Box<BigRational>),
    Modular { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Modular { modulus, .. } => FieldSpec::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(Box::new(r.recip())),
            Scalar::Modular { value, modulus } => {
                Scalar::Modular { value: mod_inverse(*value, *modulus), modulus: *modulus }
            }
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self * &other.inv()?)
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self * other)
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// True for values printed with a leading minus sign.
    pub fn is_negative_repr(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Modular { value, modulus } => *value > modulus / 2,
        }
    }
}

/// Extended Euclid on residues; `value` is nonzero and `modulus` prime.
fn mod_inverse(value: u32, modulus: u32) -> u32 {
    let (mut r0, mut r1) = (modulus as i64, value as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(modulus as i64) as u32
}

fn mismatch() -> ! {
    panic!("scalar arithmetic across different fields")
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(Box::new(&**a + &**b)),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q })
                if p == q =>
            {
                let s = *a as u64 + *b as u64;
                Scalar::Modular { value: (s % *p as u64) as u32, modulus: *p }
            }
            _ => mismatch(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(Box::new(&**a - &**b)),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q })
                if p == q =>
            {
                let s = *a as u64 + (*p - *b) as u64;
                Scalar::Modular { value: (s % *p as u64) as u32, modulus: *p }
            }
            _ => mismatch(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(Box::new(&**a * &**b)),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q })
                if p == q =>
            {
                let s = *a as u64 * *b as u64;
                Scalar::Modular { value: (s % *p as u64) as u32, modulus: *p }
            }
            _ => mismatch(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(Box::new(-&**a)),
            Scalar::Modular { value, modulus } => {
                Scalar::Modular { value: (modulus - value) % modulus, modulus: *modulus }
            }
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
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Modular { value, modulus } => {
                // symmetric representative so that -1 prints as -1
                if *value > modulus / 2 {
                    write!(f, "-{}", modulus - value)
                } else {
                    write!(f, "{value}")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        FieldSpec::Rationals.from_fraction(&n.into(), &d.into()).unwrap()
    }

    #[test]
    fn inverse_of_two_mod_32003() {
        let f = FieldSpec::PrimeField(32003);
        let inv = f.from_i64(2).inv().unwrap();
        assert_eq!(inv, f.from_i64(16002));
        assert!((&inv * &f.from_i64(2)).is_one());
    }

    #[test]
    fn rational_sum() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
    }

    #[test]
    fn gf5_product() {
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(&f.from_i64(3) * &f.from_i64(4), f.from_i64(2));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let f = FieldSpec::PrimeField(7);
        assert!(matches!(f.zero().inv(), Err(Error::DivisionByZero)));
        assert!(matches!(q(1, 2).checked_div(&q(0, 1)), Err(Error::DivisionByZero)));
        assert!(FieldSpec::Rationals.from_fraction(&1.into(), &0.into()).is_err());
        assert!(FieldSpec::PrimeField(7).from_fraction(&1.into(), &14.into()).is_err());
    }

    #[test]
    fn field_mismatch_is_reported() {
        let a = FieldSpec::PrimeField(7).one();
        let b = FieldSpec::Rationals.one();
        assert!(matches!(a.try_add(&b), Err(Error::FieldMismatch)));
    }

    #[test]
    fn parse_field_specs() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("gf:32003".parse::<FieldSpec>().unwrap(), FieldSpec::PrimeField(32003));
        assert!("gf:32004".parse::<FieldSpec>().is_err());
        assert!("gf:1".parse::<FieldSpec>().is_err());
        assert!("z".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn rationals_stay_reduced() {
        let s = q(6, -4);
        let Scalar::Rational(r) = &s else { unreachable!() };
        assert_eq!(*r.numer(), BigInt::from(-3));
        assert_eq!(*r.denom(), BigInt::from(2));
        assert_eq!(s.to_string(), "-3/2");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn gf() -> impl Strategy<Value = Scalar> {
            (0i64..32003).prop_map(|v| FieldSpec::PrimeField(32003).from_i64(v))
        }

        fn rat() -> impl Strategy<Value = Scalar> {
            (-50i64..50, 1i64..50).prop_map(|(n, d)| q(n, d))
        }

        fn check_axioms(a: &Scalar, b: &Scalar, c: &Scalar) {
            assert_eq!(&(a + b) + c, a + &(b + c));
            assert_eq!(&(a * b) * c, a * &(b * c));
            assert_eq!(a + b, b + a);
            assert_eq!(a * b, b * a);
            assert_eq!(a * &(b + c), &(a * b) + &(a * c));
            assert!((a - &a.clone()).is_zero());
            if !a.is_zero() {
                assert!((a * &a.inv().unwrap()).is_one());
            }
        }

        proptest! {
            #[test]
            fn prime_field_axioms(a in gf(), b in gf(), c in gf()) {
                check_axioms(&a, &b, &c);
            }

            #[test]
            fn rational_axioms(a in rat(), b in rat(), c in rat()) {
                check_axioms(&a, &b, &c);
                for s in [&a * &b, &a + &c, &b - &c] {
                    let Scalar::Rational(r) = s else { unreachable!() };
                    prop_assert!(r.denom().is_positive());
                    prop_assert!(r.numer().gcd(r.denom()).is_one());
                }
            }
        }
    }
}
