//! Exact scalars over the rationals or a prime field.
//!
//! Rationals are kept in `i64` form while they fit and are promoted to
//! arbitrary precision on overflow, so results never wrap.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} is too large (must be below 2^32)")]
    ModulusTooLarge(u64),
    #[error("unrecognised field '{0}' (expected Q, F<p> or Fp:<p>)")]
    Unrecognised(String),
}

/// The coefficient field: ℚ or 𝔽_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        if p >= 1 << 32 {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    /// Parses `Q`, `F2`, `F3`, `Fp:5` (case-insensitive).
    pub fn parse(text: &str) -> Result<Field, FieldError> {
        let t = text.trim();
        let upper = t.to_ascii_uppercase();
        if upper == "Q" || upper == "QQ" {
            return Ok(Field::Rational);
        }
        let digits = upper
            .strip_prefix("FP:")
            .or_else(|| upper.strip_prefix("GF"))
            .or_else(|| upper.strip_prefix('F'))
            .ok_or_else(|| FieldError::Unrecognised(t.to_string()))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| FieldError::Unrecognised(t.to_string()))?;
        Field::prime(p)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn is_char_two(&self) -> bool {
        self.characteristic() == 2
    }

    pub fn label(&self) -> String {
        match self {
            Field::Rational => "Q".to_string(),
            Field::Prime(p) => format!("F{p}"),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Small(Ratio::from_integer(n)),
            Field::Prime(p) => Scalar::Mod {
                value: (n.rem_euclid(*p as i64)) as u64,
                modulus: *p,
            },
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// An element of a [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Small(Ratio<i64>),
    Big(BigRational),
    Mod { value: u64, modulus: u64 },
}

fn big(r: &Ratio<i64>) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

fn shrink(r: BigRational) -> Scalar {
    match (r.numer().to_i64(), r.denom().to_i64()) {
        (Some(n), Some(d)) => Scalar::Small(Ratio::new_raw(n, d)),
        _ => Scalar::Big(r),
    }
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Small(r) => r.is_zero(),
            Scalar::Big(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Small(r) => r.is_one(),
            Scalar::Big(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Mod { modulus, .. } => Field::Prime(*modulus),
            _ => Field::Rational,
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Small(r) => match r.numer().checked_abs() {
                Some(_) => Scalar::Small(r.recip()),
                None => shrink(big(r).recip()),
            },
            Scalar::Big(r) => shrink(r.recip()),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: mod_pow(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        }
    }

    /// Integer value when the scalar is an integer (rationals) or the
    /// symmetric residue (prime fields).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Small(r) if r.is_integer() => Some(*r.numer()),
            Scalar::Small(_) => None,
            Scalar::Big(r) if r.is_integer() => r.numer().to_i64(),
            Scalar::Big(_) => None,
            Scalar::Mod { value, modulus } => {
                let v = *value as i64;
                let m = *modulus as i64;
                Some(if v > m / 2 { v - m } else { v })
            }
        }
    }

    fn combine(
        &self,
        other: &Scalar,
        small: fn(&Ratio<i64>, &Ratio<i64>) -> Option<Ratio<i64>>,
        wide: fn(BigRational, BigRational) -> BigRational,
        modular: fn(u64, u64, u64) -> u64,
    ) -> Scalar {
        match (self, other) {
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) => {
                assert_eq!(p, q, "scalars from different prime fields");
                Scalar::Mod { value: modular(*a, *b, *p), modulus: *p }
            }
            (Scalar::Mod { .. }, _) | (_, Scalar::Mod { .. }) => {
                panic!("mixing rational and modular scalars")
            }
            (Scalar::Small(a), Scalar::Small(b)) => match small(a, b) {
                Some(r) => Scalar::Small(r),
                None => shrink(wide(big(a), big(b))),
            },
            (Scalar::Small(a), Scalar::Big(b)) => shrink(wide(big(a), b.clone())),
            (Scalar::Big(a), Scalar::Small(b)) => shrink(wide(a.clone(), big(b))),
            (Scalar::Big(a), Scalar::Big(b)) => shrink(wide(a.clone(), b.clone())),
        }
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.combine(rhs, |a, b| a.checked_add(b), |a, b| a + b, |a, b, p| (a + b) % p)
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.combine(rhs, |a, b| a.checked_sub(b), |a, b| a - b, |a, b, p| (a + p - b) % p)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.combine(rhs, |a, b| a.checked_mul(b), |a, b| a * b, |a, b, p| a * b % p)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Small(r) => match r.numer().checked_neg() {
                Some(n) => Scalar::Small(Ratio::new_raw(n, *r.denom())),
                None => shrink(-big(r)),
            },
            Scalar::Big(r) => shrink(-r.clone()),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Small(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Scalar::Small(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Scalar::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Scalar {
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Small(r) => r.is_negative(),
            Scalar::Big(r) => r.is_negative(),
            Scalar::Mod { .. } => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let three = f.from_i64(3);
        let five = f.from_i64(5);
        assert_eq!(&three * &five, f.from_i64(1));
        assert_eq!(&three - &five, f.from_i64(5));
        assert_eq!(three.inv(), five);
        assert_eq!(-&three, f.from_i64(4));
    }

    #[test]
    fn rationals_promote_on_overflow() {
        let f = Field::Rational;
        let huge = f.from_i64(i64::MAX);
        let sum = &huge + &huge;
        assert!(matches!(sum, Scalar::Big(_)));
        let back = &sum - &huge;
        assert_eq!(back, huge);
        assert!(matches!(back, Scalar::Small(_)));
    }

    #[test]
    fn rational_inverse_and_display() {
        let f = Field::Rational;
        let x = f.from_i64(-4).inv();
        assert_eq!(x.to_string(), "-1/4");
        assert_eq!((&x * &f.from_i64(-8)).to_string(), "2");
    }

    #[test]
    fn parse_fields() {
        assert_eq!(Field::parse("Q").unwrap(), Field::Rational);
        assert_eq!(Field::parse("F2").unwrap(), Field::Prime(2));
        assert_eq!(Field::parse("fp:5").unwrap(), Field::Prime(5));
        assert_eq!(Field::parse("F4"), Err(FieldError::NotPrime(4)));
        assert!(Field::parse("R").is_err());
    }

    #[test]
    fn signed_residue() {
        let f = Field::Prime(3);
        assert_eq!(f.from_i64(-2).to_i64(), Some(1));
        assert_eq!(f.from_i64(2).to_i64(), Some(-1));
    }
}
