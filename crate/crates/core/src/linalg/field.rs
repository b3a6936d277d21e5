//! Exact scalar arithmetic over the rationals and over prime fields.
//!
//! A [`FieldSpec`] is a lightweight tag carried by every matrix; all scalar
//! arithmetic is dispatched through it so that a single [`Scalar`] enum can
//! serve both fields without generics leaking through the whole crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible prime modulus; products of two residues must fit in u64.
const MAX_PRIME: u64 = (1 << 31) - 1;

/// The coefficient field of a computation: exact rationals or a prime field.
///
/// Prime fields are a pragmatic stand-in for an infinite field of positive
/// characteristic; for genericity certification a large modulus (>= 10^4,
/// e.g. 32003) is recommended. Small primes such as 2 are fully supported
/// for cohomology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    /// Prime field F_p. Fails if `p` is not prime or does not fit in 31 bits.
    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(Error::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    /// Short label used by the CLI and in reports: `q` or `fp:<p>`.
    pub fn label(&self) -> String {
        match self {
            FieldSpec::Rationals => "q".to_string(),
            FieldSpec::Prime(p) => format!("fp:{p}"),
        }
    }

    /// Parses a label produced by [`FieldSpec::label`].
    pub fn parse_label(s: &str) -> Result<Self> {
        if s == "q" || s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = s.strip_prefix("fp:") {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::BadFieldLabel(s.to_string()))?;
            return FieldSpec::prime(p);
        }
        Err(Error::BadFieldLabel(s.to_string()))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::Prime(_) => Scalar::Fp(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
            FieldSpec::Prime(_) => Scalar::Fp(1),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from(BigInt::from(v))),
            FieldSpec::Prime(p) => {
                let m = v.rem_euclid(*p as i64) as u64;
                Scalar::Fp(m)
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp(v) => *v == 0,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (FieldSpec::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x - y),
            (FieldSpec::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + p - y) % p),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (FieldSpec::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp(x * y % p),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (FieldSpec::Prime(p), Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            _ => panic!("scalar/field mismatch"),
        }
    }

    /// Multiplicative inverse. Panics on zero; callers only invert pivots.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => {
                assert!(!x.is_zero(), "inverse of zero");
                Scalar::Rat(x.recip())
            }
            (FieldSpec::Prime(p), Scalar::Fp(x)) => {
                assert!(*x != 0, "inverse of zero");
                Scalar::Fp(pow_mod(*x, p - 2, *p))
            }
            _ => panic!("scalar/field mismatch"),
        }
    }
}

/// A scalar in either field. The variant must match the ambient [`FieldSpec`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rat(BigRational),
    Fp(u64),
}

impl Scalar {
    /// Exact decimal-free rendering: integers plainly, rationals as `p/q`.
    pub fn render(&self) -> String {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp(v) => v.to_string(),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Fp(_) => None,
        }
    }
}

/// Serialized as the exact string rendering, so reports are lossless and
/// never contain floating point.
impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.render())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_scalar(&s).ok_or_else(|| serde::de::Error::custom(format!("bad scalar '{s}'")))
    }
}

fn parse_scalar(s: &str) -> Option<Scalar> {
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.parse().ok()?;
        let d: BigInt = den.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Scalar::Rat(BigRational::new(n, d)));
    }
    if let Ok(v) = s.parse::<u64>() {
        // Ambiguous without the field tag; integers deserialize as Fp when
        // nonnegative. Contexts that need rationals re-wrap explicitly.
        return Some(Scalar::Fp(v));
    }
    let n: BigInt = s.parse().ok()?;
    Some(Scalar::Rat(BigRational::from(n)))
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
