//! Exact scalar arithmetic over prime fields and the rationals.
//!
//! Every value is kept in canonical form: residues reduced into `[0, p)`,
//! rationals in lowest terms with positive denominator. Equality of canonical
//! forms is plain structural equality, which the rest of the crate relies on
//! for bit-exact reports.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("operands belong to different fields: {0} vs {1}")]
    SpecMismatch(FieldSpec, FieldSpec),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {input:?} as an element of {spec}")]
    Parse { input: String, spec: FieldSpec },
}

/// A supported coefficient field: `F_p` for a prime `p`, or `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

impl FieldSpec {
    /// Builds the prime-field spec, rejecting composite or unit moduli.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    pub const fn rationals() -> Self {
        FieldSpec::Rationals
    }

    /// Field characteristic: `p` for `F_p`, `0` for `Q`.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime(p) => *p,
            FieldSpec::Rationals => 0,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.integer(0)
    }

    pub fn one(&self) -> FieldElement {
        self.integer(1)
    }

    /// Embeds a signed integer into the field.
    pub fn integer(&self, n: i64) -> FieldElement {
        match self {
            FieldSpec::Prime(p) => FieldElement::Prime {
                p: *p,
                value: (n.rem_euclid(*p as i64)) as u64,
            },
            FieldSpec::Rationals => FieldElement::Rational(BigRational::from_integer(n.into())),
        }
    }

    /// Parses a decimal scalar: an integer, or `a/b` over the rationals.
    /// Over `F_p`, `a/b` is accepted as `a * b^{-1}` when `b` is a unit.
    pub fn parse(&self, s: &str) -> Result<FieldElement, FieldError> {
        let s = s.trim();
        let err = || FieldError::Parse {
            input: s.to_string(),
            spec: *self,
        };
        if let Some((num, den)) = s.split_once('/') {
            let n = self.parse_integer(num.trim()).ok_or_else(err)?;
            let d = self.parse_integer(den.trim()).ok_or_else(err)?;
            return n.checked_div(&d).map_err(|_| err());
        }
        self.parse_integer(s).ok_or_else(err)
    }

    fn parse_integer(&self, s: &str) -> Option<FieldElement> {
        match self {
            FieldSpec::Prime(p) => {
                let neg = s.starts_with('-');
                let digits = s.strip_prefix('-').unwrap_or(s);
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return None;
                }
                // Reduce digit by digit so arbitrarily long inputs stay exact.
                let mut v: u64 = 0;
                for b in digits.bytes() {
                    v = mulmod(v, 10, *p);
                    v = addmod(v, (b - b'0') as u64 % *p, *p);
                }
                if neg && v != 0 {
                    v = *p - v;
                }
                Some(FieldElement::Prime { p: *p, value: v })
            }
            FieldSpec::Rationals => {
                let n = BigInt::from_str(s).ok()?;
                Some(FieldElement::Rational(BigRational::from_integer(n)))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
            FieldSpec::Rationals => write!(f, "Q"),
        }
    }
}

/// An exact field scalar. The owning [`FieldSpec`] is recoverable from the
/// value itself, so mismatched-field arithmetic is always detectable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Prime { p: u64, value: u64 },
    Rational(BigRational),
}

impl FieldElement {
    pub fn spec(&self) -> FieldSpec {
        match self {
            FieldElement::Prime { p, .. } => FieldSpec::Prime(*p),
            FieldElement::Rational(_) => FieldSpec::Rationals,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Prime { value, .. } => *value == 0,
            FieldElement::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Prime { value, .. } => *value == 1,
            FieldElement::Rational(r) => r.is_one(),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.same_spec(rhs)?;
        Ok(self + rhs)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.same_spec(rhs)?;
        Ok(self - rhs)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.same_spec(rhs)?;
        Ok(self * rhs)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.same_spec(rhs)?;
        Ok(self * &rhs.inverse()?)
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inverse(&self) -> Result<Self, FieldError> {
        match self {
            FieldElement::Prime { p, value } => {
                if *value == 0 {
                    return Err(FieldError::DivisionByZero);
                }
                // Fermat: value^(p-2) mod p.
                Ok(FieldElement::Prime {
                    p: *p,
                    value: powmod(*value, *p - 2, *p),
                })
            }
            FieldElement::Rational(r) => {
                if r.is_zero() {
                    return Err(FieldError::DivisionByZero);
                }
                Ok(FieldElement::Rational(r.recip()))
            }
        }
    }

    fn same_spec(&self, rhs: &Self) -> Result<(), FieldError> {
        if self.spec() == rhs.spec() {
            Ok(())
        } else {
            Err(FieldError::SpecMismatch(self.spec(), rhs.spec()))
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Prime { value, .. } => write!(f, "{value}"),
            FieldElement::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

// Operator impls assume matching specs; they are used on the hot paths after
// element construction has pinned the field. Cross-field use is a programming
// error and panics.
macro_rules! impl_binop {
    ($trait:ident, $method:ident, $opm:expr, $opr:expr) => {
        impl std::ops::$trait for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                match (self, rhs) {
                    (
                        FieldElement::Prime { p, value: a },
                        FieldElement::Prime { p: q, value: b },
                    ) if p == q => FieldElement::Prime {
                        p: *p,
                        value: $opm(*a, *b, *p),
                    },
                    (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                        FieldElement::Rational($opr(a, b))
                    }
                    _ => panic!(
                        "field mismatch: {} vs {}",
                        self.spec(),
                        rhs.spec()
                    ),
                }
            }
        }
    };
}

impl_binop!(Add, add, addmod, |a: &BigRational, b: &BigRational| a + b);
impl_binop!(Sub, sub, submod, |a: &BigRational, b: &BigRational| a - b);
impl_binop!(Mul, mul, mulmod, |a: &BigRational, b: &BigRational| a * b);

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Prime { p, value } => FieldElement::Prime {
                p: *p,
                value: if *value == 0 { 0 } else { *p - *value },
            },
            FieldElement::Rational(r) => FieldElement::Rational(-r),
        }
    }
}

fn addmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn submod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + (p - b) as u128) % p as u128) as u64
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map_or(false, |s| s <= n) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Rational helper used by tests and reports.
pub fn rational(numer: i64, denom: i64) -> FieldElement {
    FieldElement::Rational(BigRational::new(numer.into(), denom.into()))
}

pub(crate) fn rational_is_negative(e: &FieldElement) -> bool {
    match e {
        FieldElement::Rational(r) => r.is_negative(),
        FieldElement::Prime { .. } => false,
    }
}
