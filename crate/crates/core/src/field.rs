//! Exact scalars: the rationals, the cyclotomic field ℚ(ζ) with ζ² + ζ + 1 = 0,
//! and prime fields 𝔽_p.
//!
//! Every element carries enough information to recover its [`FieldSpec`], so
//! mixing fields is detected at run time instead of silently producing garbage.
//! The operator impls (`+`, `-`, `*`, `/`) panic on a field mismatch or a
//! division by zero; the `checked_*` methods and [`arith`] report those as
//! [`FieldError`] values instead.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default prime used as a stand-in for an algebraically closed field of
/// characteristic zero when rational points are not available.
pub const DEFAULT_PRIME: u64 = 1_000_003;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("invalid modulus {0}: must be a prime greater than 5")]
    InvalidModulus(u64),
    #[error("cannot parse field element from {0:?}")]
    Parse(String),
    #[error("{0} has no cube root of unity other than 1")]
    NoCubeRootOfUnity(FieldSpec),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "modulus", rename_all = "snake_case")]
pub enum FieldSpec {
    Rationals,
    Cyclotomic3,
    PrimeField(u64),
}

impl FieldSpec {
    /// Prime field with a validated modulus (prime, > 5).
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if p <= 5 || !is_prime(p) || p >= (1 << 62) {
            return Err(FieldError::InvalidModulus(p));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn zero(self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> FieldElement {
        match self {
            FieldSpec::Rationals => FieldElement::Rational(BigRational::from_integer(n.into())),
            FieldSpec::Cyclotomic3 => FieldElement::Cyclotomic(
                BigRational::from_integer(n.into()),
                BigRational::zero(),
            ),
            FieldSpec::PrimeField(p) => FieldElement::Prime {
                value: (n.rem_euclid(p as i64)) as u64,
                modulus: p,
            },
        }
    }

    /// The image of the rational `num/den`. Fails when `den` vanishes in the field.
    pub fn from_ratio(self, num: i64, den: i64) -> Result<FieldElement, FieldError> {
        self.from_i64(num).checked_div(&self.from_i64(den))
    }

    pub fn from_rational(self, q: &BigRational) -> Result<FieldElement, FieldError> {
        match self {
            FieldSpec::Rationals => Ok(FieldElement::Rational(q.clone())),
            FieldSpec::Cyclotomic3 => Ok(FieldElement::Cyclotomic(q.clone(), BigRational::zero())),
            FieldSpec::PrimeField(p) => {
                let m = BigInt::from(p);
                let n = q.numer().mod_floor(&m).to_u64().unwrap_or(0);
                let d = q.denom().mod_floor(&m).to_u64().unwrap_or(0);
                let n = FieldElement::Prime { value: n, modulus: p };
                let d = FieldElement::Prime { value: d, modulus: p };
                n.checked_div(&d)
            }
        }
    }

    /// A primitive cube root of unity, when the field has one.
    pub fn zeta(self) -> Result<FieldElement, FieldError> {
        match self {
            FieldSpec::Rationals => Err(FieldError::NoCubeRootOfUnity(self)),
            FieldSpec::Cyclotomic3 => Ok(FieldElement::Cyclotomic(
                BigRational::zero(),
                BigRational::one(),
            )),
            FieldSpec::PrimeField(p) => {
                if p % 3 != 1 {
                    return Err(FieldError::NoCubeRootOfUnity(self));
                }
                // g^((p-1)/3) for the first g giving a nontrivial value.
                for g in 2..p {
                    let z = pow_mod(g, (p - 1) / 3, p);
                    if z != 1 {
                        return Ok(FieldElement::Prime { value: z, modulus: p });
                    }
                }
                Err(FieldError::NoCubeRootOfUnity(self))
            }
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::PrimeField(p) => p,
            _ => 0,
        }
    }

    /// Parses `q`, `q-zeta3`, or `fp:<prime>`.
    pub fn parse(s: &str) -> Result<Self, FieldError> {
        match s.trim() {
            "q" | "Q" | "rationals" => Ok(FieldSpec::Rationals),
            "q-zeta3" | "qzeta3" | "cyclotomic3" => Ok(FieldSpec::Cyclotomic3),
            other => {
                let rest = other
                    .strip_prefix("fp:")
                    .ok_or_else(|| FieldError::Parse(other.to_string()))?;
                let p: u64 = rest
                    .parse()
                    .map_err(|_| FieldError::Parse(other.to_string()))?;
                FieldSpec::prime(p)
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Cyclotomic3 => write!(f, "Q(zeta3)"),
            FieldSpec::PrimeField(p) => write!(f, "F_{p}"),
        }
    }
}

/// An exact element of one of the supported fields.
///
/// `Cyclotomic(a, b)` stands for `a + b·ζ`. Rationals are kept reduced with a
/// positive denominator (guaranteed by `BigRational`), prime-field residues in
/// `[0, p)`, so derived equality is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Cyclotomic(BigRational, BigRational),
    Prime { value: u64, modulus: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact field operation with explicit error reporting.
pub fn arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement, FieldError> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}

impl FieldElement {
    pub fn spec(&self) -> FieldSpec {
        match self {
            FieldElement::Rational(_) => FieldSpec::Rationals,
            FieldElement::Cyclotomic(..) => FieldSpec::Cyclotomic3,
            FieldElement::Prime { modulus, .. } => FieldSpec::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_zero(),
            FieldElement::Cyclotomic(a, b) => a.is_zero() && b.is_zero(),
            FieldElement::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.spec().one()
    }

    fn same_field(&self, other: &Self) -> Result<(), FieldError> {
        if self.spec() == other.spec() {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch(self.spec(), other.spec()))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a + b),
            (FieldElement::Cyclotomic(a, b), FieldElement::Cyclotomic(c, d)) => {
                FieldElement::Cyclotomic(a + c, b + d)
            }
            (
                FieldElement::Prime { value: a, modulus: p },
                FieldElement::Prime { value: b, .. },
            ) => FieldElement::Prime {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a * b),
            (FieldElement::Cyclotomic(a, b), FieldElement::Cyclotomic(c, d)) => {
                // (a + bζ)(c + dζ) = ac + (ad + bc)ζ + bd ζ², ζ² = -1 - ζ
                let bd = b * d;
                FieldElement::Cyclotomic(a * c - &bd, a * d + b * c - bd)
            }
            (
                FieldElement::Prime { value: a, modulus: p },
                FieldElement::Prime { value: b, .. },
            ) => FieldElement::Prime {
                value: mul_mod(*a, *b, *p),
                modulus: *p,
            },
            _ => unreachable!(),
        })
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match self {
            FieldElement::Rational(q) => FieldElement::Rational(q.recip()),
            FieldElement::Cyclotomic(a, b) => {
                // conj(a + bζ) = a + bζ² = (a - b) - bζ; norm = a² - ab + b²
                let norm = a * a - a * b + b * b;
                FieldElement::Cyclotomic((a - b) / &norm, -(b / &norm))
            }
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    fn neg_ref(&self) -> Self {
        match self {
            FieldElement::Rational(q) => FieldElement::Rational(-q),
            FieldElement::Cyclotomic(a, b) => FieldElement::Cyclotomic(-a, -b),
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.spec().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Integer power allowing negative exponents.
    pub fn powi(&self, e: i64) -> Result<Self, FieldError> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// The rational value, if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            FieldElement::Rational(q) => Some(q.clone()),
            FieldElement::Cyclotomic(a, b) if b.is_zero() => Some(a.clone()),
            _ => None,
        }
    }

    /// An exact cube root inside the field, when one is available without
    /// leaving it: perfect-cube rationals, and residues in 𝔽_p.
    pub fn cube_root(&self) -> Option<Self> {
        match self {
            FieldElement::Rational(q) => rational_cube_root(q).map(FieldElement::Rational),
            FieldElement::Cyclotomic(a, b) if b.is_zero() => {
                rational_cube_root(a).map(|r| FieldElement::Cyclotomic(r, BigRational::zero()))
            }
            FieldElement::Cyclotomic(..) => None,
            FieldElement::Prime { value, modulus } => {
                cube_root_mod(*value, *modulus).map(|r| FieldElement::Prime {
                    value: r,
                    modulus: *modulus,
                })
            }
        }
    }

    /// Prime-field residue, if this is a prime-field element.
    pub fn residue(&self) -> Option<u64> {
        match self {
            FieldElement::Prime { value, .. } => Some(*value),
            _ => None,
        }
    }

    /// Parses a literal: an integer, `n/d`, `zeta`, or `a+b*zeta` style
    /// combinations (the latter only over ℚ(ζ) or 𝔽_p with p ≡ 1 mod 3).
    pub fn parse(spec: FieldSpec, text: &str) -> Result<Self, FieldError> {
        let err = || FieldError::Parse(text.to_string());
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err());
        }
        let mut total = spec.zero();
        // split into signed summands
        let mut parts = Vec::new();
        let mut cur = String::new();
        for (i, ch) in s.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 && !s[..i].ends_with(['*', '/']) {
                parts.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        parts.push(cur);
        for part in parts {
            let (neg, body) = match part.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, part.strip_prefix('+').unwrap_or(&part)),
            };
            if body.is_empty() {
                return Err(err());
            }
            let mut value = spec.one();
            let mut first = true;
            let mut op = '*';
            let mut token = String::new();
            let flush = |token: &str, value: &mut FieldElement, op: char| -> Result<(), FieldError> {
                let atom = if token == "zeta" {
                    spec.zeta()?
                } else {
                    let n: i64 = token.parse().map_err(|_| FieldError::Parse(text.to_string()))?;
                    spec.from_i64(n)
                };
                *value = if op == '*' {
                    value.checked_mul(&atom)?
                } else {
                    value.checked_div(&atom)?
                };
                Ok(())
            };
            for ch in body.chars() {
                if ch == '*' || ch == '/' {
                    if token.is_empty() {
                        return Err(err());
                    }
                    flush(&token, &mut value, op)?;
                    token.clear();
                    op = ch;
                    first = false;
                } else {
                    token.push(ch);
                }
            }
            let _ = first;
            if token.is_empty() {
                return Err(err());
            }
            flush(&token, &mut value, op)?;
            total = if neg {
                total.checked_sub(&value)?
            } else {
                total.checked_add(&value)?
            };
        }
        Ok(total)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(q) => write!(f, "{q}"),
            FieldElement::Cyclotomic(a, b) => {
                if b.is_zero() {
                    write!(f, "{a}")
                } else if a.is_zero() {
                    write_zeta_coeff(f, b, true)
                } else {
                    write!(f, "{a}")?;
                    if b.is_negative() {
                        write!(f, "-")?;
                        write_zeta_coeff(f, &-b, true)
                    } else {
                        write!(f, "+")?;
                        write_zeta_coeff(f, b, true)
                    }
                }
            }
            FieldElement::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

fn write_zeta_coeff(f: &mut fmt::Formatter<'_>, b: &BigRational, _lead: bool) -> fmt::Result {
    if b.is_one() {
        write!(f, "zeta")
    } else if *b == -BigRational::one() {
        write!(f, "-zeta")
    } else if b.is_integer() {
        write!(f, "{b}*zeta")
    } else {
        write!(f, "{}*zeta/{}", b.numer(), b.denom())
    }
}

impl Serialize for FieldElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &'a FieldElement) -> FieldElement {
                self.$checked(rhs)
                    .unwrap_or_else(|e| panic!("field operation failed: {e}"))
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &'a FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn integer_cube_root(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return integer_cube_root(&-n).map(|r| -r);
    }
    let r = n.cbrt();
    if &(&r * &r * &r) == n {
        Some(r)
    } else {
        None
    }
}

fn rational_cube_root(q: &BigRational) -> Option<BigRational> {
    let n = integer_cube_root(q.numer())?;
    let d = integer_cube_root(q.denom())?;
    Some(BigRational::new(n, d))
}

/// Some cube root of `a` modulo the prime `p`, if one exists.
fn cube_root_mod(a: u64, p: u64) -> Option<u64> {
    if a == 0 {
        return Some(0);
    }
    if p % 3 == 2 {
        // cubing is a bijection; inverse exponent is (2p - 1)/3
        return Some(pow_mod(a, (2 * p - 1) / 3, p));
    }
    // p ≡ 1 mod 3: a is a cube iff a^((p-1)/3) = 1
    if pow_mod(a, (p - 1) / 3, p) != 1 {
        return None;
    }
    let mut t = p - 1;
    let mut s = 0u32;
    while t % 3 == 0 {
        t /= 3;
        s += 1;
    }
    // r = a^k with 3k ≡ 1 (mod t) satisfies r³ = a·u for u in the 3-Sylow
    // subgroup; correct r by a Sylow element found by search.
    let k = if t % 3 == 1 { (2 * t + 1) / 3 } else { (t + 1) / 3 };
    let r = pow_mod(a, k, p);
    let target = a;
    let mut g = 0;
    for c in 2..p {
        let h = pow_mod(c, t, p);
        if pow_mod(h, 3u64.pow(s - 1), p) != 1 {
            g = h;
            break;
        }
    }
    let order = 3u64.pow(s);
    let mut z = 1u64;
    for _ in 0..order {
        let cand = mul_mod(r, z, p);
        if mul_mod(mul_mod(cand, cand, p), cand, p) == target {
            return Some(cand);
        }
        z = mul_mod(z, g, p);
    }
    None
}
