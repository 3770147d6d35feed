//! Exact scalars over ℚ, ℚ(i) and GF(p) for odd primes p.
//!
//! Every value is kept in canonical form: fractions are reduced with a
//! positive denominator and residues live in `[0, p)`. Two scalars of the
//! same field are equal iff their representations are structurally equal.

use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, One, Signed, ToPrimitive, Zero};
use rand_core::RngCore;

use crate::error::{Error, Result};

/// A prime `p >= 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OddPrime(u64);

impl OddPrime {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 3 && is_prime(p) {
            Ok(OddPrime(p))
        } else {
            Err(Error::NotOddPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

/// Descriptor of one of the supported coefficient fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    GaussianRational,
    Prime(OddPrime),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        OddPrime::new(p).map(FieldSpec::Prime)
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::GaussianRational => Scalar::Gaussian {
                re: BigRational::from_integer(BigInt::from(n)),
                im: BigRational::zero(),
            },
            FieldSpec::Prime(p) => Scalar::Prime {
                value: reduce_i64(n, p.0),
                p,
            },
        }
    }

    /// `num / den` as a field element.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        self.from_i64(den).inv().map(|d| self.from_i64(num) * d)
    }

    /// The element 1/2; always exists since the characteristic is odd.
    pub fn half(&self) -> Scalar {
        self.from_ratio(1, 2).expect("characteristic is not 2")
    }

    pub fn quarter(&self) -> Scalar {
        self.from_ratio(1, 4).expect("characteristic is not 2")
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        x.field() == *self
    }

    pub fn admits_sqrt_minus_one(&self) -> bool {
        match *self {
            FieldSpec::Rational => false,
            FieldSpec::GaussianRational => true,
            FieldSpec::Prime(p) => p.0 % 4 == 1,
        }
    }

    /// A square root of -1: `i` over ℚ(i), the smaller residue over GF(p).
    pub fn sqrt_minus_one(&self) -> Result<Scalar> {
        match *self {
            FieldSpec::Rational => Err(Error::NoSqrtMinusOne),
            FieldSpec::GaussianRational => Ok(Scalar::Gaussian {
                re: BigRational::zero(),
                im: BigRational::one(),
            }),
            FieldSpec::Prime(p) => {
                let q = p.0;
                if q % 4 != 1 {
                    return Err(Error::NoSqrtMinusOne);
                }
                // c^((q-1)/4) squares to c^((q-1)/2) = -1 for any non-residue c
                let c = (2..q)
                    .find(|&c| pow_mod(c, (q - 1) / 2, q) == q - 1)
                    .expect("odd prime has a quadratic non-residue");
                let x = pow_mod(c, (q - 1) / 4, q);
                Ok(Scalar::Prime {
                    value: x.min(q - x),
                    p,
                })
            }
        }
    }

    /// Parses a scalar in the canonical text grammar of this field.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let t = text.trim();
        match *self {
            FieldSpec::Rational => parse_rational(t).map(Scalar::Rational),
            FieldSpec::GaussianRational => parse_gaussian(t),
            FieldSpec::Prime(p) => {
                if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(parse_err(t, "expected a residue in [0, p)"));
                }
                let value: u64 = t.parse().map_err(|_| parse_err(t, "residue out of range"))?;
                if value >= p.0 {
                    return Err(parse_err(t, "residue must be smaller than p"));
                }
                Ok(Scalar::Prime { value, p })
            }
        }
    }

    /// A small random element, used by the randomized identity sweeps.
    pub fn sample<R: RngCore + ?Sized>(&self, rng: &mut R) -> Scalar {
        fn small_ratio<R: RngCore + ?Sized>(rng: &mut R) -> BigRational {
            let num = (rng.next_u32() % 13) as i64 - 6;
            let den = (rng.next_u32() % 3) as i64 + 1;
            BigRational::new(BigInt::from(num), BigInt::from(den))
        }
        match *self {
            FieldSpec::Rational => Scalar::Rational(small_ratio(rng)),
            FieldSpec::GaussianRational => Scalar::Gaussian {
                re: small_ratio(rng),
                im: small_ratio(rng),
            },
            FieldSpec::Prime(p) => Scalar::Prime {
                value: rng.next_u64() % p.0,
                p,
            },
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => f.write_str("q"),
            FieldSpec::GaussianRational => f.write_str("qi"),
            FieldSpec::Prime(p) => write!(f, "gf{}", p.0),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "q" => Ok(FieldSpec::Rational),
            "qi" => Ok(FieldSpec::GaussianRational),
            other => {
                let digits = other
                    .strip_prefix("gf")
                    .ok_or_else(|| Error::BadField(other.to_string()))?;
                let p: u64 = digits.parse().map_err(|_| Error::BadField(other.to_string()))?;
                FieldSpec::prime(p)
            }
        }
    }
}

/// An exact element of one of the supported fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Gaussian { re: BigRational, im: BigRational },
    Prime { value: u64, p: OddPrime },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Gaussian { .. } => FieldSpec::GaussianRational,
            Scalar::Prime { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Gaussian { re, im } => re.is_zero() && im.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.field().one()
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Gaussian { re, im } => {
                let norm = re * re + im * im;
                Scalar::Gaussian {
                    re: re / &norm,
                    im: -(im / &norm),
                }
            }
            Scalar::Prime { value, p } => Scalar::Prime {
                value: pow_mod(*value, p.0 - 2, p.0),
                p: *p,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        other.inv().map(|d| self * &d)
    }

    pub fn square(&self) -> Scalar {
        self * self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", r),
            Scalar::Prime { value, .. } => write!(f, "{}", value),
            Scalar::Gaussian { re, im } => {
                if im.is_zero() {
                    return write!(f, "{}", re);
                }
                let imag = if im.is_one() {
                    String::from("i")
                } else if (-im).is_one() {
                    String::from("-i")
                } else {
                    format!("{}i", im)
                };
                if re.is_zero() {
                    f.write_str(&imag)
                } else if im.is_positive() {
                    write!(f, "{}+{}", re, imag)
                } else {
                    write!(f, "{}{}", re, imag)
                }
            }
        }
    }
}

fn mismatch() -> ! {
    panic!("arithmetic between scalars of different fields")
}

/// `Some` when both parts fit in an `i64`.
fn small(x: &BigRational) -> Option<Ratio<i64>> {
    Some(Ratio::new_raw(x.numer().to_i64()?, x.denom().to_i64()?))
}

fn big(x: Ratio<i64>) -> BigRational {
    BigRational::new_raw(BigInt::from(*x.numer()), BigInt::from(*x.denom()))
}

// Word-sized rationals dominate in practice; checked ops fall back to
// big integers on overflow.
fn q_add(x: &BigRational, y: &BigRational) -> BigRational {
    if x.is_zero() {
        return y.clone();
    }
    if y.is_zero() {
        return x.clone();
    }
    match (small(x), small(y)) {
        (Some(a), Some(b)) => a.checked_add(&b).map(big).unwrap_or_else(|| x + y),
        _ => x + y,
    }
}

fn q_mul(x: &BigRational, y: &BigRational) -> BigRational {
    if x.is_zero() || y.is_zero() {
        return BigRational::zero();
    }
    match (small(x), small(y)) {
        (Some(a), Some(b)) => a.checked_mul(&b).map(big).unwrap_or_else(|| x * y),
        _ => x * y,
    }
}

fn q_sub(x: &BigRational, y: &BigRational) -> BigRational {
    q_add(x, &-y)
}

fn add_ref(a: &Scalar, b: &Scalar) -> Scalar {
    match (a, b) {
        (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(q_add(x, y)),
        (Scalar::Gaussian { re: a, im: b }, Scalar::Gaussian { re: c, im: d }) => Scalar::Gaussian {
            re: q_add(a, c),
            im: q_add(b, d),
        },
        (Scalar::Prime { value: x, p }, Scalar::Prime { value: y, p: q }) if p == q => Scalar::Prime {
            value: ((*x as u128 + *y as u128) % p.0 as u128) as u64,
            p: *p,
        },
        _ => mismatch(),
    }
}

fn mul_ref(a: &Scalar, b: &Scalar) -> Scalar {
    match (a, b) {
        (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(q_mul(x, y)),
        (Scalar::Gaussian { re: a, im: b }, Scalar::Gaussian { re: c, im: d }) => Scalar::Gaussian {
            re: q_sub(&q_mul(a, c), &q_mul(b, d)),
            im: q_add(&q_mul(a, d), &q_mul(b, c)),
        },
        (Scalar::Prime { value: x, p }, Scalar::Prime { value: y, p: q }) if p == q => Scalar::Prime {
            value: mul_mod(*x, *y, p.0),
            p: *p,
        },
        _ => mismatch(),
    }
}

fn neg_ref(a: &Scalar) -> Scalar {
    match a {
        Scalar::Rational(x) => Scalar::Rational(-x),
        Scalar::Gaussian { re, im } => Scalar::Gaussian { re: -re, im: -im },
        Scalar::Prime { value, p } => Scalar::Prime {
            value: if *value == 0 { 0 } else { p.0 - value },
            p: *p,
        },
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                $body(self, rhs)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $body(&self, &rhs)
            }
        }
        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Sub, sub, |a: &Scalar, b: &Scalar| add_ref(a, &neg_ref(b)));

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        neg_ref(&self)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        neg_ref(self)
    }
}

fn parse_err(text: &str, reason: &'static str) -> Error {
    Error::Parse {
        text: text.to_string(),
        reason,
    }
}

fn parse_integer(text: &str, whole: &str) -> Result<BigInt> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(whole, "expected an integer"));
    }
    text.parse().map_err(|_| parse_err(whole, "expected an integer"))
}

fn parse_rational(text: &str) -> Result<BigRational> {
    match text.split_once('/') {
        None => parse_integer(text, text).map(BigRational::from_integer),
        Some((num, den)) => {
            let n = parse_integer(num, text)?;
            if den.starts_with('-') {
                return Err(parse_err(text, "denominator must be positive"));
            }
            let d = parse_integer(den, text)?;
            if d.is_zero() {
                return Err(parse_err(text, "denominator is zero"));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

fn parse_gaussian(text: &str) -> Result<Scalar> {
    let Some(body) = text.strip_suffix('i') else {
        return Ok(Scalar::Gaussian {
            re: parse_rational(text)?,
            im: BigRational::zero(),
        });
    };
    let split = body
        .char_indices()
        .rev()
        .find(|&(idx, c)| idx > 0 && (c == '+' || c == '-'))
        .map(|(idx, _)| idx);
    let (re_text, im_text) = match split {
        Some(idx) => (&body[..idx], &body[idx..]),
        None => ("", body),
    };
    let re = if re_text.is_empty() {
        BigRational::zero()
    } else {
        parse_rational(re_text)?
    };
    let im_text = im_text.strip_prefix('+').unwrap_or(im_text);
    let im = match im_text {
        "" => BigRational::one(),
        "-" => -BigRational::one(),
        t => parse_rational(t).map_err(|_| parse_err(text, "malformed imaginary part"))?,
    };
    Ok(Scalar::Gaussian { re, im })
}

fn reduce_i64(n: i64, p: u64) -> u64 {
    let r = (n as i128).rem_euclid(p as i128);
    r as u64
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin; these witnesses are exact for all `u64`.
fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}
