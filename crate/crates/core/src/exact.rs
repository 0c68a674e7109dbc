//! Exact arithmetic in real quadratic fields Q(√d).
//!
//! Every number this crate touches (bases, digit sums, cylinder endpoints,
//! values of f) is an element `u + v·√d` with rational `u`, `v` and a
//! square-free radicand `d`. Rationals are the degenerate case `v = 0`,
//! which is always stored with `d = 0` so that structural equality is value
//! equality.
//!
//! Ordering is decided by sign analysis of `u + v·√d` (compare `u²` with
//! `v²·d`), never through floating point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, ParseError, Result};

/// Largest number of fractional digits [`ExactReal::approx`] will render.
pub const MAX_APPROX_DIGITS: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactReal {
    u: BigRational,
    v: BigRational,
    d: u64,
}

/// Splits `n` into `(s, f)` with `n = s²·f` and `f` square-free.
fn square_free_split(mut n: u64) -> (u64, u64) {
    let mut outside = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        while n % (p * p) == 0 {
            n /= p * p;
            outside *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (outside, n)
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn rational_floor(q: &BigRational) -> BigInt {
    q.numer().div_floor(q.denom())
}

impl ExactReal {
    /// Builds the canonical form of `u + v·√d`, pulling square factors of
    /// `d` into `v`.
    pub fn make(u: BigRational, v: BigRational, d: i64) -> Result<Self> {
        if d < 0 {
            return Err(Error::NegativeRadicand(d));
        }
        let (outside, free) = square_free_split(d as u64);
        let v = v * BigRational::from_integer(BigInt::from(outside));
        Ok(match free {
            0 => Self::rational(u),
            1 => Self::rational(u + v),
            _ => Self::canonical(u, v, free),
        })
    }

    fn canonical(u: BigRational, v: BigRational, d: u64) -> Self {
        if v.is_zero() {
            ExactReal {
                u,
                v,
                d: 0,
            }
        } else {
            ExactReal { u, v, d }
        }
    }

    pub fn rational(q: BigRational) -> Self {
        ExactReal {
            u: q,
            v: BigRational::zero(),
            d: 0,
        }
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(rat(n))
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        Self::rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    /// The golden ratio (1+√5)/2.
    pub fn phi() -> Self {
        Self::canonical(BigRational::new(1.into(), 2.into()), BigRational::new(1.into(), 2.into()), 5)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.u
    }

    pub fn surd_coefficient(&self) -> &BigRational {
        &self.v
    }

    /// Square-free radicand, or 0 for a rational value.
    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.u)
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    fn field_with(&self, other: &Self) -> Result<u64> {
        match (self.d, other.d) {
            (0, d) | (d, 0) => Ok(d),
            (d1, d2) if d1 == d2 => Ok(d1),
            (d1, d2) => Err(Error::IncompatibleFields(d1, d2)),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let d = self.field_with(other)?;
        Ok(Self::canonical(&self.u + &other.u, &self.v + &other.v, d))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let d = self.field_with(other)?;
        Ok(Self::canonical(&self.u - &other.u, &self.v - &other.v, d))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let d = self.field_with(other)?;
        let dq = rat(d as i64);
        let u = &self.u * &other.u + &self.v * &other.v * dq;
        let v = &self.u * &other.v + &self.v * &other.u;
        Ok(Self::canonical(u, v, d))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.field_with(other)?;
        self.checked_mul(&other.checked_recip()?)
    }

    pub fn checked_recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // 1/(u + v√d) = (u - v√d) / (u² - v²d); the norm is nonzero for square-free d.
        let norm = &self.u * &self.u - &self.v * &self.v * rat(self.d as i64);
        Ok(Self::canonical(&self.u / &norm, -&self.v / &norm, self.d))
    }

    /// Reciprocal. Panics on zero.
    pub fn recip(&self) -> Self {
        self.checked_recip().expect("reciprocal of zero")
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    /// Sign of `u + v·√d` by exact case analysis.
    pub fn signum(&self) -> Ordering {
        let su = self.u.cmp(&BigRational::zero());
        let sv = self.v.cmp(&BigRational::zero());
        match (su, sv) {
            (s, Ordering::Equal) => s,
            (Ordering::Equal, s) => s,
            (a, b) if a == b => a,
            (su, _) => {
                // Opposite signs: the larger of |u| and |v|√d wins.
                let u2 = &self.u * &self.u;
                let v2d = &self.v * &self.v * rat(self.d as i64);
                match u2.cmp(&v2d) {
                    Ordering::Greater => su,
                    Ordering::Less => su.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    /// Exact total-order comparison within a common field.
    pub fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        Ok(self.checked_sub(other)?.signum())
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Greatest integer `n` with `n <= self`.
    ///
    /// √d is bracketed by `[s, s+1]/2^k` with `s = isqrt(d·4^k)`; once the
    /// induced bracket on the value spans at most two integers the exact
    /// comparison picks the answer.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return rational_floor(&self.u);
        }
        let d = BigInt::from(self.d);
        let mut k = 0u32;
        loop {
            let scale = BigInt::one() << k;
            let s = (&d * &scale * &scale).sqrt();
            let lo_root = BigRational::new(s.clone(), scale.clone());
            let hi_root = BigRational::new(s + 1, scale);
            let (a, b) = (&self.u + &self.v * &lo_root, &self.u + &self.v * &hi_root);
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let (fl, fh) = (rational_floor(&lo), rational_floor(&hi));
            if fl == fh {
                return fl;
            }
            if &fh - &fl == BigInt::one() {
                let candidate = Self::rational(BigRational::from_integer(fh.clone()));
                return if self.signum_minus(&candidate) == Ordering::Less {
                    fl
                } else {
                    fh
                };
            }
            k += 16;
        }
    }

    fn signum_minus(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }

    /// Least integer `n` with `n >= self`.
    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    /// Decimal rendering with `digits` fractional digits, rounded toward
    /// negative infinity (the result is a lower bound, off by less than one
    /// unit in the last place).
    pub fn approx(&self, digits: usize) -> Result<String> {
        if digits > MAX_APPROX_DIGITS {
            return Err(Error::CapExceeded {
                what: "decimal digits",
                requested: digits as u64,
                cap: MAX_APPROX_DIGITS as u64,
            });
        }
        let scale = BigInt::from(10u32).pow(digits as u32);
        let scaled = self * &Self::rational(BigRational::from_integer(scale));
        let n = scaled.floor();
        let negative = n.sign() == Sign::Minus;
        let mut text = n.abs().to_string();
        if text.len() <= digits {
            text = format!("{}{}", "0".repeat(digits + 1 - text.len()), text);
        }
        let (int_part, frac_part) = text.split_at(text.len() - digits);
        let sign = if negative { "-" } else { "" };
        Ok(if digits == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part}")
        })
    }

    /// Nearest-ish `f64`, for display and plotting only.
    pub fn to_f64(&self) -> f64 {
        self.approx(20)
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(f64::NAN)
    }
}

impl PartialOrd for ExactReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.try_cmp(other).ok()
    }
}

impl Zero for ExactReal {
    fn zero() -> Self {
        ExactReal::zero()
    }

    fn is_zero(&self) -> bool {
        ExactReal::is_zero(self)
    }
}

impl One for ExactReal {
    fn one() -> Self {
        ExactReal::one()
    }
}

impl From<BigRational> for ExactReal {
    fn from(q: BigRational) -> Self {
        ExactReal::rational(q)
    }
}

impl From<i64> for ExactReal {
    fn from(n: i64) -> Self {
        ExactReal::integer(n)
    }
}

impl From<u32> for ExactReal {
    fn from(n: u32) -> Self {
        ExactReal::integer(n.into())
    }
}

impl Neg for &ExactReal {
    type Output = ExactReal;

    fn neg(self) -> ExactReal {
        ExactReal::canonical(-&self.u, -&self.v, self.d)
    }
}

impl Neg for ExactReal {
    type Output = ExactReal;

    fn neg(self) -> ExactReal {
        -&self
    }
}

// Operators panic on mixed fields and on division by zero, like integer
// division; the `checked_*` methods report those as errors instead.
macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&ExactReal> for &ExactReal {
            type Output = ExactReal;

            fn $method(self, rhs: &ExactReal) -> ExactReal {
                match self.$checked(rhs) {
                    Ok(x) => x,
                    Err(e) => panic!("{}: {}", stringify!($method), e),
                }
            }
        }

        impl $trait<ExactReal> for ExactReal {
            type Output = ExactReal;

            fn $method(self, rhs: ExactReal) -> ExactReal {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&ExactReal> for ExactReal {
            type Output = ExactReal;

            fn $method(self, rhs: &ExactReal) -> ExactReal {
                (&self).$method(rhs)
            }
        }

        impl $trait<ExactReal> for &ExactReal {
            type Output = ExactReal;

            fn $method(self, rhs: ExactReal) -> ExactReal {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl fmt::Display for ExactReal {
    /// Prints in the base-literal grammar: `p`, `p/q` or `(A+B*sqrtD)/W`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.u);
        }
        let w = self.u.denom().lcm(self.v.denom());
        let a = (&self.u * BigRational::from_integer(w.clone())).to_integer();
        let b = (&self.v * BigRational::from_integer(w.clone())).to_integer();
        let sign = if b.is_negative() { '-' } else { '+' };
        write!(f, "({a}{sign}{}*sqrt{})", b.abs(), self.d)?;
        if !w.is_one() {
            write!(f, "/{w}")?;
        }
        Ok(())
    }
}

struct Cursor<'a> {
    input: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(input: &'a str) -> Self {
        Cursor {
            input,
            bytes: input.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, reason: impl Into<String>) -> ParseError {
        ParseError::new("exact literal", self.input, reason)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_word(&mut self, word: &str) -> bool {
        self.skip_ws();
        if self.input[self.pos..].starts_with(word) {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    fn unsigned(&mut self) -> std::result::Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err(format!("expected digits at offset {start}")));
        }
        Ok(self.input[start..self.pos].parse().expect("ascii digits"))
    }

    fn signed(&mut self) -> std::result::Result<BigInt, ParseError> {
        let negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let n = self.unsigned()?;
        Ok(if negative { -n } else { n })
    }

    fn denominator(&mut self) -> std::result::Result<BigInt, ParseError> {
        if self.eat(b'/') {
            let w = self.unsigned()?;
            if w.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(w)
        } else {
            Ok(BigInt::one())
        }
    }

    fn done(&mut self) -> std::result::Result<(), ParseError> {
        if self.peek().is_some() {
            Err(self.err(format!("unexpected trailing input at offset {}", self.pos)))
        } else {
            Ok(())
        }
    }
}

impl FromStr for ExactReal {
    type Err = ParseError;

    /// Accepts `3`, `-3/2`, `(1+1*sqrt5)/2`, `(1-sqrt5)/2` and `phi`.
    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let mut cur = Cursor::new(s);
        if cur.eat_word("phi") {
            cur.done()?;
            return Ok(ExactReal::phi());
        }
        if cur.eat(b'(') {
            let u = cur.signed()?;
            let negative = if cur.eat(b'-') {
                true
            } else if cur.eat(b'+') {
                false
            } else {
                return Err(cur.err("expected `+` or `-` before the surd term"));
            };
            let v = if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
                let v = cur.unsigned()?;
                if !cur.eat(b'*') {
                    return Err(cur.err("expected `*` between coefficient and sqrt"));
                }
                v
            } else {
                BigInt::one()
            };
            if !cur.eat_word("sqrt") {
                return Err(cur.err("expected `sqrt`"));
            }
            let d = cur.unsigned()?;
            if !cur.eat(b')') {
                return Err(cur.err("expected `)`"));
            }
            let w = cur.denominator()?;
            cur.done()?;
            let v = if negative { -v } else { v };
            let d: i64 = d
                .try_into()
                .map_err(|_| ParseError::new("exact literal", s, "radicand too large"))?;
            return ExactReal::make(BigRational::new(u, w.clone()), BigRational::new(v, w), d)
                .map_err(|e| ParseError::new("exact literal", s, e.to_string()));
        }
        let n = cur.signed()?;
        let w = cur.denominator()?;
        cur.done()?;
        Ok(ExactReal::rational(BigRational::new(n, w)))
    }
}
