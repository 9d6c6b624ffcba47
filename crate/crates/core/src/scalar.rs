//! Exact Gaussian-rational scalars.
//!
//! A [`GaussianRational`] is a complex number whose real and imaginary parts
//! are arbitrary-precision rationals. Both parts are always kept in lowest
//! terms with a positive denominator, so derived equality and hashing are
//! structural.
//!
//! Literal grammar (files and CLI):
//!
//! ```text
//! literal := [sign] rat [sign rat "i"] | [sign] rat "i" | [sign] "i"
//! rat     := int [ "/" posint ]
//! ```
//!
//! The parser also accepts a bare `i` as the imaginary part of a two-part
//! literal (`1+i`). The formatter only emits the strict grammar.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
pub use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_integers(re: i64, im: i64) -> Self {
        Self::new(
            BigRational::from_integer(re.into()),
            BigRational::from_integer(im.into()),
        )
    }

    /// `re_num/re_den + (im_num/im_den) i`. Panics on a zero denominator.
    pub fn from_fractions(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Self::new(
            BigRational::new(re_num.into(), re_den.into()),
            BigRational::new(im_num.into(), im_den.into()),
        )
    }

    pub fn real(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    pub fn i() -> Self {
        Self::from_integers(0, 1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// Squared modulus `re² + im²`.
    pub fn abs_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let m = self.abs_sq();
        Ok(Self::new(&self.re / &m, -&self.im / &m))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Multiply by a real rational.
    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(&self.re * k, &self.im * k)
    }

    /// Lossy conversion used only by floating-point convergence checks.
    pub fn to_complex64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }

    /// Decimal rendering with `digits` fractional digits, rounding half away
    /// from zero. Presentation only.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        let re = format_decimal(&self.re, digits);
        if self.im.is_zero() {
            return re;
        }
        let im = format_decimal(&self.im.abs(), digits);
        let sign = if self.im.is_negative() { "-" } else { "+" };
        if self.re.is_zero() {
            let lead = if self.im.is_negative() { "-" } else { "" };
            format!("{lead}{im}i")
        } else {
            format!("{re}{sign}{im}i")
        }
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    if let Some(v) = r.to_f64() {
        return v;
    }
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

fn format_decimal(r: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let num = r.numer().abs() * &scale;
    let den = r.denom();
    // round(|num| / den) half away from zero
    let (q, rem) = num.div_rem(den);
    let q = if rem * 2 >= *den { q + 1 } else { q };
    let mut s = q.to_string();
    if digits > 0 {
        if s.len() <= digits {
            s = format!("{}{}", "0".repeat(digits + 1 - s.len()), s);
        }
        s.insert(s.len() - digits, '.');
    }
    if r.is_negative() && !q_is_zero(&s) {
        s.insert(0, '-');
    }
    s
}

fn q_is_zero(s: &str) -> bool {
    s.chars().all(|c| c == '0' || c == '.')
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_integers(1, 0)
    }
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        Self::from_integers(v, 0)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(v: BigRational) -> Self {
        Self::real(v)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: GaussianRational) -> GaussianRational {
        GaussianRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: GaussianRational) -> GaussianRational {
        GaussianRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: GaussianRational) -> GaussianRational {
        &self * &rhs
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl Sum for GaussianRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl<'a> Sum<&'a GaussianRational> for GaussianRational {
    fn sum<I: Iterator<Item = &'a GaussianRational>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl Product for GaussianRational {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| &acc * &x)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let unit = self.im.abs().is_one();
        if self.re.is_zero() {
            if unit {
                return f.write_str(if self.im.is_negative() { "-i" } else { "i" });
            }
            return write!(f, "{}i", self.im);
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}i", self.re, sign, self.im.abs())
    }
}

/// Parse a scalar literal.
pub fn parse_scalar(text: &str) -> Result<GaussianRational> {
    Parser {
        s: text.as_bytes(),
        pos: 0,
    }
    .literal()
}

impl FromStr for GaussianRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_scalar(s)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, message: &str) -> Error {
        Error::ParseScalar {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                Some(false)
            }
            Some(b'-') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digit"));
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("validated digits"))
    }

    fn rat(&mut self) -> Result<BigRational> {
        let num = self.digits()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.pos;
            let den = self.digits()?;
            if den.is_zero() {
                self.pos = at;
                return Err(self.err("zero denominator"));
            }
            return Ok(BigRational::new(num, den));
        }
        Ok(BigRational::from_integer(num))
    }

    fn end(&self) -> Result<()> {
        if self.pos == self.s.len() {
            Ok(())
        } else {
            Err(self.err("unexpected character"))
        }
    }

    fn signed(neg: bool, v: BigRational) -> BigRational {
        if neg {
            -v
        } else {
            v
        }
    }

    fn literal(mut self) -> Result<GaussianRational> {
        if self.s.is_empty() {
            return Err(self.err("empty literal"));
        }
        let neg = self.sign() == Some(true);
        if self.peek() == Some(b'i') {
            self.pos += 1;
            self.end()?;
            return Ok(GaussianRational::new(
                BigRational::zero(),
                Self::signed(neg, BigRational::one()),
            ));
        }
        let first = Self::signed(neg, self.rat()?);
        match self.peek() {
            None => Ok(GaussianRational::real(first)),
            Some(b'i') => {
                self.pos += 1;
                self.end()?;
                Ok(GaussianRational::new(BigRational::zero(), first))
            }
            Some(b'+') | Some(b'-') => {
                let neg_im = self.sign() == Some(true);
                let im = if self.peek() == Some(b'i') {
                    BigRational::one()
                } else {
                    self.rat()?
                };
                if self.peek() != Some(b'i') {
                    return Err(self.err("expected 'i' after imaginary part"));
                }
                self.pos += 1;
                self.end()?;
                Ok(GaussianRational::new(first, Self::signed(neg_im, im)))
            }
            Some(_) => Err(self.err("unexpected character")),
        }
    }
}
