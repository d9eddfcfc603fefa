//! Exact scalars: Gaussian rationals `a + b·i` with `a, b ∈ ℚ`.
//!
//! Purely rational values carry a zero imaginary part, and every operation
//! short-circuits on that case, so a session restricted to ℚ pays almost
//! nothing for the extension. Which field a session is allowed to produce is
//! governed by [`Field`].

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The working field of a session.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Field {
    /// ℚ
    #[default]
    #[serde(rename = "Q")]
    Rational,
    /// ℚ(i)
    #[serde(rename = "Qi", alias = "Q(i)")]
    Gaussian,
}

impl Field {
    pub fn admits(self, s: &Scalar) -> bool {
        match self {
            Field::Rational => s.is_rational(),
            Field::Gaussian => true,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Field::Rational => "Q",
            Field::Gaussian => "Qi",
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "Q" => Ok(Field::Rational),
            "Qi" | "Q(i)" => Ok(Field::Gaussian),
            other => Err(Error::Parse(format!("unknown field `{other}` (expected Q or Qi)"))),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An exact element of ℚ(i), always in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { re: BigRational::zero(), im: BigRational::zero() }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn i() -> Self {
        Scalar { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar { re: BigRational::from_integer(BigInt::from(n)), im: BigRational::zero() }
    }

    /// `n / d`; panics on `d == 0`.
    pub fn frac(n: i64, d: i64) -> Self {
        Scalar { re: rat(n, d), im: BigRational::zero() }
    }

    pub fn from_rational(re: BigRational) -> Self {
        Scalar { re, im: BigRational::zero() }
    }

    pub fn gaussian(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar { re: self.re.clone(), im: -&self.im }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(Scalar { re: self.re.recip(), im: BigRational::zero() });
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Scalar { re: &self.re / &norm, im: -(&self.im / &norm) })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// A square root inside `field`, if one exists.
    pub fn sqrt_in(&self, field: Field) -> Option<Scalar> {
        let root = self.sqrt_gaussian()?;
        field.admits(&root).then_some(root)
    }

    fn sqrt_gaussian(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.im.is_zero() {
            if self.re.is_positive() {
                return rational_sqrt(&self.re).map(Scalar::from_rational);
            }
            return rational_sqrt(&-&self.re).map(|r| Scalar { re: BigRational::zero(), im: r });
        }
        // (x + yi)^2 = a + bi  =>  x^2 = (a + |z|)/2, y = b / 2x
        let modulus = rational_sqrt(&(&self.re * &self.re + &self.im * &self.im))?;
        let two = rat(2, 1);
        let x2 = (&self.re + &modulus) / &two;
        let x = rational_sqrt(&x2)?;
        if x.is_zero() {
            return None;
        }
        let y = &self.im / (&two * &x);
        Some(Scalar { re: x, im: y })
    }

    /// Exact string form: `p`, `p/q`, `p/qi`, `a+bi`.
    pub fn to_exact_string(&self) -> String {
        self.to_string()
    }
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer();
    let d = q.denom();
    let rn = n.sqrt();
    let rd = d.sqrt();
    (&rn * &rn == *n && &rd * &rd == *d).then(|| BigRational::new(rn, rd))
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn fmt_imag(q: &BigRational) -> String {
    if q.is_one() {
        "i".to_string()
    } else if (-q).is_one() {
        "-i".to_string()
    } else {
        format!("{}i", fmt_rational(q))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => f.write_str(&fmt_rational(&self.re)),
            (true, false) => f.write_str(&fmt_imag(&self.im)),
            (false, false) => {
                let im = fmt_imag(&self.im);
                if im.starts_with('-') {
                    write!(f, "{}{}", fmt_rational(&self.re), im)
                } else {
                    write!(f, "{}+{}", fmt_rational(&self.re), im)
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let bad = || Error::Parse(format!("malformed exact number `{s}`"));
    let s = s.trim();
    if s.is_empty() {
        return Err(bad());
    }
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(n, d))
}

fn parse_imag(s: &str) -> Result<BigRational, Error> {
    let body = s.trim().strip_suffix('i').ok_or_else(|| Error::Parse(format!("`{s}` is not imaginary")))?;
    match body.trim() {
        "" | "+" => Ok(BigRational::one()),
        "-" => Ok(-BigRational::one()),
        other => parse_rational(other),
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = compact.as_str();
        if !t.ends_with('i') {
            return Ok(Scalar::from_rational(parse_rational(t)?));
        }
        // split at the last sign that is not the leading one
        let split = t.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').map(|(k, _)| k).last();
        match split {
            Some(k) => {
                let re = parse_rational(&t[..k])?;
                let im = parse_imag(&t[k..])?;
                Ok(Scalar { re, im })
            }
            None => Ok(Scalar { re: BigRational::zero(), im: parse_imag(t)? }),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        if self.im.is_zero() && o.im.is_zero() {
            return Scalar { re: &self.re + &o.re, im: BigRational::zero() };
        }
        Scalar { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        if self.im.is_zero() && o.im.is_zero() {
            return Scalar { re: &self.re - &o.re, im: BigRational::zero() };
        }
        Scalar { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self.im.is_zero(), o.im.is_zero()) {
            (true, true) => Scalar { re: &self.re * &o.re, im: BigRational::zero() },
            (true, false) => Scalar { re: &self.re * &o.re, im: &self.re * &o.im },
            (false, true) => Scalar { re: &self.re * &o.re, im: &self.im * &o.re },
            (false, false) => {
                Scalar { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
            }
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        if self.im.is_zero() && o.im.is_zero() {
            return Scalar { re: &self.re / &o.re, im: BigRational::zero() };
        }
        self * &o.inv().expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -&self.re, im: -&self.im }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        self.re += &o.re;
        if !o.im.is_zero() {
            self.im += &o.im;
        }
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, o: Scalar) {
        *self += &o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        self.re -= &o.re;
        if !o.im.is_zero() {
            self.im -= &o.im;
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = &*self * o;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}


/// `(c_1, …, c_n)` with exact entries.
pub fn format_coords(x: &[Scalar]) -> String {
    let parts: Vec<String> = x.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(", "))
}
