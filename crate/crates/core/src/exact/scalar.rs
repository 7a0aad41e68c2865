//! Elements of the number field Q(i, √2, √3).
//!
//! A [`Scalar`] stores eight rational coordinates over the basis
//! `{1, i, √2, i√2, √3, i√3, √6, i√6}`. Index `2*s + j` holds the coefficient
//! of `i^j * r_s` where `r_0 = 1, r_1 = √2, r_2 = √3, r_3 = √6`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// JSON keys of the eight coordinates, in storage order.
pub const COORD_KEYS: [&str; 8] = ["1", "i", "r2", "ir2", "r3", "ir3", "r6", "ir6"];

const SURD_NAMES: [&str; 4] = ["", "sqrt2", "sqrt3", "sqrt6"];

/// Product of basis surds `r_a * r_b = factor * r_c`, as `(factor, c)`.
const SURD_TABLE: [[(i64, usize); 4]; 4] = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (2, 0), (1, 3), (2, 2)],
    [(1, 2), (1, 3), (3, 0), (3, 1)],
    [(1, 3), (2, 2), (3, 1), (6, 0)],
];

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    c: [Rational; 8],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            c: Default::default(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut s = Self::zero();
        s.c[0] = q;
        s
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    pub fn i() -> Self {
        Self::basis(1)
    }

    /// Basis element by storage index (see module docs).
    pub fn basis(index: usize) -> Self {
        let mut s = Self::zero();
        s.c[index] = Rational::one();
        s
    }

    pub fn from_coords(c: [Rational; 8]) -> Self {
        Scalar { c }
    }

    pub fn coords(&self) -> &[Rational; 8] {
        &self.c
    }

    pub fn coord(&self, index: usize) -> &Rational {
        &self.c[index]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Zero::is_zero)
    }

    /// True when all imaginary coordinates vanish.
    pub fn is_real(&self) -> bool {
        (0..4).all(|s| self.c[2 * s + 1].is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.c[0])
    }

    /// Number of nonzero coordinates.
    pub fn support_len(&self) -> usize {
        self.c.iter().filter(|q| !q.is_zero()).count()
    }

    /// Complex conjugation: fixes the surds and negates `i`.
    pub fn conj(&self) -> Self {
        let mut out = self.clone();
        for s in 0..4 {
            out.c[2 * s + 1] = -&out.c[2 * s + 1];
        }
        out
    }

    /// Real part `(s + conj s) / 2`.
    pub fn re(&self) -> Self {
        let mut out = self.clone();
        for s in 0..4 {
            out.c[2 * s + 1] = Rational::zero();
        }
        out
    }

    /// Imaginary part `(s - conj s) / 2i`, a real scalar.
    pub fn im(&self) -> Self {
        let mut out = Self::zero();
        for s in 0..4 {
            out.c[2 * s] = self.c[2 * s + 1].clone();
        }
        out
    }

    fn sigma(&self, mask: impl Fn(usize) -> bool) -> Self {
        let mut out = self.clone();
        for (k, q) in out.c.iter_mut().enumerate() {
            if mask(k) {
                *q = -&*q;
            }
        }
        out
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Scalar {
            c: std::array::from_fn(|k| &self.c[k] * q),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(q.recip()));
        }
        // Multiply through by Galois conjugates until the norm is rational.
        let s2 = self.sigma(|k| matches!(k >> 1, 1 | 3));
        let t1 = self * &s2;
        let t1c = t1.sigma(|k| matches!(k >> 1, 2 | 3));
        let t2 = &t1 * &t1c;
        let t2c = t2.conj();
        let norm = &t2 * &t2c;
        let n = norm
            .as_rational()
            .expect("field norm is rational")
            .clone();
        Ok((&(&s2 * &t1c) * &t2c).scale(&n.recip()))
    }

    /// Exact sign of a real scalar.
    pub fn sign(&self) -> Result<Sign> {
        if !self.is_real() {
            return Err(Error::NonRealSign);
        }
        if self.is_zero() {
            return Ok(Sign::Zero);
        }
        let nonzero: Vec<usize> = (0..4).filter(|s| !self.c[2 * s].is_zero()).collect();
        if nonzero.len() == 1 {
            return Ok(sign_of(&self.c[2 * nonzero[0]]));
        }
        // Refine rational enclosures of the surds until the value's interval
        // excludes zero. A nonzero element of the field is never zero, so
        // this terminates.
        let mut bits = 16u32;
        loop {
            let (lo, hi) = self.real_enclosure(bits);
            if lo.is_positive() {
                return Ok(Sign::Positive);
            }
            if hi.is_negative() {
                return Ok(Sign::Negative);
            }
            bits *= 2;
        }
    }

    fn real_enclosure(&self, bits: u32) -> (Rational, Rational) {
        let mut lo = self.c[0].clone();
        let mut hi = self.c[0].clone();
        for (s, n) in [(1usize, 2u64), (2, 3), (3, 6)] {
            let coeff = &self.c[2 * s];
            if coeff.is_zero() {
                continue;
            }
            let (rlo, rhi) = sqrt_enclosure(n, bits);
            if coeff.is_positive() {
                lo += coeff * &rlo;
                hi += coeff * &rhi;
            } else {
                lo += coeff * &rhi;
                hi += coeff * &rlo;
            }
        }
        (lo, hi)
    }

    /// Comparison of two real scalars.
    pub fn cmp_real(&self, other: &Scalar) -> Result<std::cmp::Ordering> {
        Ok(match (self - other).sign()? {
            Sign::Negative => std::cmp::Ordering::Less,
            Sign::Zero => std::cmp::Ordering::Equal,
            Sign::Positive => std::cmp::Ordering::Greater,
        })
    }

    /// Square root of a nonnegative rational, if it lies in the field.
    pub fn sqrt_rational(q: &Rational) -> Option<Scalar> {
        if q.is_negative() {
            return None;
        }
        if q.is_zero() {
            return Some(Self::zero());
        }
        // sqrt(n/d) = sqrt(n*d)/d; write n*d = m^2 * f with f squarefree.
        let prod = q.numer() * q.denom();
        let (square, free) = split_square(&prod);
        let surd = match free.to_u64()? {
            1 => 0,
            2 => 1,
            3 => 2,
            6 => 3,
            _ => return None,
        };
        let mut s = Self::zero();
        s.c[2 * surd] = Rational::new(square, q.denom().clone());
        Some(s)
    }

    pub fn to_complex(&self) -> Complex64 {
        let surds = [1.0, 2f64.sqrt(), 3f64.sqrt(), 6f64.sqrt()];
        let mut re = 0.0;
        let mut im = 0.0;
        for s in 0..4 {
            re += self.c[2 * s].to_f64().unwrap_or(f64::NAN) * surds[s];
            im += self.c[2 * s + 1].to_f64().unwrap_or(f64::NAN) * surds[s];
        }
        Complex64::new(re, im)
    }

    /// True when the rendered form needs parentheses inside a product.
    pub fn is_compound(&self) -> bool {
        self.support_len() > 1
    }

    /// Parses the `"p/q"` coordinate strings used in the JSON encoding.
    pub fn parse_rational(text: &str) -> Result<Rational> {
        let text = text.trim();
        let parse_int = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Invalid(format!("bad rational {text:?}")))
        };
        match text.split_once('/') {
            Some((n, d)) => {
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Rational::new(parse_int(n)?, d))
            }
            None => Ok(Rational::from_integer(parse_int(text)?)),
        }
    }
}

fn sign_of(q: &Rational) -> Sign {
    if q.is_positive() {
        Sign::Positive
    } else if q.is_negative() {
        Sign::Negative
    } else {
        Sign::Zero
    }
}

/// Rational bounds `lo <= sqrt(n) <= hi` with `hi - lo = 2^-bits`.
fn sqrt_enclosure(n: u64, bits: u32) -> (Rational, Rational) {
    let scale = BigInt::one() << bits;
    let floor = (BigInt::from(n) * &scale * &scale).sqrt();
    let lo = Rational::new(floor.clone(), scale.clone());
    let hi = Rational::new(floor + 1, scale);
    (lo, hi)
}

/// Writes `n = m^2 * f` with `f` squarefree, by trial division.
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    let mut rest = n.abs();
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        for _ in 0..e / 2 {
            square *= &p;
        }
        if e % 2 == 1 {
            free *= &p;
        }
        p += 1;
    }
    free *= rest;
    (square, free)
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            c: std::array::from_fn(|k| &self.c[k] + &rhs.c[k]),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            c: std::array::from_fn(|k| &self.c[k] - &rhs.c[k]),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if let (Some(a), Some(b)) = (self.as_rational(), rhs.as_rational()) {
            return Scalar::from_rational(a * b);
        }
        let mut out = Scalar::zero();
        for a in 0..8 {
            if self.c[a].is_zero() {
                continue;
            }
            for b in 0..8 {
                if rhs.c[b].is_zero() {
                    continue;
                }
                let (factor, surd) = SURD_TABLE[a >> 1][b >> 1];
                let both_imag = (a & 1) == 1 && (b & 1) == 1;
                let sign = if both_imag { -factor } else { factor };
                let idx = 2 * surd + ((a & 1) ^ (b & 1));
                out.c[idx] += &self.c[a] * &rhs.c[b] * int(sign);
            }
        }
        out
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::inv`] for a checked inverse.
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            c: std::array::from_fn(|k| -&self.c[k]),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for k in 0..8 {
            if !rhs.c[k].is_zero() {
                self.c[k] += &rhs.c[k];
            }
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for k in 0..8 {
            if !rhs.c[k].is_zero() {
                self.c[k] -= &rhs.c[k];
            }
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

/// Renders in the expression grammar: `3/2`, `-i`, `1 + 2*sqrt2 - 1/2*i*sqrt6`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in 0..8 {
            let q = &self.c[k];
            if q.is_zero() {
                continue;
            }
            let mut basis = String::new();
            if k & 1 == 1 {
                basis.push('i');
            }
            if k >> 1 > 0 {
                if !basis.is_empty() {
                    basis.push('*');
                }
                basis.push_str(SURD_NAMES[k >> 1]);
            }
            let mag = q.abs();
            let body = if basis.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                basis
            } else {
                format!("{mag}*{basis}")
            };
            match (first, q.is_negative()) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.support_len()))?;
        for (k, q) in self.c.iter().enumerate() {
            if !q.is_zero() {
                map.serialize_entry(COORD_KEYS[k], &q.to_string())?;
            }
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ScalarVisitor;
        impl<'de> Visitor<'de> for ScalarVisitor {
            type Value = Scalar;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "an object with keys among {COORD_KEYS:?}")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<Scalar, A::Error> {
                let mut s = Scalar::zero();
                while let Some((key, value)) = map.next_entry::<String, String>()? {
                    let idx = COORD_KEYS
                        .iter()
                        .position(|k| *k == key)
                        .ok_or_else(|| de::Error::unknown_field(&key, &COORD_KEYS))?;
                    s.c[idx] = Scalar::parse_rational(&value).map_err(de::Error::custom)?;
                }
                Ok(s)
            }
        }
        deserializer.deserialize_map(ScalarVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r2() -> Scalar {
        Scalar::basis(2)
    }

    #[test]
    fn sign_examples() {
        assert_eq!(Scalar::zero().sign().unwrap(), Sign::Zero);
        let s = &(&Scalar::one() - &(&r2() * &Scalar::zero())) + &Scalar::frac(3, 2);
        assert_eq!(s, Scalar::frac(5, 2));
        assert_eq!(s.sign().unwrap(), Sign::Positive);
        let r6_minus_2 = &Scalar::basis(6) - &Scalar::from_int(2);
        assert_eq!(r6_minus_2.sign().unwrap(), Sign::Positive);
        assert_eq!((-r6_minus_2).sign().unwrap(), Sign::Negative);
        assert_eq!(Scalar::i().sign(), Err(Error::NonRealSign));
    }

    #[test]
    fn close_surd_combination() {
        // 7 - 5*sqrt2 ~ -0.0711 and 99 - 70*sqrt2 ~ 0.00714
        let a = &Scalar::from_int(7) - &r2().scale(&int(5));
        let b = &Scalar::from_int(99) - &r2().scale(&int(70));
        assert_eq!(a.sign().unwrap(), Sign::Negative);
        assert_eq!(b.sign().unwrap(), Sign::Positive);
        // sqrt2 + sqrt3 vs sqrt6 + ... : (sqrt2+sqrt3)^2 = 5 + 2 sqrt6
        let s = &r2() + &Scalar::basis(4);
        assert_eq!(&s * &s, &Scalar::from_int(5) + &Scalar::basis(6).scale(&int(2)));
    }

    #[test]
    fn surd_products() {
        assert_eq!(&r2() * &r2(), Scalar::from_int(2));
        assert_eq!(&Scalar::basis(4) * &Scalar::basis(6), r2().scale(&int(3)));
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));
        assert_eq!(&Scalar::basis(3) * &Scalar::basis(3), Scalar::from_int(-2));
    }

    #[test]
    fn inverse_of_mixed_element() {
        let s = Scalar::from_coords(std::array::from_fn(|k| rat(k as i64 - 3, 2)));
        let inv = s.inv().unwrap();
        assert!((&s * &inv).is_one());
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn sqrt_rational_in_tower() {
        assert_eq!(Scalar::sqrt_rational(&int(2)), Some(r2()));
        assert_eq!(Scalar::sqrt_rational(&rat(2, 3)), Some(Scalar::basis(6).scale(&rat(1, 3))));
        assert_eq!(Scalar::sqrt_rational(&int(12)), Some(Scalar::basis(4).scale(&int(2))));
        assert_eq!(Scalar::sqrt_rational(&int(5)), None);
        let r = Scalar::sqrt_rational(&rat(9, 4)).unwrap();
        assert_eq!(r, Scalar::frac(3, 2));
    }

    #[test]
    fn json_omits_zero_coordinates() {
        let s = &Scalar::frac(1, 2) + &Scalar::basis(7).scale(&int(-3));
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"1":"1/2","ir6":"-3"}"#);
        let back: Scalar = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::frac(-3, 2).to_string(), "-3/2");
        let s = &(&Scalar::one() - &Scalar::i()) + &Scalar::basis(3).scale(&rat(1, 2));
        assert_eq!(s.to_string(), "1 - i + 1/2*i*sqrt2");
    }
}
