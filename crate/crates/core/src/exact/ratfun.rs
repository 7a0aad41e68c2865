//! Rational functions whose denominators are products of affine linear forms.
//!
//! Every denominator arising from the intertwining elements is a product of
//! forms such as `alpha - k` or `alpha + k`, so the denominator is stored as a
//! multiset of normalized affine forms and reduction is done by trial exact
//! division of the numerator.

use std::collections::BTreeMap;
use std::fmt;

use super::poly::Polynomial;
use super::scalar::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalFunction {
    num: Polynomial,
    /// Affine forms with leading coefficient 1, with multiplicities.
    den: BTreeMap<Polynomial, u32>,
}

/// Splits a nonconstant affine form into `(c, L)` with `form = c * L` and `L`
/// having leading coefficient one.
fn normalize_affine(form: &Polynomial) -> Result<(Scalar, Polynomial)> {
    if form.degree() != 1 {
        return Err(Error::Invalid(format!(
            "denominator factor {form} is not an affine linear form"
        )));
    }
    let (_, lead) = form.leading_term().expect("nonzero form");
    let lead = lead.clone();
    let inv = lead.inv()?;
    Ok((lead, form.scale(&inv)))
}

impl RationalFunction {
    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(Polynomial::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(Polynomial::one(nvars))
    }

    pub fn from_poly(num: Polynomial) -> Self {
        RationalFunction {
            num,
            den: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Self::from_poly(Polynomial::constant(nvars, c))
    }

    /// `1 / form` for a nonconstant affine form.
    pub fn inv_affine(form: &Polynomial) -> Result<Self> {
        let (c, l) = normalize_affine(form)?;
        let n = form.nvars();
        let mut den = BTreeMap::new();
        den.insert(l, 1);
        Ok(RationalFunction {
            num: Polynomial::constant(n, c.inv()?),
            den,
        })
    }

    /// `num / form` reduced.
    pub fn over_affine(num: Polynomial, form: &Polynomial) -> Result<Self> {
        Ok(Self::from_poly(num).mul(&Self::inv_affine(form)?))
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator_factors(&self) -> impl Iterator<Item = (&Polynomial, u32)> {
        self.den.iter().map(|(l, &m)| (l, m))
    }

    pub fn denominator(&self) -> Polynomial {
        let mut d = Polynomial::one(self.nvars());
        for (l, &m) in &self.den {
            d = &d * &l.pow(m);
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.is_polynomial().then_some(&self.num)
    }

    fn reduce(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let factors: Vec<Polynomial> = self.den.keys().cloned().collect();
        for l in factors {
            let mult = self.den.get_mut(&l).expect("factor present");
            while *mult > 0 {
                match self.num.div_exact(&l) {
                    Some(q) => {
                        self.num = q;
                        *mult -= 1;
                    }
                    None => break,
                }
            }
            if *mult == 0 {
                self.den.remove(&l);
            }
        }
        self
    }

    fn with_denominator(&self, den: &BTreeMap<Polynomial, u32>) -> Polynomial {
        let mut num = self.num.clone();
        for (l, &m) in den {
            let have = self.den.get(l).copied().unwrap_or(0);
            if m > have {
                num = &num * &l.pow(m - have);
            }
        }
        num
    }

    pub fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let mut den = self.den.clone();
        for (l, &m) in &other.den {
            let e = den.entry(l.clone()).or_insert(0);
            *e = (*e).max(m);
        }
        let num = &self.with_denominator(&den) + &other.with_denominator(&den);
        RationalFunction { num, den }.reduce()
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars());
        }
        let mut den = self.den.clone();
        for (l, &m) in &other.den {
            *den.entry(l.clone()).or_insert(0) += m;
        }
        RationalFunction {
            num: &self.num * &other.num,
            den,
        }
        .reduce()
    }

    pub fn mul_poly(&self, p: &Polynomial) -> Self {
        self.mul(&Self::from_poly(p.clone()))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars());
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Multiplicative inverse; only defined when the numerator is a product
    /// of a constant and affine forms (always the case for the factors used
    /// here). Returns an error otherwise.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.num.is_constant() {
            let c = self.num.constant_term().inv()?;
            let mut num = Polynomial::constant(self.nvars(), c);
            for (l, &m) in &self.den {
                num = &num * &l.pow(m);
            }
            return Ok(Self::from_poly(num));
        }
        if self.num.degree() == 1 {
            let mut out = Self::inv_affine(&self.num)?;
            for (l, &m) in &self.den {
                out = out.mul_poly(&l.pow(m));
            }
            return Ok(out);
        }
        Err(Error::Capability(
            "inverse of a numerator that is not an affine form".into(),
        ))
    }

    /// Ring homomorphism induced by `x_j -> images[j]` with affine images.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Self> {
        let mut out = Self::from_poly(self.num.substitute(images));
        for (l, &m) in &self.den {
            let image = l.substitute(images);
            let inv = Self::inv_affine(&image)?;
            for _ in 0..m {
                out = out.mul(&inv);
            }
        }
        Ok(out)
    }

    pub fn apply_linear(&self, matrix: &[Vec<super::scalar::Rational>]) -> Self {
        let n = self.nvars();
        let images: Vec<Polynomial> = (0..n)
            .map(|j| {
                let col: Vec<_> = (0..n).map(|i| matrix[i][j].clone()).collect();
                Polynomial::linear_rational(&col, Default::default())
            })
            .collect();
        self.substitute(&images)
            .expect("invertible linear change keeps factors affine")
    }

    pub fn conj(&self) -> Self {
        let mut den = BTreeMap::new();
        for (l, &m) in &self.den {
            den.insert(l.conj(), m);
        }
        RationalFunction {
            num: self.num.conj(),
            den,
        }
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        let mut d = Scalar::one();
        for (l, &m) in &self.den {
            let v = l.eval(point)?;
            if v.is_zero() {
                return Err(Error::Pole {
                    factor: l.to_string(),
                });
            }
            for _ in 0..m {
                d *= &v;
            }
        }
        Ok(&self.num.eval(point)? * &d.inv()?)
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let factors: Vec<String> = self
            .den
            .iter()
            .map(|(l, &m)| {
                if m == 1 {
                    format!("({l})")
                } else {
                    format!("({l})^{m}")
                }
            })
            .collect();
        write!(f, "({}) / ({})", self.num, factors.join("*"))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}
