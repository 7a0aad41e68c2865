//! Sparse multivariate polynomials over [`Scalar`].

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{Rational, Scalar};
use crate::error::{Error, Result};

/// Exponent vector ordered graded-lexicographically (`x1 > x2 > ...`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, j: usize) -> Self {
        let mut e = vec![0; nvars];
        e[j] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Scalar::one())
    }

    pub fn var(nvars: usize, j: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(nvars, j), Scalar::one());
        p
    }

    /// The affine form `sum_j coeffs[j] x_j + constant`.
    pub fn linear(coeffs: &[Scalar], constant: Scalar) -> Self {
        let n = coeffs.len();
        let mut p = Self::constant(n, constant);
        for (j, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(n, j), c.clone());
        }
        p
    }

    pub fn linear_rational(coeffs: &[Rational], constant: Rational) -> Self {
        let cs: Vec<Scalar> = coeffs.iter().cloned().map(Scalar::from).collect();
        Self::linear(&cs, constant.into())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_term(&self) -> Scalar {
        self.terms
            .get(&Monomial::one(self.nvars))
            .cloned()
            .unwrap_or_default()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Total degree; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        debug_assert_eq!(m.0.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Polynomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Self::one(self.nvars);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn conj(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.conj())).collect(),
        }
    }

    pub fn has_real_coefficients(&self) -> bool {
        self.terms.values().all(Scalar::is_real)
    }

    /// Evaluation at a point given by the values of the variables.
    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut powers: Vec<Vec<Scalar>> = vec![vec![Scalar::one()]; self.nvars];
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (j, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[j].len() <= e as usize {
                    let next = powers[j].last().unwrap() * &point[j];
                    powers[j].push(next);
                }
                v *= &powers[j][e as usize];
            }
            total += &v;
        }
        Ok(total)
    }

    /// Ring homomorphism sending `x_j` to `images[j]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let target = images.first().map_or(self.nvars, Polynomial::nvars);
        let mut cache: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (j, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = cache
                    .entry((j, e))
                    .or_insert_with(|| images[j].pow(e))
                    .clone();
                term = &term * &p;
            }
            out = &out + &term;
        }
        out
    }

    /// Linear change of variables `x_j -> sum_i matrix[i][j] x_i`.
    pub fn apply_linear(&self, matrix: &[Vec<Rational>]) -> Polynomial {
        let n = self.nvars;
        let images: Vec<Polynomial> = (0..n)
            .map(|j| {
                let col: Vec<Rational> = (0..n).map(|i| matrix[i][j].clone()).collect();
                Polynomial::linear_rational(&col, Rational::default())
            })
            .collect();
        self.substitute(&images)
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lead_m, lead_c) = divisor.leading_term()?;
        let lead_inv = lead_c.inv().ok()?;
        let mut rest = self.clone();
        let mut quotient = Polynomial::zero(self.nvars);
        while let Some((m, c)) = rest.leading_term() {
            if !lead_m.divides(m) {
                return None;
            }
            let qm = lead_m.quotient_of(m);
            let qc = c * &lead_inv;
            rest = &rest - &divisor.mul_monomial(&qm, &qc);
            quotient.add_term(qm, qc);
        }
        Some(quotient)
    }

    /// Twisted divided difference `(a - s(a)) / alpha` computed through the
    /// rule `D(x_j m) = (x_j, coroot) m + s(x_j) D(m)`. `reflected` holds
    /// the images `s(x_j)` and `coroot[j] = (x_j, alpha^vee)`.
    pub fn divided_difference(&self, reflected: &[Polynomial], coroot: &[Scalar]) -> Polynomial {
        let mut memo: HashMap<Monomial, Polynomial> = HashMap::new();
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let d = monomial_difference(m, reflected, coroot, &mut memo);
            out.add_scaled(&d, c);
        }
        out
    }

    fn fmt_coefficient_term(m: &Monomial, c: &Scalar, first: bool, out: &mut String) {
        let vars: Vec<String> = m
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, &e)| {
                if e == 1 {
                    format!("x{}", j + 1)
                } else {
                    format!("x{}^{}", j + 1, e)
                }
            })
            .collect();
        let mono = vars.join("*");
        let single_negative = c.support_len() == 1
            && c.coords().iter().any(|q| q < &Rational::default());
        let (neg, mag) = if single_negative {
            (true, -c)
        } else {
            (false, c.clone())
        };
        let coeff = if mag.is_compound() {
            format!("({mag})")
        } else {
            mag.to_string()
        };
        let body = if mono.is_empty() {
            coeff
        } else if mag.is_one() {
            mono
        } else {
            format!("{coeff}*{mono}")
        };
        match (first, neg) {
            (true, true) => out.push_str(&format!("-{body}")),
            (true, false) => out.push_str(&body),
            (false, true) => out.push_str(&format!(" - {body}")),
            (false, false) => out.push_str(&format!(" + {body}")),
        }
    }
}

fn monomial_difference(
    m: &Monomial,
    reflected: &[Polynomial],
    coroot: &[Scalar],
    memo: &mut HashMap<Monomial, Polynomial>,
) -> Polynomial {
    if let Some(d) = memo.get(m) {
        return d.clone();
    }
    let n = m.0.len();
    let Some(j) = m.0.iter().position(|&e| e > 0) else {
        return Polynomial::zero(n);
    };
    let mut rest = m.clone();
    rest.0[j] -= 1;
    let mut d = Polynomial::zero(n);
    d.add_term(rest.clone(), coroot[j].clone());
    let inner = monomial_difference(&rest, reflected, coroot, memo);
    if !inner.is_zero() {
        d = &d + &(&reflected[j] * &inner);
    }
    memo.insert(m.clone(), d.clone());
    d
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&Scalar::from_int(-1))
    }
}

/// Renders terms in decreasing monomial order, e.g. `x1^2 + 2*x1*x2 - 3/2`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            Polynomial::fmt_coefficient_term(m, c, i == 0, &mut out);
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::rat;

    fn x(n: usize, j: usize) -> Polynomial {
        Polynomial::var(n, j)
    }

    #[test]
    fn evaluation_examples() {
        let seven = Polynomial::constant(2, Scalar::from_int(7));
        assert_eq!(seven.eval(&[Scalar::frac(1, 3), Scalar::i()]).unwrap(), Scalar::from_int(7));
        let prod = &x(2, 0) * &x(2, 1);
        assert_eq!(prod.eval(&[2.into(), 3.into()]).unwrap(), Scalar::from_int(6));
        let circle = &x(2, 0).pow(2) + &x(2, 1).pow(2);
        assert_eq!(
            circle.eval(&[Scalar::frac(3, 5), Scalar::frac(4, 5)]).unwrap(),
            Scalar::one()
        );
        assert!(matches!(
            prod.eval(&[Scalar::one()]),
            Err(Error::Dimension { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn exact_division() {
        let a = &x(2, 0) + &x(2, 1);
        let b = &(&x(2, 0) - &Polynomial::constant(2, Scalar::from_int(3))) * &a;
        assert_eq!(b.div_exact(&a), Some(&x(2, 0) - &Polynomial::constant(2, 3.into())));
        assert_eq!((&b + &Polynomial::one(2)).div_exact(&a), None);
    }

    #[test]
    fn divided_difference_rank_one() {
        // s(x) = -x, (x, alpha^vee) = 2: D(x^3) = (x^3 + x^3)/x = 2x^2
        let refl = vec![-&x(1, 0)];
        let d = x(1, 0).pow(3).divided_difference(&refl, &[Scalar::from_int(2)]);
        assert_eq!(d, x(1, 0).pow(2).scale(&2.into()));
    }

    #[test]
    fn display_is_grlex_descending() {
        let p = &(&x(2, 0).pow(2) + &(&x(2, 0) * &x(2, 1)).scale(&2.into()))
            - &Polynomial::constant(2, Scalar::from_rational(rat(3, 2)));
        assert_eq!(p.to_string(), "x1^2 + 2*x1*x2 - 3/2");
        let q = x(1, 0).scale(&(&Scalar::one() + &Scalar::i()));
        assert_eq!(q.to_string(), "(1 + i)*x1");
    }
}
