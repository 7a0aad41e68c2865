//! Normal-form arithmetic in the graded affine Hecke algebra.
//!
//! Elements are stored as `sum_w t_w * a_w` with every `t_w` on the left.
//! The only relation used for multiplication is the cross relation
//! `a * t_s = t_s * s(a) + k_s * D_s(a)`, where `D_s(a) = (a - s(a)) / alpha_s`.

mod coeff;
mod intertwiner;
mod ops;
pub mod random;

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact::{Polynomial, Rational, RationalFunction, Scalar};
use crate::rootdata::RootSystem;

pub use coeff::Coeff;

/// Element of H with polynomial coefficients.
pub type HeckeElement = HeckeElem<Polynomial>;
/// Element of the localization of H with rational-function coefficients.
pub type LocalizedHeckeElement = HeckeElem<RationalFunction>;

/// The algebra H attached to a root system and parameters, with the data
/// needed for normal ordering precomputed.
#[derive(Debug)]
pub struct HeckeAlgebra {
    pub rs: RootSystem,
    /// `simple_images[i][j] = s_i(x_j)`.
    simple_images: Vec<Vec<Polynomial>>,
    /// `simple_coroots[i][j] = (x_j, alpha_i^vee)`.
    simple_coroots: Vec<Vec<Scalar>>,
    simple_alpha: Vec<Polynomial>,
    k_simple: Vec<Scalar>,
    /// `delta(x_j) = -w0(x_j)`.
    delta_images: Vec<Polynomial>,
}

impl HeckeAlgebra {
    pub fn new(rs: RootSystem) -> Arc<HeckeAlgebra> {
        let n = rs.dim;
        let simple_images = (0..rs.rank())
            .map(|i| rs.variable_images(rs.weyl.simple(i)))
            .collect();
        let simple_coroots = rs
            .simple_coroots
            .iter()
            .map(|c| c.iter().cloned().map(Scalar::from).collect())
            .collect();
        let simple_alpha = rs
            .simple_roots
            .iter()
            .map(|a| Polynomial::linear_rational(a, Rational::default()))
            .collect();
        let k_simple = rs.k_simple.iter().cloned().map(Scalar::from).collect();
        let delta_images = rs
            .variable_images(rs.weyl.longest())
            .iter()
            .map(|p| -p)
            .collect();
        debug_assert_eq!(n, rs.dim);
        Arc::new(HeckeAlgebra {
            rs,
            simple_images,
            simple_coroots,
            simple_alpha,
            k_simple,
            delta_images,
        })
    }

    pub fn from_label(label: &str, k: &[Rational]) -> Result<Arc<HeckeAlgebra>> {
        Ok(Self::new(RootSystem::from_label(label, k)?))
    }

    pub fn nvars(&self) -> usize {
        self.rs.dim
    }

    pub fn order(&self) -> usize {
        self.rs.weyl.order()
    }

    pub fn k_simple(&self, i: usize) -> &Scalar {
        &self.k_simple[i]
    }

    pub fn k_root(&self, b: usize) -> Scalar {
        self.rs.k_root[b].clone().into()
    }

    pub fn simple_root_poly(&self, i: usize) -> &Polynomial {
        &self.simple_alpha[i]
    }

    pub fn root_poly(&self, b: usize) -> Polynomial {
        Polynomial::linear_rational(&self.rs.positive_roots[b], Rational::default())
    }

    /// The linear polynomial attached to a vector of V.
    pub fn vector_poly(&self, v: &[Rational]) -> Polynomial {
        Polynomial::linear_rational(v, Rational::default())
    }

    pub fn simple_images(&self, i: usize) -> &[Polynomial] {
        &self.simple_images[i]
    }

    pub fn delta_images(&self) -> &[Polynomial] {
        &self.delta_images
    }

    /// `D_i(a) = (a - s_i(a)) / alpha_i` on polynomials.
    pub fn difference(&self, i: usize, a: &Polynomial) -> Polynomial {
        a.divided_difference(&self.simple_images[i], &self.simple_coroots[i])
    }

    /// Divided difference along an arbitrary positive root.
    pub fn difference_root(&self, b: usize, a: &Polynomial) -> Polynomial {
        let images = self.rs.variable_images(self.rs.reflections[b]);
        let coroot: Vec<Scalar> = self.rs.positive_coroots[b]
            .iter()
            .cloned()
            .map(Scalar::from)
            .collect();
        a.divided_difference(&images, &coroot)
    }

    /// `w(a)` for a coefficient.
    pub fn act<C: Coeff>(&self, w: usize, a: &C) -> C {
        if w == 0 {
            return a.clone();
        }
        a.substitute_linear(&self.rs.variable_images(w))
    }
}

/// `sum_w t_w * a_w` with coefficients of type `C`.
#[derive(Clone)]
pub struct HeckeElem<C: Coeff> {
    alg: Arc<HeckeAlgebra>,
    terms: BTreeMap<usize, C>,
}

impl<C: Coeff> PartialEq for HeckeElem<C> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg) && self.terms == other.terms
    }
}

impl<C: Coeff> HeckeElem<C> {
    pub fn zero(alg: &Arc<HeckeAlgebra>) -> Self {
        HeckeElem {
            alg: alg.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alg: &Arc<HeckeAlgebra>) -> Self {
        Self::from_coeff(alg, C::one(alg.nvars()))
    }

    pub fn from_coeff(alg: &Arc<HeckeAlgebra>, a: C) -> Self {
        Self::term(alg, 0, a)
    }

    pub fn from_poly(alg: &Arc<HeckeAlgebra>, a: Polynomial) -> Self {
        Self::from_coeff(alg, C::from_poly(a))
    }

    pub fn scalar(alg: &Arc<HeckeAlgebra>, c: Scalar) -> Self {
        Self::from_poly(alg, Polynomial::constant(alg.nvars(), c))
    }

    /// The variable `x_j`.
    pub fn var(alg: &Arc<HeckeAlgebra>, j: usize) -> Self {
        Self::from_poly(alg, Polynomial::var(alg.nvars(), j))
    }

    /// The element of V with the given coordinates.
    pub fn vector(alg: &Arc<HeckeAlgebra>, v: &[Rational]) -> Self {
        Self::from_poly(alg, alg.vector_poly(v))
    }

    /// `t_w * a`.
    pub fn term(alg: &Arc<HeckeAlgebra>, w: usize, a: C) -> Self {
        let mut e = Self::zero(alg);
        e.add_term(w, a);
        e
    }

    pub fn t(alg: &Arc<HeckeAlgebra>, w: usize) -> Self {
        Self::term(alg, w, C::one(alg.nvars()))
    }

    pub fn t_word(alg: &Arc<HeckeAlgebra>, word: &[usize]) -> Self {
        Self::t(alg, alg.rs.weyl.from_word(word))
    }

    pub fn algebra(&self) -> &Arc<HeckeAlgebra> {
        &self.alg
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &C)> {
        self.terms.iter().map(|(&w, c)| (w, c))
    }

    pub fn coefficient(&self, w: usize) -> C {
        self.terms
            .get(&w)
            .cloned()
            .unwrap_or_else(|| C::zero(self.alg.nvars()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, w: usize, a: C) {
        if a.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(c) => {
                *c = c.plus(&a);
                if c.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, a);
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.alg, &other.alg) {
            Ok(())
        } else {
            Err(Error::MismatchedSystems)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (&w, c) in &other.terms {
            out.add_term(w, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero(&self.alg);
        for (&w, c) in &self.terms {
            out.add_term(w, c.scaled(s));
        }
        out
    }

    /// `self * a` for a coefficient `a` (no reordering needed).
    pub fn mul_coeff(&self, a: &C) -> Self {
        let mut out = Self::zero(&self.alg);
        for (&w, c) in &self.terms {
            out.add_term(w, c.times(a));
        }
        out
    }

    /// `t_w * self`.
    pub fn lmul_t(&self, w: usize) -> Self {
        let weyl = &self.alg.rs.weyl;
        let mut out = Self::zero(&self.alg);
        for (&z, c) in &self.terms {
            out.add_term(weyl.mul(w, z), c.clone());
        }
        out
    }

    /// `self * t_{s_i}` by the cross relation.
    pub fn rmul_simple(&self, i: usize) -> Self {
        let alg = &self.alg;
        let weyl = &alg.rs.weyl;
        let images = &alg.simple_images[i];
        let mut out = Self::zero(alg);
        for (&z, c) in &self.terms {
            out.add_term(weyl.rmul_simple(z, i), c.substitute_linear(images));
            let d = c.difference(alg, i);
            if !d.is_zero() {
                out.add_term(z, d.scaled(&alg.k_simple[i]));
            }
        }
        out
    }

    /// `self * t_w`.
    pub fn rmul_t(&self, w: usize) -> Self {
        let mut out = self.clone();
        for &i in self.alg.rs.weyl.word(w) {
            out = out.rmul_simple(i);
        }
        out
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let weyl = &self.alg.rs.weyl;
        let mut cache: HashMap<usize, Self> = HashMap::new();
        cache.insert(0, self.clone());
        let mut out = Self::zero(&self.alg);
        for (&y, b) in &other.terms {
            let mut chain = Vec::new();
            let mut cur = y;
            while !cache.contains_key(&cur) {
                chain.push(cur);
                let last = *weyl.word(cur).last().expect("non-identity");
                cur = weyl.rmul_simple(cur, last);
            }
            while let Some(z) = chain.pop() {
                let last = *weyl.word(z).last().expect("non-identity");
                let parent = weyl.rmul_simple(z, last);
                let next = cache[&parent].rmul_simple(last);
                cache.insert(z, next);
            }
            for (w, c) in cache[&y].terms() {
                out.add_term(w, c.times(b));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(&self.alg);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Commutator `[self, other]`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Coefficient of `t_identity`.
    pub fn epsilon_a(&self) -> C {
        self.coefficient(0)
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> HeckeElem<D> {
        let mut out = HeckeElem::zero(&self.alg);
        for (&w, c) in &self.terms {
            out.add_term(w, f(c));
        }
        out
    }

    /// Coefficients evaluated at a point of V-dual, indexed by W.
    pub fn eval_coeffs(&self, nu: &[Scalar]) -> Result<Vec<Scalar>> {
        let mut v = vec![Scalar::zero(); self.alg.order()];
        for (&w, c) in &self.terms {
            v[w] = c.eval(nu)?;
        }
        Ok(v)
    }

    /// True when every coefficient is constant.
    pub fn in_group_algebra(&self) -> bool {
        self.terms.values().all(Coeff::is_constant)
    }

    /// Maximum coefficient degree.
    pub fn filtration_degree(&self) -> u32 {
        self.terms.values().map(Coeff::degree).max().unwrap_or(0)
    }

    /// Rendering with terms of longer `w` first, shortlex within a length.
    pub fn render(&self) -> String {
        let weyl = &self.alg.rs.weyl;
        let mut keys: Vec<usize> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&w| (std::cmp::Reverse(weyl.length(w)), w));
        let mut parts: Vec<String> = Vec::new();
        for w in keys {
            let c = &self.terms[&w];
            if w == 0 {
                parts.push(c.to_string());
                continue;
            }
            let word: Vec<String> = weyl.word(w).iter().map(|i| format!("s{}", i + 1)).collect();
            let t = format!("t[{}]", word.join(" "));
            if c.is_one() {
                parts.push(t);
            } else {
                parts.push(format!("{t}*({c})"));
            }
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(p);
                }
            }
        }
        out
    }
}

impl HeckeElement {
    /// View as an element of the localization.
    pub fn localize(&self) -> LocalizedHeckeElement {
        self.map_coeffs(|p| RationalFunction::from_poly(p.clone()))
    }
}

impl LocalizedHeckeElement {
    /// Polynomial element if every coefficient has trivial denominator.
    pub fn to_polynomial(&self) -> Option<HeckeElement> {
        let mut out = HeckeElem::zero(&self.alg);
        for (&w, c) in &self.terms {
            out.add_term(w, c.as_polynomial()?.clone());
        }
        Some(out)
    }
}

impl<C: Coeff> fmt::Display for HeckeElem<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<C: Coeff> fmt::Debug for HeckeElem<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElem[{}]({})", self.alg.rs.label, self.render())
    }
}

impl<'a, C: Coeff> std::ops::Add<&'a HeckeElem<C>> for &'a HeckeElem<C> {
    type Output = HeckeElem<C>;
    fn add(self, rhs: &HeckeElem<C>) -> HeckeElem<C> {
        self.try_add(rhs).expect("same algebra")
    }
}

impl<'a, C: Coeff> std::ops::Sub<&'a HeckeElem<C>> for &'a HeckeElem<C> {
    type Output = HeckeElem<C>;
    fn sub(self, rhs: &HeckeElem<C>) -> HeckeElem<C> {
        self.try_sub(rhs).expect("same algebra")
    }
}

impl<'a, C: Coeff> std::ops::Mul<&'a HeckeElem<C>> for &'a HeckeElem<C> {
    type Output = HeckeElem<C>;
    fn mul(self, rhs: &HeckeElem<C>) -> HeckeElem<C> {
        self.try_mul(rhs).expect("same algebra")
    }
}

impl<C: Coeff> std::ops::Neg for &HeckeElem<C> {
    type Output = HeckeElem<C>;
    fn neg(self) -> HeckeElem<C> {
        HeckeElem::neg(self)
    }
}

#[cfg(test)]
mod tests;
