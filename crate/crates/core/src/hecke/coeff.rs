use std::fmt;

use super::HeckeAlgebra;
use crate::error::Result;
use crate::exact::{Polynomial, RationalFunction, Scalar};

/// Coefficient ring of a Hecke element: polynomials or their localization.
pub trait Coeff: Clone + PartialEq + fmt::Display + Send + Sync + 'static {
    fn zero(nvars: usize) -> Self;
    fn one(nvars: usize) -> Self;
    fn from_poly(p: Polynomial) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn is_constant(&self) -> bool;
    fn degree(&self) -> u32;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, c: &Scalar) -> Self;
    fn conj(&self) -> Self;
    /// Ring map induced by a linear change of variables.
    fn substitute_linear(&self, images: &[Polynomial]) -> Self;
    /// `(a - s_i(a)) / alpha_i`.
    fn difference(&self, alg: &HeckeAlgebra, i: usize) -> Self;
    fn eval(&self, point: &[Scalar]) -> Result<Scalar>;
}

impl Coeff for Polynomial {
    fn zero(nvars: usize) -> Self {
        Polynomial::zero(nvars)
    }
    fn one(nvars: usize) -> Self {
        Polynomial::one(nvars)
    }
    fn from_poly(p: Polynomial) -> Self {
        p
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn is_one(&self) -> bool {
        self.is_constant() && self.constant_term().is_one()
    }
    fn is_constant(&self) -> bool {
        Polynomial::is_constant(self)
    }
    fn degree(&self) -> u32 {
        Polynomial::degree(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
    fn conj(&self) -> Self {
        Polynomial::conj(self)
    }
    fn substitute_linear(&self, images: &[Polynomial]) -> Self {
        self.substitute(images)
    }
    fn difference(&self, alg: &HeckeAlgebra, i: usize) -> Self {
        alg.difference(i, self)
    }
    fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        Polynomial::eval(self, point)
    }
}

impl Coeff for RationalFunction {
    fn zero(nvars: usize) -> Self {
        RationalFunction::zero(nvars)
    }
    fn one(nvars: usize) -> Self {
        RationalFunction::one(nvars)
    }
    fn from_poly(p: Polynomial) -> Self {
        RationalFunction::from_poly(p)
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn is_one(&self) -> bool {
        self.as_polynomial().is_some_and(Coeff::is_one)
    }
    fn is_constant(&self) -> bool {
        self.as_polynomial().is_some_and(Polynomial::is_constant)
    }
    fn degree(&self) -> u32 {
        self.numerator().degree()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn scaled(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
    fn conj(&self) -> Self {
        RationalFunction::conj(self)
    }
    fn substitute_linear(&self, images: &[Polynomial]) -> Self {
        self.substitute(images)
            .expect("invertible linear substitution keeps denominators affine")
    }
    fn difference(&self, alg: &HeckeAlgebra, i: usize) -> Self {
        if let Some(p) = self.as_polynomial() {
            return RationalFunction::from_poly(alg.difference(i, p));
        }
        let reflected = self.substitute_linear(alg.simple_images(i));
        let inv = RationalFunction::inv_affine(alg.simple_root_poly(i)).expect("root is linear");
        self.sub(&reflected).mul(&inv)
    }
    fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        RationalFunction::eval(self, point)
    }
}
