//! Localized intertwining elements `R_x` and `calR_x`.

use std::sync::Arc;

use super::{HeckeAlgebra, HeckeElem, LocalizedHeckeElement};
use crate::error::Result;
use crate::exact::{Polynomial, RationalFunction, Scalar};

impl HeckeAlgebra {
    /// `(t_s alpha - k) / (alpha + sign * k)`.
    fn simple_intertwiner(self: &Arc<Self>, i: usize, sign: i64) -> LocalizedHeckeElement {
        let n = self.nvars();
        let alpha = self.simple_root_poly(i).clone();
        let k = Polynomial::constant(n, self.k_simple(i).clone());
        let den = &alpha + &k.scale(&Scalar::from_int(sign));
        let inv = RationalFunction::inv_affine(&den).expect("root is linear");
        let mut out = HeckeElem::zero(self);
        out.add_term(self.rs.weyl.simple(i), inv.mul_poly(&alpha));
        out.add_term(0, inv.mul_poly(&(-&k)));
        out
    }

    /// `R_s = (t_s alpha - k)(alpha - k)^-1`.
    pub fn r_simple(self: &Arc<Self>, i: usize) -> LocalizedHeckeElement {
        self.simple_intertwiner(i, -1)
    }

    /// `calR_s = (t_s alpha - k)(alpha + k)^-1`.
    pub fn calr_simple(self: &Arc<Self>, i: usize) -> LocalizedHeckeElement {
        self.simple_intertwiner(i, 1)
    }

    pub fn r_word(self: &Arc<Self>, word: &[usize]) -> LocalizedHeckeElement {
        word.iter()
            .fold(HeckeElem::one(self), |acc, &i| &acc * &self.r_simple(i))
    }

    pub fn calr_word(self: &Arc<Self>, word: &[usize]) -> LocalizedHeckeElement {
        word.iter()
            .fold(HeckeElem::one(self), |acc, &i| &acc * &self.calr_simple(i))
    }

    /// `R_x` along the stored reduced word of `x`.
    pub fn r_element(self: &Arc<Self>, x: usize) -> LocalizedHeckeElement {
        self.r_word(self.rs.weyl.word(x))
    }

    pub fn calr_element(self: &Arc<Self>, x: usize) -> LocalizedHeckeElement {
        self.calr_word(self.rs.weyl.word(x))
    }

    /// `(-1)^l(x) calR_{x^-1} prod_{alpha>0, x^-1 alpha<0} (k+alpha)/(k-alpha)`,
    /// the closed form of `calR_x` under the compact star.
    pub fn calr_bullet_formula(self: &Arc<Self>, x: usize) -> Result<LocalizedHeckeElement> {
        let weyl = &self.rs.weyl;
        let xinv = weyl.inverse(x);
        let n = self.nvars();
        let mut factor = RationalFunction::one(n);
        for b in self.rs.inversions(xinv) {
            let alpha = self.root_poly(b);
            let k = Polynomial::constant(n, self.k_root(b));
            let num = &k + &alpha;
            let den = &k - &alpha;
            factor = factor.mul(&RationalFunction::over_affine(num, &den)?);
        }
        let sign = Scalar::from_int(if weyl.length(x) % 2 == 0 { 1 } else { -1 });
        Ok(self.calr_element(xinv).mul_coeff(&factor).scale(&sign))
    }
}
