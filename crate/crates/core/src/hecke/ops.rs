//! The automorphism delta, the star operations and the distinguished elements.

use std::sync::Arc;

use super::{Coeff, HeckeAlgebra, HeckeElem, HeckeElement};
use crate::error::Result;
use crate::exact::scalar::rat;
use crate::exact::{Polynomial, Rational, Scalar};

impl<C: Coeff> HeckeElem<C> {
    /// `delta(t_w a) = t_{w0 w w0} delta(a)` with `delta(x) = -w0(x)` on V.
    pub fn delta(&self) -> Result<Self> {
        let alg = self.algebra();
        alg.rs.delta_preserves_parameters()?;
        let weyl = &alg.rs.weyl;
        let w0 = weyl.longest();
        let mut out = Self::zero(alg);
        for (w, c) in self.terms() {
            out.add_term(weyl.conjugate(w0, w), c.substitute_linear(alg.delta_images()));
        }
        Ok(out)
    }

    /// Compact star: `t_w -> t_{w^-1}`, `a -> conj(a)`, conjugate-linear
    /// anti-automorphism.
    pub fn bullet(&self) -> Self {
        let alg = self.algebra();
        let weyl = &alg.rs.weyl;
        let mut out = Self::zero(alg);
        for (w, c) in self.terms() {
            let piece = Self::from_coeff(alg, c.conj()).rmul_t(weyl.inverse(w));
            out = &out + &piece;
        }
        out
    }

    /// `t_w -> t_{w^-1}`, `a -> t_{w0} delta(conj(a)) t_{w0}`.
    pub fn star(&self) -> Result<Self> {
        let alg = self.algebra();
        alg.rs.delta_preserves_parameters()?;
        let weyl = &alg.rs.weyl;
        let w0 = weyl.longest();
        let mut out = Self::zero(alg);
        for (w, c) in self.terms() {
            let d = c.conj().substitute_linear(alg.delta_images());
            let piece = Self::term(alg, w0, d).rmul_t(weyl.mul(w0, weyl.inverse(w)));
            out = &out + &piece;
        }
        Ok(out)
    }

    /// Termwise complex conjugation of the coefficients (a conjugate-linear
    /// automorphism: it fixes every `t_w` and every real vector).
    pub fn conj_coeffs(&self) -> Self {
        self.map_coeffs(|c| c.conj())
    }
}

impl HeckeElement {
    /// `omega - 1/2 sum_{beta>0} k_beta (omega, beta^vee) t_{s_beta}` for
    /// `omega` in V.
    pub fn omega_tilde(alg: &Arc<HeckeAlgebra>, v: &[Rational]) -> HeckeElement {
        let rs = &alg.rs;
        let mut out = Self::vector(alg, v);
        let n = alg.nvars();
        for b in 0..rs.num_positive_roots() {
            let pairing = crate::exact::matrix::rat_dot(v, &rs.positive_coroots[b]);
            let c = -(&pairing * &rs.k_root[b] * rat(1, 2));
            out.add_term(rs.reflections[b], Polynomial::constant(n, c.into()));
        }
        out
    }

    /// `sum_{i,j} (G^-1)_{ij} x_i x_j`, the dual-basis Casimir element.
    pub fn casimir(alg: &Arc<HeckeAlgebra>) -> HeckeElement {
        let n = alg.nvars();
        let mut p = Polynomial::zero(n);
        for i in 0..n {
            for j in 0..n {
                let g = &alg.rs.gram_dual[i][j];
                if g != &Rational::default() {
                    let xij = &Polynomial::var(n, i) * &Polynomial::var(n, j);
                    p.add_scaled(&xij, &Scalar::from(g.clone()));
                }
            }
        }
        Self::from_poly(alg, p)
    }
}
