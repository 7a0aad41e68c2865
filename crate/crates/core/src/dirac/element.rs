//! Elements of `H (x) C(V)` and the Dirac element.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::clifford::{mask_indices, CliffordAlgebra, CliffordElement};
use crate::error::{Error, Result};
use crate::exact::matrix::{rat_inverse, rat_mul_vec};
use crate::exact::{Rational, Scalar};
use crate::hecke::{HeckeAlgebra, HeckeElement};

/// `sum_S h_S (x) e_S`.
#[derive(Clone, Debug)]
pub struct HCliffordElement {
    pub alg: Arc<HeckeAlgebra>,
    pub cl: Arc<CliffordAlgebra>,
    pub terms: BTreeMap<u32, HeckeElement>,
}

impl PartialEq for HCliffordElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg) && self.terms == other.terms
    }
}

impl HCliffordElement {
    pub fn zero(alg: &Arc<HeckeAlgebra>, cl: &Arc<CliffordAlgebra>) -> Self {
        HCliffordElement {
            alg: alg.clone(),
            cl: cl.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// `h (x) c`.
    pub fn tensor(h: &HeckeElement, c: &CliffordElement, cl: &Arc<CliffordAlgebra>) -> Self {
        let mut out = Self::zero(h.algebra(), cl);
        for (m, v) in &c.terms {
            out.add_term(*m, h.scale(v));
        }
        out
    }

    pub fn add_term(&mut self, mask: u32, h: HeckeElement) {
        if h.is_zero() {
            return;
        }
        match self.terms.remove(&mask) {
            Some(old) => {
                let sum = &old + &h;
                if !sum.is_zero() {
                    self.terms.insert(mask, sum);
                }
            }
            None => {
                self.terms.insert(mask, h);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, h) in &other.terms {
            out.add_term(*m, h.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(&self.alg, &self.cl);
        for (m, h) in &self.terms {
            out.add_term(*m, h.neg());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(&self.alg, &self.cl);
        for (ma, ha) in &self.terms {
            for (mb, hb) in &other.terms {
                let h = ha * hb;
                for (m, c) in self.cl.mul_monomials(*ma, *mb).terms {
                    out.add_term(m, h.scale(&c));
                }
            }
        }
        out
    }

    /// Number of `(w, S, monomial)` triples with nonzero coefficient.
    pub fn num_monomials(&self) -> usize {
        self.terms
            .values()
            .map(|h| h.terms().map(|(_, a)| a.num_terms()).sum::<usize>())
            .sum()
    }

    /// `bullet (x) conjugation`.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero(&self.alg, &self.cl);
        for (m, h) in &self.terms {
            let hb = h.bullet();
            // the Hecke factor carries the conjugation of scalars
            let c = self.cl.conjugation(&CliffordElement::monomial(*m, Scalar::one()));
            for (mm, v) in c.terms {
                out.add_term(mm, hb.scale(&v));
            }
        }
        out
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for HCliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, h)| {
                let e: Vec<String> = mask_indices(*m).iter().map(|i| format!("e{}", i + 1)).collect();
                let e = if e.is_empty() { "1".to_string() } else { e.join("*") };
                format!("({}) (x) {e}", h.render())
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn clifford_of(alg: &HeckeAlgebra) -> Arc<CliffordAlgebra> {
    Arc::new(CliffordAlgebra::new(alg.rs.gram.clone()))
}

fn require_unit_parameters(alg: &HeckeAlgebra) -> Result<()> {
    if alg.rs.k_root.iter().all(|k| k == &Rational::from_integer(1.into())) {
        Ok(())
    } else {
        Err(Error::Capability(
            "the Dirac element is defined here for equal parameters k = 1".into(),
        ))
    }
}

/// `s~_alpha = alpha / |alpha|`, for the positive root with index `b`.
pub fn s_tilde(alg: &HeckeAlgebra, cl: &CliffordAlgebra, b: usize) -> Result<CliffordElement> {
    let root = &alg.rs.positive_roots[b];
    let norm_sq = cl.norm_sq(root);
    let norm = Scalar::sqrt_rational(&norm_sq).ok_or_else(|| {
        Error::Capability(format!("sqrt({norm_sq}) is outside the scalar field"))
    })?;
    Ok(cl.vector_rational(root).scale(&norm.inv()?))
}

/// `|alpha^vee|` for the positive root with index `b`.
fn coroot_norm(alg: &HeckeAlgebra, b: usize) -> Result<Scalar> {
    let rs = &alg.rs;
    let c = &rs.positive_coroots[b];
    let mut sq = Rational::default();
    for i in 0..rs.dim {
        for j in 0..rs.dim {
            sq += &c[i] * &c[j] * &rs.gram_dual[i][j];
        }
    }
    Scalar::sqrt_rational(&sq)
        .ok_or_else(|| Error::Capability(format!("sqrt({sq}) is outside the scalar field")))
}

/// Image of `Omega_W~` under `w~ -> t_{p(w~)} (x) w~`.
pub fn omega_wtilde_image(alg: &Arc<HeckeAlgebra>, cl: &Arc<CliffordAlgebra>) -> Result<HCliffordElement> {
    let rs = &alg.rs;
    let n = rs.num_positive_roots();
    let tildes: Vec<CliffordElement> = (0..n).map(|b| s_tilde(alg, cl, b)).collect::<Result<_>>()?;
    let norms: Vec<Scalar> = (0..n).map(|b| coroot_norm(alg, b)).collect::<Result<_>>()?;
    let mut out = HCliffordElement::zero(alg, cl);
    for a in 0..n {
        for b in 0..n {
            let (sign, _) = rs.act_on_root(rs.reflections[a], b);
            if sign > 0 {
                continue;
            }
            let c = &(&norms[a] * &norms[b]) * &Scalar::frac(-1, 4);
            let w = rs.weyl.mul(rs.reflections[a], rs.reflections[b]);
            let cliff = cl.mul(&tildes[a], &tildes[b]).scale(&c);
            out = out.add(&HCliffordElement::tensor(&HeckeElement::t(alg, w), &cliff, cl));
        }
    }
    Ok(out)
}

/// `D = sum_i omega~(b_i) (x) b^i` for the basis `b` (rows, realization
/// coordinates) and its dual basis with respect to the inner product.
pub fn dirac_element_in_basis(
    alg: &Arc<HeckeAlgebra>,
    cl: &Arc<CliffordAlgebra>,
    basis: &[Vec<Rational>],
) -> Result<HCliffordElement> {
    require_unit_parameters(alg)?;
    let rs = &alg.rs;
    // dual vectors d_i with <b_i, d_j> = delta: D = (B G)^{-1} has the d_j as columns
    let bg: Vec<Vec<Rational>> = basis.iter().map(|b| rat_mul_vec(&rs.gram, b)).collect();
    let inv = rat_inverse(&bg)?;
    let mut out = HCliffordElement::zero(alg, cl);
    for (i, b) in basis.iter().enumerate() {
        let dual: Vec<Rational> = (0..rs.dim).map(|r| inv[r][i].clone()).collect();
        let wt = HeckeElement::omega_tilde(alg, b);
        out = out.add(&HCliffordElement::tensor(&wt, &cl.vector_rational(&dual), cl));
    }
    Ok(out)
}

fn standard_basis(n: usize) -> Vec<Vec<Rational>> {
    crate::exact::matrix::rat_identity(n)
}

pub fn dirac_element(alg: &Arc<HeckeAlgebra>) -> Result<HCliffordElement> {
    let cl = clifford_of(alg);
    dirac_element_in_basis(alg, &cl, &standard_basis(alg.rs.dim))
}

/// Rational orthogonal basis of V by Gram-Schmidt on the realization basis.
pub fn orthogonal_basis(gram: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = gram.len();
    let inner = |a: &[Rational], b: &[Rational]| -> Rational {
        let gb = rat_mul_vec(gram, b);
        crate::exact::matrix::rat_dot(a, &gb)
    };
    let mut out: Vec<Vec<Rational>> = Vec::new();
    for e in standard_basis(n) {
        let mut v = e.clone();
        for u in &out {
            let c = inner(&e, u) / inner(u, u);
            for (vi, ui) in v.iter_mut().zip(u) {
                *vi -= &c * ui;
            }
        }
        out.push(v);
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct SquareReport {
    pub label: String,
    pub residue_zero: bool,
    /// Monomials of `D^2`, `Omega (x) 1` and the `Omega_W~` image combined.
    pub monomials_in: usize,
    pub monomials_cancelled: usize,
    pub residue: Option<String>,
    /// First offending `(w, S)` component when the residue is nonzero.
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
}

/// `D^2 + Omega (x) 1 - Omega_W~ image`, expected to vanish.
pub fn dirac_square_check(alg: &Arc<HeckeAlgebra>) -> Result<SquareReport> {
    let cl = clifford_of(alg);
    let d = dirac_element_in_basis(alg, &cl, &standard_basis(alg.rs.dim))?;
    let d2 = d.mul(&d);
    let omega = HCliffordElement::tensor(&HeckeElement::casimir(alg), &CliffordElement::one(), &cl);
    let image = omega_wtilde_image(alg, &cl)?;
    let residue = d2.add(&omega).sub(&image);
    let monomials_in = d2.num_monomials() + omega.num_monomials() + image.num_monomials();
    let witness = residue.terms.iter().next().map(|(m, h)| {
        let w = h.terms().next().map(|(w, _)| w).unwrap_or(0);
        (
            alg.rs.weyl.word(w).iter().map(|i| i + 1).collect(),
            mask_indices(*m).iter().map(|i| i + 1).collect(),
        )
    });
    Ok(SquareReport {
        label: alg.rs.label.to_string(),
        residue_zero: residue.is_zero(),
        monomials_in,
        monomials_cancelled: monomials_in - residue.num_monomials(),
        residue: (!residue.is_zero()).then(|| residue.render()),
        witness,
    })
}
