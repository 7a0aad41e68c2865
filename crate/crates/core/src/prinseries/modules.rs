//! Finite-dimensional matrix representations of H and the two
//! one-dimensional modules.

use std::sync::Arc;

use serde::Serialize;

use crate::exact::{Matrix, Polynomial, Rational, Scalar};
use crate::hecke::{HeckeAlgebra, HeckeElement};

/// Matrices of the simple generators `t_{s_i}` and the coordinates `x_j`.
#[derive(Clone, Debug)]
pub struct MatrixRep {
    pub t: Vec<Matrix>,
    pub x: Vec<Matrix>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OneDimKind {
    Trivial,
    Steinberg,
}

impl MatrixRep {
    pub fn dim(&self) -> usize {
        self.t.first().or(self.x.first()).map_or(0, Matrix::rows)
    }

    /// Matrix of the vector `v` of V.
    pub fn vector(&self, v: &[Rational]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (xj, c) in self.x.iter().zip(v) {
            m = m.add(&xj.scale(&Scalar::from(c.clone())));
        }
        m
    }

    /// Matrix of `omega-tilde` for `omega = v`.
    pub fn omega_tilde(&self, alg: &HeckeAlgebra, v: &[Rational]) -> Matrix {
        let rs = &alg.rs;
        let mut m = self.vector(v);
        for b in 0..rs.num_positive_roots() {
            let pairing = crate::exact::matrix::rat_dot(v, &rs.positive_coroots[b]);
            if pairing == Rational::default() {
                continue;
            }
            let c = Scalar::from(-(&pairing * &rs.k_root[b]) / crate::exact::scalar::int(2));
            m = m.add(&self.element(alg, rs.reflections[b]).scale(&c));
        }
        m
    }

    /// Matrix of `t_w` along its reduced word.
    pub fn element(&self, alg: &HeckeAlgebra, w: usize) -> Matrix {
        let mut m = Matrix::identity(self.dim());
        for &i in alg.rs.weyl.word(w) {
            m = &m * &self.t[i];
        }
        m
    }

    /// Matrix of `a(x)` for a polynomial in the commuting `x_j`.
    pub fn polynomial(&self, p: &Polynomial) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (mono, c) in p.terms() {
            let mut term = Matrix::identity(n).scale(c);
            for (j, &e) in mono.0.iter().enumerate() {
                for _ in 0..e {
                    term = &term * &self.x[j];
                }
            }
            m = m.add(&term);
        }
        m
    }

    /// Matrix of a normal-form element `sum t_w a_w`.
    pub fn hecke_element(&self, alg: &HeckeAlgebra, h: &HeckeElement) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (w, a) in h.terms() {
            m = m.add(&(&self.element(alg, w) * &self.polynomial(a)));
        }
        m
    }

    /// Checks the defining relations of H; returns a description of every
    /// failing relation.
    pub fn check_relations(&self, alg: &HeckeAlgebra) -> Vec<String> {
        let rs = &alg.rs;
        let n = self.dim();
        let id = Matrix::identity(n);
        let mut failures = Vec::new();
        for (i, t) in self.t.iter().enumerate() {
            if &(t * t) != &id {
                failures.push(format!("t{}^2 != 1", i + 1));
            }
        }
        let cartan = rs.cartan();
        for i in 0..self.t.len() {
            for j in i + 1..self.t.len() {
                let prod = (&cartan[i][j] * &cartan[j][i]).to_integer();
                let m = match prod.to_string().as_str() {
                    "0" => 2,
                    "1" => 3,
                    "2" => 4,
                    _ => 6,
                };
                let tt = &self.t[i] * &self.t[j];
                let mut p = Matrix::identity(n);
                for _ in 0..m {
                    p = &p * &tt;
                }
                if p != id {
                    failures.push(format!("braid relation s{} s{}", i + 1, j + 1));
                }
            }
        }
        for a in 0..self.x.len() {
            for b in a + 1..self.x.len() {
                if &self.x[a] * &self.x[b] != &self.x[b] * &self.x[a] {
                    failures.push(format!("x{} x{} do not commute", a + 1, b + 1));
                }
            }
        }
        // x_j t_i - t_i s_i(x_j) = k_i (x_j, alpha_i^vee)
        for i in 0..self.t.len() {
            let s = &rs.weyl.element(rs.weyl.simple(i)).matrix;
            for j in 0..self.x.len() {
                let col: Vec<Rational> = (0..self.x.len()).map(|l| s[l][j].clone()).collect();
                let sx = self.vector(&col);
                let lhs = (&self.x[j] * &self.t[i]).sub(&(&self.t[i] * &sx));
                let c = Scalar::from(&rs.k_simple[i] * &rs.simple_coroots[i][j]);
                if lhs != id.scale(&c) {
                    failures.push(format!("cross relation x{} t{}", j + 1, i + 1));
                }
            }
        }
        failures
    }
}

/// The trivial module (`t_s -> 1`, weight `rho_k`) or the Steinberg module
/// (`t_s -> -1`, weight `-rho_k`).
pub fn one_dim_module(alg: &Arc<HeckeAlgebra>, kind: OneDimKind) -> MatrixRep {
    let rs = &alg.rs;
    let (tv, sign) = match kind {
        OneDimKind::Trivial => (1, 1),
        OneDimKind::Steinberg => (-1, -1),
    };
    let rho = rs.rho_k_vee();
    let t = (0..rs.rank())
        .map(|_| Matrix::from_rows(vec![vec![Scalar::from_int(tv)]]))
        .collect();
    let x = (0..rs.dim)
        .map(|j| {
            let v = Scalar::from(rho[j].clone()).scale(&crate::exact::scalar::int(sign));
            Matrix::from_rows(vec![vec![v]])
        })
        .collect();
    MatrixRep { t, x }
}
