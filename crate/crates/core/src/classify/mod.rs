//! Brute-force classification of admissible involutive automorphisms
//! `t_w -> t_w`, `w -> c0 w + sum_y g_y(w) t_y` by exact linear solving.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational, Scalar};
use crate::hecke::{HeckeAlgebra, HeckeElement};

/// `g[y][j] = g_y(e_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct InvolutionCandidate {
    pub c0: i64,
    pub g: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug)]
pub struct ConstraintSystem {
    pub c0: i64,
    pub matrix: Matrix,
    pub rhs: Vec<Scalar>,
    pub labels: Vec<String>,
}

impl ConstraintSystem {
    pub fn unknowns(&self) -> usize {
        self.matrix.cols()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

fn unknown(alg: &HeckeAlgebra, y: usize, j: usize) -> usize {
    y * alg.rs.dim + j
}

fn rational(q: &Rational) -> Scalar {
    Scalar::from(q.clone())
}

/// Assembles the commutation, conjugation, simple-root and
/// commutativity constraints into one linear system in the `g_y(e_j)`,
/// ordered by `(y, j)`.
pub fn constraint_system(alg: &Arc<HeckeAlgebra>, c0: i64) -> Result<ConstraintSystem> {
    let rs = &alg.rs;
    if rs.rank() > 3 {
        return Err(Error::Capability("classification is limited to rank at most 3".into()));
    }
    if c0 != 1 && c0 != -1 {
        return Err(Error::Invalid(format!("c0 must be 1 or -1, got {c0}")));
    }
    let n = rs.dim;
    let order = rs.weyl.order();
    let cols = order * n;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs = Vec::new();
    let mut labels = Vec::new();
    let one_minus_c0 = Rational::from_integer((1 - c0).into());
    for a in 0..rs.rank() {
        let s = rs.weyl.simple(a);
        let m = &rs.weyl.element(s).matrix;
        for j in 0..n {
            // coefficient of t_z in sum g_y(w) t_{s y} - sum g_x(s w) t_{x s}
            for z in 0..order {
                let mut row = vec![Scalar::zero(); cols];
                let y = rs.weyl.mul(s, z);
                row[unknown(alg, y, j)] += &Scalar::one();
                let x = rs.weyl.mul(z, s);
                for (i, mij) in m.iter().map(|r| &r[j]).enumerate() {
                    row[unknown(alg, x, i)] -= &rational(mij);
                }
                let b = if z == 0 {
                    rational(&(&rs.k_simple[a] * &one_minus_c0 * &rs.simple_coroots[a][j]))
                } else {
                    Scalar::zero()
                };
                rows.push(row);
                rhs.push(b);
                labels.push(format!("commutation s{} x{} at t[{}]", a + 1, j + 1, word(alg, z)));
            }
            // g_{s y s}(w) = g_y(s w) for y != s
            for y in 0..order {
                if y == s {
                    continue;
                }
                let mut row = vec![Scalar::zero(); cols];
                let ysy = rs.weyl.mul(rs.weyl.mul(s, y), s);
                row[unknown(alg, ysy, j)] += &Scalar::one();
                for (i, mij) in m.iter().map(|r| &r[j]).enumerate() {
                    row[unknown(alg, y, i)] -= &rational(mij);
                }
                rows.push(row);
                rhs.push(Scalar::zero());
                labels.push(format!("conjugation s{} y=t[{}] x{}", a + 1, word(alg, y), j + 1));
            }
        }
        // g_{s_a}(alpha_a) = k_a (1 - c0)
        let mut row = vec![Scalar::zero(); cols];
        for (i, c) in rs.simple_roots[a].iter().enumerate() {
            row[unknown(alg, s, i)] += &rational(c);
        }
        rows.push(row);
        rhs.push(rational(&(&rs.k_simple[a] * &one_minus_c0)));
        labels.push(format!("simple root s{}", a + 1));
    }
    // g_y(w2)(w1 - y^{-1} w1) = g_y(w1)(w2 - y^{-1} w2)
    for y in 0..order {
        let yinv = &rs.weyl.element(rs.weyl.inverse(y)).matrix;
        let moved = |j: usize, r: usize| -> Rational {
            let delta = if r == j { Rational::from_integer(1.into()) } else { Rational::default() };
            delta - &yinv[r][j]
        };
        for j1 in 0..n {
            for j2 in j1 + 1..n {
                for r in 0..n {
                    let mut row = vec![Scalar::zero(); cols];
                    row[unknown(alg, y, j2)] += &rational(&moved(j1, r));
                    row[unknown(alg, y, j1)] -= &rational(&moved(j2, r));
                    if row.iter().all(Scalar::is_zero) {
                        continue;
                    }
                    rows.push(row);
                    rhs.push(Scalar::zero());
                    labels.push(format!("commutativity y=t[{}] x{} x{}", word(alg, y), j1 + 1, j2 + 1));
                }
            }
        }
    }
    Ok(ConstraintSystem {
        c0,
        matrix: Matrix::from_rows(rows),
        rhs,
        labels,
    })
}

fn word(alg: &HeckeAlgebra, w: usize) -> String {
    let wd = alg.rs.weyl.word(w);
    if wd.is_empty() {
        "e".into()
    } else {
        wd.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join(" ")
    }
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub particular: Option<InvolutionCandidate>,
    pub kernel_dim: usize,
}

pub fn solve(alg: &Arc<HeckeAlgebra>, c0: i64) -> Result<Solution> {
    let sys = constraint_system(alg, c0)?;
    let n = alg.rs.dim;
    Ok(match sys.matrix.solve(&sys.rhs) {
        None => Solution {
            particular: None,
            kernel_dim: sys.unknowns() - sys.rank(),
        },
        Some((p, kernel)) => Solution {
            particular: Some(InvolutionCandidate {
                c0,
                g: p.chunks(n).map(<[Scalar]>::to_vec).collect(),
            }),
            kernel_dim: kernel.len(),
        },
    })
}

impl InvolutionCandidate {
    /// `kappa(e_j)`.
    pub fn image(&self, alg: &Arc<HeckeAlgebra>, j: usize) -> HeckeElement {
        let mut out = HeckeElement::var(alg, j).scale(&Scalar::from_int(self.c0));
        for (y, g) in self.g.iter().enumerate() {
            out.add_term(y, crate::exact::Polynomial::constant(alg.nvars(), g[j].clone()));
        }
        out
    }

    /// `kappa` applied to `sum_j v_j e_j`.
    fn image_of_vector(&self, alg: &Arc<HeckeAlgebra>, v: &[Rational]) -> HeckeElement {
        let mut out = HeckeElement::zero(alg);
        for (j, c) in v.iter().enumerate() {
            out = &out + &self.image(alg, j).scale(&rational(c));
        }
        out
    }

    /// Reflection coefficients `c_beta` with `g_{s_beta}(w) = c_beta (w, beta^vee)`,
    /// when `g` has that shape.
    pub fn reflection_coefficients(&self, alg: &Arc<HeckeAlgebra>) -> Option<Vec<Scalar>> {
        let rs = &alg.rs;
        let mut out = Vec::new();
        for y in 0..rs.weyl.order() {
            if rs.reflection_root(y).is_none() && self.g[y].iter().any(|v| !v.is_zero()) {
                return None;
            }
        }
        for b in 0..rs.num_positive_roots() {
            let g = &self.g[rs.reflections[b]];
            let cv = &rs.positive_coroots[b];
            let j = cv.iter().position(|c| c != &Rational::default())?;
            let c = &g[j] * &rational(&(Rational::from_integer(1.into()) / &cv[j]));
            if (0..rs.dim).any(|i| g[i] != &c * &rational(&cv[i])) {
                return None;
            }
            out.push(c);
        }
        Some(out)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    /// First failing relation.
    pub witness: Option<String>,
    /// `Some` for `c0 = -1`: agreement with `t_{w0} delta(w) t_{w0}`.
    pub closed_form: Option<bool>,
    /// Leading part of `kappa(w)` is `c0 w`.
    pub graded: bool,
}

/// Checks `kappa^2 = 1` and that the defining relations are preserved.
pub fn verify_involution(alg: &Arc<HeckeAlgebra>, cand: &InvolutionCandidate) -> Result<VerifyReport> {
    let rs = &alg.rs;
    let n = rs.dim;
    let images: Vec<HeckeElement> = (0..n).map(|j| cand.image(alg, j)).collect();
    let mut witness = None;
    // kappa(kappa(e_j)) = c0 kappa(e_j) + sum_y g_y(e_j) t_y
    for j in 0..n {
        let mut twice = images[j].scale(&Scalar::from_int(cand.c0));
        for (y, g) in cand.g.iter().enumerate() {
            twice.add_term(y, crate::exact::Polynomial::constant(alg.nvars(), g[j].clone()));
        }
        if twice != HeckeElement::var(alg, j) {
            witness.get_or_insert(format!("kappa^2(x{}) != x{}", j + 1, j + 1));
        }
    }
    for a in 0..rs.rank() {
        let t = HeckeElement::t_word(alg, &[a]);
        let m = &rs.weyl.element(rs.weyl.simple(a)).matrix;
        for j in 0..n {
            let col: Vec<Rational> = (0..n).map(|r| m[r][j].clone()).collect();
            let lhs = &(&t * &images[j]) - &(&cand.image_of_vector(alg, &col) * &t);
            let rhs = HeckeElement::scalar(alg, rational(&(&rs.k_simple[a] * &rs.simple_coroots[a][j])));
            if lhs != rhs {
                witness.get_or_insert(format!("t[s{}] x{} - s{}(x{}) t[s{}]", a + 1, j + 1, a + 1, j + 1, a + 1));
            }
        }
    }
    for j1 in 0..n {
        for j2 in j1 + 1..n {
            if &images[j1] * &images[j2] != &images[j2] * &images[j1] {
                witness.get_or_insert(format!("[kappa(x{}), kappa(x{})] != 0", j1 + 1, j2 + 1));
            }
        }
    }
    let closed_form = if cand.c0 == -1 {
        let w0 = HeckeElement::t(alg, rs.weyl.longest());
        let mut ok = true;
        for (j, img) in images.iter().enumerate() {
            let expected = &(&w0 * &HeckeElement::var(alg, j).delta()?) * &w0;
            ok &= &expected == img;
        }
        Some(ok)
    } else {
        None
    };
    let graded = images.iter().enumerate().all(|(j, img)| {
        let rest = img - &HeckeElement::var(alg, j).scale(&Scalar::from_int(cand.c0));
        rest.filtration_degree() == 0
    });
    Ok(VerifyReport {
        passed: witness.is_none() && closed_form != Some(false) && graded,
        witness,
        closed_form,
        graded,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub c0: i64,
    pub unknowns: usize,
    pub equations: usize,
    pub rank: usize,
    pub solvable: bool,
    pub kernel_dim: usize,
    pub verified: Option<VerifyReport>,
    /// `c_beta` per positive root, when the solution is reflection-supported.
    pub c_beta: Option<Vec<Scalar>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub label: String,
    pub cases: Vec<CaseReport>,
    pub admissible_classes: usize,
    /// When `w0 = -1`: the `c0 = -1` solution equals `Ad t_{w0}` on V.
    pub inner_conjugate: Option<bool>,
    /// A perturbed candidate fails verification (negative control).
    pub negative_control_rejected: bool,
}

impl ClassificationReport {
    pub fn passed(&self, alg: &HeckeAlgebra) -> bool {
        let k: Vec<Scalar> = alg.rs.k_root.iter().map(rational).collect();
        let plus_ok = self.cases.iter().any(|c| {
            c.c0 == 1
                && c.kernel_dim == 0
                && c.verified.as_ref().is_some_and(|v| v.passed)
                && c.c_beta.as_ref().is_some_and(|b| b.iter().all(Scalar::is_zero))
        });
        let minus_ok = self.cases.iter().any(|c| {
            c.c0 == -1
                && c.kernel_dim == 0
                && c.verified.as_ref().is_some_and(|v| v.passed)
                && c.c_beta.as_ref() == Some(&k)
        });
        plus_ok
            && minus_ok
            && self.admissible_classes == 2
            && self.negative_control_rejected
            && self.inner_conjugate != Some(false)
    }
}

pub fn classify_all(alg: &Arc<HeckeAlgebra>) -> Result<ClassificationReport> {
    let rs = &alg.rs;
    let mut cases = Vec::new();
    let mut classes = 0;
    let mut minus_solution = None;
    for c0 in [1, -1] {
        let sys = constraint_system(alg, c0)?;
        let sol = solve(alg, c0)?;
        let verified = match &sol.particular {
            Some(c) if sol.kernel_dim == 0 => Some(verify_involution(alg, c)?),
            _ => None,
        };
        if verified.as_ref().is_some_and(|v| v.passed) {
            classes += 1;
        }
        let c_beta = sol.particular.as_ref().and_then(|c| c.reflection_coefficients(alg));
        if c0 == -1 {
            minus_solution = sol.particular.clone();
        }
        cases.push(CaseReport {
            c0,
            unknowns: sys.unknowns(),
            equations: sys.matrix.rows(),
            rank: sys.rank(),
            solvable: sol.particular.is_some(),
            kernel_dim: sol.kernel_dim,
            verified,
            c_beta,
        });
    }
    let w0_is_minus_one = rs.weyl.element(rs.weyl.longest()).matrix
        == crate::exact::matrix::rat_identity(rs.dim)
            .into_iter()
            .map(|r| r.into_iter().map(|v| -v).collect())
            .collect::<Vec<Vec<Rational>>>();
    let inner_conjugate = match (&minus_solution, w0_is_minus_one) {
        (Some(c), true) => {
            let w0 = HeckeElement::t(alg, rs.weyl.longest());
            Some((0..rs.dim).all(|j| c.image(alg, j) == &(&w0 * &HeckeElement::var(alg, j)) * &w0))
        }
        _ => None,
    };
    let negative_control_rejected = match &minus_solution {
        Some(c) => {
            let mut bad = c.clone();
            let s1 = rs.weyl.simple(0);
            bad.g[s1][0] += &Scalar::one();
            !verify_involution(alg, &bad)?.passed
        }
        None => false,
    };
    Ok(ClassificationReport {
        label: rs.label.to_string(),
        cases,
        admissible_classes: classes,
        inner_conjugate,
        negative_control_rejected,
    })
}
