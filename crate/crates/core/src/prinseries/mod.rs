//! Spherical principal series `X(nu) = H (x)_{S(V)} C_nu` in the basis
//! `t_x (x) 1_nu`, and its star- and bullet-invariant forms.
//!
//! With `R_{w0} = sum_w t_w a_w`, the bullet form is
//! `G[x][y] = eps_A(t_{w0} t_{y^-1} t_x R_{w0})(w0 nu) = a_{x^-1 y w0}(w0 nu)`
//! and the star form `G[x][y] = a_{x^-1 y}(w0 nu)`. Forms are linear in the
//! first argument: `<u, v> = u^T G conj(v)`.

mod modules;
mod scan;

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{Matrix, Polynomial, RationalFunction, Scalar, Sign};
use crate::hecke::{HeckeAlgebra, HeckeElement, LocalizedHeckeElement};

pub use modules::{one_dim_module, MatrixRep, OneDimKind};
pub use scan::{
    cell_scan, grid_values, imaginary_shift_scan, CellSign, CellSummary, ScanPoint, ScanReport,
    ScanSpec, ShiftSample,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Star,
    Bullet,
}

impl std::str::FromStr for FormKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "star" => Ok(FormKind::Star),
            "bullet" => Ok(FormKind::Bullet),
            _ => Err(Error::Invalid(format!("unknown form {s:?}"))),
        }
    }
}

/// Data shared by every parameter `nu` of one algebra: `R_{w0}` and the
/// `calR_x`.
#[derive(Debug)]
pub struct SphericalData {
    pub alg: Arc<HeckeAlgebra>,
    pub r_w0: LocalizedHeckeElement,
    calr: std::sync::OnceLock<Vec<LocalizedHeckeElement>>,
}

impl SphericalData {
    pub fn new(alg: &Arc<HeckeAlgebra>) -> Arc<SphericalData> {
        let r_w0 = alg.r_element(alg.rs.weyl.longest());
        Arc::new(SphericalData {
            alg: alg.clone(),
            r_w0,
            calr: std::sync::OnceLock::new(),
        })
    }

    pub fn calr(&self) -> &[LocalizedHeckeElement] {
        self.calr.get_or_init(|| {
            (0..self.alg.order())
                .map(|x| self.alg.calr_element(x))
                .collect()
        })
    }

    pub fn at(self: &Arc<Self>, nu: Vec<Scalar>) -> Result<PrincipalSeries> {
        if nu.len() != self.alg.nvars() {
            return Err(Error::Dimension {
                expected: self.alg.nvars(),
                got: nu.len(),
            });
        }
        Ok(PrincipalSeries {
            data: self.clone(),
            nu,
        })
    }
}

#[derive(Clone, Debug)]
pub struct PrincipalSeries {
    data: Arc<SphericalData>,
    nu: Vec<Scalar>,
}

/// Outcome of a hermitian test, with the first offending entry.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HermitianReport {
    pub hermitian: bool,
    pub witness: Option<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightReport {
    pub all_pass: bool,
    pub failures: Vec<(usize, usize)>,
    pub basis_invertible: bool,
}

impl PrincipalSeries {
    pub fn new(alg: &Arc<HeckeAlgebra>, nu: Vec<Scalar>) -> Result<PrincipalSeries> {
        SphericalData::new(alg).at(nu)
    }

    pub fn alg(&self) -> &Arc<HeckeAlgebra> {
        &self.data.alg
    }

    pub fn nu(&self) -> &[Scalar] {
        &self.nu
    }

    pub fn dim(&self) -> usize {
        self.alg().order()
    }

    /// `(alpha, nu)` for every positive root.
    pub fn root_pairings(&self) -> Vec<Scalar> {
        self.alg()
            .rs
            .positive_roots
            .iter()
            .map(|a| crate::rootdata::RootSystem::pair_scalar(a, &self.nu))
            .collect()
    }

    /// `(alpha, nu) != 0` for all positive roots.
    pub fn is_regular(&self) -> bool {
        self.root_pairings().iter().all(|c| !c.is_zero())
    }

    /// Regular and away from the walls `(alpha, nu) = +-k_alpha`.
    pub fn is_generic(&self) -> bool {
        self.root_pairings()
            .iter()
            .enumerate()
            .all(|(b, c)| {
                let k = self.alg().k_root(b);
                !c.is_zero() && c != &k && c != &-&k
            })
    }

    /// Matrix of `h` on the basis `t_x (x) 1_nu`.
    pub fn action(&self, h: &HeckeElement) -> Result<Matrix> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for x in 0..n {
            let col = h.rmul_t(x).eval_coeffs(&self.nu)?;
            for (w, v) in col.into_iter().enumerate() {
                m[(w, x)] = v;
            }
        }
        Ok(m)
    }

    /// Action matrices of the simple generators and the coordinate functions.
    pub fn generator_rep(&self) -> Result<MatrixRep> {
        let alg = self.alg();
        let t = (0..alg.rs.rank())
            .map(|i| self.action(&HeckeElement::t_word(alg, &[i])))
            .collect::<Result<Vec<_>>>()?;
        let x = (0..alg.nvars())
            .map(|j| self.action(&HeckeElement::var(alg, j)))
            .collect::<Result<Vec<_>>>()?;
        Ok(MatrixRep { t, x })
    }

    /// `w0 nu`.
    fn mu(&self) -> Vec<Scalar> {
        let rs = &self.alg().rs;
        rs.act_dual(rs.weyl.longest(), &self.nu)
    }

    /// Coefficients of `R_{w0}` evaluated at `w0 nu`.
    fn r_w0_values(&self) -> Result<Vec<Scalar>> {
        self.data.r_w0.eval_coeffs(&self.mu()).map_err(|e| match e {
            Error::Pole { .. } => Error::NonRegular,
            other => other,
        })
    }

    pub fn gram(&self, kind: FormKind) -> Result<Matrix> {
        let weyl = &self.alg().rs.weyl;
        let a = self.r_w0_values()?;
        let n = self.dim();
        let w0 = weyl.longest();
        Ok(Matrix::from_fn(n, n, |x, y| {
            let z = weyl.mul(weyl.inverse(x), y);
            match kind {
                FormKind::Bullet => a[weyl.mul(z, w0)].clone(),
                FormKind::Star => a[z].clone(),
            }
        }))
    }

    pub fn bullet_gram(&self) -> Result<Matrix> {
        self.gram(FormKind::Bullet)
    }

    pub fn star_gram(&self) -> Result<Matrix> {
        self.gram(FormKind::Star)
    }

    /// The pairing `eps_A(L kappa(h2) h1 R_{w0})(w0 nu)` on H with
    /// `L = t_{w0}` for bullet and `L = 1` for star.
    pub fn pairing(&self, kind: FormKind, h1: &HeckeElement, h2: &HeckeElement) -> Result<Scalar> {
        let alg = self.alg();
        let (left, k2) = match kind {
            FormKind::Bullet => (HeckeElement::t(alg, alg.rs.weyl.longest()), h2.bullet()),
            FormKind::Star => (HeckeElement::one(alg), h2.star()?),
        };
        let prod = (&(&left * &k2) * h1).localize();
        let full = &prod * &self.data.r_w0;
        full.epsilon_a().eval(&self.mu()).map_err(|e| match e {
            Error::Pole { .. } => Error::NonRegular,
            other => other,
        })
    }

    pub fn hermitian_report(g: &Matrix) -> HermitianReport {
        let n = g.rows();
        for x in 0..n {
            for y in x..n {
                if g[(y, x)] != g[(x, y)].conj() {
                    return HermitianReport {
                        hermitian: false,
                        witness: Some((x, y)),
                    };
                }
            }
        }
        HermitianReport {
            hermitian: true,
            witness: None,
        }
    }

    /// `P(h)^T G = G conj(P(kappa h))` for every generator `h`.
    pub fn check_invariance(&self, kind: FormKind) -> Result<bool> {
        let alg = self.alg();
        let g = self.gram(kind)?;
        let mut gens: Vec<HeckeElement> = (0..alg.rs.rank())
            .map(|i| HeckeElement::t_word(alg, &[i]))
            .collect();
        gens.extend((0..alg.nvars()).map(|j| HeckeElement::var(alg, j)));
        for h in gens {
            let kh = match kind {
                FormKind::Bullet => h.bullet(),
                FormKind::Star => h.star()?,
            };
            let lhs = &self.action(&h)?.transpose() * &g;
            let rhs = &g * &self.action(&kh)?.conj();
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Columns are `calR_x (x) 1_nu` in the t-basis.
    pub fn calr_vectors(&self) -> Result<Matrix> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (x, r) in self.data.calr().iter().enumerate() {
            let col = r.eval_coeffs(&self.nu).map_err(|e| match e {
                Error::Pole { .. } => Error::NonRegular,
                other => other,
            })?;
            for (w, v) in col.into_iter().enumerate() {
                m[(w, x)] = v;
            }
        }
        Ok(m)
    }

    /// Bullet form on the `calR` basis, before normalization.
    pub fn calr_gram_unnormalized(&self) -> Result<Matrix> {
        if !self.is_regular() {
            return Err(Error::NonRegular);
        }
        let v = self.calr_vectors()?;
        let g = self.bullet_gram()?;
        Ok(&(&v.transpose() * &g) * &v.conj())
    }

    /// Bullet form on the `calR` basis, normalized so that the identity
    /// entry is 1.
    pub fn calr_gram(&self) -> Result<Matrix> {
        let m = self.calr_gram_unnormalized()?;
        let inv = m[(0, 0)].inv().map_err(|_| Error::NonRegular)?;
        Ok(m.scale(&inv))
    }

    /// `prod_{alpha>0, x alpha<0} ((alpha,nu) - k)/((alpha,nu) + k)` for all x.
    pub fn calr_diagonal_formula(&self) -> Result<Vec<Scalar>> {
        if !self.is_generic() {
            return Err(Error::NonRegular);
        }
        let alg = self.alg();
        let pairings = self.root_pairings();
        (0..self.dim())
            .map(|x| {
                let mut acc = Scalar::one();
                for b in alg.rs.inversions(x) {
                    let k = alg.k_root(b);
                    acc = &acc * &(&(&pairings[b] - &k) / &(&pairings[b] + &k));
                }
                Ok(acc)
            })
            .collect()
    }

    /// The x-independent factor `prod_{alpha>0} (alpha,nu)/((alpha,nu)+k)`,
    /// without sign.
    pub fn calr_normalizer(&self) -> Scalar {
        let alg = self.alg();
        let mut acc = Scalar::one();
        for (b, c) in self.root_pairings().iter().enumerate() {
            acc = &acc * &(c / &(c + &alg.k_root(b)));
        }
        acc
    }

    /// First closed form for the diagonal entry at `x`:
    /// `(-1)^l(x) (prod_{alpha>0} alpha/(k-alpha)
    ///   prod_{x^-1 alpha<0} (k - delta(x^-1 alpha))/(k + delta(x^-1 alpha)))(w0 nu)`.
    pub fn bprod_first_form(&self, x: usize) -> Result<Scalar> {
        let alg = self.alg();
        let rs = &alg.rs;
        let n = alg.nvars();
        let mut f = RationalFunction::one(n);
        for b in 0..rs.num_positive_roots() {
            let alpha = alg.root_poly(b);
            let k = Polynomial::constant(n, alg.k_root(b));
            f = f.mul(&RationalFunction::over_affine(alpha, &(&k - &alg.root_poly(b)))?);
        }
        let xinv = rs.weyl.inverse(x);
        let delta = rs.delta_on_roots();
        for b in rs.inversions(xinv) {
            // x^-1 alpha = -beta_c with c positive; delta(-beta_c) = -beta_{delta c}
            let (_, c) = rs.act_on_root(xinv, b);
            let d = -&alg.root_poly(delta[c]);
            let k = Polynomial::constant(n, alg.k_root(b));
            f = f.mul(&RationalFunction::over_affine(&k - &d, &(&k + &d))?);
        }
        let sign = Scalar::from_int(if rs.weyl.length(x) % 2 == 0 { 1 } else { -1 });
        Ok(&sign * &f.eval(&self.mu()).map_err(|_| Error::NonRegular)?)
    }

    /// Second closed form with the sign `(-1)^{n_sign}`:
    /// `prod_{alpha>0} (alpha,nu)/((alpha,nu)+k) prod_{x alpha<0} ...`.
    pub fn bprod_second_form(&self, x: usize, n_sign: usize) -> Result<Scalar> {
        let diag = self.calr_diagonal_formula()?;
        let sign = Scalar::from_int(if n_sign % 2 == 0 { 1 } else { -1 });
        Ok(&(&sign * &self.calr_normalizer()) * &diag[x])
    }

    /// Reducibility at equal parameters: `(alpha, nu) = +-1` for some
    /// positive root. Returns the witnesses.
    pub fn reducibility_witnesses(&self) -> Result<Vec<usize>> {
        if !self.alg().rs.has_equal_parameters() {
            return Err(Error::Capability(
                "the reducibility criterion is stated for equal parameters k = 1 only".into(),
            ));
        }
        let one = Scalar::one();
        Ok(self
            .root_pairings()
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == one || **c == -&one)
            .map(|(b, _)| b)
            .collect())
    }

    pub fn is_reducible(&self) -> Result<bool> {
        Ok(!self.reducibility_witnesses()?.is_empty())
    }

    /// Each `calR_x (x) 1_nu` is a weight vector with weight `x nu`.
    pub fn weight_check(&self) -> Result<WeightReport> {
        if !self.is_regular() {
            return Err(Error::NonRegular);
        }
        let alg = self.alg();
        let v = self.calr_vectors()?;
        let n = self.dim();
        let mut failures = Vec::new();
        for j in 0..alg.nvars() {
            let xj = self.action(&HeckeElement::var(alg, j))?;
            let image = &xj * &v;
            for x in 0..n {
                let weight = alg.rs.act_dual(x, &self.nu);
                let col = v.column(x);
                let expected: Vec<Scalar> = col.iter().map(|c| c * &weight[j]).collect();
                if image.column(x) != expected {
                    failures.push((x, j));
                }
            }
        }
        Ok(WeightReport {
            all_pass: failures.is_empty(),
            failures,
            basis_invertible: v.rank() == n,
        })
    }

    /// `<nu, nu>` on V-dual.
    pub fn norm_sq(&self) -> Scalar {
        self.alg().rs.dual_inner(&self.nu, &self.nu)
    }

    pub fn casimir_acts_by_norm(&self) -> Result<bool> {
        let om = self.action(&HeckeElement::casimir(self.alg()))?;
        Ok(om == Matrix::identity(self.dim()).scale(&self.norm_sq()))
    }
}

/// Sign counts of a list of real scalars.
pub fn sign_counts(values: &[Scalar]) -> Result<crate::exact::Signature> {
    let mut sig = crate::exact::Signature {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    for v in values {
        match v.sign()? {
            Sign::Positive => sig.positive += 1,
            Sign::Negative => sig.negative += 1,
            Sign::Zero => sig.zero += 1,
        }
    }
    Ok(sig)
}

#[cfg(test)]
mod tests;
