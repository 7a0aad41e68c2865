//! Explicit spin modules and Dirac operators on finite-dimensional modules.

use std::sync::Arc;

use num_complex::Complex64;
use serde::Serialize;

use super::clifford::{mask_indices, CliffordAlgebra};
use super::element::{clifford_of, dirac_element, omega_wtilde_image, orthogonal_basis, HCliffordElement};
use crate::error::{Error, Result};
use crate::exact::matrix::rat_mul_vec;
use crate::exact::{Matrix, Scalar, Sign};
use crate::hecke::{HeckeAlgebra, HeckeElement};
use crate::prinseries::{FormKind, MatrixRep, PrincipalSeries};

/// Choice of simple module when dim V is odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SpinChoice {
    Plus,
    Minus,
}

/// Gamma matrices `gamma(e_j)` of the realization basis on a simple
/// C(V)-module.
#[derive(Clone, Debug)]
pub struct SpinModule {
    pub gammas: Vec<Matrix>,
    pub choice: SpinChoice,
}

fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (p, q) = (b.rows(), b.cols());
    Matrix::from_fn(a.rows() * p, a.cols() * q, |r, c| &a[(r / p, c / q)] * &b[(r % p, c % q)])
}

fn kron_all(factors: &[Matrix]) -> Matrix {
    factors
        .iter()
        .fold(Matrix::identity(1), |acc, f| kron(&acc, f))
}

/// `m` Pauli factors: anticommuting skew-hermitian generators squaring to -1.
fn jordan_wigner(n: usize, choice: SpinChoice) -> Vec<Matrix> {
    let m = n / 2;
    let z = Scalar::zero;
    let o = Scalar::one;
    let i = Scalar::i;
    let px = Matrix::from_rows(vec![vec![z(), o()], vec![o(), z()]]);
    let py = Matrix::from_rows(vec![vec![z(), -i()], vec![i(), z()]]);
    let pz = Matrix::from_rows(vec![vec![o(), z()], vec![z(), -o()]]);
    let id = Matrix::identity(2);
    let mut out = Vec::with_capacity(n);
    for a in 0..m {
        for p in [&px, &py] {
            let mut f = vec![pz.clone(); a];
            f.push(p.clone());
            f.extend(std::iter::repeat(id.clone()).take(m - a - 1));
            out.push(kron_all(&f).scale(&i()));
        }
    }
    if n % 2 == 1 {
        let sign = match choice {
            SpinChoice::Plus => i(),
            SpinChoice::Minus => -i(),
        };
        out.push(kron_all(&vec![pz.clone(); m]).scale(&sign));
    }
    out
}

impl SpinModule {
    /// Requires the norms of a rational orthogonal basis of V to have square
    /// roots in the scalar field.
    pub fn new(cl: &CliffordAlgebra, choice: SpinChoice) -> Result<SpinModule> {
        let n = cl.dim();
        let basis = orthogonal_basis(&cl.gram);
        let gens = jordan_wigner(n, choice);
        let size = gens.first().map_or(1, Matrix::rows);
        let mut gammas = vec![Matrix::zeros(size, size); n];
        for (b, g) in basis.iter().zip(&gens) {
            let norm_sq = cl.norm_sq(b);
            let norm = Scalar::sqrt_rational(&norm_sq).ok_or_else(|| {
                Error::Capability(format!(
                    "no orthonormal basis over the scalar field: sqrt({norm_sq}) is missing"
                ))
            })?;
            let inv = norm.inv()?;
            // e_j = sum_i <e_j, u_i> u_i with u_i = b_i / |b_i|
            let gb = rat_mul_vec(&cl.gram, b);
            for (j, gamma) in gammas.iter_mut().enumerate() {
                let c = Scalar::from(gb[j].clone()) * &inv;
                *gamma = gamma.add(&g.scale(&c));
            }
        }
        Ok(SpinModule { gammas, choice })
    }

    pub fn dim(&self) -> usize {
        self.gammas.first().map_or(1, Matrix::rows)
    }

    pub fn monomial(&self, mask: u32) -> Matrix {
        mask_indices(mask)
            .into_iter()
            .fold(Matrix::identity(self.dim()), |acc, j| &acc * &self.gammas[j])
    }
}

/// Matrix of an element of `H (x) C(V)` on `X (x) S`.
pub fn represent(rep: &MatrixRep, spin: &SpinModule, e: &HCliffordElement) -> Matrix {
    let n = rep.dim() * spin.dim();
    let mut out = Matrix::zeros(n, n);
    for (mask, h) in &e.terms {
        out = out.add(&kron(&rep.hecke_element(&e.alg, h), &spin.monomial(*mask)));
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct CohomologyReport {
    pub dim_total: usize,
    pub dim_kernel: usize,
    pub rank: usize,
    pub dim_kernel_cap_image: usize,
    pub dim_cohomology: usize,
    pub d_is_zero: bool,
    pub spin_choice: SpinChoice,
}

pub struct DiracOperator {
    pub d: Matrix,
    pub spin: SpinModule,
}

impl DiracOperator {
    pub fn on_module(alg: &Arc<HeckeAlgebra>, rep: &MatrixRep, choice: SpinChoice) -> Result<DiracOperator> {
        let cl = clifford_of(alg);
        let spin = SpinModule::new(&cl, choice)?;
        let d = represent(rep, &spin, &dirac_element(alg)?);
        Ok(DiracOperator { d, spin })
    }

    /// `H^D = ker D / (ker D cap im D)`.
    pub fn cohomology(&self) -> CohomologyReport {
        let n = self.d.rows();
        let kernel = self.d.kernel();
        let rank = self.d.rank();
        let mut cols = kernel.clone();
        cols.extend((0..n).map(|c| self.d.column(c)));
        let sum_rank = if cols.is_empty() {
            0
        } else {
            Matrix::from_columns(n, &cols).rank()
        };
        let cap = kernel.len() + rank - sum_rank;
        CohomologyReport {
            dim_total: n,
            dim_kernel: kernel.len(),
            rank,
            dim_kernel_cap_image: cap,
            dim_cohomology: kernel.len() - cap,
            d_is_zero: rank == 0,
            spin_choice: self.spin.choice,
        }
    }
}

/// `D^2` against `-Omega + Omega_W~` on the module.
pub fn module_square_identity(alg: &Arc<HeckeAlgebra>, rep: &MatrixRep, choice: SpinChoice) -> Result<bool> {
    let op = DiracOperator::on_module(alg, rep, choice)?;
    let cl = clifford_of(alg);
    let omega = HCliffordElement::tensor(
        &HeckeElement::casimir(alg),
        &super::clifford::CliffordElement::one(),
        &cl,
    );
    let rhs = omega_wtilde_image(alg, &cl)?.sub(&omega);
    Ok(&op.d * &op.d == represent(rep, &op.spin, &rhs))
}

/// Which direction of the Dirac inequality to test.
pub type InequalityMode = FormKind;

/// Bullet: `|Re nu|^2 - |Im nu|^2 >= |rho^vee|^2`; star: `<=`.
pub fn dirac_inequality(alg: &HeckeAlgebra, nu: &[Scalar], mode: InequalityMode) -> Result<bool> {
    let rs = &alg.rs;
    let re: Vec<Scalar> = nu.iter().map(Scalar::re).collect();
    let im: Vec<Scalar> = nu.iter().map(|c| c.im()).collect();
    let rho: Vec<Scalar> = rs.rho_k_vee().into_iter().map(Scalar::from).collect();
    let lhs = &rs.dual_inner(&re, &re) - &rs.dual_inner(&im, &im);
    let diff = &lhs - &rs.dual_inner(&rho, &rho);
    let s = diff.sign()?;
    Ok(match mode {
        FormKind::Bullet => s != Sign::Negative,
        FormKind::Star => s != Sign::Positive,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NonUnitarityCertificate {
    /// `D^2 x = lambda x` for `x` = spherical vector (x) spin vector.
    pub eigenvalue: Scalar,
    pub verified: bool,
    /// `lambda > 0` rules out a positive definite bullet form, since then
    /// `<D^2 x, x> = -<Dx, Dx> <= 0`.
    pub certifies: bool,
}

pub fn non_unitarity_certificate(ps: &PrincipalSeries, choice: SpinChoice) -> Result<NonUnitarityCertificate> {
    let alg = ps.alg();
    let rs = &alg.rs;
    let rep = ps.generator_rep()?;
    let op = DiracOperator::on_module(alg, &rep, choice)?;
    let dim_s = op.spin.dim();
    let n = op.d.rows();
    // spherical vector sum_w t_w (x) first spin basis vector
    let x: Vec<Scalar> = (0..n)
        .map(|r| if r % dim_s == 0 { Scalar::one() } else { Scalar::zero() })
        .collect();
    let d2 = &op.d * &op.d;
    let image = d2.mul_vec(&x);
    let rho: Vec<Scalar> = rs.rho_k_vee().into_iter().map(Scalar::from).collect();
    let lambda = &rs.dual_inner(&rho, &rho) - &rs.dual_inner(ps.nu(), ps.nu());
    let verified = image.iter().zip(&x).all(|(a, b)| a == &(&lambda * b));
    let certifies = verified && lambda.sign().map_or(false, |s| s == Sign::Positive);
    Ok(NonUnitarityCertificate {
        eigenvalue: lambda,
        verified,
        certifies,
    })
}

type CMatrix = Vec<Vec<Complex64>>;

fn to_float(m: &Matrix) -> CMatrix {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m[(r, c)].to_complex()).collect())
        .collect()
}

fn cmul(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let k = b.len();
    let mut out = vec![vec![Complex64::new(0.0, 0.0); m]; n];
    for i in 0..n {
        for l in 0..k {
            let x = a[i][l];
            if x == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in 0..m {
                out[i][j] += x * b[l][j];
            }
        }
    }
    out
}

/// Largest entry of `D^2 + Omega - Omega_W~` on `X(nu) (x) S`, with the
/// square computed in double precision.
pub fn float_square_residual(ps: &PrincipalSeries, choice: SpinChoice) -> Result<f64> {
    let alg = ps.alg();
    let rep = ps.generator_rep()?;
    let op = DiracOperator::on_module(alg, &rep, choice)?;
    let cl = clifford_of(alg);
    let image = to_float(&represent(&rep, &op.spin, &omega_wtilde_image(alg, &cl)?));
    let d = to_float(&op.d);
    let d2 = cmul(&d, &d);
    let omega = ps.alg().rs.dual_inner(ps.nu(), ps.nu()).to_complex();
    let mut worst: f64 = 0.0;
    for (i, row) in d2.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let diag = if i == j { omega } else { Complex64::new(0.0, 0.0) };
            worst = worst.max((v + diag - image[i][j]).norm());
        }
    }
    Ok(worst)
}
