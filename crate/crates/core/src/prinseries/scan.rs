//! Rational-grid scan of the dominant chamber for bullet-unitarity.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{sign_counts, PrincipalSeries, SphericalData};
use crate::error::{Error, Result};
use crate::exact::scalar::rat;
use crate::exact::{Rational, Scalar, Sign, Signature};
use crate::hecke::HeckeAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanSpec {
    /// Upper bound for each coweight coordinate `(alpha_i, nu)`.
    pub box_bound: i64,
    /// Largest denominator of the sampled coordinates.
    pub denom: i64,
}

impl Default for ScanSpec {
    fn default() -> Self {
        ScanSpec {
            box_bound: 3,
            denom: 4,
        }
    }
}

/// Position of `(alpha, nu)` relative to `k_alpha`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CellSign {
    Minus,
    Zero,
    Plus,
}

impl CellSign {
    pub fn symbol(self) -> char {
        match self {
            CellSign::Minus => '-',
            CellSign::Zero => '0',
            CellSign::Plus => '+',
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScanPoint {
    /// Coweight coordinates `(alpha_i, nu)`.
    pub coweight: Vec<Rational>,
    pub nu: Vec<Scalar>,
    pub sign_vector: Vec<CellSign>,
    /// Signature of the t-basis bullet Gram matrix.
    pub signature: Signature,
    /// Sign counts of the normalized calR-basis diagonal.
    pub diagonal_signature: Signature,
    pub positive_definite: bool,
    pub in_closure_c_infinity: bool,
    pub norm_sq: Scalar,
}

#[derive(Clone, Debug)]
pub struct CellSummary {
    pub sign_vector: Vec<CellSign>,
    pub signature: Signature,
    pub points: usize,
    pub representative: Vec<Rational>,
    /// Every sampled point of the cell has the same signature.
    pub consistent: bool,
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub label: String,
    pub points: Vec<ScanPoint>,
    pub skipped: Vec<(Vec<Rational>, String)>,
    pub cells: Vec<CellSummary>,
}

impl ScanReport {
    /// Positive definite exactly on the closure of `C_infinity`.
    pub fn matches_theorem(&self) -> bool {
        self.points
            .iter()
            .all(|p| p.positive_definite == p.in_closure_c_infinity)
    }

    /// The t-basis and calR-basis signatures agree at every point.
    pub fn bases_agree(&self) -> bool {
        self.points.iter().all(|p| p.signature == p.diagonal_signature)
    }

    pub fn cells_consistent(&self) -> bool {
        self.cells.iter().all(|c| c.consistent)
    }

    pub fn positive_points(&self) -> impl Iterator<Item = &ScanPoint> {
        self.points.iter().filter(|p| p.positive_definite)
    }
}

/// Distinct rationals `p/q` in `(0, bound]` with `q <= denom`, ascending.
pub fn grid_values(bound: i64, denom: i64) -> Vec<Rational> {
    let mut v: Vec<Rational> = (1..=denom)
        .flat_map(|q| (1..=bound * q).map(move |p| rat(p, q)))
        .collect();
    v.sort();
    v.dedup();
    v
}

fn cartesian(values: &[Rational], rank: usize) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |v| {
                    let mut q = p.clone();
                    q.push(v.clone());
                    q
                })
            })
            .collect();
    }
    out
}

fn scan_point(data: &Arc<SphericalData>, c: &[Rational]) -> std::result::Result<ScanPoint, String> {
    let alg = &data.alg;
    let rs = &alg.rs;
    let cs: Vec<Scalar> = c.iter().cloned().map(Scalar::from).collect();
    let nu = rs.from_coweight_coords(&cs);
    let ps = data.at(nu.clone()).map_err(|e| e.to_string())?;
    let pairings = ps.root_pairings();
    let mut sign_vector = Vec::with_capacity(pairings.len());
    for (b, p) in pairings.iter().enumerate() {
        let s = match (p - &alg.k_root(b)).sign().map_err(|e| e.to_string())? {
            Sign::Negative => CellSign::Minus,
            Sign::Zero => CellSign::Zero,
            Sign::Positive => CellSign::Plus,
        };
        sign_vector.push(s);
    }
    if let Some(b) = sign_vector.iter().position(|s| *s == CellSign::Zero) {
        return Err(format!("on the wall of positive root {}", b + 1));
    }
    let signature = ps
        .bullet_gram()
        .and_then(|g| g.signature())
        .map_err(|e| e.to_string())?;
    let diagonal_signature = ps
        .calr_diagonal_formula()
        .and_then(|d| sign_counts(&d))
        .map_err(|e| e.to_string())?;
    let in_closure = c.iter().zip(&rs.k_simple).all(|(ci, k)| ci >= k);
    Ok(ScanPoint {
        coweight: c.to_vec(),
        norm_sq: ps.norm_sq(),
        nu,
        sign_vector,
        positive_definite: signature.is_positive_definite(),
        signature,
        diagonal_signature,
        in_closure_c_infinity: in_closure,
    })
}

/// Scans the dominant regular grid points and records, for each, the
/// bullet-form signature and membership in the closure of `C_infinity`.
pub fn cell_scan(alg: &Arc<HeckeAlgebra>, spec: ScanSpec) -> Result<ScanReport> {
    let rs = &alg.rs;
    if rs.rank() > 3 {
        return Err(Error::Capability("cell scan is limited to rank at most 3".into()));
    }
    if !rs.has_equal_parameters() {
        return Err(Error::Capability(
            "the unitarity region is established for equal parameters k = 1 only".into(),
        ));
    }
    if spec.box_bound < 1 || spec.denom < 1 {
        return Err(Error::Invalid("box and denominator bounds must be positive".into()));
    }
    let data = SphericalData::new(alg);
    let grid = cartesian(&grid_values(spec.box_bound, spec.denom), rs.rank());
    let results: Vec<std::result::Result<ScanPoint, String>> =
        grid.par_iter().map(|c| scan_point(&data, c)).collect();
    let mut points = Vec::new();
    let mut skipped = Vec::new();
    for (c, r) in grid.into_iter().zip(results) {
        match r {
            Ok(p) => points.push(p),
            Err(reason) => skipped.push((c, reason)),
        }
    }
    let mut cells: BTreeMap<Vec<CellSign>, CellSummary> = BTreeMap::new();
    for p in &points {
        cells
            .entry(p.sign_vector.clone())
            .and_modify(|c| {
                c.points += 1;
                c.consistent &= c.signature == p.signature;
            })
            .or_insert_with(|| CellSummary {
                sign_vector: p.sign_vector.clone(),
                signature: p.signature,
                points: 1,
                representative: p.coweight.clone(),
                consistent: true,
            });
    }
    Ok(ScanReport {
        label: rs.label.to_string(),
        points,
        skipped,
        cells: cells.into_values().collect(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ShiftSample {
    pub nu: Vec<Scalar>,
    pub hermitian: bool,
    pub positive_definite: bool,
}

/// Samples `nu + b` with `nu` dominant real and `b != 0` purely imaginary.
pub fn imaginary_shift_scan(
    alg: &Arc<HeckeAlgebra>,
    samples: usize,
    seed: u64,
) -> Result<Vec<ShiftSample>> {
    let rs = &alg.rs;
    let data = SphericalData::new(alg);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(samples);
    while out.len() < samples {
        let re: Vec<Scalar> = (0..rs.rank())
            .map(|_| Scalar::frac(rng.gen_range(1..=12), rng.gen_range(1..=4)))
            .collect();
        let im: Vec<Rational> = (0..rs.rank())
            .map(|_| rat(rng.gen_range(-4..=4), rng.gen_range(1..=4)))
            .collect();
        if im.iter().all(Zero::is_zero) {
            continue;
        }
        let coords: Vec<Scalar> = re
            .iter()
            .zip(&im)
            .map(|(r, b)| r + &Scalar::i().scale(b))
            .collect();
        let nu = rs.from_coweight_coords(&coords);
        let ps: PrincipalSeries = data.at(nu.clone())?;
        let g = match ps.bullet_gram() {
            Ok(g) => g,
            Err(Error::NonRegular) => continue,
            Err(e) => return Err(e),
        };
        let hermitian = g.is_hermitian();
        let positive_definite = hermitian && g.signature()?.is_positive_definite();
        out.push(ShiftSample {
            nu,
            hermitian,
            positive_definite,
        });
    }
    Ok(out)
}
