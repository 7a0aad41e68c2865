//! Root systems in explicit rational realizations and their Weyl groups.
//!
//! Conventions: `V` carries the realization basis, `V`-dual uses the dual
//! basis so that the pairing `(v, c)` is the coordinate dot product. Type A
//! uses the simple roots as basis with the Cartan matrix as Gram matrix, B/C/D
//! the orthonormal coordinate model and G2 the simple-root basis with Gram
//! matrix `[[2,-3],[-3,6]]`.

pub mod config;
mod weyl;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::matrix::{rat_dot, rat_identity, rat_inverse, rat_mul_vec, rat_transpose};
use crate::exact::scalar::{int, rat};
use crate::exact::{Polynomial, Rational, Scalar};

pub use config::{load_config, RootConfig};
pub use weyl::{RatMatrix, WeylElement, WeylGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Series {
    A,
    B,
    C,
    D,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Label {
    pub series: Series,
    pub rank: usize,
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Label> {
        let s = s.trim();
        let unsupported = || Error::Capability(format!("unsupported root system label {s:?}"));
        let mut chars = s.chars();
        let series = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Series::A,
            Some('B') => Series::B,
            Some('C') => Series::C,
            Some('D') => Series::D,
            Some('G') => Series::G,
            _ => return Err(unsupported()),
        };
        let rank: usize = chars
            .as_str()
            .trim_start_matches('_')
            .parse()
            .map_err(|_| unsupported())?;
        let ok = match series {
            Series::A => (1..=5).contains(&rank),
            Series::B | Series::C => (2..=4).contains(&rank),
            Series::D => (3..=4).contains(&rank),
            Series::G => rank == 2,
        };
        if !ok {
            return Err(unsupported());
        }
        Ok(Label { series, rank })
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.series {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::G => 'G',
        };
        write!(f, "{c}{}", self.rank)
    }
}

/// Sub-datum spanned by a subset of the simple roots.
#[derive(Clone, Debug)]
pub struct Parabolic {
    pub subset: Vec<usize>,
    /// Indices into the ambient positive root list.
    pub positive_roots: Vec<usize>,
    pub rho_vee: Vec<Rational>,
    /// Indices of the elements of `W_M` in the ambient group.
    pub weyl: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub label: Label,
    pub dim: usize,
    /// Invariant form on V in the realization basis.
    pub gram: RatMatrix,
    /// Induced form on V-dual.
    pub gram_dual: RatMatrix,
    pub simple_roots: Vec<Vec<Rational>>,
    pub simple_coroots: Vec<Vec<Rational>>,
    /// Positive roots ordered by height; the first `rank` are simple.
    pub positive_roots: Vec<Vec<Rational>>,
    pub positive_coroots: Vec<Vec<Rational>>,
    /// Expansion of each positive root in simple roots.
    pub root_heights: Vec<Vec<Rational>>,
    /// Parameter of each simple root.
    pub k_simple: Vec<Rational>,
    /// Parameter of each positive root.
    pub k_root: Vec<Rational>,
    /// Index of the W-orbit of each simple root.
    pub orbit_of_simple: Vec<usize>,
    pub weyl: WeylGroup,
    /// `reflections[b]` is the Weyl element `s_beta` for positive root `b`.
    pub reflections: Vec<usize>,
    /// Signed permutation action: `root_action[w][b]` is `(sign, index)` with
    /// `w(beta_b) = sign * beta_index`.
    root_action: Vec<Vec<(i8, usize)>>,
    reflection_root: HashMap<usize, usize>,
}

impl RootSystem {
    /// Builds the system with the given parameter per W-orbit of simple
    /// roots. An empty slice means `k = 1`; a single value is used for every
    /// orbit.
    pub fn new(label: Label, k: &[Rational]) -> Result<RootSystem> {
        let (gram, simple_roots) = realization(label);
        let dim = gram.len();
        let coroot = |r: &Vec<Rational>| -> Vec<Rational> {
            let gr = rat_mul_vec(&gram, r);
            let norm = rat_dot(r, &gr);
            gr.iter().map(|x| x * int(2) / &norm).collect()
        };
        let simple_coroots: Vec<Vec<Rational>> = simple_roots.iter().map(coroot).collect();
        let rank = label.rank;

        let reflect = |alpha: &Vec<Rational>, cov: &Vec<Rational>| -> RatMatrix {
            (0..dim)
                .map(|i| {
                    (0..dim)
                        .map(|j| {
                            let id = if i == j { int(1) } else { int(0) };
                            id - &alpha[i] * &cov[j]
                        })
                        .collect()
                })
                .collect()
        };
        let simple_mats: Vec<RatMatrix> = (0..rank)
            .map(|i| reflect(&simple_roots[i], &simple_coroots[i]))
            .collect();
        let simple_dual: Vec<RatMatrix> = (0..rank)
            .map(|i| reflect(&simple_coroots[i], &simple_roots[i]))
            .collect();

        // Close the simple roots under the simple reflections.
        let mut roots: Vec<Vec<Rational>> = simple_roots.clone();
        let mut head = 0;
        while head < roots.len() {
            for m in &simple_mats {
                let r = rat_mul_vec(m, &roots[head]);
                if !roots.contains(&r) {
                    roots.push(r);
                }
            }
            head += 1;
        }
        let to_simple = rat_inverse(&rat_transpose(&simple_roots))?;
        let mut positive: Vec<(Vec<Rational>, Vec<Rational>)> = roots
            .iter()
            .map(|r| (rat_mul_vec(&to_simple, r), r.clone()))
            .filter(|(c, _)| c.iter().all(|x| x >= &int(0)))
            .collect();
        positive.sort_by(|(a, _), (b, _)| {
            let ha: Rational = a.iter().sum();
            let hb: Rational = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let root_heights: Vec<Vec<Rational>> = positive.iter().map(|(c, _)| c.clone()).collect();
        let positive_roots: Vec<Vec<Rational>> = positive.into_iter().map(|(_, r)| r).collect();
        let positive_coroots: Vec<Vec<Rational>> = positive_roots.iter().map(coroot).collect();
        if 2 * positive_roots.len() != roots.len() {
            return Err(Error::Invalid("root closure is not symmetric".into()));
        }

        let weyl = WeylGroup::generate(&simple_mats, &simple_dual);
        let npos = positive_roots.len();
        let mut root_index: HashMap<Vec<Rational>, (i8, usize)> = HashMap::new();
        for (b, r) in positive_roots.iter().enumerate() {
            root_index.insert(r.clone(), (1, b));
            root_index.insert(r.iter().map(|x| -x).collect(), (-1, b));
        }
        let root_action: Vec<Vec<(i8, usize)>> = weyl
            .elements
            .iter()
            .map(|e| {
                positive_roots
                    .iter()
                    .map(|r| root_index[&rat_mul_vec(&e.matrix, r)])
                    .collect()
            })
            .collect();
        let matrix_index: HashMap<&RatMatrix, usize> = weyl
            .elements
            .iter()
            .enumerate()
            .map(|(i, e)| (&e.matrix, i))
            .collect();
        let reflections: Vec<usize> = (0..npos)
            .map(|b| matrix_index[&reflect(&positive_roots[b], &positive_coroots[b])])
            .collect();
        let reflection_root = reflections.iter().enumerate().map(|(b, &w)| (w, b)).collect();

        // Orbits of simple roots: positive root b lies in the orbit of the
        // simple root it is conjugate to.
        let mut orbit_root = vec![usize::MAX; npos];
        for i in 0..rank {
            for action in &root_action {
                let (_, b) = action[i];
                if orbit_root[b] == usize::MAX {
                    orbit_root[b] = i;
                }
            }
        }
        let mut orbit_reps: Vec<usize> = Vec::new();
        let mut orbit_of_simple = vec![0; rank];
        for i in 0..rank {
            let rep = orbit_root[i];
            let id = match orbit_reps.iter().position(|&r| r == rep) {
                Some(id) => id,
                None => {
                    orbit_reps.push(rep);
                    orbit_reps.len() - 1
                }
            };
            orbit_of_simple[i] = id;
        }
        let norbits = orbit_reps.len();
        let k_orbit: Vec<Rational> = match k.len() {
            0 => vec![int(1); norbits],
            1 => vec![k[0].clone(); norbits],
            n if n == norbits => k.to_vec(),
            n => {
                return Err(Error::Invalid(format!(
                    "{label} has {norbits} orbit(s) of simple roots, got {n} parameter values"
                )))
            }
        };
        if k_orbit.iter().any(|x| x <= &int(0)) {
            return Err(Error::Invalid("parameters must be positive".into()));
        }
        let k_simple: Vec<Rational> = orbit_of_simple.iter().map(|&o| k_orbit[o].clone()).collect();
        let k_root: Vec<Rational> = orbit_root
            .iter()
            .map(|&i| k_simple[i].clone())
            .collect();

        let gram_dual = rat_inverse(&gram)?;
        Ok(RootSystem {
            label,
            dim,
            gram,
            gram_dual,
            simple_roots,
            simple_coroots,
            positive_roots,
            positive_coroots,
            root_heights,
            k_simple,
            k_root,
            orbit_of_simple,
            weyl,
            reflections,
            root_action,
            reflection_root,
        })
    }

    pub fn from_label(label: &str, k: &[Rational]) -> Result<RootSystem> {
        Self::new(label.parse()?, k)
    }

    pub fn rank(&self) -> usize {
        self.label.rank
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn num_orbits(&self) -> usize {
        self.orbit_of_simple.iter().max().map_or(0, |m| m + 1)
    }

    pub fn has_equal_parameters(&self) -> bool {
        self.k_simple.iter().all(|k| k == &int(1))
    }

    /// Action of `w` on positive root `b` as `(sign, index)`.
    pub fn act_on_root(&self, w: usize, b: usize) -> (i8, usize) {
        self.root_action[w][b]
    }

    /// Positive roots sent to negative roots by `w`.
    pub fn inversions(&self, w: usize) -> Vec<usize> {
        (0..self.num_positive_roots())
            .filter(|&b| self.root_action[w][b].0 < 0)
            .collect()
    }

    /// The positive root whose reflection is `w`, if `w` is a reflection.
    pub fn reflection_root(&self, w: usize) -> Option<usize> {
        self.reflection_root.get(&w).copied()
    }

    /// Cartan matrix `C[i][j] = (alpha_i, alpha_j^vee)`.
    pub fn cartan(&self) -> RatMatrix {
        self.simple_roots
            .iter()
            .map(|a| self.simple_coroots.iter().map(|c| rat_dot(a, c)).collect())
            .collect()
    }

    /// Pairing of a root (coordinates in V) with a point of V-dual.
    pub fn pair(v: &[Rational], c: &[Rational]) -> Rational {
        rat_dot(v, c)
    }

    pub fn pair_scalar(v: &[Rational], c: &[Scalar]) -> Scalar {
        v.iter()
            .zip(c)
            .map(|(a, b)| b.scale(a))
            .sum()
    }

    /// Inner product on V-dual.
    pub fn dual_inner(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let g = &self.gram_dual[i][j];
                if g != &int(0) {
                    acc += &(&a[i] * &b[j]).scale(g);
                }
            }
        }
        acc
    }

    /// Inner product on V.
    pub fn inner(&self, a: &[Rational], b: &[Rational]) -> Rational {
        rat_dot(a, &rat_mul_vec(&self.gram, b))
    }

    /// Fundamental coweights: `(alpha_i, omega_j^vee) = delta_ij`.
    pub fn fundamental_coweights(&self) -> Vec<Vec<Rational>> {
        let inv = rat_inverse(&self.simple_roots).expect("simple roots form a basis");
        rat_transpose(&inv)
    }

    /// Half sum of positive coroots.
    pub fn rho_vee(&self) -> Vec<Rational> {
        let mut acc = vec![int(0); self.dim];
        for c in &self.positive_coroots {
            for (a, x) in acc.iter_mut().zip(c) {
                *a += x;
            }
        }
        acc.iter().map(|x| x * rat(1, 2)).collect()
    }

    /// `sum_alpha k_alpha omega_alpha^vee` over simple roots.
    pub fn rho_k_vee(&self) -> Vec<Rational> {
        let mut acc = vec![int(0); self.dim];
        for (w, k) in self.fundamental_coweights().iter().zip(&self.k_simple) {
            for (a, x) in acc.iter_mut().zip(w) {
                *a += x * k;
            }
        }
        acc
    }

    /// Converts fundamental-coweight coordinates to V-dual coordinates.
    pub fn from_coweight_coords(&self, c: &[Scalar]) -> Vec<Scalar> {
        let cw = self.fundamental_coweights();
        (0..self.dim)
            .map(|j| {
                c.iter()
                    .zip(&cw)
                    .map(|(ci, w)| ci.scale(&w[j]))
                    .sum()
            })
            .collect()
    }

    /// `(alpha_i, nu)` for each simple root.
    pub fn coweight_coords(&self, nu: &[Scalar]) -> Vec<Scalar> {
        self.simple_roots
            .iter()
            .map(|a| Self::pair_scalar(a, nu))
            .collect()
    }

    /// `delta(alpha_i) = -w0(alpha_i)` as a permutation of the simple roots.
    pub fn delta_on_simple(&self) -> Vec<usize> {
        let w0 = self.weyl.longest();
        (0..self.rank())
            .map(|i| {
                let (sign, b) = self.act_on_root(w0, i);
                assert!(sign < 0 && b < self.rank(), "-w0 permutes simple roots");
                b
            })
            .collect()
    }

    /// `delta(alpha) = -w0(alpha)` on positive roots.
    pub fn delta_on_roots(&self) -> Vec<usize> {
        let w0 = self.weyl.longest();
        (0..self.num_positive_roots())
            .map(|b| self.act_on_root(w0, b).1)
            .collect()
    }

    pub fn delta_preserves_parameters(&self) -> Result<()> {
        for (i, &j) in self.delta_on_simple().iter().enumerate() {
            if self.k_simple[i] != self.k_simple[j] {
                return Err(Error::ParameterAsymmetry(i, j));
            }
        }
        Ok(())
    }

    pub fn parabolic(&self, subset: &[usize]) -> Parabolic {
        let mut subset: Vec<usize> = subset.to_vec();
        subset.sort_unstable();
        subset.dedup();
        let positive_roots: Vec<usize> = (0..self.num_positive_roots())
            .filter(|&b| {
                self.root_heights[b]
                    .iter()
                    .enumerate()
                    .all(|(i, c)| c == &int(0) || subset.contains(&i))
            })
            .collect();
        let mut rho = vec![int(0); self.dim];
        for &b in &positive_roots {
            for (a, x) in rho.iter_mut().zip(&self.positive_coroots[b]) {
                *a += x * rat(1, 2);
            }
        }
        let weyl = (0..self.weyl.order())
            .filter(|&w| self.weyl.word(w).iter().all(|i| subset.contains(i)))
            .collect();
        Parabolic {
            subset,
            positive_roots,
            rho_vee: rho,
            weyl,
        }
    }

    /// Images of the polynomial variables under `w`: `w(x_j) = sum_i M[i][j] x_i`.
    pub fn variable_images(&self, w: usize) -> Vec<Polynomial> {
        let m = &self.weyl.element(w).matrix;
        (0..self.dim)
            .map(|j| {
                let col: Vec<Rational> = (0..self.dim).map(|i| m[i][j].clone()).collect();
                Polynomial::linear_rational(&col, int(0))
            })
            .collect()
    }

    /// Action of `w` on a point of V-dual.
    pub fn act_dual(&self, w: usize, nu: &[Scalar]) -> Vec<Scalar> {
        let m = &self.weyl.element(w).dual;
        m.iter()
            .map(|row| row.iter().zip(nu).map(|(a, b)| b.scale(a)).sum())
            .collect()
    }

    /// Order of W from the Coxeter exponents, independent of enumeration.
    pub fn order_from_exponents(&self) -> usize {
        let n = self.rank();
        let exps: Vec<usize> = match self.label.series {
            Series::A => (1..=n).collect(),
            Series::B | Series::C => (0..n).map(|i| 2 * i + 1).collect(),
            Series::D => {
                let mut e: Vec<usize> = (0..n - 1).map(|i| 2 * i + 1).collect();
                e.push(n - 1);
                e
            }
            Series::G => vec![1, 5],
        };
        exps.iter().map(|e| e + 1).product()
    }

    pub fn to_json(&self) -> Value {
        let q = |v: &[Rational]| -> Vec<String> { v.iter().map(|x| x.to_string()).collect() };
        let m = |a: &RatMatrix| -> Vec<Vec<String>> { a.iter().map(|r| q(r)).collect() };
        json!({
            "schema": "hecke-forms/1",
            "type": self.label.to_string(),
            "dim": self.dim,
            "gram": m(&self.gram),
            "simple_roots": m(&self.simple_roots),
            "simple_coroots": m(&self.simple_coroots),
            "cartan": m(&self.cartan()),
            "positive_roots": m(&self.positive_roots),
            "positive_coroots": m(&self.positive_coroots),
            "k_simple": q(&self.k_simple),
            "weyl_order": self.weyl.order(),
            "longest_word": self.weyl.word(self.weyl.longest()).iter().map(|i| i + 1).collect::<Vec<_>>(),
            "rho_vee": q(&self.rho_vee()),
            "delta_on_simple": self.delta_on_simple().iter().map(|i| i + 1).collect::<Vec<_>>(),
        })
    }
}

/// Gram matrix and simple roots of the standard realization.
fn realization(label: Label) -> (RatMatrix, Vec<Vec<Rational>>) {
    let n = label.rank;
    let e = |i: usize| -> Vec<Rational> {
        (0..n).map(|j| if i == j { int(1) } else { int(0) }).collect()
    };
    let diff = |a: Vec<Rational>, b: Vec<Rational>| -> Vec<Rational> {
        a.iter().zip(&b).map(|(x, y)| x - y).collect()
    };
    match label.series {
        Series::A => {
            let gram = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| match i.abs_diff(j) {
                            0 => int(2),
                            1 => int(-1),
                            _ => int(0),
                        })
                        .collect()
                })
                .collect();
            (gram, (0..n).map(e).collect())
        }
        Series::B | Series::C | Series::D => {
            let mut simple: Vec<Vec<Rational>> = (0..n - 1).map(|i| diff(e(i), e(i + 1))).collect();
            let last = match label.series {
                Series::B => e(n - 1),
                Series::C => e(n - 1).iter().map(|x| x * int(2)).collect(),
                _ => e(n - 2).iter().zip(&e(n - 1)).map(|(a, b)| a + b).collect(),
            };
            simple.push(last);
            (rat_identity(n), simple)
        }
        Series::G => (
            vec![vec![int(2), int(-3)], vec![int(-3), int(6)]],
            vec![e(0), e(1)],
        ),
    }
}
