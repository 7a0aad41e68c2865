//! Exact characters of W on the reflection representation, induced sign
//! characters and the alternating Langlands sums at `rho^vee`.

use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::scalar::int;
use crate::exact::{Matrix, Rational};
use crate::rootdata::RootSystem;

/// Conjugacy classes of W with a representative and size for each.
#[derive(Clone, Debug)]
pub struct ClassData {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    pub order: usize,
}

impl ClassData {
    pub fn new(rs: &RootSystem) -> Arc<ClassData> {
        let classes = rs.weyl.conjugacy_classes();
        let mut class_of = vec![0; rs.weyl.order()];
        for (c, members) in classes.iter().enumerate() {
            for &w in members {
                class_of[w] = c;
            }
        }
        Arc::new(ClassData {
            classes,
            class_of,
            order: rs.weyl.order(),
        })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn representative(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    pub fn size(&self, c: usize) -> usize {
        self.classes[c].len()
    }
}

/// A rational class function on W.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    pub data: Arc<ClassData>,
    pub values: Vec<Rational>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values
    }
}

impl ClassFunction {
    pub fn from_fn(data: &Arc<ClassData>, f: impl Fn(usize) -> Rational) -> ClassFunction {
        let values = (0..data.len()).map(|c| f(data.representative(c))).collect();
        ClassFunction {
            data: data.clone(),
            values,
        }
    }

    pub fn value(&self, w: usize) -> &Rational {
        &self.values[self.data.class_of[w]]
    }

    pub fn degree(&self) -> &Rational {
        self.value(0)
    }

    /// `(1/|W|) sum_w chi(w) psi(w)`; characters of W are real.
    pub fn inner(&self, other: &ClassFunction) -> Rational {
        let total: Rational = (0..self.data.len())
            .map(|c| int(self.data.size(c) as i64) * &self.values[c] * &other.values[c])
            .sum();
        total / int(self.data.order as i64)
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        self.zip(other, |a, b| a + b)
    }

    pub fn scale(&self, c: &Rational) -> ClassFunction {
        self.zip(self, |a, _| a * c)
    }

    fn zip(&self, other: &ClassFunction, f: impl Fn(&Rational, &Rational) -> Rational) -> ClassFunction {
        ClassFunction {
            data: self.data.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

/// Character toolkit bound to one root system.
pub struct Characters<'a> {
    pub rs: &'a RootSystem,
    pub data: Arc<ClassData>,
}

impl<'a> Characters<'a> {
    pub fn new(rs: &'a RootSystem) -> Characters<'a> {
        Characters {
            rs,
            data: ClassData::new(rs),
        }
    }

    pub fn sgn(&self) -> ClassFunction {
        ClassFunction::from_fn(&self.data, |w| int(self.rs.weyl.element(w).sign()))
    }

    pub fn trivial(&self) -> ClassFunction {
        ClassFunction::from_fn(&self.data, |_| Rational::one())
    }

    /// `chi(w)` = coefficient of `t^k` in `det(1 + t w)` on V.
    pub fn wedge(&self, k: usize) -> Result<ClassFunction> {
        if k > self.rs.dim {
            return Err(Error::Invalid(format!(
                "exterior degree {k} exceeds dim V = {}",
                self.rs.dim
            )));
        }
        Ok(ClassFunction::from_fn(&self.data, |w| {
            Matrix::from_rational(&self.rs.weyl.element(w).matrix)
                .principal_minor_sum(k)
                .as_rational()
                .expect("Weyl group matrices are rational")
                .clone()
        }))
    }

    /// Sum of all exterior powers.
    pub fn exterior_algebra(&self) -> ClassFunction {
        (0..=self.rs.dim)
            .map(|k| self.wedge(k).expect("degree in range"))
            .reduce(|a, b| a.add(&b))
            .expect("at least the trivial power")
    }

    /// `Ind_{W_M}^W sgn` by the induction formula.
    pub fn induced_sign(&self, subset: &[usize]) -> ClassFunction {
        let weyl = &self.rs.weyl;
        let members = self.parabolic_members(subset);
        let h = members.len() as i64;
        let in_h: Vec<bool> = (0..weyl.order()).map(|w| members.contains(&w)).collect();
        ClassFunction::from_fn(&self.data, |g| {
            let sum: i64 = (0..weyl.order())
                .map(|x| weyl.conjugate(x, g))
                .filter(|&y| in_h[y])
                .map(|y| weyl.element(y).sign())
                .sum();
            Rational::new(sum.into(), h.into())
        })
    }

    fn parabolic_members(&self, subset: &[usize]) -> Vec<usize> {
        (0..self.rs.weyl.order())
            .filter(|&w| self.rs.weyl.word(w).iter().all(|i| subset.contains(i)))
            .collect()
    }

    /// `<sgn, chi|_{W_J}>_{W_J}`.
    pub fn restricted_sign_multiplicity(&self, subset: &[usize], chi: &ClassFunction) -> Rational {
        let members = self.parabolic_members(subset);
        let total: Rational = members
            .iter()
            .map(|&w| int(self.rs.weyl.element(w).sign()) * chi.value(w))
            .sum();
        total / int(members.len() as i64)
    }

    /// `sum_{M <= J <= Pi} (-1)^{|J|-|M|} Ind_{W_J} sgn`.
    pub fn langlands(&self, subset: &[usize]) -> ClassFunction {
        let rank = self.rs.rank();
        let mut acc = self.trivial().scale(&Rational::zero());
        for mask in 0..(1usize << rank) {
            let j = mask_to_subset(mask, rank);
            if !subset.iter().all(|m| j.contains(m)) {
                continue;
            }
            let sign = if (j.len() - subset.len()) % 2 == 0 { 1 } else { -1 };
            acc = acc.add(&self.induced_sign(&j).scale(&int(sign)));
        }
        acc
    }

    pub fn subsets(&self) -> Vec<Vec<usize>> {
        let rank = self.rs.rank();
        (0..(1usize << rank)).map(|m| mask_to_subset(m, rank)).collect()
    }
}

pub fn mask_to_subset(mask: usize, rank: usize) -> Vec<usize> {
    (0..rank).filter(|i| mask & (1 << i) != 0).collect()
}

fn to_integer(r: &Rational) -> Result<i64> {
    if !r.is_integer() {
        return Err(Error::Invalid(format!("non-integral multiplicity {r}")));
    }
    r.to_integer()
        .try_into()
        .map_err(|_| Error::Invalid(format!("multiplicity {r} out of range")))
}

#[derive(Clone, Debug, Serialize)]
pub struct WedgeRow {
    /// Subset M of simple roots, 1-based for display.
    pub subset: Vec<usize>,
    pub degree: i64,
    /// `<X_M, wedge^k V>` for k = 0..dim V.
    pub multiplicities: Vec<i64>,
    pub total: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct IntermediateRow {
    pub subset: Vec<usize>,
    pub value: i64,
    pub expected: i64,
    /// Frobenius reciprocity held for every exterior power.
    pub frobenius: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WedgeReport {
    pub label: String,
    pub rows: Vec<WedgeRow>,
    pub intermediate: Vec<IntermediateRow>,
}

impl WedgeReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.total == 1)
            && self
                .intermediate
                .iter()
                .all(|r| r.value == r.expected && r.frobenius)
    }
}

/// Multiplicities of the exterior powers in every Langlands character, plus
/// the intermediate `2^{|Pi|-|J|}` identity for every J.
pub fn wedge_check(rs: &RootSystem) -> Result<WedgeReport> {
    let ch = Characters::new(rs);
    let wedges: Vec<ClassFunction> = (0..=rs.dim).map(|k| ch.wedge(k)).collect::<Result<_>>()?;
    let mut rows = Vec::new();
    let mut intermediate = Vec::new();
    for m in ch.subsets() {
        let l = ch.langlands(&m);
        let multiplicities: Vec<i64> = wedges
            .iter()
            .map(|w| to_integer(&l.inner(w)))
            .collect::<Result<_>>()?;
        rows.push(WedgeRow {
            subset: m.iter().map(|i| i + 1).collect(),
            degree: to_integer(l.degree())?,
            total: multiplicities.iter().sum(),
            multiplicities,
        });
        let ind = ch.induced_sign(&m);
        let mut value = Rational::zero();
        let mut frobenius = true;
        for w in &wedges {
            let restricted = ch.restricted_sign_multiplicity(&m, w);
            frobenius &= ind.inner(w) == restricted;
            value += restricted;
        }
        intermediate.push(IntermediateRow {
            subset: m.iter().map(|i| i + 1).collect(),
            value: to_integer(&value)?,
            expected: 1 << (rs.rank() - m.len()),
            frobenius,
        });
    }
    Ok(WedgeReport {
        label: rs.label.to_string(),
        rows,
        intermediate,
    })
}

/// `sum_M <X_M, wedge* V>`; equal to 1 for each M.
pub fn wedge_multiplicity_total(rs: &RootSystem, subset: &[usize]) -> Result<i64> {
    let ch = Characters::new(rs);
    to_integer(&ch.langlands(subset).inner(&ch.exterior_algebra()))
}

/// The subset `Pi \ {alpha_{n1}, alpha_{n1+n2}, ...}` of `A_{n-1}` attached to
/// a composition of n (0-based indices).
pub fn composition_subset(n: usize, composition: &[usize]) -> Result<Vec<usize>> {
    if composition.is_empty() || composition.contains(&0) || composition.iter().sum::<usize>() != n {
        return Err(Error::Invalid(format!(
            "{composition:?} is not a composition of {n}"
        )));
    }
    let mut removed = Vec::new();
    let mut partial = 0;
    for part in &composition[..composition.len() - 1] {
        partial += part;
        removed.push(partial - 1);
    }
    Ok((0..n - 1).filter(|i| !removed.contains(i)).collect())
}

/// Multiplicity of the hook `wedge^{n-k} V` in the Langlands character of
/// `S(n_1, ..., n_k)` for `A_{n-1}`.
pub fn hook_multiplicity(n: usize, composition: &[usize]) -> Result<i64> {
    if !(2..=6).contains(&n) {
        return Err(Error::Capability(format!("hook check needs 2 <= n <= 6, got {n}")));
    }
    let subset = composition_subset(n, composition)?;
    let rs = RootSystem::from_label(&format!("A{}", n - 1), &[])?;
    let ch = Characters::new(&rs);
    let k = composition.len();
    to_integer(&ch.langlands(&subset).inner(&ch.wedge(n - k)?))
}

/// All compositions of n.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusRow {
    pub degree: usize,
    /// Number of M with `<X_M, wedge^k V> > 0`.
    pub occurrences: usize,
    /// `dim wedge^k V`.
    pub dimension: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Census {
    pub rows: Vec<CensusRow>,
    pub total: i64,
    pub expected_total: i64,
}

impl Census {
    pub fn passed(&self) -> bool {
        self.total == self.expected_total
            && self.rows.iter().all(|r| r.occurrences as i64 == r.dimension)
    }
}

pub fn spin_multiplicity_census(rs: &RootSystem) -> Result<Census> {
    let ch = Characters::new(rs);
    let langlands: Vec<ClassFunction> = ch.subsets().iter().map(|m| ch.langlands(m)).collect();
    let mut rows = Vec::new();
    let mut total = 0;
    for k in 0..=rs.dim {
        let w = ch.wedge(k)?;
        let mut occurrences = 0;
        for l in &langlands {
            let m = to_integer(&l.inner(&w))?;
            total += m;
            if m > 0 {
                occurrences += 1;
            }
        }
        rows.push(CensusRow {
            degree: k,
            occurrences,
            dimension: to_integer(w.degree())?,
        });
    }
    Ok(Census {
        rows,
        total,
        expected_total: 1 << rs.rank(),
    })
}

#[cfg(test)]
mod tests;
