//! The Clifford algebra of V with `w w' + w' w = -2 <w, w'>`, on the monomial
//! basis `e_S` (S an increasing index set, stored as a bitmask).

use std::collections::BTreeMap;
use std::fmt;

type RatMatrix = Vec<Vec<Rational>>;
use crate::exact::{Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordAlgebra {
    pub gram: RatMatrix,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliffordElement {
    pub terms: BTreeMap<u32, Scalar>,
}

fn top_bit(mask: u32) -> usize {
    31 - mask.leading_zeros() as usize
}

pub fn mask_indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask & (1 << i) != 0).collect()
}

impl CliffordElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(c: Scalar) -> Self {
        Self::monomial(0, c)
    }

    pub fn one() -> Self {
        Self::scalar(Scalar::one())
    }

    pub fn monomial(mask: u32, c: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_term(mask, c);
        e
    }

    pub fn add_term(&mut self, mask: u32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mask).or_insert_with(Scalar::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(*m, v * c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if *m == 0 {
                    format!("({c})")
                } else {
                    let e: Vec<String> = mask_indices(*m).iter().map(|i| format!("e{}", i + 1)).collect();
                    format!("({c})*{}", e.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl CliffordAlgebra {
    pub fn new(gram: RatMatrix) -> Self {
        assert!(gram.len() <= 16, "Clifford rank too large");
        CliffordAlgebra { gram }
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    fn g(&self, i: usize, j: usize) -> Scalar {
        Scalar::from(self.gram[i][j].clone())
    }

    /// `e_S e_j`, straightened.
    fn monomial_times_generator(&self, mask: u32, j: usize) -> CliffordElement {
        if mask == 0 {
            return CliffordElement::monomial(1 << j, Scalar::one());
        }
        let m = top_bit(mask);
        let rest = mask & !(1 << m);
        if m < j {
            CliffordElement::monomial(mask | (1 << j), Scalar::one())
        } else if m == j {
            CliffordElement::monomial(rest, -self.g(j, j))
        } else {
            // e_R e_m e_j = -(e_R e_j) e_m - 2 <e_m, e_j> e_R, and e_R e_j
            // only involves indices below m
            let mut out = CliffordElement::monomial(rest, -self.g(m, j).scale(&Rational::from_integer(2.into())));
            for (t, c) in self.monomial_times_generator(rest, j).terms {
                out.add_term(t | (1 << m), -c);
            }
            out
        }
    }

    pub fn mul_monomials(&self, a: u32, b: u32) -> CliffordElement {
        let mut acc = CliffordElement::monomial(a, Scalar::one());
        for j in mask_indices(b) {
            let mut next = CliffordElement::zero();
            for (m, c) in &acc.terms {
                next = next.add(&self.monomial_times_generator(*m, j).scale(c));
            }
            acc = next;
        }
        acc
    }

    pub fn mul(&self, a: &CliffordElement, b: &CliffordElement) -> CliffordElement {
        let mut out = CliffordElement::zero();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let c = ca * cb;
                out = out.add(&self.mul_monomials(*ma, *mb).scale(&c));
            }
        }
        out
    }

    pub fn generator(&self, j: usize) -> CliffordElement {
        CliffordElement::monomial(1 << j, Scalar::one())
    }

    /// The image of `v = sum v_j e_j`.
    pub fn vector(&self, v: &[Scalar]) -> CliffordElement {
        let mut out = CliffordElement::zero();
        for (j, c) in v.iter().enumerate() {
            out.add_term(1 << j, c.clone());
        }
        out
    }

    pub fn vector_rational(&self, v: &[Rational]) -> CliffordElement {
        let v: Vec<Scalar> = v.iter().cloned().map(Scalar::from).collect();
        self.vector(&v)
    }

    pub fn norm_sq(&self, v: &[Rational]) -> Rational {
        let mut acc = Rational::default();
        for (i, a) in v.iter().enumerate() {
            for (j, b) in v.iter().enumerate() {
                acc += a * b * &self.gram[i][j];
            }
        }
        acc
    }

    /// Conjugation: the anti-automorphism extending `w -> -w`; coefficients
    /// are conjugated as well.
    pub fn conjugation(&self, a: &CliffordElement) -> CliffordElement {
        let mut out = CliffordElement::zero();
        for (m, c) in &a.terms {
            let mut acc = CliffordElement::scalar(c.conj());
            for j in mask_indices(*m) {
                acc = self.mul(&self.generator(j).neg(), &acc);
            }
            out = out.add(&acc);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::exact::scalar::int;
    use crate::rootdata::RootSystem;

    #[test]
    fn anticommutation() {
        let rs = RootSystem::from_label("A2", &[]).unwrap();
        let cl = CliffordAlgebra::new(rs.gram.clone());
        for i in 0..2 {
            for j in 0..2 {
                let lhs = cl
                    .mul(&cl.generator(i), &cl.generator(j))
                    .add(&cl.mul(&cl.generator(j), &cl.generator(i)));
                let expected = CliffordElement::scalar(Scalar::from(-&rs.gram[i][j] * int(2)));
                assert_eq!(lhs, expected);
            }
        }
    }

    #[test]
    fn associativity_on_random_monomials() {
        let rs = RootSystem::from_label("B3", &[]).unwrap();
        let mut gram = rs.gram.clone();
        // a non-orthogonal Gram exercises the cross terms
        gram[0][1] = crate::exact::scalar::rat(1, 2);
        gram[1][0] = crate::exact::scalar::rat(1, 2);
        let cl = CliffordAlgebra::new(gram);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let a = rng.gen_range(0..8u32);
            let b = rng.gen_range(0..8u32);
            let c = rng.gen_range(0..8u32);
            let ab = cl.mul_monomials(a, b);
            let bc = cl.mul_monomials(b, c);
            let lhs = cl.mul(&ab, &CliffordElement::monomial(c, Scalar::one()));
            let rhs = cl.mul(&CliffordElement::monomial(a, Scalar::one()), &bc);
            assert_eq!(lhs, rhs, "{a} {b} {c}");
        }
    }

    #[test]
    fn vector_squares_to_minus_norm() {
        let rs = RootSystem::from_label("G2", &[]).unwrap();
        let cl = CliffordAlgebra::new(rs.gram.clone());
        let v = vec![int(2), int(-1)];
        let sq = cl.mul(&cl.vector_rational(&v), &cl.vector_rational(&v));
        assert_eq!(sq, CliffordElement::scalar(Scalar::from(-cl.norm_sq(&v))));
        let conj = cl.conjugation(&cl.vector_rational(&v));
        assert_eq!(conj, cl.vector_rational(&v).neg());
        assert_eq!(cl.mul_monomials(3, 0).terms.len(), 1);
    }
}
