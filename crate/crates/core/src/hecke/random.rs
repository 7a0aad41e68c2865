//! Seeded pseudo-random elements for property checks.

use std::sync::Arc;

use rand::Rng;

use super::{HeckeAlgebra, HeckeElement};
use crate::exact::{Monomial, Polynomial, Scalar};

/// Small Gaussian rational, occasionally carrying a surd.
pub fn random_scalar<R: Rng>(rng: &mut R) -> Scalar {
    let mut s = Scalar::frac(rng.gen_range(-3..=3), rng.gen_range(1..=3));
    if rng.gen_bool(0.3) {
        s += &(&Scalar::i() * &Scalar::frac(rng.gen_range(-2..=2), rng.gen_range(1..=2)));
    }
    if rng.gen_bool(0.1) {
        let surd = Scalar::basis(2 * rng.gen_range(1..4));
        s += &(&surd * &Scalar::from_int(rng.gen_range(-1..=1)));
    }
    s
}

pub fn random_poly<R: Rng>(rng: &mut R, nvars: usize, max_degree: u32) -> Polynomial {
    let mut p = Polynomial::zero(nvars);
    for _ in 0..rng.gen_range(1..=3) {
        let deg = rng.gen_range(0..=max_degree);
        let mut exps = vec![0u32; nvars];
        for _ in 0..deg {
            exps[rng.gen_range(0..nvars)] += 1;
        }
        p.add_term(Monomial(exps), random_scalar(rng));
    }
    p
}

/// Element with up to three terms and coefficients of degree at most
/// `max_degree`.
pub fn random_element<R: Rng>(
    alg: &Arc<HeckeAlgebra>,
    rng: &mut R,
    max_degree: u32,
) -> HeckeElement {
    let mut e = HeckeElement::zero(alg);
    for _ in 0..rng.gen_range(1..=3) {
        let w = rng.gen_range(0..alg.order());
        e.add_term(w, random_poly(rng, alg.nvars(), max_degree));
    }
    e
}
