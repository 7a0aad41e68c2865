use super::*;
use crate::exact::scalar::int;

fn alg(label: &str) -> Arc<HeckeAlgebra> {
    HeckeAlgebra::from_label(label, &[]).unwrap()
}

fn coweight(alg: &Arc<HeckeAlgebra>, c: &[Scalar]) -> Vec<Scalar> {
    alg.rs.from_coweight_coords(c)
}

#[test]
fn a1_bullet_form_at_three() {
    let h = alg("A1");
    let ps = PrincipalSeries::new(&h, coweight(&h, &[Scalar::from_int(3)])).unwrap();
    let g = ps.bullet_gram().unwrap();
    assert!(g.is_hermitian());
    assert!(g.signature().unwrap().is_positive_definite());
    let d = ps.calr_gram().unwrap();
    assert_eq!(d[(1, 1)], Scalar::frac(1, 2));
    assert!(d[(0, 1)].is_zero());
    assert_eq!(ps.calr_diagonal_formula().unwrap(), vec![Scalar::one(), Scalar::frac(1, 2)]);
}

#[test]
fn a1_imaginary_parameter_is_not_hermitian() {
    let h = alg("A1");
    let ps = PrincipalSeries::new(&h, coweight(&h, &[Scalar::i()])).unwrap();
    assert!(!ps.bullet_gram().unwrap().is_hermitian());
    // w0 nu = -nu = -conj(nu)... conj(i) = -i, so w0 nu = -i = conj(nu): star fails too
    let real = PrincipalSeries::new(&h, coweight(&h, &[Scalar::from_int(3)])).unwrap();
    assert!(real.star_gram().unwrap().is_hermitian());
}

#[test]
fn a1_normalizer_sign() {
    let h = alg("A1");
    let ps = PrincipalSeries::new(&h, coweight(&h, &[Scalar::from_int(3)])).unwrap();
    let raw = ps.calr_gram_unnormalized().unwrap();
    // <calR_1, calR_1> = c/(c+k) with c = 3
    assert_eq!(raw[(0, 0)], Scalar::frac(3, 4));
    let all_roots = 2 * h.rs.num_positive_roots();
    for x in 0..2 {
        assert_eq!(ps.bprod_second_form(x, all_roots).unwrap(), raw[(x, x)]);
    }
    assert_eq!(ps.bprod_first_form(0).unwrap(), -&raw[(0, 0)]);
}

#[test]
fn invariance_and_pairing() {
    let h = alg("A2");
    let nu = coweight(&h, &[Scalar::from_int(2), Scalar::frac(1, 3)]);
    let ps = PrincipalSeries::new(&h, nu.clone()).unwrap();
    assert!(ps.check_invariance(FormKind::Bullet).unwrap());
    // the star form needs nu = -w0 conj(nu), which swaps the A2 coordinates
    assert!(!ps.check_invariance(FormKind::Star).unwrap());
    let sym = coweight(&h, &[Scalar::frac(3, 2), Scalar::frac(3, 2)]);
    let sym = PrincipalSeries::new(&h, sym).unwrap();
    assert!(sym.check_invariance(FormKind::Star).unwrap());
    assert!(sym.star_gram().unwrap().is_hermitian());
    let g = ps.bullet_gram().unwrap();
    let t1 = HeckeElement::t_word(&h, &[0]);
    let t2 = HeckeElement::t_word(&h, &[1, 0]);
    let y = h.rs.weyl.from_word(&[1, 0]);
    assert_eq!(ps.pairing(FormKind::Bullet, &t1, &t2).unwrap(), g[(1, y)]);
    // (H1): <h1 a, h2> = a(nu) <h1, h2>
    let a = HeckeElement::var(&h, 0);
    let lhs = ps.pairing(FormKind::Bullet, &(&t1 * &a), &t2).unwrap();
    assert_eq!(lhs, &nu[0] * &g[(1, y)]);
    let rhs = ps.pairing(FormKind::Bullet, &t1, &(&t2 * &a)).unwrap();
    assert_eq!(rhs, &nu[0].conj() * &g[(1, y)]);
}

#[test]
fn relations_and_casimir() {
    let h = alg("B2");
    let ps = PrincipalSeries::new(&h, coweight(&h, &[Scalar::frac(5, 2), Scalar::frac(2, 3)])).unwrap();
    assert!(ps.generator_rep().unwrap().check_relations(&h).is_empty());
    assert!(ps.casimir_acts_by_norm().unwrap());
    let report = ps.weight_check().unwrap();
    assert!(report.all_pass && report.basis_invertible);
}

#[test]
fn one_dim_modules_satisfy_relations() {
    let h = HeckeAlgebra::from_label("B2", &[int(1), int(2)]).unwrap();
    for kind in [OneDimKind::Trivial, OneDimKind::Steinberg] {
        let m = one_dim_module(&h, kind);
        assert!(m.check_relations(&h).is_empty(), "{kind:?}");
    }
}

#[test]
fn reducibility() {
    let h = alg("A2");
    let rho: Vec<Scalar> = h.rs.rho_vee().into_iter().map(Scalar::from).collect();
    assert!(PrincipalSeries::new(&h, rho.clone()).unwrap().is_reducible().unwrap());
    let two: Vec<Scalar> = rho.iter().map(|x| x.scale(&int(2))).collect();
    assert!(!PrincipalSeries::new(&h, two).unwrap().is_reducible().unwrap());
    let unequal = HeckeAlgebra::from_label("B2", &[int(1), int(2)]).unwrap();
    let ps = PrincipalSeries::new(&unequal, vec![Scalar::one(), Scalar::zero()]).unwrap();
    assert!(matches!(ps.is_reducible(), Err(Error::Capability(_))));
}

#[test]
fn small_scan() {
    let h = alg("A2");
    let report = cell_scan(&h, ScanSpec { box_bound: 2, denom: 2 }).unwrap();
    assert!(report.matches_theorem());
    assert!(report.bases_agree());
    assert!(report.cells_consistent());
    assert!(!report.skipped.is_empty());
}


#[test]
fn star_form_for_asymmetric_a2_parameter() {
    let h = alg("A2");
    let ps = PrincipalSeries::new(&h, coweight(&h, &[Scalar::from_int(2), Scalar::zero()])).unwrap();
    let report = PrincipalSeries::hermitian_report(&ps.star_gram().unwrap());
    assert!(!report.hermitian);
    assert!(report.witness.is_some());
    assert!(ps.bullet_gram().unwrap().is_hermitian());
}

#[test]
fn b2_star_and_bullet_grams_are_related() {
    let h = alg("B2");
    let ps = PrincipalSeries::new(&h, coweight(&h, &[Scalar::frac(7, 3), Scalar::frac(1, 2)])).unwrap();
    let gs = ps.star_gram().unwrap();
    let gb = ps.bullet_gram().unwrap();
    let weyl = &h.rs.weyl;
    let w0 = weyl.longest();
    for x in 0..h.order() {
        for y in 0..h.order() {
            let yy = weyl.mul(weyl.mul(w0, y), w0);
            assert_eq!(gs[(x, y)], gb[(weyl.mul(w0, x), yy)]);
        }
    }
}

#[test]
fn diagonal_formula_at_two_rho() {
    let h = alg("A2");
    let two_rho: Vec<Scalar> = h.rs.rho_vee().into_iter().map(|r| Scalar::from(r * int(2))).collect();
    let ps = PrincipalSeries::new(&h, two_rho).unwrap();
    let d = ps.calr_diagonal_formula().unwrap();
    assert!(d.iter().all(|v| v.sign().unwrap() == crate::exact::Sign::Positive));
    let m = ps.calr_gram().unwrap();
    for x in 0..h.order() {
        assert_eq!(m[(x, x)], d[x]);
    }
}
