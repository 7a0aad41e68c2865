//! Acceptance suite: one PASS/FAIL line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hecke_forms::classify::classify_all;
use hecke_forms::cli;
use hecke_forms::dirac::{
    clifford_of, dirac_inequality, dirac_square_check, float_square_residual, omega_wtilde_image,
    represent, DiracOperator, SpinChoice,
};
use hecke_forms::exact::{Matrix, Polynomial, Rational, Scalar, Sign};
use hecke_forms::expr;
use hecke_forms::hecke::random::{random_element, random_scalar};
use hecke_forms::hecke::{HeckeAlgebra, HeckeElement};
use hecke_forms::prinseries::{
    cell_scan, imaginary_shift_scan, one_dim_module, FormKind, OneDimKind, PrincipalSeries,
    ScanReport, ScanSpec,
};
use hecke_forms::wchar::{compositions, hook_multiplicity, wedge_check};

type Check = Result<(), String>;

fn alg(label: &str) -> Arc<HeckeAlgebra> {
    HeckeAlgebra::from_label(label, &[]).unwrap()
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `w(x_j)` as a polynomial: column j of the matrix of w.
fn act_on_var(h: &Arc<HeckeAlgebra>, w: usize, j: usize) -> HeckeElement {
    let m = &h.rs.weyl.element(w).matrix;
    let col: Vec<Rational> = (0..h.nvars()).map(|i| m[i][j].clone()).collect();
    HeckeElement::vector(h, &col)
}

// 1. t_w x t_{w^-1} = w(x) + sum_{b>0, w b<0} k_b (x, b^vee) t_{s_{w b}}
fn criterion_1() -> Check {
    let mut systems: Vec<Arc<HeckeAlgebra>> = ["A1", "A2", "B2", "G2", "A3"].iter().map(|l| alg(l)).collect();
    systems.push(HeckeAlgebra::from_label("B2", &[q(1), q(2)]).unwrap());
    for h in &systems {
        let rs = &h.rs;
        for w in 0..rs.weyl.order() {
            let tw = HeckeElement::t(h, w);
            let twi = HeckeElement::t(h, rs.weyl.inverse(w));
            for j in 0..h.nvars() {
                let lhs = &(&tw * &HeckeElement::var(h, j)) * &twi;
                let mut rhs = act_on_var(h, w, j);
                for b in 0..rs.num_positive_roots() {
                    let (sign, image) = rs.act_on_root(w, b);
                    if sign < 0 {
                        let c = Scalar::from(&rs.k_root[b] * &rs.positive_coroots[b][j]);
                        rhs.add_term(rs.reflections[image], Polynomial::constant(h.nvars(), c));
                    }
                }
                ensure(lhs == rhs, || format!("{} w={:?} x{}", rs.label, rs.weyl.word(w), j + 1))?;
            }
        }
    }
    Ok(())
}

// 2. star axioms
fn criterion_2() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for label in ["A1", "A2", "B2", "G2"] {
        let h = alg(label);
        let rs = &h.rs;
        for _ in 0..100 {
            let a = random_element(&h, &mut rng, 2);
            let b = random_element(&h, &mut rng, 2);
            let c = random_scalar(&mut rng);
            let lin = &a.scale(&c) + &b;
            let ab = &a * &b;
            ensure(lin.bullet() == &a.bullet().scale(&c.conj()) + &b.bullet(), || format!("{label}: bullet not conjugate-linear"))?;
            ensure(lin.star().unwrap() == &a.star().unwrap().scale(&c.conj()) + &b.star().unwrap(), || format!("{label}: star not conjugate-linear"))?;
            ensure(a.bullet().bullet() == a, || format!("{label}: bullet not involutive"))?;
            ensure(a.star().unwrap().star().unwrap() == a, || format!("{label}: star not involutive"))?;
            ensure(ab.bullet() == &b.bullet() * &a.bullet(), || format!("{label}: bullet not anti-multiplicative"))?;
            ensure(ab.star().unwrap() == &b.star().unwrap() * &a.star().unwrap(), || format!("{label}: star not anti-multiplicative"))?;
        }
        // star = Ad t_{w0} o delta o bullet on generators, and the explicit expansion on V
        let w0 = HeckeElement::t(&h, rs.weyl.longest());
        let one_i = &Scalar::one() + &Scalar::i();
        let mut gens: Vec<HeckeElement> = (0..rs.rank()).map(|i| HeckeElement::t_word(&h, &[i])).collect();
        gens.extend((0..h.nvars()).map(|j| HeckeElement::var(&h, j).scale(&one_i)));
        for x in &gens {
            let rel = &(&w0 * &x.bullet().delta().unwrap()) * &w0;
            ensure(x.star().unwrap() == rel, || format!("{label}: relation between star and bullet fails on {}", x.render()))?;
        }
        for j in 0..h.nvars() {
            let x = HeckeElement::var(&h, j).scale(&one_i);
            let mut expected = HeckeElement::var(&h, j).scale(&one_i.conj()).neg();
            for b in 0..rs.num_positive_roots() {
                let c = Scalar::from(&rs.k_root[b] * &rs.positive_coroots[b][j]) * one_i.conj();
                expected.add_term(rs.reflections[b], Polynomial::constant(h.nvars(), c));
            }
            ensure(x.star().unwrap() == expected, || format!("{label}: star(x{}) expansion", j + 1))?;
        }
        let om = HeckeElement::casimir(&h);
        ensure(om.star().unwrap() == om && om.bullet() == om, || format!("{label}: Casimir not fixed"))?;
    }
    Ok(())
}

// 3. omega-tilde identities
fn criterion_3() -> Check {
    for label in ["A2", "B2", "G2"] {
        let h = alg(label);
        let rs = &h.rs;
        let n = h.nvars();
        let basis: Vec<Vec<Rational>> = (0..n).map(|j| (0..n).map(|i| q((i == j) as i64)).collect()).collect();
        let tilde: Vec<HeckeElement> = basis.iter().map(|v| HeckeElement::omega_tilde(&h, v)).collect();
        for (j, wt) in tilde.iter().enumerate() {
            ensure(wt.star().unwrap() == wt.neg(), || format!("{label}: star of x{}~", j + 1))?;
            ensure(wt.bullet() == *wt, || format!("{label}: bullet of x{}~", j + 1))?;
            for w in 0..rs.weyl.order() {
                let lhs = &(&HeckeElement::t(&h, w) * wt) * &HeckeElement::t(&h, rs.weyl.inverse(w));
                let m = &rs.weyl.element(w).matrix;
                let col: Vec<Rational> = (0..n).map(|i| m[i][j].clone()).collect();
                ensure(lhs == HeckeElement::omega_tilde(&h, &col), || format!("{label}: covariance w={:?}", rs.weyl.word(w)))?;
            }
        }
        for a in 0..n {
            for b in 0..n {
                let c = tilde[a].commutator(&tilde[b]);
                ensure(c.in_group_algebra(), || format!("{label}: [x{}~, x{}~] not in C[W]", a + 1, b + 1))?;
            }
        }
    }
    Ok(())
}

// 4. braid relations for R_w
fn criterion_4() -> Check {
    for label in ["A2", "B2", "G2"] {
        let h = alg(label);
        for w in 0..h.order() {
            let words = h.rs.weyl.reduced_words(w);
            let first = h.r_word(&words[0]);
            let first_cal = h.calr_word(&words[0]);
            for word in &words[1..] {
                ensure(h.r_word(word) == first, || format!("{label}: R differs on {word:?}"))?;
                ensure(h.calr_word(word) == first_cal, || format!("{label}: calR differs on {word:?}"))?;
            }
        }
    }
    Ok(())
}

fn sign_counts(values: &[Scalar]) -> (usize, usize, usize) {
    let mut c = (0, 0, 0);
    for v in values {
        match v.sign().unwrap() {
            Sign::Positive => c.0 += 1,
            Sign::Zero => c.1 += 1,
            Sign::Negative => c.2 += 1,
        }
    }
    c
}

// 5. diagonal calR-basis form
fn criterion_5() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for label in ["A2", "B2"] {
        let h = alg(label);
        let rs = &h.rs;
        let mut found = 0;
        while found < 5 {
            let c: Vec<Scalar> = (0..rs.rank())
                .map(|_| Scalar::frac(rng.gen_range(-20..=20), rng.gen_range(1..=6)))
                .collect();
            let nu = rs.from_coweight_coords(&c);
            let pairings: Vec<Scalar> = (0..rs.num_positive_roots())
                .map(|b| hecke_forms::rootdata::RootSystem::pair_scalar(&rs.positive_roots[b], &nu))
                .collect();
            let generic = pairings.iter().enumerate().all(|(b, p)| {
                let k = Scalar::from(rs.k_root[b].clone());
                !p.is_zero() && p != &k && p != &-k
            });
            if !generic {
                continue;
            }
            found += 1;
            let ps = PrincipalSeries::new(&h, nu).unwrap();
            let m = ps.calr_gram().map_err(|e| e.to_string())?;
            let mut diag = Vec::new();
            for x in 0..h.order() {
                let mut expected = Scalar::one();
                for b in 0..rs.num_positive_roots() {
                    if rs.act_on_root(x, b).0 < 0 {
                        let k = Scalar::from(rs.k_root[b].clone());
                        expected = &expected * &(&(&pairings[b] - &k) / &(&pairings[b] + &k));
                    }
                }
                for y in 0..h.order() {
                    if x != y {
                        ensure(m[(x, y)].is_zero(), || format!("{label}: off-diagonal ({x},{y}) at {c:?}"))?;
                    }
                }
                ensure(m[(x, x)] == expected, || format!("{label}: diagonal {x} at {c:?}"))?;
                diag.push(expected);
            }
            let sig = ps.bullet_gram().unwrap().signature().unwrap();
            ensure(sign_counts(&diag) == (sig.positive, sig.zero, sig.negative), || format!("{label}: signature mismatch at {c:?}"))?;
        }
    }
    Ok(())
}

// 6. hermitian criteria
fn criterion_6() -> Check {
    for label in ["A1", "A2", "B2", "G2"] {
        let h = alg(label);
        let rs = &h.rs;
        let real: Vec<Scalar> = (0..rs.rank()).map(|i| Scalar::frac(3 + i as i64, 2)).collect();
        let mut complex = real.clone();
        complex[0] = &complex[0] + &Scalar::i();
        let ps = PrincipalSeries::new(&h, rs.from_coweight_coords(&real)).unwrap();
        ensure(ps.bullet_gram().unwrap().is_hermitian(), || format!("{label}: real nu not hermitian"))?;
        let ps = PrincipalSeries::new(&h, rs.from_coweight_coords(&complex)).unwrap();
        ensure(!ps.bullet_gram().unwrap().is_hermitian(), || format!("{label}: complex nu hermitian"))?;
    }
    // star: w0 nu = -conj(nu) holds for symmetric A2 coordinates only
    let h = alg("A2");
    let rs = &h.rs;
    let mu = |nu: &[Scalar]| rs.act_dual(rs.weyl.longest(), nu);
    let good = rs.from_coweight_coords(&[Scalar::frac(5, 2), Scalar::frac(5, 2)]);
    let bad = rs.from_coweight_coords(&[Scalar::frac(5, 2), Scalar::frac(1, 3)]);
    for (nu, expect) in [(good, true), (bad, false)] {
        let neg_conj: Vec<Scalar> = nu.iter().map(|c| -c.conj()).collect();
        ensure((mu(&nu) == neg_conj) == expect, || "A2: witness pair mis-specified".into())?;
        let ps = PrincipalSeries::new(&h, nu).unwrap();
        ensure(ps.star_gram().unwrap().is_hermitian() == expect, || format!("A2: star hermitian != {expect}"))?;
    }
    // <h1, h2>_star = <t_{w0} h1, delta(h2)>_bullet on B2
    let h = alg("B2");
    let rs = &h.rs;
    let ps = PrincipalSeries::new(&h, rs.from_coweight_coords(&[Scalar::frac(7, 3), Scalar::frac(1, 2)])).unwrap();
    let gs = ps.star_gram().unwrap();
    let w0 = HeckeElement::t(&h, rs.weyl.longest());
    for x in 0..h.order() {
        for y in 0..h.order() {
            let h1 = &w0 * &HeckeElement::t(&h, x);
            let h2 = HeckeElement::t(&h, y).delta().unwrap();
            let v = ps.pairing(FormKind::Bullet, &h1, &h2).unwrap();
            ensure(gs[(x, y)] == v, || format!("B2: relation between forms fails at ({x},{y})"))?;
        }
    }
    Ok(())
}

fn scan_reports() -> Vec<(Arc<HeckeAlgebra>, ScanReport)> {
    ["A2", "B2", "G2"]
        .iter()
        .map(|l| {
            let h = alg(l);
            let r = cell_scan(&h, ScanSpec { box_bound: 3, denom: 4 }).unwrap();
            (h, r)
        })
        .collect()
}

// 7. spherical unitarity on the grid
fn criterion_7(scans: &[(Arc<HeckeAlgebra>, ScanReport)]) -> Check {
    for (h, r) in scans {
        let label = &r.label;
        ensure(r.points.len() >= 200, || format!("{label}: only {} regular points", r.points.len()))?;
        for p in &r.points {
            // closure of C_infinity: every simple coordinate at least 1
            let inside = p.coweight.iter().all(|c| c >= &q(1));
            ensure(p.positive_definite == inside, || format!("{label}: point {:?} pd={} inside={inside}", p.coweight, p.positive_definite))?;
        }
        ensure(r.matches_theorem() && r.bases_agree() && r.cells_consistent(), || format!("{label}: scan report checks"))?;
        let shifts = imaginary_shift_scan(h, 5, 7).unwrap();
        ensure(shifts.len() == 5 && shifts.iter().all(|s| !s.positive_definite), || format!("{label}: imaginary shift positive definite"))?;
    }
    Ok(())
}

// 8. Dirac square
fn criterion_8() -> Check {
    for label in ["A1", "A2", "B2"] {
        let r = dirac_square_check(&alg(label)).map_err(|e| e.to_string())?;
        ensure(r.residue_zero, || format!("{label}: residue {:?}", r.residue))?;
    }
    let h = alg("G2");
    let nu = h.rs.from_coweight_coords(&[Scalar::frac(7, 5), Scalar::frac(11, 3)]);
    let ps = PrincipalSeries::new(&h, nu).unwrap();
    for choice in [SpinChoice::Plus, SpinChoice::Minus] {
        let r = float_square_residual(&ps, choice).map_err(|e| e.to_string())?;
        ensure(r < 1e-12, || format!("G2: float residual {r}"))?;
    }
    Ok(())
}

// 9. Dirac inequality consistency
fn criterion_9(scans: &[(Arc<HeckeAlgebra>, ScanReport)]) -> Check {
    for (h, r) in scans {
        let rho: Vec<Scalar> = h.rs.rho_vee().into_iter().map(Scalar::from).collect();
        let rho_sq = h.rs.dual_inner(&rho, &rho);
        for p in r.positive_points() {
            let n = h.rs.dual_inner(&p.nu, &p.nu);
            ensure((&n - &rho_sq).sign().unwrap() != Sign::Negative, || format!("{}: |nu|^2 < |rho|^2 at {:?}", r.label, p.coweight))?;
            ensure(dirac_inequality(h, &p.nu, FormKind::Bullet).unwrap(), || format!("{}: inequality predicate", r.label))?;
        }
    }
    for label in ["A1", "A2", "B2", "G2"] {
        let h = alg(label);
        let rep = one_dim_module(&h, OneDimKind::Trivial);
        let op = DiracOperator::on_module(&h, &rep, SpinChoice::Plus).map_err(|e| e.to_string())?;
        ensure(op.d.rank() == 0, || format!("{label}: D != 0 on the trivial module"))?;
        let rho: Vec<Scalar> = h.rs.rho_vee().into_iter().map(Scalar::from).collect();
        let image = represent(&rep, &op.spin, &omega_wtilde_image(&h, &clifford_of(&h)).unwrap());
        let expected = Matrix::identity(op.spin.dim()).scale(&h.rs.dual_inner(&rho, &rho));
        ensure(image == expected, || format!("{label}: Omega_W~ on S is not |rho|^2"))?;
    }
    Ok(())
}

// 10. exterior powers in the Langlands characters
fn criterion_10() -> Check {
    for label in ["A2", "A3", "B2", "B3", "G2"] {
        let h = alg(label);
        let report = wedge_check(&h.rs).map_err(|e| e.to_string())?;
        ensure(report.rows.len() == 1 << h.rs.rank(), || format!("{label}: wrong number of subsets"))?;
        for r in &report.rows {
            ensure(r.total == 1, || format!("{label}: M={:?} total {}", r.subset, r.total))?;
        }
        for r in &report.intermediate {
            let expected = 1i64 << (h.rs.rank() - r.subset.len());
            ensure(r.value == expected && r.frobenius, || format!("{label}: J={:?} gives {}", r.subset, r.value))?;
        }
    }
    for n in [3, 4] {
        for c in compositions(n) {
            let m = hook_multiplicity(n, &c).map_err(|e| e.to_string())?;
            ensure(m == 1, || format!("hook {c:?}: multiplicity {m}"))?;
        }
    }
    Ok(())
}

// 11. classification
fn criterion_11() -> Check {
    for label in ["A1", "A2", "B2"] {
        let h = alg(label);
        let r = classify_all(&h).map_err(|e| e.to_string())?;
        let plus = r.cases.iter().find(|c| c.c0 == 1).unwrap();
        let minus = r.cases.iter().find(|c| c.c0 == -1).unwrap();
        ensure(plus.kernel_dim == 0 && plus.c_beta.as_ref().is_some_and(|c| c.iter().all(Scalar::is_zero)), || format!("{label}: c0 = 1 not the identity"))?;
        let k: Vec<Scalar> = h.rs.k_root.iter().cloned().map(Scalar::from).collect();
        ensure(minus.kernel_dim == 0 && minus.c_beta.as_ref() == Some(&k), || format!("{label}: c0 = -1 coefficients"))?;
        for c in [plus, minus] {
            ensure(c.verified.as_ref().is_some_and(|v| v.passed), || format!("{label}: c0 = {} not involutive", c.c0))?;
        }
        ensure(r.admissible_classes == 2 && r.passed(&h), || format!("{label}: {} classes", r.admissible_classes))?;
    }
    Ok(())
}

// 12. module sanity
fn criterion_12() -> Check {
    let mut systems: Vec<Arc<HeckeAlgebra>> = ["A2", "B2", "G2"].iter().map(|l| alg(l)).collect();
    systems.push(HeckeAlgebra::from_label("B2", &[q(1), q(3)]).unwrap());
    for h in &systems {
        let rs = &h.rs;
        let st = one_dim_module(h, OneDimKind::Steinberg);
        let mut weight = vec![q(0); rs.dim];
        for (i, cw) in rs.fundamental_coweights().iter().enumerate() {
            for (w, c) in weight.iter_mut().zip(cw) {
                *w -= &rs.k_simple[i] * c;
            }
        }
        for (j, w) in weight.iter().enumerate() {
            ensure(st.x[j][(0, 0)] == Scalar::from(w.clone()), || format!("{}: Steinberg weight", rs.label))?;
        }
        ensure(st.check_relations(h).is_empty(), || format!("{}: Steinberg relations", rs.label))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for h in systems.iter().take(3) {
        let rs = &h.rs;
        let c: Vec<Scalar> = (0..rs.rank()).map(|_| Scalar::frac(rng.gen_range(1..=30), 7)).collect();
        let nu = rs.from_coweight_coords(&c);
        let ps = PrincipalSeries::new(h, nu.clone()).unwrap();
        let omega = ps.action(&HeckeElement::casimir(h)).unwrap();
        let expected = Matrix::identity(h.order()).scale(&rs.dual_inner(&nu, &nu));
        ensure(omega == expected, || format!("{}: Casimir", rs.label))?;
        let w = ps.weight_check().unwrap();
        ensure(w.all_pass && w.basis_invertible, || format!("{}: weights {:?}", rs.label, w.failures))?;
    }
    Ok(())
}

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["hecke"];
    argv.extend_from_slice(args);
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

// 13. CLI
fn criterion_13() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let systems: Vec<Arc<HeckeAlgebra>> = ["A1", "A2", "B2", "G2", "A3"].iter().map(|l| alg(l)).collect();
    for n in 0..500 {
        let h = &systems[n % systems.len()];
        let e = random_element(h, &mut rng, 2);
        let back = expr::normalize(h, &e.render()).map_err(|err| err.to_string())?;
        ensure(back == e, || format!("round trip failed for {}", e.render()))?;
    }
    let (code, out, _) = run_cli(&["normalize", "--type", "A1", "x1*t[s1]"]);
    ensure(code == 0 && out == "t[s1]*(-x1) + 2\n", || format!("normalize: {code} {out:?}"))?;
    let (code, _, err) = run_cli(&["gram", "--type", "A1", "--form", "bullet", "--nu", "i"]);
    ensure(code == 1 && err.contains("form not hermitian"), || format!("gram exit {code}"))?;
    let (code, _, _) = run_cli(&["normalize", "--type", "A1", "x1 +"]);
    ensure(code == 2, || format!("syntax error exit {code}"))?;
    let (code, _, _) = run_cli(&["no-such-command"]);
    ensure(code == 2, || format!("usage error exit {code}"))?;
    for seed in ["1", "99"] {
        let a = run_cli(&["signature-scan", "--type", "A2", "--box", "2", "--denom", "2", "--seed", seed, "--out", "json"]);
        let b = run_cli(&["signature-scan", "--type", "A2", "--box", "2", "--denom", "2", "--seed", seed, "--out", "json"]);
        ensure(a == b && a.0 == 0, || "signature-scan output not deterministic".into())?;
    }
    let a = run_cli(&["dirac-check", "--type", "G2", "--float", "--seed", "5"]);
    ensure(a == run_cli(&["dirac-check", "--type", "G2", "--float", "--seed", "5"]), || "dirac-check not deterministic".into())?;
    let mut commands: Vec<Vec<&str>> = Vec::new();
    for t in ["A1", "A2", "B2"] {
        commands.push(vec!["dirac-check", "--type", t]);
        commands.push(vec!["classify", "--type", t]);
    }
    commands.push(vec!["dirac-check", "--type", "G2", "--float"]);
    for t in ["A2", "A3", "B2", "B3", "G2"] {
        commands.push(vec!["wedge-check", "--type", t]);
    }
    for t in ["A2", "B2", "G2"] {
        commands.push(vec!["signature-scan", "--type", t, "--box", "3", "--denom", "4"]);
    }
    for c in &commands {
        let (code, _, err) = run_cli(c);
        ensure(code == 0, || format!("{c:?} exited {code}: {err}"))?;
    }
    Ok(())
}

fn main() {
    let start = Instant::now();
    let scans = catch_unwind(scan_reports).ok();
    let scan_check = |f: fn(&[(Arc<HeckeAlgebra>, ScanReport)]) -> Check| -> Check {
        match &scans {
            Some(s) => f(s),
            None => Err("cell scan panicked".into()),
        }
    };
    let criteria: Vec<(&str, Box<dyn Fn() -> Check>)> = vec![
        ("presentation: conjugation formula", Box::new(criterion_1)),
        ("star axioms", Box::new(criterion_2)),
        ("omega-tilde identities", Box::new(criterion_3)),
        ("braid relations for R_w", Box::new(criterion_4)),
        ("diagonal calR-basis form", Box::new(criterion_5)),
        ("hermitian criteria", Box::new(criterion_6)),
        ("spherical unitarity on the grid", Box::new(move || scan_check(criterion_7))),
        ("Dirac square", Box::new(criterion_8)),
        ("Dirac inequality consistency", Box::new(move || scan_check(criterion_9))),
        ("exterior powers in Langlands characters", Box::new(criterion_10)),
        ("classification of involutions", Box::new(criterion_11)),
        ("module sanity", Box::new(criterion_12)),
        ("command line", Box::new(criterion_13)),
    ];
    let mut failures = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(|| check()))
            .unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({secs:.1}s)", n + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2}: FAIL  {name} ({secs:.1}s): {why}", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed in {:.1}s", criteria.len() - failures, criteria.len(), start.elapsed().as_secs_f64());
    if failures > 0 {
        std::process::exit(1);
    }
}
