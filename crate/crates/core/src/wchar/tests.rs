use super::*;

fn rs(label: &str) -> RootSystem {
    RootSystem::from_label(label, &[]).unwrap()
}

fn trace(m: &[Vec<Rational>]) -> Rational {
    (0..m.len()).map(|i| m[i][i].clone()).sum()
}

#[test]
fn class_sizes_sum_to_order() {
    for label in ["A2", "A3", "B2", "B3", "G2"] {
        let r = rs(label);
        let d = ClassData::new(&r);
        assert_eq!((0..d.len()).map(|c| d.size(c)).sum::<usize>(), r.weyl.order());
    }
    assert_eq!(ClassData::new(&rs("A3")).len(), 5);
    assert_eq!(ClassData::new(&rs("B2")).len(), 5);
}

#[test]
fn wedge_characters_match_trace_and_determinant() {
    let r = rs("A2");
    let ch = Characters::new(&r);
    assert_eq!(ch.wedge(0).unwrap(), ch.trivial());
    assert_eq!(ch.wedge(2).unwrap(), ch.sgn());
    let v = ch.wedge(1).unwrap();
    for w in 0..r.weyl.order() {
        assert_eq!(v.value(w), &trace(&r.weyl.element(w).matrix));
    }
    // degree, reflection, rotation
    let mut vals: Vec<Rational> = v.values.clone();
    vals.sort();
    assert_eq!(vals, vec![int(-1), int(0), int(2)]);
    assert_eq!(v.inner(&v), int(1));
    assert!(ch.wedge(3).is_err());
}

#[test]
fn induced_sign_examples() {
    let r = rs("A2");
    let ch = Characters::new(&r);
    let regular = ch.induced_sign(&[]);
    assert_eq!(regular.degree(), &int(6));
    for w in 1..6 {
        assert!(regular.value(w).is_zero());
    }
    assert_eq!(ch.induced_sign(&[0, 1]), ch.sgn());
    assert_eq!(ch.induced_sign(&[0]).degree(), &int(3));
    // regular character contains each wedge power deg-many times
    for k in 0..=2 {
        let w = ch.wedge(k).unwrap();
        assert_eq!(&regular.inner(&w), w.degree());
    }
}

#[test]
fn langlands_degrees() {
    let r = rs("A2");
    let ch = Characters::new(&r);
    assert_eq!(ch.langlands(&[]), ch.trivial());
    assert_eq!(ch.langlands(&[0, 1]), ch.sgn());
    let a3 = rs("A3");
    let ch = Characters::new(&a3);
    let total: Rational = ch.subsets().iter().map(|m| ch.langlands(m).degree().clone()).sum();
    assert_eq!(total, int(24));
}

#[test]
fn wedge_totals_and_intermediate_identity() {
    for label in ["A1", "A2", "A3", "B2", "B3", "G2"] {
        let r = rs(label);
        let report = wedge_check(&r).unwrap();
        assert!(report.passed(), "{label}");
        assert_eq!(report.rows.len(), 1 << r.rank());
    }
    let a3 = wedge_check(&rs("A3")).unwrap();
    let j = a3.intermediate.iter().find(|row| row.subset == vec![1]).unwrap();
    assert_eq!(j.value, 4);
    assert_eq!(wedge_multiplicity_total(&rs("A1"), &[]).unwrap(), 1);
}

#[test]
fn hook_examples() {
    assert_eq!(composition_subset(3, &[3]).unwrap(), vec![0, 1]);
    assert_eq!(composition_subset(3, &[1, 1, 1]).unwrap(), Vec::<usize>::new());
    assert_eq!(composition_subset(4, &[2, 2]).unwrap(), vec![0, 2]);
    assert_eq!(hook_multiplicity(4, &[2, 2]).unwrap(), 1);
    for n in [3, 4] {
        for c in compositions(n) {
            assert_eq!(hook_multiplicity(n, &c).unwrap(), 1, "{c:?}");
        }
    }
    assert_eq!(compositions(4).len(), 8);
    assert!(hook_multiplicity(3, &[2, 2]).is_err());
}

#[test]
fn census() {
    let c = spin_multiplicity_census(&rs("A2")).unwrap();
    assert!(c.passed());
    assert_eq!(c.rows[1].occurrences, 2);
    assert_eq!(c.total, 4);
    assert!(spin_multiplicity_census(&rs("B3")).unwrap().passed());
}
