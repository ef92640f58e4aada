use cyclodefect::laurent::{cyclotomic_poly, nu_phi, LaurentPoly};
use cyclodefect::partition::{enumerate_multipartitions, Multicharge, Multipartition};
use cyclodefect::roots::RootOfUnity;
use cyclodefect::schur::{
    class_multicharge, defect_by_classes, defect_general, defect_integer, dipper_mathas_classes,
    schur_factors, semisimple_check, specialize_integer, CycloSpec,
};

fn tuples(l: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..l {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (lo..hi).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

fn totient(n: u32) -> u32 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u32
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn cyclotomic_polynomials_multiply_out() {
    for m in 1..=24u32 {
        let mut prod = LaurentPoly::one();
        for d in (1..=m).filter(|d| m % d == 0) {
            let phi = cyclotomic_poly(d).unwrap();
            assert_eq!(phi.max_exp(), Some(totient(d) as i64));
            assert_eq!(phi.min_exp(), Some(0));
            prod = &prod * &phi;
        }
        assert_eq!(prod, LaurentPoly::y_pow_minus_one(m as i64));
    }
}

#[test]
fn factor_rule_matches_polynomial_valuation() {
    // Entries in [0, 2e) for e = 2, 3, 4: expand once over [0, 8), then
    // compare against every e whose range covers the charge.
    let mut checked = 0;
    for l in 1..=3 {
        for n in 0..=5 {
            let mps = enumerate_multipartitions(l, n);
            for s in tuples(l, 0, 8) {
                let top = *s.iter().max().unwrap();
                let s = Multicharge(s);
                for mp in &mps {
                    let Ok(poly) = specialize_integer(mp, &s) else {
                        continue;
                    };
                    for e in (2..=4u32).filter(|&e| top < 2 * e as i64) {
                        assert_eq!(
                            defect_integer(mp, &s, e).unwrap(),
                            nu_phi(&poly, e).unwrap(),
                            "{mp} s={s} e={e}"
                        );
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn level_one_defect_counts_pairs_on_good_instances() {
    for l in 1..=3 {
        for n in 0..=4 {
            for s in tuples(l, 0, 4) {
                let s = Multicharge(
                    s.iter()
                        .enumerate()
                        .map(|(a, v)| v + 10 * a as i64)
                        .collect(),
                );
                for mp in enumerate_multipartitions(l, n) {
                    if specialize_integer(&mp, &s).is_ok() {
                        assert_eq!(defect_integer(&mp, &s, 1).unwrap(), n * (l - 1));
                    }
                }
            }
        }
    }
}

#[test]
fn degree_span_is_the_sum_of_factor_spans() {
    for l in 1..=3 {
        for n in 0..=4 {
            for s in tuples(l, 0, 3) {
                let s = Multicharge(s);
                for mp in enumerate_multipartitions(l, n) {
                    let Ok(poly) = specialize_integer(&mp, &s) else {
                        continue;
                    };
                    let f = schur_factors(&mp);
                    let spans: i64 = f.qints.iter().map(|&h| h as i64 - 1).sum::<i64>()
                        + f.charged_pairs(&s).map(i64::abs).sum::<i64>();
                    assert_eq!(poly.span(), spans);
                }
            }
        }
    }
}

#[test]
fn congruent_multicharges_give_equal_defects() {
    for l in 1..=3 {
        for n in 0..=4 {
            for e in 2..=4u32 {
                for s in tuples(l, 0, e as i64) {
                    let shifted: Vec<i64> = s
                        .iter()
                        .enumerate()
                        .map(|(a, v)| v + e as i64 * (a as i64 * 3 - 2))
                        .collect();
                    let (s, t) = (Multicharge(s), Multicharge(shifted));
                    for mp in enumerate_multipartitions(l, n) {
                        assert_eq!(
                            defect_integer(&mp, &s, e).unwrap(),
                            defect_integer(&mp, &t, e).unwrap()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn integer_encoding_of_general_defect() {
    for l in 1..=3 {
        for n in 0..=5 {
            for e in 2..=4u32 {
                for s in tuples(l, 0, e as i64) {
                    let s = Multicharge(s);
                    let spec = CycloSpec::from_integer_multicharge(&s, e).unwrap();
                    for mp in enumerate_multipartitions(l, n) {
                        assert_eq!(
                            defect_general(&mp, &spec).unwrap(),
                            defect_integer(&mp, &s, e).unwrap(),
                            "{mp} s={s} e={e}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn general_defect_splits_over_classes() {
    // Every specialisation of level ≤ 3 into 12th roots of unity with small
    // charges, including multi-class and u = 1 cases.
    let mut multi_class = 0;
    for l in [1usize, 2, 3] {
        for t in [1i64, 2, 3, 4, 6, 0] {
            for q_exp in [1i64, 2, 3] {
                for charges in tuples(l, -1, 3) {
                    let eta = RootOfUnity::new(12, t).unwrap();
                    let spec = CycloSpec::new(charges, q_exp, eta).unwrap();
                    let (xi, u) = spec.parameters();
                    for n in 0..=4 {
                        let classes = dipper_mathas_classes(&xi, &u, n).unwrap();
                        multi_class += usize::from(classes.len() > 1);
                        for mp in enumerate_multipartitions(l, n) {
                            assert_eq!(
                                defect_general(&mp, &spec).unwrap(),
                                defect_by_classes(&mp, &xi, &u).unwrap(),
                                "{mp} t={t} r={q_exp}"
                            );
                        }
                    }
                }
            }
        }
    }
    assert!(multi_class > 0);
}

#[test]
fn class_multicharge_is_choice_independent() {
    let u = RootOfUnity::new(12, 2).unwrap();
    let e = u.order() as i64;
    let xi: Vec<RootOfUnity> = [1, 5, 3]
        .iter()
        .map(|&t| RootOfUnity::new(12, t).unwrap())
        .collect();
    let classes = dipper_mathas_classes(&xi, &u, 3).unwrap();
    assert_eq!(classes, vec![vec![0, 1, 2]]);
    let s = class_multicharge(&[0, 1, 2], &xi, &u).unwrap();
    assert_eq!(s, vec![0, 2, 1]);
    // Any other exponents s' with ξ_j = u^{s'_j} ξ_0 are congruent mod e.
    for (j, &sj) in s.iter().enumerate() {
        for alt in -12..12 {
            if u.pow(alt).mul(&xi[0]).unwrap() == xi[j] {
                assert_eq!(alt.rem_euclid(e), sj);
            }
        }
    }
    // ...and do not change the defect.
    let mp: Multipartition = "2|1|1.1".parse().unwrap();
    let base = defect_integer(&mp, &Multicharge(s.clone()), e as u32).unwrap();
    let alt = Multicharge(vec![s[0] + e, s[1] - 2 * e, s[2] + 5 * e]);
    assert_eq!(defect_integer(&mp, &alt, e as u32).unwrap(), base);
}

#[test]
fn semisimple_specialisations_have_defect_zero() {
    let mut semisimple = 0;
    for l in 1..=2 {
        for t in 0..12 {
            for q_exp in [1i64, 2, 5] {
                for charges in tuples(l, 0, 4) {
                    let spec =
                        CycloSpec::new(charges, q_exp, RootOfUnity::new(12, t).unwrap()).unwrap();
                    let (xi, u) = spec.parameters();
                    for n in 0..=4 {
                        if !semisimple_check(&xi, &u, n).unwrap() {
                            continue;
                        }
                        semisimple += 1;
                        for mp in enumerate_multipartitions(l, n) {
                            assert_eq!(defect_general(&mp, &spec).unwrap(), 0, "{mp} t={t}");
                        }
                    }
                }
            }
        }
    }
    assert!(semisimple > 0);
}

#[test]
fn worked_defect_examples() {
    let s = Multicharge(vec![0, 2]);
    let lam: Multipartition = "3.1|2.1.1".parse().unwrap();
    assert_eq!(defect_integer(&lam, &s, 2).unwrap(), 8);
    let lam: Multipartition = "2|1|1.1".parse().unwrap();
    assert_eq!(
        defect_integer(&lam, &Multicharge(vec![0, 1, 2]), 3).unwrap(),
        1
    );
    let lam: Multipartition = "2|0|0".parse().unwrap();
    let at = |t| CycloSpec::new(vec![0, 0, 1], 1, RootOfUnity::new(12, t).unwrap()).unwrap();
    assert_eq!(defect_general(&lam, &at(4)).unwrap(), 2);
    assert_eq!(defect_general(&lam, &at(8)).unwrap(), 0);
}
