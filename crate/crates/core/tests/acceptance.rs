//! End-to-end acceptance suite. Each test is one criterion; the harness
//! prints one pass/fail line per criterion.

use genusone::*;
use rand::{Rng, SeedableRng};

fn q(n: i64, d: i64) -> Rational {
    Rational::ratio(n, d)
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn degree2_anchor() -> GenusOneModel<Rational> {
    // y^2 + y z^2 = x^4 + x^3 z + x^2 z^2
    GenusOneModel::BinaryQuartic(BinaryQuarticModel {
        alpha: [int(0), int(0), int(1)],
        quartic: [int(1), int(1), int(1), int(0), int(0)],
    })
}

fn cubic(text: &str) -> GenusOneModel<Rational> {
    GenusOneModel::TernaryCubic(
        TernaryCubicModel::from_polynomial(
            &SparsePolynomial::parse(&["x", "y", "z"], text).unwrap(),
        )
        .unwrap(),
    )
}

fn quadric_pair(q1: &str, q2: &str) -> GenusOneModel<Rational> {
    let vars = ["x0", "x1", "x2", "x3"];
    GenusOneModel::QuadricPair(
        QuadricPairModel::from_quadrics(
            &SparsePolynomial::parse(&vars, q1).unwrap(),
            &SparsePolynomial::parse(&vars, q2).unwrap(),
        )
        .unwrap(),
    )
}

fn pair1() -> GenusOneModel<Rational> {
    quadric_pair("x0*x1 + x0*x2 + x2*x3", "x0*x3 + x1*x2 + x1*x3")
}

fn pair2() -> GenusOneModel<Rational> {
    quadric_pair(
        "x0^2 + x1^2 + x2^2 + 3*x3^2",
        "x0^2 + 2*x1^2 + 3*x2^2 + 5*x3^2",
    )
}

fn rint(rng: &mut impl Rng, lo: i64, hi: i64) -> Rational {
    int(rng.gen_range(lo..hi))
}

fn random_model(rng: &mut rand::rngs::StdRng, degree: u8) -> GenusOneModel<Rational> {
    match degree {
        2 => GenusOneModel::BinaryQuartic(BinaryQuarticModel {
            alpha: [rint(rng, -4, 5), rint(rng, -4, 5), rint(rng, -4, 5)],
            quartic: [
                rint(rng, -4, 5),
                rint(rng, -4, 5),
                rint(rng, -4, 5),
                rint(rng, -4, 5),
                rint(rng, -4, 5),
            ],
        }),
        3 => {
            let mut coeffs: [Rational; 10] = Default::default();
            for c in coeffs.iter_mut() {
                *c = rint(rng, -4, 5);
            }
            GenusOneModel::TernaryCubic(TernaryCubicModel { coeffs })
        }
        4 => {
            let vars = ["x0", "x1", "x2", "x3"];
            let quad = |rng: &mut rand::rngs::StdRng| {
                let mut p = SparsePolynomial::zero(&vars);
                for i in 0..4 {
                    for j in i..4 {
                        let mut e = vec![0u32; 4];
                        e[i] += 1;
                        e[j] += 1;
                        p = p.add(&SparsePolynomial::monomial(&vars, &e, rint(rng, -4, 5)));
                    }
                }
                p
            };
            GenusOneModel::QuadricPair(
                QuadricPairModel::from_quadrics(&quad(rng), &quad(rng)).unwrap(),
            )
        }
        _ => unreachable!(),
    }
}

#[test]
fn criterion_01_degree2_anchor() {
    let m = degree2_anchor();
    let j = jacobian_of_model(&m).unwrap();
    assert_eq!(j.g2, q(1, 3));
    assert_eq!(j.g3, q(37, 1728));
    assert_eq!(short_weierstrass_invariants(&j).delta, int(101));
    let t = invariants_of_model(&m).unwrap();
    assert_eq!((t.c4, t.c6, t.delta), (int(64), int(296), int(101)));
    let r = check_invariant_relations(&m).unwrap();
    assert!(r.all_ok());
    assert_eq!(r.alpha, int(1));
}

#[test]
fn criterion_02_degree3_anchors() {
    let m = cubic("y^2*z + y*z^2 - x^3");
    let j = jacobian_of_model(&m).unwrap();
    // y^2 = 4x^3 + 1
    assert_eq!((j.g2.clone(), j.g3.clone()), (int(0), int(-1)));
    assert_eq!(short_weierstrass_invariants(&j).delta, int(-110592));
    assert_eq!(int(-110592), int(-1) * int(4096) * int(27));
    assert_eq!(invariants_of_model(&m).unwrap().delta, int(-27));
    let r = check_invariant_relations(&m).unwrap();
    assert!(r.all_ok());
    assert_eq!(r.alpha, q(1, 2));

    let m = cubic("y^2*z - x^3 - x*z^2");
    let j = jacobian_of_model(&m).unwrap();
    // y^2 = 4x^3 + 4x
    assert_eq!((j.g2.clone(), j.g3.clone()), (int(-4), int(0)));
    assert_eq!(short_weierstrass_invariants(&j).delta, int(-262144));
    assert_eq!(invariants_of_model(&m).unwrap().delta, int(-64));
    assert!(check_invariant_relations(&m).unwrap().all_ok());
}

#[test]
fn criterion_03_degree4_anchors() {
    let m = pair1();
    let j = jacobian_of_model(&m).unwrap();
    assert_eq!(j.g2, q(1, 3072));
    assert_eq!(j.g3, q(-161, 884736));
    assert_eq!(short_weierstrass_invariants(&j).delta, q(-15, 4096));
    assert_eq!(invariants_of_model(&m).unwrap().delta, int(-15));
    let r = check_invariant_relations(&m).unwrap();
    assert!(r.all_ok());
    assert_eq!(r.alpha, int(2));

    let m = pair2();
    let j = jacobian_of_model(&m).unwrap();
    // y^2 = 4x^3 - x
    assert_eq!((j.g2.clone(), j.g3.clone()), (int(1), int(0)));
    assert_eq!(short_weierstrass_invariants(&j).delta, int(4096));
    assert_eq!(invariants_of_model(&m).unwrap().delta, int(16777216));
    assert!(check_invariant_relations(&m).unwrap().all_ok());
}

#[test]
fn criterion_04_mod_p_smoothness_oracle() {
    let m2 = degree2_anchor();
    assert!(singular_points_mod_p(&m2, 2).unwrap().is_empty());
    assert!(singular_points_mod_p(&m2, 3).unwrap().is_empty());
    assert!(singular_points_mod_p(&cubic("y^2*z + y*z^2 - x^3"), 2)
        .unwrap()
        .is_empty());
    let p1 = pair1();
    assert!(singular_points_mod_p(&p1, 2).unwrap().is_empty());
    let pts = singular_points_mod_p(&p1, 3).unwrap();
    assert!(pts.iter().any(|pt| pt.to_string() == "(1:1:1:1)"));
}

#[test]
fn criterion_05_discriminant_iff_smooth() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(101);
    for degree in [2u8, 3, 4] {
        for _ in 0..100 {
            let m = random_model(&mut rng, degree);
            for p in [2u64, 3, 5, 7] {
                assert!(
                    smoothness_discriminant_consistency(&m, p).unwrap(),
                    "degree {degree}, p = {p}"
                );
            }
        }
    }
}

#[test]
fn criterion_06_scaling_relations_random() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(102);
    for degree in [2u8, 3, 4] {
        for _ in 0..200 {
            let m = random_model(&mut rng, degree);
            let r = check_invariant_relations(&m).unwrap();
            assert!(r.all_ok(), "degree {degree}");
        }
    }
}

#[test]
fn criterion_07_weierstrass_restriction() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(103);
    for _ in 0..200 {
        let w = WeierstrassModel {
            a1: rint(&mut rng, -5, 6),
            a2: rint(&mut rng, -5, 6),
            a3: rint(&mut rng, -5, 6),
            a4: rint(&mut rng, -5, 6),
            a6: rint(&mut rng, -5, 6),
        };
        let direct = weierstrass_invariants(&w).3;
        let via_cubic = invariants_of_model(&GenusOneModel::TernaryCubic(
            homogenize_weierstrass(&w),
        ))
        .unwrap();
        assert_eq!(direct, via_cubic);
    }
}

#[test]
fn criterion_08_ternary_normalization_monomials() {
    let (c4, c6) = ternary_invariant_polynomials();
    // exponent order: a, b, c, a2, a3, b1, b3, c1, c2, m
    let c4_anchors: [([u32; 10], i64); 7] = [
        ([1, 1, 1, 0, 0, 0, 0, 0, 0, 1], -216), // abcm
        ([1, 1, 0, 0, 0, 0, 0, 1, 1, 0], 144),  // ab c1 c2
        ([1, 0, 1, 0, 0, 1, 1, 0, 0, 0], 144),  // ac b1 b3
        ([0, 0, 0, 0, 1, 0, 1, 0, 0, 2], -8),   // a3 b3 m^2
        ([0, 0, 0, 0, 0, 2, 0, 2, 0, 0], 16),   // b1^2 c1^2
        ([0, 0, 0, 0, 0, 1, 0, 1, 0, 2], -8),   // b1 c1 m^2
        ([0, 0, 0, 0, 0, 0, 0, 0, 0, 4], 1),    // m^4
    ];
    let c6_anchors: [([u32; 10], i64); 7] = [
        ([2, 2, 2, 0, 0, 0, 0, 0, 0, 0], 5832),  // a^2 b^2 c^2
        ([2, 1, 1, 0, 0, 0, 1, 0, 1, 0], -3888), // a^2 bc b3 c2
        ([2, 1, 0, 0, 0, 0, 0, 0, 3, 0], 864),   // a^2 b c2^3
        ([0, 0, 0, 0, 0, 3, 0, 3, 0, 0], 64),    // b1^3 c1^3
        ([0, 0, 0, 0, 0, 2, 0, 2, 0, 2], -48),   // b1^2 c1^2 m^2
        ([0, 0, 0, 0, 0, 1, 0, 1, 0, 4], 12),    // b1 c1 m^4
        ([0, 0, 0, 0, 0, 0, 0, 0, 0, 6], -1),    // m^6
    ];
    for (e, c) in c4_anchors {
        assert_eq!(c4.coefficient(&e), Some(&int(c)), "c4 monomial {e:?}");
    }
    for (e, c) in c6_anchors {
        assert_eq!(c6.coefficient(&e), Some(&int(c)), "c6 monomial {e:?}");
    }
}

#[test]
fn criterion_09_qseries_suite() {
    let e4 = eisenstein_series(4, 10).unwrap();
    let e6 = eisenstein_series(6, 10).unwrap();
    assert_eq!(e4.coefficient(0), &int(1));
    assert_eq!(e6.coefficient(0), &int(1));
    for n in 1..10u64 {
        assert_eq!(
            e4.coefficient(n as usize),
            &(int(240) * divisor_sum(n, 3))
        );
        assert_eq!(
            e6.coefficient(n as usize),
            &(int(-504) * divisor_sum(n, 5))
        );
    }
    let d = discriminant_series(50).unwrap();
    for c in d.coefficients() {
        assert!(c.is_integer());
    }
    assert_eq!(d, eta_product(50));
    for p in [5u64, 7, 11, 13] {
        assert!(hasse_congruence_check(p, 50).unwrap(), "p = {p}");
    }
}

#[test]
fn criterion_10_covariance_suite() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(104);

    // i, j covariance under GL2 (weights 4 and 6)
    let vars2 = ["x", "z"];
    let mut done = 0;
    while done < 100 {
        let m: Vec<Vec<Rational>> = (0..2)
            .map(|_| (0..2).map(|_| rint(&mut rng, -4, 5)).collect())
            .collect();
        let det = &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]);
        if det.is_zero() {
            continue;
        }
        let mut quartic = SparsePolynomial::zero(&vars2);
        for k in 0..5u32 {
            quartic = quartic.add(&SparsePolynomial::monomial(
                &vars2,
                &[4 - k, k],
                rint(&mut rng, -4, 5),
            ));
        }
        let to_model = |p: &SparsePolynomial<Rational>| BinaryQuarticModel {
            alpha: [int(0), int(0), int(0)],
            quartic: {
                let mut out: [Rational; 5] = Default::default();
                for (e, c) in p.terms() {
                    out[e[1] as usize] = c.clone();
                }
                out
            },
        };
        let ij0 = quartic_ij(&to_model(&quartic).quartic);
        let moved = quartic.substitute_linear(&m).unwrap();
        let ij1 = quartic_ij(&to_model(&moved).quartic);
        assert_eq!(ij1.first, &ij0.first * &det.pow(4));
        assert_eq!(ij1.second, &ij0.second * &det.pow(6));
        done += 1;
    }

    // S, T covariance under GL3 (weights 4 and 6)
    let mut done = 0;
    while done < 100 {
        let m: Vec<Vec<Rational>> = (0..3)
            .map(|_| (0..3).map(|_| rint(&mut rng, -3, 4)).collect())
            .collect();
        let det = &(&m[0][0] * &(&(&m[1][1] * &m[2][2]) - &(&m[1][2] * &m[2][1])))
            - &(&m[0][1] * &(&(&m[1][0] * &m[2][2]) - &(&m[1][2] * &m[2][0])))
            + &(&m[0][2] * &(&(&m[1][0] * &m[2][1]) - &(&m[1][1] * &m[2][0])));
        if det.is_zero() {
            continue;
        }
        let t = match random_model(&mut rng, 3) {
            GenusOneModel::TernaryCubic(t) => t,
            _ => unreachable!(),
        };
        let moved = TernaryCubicModel::from_polynomial(
            &t.polynomial().substitute_linear(&m).unwrap(),
        )
        .unwrap();
        let st0 = aronhold_st(&t);
        let st1 = aronhold_st(&moved);
        assert_eq!(st1.first, &st0.first * &det.pow(4));
        assert_eq!(st1.second, &st0.second * &det.pow(6));
        done += 1;
    }

    // Weierstrass transform weight laws
    for _ in 0..100 {
        let w = WeierstrassModel {
            a1: rint(&mut rng, -4, 5),
            a2: rint(&mut rng, -4, 5),
            a3: rint(&mut rng, -4, 5),
            a4: rint(&mut rng, -4, 5),
            a6: rint(&mut rng, -4, 5),
        };
        let u = loop {
            let u = q(rng.gen_range(-5..6), rng.gen_range(1..4));
            if !u.is_zero() {
                break u;
            }
        };
        let (r, s, t) = (rint(&mut rng, -3, 4), rint(&mut rng, -3, 4), rint(&mut rng, -3, 4));
        let moved = weierstrass_transform(&w, &u, &r, &s, &t).unwrap();
        let before = weierstrass_invariants(&w).3;
        let after = weierstrass_invariants(&moved).3;
        assert_eq!(after.c4, &before.c4 / &u.pow(4));
        assert_eq!(after.c6, &before.c6 / &u.pow(6));
        assert_eq!(after.delta, &before.delta / &u.pow(12));
    }

    // f2 images land on the Jacobian for point-bearing models
    let mut done = 0;
    'outer: while done < 50 {
        let m = match random_model(&mut rng, 2) {
            GenusOneModel::BinaryQuartic(b) => b,
            _ => unreachable!(),
        };
        // search a small box for a rational point
        for x0 in -10..=10i64 {
            for y0 in -10..=10i64 {
                let (x0, y0, z0) = (int(x0), int(y0), int(1));
                match point_map_f2(&m, &x0, &y0, &z0) {
                    Ok((xi, eta)) => {
                        let j = jacobian_of_model(&GenusOneModel::BinaryQuartic(m.clone()))
                            .unwrap();
                        let rhs = &(&int(4) * &xi.pow(3)) - &(&j.g2 * &xi) - &j.g3;
                        assert_eq!(&eta * &eta, rhs);
                        done += 1;
                        continue 'outer;
                    }
                    Err(Error::PointOffCurve) | Err(Error::ChartDenominatorZero) => {}
                    Err(e) => panic!("unexpected error: {e}"),
                }
            }
        }
    }
}
