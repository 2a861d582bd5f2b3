use orbeuler::localsing::*;
use orbeuler::ratkit::q;
use orbeuler::Rational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn coefficient() -> impl Strategy<Value = Rational> {
    (0i64..=24).prop_map(|n| q(n, 24))
}

fn ordinary(coeffs: &[Rational]) -> EulerValue {
    euler_ordinary(coeffs).unwrap()
}

fn cusp_star(d: Rational) -> [StarArm; 3] {
    [StarArm::new(2, 1, q(0, 1)).unwrap(), StarArm::new(3, 1, q(0, 1)).unwrap(), StarArm::new(1, 0, d).unwrap()]
}

fn cusp_closed_form(alpha: &Rational) -> Rational {
    if *alpha <= q(1, 6) {
        q(1, 1) - q(2, 1) * alpha
    } else if *alpha <= q(5, 6) {
        q(3, 2) * (alpha - q(5, 6)).square()
    } else {
        q(0, 1)
    }
}

#[test]
fn sbar_oracle_matches_closed_form() {
    let mut cases = 0;
    for n in 2..=8u64 {
        for l1 in 1..n {
            for l2 in 1..n {
                for l3 in 1..n {
                    let coeffs: Vec<Rational> = [l1, l2, l3].iter().map(|&l| q(1, 1) - q(l as i64, n as i64)).collect();
                    assert_eq!(
                        ordinary(&coeffs).value,
                        sbar_oracle(n, [l1, l2, l3]).unwrap(),
                        "n={n} l=({l1},{l2},{l3})"
                    );
                    cases += 1;
                }
            }
        }
    }
    assert!(cases >= 343);
}

#[test]
fn cusp_closed_form_on_random_rationals() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0c05);
    for _ in 0..200 {
        let den: i64 = rng.gen_range(1..=500);
        let num: i64 = rng.gen_range(0..=den);
        let alpha = q(num, den);
        let v = euler_star(1, &cusp_star(alpha.clone())).unwrap();
        assert_eq!(v.value, cusp_closed_form(&alpha), "alpha = {alpha}");
    }
}

#[test]
fn ade_reciprocals() {
    let zero = || q(0, 1);
    let cases = [
        ([(2, 1), (2, 1), (2, 1)], 2, 8),
        ([(2, 1), (3, 2), (3, 2)], 2, 24),
        ([(2, 1), (3, 2), (4, 3)], 2, 48),
        ([(2, 1), (3, 2), (5, 4)], 2, 120),
    ];
    for (arms, b, order) in cases {
        let arms = arms.map(|(n, qq)| StarArm::new(n, qq, zero()).unwrap());
        let v = euler_star(b, &arms).unwrap();
        let val = validate_star(b, &arms).unwrap();
        let cover = cover_degree(&val.invariants.b0, val.triple).unwrap();
        assert_eq!(v.value, q(1, order));
        assert_eq!(v.value, q(1, 1) / cover.degree.clone());
    }
}

#[test]
fn polyhedral_cone_points_are_reciprocal_cover_degrees() {
    // three lines with coefficients 1 - 1/p_i: the quotient of C^2 by the
    // binary polyhedral group, of order 4 s^2
    let triples = [[2, 2, 3], [2, 2, 7], [2, 3, 3], [2, 3, 4], [2, 3, 5]];
    for t in triples {
        let coeffs: Vec<Rational> = t.iter().map(|&p| q(1, 1) - q(1, p)).collect();
        let inv_s = t.iter().map(|&p| q(1, p)).sum::<Rational>() - q(1, 1);
        let s = inv_s.recip();
        let cover = cover_degree(&q(1, 1), t.map(|p| p as u64)).unwrap();
        assert_eq!(cover.degree.clone(), q(4, 1) * s.square());
        assert_eq!(ordinary(&coeffs).value, cover.degree.clone().recip(), "{t:?}");
    }
}

#[test]
fn star_boundary_alpha_equals_two_beta_plus_one() {
    // cusp star at d = 1/6: alpha = 5/3, beta = 1/3
    let arms = cusp_star(q(1, 6));
    let inv = star_invariants(1, &arms);
    assert_eq!(inv.alpha, q(2, 1) * &inv.beta + q(1, 1));
    let first = (&inv.alpha - q(1, 1)).square() / (q(4, 1) * &inv.b0);
    let second = (&inv.alpha - q(1, 1) - &inv.beta) * &inv.beta / &inv.b0;
    assert_eq!(first, second);
    assert_eq!(euler_star(1, &arms).unwrap().value, first);
}

#[test]
fn star_boundary_alpha_equals_one() {
    let arms = cusp_star(q(5, 6));
    let inv = star_invariants(1, &arms);
    assert_eq!(inv.alpha, q(1, 1));
    assert_eq!(euler_star(1, &arms).unwrap().value, q(0, 1));
    assert_eq!(star_lc_status(&arms), LcStatus::Lc);
}

fn star_lc_status(arms: &[StarArm; 3]) -> LcStatus {
    let s = LocalSingularity::StarQuotient { b: 1, arms: arms.clone() };
    lc_status(&s)
}

#[test]
fn ordinary_boundary_at_total_two() {
    for coeffs in [vec![q(1, 1), q(1, 1)], vec![q(2, 3), q(2, 3), q(2, 3)], vec![q(1, 2), q(1, 2), q(1, 1)]] {
        let v = ordinary(&coeffs);
        assert_eq!(v.value, q(0, 1));
        assert_eq!(v.lc, LcStatus::Lc);
    }
}

proptest! {
    #[test]
    fn permutation_invariance(mut coeffs in prop::collection::vec(coefficient(), 1..6), seed in any::<u64>()) {
        let before = ordinary(&coeffs);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in (1..coeffs.len()).rev() {
            coeffs.swap(i, rng.gen_range(0..=i));
        }
        prop_assert_eq!(before, ordinary(&coeffs));
    }

    #[test]
    fn zero_padding(coeffs in prop::collection::vec(coefficient(), 2..6)) {
        let before = ordinary(&coeffs);
        prop_assume!(before.kind == Exactness::Exact);
        let mut padded = coeffs.clone();
        padded.push(q(0, 1));
        prop_assert_eq!(before, ordinary(&padded));
    }

    #[test]
    fn corollary_bound_and_unit_bound(coeffs in prop::collection::vec(coefficient(), 1..7)) {
        let v = ordinary(&coeffs);
        if v.lc == LcStatus::Lc {
            let a: Rational = coeffs.iter().sum();
            let half = q(1, 1) - a / q(2, 1);
            prop_assert!(v.value <= half.square());
            prop_assert!(v.value <= q(1, 1));
        } else {
            prop_assert_eq!(v.value, q(0, 1));
        }
    }

    #[test]
    fn coefficient_one_kills(mut coeffs in prop::collection::vec(coefficient(), 0..5), n in 1u64..30, qq in 0u64..30, d in coefficient()) {
        coeffs.push(q(1, 1));
        let v = ordinary(&coeffs);
        if v.lc == LcStatus::Lc {
            prop_assert_eq!(v.value, q(0, 1));
        }
        prop_assume!(qq < n && num_integer::gcd(n, qq) == 1 || n == 1);
        let qq = if n == 1 { 0 } else { qq };
        let chain = orbeuler::ratkit::ChainDescriptor::new(n, qq).unwrap();
        prop_assert_eq!(euler_cyclic(&chain, &q(1, 1), &d).unwrap().value, q(0, 1));
        prop_assert_eq!(euler_cyclic(&chain, &d, &q(1, 1)).unwrap().value, q(0, 1));
    }

    #[test]
    fn cyclic_scaling(n in 1u64..40, qq in 0u64..40, d1 in coefficient(), d2 in coefficient()) {
        prop_assume!(n == 1 && qq == 0 || qq >= 1 && qq < n && num_integer::gcd(n, qq) == 1);
        let chain = orbeuler::ratkit::ChainDescriptor::new(n, qq).unwrap();
        let v = euler_cyclic(&chain, &d1, &d2).unwrap();
        prop_assert_eq!(Rational::from(n) * v.value, ordinary(&[d1, d2]).value);
    }

    #[test]
    fn ordinary_boundary_two_largest_equals_rest(rest in prop::collection::vec((1i64..=12).prop_map(|n| q(n, 48)), 1..5)) {
        // a_n equal to the sum of the others puts the input on 2 a_n = a
        let an: Rational = rest.iter().sum();
        prop_assume!(an <= q(1, 1));
        let mut coeffs = rest.clone();
        coeffs.push(an.clone());
        let a: Rational = coeffs.iter().sum();
        let first = (q(1, 1) - &a + &an) * (q(1, 1) - &an);
        let second = (q(1, 1) - a / q(2, 1)).square();
        prop_assert_eq!(&first, &second);
        prop_assert_eq!(ordinary(&coeffs).value, first);
    }

    #[test]
    fn star_boundary_identity(b0 in (1i64..60, 1i64..60), beta in (1i64..30, 1i64..30)) {
        let b0 = q(b0.0, b0.1);
        let beta = q(beta.0, beta.1);
        let alpha = q(2, 1) * &beta + q(1, 1);
        let first = (&alpha - q(1, 1)).square() / (q(4, 1) * &b0);
        let second = (&alpha - q(1, 1) - &beta) * &beta / &b0;
        prop_assert_eq!(first, second);
    }

    #[test]
    fn lc_values_at_most_one(b in 1u64..4, arms in prop::array::uniform3((1u64..8, 0u64..8, coefficient()))) {
        let arms: Vec<_> = arms.into_iter().collect();
        let built: Result<Vec<StarArm>, _> = arms
            .iter()
            .map(|(n, qq, d)| StarArm::new(*n, if *n == 1 { 0 } else { *qq }, d.clone()))
            .collect();
        let Ok(built) = built else { return Ok(()) };
        let arms: [StarArm; 3] = built.try_into().unwrap();
        if let Ok(v) = euler_star(b, &arms) {
            if v.lc == LcStatus::Lc {
                prop_assert!(v.value <= q(1, 1));
            } else {
                prop_assert_eq!(v.value, q(0, 1));
            }
        }
    }
}
