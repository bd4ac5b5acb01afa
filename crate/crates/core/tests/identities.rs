use std::time::Instant;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use xsolvable::classical::*;
use xsolvable::polycore::{int, rat, sturm_count, Interval, Poly, Rational};

fn draws(seed: u64, count: usize) -> Vec<(Rational, Rational)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pick = |rng: &mut ChaCha8Rng| {
        let den = rng.gen_range(1..=7);
        rat(rng.gen_range(-9 * den..=9 * den), den)
    };
    (0..count).map(|_| (pick(&mut rng), pick(&mut rng))).collect()
}

#[test]
fn identities_hold_through_degree_ten() {
    let start = Instant::now();
    let params = draws(11, 20);
    let mut checked = 0;
    for id in Identity::ALL {
        for l in 1..=10 {
            for (a, b) in &params {
                assert!(verify_identity(id, l, a, b).unwrap(), "{id} l={l} α={a} β={b}");
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 2000);
    println!("{checked} identity checks in {:?}", start.elapsed());
}

#[test]
fn identities_at_integer_collisions() {
    // parameters where binomials and leading coefficients vanish
    for id in Identity::ALL {
        for l in 1..=6 {
            for (a, b) in [(int(-1), int(-1)), (int(-3), int(2)), (int(0), int(-4)), (int(-2), int(-5))] {
                assert!(verify_identity(id, l, &a, &b).unwrap(), "{id} l={l} α={a} β={b}");
            }
        }
    }
}

#[test]
fn a_shifted_parameter_breaks_each_identity() {
    let (a, b) = (rat(2, 7), rat(-8, 3));
    for id in Identity::ALL {
        let (lhs, rhs) = id.sides(4, &a, &b).unwrap();
        assert!((&lhs - &rhs).is_zero());
        let (lhs2, _) = id.sides(4, &(&a + rat(1, 5)), &b).unwrap();
        assert!(!(&lhs2 - &rhs).is_zero(), "{id} insensitive to α");
    }
}

#[test]
fn ode_residuals_vanish_for_random_draws() {
    for (a, b) in draws(23, 20) {
        for n in 0..=10 {
            assert!(laguerre_ode_residual(&laguerre(n, &a), n, &a).is_zero(), "L n={n} α={a}");
            let p = jacobi_poly(n, &a, &b);
            assert!(jacobi_ode_residual(&p, n, &a, &b).is_zero(), "P n={n} α={a} β={b}");
        }
    }
}

#[test]
fn jacobi_parity() {
    for (a, b) in draws(5, 20) {
        for n in 0..=10 {
            let lhs = jacobi_poly(n, &a, &b).reflect();
            let sign = if n % 2 == 0 { int(1) } else { int(-1) };
            assert_eq!(lhs, jacobi_poly(n, &b, &a).scale(&sign), "n={n} α={a} β={b}");
        }
    }
}

#[test]
fn laguerre_origin_is_a_root_exactly_on_the_excluded_set() {
    for l in 1..=6usize {
        for num in -16..=4 {
            let a = rat(num, 2);
            let on_set = num % 2 == 0 && (-2 * l as i64..=-2).contains(&num);
            let m = laguerre_origin_multiplicity(l, &a);
            assert_eq!(m > 0, on_set, "l={l} α={a}");
            if on_set {
                assert_eq!(m as i64, -num / 2);
            }
        }
    }
}

#[test]
fn jacobi_endpoint_multiplicity_follows_the_negative_integer_parameter() {
    let beta = rat(3, 5);
    for l in 1..=6usize {
        for k in 1..=l {
            let a = int(-(k as i64));
            assert_eq!(jacobi_endpoint_multiplicity(l, &a, &beta, true), k, "l={l} α={a}");
            assert_eq!(jacobi_endpoint_multiplicity(l, &beta, &a, false), k);
        }
        assert_eq!(jacobi_endpoint_multiplicity(l, &rat(1, 3), &beta, true), 0);
    }
}

#[test]
fn zero_predictions_agree_with_sturm() {
    let queries = random_queries(2024, 300);
    for q in &queries {
        let pred = predict_zero_count(q).unwrap();
        assert_eq!(pred.count, exact_zero_count(q), "{q:?}");
    }
}

#[test]
fn documented_examples() {
    assert_eq!(klein_e(&int(0)), 0);
    assert_eq!(klein_e(&rat(5, 2)), 2);
    assert_eq!(klein_e(&int(3)), 2);
    let q = ZeroQuery::Laguerre { n: 3, alpha: rat(1, 2) };
    assert_eq!(predict_zero_count(&q).unwrap().count, 3);
    let q = ZeroQuery::Laguerre { n: 2, alpha: int(-3) };
    assert_eq!(predict_zero_count(&q).unwrap().count, 0);
    let q = ZeroQuery::Jacobi { n: 2, alpha: rat(-5, 2), beta: rat(-5, 2) };
    assert_eq!(predict_zero_count(&q).unwrap().count, 0);
    assert!(nodeless_condition(1, &int(0), &int(-3)).unwrap());
    assert!(!nodeless_condition(1, &int(0), &int(0)).unwrap());
    assert!(nodeless_condition(2, &rat(-5, 2), &rat(-5, 2)).unwrap());
    assert!(predict_zero_count(&ZeroQuery::Laguerre { n: 3, alpha: int(-2) }).is_err());
}

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-20i64..20, 1i64..6), 0..6)
        .prop_map(|cs| Poly::new(cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-30i64..30, 1i64..8).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn product_rule(p in small_poly(), q in small_poly()) {
        let lhs = (&p * &q).derive();
        let rhs = &(&p.derive() * &q) + &(&p * &q.derive());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_is_a_ring_map(p in small_poly(), q in small_poly(), x in small_rational()) {
        prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
        prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
    }

    #[test]
    fn division_reconstructs(p in small_poly(), q in small_poly()) {
        prop_assume!(!q.is_zero());
        let (quot, rem) = p.div_rem(&q);
        prop_assert_eq!(&(&quot * &q) + &rem, p);
        prop_assert!(rem.is_zero() || rem.degree() < q.degree());
    }

    #[test]
    fn reflection_is_an_involution(p in small_poly(), x in small_rational()) {
        prop_assert_eq!(p.reflect().reflect(), p.clone());
        prop_assert_eq!(p.reflect().eval(&x), p.eval(&-x));
    }

    #[test]
    fn sturm_counts_planted_roots(roots in prop::collection::btree_set(-20i64..20, 1..6)) {
        let p = roots.iter().fold(Poly::one(), |acc, r| &acc * &Poly::linear(rat(-*r, 4), int(1)));
        let count = sturm_count(&p, &Interval::open(int(-1), int(1))).unwrap();
        let inside = roots.iter().filter(|r| (-3..=3).contains(*r)).count();
        prop_assert_eq!(count, inside);
    }
}
