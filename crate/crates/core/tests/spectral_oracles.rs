mod common;

use common::*;
use num_rational::Ratio;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ucx_core::cube::{correlation, dist, dist_to_character, family_to_function};
use ucx_core::spectral::{first_level_identity, mean_identity_check, transform};
use ucx_core::{BooleanFunction, CharacterSpec, CubePoint, Sign};

fn assert_matches_naive(f: &BooleanFunction) {
    let spec = transform(f);
    let naive = naive_coefficients(f);
    for (s, expected) in naive.iter().enumerate() {
        assert_eq!(
            q(spec.coefficient(CubePoint(s as u32))),
            *expected,
            "S = {s:#b}"
        );
    }
}

#[test]
fn butterfly_matches_defining_sum_for_all_small_functions() {
    for n in 1..=3 {
        for f in all_functions(n) {
            assert_matches_naive(&f);
        }
    }
}

#[test]
fn butterfly_matches_defining_sum_on_random_functions() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for k in 0..1000 {
        let n = 1 + k % 10;
        assert_matches_naive(&random_function(n, &mut rng));
    }
}

#[test]
fn parseval_exhaustive_up_to_four() {
    for n in 1..=4 {
        for f in all_functions(n) {
            assert_eq!(transform(&f).parseval_sum(), 1i128 << (2 * n));
        }
    }
}

#[test]
fn parseval_and_weights_on_random_functions() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for n in 5..=14 {
        for _ in 0..20 {
            let f = random_function(n, &mut rng);
            let spec = transform(&f);
            assert_eq!(spec.parseval_sum(), 1i128 << (2 * n));
            let total: Q = spec.level_weights().into_iter().map(q).sum();
            assert_eq!(total, Q::from_integer(1));
        }
    }
}

#[test]
fn level_weights_match_naive() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for n in 1..=8 {
        for _ in 0..30 {
            let f = random_function(n, &mut rng);
            let got: Vec<Q> = transform(&f).level_weights().into_iter().map(q).collect();
            assert_eq!(got, naive_level_weights(&f));
        }
    }
}

#[test]
fn mean_identity_exhaustive_and_random() {
    for n in 1..=4 {
        for f in all_functions(n) {
            let (lhs, rhs) = mean_identity_check(&f);
            assert_eq!(lhs, rhs);
            let expected = frac((1 << n) - 2 * f.minus_count() as i128, 1 << n);
            assert_eq!(q(lhs), expected);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for n in 5..=14 {
        let f = random_function(n, &mut rng);
        let (lhs, rhs) = mean_identity_check(&f);
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn first_level_identity_exhaustive_and_random() {
    for n in 1..=3 {
        for family in all_families(n) {
            let naive = naive_coefficients(&family_to_function(&family));
            for i in 1..=n {
                let (coefficient, frequency_form) = first_level_identity(&family, i).unwrap();
                assert_eq!(coefficient, frequency_form);
                assert_eq!(q(coefficient), naive[1 << (i - 1)]);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for n in 4..=12 {
        for _ in 0..10 {
            let family = random_family(n, &mut rng);
            for i in 1..=n {
                let (coefficient, frequency_form) = first_level_identity(&family, i).unwrap();
                assert_eq!(coefficient, frequency_form);
                let above_half = 2 * family.frequency(i) > family.len();
                assert_eq!(coefficient.is_positive(), above_half);
            }
        }
    }
}

#[test]
fn characters_are_orthonormal() {
    for n in 1..=4 {
        for s in points(n) {
            let chi_s = BooleanFunction::character(n, CharacterSpec::new(CubePoint(s), Sign::Plus))
                .unwrap();
            for t in points(n) {
                let chi_t =
                    BooleanFunction::character(n, CharacterSpec::new(CubePoint(t), Sign::Plus))
                        .unwrap();
                let expected = if s == t { 1 } else { 0 };
                assert_eq!(
                    q(correlation(&chi_s, &chi_t).unwrap()),
                    Q::from_integer(expected)
                );
            }
        }
    }
}

#[test]
fn distance_to_character_is_half_one_minus_coefficient() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for n in 1..=8 {
        let f = random_function(n, &mut rng);
        let naive = naive_coefficients(&f);
        for s in points(n) {
            for sign in [Sign::Plus, Sign::Minus] {
                let d = dist_to_character(&f, CharacterSpec::new(CubePoint(s), sign)).unwrap();
                let signed = naive[s as usize] * sign.value() as i128;
                assert_eq!(q(d), (Q::from_integer(1) - signed) / 2);
            }
        }
    }
}

fn counted_distance(f: &BooleanFunction, g: &BooleanFunction) -> Q {
    let differ = f
        .values()
        .iter()
        .zip(g.values())
        .filter(|(a, b)| a != b)
        .count();
    frac(differ as i128, f.values().len() as i128)
}

proptest! {
    #[test]
    fn distance_is_a_metric(n in 1usize..=8, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_function(n, &mut rng);
        let g = random_function(n, &mut rng);
        let h = random_function(n, &mut rng);
        let fg = q(dist(&f, &g).unwrap());
        prop_assert_eq!(fg, counted_distance(&f, &g));
        prop_assert_eq!(fg, q(dist(&g, &f).unwrap()));
        prop_assert_eq!(q(dist(&f, &f).unwrap()), Ratio::from_integer(0));
        prop_assert!(fg <= q(dist(&f, &h).unwrap()) + q(dist(&h, &g).unwrap()));
        let corr = q(correlation(&f, &g).unwrap());
        prop_assert_eq!(fg, (Ratio::from_integer(1) - corr) / 2);
    }

    #[test]
    fn spectrum_is_linear_under_negation(n in 1usize..=10, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_function(n, &mut rng);
        let spec = transform(&f);
        let negated = transform(&f.negate());
        for (a, b) in spec.raw().iter().zip(negated.raw()) {
            prop_assert_eq!(*a, -*b);
        }
    }
}
