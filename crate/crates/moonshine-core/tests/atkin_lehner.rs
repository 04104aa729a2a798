mod common;

use std::collections::BTreeSet;

use common::{n, random_gamma0};
use moonshine_core::atkin_lehner::*;
use moonshine_core::exact_linear::{gcd, rat_int, Cusp, Int, Mat2};
use moonshine_core::gamma0::in_gamma0;
use moonshine_core::Error;
use num_integer::Integer;
use num_traits::One;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn set(es: &[i64]) -> BTreeSet<Int> {
    es.iter().map(|&e| n(e)).collect()
}

fn member_or_negated(m: &Mat2, level: &Int) -> bool {
    in_gamma0(m, level) || in_gamma0(&m.neg(), level)
}

#[test]
fn build_examples() {
    let fricke = build_we(&n(6), &n(6), WePreference::Any).unwrap();
    assert_eq!(fricke.matrix, Mat2::small(0, -1, 6, 0));

    let w2 = build_we(&n(6), &n(2), WePreference::Any).unwrap();
    assert_eq!(w2.matrix, Mat2::small(2, 1, 6, 4));
    assert_eq!((w2.a.clone(), w2.b.clone(), w2.c.clone(), w2.d.clone()), (n(1), n(1), n(1), n(2)));
    assert_eq!(w2.matrix.act(&Cusp::Infinity), Cusp::frac(1, 3));

    assert_eq!(build_we(&n(1), &n(1), WePreference::Any).unwrap().matrix, Mat2::identity());
}

#[test]
fn preferences_pin_one_coefficient() {
    for level in [6i64, 10, 12, 30, 84, 120] {
        for e in exact_divisors(&n(level)).unwrap() {
            let a1 = build_we(&n(level), &e, WePreference::AIsOne).unwrap();
            assert_eq!(a1.a, n(1), "N = {level}, e = {e}");
            let d1 = build_we(&n(level), &e, WePreference::DIsOne).unwrap();
            assert_eq!(d1.d, n(1), "N = {level}, e = {e}");
            for w in [a1, d1] {
                assert_eq!(w.matrix.det(), rat_int(&e));
            }
        }
    }
}

#[test]
fn rejects_non_exact_divisors() {
    assert!(matches!(build_we(&n(12), &n(2), WePreference::Any), Err(Error::NotExactDivisor { .. })));
    assert!(build_we(&n(12), &n(5), WePreference::Any).is_err());
    assert!(build_we(&n(12), &n(0), WePreference::Any).is_err());
    assert!(extended_member(&Mat2::identity(), &n(12), &set(&[2])).is_err());
}

#[test]
fn extended_member_examples() {
    let w2 = build_we(&n(6), &n(2), WePreference::Any).unwrap().matrix;
    assert_eq!(extended_member(&w2, &n(6), &set(&[2])).unwrap(), Some(n(2)));
    assert_eq!(extended_member(&w2, &n(6), &set(&[3])).unwrap(), None);
    assert_eq!(extended_member(&Mat2::small(1, 0, 6, 1), &n(6), &set(&[])).unwrap(), Some(n(1)));
    // Positive and negative scalar multiples are the same projective element.
    let scaled = w2.scale(&moonshine_core::exact_linear::rat(5, 3));
    assert_eq!(extended_member(&scaled, &n(6), &set(&[2])).unwrap(), Some(n(2)));
    assert_eq!(extended_member(&w2.neg(), &n(6), &set(&[2])).unwrap(), Some(n(2)));
    // W3 is generated by W2 and W6.
    let w3 = build_we(&n(6), &n(3), WePreference::Any).unwrap().matrix;
    assert_eq!(extended_member(&w3, &n(6), &set(&[2, 6])).unwrap(), Some(n(3)));
}

#[test]
fn lower_left_parametrization() {
    for level in [6i64, 12, 30, 60] {
        for e in exact_divisors(&n(level)).unwrap() {
            for c in 1..=50i64 {
                if !gcd(&n(c), &e).is_one() {
                    assert!(build_we_with_c(&n(level), &e, &n(c), WePreference::Any).is_err());
                    continue;
                }
                let w = build_we_with_c(&n(level), &e, &n(c), WePreference::Any).unwrap();
                assert_eq!(w.matrix.c, rat_int(&(n(c) * n(level))));
                assert_eq!(&w.a * &w.d * &e * &e - &w.b * &w.c * n(level), e);
            }
        }
    }
}

#[test]
fn normalization_and_involution_small_levels() {
    let mut rng = StdRng::seed_from_u64(7);
    for level in 1..=60i64 {
        let level_int = n(level);
        for e in exact_divisors(&level_int).unwrap() {
            let w = build_we(&level_int, &e, WePreference::Any).unwrap().matrix;
            assert_eq!(w.det(), rat_int(&e));
            let sq = (&w * &w).scale(&(rat_int(&n(1)) / rat_int(&e)));
            assert!(member_or_negated(&sq, &level_int), "W_{e}² at {level}");
            for _ in 0..20 {
                let g = random_gamma0(&mut rng, level);
                let conj = &(&w * &g) * &w.inverse();
                assert!(in_gamma0(&conj, &level_int), "W_{e} γ W_{e}⁻¹ at {level}");
            }
        }
    }
}

#[test]
fn products_land_in_the_composed_coset() {
    for level in 1..=60i64 {
        let level_int = n(level);
        let es = exact_divisors(&level_int).unwrap();
        let all: BTreeSet<Int> = es.iter().cloned().collect();
        for e in &es {
            for f in &es {
                let we = build_we(&level_int, e, WePreference::Any).unwrap().matrix;
                let wf = build_we(&level_int, f, WePreference::DIsOne).unwrap().matrix;
                let found = extended_member(&(&we * &wf), &level_int, &all).unwrap();
                assert_eq!(found, Some(compose_exact(e, f)), "W_{e}·W_{f} at {level}");
            }
        }
    }
}

#[test]
fn closure_of_generators() {
    assert_eq!(exact_divisor_closure(&set(&[2, 3])), set(&[1, 2, 3, 6]));
    assert_eq!(exact_divisor_closure(&set(&[])), set(&[1]));
    assert_eq!(exact_divisor_closure(&set(&[6, 14])), set(&[1, 6, 14, 21]));
    assert!(is_exact_divisor(&n(4), &n(12)));
    assert!(!is_exact_divisor(&n(2), &n(12)));
    assert_eq!(exact_divisors(&n(42)).unwrap().len(), 8);
    assert!(n(42).is_multiple_of(&n(14)));
}
