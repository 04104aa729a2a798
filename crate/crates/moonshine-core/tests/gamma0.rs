mod common;

use common::n;
use moonshine_core::exact_linear::{gcd, Cusp, Int, Mat2};
use moonshine_core::gamma0::*;
use moonshine_core::oracle::{oracle_cusp_classes, oracle_equivalent, oracle_width, sample_cusps, P1Model};
use proptest::prelude::*;

#[test]
fn membership_examples() {
    assert!(in_gamma0(&Mat2::identity(), &n(7)));
    assert!(!in_gamma0(&Mat2::small(1, 0, 1, 1), &n(2)));
    assert!(in_gamma0(&Mat2::small(1, 0, 6, 1), &n(6)));
    assert!(!in_gamma0(&Mat2::small(2, 0, 0, 1), &n(1)), "det 2");
    assert!(!in_gamma0(&Mat2::small(1, 0, 6, 1).scale(&moonshine_core::exact_linear::rat(1, 2)), &n(1)));
}

#[test]
fn canonical_examples() {
    let (class, w) = canonical_cusp(&Cusp::frac(5, 18), &n(12)).unwrap();
    assert_eq!(class.denominator, n(6));
    assert!(in_gamma0(&w, &n(12)));
    assert_eq!(w.act(&Cusp::frac(5, 18)), class.representative());

    let (class, w) = canonical_cusp(&Cusp::zero(), &n(30)).unwrap();
    assert_eq!(class.denominator, n(1));
    assert_eq!(w, Mat2::identity());

    let (class, w) = canonical_cusp(&Cusp::Infinity, &n(4)).unwrap();
    assert_eq!(class.denominator, n(4));
    assert_eq!(class.representative(), Cusp::frac(1, 4));
    assert_eq!(w.act(&Cusp::Infinity), Cusp::frac(1, 4));
    assert!(oracle_equivalent(&Cusp::frac(1, 4), &Cusp::Infinity, 4).unwrap().is_some());
}

#[test]
fn equivalence_examples() {
    let c = Cusp::frac(7, 15);
    assert_eq!(cusp_equivalent(&c, &c, &n(45)).unwrap(), Some(Mat2::identity()));

    // 5/18 and 1/6 at level 12: both have denominator 6 and gcd(6, 2) = 2,
    // and both numerators are odd.
    let w = cusp_equivalent(&Cusp::frac(5, 18), &Cusp::frac(1, 6), &n(12)).unwrap().expect("equivalent");
    assert!(in_gamma0(&w, &n(12)));
    assert_eq!(w.act(&Cusp::frac(5, 18)), Cusp::frac(1, 6));
    assert!(oracle_equivalent(&Cusp::frac(5, 18), &Cusp::frac(1, 6), 12).unwrap().is_some());

    assert_eq!(cusp_equivalent(&Cusp::frac(1, 2), &Cusp::zero(), &n(4)).unwrap(), None);
    assert!(oracle_equivalent(&Cusp::frac(1, 2), &Cusp::zero(), 4).unwrap().is_none());

    // Same denominator, different residue: 1/8 and 3/8 at level 32 (gcd(8, 4) = 4).
    assert_eq!(cusp_equivalent(&Cusp::frac(1, 8), &Cusp::frac(3, 8), &n(32)).unwrap(), None);
    assert!(oracle_equivalent(&Cusp::frac(1, 8), &Cusp::frac(3, 8), 32).unwrap().is_none());
    assert!(cusp_equivalent(&Cusp::frac(1, 8), &Cusp::frac(5, 8), &n(32)).unwrap().is_some());
}

#[test]
fn class_counts_and_indices() {
    assert_eq!(cusp_classes(&n(1)).unwrap().len(), 1);
    assert_eq!(cusp_classes(&n(12)).unwrap().len(), 6);
    assert_eq!(cusp_classes(&n(36)).unwrap().len(), 12);
    assert_eq!(oracle_cusp_classes(12).unwrap().len(), 6);
    assert_eq!(oracle_cusp_classes(36).unwrap().len(), 12);
    assert_eq!(count_cusp_classes(&n(36)).unwrap(), n(12));

    assert_eq!(gamma0_index(&n(1)).unwrap(), n(1));
    assert_eq!(gamma0_index(&n(6)).unwrap(), n(12));
    assert_eq!(gamma0_index(&n(12)).unwrap(), n(24));
    assert_eq!(P1Model::new(6).unwrap().point_count(), 12);
    assert_eq!(P1Model::new(12).unwrap().point_count(), 24);
}

#[test]
fn width_examples() {
    assert_eq!(cusp_width(&Cusp::Infinity, &n(30)).unwrap(), n(1));
    assert_eq!(cusp_width(&Cusp::zero(), &n(30)).unwrap(), n(30));
    assert_eq!(cusp_width(&Cusp::frac(1, 2), &n(4)).unwrap(), n(1));
    assert_eq!(oracle_width(&Cusp::zero(), 30).unwrap(), 30);
    assert_eq!(oracle_width(&Cusp::frac(1, 2), 4).unwrap(), 1);
    assert_eq!(cusp_width(&Cusp::frac(1, 6), &n(72)).unwrap(), n(2));
    assert_eq!(oracle_width(&Cusp::frac(1, 6), 72).unwrap(), 2);
}

#[test]
fn bad_levels_are_rejected() {
    assert!(canonical_cusp(&Cusp::zero(), &n(0)).is_err());
    assert!(cusp_classes(&n(-3)).is_err());
}

#[test]
fn partition_matches_oracle_for_small_levels() {
    for level in 1..=40u64 {
        let level_int = Int::from(level);
        let classes = cusp_classes(&level_int).unwrap();
        let oracle = oracle_cusp_classes(level).unwrap();
        assert_eq!(classes.len(), oracle.len(), "N = {level}");
        for oc in &oracle {
            let expected = cusp_class(&oc.members[0], &level_int).unwrap();
            assert!(classes.contains(&expected));
            for c in &oc.members {
                let (class, w) = canonical_cusp(c, &level_int).unwrap();
                assert_eq!(class, expected, "N = {level}, cusp {c}");
                assert!(in_gamma0(&w, &level_int));
                assert_eq!(w.act(c), class.representative());
                if class.denominator != gcd(&class.level, &c.denominator()) {
                    panic!("denominator is not gcd(N, y) for {c}");
                }
            }
        }
    }
}

#[test]
fn width_sum_is_the_index() {
    for level in 1..=120i64 {
        let classes = cusp_classes(&n(level)).unwrap();
        let total: Int = classes.iter().map(CuspClass::width).sum();
        assert_eq!(total, gamma0_index(&n(level)).unwrap(), "N = {level}");
        for class in &classes {
            assert_eq!(cusp_width(&class.representative(), &n(level)).unwrap(), class.width());
        }
    }
}

#[test]
fn representatives_are_canonical() {
    for level in [1i64, 2, 12, 36, 72, 4032] {
        for class in cusp_classes(&n(level)).unwrap() {
            let rep = class.representative();
            let (again, w) = canonical_cusp(&rep, &n(level)).unwrap();
            assert_eq!(again, class);
            assert_eq!(w.act(&rep), rep);
        }
    }
}

proptest! {
    #[test]
    fn witnesses_are_sound(x1 in -300i64..300, y1 in 1i64..300, x2 in -300i64..300, y2 in 1i64..300, level in 1i64..200) {
        let (c1, c2) = (Cusp::frac(x1, y1), Cusp::frac(x2, y2));
        let level = n(level);
        match cusp_equivalent(&c1, &c2, &level).unwrap() {
            Some(w) => {
                prop_assert!(in_gamma0(&w, &level));
                prop_assert_eq!(w.act(&c1), c2);
            }
            None => prop_assert_ne!(cusp_class(&c1, &level).unwrap(), cusp_class(&c2, &level).unwrap()),
        }
    }

    #[test]
    fn equivalence_agrees_with_oracle(i in 0usize..5000, j in 0usize..5000, level in 1u64..=120) {
        let sample = sample_cusps(80);
        let (c1, c2) = (&sample[i % sample.len()], &sample[j % sample.len()]);
        let ours = cusp_equivalent(c1, c2, &Int::from(level)).unwrap().is_some();
        let oracle = oracle_equivalent(c1, c2, level).unwrap().is_some();
        prop_assert_eq!(ours, oracle, "{} vs {} at {}", c1, c2, level);
    }

    #[test]
    fn large_cusps_canonicalize(x in -1_000_000i64..1_000_000, y in 1i64..1_000_000, level in 1i64..5000) {
        let c = Cusp::frac(x, y);
        let (class, w) = canonical_cusp(&c, &n(level)).unwrap();
        prop_assert!(in_gamma0(&w, &n(level)));
        prop_assert_eq!(w.act(&c), class.representative());
        prop_assert_eq!(class.denominator, gcd(&n(level), &c.denominator()));
    }
}
