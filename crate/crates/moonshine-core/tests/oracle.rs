mod common;

use common::n;
use moonshine_core::exact_linear::{Cusp, Int};
use moonshine_core::gamma0::{count_cusp_classes, cusp_class, cusp_classes, gamma0_index, in_gamma0};
use moonshine_core::oracle::*;

#[test]
fn oracle_examples() {
    // Denominator 3 at level 6: residues are taken modulo gcd(3, 2) = 1.
    assert!(oracle_equivalent(&Cusp::frac(1, 3), &Cusp::frac(2, 3), 6).unwrap().is_some());
    // Denominator 4 at level 16: φ(gcd(4, 4)) = 2 classes, residues modulo 4.
    assert!(oracle_equivalent(&Cusp::frac(1, 4), &Cusp::frac(3, 4), 16).unwrap().is_none());
    assert!(oracle_equivalent(&Cusp::frac(1, 4), &Cusp::frac(5, 4), 16).unwrap().is_some());
    assert!(oracle_equivalent(&Cusp::frac(1, 8), &Cusp::frac(3, 8), 64).unwrap().is_none());
    let w = oracle_equivalent(&Cusp::frac(1, 2), &Cusp::frac(3, 2), 4).unwrap().unwrap();
    assert!(in_gamma0(&w, &n(4)));
    assert_eq!(w.act(&Cusp::frac(1, 2)), Cusp::frac(3, 2));
    assert!(oracle_equivalent(&Cusp::zero(), &Cusp::Infinity, 1).unwrap().is_some());
    assert!(oracle_equivalent(&Cusp::zero(), &Cusp::Infinity, 2).unwrap().is_none());
    assert!(P1Model::new(0).is_err());
    assert!(P1Model::new(ORACLE_MAX_LEVEL + 1).is_err());
    assert_eq!(sample_cusps(3).len(), 1 + 1 + 1 + 2);
}

#[test]
fn orbit_counts_match_the_closed_form() {
    for level in 1..=500u64 {
        let mut model = P1Model::new(level).unwrap();
        let big = Int::from(level);
        assert_eq!(Int::from(model.point_count()), gamma0_index(&big).unwrap(), "N = {level}");
        assert_eq!(Int::from(model.orbit_count()), count_cusp_classes(&big).unwrap(), "N = {level}");
    }
}

#[test]
fn both_oracle_paths_agree_with_the_classification() {
    for level in 1..=100u64 {
        let big = Int::from(level);
        let oracle = oracle_cusp_classes(level).unwrap();
        let classes = cusp_classes(&big).unwrap();
        assert_eq!(oracle.len(), classes.len(), "N = {level}");
        for oc in &oracle {
            let class = cusp_class(&oc.members[0], &big).unwrap();
            assert_eq!((Int::from(oc.denominator), Int::from(oc.residue)), (class.denominator.clone(), class.residue.clone()));
            for c in &oc.members {
                assert_eq!(cusp_class(c, &big).unwrap(), class, "N = {level}: {c}");
            }
        }
    }
}

#[test]
fn oracle_widths_match() {
    for level in 1..=120u64 {
        for class in cusp_classes(&Int::from(level)).unwrap() {
            let rep = class.representative();
            assert_eq!(Int::from(oracle_width(&rep, level).unwrap()), class.width(), "N = {level}: {rep}");
        }
    }
}
