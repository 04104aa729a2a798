#![allow(dead_code)]

use std::path::PathBuf;

use moonshine_core::exact_linear::{ext_gcd, Int, Mat2};
use moonshine_core::monster_data::MonsterData;
use rand::Rng;

pub fn data_dir() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data"))
}

pub fn data() -> MonsterData {
    MonsterData::load_dir(&data_dir()).expect("shipped data loads")
}

pub fn n(v: i64) -> Int {
    Int::from(v)
}

/// A random element of Γ₀(N): random lower row (N·t, d) with gcd 1, completed
/// to determinant 1 and then shifted by a random translation.
pub fn random_gamma0(rng: &mut impl Rng, level: i64) -> Mat2 {
    loop {
        let t: i64 = rng.gen_range(-20..=20);
        let d: i64 = rng.gen_range(-200..=200);
        let c = level * t;
        let (g, s, r) = ext_gcd(&Int::from(d), &Int::from(c));
        if g != Int::from(1) {
            continue;
        }
        // d·s + c·r = 1 ⇒ (s, −r; c, d) has determinant 1.
        let k: i64 = rng.gen_range(-5..=5);
        let base = Mat2::ints(s, -r, Int::from(c), Int::from(d));
        let shift = Mat2::small(1, k, 0, 1);
        return &shift * &base;
    }
}
