//! Atkin–Lehner involutions `W_e = (ae, b; cN, de)` with `ade² − bcN = e`, and
//! membership in extended groups ⟨Γ₀(N), W_e, W_f, …⟩.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use crate::error::{Error, Result};
use crate::exact_linear::{divisors, gcd, mod_inverse, Int, Mat2};

/// `e ∥ n`: `e` divides `n` and is coprime to `n/e`.
pub fn is_exact_divisor(e: &Int, n: &Int) -> bool {
    e.is_positive() && n.is_positive() && n.is_multiple_of(e) && gcd(e, &(n / e)).is_one()
}

/// All exact divisors of `n`, ascending.
pub fn exact_divisors(n: &Int) -> Result<Vec<Int>> {
    Ok(divisors(n)?.into_iter().filter(|e| is_exact_divisor(e, n)).collect())
}

/// The group law on exact divisors: `e ∗ f = ef / gcd(e, f)²`.
pub fn compose_exact(e: &Int, f: &Int) -> Int {
    let g = gcd(e, f);
    e * f / (&g * &g)
}

/// Closure of `elist ∪ {1}` under [`compose_exact`].
pub fn exact_divisor_closure<'a>(elist: impl IntoIterator<Item = &'a Int>) -> BTreeSet<Int> {
    let mut set: BTreeSet<Int> = BTreeSet::from([Int::one()]);
    for e in elist {
        let products: Vec<Int> = set.iter().map(|f| compose_exact(e, f)).collect();
        set.extend(products);
    }
    set
}

pub fn require_exact_divisor(e: &Int, n: &Int) -> Result<()> {
    if is_exact_divisor(e, n) {
        Ok(())
    } else {
        Err(Error::NotExactDivisor { e: e.to_string(), n: n.to_string() })
    }
}

/// Which of the two free coefficients to pin to 1.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WePreference {
    #[default]
    Any,
    AIsOne,
    DIsOne,
}

/// A W_e matrix together with its coefficients in `(ae, b; cN, de)`.
#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtkinLehnerMatrix {
    #[serde_as(as = "DisplayFromStr")]
    pub level: Int,
    #[serde_as(as = "DisplayFromStr")]
    pub e: Int,
    #[serde_as(as = "DisplayFromStr")]
    pub a: Int,
    #[serde_as(as = "DisplayFromStr")]
    pub b: Int,
    #[serde_as(as = "DisplayFromStr")]
    pub c: Int,
    #[serde_as(as = "DisplayFromStr")]
    pub d: Int,
    pub matrix: Mat2,
}

impl AtkinLehnerMatrix {
    fn assemble(level: &Int, e: &Int, a: Int, b: Int, c: Int, d: Int) -> AtkinLehnerMatrix {
        let matrix = Mat2::ints(&a * e, b.clone(), &c * level, &d * e);
        debug_assert_eq!(&a * &d * e * e - &b * &c * level, e.clone());
        AtkinLehnerMatrix { level: level.clone(), e: e.clone(), a, b, c, d, matrix }
    }
}

/// Deterministic W_e.
///
/// `e = 1` gives the identity and `e = N` (with no preference) the Fricke
/// matrix `(0, −1; N, 0)`.  Otherwise the lower-left coefficient is `c = 1`;
/// see [`build_we_with_c`].
pub fn build_we(n: &Int, e: &Int, prefer: WePreference) -> Result<AtkinLehnerMatrix> {
    require_exact_divisor(e, n)?;
    if e.is_one() {
        return Ok(AtkinLehnerMatrix::assemble(n, e, Int::one(), Int::zero(), Int::zero(), Int::one()));
    }
    if e == n && prefer == WePreference::Any {
        return Ok(AtkinLehnerMatrix::assemble(n, e, Int::zero(), -Int::one(), Int::one(), Int::zero()));
    }
    build_we_with_c(n, e, &Int::one(), prefer)
}

/// W_e with a prescribed lower-left coefficient `c` (entry `cN`), `gcd(c, e) = 1`.
///
/// Dividing the determinant condition by `e` gives `ade − bc·N/e = 1`, so `b`
/// is the least non-negative solution of `b·c·N/e ≡ −1 (mod e)` and
/// `ad = (1 + bc·N/e)/e`; the preference decides which of `a`, `d` is 1.
pub fn build_we_with_c(n: &Int, e: &Int, c: &Int, prefer: WePreference) -> Result<AtkinLehnerMatrix> {
    require_exact_divisor(e, n)?;
    let k = c * (n / e);
    let inv = mod_inverse(&k, e)
        .ok_or_else(|| Error::InvalidArgument(format!("gcd({c}, {e}) must be 1")))?;
    let b = (e - Int::one()) * inv % e;
    let y = (Int::one() + &b * &k) / e;
    let (a, d) = match prefer {
        WePreference::DIsOne => (y, Int::one()),
        WePreference::AIsOne | WePreference::Any => (Int::one(), y),
    };
    Ok(AtkinLehnerMatrix::assemble(n, e, a, b, c.clone(), d))
}

/// The `e ∈ closure(elist)` for which `m` (up to a nonzero scalar) has the
/// shape `(ae, b; cN, de)` with determinant `e`; `Some(1)` for Γ₀(N).
pub fn extended_member(m: &Mat2, n: &Int, elist: &BTreeSet<Int>) -> Result<Option<Int>> {
    for e in elist {
        require_exact_divisor(e, n)?;
    }
    let closure = exact_divisor_closure(elist);
    Ok(member_in_closure(m, n, &closure))
}

/// [`extended_member`] against an already-closed, already-validated set.
pub fn member_in_closure(m: &Mat2, n: &Int, closure: &BTreeSet<Int>) -> Option<Int> {
    let [a, b, c, d] = m.primitive();
    let det = &a * &d - &b * &c;
    if !c.is_multiple_of(n) {
        return None;
    }
    if det.is_one() {
        return Some(det);
    }
    (closure.contains(&det) && a.is_multiple_of(&det) && d.is_multiple_of(&det)).then_some(det)
}
