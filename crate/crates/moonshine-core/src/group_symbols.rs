//! Conway group symbols `n|h+e,f,…`.
//!
//! The symbol names the eigen group `diag(1/h, 1)·⟨Γ₀(n/h), W_e, W_f, …⟩·diag(h, 1)`.
//! All cusp questions about an invariance group are answered through it.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde_with::{DeserializeFromStr, SerializeDisplay};

use crate::atkin_lehner::{build_we, exact_divisor_closure, exact_divisors, is_exact_divisor, member_in_closure, WePreference};
use crate::error::{Error, Result};
use crate::exact_linear::{gcd, rat_int, Cusp, Int, Mat2, Rat};
use crate::gamma0::cusp_equivalent;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Harmonics {
    /// Explicit `+e,f,…`; empty when the symbol has no `+`.
    Listed(BTreeSet<u64>),
    /// Bare `+`: every exact divisor of `n/h`.
    All,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, SerializeDisplay, DeserializeFromStr)]
pub struct GroupSymbol {
    pub n: u64,
    pub h: u64,
    pub harmonics: Harmonics,
}

impl GroupSymbol {
    pub fn new(n: u64, h: u64, harmonics: Harmonics) -> Result<GroupSymbol> {
        if n == 0 || h == 0 {
            return Err(Error::Parse("n and h must be positive".into()));
        }
        if n % h != 0 {
            return Err(Error::Parse(format!("h = {h} does not divide n = {n}")));
        }
        if let Harmonics::Listed(es) = &harmonics {
            let level = Int::from(n / h);
            for &e in es {
                if e == 1 {
                    return Err(Error::Parse("harmonic 1 is implicit and may not be listed".into()));
                }
                if !is_exact_divisor(&Int::from(e), &level) {
                    return Err(Error::Parse(format!("{e} is not an exact divisor of {level}")));
                }
            }
        }
        Ok(GroupSymbol { n, h, harmonics })
    }

    /// `N = n/h`, the level of the untwisted building block.
    pub fn level(&self) -> Int {
        Int::from(self.n / self.h)
    }

    /// `n·h`.
    pub fn nh(&self) -> Int {
        Int::from(self.n) * Int::from(self.h)
    }

    /// Every `e` for which some W_e lies in the building block, including 1.
    pub fn closure(&self) -> BTreeSet<Int> {
        match &self.harmonics {
            Harmonics::All => exact_divisors(&self.level()).expect("n fits trial division").into_iter().collect(),
            Harmonics::Listed(es) => {
                let es: Vec<Int> = es.iter().map(|&e| Int::from(e)).collect();
                exact_divisor_closure(&es)
            }
        }
    }

    fn conjugate_in(&self, m: &Mat2) -> Mat2 {
        let h = rat_int(&Int::from(self.h));
        let one = Rat::one();
        &(&Mat2::diag(h.clone(), one.clone()) * m) * &Mat2::diag(one / h, Rat::one())
    }

    fn conjugate_out(&self, m: &Mat2) -> Mat2 {
        let h = rat_int(&Int::from(self.h));
        let one = Rat::one();
        &(&Mat2::diag(one.clone() / &h, one.clone()) * m) * &Mat2::diag(h, one)
    }

    /// The `e` with `diag(h,1)·m·diag(1/h,1)` in the W_e-coset of Γ₀(n/h).
    pub fn eigen_member(&self, m: &Mat2) -> Option<Int> {
        member_in_closure(&self.conjugate_in(m), &self.level(), &self.closure())
    }

    /// Closed-form test for `c ~ ∞` in the eigen group; returns the `e` whose
    /// W_e carries ∞ there.
    ///
    /// With `N = n/h` and `g₀ = gcd(N, y/gcd(y, h))`, the cusp is equivalent to
    /// ∞ iff `N/g₀` is one of the available `e` (`g₀ = N` meaning `e = 1`).
    pub fn cusp_equiv_infinity(&self, c: &Cusp) -> Option<Int> {
        let y = match c {
            Cusp::Infinity => return Some(Int::one()),
            Cusp::Finite { y, .. } => y,
        };
        let level = self.level();
        let g0 = gcd(&level, &(y / gcd(y, &Int::from(self.h))));
        let e = &level / &g0;
        if e.is_one() {
            return Some(e);
        }
        self.closure().contains(&e).then_some(e)
    }

    /// Orbit computation: for each available `e`, test whether `diag(h,1)·c`
    /// is Γ₀(n/h)-equivalent to `W_e·∞`.  On success returns `e` and an
    /// element of the eigen group carrying ∞ to `c`.
    pub fn cusp_equiv_infinity_by_orbit(&self, c: &Cusp) -> Result<Option<(Int, Mat2)>> {
        let level = self.level();
        let shifted = match c {
            Cusp::Infinity => Cusp::Infinity,
            Cusp::Finite { x, y } => Cusp::new(x * Int::from(self.h), y.clone())?,
        };
        for e in self.closure() {
            let we = build_we(&level, &e, WePreference::Any)?.matrix;
            if let Some(gamma) = cusp_equivalent(&we.act(&Cusp::Infinity), &shifted, &level)? {
                let inner = &gamma * &we;
                return Ok(Some((e, self.conjugate_out(&inner))));
            }
        }
        Ok(None)
    }

    /// `{N/e}` over the available `e`: the possible values of
    /// `gcd(y/gcd(y, h), N)` for cusps `x/y` in the orbit of ∞.
    pub fn orbit_denominators(&self) -> BTreeSet<Int> {
        let level = self.level();
        self.closure().iter().map(|e| &level / e).collect()
    }

    /// True when `W_N` (or `N = 1`) is available, the condition for 0 ~ ∞.
    pub fn has_fricke(&self) -> bool {
        let level = self.level();
        level.is_one() || self.closure().contains(&level)
    }
}

impl fmt::Display for GroupSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.n)?;
        if self.h != 1 {
            write!(f, "|{}", self.h)?;
        }
        match &self.harmonics {
            Harmonics::All => write!(f, "+"),
            Harmonics::Listed(es) if es.is_empty() => Ok(()),
            Harmonics::Listed(es) => {
                let parts: Vec<String> = es.iter().map(u64::to_string).collect();
                write!(f, "+{}", parts.join(","))
            }
        }
    }
}

fn parse_positive(tok: &str, text: &str) -> Result<u64> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("malformed group symbol '{text}'")));
    }
    match tok.parse::<u64>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(Error::Parse(format!("malformed group symbol '{text}'"))),
    }
}

impl FromStr for GroupSymbol {
    type Err = Error;

    fn from_str(text: &str) -> Result<GroupSymbol> {
        let t = text.trim();
        if t.contains('-') {
            return Err(Error::Parse(format!("'-' symbols are not supported: '{text}'")));
        }
        let (head, tail) = match t.split_once('+') {
            Some((head, tail)) => (head, Some(tail)),
            None => (t, None),
        };
        let (n, h) = match head.split_once('|') {
            Some((n, h)) => (parse_positive(n, text)?, parse_positive(h, text)?),
            None => (parse_positive(head, text)?, 1),
        };
        let harmonics = match tail {
            None => Harmonics::Listed(BTreeSet::new()),
            Some("") => Harmonics::All,
            Some(list) => {
                let mut es = BTreeSet::new();
                for tok in list.split(',') {
                    if !es.insert(parse_positive(tok, text)?) {
                        return Err(Error::Parse(format!("repeated harmonic in '{text}'")));
                    }
                }
                Harmonics::Listed(es)
            }
        };
        GroupSymbol::new(n, h, harmonics)
    }
}

