//! Γ₀(N): membership, canonical cusp representatives, cusp classes, widths.
//!
//! A finite cusp `x/y` is moved by an explicit element of Γ₀(N) to a cusp with
//! denominator `d = gcd(N, y)` (∞ counts as `y = 0`, so `d = N`).  Two cusps
//! with the same `d` are equivalent exactly when their canonical numerators
//! agree modulo `gcd(d, N/d)`; see [`same_denominator_move`] for the matrix
//! that realises the equivalence.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use crate::error::{Error, Result};
use crate::exact_linear::{divisors, euler_phi, ext_gcd, ext_gcd_coprime, factorize, gcd, mod_inverse, Cusp, Int, Mat2};

/// Integer entries, determinant 1, lower-left entry divisible by `n`.
pub fn in_gamma0(m: &Mat2, n: &Int) -> bool {
    match m.int_entries() {
        Some([a, b, c, d]) => (&a * &d - &b * &c).is_one() && c.is_multiple_of(n),
        None => false,
    }
}

/// A Γ₀(N)-class of cusps: denominator `d | N` and numerator residue modulo
/// `gcd(d, N/d)`.
#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CuspClass {
    #[serde_as(as = "DisplayFromStr")]
    pub level: Int,
    #[serde_as(as = "DisplayFromStr")]
    pub denominator: Int,
    #[serde_as(as = "DisplayFromStr")]
    pub residue: Int,
}

impl CuspClass {
    fn new(level: Int, denominator: Int, numerator: &Int) -> CuspClass {
        let modulus = gcd(&denominator, &(&level / &denominator));
        CuspClass { residue: numerator.mod_floor(&modulus), level, denominator }
    }

    /// `gcd(d, N/d)`, the modulus of the residue.
    pub fn modulus(&self) -> Int {
        gcd(&self.denominator, &(&self.level / &self.denominator))
    }

    /// `r'/d` for the least `r' ≥ 0` with `r' ≡ r` and `gcd(r', d) = 1`.
    pub fn representative(&self) -> Cusp {
        let g = self.modulus();
        let mut r = self.residue.clone();
        while !gcd(&r, &self.denominator).is_one() {
            r += &g;
        }
        Cusp::new(r, self.denominator.clone()).expect("d ≥ 1")
    }

    pub fn width(&self) -> Int {
        &self.level / gcd(&(&self.denominator * &self.denominator), &self.level)
    }
}

fn check_level(n: &Int) -> Result<()> {
    if n < &Int::one() {
        return Err(Error::InvalidArgument(format!("level must be positive, got {n}")));
    }
    Ok(())
}

/// Move `c` into its class representative by an element of Γ₀(N).
///
/// First solves `c'·(xN/y') + d'·(y/y') = 1` with `gcd(c'N, d') = 1` and
/// completes `(·, ·; c'N, d')` to determinant 1, which lands on a cusp of
/// denominator `y' = gcd(N, y)`; then slides along that denominator to the
/// canonical numerator.
pub fn canonical_cusp(c: &Cusp, n: &Int) -> Result<(CuspClass, Mat2)> {
    let ([s, t, lower, dd], x1, d) = first_move(c, n)?;
    let first = Mat2::ints(s, -t, lower, dd);
    let class = CuspClass::new(n.clone(), d.clone(), &x1);
    let rep = class.representative();
    let slide = same_denominator_move(&x1, &rep.numerator(), &d, n)
        .ok_or_else(|| Error::Internal(format!("no slide {x1}/{d} -> {rep} at level {n}")))?;
    let witness = &slide * &first;
    debug_assert!(in_gamma0(&witness, n));
    debug_assert_eq!(witness.act(c), rep);
    Ok((class, witness))
}

/// The first step of [`canonical_cusp`]: entries `[s, t, c'N, d']` of the
/// matrix `(s, −t; c'N, d')`, the new numerator and the denominator
/// `gcd(N, y)` it lands on.
fn first_move(c: &Cusp, n: &Int) -> Result<([Int; 4], Int, Int)> {
    check_level(n)?;
    let (x, y) = (c.numerator(), c.denominator());
    let d = gcd(n, &y);
    let a = &x * n / &d;
    let b = &y / &d;
    let (cc, dd) = ext_gcd_coprime(&a, &b, n)?;
    let lower = &cc * n;
    let (_, s, t) = ext_gcd(&dd, &lower);
    let x1 = &s * &x - &t * &y;
    Ok(([s, t, lower, dd], x1, d))
}

/// The class of `c`, without building the witness.
pub fn cusp_class(c: &Cusp, n: &Int) -> Result<CuspClass> {
    let (_, x1, d) = first_move(c, n)?;
    Ok(CuspClass::new(n.clone(), d, &x1))
}

/// γ ∈ Γ₀(N) with γ·(x1/d) = x2/d, if one exists.
///
/// Every such γ has the form `M₂·T^k·M₁⁻¹` with `Mᵢ ∈ SL₂(Z)`, `Mᵢ∞ = xᵢ/d`;
/// its lower-left entry is `d·(d₁ − d₂ − k·d)`, so a suitable `k` exists iff
/// `gcd(d, N/d)` divides `d₁ − d₂`, i.e. iff `x1 ≡ x2 (mod gcd(d, N/d))`.
///
/// Returns `None` as well when `d ∤ N` or either numerator shares a factor
/// with `d`.
pub fn same_denominator_move(x1: &Int, x2: &Int, d: &Int, n: &Int) -> Option<Mat2> {
    if !d.is_positive() || !n.is_multiple_of(d) || !gcd(x1, d).is_one() || !gcd(x2, d).is_one() {
        return None;
    }
    let completion = |x: &Int| {
        let (_, dx, bx) = ext_gcd(x, d);
        Mat2::ints(x.clone(), -bx, d.clone(), dx)
    };
    let (m1, m2) = (completion(x1), completion(x2));
    let l = n / d;
    let g = gcd(d, &l);
    let diff = m1.d.to_integer() - m2.d.to_integer();
    if !diff.is_multiple_of(&g) {
        return None;
    }
    let lg = &l / &g;
    let k = (&diff / &g) * mod_inverse(&(d / &g), &lg)? % &lg;
    let t = Mat2::ints(Int::one(), k, Int::zero(), Int::one());
    let gamma = &(&m2 * &t) * &m1.inverse();
    debug_assert!(in_gamma0(&gamma, n), "{gamma} at level {n}");
    Some(gamma)
}

/// A witness γ ∈ Γ₀(N) with γ·c1 = c2, or `None` when inequivalent.
pub fn cusp_equivalent(c1: &Cusp, c2: &Cusp, n: &Int) -> Result<Option<Mat2>> {
    let (k1, w1) = canonical_cusp(c1, n)?;
    let (k2, w2) = canonical_cusp(c2, n)?;
    if k1 != k2 {
        return Ok(None);
    }
    Ok(Some(&w2.inverse() * &w1))
}

/// All cusp classes of Γ₀(N), ordered by denominator then residue.
pub fn cusp_classes(n: &Int) -> Result<Vec<CuspClass>> {
    cusp_classes_where(n, |_| true)
}

/// Cusp classes whose denominator passes `keep`.
pub fn cusp_classes_where(n: &Int, keep: impl Fn(&Int) -> bool) -> Result<Vec<CuspClass>> {
    check_level(n)?;
    let mut out = Vec::new();
    for d in divisors(n)? {
        if !keep(&d) {
            continue;
        }
        let g = gcd(&d, &(n / &d));
        let mut r = Int::zero();
        loop {
            if gcd(&r, &g).is_one() {
                out.push(CuspClass { level: n.clone(), denominator: d.clone(), residue: r.clone() });
            }
            r += 1;
            if r >= g {
                break;
            }
        }
    }
    Ok(out)
}

/// `Σ_{d | N} φ(gcd(d, N/d))`.
pub fn count_cusp_classes(n: &Int) -> Result<Int> {
    check_level(n)?;
    let mut total = Int::zero();
    for d in divisors(n)? {
        total += euler_phi(&gcd(&d, &(n / &d)))?;
    }
    Ok(total)
}

/// Width of the class of `c`: `N / gcd(d², N)` with `d = gcd(N, y)`.
pub fn cusp_width(c: &Cusp, n: &Int) -> Result<Int> {
    check_level(n)?;
    let d = gcd(n, &c.denominator());
    Ok(n / gcd(&(&d * &d), n))
}

/// `[SL₂(Z) : Γ₀(N)] = N·Π_{p | N}(1 + 1/p)`.
pub fn gamma0_index(n: &Int) -> Result<Int> {
    check_level(n)?;
    let mut idx = n.clone();
    for (p, _) in factorize(n)? {
        idx = idx / &p * (&p + 1);
    }
    Ok(idx)
}
