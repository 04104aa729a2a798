//! Cusp-moving matrices.
//!
//! For a cusp `c = x/y` and a level `N_χ`, `P_c ∈ SL₂(Z)` carries ∞ to `c`.
//! When `c` is equivalent to ∞ in the eigen group of a symbol `n|h+…`, the
//! upper-triangular `U⁻¹ = (e·h/g, u/h; 0, g/h)` with `g = gcd(h, y)` makes
//! `P_c·U⁻¹` an Atkin–Lehner element `W_e` of that group, so the series of
//! the class transforms as `t(g²/(e·h²)·z − u·g/(e·h²))` up to a root of unity.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use crate::error::{Error, Result};
use crate::exact_linear::{gcd, mod_inverse, supported_part, Cusp, Int, Mat2, Rat};
use crate::gamma0::in_gamma0;
use crate::group_symbols::GroupSymbol;

/// The largest divisor of `n` built from the primes it shares with `y`.
pub fn exact_part(n: &Int, y: &Int) -> Int {
    supported_part(n, y)
}

/// `P_c = (x, w; y, z·N/y₀)` with det 1, where `y₀ = exact_part(N, y)`.
///
/// `c = 0` gives `(0, −1; 1, 0)`.  Otherwise `z` is the representative of
/// `(x·N/y₀)⁻¹ mod y` of least absolute value (ties and `y = 1` go to the
/// positive side), and `w = (x·z·N/y₀ − 1)/y` is then forced.
pub fn build_pc(c: &Cusp, n_chi: &Int) -> Result<Mat2> {
    let (x, y) = match c {
        Cusp::Infinity => return Err(Error::InvalidArgument("P_c is undefined at ∞; use the identity".into())),
        Cusp::Finite { x, y } => (x, y),
    };
    if !n_chi.is_positive() {
        return Err(Error::InvalidArgument(format!("level must be positive, got {n_chi}")));
    }
    if x.is_zero() {
        return Ok(Mat2::small(0, -1, 1, 0));
    }
    let k = n_chi / exact_part(n_chi, y);
    let z0 = mod_inverse(&(x * &k), y)
        .ok_or_else(|| Error::Internal(format!("gcd({y}, {x}·{k}) ≠ 1")))?;
    let z = if y.is_one() {
        Int::one()
    } else {
        let alt = &z0 - y;
        if alt.abs() < z0 { alt } else { z0 }
    };
    let w = (x * &z * &k - Int::one()) / y;
    let pc = Mat2::ints(x.clone(), w, y.clone(), &z * &k);
    debug_assert!(in_gamma0(&pc, &Int::one()));
    Ok(pc)
}

/// The `z` of a matrix from [`build_pc`] (0 for the matrix at cusp 0).
pub fn pc_z(pc: &Mat2, n_chi: &Int) -> Int {
    let [_, _, y, dd] = pc.int_entries().expect("integral P_c");
    if dd.is_zero() {
        return Int::zero();
    }
    dd / (n_chi / exact_part(n_chi, &y))
}

fn equiv_or_err(sym: &GroupSymbol, c: &Cusp) -> Result<Int> {
    sym.cusp_equiv_infinity(c)
        .ok_or_else(|| Error::NotEquivalentToInfinity { cusp: c.to_string(), symbol: sym.to_string() })
}

/// Residue class of `u` for a transform whose lower-right entry is `z·N/y₀`.
pub fn solve_ug(sym: &GroupSymbol, c: &Cusp, z: &Int, n_chi: &Int) -> Result<(Int, Int)> {
    let y = c.denominator();
    let d_entry = if y.is_zero() { z.clone() } else { z * (n_chi / exact_part(n_chi, &y)) };
    solve_u_for_entry(sym, c, &d_entry)
}

/// Solve `(y/g)·u + d ≡ 0 (mod (h/g)·e)` for a moving matrix with lower
/// row `(y, d)`; returns the least non-negative residue and the modulus.
pub fn solve_u_for_entry(sym: &GroupSymbol, c: &Cusp, d_entry: &Int) -> Result<(Int, Int)> {
    let e = equiv_or_err(sym, c)?;
    let h = Int::from(sym.h);
    let y = c.denominator();
    let g = gcd(&h, &y);
    let modulus = &h / &g * &e;
    let inv = mod_inverse(&(&y / &g), &modulus)
        .ok_or_else(|| Error::Internal(format!("{}/{g} not invertible modulo {modulus}", y)))?;
    let u = (-d_entry * inv).mod_floor(&modulus);
    Ok((u, modulus))
}

/// Everything known about `t_g|P` at one cusp.
#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspTransform {
    pub symbol: GroupSymbol,
    pub cusp: Cusp,
    #[serde_as(as = "DisplayFromStr")]
    pub e: Int,
    #[serde_as(as = "DisplayFromStr")]
    pub u_residue: Int,
    #[serde_as(as = "DisplayFromStr")]
    pub u_modulus: Int,
    /// `g²/(e·h²)`: the pole of `t_g|P` sits at `q^{-scale}`.
    #[serde_as(as = "DisplayFromStr")]
    pub scale: Rat,
    /// Shift for `u = u_residue`.
    #[serde_as(as = "DisplayFromStr")]
    pub shift: Rat,
    /// `1/h`: the shift is only meaningful modulo this.
    #[serde_as(as = "DisplayFromStr")]
    pub shift_modulus: Rat,
    pub pc: Mat2,
    pub u_inverse: Mat2,
    /// `P·U⁻¹`, an element of the eigen group in the W_e coset.
    pub w: Mat2,
    /// True when `P·U⁻¹` lies in the invariance group itself, so the
    /// accompanying root of unity is 1 (h = 1, or `P·U⁻¹ ∈ Γ₀(n·h)`).
    pub exact_phase: bool,
}

impl CuspTransform {
    fn gcd_hy(&self) -> Int {
        gcd(&Int::from(self.symbol.h), &self.cusp.denominator())
    }

    /// `−u·g/(e·h²)` for a chosen `u` in the residue class.
    pub fn shift_for(&self, u: &Int) -> Result<Rat> {
        if !(u - &self.u_residue).is_multiple_of(&self.u_modulus) {
            return Err(Error::InvalidArgument(format!(
                "u = {u} is not ≡ {} (mod {})",
                self.u_residue, self.u_modulus
            )));
        }
        Ok(shift_value(u, &self.gcd_hy(), &self.e, self.symbol.h))
    }

    /// `U⁻¹` for a chosen `u` in the residue class.
    pub fn u_inverse_for(&self, u: &Int) -> Result<Mat2> {
        self.shift_for(u)?;
        Ok(u_inverse_matrix(&self.e, self.symbol.h, &self.gcd_hy(), u))
    }
}

fn shift_value(u: &Int, g: &Int, e: &Int, h: u64) -> Rat {
    let h = Int::from(h);
    -Rat::new(u * g, e * &h * &h)
}

fn u_inverse_matrix(e: &Int, h: u64, g: &Int, u: &Int) -> Mat2 {
    let h = Int::from(h);
    Mat2::new(
        Rat::new(e * &h, g.clone()),
        Rat::new(u.clone(), h.clone()),
        Rat::zero(),
        Rat::new(g.clone(), h),
    )
    .expect("positive diagonal")
}

/// Transform at `c` using [`build_pc`].
pub fn build_transform(sym: &GroupSymbol, c: &Cusp, n_chi: &Int) -> Result<CuspTransform> {
    build_transform_with(sym, &build_pc(c, n_chi)?)
}

/// Transform for an arbitrary moving matrix `P ∈ SL₂(Z)`; the cusp is `P·∞`.
pub fn build_transform_with(sym: &GroupSymbol, pc: &Mat2) -> Result<CuspTransform> {
    let [x, _, y, dd] = pc
        .int_entries()
        .filter(|_| in_gamma0(pc, &Int::one()))
        .ok_or_else(|| Error::InvalidArgument(format!("{pc} is not in SL2(Z)")))?;
    let cusp = Cusp::new(x, y.clone())?;
    // The congruence uses the signed lower row of P; normalise so y ≥ 0.
    let (y, dd) = if y.is_negative() { (-y, -dd) } else { (y, dd) };
    let pc = if pc.c.is_negative() { pc.neg() } else { pc.clone() };
    let (u, modulus) = solve_u_for_entry(sym, &cusp, &dd)?;
    let e = equiv_or_err(sym, &cusp)?;
    let h = Int::from(sym.h);
    let g = gcd(&h, &y);
    let u_inverse = u_inverse_matrix(&e, sym.h, &g, &u);
    let w = &pc * &u_inverse;
    match sym.eigen_member(&w) {
        Some(found) if found == e => {}
        other => {
            return Err(Error::Internal(format!(
                "P·U⁻¹ = {w} for {sym} at {cusp}: expected W_{e}, membership gave {other:?}"
            )))
        }
    }
    let exact_phase = sym.h == 1 || in_gamma0(&w, &sym.nh());
    Ok(CuspTransform {
        scale: Rat::new(&g * &g, &e * &h * &h),
        shift: shift_value(&u, &g, &e, sym.h),
        shift_modulus: Rat::new(Int::one(), h),
        symbol: sym.clone(),
        cusp,
        e,
        u_residue: u,
        u_modulus: modulus,
        pc,
        u_inverse,
        w,
        exact_phase,
    })
}

/// `gcd(h, y)²/(e·h²)`: the pole of `t_g` transported by `P_c` is `q^{-a}`.
pub fn pole_exponent(sym: &GroupSymbol, c: &Cusp) -> Result<Rat> {
    let e = equiv_or_err(sym, c)?;
    let h = Int::from(sym.h);
    let g = gcd(&h, &c.denominator());
    Ok(Rat::new(&g * &g, &e * &h * &h))
}

/// Transported identity: `t_g|P` for `P = I` is `t_g` itself.
pub fn identity_transform(sym: &GroupSymbol) -> Result<CuspTransform> {
    build_transform_with(sym, &Mat2::identity())
}

