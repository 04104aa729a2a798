//! Exact machinery for deciding the invariance groups of moonshine character
//! generating functions.
//!
//! The crate is layered bottom-up:
//!
//! - [`exact_linear`]: big rationals, 2×2 matrices, cusps, constrained Bézout.
//! - [`gamma0`]: Γ₀(N) membership, canonical cusps, classes, widths.
//! - [`atkin_lehner`]: W_e construction and extended-group membership.
//! - [`group_symbols`]: Conway symbols `n|h+e,f,…` and their eigen groups.
//! - [`transforms`]: the cusp-moving matrices P_c, U_{c,g} and pole exponents.
//! - [`monster_data`]: class/character fixtures, N_χ, table verification.
//! - [`spectra`]: singular-part spectra and the invariance-group pipeline.
//! - [`oracle`]: brute-force reference computations for small levels.
//!
//! Every computation is exact; there are no floating-point paths.

pub mod atkin_lehner;
pub mod error;
pub mod exact_linear;
pub mod gamma0;
pub mod group_symbols;
pub mod monster_data;
pub mod oracle;
pub mod spectra;
pub mod transforms;

pub use error::{Error, Result};
pub use exact_linear::{Cusp, Int, Mat2, Rat};
pub use group_symbols::GroupSymbol;
