use moonshine_core::atkin_lehner::AtkinLehnerMatrix;
use moonshine_core::gamma0::CuspClass;
use moonshine_core::monster_data::{HeadsReport, Table1Report};
use moonshine_core::oracle::OracleClass;
use moonshine_core::spectra::{InvarianceReport, SingularSpectrum};
use moonshine_core::transforms::CuspTransform;
use moonshine_core::{Cusp, GroupSymbol, Int, Mat2, Rat};
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", content = "result", rename_all = "kebab-case")]
pub enum Response {
    Cusps(CuspList),
    Canon(Canonical),
    Equiv(Equivalence),
    Al(AtkinLehnerMatrix),
    MemberExt(Membership),
    Symbol(SymbolInfo),
    Orbit(Orbit),
    EquivInf(InfinityEquivalence),
    Transform(TransformInfo),
    Phi(PhiSet),
    Sing(SingularSpectrum),
    Invgroup(InvarianceReport),
    Nchi(NChi),
    Table1(Table1Report),
    Heads(HeadsReport),
    Distinct(Distinct),
    OracleCusps(OracleCusps),
    OracleWidth(OracleWidth),
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspRow {
    #[serde(flatten)]
    pub class: CuspClass,
    pub representative: Cusp,
    #[serde_as(as = "Option<DisplayFromStr>")]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub width: Option<Int>,
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspList {
    #[serde_as(as = "DisplayFromStr")]
    pub level: Int,
    pub classes: Vec<CuspRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Canonical {
    pub class: CuspClass,
    pub representative: Cusp,
    /// `γ ∈ Γ₀(N)` with `γ·cusp = representative`.
    pub witness: Mat2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Equivalence {
    pub equivalent: bool,
    /// `γ ∈ Γ₀(N)` with `γ·c1 = c2`.
    pub witness: Option<Mat2>,
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Membership {
    /// The Atkin–Lehner coset (`1` for Γ₀(N) itself), or `None`.
    #[serde_as(as = "Option<DisplayFromStr>")]
    pub e: Option<Int>,
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolInfo {
    pub symbol: GroupSymbol,
    /// `n/h`, the level of the Γ₀ part before conjugation.
    #[serde_as(as = "DisplayFromStr")]
    pub level: Int,
    #[serde_as(as = "DisplayFromStr")]
    pub nh: Int,
    #[serde_as(as = "Vec<DisplayFromStr>")]
    pub closure: Vec<Int>,
    pub has_fricke: bool,
    #[serde_as(as = "Vec<DisplayFromStr>")]
    pub exact_divisors: Vec<Int>,
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    pub symbol: GroupSymbol,
    /// Denominators `d | n/h` of the cusps equivalent to ∞.
    #[serde_as(as = "Vec<DisplayFromStr>")]
    pub denominators: Vec<Int>,
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfinityEquivalence {
    pub symbol: GroupSymbol,
    pub cusp: Cusp,
    #[serde_as(as = "Option<DisplayFromStr>")]
    pub e: Option<Int>,
    /// An element of the eigen group, in the W_e coset, carrying ∞ to the cusp.
    pub witness: Option<Mat2>,
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformInfo {
    #[serde(flatten)]
    pub transform: CuspTransform,
    #[serde_as(as = "DisplayFromStr")]
    pub exponent: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiSet {
    pub cusp: Cusp,
    pub classes: Vec<String>,
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NChi {
    pub k: usize,
    #[serde_as(as = "DisplayFromStr")]
    pub n_chi: Int,
    pub factorization: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Distinct {
    pub count: usize,
    pub characters: usize,
    pub conjugate_pairs: usize,
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCusps {
    #[serde_as(as = "DisplayFromStr")]
    pub level: Int,
    pub classes: Vec<OracleClass>,
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleWidth {
    pub cusp: Cusp,
    #[serde_as(as = "DisplayFromStr")]
    pub level: Int,
    #[serde_as(as = "DisplayFromStr")]
    pub width: Int,
}
