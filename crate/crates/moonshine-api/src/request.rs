use moonshine_core::atkin_lehner::WePreference;
use moonshine_core::spectra::{CuspSelection, DEFAULT_HEIGHT_CAP};
use moonshine_core::{Cusp, GroupSymbol, Int, Mat2};
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

fn default_height_cap() -> u64 {
    DEFAULT_HEIGHT_CAP
}

/// One operation with its arguments.  Integers that may exceed 64 bits are
/// decimal strings in JSON.
#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum Request {
    Cusps {
        #[serde_as(as = "DisplayFromStr")]
        n: Int,
        #[serde(default)]
        widths: bool,
    },
    Canon {
        cusp: Cusp,
        #[serde_as(as = "DisplayFromStr")]
        n: Int,
    },
    Equiv {
        c1: Cusp,
        c2: Cusp,
        #[serde_as(as = "DisplayFromStr")]
        n: Int,
    },
    Al {
        #[serde_as(as = "DisplayFromStr")]
        n: Int,
        #[serde_as(as = "DisplayFromStr")]
        e: Int,
        #[serde(default)]
        prefer: WePreference,
    },
    MemberExt {
        matrix: Mat2,
        #[serde_as(as = "DisplayFromStr")]
        n: Int,
        #[serde_as(as = "Vec<DisplayFromStr>")]
        #[serde(default)]
        harmonics: Vec<Int>,
    },
    Symbol(SymbolRequest),
    Transform {
        symbol: GroupSymbol,
        cusp: Cusp,
        #[serde_as(as = "DisplayFromStr")]
        n_chi: Int,
    },
    /// Classes for which the cusp is equivalent to ∞; uses the loaded data
    /// unless a classes file is named.
    Phi {
        cusp: Cusp,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        classes_file: Option<String>,
    },
    Sing {
        k: usize,
        cusp: Cusp,
    },
    Invgroup {
        k: usize,
        #[serde(default)]
        selection: CuspSelection,
        #[serde(default = "default_height_cap")]
        height_cap: u64,
    },
    Nchi {
        k: usize,
    },
    Table1,
    Heads,
    Distinct,
    Oracle(OracleRequest),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "action", rename_all = "kebab-case")]
pub enum SymbolRequest {
    Parse { symbol: GroupSymbol },
    Orbit { symbol: GroupSymbol },
    EquivInf { cusp: Cusp, symbol: GroupSymbol },
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "action", rename_all = "kebab-case")]
pub enum OracleRequest {
    Cusps {
        #[serde_as(as = "DisplayFromStr")]
        n: Int,
    },
    Width {
        cusp: Cusp,
        #[serde_as(as = "DisplayFromStr")]
        n: Int,
    },
}

impl Request {
    /// The `op` tag, which is also the HTTP route segment.
    pub fn op(&self) -> &'static str {
        match self {
            Request::Cusps { .. } => "cusps",
            Request::Canon { .. } => "canon",
            Request::Equiv { .. } => "equiv",
            Request::Al { .. } => "al",
            Request::MemberExt { .. } => "member-ext",
            Request::Symbol(_) => "symbol",
            Request::Transform { .. } => "transform",
            Request::Phi { .. } => "phi",
            Request::Sing { .. } => "sing",
            Request::Invgroup { .. } => "invgroup",
            Request::Nchi { .. } => "nchi",
            Request::Table1 => "table1",
            Request::Heads => "heads",
            Request::Distinct => "distinct",
            Request::Oracle(_) => "oracle",
        }
    }
}
