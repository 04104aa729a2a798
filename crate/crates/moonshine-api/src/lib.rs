//! One request type per operation, one response type per result, and an
//! [`Engine`] that executes requests against a data directory.
//!
//! The CLI runs requests in-process or sends them to the HTTP service; both
//! paths go through [`Engine::execute`], so local and remote output agree.

mod request;
mod response;

use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use moonshine_core::atkin_lehner::{build_we, exact_divisors, extended_member};
use moonshine_core::exact_linear::{format_factorization, Cusp};
use moonshine_core::gamma0::{canonical_cusp, cusp_class, cusp_classes, cusp_equivalent, cusp_width};
use moonshine_core::monster_data::{load_classes, verify_heads, verify_table1, MonsterData};
use moonshine_core::oracle::{oracle_cusp_classes, oracle_width};
use moonshine_core::spectra::{invariance_group, phi_c_classes, singular_spectrum};
use moonshine_core::transforms::{build_transform, pole_exponent};
use moonshine_core::{Error, Int};
use serde::{Deserialize, Serialize};

pub use request::{OracleRequest, Request, SymbolRequest};
pub use response::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ErrorKind {
    /// Malformed input: bad syntax, out-of-range index, non-exact divisor.
    Usage,
    /// Well-formed input the mathematics or the data rejects.
    Domain,
    /// A bug: an internal consistency check failed.
    Internal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize, thiserror::Error)]
#[error("{message}")]
pub struct ApiError {
    pub kind: ErrorKind,
    pub message: String,
}

impl ApiError {
    pub fn usage(message: impl Into<String>) -> ApiError {
        ApiError { kind: ErrorKind::Usage, message: message.into() }
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> ApiError {
        let kind = match &e {
            Error::Parse(_) | Error::InvalidArgument(_) | Error::NotExactDivisor { .. } => ErrorKind::Usage,
            Error::NotEquivalentToInfinity { .. } | Error::ResourceLimit(_) | Error::Data(_) | Error::Io { .. } => {
                ErrorKind::Domain
            }
            Error::Internal(_) => ErrorKind::Internal,
        };
        ApiError { kind, message: e.to_string() }
    }
}

pub type ApiResult<T> = std::result::Result<T, ApiError>;

fn small_level(n: &Int) -> ApiResult<u64> {
    u64::try_from(n).map_err(|_| ApiError::usage(format!("level {n} is out of range")))
}

/// Executes requests; monster data is loaded on first use.
pub struct Engine {
    data_dir: PathBuf,
    data: OnceLock<ApiResult<MonsterData>>,
}

impl Engine {
    pub fn new(data_dir: impl Into<PathBuf>) -> Engine {
        Engine { data_dir: data_dir.into(), data: OnceLock::new() }
    }

    pub fn data_dir(&self) -> &Path {
        &self.data_dir
    }

    pub fn data(&self) -> ApiResult<&MonsterData> {
        self.data
            .get_or_init(|| MonsterData::load_dir(&self.data_dir).map_err(ApiError::from))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn execute(&self, req: &Request) -> ApiResult<Response> {
        Ok(match req {
            Request::Cusps { n, widths } => {
                let classes = cusp_classes(n)?
                    .into_iter()
                    .map(|class| CuspRow {
                        representative: class.representative(),
                        width: widths.then(|| class.width()),
                        class,
                    })
                    .collect();
                Response::Cusps(CuspList { level: n.clone(), classes })
            }
            Request::Canon { cusp, n } => {
                let (class, witness) = canonical_cusp(cusp, n)?;
                Response::Canon(Canonical { representative: class.representative(), class, witness })
            }
            Request::Equiv { c1, c2, n } => {
                let witness = cusp_equivalent(c1, c2, n)?;
                Response::Equiv(Equivalence { equivalent: witness.is_some(), witness })
            }
            Request::Al { n, e, prefer } => Response::Al(build_we(n, e, *prefer)?),
            Request::MemberExt { matrix, n, harmonics } => {
                Response::MemberExt(Membership { e: extended_member(matrix, n, &harmonics.iter().cloned().collect())? })
            }
            Request::Symbol(SymbolRequest::Parse { symbol }) => Response::Symbol(SymbolInfo {
                level: symbol.level(),
                nh: symbol.nh(),
                closure: symbol.closure().into_iter().collect(),
                has_fricke: symbol.has_fricke(),
                exact_divisors: exact_divisors(&symbol.level())?,
                symbol: symbol.clone(),
            }),
            Request::Symbol(SymbolRequest::Orbit { symbol }) => Response::Orbit(Orbit {
                symbol: symbol.clone(),
                denominators: symbol.orbit_denominators().into_iter().collect(),
            }),
            Request::Symbol(SymbolRequest::EquivInf { cusp, symbol }) => {
                let found = symbol.cusp_equiv_infinity_by_orbit(cusp)?;
                if found.as_ref().map(|(e, _)| e.clone()) != symbol.cusp_equiv_infinity(cusp) {
                    return Err(Error::Internal(format!("orbit search and closed form disagree for {symbol} at {cusp}")).into());
                }
                let (e, witness) = found.unzip();
                Response::EquivInf(InfinityEquivalence { symbol: symbol.clone(), cusp: cusp.clone(), e, witness })
            }
            Request::Transform { symbol, cusp, n_chi } => {
                let transform = build_transform(symbol, cusp, n_chi)?;
                let exponent = pole_exponent(symbol, cusp)?;
                Response::Transform(TransformInfo { transform, exponent })
            }
            Request::Phi { cusp, classes_file } => {
                let owned;
                let classes = match classes_file {
                    Some(path) => {
                        owned = load_classes(Path::new(path))?;
                        &owned
                    }
                    None => &self.data()?.classes,
                };
                let ids = phi_c_classes(cusp, classes).into_iter().map(|i| classes[i].id.clone()).collect();
                Response::Phi(PhiSet { cusp: cusp.clone(), classes: ids })
            }
            Request::Sing { k, cusp } => Response::Sing(singular_spectrum(self.data()?, *k, cusp)?),
            Request::Invgroup { k, selection, height_cap } => {
                Response::Invgroup(invariance_group(self.data()?, *k, selection, *height_cap)?)
            }
            Request::Nchi { k } => {
                let n_chi = self.data()?.n_chi(*k)?;
                Response::Nchi(NChi { k: *k, factorization: format_factorization(&n_chi)?, n_chi })
            }
            Request::Table1 => Response::Table1(verify_table1(self.data()?, &self.data_dir.join("table1.tsv"))?),
            Request::Heads => {
                let mults = self.data_dir.join("head_multiplicities.tsv");
                let mults = mults.exists().then_some(mults);
                Response::Heads(verify_heads(self.data()?, &self.data_dir.join("heads.tsv"), mults.as_deref())?)
            }
            Request::Distinct => {
                let data = self.data()?;
                let count = data.distinct_series_count();
                Response::Distinct(Distinct {
                    characters: data.characters.len(),
                    conjugate_pairs: data.characters.len() - count,
                    count,
                })
            }
            Request::Oracle(OracleRequest::Cusps { n }) => {
                let level = small_level(n)?;
                let classes = oracle_cusp_classes(level)?;
                // Cross-check the closed form before reporting.
                let closed = cusp_classes(n)?;
                if closed.len() != classes.len()
                    || classes.iter().any(|oc| cusp_class(&oc.members[0], n).map_or(true, |c| !closed.contains(&c)))
                {
                    return Err(Error::Internal(format!("closed-form classes disagree with the oracle at level {n}")).into());
                }
                Response::OracleCusps(OracleCusps { level: n.clone(), classes })
            }
            Request::Oracle(OracleRequest::Width { cusp, n }) => {
                let width = Int::from(oracle_width(cusp, small_level(n)?)?);
                if width != cusp_width(cusp, n)? {
                    return Err(Error::Internal(format!("closed-form width disagrees with the oracle for {cusp} at {n}")).into());
                }
                Response::OracleWidth(OracleWidth { cusp: cusp.clone(), level: n.clone(), width })
            }
        })
    }
}

/// Parse a cusp argument, mapping failures to usage errors.
pub fn parse_cusp(text: &str) -> ApiResult<Cusp> {
    text.parse().map_err(ApiError::from)
}
