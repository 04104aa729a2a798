use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use moonshine_api::{OracleRequest, Request, SymbolRequest};
use moonshine_core::atkin_lehner::WePreference;
use moonshine_core::spectra::{CuspSelection, DEFAULT_HEIGHT_CAP, DEFAULT_MAX_CLASSES};
use moonshine_core::{Cusp, GroupSymbol, Int, Mat2};

#[derive(Parser)]
#[command(name = "moonshine", version, about = "Cusps, Atkin-Lehner elements and invariance groups for moonshine characters")]
pub struct Cli {
    /// Data directory (MOONSHINE_DATA, when set, takes precedence).
    #[arg(long, global = true, default_value = "./data")]
    pub data: PathBuf,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
    /// Send requests to a running moonshine-server instead of computing locally.
    #[arg(long, global = true, value_name = "URL")]
    pub remote: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Prefer {
    Any,
    A,
    D,
}

#[derive(Subcommand)]
pub enum Command {
    /// List the Γ₀(N) cusp classes.
    Cusps {
        n: Int,
        #[arg(long)]
        widths: bool,
    },
    /// Canonical class and witness for a cusp.
    Canon {
        #[arg(allow_hyphen_values = true)]
        cusp: Cusp,
        n: Int,
    },
    /// Decide Γ₀(N)-equivalence of two cusps.
    Equiv {
        #[arg(allow_hyphen_values = true)]
        c1: Cusp,
        #[arg(allow_hyphen_values = true)]
        c2: Cusp,
        n: Int,
    },
    /// Build the Atkin–Lehner matrix W_e for Γ₀(N).
    Al {
        n: Int,
        e: Int,
        #[arg(long, value_enum, default_value_t = Prefer::Any)]
        prefer: Prefer,
    },
    /// Membership of a matrix in Γ₀(N) extended by W_e, W_f, ….
    MemberExt {
        #[arg(allow_hyphen_values = true)]
        matrix: Mat2,
        n: Int,
        /// Comma-separated exact divisors ("-" for none).
        harmonics: String,
    },
    /// Inspect a group symbol n|h+e,f,….
    Symbol {
        #[command(subcommand)]
        action: SymbolAction,
    },
    /// Cusp-moving data P_c, U⁻¹, e, scale and shift.
    Transform {
        symbol: GroupSymbol,
        #[arg(allow_hyphen_values = true)]
        cusp: Cusp,
        n_chi: Int,
    },
    /// Classes for which the cusp is equivalent to ∞.
    Phi {
        #[arg(allow_hyphen_values = true)]
        cusp: Cusp,
        /// Class file to use instead of the data directory.
        #[arg(long)]
        classes: Option<PathBuf>,
    },
    /// Singular-part exponent spectrum of character k at a cusp.
    Sing {
        k: usize,
        #[arg(allow_hyphen_values = true)]
        cusp: Cusp,
    },
    /// Run the invariance-group pipeline for character k.
    Invgroup {
        k: usize,
        /// Only cusp classes with denominator at most this.
        #[arg(long)]
        cusp_limit: Option<Int>,
        /// Only denominators divisible by one of these primes (comma-separated).
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
        /// Largest height of a candidate scale factor.
        #[arg(long, default_value_t = DEFAULT_HEIGHT_CAP)]
        height_cap: u64,
        /// Refuse sweeps over more cusp classes than this.
        #[arg(long, default_value_t = DEFAULT_MAX_CLASSES)]
        max_classes: u64,
        /// Shorthand for --format json.
        #[arg(long)]
        json: bool,
    },
    /// N_χ for character k.
    Nchi { k: usize },
    /// Check the reference N_χ table against the data.
    Table1 {
        /// Accepted for compatibility; the table is always verified.
        #[arg(long)]
        verify: bool,
    },
    /// Check the head-character decompositions.
    Heads {
        /// Accepted for compatibility; the decompositions are always verified.
        #[arg(long)]
        verify: bool,
    },
    /// Number of distinct series up to complex conjugation.
    Distinct,
    /// Brute-force reference computations.
    Oracle {
        #[command(subcommand)]
        action: OracleAction,
    },
}

#[derive(Subcommand)]
pub enum SymbolAction {
    Parse { symbol: GroupSymbol },
    Orbit { symbol: GroupSymbol },
    EquivInf {
        #[arg(allow_hyphen_values = true)]
        cusp: Cusp,
        symbol: GroupSymbol,
    },
}

#[derive(Subcommand)]
pub enum OracleAction {
    Cusps { n: Int },
    Width {
        #[arg(allow_hyphen_values = true)]
        cusp: Cusp,
        n: Int,
    },
}

fn parse_harmonics(text: &str) -> Result<Vec<Int>, String> {
    if text == "-" || text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|s| s.trim().parse::<Int>().map_err(|_| format!("bad harmonic '{s}'"))).collect()
}

impl Command {
    pub fn wants_json(&self) -> bool {
        matches!(self, Command::Invgroup { json: true, .. })
    }

    pub fn to_request(&self) -> Result<Request, String> {
        Ok(match self {
            Command::Cusps { n, widths } => Request::Cusps { n: n.clone(), widths: *widths },
            Command::Canon { cusp, n } => Request::Canon { cusp: cusp.clone(), n: n.clone() },
            Command::Equiv { c1, c2, n } => Request::Equiv { c1: c1.clone(), c2: c2.clone(), n: n.clone() },
            Command::Al { n, e, prefer } => Request::Al {
                n: n.clone(),
                e: e.clone(),
                prefer: match prefer {
                    Prefer::Any => WePreference::Any,
                    Prefer::A => WePreference::AIsOne,
                    Prefer::D => WePreference::DIsOne,
                },
            },
            Command::MemberExt { matrix, n, harmonics } => {
                Request::MemberExt { matrix: matrix.clone(), n: n.clone(), harmonics: parse_harmonics(harmonics)? }
            }
            Command::Symbol { action } => Request::Symbol(match action {
                SymbolAction::Parse { symbol } => SymbolRequest::Parse { symbol: symbol.clone() },
                SymbolAction::Orbit { symbol } => SymbolRequest::Orbit { symbol: symbol.clone() },
                SymbolAction::EquivInf { cusp, symbol } => {
                    SymbolRequest::EquivInf { cusp: cusp.clone(), symbol: symbol.clone() }
                }
            }),
            Command::Transform { symbol, cusp, n_chi } => {
                Request::Transform { symbol: symbol.clone(), cusp: cusp.clone(), n_chi: n_chi.clone() }
            }
            Command::Phi { cusp, classes } => Request::Phi {
                cusp: cusp.clone(),
                classes_file: classes.as_ref().map(|p| p.display().to_string()),
            },
            Command::Sing { k, cusp } => Request::Sing { k: *k, cusp: cusp.clone() },
            Command::Invgroup { k, cusp_limit, primes, height_cap, max_classes, .. } => Request::Invgroup {
                k: *k,
                selection: CuspSelection {
                    cusp_limit: cusp_limit.clone(),
                    denominator_primes: primes.clone(),
                    max_classes: *max_classes,
                },
                height_cap: *height_cap,
            },
            Command::Nchi { k } => Request::Nchi { k: *k },
            Command::Table1 { .. } => Request::Table1,
            Command::Heads { .. } => Request::Heads,
            Command::Distinct => Request::Distinct,
            Command::Oracle { action } => Request::Oracle(match action {
                OracleAction::Cusps { n } => OracleRequest::Cusps { n: n.clone() },
                OracleAction::Width { cusp, n } => OracleRequest::Width { cusp: cusp.clone(), n: n.clone() },
            }),
        })
    }
}
