//! Monster class and character fixtures, the levels `N_χ`, and the checks
//! against the reference `N_χ` table and the graded-dimension data.
//!
//! File formats (tab-separated, `#` comments, blank lines ignored):
//!
//! - `classes.tsv`: `class_id  symbol  [centralizer_order]`
//! - `characters.tsv`: `k  degree  conjugate_k  zero-classes-comma-list|-`
//! - `values.tsv` (optional): `k  class[,class…]  value-sum` — one line per
//!   class with a nonzero rational value, or per Galois orbit of classes with
//!   the (rational) sum of the conjugate values.
//! - `table1.tsv`: `k  N  p^e*p^e*…  [note]`
//! - `heads.tsv`: `h  dim  k:c,k:c,…`; `head_multiplicities.tsv`: `h  c_h1`

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fs;
use std::path::Path;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use crate::error::{Error, Result};
use crate::exact_linear::{format_factorization, Int, Rat};
use crate::group_symbols::GroupSymbol;

pub const CLASS_COUNT: usize = 194;

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonsterClassRecord {
    pub id: String,
    pub symbol: GroupSymbol,
    #[serde_as(as = "Option<DisplayFromStr>")]
    pub centralizer: Option<Int>,
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRecord {
    pub k: usize,
    #[serde_as(as = "DisplayFromStr")]
    pub degree: Int,
    pub conjugate: usize,
    pub zero_classes: BTreeSet<String>,
}

/// Exact character values, grouped into Galois orbits of classes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CharacterValues {
    /// Per character (index `k − 1`): orbits as (class indices, value sum).
    orbits: Vec<Vec<(Vec<usize>, Rat)>>,
    /// Per character: class index → orbit position.
    orbit_of: Vec<HashMap<usize, usize>>,
}

impl CharacterValues {
    /// The orbits of classes carrying nonzero values of `χ_k`.
    pub fn orbits(&self, k: usize) -> &[(Vec<usize>, Rat)] {
        &self.orbits[k - 1]
    }

    /// Orbit position of a class for `χ_k` (`None` where the value is 0).
    pub fn orbit_index(&self, k: usize, class: usize) -> Option<usize> {
        self.orbit_of[k - 1].get(&class).copied()
    }

    /// The exact value `χ_k(g)` when the class is alone in its orbit.
    pub fn rational_value(&self, k: usize, class: usize) -> Option<Rat> {
        match self.orbit_index(k, class) {
            None => Some(Rat::zero()),
            Some(i) => {
                let (members, sum) = &self.orbits[k - 1][i];
                (members.len() == 1).then(|| sum.clone())
            }
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct MonsterData {
    pub classes: Vec<MonsterClassRecord>,
    pub characters: Vec<CharacterRecord>,
    pub values: Option<CharacterValues>,
    /// Non-fatal observations made while loading (e.g. partial datasets).
    pub warnings: Vec<String>,
    index: HashMap<String, usize>,
    zero: Vec<Vec<bool>>,
}

fn data_err(path: &Path, line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Data(format!("{}:{line}: {msg}", path.display()))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io { path: path.display().to_string(), msg: e.to_string() })
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let t = line.trim_end_matches('\r');
        if t.trim().is_empty() || t.trim_start().starts_with('#') {
            None
        } else {
            Some((i + 1, t.split('\t').map(str::trim).collect()))
        }
    })
}

pub fn load_classes(path: &Path) -> Result<Vec<MonsterClassRecord>> {
    let text = read(path)?;
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for (line, f) in records(&text) {
        if f.len() < 2 || f.len() > 3 {
            return Err(data_err(path, line, "expected class_id, symbol[, centralizer]"));
        }
        let id = f[0].to_string();
        if id.is_empty() || !seen.insert(id.clone()) {
            return Err(data_err(path, line, format!("duplicate or empty class id '{id}'")));
        }
        let symbol: GroupSymbol = f[1].parse().map_err(|e| data_err(path, line, e))?;
        let centralizer = match f.get(2) {
            None => None,
            Some(s) => Some(s.parse::<Int>().map_err(|_| data_err(path, line, "bad centralizer order"))?),
        };
        out.push(MonsterClassRecord { id, symbol, centralizer });
    }
    Ok(out)
}

pub fn load_characters(path: &Path) -> Result<Vec<CharacterRecord>> {
    let text = read(path)?;
    let mut out: Vec<CharacterRecord> = Vec::new();
    for (line, f) in records(&text) {
        if f.len() != 4 {
            return Err(data_err(path, line, "expected k, degree, conjugate_k, zero classes"));
        }
        let k: usize = f[0].parse().map_err(|_| data_err(path, line, "bad index"))?;
        if k != out.len() + 1 {
            return Err(data_err(path, line, format!("expected index {}, found {k}", out.len() + 1)));
        }
        let degree: Int = f[1].parse().map_err(|_| data_err(path, line, "bad degree"))?;
        let conjugate: usize = f[2].parse().map_err(|_| data_err(path, line, "bad conjugate index"))?;
        let zero_classes = if f[3] == "-" {
            BTreeSet::new()
        } else {
            f[3].split(',').map(|s| s.trim().to_string()).collect()
        };
        out.push(CharacterRecord { k, degree, conjugate, zero_classes });
    }
    Ok(out)
}

impl MonsterData {
    /// Validate and index classes and characters.
    pub fn new(classes: Vec<MonsterClassRecord>, characters: Vec<CharacterRecord>) -> Result<MonsterData> {
        let mut warnings = Vec::new();
        if classes.len() != CLASS_COUNT {
            warnings.push(format!("{} classes loaded, expected {CLASS_COUNT}", classes.len()));
        }
        if characters.len() != CLASS_COUNT {
            warnings.push(format!("{} characters loaded, expected {CLASS_COUNT}", characters.len()));
        }
        let mut index = HashMap::new();
        for (i, c) in classes.iter().enumerate() {
            if index.insert(c.id.clone(), i).is_some() {
                return Err(Error::Data(format!("duplicate class id {}", c.id)));
            }
        }
        let mut zero = Vec::with_capacity(characters.len());
        for ch in &characters {
            let mut row = vec![false; classes.len()];
            for id in &ch.zero_classes {
                let i = *index
                    .get(id)
                    .ok_or_else(|| Error::Data(format!("character {} vanishes on unknown class {id}", ch.k)))?;
                row[i] = true;
            }
            zero.push(row);
        }
        for ch in &characters {
            let partner = characters
                .get(ch.conjugate.wrapping_sub(1))
                .filter(|p| p.conjugate == ch.k)
                .ok_or_else(|| Error::Data(format!("conjugate of character {} is not an involution", ch.k)))?;
            if partner.zero_classes != ch.zero_classes || partner.degree != ch.degree {
                return Err(Error::Data(format!("characters {} and {} are not conjugate-compatible", ch.k, partner.k)));
            }
        }
        Ok(MonsterData { classes, characters, values: None, warnings, index, zero })
    }

    /// Load `classes.tsv`, `characters.tsv` and, if present, `values.tsv`.
    pub fn load_dir(dir: &Path) -> Result<MonsterData> {
        let mut data = MonsterData::new(
            load_classes(&dir.join("classes.tsv"))?,
            load_characters(&dir.join("characters.tsv"))?,
        )?;
        let values = dir.join("values.tsv");
        if values.exists() {
            data.load_values(&values)?;
        }
        Ok(data)
    }

    /// Attach exact values; they must agree with the zero patterns.
    pub fn load_values(&mut self, path: &Path) -> Result<()> {
        let text = read(path)?;
        let n = self.characters.len();
        let mut orbits: Vec<Vec<(Vec<usize>, Rat)>> = vec![Vec::new(); n];
        let mut orbit_of: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
        for (line, f) in records(&text) {
            if f.len() != 3 {
                return Err(data_err(path, line, "expected k, classes, value"));
            }
            let k: usize = f[0].parse().map_err(|_| data_err(path, line, "bad index"))?;
            if k == 0 || k > n {
                return Err(data_err(path, line, format!("character index {k} out of range")));
            }
            let mut members = Vec::new();
            for id in f[1].split(',') {
                let i = self.class_index(id.trim()).ok_or_else(|| data_err(path, line, format!("unknown class {id}")))?;
                if self.zero[k - 1][i] {
                    return Err(data_err(path, line, format!("χ_{k} is listed as vanishing on {id}")));
                }
                if orbit_of[k - 1].insert(i, orbits[k - 1].len()).is_some() {
                    return Err(data_err(path, line, format!("class {id} listed twice for χ_{k}")));
                }
                members.push(i);
            }
            let sum: Rat = f[2].parse().map_err(|_| data_err(path, line, "bad value"))?;
            orbits[k - 1].push((members, sum));
        }
        for (k, row) in self.zero.iter().enumerate() {
            for (i, &z) in row.iter().enumerate() {
                if !z && !orbit_of[k].contains_key(&i) {
                    return Err(Error::Data(format!(
                        "{}: no value for χ_{} on {}, which is not in its zero list",
                        path.display(),
                        k + 1,
                        self.classes[i].id
                    )));
                }
            }
        }
        self.values = Some(CharacterValues { orbits, orbit_of });
        Ok(())
    }

    pub fn class_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn class(&self, id: &str) -> Option<&MonsterClassRecord> {
        self.class_index(id).map(|i| &self.classes[i])
    }

    pub fn character(&self, k: usize) -> Result<&CharacterRecord> {
        self.characters
            .get(k.wrapping_sub(1))
            .ok_or_else(|| Error::InvalidArgument(format!("character index {k} outside 1..={}", self.characters.len())))
    }

    /// Whether `χ_k` is nonzero on the class with the given index.
    pub fn is_nonzero(&self, k: usize, class: usize) -> bool {
        !self.zero[k - 1][class]
    }

    /// `lcm{n_g·h_g : χ_k(g) ≠ 0}`.
    pub fn n_chi(&self, k: usize) -> Result<Int> {
        self.character(k)?;
        Ok(self
            .classes
            .iter()
            .enumerate()
            .filter(|(i, _)| self.is_nonzero(k, *i))
            .fold(Int::one(), |l, (_, c)| l.lcm(&c.symbol.nh())))
    }

    /// Characters up to complex conjugation.
    pub fn distinct_series_count(&self) -> usize {
        let pairs = self.characters.iter().filter(|c| c.conjugate > c.k).count();
        self.characters.len() - pairs
    }
}

/// Parse `p^e*p^e*…` (a bare `p` means exponent 1) into its value.
pub fn parse_factorization(text: &str) -> Result<Int> {
    let bad = || Error::Parse(format!("bad factorization '{text}'"));
    let mut value = Int::one();
    for part in text.split('*') {
        let (p, e) = match part.trim().split_once('^') {
            Some((p, e)) => (p, e.parse::<u32>().map_err(|_| bad())?),
            None => (part.trim(), 1),
        };
        let p: Int = p.parse().map_err(|_| bad())?;
        value *= num_traits::pow(p, e as usize);
    }
    Ok(value)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Table1Status {
    /// Integer and factorization both equal the computed level.
    Match,
    /// The factorization equals the computed level but the listed integer
    /// does not multiply out to it.
    PrintedIntegerTypo,
    Mismatch,
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub k: usize,
    #[serde_as(as = "DisplayFromStr")]
    pub listed: Int,
    pub listed_factorization: String,
    #[serde_as(as = "DisplayFromStr")]
    pub computed: Int,
    pub computed_factorization: String,
    pub status: Table1Status,
    pub note: Option<String>,
}

/// Conjugate characters whose listed integers differ.
#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDiscrepancy {
    pub k: usize,
    pub conjugate: usize,
    #[serde_as(as = "DisplayFromStr")]
    pub listed_k: Int,
    #[serde_as(as = "DisplayFromStr")]
    pub listed_conjugate: Int,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Report {
    pub rows: Vec<Table1Row>,
    pub pair_discrepancies: Vec<PairDiscrepancy>,
}

impl Table1Report {
    pub fn count(&self, status: Table1Status) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }

    /// Rows whose listed factorization equals the computed level.
    pub fn factorization_matches(&self) -> usize {
        self.rows.iter().filter(|r| r.status != Table1Status::Mismatch).count()
    }

    pub fn all_factorizations_match(&self) -> bool {
        self.count(Table1Status::Mismatch) == 0
    }
}

pub fn verify_table1(data: &MonsterData, fixture: &Path) -> Result<Table1Report> {
    let text = read(fixture)?;
    let mut rows = Vec::new();
    for (line, f) in records(&text) {
        if f.len() < 3 || f.len() > 4 {
            return Err(data_err(fixture, line, "expected k, N, factorization[, note]"));
        }
        let k: usize = f[0].parse().map_err(|_| data_err(fixture, line, "bad index"))?;
        let listed: Int = f[1].parse().map_err(|_| data_err(fixture, line, "bad integer"))?;
        let factored = parse_factorization(f[2]).map_err(|e| data_err(fixture, line, e))?;
        let computed = data.n_chi(k).map_err(|e| data_err(fixture, line, e))?;
        let computed_factorization = format_factorization(&computed)?;
        let status = if factored == computed && listed == computed {
            Table1Status::Match
        } else if factored == computed {
            Table1Status::PrintedIntegerTypo
        } else {
            Table1Status::Mismatch
        };
        rows.push(Table1Row {
            k,
            listed,
            listed_factorization: f[2].to_string(),
            computed,
            computed_factorization,
            status,
            note: f.get(3).map(|s| s.to_string()),
        });
    }
    let by_k: BTreeMap<usize, &Table1Row> = rows.iter().map(|r| (r.k, r)).collect();
    let mut pair_discrepancies = Vec::new();
    for r in &rows {
        let conj = data.character(r.k)?.conjugate;
        if conj > r.k {
            if let Some(other) = by_k.get(&conj) {
                if other.listed != r.listed {
                    pair_discrepancies.push(PairDiscrepancy {
                        k: r.k,
                        conjugate: conj,
                        listed_k: r.listed.clone(),
                        listed_conjugate: other.listed.clone(),
                    });
                }
            }
        }
    }
    Ok(Table1Report { rows, pair_discrepancies })
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeadRow {
    pub h: u32,
    #[serde_as(as = "DisplayFromStr")]
    pub dimension: Int,
    pub decomposition: BTreeMap<usize, u64>,
    #[serde_as(as = "DisplayFromStr")]
    pub computed: Int,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityRow {
    pub h: u32,
    pub c_h1: u64,
    /// Agreement with the decomposition in the heads file, when `h` is there.
    pub consistent: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeadsReport {
    pub heads: Vec<HeadRow>,
    pub multiplicities: Vec<MultiplicityRow>,
}

impl HeadsReport {
    pub fn ok(&self) -> bool {
        self.heads.iter().all(|r| r.ok) && self.multiplicities.iter().all(|m| m.consistent != Some(false))
    }
}

/// Check `dim V_h = Σ c_hk·deg χ_k`, and the trivial multiplicities when a
/// multiplicity file is given.
pub fn verify_heads(data: &MonsterData, heads: &Path, multiplicities: Option<&Path>) -> Result<HeadsReport> {
    let text = read(heads)?;
    let mut rows = Vec::new();
    for (line, f) in records(&text) {
        if f.len() != 3 {
            return Err(data_err(heads, line, "expected h, dim, decomposition"));
        }
        let h: u32 = f[0].parse().map_err(|_| data_err(heads, line, "bad grade"))?;
        let dimension: Int = f[1].parse().map_err(|_| data_err(heads, line, "bad dimension"))?;
        let mut decomposition = BTreeMap::new();
        let mut computed = Int::zero();
        for item in f[2].split(',') {
            let (k, c) = item.split_once(':').ok_or_else(|| data_err(heads, line, "expected k:c"))?;
            let k: usize = k.trim().parse().map_err(|_| data_err(heads, line, "bad character index"))?;
            let c: u64 = c.trim().parse().map_err(|_| data_err(heads, line, "bad multiplicity"))?;
            computed += &data.character(k).map_err(|e| data_err(heads, line, e))?.degree * c;
            decomposition.insert(k, c);
        }
        let ok = computed == dimension;
        rows.push(HeadRow { h, dimension, decomposition, computed, ok });
    }
    let mut mults = Vec::new();
    if let Some(path) = multiplicities {
        let text = read(path)?;
        for (line, f) in records(&text) {
            if f.len() != 2 {
                return Err(data_err(path, line, "expected h, c_h1"));
            }
            let h: u32 = f[0].parse().map_err(|_| data_err(path, line, "bad grade"))?;
            let c_h1: u64 = f[1].parse().map_err(|_| data_err(path, line, "bad multiplicity"))?;
            let consistent = rows
                .iter()
                .find(|r| r.h == h)
                .map(|r| r.decomposition.get(&1).copied().unwrap_or(0) == c_h1);
            mults.push(MultiplicityRow { h, c_h1, consistent });
        }
    }
    Ok(HeadsReport { heads: rows, multiplicities: mults })
}
