//! Singular-part spectra of `t_χ = Σ_g χ(g)/|C(g)|·t_g` at cusps, and the
//! invariance-group pipeline built on them.
//!
//! At a cusp `c` moved to ∞ by `P`, each class `g` with `c ~ ∞` in its eigen
//! group contributes one polar term `χ(g)/|C(g)|·σ·e^{-2πi·shift}·q^{-a}`
//! with `a = g²/(e·h²)` (see [`crate::transforms`]); other classes are
//! holomorphic there.  Terms are grouped by exponent, and a group coefficient
//! is only called nonzero when that is certain:
//!
//! - a group with a single contributing class is nonzero (σ is a root of unity);
//! - when every member has an exactly known phase and exact character values
//!   are loaded, the coefficient is `Σ_phase S_phase·e^{-2πi·phase}` with
//!   rational `S_phase`; it is zero if every `S_phase` is, and nonzero if
//!   exactly one is;
//! - at ∞ (with `P = I`) the whole coefficient is `Σ_g χ(g)/|C(g)| = δ_{χ,1}`;
//! - anything else is `Unknown`.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_with::{serde_as, DisplayFromStr};

use crate::error::{Error, Result};
use crate::exact_linear::{is_smooth, rat_int, Cusp, Int, Mat2, Rat};
use crate::gamma0::{count_cusp_classes, cusp_classes_where, CuspClass};
use crate::monster_data::{MonsterClassRecord, MonsterData};
use crate::transforms::{build_pc, build_transform_with};

/// Primes allowed in the scale factor of a cusp-to-cusp substitution.
pub const SMOOTH_PRIMES: [u64; 4] = [2, 3, 5, 7];
pub const DEFAULT_HEIGHT_CAP: u64 = 10_000;
/// Default refusal threshold for unrestricted cusp sweeps.
pub const DEFAULT_MAX_CLASSES: u64 = 200_000;

/// Indices of the classes for which `c` is equivalent to ∞.
pub fn phi_c(c: &Cusp, data: &MonsterData) -> Vec<usize> {
    phi_c_classes(c, &data.classes)
}

/// [`phi_c`] over a bare class list (no character data needed).
pub fn phi_c_classes(c: &Cusp, classes: &[MonsterClassRecord]) -> Vec<usize> {
    classes
        .iter()
        .enumerate()
        .filter(|(_, r)| r.symbol.cusp_equiv_infinity(c).is_some())
        .map(|(i, _)| i)
        .collect()
}

/// [`phi_c`] as class ids.
pub fn phi_c_ids(c: &Cusp, data: &MonsterData) -> BTreeSet<String> {
    phi_c(c, data).into_iter().map(|i| data.classes[i].id.clone()).collect()
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumTerm {
    pub class_id: String,
    /// Position of the class in the loaded data.
    pub class_index: usize,
    #[serde_as(as = "DisplayFromStr")]
    pub exponent: Rat,
    /// `h_g`: without an exact phase, the term is known up to an `h`-th root of unity.
    pub ambiguity_order: u64,
    pub char_nonzero: bool,
    #[serde_as(as = "DisplayFromStr")]
    pub e: Int,
    /// Shift of the transformed argument, reduced mod 1.
    #[serde_as(as = "DisplayFromStr")]
    pub phase: Rat,
    pub exact_phase: bool,
    /// `χ(g)/|C(g)|` when the value is rational and the centralizer is known.
    #[serde_as(as = "Option<DisplayFromStr>")]
    pub weight: Option<Rat>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoefficientStatus {
    ExactZero,
    Nonzero,
    Unknown,
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentGroup {
    #[serde_as(as = "DisplayFromStr")]
    pub exponent: Rat,
    /// Contributing classes (character nonzero).
    pub classes: Vec<String>,
    pub status: CoefficientStatus,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularSpectrum {
    pub k: usize,
    pub cusp: Cusp,
    pub moving_matrix: Mat2,
    pub terms: Vec<SpectrumTerm>,
    /// Sorted by descending exponent.
    pub groups: Vec<ExponentGroup>,
}

impl SingularSpectrum {
    /// Exponents whose coefficient may be nonzero.
    pub fn possible_exponents(&self) -> BTreeSet<Rat> {
        self.groups.iter().filter(|g| g.status != CoefficientStatus::ExactZero).map(|g| g.exponent.clone()).collect()
    }

    /// Exponents whose coefficient is certainly nonzero.
    pub fn definite_exponents(&self) -> BTreeSet<Rat> {
        self.groups.iter().filter(|g| g.status == CoefficientStatus::Nonzero).map(|g| g.exponent.clone()).collect()
    }

    pub fn group(&self, exponent: &Rat) -> Option<&ExponentGroup> {
        self.groups.iter().find(|g| &g.exponent == exponent)
    }

    /// True when every group's coefficient is decided.
    pub fn fully_decided(&self) -> bool {
        self.groups.iter().all(|g| g.status != CoefficientStatus::Unknown)
    }
}

fn frac_part(q: &Rat) -> Rat {
    q - rat_int(&q.floor().to_integer())
}

/// Spectrum at `c` using the standard moving matrix (identity at ∞).
pub fn singular_spectrum(data: &MonsterData, k: usize, c: &Cusp) -> Result<SingularSpectrum> {
    let n = data.n_chi(k)?;
    let pc = match c {
        Cusp::Infinity => Mat2::identity(),
        _ => build_pc(c, &n)?,
    };
    spectrum_with_matrix(data, k, &pc)
}

/// Spectrum of `t_χ|P` for any `P ∈ SL₂(Z)`.
pub fn spectrum_with_matrix(data: &MonsterData, k: usize, pc: &Mat2) -> Result<SingularSpectrum> {
    data.character(k)?;
    let cusp = pc.act(&Cusp::Infinity);
    let mut terms = Vec::new();
    for i in phi_c(&cusp, data) {
        let rec = &data.classes[i];
        let t = build_transform_with(&rec.symbol, pc)?;
        let weight = match (&data.values, &rec.centralizer) {
            (Some(v), Some(cent)) => v.rational_value(k, i).map(|val| val / rat_int(cent)),
            _ => None,
        };
        terms.push(SpectrumTerm {
            class_id: rec.id.clone(),
            class_index: i,
            exponent: t.scale,
            ambiguity_order: rec.symbol.h,
            char_nonzero: data.is_nonzero(k, i),
            e: t.e,
            phase: frac_part(&t.shift),
            exact_phase: t.exact_phase,
            weight,
        });
    }
    let at_infinity = cusp.is_infinity() && pc == &Mat2::identity();
    let groups = group_terms(data, k, &terms, at_infinity);
    Ok(SingularSpectrum { k, cusp, moving_matrix: pc.clone(), terms, groups })
}

fn group_terms(data: &MonsterData, k: usize, terms: &[SpectrumTerm], at_infinity: bool) -> Vec<ExponentGroup> {
    let mut by_exp: BTreeMap<Rat, Vec<&SpectrumTerm>> = BTreeMap::new();
    for t in terms.iter().filter(|t| t.char_nonzero) {
        by_exp.entry(t.exponent.clone()).or_default().push(t);
    }
    by_exp
        .into_iter()
        .rev()
        .map(|(exponent, members)| {
            let (status, reason) = if at_infinity {
                if k == 1 {
                    (CoefficientStatus::Nonzero, "sum of χ(g)/|C(g)| over all classes is 1 for the trivial character".into())
                } else {
                    (CoefficientStatus::ExactZero, "sum of χ(g)/|C(g)| over all classes vanishes (orthogonality)".into())
                }
            } else {
                group_status(data, k, &members)
            };
            ExponentGroup { exponent, classes: members.iter().map(|t| t.class_id.clone()).collect(), status, reason }
        })
        .collect()
}

fn group_status(data: &MonsterData, k: usize, members: &[&SpectrumTerm]) -> (CoefficientStatus, String) {
    if members.len() == 1 {
        return (CoefficientStatus::Nonzero, format!("single contributing class {}", members[0].class_id));
    }
    let Some(values) = &data.values else {
        return (CoefficientStatus::Unknown, format!("{} classes may cancel; no character values loaded", members.len()));
    };
    if let Some(t) = members.iter().find(|t| !t.exact_phase) {
        return (CoefficientStatus::Unknown, format!("phase of {} known only up to a root of unity", t.class_id));
    }
    let mut by_phase: BTreeMap<Rat, BTreeSet<usize>> = BTreeMap::new();
    for t in members {
        by_phase.entry(t.phase.clone()).or_default().insert(t.class_index);
    }
    let mut nonzero_phases = Vec::new();
    for (phase, classes) in &by_phase {
        let mut sum = Rat::zero();
        let mut orbits_seen = BTreeSet::new();
        for &i in classes {
            let Some(o) = values.orbit_index(k, i) else { continue };
            if !orbits_seen.insert(o) {
                continue;
            }
            let (orbit, value) = &values.orbits(k)[o];
            if !orbit.iter().all(|j| classes.contains(j)) {
                return (CoefficientStatus::Unknown, format!("Galois orbit of {} is split", data.classes[i].id));
            }
            let Some(cent) = &data.classes[i].centralizer else {
                return (CoefficientStatus::Unknown, format!("no centralizer order for {}", data.classes[i].id));
            };
            sum += value / rat_int(cent);
        }
        if !sum.is_zero() {
            nonzero_phases.push(phase.clone());
        }
    }
    match nonzero_phases.len() {
        0 => (CoefficientStatus::ExactZero, "exact sums vanish for every phase".into()),
        1 => (CoefficientStatus::Nonzero, format!("exact sum nonzero at the single phase {}", nonzero_phases[0])),
        n => (CoefficientStatus::Unknown, format!("nonzero exact sums at {n} distinct phases")),
    }
}

fn height(q: &Rat) -> Int {
    q.numer().abs().max(q.denom().clone())
}

/// Scale factors `a` compatible with `dst = a·src` under the certain/possible split.
#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineMatch {
    /// False when neither spectrum has a definite exponent (nothing to test).
    pub constrained: bool,
    #[serde_as(as = "BTreeSet<DisplayFromStr>")]
    pub candidates: BTreeSet<Rat>,
    /// Candidates discarded for exceeding the height cap.
    #[serde_as(as = "BTreeSet<DisplayFromStr>")]
    pub over_height: BTreeSet<Rat>,
}

impl AffineMatch {
    /// No substitution `z → az + b` can carry `src` onto `dst`.
    pub fn excludes_all(&self) -> bool {
        self.constrained && self.candidates.is_empty() && self.over_height.is_empty()
    }
}

/// Candidate `a > 0` such that the exponents of `dst` are `a` times those of
/// `src`: every definite `dst` exponent must be `a·s` for a possible `s`, and
/// every definite `src` exponent must land on a possible `dst` exponent.
/// Candidates are restricted to {2,3,5,7}-smooth rationals of height at most
/// `height_cap`.
pub fn match_under_affine(src: &SingularSpectrum, dst: &SingularSpectrum, height_cap: u64) -> AffineMatch {
    let (s_all, s_def) = (src.possible_exponents(), src.definite_exponents());
    let (d_all, d_def) = (dst.possible_exponents(), dst.definite_exponents());
    let raw: BTreeSet<Rat> = if let Some(d0) = d_def.iter().next() {
        s_all.iter().map(|s| d0 / s).collect()
    } else if let Some(s0) = s_def.iter().next() {
        d_all.iter().map(|d| d / s0).collect()
    } else {
        return AffineMatch { constrained: false, candidates: BTreeSet::new(), over_height: BTreeSet::new() };
    };
    let cap = Int::from(height_cap);
    let mut candidates = BTreeSet::new();
    let mut over_height = BTreeSet::new();
    for a in raw {
        let fits = d_def.iter().all(|d| s_all.contains(&(d / &a))) && s_def.iter().all(|s| d_all.contains(&(s * &a)));
        if !fits || !is_smooth(&a, &SMOOTH_PRIMES) {
            continue;
        }
        if height(&a) > cap {
            over_height.insert(a);
        } else {
            candidates.insert(a);
        }
    }
    AffineMatch { constrained: true, candidates, over_height }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CuspVerdictKind {
    ProvedNoMap,
    MapCandidate,
    Inconclusive,
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspVerdict {
    #[serde_as(as = "DisplayFromStr")]
    pub denominator: Int,
    #[serde_as(as = "DisplayFromStr")]
    pub residue: Int,
    pub representative: Cusp,
    pub verdict: CuspVerdictKind,
    #[serde_as(as = "Vec<DisplayFromStr>")]
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub candidates: Vec<Rat>,
    pub detail: String,
}

/// Which cusp classes a sweep covers.
#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspSelection {
    /// Only denominators `d ≤ limit`.
    #[serde_as(as = "Option<DisplayFromStr>")]
    #[serde(default)]
    pub cusp_limit: Option<Int>,
    /// Only denominators divisible by at least one of these primes.
    #[serde(default)]
    pub denominator_primes: Option<Vec<u64>>,
    /// Refuse sweeps with more classes than this.
    #[serde(default = "default_max_classes")]
    pub max_classes: u64,
}

fn default_max_classes() -> u64 {
    DEFAULT_MAX_CLASSES
}

impl Default for CuspSelection {
    fn default() -> Self {
        CuspSelection { cusp_limit: None, denominator_primes: None, max_classes: DEFAULT_MAX_CLASSES }
    }
}

impl CuspSelection {
    pub fn is_restricted(&self) -> bool {
        self.cusp_limit.is_some() || self.denominator_primes.is_some()
    }

    fn keeps(&self, d: &Int) -> bool {
        if self.cusp_limit.as_ref().is_some_and(|m| d > m) {
            return false;
        }
        match &self.denominator_primes {
            Some(ps) => ps.iter().any(|&p| d.is_multiple_of(&Int::from(p))),
            None => true,
        }
    }
}

fn selected_classes(n: &Int, sel: &CuspSelection) -> Result<Vec<CuspClass>> {
    if !sel.is_restricted() {
        let total = count_cusp_classes(n)?;
        if total > Int::from(sel.max_classes) {
            return Err(Error::ResourceLimit(format!(
                "Γ₀({n}) has {total} cusp classes (limit {}); restrict with a cusp limit or denominator primes",
                sel.max_classes
            )));
        }
    }
    let classes = cusp_classes_where(n, |d| sel.keeps(d))?;
    if classes.len() as u64 > sel.max_classes {
        return Err(Error::ResourceLimit(format!(
            "{} cusp classes selected (limit {})",
            classes.len(),
            sel.max_classes
        )));
    }
    Ok(classes)
}

fn describe(set: &BTreeSet<Rat>) -> String {
    let v: Vec<String> = set.iter().map(Rat::to_string).collect();
    format!("{{{}}}", v.join(", "))
}

fn cusp_verdict(
    data: &MonsterData,
    k: usize,
    class: &CuspClass,
    at_zero: &SingularSpectrum,
    height_cap: u64,
) -> Result<CuspVerdict> {
    let rep = class.representative();
    let spec = if class.denominator == class.level {
        // The ∞ class: use the identity so the orthogonality relation applies.
        singular_spectrum(data, k, &Cusp::Infinity)?
    } else {
        singular_spectrum(data, k, &rep)?
    };
    let m = match_under_affine(&spec, at_zero, height_cap);
    let definite = describe(&spec.definite_exponents());
    let (verdict, detail) = if m.excludes_all() {
        (CuspVerdictKind::ProvedNoMap, format!("definite exponents {definite} admit no {{2,3,5,7}}-smooth scale onto the spectrum at 0"))
    } else if !m.constrained {
        (CuspVerdictKind::Inconclusive, "no exponent with a certainly nonzero coefficient at this cusp or at 0".into())
    } else if !m.over_height.is_empty() && m.candidates.is_empty() {
        (CuspVerdictKind::Inconclusive, format!("only scale factors above the height cap {height_cap}: {}", describe(&m.over_height)))
    } else if spec.fully_decided() && at_zero.fully_decided() {
        (CuspVerdictKind::MapCandidate, format!("spectra fully decided; compatible scales {}", describe(&m.candidates)))
    } else {
        let unknown: Vec<String> = spec
            .groups
            .iter()
            .filter(|g| g.status == CoefficientStatus::Unknown)
            .map(|g| format!("{} ({})", g.exponent, g.reason))
            .collect();
        (
            CuspVerdictKind::Inconclusive,
            format!("compatible scales {}; undecided exponents: {}", describe(&m.candidates), unknown.join("; ")),
        )
    };
    let candidates = if verdict == CuspVerdictKind::ProvedNoMap { Vec::new() } else { m.candidates.into_iter().collect() };
    Ok(CuspVerdict {
        denominator: class.denominator.clone(),
        residue: class.residue.clone(),
        representative: rep,
        verdict,
        candidates,
        detail,
    })
}

/// For each selected Γ₀(N_χ) class not equivalent to 0, decide whether some
/// `A ∈ Γ_χ` could carry 0 to it.
pub fn prove_a0_empty(data: &MonsterData, k: usize, sel: &CuspSelection, height_cap: u64) -> Result<Vec<CuspVerdict>> {
    let n = data.n_chi(k)?;
    let at_zero = singular_spectrum(data, k, &Cusp::zero())?;
    let classes: Vec<CuspClass> = selected_classes(&n, sel)?.into_iter().filter(|c| !c.denominator.is_one()).collect();
    classes.par_iter().map(|c| cusp_verdict(data, k, c, &at_zero, height_cap)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TranslationVerdictKind {
    ProvedExcluded,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranslationVerdict {
    pub r: u64,
    pub verdict: TranslationVerdictKind,
    pub detail: String,
}

/// Whether `B_r = (1, 0; N_χ/r, 1)` can fix `t_χ`, for `r ∈ {2, 3, 5, 7}`.
///
/// If it did, `t_χ|B_r = t_χ`, so the spectrum with moving matrix `B_r` would
/// equal the one at ∞: no pole below exponent 1, and total coefficient
/// `δ_{χ,1}` at exponent 1.  Classes with `n·h | N/r` ("good") contain
/// `B_r` in `Γ₀(n·h)` and contribute exactly as at ∞; the rest ("bad")
/// decide the question:
///
/// - a definite exponent below 1 excludes `B_r`;
/// - if no bad class has exponent 1, the exponent-1 coefficient differs from
///   `δ_{χ,1}` by `−Σ_bad χ(g)/|C(g)|`, which excludes `B_r` when it is
///   certainly nonzero;
/// - a single bad class with exponent 1 whose eigen group contains `B_r`
///   changes the coefficient by `χ(g)/|C(g)|·(σ − 1)`, nonzero because a
///   lower-triangular unipotent `(1, 0; m, 1)` of the eigen group fixes
///   `t_g` only when `n·h | m`.
pub fn prove_translation_stabilizer(data: &MonsterData, k: usize) -> Result<Vec<TranslationVerdict>> {
    let n = data.n_chi(k)?;
    SMOOTH_PRIMES
        .par_iter()
        .map(|&r| translation_verdict(data, k, &n, r))
        .collect()
}

fn translation_verdict(data: &MonsterData, k: usize, n: &Int, r: u64) -> Result<TranslationVerdict> {
    let ri = Int::from(r);
    let verdict = |kind, detail: String| Ok(TranslationVerdict { r, verdict: kind, detail });
    if !n.is_multiple_of(&ri) {
        return verdict(TranslationVerdictKind::ProvedExcluded, format!("{r} ∤ N_χ: B_{r} is already in Γ₀(N_χ)"));
    }
    let m = n / &ri;
    let br = Mat2::ints(Int::one(), Int::zero(), m.clone(), Int::one());
    let spec = spectrum_with_matrix(data, k, &br)?;
    if let Some(g) = spec.groups.iter().find(|g| g.exponent < Rat::one() && g.status == CoefficientStatus::Nonzero) {
        return verdict(
            TranslationVerdictKind::ProvedExcluded,
            format!("pole q^-{} with certainly nonzero coefficient ({}); none at ∞", g.exponent, g.reason),
        );
    }
    let bad: Vec<usize> = (0..data.classes.len())
        .filter(|&i| data.is_nonzero(k, i) && !m.is_multiple_of(&data.classes[i].symbol.nh()))
        .collect();
    let bad_ids = || bad.iter().map(|&i| data.classes[i].id.as_str()).collect::<Vec<_>>().join(",");
    let bad_at_one: Vec<&SpectrumTerm> = spec
        .terms
        .iter()
        .filter(|t| t.char_nonzero && t.exponent.is_one() && bad.contains(&t.class_index))
        .collect();
    if bad_at_one.is_empty() {
        if bad.len() == 1 {
            return verdict(
                TranslationVerdictKind::ProvedExcluded,
                format!("only {} has n·h ∤ N_χ/{r}, and it has no exponent-1 pole, so the q^-1 coefficient moves", bad_ids()),
            );
        }
        if let Some(sum) = bad_weight_sum(data, k, &bad) {
            if !sum.is_zero() {
                return verdict(
                    TranslationVerdictKind::ProvedExcluded,
                    format!("classes {} have no exponent-1 pole and Σχ(g)/|C(g)| = {sum} ≠ 0 over them", bad_ids()),
                );
            }
        }
    } else if bad.len() == 1 && bad_at_one.len() == 1 {
        let rec = &data.classes[bad[0]];
        if rec.symbol.eigen_member(&br) == Some(Int::one()) {
            return verdict(
                TranslationVerdictKind::ProvedExcluded,
                format!(
                    "only {} ({}) has n·h ∤ N_χ/{r}; B_{r} lies in its eigen group but not in its invariance group, so σ ≠ 1",
                    rec.id, rec.symbol
                ),
            );
        }
    }
    verdict(
        TranslationVerdictKind::Inconclusive,
        format!(
            "no certain pole below exponent 1; classes with n·h ∤ N_χ/{r}: {}; of these at exponent 1: {}",
            bad_ids(),
            bad_at_one.iter().map(|t| t.class_id.as_str()).collect::<Vec<_>>().join(",")
        ),
    )
}

fn bad_weight_sum(data: &MonsterData, k: usize, classes: &[usize]) -> Option<Rat> {
    let values = data.values.as_ref()?;
    let set: BTreeSet<usize> = classes.iter().copied().collect();
    let mut seen = BTreeSet::new();
    let mut sum = Rat::zero();
    for &i in classes {
        let o = values.orbit_index(k, i)?;
        if !seen.insert(o) {
            continue;
        }
        let (orbit, value) = &values.orbits(k)[o];
        if !orbit.iter().all(|j| set.contains(j)) {
            return None;
        }
        sum += value / rat_int(data.classes[i].centralizer.as_ref()?);
    }
    Some(sum)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "status")]
pub enum Conclusion {
    ProvedEqualGamma0,
    Inconclusive { reasons: Vec<String> },
}

#[serde_as]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvarianceReport {
    pub k: usize,
    #[serde_as(as = "DisplayFromStr")]
    pub n_chi: Int,
    pub cusp_verdicts: Vec<CuspVerdict>,
    pub translation_verdicts: Vec<TranslationVerdict>,
    pub conclusion: Conclusion,
    /// True when the cusp sweep was restricted, so a full proof is impossible.
    pub truncated: bool,
}

impl InvarianceReport {
    pub fn count(&self, kind: CuspVerdictKind) -> usize {
        self.cusp_verdicts.iter().filter(|v| v.verdict == kind).count()
    }
}

/// The full pipeline: sweep cusp classes, test the translations `B_r`, and
/// conclude `Γ_χ = Γ₀(N_χ)` only when every test is decisive.
pub fn invariance_group(data: &MonsterData, k: usize, sel: &CuspSelection, height_cap: u64) -> Result<InvarianceReport> {
    let n_chi = data.n_chi(k)?;
    let cusp_verdicts = prove_a0_empty(data, k, sel, height_cap)?;
    let translation_verdicts = prove_translation_stabilizer(data, k)?;
    let mut reasons = Vec::new();
    if sel.is_restricted() {
        reasons.push("cusp sweep restricted; unselected classes are unchecked".to_string());
    }
    for v in &cusp_verdicts {
        if v.verdict != CuspVerdictKind::ProvedNoMap {
            reasons.push(format!("cusp {} ({:?}): {}", v.representative, v.verdict, v.detail));
        }
    }
    for t in &translation_verdicts {
        if t.verdict != TranslationVerdictKind::ProvedExcluded {
            reasons.push(format!("B_{}: {}", t.r, t.detail));
        }
    }
    let conclusion = if reasons.is_empty() { Conclusion::ProvedEqualGamma0 } else { Conclusion::Inconclusive { reasons } };
    Ok(InvarianceReport { k, n_chi, cusp_verdicts, translation_verdicts, conclusion, truncated: sel.is_restricted() })
}
