//! Brute-force reference computations for Γ₀(N) cusps at small levels.
//!
//! Two independent paths:
//!
//! - the coset model: a cusp `x/y = γ∞` with `γ = (x, b; y, d) ∈ SL₂(Z)`
//!   corresponds to the point `(y : d)` of P¹(Z/N), and Γ₀(N)-classes of
//!   cusps are the orbits of P¹(Z/N) under `(u : v) ↦ (u : v + u)`;
//! - explicit matrices: cusps `c₁ = M₁∞`, `c₂ = M₂∞` are equivalent iff some
//!   `M₂·(±1, k; 0, ±1)·M₁⁻¹` lies in Γ₀(N).  Its lower-left entry is linear
//!   in `k`, so the search over `k` is a single congruence.
//!
//! Neither path uses the closed-form classification in [`crate::gamma0`].

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_linear::{Cusp, Mat2};

/// Largest level the oracle accepts.
pub const ORACLE_MAX_LEVEL: u64 = 10_000;

fn guard(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("level must be positive".into()));
    }
    if n > ORACLE_MAX_LEVEL {
        return Err(Error::ResourceLimit(format!("oracle level {n} exceeds {ORACLE_MAX_LEVEL}")));
    }
    Ok(n)
}

fn small_cusp(c: &Cusp) -> Result<(i64, i64)> {
    let conv = |v: num_bigint::BigInt| {
        v.to_i64()
            .filter(|v| v.unsigned_abs() < 1 << 40)
            .ok_or_else(|| Error::ResourceLimit(format!("cusp {c} too large for the oracle")))
    };
    Ok((conv(c.numerator())?, conv(c.denominator())?))
}

/// `(x, b, y, d)` with `xd − by = 1`, i.e. a matrix carrying ∞ to `x/y`.
fn completion(x: i64, y: i64) -> (i64, i64, i64, i64) {
    let g = x.extended_gcd(&y);
    // x·g.x + y·g.y = 1  ⇒  (x, −g.y; y, g.x) has determinant 1.
    let s = if g.gcd < 0 { -1 } else { 1 };
    (x, -g.y * s, y, g.x * s)
}

fn rem(a: i64, n: i64) -> i64 {
    a.rem_euclid(n)
}

/// Orbits of P¹(Z/N) under `(u : v) ↦ (u : v + u)`.
pub struct P1Model {
    n: i64,
    points: Vec<(i64, i64)>,
    index: HashMap<(i64, i64), usize>,
    parent: Vec<usize>,
    /// For each `g | N`: units `λ ≡ 1 (mod N/g)`, the stabilizer of `(g : ·)`.
    stabilizers: HashMap<i64, Vec<i64>>,
}

impl P1Model {
    pub fn new(n: u64) -> Result<P1Model> {
        let n = guard(n)? as i64;
        let units: Vec<i64> = (0..n).filter(|&l| l.gcd(&n) == 1).collect();
        let divs: Vec<i64> = (1..=n).filter(|g| n % g == 0).collect();
        let stabilizers: HashMap<i64, Vec<i64>> = divs
            .iter()
            .map(|&g| (g, units.iter().copied().filter(|l| rem(*l - 1, n / g) == 0).collect()))
            .collect();
        let mut model = P1Model { n, points: Vec::new(), index: HashMap::new(), parent: Vec::new(), stabilizers };
        for &g in &divs {
            for v in 0..n {
                if v.gcd(&g) == 1 {
                    let p = model.normalize(g, v);
                    if !model.index.contains_key(&p) {
                        model.index.insert(p, model.points.len());
                        model.points.push(p);
                    }
                }
            }
        }
        model.parent = (0..model.points.len()).collect();
        for i in 0..model.points.len() {
            let (u, v) = model.points[i];
            let j = model.index[&model.normalize(u, v + u)];
            model.union(i, j);
        }
        Ok(model)
    }

    /// Canonical representative of `(u : v)`: first coordinate `gcd(u, N)`,
    /// second minimal over the stabilizer of that first coordinate.
    fn normalize(&self, u: i64, v: i64) -> (i64, i64) {
        let n = self.n;
        let (u, v) = (rem(u, n), rem(v, n));
        let g = u.gcd(&n);
        // A unit λ with λu ≡ g: invert u/g modulo N/g, then lift to a unit mod N.
        let m = n / g;
        let lam = if m == 1 {
            1
        } else {
            let inv = rem((u / g).extended_gcd(&m).x, m);
            (0..g).map(|t| inv + t * m).find(|l| l.gcd(&n) == 1).expect("unit lift exists")
        };
        let v0 = rem(lam * v, n);
        let best = self.stabilizers[&g].iter().map(|l| rem(l * v0, n)).min().expect("λ = 1");
        (g, best)
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    pub fn level(&self) -> u64 {
        self.n as u64
    }

    /// `|P¹(Z/N)|`, which equals the index of Γ₀(N).
    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn orbit_count(&mut self) -> usize {
        (0..self.points.len()).filter(|&i| self.find(i) == i).count()
    }

    /// Orbit label of a cusp.
    pub fn cusp_orbit(&mut self, c: &Cusp) -> Result<usize> {
        let (x, y) = small_cusp(c)?;
        let (_, _, y, d) = completion(x, y);
        let p = self.normalize(y, d);
        let i = *self.index.get(&p).ok_or_else(|| Error::Internal(format!("{p:?} missing from P¹")))?;
        Ok(self.find(i))
    }
}

type Small = (i128, i128, i128, i128);

fn widen((a, b, c, d): (i64, i64, i64, i64)) -> Small {
    (a as i128, b as i128, c as i128, d as i128)
}

/// `M2·(ε, k; 0, ε)·M1⁻¹ ∈ Γ₀(N)` for some `ε = ±1`, `k ∈ Z`, as integers.
fn explicit_search(m1: Small, m2: Small, n: i128) -> Option<Small> {
    let (a1, b1, c1, d1) = m1;
    let (a2, b2, c2, d2) = m2;
    for eps in [1i128, -1] {
        // lower-left of M2·(ε, k; 0, ε)·M1⁻¹ = ε(c2·d1 − d2·c1) − k·c1·c2.
        let coeff = (c1 * c2).rem_euclid(n);
        let rhs = (eps * (c2 * d1 - d2 * c1)).rem_euclid(n);
        let g = coeff.gcd(&n);
        if rhs % g != 0 {
            continue;
        }
        let m = n / g;
        let k = if m == 1 { 0 } else { (rhs / g) * (coeff / g).extended_gcd(&m).x % m };
        // M2·(ε, k; 0, ε)
        let (p, q, r, s) = (eps * a2, k * a2 + eps * b2, eps * c2, k * c2 + eps * d2);
        // M1⁻¹ = (d1, −b1; −c1, a1)
        return Some((p * d1 - q * c1, -p * b1 + q * a1, r * d1 - s * c1, -r * b1 + s * a1));
    }
    None
}

/// Witness `γ ∈ Γ₀(N)` with `γ·c1 = c2` from the explicit-matrix search.
pub fn oracle_equivalent(c1: &Cusp, c2: &Cusp, n: u64) -> Result<Option<Mat2>> {
    let n = guard(n)? as i128;
    let (x1, y1) = small_cusp(c1)?;
    let (x2, y2) = small_cusp(c2)?;
    let Some(gamma) = explicit_search(widen(completion(x1, y1)), widen(completion(x2, y2)), n) else {
        return Ok(None);
    };
    if gamma.2.rem_euclid(n) != 0 {
        return Err(Error::Internal(format!("oracle congruence solution failed for {c1} -> {c2}")));
    }
    let to_int = |v: i128| num_bigint::BigInt::from(v);
    Ok(Some(Mat2::ints(to_int(gamma.0), to_int(gamma.1), to_int(gamma.2), to_int(gamma.3))))
}

/// One Γ₀(N)-class as found by the oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleClass {
    /// `gcd(N, y)` of the first member (denominator-then-numerator order).
    pub denominator: u64,
    /// Numerator of the first member modulo `gcd(denominator, N/denominator)`.
    pub residue: u64,
    /// All sampled cusps `x/y`, `0 ≤ x < y ≤ 3N` (plus ∞), in this class.
    pub members: Vec<Cusp>,
}

/// Cusps `x/y` with `1 ≤ y ≤ bound`, `0 ≤ x < y`, `gcd(x, y) = 1`, and ∞.
pub fn sample_cusps(bound: u64) -> Vec<Cusp> {
    let mut out = vec![Cusp::Infinity];
    for y in 1..=bound as i64 {
        for x in 0..y {
            if x.gcd(&y) == 1 {
                out.push(Cusp::frac(x, y));
            }
        }
    }
    out
}

/// Γ₀(N)-classes of cusps, computed by both paths; fails if they disagree.
pub fn oracle_cusp_classes(n: u64) -> Result<Vec<OracleClass>> {
    let mut model = P1Model::new(n)?;
    let ni = n as i128;
    // Cluster heads with their completions, so the inner loop is pure integer work.
    let mut heads: Vec<Small> = Vec::new();
    let mut clusters: Vec<Vec<Cusp>> = Vec::new();
    for c in sample_cusps(3 * n) {
        let (x, y) = small_cusp(&c)?;
        let m = widen(completion(x, y));
        match heads.iter().position(|&h| explicit_search(h, m, ni).is_some()) {
            Some(i) => clusters[i].push(c),
            None => {
                heads.push(m);
                clusters.push(vec![c]);
            }
        }
    }
    let mut orbit_of_cluster = HashMap::new();
    for (ci, cl) in clusters.iter().enumerate() {
        for c in cl {
            let o = model.cusp_orbit(c)?;
            match orbit_of_cluster.insert(ci, o) {
                Some(prev) if prev != o => {
                    return Err(Error::Internal(format!("oracle paths disagree at level {n} on {c}")));
                }
                _ => {}
            }
        }
    }
    let mut distinct: Vec<usize> = orbit_of_cluster.values().copied().collect();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != clusters.len() || distinct.len() != model.orbit_count() {
        return Err(Error::Internal(format!(
            "oracle paths disagree at level {n}: {} clusters, {} orbits hit, {} orbits",
            clusters.len(),
            distinct.len(),
            model.orbit_count()
        )));
    }
    let ni = n as i64;
    let mut out: Vec<OracleClass> = clusters
        .into_iter()
        .map(|members| {
            let first = members
                .iter()
                .min_by_key(|c| {
                    let (x, y) = small_cusp(c).expect("small");
                    (if y == 0 { i64::MAX } else { y }, x)
                })
                .expect("nonempty")
                .clone();
            let (x, y) = small_cusp(&first).expect("small");
            let d = ni.gcd(&y);
            let g = d.gcd(&(ni / d));
            OracleClass { denominator: d as u64, residue: rem(x, g) as u64, members }
        })
        .collect();
    out.sort_by_key(|c| (c.denominator, c.residue));
    Ok(out)
}

/// Least `m ≥ 1` with `A·(1, m; 0, 1)·A⁻¹ ∈ Γ₀(N)`, `A∞ = c`.
pub fn oracle_width(c: &Cusp, n: u64) -> Result<u64> {
    let n = guard(n)? as i128;
    let (x, y) = small_cusp(c)?;
    let (_, _, cc, d) = completion(x, y);
    let (cc, d) = (cc as i128, d as i128);
    for m in 1..=n {
        // A·T^m = (a, am + b; c, cm + d); times A⁻¹ = (d, −b; −c, a).
        let lower_left = cc * d - (cc * m + d) * cc;
        if lower_left.rem_euclid(n) == 0 {
            return Ok(m as u64);
        }
    }
    Err(Error::Internal(format!("no width found for {c} at level {n}")))
}
