//! Exact scalars, 2×2 matrices over Q, cusps of P¹(Q), and the integer
//! helpers (Bézout, prime supports, factorization) everything else builds on.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_with::{DeserializeFromStr, SerializeDisplay};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

pub fn rat_int(n: &Int) -> Rat {
    Rat::from_integer(n.clone())
}

/// Non-negative gcd.
pub fn gcd(a: &Int, b: &Int) -> Int {
    a.gcd(b)
}

/// Extended Euclid: `(g, x, y)` with `g = gcd(a, b) ≥ 0` and `a·x + b·y = g`.
pub fn ext_gcd(a: &Int, b: &Int) -> (Int, Int, Int) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Int::one(), Int::zero());
    let (mut t0, mut t1) = (Int::zero(), Int::one());
    while !r1.is_zero() {
        let q = r0.div_floor(&r1);
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0.is_negative() {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Inverse of `a` modulo `m > 0`, as the least non-negative residue.
pub fn mod_inverse(a: &Int, m: &Int) -> Option<Int> {
    if m.is_one() {
        return Some(Int::zero());
    }
    let (g, x, _) = ext_gcd(&a.mod_floor(m), m);
    g.is_one().then(|| x.mod_floor(m))
}

/// Largest divisor of `|n|` whose prime factors all divide `y`.
///
/// `y = 0` is divisible by every prime, so the whole of `|n|` is returned.
pub fn supported_part(n: &Int, y: &Int) -> Int {
    let n = n.abs();
    if y.is_zero() {
        return n;
    }
    let mut rest = n;
    let mut part = Int::one();
    let mut g = gcd(&rest, y);
    while !g.is_one() && !g.is_zero() {
        part *= &g;
        rest /= &g;
        g = gcd(&rest, &g);
    }
    part
}

/// Bézout pair with an extra coprimality constraint.
///
/// For coprime `a`, `b` and nonzero `m`, returns `(x, y)` with `a·x + b·y = 1`
/// and `gcd(x·m, y) = 1`.  Starting from the Euclidean solution `(x', y')`,
/// `|m|` is split as `M_a·M_{y'}·M'` (the parts supported on the primes of
/// `a`, of `y'`, and the rest); the pair `(x' − b·M', y' + a·M')` then avoids
/// every prime of `m`.  If the Euclidean pair already satisfies the constraint
/// it is returned unchanged.
pub fn ext_gcd_coprime(a: &Int, b: &Int, m: &Int) -> Result<(Int, Int)> {
    if m.is_zero() {
        return Err(Error::InvalidArgument("modulus must be nonzero".into()));
    }
    let (g, x0, y0) = ext_gcd(a, b);
    if !g.is_one() {
        return Err(Error::InvalidArgument(format!("gcd({a}, {b}) = {g}, expected 1")));
    }
    let m = m.abs();
    if gcd(&(&x0 * &m), &y0).is_one() {
        return Ok((x0, y0));
    }
    let m_a = supported_part(&m, a);
    let m_y = supported_part(&(&m / &m_a), &y0);
    let m_rest = &m / (&m_a * &m_y);
    let x = &x0 - b * &m_rest;
    let y = &y0 + a * &m_rest;
    debug_assert!((a * &x + b * &y).is_one());
    debug_assert!(gcd(&(&x * &m), &y).is_one());
    Ok((x, y))
}

const TRIAL_LIMIT: u64 = 10_000_000;

/// Prime factorization by trial division, primes ascending.
///
/// Fails with [`Error::ResourceLimit`] when a cofactor could hide a prime
/// beyond the trial bound; all levels that occur in practice are smooth.
pub fn factorize(n: &Int) -> Result<Vec<(Int, u32)>> {
    if !n.is_positive() {
        return Err(Error::InvalidArgument(format!("cannot factor {n}")));
    }
    let mut rest = n.clone();
    let mut out = Vec::new();
    let two = Int::from(2);
    let e = divide_out(&mut rest, &two);
    if e > 0 {
        out.push((two, e));
    }
    let mut p = 3u64;
    while !rest.is_one() {
        let pb = Int::from(p);
        if &pb * &pb > rest {
            out.push((std::mem::replace(&mut rest, Int::one()), 1));
            break;
        }
        if p > TRIAL_LIMIT {
            return Err(Error::ResourceLimit(format!(
                "{n} has a cofactor {rest} beyond the trial-division bound"
            )));
        }
        let e = divide_out(&mut rest, &pb);
        if e > 0 {
            out.push((pb, e));
        }
        p += 2;
    }
    Ok(out)
}

fn divide_out(rest: &mut Int, p: &Int) -> u32 {
    let mut e = 0;
    while rest.is_multiple_of(p) {
        *rest /= p;
        e += 1;
    }
    e
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: &Int) -> Result<Vec<Int>> {
    let mut ds = vec![Int::one()];
    for (p, e) in factorize(n)? {
        let mut next = Vec::with_capacity(ds.len() * (e as usize + 1));
        for d in &ds {
            let mut q = d.clone();
            for _ in 0..=e {
                next.push(q.clone());
                q *= &p;
            }
        }
        ds = next;
    }
    ds.sort();
    Ok(ds)
}

/// Euler's totient.
pub fn euler_phi(n: &Int) -> Result<Int> {
    let mut phi = n.clone();
    for (p, _) in factorize(n)? {
        phi = phi / &p * (&p - 1);
    }
    Ok(phi)
}

/// Render a positive integer as `p^e*q*...` (`1` for one).
pub fn format_factorization(n: &Int) -> Result<String> {
    let fs = factorize(n)?;
    if fs.is_empty() {
        return Ok("1".into());
    }
    Ok(fs
        .iter()
        .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect::<Vec<_>>()
        .join("*"))
}

/// True when every prime factor of the rational's numerator and denominator
/// lies in `primes`.
pub fn is_smooth(q: &Rat, primes: &[u64]) -> bool {
    let strip = |mut n: Int| {
        n = n.abs();
        for &p in primes {
            let p = Int::from(p);
            while !n.is_zero() && n.is_multiple_of(&p) {
                n /= &p;
            }
        }
        n.is_one()
    };
    strip(q.numer().clone()) && strip(q.denom().clone())
}

/// A point of P¹(Q): ∞ or a reduced fraction `x/y` with `y ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, SerializeDisplay, DeserializeFromStr)]
pub enum Cusp {
    Infinity,
    Finite { x: Int, y: Int },
}

impl Cusp {
    /// Reduce `x/y`; `y = 0` gives ∞.
    pub fn new(x: Int, y: Int) -> Result<Cusp> {
        if y.is_zero() {
            return if x.is_zero() {
                Err(Error::InvalidArgument("0/0 is not a cusp".into()))
            } else {
                Ok(Cusp::Infinity)
            };
        }
        let g = gcd(&x, &y);
        let (mut x, mut y) = (x / &g, y / &g);
        if y.is_negative() {
            x = -x;
            y = -y;
        }
        Ok(Cusp::Finite { x, y })
    }

    pub fn frac(x: i64, y: i64) -> Cusp {
        Cusp::new(x.into(), y.into()).expect("valid fraction")
    }

    pub fn zero() -> Cusp {
        Cusp::Finite { x: Int::zero(), y: Int::one() }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Cusp::Infinity)
    }

    /// Numerator in the `1/0` convention for ∞.
    pub fn numerator(&self) -> Int {
        match self {
            Cusp::Infinity => Int::one(),
            Cusp::Finite { x, .. } => x.clone(),
        }
    }

    /// Denominator, with ∞ treated as `y = 0`.
    pub fn denominator(&self) -> Int {
        match self {
            Cusp::Infinity => Int::zero(),
            Cusp::Finite { y, .. } => y.clone(),
        }
    }

    fn from_quotient(num: Rat, den: Rat) -> Cusp {
        if den.is_zero() {
            return Cusp::Infinity;
        }
        let q = num / den;
        Cusp::Finite { x: q.numer().clone(), y: q.denom().clone() }
    }
}

impl fmt::Display for Cusp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cusp::Infinity => write!(f, "inf"),
            Cusp::Finite { x, y } if y.is_one() => write!(f, "{x}"),
            Cusp::Finite { x, y } => write!(f, "{x}/{y}"),
        }
    }
}

impl FromStr for Cusp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Cusp> {
        let t = s.trim();
        if matches!(t.to_ascii_lowercase().as_str(), "inf" | "infinity" | "oo" | "∞") {
            return Ok(Cusp::Infinity);
        }
        let bad = || Error::Parse(format!("bad cusp '{s}'"));
        let (x, y) = match t.split_once('/') {
            Some((x, y)) => (x.trim().parse::<Int>().map_err(|_| bad())?, y.trim().parse::<Int>().map_err(|_| bad())?),
            None => (t.parse::<Int>().map_err(|_| bad())?, Int::one()),
        };
        Cusp::new(x, y).map_err(|_| bad())
    }
}

/// A 2×2 matrix over Q with positive determinant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, SerializeDisplay, DeserializeFromStr)]
pub struct Mat2 {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
}

impl Mat2 {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> Result<Mat2> {
        let m = Mat2 { a, b, c, d };
        if !m.det().is_positive() {
            return Err(Error::InvalidArgument(format!("{m} has non-positive determinant")));
        }
        Ok(m)
    }

    /// Integer matrix; the caller guarantees a positive determinant.
    pub fn ints(a: Int, b: Int, c: Int, d: Int) -> Mat2 {
        let m = Mat2 { a: rat_int(&a), b: rat_int(&b), c: rat_int(&c), d: rat_int(&d) };
        debug_assert!(m.det().is_positive(), "{m}");
        m
    }

    pub fn small(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
        Mat2::ints(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Mat2 {
        Mat2::small(1, 0, 0, 1)
    }

    pub fn diag(p: Rat, q: Rat) -> Mat2 {
        Mat2 { a: p, b: Rat::zero(), c: Rat::zero(), d: q }
    }

    pub fn det(&self) -> Rat {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn inverse(&self) -> Mat2 {
        let det = self.det();
        Mat2 {
            a: &self.d / &det,
            b: -&self.b / &det,
            c: -&self.c / &det,
            d: &self.a / &det,
        }
    }

    pub fn scale(&self, s: &Rat) -> Mat2 {
        Mat2 { a: &self.a * s, b: &self.b * s, c: &self.c * s, d: &self.d * s }
    }

    pub fn neg(&self) -> Mat2 {
        self.scale(&-Rat::one())
    }

    pub fn is_integral(&self) -> bool {
        [&self.a, &self.b, &self.c, &self.d].iter().all(|q| q.is_integer())
    }

    /// Entries as integers, if integral.
    pub fn int_entries(&self) -> Option<[Int; 4]> {
        self.is_integral().then(|| {
            [self.a.to_integer(), self.b.to_integer(), self.c.to_integer(), self.d.to_integer()]
        })
    }

    /// The unique positive rational multiple with coprime integer entries.
    pub fn primitive(&self) -> [Int; 4] {
        let entries = [&self.a, &self.b, &self.c, &self.d];
        let den = entries.iter().fold(Int::one(), |l, q| l.lcm(q.denom()));
        let ints: Vec<Int> = entries.iter().map(|q| (*q * rat_int(&den)).to_integer()).collect();
        let content = ints.iter().fold(Int::zero(), |g, v| gcd(&g, v));
        [&ints[0] / &content, &ints[1] / &content, &ints[2] / &content, &ints[3] / &content]
    }

    /// Möbius action on P¹(Q).
    pub fn act(&self, z: &Cusp) -> Cusp {
        match z {
            Cusp::Infinity => Cusp::from_quotient(self.a.clone(), self.c.clone()),
            Cusp::Finite { x, y } => {
                let (x, y) = (rat_int(x), rat_int(y));
                Cusp::from_quotient(&self.a * &x + &self.b * &y, &self.c * &x + &self.d * &y)
            }
        }
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, o: Mat2) -> Mat2 {
        &self * &o
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for Mat2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mat2> {
        let bad = || Error::Parse(format!("bad matrix '{s}', expected [[a,b],[c,d]]"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix("[[")
            .and_then(|t| t.strip_suffix("]]"))
            .ok_or_else(bad)?;
        let (row1, row2) = inner.split_once("],[").ok_or_else(bad)?;
        let mut vals = Vec::with_capacity(4);
        for row in [row1, row2] {
            let (p, q) = row.split_once(',').ok_or_else(bad)?;
            for tok in [p, q] {
                vals.push(tok.parse::<Rat>().map_err(|_| bad())?);
            }
        }
        let mut it = vals.into_iter();
        let (a, b, c, d) = (it.next().unwrap(), it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
        Mat2::new(a, b, c, d)
    }
}
