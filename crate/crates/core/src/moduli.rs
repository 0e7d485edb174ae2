//! Divisor and curve classes on `M_{0,n}` and on its quotient by `S_n`.
//!
//! Symmetric classes live on the basis `ψ, Δ_2, …, Δ_{⌊n/2⌋}`, with the relation
//! `(n-1)ψ = Σ k(n-k)Δ_k` making `ψ` redundant. Non-symmetric classes carry one
//! coefficient per `ψ_i` and per boundary divisor `Δ_{I,J}`, keyed by the side
//! not containing the last marking.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Value};

use crate::error::ensure;
use crate::exactlin::{dot, rat, QVector, Rational};
use crate::{Error, Result};

fn check_n(n: usize) -> Result<()> {
    ensure!(n >= 4, "n must be at least 4 (got {n})");
    Ok(())
}

/// A class on the symmetric quotient.
#[derive(Debug, Clone)]
pub struct SymDivisor {
    n: usize,
    psi: Rational,
    /// Coefficient of `Δ_k` at index `k - 2`.
    delta: Vec<Rational>,
}

impl SymDivisor {
    pub fn new(n: usize, psi: Rational, delta: Vec<Rational>) -> Result<Self> {
        check_n(n)?;
        if delta.len() != n / 2 - 1 {
            return Err(Error::DimensionMismatch { expected: n / 2 - 1, found: delta.len() });
        }
        Ok(Self { n, psi, delta })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, Rational::zero(), vec![Rational::zero(); n / 2 - 1])
    }

    /// `ψ = Σ ψ_i`.
    pub fn psi(n: usize) -> Result<Self> {
        let mut d = Self::zero(n)?;
        d.psi = Rational::one();
        Ok(d)
    }

    /// The class `Δ_k`, `2 ≤ k ≤ ⌊n/2⌋`.
    pub fn boundary(n: usize, k: usize) -> Result<Self> {
        let mut d = Self::zero(n)?;
        ensure!((2..=n / 2).contains(&k), "boundary index must satisfy 2 <= k <= {} (got {k})", n / 2);
        d.delta[k - 2] = Rational::one();
        Ok(d)
    }

    /// Pure boundary class from coordinates on `Δ_2, …, Δ_{⌊n/2⌋}`.
    pub fn from_deltas(n: usize, delta: QVector) -> Result<Self> {
        Self::new(n, Rational::zero(), delta)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn psi_coefficient(&self) -> &Rational {
        &self.psi
    }

    pub fn delta_coefficient(&self, k: usize) -> Rational {
        if (2..=self.n / 2).contains(&k) {
            self.delta[k - 2].clone()
        } else {
            Rational::zero()
        }
    }

    pub fn deltas(&self) -> &[Rational] {
        &self.delta
    }

    /// Coordinates of the class on `Δ_2, …, Δ_{⌊n/2⌋}` after eliminating `ψ`.
    pub fn delta_vector(&self) -> QVector {
        psi_expand(self).delta
    }

    pub fn pair(&self, f: &SymFCurve) -> Result<Rational> {
        sym_pairing(self, f)
    }

    /// Scalar `c` with `self = c · other`, see [`proportional`].
    pub fn ratio_to(&self, other: &SymDivisor) -> Result<Option<Rational>> {
        proportional(self, other)
    }

    fn same_n(&self, other: &SymDivisor) {
        assert_eq!(self.n, other.n, "divisors on different moduli spaces");
    }

    pub fn to_json(&self) -> Value {
        let delta: Map<String, Value> = self
            .delta
            .iter()
            .enumerate()
            .map(|(i, c)| ((i + 2).to_string(), json!(c.to_string())))
            .collect();
        json!({ "n": self.n, "psi": self.psi.to_string(), "delta": delta })
    }

    /// Parses the divisor literal grammar: `c*psi` and `c*D<k>` terms joined by
    /// `+` or `-`, for instance `2*psi - 2*D2 - 3*D3`. A lone `0` is the zero class.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut d = Self::zero(n)?;
        let cleaned: String = text.replace('−', "-").chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty divisor".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = cleaned.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'*' {
                terms.push(&cleaned[start..i]);
                start = i;
            }
        }
        terms.push(&cleaned[start..]);

        for term in terms {
            let (sign, body) = match term.as_bytes().first() {
                Some(b'-') => (-Rational::one(), &term[1..]),
                Some(b'+') => (Rational::one(), &term[1..]),
                _ => (Rational::one(), term),
            };
            let (coef, symbol) = match body.rsplit_once('*') {
                Some((c, s)) => (parse_rational(c)?, s),
                None if body.starts_with(['p', 'D', 'd']) => (Rational::one(), body),
                None => {
                    let c = parse_rational(body)?;
                    if !c.is_zero() {
                        return Err(Error::Parse(format!("constant term `{term}` is not a divisor")));
                    }
                    continue;
                }
            };
            let coef = sign * coef;
            if symbol == "psi" || symbol == "ψ" {
                d.psi += coef;
            } else if let Some(k) = symbol.strip_prefix('D').or_else(|| symbol.strip_prefix('d')) {
                let k: usize = k.parse().map_err(|_| Error::Parse(format!("bad boundary symbol `{symbol}`")))?;
                if !(2..=n / 2).contains(&k) {
                    return Err(Error::Parse(format!("D{k} is not a boundary class for n = {n}")));
                }
                d.delta[k - 2] += coef;
            } else {
                return Err(Error::Parse(format!("unknown symbol `{symbol}`")));
            }
        }
        Ok(d)
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational> {
    s.parse::<Rational>().map_err(|_| Error::Parse(format!("bad rational `{s}`")))
}

/// Two classes are equal when their pure boundary expansions agree.
impl PartialEq for SymDivisor {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.delta_vector() == other.delta_vector()
    }
}

impl Eq for SymDivisor {}

impl fmt::Display for SymDivisor {
    /// Literal grammar, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = std::iter::once((&self.psi, "psi".to_string()))
            .chain(self.delta.iter().enumerate().map(|(i, c)| (c, format!("D{}", i + 2))))
            .filter(|(c, _)| !c.is_zero());
        let mut first = true;
        for (c, sym) in terms {
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{c}*{sym}")?,
                (true, true) => write!(f, "-{}*{sym}", c.abs())?,
                (false, false) => write!(f, " + {c}*{sym}")?,
                (false, true) => write!(f, " - {}*{sym}", c.abs())?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Add for &SymDivisor {
    type Output = SymDivisor;
    fn add(self, rhs: &SymDivisor) -> SymDivisor {
        self.same_n(rhs);
        SymDivisor {
            n: self.n,
            psi: &self.psi + &rhs.psi,
            delta: self.delta.iter().zip(&rhs.delta).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &SymDivisor {
    type Output = SymDivisor;
    fn sub(self, rhs: &SymDivisor) -> SymDivisor {
        self + &(-rhs)
    }
}

impl Neg for &SymDivisor {
    type Output = SymDivisor;
    fn neg(self) -> SymDivisor {
        self * &(-Rational::one())
    }
}

impl Mul<&Rational> for &SymDivisor {
    type Output = SymDivisor;
    fn mul(self, c: &Rational) -> SymDivisor {
        SymDivisor { n: self.n, psi: &self.psi * c, delta: self.delta.iter().map(|a| a * c).collect() }
    }
}

macro_rules! forward_binop {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_binop!(SymDivisor, Add, add);
forward_binop!(SymDivisor, Sub, sub);

impl Mul<Rational> for SymDivisor {
    type Output = SymDivisor;
    fn mul(self, c: Rational) -> SymDivisor {
        &self * &c
    }
}

/// Rewrites `ψ` in the boundary basis via `(n-1)ψ = Σ k(n-k)Δ_k`.
pub fn psi_expand(d: &SymDivisor) -> SymDivisor {
    let n = d.n;
    let delta = d
        .delta
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let k = i + 2;
            c + &d.psi * Rational::new(BigInt::from(k * (n - k)), BigInt::from(n - 1))
        })
        .collect();
    SymDivisor { n, psi: Rational::zero(), delta }
}

/// An F-curve on the symmetric quotient, `F_{a,b,c,d}` with `a ≥ b ≥ c ≥ d ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymFCurve {
    parts: [usize; 4],
}

impl SymFCurve {
    pub fn new(a: usize, b: usize, c: usize, d: usize) -> Result<Self> {
        let mut parts = [a, b, c, d];
        ensure!(parts.iter().all(|&x| x >= 1), "F-curve parts must be positive: {parts:?}");
        parts.sort_unstable_by(|x, y| y.cmp(x));
        Ok(Self { parts })
    }

    pub fn parts(&self) -> [usize; 4] {
        self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Class in the boundary basis `Δ_2, …, Δ_{⌊n/2⌋}`: each degree is the
    /// pairing of the F-curve with the full `S_n`-orbit sum `Δ_k`.
    pub fn class_vector(&self) -> Vec<i64> {
        let n = self.n();
        let mut v = vec![0i64; n / 2 - 1];
        let side = |s: usize| s.min(n - s);
        let [a, b, c, d] = self.parts;
        for (x, y) in [(a, b), (a, c), (a, d)] {
            v[side(x + y) - 2] += 1;
        }
        for part in self.parts {
            if (2..=n - 2).contains(&part) {
                v[side(part) - 2] -= 1;
            }
        }
        v
    }

    /// Number of unit parts, which is the degree of `ψ` on the curve.
    pub fn unit_parts(&self) -> usize {
        self.parts.iter().filter(|&&x| x == 1).count()
    }
}

impl fmt::Display for SymFCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.parts;
        write!(f, "F_{{{a},{b},{c},{d}}}")
    }
}

/// All F-curves of `M_{0,n}/S_n`, in descending lexicographic order of parts.
pub fn enumerate_sym_fcurves(n: usize) -> Result<Vec<SymFCurve>> {
    check_n(n)?;
    let mut out = Vec::new();
    for a in (1..=n - 3).rev() {
        for b in (1..=a.min(n - a - 2)).rev() {
            for c in (1..=b.min(n - a - b - 1)).rev() {
                let d = n - a - b - c;
                if d >= 1 && d <= c {
                    out.push(SymFCurve { parts: [a, b, c, d] });
                }
            }
        }
    }
    Ok(out)
}

pub fn sym_pairing(d: &SymDivisor, f: &SymFCurve) -> Result<Rational> {
    if d.n != f.n() {
        return Err(Error::DimensionMismatch { expected: d.n, found: f.n() });
    }
    let v: QVector = f.class_vector().into_iter().map(rat).collect();
    Ok(dot(&d.delta_vector(), &v))
}

/// Degree on the test curve `T_k` sweeping `Δ_k`: `Δ_k · T_k = 2 - k` and
/// `Δ_{k-1} · T_k = k`.
pub fn tk_pairing(d: &SymDivisor, k: usize) -> Result<Rational> {
    ensure!((3..=d.n / 2).contains(&k), "T_k needs 3 <= k <= {} (got k = {k})", d.n / 2);
    let e = d.delta_vector();
    Ok(&e[k - 2] * rat(2 - k as i64) + &e[k - 3] * rat(k as i64))
}

/// The positive scalar `c` with `d1 = c · d2`, if the classes span the same ray.
pub fn proportional(d1: &SymDivisor, d2: &SymDivisor) -> Result<Option<Rational>> {
    if d1.n != d2.n {
        return Err(Error::DimensionMismatch { expected: d1.n, found: d2.n });
    }
    let (a, b) = (d1.delta_vector(), d2.delta_vector());
    let Some(i) = b.iter().position(|x| !x.is_zero()) else {
        return Ok(a.iter().all(Zero::is_zero).then(Rational::one));
    };
    let c = &a[i] / &b[i];
    if !c.is_positive() {
        return Ok(None);
    }
    Ok(a.iter().zip(&b).all(|(x, y)| *x == &c * y).then_some(c))
}

/// A set of markings in `{1, …, n}`, bit `i - 1` for marking `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(pub u64);

impl Subset {
    pub fn from_markings(markings: &[usize]) -> Self {
        Subset(markings.iter().fold(0, |acc, &i| acc | 1 << (i - 1)))
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 >> (i - 1) & 1 == 1
    }

    pub fn markings(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=64).filter(|&i| self.contains(i))
    }

    pub fn complement(&self, n: usize) -> Subset {
        Subset(!self.0 & full_mask(n))
    }

    /// The side of `{I, complement}` not containing marking `n`.
    pub fn canonical(&self, n: usize) -> Subset {
        if self.contains(n) {
            self.complement(n)
        } else {
            *self
        }
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.markings().map(|i| i.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// A class on `M_{0,n}` in the generators `ψ_i` and `Δ_{I,J}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullDivisor {
    n: usize,
    psi: Vec<Rational>,
    delta: BTreeMap<Subset, Rational>,
}

pub const MAX_FULL_N: usize = 30;

impl FullDivisor {
    pub fn zero(n: usize) -> Result<Self> {
        check_n(n)?;
        ensure!(n <= MAX_FULL_N, "non-symmetric classes are limited to n <= {MAX_FULL_N}");
        Ok(Self { n, psi: vec![Rational::zero(); n], delta: BTreeMap::new() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn psi_coefficients(&self) -> &[Rational] {
        &self.psi
    }

    pub fn psi_coefficient(&self, i: usize) -> &Rational {
        &self.psi[i - 1]
    }

    /// Coefficient of `Δ_{I,J}` where `I` may be given from either side.
    pub fn delta_coefficient(&self, i: Subset) -> Rational {
        self.delta.get(&i.canonical(self.n)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero boundary coefficients, keyed by canonical side.
    pub fn deltas(&self) -> &BTreeMap<Subset, Rational> {
        &self.delta
    }

    pub fn add_psi(&mut self, i: usize, c: &Rational) -> Result<()> {
        ensure!((1..=self.n).contains(&i), "marking {i} out of range 1..={}", self.n);
        self.psi[i - 1] += c;
        Ok(())
    }

    pub fn add_delta(&mut self, i: Subset, c: &Rational) -> Result<()> {
        ensure!(i.0 & !full_mask(self.n) == 0, "subset {i} has markings beyond {}", self.n);
        let key = i.canonical(self.n);
        ensure!((2..=self.n - 2).contains(&key.len()), "boundary side {i} must have 2..=n-2 markings");
        let entry = self.delta.entry(key).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.delta.remove(&key);
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> FullDivisor {
        let mut out = FullDivisor::zero(self.n).unwrap();
        if c.is_zero() {
            return out;
        }
        out.psi = self.psi.iter().map(|x| x * c).collect();
        out.delta = self.delta.iter().map(|(k, v)| (*k, v * c)).collect();
        out
    }

    pub fn is_zero(&self) -> bool {
        self.delta.is_empty() && self.psi.iter().all(Zero::is_zero)
    }

    pub fn pair(&self, f: &FullFCurve) -> Result<Rational> {
        full_pairing(self, f)
    }

    /// `{"n":6,"psi":["0",...],"delta":{"1,2":"1/2",...}}`.
    pub fn to_json(&self) -> Value {
        let delta: Map<String, Value> =
            self.delta.iter().map(|(k, v)| (k.to_string(), json!(v.to_string()))).collect();
        let psi: Vec<Value> = self.psi.iter().map(|c| json!(c.to_string())).collect();
        json!({ "n": self.n, "psi": psi, "delta": delta })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let n = v["n"].as_u64().ok_or_else(|| Error::Parse("missing integer field `n`".into()))? as usize;
        let mut d = FullDivisor::zero(n)?;
        let as_rational = |x: &Value| -> Result<Rational> {
            match x {
                Value::String(s) => parse_rational(s),
                Value::Number(num) if num.is_i64() => Ok(rat(num.as_i64().unwrap())),
                _ => Err(Error::Parse(format!("expected a rational string, found {x}"))),
            }
        };
        if let Some(psi) = v.get("psi") {
            let psi = psi.as_array().ok_or_else(|| Error::Parse("`psi` must be an array".into()))?;
            if psi.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: psi.len() });
            }
            for (i, c) in psi.iter().enumerate() {
                d.add_psi(i + 1, &as_rational(c)?)?;
            }
        }
        if let Some(delta) = v.get("delta") {
            let delta = delta.as_object().ok_or_else(|| Error::Parse("`delta` must be an object".into()))?;
            for (key, c) in delta {
                let markings = key
                    .split(',')
                    .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad subset key `{key}`"))))
                    .collect::<Result<Vec<_>>>()?;
                ensure!(markings.iter().all(|&i| (1..=n).contains(&i)), "subset key `{key}` out of range");
                d.add_delta(Subset::from_markings(&markings), &as_rational(c)?)?;
            }
        }
        Ok(d)
    }
}

impl Add for &FullDivisor {
    type Output = FullDivisor;
    fn add(self, rhs: &FullDivisor) -> FullDivisor {
        assert_eq!(self.n, rhs.n, "divisors on different moduli spaces");
        let mut out = self.clone();
        for (a, b) in out.psi.iter_mut().zip(&rhs.psi) {
            *a += b;
        }
        for (k, v) in &rhs.delta {
            out.add_delta(*k, v).unwrap();
        }
        out
    }
}

impl Sub for &FullDivisor {
    type Output = FullDivisor;
    fn sub(self, rhs: &FullDivisor) -> FullDivisor {
        self + &rhs.scale(&-Rational::one())
    }
}

forward_binop!(FullDivisor, Add, add);
forward_binop!(FullDivisor, Sub, sub);

/// An F-curve on `M_{0,n}`: a partition of the markings into four blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FullFCurve {
    n: usize,
    blocks: [Subset; 4],
}

impl FullFCurve {
    pub fn new(n: usize, blocks: [&[usize]; 4]) -> Result<Self> {
        Self::from_subsets(n, blocks.map(Subset::from_markings))
    }

    pub fn from_subsets(n: usize, blocks: [Subset; 4]) -> Result<Self> {
        check_n(n)?;
        ensure!(blocks.iter().all(|b| !b.is_empty()), "F-curve blocks must be nonempty");
        let mut union = 0u64;
        for b in &blocks {
            ensure!(union & b.0 == 0, "F-curve blocks must be disjoint");
            union |= b.0;
        }
        ensure!(union == full_mask(n), "F-curve blocks must cover 1..={n}");
        Ok(Self { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> [Subset; 4] {
        self.blocks
    }

    pub fn sym_type(&self) -> SymFCurve {
        let [a, b, c, d] = self.blocks.map(|s| s.len());
        SymFCurve::new(a, b, c, d).unwrap()
    }
}

pub fn full_pairing(d: &FullDivisor, f: &FullFCurve) -> Result<Rational> {
    if d.n != f.n {
        return Err(Error::DimensionMismatch { expected: d.n, found: f.n });
    }
    let n = d.n;
    let [b0, b1, b2, b3] = f.blocks;
    let mut total = Rational::zero();
    for b in f.blocks {
        if b.len() == 1 {
            total += d.psi_coefficient(b.markings().next().unwrap());
        } else {
            total -= d.delta_coefficient(b);
        }
    }
    for other in [b1, b2, b3] {
        total += d.delta_coefficient(Subset(b0.0 | other.0).canonical(n));
    }
    Ok(total)
}

/// Every F-curve of `M_{0,n}` whose block sizes are the parts of `t`.
pub fn full_fcurves_of_type(t: &SymFCurve) -> Vec<FullFCurve> {
    let n = t.n();
    let parts = t.parts();
    let mut out = Vec::new();
    let mut blocks = [Subset(0); 4];
    fn go(
        n: usize,
        parts: &[usize; 4],
        idx: usize,
        used: u64,
        blocks: &mut [Subset; 4],
        out: &mut Vec<FullFCurve>,
    ) {
        if idx == 4 {
            out.push(FullFCurve { n, blocks: *blocks });
            return;
        }
        let free: Vec<usize> = (1..=n).filter(|&i| used >> (i - 1) & 1 == 0).collect();
        // Blocks of equal size are unordered: the next one takes the least free marking.
        let forced_min = idx > 0 && parts[idx] == parts[idx - 1];
        let mut choose = Vec::new();
        fn subsets(free: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
            if cur.len() == k {
                visit(cur);
                return;
            }
            for i in start..free.len() {
                cur.push(free[i]);
                subsets(free, k, i + 1, cur, visit);
                cur.pop();
            }
        }
        subsets(&free, parts[idx], 0, &mut Vec::new(), &mut |s: &[usize]| choose.push(Subset::from_markings(s)));
        for s in choose {
            if forced_min && blocks[idx - 1].0.trailing_zeros() > s.0.trailing_zeros() {
                continue;
            }
            blocks[idx] = s;
            go(n, parts, idx + 1, used | s.0, blocks, out);
        }
    }
    go(n, &parts, 0, 0, &mut blocks, &mut out);
    out
}

/// The `S_n`-average of a class, written on the symmetric basis.
pub fn symmetrize(d: &FullDivisor) -> SymDivisor {
    let n = d.n;
    let psi = d.psi.iter().fold(Rational::zero(), |acc, x| acc + x) / rat(n as i64);
    let mut sums = vec![Rational::zero(); n / 2 - 1];
    for (i, c) in &d.delta {
        let k = i.len().min(n - i.len());
        sums[k - 2] += c;
    }
    let delta = sums
        .into_iter()
        .enumerate()
        .map(|(idx, s)| s * orbit_weight(n, idx + 2))
        .collect();
    SymDivisor { n, psi, delta }
}

/// Reciprocal of the number of boundary divisors of type `k`.
pub fn orbit_weight(n: usize, k: usize) -> Rational {
    let count = binomial(n, k);
    if 2 * k == n {
        Rational::new(BigInt::from(2), count)
    } else {
        Rational::new(BigInt::one(), count)
    }
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
