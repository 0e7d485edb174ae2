//! Classes pulled back along cyclic covering morphisms.
//!
//! A weight vector `d = (d_1, …, d_n)` with `p | Σ d_i` sends a pointed line to
//! the `μ_p`-cover `y^p = Π (x - x_i)^{d_i}`. Everything here is a closed
//! formula in the residues `⟨·⟩_p` and the gcds `gcd(d(I), p)`, with the
//! convention `gcd(0, p) = p` for unramified markings.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::eigenforms::residue;
use crate::error::ensure;
use crate::exactlin::{rat, ratio, Rational};
use crate::moduli::{binomial, FullDivisor, Subset, SymDivisor, MAX_FULL_N};
use crate::{Error, Result};

/// Branching data of a cyclic covering morphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightData {
    d: Vec<i64>,
    p: i64,
}

impl WeightData {
    pub fn new(d: Vec<i64>, p: i64) -> Result<Self> {
        ensure!(p >= 2, "p must be at least 2 (got {p})");
        ensure!(d.len() >= 4, "need at least 4 markings (got {})", d.len());
        ensure!(d.iter().all(|&x| x >= 0), "weights must be nonnegative");
        let total: i64 = d.iter().sum();
        ensure!(total % p == 0, "p must divide the total weight {total} (p = {p})");
        Ok(Self { d, p })
    }

    /// The unweighted morphism `f_{n,p}`: all weights 1, `p | n`.
    pub fn unweighted(n: usize, p: i64) -> Result<Self> {
        ensure!(p >= 2 && n as i64 % p == 0, "p must divide n (n = {n}, p = {p})");
        Self::new(vec![1; n], p)
    }

    pub fn weights(&self) -> &[i64] {
        &self.d
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.d.len()
    }

    fn ramification(&self, d: impl Iterator<Item = i64>) -> i64 {
        d.map(|x| self.p - gcd_p(x, self.p)).sum()
    }

    fn total(&self) -> i64 {
        self.d.iter().sum()
    }
}

/// `gcd(a, p)` with `gcd(0, p) = p`.
pub fn gcd_p(a: i64, p: i64) -> i64 {
    a.gcd(&p)
}

fn check_divides(n: usize, p: i64) -> Result<()> {
    ensure!(p >= 2, "p must be at least 2 (got {p})");
    ensure!(n >= 4, "n must be at least 4 (got {n})");
    ensure!(n as i64 % p == 0, "p must divide n (n = {n}, p = {p})");
    Ok(())
}

fn sym_from_fn(n: usize, psi: Rational, delta: impl Fn(i64) -> Rational) -> SymDivisor {
    let coefs = (2..=n / 2).map(|k| delta(k as i64)).collect();
    SymDivisor::new(n, psi, coefs).expect("n validated by caller")
}

/// `λ_{n,p} = (p/12)((1 - 1/p²)ψ - Σ_k (1 - gcd(k,p)²/p²)Δ_k)`.
pub fn hodge_class(n: usize, p: i64) -> Result<SymDivisor> {
    check_divides(n, p)?;
    let psi = ratio(p * p - 1, 12 * p);
    Ok(sym_from_fn(n, psi, |k| {
        let g = gcd_p(k, p);
        -ratio(p * p - g * g, 12 * p)
    }))
}

/// Pullbacks of `δ_irr` and `δ_red` along `f_{n,p}`.
pub fn pullback_boundary(n: usize, p: i64) -> Result<(SymDivisor, SymDivisor)> {
    check_divides(n, p)?;
    let irr = sym_from_fn(n, Rational::zero(), |k| {
        let g = gcd_p(k, p);
        if g > 1 { ratio(g * g, p) } else { Rational::zero() }
    });
    let red = sym_from_fn(n, Rational::zero(), |k| {
        if gcd_p(k, p) == 1 { ratio(1, p) } else { Rational::zero() }
    });
    Ok((irr, red))
}

/// `cλ·λ + c_irr·δ_irr + c_red·δ_red`, pulled back along `f_{n,p}`.
pub fn pullback_combo(
    n: usize,
    p: i64,
    c_lambda: &Rational,
    c_irr: &Rational,
    c_red: &Rational,
) -> Result<SymDivisor> {
    let lambda = hodge_class(n, p)?;
    let (irr, red) = pullback_boundary(n, p)?;
    Ok(&(&(&lambda * c_lambda) + &(&irr * c_irr)) + &(&red * c_red))
}

/// The nef classes `f_{n,5}^*(50λ_{n,5}(j) - δ_irr)` for `j = 1, 2`.
pub fn p5_class(n: usize, j: i64) -> Result<SymDivisor> {
    check_divides(n, 5)?;
    ensure!(j == 1 || j == 2, "j must be 1 or 2 (got {j})");
    // Coefficients on ψ and on Δ_k for k ≡ ±1, ±2, 0 mod 5.
    let (psi, c1, c2, c0) = if j == 1 { (4, 4, 6, 5) } else { (6, 6, 4, 5) };
    Ok(sym_from_fn(n, rat(psi), |k| match k % 5 {
        1 | 4 => rat(-c1),
        2 | 3 => rat(-c2),
        _ => rat(-c0),
    }))
}

/// `ψ - Σ Δ_k - ½ Σ_{p | k} Δ_k`.
pub fn log_canonical_class(n: usize, p: i64) -> Result<SymDivisor> {
    check_divides(n, p)?;
    Ok(sym_from_fn(n, Rational::one(), |k| {
        if k % p == 0 { ratio(-3, 2) } else { rat(-1) }
    }))
}

/// Iterates the canonical boundary sides of `M_{0,n}`: subsets of
/// `{1, …, n-1}` with between 2 and `n-2` elements.
fn boundary_sides(n: usize) -> impl Iterator<Item = Subset> {
    (1u64..1 << (n - 1)).map(Subset).filter(move |s| (2..=n - 2).contains(&s.len()))
}

/// Whether the node over `Δ_{I,J}` stays a separating node of the stable cover.
/// With `gcd(d(I), p) = 1` the cover of each side is connected; a side whose
/// cover is rational meets the rest in one point and is contracted.
/// `ram` is `Σ_{i∈I} (p - gcd(d_i, p))`.
fn separating(p: i64, weight: i64, ram: i64, total_ram: i64) -> bool {
    gcd_p(weight, p) == 1 && ram != p - 1 && total_ram - ram != p - 1
}

fn block_weight(w: &WeightData, s: Subset) -> i64 {
    s.markings().map(|i| w.d[i - 1]).sum()
}

fn check_full(w: &WeightData) -> Result<()> {
    ensure!(w.n() <= MAX_FULL_N, "non-symmetric classes are limited to n <= {MAX_FULL_N}");
    Ok(())
}

/// Pullbacks of `λ`, `δ_irr`, `δ_red` along a weighted cyclic covering morphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedPullbacks {
    pub lambda: FullDivisor,
    pub delta_irr: FullDivisor,
    pub delta_red: FullDivisor,
}

/// `δ_red` only counts `Δ_{I,J}` with `gcd(d(I), p) = 1` where neither side
/// covers to a rational tail; for all weights 1 this is every such divisor.
pub fn weighted_pullbacks(w: &WeightData) -> Result<WeightedPullbacks> {
    check_full(w)?;
    let (n, p) = (w.n(), w.p);
    let mut lambda = FullDivisor::zero(n)?;
    let mut irr = FullDivisor::zero(n)?;
    let mut red = FullDivisor::zero(n)?;
    for (i, &di) in w.d.iter().enumerate() {
        let g = gcd_p(di, p);
        lambda.add_psi(i + 1, &ratio(p * p - g * g, 12 * p))?;
    }
    let total_ram = w.ramification(w.d.iter().copied());
    for s in boundary_sides(n) {
        let x = block_weight(w, s);
        let g = gcd_p(x, p);
        lambda.add_delta(s, &-ratio(p * p - g * g, 12 * p))?;
        if g > 1 {
            irr.add_delta(s, &ratio(g * g, p))?;
        } else if separating(p, x, w.ramification(s.markings().map(|i| w.d[i - 1])), total_ram) {
            red.add_delta(s, &ratio(1, p))?;
        }
    }
    Ok(WeightedPullbacks { lambda, delta_irr: irr, delta_red: red })
}

fn check_character(p: i64, j: i64) -> Result<()> {
    ensure!((1..p).contains(&j), "character j must satisfy 1 <= j <= p-1 (got j = {j}, p = {p})");
    Ok(())
}

/// First Chern class of the eigenbundle `E_j`:
/// `(1/2p²)[Σ ⟨jd_i⟩⟨-jd_i⟩ψ_i - Σ ⟨jd(I)⟩⟨jd(J)⟩Δ_{I,J}]`.
pub fn eigen_det_class(w: &WeightData, j: i64) -> Result<FullDivisor> {
    check_character(w.p, j)?;
    check_full(w)?;
    let (n, p) = (w.n(), w.p);
    let total = w.total();
    let mut out = FullDivisor::zero(n)?;
    for (i, &di) in w.d.iter().enumerate() {
        let c = residue(j * di, p) * residue(-j * di, p);
        out.add_psi(i + 1, &ratio(c, 2 * p * p))?;
    }
    for s in boundary_sides(n) {
        let di = block_weight(w, s);
        let c = residue(j * di, p) * residue(j * (total - di), p);
        if c != 0 {
            out.add_delta(s, &ratio(-c, 2 * p * p))?;
        }
    }
    Ok(out)
}

/// Level-one `sl_p` conformal blocks divisor with weights `ω_{d_i}`, which
/// equals `p · c_1(E_1)`.
pub fn conformal_blocks_class(w: &WeightData) -> Result<FullDivisor> {
    Ok(eigen_det_class(w, 1)?.scale(&rat(w.p)))
}

/// Average of `f(d(I))` over all `k`-subsets `I` of the markings.
///
/// Markings are grouped by weight so the cost depends on the number of
/// distinct weights rather than on `n choose k`.
fn subset_average(w: &WeightData, k: usize, f: &dyn Fn(i64, i64) -> Rational) -> Rational {
    let mut groups: Vec<(i64, usize)> = Vec::new();
    let mut sorted = w.d.clone();
    sorted.sort_unstable();
    for x in sorted {
        match groups.last_mut() {
            Some((v, m)) if *v == x => *m += 1,
            _ => groups.push((x, 1)),
        }
    }
    fn go(
        groups: &[(i64, usize)],
        k: usize,
        (weight, ram): (i64, i64),
        count: BigInt,
        p: i64,
        f: &dyn Fn(i64, i64) -> Rational,
        acc: &mut Rational,
    ) {
        let Some(((v, m), rest)) = groups.split_first() else {
            if k == 0 {
                *acc += Rational::from_integer(count) * f(weight, ram);
            }
            return;
        };
        let remaining: usize = rest.iter().map(|g| g.1).sum();
        for c in 0..=(*m).min(k) {
            if k - c > remaining {
                continue;
            }
            let c64 = c as i64;
            let next = (weight + c64 * v, ram + c64 * (p - gcd_p(*v, p)));
            go(rest, k - c, next, &count * binomial(*m, c), p, f, acc);
        }
    }
    let mut acc = Rational::zero();
    go(&groups, k, (0, 0), BigInt::one(), w.p, f, &mut acc);
    acc / Rational::from_integer(binomial(w.n(), k))
}

fn symmetric_class(
    w: &WeightData,
    psi: &dyn Fn(i64) -> Rational,
    delta: &dyn Fn(i64, i64) -> Rational,
) -> SymDivisor {
    let n = w.n();
    let psi = w.d.iter().fold(Rational::zero(), |acc, &x| acc + psi(x)) / rat(n as i64);
    let coefs = (2..=n / 2).map(|k| subset_average(w, k, delta)).collect();
    SymDivisor::new(n, psi, coefs).expect("weight data has n >= 4")
}

/// `S_n`-averages of the weighted pullbacks of `λ`, `δ_irr`, `δ_red`, without
/// building the non-symmetric classes.
pub fn symmetric_weighted_pullbacks(w: &WeightData) -> (SymDivisor, SymDivisor, SymDivisor) {
    let p = w.p;
    let lambda = symmetric_class(
        w,
        &|x| {
            let g = gcd_p(x, p);
            ratio(p * p - g * g, 12 * p)
        },
        &|x, _| {
            let g = gcd_p(x, p);
            -ratio(p * p - g * g, 12 * p)
        },
    );
    let irr = symmetric_class(w, &|_| Rational::zero(), &|x, _| {
        let g = gcd_p(x, p);
        if g > 1 { ratio(g * g, p) } else { Rational::zero() }
    });
    let total_ram = w.ramification(w.d.iter().copied());
    let red = symmetric_class(w, &|_| Rational::zero(), &|x, ram| {
        if separating(p, x, ram, total_ram) { ratio(1, p) } else { Rational::zero() }
    });
    (lambda, irr, red)
}

/// `S_n`-average of [`eigen_det_class`].
pub fn symmetric_eigen_det(w: &WeightData, j: i64) -> Result<SymDivisor> {
    check_character(w.p, j)?;
    let (p, total) = (w.p, w.total());
    Ok(symmetric_class(
        w,
        &|x| ratio(residue(j * x, p) * residue(-j * x, p), 2 * p * p),
        &|x, _| ratio(-residue(j * x, p) * residue(j * (total - x), p), 2 * p * p),
    ))
}

/// `λ_{n,p}(j)`: the `j`-th eigenbundle determinant for all weights 1.
pub fn eigen_class(n: usize, p: i64, j: i64) -> Result<SymDivisor> {
    symmetric_eigen_det(&WeightData::unweighted(n, p)?, j)
}

/// Arithmetic genus of the cover, by Riemann–Hurwitz. Negative values occur
/// for disconnected covers.
pub fn genus(w: &WeightData) -> Result<i64> {
    let p = w.p;
    let twice = 2 - 2 * p + w.d.iter().map(|&x| p - gcd_p(x, p)).sum::<i64>();
    if twice % 2 != 0 {
        return Err(Error::Invariant(format!("odd Riemann-Hurwitz count {twice} for weights {:?}", w.d)));
    }
    Ok(twice / 2)
}

/// Genus of the curve over the exceptional component where markings `i`, `j`
/// with weights `d_i`, `d_j` collide: `2g - 2 = p - q - p/r_i - p/r_j`.
pub fn exceptional_genus(di: i64, dj: i64, p: i64) -> Result<i64> {
    ensure!(p >= 2, "p must be at least 2 (got {p})");
    let q = gcd_p(di + dj, p);
    let twice = p - q - gcd_p(di, p) - gcd_p(dj, p);
    if twice % 2 != 0 {
        return Err(Error::Invariant(format!("2g - 2 = {twice} is odd for ({di}, {dj}, {p})")));
    }
    Ok(twice / 2 + 1)
}
