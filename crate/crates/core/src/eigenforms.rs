//! Eigenspaces of holomorphic differentials on cyclic covers of the line.
//!
//! For the cover `y^p = x^a (x-1)^b` (three branch points) or
//! `y^p = x^a (x-1)^b (x-λ)^c` (four), the `μ_p`-action splits `H^0(ω)` into
//! weight spaces. The closed forms below give their dimensions; [`oracle_h0`]
//! recomputes them from orders of vanishing. Over an F-curve `F_{a,b,c,d}` the
//! eigenbundle `E_j` has the rank of the generic fibre and a degree read off
//! from the residues.

use num_integer::Integer;
use num_traits::Zero;

use crate::error::ensure;
use crate::exactlin::{ratio, Rational};
use crate::Result;

/// `⟨a⟩_p`, the representative of `a mod p` in `0..p`. Panics if `p <= 0`;
/// see [`try_residue`].
pub fn residue(a: i64, p: i64) -> i64 {
    assert!(p > 0, "residue modulus must be positive");
    a.rem_euclid(p)
}

pub fn try_residue(a: i64, p: i64) -> Result<i64> {
    ensure!(p >= 1, "modulus must be positive (got {p})");
    Ok(a.rem_euclid(p))
}

/// Weight-`j` forms when the residues at all branch points are known.
/// At most three nonzero residues reduce to the three-point count.
fn h0_from_residues(r: &[i64], p: i64) -> u32 {
    let nonzero: Vec<i64> = r.iter().copied().filter(|&x| x != 0).collect();
    match nonzero.len() {
        0..=2 => 0,
        3 => u32::from(nonzero.iter().sum::<i64>() == p),
        _ => match r.iter().sum::<i64>() / p {
            1 => 2,
            2 => 1,
            _ => 0,
        },
    }
}

/// Dimension of `H^0(ω)_j` for `y^p = x^a (x-1)^b`.
pub fn h0_weight_3pt(a: i64, b: i64, p: i64, j: i64) -> u32 {
    let (x, y) = (residue(a * j, p), residue(b * j, p));
    u32::from(x > 0 && y > 0 && x + y < p)
}

/// Dimension of `H^0(ω)_j` for `y^p = x^a (x-1)^b (x-λ)^c`.
pub fn h0_weight_4pt(a: i64, b: i64, c: i64, p: i64, j: i64) -> u32 {
    let r = [a, b, c, -(a + b + c)].map(|w| residue(w * j, p));
    h0_from_residues(&r, p)
}

/// Rank and degree of the eigenbundle `E_j` over the F-curve `F_{a,b,c,d}`.
pub fn eigen_rank_degree_fcurve(a: i64, b: i64, c: i64, d: i64, p: i64, j: i64) -> Result<(u32, Rational)> {
    ensure!(p >= 2, "p must be at least 2 (got {p})");
    ensure!((0..p).contains(&j), "character j must satisfy 0 <= j < p (got {j})");
    ensure!((a + b + c + d) % p == 0, "p = {p} must divide a+b+c+d = {}", a + b + c + d);
    let r = [a, b, c, d].map(|w| residue(w * j, p));
    let rank = h0_from_residues(&r, p);
    let degree = if r.iter().all(|&x| x != 0) && r.iter().sum::<i64>() == 2 * p {
        let least = r.iter().flat_map(|&x| [x, p - x]).min().unwrap();
        ratio(least, p)
    } else {
        Rational::zero()
    };
    Ok((rank, degree))
}

/// Arithmetic genus of the cover branched with the given weights (the last one
/// included), by Riemann–Hurwitz.
pub fn cover_genus(weights: &[i64], p: i64) -> i64 {
    let ram: i64 = weights.iter().map(|&w| p - w.gcd(&p)).sum();
    (2 - 2 * p + ram) / 2
}

const PRIME: u64 = (1 << 61) - 1;
const LAMBDA: u64 = 3;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

/// Coefficients of `x^α (x-1)^β (x-λ)^γ` modulo the prime, constant term first.
fn product_poly(alpha: usize, beta: usize, gamma: usize) -> Vec<u64> {
    let mut poly = vec![0u64; alpha + 1];
    poly[alpha] = 1;
    let times_linear = |poly: &mut Vec<u64>, root: u64| {
        let neg = (PRIME - root % PRIME) % PRIME;
        let mut next = vec![0u64; poly.len() + 1];
        for (i, &c) in poly.iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % PRIME;
            next[i] = (next[i] + mulmod(c, neg)) % PRIME;
        }
        *poly = next;
    };
    for _ in 0..beta {
        times_linear(&mut poly, 1);
    }
    for _ in 0..gamma {
        times_linear(&mut poly, LAMBDA);
    }
    poly
}

fn inverse(a: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a, PRIME - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, base);
        }
        base = mulmod(base, base);
        e >>= 1;
    }
    acc
}

/// Dimension of `H^0(ω)_j` counted directly: the span of the forms
/// `y^j dx / (x^k (x-1)^l (x-λ)^m)`, `0 <= k, l, m <= p`, that have
/// nonnegative order at every point over `0, 1, λ, ∞`.
///
/// `weights` lists the branch weights over the finite points, two (points
/// `0, 1`) or three (`0, 1, λ`); the weight over `∞` is implied.
pub fn oracle_h0(weights: &[i64], p: i64, j: i64) -> Result<u32> {
    ensure!(p >= 2, "p must be at least 2 (got {p})");
    ensure!(weights.len() == 2 || weights.len() == 3, "need 2 or 3 finite branch weights");
    let w: Vec<i64> = weights.iter().map(|&x| residue(x, p)).collect();
    let j = residue(j, p);
    let s: i64 = w.iter().sum();
    let g_inf = s.gcd(&p);
    let pu = p as usize;
    let third_max = if w.len() == 3 { pu } else { 0 };

    // Largest pole order allowed over each finite point: the order of the form at
    // a point with ramification p/g is (j·w + p - g - e·p)/g.
    let caps: Vec<usize> = w
        .iter()
        .map(|&wi| (((j * wi + p - wi.gcd(&p)) / p) as usize).min(pu))
        .collect();

    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    for k in 0..=pu {
        for l in 0..=pu {
            for m in 0..=third_max {
                let e = [k, l, m];
                if (0..w.len()).any(|i| e[i] > caps[i]) {
                    continue;
                }
                let total = (k + l + m) as i64;
                if -j * s - p - g_inf + total * p < 0 {
                    continue;
                }
                let mut v = product_poly(pu - k, pu - l, third_max - m);
                for (col, row) in &pivots {
                    let f = v[*col];
                    if f != 0 {
                        for (x, y) in v.iter_mut().zip(row) {
                            *x = (*x + PRIME - mulmod(f, *y)) % PRIME;
                        }
                    }
                }
                if let Some(col) = v.iter().position(|&x| x != 0) {
                    let inv = inverse(v[col]);
                    v.iter_mut().for_each(|x| *x = mulmod(*x, inv));
                    pivots.push((col, v));
                }
            }
        }
    }
    Ok(pivots.len() as u32)
}
