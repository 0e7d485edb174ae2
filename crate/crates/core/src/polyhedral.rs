//! Homogeneous rational cones: extreme rays by double description, membership
//! and extremality certificates.
//!
//! A cone is given by inequalities `a · x >= 0`. Its V-representation is a
//! lineality basis `L` plus the extreme rays of the pointed part `cone ∩ L^⊥`.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::exactlin::{canonical_line, dot, dot_int, primitive_ray, to_rational, QMatrix, QVector, Rational};
use crate::{Error, Result};

/// A cone in inequality form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeH {
    dim: usize,
    normals: Vec<QVector>,
}

/// A cone in generator form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeV {
    pub dim: usize,
    /// Primitive integer vectors in lexicographic order.
    pub rays: Vec<QVector>,
    pub lineality: Vec<QVector>,
}

/// Witness that a vector spans an extreme ray of a cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// Indices (into the cone's normals) of an independent set of tight normals.
    pub tight_normals: Vec<usize>,
    pub rank: usize,
    /// Every normal vanishing on the vector.
    pub all_tight: Vec<usize>,
}

impl ConeH {
    pub fn new(dim: usize, normals: Vec<QVector>) -> Result<Self> {
        if let Some(bad) = normals.iter().find(|a| a.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: bad.len() });
        }
        Ok(Self { dim, normals })
    }

    pub fn from_integers(dim: usize, normals: &[Vec<i64>]) -> Result<Self> {
        Self::new(dim, normals.iter().map(|a| crate::exactlin::int_vector(a)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn normals(&self) -> &[QVector] {
        &self.normals
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        self.check_dim(v)?;
        Ok(self.normals.iter().all(|a| !dot(a, v).is_negative()))
    }

    fn check_dim(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
        }
        Ok(())
    }

    fn normal_matrix(&self, idx: impl IntoIterator<Item = usize>) -> QMatrix {
        let rows = idx.into_iter().map(|i| self.normals[i].clone()).collect();
        QMatrix::with_cols(self.dim, rows).expect("normals share the cone dimension")
    }

    /// Present iff the normals vanishing at `v` have rank one less than the
    /// rank of all normals, i.e. `v` spans an extreme ray modulo lineality.
    pub fn extremality_certificate(&self, v: &[Rational]) -> Result<Option<Certificate>> {
        if !self.contains(v)? {
            return Err(Error::Invalid("vector does not lie in the cone".into()));
        }
        let full = self.normal_matrix(0..self.normals.len()).rank();
        let all_tight: Vec<usize> =
            (0..self.normals.len()).filter(|&i| dot(&self.normals[i], v).is_zero()).collect();
        if full == 0 || self.normal_matrix(all_tight.iter().copied()).rank() != full - 1 {
            return Ok(None);
        }
        let mut chosen = Vec::new();
        for &i in &all_tight {
            chosen.push(i);
            if self.normal_matrix(chosen.iter().copied()).rank() < chosen.len() {
                chosen.pop();
            }
        }
        Ok(Some(Certificate { rank: chosen.len(), tight_normals: chosen, all_tight }))
    }

    /// Canonical V-representation by double description.
    pub fn extreme_rays(&self) -> ConeV {
        let mut normals: Vec<Vec<BigInt>> = self
            .normals
            .iter()
            .map(|a| primitive_ray(a))
            .filter(|a| a.iter().any(|x| !x.is_zero()))
            .collect();
        normals.sort();
        normals.dedup();

        let rational: Vec<QVector> = normals.iter().map(|a| to_rational(a)).collect();
        let a = QMatrix::with_cols(self.dim, rational.clone()).expect("uniform dimension");
        let lineality = a.kernel_basis();
        let rays = double_description(self.dim, &normals, &rational, &lineality);
        ConeV { dim: self.dim, rays: rays.iter().map(|r| to_rational(r)).collect(), lineality }
    }
}

/// Fixed-width bit set over constraint indices.
#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn is_superset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }
}

struct Ray {
    v: Vec<BigInt>,
    zeros: Bits,
}

fn double_description(
    dim: usize,
    normals: &[Vec<BigInt>],
    rational: &[QVector],
    lineality: &[QVector],
) -> Vec<Vec<BigInt>> {
    let m = normals.len();
    let r = dim - lineality.len();
    if r == 0 {
        return Vec::new();
    }

    // Maximal independent set of normals, greedily by index.
    let mut basis: Vec<usize> = Vec::new();
    for i in 0..m {
        basis.push(i);
        let rows = basis.iter().map(|&k| rational[k].clone()).collect();
        if QMatrix::with_cols(dim, rows).unwrap().rank() < basis.len() {
            basis.pop();
        }
        if basis.len() == r {
            break;
        }
    }

    let mut rays: Vec<Ray> = Vec::with_capacity(r);
    for (pos, &i) in basis.iter().enumerate() {
        let mut rows: Vec<QVector> =
            basis.iter().enumerate().filter(|&(q, _)| q != pos).map(|(_, &k)| rational[k].clone()).collect();
        rows.extend(lineality.iter().cloned());
        let kernel = QMatrix::with_cols(dim, rows).unwrap().kernel_basis();
        debug_assert_eq!(kernel.len(), 1);
        let mut v = primitive_ray(&kernel[0]);
        if dot_int(&normals[i], &v).is_negative() {
            v.iter_mut().for_each(|x| *x = -&*x);
        }
        let mut zeros = Bits::empty(m);
        for &k in &basis {
            if k != i {
                zeros.insert(k);
            }
        }
        rays.push(Ray { v, zeros });
    }

    let mut done = vec![false; m];
    for &k in &basis {
        done[k] = true;
    }

    loop {
        // Next inequality: fewest currently violated rays, ties by index.
        let next = (0..m)
            .filter(|&k| !done[k])
            .min_by_key(|&k| rays.iter().filter(|ray| dot_int(&normals[k], &ray.v).is_negative()).count());
        let Some(h) = next else { break };
        done[h] = true;

        let values: Vec<BigInt> = rays.iter().map(|ray| dot_int(&normals[h], &ray.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        if neg.is_empty() {
            for (ray, val) in rays.iter_mut().zip(&values) {
                if val.is_zero() {
                    ray.zeros.insert(h);
                }
            }
            continue;
        }

        let mut created = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zeros.and(&rays[n].zeros);
                if r >= 2 && common.count() < r - 2 {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(t, ray)| t == p || t == n || !ray.zeros.is_superset(&common));
                if !adjacent {
                    continue;
                }
                let v: Vec<BigInt> = rays[n]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(x, y)| &values[p] * x - &values[n] * y)
                    .collect();
                let v = crate::exactlin::primitive_int(v);
                let mut zeros = common;
                zeros.insert(h);
                created.push(Ray { v, zeros });
            }
        }

        let mut kept = Vec::with_capacity(rays.len() + created.len());
        for (mut ray, val) in rays.into_iter().zip(values) {
            if val.is_negative() {
                continue;
            }
            if val.is_zero() {
                ray.zeros.insert(h);
            }
            kept.push(ray);
        }
        kept.extend(created);
        rays = kept;
    }

    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|ray| ray.v).collect();
    out.sort();
    out.dedup();
    out
}

fn write_block(f: &mut String, tag: char, dim: usize, rows: &[QVector]) {
    let _ = writeln!(f, "{tag} {dim} {}", rows.len());
    for row in rows {
        let ints = primitive_ray(row);
        let line: Vec<String> = if row.iter().all(|x| x.is_integer()) {
            row.iter().map(|x| x.to_string()).collect()
        } else {
            ints.iter().map(|x| x.to_string()).collect()
        };
        let _ = writeln!(f, "{}", line.join(" "));
    }
}

impl fmt::Display for ConeH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_block(&mut s, 'H', self.dim, &self.normals);
        f.write_str(&s)
    }
}

impl fmt::Display for ConeV {
    /// Rays as a `V` block; a nontrivial lineality space follows as an `L` block.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_block(&mut s, 'V', self.dim, &self.rays);
        if !self.lineality.is_empty() {
            let lines: Vec<QVector> =
                self.lineality.iter().map(|l| to_rational(&canonical_line(l))).collect();
            write_block(&mut s, 'L', self.dim, &lines);
        }
        f.write_str(&s)
    }
}

struct Block {
    tag: String,
    dim: usize,
    rows: Vec<QVector>,
}

fn parse_blocks(text: &str) -> Result<Vec<Block>> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let mut blocks = Vec::new();
    while let Some(header) = lines.next() {
        let parts: Vec<&str> = header.split_whitespace().collect();
        let [tag, dim, count] = parts[..] else {
            return Err(Error::Parse(format!("bad header line `{header}`")));
        };
        let dim: usize = dim.parse().map_err(|_| Error::Parse(format!("bad dimension `{dim}`")))?;
        let count: usize = count.parse().map_err(|_| Error::Parse(format!("bad count `{count}`")))?;
        let mut rows = Vec::with_capacity(count);
        for _ in 0..count {
            let line = lines.next().ok_or_else(|| Error::Parse("truncated block".into()))?;
            let row = line
                .split_whitespace()
                .map(|t| Rational::from_str(t).map_err(|_| Error::Parse(format!("bad entry `{t}`"))))
                .collect::<Result<QVector>>()?;
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: row.len() });
            }
            rows.push(row);
        }
        blocks.push(Block { tag: tag.to_string(), dim, rows });
    }
    Ok(blocks)
}

impl FromStr for ConeH {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match &parse_blocks(s)?[..] {
            [b] if b.tag == "H" => ConeH::new(b.dim, b.rows.clone()),
            _ => Err(Error::Parse("expected a single H block".into())),
        }
    }
}

impl FromStr for ConeV {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let blocks = parse_blocks(s)?;
        let (v, l) = match &blocks[..] {
            [v] => (v, None),
            [v, l] if l.tag == "L" => (v, Some(l)),
            _ => return Err(Error::Parse("expected a V block and an optional L block".into())),
        };
        if v.tag != "V" || l.is_some_and(|l| l.dim != v.dim) {
            return Err(Error::Parse("malformed V representation".into()));
        }
        Ok(ConeV {
            dim: v.dim,
            rays: v.rows.clone(),
            lineality: l.map(|l| l.rows.clone()).unwrap_or_default(),
        })
    }
}

/// Reference enumeration by exhaustion over tight subsets; exponential, for tests.
pub fn brute_force_rays(cone: &ConeH) -> Vec<QVector> {
    let dim = cone.dim();
    let all = QMatrix::with_cols(dim, cone.normals().to_vec()).unwrap();
    let r = all.rank();
    if r == 0 {
        return Vec::new();
    }
    let lineality = all.kernel_basis();
    let m = cone.normals().len();
    let mut found: Vec<Vec<BigInt>> = Vec::new();
    let mut subset: Vec<usize> = Vec::new();
    fn walk(
        start: usize,
        need: usize,
        m: usize,
        subset: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if subset.len() == need {
            visit(subset);
            return;
        }
        for i in start..m {
            subset.push(i);
            walk(i + 1, need, m, subset, visit);
            subset.pop();
        }
    }
    walk(0, r - 1, m, &mut subset, &mut |s: &[usize]| {
        let mut rows: Vec<QVector> = s.iter().map(|&i| cone.normals()[i].clone()).collect();
        rows.extend(lineality.iter().cloned());
        let kernel = QMatrix::with_cols(dim, rows).unwrap().kernel_basis();
        if kernel.len() != 1 {
            return;
        }
        for sign in [1i64, -1] {
            let v: QVector = kernel[0].iter().map(|x| x * Rational::from_integer(sign.into())).collect();
            if cone.contains(&v).unwrap() {
                found.push(primitive_ray(&v));
            }
        }
    });
    found.sort();
    found.dedup();
    found.iter().map(|v| to_rational(v)).collect()
}
