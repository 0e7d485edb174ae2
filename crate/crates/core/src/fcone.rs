//! The symmetric F-cone: F-nefness, extremality, ray enumeration and labelling
//! of rays by cyclic covering classes.
//!
//! Cone work happens on the pure boundary basis `Δ_2, …, Δ_{⌊n/2⌋}`; every
//! F-curve contributes the inequality `class_vector · x >= 0`.

use num_traits::{Signed, Zero};

use crate::cyclic::{
    eigen_class, hodge_class, p5_class, pullback_boundary, pullback_combo, symmetric_eigen_det,
    symmetric_weighted_pullbacks, WeightData,
};
use crate::error::ensure;
use crate::exactlin::{int_vector, rat, QMatrix, QVector, Rational};
use crate::moduli::{enumerate_sym_fcurves, proportional, sym_pairing, SymDivisor, SymFCurve};
use crate::polyhedral::ConeH;
use crate::Result;

/// F-curves of `M_{0,n}/S_n` with the cone they cut out, normals in curve order.
pub fn fcone(n: usize) -> Result<(Vec<SymFCurve>, ConeH)> {
    let curves = enumerate_sym_fcurves(n)?;
    let normals = curves.iter().map(|c| int_vector(&c.class_vector())).collect();
    let cone = ConeH::new(n / 2 - 1, normals)?;
    Ok((curves, cone))
}

/// Extreme rays of the F-cone with the F-curves vanishing on each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FRay {
    pub vector: QVector,
    pub orthogonal: Vec<SymFCurve>,
}

pub fn fcone_rays(n: usize) -> Result<Vec<FRay>> {
    ensure!(n >= 5, "the F-cone needs n >= 5 (got {n})");
    let (curves, cone) = fcone(n)?;
    let rays = cone.extreme_rays().rays;
    Ok(rays
        .into_iter()
        .map(|vector| {
            let orthogonal = curves
                .iter()
                .filter(|c| crate::exactlin::dot(&int_vector(&c.class_vector()), &vector).is_zero())
                .copied()
                .collect();
            FRay { vector, orthogonal }
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FNefReport {
    pub degrees: Vec<(SymFCurve, Rational)>,
}

impl FNefReport {
    pub fn zero(&self) -> Vec<SymFCurve> {
        self.degrees.iter().filter(|(_, d)| d.is_zero()).map(|(c, _)| *c).collect()
    }

    pub fn negative(&self) -> Vec<SymFCurve> {
        self.degrees.iter().filter(|(_, d)| d.is_negative()).map(|(c, _)| *c).collect()
    }

    pub fn is_fnef(&self) -> bool {
        self.degrees.iter().all(|(_, d)| !d.is_negative())
    }
}

pub fn fnef_report(d: &SymDivisor) -> Result<FNefReport> {
    let degrees = enumerate_sym_fcurves(d.n())?
        .into_iter()
        .map(|c| sym_pairing(d, &c).map(|deg| (c, deg)))
        .collect::<Result<_>>()?;
    Ok(FNefReport { degrees })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalReport {
    pub orthogonal: Vec<SymFCurve>,
    /// Rank of the orthogonal F-curves in `N_1`.
    pub rank: usize,
    /// `⌊n/2⌋ - 2`, one less than the Picard number.
    pub target: usize,
    /// Independent subset of `orthogonal` of size `rank`.
    pub certificate: Vec<SymFCurve>,
}

impl ExtremalReport {
    pub fn is_extremal(&self) -> bool {
        self.rank == self.target && !self.orthogonal.is_empty() || self.target == 0 && self.rank == 0
    }
}

/// Orthogonal F-curves of an F-nef class and whether they certify an extreme ray.
pub fn extremal_report(d: &SymDivisor) -> Result<ExtremalReport> {
    let n = d.n();
    let report = fnef_report(d)?;
    let negative = report.negative();
    ensure!(
        negative.is_empty(),
        "divisor is not F-nef: negative on {}",
        negative.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
    );
    let orthogonal = report.zero();
    let mut certificate: Vec<SymFCurve> = Vec::new();
    for c in &orthogonal {
        certificate.push(*c);
        if curve_rank(&certificate) < certificate.len() {
            certificate.pop();
        }
    }
    let target = n / 2 - 2;
    // A zero class is orthogonal to everything; it spans no ray.
    let zero = d.delta_vector().iter().all(Zero::is_zero);
    let rank = if zero { target + 1 } else { certificate.len() };
    Ok(ExtremalReport { orthogonal, rank, target, certificate })
}

/// Rank of F-curve classes in the boundary basis.
pub fn curve_rank(curves: &[SymFCurve]) -> usize {
    let Some(first) = curves.first() else { return 0 };
    let rows = curves.iter().map(|c| int_vector(&c.class_vector())).collect();
    QMatrix::with_cols(first.n() / 2 - 1, rows).unwrap().rank()
}

/// A named class from the cyclic covering constructions.
#[derive(Debug, Clone)]
pub struct Annotation {
    pub label: String,
    pub class: SymDivisor,
}

fn weight_label(u: i64, v: i64, n: usize, m: usize) -> String {
    let run = |x: i64, count: usize| if count == 1 { x.to_string() } else { format!("{x}^{count}") };
    format!("({},{})", run(u, n - m), run(v, m))
}

const COMBOS: [(i64, i64, i64, &str); 3] = [
    (9, -1, 0, "9lambda - delta_irr"),
    (12, -1, 0, "12lambda - delta_irr"),
    (10, -1, -2, "10lambda - delta_irr - 2delta_red"),
];

/// Every labelled class searched by [`annotate`], in a fixed order.
///
/// Unweighted morphisms `f_{n,p}` for `p | n` (Hodge class, three boundary
/// combinations, eigenbundles `λ_{n,p}(j)` for `j <= p/2`, and for `p = 5` the
/// classes `50λ_{n,5}(j) - δ_irr`), then weighted morphisms with weights
/// `(u^{n-m}, v^m)`, `u < v` in `{0, 1, 2}`.
pub fn annotation_catalog(n: usize) -> Result<Vec<Annotation>> {
    ensure!(n >= 4, "n must be at least 4 (got {n})");
    let mut out: Vec<Annotation> = Vec::new();
    let mut push = |label: String, class: SymDivisor| {
        if class.delta_vector().iter().any(|x| !x.is_zero()) && !out.iter().any(|a| a.label == label) {
            out.push(Annotation { label, class });
        }
    };
    for p in 2..=n as i64 {
        if n as i64 % p != 0 {
            continue;
        }
        push(format!("f_{{{n},{p}}}^*(lambda)"), hodge_class(n, p)?);
        for (cl, ci, cr, name) in COMBOS {
            push(format!("f_{{{n},{p}}}^*({name})"), pullback_combo(n, p, &rat(cl), &rat(ci), &rat(cr))?);
        }
        for j in 1..=p / 2 {
            let class = eigen_class(n, p, j)?;
            let m = j * n as i64 / p;
            push(format!("lambda_{{{n},{p}}}({j})"), class.clone());
            push(format!("D(sl_{n},1,w_{m}^{n})"), class);
        }
        if p == 5 {
            let (irr, _) = pullback_boundary(n, 5)?;
            for j in [1, 2] {
                push(format!("f_{{{n},5}}^*(50lambda_{{{n},5}}({j}) - delta_irr)"), p5_class(n, j)?);
                debug_assert_eq!(p5_class(n, j)?, &(&eigen_class(n, 5, j)? * &rat(50)) - &irr);
            }
        }
    }
    for (u, v) in [(0, 1), (0, 2), (1, 2)] {
        for m in 1..n {
            let total = u * (n - m) as i64 + v * m as i64;
            for p in 2..=n as i64 {
                if total % p != 0 {
                    continue;
                }
                let mut d = vec![u; n - m];
                d.extend(std::iter::repeat_n(v, m));
                let w = WeightData::new(d, p)?;
                let label = weight_label(u, v, n, m);
                let (lambda, irr, red) = symmetric_weighted_pullbacks(&w);
                push(format!("f_{{{label},{p}}}^*(lambda)"), lambda.clone());
                for (cl, ci, cr, name) in COMBOS {
                    let class = &(&(&lambda * &rat(cl)) + &(&irr * &rat(ci))) + &(&red * &rat(cr));
                    push(format!("f_{{{label},{p}}}^*({name})"), class);
                }
                push(format!("lambda_{{{label},{p}}}(1)"), symmetric_eigen_det(&w, 1)?);
            }
        }
    }
    Ok(out)
}

/// Labels of catalog classes spanning the ray of `v` (boundary coordinates).
pub fn annotate(catalog: &[Annotation], v: &[Rational]) -> Result<Vec<String>> {
    let Some(first) = catalog.first() else { return Ok(Vec::new()) };
    let target = SymDivisor::from_deltas(first.class.n(), v.to_vec())?;
    let mut labels = Vec::new();
    for a in catalog {
        if proportional(&a.class, &target)?.is_some() {
            labels.push(a.label.clone());
        }
    }
    Ok(labels)
}

/// A group of F-curves orthogonal to `f_{n,3}^*(9λ - δ_irr)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateBlock {
    pub name: String,
    pub curves: Vec<SymFCurve>,
}

fn fc(parts: [i64; 4]) -> SymFCurve {
    let [a, b, c, d] = parts.map(|x| usize::try_from(x).expect("positive part"));
    SymFCurve::new(a, b, c, d).expect("positive parts")
}

/// Independent F-curves on which `2ψ - 2Δ - Σ_{3|k} Δ_k` vanishes, grouped as
/// in the extremality argument; `⌊n/2⌋ - 2` curves in total.
///
/// For `n = 12` the four curves are fixed; for `n = 12t + r` with `t >= 2`
/// the blocks `N_0, …, N_{t-1}` are used. The block `N_0` only has rank 5, so
/// one dependent curve is dropped and a `completion` block restores the rank.
/// For `n < 24` other than 12 the families collapse and the curves are chosen
/// greedily from the orthogonal F-curves.
pub fn t3_certificate(n: usize) -> Result<Vec<CertificateBlock>> {
    ensure!(n >= 6 && n.is_multiple_of(3), "n must be a multiple of 3 with n >= 6 (got {n})");
    let (t, r) = ((n / 12) as i64, n % 12);
    let ni = n as i64;
    if n == 12 {
        let curves = vec![fc([5, 5, 1, 1]), fc([4, 4, 2, 2]), fc([1, 2, 2, 7]), fc([1, 1, 2, 8])];
        return Ok(vec![CertificateBlock { name: "n=12".into(), curves }]);
    }
    if t < 1 || (t == 1 && r != 0) {
        let d = pullback_combo(n, 3, &rat(9), &rat(-1), &rat(0))?;
        let report = extremal_report(&d)?;
        return Ok(vec![CertificateBlock { name: "search".into(), curves: report.certificate }]);
    }
    let mut blocks = Vec::new();
    blocks.push(CertificateBlock {
        name: "N_0".into(),
        curves: vec![
            fc([1, 1, 2, ni - 4]),
            fc([1, 2, 2, ni - 5]),
            fc([4, 1, 2, ni - 7]),
            fc([5, 1, 1, ni - 7]),
            fc([4, 2, 2, ni - 8]),
            fc([5, 1, 2, ni - 8]),
        ],
    });
    for i in 1..=t - 2 {
        let s = 6 * i;
        blocks.push(CertificateBlock {
            name: format!("N_{i}"),
            curves: vec![
                fc([s + 1, 1, 2, ni - 4 - s]),
                fc([s + 2, 1, 1, ni - 4 - s]),
                fc([s + 1, 2, 2, ni - 5 - s]),
                fc([s + 4, 2, 2, ni - 8 - s]),
                fc([s + 5, 1, 1, ni - 7 - s]),
                fc([s + 5, 1, 2, ni - 8 - s]),
            ],
        });
    }
    let u = 6 * t;
    let last = match r {
        0 => vec![fc([u - 5, 1, 2, u + 2]), fc([u - 4, 1, 1, u + 2]), fc([u - 5, 2, 2, u + 1]), fc([u - 1, 1, 1, u - 1])],
        3 => vec![
            fc([u - 5, 1, 2, u + 5]),
            fc([u - 4, 1, 1, u + 5]),
            fc([u - 1, 1, 1, u + 2]),
            fc([u - 4, 1, 2, u + 4]),
            fc([u - 1, 1, 2, u + 1]),
        ],
        6 => vec![
            fc([u - 5, 1, 2, u + 8]),
            fc([u - 4, 1, 1, u + 8]),
            fc([u - 5, 2, 2, u + 7]),
            fc([u - 1, 1, 1, u + 5]),
            fc([u - 2, 1, 2, u + 5]),
            fc([u - 2, 2, 2, u + 4]),
            fc([u + 1, 2, 2, u + 1]),
        ],
        _ => vec![
            fc([u - 5, 1, 2, u + 11]),
            fc([u - 4, 1, 1, u + 11]),
            fc([u - 5, 2, 2, u + 10]),
            fc([u - 1, 1, 1, u + 8]),
            fc([u - 2, 1, 2, u + 8]),
            fc([u - 2, 2, 2, u + 7]),
            fc([u + 1, 1, 2, u + 5]),
            fc([u + 1, 2, 2, u + 4]),
        ],
    };
    blocks.push(CertificateBlock { name: format!("N_{}", t - 1), curves: last });
    complete(n, blocks)
}

/// Drops dependent curves from the blocks and, if the rank is still short,
/// appends orthogonal F-curves in enumeration order until it is `⌊n/2⌋ - 2`.
fn complete(n: usize, mut blocks: Vec<CertificateBlock>) -> Result<Vec<CertificateBlock>> {
    let mut chosen: Vec<SymFCurve> = Vec::new();
    for block in blocks.iter_mut() {
        block.curves.retain(|c| {
            chosen.push(*c);
            let keep = curve_rank(&chosen) == chosen.len();
            if !keep {
                chosen.pop();
            }
            keep
        });
    }
    let target = n / 2 - 2;
    if chosen.len() < target {
        let d = pullback_combo(n, 3, &rat(9), &rat(-1), &rat(0))?;
        let mut extra = Vec::new();
        for c in extremal_report(&d)?.orthogonal {
            if chosen.len() == target {
                break;
            }
            chosen.push(c);
            if curve_rank(&chosen) == chosen.len() {
                extra.push(c);
            } else {
                chosen.pop();
            }
        }
        blocks.push(CertificateBlock { name: "completion".into(), curves: extra });
    }
    Ok(blocks)
}
