//! Acceptance suite. Runs without the libtest harness so that each criterion
//! prints exactly one PASS/FAIL line; exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use cyclic_nef::cyclic::{
    eigen_class, eigen_det_class, hodge_class, p5_class, pullback_combo, symmetric_weighted_pullbacks,
    weighted_pullbacks, WeightData,
};
use cyclic_nef::eigenforms::{cover_genus, eigen_rank_degree_fcurve, h0_weight_3pt, h0_weight_4pt, oracle_h0};
use cyclic_nef::exactlin::{int_vector, rat, ratio, Rational};
use cyclic_nef::fcone::{annotate, annotation_catalog, extremal_report, fcone_rays, fnef_report, t3_certificate};
use cyclic_nef::moduli::{
    enumerate_sym_fcurves, full_fcurves_of_type, full_pairing, proportional, psi_expand, symmetrize, sym_pairing,
    tk_pairing,
};
use cyclic_nef::polyhedral::{brute_force_rays, ConeH};
use cyclic_nef::{FullDivisor, SymDivisor, SymFCurve};
use num_integer::Integer;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ray(n: usize, v: &[i64]) -> SymDivisor {
    SymDivisor::from_deltas(n, int_vector(v)).unwrap()
}

fn same_ray(d: &SymDivisor, v: &[i64]) -> bool {
    matches!(proportional(d, &ray(d.n(), v)), Ok(Some(c)) if c > rat(0))
}

fn curve(parts: [usize; 4]) -> SymFCurve {
    SymFCurve::new(parts[0], parts[1], parts[2], parts[3]).unwrap()
}

fn rays_of(n: usize) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = fcone_rays(n)
        .unwrap()
        .into_iter()
        .map(|r| r.vector.iter().map(|x| i64::try_from(x.to_integer()).unwrap()).collect())
        .collect();
    out.sort();
    out
}

fn sorted(mut v: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    v.sort();
    v
}

const N10_CURVES: [([usize; 4], [i64; 4]); 9] = [
    ([7, 1, 1, 1], [3, -1, 0, 0]),
    ([6, 2, 1, 1], [0, 2, -1, 0]),
    ([5, 3, 1, 1], [1, -1, 2, -1]),
    ([5, 2, 2, 1], [-2, 2, 1, -1]),
    ([4, 4, 1, 1], [1, 0, -2, 2]),
    ([4, 3, 2, 1], [-1, 0, 0, 1]),
    ([4, 2, 2, 2], [-3, 0, 2, 0]),
    ([3, 3, 3, 1], [0, -3, 3, 0]),
    ([3, 3, 2, 2], [-2, -2, 1, 2]),
];

/// Extreme rays for n = 10 with their orthogonal curves by index in `N10_CURVES` (1-based).
/// The second row is also orthogonal to C9: (2,6,6,5)·(-2,-2,1,2) = 0.
const N10_RAYS: [([i64; 4], &[usize]); 7] = [
    ([4, 6, 6, 7], &[7, 8, 9]),
    ([2, 6, 6, 5], &[1, 5, 8, 9]),
    ([4, 3, 6, 4], &[2, 4, 5, 6, 7, 9]),
    ([2, 6, 12, 11], &[1, 2, 5]),
    ([2, 3, 3, 5], &[3, 4, 7, 8]),
    ([1, 3, 3, 4], &[1, 3, 8]),
    ([1, 3, 6, 10], &[1, 2, 3, 4]),
];

fn criterion_1() {
    let curves = enumerate_sym_fcurves(10).unwrap();
    assert_eq!(curves.len(), 9);
    for (c, (parts, v)) in curves.iter().zip(N10_CURVES) {
        assert_eq!(c.parts(), parts);
        assert_eq!(c.class_vector(), v.to_vec(), "{c}");
    }
}

fn criterion_2() {
    assert_eq!(rays_of(6), sorted(vec![vec![2, 1], vec![1, 3]]));
    assert_eq!(rays_of(7), sorted(vec![vec![1, 1], vec![1, 3]]));
    assert_eq!(rays_of(9), sorted(vec![vec![1, 3, 6], vec![3, 3, 4], vec![1, 3, 2], vec![1, 1, 2]]));
    assert_eq!(rays_of(10), sorted(N10_RAYS.iter().map(|(v, _)| v.to_vec()).collect()));
    let curves = enumerate_sym_fcurves(10).unwrap();
    for r in fcone_rays(10).unwrap() {
        let (_, expected) = N10_RAYS.iter().find(|(v, _)| int_vector(v) == r.vector).unwrap();
        let expected: Vec<SymFCurve> = expected.iter().map(|&i| curves[i - 1]).collect();
        assert_eq!(r.orthogonal, expected);
    }
}

fn criterion_3() {
    assert!(same_ray(&hodge_class(6, 2).unwrap(), &[2, 1]));
    assert!(same_ray(&hodge_class(6, 3).unwrap(), &[1, 3]));
    assert!(same_ray(&pullback_combo(6, 2, &rat(12), &rat(-1), &rat(0)).unwrap(), &[1, 3]));
    assert!(same_ray(&pullback_combo(6, 3, &rat(9), &rat(-1), &rat(0)).unwrap(), &[2, 1]));

    let w9 = WeightData::new(vec![1, 1, 1, 1, 1, 1, 1, 1, 2], 2).unwrap();
    let (lam, irr, red) = symmetric_weighted_pullbacks(&w9);
    let gkm = &(&(&lam * &rat(10)) - &irr) - &(&red * &rat(2));
    assert!(same_ray(&gkm, &[1, 3, 6]));
    assert!(same_ray(&lam, &[3, 3, 4]));
    assert!(same_ray(&hodge_class(9, 3).unwrap(), &[1, 3, 2]));
    assert!(same_ray(&pullback_combo(9, 3, &rat(9), &rat(-1), &rat(0)).unwrap(), &[1, 1, 2]));

    let w10 = WeightData::new(vec![0, 1, 1, 1, 1, 1, 1, 1, 1, 1], 3).unwrap();
    let table: [(SymDivisor, [i64; 4]); 7] = [
        (p5_class(10, 2).unwrap(), [4, 6, 6, 7]),
        (symmetric_weighted_pullbacks(&w10).0, [2, 6, 6, 5]),
        (hodge_class(10, 2).unwrap(), [4, 3, 6, 4]),
        (pullback_combo(10, 2, &rat(10), &rat(-1), &rat(-2)).unwrap(), [2, 6, 12, 11]),
        (eigen_class(10, 5, 2).unwrap(), [2, 3, 3, 5]),
        (pullback_combo(10, 2, &rat(12), &rat(-1), &rat(0)).unwrap(), [1, 3, 3, 4]),
        (eigen_class(10, 5, 1).unwrap(), [1, 3, 6, 10]),
    ];
    for (class, v) in &table {
        assert!(same_ray(class, v), "{v:?}");
    }
    // Secondary identifications in the same rows.
    assert!(same_ray(&eigen_class(10, 10, 3).unwrap(), &[2, 6, 6, 5]));
    assert!(same_ray(&eigen_class(10, 10, 5).unwrap(), &[4, 3, 6, 4]));
    assert!(same_ray(&p5_class(10, 1).unwrap(), &[2, 6, 12, 11]));
    assert!(same_ray(&eigen_class(10, 10, 4).unwrap(), &[2, 3, 3, 5]));
    assert!(same_ray(&eigen_class(10, 10, 2).unwrap(), &[1, 3, 6, 10]));

    // Every ray of the two tables is found by the annotation search.
    for n in [9, 10] {
        let catalog = annotation_catalog(n).unwrap();
        for r in fcone_rays(n).unwrap() {
            let labels = annotate(&catalog, &r.vector).unwrap();
            assert!(!labels.is_empty(), "n = {n}: {:?}", r.vector);
        }
    }
}

fn criterion_4() {
    for n in [6usize, 9, 12, 15] {
        let d = pullback_combo(n, 3, &rat(9), &rat(-1), &rat(0)).unwrap();
        let mut expected = &SymDivisor::psi(n).unwrap() * &rat(2);
        for k in 2..=n / 2 {
            let c = if k % 3 == 0 { rat(-3) } else { rat(-2) };
            expected = &expected + &(&SymDivisor::boundary(n, k).unwrap() * &c);
        }
        assert_eq!(d, expected, "n = {n}");

        let report = fnef_report(&d).unwrap();
        assert!(report.is_fnef());
        for (f, deg) in &report.degrees {
            let mut residues = f.parts().map(|x| x % 3);
            residues.sort();
            assert_eq!(deg.is_zero(), residues == [1, 1, 2, 2], "n = {n}: {f}");
        }

        let ext = extremal_report(&d).unwrap();
        assert_eq!(ext.rank, n / 2 - 2, "n = {n}");
        assert!(ext.is_extremal());
        let cert: Vec<SymFCurve> = t3_certificate(n).unwrap().into_iter().flat_map(|b| b.curves).collect();
        assert_eq!(cyclic_nef::fcone::curve_rank(&cert), n / 2 - 2);
        assert!(cert.iter().all(|c| sym_pairing(&d, c).unwrap().is_zero()));
    }
    let n12: Vec<SymFCurve> = t3_certificate(12).unwrap().into_iter().flat_map(|b| b.curves).collect();
    assert_eq!(n12, vec![curve([5, 5, 1, 1]), curve([4, 4, 2, 2]), curve([7, 2, 2, 1]), curve([8, 2, 1, 1])]);
}

fn criterion_5() {
    let scaled = |c: Rational, v: [i64; 4]| -> Vec<Rational> { v.iter().map(|&x| &c * rat(x)).collect() };
    assert_eq!(psi_expand(&p5_class(10, 1).unwrap()).deltas(), &scaled(ratio(5, 9), [2, 6, 12, 11])[..]);
    assert_eq!(psi_expand(&p5_class(10, 2).unwrap()).deltas(), &scaled(ratio(15, 9), [4, 6, 6, 7])[..]);
    for n in [10, 15] {
        for j in [1, 2] {
            assert!(fnef_report(&p5_class(n, j).unwrap()).unwrap().is_fnef(), "n = {n}, j = {j}");
        }
    }
    let w = WeightData::unweighted(10, 5).unwrap();
    let irr = symmetrize(&weighted_pullbacks(&w).unwrap().delta_irr);
    for j in [1, 2] {
        let e = symmetrize(&eigen_det_class(&w, j).unwrap());
        assert_eq!(&(&e * &rat(50)) - &irr, p5_class(10, j).unwrap());
    }
}

fn criterion_6() {
    let mut cases = Vec::new();
    for n in 4..=10usize {
        for p in 2..=6i64 {
            if n as i64 % p == 0 {
                cases.push(WeightData::unweighted(n, p).unwrap());
            }
        }
    }
    for p in 2..=6 {
        for d in [vec![1, 1, 1, 1, 1, 1, 0], vec![1, 1, 1, 1, 1, 1, 1, 1, 2]] {
            if let Ok(w) = WeightData::new(d, p) {
                cases.push(w);
            }
        }
    }
    assert!(cases.len() >= 12);
    for w in cases {
        let total = (1..w.p()).fold(FullDivisor::zero(w.n()).unwrap(), |acc, j| &acc + &eigen_det_class(&w, j).unwrap());
        assert_eq!(total, weighted_pullbacks(&w).unwrap().lambda, "{:?} p = {}", w.weights(), w.p());
        for j in 1..w.p() {
            assert_eq!(eigen_det_class(&w, j).unwrap(), eigen_det_class(&w, w.p() - j).unwrap());
        }
    }
}

fn criterion_7() {
    let mut cases = 0usize;
    for p in 2..=10i64 {
        for j in 0..p {
            for a in 0..p {
                for b in 0..p {
                    assert_eq!(oracle_h0(&[a, b], p, j).unwrap(), h0_weight_3pt(a, b, p, j), "({a},{b}) p={p} j={j}");
                    cases += 1;
                    for c in 0..p {
                        assert_eq!(
                            oracle_h0(&[a, b, c], p, j).unwrap(),
                            h0_weight_4pt(a, b, c, p, j),
                            "({a},{b},{c}) p={p} j={j}"
                        );
                        cases += 1;
                    }
                }
            }
        }
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    let d = (-(a + b + c)).rem_euclid(p);
                    let total: i64 = (1..p).map(|j| eigen_rank_degree_fcurve(a, b, c, d, p, j).unwrap().0 as i64).sum();
                    let components = [a, b, c, d].iter().fold(p, |g, &x| g.gcd(&x));
                    assert_eq!(total, cover_genus(&[a, b, c, d], p) + components - 1, "({a},{b},{c},{d}) p={p}");
                    if components == 1 {
                        assert_eq!(total, cover_genus(&[a, b, c, d], p));
                    }
                }
            }
        }
    }
    assert!(cases > 25_000);
}

fn criterion_8() {
    for n in 4..=12usize {
        let curves = enumerate_sym_fcurves(n).unwrap();
        for p in 2..=6i64 {
            if n as i64 % p != 0 {
                continue;
            }
            for j in 1..p {
                let class = eigen_class(n, p, j).unwrap();
                for f in &curves {
                    let [a, b, c, d] = f.parts().map(|x| x as i64);
                    let (_, degree) = eigen_rank_degree_fcurve(a, b, c, d, p, j).unwrap();
                    assert_eq!(sym_pairing(&class, f).unwrap(), degree, "n={n} p={p} j={j} {f}");
                }
            }
        }
    }
    // Weighted covers, through the full pairing.
    let w = WeightData::new(vec![1, 1, 1, 1, 1, 1, 1, 1, 2], 2).unwrap();
    let e = eigen_det_class(&w, 1).unwrap();
    for t in enumerate_sym_fcurves(9).unwrap() {
        for f in full_fcurves_of_type(&t) {
            let [a, b, c, d] = f.blocks().map(|s| s.markings().map(|i| w.weights()[i - 1]).sum::<i64>());
            let (_, degree) = eigen_rank_degree_fcurve(a, b, c, d, 2, 1).unwrap();
            assert_eq!(full_pairing(&e, &f).unwrap(), degree);
        }
    }
}

fn criterion_9() {
    for n in 4..=16usize {
        let curves = enumerate_sym_fcurves(n).unwrap();
        for p in 2..=n as i64 {
            if n as i64 % p != 0 {
                continue;
            }
            let lam = hodge_class(n, p).unwrap();
            for f in &curves {
                if f.parts().iter().any(|&x| x as i64 % p == 0) {
                    assert!(sym_pairing(&lam, f).unwrap().is_zero(), "n={n} p={p} {f}");
                }
            }
            for k in 3..=n / 2 {
                if k as i64 % p == 0 {
                    assert!(tk_pairing(&lam, k).unwrap().is_zero(), "n={n} p={p} k={k}");
                }
            }
        }
    }
}

fn criterion_10() {
    let mut rng = ChaCha8Rng::seed_from_u64(20_100);
    for _ in 0..200 {
        let dim = rng.gen_range(1..=4);
        let count = rng.gen_range(0..=10);
        let rows: Vec<Vec<i64>> = (0..count).map(|_| (0..dim).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let cone = ConeH::from_integers(dim, &rows).unwrap();
        let v = cone.extreme_rays();
        assert_eq!(v.rays, brute_force_rays(&cone), "{rows:?}");
        let mut shuffled = rows.clone();
        shuffled.shuffle(&mut rng);
        assert_eq!(ConeH::from_integers(dim, &shuffled).unwrap().extreme_rays(), v);
    }
}

type Criterion = (&'static str, fn(), Duration);

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 n=10 F-curve coordinates", criterion_1, Duration::from_secs(1)),
        ("2 F-cone rays n=6,7,9,10", criterion_2, Duration::from_secs(5)),
        ("3 cyclic-class identifications", criterion_3, Duration::from_secs(30)),
        ("4 9lambda - delta_irr class, zero set, certificates", criterion_4, Duration::from_secs(60)),
        ("5 p=5 classes", criterion_5, Duration::from_secs(60)),
        ("6 eigen-decomposition of the Hodge class", criterion_6, Duration::from_secs(120)),
        ("7 weight-space oracle and rank-genus", criterion_7, Duration::from_secs(60)),
        ("8 eigenbundle degrees on F-curves", criterion_8, Duration::from_secs(60)),
        ("9 vanishing on F-curves and T_k", criterion_9, Duration::from_secs(60)),
        ("10 double description vs brute force", criterion_10, Duration::from_secs(30)),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run));
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(()) if elapsed <= limit => "PASS".to_string(),
            Ok(()) => format!("FAIL (over time limit {limit:?})"),
            Err(_) => "FAIL".to_string(),
        };
        if verdict != "PASS" {
            failed += 1;
        }
        println!("{verdict} criterion {name} [{:.2}s]", elapsed.as_secs_f64());
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
