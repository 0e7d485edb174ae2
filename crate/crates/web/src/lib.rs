//! wasm-bindgen bindings for the static page in `www/`. Every export returns a
//! JSON string; errors come back as a thrown string.

use cyclic_nef::cyclic::{eigen_class, hodge_class, log_canonical_class, p5_class, pullback_combo};
use cyclic_nef::eigenforms::eigen_rank_degree_fcurve;
use cyclic_nef::exactlin::{primitive_ray, rat};
use cyclic_nef::fcone::{annotate, annotation_catalog, extremal_report, fcone_rays, fnef_report};
use cyclic_nef::moduli::psi_expand;
use cyclic_nef::SymDivisor;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest `n` the page will enumerate; the cone and the catalog grow quickly.
pub const MAX_N: usize = 16;

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

/// Extreme rays of the symmetric F-cone with orthogonal F-curves and labels.
#[wasm_bindgen]
pub fn fcone(n: usize) -> Result<String, String> {
    if !(5..=MAX_N).contains(&n) {
        return Err(format!("n must be between 5 and {MAX_N}"));
    }
    let catalog = annotation_catalog(n).map_err(|e| e.to_string())?;
    let mut rays = Vec::new();
    for r in fcone_rays(n).map_err(|e| e.to_string())? {
        let labels = annotate(&catalog, &r.vector).map_err(|e| e.to_string())?;
        rays.push(json!({
            "vector": strings(&r.vector),
            "orthogonal": strings(&r.orthogonal),
            "annotations": labels,
        }));
    }
    let basis: Vec<String> = (2..=n / 2).map(|k| format!("D{k}")).collect();
    Ok(json!({"basis": basis, "rays": rays}).to_string())
}

fn build(kind: &str, n: usize, p: i64, j: i64) -> cyclic_nef::Result<SymDivisor> {
    match kind {
        "hodge" => hodge_class(n, p),
        "eigen" => eigen_class(n, p, j),
        "9lambda-irr" => pullback_combo(n, p, &rat(9), &rat(-1), &rat(0)),
        "12lambda-irr" => pullback_combo(n, p, &rat(12), &rat(-1), &rat(0)),
        "10lambda-irr-2red" => pullback_combo(n, p, &rat(10), &rat(-1), &rat(-2)),
        "p5" => p5_class(n, j),
        "logcanonical" => log_canonical_class(n, p),
        _ => Err(cyclic_nef::Error::Invalid(format!("unknown class `{kind}`"))),
    }
}

/// A cyclic covering class with its boundary expansion, F-nef verdict and,
/// when F-nef, the extremality report.
#[wasm_bindgen]
pub fn cyclic_class(kind: &str, n: usize, p: i64, j: i64) -> Result<String, String> {
    if !(4..=40).contains(&n) {
        return Err("n must be between 4 and 40".into());
    }
    let d = build(kind, n, p, j).map_err(|e| e.to_string())?;
    let expanded = psi_expand(&d);
    let v = d.delta_vector();
    let ray = if v.iter().any(|x| x != &rat(0)) { strings(&primitive_ray(&v)) } else { Vec::new() };
    let report = fnef_report(&d).map_err(|e| e.to_string())?;
    let mut out = json!({
        "literal": d.to_string(),
        "expanded": expanded.to_string(),
        "ray": ray,
        "fnef": report.is_fnef(),
        "zero": strings(&report.zero()),
        "negative": strings(&report.negative()),
    });
    if report.is_fnef() {
        let ext = extremal_report(&d).map_err(|e| e.to_string())?;
        out["extremal"] = Value::Bool(ext.is_extremal());
        out["rank"] = json!(ext.rank.min(ext.target));
        out["target"] = json!(ext.target);
        out["certificate"] = json!(strings(&ext.certificate));
    }
    Ok(out.to_string())
}

/// Rank and degree of every eigenbundle `E_j`, `1 <= j < p`, over `F_{a,b,c,d}`.
#[wasm_bindgen]
pub fn eigen_table(a: i64, b: i64, c: i64, d: i64, p: i64) -> Result<String, String> {
    if !(2..=60).contains(&p) {
        return Err("p must be between 2 and 60".into());
    }
    let mut rows = Vec::new();
    for j in 1..p {
        let (rank, degree) = eigen_rank_degree_fcurve(a, b, c, d, p, j).map_err(|e| e.to_string())?;
        rows.push(json!({"j": j, "rank": rank, "degree": degree.to_string()}));
    }
    Ok(Value::Array(rows).to_string())
}
