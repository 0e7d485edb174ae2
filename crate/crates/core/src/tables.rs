//! CSV renderings of the reproducible tables: F-cone rays with their orthogonal
//! F-curves and cyclic-class labels, the `n = 10` F-curve coordinates, and the
//! certificate blocks for `f_{n,3}^*(9λ - δ_irr)`.
//!
//! Every table has a header row, rationals are written `p/q`, and list-valued
//! cells are joined with `"; "`.

use crate::error::ensure;
use crate::fcone::{annotate, annotation_catalog, fcone_rays, t3_certificate};
use crate::moduli::{enumerate_sym_fcurves, SymFCurve};
use crate::{Error, Result};

pub const TABLE_NAMES: [&str; 6] = ["n6", "n7", "n9", "n10", "n10-fcurves", "t3-certificates"];

fn delta_header(n: usize) -> impl Iterator<Item = String> {
    (2..=n / 2).map(|k| format!("D{k}"))
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::Invariant(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Invariant(e.to_string()))
}

fn write_row(w: &mut csv::Writer<Vec<u8>>, row: Vec<String>) -> Result<()> {
    w.write_record(row).map_err(|e| Error::Invariant(e.to_string()))
}

fn join(curves: &[SymFCurve]) -> String {
    curves.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("; ")
}

/// Extreme rays of the F-cone of `M_{0,n}/S_n`, one row per ray.
pub fn rays_csv(n: usize) -> Result<String> {
    let rays = fcone_rays(n)?;
    let catalog = annotation_catalog(n)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = delta_header(n).collect();
    header.extend(["orthogonal".into(), "annotations".into()]);
    write_row(&mut w, header)?;
    for ray in rays {
        let mut row: Vec<String> = ray.vector.iter().map(|x| x.to_string()).collect();
        row.push(join(&ray.orthogonal));
        row.push(annotate(&catalog, &ray.vector)?.join("; "));
        write_row(&mut w, row)?;
    }
    finish(w)
}

/// F-curve class vectors for `n`, named `C1, C2, …` in enumeration order.
pub fn fcurves_csv(n: usize) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["name".to_string(), "curve".to_string()];
    header.extend(delta_header(n));
    write_row(&mut w, header)?;
    for (i, c) in enumerate_sym_fcurves(n)?.iter().enumerate() {
        let mut row = vec![format!("C{}", i + 1), c.to_string()];
        row.extend(c.class_vector().iter().map(|x| x.to_string()));
        write_row(&mut w, row)?;
    }
    finish(w)
}

/// The certificate blocks of [`t3_certificate`], one row per F-curve.
pub fn t3_certificates_csv(n: usize) -> Result<String> {
    let blocks = t3_certificate(n)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["block".to_string(), "curve".to_string()];
    header.extend(delta_header(n));
    write_row(&mut w, header)?;
    for block in blocks {
        for c in &block.curves {
            let mut row = vec![block.name.clone(), c.to_string()];
            row.extend(c.class_vector().iter().map(|x| x.to_string()));
            write_row(&mut w, row)?;
        }
    }
    finish(w)
}

/// Renders a named table. `n` is only read by `t3-certificates`.
pub fn table(name: &str, n: Option<usize>) -> Result<String> {
    match name {
        "n6" => rays_csv(6),
        "n7" => rays_csv(7),
        "n9" => rays_csv(9),
        "n10" => rays_csv(10),
        "n10-fcurves" => fcurves_csv(10),
        "t3-certificates" => {
            let n = n.unwrap_or(12);
            ensure!(n >= 6 && n.is_multiple_of(3), "t3-certificates needs n a multiple of 3, n >= 6 (got {n})");
            t3_certificates_csv(n)
        }
        _ => Err(Error::Invalid(format!("unknown table {name:?}; expected one of {}", TABLE_NAMES.join(", ")))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n10_fcurves() {
        let t = table("n10-fcurves", None).unwrap();
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines[0], "name,curve,D2,D3,D4,D5");
        assert_eq!(lines[1], "C1,\"F_{7,1,1,1}\",3,-1,0,0");
        assert_eq!(lines.len(), 10);
    }

    #[test]
    fn n6_rays() {
        let t = table("n6", None).unwrap();
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines[0], "D2,D3,orthogonal,annotations");
        assert_eq!(lines.len(), 3);
        assert!(lines[1].starts_with("1,3,"));
        assert!(lines[2].starts_with("2,1,"));
    }

    #[test]
    fn t3_rows() {
        let t = table("t3-certificates", Some(12)).unwrap();
        assert_eq!(t.lines().count(), 5);
        assert!(table("t3-certificates", Some(10)).is_err());
        assert!(table("n11", None).is_err());
    }
}
