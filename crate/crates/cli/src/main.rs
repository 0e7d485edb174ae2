//! `cyclic-nef`: divisor classes from cyclic covering morphisms on `M_{0,n}`.
//!
//! Exit codes: 0 success or an affirmative verdict, 1 a mathematical negative
//! (not F-nef, not extremal), 2 a usage error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclic_nef::cyclic::{
    conformal_blocks_class, eigen_class, hodge_class, log_canonical_class, p5_class, pullback_boundary, pullback_combo,
    symmetric_eigen_det, symmetric_weighted_pullbacks, WeightData,
};
use cyclic_nef::eigenforms::eigen_rank_degree_fcurve;
use cyclic_nef::exactlin::{primitive_ray, Rational};
use cyclic_nef::fcone::{annotate, annotation_catalog, extremal_report, fcone_rays, fnef_report};
use cyclic_nef::moduli::{enumerate_sym_fcurves, psi_expand, symmetrize, sym_pairing, tk_pairing};
use cyclic_nef::tables::{table, TABLE_NAMES};
use cyclic_nef::{Error, SymDivisor, SymFCurve};
use num_traits::Zero;
use serde_json::json;

#[derive(Parser)]
#[command(name = "cyclic-nef", version, about = "Divisor classes from cyclic covering morphisms on M_{0,n}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a divisor class.
    Class(ClassArgs),
    /// Intersect a divisor with F-curves or a test curve T_k.
    Pair {
        divisor: String,
        #[arg(long)]
        n: usize,
        /// F-curve parts a,b,c,d (all F-curves if omitted).
        #[arg(long, value_delimiter = ',')]
        curve: Option<Vec<usize>>,
        #[arg(long, conflicts_with = "curve")]
        tk: Option<usize>,
    },
    /// Check a divisor against every F-curve.
    Fnef {
        divisor: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Certify that an F-nef divisor spans an extremal ray of the F-cone.
    Extremal {
        divisor: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Extreme rays of the symmetric F-cone.
    Rays {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        annotate: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print a reproducible table as CSV.
    Table {
        name: String,
        /// `n` for t3-certificates.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Rank and degree of the eigenbundles over the F-curve F_{a,b,c,d}.
    Eigenrank {
        #[arg(value_delimiter = ',', required = true)]
        parts: Vec<i64>,
        #[arg(long)]
        p: i64,
        #[arg(long)]
        j: Option<i64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Hodge,
    Boundary,
    Weighted,
    Eigen,
    Cb,
    Combo,
    P5,
    Logcanonical,
}

#[derive(Args)]
struct ClassArgs {
    kind: Kind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<i64>,
    #[arg(long)]
    j: Option<i64>,
    /// Branch weights d_1,…,d_n.
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<i64>>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    irr: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    red: Option<Rational>,
    /// Print the pure boundary expansion and its primitive ray.
    #[arg(long)]
    expand: bool,
    #[arg(long)]
    json: bool,
}

enum Failure {
    Usage(String),
    Negative,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn need<T>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("missing --{flag}")))
}

fn weight_data(a: &ClassArgs) -> Result<WeightData, Failure> {
    let p = need(a.p, "p")?;
    Ok(match &a.weights {
        Some(d) => {
            if let Some(n) = a.n {
                if n != d.len() {
                    return Err(Failure::Usage(format!("--n {n} but {} weights given", d.len())));
                }
            }
            WeightData::new(d.clone(), p)?
        }
        None => WeightData::unweighted(need(a.n, "n")?, p)?,
    })
}

fn coefficient(c: &Option<Rational>, default: i64) -> Rational {
    c.clone().unwrap_or_else(|| Rational::from_integer(default.into()))
}

fn build_class(a: &ClassArgs) -> Result<Vec<(&'static str, SymDivisor)>, Failure> {
    let single = |d| Ok(vec![("class", d)]);
    match a.kind {
        Kind::Hodge => single(hodge_class(need(a.n, "n")?, need(a.p, "p")?)?),
        Kind::Boundary => {
            let (irr, red) = pullback_boundary(need(a.n, "n")?, need(a.p, "p")?)?;
            Ok(vec![("delta_irr", irr), ("delta_red", red)])
        }
        Kind::Weighted => {
            let w = weight_data(a)?;
            let (l, i, r) = symmetric_weighted_pullbacks(&w);
            let class = &(&(&l * &coefficient(&a.lambda, 1)) + &(&i * &coefficient(&a.irr, 0)))
                + &(&r * &coefficient(&a.red, 0));
            single(class)
        }
        Kind::Eigen => {
            let j = need(a.j, "j")?;
            match &a.weights {
                Some(_) => single(symmetric_eigen_det(&weight_data(a)?, j)?),
                None => single(eigen_class(need(a.n, "n")?, need(a.p, "p")?, j)?),
            }
        }
        Kind::Cb => {
            let w = weight_data(a)?;
            if w.n() <= cyclic_nef::moduli::MAX_FULL_N {
                single(symmetrize(&conformal_blocks_class(&w)?))
            } else {
                let p = Rational::from_integer(w.p().into());
                single(&symmetric_eigen_det(&w, 1)? * &p)
            }
        }
        Kind::Combo => single(pullback_combo(
            need(a.n, "n")?,
            need(a.p, "p")?,
            &coefficient(&a.lambda, 0),
            &coefficient(&a.irr, 0),
            &coefficient(&a.red, 0),
        )?),
        Kind::P5 => single(p5_class(need(a.n, "n")?, need(a.j, "j")?)?),
        Kind::Logcanonical => single(log_canonical_class(need(a.n, "n")?, need(a.p, "p")?)?),
    }
}

fn ray_text(d: &SymDivisor) -> Option<String> {
    let v = d.delta_vector();
    if v.iter().all(Zero::is_zero) {
        return None;
    }
    let r = primitive_ray(&v);
    let terms: Vec<String> = r.iter().enumerate().map(|(i, c)| format!("{c}*D{}", i + 2)).collect();
    Some(terms.join(" + ").replace("+ -", "- "))
}

fn cmd_class(a: &ClassArgs) -> Outcome {
    let classes = build_class(a)?;
    if a.json {
        let body: serde_json::Map<String, serde_json::Value> = classes
            .iter()
            .map(|(name, d)| {
                let mut v = d.to_json();
                v["expanded"] = psi_expand(d).to_json();
                (name.to_string(), v)
            })
            .collect();
        println!("{}", serde_json::Value::Object(body));
        return Ok(());
    }
    for (name, d) in &classes {
        let prefix = if classes.len() > 1 { format!("{name}: ") } else { String::new() };
        if a.expand {
            println!("{prefix}{}", psi_expand(d));
            if let Some(r) = ray_text(d) {
                println!("{prefix}ray {r}");
            }
        } else {
            println!("{prefix}{d}");
        }
    }
    Ok(())
}

/// A divisor literal, or plain boundary coordinates such as `(4,6,6,7)`.
fn parse_divisor(text: &str, n: usize) -> Result<SymDivisor, Failure> {
    let t = text.trim();
    let bare = t.trim_start_matches('(').trim_end_matches(')');
    if bare.contains(',') {
        let coords = bare
            .split(',')
            .map(|x| x.trim().parse::<Rational>().map_err(|_| Failure::Usage(format!("bad coordinate `{x}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(SymDivisor::from_deltas(n, coords)?);
    }
    Ok(SymDivisor::parse(t, n)?)
}

fn curves_list(curves: &[SymFCurve]) -> String {
    if curves.is_empty() {
        return "none".into();
    }
    curves.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}

fn cmd_pair(divisor: &str, n: usize, curve: &Option<Vec<usize>>, tk: Option<usize>) -> Outcome {
    let d = parse_divisor(divisor, n)?;
    if let Some(k) = tk {
        println!("T_{k}: {}", tk_pairing(&d, k)?);
        return Ok(());
    }
    let curves = match curve {
        Some(p) => {
            let [a, b, c, e] = p[..] else {
                return Err(Failure::Usage("--curve takes four parts a,b,c,d".into()));
            };
            let c = SymFCurve::new(a, b, c, e)?;
            if c.n() != n {
                return Err(Failure::Usage(format!("{c} is not an F-curve of M_0,{n}")));
            }
            vec![c]
        }
        None => enumerate_sym_fcurves(n)?,
    };
    for c in curves {
        println!("{c}: {}", sym_pairing(&d, &c)?);
    }
    Ok(())
}

fn cmd_fnef(divisor: &str, n: usize, as_json: bool) -> Outcome {
    ensure_n(n)?;
    let d = parse_divisor(divisor, n)?;
    let report = fnef_report(&d)?;
    let (zero, negative) = (report.zero(), report.negative());
    if as_json {
        let degrees: Vec<_> =
            report.degrees.iter().map(|(c, x)| json!({"curve": c.to_string(), "degree": x.to_string()})).collect();
        println!("{}", json!({"fnef": report.is_fnef(), "degrees": degrees}));
    } else {
        println!("{}", if report.is_fnef() { "F-nef" } else { "not F-nef" });
        println!("zero: {}", curves_list(&zero));
        if !negative.is_empty() {
            let listed: Vec<String> = report
                .degrees
                .iter()
                .filter(|(_, x)| x < &Rational::zero())
                .map(|(c, x)| format!("{c} ({x})"))
                .collect();
            println!("negative: {}", listed.join(", "));
        }
    }
    if report.is_fnef() { Ok(()) } else { Err(Failure::Negative) }
}

fn cmd_extremal(divisor: &str, n: usize, as_json: bool) -> Outcome {
    ensure_n(n)?;
    let d = parse_divisor(divisor, n)?;
    let report = match extremal_report(&d) {
        Ok(r) => r,
        Err(Error::Invalid(msg)) if msg.starts_with("divisor is not F-nef") => {
            eprintln!("{msg}");
            return Err(Failure::Negative);
        }
        Err(e) => return Err(e.into()),
    };
    let verdict = report.is_extremal();
    if as_json {
        let names = |v: &[SymFCurve]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
        println!(
            "{}",
            json!({
                "extremal": verdict,
                "rank": report.rank,
                "target": report.target,
                "orthogonal": names(&report.orthogonal),
                "certificate": names(&report.certificate),
            })
        );
    } else {
        println!("{}", if verdict { "extremal" } else { "not extremal" });
        println!("rank {} of {}", report.rank.min(report.target), report.target);
        println!("orthogonal: {}", curves_list(&report.orthogonal));
        println!("certificate: {}", curves_list(&report.certificate));
    }
    if verdict { Ok(()) } else { Err(Failure::Negative) }
}

fn ensure_n(n: usize) -> Outcome {
    if n < 4 {
        return Err(Failure::Usage(format!("n must be at least 4 (got {n})")));
    }
    Ok(())
}

fn cmd_rays(n: usize, with_labels: bool, as_json: bool) -> Outcome {
    if n < 5 {
        return Err(Failure::Usage(format!("the F-cone needs n >= 5 (got {n})")));
    }
    let rays = fcone_rays(n)?;
    let catalog = if with_labels { annotation_catalog(n)? } else { Vec::new() };
    let mut rows = Vec::new();
    for r in &rays {
        let labels = annotate(&catalog, &r.vector)?;
        rows.push((r, labels));
    }
    if as_json {
        let basis: Vec<String> = (2..=n / 2).map(|k| format!("D{k}")).collect();
        let rays: Vec<_> = rows
            .iter()
            .map(|(r, labels)| {
                json!({
                    "vector": r.vector.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "orthogonal": r.orthogonal.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "annotations": labels,
                })
            })
            .collect();
        println!("{}", json!({"basis": basis, "rays": rays}));
        return Ok(());
    }
    for (r, labels) in rows {
        let v: Vec<String> = r.vector.iter().map(|x| x.to_string()).collect();
        let mut line = format!("({})  {}", v.join(","), curves_list(&r.orthogonal));
        if with_labels {
            line.push_str("  ");
            line.push_str(&if labels.is_empty() { "-".to_string() } else { labels.join("; ") });
        }
        println!("{line}");
    }
    Ok(())
}

fn cmd_table(name: &str, n: Option<usize>) -> Outcome {
    if !TABLE_NAMES.contains(&name) {
        return Err(Failure::Usage(format!("unknown table `{name}`; expected one of {}", TABLE_NAMES.join(", "))));
    }
    print!("{}", table(name, n)?);
    Ok(())
}

fn cmd_eigenrank(parts: &[i64], p: i64, j: Option<i64>) -> Outcome {
    let [a, b, c, d] = parts else {
        return Err(Failure::Usage("expected four parts a,b,c,d".into()));
    };
    let js: Vec<i64> = match j {
        Some(j) => vec![j],
        None => (1..p.max(1)).collect(),
    };
    println!("j,rank,degree");
    for j in js {
        let (rank, degree) = eigen_rank_degree_fcurve(*a, *b, *c, *d, p, j)?;
        println!("{j},{rank},{degree}");
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match &cli.command {
        Command::Class(a) => cmd_class(a),
        Command::Pair { divisor, n, curve, tk } => cmd_pair(divisor, *n, curve, *tk),
        Command::Fnef { divisor, n, json } => cmd_fnef(divisor, *n, *json),
        Command::Extremal { divisor, n, json } => cmd_extremal(divisor, *n, *json),
        Command::Rays { n, annotate, json } => cmd_rays(*n, *annotate, *json),
        Command::Table { name, n } => cmd_table(name, *n),
        Command::Eigenrank { parts, p, j } => cmd_eigenrank(parts, *p, *j),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinates_parse() {
        let d = parse_divisor("(4,6,6,7)", 10).ok().unwrap();
        assert_eq!(d.delta_vector(), cyclic_nef::exactlin::int_vector(&[4, 6, 6, 7]));
        assert!(parse_divisor("1,2", 10).is_err());
        assert_eq!(parse_divisor("2*psi", 6).ok().unwrap(), SymDivisor::psi(6).unwrap() * Rational::from_integer(2.into()));
    }
}
