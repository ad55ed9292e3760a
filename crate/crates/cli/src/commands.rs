use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use bkk_core::generators::random_convex_polygon;
use bkk_core::io::{from_json, BigIntValue, BinomialDocument, MatrixDocument, PointsDocument, SystemDocument};
use bkk_core::{
    BigInt, CertificateItem, LiftingFunction, MixedSubdivision, PointConfiguration, RootCount, RootMode, RootSet,
    Strategy,
};
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] bkk_core::Error),
    #[error("cannot read {path}: {message}")]
    Io { path: PathBuf, message: String },
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::Io { .. } => "io",
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// A command's result in both presentations.
pub struct Output {
    pub text: String,
    pub json: Value,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.to_owned(), message: e.to_string() })
}

fn in_file<T>(path: &Path, r: bkk_core::Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        bkk_core::Error::Parse(m) => bkk_core::Error::Parse(format!("{}: {m}", path.display())).into(),
        other => other.into(),
    })
}

fn points_doc(path: &Path) -> Result<PointsDocument> {
    in_file(path, from_json(&read(path)?))
}

fn system_doc(path: &Path) -> Result<bkk_core::PolynomialSystem> {
    let doc: SystemDocument = in_file(path, from_json(&read(path)?))?;
    in_file(path, doc.system())
}

fn configurations(paths: &[PathBuf]) -> Result<Vec<PointConfiguration>> {
    paths.iter().map(|p| in_file(p, points_doc(p)?.configuration())).collect()
}

fn int(v: &BigInt) -> Value {
    serde_json::to_value(BigIntValue(v.clone())).expect("integers serialize")
}

fn ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

fn matrix_json(m: &bkk_core::IntegerMatrix) -> Value {
    serde_json::to_value(MatrixDocument::from_matrix(m)).expect("matrices serialize")["rows"].clone()
}

fn tuple(v: &[impl ToString]) -> String {
    format!("({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
}

pub fn hnf(path: &Path) -> Result<Output> {
    let doc: MatrixDocument = in_file(path, from_json(&read(path)?))?;
    let m = in_file(path, doc.matrix())?;
    let f = bkk_core::hermite_factorization(&m);
    let text = format!(
        "U =\n{}H =\n{}rank: {}\npivot columns: {}\npivot product: {}\n",
        f.u,
        f.h,
        f.rank,
        tuple(&f.pivot_columns.iter().map(|c| c + 1).collect::<Vec<_>>()),
        f.pivot_product
    );
    let json = json!({
        "u": matrix_json(&f.u),
        "h": matrix_json(&f.h),
        "rank": f.rank,
        "pivot_columns": f.pivot_columns,
        "pivot_product": int(&f.pivot_product),
    });
    Ok(Output { text, json })
}

fn binomial_system(path: &Path) -> Result<bkk_core::BinomialSystem> {
    let doc: BinomialDocument = in_file(path, from_json(&read(path)?))?;
    in_file(path, doc.system())
}

pub fn binomial_count(path: &Path) -> Result<Output> {
    let s = binomial_system(path)?;
    Ok(match bkk_core::count_torus_roots(s.exponents())? {
        RootCount::Finite(c) => Output { text: format!("{c}\n"), json: json!({ "count": int(&c) }) },
        RootCount::NonFinite => Output {
            text: "non-finite: det E = 0, so there are no roots or infinitely many\n".into(),
            json: json!({ "count": Value::Null, "non_finite": true }),
        },
    })
}

pub fn binomial_solve(path: &Path, precision: usize, tolerance: f64, symbolic: bool) -> Result<Output> {
    let s = binomial_system(path)?;
    let mode = if symbolic { RootMode::ExactSymbolic } else { RootMode::Numeric { tolerance } };
    match bkk_core::enumerate_roots(&s, mode)? {
        RootSet::Symbolic(t) => {
            let eqs = t.equations();
            let text = eqs.iter().map(|e| format!("{e}\n")).collect();
            let json = json!({
                "u": matrix_json(&t.u),
                "h": matrix_json(&t.h),
                "equations": eqs,
                "count": int(&t.diagonal().iter().product()),
            });
            Ok(Output { text, json })
        }
        RootSet::Numeric(roots) => {
            let mut text = String::new();
            for x in &roots {
                let coords: Vec<String> = x
                    .iter()
                    .map(|z| format!("{:.p$}{:+.p$}i", z.re, z.im, p = precision))
                    .collect();
                writeln!(text, "{}", coords.join("  ")).expect("writing to a string");
            }
            let json = json!({
                "count": roots.len(),
                "roots": roots.iter().map(|x| x.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>()).collect::<Vec<_>>(),
            });
            Ok(Output { text, json })
        }
    }
}

pub fn volume(path: &Path, seed: u64) -> Result<Output> {
    let a = configurations(&[path.to_owned()])?.remove(0);
    let v = bkk_core::geometry::normalized_volume_seeded(&a, seed)?;
    let e = bkk_core::euclidean_volume(&a)?;
    Ok(Output {
        text: format!("normalized volume: {v}\neuclidean volume: {e}\n"),
        json: json!({ "normalized": int(&v), "euclidean": e.to_string() }),
    })
}

/// Parses `1,0,0;2,3` into one lifting per configuration.
fn parse_lifts(spec: &str) -> Result<Vec<Vec<i64>>> {
    spec.split(';')
        .map(|group| {
            group
                .split(',')
                .map(|v| {
                    v.trim()
                        .parse::<i64>()
                        .map_err(|_| bkk_core::Error::Parse(format!("bad lift value {v:?}")).into())
                })
                .collect()
        })
        .collect()
}

pub fn subdivide(paths: &[PathBuf], lifts: Option<&str>, mixed_only: bool, seed: u64) -> Result<Output> {
    let docs: Vec<PointsDocument> = paths.iter().map(|p| points_doc(p)).collect::<Result<_>>()?;
    let configs: Vec<PointConfiguration> =
        docs.iter().zip(paths).map(|(d, p)| in_file(p, d.configuration())).collect::<Result<_>>()?;
    let explicit: Option<Vec<LiftingFunction>> = match lifts {
        Some(spec) => {
            let values = parse_lifts(spec)?;
            if values.len() != configs.len() {
                return Err(bkk_core::Error::Dimension(format!(
                    "{} liftings for {} configurations",
                    values.len(),
                    configs.len()
                ))
                .into());
            }
            Some(values.into_iter().map(LiftingFunction::explicit).collect())
        }
        None => {
            let stored: Vec<Option<LiftingFunction>> = docs.iter().map(|d| d.lifting()).collect::<bkk_core::Result<_>>()?;
            match stored.iter().filter(|l| l.is_some()).count() {
                0 => None,
                k if k == stored.len() => Some(stored.into_iter().map(Option::unwrap).collect()),
                _ => {
                    return Err(bkk_core::Error::InvalidInput(
                        "either every configuration or none must carry lifts".into(),
                    )
                    .into())
                }
            }
        }
    };
    let sub = match explicit {
        Some(l) => bkk_core::induced_mixed_subdivision(&configs, &l)?,
        None => bkk_core::random_generic_lifting(&configs, seed, None)?,
    };
    Ok(render_subdivision(&sub, mixed_only))
}

fn render_subdivision(sub: &MixedSubdivision, mixed_only: bool) -> Output {
    let square = sub.inputs().len() == sub.dim();
    let mut text = String::new();
    let mut cells = Vec::new();
    let shown = sub.cells().iter().filter(|c| !mixed_only || c.is_mixed());
    for (i, cell) in shown.enumerate() {
        let volume = cell.normalized_volume().expect("cells are valid configurations");
        let contribution = if square { cell.mixed_contribution() } else { None };
        let parts: Vec<String> = cell.parts.iter().map(ToString::to_string).collect();
        write!(
            text,
            "cell {}: type {} witness {} volume {volume} parts {}",
            i + 1,
            tuple(&cell.cell_type),
            tuple(&cell.witness),
            parts.join(" + ")
        )
        .expect("writing to a string");
        if let Some(c) = &contribution {
            write!(text, " mixed contribution {c}").expect("writing to a string");
        }
        text.push('\n');
        cells.push(json!({
            "type": cell.cell_type,
            "witness": ints(&cell.witness),
            "indices": cell.indices,
            "parts": cell.parts.iter().map(|p| p.points().to_vec()).collect::<Vec<_>>(),
            "volume": int(&volume),
            "mixed_contribution": contribution.as_ref().map(int),
        }));
    }
    let inputs: Vec<PointsDocument> = sub
        .inputs()
        .iter()
        .zip(sub.lifts())
        .map(|(a, l)| PointsDocument { lifts: Some(l.values().to_vec()), ..PointsDocument::from_configuration(a) })
        .collect();
    let lifts: Vec<String> = sub
        .lifts()
        .iter()
        .map(|l| l.values().iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
        .collect();
    writeln!(text, "lifts: {}", lifts.join(";")).expect("writing to a string");
    writeln!(text, "certified generic: {}", sub.is_certified_generic()).expect("writing to a string");
    let json = json!({
        "inputs": inputs,
        "cells": cells,
        "certified_generic": sub.is_certified_generic(),
    });
    Output { text, json }
}

pub fn mixed_volume(paths: &[PathBuf], strategy: Strategy, certificate: bool, seed: u64) -> Result<Output> {
    let configs = configurations(paths)?;
    let r = bkk_core::mixed_volume(&configs, strategy, seed)?;
    let mut text = format!("mixed volume: {} ({})\n", r.value, r.method.name());
    let mut entries = Vec::new();
    for e in r.certificate.iter().flatten() {
        match &e.item {
            CertificateItem::Cell(cell) => {
                let parts: Vec<String> = cell.parts.iter().map(ToString::to_string).collect();
                if certificate {
                    writeln!(text, "  cell {} witness {}: {}", parts.join(" + "), tuple(&cell.witness), e.contribution)
                        .expect("writing to a string");
                }
                entries.push(json!({
                    "cell": cell.parts.iter().map(|p| p.points().to_vec()).collect::<Vec<_>>(),
                    "witness": ints(&cell.witness),
                    "contribution": int(&e.contribution),
                }));
            }
            CertificateItem::Strip { from, to, vertex } => {
                if certificate {
                    writeln!(text, "  strip {} -> {} against {}: {}", tuple(from), tuple(to), tuple(vertex), e.contribution)
                        .expect("writing to a string");
                }
                entries.push(json!({
                    "edge": [from, to],
                    "vertex": vertex,
                    "contribution": int(&e.contribution),
                }));
            }
        }
    }
    let json = json!({
        "value": int(&r.value),
        "method": r.method.name(),
        "certificate": r.certificate.as_ref().map(|_| entries),
    });
    Ok(Output { text, json })
}

pub fn init(path: &Path, weight: &[i64]) -> Result<Output> {
    let f = system_doc(path)?;
    let g = bkk_core::initial_term_system(&f, weight)?;
    Ok(Output { text: g.to_string(), json: serde_json::to_value(SystemDocument::from_system(&g)).expect("serializes") })
}

pub fn toric_ideal(path: &Path) -> Result<Output> {
    let a = configurations(&[path.to_owned()])?.remove(0);
    let t = bkk_core::toric_ideal_binomials(&a)?;
    let mut text: String = t.relations.iter().map(|r| format!("{r}\n")).collect();
    writeln!(text, "h = {}", t.h).expect("writing to a string");
    let relations: Vec<Value> = t
        .relations
        .iter()
        .map(|r| json!({ "plus": ints(&r.plus), "minus": ints(&r.minus), "text": r.to_string() }))
        .collect();
    Ok(Output { text, json: json!({ "relations": relations, "h": int(&t.h) }) })
}

pub fn cayley(paths: &[PathBuf]) -> Result<Output> {
    let configs = configurations(paths)?;
    let c = bkk_core::cayley_configuration(&configs)?;
    let text = c.points().iter().map(|p| format!("{}\n", tuple(p))).collect();
    Ok(Output { text, json: serde_json::to_value(PointsDocument::from_configuration(&c)).expect("serializes") })
}

pub fn bounds(path: &Path) -> Result<Output> {
    let f = system_doc(path)?;
    let r = bkk_core::bound_report(&f)?;
    let show = |v: &Option<BigInt>| v.as_ref().map_or_else(|| "n/a (not square)".to_string(), ToString::to_string);
    let rows = [
        ("bezout", show(&r.bezout)),
        ("multigraded", show(&r.multigraded)),
        ("kushnirenko (union of supports)", r.kushnirenko_union.to_string()),
        ("bkk", show(&r.bkk)),
        ("connected components", format!("{} ({})", r.component_bound, r.branch.label())),
    ];
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let text = rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect();
    let opt = |v: &Option<BigInt>| v.as_ref().map(int);
    let json = json!({
        "bezout": opt(&r.bezout),
        "multigraded": opt(&r.multigraded),
        "kushnirenko_union": int(&r.kushnirenko_union),
        "bkk": opt(&r.bkk),
        "component_bound": int(&r.component_bound),
        "component_branch": r.branch.label(),
    });
    Ok(Output { text, json })
}

fn median(mut v: Vec<Duration>) -> Duration {
    v.sort();
    v[v.len() / 2]
}

pub fn bench_mixed_area(sizes: &[usize], runs: usize, seed: u64) -> Result<Output> {
    if runs == 0 || sizes.iter().any(|&n| n < 3) {
        return Err(bkk_core::Error::InvalidInput("need at least one run and sizes of at least 3".into()).into());
    }
    let mut text = String::from("n,hull_ms,strips,total_ms\n");
    let mut rows = Vec::new();
    for &n in sizes {
        let p = random_convex_polygon(n, seed);
        let q = random_convex_polygon(n, seed.wrapping_add(1));
        let (mut hull, mut total, mut strips) = (Vec::new(), Vec::new(), 0);
        for _ in 0..runs {
            bkk_core::mixed_area_fast_instrumented(&p, &q, |s| {
                hull.push(s.hull_time);
                total.push(s.total_time);
                strips = s.strips;
            })?;
        }
        let (h, t) = (median(hull).as_secs_f64() * 1e3, median(total).as_secs_f64() * 1e3);
        writeln!(text, "{n},{h:.3},{strips},{t:.3}").expect("writing to a string");
        rows.push(json!({ "n": n, "hull_ms": h, "strips": strips, "total_ms": t }));
    }
    Ok(Output { text, json: Value::Array(rows) })
}
