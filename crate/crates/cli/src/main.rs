use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use altkit::catalog::{self, Family, FamilyParams, TnParams, TpParams};
use altkit::claims::{run_claims, SuiteOptions};
use altkit::identities::{is_division_sampled, CSpan, IdentityReport};
use altkit::io::{algebra_to_json, load_algebra};
use altkit::lie::{check_jacobi, classify_lie, lieify, LieType};
use altkit::linalg::Matrix;
use altkit::scalar::{format_rational, parse_rational};
use altkit::structure::{commutative_nucleus, reflection_decompose_auto, Decomposed};
use altkit::units::{units_of, NewtonOptions, MAX_REPORTED_POINTS};
use altkit::{check_identity, classify_middle_c, Error, IdentityContext, IdentityKind, MiddleCClass, QAlgebra};
use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "altkit", version, about = "Identity checks, unit loci and classifications for small real algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the multiplication table (JSON output reloads with --file).
    Describe(Target),
    /// Check identities; exit 1 if any fails.
    Check {
        #[command(flatten)]
        target: Target,
        /// Identity to check (repeatable); all applicable ones if omitted.
        #[arg(long = "identity")]
        identities: Vec<IdentityKind>,
        /// Label spanning the distinguished copy of C together with 1.
        #[arg(long, default_value = "i")]
        c_elem: String,
        /// Also search for zero divisors.
        #[arg(long)]
        division: bool,
    },
    /// Locus of imaginary units q^2 = -1.
    Units(Target),
    /// Basis of the commutative nucleus.
    Nucleus(Target),
    /// Split a division algebra along a reflection.
    Decompose {
        #[command(flatten)]
        target: Target,
        /// Diagonal entries `1,1,-1,-1` or a JSON matrix given as rows.
        #[arg(long, allow_hyphen_values = true)]
        reflection: String,
    },
    /// Classify a tn (middle C-associative) or tp (reflection) algebra.
    Classify(Target),
    /// Commutator Lie algebra, Jacobi check and derived series.
    Lieify(Target),
    /// Re-derive every published claim; exit 0 iff all pass.
    VerifyPaper {
        #[command(flatten)]
        opts: Common,
        /// Run only the claims of one module.
        #[arg(long, value_parser = altkit::claims::MODULES)]
        only: Option<String>,
    },
}

#[derive(Args)]
struct Target {
    /// Catalog family: ak, tn, tc, tp, mplus, mzero, quaternions, complex.
    #[arg(long, visible_alias = "family", conflicts_with = "file", required_unless_present = "file")]
    algebra: Option<Family>,
    /// JSON algebra file.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Family parameter `name=value` (repeatable).
    #[arg(long = "param", value_parser = parse_param, allow_hyphen_values = true)]
    params: Vec<(String, altkit::Rational)>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Clone, Copy)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Tolerance for floating-point fallbacks.
    #[arg(long, env = "ALTKIT_EPS", default_value_t = altkit::scalar::DEFAULT_EPS)]
    eps: f64,
    #[arg(long, default_value_t = altkit::sampling::DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = altkit::sampling::DEFAULT_SAMPLES)]
    samples: usize,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

fn parse_param(s: &str) -> std::result::Result<(String, altkit::Rational), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected name=value, got {s:?}"))?;
    let v = parse_rational(v.trim()).map_err(|e| e.to_string())?;
    Ok((k.trim().to_string(), v))
}

/// A loaded algebra and, for catalog entries, its parameters.
struct Loaded {
    alg: QAlgebra,
    params: Option<FamilyParams>,
}

impl Target {
    fn load(&self) -> Result<Loaded> {
        if let Some(path) = &self.file {
            if !self.params.is_empty() {
                bail!(Usage("--param only applies to catalog families".into()));
            }
            let alg = load_algebra(path).map_err(|e| Usage(e.to_string()))?;
            return Ok(Loaded { alg, params: None });
        }
        let family = self.algebra.expect("clap enforces a source");
        let named: BTreeMap<_, _> = self.params.iter().cloned().collect();
        let params = FamilyParams::from_named(family, &named).map_err(|e| Usage(e.to_string()))?;
        let alg = catalog::build(&params).map_err(|e| Usage(e.to_string()))?;
        Ok(Loaded { alg, params: Some(params) })
    }
}

/// Bad input: exit code 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn emit(format: Format, value: &Value, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(value).expect("serializable")),
        Format::Text => println!("{}", text()),
    }
}

fn coords_text(labels: &[String], coords: &[Value]) -> String {
    let mut out = String::new();
    for (c, l) in coords.iter().zip(labels) {
        let c = c.as_str().map(str::to_string).unwrap_or_else(|| c.to_string());
        if c == "0" || c == "0.0" || c == "-0.0" {
            continue;
        }
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, c),
        };
        if out.is_empty() {
            out.push_str(if neg { "-" } else { "" });
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag == "1" || mag == "1.0" {
            out.push_str(l);
        } else {
            out.push_str(&format!("{mag} {l}"));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn describe(t: &Target) -> Result<bool> {
    let l = t.load()?;
    let mut v = algebra_to_json(&l.alg);
    if let Some(p) = &l.params {
        v["family"] = json!(p.family().cli_name());
        v["params"] = json!(p.describe());
    }
    emit(t.common.format, &v, || {
        let labels = l.alg.labels();
        let mut out = format!("dimension {}, basis {}\n", l.alg.dim(), labels.join(" "));
        for i in 0..l.alg.dim() {
            for j in 0..l.alg.dim() {
                let cell: Vec<Value> = l.alg.basis_product(i, j).iter().map(|c| json!(format_rational(c))).collect();
                out.push_str(&format!("{} * {} = {}\n", labels[i], labels[j], coords_text(labels, &cell)));
            }
        }
        out.trim_end().to_string()
    });
    Ok(true)
}

fn newton(c: &Common) -> NewtonOptions {
    NewtonOptions { seeds: c.samples, seed: c.seed, tol: c.eps.min(1e-6), ..Default::default() }
}

fn report_line(labels: &[String], kind: IdentityKind, holds: bool, witness: Option<&Value>) -> String {
    let Some(w) = witness else {
        return format!("{kind}: {}", if holds { "holds" } else { "fails" });
    };
    let el = |v: &Value| coords_text(labels, v.as_array().map(Vec::as_slice).unwrap_or(&[]));
    let args: Vec<String> = ["x", "y", "z"].iter().filter_map(|k| w.get(*k)).map(&el).collect();
    format!("{kind}: fails at ({}), defect {}", args.join(", "), el(&w["defect"]))
}

fn check(t: &Target, identities: &[IdentityKind], c_elem: &str, division: bool) -> Result<bool> {
    let l = t.load()?;
    let alg = &l.alg;
    let c = &t.common;
    let kinds: Vec<IdentityKind> = if identities.is_empty() {
        IdentityKind::ALL.into_iter().filter(|k| alg.is_unital() || !(k.needs_units() || k.needs_c_span())).collect()
    } else {
        identities.to_vec()
    };
    let mut all = true;
    let mut reports = Vec::new();
    let mut locus = None;
    for kind in kinds {
        let (value, holds) = if kind.needs_c_span() {
            let idx = alg.index_of(c_elem).ok_or_else(|| Usage(format!("no basis element labelled {c_elem:?}")))?;
            let span = CSpan::with_basis(alg, idx).map_err(|e| Usage(e.to_string()))?;
            let r = check_identity(alg, kind, &IdentityContext::with_c_span(span))?;
            (r.to_json(), r.holds)
        } else if kind.needs_units() {
            if locus.is_none() {
                locus = Some(units_of(alg, &newton(c))?);
            }
            let lo = locus.as_ref().unwrap();
            match lo.exact_units(alg) {
                Some(us) => {
                    let r = check_identity(alg, kind, &IdentityContext::with_units(us, true))?;
                    (r.to_json(), r.holds)
                }
                None => {
                    let fa = alg.to_float(c.eps);
                    let us = lo.float_units(&fa, c.samples.min(MAX_REPORTED_POINTS), c.seed)?;
                    let r: IdentityReport<f64> = check_identity(&fa, kind, &IdentityContext::with_units(us, false))?;
                    (r.to_json(), r.holds)
                }
            }
        } else {
            let r = check_identity(alg, kind, &IdentityContext::none())?;
            (r.to_json(), r.holds)
        };
        all &= holds;
        reports.push(value);
    }
    for r in &reports {
        let kind: IdentityKind = r["kind"].as_str().unwrap().parse()?;
        let w = r.get("witness").filter(|w| !w.is_null());
        emit(c.format, r, || report_line(alg.labels(), kind, r["holds"].as_bool().unwrap(), w));
    }
    if division {
        let d = is_division_sampled(alg, c.samples, c.seed)?;
        all &= d.no_zero_divisor_found;
        let v = d.to_json();
        emit(c.format, &v, || {
            if d.no_zero_divisor_found {
                format!("division: no zero divisor among {} probes", d.probes)
            } else {
                let a = coords_text(alg.labels(), v["witness"]["a"].as_array().map(Vec::as_slice).unwrap_or(&[]));
                format!("division: {a} has a singular {} multiplication operator", v["witness"]["side"].as_str().unwrap_or("?").to_lowercase())
            }
        });
    }
    Ok(all)
}

fn units(t: &Target) -> Result<bool> {
    let l = t.load()?;
    let c = &t.common;
    let locus = units_of(&l.alg, &newton(c))?;
    let v = locus.to_json(MAX_REPORTED_POINTS, c.seed);
    emit(c.format, &v, || {
        let eq = locus.equation.as_ref().map(|e| format!(": {e}")).unwrap_or_default();
        format!("{}{eq} ({} points listed)", v["kind"].as_str().unwrap_or("?"), v["points"].as_array().map_or(0, Vec::len))
    });
    Ok(true)
}

fn nucleus(t: &Target) -> Result<bool> {
    let l = t.load()?;
    let basis = commutative_nucleus(&l.alg)?;
    let rows: Vec<Vec<String>> = basis.iter().map(|e| e.coords().iter().map(format_rational).collect()).collect();
    let v = json!({ "dim": basis.len(), "basis": rows });
    emit(t.common.format, &v, || {
        let labels = l.alg.labels();
        let shown: Vec<String> = rows.iter().map(|r| coords_text(labels, &r.iter().map(|s| json!(s)).collect::<Vec<_>>())).collect();
        format!("commutative nucleus, dimension {}: {}", basis.len(), shown.join(", "))
    });
    Ok(true)
}

fn parse_reflection(s: &str, dim: usize) -> Result<Matrix<altkit::Rational>> {
    let s = s.trim();
    let m = if s.starts_with('[') {
        let v: Value = serde_json::from_str(s).map_err(|e| Usage(format!("--reflection: {e}")))?;
        let rows = v.as_array().ok_or_else(|| Usage("--reflection must be a list of rows".into()))?;
        let mut out = Vec::new();
        for r in rows {
            let cells = r.as_array().ok_or_else(|| Usage("--reflection rows must be arrays".into()))?;
            let row = cells
                .iter()
                .map(|c| match c {
                    Value::String(x) => parse_rational(x),
                    Value::Number(n) => parse_rational(&n.to_string()),
                    other => Err(Error::Parse(format!("bad matrix entry {other}"))),
                })
                .collect::<altkit::Result<Vec<_>>>()
                .map_err(|e| Usage(e.to_string()))?;
            out.push(row);
        }
        Matrix::from_rows(out)
    } else {
        let entries = s.split(',').map(|x| parse_rational(x.trim())).collect::<altkit::Result<Vec<_>>>().map_err(|e| Usage(e.to_string()))?;
        Matrix::diagonal(&entries)
    };
    if m.rows() != dim || m.cols() != dim {
        bail!(Usage(format!("--reflection must be {dim}x{dim}")));
    }
    Ok(m)
}

fn decompose(t: &Target, reflection: &str) -> Result<bool> {
    let l = t.load()?;
    let c = &t.common;
    let phi = parse_reflection(reflection, l.alg.dim())?;
    match reflection_decompose_auto(&l.alg, &phi, c.eps) {
        Ok(d) => {
            let ok = d.checks().all();
            let v = d.to_json();
            emit(c.format, &v, || {
                let p = d.tp_params_f64();
                let mode = if matches!(d, Decomposed::Exact(_)) { "exact" } else { "float" };
                format!(
                    "reflection decomposition ({mode}): Tp parameters ({}); checks {}",
                    p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "),
                    if ok { "pass" } else { "fail" }
                )
            });
            Ok(ok)
        }
        Err(e @ (Error::Reflection(_) | Error::Decomposition(_) | Error::NucleusContradiction(_))) => {
            let v = json!({ "ok": false, "error": e.to_string() });
            emit(c.format, &v, || format!("decomposition failed: {e}"));
            Ok(false)
        }
        Err(e) => Err(e.into()),
    }
}

fn classify(t: &Target) -> Result<bool> {
    let l = t.load()?;
    let c = &t.common;
    let tn = match &l.params {
        Some(FamilyParams::Tn(p)) => Some(p.clone()),
        Some(FamilyParams::Tp(_)) => None,
        _ => TnParams::recognize(&l.alg),
    };
    if let Some(p) = tn {
        let r = classify_middle_c(&p, c.eps, c.seed)?;
        let v = r.to_json();
        emit(c.format, &v, || match r.class {
            MiddleCClass::Unclassified => format!("unclassified: {}", r.reason.clone().unwrap_or_default()),
            class => format!("{} (witness {}, verified: {})", v["type"].as_str().unwrap_or(&format!("{class:?}")), v["witness"], r.witness_verified),
        });
        return Ok(r.class != MiddleCClass::Unclassified && r.witness_verified);
    }
    if matches!(l.params, Some(FamilyParams::Tp(_))) || TpParams::recognize(&l.alg).is_some() {
        let r = classify_lie(&lieify(&l.alg))?;
        let v = r.to_json();
        emit(c.format, &v, || {
            format!("{} (alpha = {}, beta = {}, derived dims {:?}, witness verified: {})", r.type_tag, v["alpha"], v["beta"], r.derived_dims, r.witness_verified)
        });
        return Ok(r.type_tag != LieType::Unrecognized && r.witness_verified);
    }
    bail!(Usage("classify needs an algebra with the tn or tp table shape".into()))
}

fn lieify_cmd(t: &Target) -> Result<bool> {
    let l = t.load()?;
    let lie = lieify(&l.alg);
    let jacobi = check_jacobi(&lie);
    let dims = altkit::lie::derived_dims(&lie);
    let class = if TpParams::recognize(&l.alg).is_some() { Some(classify_lie(&lie)?) } else { None };
    let v = json!({
        "brackets": lie.to_json(),
        "jacobi": jacobi.holds,
        "jacobi_witness": jacobi.witness.as_ref().map(|(idx, d)| json!({
            "basis": idx.map(|i| lie.labels()[i].clone()),
            "defect": d.iter().map(format_rational).collect::<Vec<_>>(),
        })),
        "derived_dims": dims,
        "classification": class.as_ref().map(|c| c.to_json()),
    });
    emit(t.common.format, &v, || {
        let mut out = format!("Jacobi: {}\nderived dims: {dims:?}", if jacobi.holds { "holds" } else { "fails" });
        if let Some(c) = &class {
            out.push_str(&format!("\ntype: {}", c.type_tag));
        }
        out
    });
    Ok(jacobi.holds)
}

fn verify_paper(opts: &Common, only: Option<&str>) -> Result<bool> {
    let suite = SuiteOptions { eps: opts.eps, seed: opts.seed, samples: opts.samples };
    let results = run_claims(&suite, only);
    for r in &results {
        emit(opts.format, &r.to_json(), || r.line());
    }
    let passed = results.iter().filter(|r| r.passed).count();
    let summary = json!({ "claims": results.len(), "passed": passed, "failed": results.len() - passed });
    emit(opts.format, &summary, || format!("{passed}/{} claims pass", results.len()));
    Ok(passed == results.len())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Describe(t) => describe(&t),
        Command::Check { target, identities, c_elem, division } => check(&target, &identities, &c_elem, division),
        Command::Units(t) => units(&t),
        Command::Nucleus(t) => nucleus(&t),
        Command::Decompose { target, reflection } => decompose(&target, &reflection),
        Command::Classify(t) => classify(&t),
        Command::Lieify(t) => lieify_cmd(&t),
        Command::VerifyPaper { opts, only } => verify_paper(&opts, only.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            let usage = e.downcast_ref::<Usage>().is_some()
                || matches!(e.downcast_ref::<Error>(), Some(Error::Param(_) | Error::Parse(_) | Error::Json(_) | Error::Context(_)));
            ExitCode::from(if usage { 2 } else { 1 })
        }
    }
}
