//! The set of imaginary units `{x : x² = -1}`.
//!
//! Tn-shaped algebras get an exact description: with `q = r + xi + yj + zk`
//! and `s = y² + z²` the equation splits into
//!
//! ```text
//! r² - x² + a s = -1,   2rx + b s = 0,   2ry + c s = 0,   2rz + d s = 0
//! ```
//!
//! which [`classify_locus_tn`] solves completely. Everything else goes through
//! Newton sampling.

use nalgebra::{DMatrix, DVector};
use num_traits::{Signed, Zero};
use rand::Rng;
use serde_json::{json, Value};

use crate::algebra::{Algebra, Element, Side};
use crate::catalog::TnParams;
use crate::error::{Error, Result};
use crate::linalg::norm;
use crate::sampling;
use crate::scalar::{format_rational, Rational, Scalar};

/// Double roots of `x² + 1` (such as `±i` in most Tn algebras) are only
/// resolved to about the square root of machine precision, so duplicates are
/// merged at no less than this distance.
pub const DEGENERATE_ROOT_RADIUS: f64 = 1e-6;

/// Cap on sample points carried in reports.
pub const MAX_REPORTED_POINTS: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LocusKind {
    FiniteSet,
    Sphere,
    HyperboloidTwoSheets,
    ParallelPlanes,
    /// A quadric in `span{i, j, k}` that is none of the three named shapes.
    QuadricGeneral,
    SampledCloud,
}

/// `x2·x² + y2·y² + z2·z² = rhs` in the coordinates of `x i + y j + z k`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadricEquation {
    pub x2: Rational,
    pub y2: Rational,
    pub z2: Rational,
    pub rhs: Rational,
}

impl QuadricEquation {
    /// The same equation scaled by -1 when no coefficient is positive, so
    /// `-x² - y² - z² = -1` reads `x² + y² + z² = 1`.
    pub fn normalized(&self) -> Self {
        let any_positive = [&self.x2, &self.y2, &self.z2].into_iter().any(|c| c.is_positive());
        if any_positive {
            self.clone()
        } else {
            Self { x2: -self.x2.clone(), y2: -self.y2.clone(), z2: -self.z2.clone(), rhs: -self.rhs.clone() }
        }
    }

    pub fn eval(&self, x: f64, y: f64, z: f64) -> f64 {
        self.x2.to_f64() * x * x + self.y2.to_f64() * y * y + self.z2.to_f64() * z * z - self.rhs.to_f64()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "x2": format_rational(&self.x2),
            "y2": format_rational(&self.y2),
            "z2": format_rational(&self.z2),
            "rhs": format_rational(&self.rhs),
            "text": self.to_string(),
        })
    }
}

impl std::fmt::Display for QuadricEquation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let eq = self.normalized();
        let mut out = String::new();
        for (c, var) in [(&eq.x2, "x"), (&eq.y2, "y"), (&eq.z2, "z")] {
            if c.is_zero() {
                continue;
            }
            let mag = Signed::abs(c);
            let sign = if c.is_negative() { "-" } else { "+" };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if mag != Rational::from_i64(1) {
                out.push_str(&format_rational(&mag));
            }
            out.push_str(&format!("{var}^2"));
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out} = {}", format_rational(&eq.rhs))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct UnitLocus {
    pub kind: LocusKind,
    /// Complete for `FiniteSet`; sampled otherwise.
    pub points: Vec<Vec<f64>>,
    /// Exact coordinates of `points` when every one is rational.
    pub exact_points: Option<Vec<Vec<Rational>>>,
    pub equation: Option<QuadricEquation>,
    /// Basis indices spanning the locus.
    pub ambient: Vec<usize>,
}

impl UnitLocus {
    pub fn is_empty(&self) -> bool {
        self.kind == LocusKind::FiniteSet && self.points.is_empty()
            || self.kind == LocusKind::SampledCloud && self.points.is_empty()
    }

    pub fn is_continuous(&self) -> bool {
        self.equation.is_some()
    }

    /// Membership test on `(r, x, y, z)` coordinates for the quadric kinds,
    /// nearest-point distance for the finite ones.
    pub fn contains(&self, coords: &[f64], tol: f64) -> bool {
        match &self.equation {
            Some(eq) if coords.len() == 4 => {
                coords[0].abs() <= tol && eq.eval(coords[1], coords[2], coords[3]).abs() <= tol
            }
            Some(_) => false,
            None => self.points.iter().any(|p| distance(p, coords) <= tol),
        }
    }

    /// Up to `m` points of a quadric locus, drawn deterministically from
    /// `seed`; the stored points for the other kinds.
    pub fn sample_points(&self, m: usize, seed: u64) -> Vec<Vec<f64>> {
        let Some(eq) = &self.equation else {
            return self.points.iter().take(m).cloned().collect();
        };
        let a = eq.y2.to_f64();
        let mut rng = sampling::rng(seed);
        let mut out = Vec::with_capacity(m);
        for n in 0..m {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let p = match self.kind {
                LocusKind::Sphere => {
                    // x² + |a|(y² + z²) = 1
                    let u = random_direction(&mut rng);
                    let s = (-a).sqrt();
                    vec![0.0, u[0], u[1] / s, u[2] / s]
                }
                LocusKind::ParallelPlanes => {
                    vec![0.0, sign, rng.gen_range(-2.0..=2.0), rng.gen_range(-2.0..=2.0)]
                }
                _ => {
                    // -x² + a(y² + z²) = -1 with a > 0
                    let (y, z): (f64, f64) = (rng.gen_range(-2.0..=2.0), rng.gen_range(-2.0..=2.0));
                    vec![0.0, sign * (1.0 + a * (y * y + z * z)).sqrt(), y, z]
                }
            };
            out.push(p);
        }
        out
    }

    pub fn to_json(&self, max_points: usize, seed: u64) -> Value {
        let points = self.sample_points(max_points, seed);
        json!({
            "kind": self.kind,
            "equation": self.equation.as_ref().map(QuadricEquation::to_json),
            "ambient": self.ambient,
            "complete": self.kind == LocusKind::FiniteSet,
            "points": match (&self.exact_points, self.kind) {
                (Some(exact), LocusKind::FiniteSet) => exact
                    .iter()
                    .take(max_points)
                    .map(|p| p.iter().map(format_rational).collect::<Vec<_>>())
                    .map(|p| json!(p))
                    .collect::<Vec<_>>(),
                _ => points.into_iter().map(|p| json!(p)).collect(),
            },
        })
    }

    /// The points as elements of `alg`, exact when available.
    pub fn exact_units(&self, alg: &Algebra<Rational>) -> Option<Vec<Element<Rational>>> {
        let pts = self.exact_points.as_ref()?;
        pts.iter().map(|p| alg.element(p.clone()).ok()).collect()
    }

    pub fn float_units(&self, alg: &Algebra<f64>, m: usize, seed: u64) -> Result<Vec<Element<f64>>> {
        self.sample_points(m, seed).into_iter().map(|p| alg.element(p)).collect()
    }
}

fn random_direction(rng: &mut impl Rng) -> [f64; 3] {
    loop {
        let v: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-1.0..=1.0));
        let n = norm(&v);
        if n > 1e-3 && n <= 1.0 {
            return v.map(|c| c / n);
        }
    }
}

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

/// `‖q² + 1‖ <= tol`; exact zero test in rational mode.
pub fn verify_unit<S: Scalar>(alg: &Algebra<S>, q: &Element<S>, tol: f64) -> Result<bool> {
    let one = alg.unit().ok_or_else(|| Error::Context("imaginary units need a unital algebra".into()))?;
    let r = alg.square(q)?.add(&one)?;
    if S::EXACT {
        return Ok(r.coords().iter().all(Zero::is_zero));
    }
    Ok(r.norm() <= tol)
}

/// Exact unit set of a Tn algebra.
pub fn classify_locus_tn(p: &TnParams) -> UnitLocus {
    let zero = Rational::zero();
    let one = Rational::from_i64(1);
    if p.b.is_zero() && p.c.is_zero() && p.d.is_zero() {
        let kind = if p.a.is_negative() {
            LocusKind::Sphere
        } else if p.a.is_zero() {
            LocusKind::ParallelPlanes
        } else {
            LocusKind::HyperboloidTwoSheets
        };
        return UnitLocus {
            kind,
            points: Vec::new(),
            exact_points: None,
            equation: Some(QuadricEquation { x2: -one.clone(), y2: p.a.clone(), z2: p.a.clone(), rhs: -one }),
            ambient: vec![1, 2, 3],
        };
    }

    let pm_i = |s: i64| vec![zero.clone(), Rational::from_i64(s), zero.clone(), zero.clone()];
    let mut exact = Some(vec![pm_i(1), pm_i(-1)]);
    let mut points = vec![vec![0.0, 1.0, 0.0, 0.0], vec![0.0, -1.0, 0.0, 0.0]];
    let mut ambient = vec![1];

    // Points with r ≠ 0: s = 4r²/m, x = -2br/m, y = -2cr/m, z = -2dr/m and
    // r² K = -1 with K = 1 + 4a/m - 4b²/m².
    let m = p.c.clone() * p.c.clone() + p.d.clone() * p.d.clone();
    if !m.is_zero() {
        let four = Rational::from_i64(4);
        let k = one.clone() + four.clone() * p.a.clone() / m.clone() - four * p.b.clone() * p.b.clone() / (m.clone() * m.clone());
        if k.is_negative() {
            let r2 = -one.clone() / k;
            let coords_for = |r: &Rational| {
                let two = Rational::from_i64(2);
                vec![
                    r.clone(),
                    -two.clone() * p.b.clone() * r.clone() / m.clone(),
                    -two.clone() * p.c.clone() * r.clone() / m.clone(),
                    -two * p.d.clone() * r.clone() / m.clone(),
                ]
            };
            match r2.sqrt_checked() {
                Some(r) => {
                    for rr in [r.clone(), -r] {
                        let c = coords_for(&rr);
                        points.push(c.iter().map(Scalar::to_f64).collect());
                        if let Some(e) = exact.as_mut() {
                            e.push(c);
                        }
                    }
                }
                None => {
                    let rf = r2.to_f64().sqrt();
                    let (b, c, d, mf) = (p.b.to_f64(), p.c.to_f64(), p.d.to_f64(), m.to_f64());
                    for r in [rf, -rf] {
                        points.push(vec![r, -2.0 * b * r / mf, -2.0 * c * r / mf, -2.0 * d * r / mf]);
                    }
                    exact = None;
                }
            }
            ambient = vec![0, 1, 2, 3];
        }
    }
    UnitLocus { kind: LocusKind::FiniteSet, points, exact_points: exact, equation: None, ambient }
}

#[derive(Debug, Clone, Copy)]
pub struct NewtonOptions {
    pub seeds: usize,
    pub seed: u64,
    pub tol: f64,
    pub max_iter: usize,
    /// Seeds are drawn uniformly from `[-radius, radius]^n`.
    pub radius: f64,
}

impl Default for NewtonOptions {
    fn default() -> Self {
        Self { seeds: 200, seed: sampling::DEFAULT_SEED, tol: crate::scalar::DEFAULT_EPS, max_iter: 120, radius: 2.0 }
    }
}

/// Newton iteration on `F(x) = x² + 1` from random seeds. The Jacobian
/// `L_x + R_x` is singular along continuous loci, so each step is the
/// minimum-norm least-squares correction.
pub fn solve_units_sampled<S: Scalar>(alg: &Algebra<S>, opts: &NewtonOptions) -> Result<UnitLocus> {
    let unit = alg
        .unit_coords()
        .ok_or_else(|| Error::Context("imaginary units need a unital algebra".into()))?
        .iter()
        .map(Scalar::to_f64)
        .collect::<Vec<_>>();
    let fa = alg.to_float(opts.tol);
    let n = fa.dim();
    let mut rng = sampling::rng(opts.seed);
    let mut found: Vec<Vec<f64>> = Vec::new();
    let dedup = (10.0 * opts.tol).max(DEGENERATE_ROOT_RADIUS);

    for _ in 0..opts.seeds {
        let start: Vec<f64> = (0..n).map(|_| rng.gen_range(-opts.radius..=opts.radius)).collect();
        let Some(p) = newton(&fa, &unit, start, opts)? else { continue };
        if found.iter().all(|q| distance(q, &p) > dedup) {
            found.push(p);
        }
    }
    found.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    Ok(UnitLocus {
        kind: LocusKind::SampledCloud,
        points: found,
        exact_points: None,
        equation: None,
        ambient: (0..n).collect(),
    })
}

fn residual(alg: &Algebra<f64>, unit: &[f64], x: &[f64]) -> Vec<f64> {
    let mut f = alg.mul_coords(x, x);
    for (fi, u) in f.iter_mut().zip(unit) {
        *fi += u;
    }
    f
}

fn newton(alg: &Algebra<f64>, unit: &[f64], mut x: Vec<f64>, opts: &NewtonOptions) -> Result<Option<Vec<f64>>> {
    let n = alg.dim();
    for _ in 0..opts.max_iter {
        let f = residual(alg, unit, &x);
        let fnorm = norm(&f);
        if !fnorm.is_finite() || fnorm > 1e12 {
            return Ok(None);
        }
        // Roots off the regular part of the locus converge only linearly, so
        // stop on step size rather than residual.
        if fnorm == 0.0 {
            break;
        }
        let e = alg.element(x.clone())?;
        let l = alg.mul_operator(&e, Side::Left)?.matrix;
        let r = alg.mul_operator(&e, Side::Right)?.matrix;
        let j = l.add(&r);
        let jm = DMatrix::from_row_slice(n, n, &j.to_rows().concat());
        let svd = jm.svd(true, true);
        let cutoff = svd.singular_values.max() * 1e-15;
        if cutoff == 0.0 {
            return Ok(None);
        }
        let Ok(step) = svd.solve(&DVector::from_vec(f), cutoff) else {
            return Ok(None);
        };
        let step_norm = step.norm();
        for (xi, s) in x.iter_mut().zip(step.iter()) {
            *xi -= s;
        }
        if step_norm <= 1e-14 * (1.0 + norm(&x)) {
            break;
        }
    }
    let ok = norm(&residual(alg, unit, &x)) <= opts.tol;
    Ok(ok.then_some(x))
}

/// Grid points `lo + t·step` (t = 0, 1, ...) on the coordinates `axes`, all
/// other coordinates zero, at which `‖x² + 1‖ <= tol`.
pub fn grid_search_units(alg: &Algebra<f64>, axes: &[usize], lo: f64, hi: f64, step: f64, tol: f64) -> Result<Vec<Vec<f64>>> {
    let unit = alg
        .unit_coords()
        .ok_or_else(|| Error::Context("imaginary units need a unital algebra".into()))?
        .to_vec();
    let n = alg.dim();
    if axes.iter().any(|&a| a >= n) {
        return Err(Error::Param("grid axis out of range".into()));
    }
    let ticks = ((hi - lo) / step).round() as usize + 1;
    let values: Vec<f64> = (0..ticks).map(|t| lo + t as f64 * step).collect();

    // sparse (i, j, k, c) list of the restricted table
    let mut terms = Vec::new();
    for (ai, &i) in axes.iter().enumerate() {
        for (aj, &j) in axes.iter().enumerate() {
            for (k, &c) in alg.basis_product(i, j).iter().enumerate() {
                if c != 0.0 {
                    terms.push((ai, aj, k, c));
                }
            }
        }
    }

    let mut hits = Vec::new();
    let mut idx = vec![0usize; axes.len()];
    let mut coords = vec![0.0; axes.len()];
    let mut out = vec![0.0; n];
    'grid: loop {
        for (c, &t) in coords.iter_mut().zip(&idx) {
            *c = values[t];
        }
        out.copy_from_slice(&unit);
        for &(a, b, k, c) in &terms {
            out[k] += c * coords[a] * coords[b];
        }
        if norm(&out) <= tol {
            let mut full = vec![0.0; n];
            for (&ax, &c) in axes.iter().zip(&coords) {
                full[ax] = c;
            }
            hits.push(full);
        }
        for pos in (0..idx.len()).rev() {
            idx[pos] += 1;
            if idx[pos] < ticks {
                continue 'grid;
            }
            idx[pos] = 0;
        }
        break;
    }
    Ok(hits)
}

/// Grid search on an `ak` table: the full space when `k = 1`, otherwise each
/// subspace `span{1, e1, v_i1, v_i2}` (a full grid has `25^(2k+2)` points).
pub fn grid_search_ak(alg: &Algebra<f64>, lo: f64, hi: f64, step: f64, tol: f64) -> Result<Vec<Vec<f64>>> {
    let n = alg.dim();
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::Param(format!("dimension {n} is not of the form 2k + 2")));
    }
    let mut hits: Vec<Vec<f64>> = Vec::new();
    for b in 0..(n - 2) / 2 {
        for h in grid_search_units(alg, &[0, 1, 2 + 2 * b, 3 + 2 * b], lo, hi, step, tol)? {
            if !hits.contains(&h) {
                hits.push(h);
            }
        }
    }
    Ok(hits)
}

/// Best available unit set: exact for Tn-shaped tables, Newton samples
/// otherwise.
pub fn units_of(alg: &Algebra<Rational>, opts: &NewtonOptions) -> Result<UnitLocus> {
    match TnParams::recognize(alg) {
        Some(p) => Ok(classify_locus_tn(&p)),
        None => solve_units_sampled(alg, opts),
    }
}
