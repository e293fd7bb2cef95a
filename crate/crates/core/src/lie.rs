//! Commutator Lie algebras and the classification of Tp brackets.
//!
//! In the basis `1, i, w, v` the Tp brackets are `[i,w] = -2v`, `[i,v] = 2w`,
//! `[v,w] = α 1 + β i` with `1` central. The classifier reads `(α, β)` off
//! the bracket tensor and builds an explicit basis change to a canonical
//! four-dimensional table.

use std::fmt;

use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::catalog::TpParams;
use crate::error::{Error, Result};
use crate::linalg::{coordinates_in, span_basis, Matrix};
use crate::scalar::{format_rational, Rational, Scalar};
use crate::structure::WitnessMatrix;

#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebra<S> {
    dim: usize,
    /// `[e_i, e_j] = sum_k b[(i*n + j)*n + k] e_k`.
    brackets: Vec<S>,
    labels: Vec<String>,
    eps: f64,
}

impl<S: Scalar> LieAlgebra<S> {
    pub fn new(brackets: Vec<S>, labels: Vec<String>, eps: f64) -> Result<Self> {
        let dim = labels.len();
        if brackets.len() != dim * dim * dim {
            return Err(Error::Dimension { expected: dim * dim * dim, found: brackets.len() });
        }
        let l = Self { dim, brackets, labels, eps };
        if !l.is_antisymmetric() {
            return Err(Error::InvalidAlgebra("brackets are not antisymmetric".into()));
        }
        Ok(l)
    }

    /// From `(i, j, coefficients of [e_i, e_j])` for `i < j`; the rest is
    /// filled in by antisymmetry.
    pub fn from_pairs(dim: usize, pairs: &[(usize, usize, Vec<S>)], eps: f64) -> Result<Self> {
        let mut b = vec![S::zero(); dim * dim * dim];
        for (i, j, v) in pairs {
            if v.len() != dim || *i >= dim || *j >= dim {
                return Err(Error::Dimension { expected: dim, found: v.len() });
            }
            for k in 0..dim {
                b[(i * dim + j) * dim + k] = v[k].clone();
                b[(j * dim + i) * dim + k] = -v[k].clone();
            }
        }
        let labels = (1..=dim).map(|i| format!("e{i}")).collect();
        Self::new(b, labels, eps)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[S] {
        let start = (i * self.dim + j) * self.dim;
        &self.brackets[start..start + self.dim]
    }

    pub fn bracket(&self, x: &[S], y: &[S]) -> Vec<S> {
        let n = self.dim;
        let mut out = vec![S::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi.clone() * yj.clone();
                for (k, c) in self.bracket_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = out[k].clone() + w.clone() * c.clone();
                    }
                }
            }
        }
        out
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                self.bracket_basis(i, j)
                    .iter()
                    .zip(self.bracket_basis(j, i))
                    .all(|(a, b)| (a.clone() + b.clone()).is_negligible(self.eps))
            })
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.iter().all(|c| c.is_negligible(self.eps))
    }

    pub fn to_float(&self) -> LieAlgebra<f64> {
        LieAlgebra {
            dim: self.dim,
            brackets: self.brackets.iter().map(Scalar::to_f64).collect(),
            labels: self.labels.clone(),
            eps: self.eps,
        }
    }

    /// Nonzero brackets `[e_i, e_j]`, `i < j`, keyed by labels.
    pub fn to_json(&self) -> Value {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let b = self.bracket_basis(i, j);
                if b.iter().all(|c| c.is_negligible(self.eps)) {
                    continue;
                }
                out.push(json!({
                    "x": self.labels[i],
                    "y": self.labels[j],
                    "bracket": b.iter().map(Scalar::to_json).collect::<Vec<_>>(),
                }));
            }
        }
        json!({ "dim": self.dim, "labels": self.labels, "brackets": out })
    }
}

/// `[x, y] = xy - yx`.
pub fn lieify<S: Scalar>(alg: &Algebra<S>) -> LieAlgebra<S> {
    let n = alg.dim();
    let mut b = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                b.push(alg.sc(i, j, k).clone() - alg.sc(j, i, k).clone());
            }
        }
    }
    LieAlgebra { dim: n, brackets: b, labels: alg.labels().to_vec(), eps: alg.eps() }
}

#[derive(Debug, Clone, PartialEq)]
pub struct JacobiReport<S> {
    pub holds: bool,
    /// First basis triple with a nonzero Jacobi sum, and the sum.
    pub witness: Option<([usize; 3], Vec<S>)>,
}

/// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0` on every basis triple.
pub fn check_jacobi<S: Scalar>(l: &LieAlgebra<S>) -> JacobiReport<S> {
    let n = l.dim;
    let e = |i: usize| {
        let mut v = vec![S::zero(); n];
        v[i] = S::one();
        v
    };
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (x, y, z) = (e(a), e(b), e(c));
                let t1 = l.bracket(&x, l.bracket_basis(b, c));
                let t2 = l.bracket(&y, l.bracket_basis(c, a));
                let t3 = l.bracket(&z, l.bracket_basis(a, b));
                let sum: Vec<S> = (0..n).map(|k| t1[k].clone() + t2[k].clone() + t3[k].clone()).collect();
                if !sum.iter().all(|s| s.is_negligible(l.eps)) {
                    return JacobiReport { holds: false, witness: Some(([a, b, c], sum)) };
                }
            }
        }
    }
    JacobiReport { holds: true, witness: None }
}

/// `L, [L,L], [[L,L],[L,L]], ...` until the dimension stops changing; the
/// repeated term (or the zero space) is included once.
pub fn derived_series<S: Scalar>(l: &LieAlgebra<S>) -> Vec<Vec<Vec<S>>> {
    let n = l.dim;
    let mut current: Vec<Vec<S>> = Matrix::<S>::identity(n).to_rows();
    let mut series = vec![current.clone()];
    loop {
        let mut brackets = Vec::new();
        for (a, x) in current.iter().enumerate() {
            for y in &current[a + 1..] {
                brackets.push(l.bracket(x, y));
            }
        }
        let next = span_basis(&brackets, n, l.eps);
        let done = next.len() == current.len() || next.is_empty();
        series.push(next.clone());
        if done {
            return series;
        }
        current = next;
    }
}

pub fn derived_dims<S: Scalar>(l: &LieAlgebra<S>) -> Vec<usize> {
    derived_series(l).iter().map(Vec::len).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum LieType {
    #[serde(rename = "g1_plus_g35")]
    G1PlusG35,
    #[serde(rename = "g1_plus_g37")]
    G1PlusG37,
    #[serde(rename = "g49_zero")]
    G49Zero,
    /// `ℝ ⊕ sl(2, ℝ)`: the split real form, reached when `β < 0`.
    #[serde(rename = "g1_plus_sl2r")]
    G1PlusSl2r,
    #[serde(rename = "unrecognized")]
    Unrecognized,
}

impl LieType {
    pub fn tag(self) -> &'static str {
        match self {
            LieType::G1PlusG35 => "g1_plus_g35",
            LieType::G1PlusG37 => "g1_plus_g37",
            LieType::G49Zero => "g49_zero",
            LieType::G1PlusSl2r => "g1_plus_sl2r",
            LieType::Unrecognized => "unrecognized",
        }
    }

    pub fn is_solvable(self) -> Option<bool> {
        match self {
            LieType::G1PlusG35 | LieType::G49Zero => Some(true),
            LieType::G1PlusG37 | LieType::G1PlusSl2r => Some(false),
            LieType::Unrecognized => None,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Canonical four-dimensional bracket table of `ty` (parameter `β'` for
/// `g35`, `α'` for `g49`). `None` for [`LieType::Unrecognized`].
pub fn canonical_table<S: Scalar>(ty: LieType, param: &S, eps: f64) -> Option<LieAlgebra<S>> {
    let (o, z) = (S::one(), S::zero());
    let v = |c: [S; 4]| c.to_vec();
    let pairs = match ty {
        // e0 central; [e2,e3] = e1, [e3,e1] = e2, [e1,e2] = e3
        LieType::G1PlusG37 => vec![
            (2, 3, v([z.clone(), o.clone(), z.clone(), z.clone()])),
            (1, 3, v([z.clone(), z.clone(), -o.clone(), z.clone()])),
            (1, 2, v([z.clone(), z.clone(), z.clone(), o.clone()])),
        ],
        // [e2,e3] = -e1, [e3,e1] = e2, [e1,e2] = e3
        LieType::G1PlusSl2r => vec![
            (2, 3, v([z.clone(), -o.clone(), z.clone(), z.clone()])),
            (1, 3, v([z.clone(), z.clone(), -o.clone(), z.clone()])),
            (1, 2, v([z.clone(), z.clone(), z.clone(), o.clone()])),
        ],
        // [e1,e3] = β' e1 - e2, [e2,e3] = e1 + β' e2
        LieType::G1PlusG35 => vec![
            (1, 3, v([z.clone(), param.clone(), -o.clone(), z.clone()])),
            (2, 3, v([z.clone(), o.clone(), param.clone(), z.clone()])),
        ],
        // basis e1..e4 at indices 0..3: [e2,e3] = e1, [e1,e4] = 2α' e1,
        // [e2,e4] = α' e2 - e3, [e3,e4] = e2 + α' e3
        LieType::G49Zero => vec![
            (1, 2, v([o.clone(), z.clone(), z.clone(), z.clone()])),
            (0, 3, v([S::from_i64(2) * param.clone(), z.clone(), z.clone(), z.clone()])),
            (1, 3, v([z.clone(), param.clone(), -o.clone(), z.clone()])),
            (2, 3, v([z.clone(), o.clone(), param.clone(), z.clone()])),
        ],
        LieType::Unrecognized => return None,
    };
    LieAlgebra::from_pairs(4, &pairs, eps).ok()
}

#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalMatch<S> {
    pub holds: bool,
    /// First `(i, j)` whose transported bracket differs: `(i, j, expected, got)`.
    pub mismatch: Option<(usize, usize, Vec<S>, Vec<S>)>,
}

/// Transports the brackets of `l` along `witness` (columns: canonical basis
/// vectors in `l`'s coordinates) and compares with the canonical table.
pub fn match_canonical<S: Scalar>(l: &LieAlgebra<S>, ty: LieType, param: &S, witness: &Matrix<S>) -> CanonicalMatch<S> {
    let fail = CanonicalMatch { holds: false, mismatch: None };
    let Some(canon) = canonical_table(ty, param, l.eps) else { return fail };
    if l.dim != 4 || witness.rows() != 4 || witness.cols() != 4 {
        return fail;
    }
    let Some(inv) = witness.inverse(l.eps) else { return fail };
    let cols: Vec<Vec<S>> = (0..4).map(|j| witness.col(j)).collect();
    for i in 0..4 {
        for j in 0..4 {
            let got = inv.mul_vec(&l.bracket(&cols[i], &cols[j]));
            let expected = canon.bracket_basis(i, j).to_vec();
            if !got.iter().zip(&expected).all(|(a, b)| (a.clone() - b.clone()).is_negligible(l.eps)) {
                return CanonicalMatch { holds: false, mismatch: Some((i, j, expected, got)) };
            }
        }
    }
    CanonicalMatch { holds: true, mismatch: None }
}

#[derive(Debug, Clone)]
pub struct LieClassification {
    pub type_tag: LieType,
    /// `β'` for `g35`, `α'` for `g49`.
    pub parameter: Option<f64>,
    pub alpha: f64,
    pub beta: f64,
    /// `(α, β)` exactly, when the input was exact.
    pub alpha_beta_exact: Option<(Rational, Rational)>,
    pub witness: Option<WitnessMatrix>,
    pub witness_verified: bool,
    pub derived_dims: Vec<usize>,
}

impl LieClassification {
    pub fn to_json(&self) -> Value {
        let exact = self.alpha_beta_exact.as_ref();
        json!({
            "type": self.type_tag,
            "parameter": self.parameter,
            "alpha": exact.map(|(a, _)| json!(format_rational(a))).unwrap_or(json!(self.alpha)),
            "beta": exact.map(|(_, b)| json!(format_rational(b))).unwrap_or(json!(self.beta)),
            "witness": self.witness.as_ref().map(WitnessMatrix::to_json),
            "witness_exact": self.witness.as_ref().map(WitnessMatrix::is_exact),
            "witness_verified": self.witness_verified,
            "derived_dims": self.derived_dims,
        })
    }
}

/// `(α, β)` if `l` has the Tp bracket shape in the basis `1, i, w, v`.
pub fn tp_alpha_beta<S: Scalar>(l: &LieAlgebra<S>) -> Option<(S, S)> {
    if l.dim != 4 {
        return None;
    }
    let eps = l.eps;
    let z = S::zero();
    let two = S::from_i64(2);
    let eq = |a: &[S], b: &[S]| a.iter().zip(b).all(|(x, y)| (x.clone() - y.clone()).is_negligible(eps));
    let central = (0..4).all(|j| l.bracket_basis(0, j).iter().all(|c| c.is_negligible(eps)));
    let iw = eq(l.bracket_basis(1, 2), &[z.clone(), z.clone(), z.clone(), -two.clone()]);
    let iv = eq(l.bracket_basis(1, 3), &[z.clone(), z.clone(), two, z.clone()]);
    let vw = l.bracket_basis(3, 2);
    let in_b = vw[2].is_negligible(eps) && vw[3].is_negligible(eps);
    (central && iw && iv && in_b).then(|| (vw[0].clone(), vw[1].clone()))
}

enum Sqrt<S> {
    Exact(S),
    Irrational,
}

fn sqrt_or_irrational<S: Scalar>(x: &S) -> Sqrt<S> {
    match x.sqrt_checked() {
        Some(s) => Sqrt::Exact(s),
        None => Sqrt::Irrational,
    }
}

struct Raw<S> {
    ty: LieType,
    param: S,
    witness: Matrix<S>,
}

/// Classification in the scalar type `S`; `Err(NotExact)` when a square
/// root leaves the field.
fn classify_raw<S: Scalar>(l: &LieAlgebra<S>, alpha: &S, beta: &S) -> Result<Raw<S>> {
    let eps = l.eps;
    let (o, z) = (S::one(), S::zero());
    let two = S::from_i64(2);
    let col = |c: [S; 4]| c.to_vec();
    let need = |x: &S| match sqrt_or_irrational(x) {
        Sqrt::Exact(s) => Ok(s),
        Sqrt::Irrational => Err(Error::NotExact("scaling needs an irrational square root".into())),
    };

    if !beta.is_negligible(eps) {
        // h = (α 1 + β i)/(2β), e = v/s, f = w/s with s = sqrt(±2β)
        let positive = *beta > z;
        let s = need(&if positive { two.clone() * beta.clone() } else { -(two.clone() * beta.clone()) })?;
        let inv = o.clone() / s;
        let h = col([alpha.clone() / (two.clone() * beta.clone()), o.clone() / two.clone(), z.clone(), z.clone()]);
        let e = col([z.clone(), z.clone(), z.clone(), inv.clone()]);
        let f = col([z.clone(), z.clone(), inv, z.clone()]);
        let one = col([o.clone(), z.clone(), z.clone(), z.clone()]);
        let ty = if positive { LieType::G1PlusG37 } else { LieType::G1PlusSl2r };
        return Ok(Raw { ty, param: z, witness: Matrix::from_cols(&[one, h, e, f]) });
    }

    if !alpha.is_negligible(eps) {
        // 1' = ±1/2, v' = v/sqrt(±2α), w' = w/sqrt(±2α), i' = i/2
        let positive = *alpha > z;
        let sign = if positive { o.clone() } else { -o.clone() };
        let s = need(&(sign.clone() * two.clone() * alpha.clone()))?;
        let inv = o.clone() / s;
        let one = col([sign / two.clone(), z.clone(), z.clone(), z.clone()]);
        let v = col([z.clone(), z.clone(), z.clone(), inv.clone()]);
        let w = col([z.clone(), z.clone(), inv, z.clone()]);
        let i = col([z.clone(), o.clone() / two, z.clone(), z.clone()]);
        return Ok(Raw { ty: LieType::G49Zero, param: z, witness: Matrix::from_cols(&[one, v, w, i]) });
    }

    // α = β = 0: L' = span{v, w}; ad(i) restricted to it has eigenvalues
    // ρ ± μ i, and β' = ρ/μ with basis (1, v, w, i/μ).
    let series = derived_series(l);
    let l1 = &series[1];
    if l1.len() != 2 {
        return Ok(Raw { ty: LieType::Unrecognized, param: z, witness: Matrix::identity(4) });
    }
    let i_vec = col([z.clone(), o.clone(), z.clone(), z.clone()]);
    let mut ad = Vec::new();
    for b in l1 {
        let image = l.bracket(&i_vec, b);
        ad.push(coordinates_in(l1, &image, eps).ok_or_else(|| Error::InvalidAlgebra("derived algebra is not an ideal".into()))?);
    }
    // ad[c] is column c of the restriction
    let trace = ad[0][0].clone() + ad[1][1].clone();
    let det = ad[0][0].clone() * ad[1][1].clone() - ad[1][0].clone() * ad[0][1].clone();
    let rho = trace.clone() / two.clone();
    let mu2 = det - rho.clone() * rho.clone();
    if mu2 <= z {
        return Ok(Raw { ty: LieType::Unrecognized, param: z, witness: Matrix::identity(4) });
    }
    let mu = need(&mu2)?;
    let beta_prime = (rho / mu.clone()).abs();
    let one = col([o.clone(), z.clone(), z.clone(), z.clone()]);
    let v = col([z.clone(), z.clone(), z.clone(), o.clone()]);
    let w = col([z.clone(), z.clone(), o.clone(), z.clone()]);
    let i = col([z.clone(), o / mu, z.clone(), z]);
    Ok(Raw { ty: LieType::G1PlusG35, param: beta_prime, witness: Matrix::from_cols(&[one, v, w, i]) })
}

fn finish<S: Scalar>(l: &LieAlgebra<S>, raw: &Raw<S>) -> bool {
    raw.ty != LieType::Unrecognized && match_canonical(l, raw.ty, &raw.param, &raw.witness).holds
}

/// Classifies an exact Lie algebra with Tp brackets; witnesses stay exact
/// when every square root is rational.
pub fn classify_lie(l: &LieAlgebra<Rational>) -> Result<LieClassification> {
    let dims = derived_dims(l);
    let Some((alpha, beta)) = tp_alpha_beta(l) else {
        return Ok(unrecognized(dims));
    };
    let mut out = LieClassification {
        type_tag: LieType::Unrecognized,
        parameter: None,
        alpha: alpha.to_f64(),
        beta: beta.to_f64(),
        alpha_beta_exact: Some((alpha.clone(), beta.clone())),
        witness: None,
        witness_verified: false,
        derived_dims: dims,
    };
    match classify_raw(l, &alpha, &beta) {
        Ok(raw) => {
            out.witness_verified = finish(l, &raw);
            out.type_tag = raw.ty;
            out.parameter = param_of(raw.ty, raw.param.to_f64());
            out.witness = (raw.ty != LieType::Unrecognized).then_some(WitnessMatrix::Exact(raw.witness));
        }
        Err(Error::NotExact(_)) => {
            let fl = l.to_float();
            let raw = classify_raw(&fl, &alpha.to_f64(), &beta.to_f64())?;
            out.witness_verified = finish(&fl, &raw);
            out.type_tag = raw.ty;
            out.parameter = param_of(raw.ty, raw.param);
            out.witness = (raw.ty != LieType::Unrecognized).then_some(WitnessMatrix::Approx(raw.witness));
        }
        Err(e) => return Err(e),
    }
    Ok(out)
}

pub fn classify_lie_f64(l: &LieAlgebra<f64>) -> Result<LieClassification> {
    let dims = derived_dims(l);
    let Some((alpha, beta)) = tp_alpha_beta(l) else {
        return Ok(unrecognized(dims));
    };
    let raw = classify_raw(l, &alpha, &beta)?;
    Ok(LieClassification {
        type_tag: raw.ty,
        parameter: param_of(raw.ty, raw.param),
        alpha,
        beta,
        alpha_beta_exact: None,
        witness_verified: finish(l, &raw),
        witness: (raw.ty != LieType::Unrecognized).then_some(WitnessMatrix::Approx(raw.witness)),
        derived_dims: dims,
    })
}

fn param_of(ty: LieType, p: f64) -> Option<f64> {
    matches!(ty, LieType::G1PlusG35 | LieType::G49Zero).then_some(p)
}

fn unrecognized(dims: Vec<usize>) -> LieClassification {
    LieClassification {
        type_tag: LieType::Unrecognized,
        parameter: None,
        alpha: f64::NAN,
        beta: f64::NAN,
        alpha_beta_exact: None,
        witness: None,
        witness_verified: false,
        derived_dims: dims,
    }
}

/// A Tp algebra whose commutator has `[v, w] = α 1 + β i`.
pub fn tp_with_bracket(alpha: &Rational, beta: &Rational) -> Result<Algebra<Rational>> {
    let mut p = TpParams::zero();
    p.delta1 = alpha.clone();
    p.delta2 = beta.clone();
    crate::catalog::tp(&p)
}

pub fn classify_tp_lie(alpha: &Rational, beta: &Rational) -> Result<LieClassification> {
    classify_lie(&lieify(&tp_with_bracket(alpha, beta)?))
}
