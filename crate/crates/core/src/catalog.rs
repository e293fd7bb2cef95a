//! Named algebras and parametric families.
//!
//! Families:
//! - `ak`: `C ⊕ V_1 ⊕ … ⊕ V_k` with `e1` central, `e1 v_i1 = v_i2`,
//!   `e1 v_i2 = -v_i1`, `v_ij^2 = a_ij 1` and all other `v` products zero.
//! - `tn`: noncommutative middle-C-associative table in the basis `1, i, j, k`.
//! - `tc`: commutative middle-C-associative table, `h ∈ {0, 1}`.
//! - `tp`: reflection-adapted table in the basis `1, i, w, v` with `v = w i`.
//! - fixed tables `mplus`, `mzero`, `quaternions`, `complex`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::algebra::QAlgebra;
use crate::error::{Error, Result};
use crate::scalar::{format_rational, Rational, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Ak,
    Tn,
    Tc,
    Tp,
    Mplus,
    Mzero,
    H,
    C,
}

impl Family {
    pub const ALL: [Family; 8] =
        [Family::Ak, Family::Tn, Family::Tc, Family::Tp, Family::Mplus, Family::Mzero, Family::H, Family::C];

    pub fn cli_name(self) -> &'static str {
        match self {
            Family::Ak => "ak",
            Family::Tn => "tn",
            Family::Tc => "tc",
            Family::Tp => "tp",
            Family::Mplus => "mplus",
            Family::Mzero => "mzero",
            Family::H => "quaternions",
            Family::C => "complex",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fam = match s.to_ascii_lowercase().as_str() {
            "ak" => Family::Ak,
            "tn" => Family::Tn,
            "tc" => Family::Tc,
            "tp" => Family::Tp,
            "mplus" | "m+" => Family::Mplus,
            "mzero" | "m0" => Family::Mzero,
            "quaternions" | "h" => Family::H,
            "complex" | "c" => Family::C,
            other => return Err(Error::Param(format!("unknown algebra family {other:?}"))),
        };
        Ok(fam)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TnParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub f: Rational,
    pub g: Rational,
    pub h: Rational,
    pub e: Rational,
}

impl TnParams {
    pub const NAMES: [&'static str; 8] = ["a", "b", "c", "d", "f", "g", "h", "e"];

    pub fn zero() -> Self {
        Self::from_array(std::array::from_fn(|_| Rational::zero()))
    }

    /// Order `(a, b, c, d, f, g, h, e)`.
    pub fn from_array([a, b, c, d, f, g, h, e]: [Rational; 8]) -> Self {
        Self { a, b, c, d, f, g, h, e }
    }

    pub fn to_array(&self) -> [Rational; 8] {
        [
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
            self.f.clone(),
            self.g.clone(),
            self.h.clone(),
            self.e.clone(),
        ]
    }

    /// Reads the parameters back off an algebra whose table has the `tn`
    /// shape in the basis `1, i, j, k`; `None` if any fixed entry differs.
    pub fn recognize(alg: &QAlgebra) -> Option<Self> {
        if alg.dim() != 4 || alg.unit_coords() != Some(&unit4()[..]) {
            return None;
        }
        let j2 = alg.basis_product(2, 2);
        let jk = alg.basis_product(2, 3);
        let p = Self::from_array([
            j2[0].clone(),
            j2[1].clone(),
            j2[2].clone(),
            j2[3].clone(),
            jk[0].clone(),
            jk[1].clone(),
            jk[2].clone(),
            jk[3].clone(),
        ]);
        let expected = tn(&p).ok()?;
        (expected.table() == alg.table()).then_some(p)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TcParams {
    pub a: Rational,
    pub b: Rational,
    pub f: Rational,
    pub g: Rational,
    pub h: Rational,
}

impl TcParams {
    pub const NAMES: [&'static str; 5] = ["a", "b", "f", "g", "h"];

    pub fn from_array([a, b, f, g, h]: [Rational; 5]) -> Self {
        Self { a, b, f, g, h }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TpParams {
    pub alpha1: Rational,
    pub alpha2: Rational,
    pub beta1: Rational,
    pub beta2: Rational,
    pub delta1: Rational,
    pub delta2: Rational,
    pub gamma1: Rational,
    pub gamma2: Rational,
}

impl TpParams {
    pub const NAMES: [&'static str; 8] = ["alpha1", "alpha2", "beta1", "beta2", "delta1", "delta2", "gamma1", "gamma2"];

    pub fn zero() -> Self {
        Self::from_array(std::array::from_fn(|_| Rational::zero()))
    }

    /// Order `(α₁, α₂, β₁, β₂, δ₁, δ₂, γ₁, γ₂)`: `w² = α₁ + α₂ i`,
    /// `wv = β₁ + β₂ i`, `vw = δ₁ + δ₂ i`, `v² = γ₁ + γ₂ i`.
    pub fn from_array([alpha1, alpha2, beta1, beta2, delta1, delta2, gamma1, gamma2]: [Rational; 8]) -> Self {
        Self { alpha1, alpha2, beta1, beta2, delta1, delta2, gamma1, gamma2 }
    }

    pub fn to_array(&self) -> [Rational; 8] {
        [
            self.alpha1.clone(),
            self.alpha2.clone(),
            self.beta1.clone(),
            self.beta2.clone(),
            self.delta1.clone(),
            self.delta2.clone(),
            self.gamma1.clone(),
            self.gamma2.clone(),
        ]
    }

    /// `[v, w] = α 1 + β i` with `α = δ₁ - β₁`, `β = δ₂ - β₂`.
    pub fn bracket_vw(&self) -> (Rational, Rational) {
        (&self.delta1 - &self.beta1, &self.delta2 - &self.beta2)
    }

    pub fn recognize(alg: &QAlgebra) -> Option<Self> {
        if alg.dim() != 4 || alg.unit_coords() != Some(&unit4()[..]) {
            return None;
        }
        let two = |i: usize, j: usize| {
            let p = alg.basis_product(i, j);
            [p[0].clone(), p[1].clone()]
        };
        let [a1, a2] = two(2, 2);
        let [b1, b2] = two(2, 3);
        let [d1, d2] = two(3, 2);
        let [g1, g2] = two(3, 3);
        let p = Self::from_array([a1, a2, b1, b2, d1, d2, g1, g2]);
        let expected = tp(&p).ok()?;
        (expected.table() == alg.table()).then_some(p)
    }
}

/// Parameters of one catalog entry.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilyParams {
    /// One `[a_i1, a_i2]` pair per block `V_i`.
    Ak(Vec<[Rational; 2]>),
    Tn(TnParams),
    Tc(TcParams),
    Tp(TpParams),
    Mplus,
    Mzero,
    H,
    C,
}

impl FamilyParams {
    pub fn family(&self) -> Family {
        match self {
            FamilyParams::Ak(_) => Family::Ak,
            FamilyParams::Tn(_) => Family::Tn,
            FamilyParams::Tc(_) => Family::Tc,
            FamilyParams::Tp(_) => Family::Tp,
            FamilyParams::Mplus => Family::Mplus,
            FamilyParams::Mzero => Family::Mzero,
            FamilyParams::H => Family::H,
            FamilyParams::C => Family::C,
        }
    }

    /// Builds parameters from `name=value` pairs.
    ///
    /// Unnamed `tn`/`tc`/`tp` parameters default to 0. For `ak`, `k` defaults
    /// to 1 and every unnamed `a_ij` to 1.
    pub fn from_named(family: Family, named: &BTreeMap<String, Rational>) -> Result<Self> {
        let allowed: Vec<String> = match family {
            Family::Ak => {
                let k = ak_block_count(named)?;
                std::iter::once("k".to_string())
                    .chain((1..=k).flat_map(|i| (1..=2).map(move |j| format!("a{i}{j}"))))
                    .collect()
            }
            Family::Tn => TnParams::NAMES.iter().map(|s| s.to_string()).collect(),
            Family::Tc => TcParams::NAMES.iter().map(|s| s.to_string()).collect(),
            Family::Tp => TpParams::NAMES.iter().map(|s| s.to_string()).collect(),
            _ => Vec::new(),
        };
        if let Some(bad) = named.keys().find(|k| !allowed.contains(k)) {
            return Err(Error::Param(format!("family {family} has no parameter {bad:?}")));
        }
        let get = |name: &str, default: Rational| named.get(name).cloned().unwrap_or(default);
        let params = match family {
            Family::Ak => {
                let k = ak_block_count(named)?;
                let blocks = (1..=k)
                    .map(|i| [get(&format!("a{i}1"), Rational::one()), get(&format!("a{i}2"), Rational::one())])
                    .collect();
                FamilyParams::Ak(blocks)
            }
            Family::Tn => FamilyParams::Tn(TnParams::from_array(TnParams::NAMES.map(|n| get(n, Rational::zero())))),
            Family::Tc => FamilyParams::Tc(TcParams::from_array(TcParams::NAMES.map(|n| get(n, Rational::zero())))),
            Family::Tp => FamilyParams::Tp(TpParams::from_array(TpParams::NAMES.map(|n| get(n, Rational::zero())))),
            Family::Mplus => FamilyParams::Mplus,
            Family::Mzero => FamilyParams::Mzero,
            Family::H => FamilyParams::H,
            Family::C => FamilyParams::C,
        };
        Ok(params)
    }

    /// Parameter listing as `name -> "value"` for reports.
    pub fn describe(&self) -> BTreeMap<String, String> {
        let pairs: Vec<(String, Rational)> = match self {
            FamilyParams::Ak(blocks) => std::iter::once(("k".to_string(), Rational::from_i64(blocks.len() as i64)))
                .chain(blocks.iter().enumerate().flat_map(|(i, [x, y])| {
                    [(format!("a{}1", i + 1), x.clone()), (format!("a{}2", i + 1), y.clone())]
                }))
                .collect(),
            FamilyParams::Tn(p) => TnParams::NAMES.iter().map(|s| s.to_string()).zip(p.to_array()).collect(),
            FamilyParams::Tc(p) => TcParams::NAMES
                .iter()
                .map(|s| s.to_string())
                .zip([p.a.clone(), p.b.clone(), p.f.clone(), p.g.clone(), p.h.clone()])
                .collect(),
            FamilyParams::Tp(p) => TpParams::NAMES.iter().map(|s| s.to_string()).zip(p.to_array()).collect(),
            _ => Vec::new(),
        };
        pairs.into_iter().map(|(k, v)| (k, format_rational(&v))).collect()
    }
}

fn ak_block_count(named: &BTreeMap<String, Rational>) -> Result<usize> {
    let Some(k) = named.get("k") else { return Ok(1) };
    if !k.is_integer() || !k.is_positive() {
        return Err(Error::Param(format!("k must be a positive integer, got {}", format_rational(k))));
    }
    k.to_integer().try_into().map_err(|_| Error::Param("k is too large".into()))
}

pub fn build(p: &FamilyParams) -> Result<QAlgebra> {
    match p {
        FamilyParams::Ak(blocks) => ak(blocks),
        FamilyParams::Tn(t) => tn(t),
        FamilyParams::Tc(t) => tc(t),
        FamilyParams::Tp(t) => tp(t),
        FamilyParams::Mplus => Ok(mplus()),
        FamilyParams::Mzero => Ok(mzero()),
        FamilyParams::H => Ok(quaternions()),
        FamilyParams::C => Ok(complex()),
    }
}

fn z() -> Rational {
    Rational::zero()
}

fn n(v: i64) -> Rational {
    Rational::from_i64(v)
}

fn unit4() -> Vec<Rational> {
    vec![n(1), z(), z(), z()]
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Builds a 4-dim unital table from the 3×3 block of products among the
/// non-unit basis vectors.
fn unital4(names: [&str; 4], products: [[[Rational; 4]; 3]; 3]) -> Result<QAlgebra> {
    let mut table = vec![vec![vec![z(); 4]; 4]; 4];
    for (j, row) in table.iter_mut().enumerate() {
        row[0][j] = n(1);
    }
    for (j, cell) in table[0].iter_mut().enumerate() {
        cell[j] = n(1);
    }
    for (r, row) in products.into_iter().enumerate() {
        for (c, cell) in row.into_iter().enumerate() {
            table[r + 1][c + 1] = cell.to_vec();
        }
    }
    QAlgebra::from_table(table, labels(&names), Some(unit4()))
}

fn v4(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> [Rational; 4] {
    [a.clone(), b.clone(), c.clone(), d.clone()]
}

fn iv(coeffs: [i64; 4]) -> [Rational; 4] {
    coeffs.map(n)
}

pub fn ak(blocks: &[[Rational; 2]]) -> Result<QAlgebra> {
    let k = blocks.len();
    if k == 0 {
        return Err(Error::Param("ak needs k >= 1".into()));
    }
    for (i, pair) in blocks.iter().enumerate() {
        for (j, a) in pair.iter().enumerate() {
            if !a.is_positive() {
                return Err(Error::Param(format!("a{}{} must be positive, got {}", i + 1, j + 1, format_rational(a))));
            }
        }
    }
    let dim = 2 * k + 2;
    let mut names = vec!["1".to_string(), "e1".to_string()];
    for i in 1..=k {
        names.push(format!("v{i}1"));
        names.push(format!("v{i}2"));
    }
    let mut table = vec![vec![vec![z(); dim]; dim]; dim];
    for (j, row) in table.iter_mut().enumerate() {
        row[0][j] = n(1);
    }
    for (j, cell) in table[0].iter_mut().enumerate() {
        cell[j] = n(1);
    }
    table[1][1][0] = n(-1);
    for (b, [a1, a2]) in blocks.iter().enumerate() {
        let (p, q) = (2 + 2 * b, 3 + 2 * b);
        // e1 is central: e1 v_i1 = v_i1 e1 = v_i2, e1 v_i2 = v_i2 e1 = -v_i1
        table[1][p][q] = n(1);
        table[p][1][q] = n(1);
        table[1][q][p] = n(-1);
        table[q][1][p] = n(-1);
        table[p][p][0] = a1.clone();
        table[q][q][0] = a2.clone();
    }
    QAlgebra::from_table(table, names, Some(unit_vec(dim)))
}

fn unit_vec(dim: usize) -> Vec<Rational> {
    let mut u = vec![z(); dim];
    u[0] = n(1);
    u
}

pub fn tn(p: &TnParams) -> Result<QAlgebra> {
    let jj = v4(&p.a, &p.b, &p.c, &p.d);
    let jk = v4(&p.f, &p.g, &p.h, &p.e);
    let kj = jk.clone().map(|x| -x);
    unital4(
        ["1", "i", "j", "k"],
        [
            [iv([-1, 0, 0, 0]), iv([0, 0, 0, 1]), iv([0, 0, -1, 0])],
            [iv([0, 0, 0, -1]), jj.clone(), jk],
            [iv([0, 0, 1, 0]), kj, jj],
        ],
    )
}

/// `tn` with `c = d = e = h = 0`, `f = b`, `g = -a`.
pub fn tn_special_case(a: &Rational, b: &Rational) -> Result<QAlgebra> {
    tn(&tn_special_params(a, b))
}

pub fn tn_special_params(a: &Rational, b: &Rational) -> TnParams {
    TnParams { a: a.clone(), b: b.clone(), f: b.clone(), g: -a.clone(), ..TnParams::zero() }
}

pub fn tc(p: &TcParams) -> Result<QAlgebra> {
    if !(p.h.is_zero() || p.h.is_one()) {
        return Err(Error::Param(format!("tc requires h in {{0, 1}}, got {}", format_rational(&p.h))));
    }
    let jj = v4(&p.a, &p.b, &z(), &z());
    let jk = v4(&p.f, &p.g, &p.h, &z());
    let kk = v4(&-p.a.clone(), &-p.b.clone(), &z(), &z());
    unital4(
        ["1", "i", "j", "k"],
        [
            [iv([-1, 0, 0, 0]), iv([0, 0, 0, 1]), iv([0, 0, -1, 0])],
            [iv([0, 0, 0, 1]), jj, jk.clone()],
            [iv([0, 0, -1, 0]), jk, kk],
        ],
    )
}

pub fn tp(p: &TpParams) -> Result<QAlgebra> {
    let two = |x: &Rational, y: &Rational| v4(x, y, &z(), &z());
    let alg = unital4(
        ["1", "i", "w", "v"],
        [
            [iv([-1, 0, 0, 0]), iv([0, 0, 0, -1]), iv([0, 0, 1, 0])],
            [iv([0, 0, 0, 1]), two(&p.alpha1, &p.alpha2), two(&p.beta1, &p.beta2)],
            [iv([0, 0, -1, 0]), two(&p.delta1, &p.delta2), two(&p.gamma1, &p.gamma2)],
        ],
    )?;
    let wi = alg.mul(&alg.named("w"), &alg.named("i"))?;
    if wi != alg.named("v") {
        return Err(Error::InvalidAlgebra("tp table violates v = w i".into()));
    }
    Ok(alg)
}

pub fn mplus() -> QAlgebra {
    unital4(
        ["1", "i", "j", "k"],
        [
            [iv([-1, 0, 0, 0]), iv([0, 0, 0, 1]), iv([0, 0, -1, 0])],
            [iv([0, 0, 0, -1]), iv([1, 0, 0, 0]), iv([0, -1, 0, 0])],
            [iv([0, 0, 1, 0]), iv([0, 1, 0, 0]), iv([1, 0, 0, 0])],
        ],
    )
    .expect("fixed table")
}

pub fn mzero() -> QAlgebra {
    unital4(
        ["1", "i", "j", "k"],
        [
            [iv([-1, 0, 0, 0]), iv([0, 0, 0, 1]), iv([0, 0, -1, 0])],
            [iv([0, 0, 0, -1]), iv([0; 4]), iv([0; 4])],
            [iv([0, 0, 1, 0]), iv([0; 4]), iv([0; 4])],
        ],
    )
    .expect("fixed table")
}

pub fn quaternions() -> QAlgebra {
    unital4(
        ["1", "i", "j", "k"],
        [
            [iv([-1, 0, 0, 0]), iv([0, 0, 0, 1]), iv([0, 0, -1, 0])],
            [iv([0, 0, 0, -1]), iv([-1, 0, 0, 0]), iv([0, 1, 0, 0])],
            [iv([0, 0, 1, 0]), iv([0, -1, 0, 0]), iv([-1, 0, 0, 0])],
        ],
    )
    .expect("fixed table")
}

pub fn complex() -> QAlgebra {
    let table = vec![
        vec![vec![n(1), z()], vec![z(), n(1)]],
        vec![vec![z(), n(1)], vec![n(-1), z()]],
    ];
    QAlgebra::from_table(table, labels(&["1", "i"]), Some(vec![n(1), z()])).expect("fixed table")
}

/// `tn` parameter points of the three named targets: `(a, g) = (1, -1)`,
/// all zero, and `(a, g) = (-1, 1)`.
pub fn mplus_params() -> TnParams {
    TnParams { a: n(1), g: n(-1), ..TnParams::zero() }
}

pub fn mzero_params() -> TnParams {
    TnParams::zero()
}

pub fn quaternion_params() -> TnParams {
    TnParams { a: n(-1), g: n(1), ..TnParams::zero() }
}

/// Every entry with a representative parameter choice; used by the
/// implication sweeps.
pub fn representatives() -> Vec<(String, QAlgebra)> {
    let q = |a, b| Rational::from_ratio(a, b);
    vec![
        ("ak(k=1)".into(), ak(&[[q(1, 1), q(1, 1)]]).unwrap()),
        ("ak(k=2)".into(), ak(&[[q(2, 1), q(3, 1)], [q(1, 2), q(5, 3)]]).unwrap()),
        ("tn(special a=1,b=1)".into(), tn_special_case(&q(1, 1), &q(1, 1)).unwrap()),
        (
            "tn(a=-1,g=1,h=1)".into(),
            tn(&TnParams { a: q(-1, 1), g: q(1, 1), h: q(1, 1), ..TnParams::zero() }).unwrap(),
        ),
        (
            "tc(a=1,h=1)".into(),
            tc(&TcParams::from_array([q(1, 1), q(0, 1), q(0, 1), q(0, 1), q(1, 1)])).unwrap(),
        ),
        ("tp(quaternion point)".into(), tp(&TpParams::from_array([-1, 0, 0, -1, 0, 1, -1, 0].map(n))).unwrap()),
        ("mplus".into(), mplus()),
        ("mzero".into(), mzero()),
        ("quaternions".into(), quaternions()),
        ("complex".into(), complex()),
    ]
}
