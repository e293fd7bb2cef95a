//! Identity checking on structure constants.
//!
//! Trilinear identities (associativity, the three C-associativity conditions)
//! and the bilinear commutativity check are decided on basis tuples, which is
//! a proof. The alternative and flexible laws are quadratic in the repeated
//! argument; they are decided on basis diagonals plus polarized pairs
//! `(e_a, e_b, y) + (e_b, e_a, y)`, which is also a proof. The partial laws
//! are exact over the supplied unit set.
//!
//! When an identity fails the first failing instance becomes the witness.
//! Repeated slots are scanned in ascending basis order and the free slot in
//! descending order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{Algebra, Element, Side};
use crate::error::{Error, Result};
use crate::sampling::{self, Sample};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityKind {
    LeftAlt,
    RightAlt,
    Flexible,
    PartialLeftAlt,
    PartialRightAlt,
    PartialFlexible,
    LeftCAssoc,
    MiddleCAssoc,
    RightCAssoc,
    Commutative,
    Associative,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 11] = [
        IdentityKind::LeftAlt,
        IdentityKind::RightAlt,
        IdentityKind::Flexible,
        IdentityKind::PartialLeftAlt,
        IdentityKind::PartialRightAlt,
        IdentityKind::PartialFlexible,
        IdentityKind::LeftCAssoc,
        IdentityKind::MiddleCAssoc,
        IdentityKind::RightCAssoc,
        IdentityKind::Commutative,
        IdentityKind::Associative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::LeftAlt => "left-alt",
            IdentityKind::RightAlt => "right-alt",
            IdentityKind::Flexible => "flexible",
            IdentityKind::PartialLeftAlt => "partial-left-alt",
            IdentityKind::PartialRightAlt => "partial-right-alt",
            IdentityKind::PartialFlexible => "partial-flexible",
            IdentityKind::LeftCAssoc => "left-c-assoc",
            IdentityKind::MiddleCAssoc => "middle-c-assoc",
            IdentityKind::RightCAssoc => "right-c-assoc",
            IdentityKind::Commutative => "commutative",
            IdentityKind::Associative => "associative",
        }
    }

    pub fn needs_units(self) -> bool {
        matches!(self, IdentityKind::PartialLeftAlt | IdentityKind::PartialRightAlt | IdentityKind::PartialFlexible)
    }

    pub fn needs_c_span(self) -> bool {
        matches!(self, IdentityKind::LeftCAssoc | IdentityKind::MiddleCAssoc | IdentityKind::RightCAssoc)
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        Self::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| Error::Param(format!("unknown identity {s:?}")))
    }
}

/// Imaginary units to test the partial laws against.
#[derive(Debug, Clone)]
pub struct UnitSet<S> {
    pub units: Vec<Element<S>>,
    /// Whether `units` is the whole of `{x : x² = -1}`.
    pub complete: bool,
}

/// An ordered pair `(1, c)` spanning a two-dimensional subalgebra.
#[derive(Debug, Clone)]
pub struct CSpan<S> {
    pub one: Element<S>,
    pub generator: Element<S>,
}

impl<S: Scalar> CSpan<S> {
    /// `span{1, e_index}`; requires a unital algebra.
    pub fn with_basis(alg: &Algebra<S>, index: usize) -> Result<Self> {
        let one = alg.unit().ok_or_else(|| Error::Context("C-span needs a unital algebra".into()))?;
        Ok(Self { one, generator: alg.basis(index) })
    }

    fn elements(&self) -> [&Element<S>; 2] {
        [&self.one, &self.generator]
    }

    fn validate(&self, alg: &Algebra<S>) -> Result<()> {
        let unit = alg.unit().ok_or_else(|| Error::Context("C-span needs a unital algebra".into()))?;
        if self.one != unit {
            return Err(Error::Context("first C-span element must be the unit".into()));
        }
        let independent = crate::linalg::Matrix::from_rows(vec![self.one.coords().to_vec(), self.generator.coords().to_vec()])
            .rank(alg.eps())
            == 2;
        if !independent {
            return Err(Error::Context("C-span elements are linearly dependent".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default)]
pub struct IdentityContext<S> {
    pub units: Option<UnitSet<S>>,
    pub c_span: Option<CSpan<S>>,
}

impl<S> IdentityContext<S> {
    pub fn none() -> Self {
        Self { units: None, c_span: None }
    }

    pub fn with_units(units: Vec<Element<S>>, complete: bool) -> Self {
        Self { units: Some(UnitSet { units, complete }), c_span: None }
    }

    pub fn with_c_span(c_span: CSpan<S>) -> Self {
        Self { units: None, c_span: Some(c_span) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "type")]
pub enum Method {
    ExhaustiveBasis,
    Sampled { n: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Witness<S> {
    pub x: Element<S>,
    pub y: Element<S>,
    pub z: Option<Element<S>>,
    pub defect: Element<S>,
}

impl<S: Scalar> Witness<S> {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "x": coords_json(&self.x),
            "y": coords_json(&self.y),
            "defect": coords_json(&self.defect),
        });
        if let Some(z) = &self.z {
            v["z"] = coords_json(z);
        }
        v
    }
}

pub(crate) fn coords_json<S: Scalar>(e: &Element<S>) -> Value {
    Value::Array(e.coords().iter().map(Scalar::to_json).collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport<S> {
    pub kind: IdentityKind,
    pub holds: bool,
    pub witness: Option<Witness<S>>,
    pub method: Method,
}

impl<S: Scalar> IdentityReport<S> {
    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind,
            "holds": self.holds,
            "witness": self.witness.as_ref().map(Witness::to_json),
            "method": self.method,
        })
    }
}

fn triple<S: Scalar>(x: &Element<S>, y: &Element<S>, z: &Element<S>, defect: Element<S>) -> Witness<S> {
    Witness { x: x.clone(), y: y.clone(), z: Some(z.clone()), defect }
}

/// Decides `kind` on `alg`. Partial laws need `ctx.units`, C-associativity
/// laws need `ctx.c_span`.
pub fn check_identity<S: Scalar>(
    alg: &Algebra<S>,
    kind: IdentityKind,
    ctx: &IdentityContext<S>,
) -> Result<IdentityReport<S>> {
    let eps = alg.eps();
    let basis = alg.basis_elements();
    let mut method = Method::ExhaustiveBasis;

    let witness = match kind {
        IdentityKind::Associative => first_trilinear_failure(alg, &basis, &basis, &basis, |x, y, z| (x, y, z))?,
        IdentityKind::Commutative => {
            let mut found = None;
            'outer: for a in 0..basis.len() {
                for b in a + 1..basis.len() {
                    let d = alg.commutator(&basis[a], &basis[b])?;
                    if !d.is_zero(eps) {
                        found = Some(Witness { x: basis[a].clone(), y: basis[b].clone(), z: None, defect: d });
                        break 'outer;
                    }
                }
            }
            found
        }
        IdentityKind::LeftCAssoc | IdentityKind::MiddleCAssoc | IdentityKind::RightCAssoc => {
            let span = ctx
                .c_span
                .as_ref()
                .ok_or_else(|| Error::Context(format!("{kind} needs a designated C-span")))?;
            span.validate(alg)?;
            let cs: Vec<Element<S>> = span.elements().into_iter().cloned().collect();
            // slot order (z, x, y) with z ∈ C, permuted into position
            match kind {
                IdentityKind::LeftCAssoc => first_trilinear_failure(alg, &cs, &basis, &basis, |z, x, y| (z, x, y))?,
                IdentityKind::MiddleCAssoc => first_trilinear_failure(alg, &cs, &basis, &basis, |z, x, y| (x, z, y))?,
                _ => first_trilinear_failure(alg, &cs, &basis, &basis, |z, x, y| (x, y, z))?,
            }
        }
        IdentityKind::LeftAlt | IdentityKind::RightAlt | IdentityKind::Flexible => {
            quadratic_failure(alg, &basis, kind)?
        }
        IdentityKind::PartialLeftAlt | IdentityKind::PartialRightAlt | IdentityKind::PartialFlexible => {
            let set = ctx
                .units
                .as_ref()
                .ok_or_else(|| Error::Context(format!("{kind} needs a set of imaginary units")))?;
            if set.units.is_empty() {
                return Err(Error::Context(format!("{kind} needs a nonempty set of imaginary units")));
            }
            if !set.complete {
                method = Method::Sampled { n: set.units.len() };
            }
            partial_failure(alg, &basis, &set.units, kind)?
        }
    };

    Ok(IdentityReport { kind, holds: witness.is_none(), witness, method })
}

fn first_trilinear_failure<S: Scalar>(
    alg: &Algebra<S>,
    first: &[Element<S>],
    second: &[Element<S>],
    third: &[Element<S>],
    arrange: impl for<'a> Fn(&'a Element<S>, &'a Element<S>, &'a Element<S>) -> (&'a Element<S>, &'a Element<S>, &'a Element<S>),
) -> Result<Option<Witness<S>>> {
    for a in first {
        for b in second {
            for c in third {
                let (x, y, z) = arrange(a, b, c);
                let d = alg.associator(x, y, z)?;
                if !d.is_zero(alg.eps()) {
                    return Ok(Some(triple(x, y, z, d)));
                }
            }
        }
    }
    Ok(None)
}

/// Associator of the quadratic law with repeated slot filled by `(p, q)` and
/// free slot `y`.
fn quadratic_term<S: Scalar>(
    alg: &Algebra<S>,
    kind: IdentityKind,
    p: &Element<S>,
    q: &Element<S>,
    y: &Element<S>,
) -> Result<(Element<S>, [Element<S>; 3])> {
    let args = match kind {
        IdentityKind::LeftAlt | IdentityKind::PartialLeftAlt => [p.clone(), q.clone(), y.clone()],
        IdentityKind::Flexible | IdentityKind::PartialFlexible => [p.clone(), y.clone(), q.clone()],
        _ => [y.clone(), p.clone(), q.clone()],
    };
    Ok((alg.associator(&args[0], &args[1], &args[2])?, args))
}

fn quadratic_failure<S: Scalar>(
    alg: &Algebra<S>,
    basis: &[Element<S>],
    kind: IdentityKind,
) -> Result<Option<Witness<S>>> {
    let eps = alg.eps();
    for x in basis {
        for y in basis.iter().rev() {
            let (d, [a, b, c]) = quadratic_term(alg, kind, x, x, y)?;
            if !d.is_zero(eps) {
                return Ok(Some(triple(&a, &b, &c, d)));
            }
        }
    }
    for p in 0..basis.len() {
        for q in p + 1..basis.len() {
            for y in basis.iter().rev() {
                let (d1, _) = quadratic_term(alg, kind, &basis[p], &basis[q], y)?;
                let (d2, _) = quadratic_term(alg, kind, &basis[q], &basis[p], y)?;
                if !d1.add(&d2)?.is_zero(eps) {
                    // Diagonals vanish, so (s, s, y) with s = e_p + e_q equals the polarized sum.
                    let s = basis[p].add(&basis[q])?;
                    let (d, [a, b, c]) = quadratic_term(alg, kind, &s, &s, y)?;
                    return Ok(Some(triple(&a, &b, &c, d)));
                }
            }
        }
    }
    Ok(None)
}

fn partial_failure<S: Scalar>(
    alg: &Algebra<S>,
    basis: &[Element<S>],
    units: &[Element<S>],
    kind: IdentityKind,
) -> Result<Option<Witness<S>>> {
    for u in units {
        for y in basis.iter().rev() {
            let (d, [a, b, c]) = quadratic_term(alg, kind, u, u, y)?;
            if !d.is_zero(alg.eps()) {
                return Ok(Some(triple(&a, &b, &c, d)));
            }
        }
    }
    Ok(None)
}

/// Partial left alternativity, partial flexibility and partial right
/// alternativity over `units`, in that order.
pub fn check_partially_alternative<S: Scalar>(
    alg: &Algebra<S>,
    units: &[Element<S>],
    complete: bool,
) -> Result<Vec<IdentityReport<S>>> {
    let ctx = IdentityContext::with_units(units.to_vec(), complete);
    [IdentityKind::PartialLeftAlt, IdentityKind::PartialFlexible, IdentityKind::PartialRightAlt]
        .into_iter()
        .map(|k| check_identity(alg, k, &ctx))
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct StrictnessReport<S> {
    pub strict: bool,
    /// Which side condition fails, when strict.
    pub failing: Option<IdentityKind>,
    pub witness: Option<Witness<S>>,
}

/// Middle C-associative but not left or not right C-associative.
pub fn is_strictly_middle<S: Scalar>(alg: &Algebra<S>, span: &CSpan<S>) -> Result<StrictnessReport<S>> {
    let ctx = IdentityContext::with_c_span(span.clone());
    let middle = check_identity(alg, IdentityKind::MiddleCAssoc, &ctx)?;
    if !middle.holds {
        return Err(Error::NotApplicable("algebra is not middle C-associative for this span".into()));
    }
    for side in [IdentityKind::LeftCAssoc, IdentityKind::RightCAssoc] {
        let r = check_identity(alg, side, &ctx)?;
        if !r.holds {
            return Ok(StrictnessReport { strict: true, failing: Some(side), witness: r.witness });
        }
    }
    Ok(StrictnessReport { strict: false, failing: None, witness: None })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DivisionReport<S> {
    /// `true` means no zero divisor was found among the probes; it is not a
    /// proof.
    pub no_zero_divisor_found: bool,
    pub witness: Option<(Element<S>, Side)>,
    pub probes: usize,
    pub method: Method,
}

impl<S: Scalar> DivisionReport<S> {
    pub fn to_json(&self) -> Value {
        json!({
            "division": self.no_zero_divisor_found,
            "witness": self.witness.as_ref().map(|(a, side)| json!({"a": coords_json(a), "side": side})),
            "probes": self.probes,
            "method": self.method,
        })
    }
}

/// Looks for `a ≠ 0` with a singular `L_a` or `R_a` among the basis
/// vectors, pairwise basis sums, then `samples` random elements.
pub fn is_division_sampled<S: Sample>(alg: &Algebra<S>, samples: usize, seed: u64) -> Result<DivisionReport<S>> {
    let n = alg.dim();
    let mut probes: Vec<Element<S>> = alg.basis_elements();
    for a in 0..n {
        for b in a + 1..n {
            probes.push(alg.basis(a).add(&alg.basis(b))?);
        }
    }
    let mut rng = sampling::rng(seed);
    for _ in 0..samples.max(1) {
        let coords = sampling::sample_coords::<S>(n, &mut rng);
        let e = alg.element(coords)?;
        if !e.is_zero(alg.eps()) {
            probes.push(e);
        }
    }
    let total = probes.len();
    for a in probes {
        for side in [Side::Left, Side::Right] {
            let det = alg.mul_operator(&a, side)?.determinant();
            if is_singular(&det, &a, alg.eps()) {
                return Ok(DivisionReport {
                    no_zero_divisor_found: false,
                    witness: Some((a, side)),
                    probes: total,
                    method: Method::Sampled { n: total },
                });
            }
        }
    }
    Ok(DivisionReport { no_zero_divisor_found: true, witness: None, probes: total, method: Method::Sampled { n: total } })
}

fn is_singular<S: Scalar>(det: &S, a: &Element<S>, eps: f64) -> bool {
    if S::EXACT {
        return det.is_zero();
    }
    // det(L_a) is homogeneous of degree n in a
    let scale = a.norm().max(1e-300).powi(a.dim() as i32);
    det.to_f64().abs() <= eps * scale
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, TcParams, TnParams};
    use crate::scalar::{q, Rational};

    fn units_pm<S: Scalar>(alg: &Algebra<S>, label: &str) -> IdentityContext<S> {
        let u = alg.named(label);
        IdentityContext::with_units(vec![u.clone(), u.neg()], true)
    }

    #[test]
    fn quaternions_associative() {
        let h = catalog::quaternions();
        let r = check_identity(&h, IdentityKind::Associative, &IdentityContext::none()).unwrap();
        assert!(r.holds);
        assert_eq!(r.method, Method::ExhaustiveBasis);
        assert!(r.witness.is_none());
    }

    #[test]
    fn ak_not_left_alternative() {
        let a = catalog::ak(&[[q(1, 1), q(1, 1)]]).unwrap();
        let r = check_identity(&a, IdentityKind::LeftAlt, &IdentityContext::none()).unwrap();
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert_eq!((&w.x, &w.y, w.z.as_ref().unwrap()), (&a.named("v11"), &a.named("v11"), &a.named("v12")));
        assert_eq!(w.defect, a.named("v12"));
    }

    #[test]
    fn example_tn_fails_partial_right_at_jkk() {
        let t = catalog::tn(&TnParams { a: q(-1, 1), g: q(1, 1), h: q(1, 1), ..TnParams::zero() }).unwrap();
        let k = t.named("k");
        assert_eq!(t.square(&k).unwrap(), t.named("1").neg());
        let r = check_identity(&t, IdentityKind::PartialRightAlt, &units_pm(&t, "k")).unwrap();
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert_eq!((&w.x, &w.y, w.z.as_ref().unwrap()), (&t.named("j"), &k, &k));
        assert!(!w.defect.is_zero(0.0));
    }

    #[test]
    fn special_tn_is_c_associative_on_all_sides() {
        let t = catalog::tn_special_case(&q(1, 1), &q(1, 1)).unwrap();
        let ctx = IdentityContext::with_c_span(CSpan::with_basis(&t, 1).unwrap());
        for kind in [IdentityKind::LeftCAssoc, IdentityKind::MiddleCAssoc, IdentityKind::RightCAssoc] {
            assert!(check_identity(&t, kind, &ctx).unwrap().holds, "{kind}");
        }
    }

    #[test]
    fn missing_context_is_an_error() {
        let h = catalog::quaternions();
        for kind in [IdentityKind::PartialLeftAlt, IdentityKind::MiddleCAssoc] {
            assert!(matches!(check_identity(&h, kind, &IdentityContext::none()), Err(Error::Context(_))));
        }
        let empty = IdentityContext::with_units(Vec::new(), true);
        assert!(check_identity(&h, IdentityKind::PartialFlexible, &empty).is_err());
    }

    #[test]
    fn strictness() {
        let mzero = catalog::mzero();
        let span = CSpan::with_basis(&mzero, 1).unwrap();
        assert!(!is_strictly_middle(&mzero, &span).unwrap().strict);

        // Hand expansion from the tc table with (a,b,f,g,h) = (1,0,0,0,1):
        // (i j) j = k j = f + g i + h j = j, while i (j j) = i (a + b i) = i.
        let t = catalog::tc(&TcParams::from_array([q(1, 1), q(0, 1), q(0, 1), q(0, 1), q(1, 1)])).unwrap();
        let (i, j) = (t.named("i"), t.named("j"));
        let left = t.mul(&t.mul(&i, &j).unwrap(), &j).unwrap();
        let right = t.mul(&i, &t.mul(&j, &j).unwrap()).unwrap();
        assert_eq!(left, j);
        assert_eq!(right, i);
        let r = is_strictly_middle(&t, &CSpan::with_basis(&t, 1).unwrap()).unwrap();
        assert!(r.strict);

        let t3 = catalog::tn(&TnParams { a: q(-1, 1), g: q(1, 1), h: q(1, 1), ..TnParams::zero() }).unwrap();
        let r = is_strictly_middle(&t3, &CSpan::with_basis(&t3, 1).unwrap()).unwrap();
        assert!(r.strict);
        assert!(!r.witness.unwrap().defect.is_zero(0.0));
    }

    #[test]
    fn strictness_needs_middle_condition() {
        // span{1, j} in the quaternions is middle C-associative (ℍ is
        // associative); pick a nonassociative algebra where it fails instead.
        let a = catalog::ak(&[[q(1, 1), q(1, 1)]]).unwrap();
        let span = CSpan::with_basis(&a, 2).unwrap();
        assert!(matches!(is_strictly_middle(&a, &span), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn division_sampling() {
        let h = catalog::quaternions();
        assert!(is_division_sampled(&h, 50, 0).unwrap().no_zero_divisor_found);

        let mp = catalog::mplus();
        let r = is_division_sampled(&mp, 50, 0).unwrap();
        assert!(!r.no_zero_divisor_found);
        let (a, _) = r.witness.unwrap();
        assert_eq!(a, mp.combo(&[(q(1, 1), "1"), (q(1, 1), "j")]));

        let a1 = catalog::ak(&[[q(2, 1), q(3, 1)]]).unwrap();
        let r = is_division_sampled(&a1, 10, 0).unwrap();
        let (w, side) = r.witness.unwrap();
        assert_eq!(w, a1.named("v11"));
        assert_eq!(side, Side::Left);
        // independent check: v11 * v12 = 0 makes L_v11 singular
        assert!(a1.mul(&a1.named("v11"), &a1.named("v12")).unwrap().is_zero(0.0));

        let hf = h.to_float(1e-9);
        assert!(is_division_sampled(&hf, 100, 3).unwrap().no_zero_divisor_found);
    }

    #[test]
    fn partial_left_defect_two_paths() {
        // (x, x, y) = x²y - x(xy) = -y - x(xy) when x² = -1.
        let h = catalog::quaternions();
        let x = h.named("j");
        let mut rng = sampling::rng(5);
        for _ in 0..20 {
            let y = h.element(sampling::sample_coords::<Rational>(4, &mut rng)).unwrap();
            let direct = h.associator(&x, &x, &y).unwrap();
            let other = y.neg().sub(&h.mul(&x, &h.mul(&x, &y).unwrap()).unwrap()).unwrap();
            assert_eq!(direct, other);
        }
    }

    #[test]
    fn identity_names_round_trip() {
        for k in IdentityKind::ALL {
            assert_eq!(k.name().parse::<IdentityKind>().unwrap(), k);
        }
        assert!("nonsense".parse::<IdentityKind>().is_err());
    }

    #[test]
    fn report_json_shape() {
        let a = catalog::ak(&[[q(1, 1), q(1, 1)]]).unwrap();
        let r = check_identity(&a, IdentityKind::LeftAlt, &IdentityContext::none()).unwrap();
        let v = r.to_json();
        assert_eq!(v["kind"], "left-alt");
        assert_eq!(v["holds"], false);
        assert_eq!(v["witness"]["defect"], json!(["0", "0", "0", "1"]));
        assert_eq!(v["method"]["type"], "exhaustive-basis");
    }
}
