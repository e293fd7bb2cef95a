//! The verification suite behind `altkit verify-paper`: each claim re-derives
//! one published statement from the structure constants and reports
//! PASS/FAIL with a short detail line.

use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::catalog::{self, TcParams, TnParams, TpParams};
use crate::error::Result;
use crate::identities::{check_identity, is_strictly_middle, CSpan, IdentityContext, IdentityKind};
use crate::lie::{self, check_jacobi, classify_tp_lie, derived_dims, lieify, LieType};
use crate::sampling::{self, nonzero_rational, positive_rational, Sample};
use crate::scalar::{format_rational, q, Rational, Scalar, DEFAULT_EPS};
use crate::structure::{self, classify_middle_c, commutative_nucleus, LinearMap, MiddleCClass};
use crate::units::{self, classify_locus_tn, verify_unit, LocusKind, NewtonOptions};

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub eps: f64,
    pub seed: u64,
    pub samples: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self { eps: DEFAULT_EPS, seed: sampling::DEFAULT_SEED, samples: sampling::DEFAULT_SAMPLES }
    }
}

pub struct Claim {
    pub id: &'static str,
    pub module: &'static str,
    pub anchor: &'static str,
    run: fn(&SuiteOptions) -> Result<Outcome>,
}

pub struct Outcome {
    pub passed: bool,
    pub detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { passed, detail: detail.into() })
}

#[derive(Debug, Clone)]
pub struct ClaimResult {
    pub id: &'static str,
    pub module: &'static str,
    pub anchor: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl ClaimResult {
    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "module": self.module,
            "anchor": self.anchor,
            "status": if self.passed { "PASS" } else { "FAIL" },
            "detail": self.detail,
        })
    }

    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        format!("{status} [{}] {} ({}): {}", self.module, self.id, self.anchor, self.detail)
    }
}

pub const MODULES: [&str; 5] = ["catalog", "identities", "units", "structure", "lie"];

pub fn all_claims() -> Vec<Claim> {
    vec![
        Claim { id: "ak-dimension", module: "catalog", anchor: "A_k construction", run: ak_dimension },
        Claim { id: "ak-commutative", module: "identities", anchor: "A_k table is symmetric", run: ak_commutative },
        Claim { id: "ak-partially-alternative", module: "identities", anchor: "A_k is partially alternative", run: ak_partial },
        Claim { id: "ak-not-alternative", module: "identities", anchor: "A_k is not alternative, witness (v11, v11, v12)", run: ak_not_alternative },
        Claim { id: "tn-special-c-associative", module: "identities", anchor: "Tn special case is C-associative but not alternative", run: tn_special },
        Claim { id: "tn-middle-not-partial-right", module: "identities", anchor: "middle C-associative Tn failing partial right alternativity", run: tn_example_right },
        Claim { id: "tc-strict-partially-alternative", module: "identities", anchor: "commutative strictly middle C-associative algebras", run: tc_strict },
        Claim { id: "implication-matrix", module: "identities", anchor: "associative implies alternative implies partially alternative", run: implication_matrix },
        Claim { id: "ak-units-newton", module: "units", anchor: "A_k imaginary units are {e1, -e1}", run: ak_units_newton },
        Claim { id: "ak-units-grid", module: "units", anchor: "A_k imaginary units are {e1, -e1}", run: ak_units_grid },
        Claim { id: "units-in-span-ijk", module: "units", anchor: "units of partially alternative Tn lie in span{i, j, k}", run: units_in_span },
        Claim { id: "locus-shapes", module: "units", anchor: "hyperboloid, parallel planes and sphere loci", run: locus_shapes },
        Claim { id: "explicit-units", module: "units", anchor: "explicit units used in the classification proof", run: explicit_units },
        Claim { id: "middle-c-positive", module: "structure", anchor: "classification, case a > 0", run: middle_c_positive },
        Claim { id: "middle-c-zero", module: "structure", anchor: "classification, case a = 0", run: middle_c_zero },
        Claim { id: "middle-c-negative", module: "structure", anchor: "classification, case a < 0", run: middle_c_negative },
        Claim { id: "targets-associative", module: "structure", anchor: "M+, M0 and H are associative", run: targets_associative },
        Claim { id: "quaternion-nucleus", module: "structure", anchor: "commutative nucleus of a division algebra is R1", run: quaternion_nucleus },
        Claim { id: "reflection-eigenspaces", module: "structure", anchor: "reflection eigenspaces are 2 + 2 with B isomorphic to C", run: reflection_eigenspaces },
        Claim { id: "reflection-products", module: "structure", anchor: "BC = CB = C and CC = B", run: reflection_products },
        Claim { id: "reflection-anticommute", module: "structure", anchor: "iy = -yi for y in C", run: reflection_anticommute },
        Claim { id: "tp-table", module: "structure", anchor: "Tp multiplication table", run: tp_table },
        Claim { id: "tp-jacobi", module: "lie", anchor: "Tp commutator algebra is a Lie algebra", run: tp_jacobi },
        Claim { id: "lie-beta-positive", module: "lie", anchor: "beta != 0 gives g1 + g3,7 (beta > 0 instances)", run: lie_beta_positive },
        Claim { id: "lie-beta-negative", module: "lie", anchor: "beta != 0 gives g1 + g3,7 (beta < 0 instances)", run: lie_beta_negative },
        Claim { id: "lie-zero-bracket", module: "lie", anchor: "alpha = beta = 0 gives g1 + g3,5", run: lie_zero },
        Claim { id: "lie-alpha-only", module: "lie", anchor: "alpha != 0, beta = 0 gives g4,9 with zero parameter", run: lie_alpha_only },
        Claim { id: "lie-derived-series", module: "lie", anchor: "derived series of the Tp Lie algebra", run: lie_derived },
        Claim { id: "lie-scale-invariance", module: "lie", anchor: "rescaling v and w multiplies (alpha, beta) by a square", run: lie_scale },
        Claim { id: "lie-witnesses", module: "lie", anchor: "every emitted basis change reproduces its canonical table", run: lie_witnesses },
    ]
}

/// Runs every claim, or only those of `module`.
pub fn run_claims(opts: &SuiteOptions, only: Option<&str>) -> Vec<ClaimResult> {
    all_claims()
        .into_iter()
        .filter(|c| only.is_none_or(|m| m == c.module))
        .map(|c| {
            let (passed, detail) = match (c.run)(opts) {
                Ok(o) => (o.passed, o.detail),
                Err(e) => (false, format!("error: {e}")),
            };
            ClaimResult { id: c.id, module: c.module, anchor: c.anchor, passed, detail }
        })
        .collect()
}

fn ak_draws(opts: &SuiteOptions, k: usize, draws: usize) -> Vec<Vec<[Rational; 2]>> {
    let mut rng = sampling::rng(opts.seed ^ (k as u64) << 8);
    (0..draws)
        .map(|_| (0..k).map(|_| [positive_rational(&mut rng, 9, 4), positive_rational(&mut rng, 9, 4)]).collect())
        .collect()
}

fn ak_dimension(opts: &SuiteOptions) -> Result<Outcome> {
    for k in 1..=5 {
        for blocks in ak_draws(opts, k, 3) {
            let a = catalog::ak(&blocks)?;
            if a.dim() != 2 * k + 2 {
                return outcome(false, format!("k = {k}: dimension {}", a.dim()));
            }
        }
    }
    outcome(true, "dim = 2k + 2 for k = 1..5")
}

fn ak_commutative(opts: &SuiteOptions) -> Result<Outcome> {
    for k in 1..=5 {
        for blocks in ak_draws(opts, k, 3) {
            let a = catalog::ak(&blocks)?;
            if !check_identity(&a, IdentityKind::Commutative, &IdentityContext::none())?.holds {
                return outcome(false, format!("k = {k} not commutative"));
            }
        }
    }
    outcome(true, "commutative for k = 1..5, 3 draws each")
}

fn ak_partial(opts: &SuiteOptions) -> Result<Outcome> {
    for k in 1..=5 {
        for blocks in ak_draws(opts, k, 3) {
            let a = catalog::ak(&blocks)?;
            let e1 = a.named("e1");
            let ctx = IdentityContext::with_units(vec![e1.clone(), e1.neg()], true);
            for kind in [IdentityKind::PartialLeftAlt, IdentityKind::PartialRightAlt, IdentityKind::PartialFlexible] {
                if !check_identity(&a, kind, &ctx)?.holds {
                    return outcome(false, format!("k = {k}: {kind} fails"));
                }
            }
        }
    }
    outcome(true, "partial left, right and flexible laws hold exactly on {e1, -e1} for k = 1..5")
}

fn ak_not_alternative(opts: &SuiteOptions) -> Result<Outcome> {
    for k in 1..=5 {
        for blocks in ak_draws(opts, k, 3) {
            let a = catalog::ak(&blocks)?;
            let r = check_identity(&a, IdentityKind::LeftAlt, &IdentityContext::none())?;
            if r.holds {
                return outcome(false, format!("k = {k}: left alternative"));
            }
            let (v11, v12) = (a.named("v11"), a.named("v12"));
            let defect = a.associator(&v11, &v11, &v12)?;
            if defect != v12.scale(&blocks[0][0]) {
                return outcome(false, format!("k = {k}: (v11, v11, v12) has the wrong defect"));
            }
        }
    }
    outcome(true, "left alternativity fails at (v11, v11, v12) with defect a11 v12")
}

fn tn_special(opts: &SuiteOptions) -> Result<Outcome> {
    let mut rng = sampling::rng(opts.seed.wrapping_add(2));
    for _ in 0..5 {
        let (a, b) = (nonzero_rational(&mut rng, 9, 5), nonzero_rational(&mut rng, 9, 5));
        let t = catalog::tn_special_case(&a, &b)?;
        let ctx = IdentityContext::with_c_span(CSpan::with_basis(&t, 1)?);
        for kind in [IdentityKind::LeftCAssoc, IdentityKind::MiddleCAssoc, IdentityKind::RightCAssoc] {
            if !check_identity(&t, kind, &ctx)?.holds {
                return outcome(false, format!("(a, b) = ({}, {}): {kind} fails", format_rational(&a), format_rational(&b)));
            }
        }
        let j = t.named("j");
        let j2 = t.square(&j)?;
        if t.mul(&j2, &j)?.sub(&t.mul(&j, &j2)?)?.is_zero(0.0) {
            return outcome(false, "j^2 j = j j^2");
        }
    }
    outcome(true, "left, middle and right C-associative; j^2 j != j j^2 (5 draws)")
}

fn tn_example_right(_: &SuiteOptions) -> Result<Outcome> {
    let t = catalog::tn(&TnParams { a: q(-1, 1), g: q(1, 1), h: q(1, 1), ..TnParams::zero() })?;
    let middle = check_identity(&t, IdentityKind::MiddleCAssoc, &IdentityContext::with_c_span(CSpan::with_basis(&t, 1)?))?;
    let k = t.named("k");
    let k_unit = verify_unit(&t, &k, 0.0)?;
    let r = check_identity(&t, IdentityKind::PartialRightAlt, &IdentityContext::with_units(vec![k.clone(), k.neg()], true))?;
    let at_jkk = r.witness.as_ref().is_some_and(|w| w.x == t.named("j") && w.y == k && w.z.as_ref() == Some(&k));
    outcome(middle.holds && k_unit && !r.holds && at_jkk, "middle C-associative, k^2 = -1, (j, k, k) != 0")
}

fn tc_strict(opts: &SuiteOptions) -> Result<Outcome> {
    let mut rng = sampling::rng(opts.seed.wrapping_add(3));
    let mut strict = 0;
    for _ in 0..200 {
        if strict == 10 {
            break;
        }
        let h = if rand::Rng::gen_bool(&mut rng, 0.5) { q(1, 1) } else { q(0, 1) };
        let p = TcParams::from_array([
            Rational::sample(&mut rng),
            Rational::sample(&mut rng),
            Rational::sample(&mut rng),
            Rational::sample(&mut rng),
            h,
        ]);
        let t = catalog::tc(&p)?;
        let Ok(s) = is_strictly_middle(&t, &CSpan::with_basis(&t, 1)?) else { continue };
        if !s.strict {
            continue;
        }
        strict += 1;
        let i = t.named("i");
        let ctx = IdentityContext::with_units(vec![i.clone(), i.neg()], true);
        for kind in [IdentityKind::PartialLeftAlt, IdentityKind::PartialRightAlt, IdentityKind::PartialFlexible] {
            if !check_identity(&t, kind, &ctx)?.holds {
                return outcome(false, format!("strict draw fails {kind}"));
            }
        }
    }
    outcome(strict == 10, format!("{strict} strictly middle draws, all partially alternative on {{i, -i}}"))
}

/// Unit set used for the implication sweep: exact when finite, sampled
/// points otherwise.
fn float_units(alg: &Algebra<Rational>, opts: &SuiteOptions) -> Result<(Algebra<f64>, Vec<crate::algebra::Element<f64>>)> {
    let fa = alg.to_float(opts.eps.max(1e-9));
    let locus = units::units_of(alg, &NewtonOptions { seeds: 40, seed: opts.seed, ..Default::default() })?;
    let units = locus.float_units(&fa, 24, opts.seed)?;
    Ok((fa, units))
}

pub fn implication_violations(opts: &SuiteOptions) -> Result<Vec<String>> {
    let none = IdentityContext::none();
    let mut bad = Vec::new();
    for (name, alg) in catalog::representatives() {
        let holds = |k| check_identity(&alg, k, &none).map(|r| r.holds);
        let assoc = holds(IdentityKind::Associative)?;
        let la = holds(IdentityKind::LeftAlt)?;
        let ra = holds(IdentityKind::RightAlt)?;
        let fl = holds(IdentityKind::Flexible)?;
        if assoc && !(la && ra && fl) {
            bad.push(format!("{name}: associative but not alternative and flexible"));
        }
        let (fa, us) = float_units(&alg, opts)?;
        if us.is_empty() {
            continue;
        }
        let ctx = IdentityContext::with_units(us, false);
        for (strong, weak) in [
            (la, IdentityKind::PartialLeftAlt),
            (ra, IdentityKind::PartialRightAlt),
            (fl, IdentityKind::PartialFlexible),
        ] {
            if strong && !check_identity(&fa, weak, &ctx)?.holds {
                bad.push(format!("{name}: stronger law holds but {weak} fails"));
            }
        }
    }
    Ok(bad)
}

fn implication_matrix(opts: &SuiteOptions) -> Result<Outcome> {
    let bad = implication_violations(opts)?;
    let n = catalog::representatives().len();
    outcome(bad.is_empty(), if bad.is_empty() { format!("consistent on {n} catalog algebras") } else { bad.join("; ") })
}

fn ak_units_newton(opts: &SuiteOptions) -> Result<Outcome> {
    for k in 1..=5 {
        let blocks = &ak_draws(opts, k, 1)[0];
        let a = catalog::ak(blocks)?;
        let cloud = units::solve_units_sampled(&a, &NewtonOptions { seeds: opts.samples.min(400), seed: opts.seed, tol: opts.eps, ..Default::default() })?;
        let e1 = a.index_of("e1").expect("label");
        let ok = cloud.points.len() == 2
            && cloud.points.iter().all(|p| {
                p.iter().enumerate().all(|(i, c)| if i == e1 { (c.abs() - 1.0).abs() <= 1e-8 } else { c.abs() <= 1e-8 })
            });
        if !ok {
            return outcome(false, format!("k = {k}: Newton found {} points", cloud.points.len()));
        }
    }
    outcome(true, "Newton finds exactly {e1, -e1} for k = 1..5")
}

fn ak_units_grid(opts: &SuiteOptions) -> Result<Outcome> {
    for k in 1..=3 {
        let blocks = &ak_draws(opts, k, 1)[0];
        let a = catalog::ak(blocks)?.to_float(opts.eps);
        let hits = units::grid_search_ak(&a, -3.0, 3.0, 0.25, 1e-9)?;
        let ok = hits.len() == 2 && hits.iter().all(|h| h[1].abs() == 1.0 && h.iter().enumerate().all(|(i, c)| i == 1 || *c == 0.0));
        if !ok {
            return outcome(false, format!("k = {k}: {} grid hits", hits.len()));
        }
    }
    outcome(true, "grid [-3, 3] step 1/4 on each span{1, e1, v_i1, v_i2} finds only {e1, -e1} for k <= 3")
}

fn units_in_span(opts: &SuiteOptions) -> Result<Outcome> {
    let mut total = 0;
    for (name, alg) in [("M+", catalog::mplus()), ("M0", catalog::mzero()), ("H", catalog::quaternions())] {
        let cloud = units::solve_units_sampled(&alg, &NewtonOptions { seeds: opts.samples.min(200), seed: opts.seed, tol: opts.eps, ..Default::default() })?;
        if cloud.points.is_empty() {
            return outcome(false, format!("{name}: no units found"));
        }
        if let Some(p) = cloud.points.iter().find(|p| p[0].abs() > 1e-8) {
            return outcome(false, format!("{name}: unit with real part {}", p[0]));
        }
        total += cloud.points.len();
    }
    outcome(true, format!("{total} Newton units, every real part below 1e-8"))
}

fn locus_shapes(_: &SuiteOptions) -> Result<Outcome> {
    let cases = [
        (catalog::mplus_params(), LocusKind::HyperboloidTwoSheets, "-x^2 + y^2 + z^2 = -1"),
        (catalog::mzero_params(), LocusKind::ParallelPlanes, "x^2 = 1"),
        (catalog::quaternion_params(), LocusKind::Sphere, "x^2 + y^2 + z^2 = 1"),
    ];
    for (p, kind, eq) in cases {
        let l = classify_locus_tn(&p);
        let text = l.equation.as_ref().map(|e| e.to_string()).unwrap_or_default();
        if l.kind != kind || text != eq {
            return outcome(false, format!("got {:?} with {text}", l.kind));
        }
    }
    outcome(true, "M+: -x^2 + y^2 + z^2 = -1, M0: x^2 = 1, H: x^2 + y^2 + z^2 = 1")
}

fn explicit_units(opts: &SuiteOptions) -> Result<Outcome> {
    let mp = catalog::mplus().to_float(opts.eps);
    let q1 = mp.element(vec![0.0, 2f64.sqrt(), 1.0, 0.0])?;
    let m0 = catalog::mzero();
    let q2 = m0.combo(&[(q(1, 1), "i"), (q(1, 1), "j")]);
    outcome(verify_unit(&mp, &q1, opts.eps)? && verify_unit(&m0, &q2, 0.0)?, "sqrt(2) i + j in M+, i + j in M0")
}

fn middle_c_case(opts: &SuiteOptions, sign: i64, expected: MiddleCClass) -> Result<Outcome> {
    let mut rng = sampling::rng(opts.seed.wrapping_add(5).wrapping_add(sign as u64));
    let values: Vec<Rational> = if sign == 0 {
        vec![q(0, 1)]
    } else {
        (0..3).map(|_| positive_rational(&mut rng, 9, 4) * q(sign, 1)).collect()
    };
    for a in values {
        let p = TnParams { a: a.clone(), g: -a.clone(), ..TnParams::zero() };
        let r = classify_middle_c(&p, opts.eps, opts.seed)?;
        if r.class != expected || !r.witness_verified {
            return outcome(false, format!("a = {}: {:?} (witness verified: {})", format_rational(&a), r.class, r.witness_verified));
        }
    }
    outcome(true, format!("classified as {expected:?} with verified diagonal isomorphisms"))
}

fn middle_c_positive(opts: &SuiteOptions) -> Result<Outcome> {
    middle_c_case(opts, 1, MiddleCClass::Mplus)
}

fn middle_c_zero(opts: &SuiteOptions) -> Result<Outcome> {
    middle_c_case(opts, 0, MiddleCClass::Mzero)
}

fn middle_c_negative(opts: &SuiteOptions) -> Result<Outcome> {
    middle_c_case(opts, -1, MiddleCClass::H)
}

fn targets_associative(_: &SuiteOptions) -> Result<Outcome> {
    for alg in [catalog::mplus(), catalog::mzero(), catalog::quaternions()] {
        if !check_identity(&alg, IdentityKind::Associative, &IdentityContext::none())?.holds {
            return outcome(false, "a target is not associative");
        }
    }
    outcome(true, "all three targets associative")
}

fn quaternion_nucleus(_: &SuiteOptions) -> Result<Outcome> {
    let h = catalog::quaternions();
    let nc = commutative_nucleus(&h)?;
    outcome(nc.len() == 1 && nc[0] == h.named("1"), format!("nucleus dimension {}", nc.len()))
}

fn quaternion_decomposition() -> Result<structure::ReflectionDecomposition<Rational>> {
    let h = catalog::quaternions();
    let phi = LinearMap::diagonal(&h, &[q(1, 1), q(1, 1), q(-1, 1), q(-1, 1)])?;
    structure::reflection_decompose(&h, &phi)
}

fn reflection_eigenspaces(_: &SuiteOptions) -> Result<Outcome> {
    let d = quaternion_decomposition()?;
    let ok = d.b_basis.len() == 2 && d.c_basis.len() == 2 && d.checks.i_squared_is_minus_one && d.checks.b_fixed && d.checks.c_negated;
    outcome(ok, "dim B = dim C = 2, i^2 = -1 in B")
}

fn reflection_products(_: &SuiteOptions) -> Result<Outcome> {
    let c = quaternion_decomposition()?.checks;
    outcome(c.bc_in_c && c.cb_in_c && c.cc_in_b, "BC and CB in C, CC in B on basis pairs")
}

fn reflection_anticommute(_: &SuiteOptions) -> Result<Outcome> {
    let c = quaternion_decomposition()?.checks;
    outcome(c.anticommutes_with_c, "iy + yi = 0 for y in C")
}

fn tp_table(_: &SuiteOptions) -> Result<Outcome> {
    let d = quaternion_decomposition()?;
    let expected = [-1, 0, 0, -1, 0, 1, -1, 0].map(|x| q(x, 1));
    let ok = d.tp_params == expected && d.checks.tp_rows && d.checks.tp_table_reproduced;
    let shown: Vec<String> = d.tp_params.iter().map(format_rational).collect();
    outcome(ok, format!("Tp parameters ({}) with w = j, v = -k", shown.join(", ")))
}

fn tp_jacobi(opts: &SuiteOptions) -> Result<Outcome> {
    let mut rng = sampling::rng(opts.seed.wrapping_add(11));
    for n in 0..100 {
        let p = TpParams::from_array(std::array::from_fn(|_| Rational::sample(&mut rng)));
        let l = lieify(&catalog::tp(&p)?);
        if !check_jacobi(&l).holds {
            return outcome(false, format!("draw {n} violates Jacobi"));
        }
    }
    outcome(true, "Jacobi identity on all basis triples for 100 random Tp tables")
}

fn lie_types(cases: &[(i64, i64)], expected: LieType) -> Result<Outcome> {
    let mut got = Vec::new();
    let mut ok = true;
    for &(a, b) in cases {
        let c = classify_tp_lie(&q(a, 1), &q(b, 1))?;
        ok &= c.type_tag == expected;
        got.push(format!("({a}, {b}) -> {}", c.type_tag));
    }
    outcome(ok, got.join(", "))
}

fn lie_beta_positive(_: &SuiteOptions) -> Result<Outcome> {
    lie_types(&[(0, 2), (-1, 4)], LieType::G1PlusG37)
}

fn lie_beta_negative(_: &SuiteOptions) -> Result<Outcome> {
    let mut o = lie_types(&[(0, -3), (3, -5)], LieType::G1PlusG37)?;
    if !o.passed {
        o.detail.push_str("; the Killing form on span{i, v, w} is diag(-8, -4 beta, -4 beta), indefinite for beta < 0");
    }
    Ok(o)
}

fn lie_zero(_: &SuiteOptions) -> Result<Outcome> {
    let c = classify_tp_lie(&q(0, 1), &q(0, 1))?;
    outcome(c.type_tag == LieType::G1PlusG35 && c.parameter == Some(0.0), format!("(0, 0) -> {} with beta' = {:?}", c.type_tag, c.parameter))
}

fn lie_alpha_only(_: &SuiteOptions) -> Result<Outcome> {
    lie_types(&[(1, 0), (-2, 0)], LieType::G49Zero)
}

fn lie_derived(_: &SuiteOptions) -> Result<Outcome> {
    let dims = |a: i64, b: i64| lie::tp_with_bracket(&q(a, 1), &q(b, 1)).map(|t| derived_dims(&lieify(&t)));
    let mut ok = true;
    let mut shown = Vec::new();
    for (a, b) in [(1, 0), (-2, 0)] {
        let d = dims(a, b)?;
        ok &= d == [4, 3, 1, 0];
        shown.push(format!("({a}, {b}): {d:?}"));
    }
    for (a, b) in [(0, 2), (0, -3), (3, -5), (-1, 4)] {
        let d = dims(a, b)?;
        ok &= d == [4, 3, 3];
        shown.push(format!("({a}, {b}): {d:?}"));
    }
    outcome(ok, shown.join(", "))
}

fn lie_scale(opts: &SuiteOptions) -> Result<Outcome> {
    let mut rng = sampling::rng(opts.seed.wrapping_add(13));
    for _ in 0..20 {
        let (a, b) = (Rational::sample(&mut rng), Rational::sample(&mut rng));
        let lambda = nonzero_rational(&mut rng, 7, 5);
        let l2 = lambda.clone() * lambda;
        let t1 = classify_tp_lie(&a, &b)?.type_tag;
        let t2 = classify_tp_lie(&(l2.clone() * a.clone()), &(l2 * b.clone()))?.type_tag;
        if t1 != t2 {
            return outcome(false, format!("({}, {}) changes type under rescaling", format_rational(&a), format_rational(&b)));
        }
    }
    outcome(true, "type unchanged under (alpha, beta) -> (l^2 alpha, l^2 beta) for 20 random l")
}

fn lie_witnesses(_: &SuiteOptions) -> Result<Outcome> {
    let mut bad = Vec::new();
    for (a, b) in [(0, 2), (0, -3), (0, 0), (1, 0), (-2, 0), (3, -5), (-1, 4)] {
        let c = classify_tp_lie(&q(a, 1), &q(b, 1))?;
        if !c.witness_verified {
            bad.push(format!("({a}, {b})"));
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { "7 of 7 witnesses verified".to_string() } else { format!("unverified: {}", bad.join(", ")) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn at_least_twenty_claims_with_unique_ids() {
        let claims = all_claims();
        assert!(claims.len() >= 20);
        let mut ids: Vec<_> = claims.iter().map(|c| c.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), claims.len());
        assert!(claims.iter().all(|c| MODULES.contains(&c.module)));
    }

    #[test]
    fn module_filter() {
        let r = run_claims(&SuiteOptions::default(), Some("structure"));
        assert!(!r.is_empty());
        assert!(r.iter().all(|c| c.module == "structure" && c.passed), "{:?}", r);
    }
}
