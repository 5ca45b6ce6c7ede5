//! Check suites run against a construction.

use std::sync::Arc;

use malachite_base::num::basic::traits::One;
use serde::Serialize;

use super::build::{default_u_element, scalar_diagonal, rational_diagonal, Construction};
use super::config::{InterpolationName, PathBlock, PathKindName, PsiSource, SuiteName, Source, ConfigError};
use crate::algebra::degree3::{AlgebraKind, Degree3Algebra};
use crate::algebra::involution::SecondKindInvolution;
use crate::cubic::{compare_generic_adjoint, verify_axioms, CubicForm, CubicNormStructure};
use crate::linalg::Vector;
use crate::maps::chi::{chi_normalizer, ChiVariant};
use crate::maps::extension::{
    aut_fixing_s, extend_aut_first, extend_aut_second, extend_aut_second_simplified, extend_sim_first,
    extend_sim_second, sigma_b_mutation_factor, sim_first_expected_factor, sim_second_expected_factor,
};
use crate::maps::kernel::{stab_kernel_element, triple_map, triple_map_inverse_q};
use crate::maps::unitary::{
    norm_one_scalar, random_invertible, random_similitude, random_special_unitary, unitary_with_norm,
};
use crate::maps::yanchevskii::{check_factorization, yanchevskii_factor};
use crate::maps::CertifyOptions;
use crate::paths::{
    endpoint_certificate, hermitian_path, isometry_correction, normal_path, u_path_with, Interpolation,
    PathCertificate, RationalPath,
};
use crate::rational::{fmt_q, qr, Q};
use crate::sample::Sampler;
use crate::scalar::Scalar;
use crate::tits::{first_as_second, AdjointCorruption, Built, FirstTits, SecondTits};

/// Outcome of one suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteRecord {
    pub suite: SuiteName,
    pub checks: usize,
    pub passed: usize,
    pub first_failure: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<PathCertificate>,
}

impl SuiteRecord {
    fn new(suite: SuiteName) -> Self {
        SuiteRecord {
            suite,
            checks: 0,
            passed: 0,
            first_failure: None,
            notes: Vec::new(),
            certificates: Vec::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.checks > 0 && self.passed == self.checks
    }

    fn observe(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if ok {
            self.passed += 1;
        } else if self.first_failure.is_none() {
            self.first_failure = Some(witness());
        }
    }

    fn observe_result<T>(&mut self, what: &str, r: crate::error::Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.observe(false, || format!("{what}: {e}"));
                None
            }
        }
    }
}

/// Seed, sample budget and certification options shared by the suites.
#[derive(Clone, Copy, Debug)]
pub struct RunSettings {
    pub seed: u64,
    pub samples: usize,
    pub certify: CertifyOptions,
}

impl RunSettings {
    pub fn new(seed: u64, samples: usize) -> Self {
        RunSettings {
            seed,
            samples,
            certify: CertifyOptions { samples: 12, seed },
        }
    }

    fn rng(&self, tag: u64) -> Sampler {
        Sampler::new(self.seed ^ tag.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    fn fraction(&self, d: usize) -> usize {
        (self.samples / d).max(1)
    }
}

fn is_etale(j: &Built<FirstTits>) -> bool {
    *j.form.algebra().kind() == AlgebraKind::Etale
}

pub fn applicable(c: &Construction, suite: SuiteName) -> bool {
    use SuiteName::*;
    match suite {
        Algebra | Axioms | Adjoint | UOperator | Paths => true,
        Extension => !matches!(c, Construction::Reduced(_)),
        Kernel | Yanchevskii => matches!(c, Construction::Second(_)),
        Bridge => matches!(c, Construction::First(_)),
        Chi => matches!(c, Construction::First(j) if is_etale(j)),
    }
}

pub fn default_suites(c: &Construction) -> Vec<SuiteName> {
    SuiteName::ALL.into_iter().filter(|s| applicable(c, *s)).collect()
}

pub fn run_suite(
    c: &Construction,
    suite: SuiteName,
    settings: &RunSettings,
    path: &PathBlock,
    text: &str,
) -> Result<SuiteRecord, ConfigError> {
    let tag = suite as u64 + 1;
    Ok(match suite {
        SuiteName::Algebra => algebra_suite(c, settings, tag),
        SuiteName::Axioms => axioms_suite(c, settings),
        SuiteName::Adjoint => adjoint_suite(c.structure(), settings, tag),
        SuiteName::UOperator => u_operator_suite(c.structure(), settings, tag),
        SuiteName::Extension => match c {
            Construction::First(j) => extension_first(j, settings, tag),
            Construction::Second(j) => extension_second(j, settings, tag),
            Construction::Reduced(_) => unreachable!("checked by applicable"),
        },
        SuiteName::Kernel => match c {
            Construction::Second(j) => kernel_suite(j, settings, tag),
            _ => unreachable!("checked by applicable"),
        },
        SuiteName::Bridge => match c {
            Construction::First(j) => bridge_suite(j, settings, tag),
            _ => unreachable!("checked by applicable"),
        },
        SuiteName::Yanchevskii => match c {
            Construction::Second(j) => yanchevskii_suite(j, settings, tag),
            _ => unreachable!("checked by applicable"),
        },
        SuiteName::Chi => match c {
            Construction::First(j) => chi_suite(j, settings, tag),
            _ => unreachable!("checked by applicable"),
        },
        SuiteName::Paths => paths_suite(c, settings, path, text)?,
    })
}

fn check_degree3(rec: &mut SuiteRecord, d: &Degree3Algebra, rng: &mut Sampler, n: usize) {
    for _ in 0..n {
        let x = rng.vector(d.dim());
        let y = rng.vector(d.dim());
        let nxy = d.norm(&d.mul(&x, &y));
        let prod = d.norm(&x).try_mul(&d.norm(&y));
        rec.observe(prod.as_ref().is_ok_and(|p| *p == nxy), || {
            format!("N(xy) != N(x)N(y) at x = {x}, y = {y}")
        });
        let xs = d.mul(&x, &d.adjoint(&x));
        let expected = d.embed_center(&d.norm(&x));
        rec.observe(xs == expected, || format!("x x^# != N(x) at x = {x}"));
    }
}

fn check_involution(rec: &mut SuiteRecord, sigma: &SecondKindInvolution, rng: &mut Sampler, n: usize) {
    let b = sigma.algebra();
    for _ in 0..n {
        let x = rng.vector(b.dim());
        let y = rng.vector(b.dim());
        let lhs = sigma.apply(&b.mul(&x, &y));
        let rhs = b.mul(&sigma.apply(&y), &sigma.apply(&x));
        rec.observe(lhs == rhs && sigma.apply(&sigma.apply(&x)) == x, || {
            format!("{} is not an anti-involution at x = {x}, y = {y}", sigma.name())
        });
    }
}

fn algebra_suite(c: &Construction, settings: &RunSettings, tag: u64) -> SuiteRecord {
    let mut rec = SuiteRecord::new(SuiteName::Algebra);
    let mut rng = settings.rng(tag);
    let n = settings.fraction(4);
    match c {
        Construction::First(j) => check_degree3(&mut rec, j.form.algebra(), &mut rng, n),
        Construction::Second(j) => {
            check_degree3(&mut rec, j.form.algebra(), &mut rng, n);
            check_involution(&mut rec, j.form.sigma(), &mut rng, n);
            check_involution(&mut rec, j.form.sigma_u(), &mut rng, n);
        }
        Construction::Reduced(j) => {
            let o = j.form.octonions();
            for _ in 0..n {
                let x = rng.vector(8);
                let y = rng.vector(8);
                let xy = o.mul(&x, &y);
                rec.observe(o.norm(&xy) == o.norm(&x) * o.norm(&y), || {
                    format!("n(xy) != n(x)n(y) at x = {x}, y = {y}")
                });
                rec.observe(o.mul(&x, &o.mul(&x, &y)) == o.mul(&o.mul(&x, &x), &y), || {
                    format!("left alternative law fails at x = {x}, y = {y}")
                });
                let xx = o.mul(&x, &o.conj(&x));
                rec.observe(xx == o.unit().scale(&o.norm(&x)), || format!("x x_bar != n(x) at x = {x}"));
            }
        }
    }
    rec
}

fn axioms_suite(c: &Construction, settings: &RunSettings) -> SuiteRecord {
    let mut rec = SuiteRecord::new(SuiteName::Axioms);
    let report = verify_axioms(c.structure(), settings.samples, settings.seed);
    for r in &report.records {
        rec.checks += r.samples;
        rec.passed += r.samples - r.failures;
        if let (Some(w), None) = (&r.witness, &rec.first_failure) {
            rec.first_failure = Some(format!("{}: {w}", r.name));
        }
    }
    rec.notes.push(format!(
        "{} axiom records, {} samples each",
        report.records.len(),
        settings.samples
    ));
    // a first construction with the cross term dropped must be rejected
    if let Construction::First(j) = c {
        if j.form.corruption().is_none() {
            let bad = Built::new((*j.form).clone().with_corruption(Some(AdjointCorruption::DroppedYz)));
            let caught = !verify_axioms(&bad.structure, settings.fraction(10), settings.seed).all_passed();
            rec.observe(caught, || "adjoint with the -yz term dropped passed the axioms".into());
            rec.notes.push(format!("dropped -yz mutation caught: {caught}"));
        }
    }
    rec
}

fn adjoint_suite(s: &Arc<CubicNormStructure>, settings: &RunSettings, tag: u64) -> SuiteRecord {
    let mut rec = SuiteRecord::new(SuiteName::Adjoint);
    match compare_generic_adjoint(s, settings.samples, settings.seed ^ tag) {
        Ok((n, failure)) => {
            rec.checks = n;
            rec.passed = n - usize::from(failure.is_some());
            rec.first_failure = failure;
        }
        Err(e) => rec.observe(false, || e.to_string()),
    }
    rec
}

fn u_operator_suite(s: &Arc<CubicNormStructure>, settings: &RunSettings, tag: u64) -> SuiteRecord {
    let mut rec = SuiteRecord::new(SuiteName::UOperator);
    let mut rng = settings.rng(tag);
    for _ in 0..settings.fraction(2) {
        let a = rng.vector(s.dim());
        let x = rng.vector(s.dim());
        match s.u_operator(&a, &x) {
            Ok(ux) => {
                let na = s.norm(&a);
                let lhs = s.norm(&ux);
                let rhs = &na * &na * s.norm(&x);
                rec.observe(lhs == rhs, || format!("a = {a}, x = {x}: N(U_a x) = {lhs}, N(a)^2 N(x) = {rhs}"));
            }
            Err(e) => rec.observe(false, || e.to_string()),
        }
    }
    rec
}

fn extension_first(j: &Built<FirstTits>, settings: &RunSettings, tag: u64) -> SuiteRecord {
    let mut rec = SuiteRecord::new(SuiteName::Extension);
    let d = j.form.algebra();
    let mut rng = settings.rng(tag);
    let opts = settings.certify;
    for _ in 0..settings.fraction(4) {
        // h = g k with N(k) = 1
        let g = random_invertible(d, &mut rng);
        let p = random_invertible(d, &mut rng);
        let r = random_invertible(d, &mut rng);
        let (pi, ri) = (d.inverse(&p).expect("invertible"), d.inverse(&r).expect("invertible"));
        let k = d.mul(&d.mul3(&p, &r, &pi), &ri);
        let h = d.mul(&g, &k);
        if let Some(f) = rec.observe_result("aut extension", extend_aut_first(j, &g, &h, opts)) {
            rec.observe(f.is_automorphism(), || {
                format!("g = {g}, h = {h}: factor {}, fixes c: {}", fmt_q(f.factor()), f.fixes_base_point())
            });
        }
        let b = random_invertible(d, &mut rng);
        let c = random_invertible(d, &mut rng);
        let a = d.mul(&b, &c);
        let gamma = rng.nonzero_rational();
        if let Some(f) = rec.observe_result("similarity extension", extend_sim_first(j, &gamma, &a, &b, &c, opts)) {
            let e = sim_first_expected_factor(&j.form, &gamma, &b, &c);
            rec.observe(*f.factor() == e, || {
                format!("b = {b}, c = {c}, gamma = {gamma}: factor {} but expected {}", fmt_q(f.factor()), fmt_q(&e))
            });
        }
    }
    rec
}

fn extension_second(j: &Built<SecondTits>, settings: &RunSettings, tag: u64) -> SuiteRecord {
    let mut rec = SuiteRecord::new(SuiteName::Extension);
    let t = &j.form;
    let b = t.algebra();
    let mut rng = settings.rng(tag);
    let opts = settings.certify;
    let block = t.slice_dim();
    let mut mutation_checks = 0;
    for i in 0..settings.fraction(4) {
        let g = random_similitude(t.sigma(), &mut rng);
        let nu = b.norm(&g);
        let ratio = nu.try_mul(&nu.conjugate().and_then(|c| c.inverse()).expect("nonzero"));
        let Some(q0) = rec.observe_result("unitary of norm nu/nu_bar", ratio.and_then(|r| unitary_with_norm(&r, t.sigma_u(), 64, settings.seed))) else {
            continue;
        };
        let q = b.mul(&q0, &random_special_unitary(t.sigma_u(), &mut rng));
        if let Some(f) = rec.observe_result("aut extension", extend_aut_second(j, &g, &q, opts)) {
            rec.observe(f.is_automorphism() && f.stabilizes_leading_block(block), || {
                format!("g = {g}, q = {q}: factor {}, fixes c: {}", fmt_q(f.factor()), f.fixes_base_point())
            });
            if let Some(s) = rec.observe_result("simplified aut", extend_aut_second_simplified(j, &g, &q, opts)) {
                rec.observe(s.matrix() == f.matrix(), || format!("simplified form differs at g = {g}"));
            }
        }
        let q1 = random_special_unitary(t.sigma_u(), &mut rng);
        if let Some(f) = rec.observe_result("aut fixing the first summand", aut_fixing_s(j, &q1, opts)) {
            rec.observe(f.is_automorphism(), || format!("q' = {q1}: not an automorphism"));
        }

        let g = random_invertible(b, &mut rng);
        let gamma = rng.nonzero_rational();
        let target = b
            .inverse(&g)
            .map(|gi| b.norm(&b.mul(&t.sigma().apply(&gi), &g)));
        let Some(u0) = rec.observe_result("unitary of norm N(sigma(g)^-1 g)", target.and_then(|n| unitary_with_norm(&n, t.sigma_u(), 64, settings.seed))) else {
            continue;
        };
        let u = b.mul(&u0, &random_special_unitary(t.sigma_u(), &mut rng));
        if let Some(f) = rec.observe_result("similarity extension", extend_sim_second(j, &gamma, &g, &u, opts)) {
            let e = sim_second_expected_factor(t, &gamma, &g);
            rec.observe(*f.factor() == e, || {
                format!("g = {g}, gamma = {gamma}: factor {} but expected {}", fmt_q(f.factor()), fmt_q(&e))
            });
        }
        if i < 5 {
            mutation_checks += 1;
            let caught = sigma_b_mutation_factor(j, &gamma, &g, &u, opts).is_err();
            rec.observe(caught, || format!("sigma(b) in place of sigma(g) not detected at g = {g}"));
        }
    }
    rec.notes.push(format!("sigma(b) mutation checked at {mutation_checks} parameter sets"));
    rec
}

fn random_center_unit(k: &Arc<crate::scalar::FieldDescriptor>, rng: &mut Sampler) -> Scalar {
    loop {
        let coords = (0..k.degree()).map(|_| rng.rational()).collect();
        let a = Scalar::new(k, coords).expect("dimension matches");
        if a.is_invertible() {
            return a;
        }
    }
}

fn kernel_suite(j: &Built<SecondTits>, settings: &RunSettings, tag: u64) -> SuiteRecord {
    let mut rec = SuiteRecord::new(SuiteName::Kernel);
    let k = j.form.algebra().center().clone();
    let mut rng = settings.rng(tag);
    let opts = settings.certify;
    let n = settings.fraction(10);
    let mut inverse_q_identity = 0;
    for _ in 0..n {
        let alpha = random_center_unit(&k, &mut rng);
        let Some(triple) = rec.observe_result("kernel triple", stab_kernel_element(&j.form, &alpha)) else {
            continue;
        };
        if rec.observe_result("kernel triple", triple.validate(&j.form)).is_none() {
            continue;
        }
        if let Some(f) = rec.observe_result("kernel triple map", triple_map(j, &triple, opts)) {
            rec.observe(f.is_identity(), || format!("alpha = {alpha}: the induced map is not the identity"));
        }
        if triple_map_inverse_q(j, &triple, opts).is_ok_and(|f| f.is_identity()) {
            inverse_q_identity += 1;
        }
    }
    rec.notes.push(format!("with q inverted, the identity at {inverse_q_identity} of {n} alphas"));
    rec
}

fn bridge_suite(j: &Built<FirstTits>, settings: &RunSettings, tag: u64) -> SuiteRecord {
    let mut rec = SuiteRecord::new(SuiteName::Bridge);
    let Some(bridge) = rec.observe_result("bridge", first_as_second(&j.form)) else {
        return rec;
    };
    let c = j.structure.base_point();
    let image = bridge.phi.apply(&c);
    let c2 = bridge.second.base_point();
    rec.observe(image == c2, || format!("Phi(c) = {image}, base point {c2}"));
    rec.observe(bridge.phi.inverse().is_some(), || "Phi is not invertible".into());
    let mut rng = settings.rng(tag);
    for _ in 0..settings.samples {
        let v = rng.vector(j.form.dim());
        let lhs = bridge.second.norm(&bridge.phi.apply(&v));
        let rhs = j.form.norm(&v);
        rec.observe(lhs == rhs, || format!("v = {v}: N(Phi v) = {lhs}, N(v) = {rhs}"));
    }
    rec
}

fn yanchevskii_suite(j: &Built<SecondTits>, settings: &RunSettings, tag: u64) -> SuiteRecord {
    let mut rec = SuiteRecord::new(SuiteName::Yanchevskii);
    let sigma = j.form.sigma();
    let mut rng = settings.rng(tag);
    for _ in 0..settings.fraction(2) {
        let g = random_invertible(sigma.algebra(), &mut rng);
        if let Some(f) = rec.observe_result("factorization", yanchevskii_factor(sigma, &g, 2)) {
            let checked = check_factorization(sigma, &g, &f);
            rec.observe(checked.is_ok(), || format!("g = {g}: {}", checked.unwrap_err()));
        }
    }
    rec
}

fn chi_suite(j: &Built<FirstTits>, settings: &RunSettings, tag: u64) -> SuiteRecord {
    let mut rec = SuiteRecord::new(SuiteName::Chi);
    let l = j.form.algebra();
    let mut rng = settings.rng(tag);
    let opts = CertifyOptions {
        samples: 4,
        seed: settings.seed,
    };
    let (mut scaled, mut scalar, mut n) = (0usize, 0usize, 0usize);
    let c = j.structure.base_point();
    for _ in 0..settings.fraction(2) {
        let a = j.form.inject(&random_invertible(l, &mut rng));
        n += 1;
        match chi_normalizer(j, &a, opts) {
            Ok(out) => {
                for e in &out.evaluations {
                    if e.sends_to_base_point {
                        match e.variant {
                            ChiVariant::ScaledElement => scaled += 1,
                            ChiVariant::ScalarInverse => scalar += 1,
                        }
                    }
                }
                let img = out.map.apply(&a);
                rec.observe(img == c, || format!("a = {a}: chi(a) = {img}"));
            }
            Err(e) => rec.observe(false, || format!("a = {a}: {e}")),
        }
    }
    rec.notes.push(format!("{}: sends a to c at {scaled} of {n}", ChiVariant::ScaledElement));
    rec.notes.push(format!("{}: sends a to c at {scalar} of {n}", ChiVariant::ScalarInverse));
    let adopted = if scaled == n {
        Some(ChiVariant::ScaledElement)
    } else if scalar == n {
        Some(ChiVariant::ScalarInverse)
    } else {
        None
    };
    rec.notes.push(match adopted {
        Some(v) => format!("adopted variant: {v}"),
        None => "no variant sends every sample to c".into(),
    });
    rec
}

/// Interior parameters used when a configuration gives none.
pub fn default_sample_t() -> Vec<Q> {
    [(1, 2), (1, 3), (2, 3), (1, 4), (3, 4), (1, 5), (2, 5), (3, 5), (4, 5), (1, 7), (5, 7), (1, 11)]
        .into_iter()
        .map(|(n, d)| qr(n, d))
        .collect()
}

fn path_error(e: crate::error::CoreError) -> ConfigError {
    ConfigError {
        line: None,
        message: format!("path: {e}"),
    }
}

fn u_elements(c: &Construction, p: &PathBlock, src: &Source) -> Result<Vec<Vector>, ConfigError> {
    let dim = c.structure().dim();
    if let Some(es) = &p.elements {
        return es
            .iter()
            .map(|e| {
                let v = Vector::new(src.rationals(e)?);
                if v.len() != dim {
                    let span = e.first().map_or(0..0, |r| r.span());
                    return src.error(span, format!("element has {} coordinates, expected {dim}", v.len()));
                }
                Ok(v)
            })
            .collect();
    }
    if let Some(ds) = &p.diagonals {
        return ds.iter().map(|d| Ok(c.diagonal(&src.rationals_n::<3>(d, "diagonal")?))).collect();
    }
    Ok(vec![default_u_element(c)])
}

fn second_only<'a>(c: &'a Construction, kind: &str) -> Result<&'a Built<SecondTits>, ConfigError> {
    match c {
        Construction::Second(j) => Ok(j),
        _ => Err(ConfigError {
            line: None,
            message: format!("path kind `{kind}` needs a second construction"),
        }),
    }
}

fn hermitian_element(j: &Built<SecondTits>, p: &PathBlock, src: &Source) -> Result<Vector, ConfigError> {
    let b = j.form.algebra();
    let diag = match &p.s_diag {
        Some(v) => src.rationals_n::<3>(v, "s_diag")?,
        None => [Q::ONE, Q::from(2), Q::from(3)],
    };
    Ok(rational_diagonal(b, &diag))
}

fn normal_element(j: &Built<SecondTits>, p: &PathBlock, src: &Source) -> Result<Vector, ConfigError> {
    let b = j.form.algebra();
    let k = b.center();
    let entries: Vec<Scalar> = match &p.z_diag {
        Some(zs) => {
            let mut out = Vec::new();
            for z in zs {
                let coords = src.rationals(z)?;
                let span = z.first().map_or(0..0, |r| r.span());
                match Scalar::new(k, coords) {
                    Ok(s) => out.push(s),
                    Err(e) => return src.error(span, e.to_string()),
                }
            }
            out
        }
        None => {
            let w = norm_one_scalar(k, &Q::from(2)).map_err(path_error)?;
            vec![w, Scalar::one(k), Scalar::one(k)]
        }
    };
    let arr: [Scalar; 3] = entries.try_into().map_err(|v: Vec<Scalar>| ConfigError {
        line: None,
        message: format!("z_diag needs 3 entries, got {}", v.len()),
    })?;
    Ok(scalar_diagonal(b, &arr))
}

/// Builds the configured path of the given kind.
pub fn build_path(
    c: &Construction,
    kind: PathKindName,
    p: &PathBlock,
    text: &str,
    opts: CertifyOptions,
) -> Result<RationalPath, ConfigError> {
    let src = Source::new(text);
    let s = c.structure();
    let how = match p.interpolation {
        Some(InterpolationName::ToZero) => Interpolation::ToZero,
        _ => Interpolation::ToBasePoint,
    };
    let path = match kind {
        PathKindName::UPath => u_path_with(s, &u_elements(c, p, &src)?, how, opts).map_err(path_error)?,
        PathKindName::Hermitian => {
            let j = second_only(c, "hermitian")?;
            hermitian_path(j, &hermitian_element(j, p, &src)?, opts).map_err(path_error)?
        }
        PathKindName::Normal => {
            let j = second_only(c, "normal")?;
            normal_path(j, &normal_element(j, p, &src)?, opts).map_err(path_error)?
        }
        PathKindName::IsometryCorrection => {
            let source = p.psi.unwrap_or(match c {
                Construction::Second(_) => PsiSource::Normal,
                _ => PsiSource::UProduct,
            });
            let psi = match source {
                PsiSource::Normal => {
                    let j = second_only(c, "normal")?;
                    normal_path(j, &normal_element(j, p, &src)?, opts).map_err(path_error)?
                }
                PsiSource::UPath => u_path_with(s, &u_elements(c, p, &src)?, how, opts).map_err(path_error)?,
                PsiSource::UProduct => {
                    let a = match (&p.elements, &p.diagonals) {
                        (None, None) => match c {
                            Construction::First(j) if *j.form.algebra().kind() != AlgebraKind::Matrix3 => {
                                j.structure.base_point().scale(&Q::from(2))
                            }
                            _ => c.diagonal(&[Q::from(2), -Q::ONE, Q::from(3)]),
                        },
                        _ => u_elements(c, p, &src)?.remove(0),
                    };
                    let ai = s.inverse(&a).map_err(path_error)?;
                    u_path_with(s, &[a, ai], how, opts).map_err(path_error)?
                }
            };
            isometry_correction(Arc::new(psi), opts).map_err(path_error)?
        }
    };
    Ok(if p.corrupt_end {
        let end = path.declared_end().scale(&Q::from(2));
        path.with_declared_end(end)
    } else {
        path
    })
}

pub fn sample_t(p: &PathBlock, text: &str) -> Result<Vec<Q>, ConfigError> {
    match &p.sample_t {
        Some(ts) => Source::new(text).rationals(ts),
        None => Ok(default_sample_t()),
    }
}

pub fn path_kinds(c: &Construction) -> Vec<PathKindName> {
    match c {
        Construction::Second(_) => vec![
            PathKindName::UPath,
            PathKindName::Hermitian,
            PathKindName::Normal,
            PathKindName::IsometryCorrection,
        ],
        _ => vec![PathKindName::UPath, PathKindName::IsometryCorrection],
    }
}

fn paths_suite(c: &Construction, settings: &RunSettings, p: &PathBlock, text: &str) -> Result<SuiteRecord, ConfigError> {
    let mut rec = SuiteRecord::new(SuiteName::Paths);
    let ts = sample_t(p, text)?;
    for kind in path_kinds(c) {
        let path = build_path(c, kind, p, text, settings.certify)?;
        let cert = endpoint_certificate(&path, &ts);
        for e in [&cert.start, &cert.end] {
            rec.observe(e.passed, || {
                format!("{} endpoint t = {}: {}", cert.kind, e.t, e.failure.clone().unwrap_or_default())
            });
        }
        for sample in &cert.samples {
            rec.observe(sample.outcome != "failed", || {
                format!("{} at t = {}: {}", cert.kind, sample.t, sample.witness.clone().unwrap_or_default())
            });
        }
        if kind == PathKindName::IsometryCorrection {
            let all_one = cert.samples.iter().all(|s| s.outcome != "ok" || s.factor.as_deref() == Some("1"));
            rec.observe(all_one, || "isometry correction has a factor other than 1".into());
        }
        if let Some(roots) = &cert.pole_roots {
            rec.notes.push(format!("{} pole roots: [{}]", cert.kind, roots.join(", ")));
        }
        rec.certificates.push(cert);
    }
    // the path that shrinks to zero must fail its end point
    if p.interpolation != Some(InterpolationName::ToZero) {
        let src = Source::new(text);
        let wrong = u_path_with(c.structure(), &u_elements(c, p, &src)?, Interpolation::ToZero, settings.certify)
            .map_err(path_error)?;
        let caught = !endpoint_certificate(&wrong, &[]).passed;
        rec.observe(caught, || "the (1-t)a interpolation passed its end point".into());
        rec.notes.push(format!("(1-t)a mutation caught: {caught}"));
    }
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::build::build;
    use crate::harness::config::parse_config;

    fn construct(text: &str) -> Construction {
        build(&parse_config(text).unwrap(), text).unwrap()
    }

    #[test]
    fn small_runs_pass_on_h3() {
        let text = "[field]\nkind = \"rationals\"\n[construction]\nkind = \"reduced\"\noctonions = { kind = \"zorn\" }\ngamma = [\"1\", \"1\", \"1\"]\n";
        let c = construct(text);
        let settings = RunSettings::new(0, 8);
        let p = PathBlock::default();
        for suite in default_suites(&c) {
            let r = run_suite(&c, suite, &settings, &p, text).unwrap();
            assert!(r.ok(), "{r:?}");
        }
    }

    #[test]
    fn corrupted_endpoint_fails() {
        let text = "[field]\nkind = \"rationals\"\n[construction]\nkind = \"first\"\nalgebra = \"matrix3\"\nlambda = \"2\"\n[path]\ncorrupt_end = true\n";
        let c = construct(text);
        let cfg = parse_config(text).unwrap();
        let r = run_suite(&c, SuiteName::Paths, &RunSettings::new(0, 8), &cfg.path, text).unwrap();
        assert!(!r.ok());
        assert!(r.first_failure.unwrap().contains("endpoint t = 1"));
    }
}
