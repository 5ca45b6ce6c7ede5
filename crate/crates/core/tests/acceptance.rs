//! Acceptance run: one line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use albert_core::cubic::{compare_generic_adjoint, verify_axioms, CubicForm, CubicNormStructure};
use albert_core::harness::suites::{build_path, sample_t};
use albert_core::harness::{load, preset, Construction, PathKindName, PRESETS};
use albert_core::maps::chi::{chi_normalizer, ChiVariant};
use albert_core::maps::extension::{
    extend_aut_first, extend_aut_second, extend_sim_second, sigma_b_mutation_factor,
};
use albert_core::maps::kernel::{stab_kernel_element, triple_map};
use albert_core::maps::unitary::{
    random_invertible, random_similitude, random_special_unitary, unitary_with_norm,
};
use albert_core::maps::yanchevskii::yanchevskii_factor;
use albert_core::maps::{CertifyOptions, StructureMap};
use albert_core::paths::{endpoint_certificate, u_path_with, Interpolation};
use albert_core::rational::{fmt_q, qr, Q};
use albert_core::sample::Sampler;
use albert_core::scalar::Scalar;
use albert_core::tits::{first_as_second, AdjointCorruption, Built, FirstTits, SecondTits};

const SAMPLES: usize = 200;
const TIME_LIMIT: Duration = Duration::from_secs(60);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn construction(name: &str) -> Construction {
    let p = preset(name).unwrap_or_else(|| panic!("preset {name}"));
    load(p.text).unwrap_or_else(|e| panic!("{name}: {e}")).1
}

fn second(name: &str) -> Built<SecondTits> {
    match construction(name) {
        Construction::Second(j) => j,
        _ => panic!("{name} is not a second construction"),
    }
}

fn first(name: &str) -> Built<FirstTits> {
    match construction(name) {
        Construction::First(j) => j,
        _ => panic!("{name} is not a first construction"),
    }
}

fn opts() -> CertifyOptions {
    CertifyOptions { samples: 12, seed: 0 }
}

/// `N(f(x)) = nu N(x)` at fresh points, independent of the certificate.
fn preserves(s: &CubicNormStructure, f: &StructureMap, nu: &Q, rng: &mut Sampler) -> bool {
    (0..3).all(|_| {
        let x = rng.vector(s.dim());
        s.norm(&f.apply(&x)) == nu * s.norm(&x)
    })
}

fn axioms() -> Outcome {
    let mut worst = Duration::ZERO;
    for p in PRESETS {
        let c = construction(p.name);
        let start = Instant::now();
        let report = verify_axioms(c.structure(), SAMPLES, 0);
        let elapsed = start.elapsed();
        worst = worst.max(elapsed);
        let short = report.records.iter().find(|r| r.samples < SAMPLES && r.name == "sharp-sharp");
        if !report.all_passed() || short.is_some() || elapsed > TIME_LIMIT {
            return outcome(false, format!("{}: {report}", p.name));
        }
    }
    outcome(
        true,
        format!("{} presets x {SAMPLES} samples, slowest {:.1} s", PRESETS.len(), worst.as_secs_f64()),
    )
}

fn generic_adjoint() -> Outcome {
    for p in PRESETS {
        let c = construction(p.name);
        match compare_generic_adjoint(c.structure(), SAMPLES, 1) {
            Ok((n, None)) if n >= SAMPLES => {}
            Ok((n, w)) => return outcome(false, format!("{}: {n} points, {w:?}", p.name)),
            Err(e) => return outcome(false, format!("{}: {e}", p.name)),
        }
    }
    outcome(true, format!("{} presets x {SAMPLES} points", PRESETS.len()))
}

fn u_operator_law() -> Outcome {
    let n = 100;
    for p in PRESETS {
        let c = construction(p.name);
        let s = c.structure();
        let mut rng = Sampler::new(2);
        for _ in 0..n {
            let a = rng.vector(s.dim());
            let x = rng.vector(s.dim());
            let na = s.norm(&a);
            let lhs = s.norm(&s.u_operator(&a, &x).expect("trace form is nondegenerate"));
            if lhs != &na * &na * s.norm(&x) {
                return outcome(false, format!("{}: a = {a}, x = {x}", p.name));
            }
        }
    }
    outcome(true, format!("{} presets x {n} pairs", PRESETS.len()))
}

fn extensions() -> Outcome {
    let sets = 50;
    let j = second("split-second");
    let t = &j.form;
    let b = t.algebra();
    let c = j.structure.base_point();
    let mut rng = Sampler::new(4);
    for _ in 0..sets {
        let g = random_similitude(t.sigma(), &mut rng);
        let nu = b.norm(&g);
        let ratio = nu.try_mul(&nu.conjugate().unwrap().inverse().unwrap()).unwrap();
        let q0 = unitary_with_norm(&ratio, t.sigma_u(), 0, 0).unwrap();
        let q = b.mul(&q0, &random_special_unitary(t.sigma_u(), &mut rng));
        let f = match extend_aut_second(&j, &g, &q, opts()) {
            Ok(f) => f,
            Err(e) => return outcome(false, format!("second aut: g = {g}: {e}")),
        };
        if *f.factor() != 1 || f.apply(&c) != c || !preserves(&j.structure, &f, &Q::from(1), &mut rng) {
            return outcome(false, format!("second aut: g = {g}, factor {}", fmt_q(f.factor())));
        }
    }
    let jf = first("split-first");
    let d = jf.form.algebra();
    let cf = jf.structure.base_point();
    for _ in 0..sets {
        let g = random_invertible(d, &mut rng);
        let p = random_invertible(d, &mut rng);
        let r = random_invertible(d, &mut rng);
        let k = d.mul(&d.mul3(&p, &r, &d.inverse(&p).unwrap()), &d.inverse(&r).unwrap());
        let h = d.mul(&g, &k);
        let f = match extend_aut_first(&jf, &g, &h, opts()) {
            Ok(f) => f,
            Err(e) => return outcome(false, format!("first aut: g = {g}: {e}")),
        };
        if *f.factor() != 1 || f.apply(&cf) != cf || !preserves(&jf.structure, &f, &Q::from(1), &mut rng) {
            return outcome(false, format!("first aut: g = {g}, h = {h}"));
        }
    }
    for _ in 0..sets {
        let g = random_invertible(b, &mut rng);
        let gamma = rng.nonzero_rational();
        let gi = b.inverse(&g).unwrap();
        let target = b.norm(&b.mul(&t.sigma().apply(&gi), &g));
        let q = b.mul(
            &unitary_with_norm(&target, t.sigma_u(), 0, 0).unwrap(),
            &random_special_unitary(t.sigma_u(), &mut rng),
        );
        let f = match extend_sim_second(&j, &gamma, &g, &q, opts()) {
            Ok(f) => f,
            Err(e) => return outcome(false, format!("second sim: g = {g}: {e}")),
        };
        let n = b.norm(&g);
        let expected = n.try_mul(&n.conjugate().unwrap()).unwrap().to_rational().unwrap() * &gamma * &gamma * &gamma;
        if *f.factor() != expected || !preserves(&j.structure, &f, &expected, &mut rng) {
            return outcome(false, format!("second sim: g = {g}, factor {} vs {}", fmt_q(f.factor()), fmt_q(&expected)));
        }
    }
    outcome(true, format!("{sets} automorphisms on each of split-second and split-first, {sets} similarities"))
}

fn kernel() -> Outcome {
    let n = 20;
    for name in ["split-second", "twisted-second"] {
        let j = second(name);
        let k = j.form.algebra().center().clone();
        let mut rng = Sampler::new(5);
        let mut done = 0;
        while done < n {
            let alpha = Scalar::new(&k, vec![rng.rational(), rng.rational()]).unwrap();
            if !alpha.is_invertible() {
                continue;
            }
            let triple = stab_kernel_element(&j.form, &alpha).unwrap();
            match triple_map(&j, &triple, opts()) {
                Ok(f) if f.is_identity() => done += 1,
                Ok(_) => return outcome(false, format!("{name}: alpha = {alpha} is not sent to the identity")),
                Err(e) => return outcome(false, format!("{name}: alpha = {alpha}: {e}")),
            }
        }
    }
    outcome(true, format!("{n} alphas over each of Q(i) and Q(sqrt 2)"))
}

fn bridge() -> Outcome {
    let mut total = 0;
    for name in ["split-first", "split-first-lambda2", "cyclic-first"] {
        let j = first(name);
        let b = first_as_second(&j.form).unwrap();
        if b.phi.apply(&j.form.base_point()) != b.second.base_point() {
            return outcome(false, format!("{name}: Phi(c) != c"));
        }
        let mut rng = Sampler::new(6);
        for _ in 0..SAMPLES {
            let v = rng.vector(j.form.dim());
            if b.second.norm(&b.phi.apply(&v)) != j.form.norm(&v) {
                return outcome(false, format!("{name}: v = {v}"));
            }
            total += 1;
        }
    }
    outcome(true, format!("{total} samples over 3 presets, Phi(c) = c"))
}

fn yanchevskii() -> Outcome {
    let j = second("split-second");
    let sigma = j.form.sigma();
    let b = sigma.algebra();
    let mut rng = Sampler::new(7);
    let n = 100;
    for _ in 0..n {
        let g = random_invertible(b, &mut rng);
        let f = match yanchevskii_factor(sigma, &g, 2) {
            Ok(f) => f,
            Err(e) => return outcome(false, format!("g = {g}: {e}")),
        };
        let hermitian = sigma.apply(&f.s) == f.s;
        let sz = sigma.apply(&f.z);
        let normal = b.mul(&f.z, &sz) == b.mul(&sz, &f.z);
        if !(hermitian && normal && b.mul(&f.z, &f.s) == g && b.is_invertible(&f.s)) {
            return outcome(false, format!("g = {g}: hermitian {hermitian}, normal {normal}"));
        }
    }
    outcome(true, format!("{n} random g in M3(Q(i)) with conjugate transpose"))
}

fn chi() -> Outcome {
    let j = first("cubic-l2");
    let l = j.form.algebra();
    let c = j.structure.base_point();
    let mut rng = Sampler::new(8);
    let n = 100;
    let mut adopted = std::collections::BTreeSet::new();
    let (mut scaled, mut scalar) = (0, 0);
    for _ in 0..n {
        let a = j.form.inject(&random_invertible(l, &mut rng));
        let out = match chi_normalizer(&j, &a, CertifyOptions { samples: 4, seed: 0 }) {
            Ok(o) => o,
            Err(e) => return outcome(false, format!("a = {a}: {e}")),
        };
        if out.map.apply(&a) != c {
            return outcome(false, format!("a = {a}: chi(a) != c"));
        }
        adopted.insert(out.adopted);
        for e in &out.evaluations {
            if e.sends_to_base_point {
                match e.variant {
                    ChiVariant::ScaledElement => scaled += 1,
                    ChiVariant::ScalarInverse => scalar += 1,
                }
            }
        }
    }
    let names: Vec<String> = adopted.iter().map(ToString::to_string).collect();
    outcome(
        adopted.len() == 1,
        format!(
            "{n} invertible a; adopted [{}]; {} at {scaled}/{n}, {} at {scalar}/{n}",
            names.join(", "),
            ChiVariant::ScaledElement,
            ChiVariant::ScalarInverse
        ),
    )
}

fn paths() -> Outcome {
    let mut parts = Vec::new();
    for (name, kinds) in [
        (
            "split-second",
            vec![PathKindName::UPath, PathKindName::Hermitian, PathKindName::Normal, PathKindName::IsometryCorrection],
        ),
        ("split-h3", vec![PathKindName::UPath, PathKindName::IsometryCorrection]),
    ] {
        let text = preset(name).unwrap().text;
        let (cfg, c) = load(text).unwrap();
        let ts = sample_t(&cfg.path, text).unwrap();
        for kind in kinds {
            let p = build_path(&c, kind, &cfg.path, text, opts()).unwrap();
            let cert = endpoint_certificate(&p, &ts);
            if !cert.passed {
                return outcome(false, format!("{name} {}: {cert:?}", cert.kind));
            }
            if kind == PathKindName::IsometryCorrection {
                let ones = cert.samples.iter().filter(|s| s.factor.as_deref() == Some("1")).count();
                let others = cert.samples.iter().filter(|s| s.outcome == "ok" && s.factor.as_deref() != Some("1")).count();
                if ones < 10 || others > 0 {
                    return outcome(false, format!("{name}: nu = 1 at only {ones} t"));
                }
            }
            if name == "split-h3" && kind == PathKindName::UPath {
                let roots = cert.pole_roots.clone().unwrap_or_default();
                if roots != ["1/2"] || !cert.pole_at(&qr(1, 2)) {
                    return outcome(false, format!("u-path pole roots {roots:?}"));
                }
            }
            parts.push(format!("{name}/{}", cert.kind));
        }
    }
    outcome(true, format!("{}; u-path pole at t = 1/2; nu = 1 along isometry corrections", parts.join(", ")))
}

fn mutations() -> Outcome {
    let mut witnesses = Vec::new();
    let jf = first("split-first");
    let bad = Built::new((*jf.form).clone().with_corruption(Some(AdjointCorruption::DroppedYz)));
    let report = verify_axioms(&bad.structure, SAMPLES, 0);
    match report.records.iter().find(|r| !r.passed) {
        Some(r) => witnesses.push(format!("dropped -yz caught by {}", r.name)),
        None => return outcome(false, "dropped -yz passed the axioms"),
    }

    let h3 = construction("split-h3");
    let a = h3.diagonal(&[Q::from(-1), Q::from(1), Q::from(1)]);
    let wrong = u_path_with(h3.structure(), &[a], Interpolation::ToZero, opts()).unwrap();
    let cert = endpoint_certificate(&wrong, &[]);
    match (&cert.end.failure, cert.passed) {
        (Some(w), false) => witnesses.push(format!("(1-t)a caught at t = 1 ({w})")),
        _ => return outcome(false, "(1-t)a interpolation passed its end point"),
    }

    let j = second("split-second");
    let b = j.form.algebra();
    let mut rng = Sampler::new(9);
    let g = random_invertible(b, &mut rng);
    let gi = b.inverse(&g).unwrap();
    let target = b.norm(&b.mul(&j.form.sigma().apply(&gi), &g));
    let q = unitary_with_norm(&target, j.form.sigma_u(), 0, 0).unwrap();
    match sigma_b_mutation_factor(&j, &Q::from(1), &g, &q, opts()) {
        Err(e) => witnesses.push(format!("sigma(b) caught ({})", first_words(&e.to_string()))),
        Ok(nu) => return outcome(false, format!("sigma(b) mutation certified with factor {}", fmt_q(&nu))),
    }
    outcome(true, witnesses.join("; "))
}

fn first_words(s: &str) -> String {
    s.split_whitespace().take(8).collect::<Vec<_>>().join(" ")
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("axiom suite", axioms),
        ("generic vs explicit adjoint", generic_adjoint),
        ("U-operator law", u_operator_law),
        ("extension formulas", extensions),
        ("kernel identity", kernel),
        ("first/second bridge", bridge),
        ("hermitian-normal factorization", yanchevskii),
        ("chi normalizer", chi),
        ("path certificates", paths),
        ("mutation sensitivity", mutations),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = check();
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {:<31} {status}  {} [{:.1} s]",
            i + 1,
            name,
            o.detail,
            start.elapsed().as_secs_f64()
        );
        if !o.passed {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("acceptance: 10 of 10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 10 criteria failed");
        ExitCode::FAILURE
    }
}
