//! Library results against independent hand-written oracles.

use albert_core::cubic::CubicNormStructure;
use albert_core::harness::build::rational_diagonal;
use albert_core::harness::{load, preset, Construction};
use albert_core::linalg::{Matrix, Vector};
use albert_core::maps::extension::extend_sim_second;
use albert_core::maps::{CertifyOptions, StructureMap};
use albert_core::paths::{endpoint_certificate, hermitian_path, normal_path, u_path};
use albert_core::rational::{q, qr, Q};
use albert_core::sample::Sampler;
use albert_core::scalar::{FieldDescriptor, Scalar};
use albert_core::tits::{Built, FirstTits, SecondTits};

type M3 = [[Q; 3]; 3];

fn opts() -> CertifyOptions {
    CertifyOptions { samples: 8, seed: 0 }
}

fn construction(name: &str) -> Construction {
    load(preset(name).unwrap().text).unwrap().1
}

fn first(name: &str) -> Built<FirstTits> {
    match construction(name) {
        Construction::First(j) => j,
        _ => unreachable!(),
    }
}

fn second(name: &str) -> Built<SecondTits> {
    match construction(name) {
        Construction::Second(j) => j,
        _ => unreachable!(),
    }
}

fn m3(v: &[Q]) -> M3 {
    std::array::from_fn(|i| std::array::from_fn(|j| v[3 * i + j].clone()))
}

fn det3(a: &M3) -> Q {
    let t = |i: usize, j: usize, k: usize| &a[0][i] * &a[1][j] * &a[2][k];
    t(0, 1, 2) + t(1, 2, 0) + t(2, 0, 1) - t(2, 1, 0) - t(0, 2, 1) - t(1, 0, 2)
}

fn mul3(a: &M3, b: &M3) -> M3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..3).fold(q(0), |acc, k| acc + &a[i][k] * &b[k][j]))
    })
}

fn tr3(a: &M3) -> Q {
    &a[0][0] + &a[1][1] + &a[2][2]
}

#[test]
fn first_norm_matches_explicit_determinants() {
    let j = first("split-first-lambda2");
    let lambda = q(2);
    let mut rng = Sampler::new(11);
    for _ in 0..50 {
        let v = rng.vector(27);
        let (x, y, z) = (m3(&v.as_slice()[..9]), m3(&v.as_slice()[9..18]), m3(&v.as_slice()[18..]));
        let expected = det3(&x) + &lambda * det3(&y) + det3(&z) / &lambda - tr3(&mul3(&mul3(&x, &y), &z));
        assert_eq!(j.structure.norm(&v), expected);
    }
}

/// `x^3 = -c0 - c1 x - c2 x^2`, multiplication by `a` written out by hand.
fn cubic_mult_matrix(c: &[Q; 3], a: &[Q; 3]) -> Matrix {
    let reduce = |mut p: [Q; 5]| -> [Q; 3] {
        for d in (3..5).rev() {
            let top = std::mem::replace(&mut p[d], q(0));
            for (i, ci) in c.iter().enumerate() {
                p[d - 3 + i] = &p[d - 3 + i] - &top * ci;
            }
        }
        [p[0].clone(), p[1].clone(), p[2].clone()]
    };
    let cols: Vec<Vector> = (0..3)
        .map(|k| {
            let mut p: [Q; 5] = std::array::from_fn(|_| q(0));
            for (i, ai) in a.iter().enumerate() {
                p[i + k] = &p[i + k] + ai;
            }
            Vector::new(reduce(p).to_vec())
        })
        .collect();
    Matrix::from_columns(3, &cols)
}

#[test]
fn cubic_field_norm_is_determinant_of_multiplication() {
    let c = [q(-1), q(-1), q(0)];
    let l = FieldDescriptor::cubic(c.clone()).unwrap();
    let mut rng = Sampler::new(12);
    for _ in 0..40 {
        let a = [rng.rational(), rng.rational(), rng.rational()];
        let s = Scalar::new(&l, a.to_vec()).unwrap();
        assert_eq!(s.norm(), cubic_mult_matrix(&c, &a).det());
    }
    // N(x) = -c0 for the generator of x^3 - x - 1.
    assert_eq!(Scalar::new(&l, vec![q(0), q(1), q(0)]).unwrap().norm(), q(1));
}

#[derive(Clone, Debug, PartialEq)]
struct Gauss(Q, Q);

impl Gauss {
    fn mul(&self, o: &Gauss) -> Gauss {
        Gauss(&self.0 * &o.0 - &self.1 * &o.1, &self.0 * &o.1 + &self.1 * &o.0)
    }
    fn add(&self, o: &Gauss) -> Gauss {
        Gauss(&self.0 + &o.0, &self.1 + &o.1)
    }
    fn sub(&self, o: &Gauss) -> Gauss {
        Gauss(&self.0 - &o.0, &self.1 - &o.1)
    }
    fn conj(&self) -> Gauss {
        Gauss(self.0.clone(), -&self.1)
    }
}

type G3 = [[Gauss; 3]; 3];

fn g3(v: &Vector) -> G3 {
    let s = v.as_slice();
    std::array::from_fn(|i| std::array::from_fn(|j| Gauss(s[2 * (3 * i + j)].clone(), s[2 * (3 * i + j) + 1].clone())))
}

fn gmul(a: &G3, b: &G3) -> G3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..3).fold(Gauss(q(0), q(0)), |acc, k| acc.add(&a[i][k].mul(&b[k][j]))))
    })
}

fn gstar(a: &G3) -> G3 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[j][i].conj()))
}

fn gdet(a: &G3) -> Gauss {
    let t = |i: usize, j: usize, k: usize| a[0][i].mul(&a[1][j]).mul(&a[2][k]);
    t(0, 1, 2).add(&t(1, 2, 0)).add(&t(2, 0, 1)).sub(&t(2, 1, 0)).sub(&t(0, 2, 1)).sub(&t(1, 0, 2))
}

#[test]
fn split_second_norm_matches_complex_matrices() {
    let j = second("split-second");
    let sigma = j.form.sigma();
    let mut rng = Sampler::new(13);
    for _ in 0..30 {
        let h = rng.vector(18);
        let herm = &h + &sigma.apply(&h);
        let x = rng.vector(18);
        let (hb, xb) = (g3(&herm), g3(&x));
        let nb = gdet(&hb);
        assert_eq!(nb.1, q(0));
        let nx = gdet(&xb);
        let t = gmul(&hb, &gmul(&xb, &gstar(&xb)));
        let tr = t[0][0].add(&t[1][1]).add(&t[2][2]);
        assert_eq!(tr.1, q(0));
        let expected = nb.0 + q(2) * nx.0 - tr.0;
        assert_eq!(j.structure.norm(&j.form.join(&herm, &x)), expected);
    }
}

fn u_by_formula(s: &CubicNormStructure, a: &Vector) -> Matrix {
    let a_sharp = s.sharp(a);
    Matrix::from_linear_map(s.dim(), |y| {
        let t = s.trace_bilinear(a, y).unwrap();
        &a.scale(&t) - &s.cross(&a_sharp, y)
    })
}

#[test]
fn u_path_start_is_product_of_u_operators() {
    let c = construction("split-h3");
    let s = c.structure();
    let a1 = c.diagonal(&[q(-1), q(1), q(1)]);
    let a2 = c.diagonal(&[q(2), q(3), qr(1, 2)]);
    let p = u_path(s, &[a1.clone(), a2.clone()], opts()).unwrap();
    let product = u_by_formula(s, &a1).mul(&u_by_formula(s, &a2));
    assert_eq!(p.matrix_at(&q(0)).unwrap(), product);
    assert_eq!(p.declared_start(), &product);
}

#[test]
fn u_path_pole_polynomial_for_negated_corner() {
    let c = construction("split-h3");
    let a = c.diagonal(&[q(-1), q(1), q(1)]);
    let p = u_path(c.structure(), &[a], opts()).unwrap();
    // N((1-t)a + tc) = (2t - 1) * 1 * 1
    assert_eq!(p.pole_polynomial().unwrap().coeffs(), &[q(-1), q(2)]);
    let cert = endpoint_certificate(&p, &[qr(1, 4), qr(1, 2), qr(3, 4)]);
    assert!(cert.passed);
    assert_eq!(cert.pole_roots, Some(vec!["1/2".to_string()]));
    let outcomes: Vec<&str> = cert.samples.iter().map(|s| s.outcome.as_str()).collect();
    assert_eq!(outcomes, ["ok", "pole", "ok"]);
    // nu(1/4) = N(a_{1/4})^2 = (-1/2)^2
    assert_eq!(cert.samples[0].factor.as_deref(), Some("1/4"));
}

#[test]
fn hermitian_path_start_factor_is_squared_reduced_norm() {
    let j = second("split-second");
    let s = rational_diagonal(j.form.algebra(), &[q(1), q(2), q(3)]);
    let p = hermitian_path(&j, &s, opts()).unwrap();
    assert_eq!(p.eval(&q(0)).unwrap().factor(), &q(36));
    assert!(p.eval(&q(1)).unwrap().is_identity());
}

#[test]
fn normal_path_start_is_the_similarity_extension() {
    let j = second("split-second");
    let b = j.form.algebra();
    // z = diag(2 + i, 1, 3)
    let mut z = b.zero();
    for (w, coord) in [(0, q(2)), (4, q(1)), (8, q(3))] {
        z[2 * w] = coord;
    }
    z[1] = q(1);
    let p_elem = b.mul(&b.inverse(&j.form.sigma_u().apply(&z)).unwrap(), &z);
    let path = normal_path(&j, &z, opts()).unwrap();
    let expected = extend_sim_second(&j, &q(1), &z, &p_elem, opts()).unwrap();
    assert_eq!(path.matrix_at(&q(0)).unwrap(), *expected.matrix());
}

#[test]
fn composite_factor_is_the_product() {
    let c = construction("split-first");
    let s = c.structure();
    let mut rng = Sampler::new(14);
    let a = rng.vector(s.dim());
    let b = rng.vector(s.dim());
    let fa = StructureMap::u_operator(s, &a, 4, 0).unwrap();
    let fb = StructureMap::u_operator(s, &b, 4, 0).unwrap();
    let na = s.norm(&a);
    let nb = s.norm(&b);
    assert_eq!(fa.factor(), &(&na * &na));
    let composite = fa.compose(&fb).unwrap();
    assert_eq!(composite.factor(), &(&na * &na * &nb * &nb));
}

#[test]
fn structure_map_record_schema() {
    let c = construction("split-first");
    let f = StructureMap::homothety(c.structure(), &q(2), 3, 5).unwrap();
    let v: serde_json::Value = serde_json::to_value(f.record()).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["certificate", "matrix-rows", "nu", "structure-id"]);
    assert_eq!(v["nu"], "8");
    assert_eq!(v["matrix-rows"].as_array().unwrap().len(), 27);
    assert_eq!(v["certificate"]["samples"], 3);
}

#[test]
fn trace_form_matches_the_algebra_trace() {
    for p in albert_core::harness::PRESETS {
        let c = construction(p.name);
        let s = c.structure();
        assert_eq!(s.trace(&s.base_point()).unwrap(), q(3), "{}", p.name);
    }
    let j = first("split-first-lambda2");
    let s = &j.structure;
    let mut rng = Sampler::new(16);
    for _ in 0..10 {
        let (x, y) = (rng.vector(9), rng.vector(9));
        let expected = tr3(&mul3(&m3(x.as_slice()), &m3(y.as_slice())));
        assert_eq!(s.trace_bilinear(&j.form.inject(&x), &j.form.inject(&y)).unwrap(), expected);
    }
}
