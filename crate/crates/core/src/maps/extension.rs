//! Extensions of automorphisms and similarities of the first summand to the
//! whole algebra, for both Tits constructions.

use malachite_base::num::arithmetic::traits::Reciprocal;
use malachite_base::num::basic::traits::Zero;

use super::structure_map::{certify_similarity, similarity_factor_of, StructureMap};
use crate::error::{CoreError, Result};
use crate::linalg::{Matrix, Vector};
use crate::rational::Q;
use crate::scalar::Scalar;
use crate::tits::{Built, FirstTits, SecondTits};

/// Sample count and seed used to certify a produced map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertifyOptions {
    pub samples: usize,
    pub seed: u64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { samples: 20, seed: 0 }
    }
}

fn invertible(j: &SecondTits, g: &Vector, what: &str) -> Result<Vector> {
    j.algebra()
        .inverse(g)
        .map_err(|_| CoreError::Parameter(format!("{what} must be invertible")))
}

/// `lambda` with `g sigma(g) = lambda` in `Q^*`, if there is one.
pub fn similitude_multiplier(j: &SecondTits, g: &Vector) -> Option<Q> {
    let b = j.algebra();
    let gg = b.mul(g, &j.sigma().apply(g));
    let lambda = b.trace(&gg).scale(&Q::from(3).reciprocal()).to_rational()?;
    (lambda != Q::ZERO && gg == b.one().scale(&lambda)).then_some(lambda)
}

fn second_map(j: &SecondTits, f: impl Fn(&Vector, &Vector) -> (Vector, Vector)) -> Matrix {
    use crate::cubic::CubicForm;
    Matrix::from_linear_map(j.dim(), |v| {
        let (b, x) = j.split(v);
        let (nb, nx) = f(&b, &x);
        j.join(&nb, &nx)
    })
}

fn check_unitary_twisted(j: &SecondTits, q: &Vector, what: &str) -> Result<()> {
    if !j.sigma_u().is_unitary(q) {
        return Err(CoreError::Parameter(format!("{what} is not unitary for sigma_u")));
    }
    Ok(())
}

/// `(a, b) -> (g a g^{-1}, lambda^{-1} sigma(g)^# b q)` for `g sigma(g) = lambda`,
/// `q` in `U(B, sigma_u)` with `N_B(q) = nu_bar^{-1} nu`, `nu = N_B(g)`.
pub fn extend_aut_second(
    j: &Built<SecondTits>,
    g: &Vector,
    q: &Vector,
    opts: CertifyOptions,
) -> Result<StructureMap> {
    let t = &j.form;
    let b = t.algebra();
    let g_inv = invertible(t, g, "g")?;
    let lambda = similitude_multiplier(t, g)
        .ok_or_else(|| CoreError::Parameter("g sigma(g) is not a nonzero rational".into()))?;
    check_unitary_twisted(t, q, "q")?;
    let nu = b.norm(g);
    let ratio = nu.try_mul(&nu.conjugate()?.inverse()?)?;
    if b.norm(q) != ratio {
        return Err(CoreError::Parameter(format!(
            "N_B(q) = {} but nu_bar^{{-1}} nu = {ratio}",
            b.norm(q)
        )));
    }
    let sg_sharp = b.adjoint(&t.sigma().apply(g)).scale(&lambda.reciprocal());
    let m = second_map(t, |a, x| (b.mul3(g, a, &g_inv), b.mul3(&sg_sharp, x, q)));
    certify_similarity(&j.structure, m, opts.samples, opts.seed)
}

/// The same map written as `(a, b) -> (p a p^{-1}, p b q)` with `p = lambda nu^{-1} g`.
pub fn extend_aut_second_simplified(
    j: &Built<SecondTits>,
    g: &Vector,
    q: &Vector,
    opts: CertifyOptions,
) -> Result<StructureMap> {
    let t = &j.form;
    let b = t.algebra();
    let lambda = similitude_multiplier(t, g)
        .ok_or_else(|| CoreError::Parameter("g sigma(g) is not a nonzero rational".into()))?;
    let scale = b.norm(g).inverse()?.scale(&lambda);
    let p = b.scale_center(&scale, g);
    let p_inv = invertible(t, &p, "p")?;
    let m = second_map(t, |a, x| (b.mul3(&p, a, &p_inv), b.mul3(&p, x, q)));
    certify_similarity(&j.structure, m, opts.samples, opts.seed)
}

/// `(b, x) -> (b, x q')` for `q'` in `SU(B, sigma_u)`.
pub fn aut_fixing_s(j: &Built<SecondTits>, q: &Vector, opts: CertifyOptions) -> Result<StructureMap> {
    let t = &j.form;
    let b = t.algebra();
    check_unitary_twisted(t, q, "q'")?;
    if b.norm(q) != Scalar::one(b.center()) {
        return Err(CoreError::Parameter("q' must have reduced norm 1".into()));
    }
    let m = second_map(t, |a, x| (a.clone(), b.mul(x, q)));
    certify_similarity(&j.structure, m, opts.samples, opts.seed)
}

pub fn check_sim_second(j: &SecondTits, g: &Vector, q: &Vector) -> Result<()> {
    let b = j.algebra();
    let g_inv = invertible(j, g, "g")?;
    check_unitary_twisted(j, q, "q")?;
    let sg_inv = j.sigma().apply(&g_inv);
    let expected = b.norm(&b.mul(&sg_inv, g));
    if b.norm(q) != expected {
        return Err(CoreError::Parameter(format!(
            "N_B(q) = {} but N_B(sigma(g)^{{-1}} g) = {expected}",
            b.norm(q)
        )));
    }
    Ok(())
}

pub fn sim_second_matrix(j: &SecondTits, gamma: &Q, g: &Vector, q: &Vector) -> Matrix {
    let b = j.algebra();
    let sg = j.sigma().apply(g);
    let sg_sharp = b.adjoint(&sg);
    second_map(j, |a, x| {
        (
            b.mul3(g, a, &sg).scale(gamma),
            b.mul3(&sg_sharp, x, q).scale(gamma),
        )
    })
}

/// `(b, x) -> gamma (g b sigma(g), sigma(g)^# x q)` with `q` in `U(B, sigma_u)`
/// and `N_B(q) = N_B(sigma(g)^{-1} g)`.
pub fn extend_sim_second(
    j: &Built<SecondTits>,
    gamma: &Q,
    g: &Vector,
    q: &Vector,
    opts: CertifyOptions,
) -> Result<StructureMap> {
    if *gamma == Q::ZERO {
        return Err(CoreError::Parameter("gamma must be nonzero".into()));
    }
    check_sim_second(&j.form, g, q)?;
    certify_similarity(
        &j.structure,
        sim_second_matrix(&j.form, gamma, g, q),
        opts.samples,
        opts.seed,
    )
}

/// `gamma^3 nu nu_bar` with `nu = N_B(g)`.
pub fn sim_second_expected_factor(j: &SecondTits, gamma: &Q, g: &Vector) -> Q {
    gamma * gamma * gamma * j.algebra().norm(g).norm()
}

/// The extension with `sigma(b)` written where `sigma(g)` belongs. The map is
/// not linear, so it is checked by evaluating the norm directly.
pub fn sigma_b_mutation_factor(
    j: &Built<SecondTits>,
    gamma: &Q,
    g: &Vector,
    q: &Vector,
    opts: CertifyOptions,
) -> Result<Q> {
    let t = &j.form;
    let b = t.algebra();
    let sg_sharp = b.adjoint(&t.sigma().apply(g));
    similarity_factor_of(
        &j.structure,
        |v| {
            let (a, x) = t.split(v);
            let first = b.mul3(g, &a, &t.sigma().apply(&a)).scale(gamma);
            let second = b.mul3(&sg_sharp, &x, q).scale(gamma);
            Vector::concat(&[&t.slice().coords(&first), &second])
        },
        opts.samples,
        opts.seed,
    )
}

fn first_map(j: &FirstTits, f: impl Fn(&Vector, &Vector, &Vector) -> [Vector; 3]) -> Matrix {
    use crate::cubic::CubicForm;
    Matrix::from_linear_map(j.dim(), |v| {
        let (x, y, z) = j.split(v);
        let [a, b, c] = f(&x, &y, &z);
        j.join(&a, &b, &c)
    })
}

/// `(x, y, z) -> (g x g^{-1}, g y h^{-1}, h z g^{-1})` for `N_D(g) = N_D(h)`.
pub fn extend_aut_first(
    j: &Built<FirstTits>,
    g: &Vector,
    h: &Vector,
    opts: CertifyOptions,
) -> Result<StructureMap> {
    let d = j.form.algebra();
    if d.norm(g) != d.norm(h) {
        return Err(CoreError::Parameter(format!(
            "N_D(g) = {} differs from N_D(h) = {}",
            d.norm(g),
            d.norm(h)
        )));
    }
    let gi = d
        .inverse(g)
        .map_err(|_| CoreError::Parameter("g must be invertible".into()))?;
    let hi = d
        .inverse(h)
        .map_err(|_| CoreError::Parameter("h must be invertible".into()))?;
    let m = first_map(&j.form, |x, y, z| {
        [d.mul3(g, x, &gi), d.mul3(g, y, &hi), d.mul3(h, z, &gi)]
    });
    certify_similarity(&j.structure, m, opts.samples, opts.seed)
}

/// `(x, y, z) -> gamma (a x b, b^# y c, c^{-1} z a^#)` for `N_D(a) = N_D(b) N_D(c)`.
pub fn extend_sim_first(
    j: &Built<FirstTits>,
    gamma: &Q,
    a: &Vector,
    b: &Vector,
    c: &Vector,
    opts: CertifyOptions,
) -> Result<StructureMap> {
    let d = j.form.algebra();
    if *gamma == Q::ZERO {
        return Err(CoreError::Parameter("gamma must be nonzero".into()));
    }
    let (na, nb, nc) = (d.norm(a), d.norm(b), d.norm(c));
    if na != &nb * &nc {
        return Err(CoreError::Parameter(format!(
            "N_D(a) = {na} but N_D(b) N_D(c) = {}",
            &nb * &nc
        )));
    }
    for (e, name) in [(a, "a"), (b, "b"), (c, "c")] {
        if !d.is_invertible(e) {
            return Err(CoreError::Parameter(format!("{name} must be invertible")));
        }
    }
    let ci = d.inverse(c)?;
    let (a_sharp, b_sharp) = (d.adjoint(a), d.adjoint(b));
    let m = first_map(&j.form, |x, y, z| {
        [
            d.mul3(a, x, b).scale(gamma),
            d.mul3(&b_sharp, y, c).scale(gamma),
            d.mul3(&ci, z, &a_sharp).scale(gamma),
        ]
    });
    certify_similarity(&j.structure, m, opts.samples, opts.seed)
}

/// `gamma^3 N_D(b)^2 N_D(c)`.
pub fn sim_first_expected_factor(j: &FirstTits, gamma: &Q, b: &Vector, c: &Vector) -> Q {
    let d = j.algebra();
    let nb = d.norm(b).to_rational().expect("center is Q");
    let nc = d.norm(c).to_rational().expect("center is Q");
    gamma * gamma * gamma * &nb * &nb * nc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::degree3::Degree3Algebra;
    use crate::algebra::involution::SecondKindInvolution;
    use crate::maps::unitary::{random_invertible, random_special_unitary, random_similitude, unitary_with_norm};
    use crate::rational::q;
    use crate::sample::Sampler;
    use crate::scalar::FieldDescriptor;

    fn split_second() -> Built<SecondTits> {
        let k = FieldDescriptor::quadratic(-1).unwrap();
        let b = Degree3Algebra::matrix3(&k).unwrap();
        let sigma = SecondKindInvolution::conjugate_transpose(&b).unwrap();
        Built::new(SecondTits::new(&sigma, &b.one(), &Scalar::one(&k)).unwrap())
    }

    fn opts() -> CertifyOptions {
        CertifyOptions { samples: 8, seed: 1 }
    }

    #[test]
    fn trivial_parameters_give_identity() {
        let j = split_second();
        let one = j.form.algebra().one();
        assert!(extend_aut_second(&j, &one, &one, opts()).unwrap().is_identity());
        assert!(extend_sim_second(&j, &q(1), &one, &one, opts()).unwrap().is_identity());
        assert!(aut_fixing_s(&j, &one, opts()).unwrap().is_identity());
    }

    #[test]
    fn automorphism_extension_and_simplified_form() {
        let j = split_second();
        let t = &j.form;
        let b = t.algebra();
        let mut rng = Sampler::new(17);
        for _ in 0..2 {
            let g = random_similitude(t.sigma(), &mut rng);
            let nu = b.norm(&g);
            let ratio = nu.try_mul(&nu.conjugate().unwrap().inverse().unwrap()).unwrap();
            let q0 = unitary_with_norm(&ratio, t.sigma_u(), 0, 0).unwrap();
            let q = b.mul(&q0, &random_special_unitary(t.sigma_u(), &mut rng));
            let f = extend_aut_second(&j, &g, &q, opts()).unwrap();
            assert!(f.is_automorphism());
            assert!(f.stabilizes_leading_block(9));
            let simple = extend_aut_second_simplified(&j, &g, &q, opts()).unwrap();
            assert_eq!(f.matrix(), simple.matrix());
        }
    }

    #[test]
    fn similarity_factor_formula() {
        let j = split_second();
        let t = &j.form;
        let b = t.algebra();
        let mut rng = Sampler::new(5);
        let g = random_invertible(b, &mut rng);
        let sg_inv = t.sigma().apply(&b.inverse(&g).unwrap());
        let target = b.norm(&b.mul(&sg_inv, &g));
        let gamma = q(-2);
        let u = unitary_with_norm(&target, t.sigma_u(), 0, 0).unwrap();
        let f = extend_sim_second(&j, &gamma, &g, &u, opts()).unwrap();
        assert_eq!(*f.factor(), sim_second_expected_factor(t, &gamma, &g));
        assert!(sigma_b_mutation_factor(&j, &gamma, &g, &u, opts()).is_err());
    }

    #[test]
    fn first_construction_extensions() {
        let d = Degree3Algebra::matrix3(&FieldDescriptor::rationals()).unwrap();
        let j = Built::new(FirstTits::new(&d, q(2)).unwrap());
        let mut rng = Sampler::new(8);
        let g = random_invertible(&d, &mut rng);
        let f = extend_aut_first(&j, &g, &g, opts()).unwrap();
        assert!(f.is_automorphism());
        let b = random_invertible(&d, &mut rng);
        let c = random_invertible(&d, &mut rng);
        let a = d.mul(&b, &c);
        let s = extend_sim_first(&j, &q(3), &a, &b, &c, opts()).unwrap();
        assert_eq!(*s.factor(), sim_first_expected_factor(&j.form, &q(3), &b, &c));
        let bad = a.scale(&q(2));
        assert!(extend_sim_first(&j, &q(1), &bad, &b, &c, opts()).is_err());
    }
}
