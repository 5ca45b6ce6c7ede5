//! Unitaries of prescribed norm, and samplers for unitary, special unitary
//! and similitude elements.

use malachite_base::num::basic::traits::One;

use crate::algebra::degree3::AlgebraKind;
use crate::algebra::involution::SecondKindInvolution;
use crate::error::{CoreError, Result};
use crate::linalg::Vector;
use crate::rational::Q;
use crate::sample::Sampler;
use crate::scalar::Scalar;

/// Cayley transform `(1 - h)(1 + h)^{-1}` of a random skew element `h`.
pub fn random_unitary(sigma: &SecondKindInvolution, rng: &mut Sampler) -> Vector {
    let b = sigma.algebra();
    loop {
        let x = rng.sparse_vector(b.dim());
        let h = &x - &sigma.apply(&x);
        let one = b.one();
        if let Ok(inv) = b.inverse(&(&one + &h)) {
            return b.mul(&(&one - &h), &inv);
        }
    }
}

/// Commutator of two random unitaries: unitary with reduced norm 1.
pub fn random_special_unitary(sigma: &SecondKindInvolution, rng: &mut Sampler) -> Vector {
    let b = sigma.algebra();
    let p = random_unitary(sigma, rng);
    let q = random_unitary(sigma, rng);
    let pi = b.inverse(&p).expect("unitary is invertible");
    let qi = b.inverse(&q).expect("unitary is invertible");
    b.mul(&b.mul3(&p, &q, &pi), &qi)
}

/// `r p` with `p` unitary and `r` a nonzero rational, so `g sigma(g) = r^2`.
pub fn random_similitude(sigma: &SecondKindInvolution, rng: &mut Sampler) -> Vector {
    let r = rng.nonzero_rational();
    random_unitary(sigma, rng).scale(&r)
}

pub fn random_invertible(
    b: &crate::algebra::degree3::Degree3Algebra,
    rng: &mut Sampler,
) -> Vector {
    loop {
        let g = rng.vector(b.dim());
        if b.is_invertible(&g) {
            return g;
        }
    }
}

fn is_witness(sigma: &SecondKindInvolution, q: &Vector, lambda: &Scalar) -> bool {
    sigma.is_unitary(q) && sigma.algebra().norm(q) == *lambda
}

/// `q` with `q sigma(q) = 1` and `N_B(q) = lambda`, for `lambda lambda_bar = 1`.
///
/// Split coordinates get the closed forms `diag(lambda, 1, 1)` and
/// `(d, (d^{-1})°)`; otherwise a bounded search over products of sampled
/// unitaries is tried.
pub fn unitary_with_norm(
    lambda: &Scalar,
    sigma: &SecondKindInvolution,
    search_bound: usize,
    seed: u64,
) -> Result<Vector> {
    let b = sigma.algebra();
    let k = b.center();
    lambda.same_field(&Scalar::one(k))?;
    let lbar = lambda.conjugate()?;
    if lambda.try_mul(&lbar)? != Scalar::one(k) {
        return Err(CoreError::Parameter(format!(
            "lambda = {lambda} does not satisfy lambda lambda_bar = 1"
        )));
    }
    if *lambda == Scalar::one(k) {
        return Ok(b.one());
    }
    let mut candidates = Vec::new();
    match b.kind() {
        AlgebraKind::Matrix3 => {
            let mut q = b.one();
            for (i, c) in lambda.coords().iter().enumerate() {
                q[i] = c.clone();
            }
            candidates.push(q);
        }
        AlgebraKind::OppositePair => {
            let d = b.factor().expect("opposite pair has a factor");
            if *d.kind() == AlgebraKind::Matrix3 {
                let mut x = d.one();
                x[0] = lambda.coords()[0].clone();
                if let Ok(xi) = d.inverse(&x) {
                    candidates.push(Vector::concat(&[&x, &xi]));
                }
            }
        }
        _ => {}
    }
    if let Some(q) = candidates.into_iter().find(|q| is_witness(sigma, q, lambda)) {
        return Ok(q);
    }
    let mut rng = Sampler::new(seed);
    let mut acc = b.one();
    for _ in 0..search_bound {
        acc = b.mul(&acc, &random_unitary(sigma, &mut rng));
        if is_witness(sigma, &acc, lambda) {
            return Ok(acc);
        }
        if b.norm(&acc) == Scalar::one(k) {
            acc = b.one();
        }
    }
    Err(CoreError::WitnessNotFound(format!(
        "no unitary of norm {lambda} in {} after {search_bound} products",
        b.name()
    )))
}

/// `beta / beta_bar` for `beta = a + w`, `w` the second basis vector of `K`.
pub fn norm_one_scalar(k: &std::sync::Arc<crate::scalar::FieldDescriptor>, a: &Q) -> Result<Scalar> {
    let beta = Scalar::new(k, vec![a.clone(), Q::ONE])?;
    beta.try_mul(&beta.conjugate()?.inverse()?)
}
