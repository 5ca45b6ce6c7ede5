//! Parameter triples `(gamma, g, q)` for similarities stabilizing the first
//! summand, and the triples that act trivially.

use malachite_base::num::basic::traits::Zero;

use super::extension::{extend_sim_second, CertifyOptions};
use super::structure_map::StructureMap;
use crate::error::{CoreError, Result};
use crate::linalg::Vector;
use crate::rational::Q;
use crate::scalar::Scalar;
use crate::tits::{Built, SecondTits};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerTriple {
    pub gamma: Q,
    pub g: Vector,
    pub q: Vector,
}

impl StabilizerTriple {
    /// `q` unitary for `sigma_u` and `N_B(q) = N_B(sigma(g)^{-1} g)`.
    pub fn validate(&self, j: &SecondTits) -> Result<()> {
        let b = j.algebra();
        if self.gamma == Q::ZERO {
            return Err(CoreError::Parameter("gamma must be nonzero".into()));
        }
        let gi = b
            .inverse(&self.g)
            .map_err(|_| CoreError::Parameter("g must be invertible".into()))?;
        if !j.sigma_u().is_unitary(&self.q) {
            return Err(CoreError::Parameter("q is not unitary for sigma_u".into()));
        }
        let target = b.norm(&b.mul(&j.sigma().apply(&gi), &self.g));
        if b.norm(&self.q) != target {
            return Err(CoreError::Parameter(format!(
                "N_B(q) = {} but N_B(sigma(g)^{{-1}} g) = {target}",
                b.norm(&self.q)
            )));
        }
        Ok(())
    }

    /// The triple with `q` replaced by `q^{-1}`.
    pub fn with_inverted_q(&self, j: &SecondTits) -> Result<StabilizerTriple> {
        Ok(StabilizerTriple {
            gamma: self.gamma.clone(),
            g: self.g.clone(),
            q: j.algebra().inverse(&self.q)?,
        })
    }
}

/// `(N_K(alpha)^{-1}, alpha, alpha_bar^{-1} alpha)`.
pub fn stab_kernel_element(j: &SecondTits, alpha: &Scalar) -> Result<StabilizerTriple> {
    let b = j.algebra();
    alpha.same_field(&Scalar::one(b.center()))?;
    if !alpha.is_invertible() {
        return Err(CoreError::Parameter("alpha must be invertible".into()));
    }
    let gamma = crate::rational::recip(&alpha.norm())
        .ok_or_else(|| CoreError::Parameter("N_K(alpha) = 0".into()))?;
    let q = alpha.conjugate()?.inverse()?.try_mul(alpha)?;
    Ok(StabilizerTriple {
        gamma,
        g: b.embed_center(alpha),
        q: b.embed_center(&q),
    })
}

/// `(b, x) -> gamma (g b sigma(g), sigma(g)^# x q)`.
pub fn triple_map(
    j: &Built<SecondTits>,
    t: &StabilizerTriple,
    opts: CertifyOptions,
) -> Result<StructureMap> {
    extend_sim_second(j, &t.gamma, &t.g, &t.q, opts)
}

/// The same map fed with `q^{-1}`.
pub fn triple_map_inverse_q(
    j: &Built<SecondTits>,
    t: &StabilizerTriple,
    opts: CertifyOptions,
) -> Result<StructureMap> {
    triple_map(j, &t.with_inverted_q(&j.form)?, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::degree3::Degree3Algebra;
    use crate::algebra::involution::SecondKindInvolution;
    use crate::rational::{q, qr};
    use crate::scalar::FieldDescriptor;

    fn gaussian() -> Built<SecondTits> {
        let k = FieldDescriptor::quadratic(-1).unwrap();
        let b = Degree3Algebra::matrix3(&k).unwrap();
        let sigma = SecondKindInvolution::conjugate_transpose(&b).unwrap();
        Built::new(SecondTits::new(&sigma, &b.one(), &Scalar::one(&k)).unwrap())
    }

    #[test]
    fn documented_triples() {
        let j = gaussian();
        let k = j.form.algebra().center().clone();
        let b = j.form.algebra();
        let opts = CertifyOptions { samples: 5, seed: 0 };

        let i = Scalar::new(&k, vec![q(0), q(1)]).unwrap();
        let t = stab_kernel_element(&j.form, &i).unwrap();
        assert_eq!(t.gamma, q(1));
        assert_eq!(t.q, b.one().scale(&q(-1)));
        t.validate(&j.form).unwrap();
        assert!(triple_map(&j, &t, opts).unwrap().is_identity());

        let two = Scalar::from_rational(&k, q(2));
        let t = stab_kernel_element(&j.form, &two).unwrap();
        assert_eq!(t.gamma, qr(1, 4));
        assert_eq!(t.q, b.one());
        assert!(triple_map(&j, &t, opts).unwrap().is_identity());

        assert!(stab_kernel_element(&j.form, &Scalar::zero(&k)).is_err());
    }

    #[test]
    fn inverted_q_convention_needs_the_other_quotient() {
        let j = gaussian();
        let k = j.form.algebra().center().clone();
        let opts = CertifyOptions { samples: 5, seed: 0 };
        let alpha = Scalar::new(&k, vec![q(1), q(1)]).unwrap();
        let t = stab_kernel_element(&j.form, &alpha).unwrap();
        assert!(triple_map(&j, &t, opts).unwrap().is_identity());
        assert!(triple_map_inverse_q(&j, &t, opts).map_or(true, |f| !f.is_identity()));
        // q = alpha_bar alpha^{-1} is what the inverted convention needs
        let b = j.form.algebra();
        let other = StabilizerTriple {
            q: b.embed_center(&alpha.conjugate().unwrap().try_mul(&alpha.inverse().unwrap()).unwrap()),
            ..t
        };
        assert!(triple_map_inverse_q(&j, &other, opts).unwrap().is_identity());
    }
}
