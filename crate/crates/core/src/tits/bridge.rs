//! `J(D, lambda)` as the second construction on `D x D°` with the switch.

use malachite_base::num::arithmetic::traits::Reciprocal;

use super::first::FirstTits;
use super::second::SecondTits;
use crate::algebra::degree3::Degree3Algebra;
use crate::algebra::involution::SecondKindInvolution;
use crate::error::Result;
use crate::linalg::{Matrix, Vector};
use crate::scalar::Scalar;

#[derive(Debug, Clone)]
pub struct Bridge {
    pub second: SecondTits,
    /// `(x, y, z) -> ((x, x°), (y, z°))`
    pub phi: Matrix,
}

pub fn first_as_second(first: &FirstTits) -> Result<Bridge> {
    let d = first.algebra();
    let b = Degree3Algebra::opposite_pair(d)?;
    let sigma = SecondKindInvolution::switch(&b)?;
    let lambda = first.lambda();
    let mu = Scalar::new(b.center(), vec![lambda.clone(), lambda.reciprocal()])?;
    let second = SecondTits::new(&sigma, &b.one(), &mu)?;
    let n = d.dim();
    let phi = Matrix::from_linear_map(3 * n, |v| {
        let (x, y, z) = first.split(v);
        let herm = Vector::concat(&[&x, &x]);
        let off = Vector::concat(&[&y, &z]);
        second.join(&herm, &off)
    });
    Ok(Bridge { second, phi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;
    use crate::cubic::{verify_axioms, CubicForm, CubicNormStructure};
    use crate::rational::q;
    use crate::sample::Sampler;
    use crate::scalar::FieldDescriptor;

    #[test]
    fn phi_is_an_isometry() {
        let d = Degree3Algebra::matrix3(&FieldDescriptor::rationals()).unwrap();
        let first = FirstTits::new(&d, q(3)).unwrap();
        let bridge = first_as_second(&first).unwrap();
        assert_eq!(bridge.phi.apply(&first.base_point()), bridge.second.base_point());
        let mut rng = Sampler::new(21);
        for _ in 0..30 {
            let v = rng.vector(27);
            assert_eq!(bridge.second.norm(&bridge.phi.apply(&v)), first.norm(&v));
        }
        assert!(bridge.phi.inverse().is_some());
        let s = CubicNormStructure::new(Arc::new(bridge.second.clone()));
        assert!(verify_axioms(&s, 20, 3).all_passed());
    }
}
