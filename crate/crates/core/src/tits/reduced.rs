//! Reduced Albert algebras `H_3(C, gamma)`.
//!
//! Coordinates: `[alpha_1, alpha_2, alpha_3, a, b, c]` with `a` in the
//! `[23]` slot, `b` in `[31]` and `c` in `[12]`, each an octonion.

use malachite_base::num::basic::traits::Zero;

use crate::algebra::octonion::OctonionAlgebra;
use crate::cubic::CubicForm;
use crate::error::{CoreError, Result};
use crate::linalg::Vector;
use crate::rational::{fmt_q, Q};

#[derive(Debug, Clone)]
pub struct ReducedAlbert {
    c: OctonionAlgebra,
    gamma: [Q; 3],
}

impl ReducedAlbert {
    pub fn new(c: OctonionAlgebra, gamma: [Q; 3]) -> Result<Self> {
        if gamma.contains(&Q::ZERO) {
            return Err(CoreError::Parameter("every gamma_i must be nonzero".into()));
        }
        Ok(ReducedAlbert { c, gamma })
    }

    pub fn octonions(&self) -> &OctonionAlgebra {
        &self.c
    }

    pub fn gamma(&self) -> &[Q; 3] {
        &self.gamma
    }

    pub fn split(&self, v: &Vector) -> ([Q; 3], Vector, Vector, Vector) {
        (
            [v[0].clone(), v[1].clone(), v[2].clone()],
            v.slice(3, 11),
            v.slice(11, 19),
            v.slice(19, 27),
        )
    }

    pub fn join(&self, alpha: &[Q; 3], a: &Vector, b: &Vector, c: &Vector) -> Vector {
        let diag = Vector::new(alpha.to_vec());
        Vector::concat(&[&diag, a, b, c])
    }

    pub fn diagonal(&self, alpha: [Q; 3]) -> Vector {
        let z = Vector::zeros(8);
        self.join(&alpha, &z, &z, &z)
    }
}

impl CubicForm for ReducedAlbert {
    fn id(&self) -> String {
        let g: Vec<String> = self.gamma.iter().map(fmt_q).collect();
        format!("H3({}, [{}])", self.c.name(), g.join(", "))
    }

    fn dim(&self) -> usize {
        27
    }

    fn base_point(&self) -> Vector {
        self.diagonal([Q::from(1), Q::from(1), Q::from(1)])
    }

    fn norm(&self, v: &Vector) -> Q {
        let o = &self.c;
        let [g1, g2, g3] = &self.gamma;
        let ([a1, a2, a3], a, b, c) = self.split(v);
        let abc = o.trace(&o.mul(&o.mul(&a, &b), &c));
        &a1 * &a2 * &a3 - g2 * g3 * &a1 * o.norm(&a) - g3 * g1 * &a2 * o.norm(&b)
            - g1 * g2 * &a3 * o.norm(&c)
            + g1 * g2 * g3 * abc
    }

    fn sharp(&self, v: &Vector) -> Vector {
        let o = &self.c;
        let [g1, g2, g3] = &self.gamma;
        let ([a1, a2, a3], a, b, c) = self.split(v);
        let diag = [
            &a2 * &a3 - g2 * g3 * o.norm(&a),
            &a3 * &a1 - g3 * g1 * o.norm(&b),
            &a1 * &a2 - g1 * g2 * o.norm(&c),
        ];
        let na = &o.conj(&o.mul(&b, &c)).scale(g1) - &a.scale(&a1);
        let nb = &o.conj(&o.mul(&c, &a)).scale(g2) - &b.scale(&a2);
        let nc = &o.conj(&o.mul(&a, &b)).scale(g3) - &c.scale(&a3);
        self.join(&diag, &na, &nb, &nc)
    }
}
