//! `J(D, lambda)` on `D + D + D`.

use std::sync::Arc;

use malachite_base::num::arithmetic::traits::Reciprocal;
use malachite_base::num::basic::traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::degree3::Degree3Algebra;
use crate::cubic::CubicForm;
use crate::error::{CoreError, Result};
use crate::linalg::Vector;
use crate::rational::{fmt_q, Q};

/// Deliberate defects used to check that the axiom suite notices them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AdjointCorruption {
    /// First component of the adjoint computed as `x^#` instead of `x^# - yz`.
    DroppedYz,
}

#[derive(Debug, Clone)]
pub struct FirstTits {
    d: Arc<Degree3Algebra>,
    lambda: Q,
    lambda_inv: Q,
    corruption: Option<AdjointCorruption>,
}

impl FirstTits {
    pub fn new(d: &Arc<Degree3Algebra>, lambda: Q) -> Result<Self> {
        if d.center().degree() != 1 {
            return Err(CoreError::InvalidDescriptor(format!(
                "the first construction needs an algebra with center Q, got {}",
                d.name()
            )));
        }
        if lambda == Q::ZERO {
            return Err(CoreError::Parameter("lambda must be nonzero".into()));
        }
        Ok(FirstTits {
            d: d.clone(),
            lambda_inv: (&lambda).reciprocal(),
            lambda,
            corruption: None,
        })
    }

    pub fn with_corruption(mut self, corruption: Option<AdjointCorruption>) -> Self {
        self.corruption = corruption;
        self
    }

    pub fn corruption(&self) -> Option<AdjointCorruption> {
        self.corruption
    }

    pub fn algebra(&self) -> &Arc<Degree3Algebra> {
        &self.d
    }

    pub fn lambda(&self) -> &Q {
        &self.lambda
    }

    pub fn block(&self) -> usize {
        self.d.dim()
    }

    pub fn split(&self, v: &Vector) -> (Vector, Vector, Vector) {
        let n = self.block();
        (v.slice(0, n), v.slice(n, 2 * n), v.slice(2 * n, 3 * n))
    }

    pub fn join(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        Vector::concat(&[x, y, z])
    }

    /// `d -> (d, 0, 0)`
    pub fn inject(&self, d: &Vector) -> Vector {
        let zero = self.d.zero();
        self.join(d, &zero, &zero)
    }

    /// `(x, y, z) -> x`
    pub fn project(&self, v: &Vector) -> Vector {
        v.slice(0, self.block())
    }

    fn rational_norm(&self, x: &Vector) -> Q {
        self.d.norm(x).to_rational().expect("center is Q")
    }

    fn rational_trace(&self, x: &Vector) -> Q {
        self.d.trace(x).to_rational().expect("center is Q")
    }
}

impl CubicForm for FirstTits {
    fn id(&self) -> String {
        let mut id = format!("first({}, {})", self.d.name(), fmt_q(&self.lambda));
        if let Some(c) = self.corruption {
            id.push_str(&format!(" [{c:?}]"));
        }
        id
    }

    fn dim(&self) -> usize {
        3 * self.block()
    }

    fn base_point(&self) -> Vector {
        self.inject(&self.d.one())
    }

    fn norm(&self, v: &Vector) -> Q {
        let (x, y, z) = self.split(v);
        self.rational_norm(&x) + &self.lambda * self.rational_norm(&y)
            + &self.lambda_inv * self.rational_norm(&z)
            - self.rational_trace(&self.d.mul3(&x, &y, &z))
    }

    fn sharp(&self, v: &Vector) -> Vector {
        let d = &self.d;
        let (x, y, z) = self.split(v);
        let first = match self.corruption {
            Some(AdjointCorruption::DroppedYz) => d.adjoint(&x),
            None => &d.adjoint(&x) - &d.mul(&y, &z),
        };
        let second = &d.adjoint(&z).scale(&self.lambda_inv) - &d.mul(&x, &y);
        let third = &d.adjoint(&y).scale(&self.lambda) - &d.mul(&z, &x);
        self.join(&first, &second, &third)
    }
}
