//! `J(B, sigma, u, mu)` on `(B, sigma)_+ + B`.
//!
//! Elements are stored as the slice coordinates of the hermitian part
//! followed by the `Q`-coordinates of the `B` part.

use std::sync::Arc;

use crate::algebra::degree3::Degree3Algebra;
use crate::algebra::involution::{HermitianSlice, SecondKindInvolution};
use crate::cubic::CubicForm;
use crate::error::{CoreError, Result};
use crate::linalg::Vector;
use crate::rational::Q;
use crate::scalar::Scalar;

#[derive(Debug, Clone)]
pub struct SecondTits {
    b: Arc<Degree3Algebra>,
    sigma: SecondKindInvolution,
    sigma_u: SecondKindInvolution,
    u: Vector,
    u_inv: Vector,
    mu: Scalar,
    mu_bar: Scalar,
    slice: HermitianSlice,
}

impl SecondTits {
    pub fn new(sigma: &SecondKindInvolution, u: &Vector, mu: &Scalar) -> Result<Self> {
        let b = sigma.algebra().clone();
        if u.len() != b.dim() {
            return Err(CoreError::Dimension {
                expected: b.dim(),
                found: u.len(),
            });
        }
        mu.same_field(&Scalar::one(b.center()))?;
        if !mu.is_invertible() {
            return Err(CoreError::Parameter("mu must be invertible".into()));
        }
        if !sigma.is_hermitian(u) {
            return Err(CoreError::Parameter("u must satisfy sigma(u) = u".into()));
        }
        let u_inv = b
            .inverse(u)
            .map_err(|_| CoreError::Parameter("u must be invertible".into()))?;
        let mu_bar = mu.conjugate()?;
        let nu = b.norm(u);
        let expected = mu.try_mul(&mu_bar)?;
        if nu != expected {
            return Err(CoreError::Parameter(format!(
                "N_B(u) = {nu} but mu mu_bar = {expected}"
            )));
        }
        let sigma_u = if *u == b.one() {
            sigma.clone()
        } else {
            sigma.twisted(u)?
        };
        Ok(SecondTits {
            slice: sigma.hermitian_slice(),
            b,
            sigma: sigma.clone(),
            sigma_u,
            u: u.clone(),
            u_inv,
            mu: mu.clone(),
            mu_bar,
        })
    }

    pub fn algebra(&self) -> &Arc<Degree3Algebra> {
        &self.b
    }

    pub fn sigma(&self) -> &SecondKindInvolution {
        &self.sigma
    }

    /// `Int(u) o sigma`
    pub fn sigma_u(&self) -> &SecondKindInvolution {
        &self.sigma_u
    }

    pub fn u(&self) -> &Vector {
        &self.u
    }

    pub fn mu(&self) -> &Scalar {
        &self.mu
    }

    pub fn slice(&self) -> &HermitianSlice {
        &self.slice
    }

    pub fn slice_dim(&self) -> usize {
        self.slice.dim()
    }

    /// `(b, x)` with `b` as an element of `B`.
    pub fn split(&self, v: &Vector) -> (Vector, Vector) {
        let m = self.slice_dim();
        let b = self.slice.element(&v.slice(0, m));
        (b, v.slice(m, m + self.b.dim()))
    }

    /// Packs a hermitian `b` and any `x`.
    pub fn join(&self, b: &Vector, x: &Vector) -> Vector {
        debug_assert!(self.sigma.is_hermitian(b), "join: b is not hermitian");
        Vector::concat(&[&self.slice.coords(b), x])
    }

    fn to_k(&self, s: &Scalar, what: &str) -> Q {
        s.to_rational()
            .unwrap_or_else(|| panic!("{what} = {s} does not lie in the base field"))
    }
}

impl CubicForm for SecondTits {
    fn id(&self) -> String {
        format!(
            "second({}, {}, u = {}, mu = {})",
            self.b.name(),
            self.sigma.name(),
            self.u,
            self.mu
        )
    }

    fn dim(&self) -> usize {
        self.slice_dim() + self.b.dim()
    }

    fn base_point(&self) -> Vector {
        self.join(&self.b.one(), &self.b.zero())
    }

    fn norm(&self, v: &Vector) -> Q {
        let bb = &self.b;
        let (b, x) = self.split(v);
        let nb = self.to_k(&bb.norm(&b), "N_B(b)");
        let mixed = (&self.mu * &bb.norm(&x)).trace();
        let xusx = bb.mul3(&x, &self.u, &self.sigma.apply(&x));
        let t = self.to_k(&bb.trace(&bb.mul(&b, &xusx)), "T_B(b x u sigma(x))");
        nb + mixed - t
    }

    fn sharp(&self, v: &Vector) -> Vector {
        let bb = &self.b;
        let (b, x) = self.split(v);
        let sx = self.sigma.apply(&x);
        let first = &bb.adjoint(&b) - &bb.mul3(&x, &self.u, &sx);
        let second = &bb.scale_center(&self.mu_bar, &bb.mul(&bb.adjoint(&sx), &self.u_inv))
            - &bb.mul(&b, &x);
        self.join(&first, &second)
    }
}
