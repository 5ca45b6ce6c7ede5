//! Involutions of the second kind, their twists, hermitian slices and unitaries.

use std::sync::Arc;

use super::degree3::{AlgebraKind, Degree3Algebra};
use crate::error::{CoreError, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalar::{FieldKind, Scalar};

#[derive(Clone, Debug)]
pub struct SecondKindInvolution {
    algebra: Arc<Degree3Algebra>,
    matrix: Matrix,
    twist: Option<Vector>,
    name: String,
}

impl SecondKindInvolution {
    /// `e_ij (x) w -> e_ji (x) conj(w)` on `M_3(K)`.
    pub fn conjugate_transpose(b: &Arc<Degree3Algebra>) -> Result<Self> {
        if *b.kind() != AlgebraKind::Matrix3 {
            return Err(CoreError::Unsupported(format!(
                "conjugate transpose needs a matrix algebra, got {}",
                b.name()
            )));
        }
        let k = b.center().clone();
        if !matches!(k.kind(), FieldKind::Quadratic { .. } | FieldKind::SplitQuadratic) {
            return Err(CoreError::InvalidDescriptor(format!(
                "an involution of the second kind needs a quadratic center, got {}",
                k.name()
            )));
        }
        let m = k.degree();
        let matrix = Matrix::from_linear_map(b.dim(), |v| {
            let mut out = Vector::zeros(b.dim());
            for i in 0..3 {
                for j in 0..3 {
                    let src = (3 * i + j) * m;
                    let dst = (3 * j + i) * m;
                    let w = Scalar::new(&k, v.as_slice()[src..src + m].to_vec())
                        .expect("entry")
                        .conjugate()
                        .expect("quadratic");
                    for (a, c) in w.coords().iter().enumerate() {
                        out[dst + a] = c.clone();
                    }
                }
            }
            out
        });
        Self::from_matrix(b, matrix, "conjugate-transpose")
    }

    /// The switch `(x, y°) -> (y, x°)` on `D x D°`.
    pub fn switch(b: &Arc<Degree3Algebra>) -> Result<Self> {
        if *b.kind() != AlgebraKind::OppositePair {
            return Err(CoreError::Unsupported(format!(
                "the switch involution needs D x D°, got {}",
                b.name()
            )));
        }
        let n = b.dim() / 2;
        let matrix = Matrix::from_linear_map(b.dim(), |v| {
            Vector::concat(&[&v.slice(n, 2 * n), &v.slice(0, n)])
        });
        Self::from_matrix(b, matrix, "switch")
    }

    /// Validates a `Q`-linear map as an involution of the second kind. The
    /// anti-multiplicativity check runs over all pairs of basis vectors, so it
    /// is exact.
    pub fn from_matrix(b: &Arc<Degree3Algebra>, matrix: Matrix, name: &str) -> Result<Self> {
        let n = b.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(CoreError::Dimension {
                expected: n,
                found: matrix.rows(),
            });
        }
        if b.center().degree() != 2 || !b.center().is_quadratic() {
            return Err(CoreError::InvalidDescriptor(format!(
                "an involution of the second kind needs a quadratic center, got {}",
                b.center().name()
            )));
        }
        if !matrix.mul(&matrix).is_identity() {
            return Err(CoreError::StructureInvalid(format!("{name} is not of order 2")));
        }
        let sigma = |v: &Vector| matrix.apply(v);
        for i in 0..n {
            let ei = Vector::unit(n, i);
            for j in 0..n {
                let ej = Vector::unit(n, j);
                if sigma(&b.mul(&ei, &ej)) != b.mul(&sigma(&ej), &sigma(&ei)) {
                    return Err(CoreError::StructureInvalid(format!(
                        "{name} is not an anti-automorphism at ({}, {})",
                        b.labels()[i],
                        b.labels()[j]
                    )));
                }
            }
        }
        let k = b.center();
        for w in 0..k.degree() {
            let mut coords = vec![crate::rational::zero(); k.degree()];
            coords[w] = crate::rational::one();
            let z = Scalar::new(k, coords)?;
            let expected = b.embed_center(&z.conjugate()?);
            if sigma(&b.embed_center(&z)) != expected {
                return Err(CoreError::StructureInvalid(format!(
                    "{name} does not restrict to conjugation on the center"
                )));
            }
        }
        Ok(SecondKindInvolution {
            algebra: b.clone(),
            matrix,
            twist: None,
            name: name.to_string(),
        })
    }

    /// `sigma_u = Int(u) o sigma` for invertible `u` with `sigma(u) = u`.
    pub fn twisted(&self, u: &Vector) -> Result<Self> {
        let b = &self.algebra;
        if self.apply(u) != *u {
            return Err(CoreError::Parameter("twist u must satisfy sigma(u) = u".into()));
        }
        let u_inv = b.inverse(u)?;
        let base = self.matrix.clone();
        let matrix = Matrix::from_linear_map(b.dim(), |v| b.mul3(u, &base.apply(v), &u_inv));
        let mut out = Self::from_matrix(b, matrix, &format!("{}_u", self.name))?;
        out.twist = Some(u.clone());
        Ok(out)
    }

    pub fn algebra(&self) -> &Arc<Degree3Algebra> {
        &self.algebra
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn twist(&self) -> Option<&Vector> {
        self.twist.as_ref()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn apply(&self, b: &Vector) -> Vector {
        self.matrix.apply(b)
    }

    /// Whether `q sigma(q) = 1`.
    pub fn is_unitary(&self, q: &Vector) -> bool {
        self.algebra.mul(q, &self.apply(q)) == self.algebra.one()
    }

    /// Whether `z sigma(z) = sigma(z) z`.
    pub fn is_normal(&self, z: &Vector) -> bool {
        let s = self.apply(z);
        self.algebra.mul(z, &s) == self.algebra.mul(&s, z)
    }

    pub fn is_hermitian(&self, b: &Vector) -> bool {
        self.apply(b) == *b
    }

    pub fn hermitian_slice(&self) -> HermitianSlice {
        let n = self.algebra.dim();
        let fixed = self.matrix.sub(&Matrix::identity(n));
        let (basis, free) = fixed.nullspace();
        HermitianSlice { basis, free }
    }
}

/// `Q`-basis of the `sigma`-fixed elements. Coordinates of a fixed element
/// are its entries at the free positions of the defining linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianSlice {
    basis: Vec<Vector>,
    free: Vec<usize>,
}

impl HermitianSlice {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn free_positions(&self) -> &[usize] {
        &self.free
    }

    /// Slice coordinates of a fixed element.
    pub fn coords(&self, b: &Vector) -> Vector {
        Vector::new(self.free.iter().map(|&f| b[f].clone()).collect())
    }

    /// Element of `B` with the given slice coordinates.
    pub fn element(&self, coords: &Vector) -> Vector {
        assert_eq!(coords.len(), self.basis.len(), "slice coordinate length");
        let n = self.basis.first().map_or(0, Vector::len);
        let mut acc = Vector::zeros(n);
        for (c, v) in coords.iter().zip(&self.basis) {
            acc = acc.add_scaled(c, v);
        }
        acc
    }
}
