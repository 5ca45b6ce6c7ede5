//! Norm similarities as matrices with a sampled certificate.

use std::sync::Arc;

use malachite_base::num::basic::traits::Zero;
use serde::Serialize;

use crate::cubic::CubicNormStructure;
use crate::error::{CoreError, Result};
use crate::linalg::{Matrix, Vector};
use crate::rational::{fmt_q, Q};
use crate::sample::Sampler;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub samples: usize,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub struct StructureMap {
    structure: Arc<CubicNormStructure>,
    matrix: Matrix,
    factor: Q,
    certificate: Certificate,
}

/// Serialized form of a [`StructureMap`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureMapRecord {
    #[serde(rename = "structure-id")]
    pub structure: String,
    #[serde(rename = "nu")]
    pub factor: String,
    #[serde(rename = "matrix-rows")]
    pub matrix: Vec<Vec<String>>,
    pub certificate: Certificate,
}

/// Finds `nu` with `N(f(x)) = nu N(x)` at seeded points, evaluating `f` directly.
pub fn similarity_factor_of(
    s: &CubicNormStructure,
    f: impl Fn(&Vector) -> Vector,
    samples: usize,
    seed: u64,
) -> Result<Q> {
    let mut rng = Sampler::new(seed);
    let mut factor: Option<(Q, Vector)> = None;
    let mut pending = Vec::new();
    for _ in 0..samples {
        let x = rng.vector(s.dim());
        let nx = s.norm(&x);
        let nfx = s.norm(&f(&x));
        if factor.is_none() && nx != Q::ZERO {
            factor = Some((&nfx / &nx, x));
        } else {
            pending.push((x, nx, nfx));
        }
    }
    let (nu, first) = factor.ok_or_else(|| {
        CoreError::NotASimilarity("every sample had N(x) = 0, factor undetermined".into())
    })?;
    if nu == Q::ZERO {
        return Err(CoreError::NotASimilarity(format!(
            "N(f(x)) = 0 at x = {first} with N(x) != 0"
        )));
    }
    for (x, nx, nfx) in pending {
        let expected = &nu * &nx;
        if nfx != expected {
            return Err(CoreError::NotASimilarity(format!(
                "x = {x}: N(f(x)) = {}, nu N(x) = {} with nu = {}",
                fmt_q(&nfx),
                fmt_q(&expected),
                fmt_q(&nu)
            )));
        }
    }
    Ok(nu)
}

pub fn certify_similarity(
    s: &Arc<CubicNormStructure>,
    matrix: Matrix,
    samples: usize,
    seed: u64,
) -> Result<StructureMap> {
    let n = s.dim();
    if matrix.rows() != n || matrix.cols() != n {
        return Err(CoreError::Dimension {
            expected: n,
            found: matrix.rows(),
        });
    }
    if matrix.rank() != n {
        return Err(CoreError::NotASimilarity("matrix is singular".into()));
    }
    let factor = similarity_factor_of(s, |x| matrix.apply(x), samples, seed)?;
    Ok(StructureMap {
        structure: s.clone(),
        matrix,
        factor,
        certificate: Certificate { samples, seed },
    })
}

impl StructureMap {
    pub fn identity(s: &Arc<CubicNormStructure>) -> StructureMap {
        StructureMap {
            structure: s.clone(),
            matrix: Matrix::identity(s.dim()),
            factor: Q::from(1),
            certificate: Certificate { samples: 0, seed: 0 },
        }
    }

    /// `R_gamma`, multiplication by a nonzero scalar.
    pub fn homothety(s: &Arc<CubicNormStructure>, gamma: &Q, samples: usize, seed: u64) -> Result<Self> {
        if *gamma == Q::ZERO {
            return Err(CoreError::Parameter("homothety by 0".into()));
        }
        certify_similarity(s, Matrix::identity(s.dim()).scale(gamma), samples, seed)
    }

    pub fn u_operator(s: &Arc<CubicNormStructure>, a: &Vector, samples: usize, seed: u64) -> Result<Self> {
        if !s.is_invertible(a) {
            return Err(CoreError::NotInvertible(format!("U_a with N(a) = 0, a = {a}")));
        }
        certify_similarity(s, s.u_matrix(a)?, samples, seed)
    }

    pub fn structure(&self) -> &Arc<CubicNormStructure> {
        &self.structure
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn factor(&self) -> &Q {
        &self.factor
    }

    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }

    pub fn apply(&self, x: &Vector) -> Vector {
        self.matrix.apply(x)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn fixes_base_point(&self) -> bool {
        let c = self.structure.base_point();
        self.apply(&c) == c
    }

    /// Automorphism: factor 1 and `f(c) = c`.
    pub fn is_automorphism(&self) -> bool {
        self.factor == 1 && self.fixes_base_point()
    }

    /// `self o other`, recertified; the factor must come out multiplicative.
    pub fn compose(&self, other: &StructureMap) -> Result<StructureMap> {
        let out = certify_similarity(
            &self.structure,
            self.matrix.mul(&other.matrix),
            self.certificate.samples.max(other.certificate.samples).max(1),
            self.certificate.seed ^ other.certificate.seed.rotate_left(1),
        )?;
        let expected = &self.factor * &other.factor;
        if out.factor != expected {
            return Err(CoreError::NotASimilarity(format!(
                "composite factor {} differs from product {}",
                fmt_q(&out.factor),
                fmt_q(&expected)
            )));
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Result<StructureMap> {
        let inv = self
            .matrix
            .inverse()
            .ok_or_else(|| CoreError::NotInvertible("structure map".into()))?;
        certify_similarity(&self.structure, inv, self.certificate.samples.max(1), self.certificate.seed)
    }

    /// Whether the map sends the first `m` coordinates into themselves.
    pub fn stabilizes_leading_block(&self, m: usize) -> bool {
        let n = self.matrix.rows();
        self.matrix.block(m, n, 0, m).is_zero()
    }

    pub fn record(&self) -> StructureMapRecord {
        StructureMapRecord {
            structure: self.structure.id(),
            factor: fmt_q(&self.factor),
            matrix: self.matrix.to_string_rows(),
            certificate: self.certificate.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic::ScalarCubic;
    use crate::rational::q;
    use crate::tits::ReducedAlbert;
    use crate::algebra::octonion::OctonionAlgebra;

    fn h3() -> Arc<CubicNormStructure> {
        CubicNormStructure::new(Arc::new(
            ReducedAlbert::new(OctonionAlgebra::Zorn, [q(1), q(1), q(1)]).unwrap(),
        ))
    }

    #[test]
    fn basic_factors() {
        let s = h3();
        let id = certify_similarity(&s, Matrix::identity(27), 10, 0).unwrap();
        assert_eq!(*id.factor(), q(1));
        let r = StructureMap::homothety(&s, &q(2), 10, 0).unwrap();
        assert_eq!(*r.factor(), q(8));
        let a = ReducedAlbert::new(OctonionAlgebra::Zorn, [q(1), q(1), q(1)])
            .unwrap()
            .diagonal([q(1), q(2), q(3)]);
        let u = StructureMap::u_operator(&s, &a, 10, 0).unwrap();
        assert_eq!(*u.factor(), q(36));
        let both = u.compose(&r).unwrap();
        assert_eq!(*both.factor(), q(288));
        assert_eq!(*u.inverse().unwrap().factor(), crate::rational::qr(1, 36));
    }

    #[test]
    fn rejects_non_similarity() {
        let s = CubicNormStructure::new(Arc::new(ScalarCubic));
        assert!(certify_similarity(&s, Matrix::zeros(1, 1), 5, 0).is_err());
        let s = h3();
        let mut m = Matrix::identity(27);
        m.set(0, 1, q(1));
        assert!(matches!(
            certify_similarity(&s, m, 10, 0),
            Err(CoreError::NotASimilarity(_))
        ));
    }
}
