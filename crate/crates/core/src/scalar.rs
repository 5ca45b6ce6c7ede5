//! Exact scalars in `Q` and its quadratic and cubic étale extensions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use malachite_base::num::basic::traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::linalg::{Matrix, Vector};
use crate::poly::Poly;
use crate::rational::{fmt_q, Q};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FieldKind {
    Rationals,
    /// `Q(sqrt d)`, basis `1, s` with `s^2 = d`.
    Quadratic { d: i64 },
    /// `Q x Q` with the switch as conjugation.
    SplitQuadratic,
    /// `Q[x]/(x^3 + c2 x^2 + c1 x + c0)`, power basis; `min_poly = [c0, c1, c2]`.
    Cubic { min_poly: [String; 3] },
    /// `Q x Q x Q`.
    CubicProduct,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldDescriptor {
    kind: FieldKind,
    labels: Vec<String>,
    cubic: Option<[Q; 3]>,
}

impl FieldDescriptor {
    pub fn rationals() -> Arc<Self> {
        Arc::new(FieldDescriptor {
            kind: FieldKind::Rationals,
            labels: vec!["1".into()],
            cubic: None,
        })
    }

    /// `Q(sqrt d)` for a square-free `d != 0, 1`.
    pub fn quadratic(d: i64) -> Result<Arc<Self>> {
        if d == 0 || d == 1 {
            return Err(CoreError::InvalidDescriptor(format!(
                "quadratic extension needs a non-square d, got {d}"
            )));
        }
        let m = d.unsigned_abs();
        let mut p = 2u64;
        while p * p <= m {
            if m.is_multiple_of(p * p) {
                return Err(CoreError::InvalidDescriptor(format!(
                    "d = {d} is not square-free"
                )));
            }
            p += 1;
        }
        Ok(Arc::new(FieldDescriptor {
            kind: FieldKind::Quadratic { d },
            labels: vec!["1".into(), format!("sqrt({d})")],
            cubic: None,
        }))
    }

    pub fn split_quadratic() -> Arc<Self> {
        Arc::new(FieldDescriptor {
            kind: FieldKind::SplitQuadratic,
            labels: vec!["e1".into(), "e2".into()],
            cubic: None,
        })
    }

    /// `Q[x]/(f)` with `f = x^3 + c2 x^2 + c1 x + c0` irreducible over `Q`.
    pub fn cubic(min_poly: [Q; 3]) -> Result<Arc<Self>> {
        let [c0, c1, c2] = min_poly.clone();
        let f = Poly::new(vec![c0.clone(), c1.clone(), c2.clone(), Q::ONE]);
        // discriminant of x^3 + b x^2 + c x + d
        let (b, c, d) = (&c2, &c1, &c0);
        let disc = b * b * c * c - Q::from(4) * c * c * c - Q::from(4) * b * b * b * d
            - Q::from(27) * d * d
            + Q::from(18) * b * c * d;
        if disc == Q::ZERO {
            return Err(CoreError::InvalidDescriptor(format!(
                "cubic {f} is not separable"
            )));
        }
        match f.rational_roots() {
            Some(roots) if roots.is_empty() => {}
            Some(roots) => {
                return Err(CoreError::InvalidDescriptor(format!(
                    "cubic {f} has rational root {}",
                    fmt_q(&roots[0])
                )))
            }
            None => {
                return Err(CoreError::InvalidDescriptor(format!(
                    "cubic {f} has coefficients too large to certify irreducibility"
                )))
            }
        }
        Ok(Arc::new(FieldDescriptor {
            kind: FieldKind::Cubic {
                min_poly: [fmt_q(&c0), fmt_q(&c1), fmt_q(&c2)],
            },
            labels: vec!["1".into(), "x".into(), "x^2".into()],
            cubic: Some(min_poly),
        }))
    }

    pub fn cubic_product() -> Arc<Self> {
        Arc::new(FieldDescriptor {
            kind: FieldKind::CubicProduct,
            labels: vec!["e1".into(), "e2".into(), "e3".into()],
            cubic: None,
        })
    }

    pub fn kind(&self) -> &FieldKind {
        &self.kind
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degree(&self) -> usize {
        self.labels.len()
    }

    pub fn is_quadratic(&self) -> bool {
        matches!(self.kind, FieldKind::Quadratic { .. } | FieldKind::SplitQuadratic)
    }

    pub fn is_cubic(&self) -> bool {
        matches!(self.kind, FieldKind::Cubic { .. } | FieldKind::CubicProduct)
    }

    pub fn name(&self) -> String {
        match &self.kind {
            FieldKind::Rationals => "Q".into(),
            FieldKind::Quadratic { d } => format!("Q(sqrt({d}))"),
            FieldKind::SplitQuadratic => "QxQ".into(),
            FieldKind::Cubic { .. } => format!("Q[x]/({})", self.min_poly_display()),
            FieldKind::CubicProduct => "QxQxQ".into(),
        }
    }

    fn min_poly_display(&self) -> String {
        let [c0, c1, c2] = self.cubic.clone().expect("cubic field");
        Poly::new(vec![c0, c1, c2, Q::ONE]).display_in("x")
    }

    /// Product of coordinate vectors.
    fn mul_coords(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        match &self.kind {
            FieldKind::Rationals => vec![&a[0] * &b[0]],
            FieldKind::Quadratic { d } => vec![
                &a[0] * &b[0] + Q::from(*d) * &a[1] * &b[1],
                &a[0] * &b[1] + &a[1] * &b[0],
            ],
            FieldKind::SplitQuadratic | FieldKind::CubicProduct => {
                a.iter().zip(b).map(|(x, y)| x * y).collect()
            }
            FieldKind::Cubic { .. } => {
                let [c0, c1, c2] = self.cubic.as_ref().expect("cubic field");
                let mut p = vec![Q::ZERO; 5];
                for i in 0..3 {
                    for j in 0..3 {
                        if a[i] != Q::ZERO && b[j] != Q::ZERO {
                            p[i + j] += &a[i] * &b[j];
                        }
                    }
                }
                for top in [4usize, 3] {
                    let lead = std::mem::replace(&mut p[top], Q::ZERO);
                    if lead != Q::ZERO {
                        p[top - 1] -= c2 * &lead;
                        p[top - 2] -= c1 * &lead;
                        p[top - 3] -= c0 * &lead;
                    }
                }
                p.truncate(3);
                p
            }
        }
    }

    fn embed_coords(&self, x: &Q) -> Vec<Q> {
        match self.kind {
            FieldKind::Rationals => vec![x.clone()],
            FieldKind::Quadratic { .. } => vec![x.clone(), Q::ZERO],
            FieldKind::SplitQuadratic => vec![x.clone(), x.clone()],
            FieldKind::Cubic { .. } => vec![x.clone(), Q::ZERO, Q::ZERO],
            FieldKind::CubicProduct => vec![x.clone(), x.clone(), x.clone()],
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Norm and trace one level down; `degenerate` marks a base-field input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormTrace {
    pub norm: Q,
    pub trace: Q,
    pub degenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    desc: Arc<FieldDescriptor>,
    coords: Vec<Q>,
}

impl Scalar {
    pub fn new(desc: &Arc<FieldDescriptor>, coords: Vec<Q>) -> Result<Self> {
        if coords.len() != desc.degree() {
            return Err(CoreError::Dimension {
                expected: desc.degree(),
                found: coords.len(),
            });
        }
        Ok(Scalar {
            desc: desc.clone(),
            coords,
        })
    }

    pub fn from_rational(desc: &Arc<FieldDescriptor>, x: Q) -> Self {
        Scalar {
            coords: desc.embed_coords(&x),
            desc: desc.clone(),
        }
    }

    pub fn zero(desc: &Arc<FieldDescriptor>) -> Self {
        Self::from_rational(desc, Q::ZERO)
    }

    pub fn one(desc: &Arc<FieldDescriptor>) -> Self {
        Self::from_rational(desc, Q::ONE)
    }

    pub fn descriptor(&self) -> &Arc<FieldDescriptor> {
        &self.desc
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn to_vector(&self) -> Vector {
        Vector::new(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| *c == Q::ZERO)
    }

    pub fn same_field(&self, other: &Scalar) -> Result<()> {
        if Arc::ptr_eq(&self.desc, &other.desc) || self.desc == other.desc {
            Ok(())
        } else {
            Err(CoreError::DescriptorMismatch {
                expected: self.desc.name(),
                found: other.desc.name(),
            })
        }
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(Scalar {
            coords: self.desc.mul_coords(&self.coords, &other.coords),
            desc: self.desc.clone(),
        })
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(Scalar {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
            desc: self.desc.clone(),
        })
    }

    pub fn scale(&self, s: &Q) -> Scalar {
        Scalar {
            coords: self.coords.iter().map(|c| c * s).collect(),
            desc: self.desc.clone(),
        }
    }

    /// Matrix of multiplication by `self` on the coordinate space.
    pub fn mult_matrix(&self) -> Matrix {
        let n = self.desc.degree();
        Matrix::from_linear_map(n, |v| {
            Vector::new(self.desc.mul_coords(&self.coords, v.as_slice()))
        })
    }

    pub fn inverse(&self) -> Result<Scalar> {
        let n = self.desc.degree();
        let one = Vector::new(self.desc.embed_coords(&Q::ONE));
        debug_assert_eq!(one.len(), n);
        self.mult_matrix()
            .solve(&one)
            .map(|v| Scalar {
                coords: v.into_inner(),
                desc: self.desc.clone(),
            })
            .ok_or_else(|| CoreError::NotInvertible(format!("scalar {self}")))
    }

    pub fn is_invertible(&self) -> bool {
        self.mult_matrix().det() != Q::ZERO
    }

    /// The nontrivial automorphism of a quadratic étale algebra.
    pub fn conjugate(&self) -> Result<Scalar> {
        let coords = match self.desc.kind {
            FieldKind::Quadratic { .. } => vec![self.coords[0].clone(), -&self.coords[1]],
            FieldKind::SplitQuadratic => vec![self.coords[1].clone(), self.coords[0].clone()],
            _ => {
                return Err(CoreError::DescriptorMismatch {
                    expected: "quadratic extension".into(),
                    found: self.desc.name(),
                })
            }
        };
        Ok(Scalar {
            coords,
            desc: self.desc.clone(),
        })
    }

    /// Norm and trace down to `Q`.
    pub fn norm_trace_down(&self) -> NormTrace {
        if self.desc.kind == FieldKind::Rationals {
            return NormTrace {
                norm: self.coords[0].clone(),
                trace: self.coords[0].clone(),
                degenerate: true,
            };
        }
        let m = self.mult_matrix();
        NormTrace {
            norm: m.det(),
            trace: m.trace(),
            degenerate: false,
        }
    }

    pub fn norm(&self) -> Q {
        self.norm_trace_down().norm
    }

    pub fn trace(&self) -> Q {
        self.norm_trace_down().trace
    }

    /// The rational value if `self` lies in the image of `Q`.
    pub fn to_rational(&self) -> Option<Q> {
        let candidate = self.coords[0].clone();
        (self.desc.embed_coords(&candidate) == self.coords).then_some(candidate)
    }

    /// Applies the `Q`-algebra endomorphism of a cubic field sending `x` to `image`.
    pub fn apply_cubic_map(&self, image: &Scalar) -> Result<Scalar> {
        if !matches!(self.desc.kind, FieldKind::Cubic { .. }) {
            return Err(CoreError::DescriptorMismatch {
                expected: "cubic extension".into(),
                found: self.desc.name(),
            });
        }
        self.same_field(image)?;
        let sq = image.try_mul(image)?;
        Ok(Scalar::from_rational(&self.desc, self.coords[0].clone())
            + image.scale(&self.coords[1])
            + sq.scale(&self.coords[2]))
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        self.try_add(&rhs).expect("scalar addition across fields")
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).expect("scalar addition across fields")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_add(&-rhs).expect("scalar subtraction across fields")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).expect("scalar product across fields")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.scale(&Q::from(-1))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{}", fmt_q(&r));
        }
        let parts: Vec<String> = self
            .coords
            .iter()
            .zip(self.desc.labels())
            .filter(|(c, _)| **c != Q::ZERO)
            .map(|(c, l)| {
                if l == "1" {
                    fmt_q(c)
                } else {
                    format!("({})*{l}", fmt_q(c))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qr};

    fn gaussian() -> Arc<FieldDescriptor> {
        FieldDescriptor::quadratic(-1).unwrap()
    }

    #[test]
    fn quadratic_norm_and_trace() {
        let k = gaussian();
        let x = Scalar::new(&k, vec![q(3), q(4)]).unwrap();
        let nt = x.norm_trace_down();
        assert_eq!((nt.norm, nt.trace, nt.degenerate), (q(25), q(6), false));
        let one = Scalar::one(&k);
        assert_eq!(one.norm_trace_down().trace, q(2));
        assert_eq!(&x * &x.conjugate().unwrap(), Scalar::from_rational(&k, q(25)));
    }

    #[test]
    fn split_quadratic_switch() {
        let k = FieldDescriptor::split_quadratic();
        let x = Scalar::new(&k, vec![q(2), q(5)]).unwrap();
        assert_eq!(x.conjugate().unwrap().coords(), &[q(5), q(2)]);
        let nt = x.norm_trace_down();
        assert_eq!((nt.norm, nt.trace), (q(10), q(7)));
    }

    #[test]
    fn rational_is_degenerate() {
        let x = Scalar::from_rational(&FieldDescriptor::rationals(), qr(2, 3));
        let nt = x.norm_trace_down();
        assert!(nt.degenerate);
        assert_eq!(nt.norm, qr(2, 3));
        assert!(x.conjugate().is_err());
    }

    #[test]
    fn descriptor_validation() {
        assert!(FieldDescriptor::quadratic(4).is_err());
        assert!(FieldDescriptor::quadratic(12).is_err());
        assert!(FieldDescriptor::quadratic(-3).is_ok());
        // x^3 - 1 has the root 1
        assert!(FieldDescriptor::cubic([q(-1), q(0), q(0)]).is_err());
        // x^3 - x - 1 is irreducible
        assert!(FieldDescriptor::cubic([q(-1), q(-1), q(0)]).is_ok());
    }

    #[test]
    fn cubic_arithmetic() {
        let l = FieldDescriptor::cubic([q(-1), q(-1), q(0)]).unwrap();
        let x = Scalar::new(&l, vec![q(0), q(1), q(0)]).unwrap();
        // x^3 = x + 1
        let cube = &(&x * &x) * &x;
        assert_eq!(cube.coords(), &[q(1), q(1), q(0)]);
        assert_eq!(&x * &x.inverse().unwrap(), Scalar::one(&l));
        // N(x) = -c0 = 1, T(x) = -c2 = 0
        assert_eq!(x.norm(), q(1));
        assert_eq!(x.trace(), q(0));
    }

    #[test]
    fn cubic_automorphism() {
        // x^3 + x^2 - 2x - 1, the real cubic subfield of the 7th cyclotomic field
        let l = FieldDescriptor::cubic([q(-1), q(-2), q(1)]).unwrap();
        let rho = Scalar::new(&l, vec![q(-2), q(0), q(1)]).unwrap();
        let x = Scalar::new(&l, vec![q(0), q(1), q(0)]).unwrap();
        let once = x.apply_cubic_map(&rho).unwrap();
        let thrice = once
            .apply_cubic_map(&rho)
            .unwrap()
            .apply_cubic_map(&rho)
            .unwrap();
        assert_eq!(thrice, x);
        assert_ne!(once, x);
    }
}
