//! Turns a parsed configuration into a construction.

use std::sync::Arc;

use malachite_base::num::basic::traits::One;

use super::config::{AlgebraSpecConfig, ConfigError, ConstructionKind, FieldKindName, FirstAlgebra, Source};
use crate::algebra::degree3::{AlgebraKind, Degree3Algebra};
use crate::algebra::involution::SecondKindInvolution;
use crate::cubic::CubicNormStructure;
use crate::linalg::Vector;
use crate::rational::Q;
use crate::scalar::{FieldDescriptor, Scalar};
use crate::tits::{Built, FirstTits, ReducedAlbert, SecondTits};

#[derive(Clone, Debug)]
pub enum Construction {
    First(Built<FirstTits>),
    Second(Built<SecondTits>),
    Reduced(Built<ReducedAlbert>),
}

impl Construction {
    pub fn structure(&self) -> &Arc<CubicNormStructure> {
        match self {
            Construction::First(j) => &j.structure,
            Construction::Second(j) => &j.structure,
            Construction::Reduced(j) => &j.structure,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Construction::First(j) if *j.form.algebra().kind() == AlgebraKind::Etale => "first-process-on-L",
            Construction::First(_) => "first",
            Construction::Second(_) => "second",
            Construction::Reduced(_) => "reduced",
        }
    }

    /// `diag(a1, a2, a3)` in the first summand for matrix coordinates; for
    /// other first-construction algebras, `a1 + a2 x + a3 x^2` in the cubic
    /// subfield.
    pub fn diagonal(&self, a: &[Q; 3]) -> Vector {
        match self {
            Construction::Reduced(j) => j.form.diagonal(a.clone()),
            Construction::First(j) => {
                let d = j.form.algebra();
                let m = d.center().degree();
                let mut x = d.zero();
                if *d.kind() == AlgebraKind::Matrix3 {
                    for i in 0..3 {
                        x[(4 * i) * m] = a[i].clone();
                    }
                } else {
                    for (i, v) in a.iter().enumerate() {
                        x[i] = v.clone();
                    }
                }
                j.form.inject(&x)
            }
            Construction::Second(j) => {
                let b = j.form.algebra();
                let h = rational_diagonal(b, a);
                j.form.join(&h, &b.zero())
            }
        }
    }
}

/// `diag(a1, a2, a3)` in `M_3(K)`.
pub fn rational_diagonal(b: &Degree3Algebra, a: &[Q; 3]) -> Vector {
    let m = b.center().degree();
    let mut x = b.zero();
    for i in 0..3 {
        x[(4 * i) * m] = a[i].clone();
    }
    x
}

/// `diag(z1, z2, z3)` in `M_3(K)`.
pub fn scalar_diagonal(b: &Degree3Algebra, z: &[Scalar; 3]) -> Vector {
    let m = b.center().degree();
    let mut x = b.zero();
    for i in 0..3 {
        for (w, c) in z[i].coords().iter().enumerate() {
            x[(4 * i) * m + w] = c.clone();
        }
    }
    x
}

fn err(src: &Source, span: std::ops::Range<usize>, msg: impl Into<String>) -> ConfigError {
    src.error::<()>(span, msg).unwrap_err()
}

fn plain(msg: impl Into<String>) -> ConfigError {
    ConfigError {
        line: None,
        message: msg.into(),
    }
}

pub fn build_field(cfg: &AlgebraSpecConfig, src: &Source) -> Result<Arc<FieldDescriptor>, ConfigError> {
    let f = &cfg.field;
    match f.kind {
        FieldKindName::Rationals => Ok(FieldDescriptor::rationals()),
        FieldKindName::SplitQuadratic => Ok(FieldDescriptor::split_quadratic()),
        FieldKindName::CubicProduct => Ok(FieldDescriptor::cubic_product()),
        FieldKindName::Quadratic => {
            let d = f.d.as_ref().ok_or_else(|| plain("field: quadratic needs `d`"))?;
            FieldDescriptor::quadratic(*d.get_ref()).map_err(|e| err(src, d.span(), e.to_string()))
        }
        FieldKindName::Cubic => {
            let p = f.min_poly.as_ref().ok_or_else(|| plain("field: cubic needs `min_poly`"))?;
            let c = src.rationals_n::<3>(p, "min_poly")?;
            FieldDescriptor::cubic(c).map_err(|e| ConfigError {
                line: p.first().map(|r| src.line_of(r.span().start)),
                message: e.to_string(),
            })
        }
    }
}

pub fn build(cfg: &AlgebraSpecConfig, text: &str) -> Result<Construction, ConfigError> {
    let src = Source::new(text);
    let field = build_field(cfg, &src)?;
    let k = &cfg.construction;
    let kind_span = k.kind.span();
    let stray = k.stray_keys();
    if !stray.is_empty() {
        return Err(err(
            &src,
            kind_span,
            format!("construction `{}` does not use: {}", k.kind.get_ref().as_str(), stray.join(", ")),
        ));
    }
    let need = |what: &str| err(&src, kind_span.clone(), format!("construction `{}` needs `{what}`", k.kind.get_ref().as_str()));
    let first = |d: Arc<Degree3Algebra>| -> Result<FirstTits, ConfigError> {
        let lambda = k.lambda.as_ref().ok_or_else(|| need("lambda"))?;
        let l = src.rational(lambda)?;
        FirstTits::new(&d, l).map_err(|e| err(&src, lambda.span(), e.to_string()))
    };
    match k.kind.get_ref() {
        ConstructionKind::First => {
            let algebra = k.algebra.ok_or_else(|| need("algebra"))?;
            let d = match algebra {
                FirstAlgebra::Matrix3 => {
                    if *field.kind() != crate::scalar::FieldKind::Rationals {
                        return Err(plain("construction: matrix3 needs field kind `rationals`"));
                    }
                    Degree3Algebra::matrix3(&field)
                }
                FirstAlgebra::Cyclic => {
                    let rho = k.rho.as_ref().ok_or_else(|| need("rho"))?;
                    let gamma = k.gamma.as_ref().ok_or_else(|| need("gamma"))?;
                    let g = src.value_rationals(gamma)?;
                    if g.len() != 1 {
                        return Err(err(&src, gamma.span(), "a cyclic algebra needs a single gamma"));
                    }
                    let image = Scalar::new(&field, src.rationals(rho)?)
                        .map_err(|e| err(&src, rho.first().map_or(0..0, |r| r.span()), e.to_string()))?;
                    Degree3Algebra::cyclic(&field, image, g[0].clone())
                }
                FirstAlgebra::Etale => Degree3Algebra::etale(&field),
            }
            .map_err(|e| err(&src, kind_span.clone(), e.to_string()))?;
            Ok(Construction::First(Built::new(first(d)?.with_corruption(k.corruption))))
        }
        ConstructionKind::FirstProcessOnL => {
            let d = Degree3Algebra::etale(&field).map_err(|e| err(&src, kind_span.clone(), e.to_string()))?;
            Ok(Construction::First(Built::new(first(d)?)))
        }
        ConstructionKind::Second => {
            if !field.is_quadratic() {
                return Err(err(&src, kind_span, "construction `second` needs a quadratic field"));
            }
            let b = Degree3Algebra::matrix3(&field).map_err(|e| plain(format!("construction: {e}")))?;
            let sigma =
                SecondKindInvolution::conjugate_transpose(&b).map_err(|e| plain(format!("construction: {e}")))?;
            let u = match &k.u_diag {
                Some(v) => rational_diagonal(&b, &src.rationals_n::<3>(v, "u_diag")?),
                None => b.one(),
            };
            let mu_s = match &k.mu {
                Some(v) => Scalar::new(&field, src.rationals(v)?)
                    .map_err(|e| err(&src, v.first().map_or(0..0, |r| r.span()), e.to_string()))?,
                None => Scalar::one(&field),
            };
            let anchor = k
                .mu
                .as_ref()
                .and_then(|v| v.first())
                .or_else(|| k.u_diag.as_ref().and_then(|v| v.first()))
                .map_or(kind_span, |r| r.span());
            let t = SecondTits::new(&sigma, &u, &mu_s).map_err(|e| err(&src, anchor, e.to_string()))?;
            Ok(Construction::Second(Built::new(t)))
        }
        ConstructionKind::Reduced => {
            let octonions = k.octonions.clone().ok_or_else(|| need("octonions"))?;
            let gamma = k.gamma.as_ref().ok_or_else(|| need("gamma"))?;
            let g: [Q; 3] = src
                .value_rationals(gamma)?
                .try_into()
                .map_err(|_| err(&src, gamma.span(), "gamma needs 3 entries"))?;
            let t = ReducedAlbert::new(octonions, g).map_err(|e| err(&src, gamma.span(), e.to_string()))?;
            Ok(Construction::Reduced(Built::new(t)))
        }
    }
}

/// A base-point-like element used when a configuration gives none.
pub fn default_u_element(c: &Construction) -> Vector {
    match c {
        Construction::First(j) if *j.form.algebra().kind() != AlgebraKind::Matrix3 => {
            j.structure.base_point().scale(&-Q::ONE)
        }
        _ => c.diagonal(&[-Q::ONE, Q::ONE, Q::ONE]),
    }
}
