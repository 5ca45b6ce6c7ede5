//! The normalizing similarity `chi = R_{N(a)} U_{(0,0,1)} U_{(0,w,0)}` on
//! `J(L, lambda)`, which should send an invertible `a` in `L` to `c`.
//!
//! Two choices of `w` are in circulation: `N(a)^{-1}` and `N(a)^{-1} a`.
//! Both are evaluated and the outcome of each is reported.

use std::fmt;

use malachite_base::num::arithmetic::traits::Reciprocal;
use malachite_base::num::basic::traits::Zero;
use serde::Serialize;

use super::extension::CertifyOptions;
use super::structure_map::{certify_similarity, StructureMap};
use crate::algebra::degree3::AlgebraKind;
use crate::cubic::CubicForm;
use crate::error::{CoreError, Result};
use crate::linalg::Vector;
use crate::tits::{Built, FirstTits};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChiVariant {
    /// `w = N(a)^{-1}`
    ScalarInverse,
    /// `w = N(a)^{-1} a`
    ScaledElement,
}

impl fmt::Display for ChiVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChiVariant::ScalarInverse => write!(f, "w = N(a)^-1"),
            ChiVariant::ScaledElement => write!(f, "w = N(a)^-1 a"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ChiEvaluation {
    pub variant: ChiVariant,
    pub image: Vector,
    pub sends_to_base_point: bool,
}

#[derive(Clone, Debug)]
pub struct ChiOutcome {
    pub evaluations: Vec<ChiEvaluation>,
    pub adopted: ChiVariant,
    pub map: StructureMap,
}

fn check_input(j: &Built<FirstTits>, a: &Vector) -> Result<()> {
    let t = &j.form;
    if *t.algebra().kind() != AlgebraKind::Etale {
        return Err(CoreError::Unsupported(
            "the normalizer is defined on J(L, lambda) for cubic étale L".into(),
        ));
    }
    if a.len() != t.dim() {
        return Err(CoreError::Dimension {
            expected: t.dim(),
            found: a.len(),
        });
    }
    if *a != t.inject(&t.project(a)) {
        return Err(CoreError::Parameter("a must lie in the first summand L".into()));
    }
    if t.norm(a) == crate::rational::Q::ZERO {
        return Err(CoreError::NotInvertible(format!("N(a) = 0 for a = {a}")));
    }
    Ok(())
}

pub fn chi_variant(
    j: &Built<FirstTits>,
    a: &Vector,
    variant: ChiVariant,
    opts: CertifyOptions,
) -> Result<StructureMap> {
    check_input(j, a)?;
    let t = &j.form;
    let s = &j.structure;
    let l = t.algebra();
    let na = t.norm(a);
    let w = match variant {
        ChiVariant::ScalarInverse => l.one().scale(&(&na).reciprocal()),
        ChiVariant::ScaledElement => t.project(a).scale(&(&na).reciprocal()),
    };
    let zero = l.zero();
    let u_w = s.u_matrix(&t.join(&zero, &w, &zero))?;
    let u_one = s.u_matrix(&t.join(&zero, &zero, &l.one()))?;
    let m = u_one.mul(&u_w).scale(&na);
    certify_similarity(s, m, opts.samples, opts.seed)
}

/// Evaluates both variants at `a` and adopts one that sends `a` to `c`,
/// preferring `ScaledElement` when both do.
pub fn chi_normalizer(j: &Built<FirstTits>, a: &Vector, opts: CertifyOptions) -> Result<ChiOutcome> {
    check_input(j, a)?;
    let c = j.structure.base_point();
    let mut evaluations = Vec::new();
    let mut maps = Vec::new();
    for variant in [ChiVariant::ScaledElement, ChiVariant::ScalarInverse] {
        let map = chi_variant(j, a, variant, opts)?;
        let image = map.apply(a);
        evaluations.push(ChiEvaluation {
            variant,
            sends_to_base_point: image == c,
            image,
        });
        maps.push(map);
    }
    match evaluations.iter().position(|e| e.sends_to_base_point) {
        Some(i) => Ok(ChiOutcome {
            adopted: evaluations[i].variant,
            map: maps.swap_remove(i),
            evaluations,
        }),
        None => Err(CoreError::FormulaDiscrepancy {
            scalar_inverse: evaluations[1].image.to_string(),
            scaled_element: evaluations[0].image.to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::degree3::Degree3Algebra;
    use crate::rational::q;
    use crate::scalar::FieldDescriptor;

    fn jl() -> Built<FirstTits> {
        let l = FieldDescriptor::cubic([q(-1), q(-1), q(0)]).unwrap();
        let d = Degree3Algebra::etale(&l).unwrap();
        Built::new(FirstTits::new(&d, q(2)).unwrap())
    }

    #[test]
    fn generator_is_normalized() {
        let j = jl();
        let opts = CertifyOptions { samples: 10, seed: 0 };
        let x = j.form.inject(&Vector::from_ints(&[0, 1, 0]));
        let out = chi_normalizer(&j, &x, opts).unwrap();
        assert_eq!(out.adopted, ChiVariant::ScaledElement);
        assert_eq!(out.map.apply(&x), j.structure.base_point());
        let scalar = out.evaluations.iter().find(|e| e.variant == ChiVariant::ScalarInverse).unwrap();
        assert!(!scalar.sends_to_base_point);
    }

    #[test]
    fn base_point_passes_both() {
        let j = jl();
        let c = j.structure.base_point();
        let out = chi_normalizer(&j, &c, CertifyOptions { samples: 5, seed: 0 }).unwrap();
        assert!(out.evaluations.iter().all(|e| e.sends_to_base_point));
    }

    #[test]
    fn rejects_bad_input() {
        let j = jl();
        let opts = CertifyOptions::default();
        assert!(chi_normalizer(&j, &Vector::zeros(9), opts).is_err());
        let off = Vector::from_ints(&[1, 0, 0, 1, 0, 0, 0, 0, 0]);
        assert!(chi_normalizer(&j, &off, opts).is_err());
    }
}
