use std::sync::Arc;

use malachite_base::num::arithmetic::traits::Reciprocal;
use malachite_base::num::basic::traits::{One, Zero};

use super::{PathKind, PathParts, RationalPath};
use crate::cubic::{CubicForm, CubicNormStructure};
use crate::error::{CoreError, Result};
use crate::linalg::{Matrix, Vector};
use crate::maps::extension::{check_sim_second, sim_second_matrix};
use crate::maps::CertifyOptions;
use crate::poly::Poly;
use crate::rational::{fmt_q, Q};
use crate::tits::{Built, SecondTits};

/// How `a_t` moves from `a` at `t = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Interpolation {
    /// `a_t = (1 - t) a + t c`
    ToBasePoint,
    /// `a_t = (1 - t) a`; ends at 0, a deliberately wrong path.
    ToZero,
}

fn interpolate(a: &Vector, c: &Vector, t: &Q, how: Interpolation) -> Vector {
    let s = Q::ONE - t;
    match how {
        Interpolation::ToBasePoint => &a.scale(&s) + &c.scale(t),
        Interpolation::ToZero => a.scale(&s),
    }
}

fn pole(t: &Q, witness: String) -> CoreError {
    CoreError::Pole {
        t: fmt_q(t),
        witness,
    }
}

/// Polynomial of degree `< nodes` through `t -> f(t)` at `t = 0, 1, ...`.
fn fit(nodes: usize, f: impl Fn(&Q) -> Q) -> Poly {
    let ts: Vec<Q> = (0..nodes as i64).map(Q::from).collect();
    let vs: Vec<Q> = ts.iter().map(&f).collect();
    Poly::interpolate(&ts, &vs)
}

fn product_of_u(s: &CubicNormStructure, elems: &[Vector]) -> Result<Matrix> {
    let mut m = Matrix::identity(s.dim());
    for a in elems {
        m = m.mul(&s.u_matrix(a)?);
    }
    Ok(m)
}

/// `theta(t) = U_{a_1,t} ... U_{a_r,t}`.
pub fn u_path(
    s: &Arc<CubicNormStructure>,
    elements: &[Vector],
    opts: CertifyOptions,
) -> Result<RationalPath> {
    u_path_with(s, elements, Interpolation::ToBasePoint, opts)
}

pub fn u_path_with(
    s: &Arc<CubicNormStructure>,
    elements: &[Vector],
    how: Interpolation,
    opts: CertifyOptions,
) -> Result<RationalPath> {
    for (i, a) in elements.iter().enumerate() {
        if a.len() != s.dim() {
            return Err(CoreError::Dimension {
                expected: s.dim(),
                found: a.len(),
            });
        }
        if !s.is_invertible(a) {
            return Err(CoreError::Parameter(format!("a_{} = {a} is not invertible", i + 1)));
        }
    }
    let c = s.base_point();
    let start = product_of_u(s, elements)?;
    let elems = elements.to_vec();
    let pole_polynomial = elems.iter().fold(Poly::one(), |acc, a| {
        acc.mul(&fit(4, |t| s.norm(&interpolate(a, &c, t, how))))
    });
    let factor_poly = pole_polynomial.mul(&pole_polynomial);
    let eval = {
        let (s, c, elems) = (s.clone(), c.clone(), elems.clone());
        Box::new(move |t: &Q| {
            let at: Vec<Vector> = elems.iter().map(|a| interpolate(a, &c, t, how)).collect();
            for (i, a) in at.iter().enumerate() {
                if !s.is_invertible(a) {
                    return Err(pole(t, format!("N(a_{},t) = 0 with a_{},t = {a}", i + 1, i + 1)));
                }
            }
            product_of_u(&s, &at)
        })
    };
    let parameters = elements
        .iter()
        .enumerate()
        .map(|(i, a)| (format!("a{}", i + 1), a.to_string()))
        .chain(std::iter::once((
            "interpolation".to_string(),
            match how {
                Interpolation::ToBasePoint => "(1-t)a + t c",
                Interpolation::ToZero => "(1-t)a",
            }
            .to_string(),
        )))
        .collect();
    Ok(RationalPath::from_parts(PathParts {
        kind: PathKind::UPath,
        structure: s.clone(),
        parameters,
        eval,
        start,
        end: Matrix::identity(s.dim()),
        pole_polynomial: Some(pole_polynomial),
        expected_factor: Some(Box::new(move |t| factor_poly.eval(t))),
        stable_block: None,
        opts,
    }))
}

/// `t -> (s_t b sigma(s_t), sigma(s_t)^# x)` with `s_t = (1 - t) s + t`.
pub fn hermitian_path(
    j: &Built<SecondTits>,
    s: &Vector,
    opts: CertifyOptions,
) -> Result<RationalPath> {
    let form = j.form.clone();
    let b = form.algebra().clone();
    if !(form.sigma().is_hermitian(s) || form.sigma_u().is_hermitian(s)) {
        return Err(CoreError::Parameter(format!("s = {s} is not hermitian")));
    }
    if !b.is_invertible(s) {
        return Err(CoreError::Parameter(format!("s = {s} is not invertible")));
    }
    let one = b.one();
    let st = {
        let (s, one) = (s.clone(), one.clone());
        move |t: &Q| &s.scale(&(Q::ONE - t)) + &one.scale(t)
    };
    let norm_k = {
        let (b, st) = (b.clone(), st.clone());
        move |t: &Q| b.norm(&st(t)).to_rational().expect("norm of a hermitian element lies in k")
    };
    let pole_polynomial = fit(4, &norm_k);
    let factor_poly = pole_polynomial.mul(&pole_polynomial);
    let start = sim_second_matrix(&form, &Q::ONE, s, &one);
    let eval = {
        let (form, b) = (form.clone(), b.clone());
        Box::new(move |t: &Q| {
            let s_t = st(t);
            if !b.is_invertible(&s_t) {
                return Err(pole(t, format!("N_B(s_t) = 0 with s_t = {s_t}")));
            }
            if !(form.sigma().is_hermitian(&s_t) || form.sigma_u().is_hermitian(&s_t)) {
                return Err(CoreError::Parameter(format!("s_t is not hermitian at t = {}", fmt_q(t))));
            }
            Ok(sim_second_matrix(&form, &Q::ONE, &s_t, &b.one()))
        })
    };
    Ok(RationalPath::from_parts(PathParts {
        kind: PathKind::Hermitian,
        structure: j.structure.clone(),
        parameters: vec![("s".into(), s.to_string())],
        eval,
        start,
        end: Matrix::identity(form.dim()),
        pole_polynomial: Some(pole_polynomial),
        expected_factor: Some(Box::new(move |t| factor_poly.eval(t))),
        stable_block: Some(form.slice_dim()),
        opts,
    }))
}

/// `t -> (z_t b sigma(z_t), sigma(z_t)^# x q_t)` with `z_t = (1 - t) z + t`
/// and `q_t = sigma_u(z_t)^{-1} z_t`.
pub fn normal_path(j: &Built<SecondTits>, z: &Vector, opts: CertifyOptions) -> Result<RationalPath> {
    let form = j.form.clone();
    let b = form.algebra().clone();
    if !form.sigma_u().is_normal(z) {
        return Err(CoreError::Parameter(format!("z = {z} is not sigma_u-normal")));
    }
    if !b.is_invertible(z) {
        return Err(CoreError::Parameter(format!("z = {z} is not invertible")));
    }
    let zt = {
        let (z, one) = (z.clone(), b.one());
        move |t: &Q| &z.scale(&(Q::ONE - t)) + &one.scale(t)
    };
    let nk = {
        let (b, zt) = (b.clone(), zt.clone());
        move |t: &Q| b.norm(&zt(t)).norm()
    };
    let pole_polynomial = fit(7, &nk);
    let matrix_at = {
        let (form, b) = (form.clone(), b.clone());
        move |t: &Q| -> Result<Matrix> {
            let z_t = zt(t);
            if !b.is_invertible(&z_t) {
                return Err(pole(t, format!("N_B(z_t) = 0 with z_t = {z_t}")));
            }
            if !form.sigma_u().is_normal(&z_t) {
                return Err(CoreError::Parameter(format!("z_t is not normal at t = {}", fmt_q(t))));
            }
            let q_t = b.mul(&b.inverse(&form.sigma_u().apply(&z_t))?, &z_t);
            check_sim_second(&form, &z_t, &q_t)?;
            Ok(sim_second_matrix(&form, &Q::ONE, &z_t, &q_t))
        }
    };
    let start = matrix_at(&Q::ZERO)?;
    Ok(RationalPath::from_parts(PathParts {
        kind: PathKind::Normal,
        structure: j.structure.clone(),
        parameters: vec![("z".into(), z.to_string())],
        eval: Box::new(matrix_at),
        start,
        end: Matrix::identity(form.dim()),
        pole_polynomial: Some(pole_polynomial),
        expected_factor: Some(Box::new(nk)),
        stable_block: Some(form.slice_dim()),
        opts,
    }))
}

/// `chi_t = R_{lambda_t^{-1}} U_{a_0}^{-1} U_{a_t} psi_t` with `a_t = psi_t(c)`
/// and `lambda_t = N(a_t)`, declared to run from `psi_0` to the identity.
pub fn isometry_correction(psi: Arc<RationalPath>, opts: CertifyOptions) -> Result<RationalPath> {
    let s = psi.structure().clone();
    let c = s.base_point();
    let psi0 = psi.matrix_at(&Q::ZERO)?;
    psi.matrix_at(&Q::ONE)?;
    let a0 = psi0.apply(&c);
    let n0 = s.norm(&a0);
    if n0 != Q::ONE {
        return Err(CoreError::Parameter(format!(
            "N(psi(c)) = {} but must be 1",
            fmt_q(&n0)
        )));
    }
    let u0_inv = s
        .u_matrix(&a0)?
        .inverse()
        .ok_or_else(|| CoreError::NotInvertible("U_{a_0}".into()))?;
    let eval = {
        let (s, c, psi) = (s.clone(), c.clone(), psi.clone());
        Box::new(move |t: &Q| {
            let psi_t = psi.matrix_at(t)?;
            let a_t = psi_t.apply(&c);
            let lambda = s.norm(&a_t);
            if lambda == Q::ZERO {
                return Err(pole(t, format!("lambda_t = N(a_t) = 0 with a_t = {a_t}")));
            }
            let m = u0_inv.mul(&s.u_matrix(&a_t)?).mul(&psi_t);
            Ok(m.scale(&lambda.reciprocal()))
        })
    };
    let mut parameters = vec![("psi".to_string(), psi.kind().to_string())];
    parameters.extend(psi.parameters().iter().cloned());
    Ok(RationalPath::from_parts(PathParts {
        kind: PathKind::IsometryCorrection,
        structure: s.clone(),
        parameters,
        eval,
        start: psi0,
        end: Matrix::identity(s.dim()),
        pole_polynomial: None,
        expected_factor: Some(Box::new(|_| Q::ONE)),
        stable_block: None,
        opts,
    }))
}
