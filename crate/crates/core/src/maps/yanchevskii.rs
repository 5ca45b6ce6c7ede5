//! Factorization `g = z s` with `s` hermitian and `z` normal.
//!
//! `g Sym` has dimension 9 and `K + Sym` has dimension 10 inside the
//! 18-dimensional `B`, so they meet nontrivially. An invertible `s_0` in
//! `Sym` with `g s_0` in `K + Sym` gives `z = g s_0`, `s = s_0^{-1}`.

use crate::algebra::involution::SecondKindInvolution;
use crate::error::{CoreError, Result};
use crate::linalg::{Matrix, Vector};
use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub z: Vector,
    pub s: Vector,
}

/// Checks `s` hermitian, `z` normal and `g = z s`.
pub fn check_factorization(sigma: &SecondKindInvolution, g: &Vector, f: &Factorization) -> Result<()> {
    let b = sigma.algebra();
    if !sigma.is_hermitian(&f.s) {
        return Err(CoreError::FactorizationFailed(format!("s = {} is not hermitian", f.s)));
    }
    if !sigma.is_normal(&f.z) {
        return Err(CoreError::FactorizationFailed(format!("z = {} is not normal", f.z)));
    }
    if b.mul(&f.z, &f.s) != *g {
        return Err(CoreError::FactorizationFailed("z s differs from g".into()));
    }
    Ok(())
}

/// Integer coefficient vectors in `[-bound, bound]^n`, ordered by max-norm.
fn small_combinations(n: usize, bound: i64) -> impl Iterator<Item = Vec<i64>> {
    (1..=bound).flat_map(move |r| {
        let width = (2 * r + 1) as u64;
        let total = width.pow(n as u32);
        (0..total).filter_map(move |mut code| {
            let mut v = Vec::with_capacity(n);
            for _ in 0..n {
                v.push((code % width) as i64 - r);
                code /= width;
            }
            v.iter().any(|c| c.abs() == r).then_some(v)
        })
    })
}

pub fn yanchevskii_factor(
    sigma: &SecondKindInvolution,
    g: &Vector,
    search_bound: i64,
) -> Result<Factorization> {
    let b = sigma.algebra();
    if !b.is_invertible(g) {
        return Err(CoreError::NotInvertible("g".into()));
    }
    let slice = sigma.hermitian_slice();
    let herm = slice.basis();
    let center = b.center_basis();
    let n = b.dim();
    // columns: g h_i, -w_j, -h_i; null vectors give g Hc = E kappa + H z0
    let mut cols: Vec<Vector> = herm.iter().map(|h| b.mul(g, h)).collect();
    cols.extend(center.iter().map(|w| -w));
    cols.extend(herm.iter().map(|h| -h));
    let system = Matrix::from_columns(n, &cols);
    let (null, _) = system.nullspace();
    let m = herm.len();
    let s0_of = |coeffs: &[Q]| -> Vector {
        let mut c = Vector::zeros(m);
        for (k, v) in coeffs.iter().zip(&null) {
            c = c.add_scaled(k, &v.slice(0, m));
        }
        slice.element(&c)
    };
    let mut tried = 0usize;
    let unit_tries = (0..null.len()).map(|i| {
        let mut v = vec![0i64; null.len()];
        v[i] = 1;
        v
    });
    for coeffs in unit_tries.chain(small_combinations(null.len(), search_bound)) {
        tried += 1;
        let qs: Vec<Q> = coeffs.iter().map(|&c| Q::from(c)).collect();
        let s0 = s0_of(&qs);
        if s0.is_zero() || !b.is_invertible(&s0) {
            continue;
        }
        let f = Factorization {
            z: b.mul(g, &s0),
            s: b.inverse(&s0)?,
        };
        check_factorization(sigma, g, &f)?;
        return Ok(f);
    }
    Err(CoreError::FactorizationFailed(format!(
        "no invertible hermitian s0 among {tried} candidates (intersection dimension {})",
        null.len()
    )))
}
