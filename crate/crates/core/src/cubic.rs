//! Cubic norm structures `(N, #, c)` and everything derived from them.
//!
//! A structure supplies only the cubic form, the adjoint and the base point.
//! The trace form, the generic adjoint obtained from the gradient of `N`,
//! cross products, U-operators and inverses are computed here. Polynomial
//! coefficients are extracted exactly by interpolation at the nodes `0..=3`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use malachite_base::num::arithmetic::traits::Reciprocal;
use malachite_base::num::basic::traits::{One, Zero};
use serde::Serialize;

use crate::error::{CoreError, Result};
use crate::linalg::{Matrix, Vector};
use crate::poly::cubic_coefficients;
use crate::rational::Q;
use crate::sample::Sampler;

/// The data a construction provides.
pub trait CubicForm: Send + Sync + fmt::Debug {
    fn id(&self) -> String;
    fn dim(&self) -> usize;
    fn base_point(&self) -> Vector;
    fn norm(&self, x: &Vector) -> Q;
    fn sharp(&self, x: &Vector) -> Vector;
}

/// `J = Q`, `N(x) = x^3`, `x^# = x^2`, `c = 1`.
#[derive(Debug, Clone, Copy, Default)]
pub struct ScalarCubic;

impl CubicForm for ScalarCubic {
    fn id(&self) -> String {
        "scalar".into()
    }
    fn dim(&self) -> usize {
        1
    }
    fn base_point(&self) -> Vector {
        Vector::new(vec![Q::ONE])
    }
    fn norm(&self, x: &Vector) -> Q {
        &x[0] * &x[0] * &x[0]
    }
    fn sharp(&self, x: &Vector) -> Vector {
        Vector::new(vec![&x[0] * &x[0]])
    }
}

#[derive(Clone, Debug)]
pub struct TraceData {
    /// `T(e_i, e_j)`
    pub gram: Matrix,
    pub gram_inv: Matrix,
    /// `T(e_i) = T(e_i, c)`
    pub linear: Vector,
}

pub struct CubicNormStructure {
    form: Arc<dyn CubicForm>,
    trace: OnceLock<Result<TraceData>>,
}

impl fmt::Debug for CubicNormStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CubicNormStructure")
            .field("id", &self.form.id())
            .field("dim", &self.form.dim())
            .finish()
    }
}

impl CubicNormStructure {
    pub fn new(form: Arc<dyn CubicForm>) -> Arc<Self> {
        Arc::new(CubicNormStructure {
            form,
            trace: OnceLock::new(),
        })
    }

    pub fn form(&self) -> &Arc<dyn CubicForm> {
        &self.form
    }

    pub fn id(&self) -> String {
        self.form.id()
    }

    pub fn dim(&self) -> usize {
        self.form.dim()
    }

    pub fn base_point(&self) -> Vector {
        self.form.base_point()
    }

    pub fn norm(&self, x: &Vector) -> Q {
        self.form.norm(x)
    }

    pub fn sharp(&self, x: &Vector) -> Vector {
        self.form.sharp(x)
    }

    /// Coefficients of `t -> N(x + t y)`.
    pub fn line_coefficients(&self, x: &Vector, y: &Vector) -> [Q; 4] {
        self.line_coefficients_from(self.norm(x), x, y)
    }

    fn line_coefficients_from(&self, at_zero: Q, x: &Vector, y: &Vector) -> [Q; 4] {
        let v1 = self.norm(&(x + y));
        let v2 = self.norm(&x.add_scaled(&Q::from(2), y));
        let v3 = self.norm(&x.add_scaled(&Q::from(3), y));
        cubic_coefficients(&[at_zero, v1, v2, v3])
    }

    /// `d/dt N(x + t y)` at `t = 0`.
    pub fn dir_derivative(&self, x: &Vector, y: &Vector) -> Q {
        let [_, c1, _, _] = self.line_coefficients(x, y);
        c1
    }

    /// `T(x, y)` read off the bivariate polynomial `N(c + s x + t y)` on a 4x4 grid.
    pub fn trace_form(&self, x: &Vector, y: &Vector) -> Q {
        let c = self.base_point();
        let dx = self.dir_derivative(&c, x);
        let dy = self.dir_derivative(&c, y);
        let mut linear_in_t = Vec::with_capacity(4);
        for s in 0..4 {
            let row = c.add_scaled(&Q::from(s), x);
            let [_, c1, _, _] = self.line_coefficients(&row, y);
            linear_in_t.push(c1);
        }
        let [_, mixed, _, _] = cubic_coefficients(&[
            linear_in_t[0].clone(),
            linear_in_t[1].clone(),
            linear_in_t[2].clone(),
            linear_in_t[3].clone(),
        ]);
        dx * dy - mixed
    }

    /// Gram matrix of the trace form, by polarization of `T(v, v)`.
    pub fn trace_data(&self) -> Result<&TraceData> {
        self.trace
            .get_or_init(|| self.compute_trace_data())
            .as_ref()
            .map_err(Clone::clone)
    }

    fn compute_trace_data(&self) -> Result<TraceData> {
        let n = self.dim();
        let c = self.base_point();
        if self.norm(&c) != Q::ONE {
            return Err(CoreError::StructureInvalid("N(c) != 1".into()));
        }
        // N(c + t v) = 1 + T(v) t + S(v) t^2 + N(v) t^3
        let first_second = |v: &Vector| {
            let [_, c1, c2, _] = self.line_coefficients_from(Q::ONE, &c, v);
            (c1, c2)
        };
        let units: Vec<Vector> = (0..n).map(|i| Vector::unit(n, i)).collect();
        let diag: Vec<(Q, Q)> = units.iter().map(first_second).collect();
        let linear = Vector::new(diag.iter().map(|(c1, _)| c1.clone()).collect());
        let mut gram = Matrix::zeros(n, n);
        for i in 0..n {
            // T(v, v) = T(v)^2 - 2 S(v)
            let tii = &diag[i].0 * &diag[i].0 - Q::from(2) * &diag[i].1;
            gram.set(i, i, tii);
            for j in i + 1..n {
                let (_, s_sum) = first_second(&(&units[i] + &units[j]));
                let mixed = s_sum - &diag[i].1 - &diag[j].1;
                let tij = &diag[i].0 * &diag[j].0 - mixed;
                gram.set(i, j, tij.clone());
                gram.set(j, i, tij);
            }
        }
        let gram_inv = gram.inverse().ok_or_else(|| {
            CoreError::StructureInvalid(format!("trace form of {} is degenerate", self.id()))
        })?;
        Ok(TraceData {
            gram,
            gram_inv,
            linear,
        })
    }

    pub fn trace_bilinear(&self, x: &Vector, y: &Vector) -> Result<Q> {
        let td = self.trace_data()?;
        Ok(x.dot(&td.gram.apply(y)))
    }

    /// `T(x) = T(x, c)`.
    pub fn trace(&self, x: &Vector) -> Result<Q> {
        Ok(x.dot(&self.trace_data()?.linear))
    }

    /// Solves `T(x^#, e_i) = d/dt N(x + t e_i)` for `x^#`.
    pub fn sharp_generic(&self, x: &Vector) -> Result<Vector> {
        let n = self.dim();
        let nx = self.norm(x);
        let grad = Vector::new(
            (0..n)
                .map(|i| {
                    let [_, c1, _, _] = self.line_coefficients_from(nx.clone(), x, &Vector::unit(n, i));
                    c1
                })
                .collect(),
        );
        Ok(self.trace_data()?.gram_inv.apply(&grad))
    }

    /// `x × y = (x + y)^# - x^# - y^#`.
    pub fn cross(&self, x: &Vector, y: &Vector) -> Vector {
        let s = self.sharp(&(x + y));
        &(&s - &self.sharp(x)) - &self.sharp(y)
    }

    /// `U_a(y) = T(a, y) a - a^# × y`.
    pub fn u_operator(&self, a: &Vector, y: &Vector) -> Result<Vector> {
        let t = self.trace_bilinear(a, y)?;
        let a_sharp = self.sharp(a);
        Ok(&a.scale(&t) - &self.cross(&a_sharp, y))
    }

    pub fn u_matrix(&self, a: &Vector) -> Result<Matrix> {
        let n = self.dim();
        let td = self.trace_data()?;
        let a_sharp = self.sharp(a);
        let a_sharp_sq = self.sharp(&a_sharp);
        let ga = td.gram.apply(a);
        let cols: Vec<Vector> = (0..n)
            .map(|i| {
                let y = Vector::unit(n, i);
                let cross = &(&self.sharp(&(&a_sharp + &y)) - &a_sharp_sq) - &self.sharp(&y);
                &a.scale(&ga[i]) - &cross
            })
            .collect();
        Ok(Matrix::from_columns(n, &cols))
    }

    pub fn is_invertible(&self, x: &Vector) -> bool {
        self.norm(x) != Q::ZERO
    }

    /// `x^{-1} = N(x)^{-1} x^#`.
    pub fn inverse(&self, x: &Vector) -> Result<Vector> {
        let n = self.norm(x);
        if n == Q::ZERO {
            return Err(CoreError::NotInvertible(format!("N(x) = 0 for x = {x}")));
        }
        Ok(self.sharp(x).scale(&n.reciprocal()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomRecord {
    pub name: String,
    pub samples: usize,
    pub failures: usize,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub structure: String,
    pub seed: u64,
    pub records: Vec<AxiomRecord>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }

    pub fn record(&self, name: &str) -> Option<&AxiomRecord> {
        self.records.iter().find(|r| r.name == name)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.records {
            let status = if r.passed { "pass" } else { "FAIL" };
            write!(f, "{:<22} {:>5} samples  {status}", r.name, r.samples)?;
            if let Some(w) = &r.witness {
                write!(f, "  witness: {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

struct Check {
    name: &'static str,
    samples: usize,
    failures: usize,
    witness: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            samples: 0,
            failures: 0,
            witness: None,
        }
    }

    /// Records one sample; keeps the first failure.
    fn observe(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.samples += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    fn finish(self) -> AxiomRecord {
        AxiomRecord {
            name: self.name.into(),
            samples: self.samples,
            failures: self.failures,
            passed: self.failures == 0,
            witness: self.witness,
        }
    }
}

/// Checks the seven cubic norm structure axioms at seeded sample points.
pub fn verify_axioms(s: &CubicNormStructure, samples: usize, seed: u64) -> AxiomReport {
    let mut rng = Sampler::new(seed);
    let n = s.dim();
    let c = s.base_point();
    let mut records = Vec::new();

    let mut cubic = Check::new("cubic-form");
    let mut quadratic = Check::new("adjoint-quadratic");
    let mut gradient = Check::new("adjoint-gradient");
    let mut sharp_sharp = Check::new("sharp-sharp");
    let mut cross_c = Check::new("cross-base-point");

    let mut base_norm = Check::new("base-point-norm");
    let nc = s.norm(&c);
    base_norm.observe(nc == Q::ONE, || format!("N(c) = {nc}"));

    let mut nondeg = Check::new("trace-nondegenerate");
    let trace_ok = s.trace_data().map(|_| ()).map_err(|e| e.to_string());
    nondeg.observe(trace_ok.is_ok(), || trace_ok.clone().unwrap_err());

    let mut base_sharp = Check::new("base-point-adjoint");
    let cs = s.sharp(&c);
    base_sharp.observe(cs == c, || format!("c^# = {cs}"));

    for _ in 0..samples {
        let x = rng.vector(n);
        let y = rng.vector(n);
        let lam = rng.nonzero_rational();

        // N is a cubic form: homogeneous of degree 3 and cubic along lines
        let nx = s.norm(&x);
        let scaled = s.norm(&x.scale(&lam));
        let expected = &lam * &lam * &lam * &nx;
        let coeffs = s.line_coefficients(&x, &y);
        let four = Q::from(4);
        let predicted = &coeffs[0]
            + &coeffs[1] * &four
            + &coeffs[2] * &four * &four
            + &coeffs[3] * &four * &four * &four;
        let actual = s.norm(&x.add_scaled(&four, &y));
        cubic.observe(scaled == expected && predicted == actual, || {
            format!("x = {x}, lambda = {lam}: N(lambda x) = {scaled}, lambda^3 N(x) = {expected}")
        });

        // # is quadratic: homogeneous of degree 2 with bilinear cross product
        let xs = s.sharp(&x);
        let lxs = s.sharp(&x.scale(&lam));
        let z = rng.vector(n);
        let lhs = s.cross(&(&x + &z), &y);
        let rhs = &s.cross(&x, &y) + &s.cross(&z, &y);
        quadratic.observe(lxs == xs.scale(&(&lam * &lam)) && lhs == rhs, || {
            format!("x = {x}, y = {y}, z = {z}")
        });

        if let Ok(td) = s.trace_data() {
            // T(x^#, y) = d/dt N(x + t y)
            let t = xs.dot(&td.gram.apply(&y));
            let d = coeffs[1].clone();
            gradient.observe(t == d, || {
                format!("x = {x}, y = {y}: T(x^#, y) = {t}, D_y N(x) = {d}")
            });

            // c × x = T(x) c - x
            let lhs = s.cross(&c, &x);
            let tx = x.dot(&td.linear);
            let rhs = &c.scale(&tx) - &x;
            cross_c.observe(lhs == rhs, || format!("x = {x}: c × x = {lhs}, T(x)c - x = {rhs}"));
        }

        // x^## = N(x) x
        let xss = s.sharp(&xs);
        let nxx = x.scale(&nx);
        sharp_sharp.observe(xss == nxx, || format!("x = {x}: x^## = {xss}, N(x) x = {nxx}"));
    }

    records.push(cubic.finish());
    records.push(base_norm.finish());
    records.push(nondeg.finish());
    records.push(quadratic.finish());
    records.push(gradient.finish());
    records.push(sharp_sharp.finish());
    records.push(base_sharp.finish());
    records.push(cross_c.finish());
    AxiomReport {
        structure: s.id(),
        seed,
        records,
    }
}

/// Compares `sharp_generic` with the explicit adjoint at seeded points.
/// Returns the number of points checked and the first mismatch.
pub fn compare_generic_adjoint(
    s: &CubicNormStructure,
    samples: usize,
    seed: u64,
) -> Result<(usize, Option<String>)> {
    let mut rng = Sampler::new(seed);
    for i in 0..samples {
        let x = rng.vector(s.dim());
        let generic = s.sharp_generic(&x)?;
        let explicit = s.sharp(&x);
        if generic != explicit {
            return Ok((
                i + 1,
                Some(format!("x = {x}: generic {generic}, explicit {explicit}")),
            ));
        }
    }
    Ok((samples, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn scalar() -> Arc<CubicNormStructure> {
        CubicNormStructure::new(Arc::new(ScalarCubic))
    }

    #[test]
    fn scalar_structure_passes() {
        let s = scalar();
        let report = verify_axioms(&s, 50, 1);
        assert!(report.all_passed(), "{report}");
        assert_eq!(report.records.len(), 8);
    }

    #[test]
    fn scalar_trace_and_derivatives() {
        let s = scalar();
        let c = s.base_point();
        assert_eq!(s.dir_derivative(&c, &c), q(3));
        assert_eq!(s.trace_form(&c, &c), q(3));
        assert_eq!(s.trace_bilinear(&c, &c).unwrap(), q(3));
        assert_eq!(s.sharp_generic(&c).unwrap(), c);
        assert_eq!(s.cross(&c, &c), c.scale(&q(2)));
        assert!(s.u_matrix(&c).unwrap().is_identity());
        let x = Vector::new(vec![q(2)]);
        assert_eq!(s.inverse(&x).unwrap(), Vector::new(vec![crate::rational::qr(1, 2)]));
        assert!(s.inverse(&Vector::zeros(1)).is_err());
    }
}
