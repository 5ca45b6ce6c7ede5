//! Degree-3 associative algebras over an étale center, with reduced
//! trace, reduced norm and adjoint.
//!
//! Every algebra is stored as a `Q`-algebra through sparse structure
//! constants. The center `Z` (`Q`, a quadratic field, `Q x Q`, ...) is
//! described by a [`FieldDescriptor`] plus the images of its basis in the
//! algebra. The reduced trace is read off the left regular representation
//! and the norm and adjoint follow from the degree-3 Newton identities.

use std::sync::Arc;

use malachite_base::num::arithmetic::traits::Reciprocal;
use malachite_base::num::basic::traits::{One, Zero};

use super::assoc::MulTable;
use crate::error::{CoreError, Result};
use crate::linalg::{Matrix, Vector};
use crate::rational::Q;
use crate::scalar::{FieldDescriptor, FieldKind, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    /// 3x3 matrices over a field.
    Matrix3,
    /// `(L/Q, rho, gamma)` with basis `x^a u^i`, `u^3 = gamma`, `u l = rho(l) u`.
    Cyclic { rho: Scalar, gamma: Q },
    /// `D x D°` with the opposite product on the second factor.
    OppositePair,
    /// A commutative cubic étale algebra regarded as a degree-3 algebra over `Q`.
    Etale,
}

#[derive(Debug)]
pub struct Degree3Algebra {
    name: String,
    kind: AlgebraKind,
    center: Arc<FieldDescriptor>,
    table: MulTable,
    one: Vector,
    center_basis: Vec<Vector>,
    trace_map: Matrix,
    labels: Vec<String>,
    factor: Option<Arc<Degree3Algebra>>,
}

impl Degree3Algebra {
    /// `M_3(F)`, basis `e_ij (x) w` with index `(3i + j) * deg F + w`.
    pub fn matrix3(field: &Arc<FieldDescriptor>) -> Result<Arc<Self>> {
        let m = field.degree();
        let dim = 9 * m;
        let unit_products: Vec<Vec<Scalar>> = (0..m)
            .map(|a| {
                (0..m)
                    .map(|b| {
                        let wa = Scalar::new(field, unit_coords(m, a)).expect("unit");
                        let wb = Scalar::new(field, unit_coords(m, b)).expect("unit");
                        &wa * &wb
                    })
                    .collect()
            })
            .collect();
        let idx = |i: usize, j: usize, w: usize| (3 * i + j) * m + w;
        let table = MulTable::from_basis_products(dim, |p, q| {
            let (ij, a) = (p / m, p % m);
            let (kl, b) = (q / m, q % m);
            let (i, j) = (ij / 3, ij % 3);
            let (k, l) = (kl / 3, kl % 3);
            let mut v = Vector::zeros(dim);
            if j == k {
                for (w, c) in unit_products[a][b].coords().iter().enumerate() {
                    v[idx(i, l, w)] = c.clone();
                }
            }
            v
        });
        let mut labels = Vec::with_capacity(dim);
        for i in 0..3 {
            for j in 0..3 {
                for w in field.labels() {
                    labels.push(if w == "1" {
                        format!("e{}{}", i + 1, j + 1)
                    } else {
                        format!("e{}{}*{w}", i + 1, j + 1)
                    });
                }
            }
        }
        let center_basis = (0..m)
            .map(|w| {
                let mut v = Vector::zeros(dim);
                for i in 0..3 {
                    v[idx(i, i, w)] = Q::ONE;
                }
                v
            })
            .collect::<Vec<_>>();
        Self::assemble(
            format!("M3({})", field.name()),
            AlgebraKind::Matrix3,
            field.clone(),
            table,
            labels,
            center_basis,
            None,
        )
    }

    /// The cyclic algebra `(L/Q, rho, gamma)` where `rho` is given by the image of `x`.
    pub fn cyclic(field: &Arc<FieldDescriptor>, rho: Scalar, gamma: Q) -> Result<Arc<Self>> {
        if !matches!(field.kind(), FieldKind::Cubic { .. }) {
            return Err(CoreError::InvalidDescriptor(format!(
                "cyclic algebra needs a cubic field, got {}",
                field.name()
            )));
        }
        rho.same_field(&Scalar::one(field))?;
        if gamma == Q::ZERO {
            return Err(CoreError::Parameter("cyclic algebra needs gamma != 0".into()));
        }
        let x = Scalar::new(field, vec![Q::ZERO, Q::ONE, Q::ZERO])?;
        if rho == x {
            return Err(CoreError::Parameter("rho must not be the identity".into()));
        }
        // rho(x) must be a root of the minimal polynomial of x
        let image_sq = &rho * &rho;
        let image_cube = &image_sq * &rho;
        let x_sq = &x * &x;
        let x_cube = &x_sq * &x;
        let lowered = Scalar::from_rational(field, x_cube.coords()[0].clone())
            + rho.scale(&x_cube.coords()[1])
            + image_sq.scale(&x_cube.coords()[2]);
        if image_cube != lowered {
            return Err(CoreError::Parameter(
                "rho(x) is not a root of the minimal polynomial".into(),
            ));
        }
        let third = x
            .apply_cubic_map(&rho)?
            .apply_cubic_map(&rho)?
            .apply_cubic_map(&rho)?;
        if third != x {
            return Err(CoreError::Parameter("rho does not have order 3".into()));
        }
        // rho^i(x^b) for i, b in 0..3
        let powers_of_x: Vec<Scalar> = (0..3)
            .map(|b| Scalar::new(field, unit_coords(3, b)).expect("unit"))
            .collect();
        let mut twisted = vec![powers_of_x.clone()];
        for i in 1..3 {
            let prev: &Vec<Scalar> = &twisted[i - 1];
            let next = prev
                .iter()
                .map(|s| s.apply_cubic_map(&rho).expect("cubic"))
                .collect();
            twisted.push(next);
        }
        let table = MulTable::from_basis_products(9, |p, q| {
            let (i, a) = (p / 3, p % 3);
            let (j, b) = (q / 3, q % 3);
            let prod = &powers_of_x[a] * &twisted[i][b];
            let (power, scale) = if i + j >= 3 {
                (i + j - 3, gamma.clone())
            } else {
                (i + j, Q::ONE)
            };
            let mut v = Vector::zeros(9);
            for (w, c) in prod.coords().iter().enumerate() {
                v[3 * power + w] = c * &scale;
            }
            v
        });
        let mut labels = Vec::with_capacity(9);
        for i in 0..3 {
            for a in ["1", "x", "x^2"] {
                labels.push(match i {
                    0 => a.to_string(),
                    1 => format!("{a}*u"),
                    _ => format!("{a}*u^2"),
                });
            }
        }
        Self::assemble(
            format!("({}, rho, {gamma})", field.name()),
            AlgebraKind::Cyclic { rho, gamma },
            FieldDescriptor::rationals(),
            table,
            labels,
            vec![Vector::unit(9, 0)],
            None,
        )
    }

    /// A cubic étale algebra as a 3-dimensional degree-3 algebra over `Q`.
    pub fn etale(field: &Arc<FieldDescriptor>) -> Result<Arc<Self>> {
        if !field.is_cubic() {
            return Err(CoreError::InvalidDescriptor(format!(
                "expected a cubic étale algebra, got {}",
                field.name()
            )));
        }
        let units: Vec<Scalar> = (0..3)
            .map(|a| Scalar::new(field, unit_coords(3, a)).expect("unit"))
            .collect();
        let table = MulTable::from_basis_products(3, |i, j| (&units[i] * &units[j]).to_vector());
        let one = Scalar::one(field).to_vector();
        Self::assemble(
            field.name(),
            AlgebraKind::Etale,
            FieldDescriptor::rationals(),
            table,
            field.labels().to_vec(),
            vec![one],
            None,
        )
    }

    /// `D x D°` for `D` with center `Q`; the center is `Q x Q`.
    pub fn opposite_pair(d: &Arc<Degree3Algebra>) -> Result<Arc<Self>> {
        if d.center.degree() != 1 {
            return Err(CoreError::InvalidDescriptor(
                "D x D° needs D with center Q".into(),
            ));
        }
        let n = d.dim();
        let table = MulTable::from_basis_products(2 * n, |p, q| {
            let mut v = Vector::zeros(2 * n);
            if p < n && q < n {
                for (k, c) in d.table.basis_product(p, q) {
                    v[*k] = c.clone();
                }
            } else if p >= n && q >= n {
                for (k, c) in d.table.basis_product(q - n, p - n) {
                    v[n + *k] = c.clone();
                }
            }
            v
        });
        let labels = d
            .labels
            .iter()
            .map(|l| format!("({l},0)"))
            .chain(d.labels.iter().map(|l| format!("(0,{l}°)")))
            .collect();
        let zero = Vector::zeros(n);
        let center_basis = vec![
            Vector::concat(&[&d.one, &zero]),
            Vector::concat(&[&zero, &d.one]),
        ];
        Self::assemble(
            format!("{} x {}°", d.name, d.name),
            AlgebraKind::OppositePair,
            FieldDescriptor::split_quadratic(),
            table,
            labels,
            center_basis,
            Some(d.clone()),
        )
    }

    fn assemble(
        name: String,
        kind: AlgebraKind,
        center: Arc<FieldDescriptor>,
        table: MulTable,
        labels: Vec<String>,
        center_basis: Vec<Vector>,
        factor: Option<Arc<Degree3Algebra>>,
    ) -> Result<Arc<Self>> {
        let dim = table.dim();
        let m = center.degree();
        if !dim.is_multiple_of(3 * m) {
            return Err(CoreError::StructureInvalid(format!(
                "dimension {dim} is not compatible with a degree-3 algebra over {}",
                center.name()
            )));
        }
        let one = {
            let mut acc = Vector::zeros(dim);
            let one_z = Scalar::one(&center);
            for (c, w) in one_z.coords().iter().zip(&center_basis) {
                acc = acc.add_scaled(c, w);
            }
            acc
        };
        // traces of left multiplication by basis vectors
        let basis_traces = Vector::new(
            (0..dim)
                .map(|i| {
                    let mut t = Q::ZERO;
                    for k in 0..dim {
                        for (l, c) in table.basis_product(i, k) {
                            if *l == k {
                                t += c;
                            }
                        }
                    }
                    t
                })
                .collect(),
        );
        let units: Vec<Scalar> = (0..m)
            .map(|a| Scalar::new(&center, unit_coords(m, a)).expect("unit"))
            .collect();
        let gram = Matrix::from_rows(
            units
                .iter()
                .map(|a| units.iter().map(|b| (a * b).trace()).collect())
                .collect(),
        );
        let gram_inv = gram.inverse().ok_or_else(|| {
            CoreError::InvalidDescriptor(format!("{} is not étale", center.name()))
        })?;
        let scale = Q::from((3 * m) as i64) * Q::from(dim as i64).reciprocal();
        let mut trace_map = Matrix::zeros(m, dim);
        for i in 0..dim {
            let e = Vector::unit(dim, i);
            let rhs = Vector::new(
                center_basis
                    .iter()
                    .map(|w| table.mul(w, &e).dot(&basis_traces))
                    .collect(),
            );
            let coords = gram_inv.apply(&rhs).scale(&scale);
            for a in 0..m {
                trace_map.set(a, i, coords[a].clone());
            }
        }
        let alg = Degree3Algebra {
            name,
            kind,
            center,
            table,
            one,
            center_basis,
            trace_map,
            labels,
            factor,
        };
        alg.check_unit()?;
        Ok(Arc::new(alg))
    }

    fn check_unit(&self) -> Result<()> {
        for i in 0..self.dim() {
            let e = Vector::unit(self.dim(), i);
            if self.mul(&self.one, &e) != e || self.mul(&e, &self.one) != e {
                return Err(CoreError::StructureInvalid(format!(
                    "{} is not unital at basis vector {}",
                    self.name, self.labels[i]
                )));
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.kind
    }

    pub fn center(&self) -> &Arc<FieldDescriptor> {
        &self.center
    }

    /// Dimension over `Q`.
    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &MulTable {
        &self.table
    }

    /// For `D x D°`, the factor `D`.
    pub fn factor(&self) -> Option<&Arc<Degree3Algebra>> {
        self.factor.as_ref()
    }

    pub fn one(&self) -> Vector {
        self.one.clone()
    }

    pub fn zero(&self) -> Vector {
        Vector::zeros(self.dim())
    }

    pub fn mul(&self, a: &Vector, b: &Vector) -> Vector {
        self.table.mul(a, b)
    }

    pub fn mul3(&self, a: &Vector, b: &Vector, c: &Vector) -> Vector {
        self.mul(&self.mul(a, b), c)
    }

    /// Image of a center scalar in the algebra.
    pub fn embed_center(&self, z: &Scalar) -> Vector {
        assert_eq!(z.descriptor().as_ref(), self.center.as_ref(), "center mismatch");
        let mut acc = Vector::zeros(self.dim());
        for (c, w) in z.coords().iter().zip(&self.center_basis) {
            acc = acc.add_scaled(c, w);
        }
        acc
    }

    /// `z * a` for a center scalar `z`.
    pub fn scale_center(&self, z: &Scalar, a: &Vector) -> Vector {
        if let Some(r) = z.to_rational() {
            return a.scale(&r);
        }
        self.mul(&self.embed_center(z), a)
    }

    pub fn center_basis(&self) -> &[Vector] {
        &self.center_basis
    }

    /// Reduced trace, valued in the center.
    pub fn trace(&self, a: &Vector) -> Scalar {
        Scalar::new(&self.center, self.trace_map.apply(a).into_inner()).expect("trace map shape")
    }

    /// `S(a) = (T(a)^2 - T(a^2)) / 2`, the quadratic trace.
    pub fn quadratic_trace(&self, a: &Vector) -> Scalar {
        let t1 = self.trace(a);
        let t2 = self.trace(&self.mul(a, a));
        (&(&t1 * &t1) - &t2).scale(&Q::from(2).reciprocal())
    }

    /// Reduced norm, valued in the center.
    pub fn norm(&self, a: &Vector) -> Scalar {
        let a2 = self.mul(a, a);
        let a3 = self.mul(&a2, a);
        let t1 = self.trace(a);
        let t2 = self.trace(&a2);
        let t3 = self.trace(&a3);
        let t1_sq = &t1 * &t1;
        let cube = &t1_sq * &t1;
        let mixed = (&t1 * &t2).scale(&Q::from(3));
        (&(&cube - &mixed) + &t3.scale(&Q::from(2))).scale(&Q::from(6).reciprocal())
    }

    /// Classical adjoint `a^# = a^2 - T(a) a + S(a) 1`.
    pub fn adjoint(&self, a: &Vector) -> Vector {
        let a2 = self.mul(a, a);
        let t1 = self.trace(a);
        let t2 = self.trace(&a2);
        let s = (&(&t1 * &t1) - &t2).scale(&Q::from(2).reciprocal());
        let mut out = &a2 - &self.scale_center(&t1, a);
        out = &out + &self.embed_center(&s);
        out
    }

    pub fn is_invertible(&self, a: &Vector) -> bool {
        self.norm(a).is_invertible()
    }

    /// `a^{-1} = N(a)^{-1} a^#`.
    pub fn inverse(&self, a: &Vector) -> Result<Vector> {
        let n = self.norm(a);
        let inv = n
            .inverse()
            .map_err(|_| CoreError::NotInvertible(format!("element {a} of {}", self.name)))?;
        Ok(self.scale_center(&inv, &self.adjoint(a)))
    }

    /// Matrix of left multiplication over `Q`.
    pub fn left_matrix(&self, a: &Vector) -> Matrix {
        Matrix::from_linear_map(self.dim(), |v| self.mul(a, v))
    }

    /// Matrix of right multiplication over `Q`.
    pub fn right_matrix(&self, a: &Vector) -> Matrix {
        Matrix::from_linear_map(self.dim(), |v| self.mul(v, a))
    }

    /// Exponent `e` with `det_Q(L_a) = N_{Z/Q}(N(a))^e`.
    pub fn regular_norm_exponent(&self) -> u32 {
        (self.dim() / self.center.degree() / 3) as u32
    }

    pub fn is_central(&self, z: &Vector) -> bool {
        (0..self.dim()).all(|i| {
            let e = Vector::unit(self.dim(), i);
            self.mul(z, &e) == self.mul(&e, z)
        })
    }

    /// Text dump of the structure constants.
    pub fn table_text(&self) -> String {
        self.table.to_text(&self.labels)
    }
}

fn unit_coords(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::ZERO; n];
    v[i] = Q::ONE;
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{pow, q};

    fn diag(alg: &Degree3Algebra, entries: [i64; 3]) -> Vector {
        let m = alg.center().degree();
        let mut v = Vector::zeros(alg.dim());
        for (i, e) in entries.iter().enumerate() {
            v[(3 * i + i) * m] = q(*e);
        }
        v
    }

    #[test]
    fn matrix_norm_is_determinant() {
        let m3 = Degree3Algebra::matrix3(&FieldDescriptor::rationals()).unwrap();
        let d = diag(&m3, [1, 2, 3]);
        assert_eq!(m3.norm(&d).to_rational(), Some(q(6)));
        assert_eq!(m3.adjoint(&d), diag(&m3, [6, 3, 2]));
        assert_eq!(m3.norm(&m3.one()).to_rational(), Some(q(1)));
        let a = Vector::from_ints(&[2, -1, 0, 3, 1, 4, 0, 5, -2]);
        let det = Matrix::from_rows((0..3).map(|i| a.slice(3 * i, 3 * i + 3).into_inner()).collect())
            .det();
        assert_eq!(m3.norm(&a).to_rational(), Some(det));
    }

    #[test]
    fn trace_over_quadratic_center() {
        let k = FieldDescriptor::quadratic(-1).unwrap();
        let b = Degree3Algebra::matrix3(&k).unwrap();
        assert_eq!(b.dim(), 18);
        let t = b.trace(&b.one());
        assert_eq!(t.to_rational(), Some(q(3)));
        let mut x = Vector::zeros(18);
        x[1] = q(1); // i * e11
        assert_eq!(b.trace(&x).coords(), &[q(0), q(1)]);
    }

    #[test]
    fn cyclic_norm_matches_regular_determinant() {
        let l = FieldDescriptor::cubic([q(-1), q(-2), q(1)]).unwrap();
        let rho = Scalar::new(&l, vec![q(-2), q(0), q(1)]).unwrap();
        let d = Degree3Algebra::cyclic(&l, rho, q(2)).unwrap();
        let a = Vector::from_ints(&[1, 0, 2, -1, 1, 0, 0, 3, 1]);
        let n = d.norm(&a).to_rational().unwrap();
        assert_eq!(d.left_matrix(&a).det(), pow(&n, 3));
        let adj = d.adjoint(&a);
        assert_eq!(d.mul(&a, &adj), d.one().scale(&n));
    }

    #[test]
    fn opposite_pair_center_and_trace() {
        let m3 = Degree3Algebra::matrix3(&FieldDescriptor::rationals()).unwrap();
        let b = Degree3Algebra::opposite_pair(&m3).unwrap();
        let x = diag(&m3, [1, 2, 3]);
        let y = diag(&m3, [4, 0, 1]);
        let pair = Vector::concat(&[&x, &y]);
        assert_eq!(b.trace(&pair).coords(), &[q(6), q(5)]);
        assert_eq!(b.norm(&pair).coords(), &[q(6), q(0)]);
        assert!(b.is_central(&b.center_basis()[0]));
    }

    #[test]
    fn etale_algebra_norm() {
        let l = FieldDescriptor::cubic([q(-1), q(-1), q(0)]).unwrap();
        let alg = Degree3Algebra::etale(&l).unwrap();
        let x = Vector::from_ints(&[0, 1, 0]);
        assert_eq!(alg.norm(&x).to_rational(), Some(q(1)));
        assert_eq!(alg.trace(&x).to_rational(), Some(q(0)));
    }

    #[test]
    fn rejects_bad_cyclic_data() {
        let l = FieldDescriptor::cubic([q(-1), q(-2), q(1)]).unwrap();
        let x = Scalar::new(&l, vec![q(0), q(1), q(0)]).unwrap();
        assert!(Degree3Algebra::cyclic(&l, x, q(2)).is_err());
        let not_root = Scalar::new(&l, vec![q(1), q(1), q(0)]).unwrap();
        assert!(Degree3Algebra::cyclic(&l, not_root, q(2)).is_err());
    }
}
