//! Octonion algebras over `Q`: split (Zorn vector matrices) and Cayley-Dickson doublings.

use serde::{Deserialize, Serialize};

use crate::linalg::Vector;
use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum OctonionAlgebra {
    /// `(alpha, a, b, beta)` with `a, b` in `Q^3`.
    Zorn,
    /// Doubling of the quaternions `(a, b)` with parameter `c`.
    CayleyDickson { a: i64, b: i64, c: i64 },
}

fn v3(x: &[Q]) -> [Q; 3] {
    [x[0].clone(), x[1].clone(), x[2].clone()]
}

fn dot3(a: &[Q; 3], b: &[Q; 3]) -> Q {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

fn cross3(a: &[Q; 3], b: &[Q; 3]) -> [Q; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

struct Quaternions {
    a: Q,
    b: Q,
}

impl Quaternions {
    fn mul(&self, x: &[Q], y: &[Q]) -> [Q; 4] {
        let (a, b) = (&self.a, &self.b);
        let ab = a * b;
        [
            &x[0] * &y[0] + a * &x[1] * &y[1] + b * &x[2] * &y[2] - &ab * &x[3] * &y[3],
            &x[0] * &y[1] + &x[1] * &y[0] - b * &x[2] * &y[3] + b * &x[3] * &y[2],
            &x[0] * &y[2] + &x[2] * &y[0] + a * &x[1] * &y[3] - a * &x[3] * &y[1],
            &x[0] * &y[3] + &x[3] * &y[0] + &x[1] * &y[2] - &x[2] * &y[1],
        ]
    }

    fn conj(x: &[Q]) -> [Q; 4] {
        [x[0].clone(), -&x[1], -&x[2], -&x[3]]
    }

    fn norm(&self, x: &[Q]) -> Q {
        let (a, b) = (&self.a, &self.b);
        &x[0] * &x[0] - a * &x[1] * &x[1] - b * &x[2] * &x[2] + a * b * &x[3] * &x[3]
    }
}

fn add4(x: [Q; 4], y: [Q; 4]) -> [Q; 4] {
    let [x0, x1, x2, x3] = x;
    let [y0, y1, y2, y3] = y;
    [x0 + y0, x1 + y1, x2 + y2, x3 + y3]
}

impl OctonionAlgebra {
    pub fn name(&self) -> String {
        match self {
            OctonionAlgebra::Zorn => "Zorn".into(),
            OctonionAlgebra::CayleyDickson { a, b, c } => format!("CD({a},{b},{c})"),
        }
    }

    pub fn unit(&self) -> Vector {
        let mut e = Vector::zeros(8);
        match self {
            OctonionAlgebra::Zorn => {
                e[0] = Q::from(1);
                e[7] = Q::from(1);
            }
            OctonionAlgebra::CayleyDickson { .. } => e[0] = Q::from(1),
        }
        e
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        let (x, y) = (x.as_slice(), y.as_slice());
        match self {
            OctonionAlgebra::Zorn => {
                let (al, a, b, be) = (&x[0], v3(&x[1..4]), v3(&x[4..7]), &x[7]);
                let (al2, a2, b2, be2) = (&y[0], v3(&y[1..4]), v3(&y[4..7]), &y[7]);
                let bxb = cross3(&b, &b2);
                let axa = cross3(&a, &a2);
                let mut out = Vec::with_capacity(8);
                out.push(al * al2 + dot3(&a, &b2));
                for i in 0..3 {
                    out.push(al * &a2[i] + be2 * &a[i] - &bxb[i]);
                }
                for i in 0..3 {
                    out.push(al2 * &b[i] + be * &b2[i] + &axa[i]);
                }
                out.push(be * be2 + dot3(&b, &a2));
                Vector::new(out)
            }
            OctonionAlgebra::CayleyDickson { a, b, c } => {
                let h = Quaternions {
                    a: Q::from(*a),
                    b: Q::from(*b),
                };
                let c = Q::from(*c);
                let (p, q) = (&x[0..4], &x[4..8]);
                let (u, v) = (&y[0..4], &y[4..8]);
                // (p, q)(u, v) = (p u + c v̄ q, v p + q ū)
                let vbar_q = h.mul(&Quaternions::conj(v), q);
                let first = add4(h.mul(p, u), vbar_q.map(|t| t * &c));
                let second = add4(h.mul(v, p), h.mul(q, &Quaternions::conj(u)));
                Vector::new(first.into_iter().chain(second).collect())
            }
        }
    }

    pub fn conj(&self, x: &Vector) -> Vector {
        let s = x.as_slice();
        match self {
            OctonionAlgebra::Zorn => {
                let mut out = vec![s[7].clone()];
                out.extend(s[1..7].iter().map(|t| -t));
                out.push(s[0].clone());
                Vector::new(out)
            }
            OctonionAlgebra::CayleyDickson { .. } => {
                let mut out = vec![s[0].clone()];
                out.extend(s[1..8].iter().map(|t| -t));
                Vector::new(out)
            }
        }
    }

    pub fn norm(&self, x: &Vector) -> Q {
        let s = x.as_slice();
        match self {
            OctonionAlgebra::Zorn => &s[0] * &s[7] - dot3(&v3(&s[1..4]), &v3(&s[4..7])),
            OctonionAlgebra::CayleyDickson { a, b, c } => {
                let h = Quaternions {
                    a: Q::from(*a),
                    b: Q::from(*b),
                };
                h.norm(&s[0..4]) - Q::from(*c) * h.norm(&s[4..8])
            }
        }
    }

    pub fn trace(&self, x: &Vector) -> Q {
        let s = x.as_slice();
        match self {
            OctonionAlgebra::Zorn => &s[0] + &s[7],
            OctonionAlgebra::CayleyDickson { .. } => Q::from(2) * &s[0],
        }
    }

    /// Products of basis vectors, one line per nonzero product.
    pub fn table_text(&self) -> String {
        let mut out = String::new();
        for i in 0..8 {
            for j in 0..8 {
                let p = self.mul(&Vector::unit(8, i), &Vector::unit(8, j));
                if !p.is_zero() {
                    out.push_str(&format!("e{i} * e{j} = {p}\n"));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::Sampler;

    fn algebras() -> Vec<OctonionAlgebra> {
        vec![
            OctonionAlgebra::Zorn,
            OctonionAlgebra::CayleyDickson { a: -1, b: -1, c: -1 },
            OctonionAlgebra::CayleyDickson { a: 2, b: -3, c: 5 },
        ]
    }

    #[test]
    fn composition_and_alternativity() {
        let mut rng = Sampler::new(3);
        for o in algebras() {
            let e = o.unit();
            assert_eq!(o.norm(&e), Q::from(1));
            for _ in 0..20 {
                let x = rng.vector(8);
                let y = rng.vector(8);
                let z = rng.vector(8);
                let xy = o.mul(&x, &y);
                assert_eq!(o.norm(&xy), o.norm(&x) * o.norm(&y), "{}", o.name());
                assert_eq!(o.mul(&o.mul(&x, &x), &y), o.mul(&x, &o.mul(&x, &y)));
                assert_eq!(o.mul(&x, &e), x);
                // x x̄ = n(x) 1
                assert_eq!(o.mul(&x, &o.conj(&x)), e.scale(&o.norm(&x)));
                // t((xy)z) = t(x(yz))
                let l = o.trace(&o.mul(&xy, &z));
                let r = o.trace(&o.mul(&x, &o.mul(&y, &z)));
                assert_eq!(l, r);
            }
        }
    }

    #[test]
    fn not_associative() {
        let o = OctonionAlgebra::CayleyDickson { a: -1, b: -1, c: -1 };
        let (x, y, z) = (Vector::unit(8, 1), Vector::unit(8, 2), Vector::unit(8, 4));
        assert_ne!(o.mul(&o.mul(&x, &y), &z), o.mul(&x, &o.mul(&y, &z)));
    }
}
