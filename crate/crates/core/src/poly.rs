//! Univariate polynomials over `Q`: interpolation, evaluation, rational roots.

use std::fmt;

use malachite_base::num::arithmetic::traits::Reciprocal;
use malachite_base::num::basic::traits::{One, Zero};
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;

use crate::rational::{fmt_q, Q};

/// Largest absolute value for which `rational_roots` enumerates divisors.
const DIVISOR_SEARCH_LIMIT: u64 = 1_000_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    /// Coefficients, lowest degree first, no trailing zeros.
    coeffs: Vec<Q>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(|c| *c == Q::ZERO) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::new(vec![Q::ONE])
    }

    pub fn constant(c: Q) -> Self {
        Poly::new(vec![c])
    }

    /// `a + b t`
    pub fn linear(a: Q, b: Q) -> Self {
        Poly::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(i).cloned().unwrap_or(Q::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &Q) -> Q {
        let mut acc = Q::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Q::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn scale(&self, s: &Q) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// The unique polynomial of degree `< nodes.len()` through the given points
    /// (Newton divided differences).
    pub fn interpolate(nodes: &[Q], values: &[Q]) -> Poly {
        assert_eq!(nodes.len(), values.len(), "interpolate: length mismatch");
        let n = nodes.len();
        let mut dd: Vec<Q> = values.to_vec();
        for level in 1..n {
            for i in (level..n).rev() {
                let num = &dd[i] - &dd[i - 1];
                let den = &nodes[i] - &nodes[i - level];
                assert!(den != Q::ZERO, "interpolate: repeated node");
                dd[i] = num / den;
            }
        }
        let mut result = Poly::constant(dd[n - 1].clone());
        for i in (0..n - 1).rev() {
            result = result
                .mul(&Poly::linear(-&nodes[i], Q::ONE))
                .add(&Poly::constant(dd[i].clone()));
        }
        result
    }

    /// Rational roots, sorted and without multiplicity. `None` when the
    /// coefficients are too large for the divisor search.
    pub fn rational_roots(&self) -> Option<Vec<Q>> {
        if self.is_zero() {
            return Some(Vec::new());
        }
        let mut roots = Vec::new();
        let mut coeffs = self.coeffs.clone();
        if coeffs[0] == Q::ZERO {
            roots.push(Q::ZERO);
            let skip = coeffs.iter().take_while(|c| **c == Q::ZERO).count();
            coeffs.drain(..skip);
        }
        if coeffs.len() > 1 {
            let ints = clear_denominators(&coeffs);
            let lead = ints.last().unwrap().unsigned_abs_ref().clone();
            let constant = ints[0].unsigned_abs_ref().clone();
            let ps = divisors(&constant)?;
            let qs = divisors(&lead)?;
            let reduced = Poly::new(coeffs);
            for p in &ps {
                for qd in &qs {
                    for sign in [1i64, -1] {
                        let cand = Q::from_naturals(p.clone(), qd.clone()) * Q::from(sign);
                        if reduced.eval(&cand) == Q::ZERO && !roots.contains(&cand) {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
        roots.sort();
        Some(roots)
    }
}

fn clear_denominators(coeffs: &[Q]) -> Vec<Integer> {
    let mut lcm = Natural::ONE;
    for c in coeffs {
        let d = c.to_denominator();
        lcm = malachite_base::num::arithmetic::traits::Lcm::lcm(lcm, d);
    }
    let scale = Q::from(lcm);
    coeffs
        .iter()
        .map(|c| Integer::try_from(&(c * &scale)).expect("integral after scaling"))
        .collect()
}

fn divisors(n: &Natural) -> Option<Vec<Natural>> {
    let value = u64::try_from(n).ok()?;
    if value > DIVISOR_SEARCH_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    let mut i = 1u64;
    while i * i <= value {
        if value % i == 0 {
            out.push(Natural::from(i));
            if i != value / i {
                out.push(Natural::from(value / i));
            }
        }
        i += 1;
    }
    Some(out)
}

/// Coefficients `[c0, c1, c2, c3]` of the cubic through `(k, values[k])`, `k = 0..3`.
pub fn cubic_coefficients(v: &[Q; 4]) -> [Q; 4] {
    let six = Q::from(6).reciprocal();
    let half = Q::from(2).reciprocal();
    let c1 = (Q::from(-11) * &v[0] + Q::from(18) * &v[1] - Q::from(9) * &v[2]
        + Q::from(2) * &v[3])
        * &six;
    let c2 = (Q::from(2) * &v[0] - Q::from(5) * &v[1] + Q::from(4) * &v[2] - &v[3]) * half;
    let c3 = (-&v[0] + Q::from(3) * &v[1] - Q::from(3) * &v[2] + &v[3]) * six;
    [v[0].clone(), c1, c2, c3]
}

impl Poly {
    /// Conventional rendering in the variable `var`, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if *c == Q::ZERO {
                continue;
            }
            let negative = *c < Q::ZERO;
            let abs = if negative { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let coeff = fmt_q(&abs);
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&coeff);
            } else if abs == Q::ONE {
                out.push_str(&mono);
            } else if coeff.contains('/') {
                out.push_str(&format!("({coeff}){mono}"));
            } else {
                out.push_str(&format!("{coeff}{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qr};

    #[test]
    fn rendering() {
        assert_eq!(Poly::new(vec![q(-1), q(-1), q(0), q(1)]).display_in("x"), "x^3 - x - 1");
        assert_eq!(Poly::new(vec![qr(1, 2), q(-2)]).to_string(), "-2t + 1/2");
        assert_eq!(Poly::new(vec![q(0), qr(-3, 4), q(0)]).to_string(), "-(3/4)t");
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = Poly::new(vec![q(3), qr(-1, 2), q(0), q(7)]);
        let nodes: Vec<Q> = (0..4).map(q).collect();
        let values: Vec<Q> = nodes.iter().map(|t| p.eval(t)).collect();
        assert_eq!(Poly::interpolate(&nodes, &values), p);
        let fixed = cubic_coefficients(&[
            values[0].clone(),
            values[1].clone(),
            values[2].clone(),
            values[3].clone(),
        ]);
        assert_eq!(fixed.to_vec(), p.coeffs().to_vec());
    }

    #[test]
    fn roots_of_product() {
        // (2t - 1)(t + 3) t
        let p = Poly::linear(q(-1), q(2))
            .mul(&Poly::linear(q(3), q(1)))
            .mul(&Poly::linear(q(0), q(1)));
        assert_eq!(p.rational_roots().unwrap(), vec![q(-3), q(0), qr(1, 2)]);
        let irreducible = Poly::new(vec![q(-2), q(0), q(1)]);
        assert_eq!(irreducible.rational_roots().unwrap(), Vec::<Q>::new());
    }
}
