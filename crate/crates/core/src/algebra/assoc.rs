//! Sparse structure constants for finite-dimensional `Q`-algebras.

use std::fmt::Write;

use malachite_base::num::basic::traits::Zero;

use crate::linalg::Vector;
use crate::rational::{fmt_q, Q};

/// `e_i * e_j = sum_k c_ijk e_k`, stored sparsely per pair `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MulTable {
    dim: usize,
    entries: Vec<Vec<(usize, Q)>>,
}

impl MulTable {
    /// Builds the table from a function giving the product of two basis vectors.
    pub fn from_basis_products(dim: usize, product: impl Fn(usize, usize) -> Vector) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                assert_eq!(v.len(), dim, "basis product has wrong length");
                entries.push(
                    v.iter()
                        .enumerate()
                        .filter(|(_, c)| **c != Q::ZERO)
                        .map(|(k, c)| (k, c.clone()))
                        .collect(),
                );
            }
        }
        MulTable { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Q)] {
        &self.entries[i * self.dim + j]
    }

    pub fn mul(&self, a: &Vector, b: &Vector) -> Vector {
        debug_assert_eq!(a.len(), self.dim);
        debug_assert_eq!(b.len(), self.dim);
        let mut out = Vector::zeros(self.dim);
        let nz_b: Vec<(usize, &Q)> = b
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != Q::ZERO)
            .collect();
        for (i, x) in a.iter().enumerate() {
            if *x == Q::ZERO {
                continue;
            }
            for &(j, y) in &nz_b {
                let pair = &self.entries[i * self.dim + j];
                if pair.is_empty() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in pair {
                    out[*k] += &xy * c;
                }
            }
        }
        out
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    /// One line per nonzero basis product: `e_i * e_j = c*e_k + ...`.
    pub fn to_text(&self, labels: &[String]) -> String {
        let mut out = String::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let pair = self.basis_product(i, j);
                if pair.is_empty() {
                    continue;
                }
                let terms: Vec<String> = pair
                    .iter()
                    .map(|(k, c)| format!("{}*{}", fmt_q(c), labels[*k]))
                    .collect();
                let _ = writeln!(out, "{} * {} = {}", labels[i], labels[j], terms.join(" + "));
            }
        }
        out
    }
}
