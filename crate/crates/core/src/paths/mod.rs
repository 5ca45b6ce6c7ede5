//! Rational one-parameter families `t -> f(t)` of structure maps with exact
//! evaluation, pole bookkeeping and endpoint certificates.

mod builders;

pub use builders::{hermitian_path, isometry_correction, normal_path, u_path, u_path_with, Interpolation};

use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::cubic::CubicNormStructure;
use crate::error::{CoreError, Result};
use crate::linalg::Matrix;
use crate::maps::{certify_similarity, CertifyOptions, StructureMap};
use crate::poly::Poly;
use crate::rational::{fmt_q, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PathKind {
    UPath,
    Hermitian,
    Normal,
    IsometryCorrection,
}

impl fmt::Display for PathKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PathKind::UPath => "u-path",
            PathKind::Hermitian => "hermitian",
            PathKind::Normal => "normal",
            PathKind::IsometryCorrection => "isometry-correction",
        };
        f.write_str(s)
    }
}

type Evaluator = Box<dyn Fn(&Q) -> Result<Matrix> + Send + Sync>;
type FactorFn = Box<dyn Fn(&Q) -> Q + Send + Sync>;

pub struct RationalPath {
    kind: PathKind,
    structure: Arc<CubicNormStructure>,
    parameters: Vec<(String, String)>,
    eval: Evaluator,
    start: Matrix,
    end: Matrix,
    pole_polynomial: Option<Poly>,
    expected_factor: Option<FactorFn>,
    stable_block: Option<usize>,
    poles: Mutex<BTreeSet<Q>>,
    opts: CertifyOptions,
}

impl fmt::Debug for RationalPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RationalPath")
            .field("kind", &self.kind)
            .field("structure", &self.structure.id())
            .field("parameters", &self.parameters)
            .finish()
    }
}

pub(crate) struct PathParts {
    pub kind: PathKind,
    pub structure: Arc<CubicNormStructure>,
    pub parameters: Vec<(String, String)>,
    pub eval: Evaluator,
    pub start: Matrix,
    pub end: Matrix,
    pub pole_polynomial: Option<Poly>,
    pub expected_factor: Option<FactorFn>,
    pub stable_block: Option<usize>,
    pub opts: CertifyOptions,
}

impl RationalPath {
    pub(crate) fn from_parts(p: PathParts) -> Self {
        RationalPath {
            kind: p.kind,
            structure: p.structure,
            parameters: p.parameters,
            eval: p.eval,
            start: p.start,
            end: p.end,
            pole_polynomial: p.pole_polynomial,
            expected_factor: p.expected_factor,
            stable_block: p.stable_block,
            poles: Mutex::new(BTreeSet::new()),
            opts: p.opts,
        }
    }

    pub fn kind(&self) -> PathKind {
        self.kind
    }

    pub fn structure(&self) -> &Arc<CubicNormStructure> {
        &self.structure
    }

    pub fn parameters(&self) -> &[(String, String)] {
        &self.parameters
    }

    pub fn declared_start(&self) -> &Matrix {
        &self.start
    }

    pub fn declared_end(&self) -> &Matrix {
        &self.end
    }

    /// Replaces the declared endpoint at `t = 1`.
    pub fn with_declared_end(mut self, end: Matrix) -> Self {
        self.end = end;
        self
    }

    pub fn pole_polynomial(&self) -> Option<&Poly> {
        self.pole_polynomial.as_ref()
    }

    /// Parameters rejected as poles so far.
    pub fn known_poles(&self) -> Vec<Q> {
        self.poles.lock().expect("pole set").iter().cloned().collect()
    }

    /// Exact matrix at `t`, without certification.
    pub fn matrix_at(&self, t: &Q) -> Result<Matrix> {
        if self.poles.lock().expect("pole set").contains(t) {
            return Err(CoreError::Pole {
                t: fmt_q(t),
                witness: "previously rejected".into(),
            });
        }
        match (self.eval)(t) {
            Err(e @ CoreError::Pole { .. }) => {
                self.poles.lock().expect("pole set").insert(t.clone());
                Err(e)
            }
            other => other,
        }
    }

    /// Certified map at `t`. Checks the expected factor and, where the path
    /// should stabilize the first summand, the block structure.
    pub fn eval(&self, t: &Q) -> Result<StructureMap> {
        let m = self.matrix_at(t)?;
        let f = certify_similarity(&self.structure, m, self.opts.samples, self.opts.seed)?;
        if let Some(expected) = &self.expected_factor {
            let e = expected(t);
            if *f.factor() != e {
                return Err(CoreError::NotASimilarity(format!(
                    "factor at t = {} is {}, expected {}",
                    fmt_q(t),
                    fmt_q(f.factor()),
                    fmt_q(&e)
                )));
            }
        }
        if let Some(m) = self.stable_block {
            if !f.stabilizes_leading_block(m) {
                return Err(CoreError::NotASimilarity(format!(
                    "map at t = {} does not stabilize the first summand",
                    fmt_q(t)
                )));
            }
        }
        Ok(f)
    }
}

pub fn path_eval(path: &RationalPath, t: &Q) -> Result<StructureMap> {
    path.eval(t)
}

pub fn matrix_hash(m: &Matrix) -> String {
    let mut h = Sha256::new();
    for row in m.to_string_rows() {
        h.update(row.join(",").as_bytes());
        h.update(b"\n");
    }
    hex::encode(h.finalize())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathSample {
    pub t: String,
    pub outcome: String,
    #[serde(rename = "nu")]
    pub factor: Option<String>,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EndpointCheck {
    pub t: String,
    pub declared_hash: String,
    pub evaluated_hash: Option<String>,
    pub passed: bool,
    pub failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathCertificate {
    pub kind: PathKind,
    #[serde(rename = "structure-id")]
    pub structure: String,
    pub parameters: Vec<(String, String)>,
    pub start: EndpointCheck,
    pub end: EndpointCheck,
    pub pole_polynomial: Option<String>,
    pub pole_roots: Option<Vec<String>>,
    pub samples: Vec<PathSample>,
    pub passed: bool,
}

impl PathCertificate {
    pub fn pole_at(&self, t: &Q) -> bool {
        let s = fmt_q(t);
        self.samples.iter().any(|p| p.t == s && p.outcome == "pole")
            || self.pole_roots.as_ref().is_some_and(|r| r.contains(&s))
    }
}

fn endpoint(path: &RationalPath, t: &Q, declared: &Matrix) -> EndpointCheck {
    let declared_hash = matrix_hash(declared);
    match path.eval(t) {
        Ok(f) => {
            let passed = f.matrix() == declared;
            EndpointCheck {
                t: fmt_q(t),
                declared_hash,
                evaluated_hash: Some(matrix_hash(f.matrix())),
                passed,
                failure: (!passed).then(|| "evaluated map differs from the declaration".into()),
            }
        }
        Err(e) => EndpointCheck {
            t: fmt_q(t),
            declared_hash,
            evaluated_hash: None,
            passed: false,
            failure: Some(e.to_string()),
        },
    }
}

/// Compares the evaluated endpoints with the declared ones and evaluates
/// the interior sample points. Poles at interior points are recorded, not
/// fatal; any other failure fails the certificate.
pub fn endpoint_certificate(path: &RationalPath, interior: &[Q]) -> PathCertificate {
    let start = endpoint(path, &Q::from(0), &path.start);
    let end = endpoint(path, &Q::from(1), &path.end);
    let mut ok = start.passed && end.passed;
    let mut samples = Vec::new();
    for t in interior {
        let s = match path.eval(t) {
            Ok(f) => PathSample {
                t: fmt_q(t),
                outcome: "ok".into(),
                factor: Some(fmt_q(f.factor())),
                witness: None,
            },
            Err(CoreError::Pole { witness, .. }) => PathSample {
                t: fmt_q(t),
                outcome: "pole".into(),
                factor: None,
                witness: Some(witness),
            },
            Err(e) => {
                ok = false;
                PathSample {
                    t: fmt_q(t),
                    outcome: "failed".into(),
                    factor: None,
                    witness: Some(e.to_string()),
                }
            }
        };
        samples.push(s);
    }
    PathCertificate {
        kind: path.kind,
        structure: path.structure.id(),
        parameters: path.parameters.clone(),
        start,
        end,
        pole_polynomial: path.pole_polynomial.as_ref().map(ToString::to_string),
        pole_roots: path
            .pole_polynomial
            .as_ref()
            .and_then(Poly::rational_roots)
            .map(|r| r.iter().map(fmt_q).collect()),
        samples,
        passed: ok,
    }
}
