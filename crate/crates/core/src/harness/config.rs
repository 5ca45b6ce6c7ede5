//! TOML configuration: field, construction, run settings and path parameters.
//! Exact values are written as strings such as `"-3/4"`.

use std::fmt;

use serde::Deserialize;
use toml::Spanned;

use crate::algebra::octonion::OctonionAlgebra;
use crate::rational::{parse_q, Q};
use crate::tits::AdjointCorruption;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigError {
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

impl std::error::Error for ConfigError {}

pub type Rat = Spanned<String>;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpecConfig {
    pub name: Option<String>,
    pub description: Option<String>,
    pub field: FieldBlock,
    pub construction: ConstructionBlock,
    #[serde(default)]
    pub run: RunBlock,
    #[serde(default)]
    pub path: PathBlock,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FieldKindName {
    Rationals,
    Quadratic,
    SplitQuadratic,
    Cubic,
    CubicProduct,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldBlock {
    pub kind: FieldKindName,
    /// Square-free `d` for `Q(sqrt d)`.
    pub d: Option<Spanned<i64>>,
    /// `[c0, c1, c2]` for `x^3 + c2 x^2 + c1 x + c0`.
    pub min_poly: Option<Vec<Rat>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FirstAlgebra {
    Matrix3,
    Cyclic,
    Etale,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
pub enum ConstructionKind {
    #[serde(rename = "first")]
    First,
    #[serde(rename = "first-process-on-L", alias = "first-process-on-l")]
    FirstProcessOnL,
    #[serde(rename = "second")]
    Second,
    #[serde(rename = "reduced")]
    Reduced,
}

impl ConstructionKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConstructionKind::First => "first",
            ConstructionKind::FirstProcessOnL => "first-process-on-L",
            ConstructionKind::Second => "second",
            ConstructionKind::Reduced => "reduced",
        }
    }
}

/// Keys used by each kind:
/// `first`: `algebra`, `lambda`, and for cyclic algebras `rho`, `gamma`; optional `corruption`.
/// `first-process-on-L`: `lambda`.
/// `second`: optional `u_diag` (rational diagonal of `u`) and `mu` (coordinates in `K`).
/// `reduced`: `octonions`, `gamma` (three entries).
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstructionBlock {
    pub kind: Spanned<ConstructionKind>,
    pub algebra: Option<FirstAlgebra>,
    pub lambda: Option<Rat>,
    /// Image of the generator `x` under the cyclic automorphism, in power-basis coordinates.
    pub rho: Option<Vec<Rat>>,
    /// A single value for cyclic algebras, three for the reduced construction.
    pub gamma: Option<Spanned<toml::Value>>,
    pub corruption: Option<AdjointCorruption>,
    pub u_diag: Option<Vec<Rat>>,
    pub mu: Option<Vec<Rat>>,
    pub octonions: Option<OctonionAlgebra>,
}

impl ConstructionBlock {
    /// Keys that are set but not used by `kind`.
    pub fn stray_keys(&self) -> Vec<&'static str> {
        let k = *self.kind.get_ref();
        let mut out = Vec::new();
        let allowed = |name: &str| match k {
            ConstructionKind::First => matches!(name, "algebra" | "lambda" | "rho" | "gamma" | "corruption"),
            ConstructionKind::FirstProcessOnL => name == "lambda",
            ConstructionKind::Second => matches!(name, "u_diag" | "mu"),
            ConstructionKind::Reduced => matches!(name, "octonions" | "gamma"),
        };
        let present = [
            ("algebra", self.algebra.is_some()),
            ("lambda", self.lambda.is_some()),
            ("rho", self.rho.is_some()),
            ("gamma", self.gamma.is_some()),
            ("corruption", self.corruption.is_some()),
            ("u_diag", self.u_diag.is_some()),
            ("mu", self.mu.is_some()),
            ("octonions", self.octonions.is_some()),
        ];
        for (name, set) in present {
            if set && !allowed(name) {
                out.push(name);
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Deserialize, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteName {
    Algebra,
    Axioms,
    Adjoint,
    UOperator,
    Extension,
    Kernel,
    Bridge,
    Yanchevskii,
    Chi,
    Paths,
}

impl SuiteName {
    pub const ALL: [SuiteName; 10] = [
        SuiteName::Algebra,
        SuiteName::Axioms,
        SuiteName::Adjoint,
        SuiteName::UOperator,
        SuiteName::Extension,
        SuiteName::Kernel,
        SuiteName::Bridge,
        SuiteName::Yanchevskii,
        SuiteName::Chi,
        SuiteName::Paths,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SuiteName::Algebra => "algebra",
            SuiteName::Axioms => "axioms",
            SuiteName::Adjoint => "adjoint",
            SuiteName::UOperator => "u-operator",
            SuiteName::Extension => "extension",
            SuiteName::Kernel => "kernel",
            SuiteName::Bridge => "bridge",
            SuiteName::Yanchevskii => "yanchevskii",
            SuiteName::Chi => "chi",
            SuiteName::Paths => "paths",
        }
    }

    pub fn parse(s: &str) -> Option<SuiteName> {
        Self::ALL.into_iter().find(|n| n.as_str() == s)
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunBlock {
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_samples")]
    pub samples: usize,
    /// Empty means every suite that applies to the construction.
    #[serde(default)]
    pub suites: Vec<SuiteName>,
}

fn default_samples() -> usize {
    200
}

impl Default for RunBlock {
    fn default() -> Self {
        RunBlock {
            seed: 0,
            samples: default_samples(),
            suites: Vec::new(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PathKindName {
    UPath,
    Hermitian,
    Normal,
    IsometryCorrection,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InterpolationName {
    ToBasePoint,
    ToZero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PsiSource {
    /// `U_a U_{a^{-1}}` along the U-path of `(a, a^{-1})`.
    UProduct,
    /// The normal-element path.
    Normal,
    /// The U-path of the configured elements.
    UPath,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathBlock {
    /// Full coordinate vectors for the U-path.
    pub elements: Option<Vec<Vec<Rat>>>,
    /// Diagonal shorthands `[a1, a2, a3]` for the U-path.
    pub diagonals: Option<Vec<Vec<Rat>>>,
    pub interpolation: Option<InterpolationName>,
    /// Rational diagonal of the hermitian element `s`.
    pub s_diag: Option<Vec<Rat>>,
    /// Diagonal of `z` as `K`-coordinates per entry.
    pub z_diag: Option<Vec<Vec<Rat>>>,
    pub psi: Option<PsiSource>,
    /// Interior parameters to evaluate.
    pub sample_t: Option<Vec<Rat>>,
    /// Declare `2 * identity` as the end point.
    #[serde(default)]
    pub corrupt_end: bool,
}

pub struct Source<'a> {
    text: &'a str,
}

impl<'a> Source<'a> {
    pub fn new(text: &'a str) -> Self {
        Source { text }
    }

    pub fn line_of(&self, offset: usize) -> usize {
        self.text[..offset.min(self.text.len())].matches('\n').count() + 1
    }

    pub fn error<T>(&self, span: std::ops::Range<usize>, message: impl Into<String>) -> Result<T, ConfigError> {
        Err(ConfigError {
            line: Some(self.line_of(span.start)),
            message: message.into(),
        })
    }

    pub fn rational(&self, r: &Rat) -> Result<Q, ConfigError> {
        parse_q(r.get_ref()).map_err(|e| ConfigError {
            line: Some(self.line_of(r.span().start)),
            message: e.to_string(),
        })
    }

    pub fn rationals(&self, rs: &[Rat]) -> Result<Vec<Q>, ConfigError> {
        rs.iter().map(|r| self.rational(r)).collect()
    }

    /// A rational given as a string, or a list of them.
    pub fn value_rationals(&self, v: &Spanned<toml::Value>) -> Result<Vec<Q>, ConfigError> {
        let fail = |m: String| ConfigError {
            line: Some(self.line_of(v.span().start)),
            message: m,
        };
        let one = |x: &toml::Value| match x {
            toml::Value::String(s) => parse_q(s).map_err(|e| fail(e.to_string())),
            other => Err(fail(format!("expected a rational string such as \"3/4\", got {other}"))),
        };
        match v.get_ref() {
            toml::Value::Array(xs) => xs.iter().map(one).collect(),
            x => Ok(vec![one(x)?]),
        }
    }

    pub fn rationals_n<const N: usize>(&self, rs: &[Rat], what: &str) -> Result<[Q; N], ConfigError> {
        let v = self.rationals(rs)?;
        let n = v.len();
        v.try_into().map_err(|_| ConfigError {
            line: rs.first().map(|r| self.line_of(r.span().start)),
            message: format!("{what} needs {N} entries, got {n}"),
        })
    }
}

pub fn parse_config(text: &str) -> Result<AlgebraSpecConfig, ConfigError> {
    toml::from_str::<AlgebraSpecConfig>(text).map_err(|e| {
        let line = e.span().map(|s| Source::new(text).line_of(s.start));
        ConfigError {
            line,
            message: e.message().to_string(),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_minimal_reduced() {
        let text = r#"
[field]
kind = "rationals"

[construction]
kind = "reduced"
octonions = { kind = "zorn" }
gamma = ["1", "1", "1"]
"#;
        let c = parse_config(text).unwrap();
        assert_eq!(c.run.samples, 200);
        assert_eq!(c.run.seed, 0);
        assert_eq!(*c.construction.kind.get_ref(), ConstructionKind::Reduced);
    }

    #[test]
    fn line_anchored_errors() {
        let text = "[field]\nkind = \"rationals\"\n\n[construction]\nkind = \"bogus\"\n";
        let e = parse_config(text).unwrap_err();
        assert_eq!(e.line, Some(5), "{e}");
        let text = "[field]\nkind = \"rationals\"\n[construction]\nkind = \"first-process-on-L\"\nlambda = \"x/2\"\n";
        let c = parse_config(text).unwrap();
        let err = Source::new(text).rational(c.construction.lambda.as_ref().unwrap()).unwrap_err();
        assert_eq!(err.line, Some(5));
    }
}
