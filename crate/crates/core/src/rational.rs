//! Exact rational scalars.
//!
//! Everything in the crate is computed over `Q`, an arbitrary-precision
//! rational. The helpers here cover construction, parsing of the `"p/q"`
//! text form used by configs and reports, and a few predicates.

use std::str::FromStr;

use malachite_base::num::arithmetic::traits::Reciprocal;
use malachite_base::num::basic::traits::{One, Zero};
use malachite_nz::integer::Integer;

use crate::error::CoreError;

pub use malachite_q::Rational as Q;

/// Integer-valued rational.
pub fn q(n: i64) -> Q {
    Q::from(n)
}

/// The rational `n/d`. Panics if `d == 0`.
pub fn qr(n: i64, d: i64) -> Q {
    assert!(d != 0, "zero denominator");
    Q::from_signeds(n, d)
}

pub fn zero() -> Q {
    Q::ZERO
}

pub fn one() -> Q {
    Q::ONE
}

/// Multiplicative inverse, `None` for zero.
pub fn recip(x: &Q) -> Option<Q> {
    if *x == Q::ZERO {
        None
    } else {
        Some(x.reciprocal())
    }
}

/// Parses `"p"`, `"-p"`, or `"p/q"` (whitespace around the slash allowed).
pub fn parse_q(text: &str) -> Result<Q, CoreError> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(CoreError::Parse(format!("empty rational literal {text:?}")));
    }
    if let Some((num, den)) = cleaned.split_once('/') {
        let n = Integer::from_str(num)
            .map_err(|_| CoreError::Parse(format!("bad numerator in {text:?}")))?;
        let d = Integer::from_str(den)
            .map_err(|_| CoreError::Parse(format!("bad denominator in {text:?}")))?;
        if d == Integer::ZERO {
            return Err(CoreError::Parse(format!("zero denominator in {text:?}")));
        }
        Ok(Q::from_integers(n, d))
    } else {
        Integer::from_str(&cleaned)
            .map(Q::from)
            .map_err(|_| CoreError::Parse(format!("bad rational literal {text:?}")))
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn fmt_q(x: &Q) -> String {
    x.to_string()
}

pub fn is_integer(x: &Q) -> bool {
    x.to_denominator() == 1u32
}

/// Integer value if `x` is an integer that fits an `i64`.
pub fn to_i64(x: &Q) -> Option<i64> {
    if !is_integer(x) {
        return None;
    }
    i64::try_from(&Integer::try_from(x).ok()?).ok()
}

/// `x^n` for a non-negative exponent.
pub fn pow(x: &Q, n: u32) -> Q {
    let mut out = Q::ONE;
    for _ in 0..n {
        out *= x;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_q("3/6").unwrap(), qr(1, 2));
        assert_eq!(parse_q(" -7 ").unwrap(), q(-7));
        assert_eq!(parse_q("4 / -8").unwrap(), qr(-1, 2));
        assert_eq!(fmt_q(&qr(-3, 9)), "-1/3");
        assert_eq!(fmt_q(&q(5)), "5");
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("abc").is_err());
        assert!(parse_q("").is_err());
    }

    #[test]
    fn integer_helpers() {
        assert!(is_integer(&q(4)));
        assert!(!is_integer(&qr(1, 3)));
        assert_eq!(to_i64(&q(-12)), Some(-12));
        assert_eq!(to_i64(&qr(1, 2)), None);
        assert_eq!(pow(&qr(2, 3), 3), qr(8, 27));
        assert_eq!(recip(&qr(-2, 5)), Some(qr(-5, 2)));
        assert_eq!(recip(&zero()), None);
    }
}
