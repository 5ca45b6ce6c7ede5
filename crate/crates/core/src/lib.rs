//! Exact arithmetic for cubic norm structures built by the Tits processes,
//! their structure groups, and rational paths inside them.

pub mod algebra;
pub mod cubic;
pub mod error;
pub mod harness;
pub mod linalg;
pub mod maps;
pub mod paths;
pub mod poly;
pub mod rational;
pub mod sample;
pub mod scalar;
pub mod tits;
