//! Exact integer toolkit for Brill-Noether numbers, secant varieties of
//! linear series on general curves, de Jonquieres divisor dimensions and
//! limit linear series on two-component curves.
//!
//! ```
//! use secant_core::secant::{classify, SecantProblem, VerdictTag};
//!
//! let p = SecantProblem::from_tuple(12, 5, 15, 4, 1).unwrap();
//! assert_eq!(classify(&p).tag, VerdictTag::EmptyThm1i);
//! ```

pub mod bn;
pub mod cli;
pub mod dejonq;
pub mod error;
pub mod limit_series;
pub mod oracle;
pub mod report;
pub mod secant;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
