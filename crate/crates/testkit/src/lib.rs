//! Reference oracles for the statlab test suites.
//!
//! Nothing here depends on `statlab-core`: every routine is a slow but
//! straightforward evaluation (quadrature, recurrences, brute-force sums)
//! so that it can check the engine without sharing its code paths.

pub mod fuzz;
pub mod gen;
pub mod golden;
pub mod html;
pub mod oracle;
pub mod quad;
