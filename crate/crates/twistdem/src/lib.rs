//! File formats, verification suites and the command-line front end for
//! `twistdem-core`.

pub mod json;
pub mod suite;
