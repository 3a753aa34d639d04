//! File formats, DOT export, verification suites and the command-line
//! front end for `quiver-hh-core`.

pub mod app;
pub mod dot;
pub mod json;
pub mod suite;
