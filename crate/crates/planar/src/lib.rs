//! File formats, random inputs, check suites and the command-line front end
//! for `planar-core`.

pub mod cli;
pub mod io;
pub mod random;
pub mod report;
pub mod sweep;
pub mod verify;
