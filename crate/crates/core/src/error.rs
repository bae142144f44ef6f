use alloc::string::String;
use core::fmt;

use crate::numbers::System;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two operands (numbers, points, lines, sets) belong to different systems.
    SystemMismatch { left: System, right: System },
    /// Division by, or inversion of, a zero divisor.
    NonInvertible(String),
    /// A functional was requested on a system it is not defined for.
    WrongFunctional { system: System, functional: &'static str },
    /// A parameter is outside the range an operation accepts.
    InvalidParameter(String),
    /// An exponent argument lies outside `0 ≤ α < κ`.
    OutOfRange(String),
    /// Text could not be parsed.
    Parse(String),
    /// A configured desk-scale cap was exceeded.
    CapExceeded { what: &'static str, limit: usize, actual: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SystemMismatch { left, right } => {
                write!(f, "system mismatch: {left} vs {right}")
            }
            Error::NonInvertible(what) => write!(f, "non-invertible element: {what}"),
            Error::WrongFunctional { system, functional } => {
                write!(f, "functional {functional} is not defined for {system} numbers")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::OutOfRange(msg) => write!(f, "out of range: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::CapExceeded { what, limit, actual } => {
                write!(f, "{what} = {actual} exceeds the configured cap {limit}")
            }
        }
    }
}

impl core::error::Error for Error {}
