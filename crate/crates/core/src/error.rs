use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `value` is not prime; `factor` is a nontrivial divisor (0 and 1 report themselves).
    NotPrime { value: u64, factor: u64 },
    /// Modulus has a monic factor of positive degree below its own degree.
    ReducibleModulus { factor: Vec<u32> },
    InvalidModulus(String),
    EmptyProduct,
    TooLarge { order: u64, limit: u64 },
    ZeroExponent,
    NotAField,
    ZeroElement,
    Parse(String),
    InvalidIdeal(String),
    /// Ideal, primality or incomparability axiom failed; the message carries a witness.
    Validation(String),
    NotAComponent(String),
    OutOfDomain(String),
    WindowTooSmall { radius: i64, suggested: i64 },
    InvalidWindow(String),
    MalformedSweep(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime { value, factor } => {
                if value == factor {
                    write!(f, "{value} is not prime")
                } else {
                    write!(f, "{value} is not prime: divisible by {factor}")
                }
            }
            Error::ReducibleModulus { factor } => {
                write!(f, "modulus is reducible: divisible by ")?;
                crate::ring::write_poly(f, factor)
            }
            Error::InvalidModulus(msg) => write!(f, "invalid modulus: {msg}"),
            Error::EmptyProduct => f.write_str("a product ring needs at least one factor"),
            Error::TooLarge { order, limit } => {
                write!(f, "ring order {order} exceeds the limit {limit}")
            }
            Error::ZeroExponent => f.write_str("exponent must be at least 1"),
            Error::NotAField => f.write_str("operation requires a field"),
            Error::ZeroElement => f.write_str("element must be nonzero"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::InvalidIdeal(msg) => write!(f, "invalid ideal: {msg}"),
            Error::Validation(msg) => write!(f, "validation failed: {msg}"),
            Error::NotAComponent(msg) => write!(f, "not a component: {msg}"),
            Error::OutOfDomain(msg) => write!(f, "outside the prediction's domain: {msg}"),
            Error::WindowTooSmall { radius, suggested } => write!(
                f,
                "radius {radius} does not contain the Bezout path from 0 to 1; use radius >= {suggested}"
            ),
            Error::InvalidWindow(msg) => write!(f, "invalid window: {msg}"),
            Error::MalformedSweep(msg) => write!(f, "malformed sweep: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
