use alloc::string::String;

use crate::construction::TargetViolation;

/// Errors raised by every operation in this crate.
///
/// Each variant has a stable name (see [`Error::name`]) that front ends
/// print verbatim.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyInput,
    #[error("generators must be positive integers")]
    NonPositiveGenerator,
    #[error("generators have gcd {gcd}, so the complement is infinite")]
    NotCofinite { gcd: u64 },
    #[error("{value} is not an element of the monoid")]
    NotAnElement { value: i64 },
    #[error("integer overflow while {context}")]
    Overflow { context: &'static str },
    #[error("modulus {modulus} exceeds the residue table limit {limit}")]
    TooLarge { modulus: u64, limit: u64 },
    #[error("factorization vectors have {left} and {right} coordinates")]
    DimensionMismatch { left: usize, right: usize },
    #[error("element {element} has more than {cap} factorizations")]
    ExplosionGuard { element: u64, cap: usize },
    #[error("window end {window_end} must be at least frobenius + 1 = {minimum}")]
    WindowTooSmall { window_end: u64, minimum: i64 },
    #[error("lcm(d1, d2) = {lcm} does not lie in both d1·S1 and d2·S2")]
    NotAGluing { lcm: u64 },
    #[error("scale {c} must exceed the base catenary degree {base_catenary}")]
    CatenaryTooSmall { c: u64, base_catenary: u64 },
    #[error("gcd({b}, {c}) = {gcd}, expected 1")]
    NotCoprime { b: u64, c: u64, gcd: u64 },
    #[error("{b} is a minimal generator of the base monoid")]
    RedundantGenerator { b: u64 },
    #[error("shortest factorization of {b} has length {length}, which exceeds {c}")]
    LengthExceedsScale { b: u64, c: u64, length: u64 },
    #[error("invalid target set: {0}")]
    InvalidTarget(TargetViolation),
    #[error("explicit b = {b} rejected for c = {c}: {reason}")]
    BadExplicitB { b: u64, c: u64, reason: String },
    #[error("explicit b list has {given} entries but {needed} are required")]
    BadExplicitBCount { given: usize, needed: usize },
    #[error("no admissible b found for c = {c}")]
    NoAdmissibleB { c: u64 },
    #[error("no monoid with catenary set {{0, 2, {c}}} found in the search space")]
    BaseCaseSearchExhausted { c: u64 },
    #[error("oracle cap exceeded: {what}")]
    CapExceeded { what: &'static str },
}

impl Error {
    /// Stable identifier for this error kind.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyInput => "EmptyInput",
            Error::NonPositiveGenerator => "NonPositiveGenerator",
            Error::NotCofinite { .. } => "NotCofinite",
            Error::NotAnElement { .. } => "NotAnElement",
            Error::Overflow { .. } => "Overflow",
            Error::TooLarge { .. } => "TooLarge",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::ExplosionGuard { .. } => "ExplosionGuard",
            Error::WindowTooSmall { .. } => "WindowTooSmall",
            Error::NotAGluing { .. } => "NotAGluing",
            Error::CatenaryTooSmall { .. } => "CatenaryTooSmall",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::RedundantGenerator { .. } => "RedundantGenerator",
            Error::LengthExceedsScale { .. } => "LengthExceedsScale",
            Error::InvalidTarget(_) => "InvalidTarget",
            Error::BadExplicitB { .. } | Error::BadExplicitBCount { .. } => "BadExplicitB",
            Error::NoAdmissibleB { .. } => "NoAdmissibleB",
            Error::BaseCaseSearchExhausted { .. } => "BaseCaseSearchExhausted",
            Error::CapExceeded { .. } => "CapExceeded",
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
