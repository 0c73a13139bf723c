//! Error taxonomy shared by the whole pipeline.

use std::fmt;

/// Everything that can go wrong between raw Weierstrass data and a report.
///
/// Variants are grouped by pipeline stage; the CLI maps them onto its exit
/// codes (invalid data -> 3, non-reduced fibers -> 4, missing small
/// resolution -> 5, unsupported requests -> 6).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// gcd of two zero polynomials.
    BothZero,
    /// Square-free decomposition of the zero polynomial.
    ZeroPolynomial,
    /// Homogenization target below the actual degree.
    TargetDegreeTooSmall { degree: usize, target: usize },
    /// Discriminant vanishes identically: the generic fiber is not elliptic.
    NotAnEllipticSurface,
    /// deg f > 4 or deg g > 6.
    DegreeOverflow { which: &'static str, degree: usize, max: usize },
    /// v_f >= 4 and v_g >= 6 at the named place.
    RequiresMinimalModel { place: String },
    /// A valuation triple no Weierstrass model can produce.
    InvalidProfile { v_f: String, v_g: String, v_delta: u32 },
    /// Reduced fibers were required but these places carry starred ones.
    NonReducedFiber { places: Vec<String> },
    /// A fiber configuration violating per-surface sum chi = 12.
    InvalidConfiguration(String),
    /// Operation requires an existing small resolution.
    NoSmallResolution { obstructions: Vec<String> },
    /// Operation requires a projective small resolution.
    NotProjective { obstructions: Vec<String> },
    /// Kummer computation on a non-semistable configuration.
    NotSemistable { place: String },
    /// Condition counting is not defined for this pair type.
    UnsupportedPair { place: String, pair: String },
    /// Bad involution override (unknown place, wrong fiber type, conflict).
    InvalidInvolution(String),
    /// A proven identity failed at runtime; never silently reconciled.
    InternalInconsistency(String),
    /// Malformed rational literal.
    BadLiteral(String),
}

impl fmt::Display for Error {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BothZero => write!(out, "gcd of two zero polynomials is undefined"),
            Error::ZeroPolynomial => {
                write!(out, "square-free decomposition of the zero polynomial is undefined")
            }
            Error::TargetDegreeTooSmall { degree, target } => write!(
                out,
                "cannot homogenize a degree-{degree} polynomial to degree {target}"
            ),
            Error::NotAnEllipticSurface => {
                write!(out, "discriminant vanishes identically; generic fiber is not elliptic")
            }
            Error::DegreeOverflow { which, degree, max } => {
                write!(out, "{which} has degree {degree}, maximum allowed is {max}")
            }
            Error::RequiresMinimalModel { place } => write!(
                out,
                "Weierstrass model is non-minimal at {place} (v_f >= 4 and v_g >= 6)"
            ),
            Error::InvalidProfile { v_f, v_g, v_delta } => write!(
                out,
                "valuations (v_f, v_g, v_delta) = ({v_f}, {v_g}, {v_delta}) match no Weierstrass model"
            ),
            Error::NonReducedFiber { places } => {
                write!(out, "non-reduced fiber at {}", places.join(", "))
            }
            Error::InvalidConfiguration(msg) => write!(out, "invalid configuration: {msg}"),
            Error::NoSmallResolution { obstructions } => {
                write!(out, "no small resolution: {}", obstructions.join("; "))
            }
            Error::NotProjective { obstructions } => {
                write!(out, "small resolution is not projective: {}", obstructions.join("; "))
            }
            Error::NotSemistable { place } => {
                write!(out, "non-semistable fiber at {place}; Kummer invariants unsupported")
            }
            Error::UnsupportedPair { place, pair } => {
                write!(out, "condition count undefined for pair {pair} at {place}")
            }
            Error::InvalidInvolution(msg) => write!(out, "invalid involution: {msg}"),
            Error::InternalInconsistency(msg) => write!(out, "internal inconsistency: {msg}"),
            Error::BadLiteral(lit) => write!(out, "malformed rational literal {lit:?}"),
        }
    }
}

impl std::error::Error for Error {}
