use alloc::string::String;
use core::fmt;

/// Errors raised by the algebraic and numerical kernels.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// `s < 0` or `k < 1`.
    InvalidSurface {
        s: i64,
        k: i64,
    },
    /// Two words (or a word and a presentation) live over different generator sets.
    AlphabetMismatch,
    InvalidExponent(i8),
    GeneratorOutOfRange {
        index: u32,
        rank: u32,
    },
    UnknownLabel(String),
    MissingPermutation(String),
    InvalidPermutation(String),
    /// The permutation action has more than one orbit.
    DisconnectedCover {
        orbit: usize,
        sheets: usize,
    },
    /// The relator does not act trivially on the sheets.
    NotACovering,
    NotSubgroupElement {
        coset: usize,
    },
    /// The covering's subgroup is not mapped to itself by the involution.
    NotInvolutionStable,
    SheetOutOfRange {
        sheet: usize,
        sheets: usize,
    },
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    MissingImage(String),
    NotUnitary {
        generator: String,
        residual: f64,
    },
    NotSignature {
        index: usize,
        residual: f64,
    },
    /// A signature matrix is not preserved by the boundary loop it belongs to.
    IncompatibleSignature {
        index: usize,
        residual: f64,
    },
    ExtensionInconsistent {
        check: String,
        residual: f64,
    },
    /// A rewritten relator of the covering does not evaluate to the identity.
    InconsistentSubgroupRep {
        relator: String,
        residual: f64,
    },
    TransportInconsistency {
        component: usize,
        sheet: usize,
        residual: f64,
    },
    InvalidRadius(f64),
    InvalidSheetCount(i64),
    Undersampled {
        samples: usize,
        required: usize,
    },
    SamplesNotPowerOfTwo(usize),
    /// The section multiplier exponent disagrees with the core-loop phase.
    MultiplierMismatch {
        exponent: f64,
        phase: f64,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidSurface { s, k } => {
                write!(f, "invalid surface: genus {s} and {k} boundary components (need s >= 0, k >= 1)")
            }
            Error::AlphabetMismatch => f.write_str("words are over different generator sets"),
            Error::InvalidExponent(e) => write!(f, "letter exponent {e} is not ±1"),
            Error::GeneratorOutOfRange { index, rank } => {
                write!(f, "generator index {index} out of range for {rank} generators")
            }
            Error::UnknownLabel(l) => write!(f, "unknown generator label `{l}`"),
            Error::MissingPermutation(g) => write!(f, "no permutation given for generator {g}"),
            Error::InvalidPermutation(msg) => write!(f, "invalid permutation: {msg}"),
            Error::DisconnectedCover { orbit, sheets } => {
                write!(f, "disconnected cover: orbit of sheet 1 has {orbit} of {sheets} sheets")
            }
            Error::NotACovering => f.write_str("not a covering of this surface: relator image is not the identity"),
            Error::NotInvolutionStable => write!(f, "subgroup is not stable under the involution"),
            Error::NotSubgroupElement { coset } => {
                write!(f, "not a subgroup element: word ends in coset {}", coset + 1)
            }
            Error::SheetOutOfRange { sheet, sheets } => {
                write!(f, "sheet {} out of range 1..={sheets}", sheet + 1)
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::MissingImage(g) => write!(f, "representation has no image for {g}"),
            Error::NotUnitary { generator, residual } => {
                write!(f, "image of {generator} is not unitary (residual {residual:e})")
            }
            Error::NotSignature { index, residual } => {
                write!(f, "J_{index} is not a signature matrix (residual {residual:e})")
            }
            Error::IncompatibleSignature { index, residual } => {
                write!(f, "J_{index} is not preserved by its boundary loop (residual {residual:e})")
            }
            Error::ExtensionInconsistent { check, residual } => {
                write!(f, "extension inconsistent: {check} residual {residual:e}")
            }
            Error::InconsistentSubgroupRep { relator, residual } => {
                write!(f, "subgroup representation violates rewritten relator {relator} (residual {residual:e})")
            }
            Error::TransportInconsistency { component, sheet, residual } => write!(
                f,
                "transport inconsistency on boundary component {component}, sheet {}: residual {residual:e}",
                sheet + 1
            ),
            Error::InvalidRadius(r) => write!(f, "inner radius {r} must lie in (0, 1)"),
            Error::InvalidSheetCount(n) => write!(f, "sheet count {n} must be at least 1"),
            Error::Undersampled { samples, required } => {
                write!(f, "undersampled: {samples} samples, need at least {required}")
            }
            Error::SamplesNotPowerOfTwo(n) => write!(f, "sample count {n} is not a power of two"),
            Error::MultiplierMismatch { exponent, phase } => {
                write!(f, "multiplier exponent {exponent} does not match core-loop phase {phase}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
