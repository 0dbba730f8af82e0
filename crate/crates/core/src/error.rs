use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Signature is too short or carries a forbidden entry.
    InvalidSignature(&'static str),
    /// Matrix or vector dimensions do not fit the operation.
    Shape {
        expected: usize,
        found: usize,
    },
    NotSquare {
        rows: usize,
        cols: usize,
    },
    /// Ambient vector is not a point of the lattice `L_d`.
    NotInLattice,
    /// The cyclic reduction did not settle within its iteration guard.
    ReductionFailure,
    /// The generators do not span a finite-index sublattice.
    InfiniteQuotient,
    /// Point is not on the affine slice `Σx = 1 + … + (d+1)`.
    OffSlice,
    NotTilingVertex,
    /// Facet list repeats a vertex inside a facet or repeats a facet.
    NotSimplicial {
        facet: usize,
        reason: &'static str,
    },
    UnsupportedDimension {
        dimension: usize,
    },
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    NotAnAutomorphism,
    /// The alternating walk hit a vertex where the requested move is not an edge.
    InvalidMove {
        step: usize,
    },
    UnknownLabel,
    Overflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidSignature(why) => write!(f, "invalid signature: {why}"),
            Error::Shape { expected, found } => {
                write!(f, "shape error: expected length {expected}, found {found}")
            }
            Error::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            Error::NotInLattice => write!(f, "vector is not in the lattice"),
            Error::ReductionFailure => {
                write!(f, "reduction to a fundamental vector did not terminate")
            }
            Error::InfiniteQuotient => {
                write!(f, "quotient is infinite (rank deficient generators)")
            }
            Error::OffSlice => write!(f, "point is off the affine slice"),
            Error::NotTilingVertex => write!(f, "not a vertex of the permutahedral tiling"),
            Error::NotSimplicial { facet, reason } => {
                write!(f, "not simplicial at facet {facet}: {reason}")
            }
            Error::UnsupportedDimension { dimension } => {
                write!(f, "unsupported dimension {dimension}")
            }
            Error::CapExceeded { what, size, cap } => {
                write!(f, "{what} size {size} exceeds cap {cap}")
            }
            Error::NotAnAutomorphism => write!(f, "map is not a graph automorphism"),
            Error::InvalidMove { step } => {
                write!(f, "alternating move is not an edge at step {step}")
            }
            Error::UnknownLabel => write!(f, "unknown label"),
            Error::Overflow => write!(f, "integer overflow"),
        }
    }
}

impl core::error::Error for Error {}
