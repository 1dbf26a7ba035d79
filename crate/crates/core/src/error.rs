use thiserror::Error;

use crate::arc::Arc;
use crate::cotorsion::PairReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n must be at least 1, got {0}")]
    InvalidParams(i64),

    #[error("degenerate pair ({0},{0}): endpoints must differ")]
    DegeneratePair(i64),

    #[error("arc {arc} is not {n}-admissible")]
    NonAdmissible { arc: Arc, n: i64 },

    #[error("Ext degree must be at least 1, got {0}")]
    InvalidDegree(i64),

    #[error("Ext^1({x}, {y}) vanishes, there is no extension triangle")]
    NoExtension { x: Arc, y: Arc },

    #[error("invalid window {lo}..{hi}: need lo < hi")]
    InvalidWindow { lo: i64, hi: i64 },

    #[error("window {lo}..{hi} too small: it must cover {need_lo}..{need_hi}")]
    WindowTooSmall {
        lo: i64,
        hi: i64,
        need_lo: i64,
        need_hi: i64,
    },

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("operation needs a finite arc set, but the set has {0} families")]
    UnsupportedFamilies(usize),

    #[error("arcs {0} and {1} cross, dividers must be pairwise non-crossing")]
    CrossingDividers(Arc, Arc),

    #[error("arc {arc} is incompatible with the divider set: {reason}")]
    IncompatibleArc { arc: Arc, reason: &'static str },

    #[error("rotation of {arc} produced {image}, which is not admissible or meets a divider")]
    NonAdmissibleImage { arc: Arc, image: Arc },

    #[error("divider {0} is not in the frame of the set")]
    DNotInFrame(Arc),

    #[error("divider {0} is not in the core of the pair")]
    DNotInCore(Arc),

    #[error("family {family} cannot be rotated in closed form: {reason}")]
    UnsupportedFamilyGeometry { family: String, reason: String },

    #[error("triangle route disagrees with rotation for {arc} -> {image}: {reason}")]
    TriangleMismatch {
        arc: Arc,
        image: Arc,
        reason: String,
    },

    #[error("rigidity tests disagree on {0} and {1}")]
    RigidityDisagreement(Arc, Arc),

    #[error("the input pair is not window-certified (use --force to mutate anyway)")]
    PairNotCertified(Box<PairReport>),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("validation error at {locus}: {message}")]
    Validation { locus: String, message: String },
}
