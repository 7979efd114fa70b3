use thiserror::Error;

/// Failure modes shared across the crate.
///
/// Bound errors are cost guards, not correctness limits: callers that accept
/// the runtime may re-invoke the `_with_bound`/forced variants.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("{operation} is limited to n <= {bound}, got n = {n}")]
    BoundExceeded {
        operation: &'static str,
        n: usize,
        bound: usize,
    },
    #[error("tuple contains repeated secants")]
    RepeatedSecants,
    #[error("tuple must contain at least 2 secants, got {0}")]
    TupleTooSmall(usize),
    #[error("not a maximal forbidden-triple-free set: {0}")]
    NotAMsaft(&'static str),
    #[error("no injective right-neighbor map: family {family} -> {next} admits no matching")]
    NoWalk { family: usize, next: usize },
    #[error("right-neighbor map not unique: family {family} -> {next} admits two matchings")]
    AmbiguousWalk { family: usize, next: usize },
    #[error("input set of Msafts is not closed under the dihedral action")]
    NotActionClosed,
    #[error("the zero polynomial has no leading monomial")]
    ZeroPolynomial,
    #[error("path never touches the reflection line y = {line}")]
    NoBoundaryTouch { line: i64 },
}
