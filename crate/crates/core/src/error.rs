use thiserror::Error;

/// Errors produced by the library.
///
/// Property failures are not errors: checks return reports or booleans, and
/// only malformed input or violated preconditions end up here.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsqError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("unknown element id {id} (semigroup has {size} elements)")]
    UnknownElement { id: usize, size: usize },
    #[error("not an inverse semigroup: {0}")]
    NotInverseSemigroup(String),
    #[error("subset is not closed: {0}")]
    NotClosed(String),
    #[error("the empty set does not generate an inverse semigroup")]
    EmptyGenerators,
    #[error("subsemigroup is not normal")]
    NotNormal,
    #[error("subsemigroup is not Clifford")]
    NotClifford,
    #[error("subsemigroup is not upward closed")]
    NotUpwardClosed,
    #[error("not inductive: identities do not form a meet-semilattice")]
    NotInductive,
    #[error("no restriction of element {element} to identity {identity}")]
    NoRestriction { identity: usize, element: usize },
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("not a functor: {0}")]
    NotFunctor(String),
    #[error("functor is not star-injective")]
    NotStarInjective,
    #[error("functor is not surjective")]
    NotSurjective,
    #[error("not a congruence: {0}")]
    NotCongruence(String),
    #[error("invalid congruence pair: {0}")]
    InvalidPair(String),
    #[error("not a group")]
    NotGroup,
    #[error("size limit exceeded: {size} elements, limit {limit}")]
    SizeLimit { size: usize, limit: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = IsqError> = std::result::Result<T, E>;

impl From<serde_json::Error> for IsqError {
    fn from(e: serde_json::Error) -> Self {
        IsqError::Parse(e.to_string())
    }
}
