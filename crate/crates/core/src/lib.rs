//! Computing with finite inverse semigroups: normal inverse subsemigroups,
//! the preorder `≤_N` and equivalence `≃_N` they induce, the quotient
//! ordered groupoid `S⫽N`, congruence pairs, and the factorization of
//! homomorphisms through star-injective functors.
//!
//! Partial bijections compose left to right: `x(fg) = (xf)g`. The domain
//! idempotent of `s` is `ss⁻¹` and its range idempotent is `s⁻¹s`.

pub mod builders;
pub mod checks;
pub mod congruence;
pub mod elemset;
pub mod error;
pub mod factorize;
pub mod green;
pub mod json;
pub mod limits;
pub mod munn;
pub mod normal;
pub mod ogroupoid;
pub mod partition;
pub mod pbij;
pub mod poly;
pub mod quotient;
pub mod semigroup;
pub mod suite;

pub use elemset::ElemSet;
pub use error::{IsqError, Result};
pub use partition::Partition;
pub use pbij::PartialBijection;
pub use semigroup::{Homomorphism, InverseSemigroup, RawTable};
