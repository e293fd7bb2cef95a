//! Structure-constant engine for finite-dimensional real algebras: identity
//! checks, imaginary-unit loci, reflection decompositions and the Lie
//! algebras of commutators.

pub mod algebra;
pub mod catalog;
pub mod claims;
pub mod error;
pub mod identities;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod sampling;
pub mod scalar;
pub mod structure;
pub mod units;

pub use algebra::{Algebra, Element, MulOperator, QAlgebra, ScalarMode, Side};
pub use error::{Error, Result};
pub use identities::{check_identity, IdentityContext, IdentityKind, IdentityReport, Witness};
pub use lie::{classify_lie, classify_tp_lie, LieAlgebra, LieClassification, LieType};
pub use scalar::{q, Rational, Scalar};
pub use structure::{check_isomorphism, classify_middle_c, reflection_decompose, LinearMap, MiddleCClass};
pub use units::{units_of, LocusKind, UnitLocus};
