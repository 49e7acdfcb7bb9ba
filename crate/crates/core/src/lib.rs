//! Exact decision procedures for pure simplicial complexes: reduced homology
//! over ℚ and GF(p), Cohen-Macaulayness and depth via Reisner's criterion,
//! minimal Cohen-Macaulay detection, shellability and shelled-over
//! decompositions, and f-ideal checks for squarefree monomial ideals.
//!
//! Faces are 64-bit vertex masks, so complexes live on at most 64 vertices.

pub mod cm;
pub mod complex;
pub mod error;
pub mod face;
pub mod fideal;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod bundled;
pub mod shelling;
pub mod suite;

pub use cm::{depth, is_cm, is_minimal_cm, CmReport, CmWitness};
pub use complex::{Complex, FVector};
pub use error::{Error, Result};
pub use face::Face;
pub use fideal::{Clutter, FCheckReport};
pub use homology::{is_acyclic, reduced_homology, FieldSpec, HomologyProfile};
pub use shelling::{SearchOutcome, ShelledOverCertificate, ShellingCertificate};
pub use suite::{paper_suite, SuiteReport};

/// Exact rationals used for ℚ-coefficient kernels.
pub type Rational = num_rational::BigRational;
/// ℚ as a [`linalg::FieldOps`] instance.
pub type RationalField = linalg::Native<Rational>;
/// Small exact rationals, adequate when entries stay bounded.
pub type SmallRational = num_rational::Rational64;
/// GF(p) with a runtime modulus.
pub type ModularField = linalg::PrimeField;
