//! Exact computation of higher symplectic capacities of four-dimensional
//! convex toric domains.
//!
//! The crate builds the filtered DGLA `V_Ω` on generators `α_{i,j}`, `β_{i,j}`,
//! transfers it to its homology `𝕂⟨A₁, A₂, …⟩` for ellipsoids, and evaluates the
//! resulting structure coefficients, capacities, barcodes and embedding obstructions.
//! All arithmetic is over ℚ with an exact infinitesimal tie-breaker.
//!
//! ```
//! use symcap::invariants::s_d;
//! use symcap::scalar::int;
//! use symcap::canonical::Constants;
//!
//! let s4 = s_d(4, &int(100), Constants::Geometric).unwrap();
//! assert_eq!(s4, int(26));
//! ```

pub mod canonical;
pub mod dgla;
pub mod error;
pub mod invariants;
pub mod scalar;
pub mod toric;

pub use error::{Error, Result};
pub use scalar::{PerturbedScalar, Rational};
pub use toric::{LatticePair, ToricDomain};
