//! Exact combinatorics of the toric arrangement defined by a crystallographic
//! root system.
//!
//! The crate is organised bottom-up:
//!
//! - [`intlat`]: integer lattices (Smith and Hermite normal forms, saturation,
//!   quotient torsion).
//! - [`rootsys`]: root systems, Cartan matrices, affine Dynkin diagrams and the
//!   per-type tables (degrees, marks).
//! - [`weyl`]: the Weyl group acting by permutations on the roots.
//! - [`subsys`]: subsystems, completion, and the complete subsystems `K_d`.
//! - [`layers`]: point and layer counts, censuses, Euler characteristic and
//!   Poincaré polynomial of the complement.
//! - [`oracle`]: brute-force enumeration used to cross-check [`layers`].
//! - [`verify`]: the formula-versus-oracle suite for a single type.
//!
//! All arithmetic is exact.

pub mod config;
pub mod error;
pub mod intlat;
pub mod layers;
pub mod oracle;
pub mod partitions;
pub mod poly;
pub mod rootsys;
pub mod subsys;
pub mod verify;
pub mod weyl;

pub use config::Capabilities;
pub use error::{Error, Result};
pub use poly::IntPolynomial;
pub use rootsys::{Family, ProductType, RootSystem, TypeSymbol};
