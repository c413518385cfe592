//! Combinatorics of flag varieties and reductive groups.
//!
//! The crate starts from a generalized Cartan matrix and builds everything
//! that can be computed exactly from it:
//!
//! - [`cartan`]: validation, finite-type test, symmetrizer, Dynkin
//!   classification and the Bourbaki catalog.
//! - [`roots`]: the finite root system with coroots, root strings and
//!   length classes.
//! - [`weyl`]: the Weyl group as permutations of the roots, reduced words,
//!   the longest element, reflections and the Poincaré polynomial.
//! - [`bottsam`]: graded weight pushforward along Bott–Samelson words.
//! - [`charformula`]: the shifted Euler characteristic, Weyl dimension
//!   formula and volume polynomial.
//! - [`rootdata`]: pinned root data, the lattices between the root and
//!   weight lattices, pinned isomorphisms.
//! - [`isogeny`]: p-morphisms of pinned root data and special isogenies.
//! - [`chevalley`]: structure constants from root strings and the
//!   short-root ideal checks.
//! - [`cli`]: the JSON front end used by the `flagrec` binary.
//!
//! Cartan matrices follow `C[i][j] = ⟨α_i, α_j∨⟩`; see [`cartan`] for the
//! convention and the catalog numbering. Simple-root indices are 0-based in
//! the library and 1-based on the command line.

pub mod bottsam;
pub mod cartan;
pub mod charformula;
pub mod chevalley;
pub mod cli;
mod error;
pub mod isogeny;
pub mod linalg;
pub mod rootdata;
pub mod roots;
pub mod weyl;

pub use cartan::{catalog, classify, is_finite_type, symmetrizer, DynkinType, Family, Gcm};
pub use error::Error;
pub use roots::{RootSystem, WeightVector};
pub use weyl::{WeylElement, WeylGroup};
