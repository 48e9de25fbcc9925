//! Splitting, element splitting and es-splitting of binary matroids, with
//! certificate-producing minor search and exhaustive verification sweeps over
//! small binary gammoids.
//!
//! Every binary matroid here is stored as a canonical GF(2) representation
//! (reduced row-echelon form, zero rows dropped) together with element labels.
//! Binary gammoids are exactly the binary matroids with no `M(K4)` minor, and
//! are all graphic, so the census of small gammoids is generated from small
//! multigraphs.

pub mod catalog;
pub mod census;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod iso;
pub mod lifts;
pub mod matroid;
pub mod minor;
pub mod verifier;

pub use error::{Error, Result};
pub use gf2::{BitRow, Gf2Matrix, Rref};
pub use graph::{graph_isomorphic, graphic_witness, GraphCode, Multigraph};
pub use iso::{isomorphic, verify_bijection, Bijection};
pub use lifts::{element_splitting, es_splitting, splitting, SplitSpec};
pub use matroid::BinaryMatroid;
pub use minor::{has_minor, in_class_gk, is_binary_gammoid, MinorCertificate, Pattern};
pub use verifier::VerificationReport;
