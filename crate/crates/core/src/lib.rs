//! Filling sets of simple closed curves on punctured surfaces.
//!
//! The crate represents multicurves combinatorially (cyclic crossing sequences
//! plus rotation signs), certifies the k-filling property, evaluates the
//! lower and upper bounds on the size of k-filling sets, generates explicit
//! minimal fillings of punctured spheres and tori, and computes the hyperbolic
//! quantities attached to filling sets of systoles.

pub mod arrangement;
pub mod bounds;
pub mod constructions;
pub mod error;
pub mod hyperbolic;
pub mod oracle;
pub mod surface;

pub use arrangement::{
    are_homotopic, intersection_matrix, is_essential, reduce_bigons, region_adjacency_dot, restrict,
    restrict_with_map, trace_regions, validate_arrangement, verify_k_filling, Arrangement,
    BigonReduction, Crossing, FillingCertificate, IntersectionMatrix, Passage, Region,
    ValidationReport,
};
pub use bounds::{BoundReport, FormulaId};
pub use error::{Error, Result};
pub use surface::SurfaceSig;
