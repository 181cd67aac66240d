//! Vertex-transitive polyhedral maps under the tetrahedral rotation group:
//! orbit-symbol enumeration, geometric isomorphism, exact realizability checks.

pub mod candmap;
pub mod cli;
pub mod enumerate;
pub mod geometry;
pub mod geomiso;
pub mod realize;
pub mod rotgroup;
