//! Finite transit functions, their betweenness axioms and the convexities
//! they generate, together with the classical graph transit functions and
//! an exhaustive small-graph harness.

pub mod axioms;
pub mod convexity;
pub mod error;
pub mod fixtures;
pub mod formats;
pub mod graphs;
pub mod harness;
pub mod hypergraph;
pub mod recognizers;
pub mod setsystems;
pub mod subset;
pub mod transit;

pub use axioms::{axiom_profile, check_axiom, AxiomId, AxiomProfile, AxiomVerdict};
pub use convexity::{hull, is_convex, is_convex_geometry, GeometryCertificate};
pub use error::{Error, Result};
pub use graphs::{Graph, Model};
pub use subset::{GroundSet, Subset};
pub use transit::{Betweenness, TransitFunction};
