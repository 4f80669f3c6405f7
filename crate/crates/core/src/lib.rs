//! Witness extraction for Ramsey-type theorems on connected graphs.
//!
//! Every connected graph with a large enough independence number, matching
//! number, or induced matching number contains a large induced member of a
//! short list of families (paths, cliques, stars, hairy cliques, spiders,
//! friendship graphs, …). This crate turns the constructive proofs of those
//! statements into pipelines that return an explicit induced embedding (a
//! [`Witness`]) on concrete graphs, computes the underlying parameters
//! exactly, and provides an exhaustive scan harness over graph6 catalogues.

mod bitset;
pub mod enumerate;
pub mod extraction;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod scan;

pub use extraction::{ExtractionError, ExtractionOutcome};
pub use families::{contains_induced, generate, max_family_parameter, verify_witness, FamilyKind, FamilySpec, Witness};
pub use graph::{contract_matching, ContractionMap, Edge, EdgeSet, Graph, GraphError, VertexSet};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use invariants::Rational;
