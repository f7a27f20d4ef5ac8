//! Graph-encoded manifolds: edge-colored regular graphs, the dipole and glue
//! move calculus, regular genus, product and cube constructions, small covers
//! over Δ² × Δ², and colored-graph isomorphism.

pub mod constructions;
pub mod dsu;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod iso;
pub mod labels;
pub mod moves;
pub mod small_covers;
pub mod torus;

pub use error::{GemError, ParseError, Result};
pub use graph::{new_graph, ColorSet, ColoredGraph, ComponentLabeling, ContractionReport};
pub use invariants::{
    bicolored_cycle_lengths, euler_characteristic, genus_for, genus_lower_bound, is_weak_semi_simple,
    regular_genus, CyclicPermutation, GenusReport, RegularGenus, WeakSemiSimple,
};
pub use iso::{canonical_signature, isomorphic, CanonicalSignature, Isomorphism, SignatureMode};
pub use labels::LabeledGem;
