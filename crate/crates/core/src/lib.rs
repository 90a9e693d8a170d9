//! Generalized Cayley graphs `GC(G, S, α)` over permutation groups.
//!
//! For a finite group `G`, an involutory automorphism `α` and a subset `S`
//! avoiding `ω_α = {α(h⁻¹)h}` with `α(S) = S⁻¹`, the graph has vertex set `G`
//! and edges `{x, α(x)s}` for `s ∈ S`. The crate covers construction,
//! enumeration, isomorphism certificates and the (restricted) GCI
//! classification of complete groups, in particular the symmetric groups.

pub mod aut;
pub mod classify;
pub mod gencayley;
pub mod graph;
pub mod group;
pub mod input;
pub mod iso;
pub mod perm;

pub use aut::{automorphism_group, inner, AutGroup, Automorphism, Provenance};
pub use gencayley::{
    build_graph, enumerate_subsets, partition, validate_subset, GenCayleyPair, PartitionTriple,
    Violation,
};
pub use graph::UGraph;
pub use group::{ElemSet, FiniteGroup};
pub use iso::{gci_isomorphic, graph_isomorphic, GciCertificate};
pub use perm::{format_cycles, parse_cycles, Permutation};
