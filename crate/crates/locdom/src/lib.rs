//! Locating-dominating sets in digraphs.
//!
//! A dominating set `D` of a digraph is a set of vertices such that every
//! vertex outside `D` has an in-neighbour in `D`; it is locating-dominating
//! when in addition every vertex outside `D` has a distinct, nonempty set of
//! in-neighbours inside `D`. This crate provides:
//!
//! - the core digraph type with the structural predicates (twins,
//!   quasi-twins, sources, tournaments, acyclicity) that gate the algorithms
//!   ([`digraph`]);
//! - definitional verifiers with canonical failure witnesses and the
//!   S-partition machinery ([`certify`]);
//! - exact solvers for the minimum dominating, locating and
//!   locating-dominating set sizes on small instances ([`exact`]);
//! - polynomial-time constructions with guaranteed size bounds for twin-free
//!   digraphs, tournaments and acyclic digraphs ([`bounds`], [`tournaments`],
//!   [`acyclic`]);
//! - checkers for the extremal characterizations of location(-domination)
//!   number n−1 ([`characterize`]);
//! - deterministic generators for the named instance families and seeded
//!   random models ([`families`]).

pub mod acyclic;
pub mod bitset;
pub mod bounds;
pub mod certify;
pub mod characterize;
pub mod digraph;
pub mod exact;
pub mod families;
pub mod tournaments;

pub use bitset::VertexSet;
pub use digraph::{Digraph, DigraphError, PairRelation, StructuralProfile};
