//! Computational engine for classifying chamber-regular lattices on
//! two-dimensional Euclidean buildings whose three vertex links are a
//! generalized quadrangle of order (3,5) or complete bipartite graphs
//! K_{4,4} / K_{6,6}.
//!
//! The crate is organized in layers:
//!
//! * [`perm`] — permutations, permutation groups with deterministic
//!   stabilizer chains, conjugacy and isomorphism searches.
//! * [`presentation`] — finite presentations with two-sided generator
//!   markers, plus the text format for the bundled group library.
//! * [`coset`] — coset enumeration, regular representations, and the
//!   distinguished edge subgroups of a two-sided presentation.
//! * [`library`] — the bundled library of 35 presented groups and the
//!   four edge-group models, with self-verification.
//! * [`geometry`] — the explicit generalized quadrangle of order (3,5)
//!   built from a group of order 64, complete bipartite incidence
//!   graphs, coset graphs, and graph metrics.
//! * [`autgraph`] — graph automorphism groups and graph isomorphism by
//!   individualization–refinement.
//! * [`regular`] — exhaustive enumeration of regular subgroups of a
//!   finite permutation group.
//! * [`actions`] — edge-regular actions on the three target graphs,
//!   comparison of actions, and the exhaustive matching against the
//!   library.
//! * [`classifier`] — admissible gluing data for triangles of groups and
//!   the double-coset count of equivalence classes.
//! * [`reference`] — frozen reference tables the verification commands
//!   compare against.
//! * [`triangles`] — assembly of a triangle of groups from a family and
//!   gluing data, local-action checks, and the building criterion.
//! * [`cache`] — content-addressed on-disk cache for expensive searches.

pub mod actions;
pub mod autgraph;
pub mod cache;
pub mod classifier;
pub mod coset;
mod error;
pub mod geometry;
pub mod library;
pub mod perm;
pub mod presentation;
pub mod reference;
pub mod regular;
pub mod triangles;

pub use error::{Error, Result};
