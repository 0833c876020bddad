//! Exact computation in right-angled Artin groups presented on graph
//! complements.
//!
//! Everything here works in the *opposite* convention: for a simplicial graph
//! `G`, the group `G(G)` has one generator per vertex and two generators
//! commute exactly when the vertices are **not** adjacent. The usual
//! right-angled Artin group `A(G)` is therefore `G(complement(G))`.
//!
//! Module map:
//!
//! * [`graphs`]: simplicial graphs, constructors, induced subgraph search,
//!   hairy path decompositions and the tripod obstruction pattern.
//! * [`words`]: letters, words, reduction, canonical normal forms, support
//!   and commutators.
//! * [`extgraph`]: vertices of the extension graph (conjugates of
//!   generators), bounded enumeration and induced embedding search.
//! * [`homs`]: graph homomorphisms, the group homomorphisms they induce,
//!   and bounded injectivity / surviving checks.
//! * [`constructions`]: the two local moves, the tripod pipeline, hairy path
//!   witnesses and non-embeddability certificates.
//! * [`suite`]: the acceptance checks, runnable from tests and the CLI.

pub mod constructions;
pub mod error;
pub mod extgraph;
pub mod graphs;
pub mod homs;
pub mod oracle;
pub mod suite;
pub mod words;

pub use error::{Error, Result};
pub use extgraph::ExtVertex;
pub use graphs::{SimplicialGraph, VertexId};
pub use words::{GraphGroup, Letter, NormalForm, Word};
