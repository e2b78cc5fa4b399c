//! Exact all-terminal reliability polynomials of multigraphs and the location
//! of their roots.
//!
//! * [`multigraph`]: multigraphs, minors, bridges, graph6/sparse6, canonical keys
//! * [`relpoly`]: deletion–contraction engine, F/H vectors, closed forms
//! * [`rootlab`]: numerical roots with residual bounds, exact rational roots,
//!   Eneström–Kakeya annulus and the gcd inner-circle test
//! * [`enumerate`]: connected simple graphs up to isomorphism
//! * [`survey`]: censuses over enumerated universes, Monte Carlo, root scatter

pub mod cli;
pub mod enumerate;
pub mod error;
pub mod multigraph;
pub mod relpoly;
pub mod rootlab;
pub mod survey;

pub use error::{Error, Result};
pub use multigraph::{parse_graph, CanonicalKey, GraphFormat, Corank2Type, FamilySpec, GraphClass, MinorMode, Multigraph, TreeShape};
pub use relpoly::{FVector, HVector, Poly, ReliabilityEngine};
