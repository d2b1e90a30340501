//! Alternating enumerators of graph parameters, Sylow fixed-point lattices, sub-basis
//! decompositions and the reduction chain from clique counting to `#IndSub(Φ)`.

pub mod canon;
pub mod counting;
pub mod enumerator;
pub mod error;
pub mod graph;
pub mod modular;
pub mod params;
pub mod reductions;
pub mod sylow;
pub mod util;
pub mod verify;

pub use canon::{canonical_form, canonical_key, enumerate_canonical_graphs, CanonicalGraph, CanonicalKey};
pub use error::{Error, Result};
pub use graph::Graph;
pub use params::GraphParameter;
pub use util::Rational;
