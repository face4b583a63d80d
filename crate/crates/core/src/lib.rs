//! Exact combinatorics for rec-plabic graphs and the polytopes attached to them.
//!
//! The crate is organised bottom-up:
//!
//! * [`planar`]: embedded bicoloured graphs in a disk, faces, trips and face labels;
//! * [`rec`]: the rectangular family `rec(k, n)`, its dual and relabellings, perfect orientations;
//! * [`flows`]: directed paths, vertex-disjoint flows and flow polynomials;
//! * [`valuation`]: minimal-term valuations and level-`r` point sets;
//! * [`poset`]: grid posets with their order and chain polytopes;
//! * [`polyhedra`]: exact lattice-point, LP and hull utilities;
//! * [`equivalence`]: the explicit unimodular map and its certificate.
//!
//! All arithmetic is exact (machine integers where bounded, big rationals otherwise).

pub mod equivalence;
pub mod error;
pub mod flows;
pub mod io;
pub mod planar;
pub mod polyhedra;
pub mod poset;
pub mod rec;
pub mod subset;
pub mod valuation;

pub use error::{Error, Result};
pub use subset::Subset;
