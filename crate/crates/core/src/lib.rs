//! Structure connectivity of server-centric data-center topologies.
//!
//! The crate builds DCell `D(m,n)`, crossed cubes `CQ_n` and BCDC `B_n`
//! graphs, constructs explicit star / clique / path / cycle structure cuts
//! around a fixed base vertex, verifies cuts, and certifies minimum cut sizes
//! on small instances by exhaustive search.
//!
//! ```
//! use dcn_core::{cuts, dcell, Mode, ShapeSpec};
//!
//! let g = dcell::build_dcell(1, 4, dcell::DEFAULT_VERTEX_BUDGET).unwrap();
//! let cut = cuts::star_cut_dcell(1, 4, 1).unwrap();
//! let report = cuts::verify_cut(&g, &cut, ShapeSpec::Star(1), Mode::Structure);
//! assert!(report.pass);
//! assert_eq!(cut.members.len(), 3);
//! ```

pub mod bcdc;
pub mod connectivity;
pub mod cuts;
pub mod dcell;
mod error;
pub mod format;
pub mod graph;
pub mod search;
pub mod shape;

pub use error::{Error, Result};
pub use graph::{Graph, VertexId};
pub use shape::{CutMember, Mode, ShapeSpec, StructureCut};
