//! Edge connectivity up to four for undirected multigraphs.
//!
//! The main entry points are [`all_3cuts`], which lists every 3-edge cut of a
//! 3-edge-connected graph, [`four_ecc_general`], which computes the
//! 4-edge-connected components of any multigraph, and
//! [`count_minimal_3cuts`]. The [`oracle`] module holds slow reference
//! implementations used by the tests.

pub mod cuts3;
pub mod dfs;
pub mod dsu;
pub mod error;
pub mod four_ecc;
pub mod graph;
pub mod oracle;
pub mod reduction;
pub mod verify;

pub use cuts3::{all_3cuts, CutKind, ThreeCut};
pub use dfs::{DfsParams, DfsTree, NIL};
pub use error::{Error, Result, SmallCut};
pub use four_ecc::{cuts_with_rsize, four_ecc_3ec, is_4_edge_connected};
pub use graph::{connected_components, parse_graph, MultiGraph, Partition};
pub use reduction::{count_minimal_3cuts, four_ecc_general};
