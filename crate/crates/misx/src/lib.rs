//! misx: an exact workbench for counting maximum independent sets.
//!
//! The crate computes independence numbers and maximum-independent-set
//! counts exactly (arbitrary precision), generates the extremal graph
//! families that attain the known sharp bounds, enumerates non-isomorphic
//! (subcubic) trees, and exhaustively verifies the bounds together with
//! their equality characterizations at desk scale.
//!
//! Everything is deterministic: neighbor lists are sorted, enumeration
//! order is canonical, and reports are byte-identical across runs and
//! worker counts.

pub mod bounds;
pub mod codec;
pub mod count;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod graph;
pub mod turan;
pub mod verify;
pub mod zykov;

pub use crate::count::{AlphaCount, ConditionalCount, TreeDpRecord};
pub use crate::error::{Error, Result};
pub use crate::graph::Graph;
