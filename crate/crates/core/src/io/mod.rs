//! Graph serialization and verification reports.

pub mod dimacs;
pub mod graph6;
pub mod report;

pub use dimacs::encode_dimacs;
pub use graph6::{decode_graph6, encode_graph6};
pub use report::{Report, Target, TargetKind};
