//! Dual graded graphs, differential towers of finite groups, and the
//! bijections between them.

pub mod graph;
pub mod group;
pub mod growth;
pub mod lattice;
pub mod tower;
pub mod cli;
