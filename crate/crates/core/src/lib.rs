//! Exact resistance distances and Kirchhoff indices, with closed forms for
//! complete multipartite graphs.

pub mod error;
pub mod extremal;
pub mod graph;
pub mod linalg;
pub mod multipartite;
pub mod oracle;
pub mod rational;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, PartitionSpec, VertexLocator};
pub use rational::Rational;
