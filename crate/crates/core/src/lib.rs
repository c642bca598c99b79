//! Exact boxicity of small graphs with checkable certificates, interval graph
//! recognition, and bounds on the boxicity of Mycielski graphs.
//!
//! Graphs have at most 64 vertices and are stored as adjacency bitmasks. The
//! exhaustive parts (boxicity, clique covers, colourings) target graphs of a
//! dozen or so vertices and refuse larger inputs with [`Error::Capacity`].
//!
//! ```
//! use boxicity::{engine::{exact_boxicity, EngineConfig}, Family};
//!
//! let g: boxicity::Graph = "mycielski:cycle:4:2".parse::<Family>()?.build()?;
//! let result = exact_boxicity(&g, &EngineConfig::default())?;
//! assert_eq!(result.value, 2);
//! assert!(result.certificate.check().is_accept());
//! # Ok::<(), boxicity::Error>(())
//! ```

pub mod bounds;
pub mod cli;
pub mod cliques;
pub mod constructions;
pub mod corpus;
pub mod engine;
mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod interval;

pub use error::{Error, Result};
pub use generators::Family;
pub use graph::{Distance, EdgeSet, Graph, VertexSet};
