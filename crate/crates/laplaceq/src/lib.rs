//! Standard-library companion to `laplaceq-core`: the graph JSON format,
//! JSON and CSV report encoders, rayon-parallel theorem sweeps and the
//! `laplaceq` command line.

pub mod cli;
pub mod csv_export;
pub mod error;
pub mod graph_json;
pub mod parallel;
pub mod phases;
pub mod report;

pub use error::{AppError, AppResult};
pub use graph_json::{parse_graph, serialize_graph, GraphParseError};
