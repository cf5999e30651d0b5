//! Library side of the `phforge` command: problem files, curve bundles,
//! the four commands and the exporters.

pub mod bundle;
pub mod commands;
pub mod config;
pub mod error;
pub mod export;

pub use bundle::CurveBundle;
pub use config::ProblemConfig;
pub use error::CliError;
