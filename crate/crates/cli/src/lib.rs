//! Command implementations behind the `acn` binary.

pub mod commands;
pub mod document;
pub mod error;

pub use commands::{ExportTarget, Format, Output, Which};
pub use document::InputDocument;
pub use error::CliError;
