//! Library side of the `chromo` command: triangle dossiers, SVG figures and
//! finite-field theorem sweeps.

pub mod error;
pub mod input;
pub mod report;
pub mod svg;
pub mod sweep;

pub use error::CliError;
