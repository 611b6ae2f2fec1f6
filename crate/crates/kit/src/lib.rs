//! Text format, reports and the command-line front end for `diffeo-core`.

pub mod cli;
pub mod format;
pub mod report;

pub use cli::{run, Outcome};
pub use format::{parse_data, parse_document, parse_presentation, print_document, print_presentation, Document, ParseError};
