pub mod commands;
pub mod document;

pub use commands::Outcome;
pub use document::{EdgeListDocument, OrientationDocument, ParseError};
