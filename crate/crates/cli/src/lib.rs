//! Command-line front end: the instance file format, tree serialization
//! and command dispatch.

pub mod parse;
pub mod run;
pub mod tree_io;

pub use parse::{parse, to_text, ParseError, ParseErrorKind};
pub use run::run;
