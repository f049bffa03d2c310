//! File formats and rendering for the `queens` command-line tool.

pub mod docs;
pub mod render;
