//! Document-driven front end for `conekit`: operator documents in, analysis
//! reports out.

pub mod document;
pub mod oracle;
pub mod render;
pub mod report;

pub use document::{parse, serialize, Document, DocumentError, Parsed};
pub use render::render_text;
pub use report::{analyze, Overrides, Parameters, Report, Sections};
