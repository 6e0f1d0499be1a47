//! IO companion to `exodromy-core`: file formats, DOT export, reports and
//! the command-line pipelines.

pub mod dot;
pub mod format;
pub mod run;
