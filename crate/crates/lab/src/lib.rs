//! Sweeps, reports and the command-line front end over `domcycle-core`.
//!
//! Graphs arrive either from isomorph-free enumeration or from graph6
//! streams. Sweeps run in parallel and merge deterministically, so reports
//! are byte-identical across thread counts apart from the timing field.

pub mod analysis;
pub mod cli;
pub mod gallery;
pub mod report;
pub mod stream;
pub mod sweep;
