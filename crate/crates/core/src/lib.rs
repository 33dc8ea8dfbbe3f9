//! Improved evaluation codes on Cartesian products of subfields, the CSS
//! and Steane-enlarged quantum codes built from them, and explicit
//! finite-field oracles for checking every combinatorial shortcut.

pub mod arith;
pub mod cli;
pub mod evalcode;
pub mod field;
pub mod footprint;
pub mod quantum;
pub mod report;
