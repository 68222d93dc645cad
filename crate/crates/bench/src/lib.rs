//! Shared helpers for the benchmark targets.

pub use knotcalc;
