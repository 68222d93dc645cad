//! knotcalc: knot-diagram invariants and crossing-number bounds.
//!
//! The crate is organized around validated PD codes ([`diagram`]), Seifert
//! data ([`seifert`]), braid words and closures ([`braid`]), exact skein
//! polynomial engines ([`skein`]), bound calculators ([`bounds`]), the
//! Whitehead-double construction ([`doubles`]), and a verification harness
//! over bundled fixtures ([`harness`]).

pub mod bounds;
pub mod braid;
pub mod diagram;
pub mod doubles;
pub mod harness;
pub mod poly;
pub mod seifert;
pub mod skein;

pub use diagram::{Crossing, DiagramError, KnotRecord, PlanarDiagram};
pub use poly::{DegreeSummary, LaurentPoly1, LaurentPoly2};
pub use seifert::SeifertDecomposition;
