//! Tribracket region-coloring invariants for knots and surface-links.
//!
//! A tribracket (knot-theoretic ternary quasigroup) colors the complementary
//! regions of a diagram; counting the colorings that satisfy the crossing
//! equations gives an invariant `Col` of the underlying (surface-)link.
//! This crate provides:
//!
//! * [`tribracket`] — validated finite tribrackets, Dehn tribrackets of
//!   finite groups, and exhaustive enumeration of small ones;
//! * [`colorsys`] — region-equation systems and exact solution counting,
//!   with a brute-force oracle and orientation reversal;
//! * [`diagrams`] — planar diagram codes, face tracing, and emission of
//!   crossing equations;
//! * [`surfaces`] — triplane/multiplane and marked-vertex presentations of
//!   surface-links, the spun-knot triplane generator, and coloring bounds;
//! * [`catalog`] — bundled golden data (tensors, the Yoshikawa 2-sphere
//!   table systems, built-in diagrams) and a table reproduction runner.

pub mod catalog;
pub mod colorsys;
pub mod diagrams;
pub mod surfaces;
pub mod tribracket;

pub use colorsys::{
    brute_force_count, count_colorings, enumerate_colorings, invertibility_witness, normalize,
    reverse_orientation, EquationSystem, SolveStats, TriEq,
};
pub use tribracket::{dehn_tribracket, enumerate_tribrackets, Element, FiniteGroup, Slot, Tribracket};
