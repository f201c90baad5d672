//! Interval and persistent-interval proper edge colorings.
//!
//! * [`graph`]: connected simple graphs, bipartitions and fixture generators.
//! * [`coloring`]: proper edge colorings, exact chromatic index, Kempe swaps.
//! * [`spectrum`]: vertex spectra, deficiency classes and the exhaustive
//!   oracle for the maximum number of interval / persistent-interval vertices.
//! * [`construct`]: colorings with a guaranteed interval or
//!   persistent-interval vertex set.
//! * [`bounds`]: exact bound formulas and verification reports.
//! * [`cli`]: the `spectra` command-line tool.

pub mod bounds;
pub mod cli;
pub mod coloring;
pub mod construct;
pub mod graph;
pub mod spectrum;

pub use coloring::{Color, EdgeColoring};
pub use graph::{Bipartition, Graph, Vertex};
pub use spectrum::Mode;
