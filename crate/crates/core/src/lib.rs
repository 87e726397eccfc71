//! Solvers for packing squares into a strip of fixed width so that every
//! square sits in its own cell, with cells cut by full-length horizontal and
//! vertical partitions, while minimizing the strip height.
//!
//! * [`layout`] and [`sequence`]: grid layouts, the sorted and row-column
//!   (RC) forms, and the transforms between them.
//! * [`exact`]: pseudo-polynomial dynamic programs over RC sequences and a
//!   brute-force oracle.
//! * [`approx`]: the fully polynomial approximation scheme.
//! * [`models`]: LP-format emitters for three mathematical formulations and
//!   an assignment checker.
//! * [`instgen`]: random and Partition-derived instances, instance files.
//! * [`multidim`]: the k-dimensional DP and partition thickness.
//! * [`render`]: SVG drawings of layouts.
//! * [`mod@bench`] and [`cli`]: the pinned benchmark suite and the `sipp`
//!   command line.

pub mod approx;
pub mod bench;
pub mod cli;
pub mod error;
pub mod exact;
pub mod instance;
pub mod instgen;
pub mod layout;
pub mod models;
pub mod multidim;
pub mod render;
pub mod report;
pub mod sequence;

pub use error::{Error, Result};
pub use exact::{DpSolution, RippInstance, ShapeSet};
pub use instance::Instance;
pub use layout::{omega, Layout};
pub use report::SolutionReport;
pub use sequence::{RcOp, RcSequence};
