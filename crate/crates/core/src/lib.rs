//! Tools for Thue equations `|F(x, y)| = 1`: exact binary-form arithmetic,
//! certified roots, heights, an exhaustive solver in a box, and per-solution
//! checks of the inequalities used to bound the number of solutions.

pub mod analysis;
pub mod corpus;
pub mod error;
pub mod forms;
pub mod heights;
pub mod interval;
pub mod matveev;
pub mod poly;
pub mod report;
pub mod roots;
pub mod solver;
pub mod verdict;

pub use error::{Error, Result};
pub use forms::BinaryForm;
pub use interval::{CInterval, Interval};
pub use poly::IntPoly;
pub use roots::{find_roots, PrecisionConfig, RootSystem};
pub use verdict::{Outcome, Relation, Verdict};
