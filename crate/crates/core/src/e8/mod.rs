//! E8, its root system, and the Z/4Z-grading.

pub mod algebra;
pub mod grading;
pub mod roots;

pub use algebra::{AdOp, BasisKind, LieElem, DIM, E8};
pub use grading::{G0Node, Graded, Theta, GRADING_NODE};
pub use roots::{classify_cartan, format_type, RootSystem, RootVec, SimpleType, RANK};
