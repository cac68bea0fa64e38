//! Exact computations with the Z/4Z-grading of the Lie algebra E8 whose
//! degree-one part is the tensor product of a half-spin module of so(10)
//! with the natural module of sl(4).

#[macro_use]
pub mod arith;

pub mod e8;
pub mod spinor;
pub mod tables;
pub mod reflgroup;
pub mod invariants;
pub mod orbit;
pub mod checks;
