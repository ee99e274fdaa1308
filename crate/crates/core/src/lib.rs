//! Finite topological spaces with expansion operators.
//!
//! Everything here works on carriers of at most 16 points, with subsets as
//! `u32` bitmasks. The main types:
//!
//! - [`PointSet`] / [`SetFamily`]: the bitmask set engine.
//! - [`FiniteTopology`]: axiom-checked open-set families with fast closure
//!   and interior via precomputed minimal neighborhoods.
//! - [`OperatorTable`]: tabulated set-to-set operators and the association
//!   test against a topology.
//! - [`openclasses`]: generalized open-set classes and the operator-indexed
//!   closure machinery built from them.
//! - [`maps`]: functions between carriers, contra-continuity, product
//!   spaces, graphs, and connectivity predicates.
//! - [`naive`]: a deliberately slow re-implementation of the predicates from
//!   first principles, used to cross-check everything above.

pub mod error;
pub mod maps;
pub mod naive;
pub mod openclasses;
pub mod operators;
pub mod set;
pub mod topology;

pub mod codec;

pub use error::{ErrorKind, TopoError};
pub use maps::FiniteFunction;
pub use operators::{BiOperatorSpace, OperatorKind, OperatorTable};
pub use set::{PointSet, SetFamily, MAX_CARRIER};
pub use topology::{enumerate_topologies, FiniteTopology, MAX_ENUMERATION_CARRIER};
