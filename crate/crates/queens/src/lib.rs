//! Queen labelings of digraphs and the n-queens problem.
//!
//! A digraph on `[1, n]` whose induced arc sums `u + v` and differences
//! `v - u` are pairwise distinct corresponds, when 1-regular, to a solution
//! of the n-queens problem: one queen per arc at `(u, v)`. Taking both
//! conditions modulo `n` gives the modular (toroidal) variant.
//!
//! The crate provides:
//!
//! - value types and structural operations for labeled digraphs
//!   ([`digraph`]),
//! - the sum/difference calculus and (modular) queen verification
//!   ([`labeling`]),
//! - the product of a digraph with a family of digraphs, its canonical
//!   labeling and the side conditions under which it preserves queen
//!   validity ([`product`]),
//! - explicit solution families: doubling digraphs, Jacobsthal digraphs,
//!   unions of 3-cycles, strong cycles and the composite construction
//!   ([`construct`]),
//! - exhaustive enumeration, counting and cycle-type surveys at desk scale
//!   ([`enumerate`]).

pub mod construct;
pub mod digraph;
pub mod enumerate;
mod error;
pub mod labeling;
pub mod product;

pub use digraph::{Arc, CycleType, LabeledDigraph};
pub use error::{Error, Result};
pub use labeling::{
    diff_multiset, from_placement, sigma_identity_check, sum_multiset, to_placement, verify_board,
    verify_modular_queen, verify_queen, Condition, Failure, Placement, VerificationReport,
};
pub use product::{
    check_corollary_sets, check_diff_condition, check_sum_condition, direct_product, oh_product,
    product_preserves_modular, product_preserves_queen, FamilyAssignment, ProductCheck,
};
