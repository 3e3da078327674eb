//! Computing with elements of symmetric Thompson groups V_n(H).
//!
//! An element of V_n(H) is a homeomorphism of the Cantor space of infinite
//! words over an n-letter alphabet, described by a table: two complete
//! prefix codes of equal size together with permutations from a finite
//! group H ≤ Sym(n), the column `(p, σ, q, τ)` sending the cylinder
//! `p‖σ(u)` to `q‖τ(u)`. The crate implements the table calculus (the four
//! basic moves, composition, inversion, semantic equality), root groups of
//! invariant prefix codes, the topological embedding of V_n(H) into V_m(G)
//! over a solution code, and the algebraic embedding of V_m(G) into
//! V_n(G_ext) by successor coding.

pub mod code;
pub mod error;
pub mod json;
pub mod perm;
pub mod rng;
pub mod root;
pub mod successor;
pub mod table;
pub mod topo;
pub mod words;

pub use crate::code::{find_solution, is_complete, strict_prefixes, PrefixCode, Triple};
pub use crate::error::{Error, Result};
pub use crate::perm::{find_cyclic_isomorphism, CycleType, Perm, PermGroup};
pub use crate::root::{root_group, RootGroup};
pub use crate::successor::{
    check_expansion_pattern, successor_formula, successors_inductive, AlgContext,
    SuccessorAssignment,
};
pub use crate::table::{validation_errors, Column, Element, Table};
pub use crate::topo::TopoContext;
pub use crate::words::{Alphabet, EvWord, PrefixRel, Word};
