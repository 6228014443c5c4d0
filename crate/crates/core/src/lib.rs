//! A computation engine for finite category theory.
//!
//! Everything here is fully tabulated and finite: categories are explicit
//! object/morphism/composition tables, universal properties are decided by
//! exhaustive search, and the higher structure (indexed categories,
//! Grothendieck constructions, fibred (co)limits, tractable monoidal
//! structures, Dialectica-style closures) is built on top of those tables
//! and cross-checked against brute-force oracles.
//!
//! All operations are pure and deterministic: object and morphism ids are
//! strings, every enumeration runs in lexicographic id order, and equal
//! inputs produce identical outputs.

pub mod dialectica;
pub mod fibcolim;
pub mod fincat;
pub mod fixtures;
pub mod groth;
pub mod indexed;
pub mod monoidal;
pub mod report;
pub mod search;
pub mod skel;
pub mod tractable;

pub use fincat::{Category, FinCat, FinFunctor, FinNatTrans, MorData, Shape};
pub use groth::{Cleavage, GrothCat};
pub use indexed::{IndexedCat, SectionMor, SectionObj};
pub use report::{ValidationReport, Violation};
pub use search::{AdjunctionWitness, Cocone, Cone};

/// Object identifier. Lexicographic order of ids fixes every enumeration
/// order in the crate.
pub type ObjId = String;
/// Morphism identifier.
pub type MorId = String;
