//! Quantum error-correcting codes from arbitrary classical codes.
//!
//! This crate turns a classical q-ary code `C` into quantum codes whose
//! logical states are real superpositions over disjoint subsets of `C`.
//! The non-deformation conditions of the Knill-Laflamme criteria become a
//! real linear system `A x = 0`: the rows of `A` are the real and imaginary
//! parts of diagonal-Pauli expectation values on the codewords plus an
//! all-ones row, and any nonzero kernel vector splits into the two logical
//! codewords of a qubit. More logical states are found recursively by
//! solving nonnegative linear feasibility problems with Dines elimination.
//!
//! Everything a construction claims is certified independently by a
//! brute-force Knill-Laflamme verifier ([`verify`]), which consumes only
//! the code itself, never the construction trace.
//!
//! The [`groundspace`] module realizes a 2-local frustration-free spin-chain
//! Hamiltonian implicitly through its local-move graph: allowed strings
//! `T_n`, canonical reduction, ground-space dimension formulas, a union-find
//! oracle over the full state space, and the linear-distance threshold
//! evaluators used to place codes inside the ground space.
//!
//! Start with the runnable examples (`cargo run --example steane_from_hamming`)
//! or the `qeccforge` binary, which exposes each pipeline as a subcommand.

pub mod amatrix;
pub mod aqecc;
pub mod classical;
pub mod construct;
pub mod golden;
pub mod groundspace;
pub mod pauli;
pub mod perminv;
pub mod verify;

mod ratlin;

pub use classical::{Alphabet, ClassicalCode, Codeword};
pub use construct::{LogicalState, QuantumCode};
pub use verify::KlReport;
