//! Catenation of regular languages given by DFAs, with a decision procedure
//! for catenation-orthogonality (every word of `L(A)·L(B)` factorizes
//! uniquely) and tools to measure the state complexity of orthogonal
//! catenation on the known worst-case witness families.

pub mod automaton;
pub mod catenation;
pub mod error;
pub mod experiments;
pub mod format;
pub mod oracle;
pub mod orthogonality;
pub mod random;
pub mod witnesses;

pub use automaton::{Alphabet, Dfa, Nfa, StateId, Symbol, Word};
pub use catenation::{
    build_catenation_dfa, build_catenation_nfa, general_upper_bound, orthogonal_upper_bound,
    CatDfa, CatState,
};
pub use error::{Error, Result};
pub use orthogonality::{is_orthogonal, orthogonal_catenation, AmbiguityWitness, Verdict};
