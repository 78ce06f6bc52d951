//! Modular complementation of Büchi automata into Emerson-Lei automata.
//!
//! The input is split into blocks of accepting SCCs, each block is
//! complemented by an algorithm suited to its shape, and the partial results
//! are combined by one of three top-level constructions.
//!
//! ```
//! use modcompl::{complement, hoa, lang, Options};
//!
//! let b1 = hoa::parse_hoa(r#"HOA: v1
//! States: 2
//! Start: 0
//! AP: 1 "b"
//! Acceptance: 1 Inf(0)
//! --BODY--
//! State: 0
//! [!0] 0
//! [0] 1
//! State: 1
//! [t] 1 {0}
//! --END--
//! "#).unwrap();
//! let c = complement(&b1, &Options::default()).unwrap();
//! // a^ω (symbol 0 forever) is the only word without a `b`
//! assert!(lang::member_lasso(&[], &[0], &c.tela).unwrap());
//! assert!(!lang::member_lasso(&[1], &[0], &c.tela).unwrap());
//! ```

pub mod algorithms;
pub mod automaton;
pub mod check;
pub mod error;
pub mod framework;
pub mod hoa;
pub mod index;
pub mod lang;
pub mod partition;
pub mod scc;
pub mod simulation;

#[cfg(test)]
mod fixtures;

pub use automaton::{Acceptance, Alphabet, ColourSet, StateId, StateSet, Symbol, Tela, Transition};
pub use error::{Error, Result};
pub use framework::{complement, Complement, NacAlgorithm, Options, SinkMode, Strategy};
pub use index::BuchiIndex;
pub use partition::{BlockClass, PartitionBlock, PartitionPolicy, Partitioning};
pub use scc::{SccClass, SccDecomposition};
pub use simulation::Simulation;
