//! A regular-language workbench.
//!
//! Expressions in a small syntax (see [`syntax`]) are compiled to NFAs
//! ([`automata::compile`]), tested for membership ([`automata::accepts`]),
//! enumerated in shortlex order ([`enumerate`]) and analysed for their
//! minimum pumping length ([`pumping`]).
//!
//! ```
//! use regpump_core::{automata, pumping, syntax::ReservedSymbols};
//!
//! let nfa = automata::compile("1*01*01*", &ReservedSymbols::default()).unwrap();
//! assert!(automata::accepts(&nfa, "0110"));
//!
//! let dfa = automata::determinize(&nfa).unwrap();
//! let mpl = pumping::min_pumping_length_exact(&dfa).unwrap();
//! assert_eq!(mpl.p, 3);
//! assert_eq!(mpl.witness.as_deref(), Some("001"));
//! ```

pub mod automata;
#[cfg(feature = "corpus")]
pub mod corpus;
pub mod enumerate;
mod error;
pub mod pumping;
pub mod syntax;

pub use error::{Error, Result, SyntaxError, SyntaxErrorKind, SyntaxErrors};

/// Resource guards shared by the operations that can blow up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum DFA states, also the maximum product-automaton states.
    pub state_cap: usize,
    /// Maximum enumeration frontier size.
    pub frontier_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            state_cap: automata::DEFAULT_STATE_CAP,
            frontier_cap: enumerate::DEFAULT_FRONTIER_CAP,
        }
    }
}
