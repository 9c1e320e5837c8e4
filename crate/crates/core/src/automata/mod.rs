//! Regex-to-NFA compilation, NFA simulation, determinization and graph export.

mod compile;
mod dfa;
mod dot;
mod nfa;
mod simulate;

pub use compile::compile;
pub use dfa::{determinize, determinize_with_cap, Dfa, DEFAULT_STATE_CAP};
pub use dot::export_graph;
pub use nfa::{Label, Nfa, NfaBuilder, StateId, StateSet};
pub use simulate::{accepts, epsilon_closure, initial, step, transit};
