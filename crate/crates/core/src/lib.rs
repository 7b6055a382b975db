//! A trusted kernel for a sequent-style natural deduction calculus of
//! classical propositional logic, together with tools around it:
//!
//! * [`kernel`] checks proof scripts against the primitive rules of the
//!   systems `G` (negation, implication), `GBot` (falsum, implication) and
//!   `C` (negation, conjunction, simple cut);
//! * [`derived`] expands derived rules (contraction, cut, permutation, weak
//!   reductio, ...) into primitive steps;
//! * [`completeness`] synthesizes a proof of every valid sequent in `G`;
//! * [`translate`] maps proofs between `G`, `GBot` and `C`;
//! * [`hilbert`] checks Hilbert-style derivations and translates between
//!   them and `G`;
//! * [`intuitionistic`] decides intuitionistic validity;
//! * [`sweep`] enumerates formulas and runs batch checks, in parallel when
//!   the `parallel` feature is on.

pub mod builder;
pub mod completeness;
pub mod derived;
pub mod formula;
pub mod hilbert;
pub mod intuitionistic;
pub mod kernel;
pub mod parse;
pub mod script;
pub mod semantics;
pub mod sweep;
pub mod system;
pub mod translate;

pub use formula::{print_formula, Formula};
pub use kernel::{check_script, CheckReport};
pub use parse::{parse_formula, parse_goal, parse_sequent};
pub use script::{parse_script, Mode, ProofScript, Rule, Sequent};
pub use system::SystemId;
