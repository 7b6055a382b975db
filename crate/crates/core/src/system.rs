use std::fmt;
use std::str::FromStr;

use crate::formula::{Connective, Formula};
use crate::script::Sequent;

/// The proof systems handled by the toolkit.
///
/// `G`, `GBot` and `C` are sequent-style natural deduction systems; `HLT`
/// and `HL3` are Hilbert systems with modus ponens.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SystemId {
    G,
    GBot,
    C,
    HLT,
    HL3,
}

impl SystemId {
    pub const ALL: [SystemId; 5] = [SystemId::G, SystemId::GBot, SystemId::C, SystemId::HLT, SystemId::HL3];

    pub fn name(self) -> &'static str {
        match self {
            SystemId::G => "G",
            SystemId::GBot => "GBot",
            SystemId::C => "C",
            SystemId::HLT => "HLT",
            SystemId::HL3 => "HL3",
        }
    }

    pub fn alphabet(self) -> &'static [Connective] {
        match self {
            SystemId::G | SystemId::HLT | SystemId::HL3 => &[Connective::Var, Connective::Neg, Connective::Imp],
            SystemId::GBot => &[Connective::Var, Connective::Imp, Connective::Falsum],
            SystemId::C => &[Connective::Var, Connective::Neg, Connective::Conj],
        }
    }

    pub fn is_hilbert(self) -> bool {
        matches!(self, SystemId::HLT | SystemId::HL3)
    }

    pub fn admits(self, f: &Formula) -> bool {
        let alphabet = self.alphabet();
        let mut ok = true;
        f.for_each_node(&mut |node| ok &= alphabet.contains(&node.connective()));
        ok
    }

    pub fn admits_sequent(self, s: &Sequent) -> bool {
        s.formulas().all(|f| self.admits(f))
    }

    /// The negation of `f` as written in this system.
    pub fn neg(self, f: Formula) -> Formula {
        match self {
            SystemId::GBot => Formula::imp_falsum(f),
            _ => Formula::neg(f),
        }
    }

    /// Inverse of [`SystemId::neg`].
    pub fn negated(self, f: &Formula) -> Option<&Formula> {
        match self {
            SystemId::GBot => match f.as_imp() {
                Some((body, Formula::Falsum)) => Some(body),
                _ => None,
            },
            _ => f.as_neg(),
        }
    }
}

impl fmt::Display for SystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown system `{0}` (expected G, GBot, C, HLT or HL3)")]
pub struct UnknownSystem(pub String);

impl FromStr for SystemId {
    type Err = UnknownSystem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SystemId::ALL
            .into_iter()
            .find(|sys| sys.name() == s)
            .ok_or_else(|| UnknownSystem(s.to_string()))
    }
}
