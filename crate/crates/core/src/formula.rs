//! Propositional formulas over negation, implication, conjunction and falsum.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// A propositional formula.
///
/// Subterms are reference counted so that proofs, which copy the same
/// formulas into many sequents, stay cheap to build. Equality is purely
/// syntactic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(Arc<str>),
    Neg(Arc<Formula>),
    Imp(Arc<Formula>, Arc<Formula>),
    Conj(Arc<Formula>, Arc<Formula>),
    Falsum,
}

/// Formula constructors, used to describe the alphabet of a system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Connective {
    Var,
    Neg,
    Imp,
    Conj,
    Falsum,
}

impl Formula {
    pub fn var(name: &str) -> Formula {
        Formula::Var(Arc::from(name))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(body: Formula) -> Formula {
        Formula::Neg(Arc::new(body))
    }

    pub fn imp(left: Formula, right: Formula) -> Formula {
        Formula::Imp(Arc::new(left), Arc::new(right))
    }

    pub fn conj(left: Formula, right: Formula) -> Formula {
        Formula::Conj(Arc::new(left), Arc::new(right))
    }

    /// `P => #`, the negation used by the falsum-based system.
    pub fn imp_falsum(body: Formula) -> Formula {
        Formula::imp(body, Formula::Falsum)
    }

    /// Right-nested implication `a1 => (a2 => ... => last)`.
    pub fn imp_chain<'a, I>(antecedents: I, last: Formula) -> Formula
    where
        I: IntoIterator<Item = &'a Formula>,
        I::IntoIter: DoubleEndedIterator,
    {
        antecedents
            .into_iter()
            .rev()
            .fold(last, |acc, a| Formula::imp(a.clone(), acc))
    }

    pub fn connective(&self) -> Connective {
        match self {
            Formula::Var(_) => Connective::Var,
            Formula::Neg(_) => Connective::Neg,
            Formula::Imp(..) => Connective::Imp,
            Formula::Conj(..) => Connective::Conj,
            Formula::Falsum => Connective::Falsum,
        }
    }

    pub fn as_neg(&self) -> Option<&Formula> {
        match self {
            Formula::Neg(a) => Some(a),
            _ => None,
        }
    }

    pub fn as_imp(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Imp(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn as_conj(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Conj(a, b) => Some((a, b)),
            _ => None,
        }
    }

    /// Number of constructor nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Falsum => 1,
            Formula::Neg(a) => 1 + a.size(),
            Formula::Imp(a, b) | Formula::Conj(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Falsum => 0,
            Formula::Neg(a) => 1 + a.depth(),
            Formula::Imp(a, b) | Formula::Conj(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Visits every node in pre-order.
    pub fn for_each_node(&self, f: &mut impl FnMut(&Formula)) {
        f(self);
        match self {
            Formula::Var(_) | Formula::Falsum => {}
            Formula::Neg(a) => a.for_each_node(f),
            Formula::Imp(a, b) | Formula::Conj(a, b) => {
                a.for_each_node(f);
                b.for_each_node(f);
            }
        }
    }

    /// Variables in order of first occurrence (left to right).
    pub fn variables(&self) -> Vec<Arc<str>> {
        let mut out = Vec::new();
        self.collect_variables(&mut out);
        out
    }

    pub(crate) fn collect_variables(&self, out: &mut Vec<Arc<str>>) {
        self.for_each_node(&mut |node| {
            if let Formula::Var(name) = node {
                if !out.contains(name) {
                    out.push(name.clone());
                }
            }
        });
    }

    /// The set of constructors occurring in the formula.
    pub fn connectives(&self) -> BTreeSet<Connective> {
        let mut out = BTreeSet::new();
        self.for_each_node(&mut |node| {
            out.insert(node.connective());
        });
        out
    }

    /// Replaces variables according to `map`; unmapped variables are kept.
    pub fn substitute(&self, map: &impl Fn(&str) -> Option<Formula>) -> Formula {
        match self {
            Formula::Var(name) => map(name).unwrap_or_else(|| self.clone()),
            Formula::Falsum => Formula::Falsum,
            Formula::Neg(a) => Formula::neg(a.substitute(map)),
            Formula::Imp(a, b) => Formula::imp(a.substitute(map), b.substitute(map)),
            Formula::Conj(a, b) => Formula::conj(a.substitute(map), b.substitute(map)),
        }
    }
}

// Binding strength used by the printer: higher binds tighter.
fn level(f: &Formula) -> u8 {
    match f {
        Formula::Imp(..) => 0,
        Formula::Conj(..) => 1,
        _ => 2,
    }
}

fn write_at(f: &Formula, min_level: u8, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    if level(f) < min_level {
        write!(out, "(")?;
        write_at(f, 0, out)?;
        return write!(out, ")");
    }
    match f {
        Formula::Var(name) => write!(out, "{name}"),
        Formula::Falsum => write!(out, "#"),
        Formula::Neg(a) => {
            write!(out, "~")?;
            write_at(a, 2, out)
        }
        Formula::Imp(a, b) => {
            write_at(a, 1, out)?;
            write!(out, " => ")?;
            write_at(b, 0, out)
        }
        Formula::Conj(a, b) => {
            write_at(a, 1, out)?;
            write!(out, " . ")?;
            write_at(b, 2, out)
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_at(self, 0, f)
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

/// Minimal-parenthesis rendering; reparses to the same formula.
pub fn print_formula(f: &Formula) -> String {
    f.to_string()
}
