//! Classical two-valued semantics by exhaustive truth tables.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::formula::Formula;
use crate::script::Sequent;

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Valuation(BTreeMap<Arc<str>, bool>);

impl Valuation {
    pub fn new() -> Self {
        Valuation::default()
    }

    pub fn set(&mut self, var: &str, value: bool) {
        self.0.insert(Arc::from(var), value);
    }

    pub fn with(mut self, var: &str, value: bool) -> Self {
        self.set(var, value);
        self
    }

    pub fn get(&self, var: &str) -> Option<bool> {
        self.0.get(var).copied()
    }

    /// Entries in lexicographic variable order.
    pub fn iter(&self) -> impl Iterator<Item = (&Arc<str>, bool)> {
        self.0.iter().map(|(k, v)| (k, *v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<(Arc<str>, bool)> for Valuation {
    fn from_iter<T: IntoIterator<Item = (Arc<str>, bool)>>(iter: T) -> Self {
        Valuation(iter.into_iter().collect())
    }
}

/// `p=T q=F`
impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}={}", if *v { 'T' } else { 'F' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("variable `{0}` has no value")]
pub struct UnboundVariable(pub Arc<str>);

pub fn evaluate(f: &Formula, v: &Valuation) -> Result<bool, UnboundVariable> {
    Ok(match f {
        Formula::Var(x) => v.0.get(x).copied().ok_or_else(|| UnboundVariable(x.clone()))?,
        Formula::Falsum => false,
        Formula::Neg(a) => !evaluate(a, v)?,
        Formula::Imp(a, b) => !evaluate(a, v)? || evaluate(b, v)?,
        Formula::Conj(a, b) => evaluate(a, v)? && evaluate(b, v)?,
    })
}

/// Truth of a sequent under `v`: some antecedent formula false, or the
/// succedent true.
pub fn evaluate_sequent(s: &Sequent, v: &Valuation) -> Result<bool, UnboundVariable> {
    for a in &s.antecedent {
        if !evaluate(a, v)? {
            return Ok(true);
        }
    }
    evaluate(&s.succedent, v)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Countermodel(Valuation),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// All valuations of `vars`, sorted lexicographically by variable name,
/// enumerated with false before true and the first variable most
/// significant.
pub fn valuations(vars: &[Arc<str>]) -> impl Iterator<Item = Valuation> {
    let mut sorted = vars.to_vec();
    sorted.sort();
    sorted.dedup();
    let n = sorted.len();
    (0u64..1u64 << n).map(move |bits| {
        sorted
            .iter()
            .enumerate()
            .map(|(i, x)| (x.clone(), bits >> (n - 1 - i) & 1 == 1))
            .collect()
    })
}

fn first_falsifying(vars: &[Arc<str>], holds: impl Fn(&Valuation) -> bool) -> Verdict {
    valuations(vars)
        .find(|v| !holds(v))
        .map_or(Verdict::Valid, Verdict::Countermodel)
}

pub fn tautology(f: &Formula) -> Verdict {
    first_falsifying(&f.variables(), |v| evaluate(f, v).expect("valuation covers the formula"))
}

pub fn sequent_valid(s: &Sequent) -> Verdict {
    first_falsifying(&s.variables(), |v| evaluate_sequent(s, v).expect("valuation covers the sequent"))
}
