//! Intuitionistic propositional validity by contraction-free backward
//! search (G4ip) over `=>`, `.` and `#`.
//!
//! Negation is rewritten to `P => #` before search. Every rule replaces a
//! formula by strictly smaller ones under the multiset ordering on
//! formula weights, so search terminates without loop checks. Results for
//! left-implication branches are memoized on the sorted context.

use std::collections::HashMap;

use crate::formula::Formula;
use crate::script::Sequent;

/// A search goal. The antecedent is kept sorted, so equal multisets give
/// equal goals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntGoal {
    pub antecedent: Vec<Formula>,
    pub succedent: Formula,
}

impl IntGoal {
    pub fn new(antecedent: impl IntoIterator<Item = Formula>, succedent: Formula) -> Self {
        let mut antecedent: Vec<Formula> = antecedent.into_iter().map(|f| without_negation(&f)).collect();
        antecedent.sort();
        IntGoal { antecedent, succedent: without_negation(&succedent) }
    }
}

/// `~P` becomes `P => #`, recursively.
pub fn without_negation(f: &Formula) -> Formula {
    match f {
        Formula::Var(_) | Formula::Falsum => f.clone(),
        Formula::Neg(a) => Formula::imp_falsum(without_negation(a)),
        Formula::Imp(a, b) => Formula::imp(without_negation(a), without_negation(b)),
        Formula::Conj(a, b) => Formula::conj(without_negation(a), without_negation(b)),
    }
}

#[derive(Default)]
struct Search {
    memo: HashMap<IntGoal, bool>,
}

fn insert_sorted(ctx: &mut Vec<Formula>, f: Formula) {
    let at = ctx.binary_search(&f).unwrap_or_else(|e| e);
    ctx.insert(at, f);
}

impl Search {
    fn prove(&mut self, mut ctx: Vec<Formula>, goal: Formula) -> bool {
        // invertible right rules
        match goal {
            Formula::Imp(a, b) => {
                insert_sorted(&mut ctx, (*a).clone());
                return self.prove(ctx, (*b).clone());
            }
            Formula::Conj(a, b) => return self.prove(ctx.clone(), (*a).clone()) && self.prove(ctx, (*b).clone()),
            _ => {}
        }
        // invertible left rules, to saturation
        'saturate: loop {
            for i in 0..ctx.len() {
                let replacement: Option<Vec<Formula>> = match &ctx[i] {
                    Formula::Falsum => return true,
                    Formula::Conj(a, b) => Some(vec![(**a).clone(), (**b).clone()]),
                    Formula::Imp(a, c) => match &**a {
                        Formula::Conj(x, y) => {
                            Some(vec![Formula::imp((**x).clone(), Formula::imp((**y).clone(), (**c).clone()))])
                        }
                        Formula::Falsum => Some(vec![]),
                        Formula::Var(_) if ctx.binary_search(a).is_ok() => Some(vec![(**c).clone()]),
                        _ => None,
                    },
                    _ => None,
                };
                if let Some(new) = replacement {
                    ctx.remove(i);
                    for f in new {
                        insert_sorted(&mut ctx, f);
                    }
                    continue 'saturate;
                }
            }
            break;
        }
        if ctx.binary_search(&goal).is_ok() {
            return true;
        }
        let key = IntGoal { antecedent: ctx, succedent: goal };
        if let Some(&known) = self.memo.get(&key) {
            return known;
        }
        let IntGoal { antecedent: ctx, succedent: goal } = &key;
        let mut found = false;
        for i in 0..ctx.len() {
            let Formula::Imp(ab, c) = &ctx[i] else { continue };
            let Formula::Imp(a, b) = &**ab else { continue };
            let mut rest = ctx.clone();
            rest.remove(i);
            // left premise: rest, b => c, a -> b
            let mut left = rest.clone();
            insert_sorted(&mut left, Formula::imp((**b).clone(), (**c).clone()));
            insert_sorted(&mut left, (**a).clone());
            if !self.prove(left, (**b).clone()) {
                continue;
            }
            insert_sorted(&mut rest, (**c).clone());
            if self.prove(rest, goal.clone()) {
                found = true;
                break;
            }
        }
        self.memo.insert(key, found);
        found
    }
}

pub fn int_provable_goal(goal: &IntGoal) -> bool {
    Search::default().prove(goal.antecedent.clone(), goal.succedent.clone())
}

/// Intuitionistic theoremhood of `f`.
pub fn int_provable(f: &Formula) -> bool {
    int_provable_goal(&IntGoal::new([], f.clone()))
}

/// Intuitionistic derivability of the succedent from the antecedent.
pub fn int_provable_sequent(s: &Sequent) -> bool {
    int_provable_goal(&IntGoal::new(s.antecedent.iter().cloned(), s.succedent.clone()))
}
