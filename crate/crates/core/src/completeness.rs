//! Proof synthesis for valid sequents of `G`, after Kalmár.
//!
//! For a formula `F` and a valuation `v` over its variables `x1..xn`, let
//! the literal context be `l1, ..., ln` with `li = xi` when `v(xi)` is true
//! and `li = ~xi` otherwise. [`kalmar_line`] derives `l1..ln -> F` when `F`
//! is true under `v` and `l1..ln -> ~F` when it is false, by recursion on
//! `F`. A valid sequent `D -> P` is proved by deriving `-> F` for its
//! implicational reading `F`, discharging the literals one variable at a
//! time with the `case` rule (last variable first), and finally importing
//! the antecedent `D` back with implication elimination.
//!
//! Proofs are exponential in the number of variables. No minimization is
//! attempted.

use std::collections::HashMap;
use std::sync::Arc;

use crate::builder::{ElabError, ProofBuilder, Step};
use crate::formula::Formula;
use crate::script::{Mode, ProofScript, Sequent};
use crate::semantics::{evaluate, sequent_valid, valuations, Valuation, Verdict};
use crate::sweep::Strategy;
use crate::system::SystemId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CompletenessError {
    #[error("`{0}` is outside the alphabet of G")]
    OutOfAlphabet(Formula),
    #[error("valuation does not assign variable `{0}`")]
    Unbound(Arc<str>),
    #[error("internal construction error: {0}")]
    Internal(#[from] ElabError),
}

/// The literals induced by a valuation, in lexicographic variable order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiteralContext {
    pub valuation: Valuation,
    pub literals: Vec<Formula>,
}

impl LiteralContext {
    pub fn new(valuation: Valuation) -> Self {
        let literals = valuation
            .iter()
            .map(|(x, value)| {
                let atom = Formula::Var(x.clone());
                if value {
                    atom
                } else {
                    Formula::neg(atom)
                }
            })
            .collect();
        LiteralContext { valuation, literals }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Proof(ProofScript),
    Countermodel(Valuation),
}

struct Kalmar<'a> {
    b: &'a mut ProofBuilder,
    ctx: &'a LiteralContext,
    memo: HashMap<Formula, Step>,
}

impl Kalmar<'_> {
    fn value(&self, f: &Formula) -> Result<bool, CompletenessError> {
        evaluate(f, &self.ctx.valuation).map_err(|e| CompletenessError::Unbound(e.0))
    }

    /// Derives `literals -> f` or `literals -> ~f`, whichever is true.
    fn line(&mut self, f: &Formula) -> Result<Step, CompletenessError> {
        if let Some(&step) = self.memo.get(f) {
            return Ok(step);
        }
        let lits = self.ctx.literals.clone();
        let step = match f {
            Formula::Var(x) => {
                let at = self
                    .ctx
                    .valuation
                    .iter()
                    .position(|(y, _)| y == x)
                    .ok_or_else(|| CompletenessError::Unbound(x.clone()))?;
                self.b.proj(&lits, at)?
            }
            Formula::Neg(a) => {
                let inner = self.line(a)?;
                if self.value(a)? {
                    self.b.dn_intro(inner)?
                } else {
                    // already `lits -> ~a`
                    inner
                }
            }
            Formula::Imp(a, c) => {
                let (va, vc) = (self.value(a)?, self.value(c)?);
                let a = (**a).clone();
                let mut with_a = lits.clone();
                with_a.push(a.clone());
                if vc {
                    // lits, a -> c
                    let c_line = self.line(c)?;
                    let wide = self.b.thin_to(c_line, &with_a)?;
                    self.b.imp_intro(wide)?
                } else if !va {
                    // lits, a -> a and lits, a -> ~a
                    let not_a = self.line(&a)?;
                    let yes = self.b.proj(&with_a, with_a.len() - 1)?;
                    let no = self.b.thin_to(not_a, &with_a)?;
                    let c_here = self.b.excontra(yes, no, (**c).clone())?;
                    self.b.imp_intro(c_here)?
                } else {
                    // lits, a => c -> c and lits, a => c -> ~c
                    let a_line = self.line(&a)?;
                    let not_c = self.line(c)?;
                    let mut with_imp = lits.clone();
                    with_imp.push(f.clone());
                    let a_here = self.b.thin_to(a_line, &with_imp)?;
                    let imp_here = self.b.proj(&with_imp, with_imp.len() - 1)?;
                    let c_here = self.b.imp_elim(a_here, imp_here)?;
                    let not_c_here = self.b.thin_to(not_c, &with_imp)?;
                    self.b.weak_raa(c_here, not_c_here)?
                }
            }
            Formula::Conj(..) | Formula::Falsum => return Err(CompletenessError::OutOfAlphabet(f.clone())),
        };
        self.memo.insert(f.clone(), step);
        Ok(step)
    }
}

fn check_alphabet(s: &Sequent) -> Result<(), CompletenessError> {
    match s.formulas().find(|f| !SystemId::G.admits(f)) {
        Some(f) => Err(CompletenessError::OutOfAlphabet(f.clone())),
        None => Ok(()),
    }
}

fn kalmar_into(b: &mut ProofBuilder, f: &Formula, ctx: &LiteralContext) -> Result<Step, CompletenessError> {
    Kalmar { b, ctx, memo: HashMap::new() }.line(f)
}

/// A macro-mode `G` script proving `literals(v) -> f` if `f` is true
/// under `v`, and `literals(v) -> ~f` otherwise.
pub fn kalmar_line(f: &Formula, v: &Valuation) -> Result<ProofScript, CompletenessError> {
    check_alphabet(&Sequent::theorem(f.clone()))?;
    let ctx = LiteralContext::new(v.clone());
    let mut b = ProofBuilder::new(SystemId::G, Mode::Macro);
    kalmar_into(&mut b, f, &ctx)?;
    Ok(b.into_script())
}

/// Proves `s` in `G` if it is valid, or returns the first countermodel.
pub fn prove(s: &Sequent) -> Result<Outcome, CompletenessError> {
    prove_with(s, Strategy::default())
}

pub fn prove_with(s: &Sequent, strategy: Strategy) -> Result<Outcome, CompletenessError> {
    check_alphabet(s)?;
    if let Verdict::Countermodel(v) = sequent_valid(s) {
        return Ok(Outcome::Countermodel(v));
    }
    let target = s.as_formula();
    let mut vars = s.variables();
    vars.sort();
    let all: Vec<Valuation> = valuations(&vars).collect();

    // one independent block per valuation, merged in enumeration order
    let blocks = strategy.map(&all, |v| {
        let mut b = ProofBuilder::new(SystemId::G, Mode::Macro);
        kalmar_into(&mut b, &target, &LiteralContext::new(v.clone())).map(|_| b)
    });
    let mut b = ProofBuilder::new(SystemId::G, Mode::Macro);
    let mut leaves = Vec::with_capacity(blocks.len());
    for block in blocks {
        leaves.push(b.append(block?));
    }

    // Leaf index = assignment read as a binary number, first variable most
    // significant and true = 1. Discharge the last variable first.
    let mut layer = leaves;
    while layer.len() > 1 {
        let mut next = Vec::with_capacity(layer.len() / 2);
        for pair in layer.chunks(2) {
            let (falsy, truthy) = (pair[0], pair[1]);
            next.push(b.case_split(truthy, falsy)?);
        }
        layer = next;
    }
    let mut cur = layer[0];

    if !s.antecedent.is_empty() {
        cur = b.thin_to(cur, &s.antecedent)?;
        for k in 0..s.antecedent.len() {
            let pr = b.proj(&s.antecedent, k)?;
            cur = b.imp_elim(pr, cur)?;
        }
    }
    debug_assert_eq!(b.seq(cur), s);
    let mut script = b.into_script();
    script.goal = Some(s.clone());
    Ok(Outcome::Proof(script))
}
