//! Formula and proof translations between `G`, `GBot` and `C`.
//!
//! | translation | formula map                     |
//! |-------------|---------------------------------|
//! | `GtoC`      | `P => Q` becomes `~(P . ~Q)`    |
//! | `CtoG`      | `P . Q` becomes `~(P => ~Q)`    |
//! | `GtoGBot`   | `~P` becomes `P => #`           |
//! | `GBotToG`   | `#` becomes `~(p => p)`         |
//!
//! Proofs are translated line by line from their elaborated (strict)
//! form. Rules that have a counterpart in the target are mapped to it;
//! the others are replaced by a fixed derivation in the target system.
//! The output is strict and is accepted by the kernel of the target.

use std::fmt;
use std::str::FromStr;

use crate::builder::{ElabError, ProofBuilder, Step};
use crate::derived::elaborate_script;
use crate::formula::Formula;
use crate::kernel::check_script;
use crate::script::{Mode, ProofScript, Rule, Sequent};
use crate::system::SystemId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TranslationId {
    GtoC,
    CtoG,
    GtoGBot,
    GBotToG,
}

impl TranslationId {
    pub const ALL: [TranslationId; 4] =
        [TranslationId::GtoC, TranslationId::CtoG, TranslationId::GtoGBot, TranslationId::GBotToG];

    pub fn source(self) -> SystemId {
        match self {
            TranslationId::GtoC | TranslationId::GtoGBot => SystemId::G,
            TranslationId::CtoG => SystemId::C,
            TranslationId::GBotToG => SystemId::GBot,
        }
    }

    pub fn target(self) -> SystemId {
        match self {
            TranslationId::GtoC => SystemId::C,
            TranslationId::GtoGBot => SystemId::GBot,
            TranslationId::CtoG | TranslationId::GBotToG => SystemId::G,
        }
    }

    pub fn between(from: SystemId, to: SystemId) -> Option<TranslationId> {
        TranslationId::ALL.into_iter().find(|t| t.source() == from && t.target() == to)
    }
}

impl fmt::Display for TranslationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.source(), self.target())
    }
}

impl FromStr for TranslationId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "GtoC" => Ok(TranslationId::GtoC),
            "CtoG" => Ok(TranslationId::CtoG),
            "GtoGBot" => Ok(TranslationId::GtoGBot),
            "GBotToG" => Ok(TranslationId::GBotToG),
            _ => Err(format!("unknown translation `{s}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TranslateError {
    #[error("`{formula}` is outside the alphabet of {system}")]
    OutOfAlphabet { formula: Formula, system: SystemId },
    #[error("expected a {expected} script, found {found}")]
    WrongSource { expected: SystemId, found: SystemId },
    #[error("source script is not accepted ({0} violations)")]
    NotAccepted(usize),
    #[error(transparent)]
    Elab(#[from] ElabError),
    #[error("translated line {line} concludes `{found}` instead of `{expected}`")]
    Internal { line: usize, expected: Sequent, found: Sequent },
}

/// The refutable formula standing in for falsum in `G`.
pub fn falsum_in_g() -> Formula {
    let p = Formula::var("p");
    Formula::neg(Formula::imp(p.clone(), p))
}

fn map_formula(t: TranslationId, f: &Formula) -> Formula {
    let rec = |g: &Formula| map_formula(t, g);
    match (t, f) {
        (_, Formula::Var(_)) => f.clone(),
        (TranslationId::GtoC, Formula::Imp(a, b)) => Formula::neg(Formula::conj(rec(a), Formula::neg(rec(b)))),
        (TranslationId::CtoG, Formula::Conj(a, b)) => Formula::neg(Formula::imp(rec(a), Formula::neg(rec(b)))),
        (TranslationId::GtoGBot, Formula::Neg(a)) => Formula::imp_falsum(rec(a)),
        (TranslationId::GBotToG, Formula::Falsum) => falsum_in_g(),
        (_, Formula::Falsum) => Formula::Falsum,
        (_, Formula::Neg(a)) => Formula::neg(rec(a)),
        (_, Formula::Imp(a, b)) => Formula::imp(rec(a), rec(b)),
        (_, Formula::Conj(a, b)) => Formula::conj(rec(a), rec(b)),
    }
}

pub fn translate_formula(t: TranslationId, f: &Formula) -> Result<Formula, TranslateError> {
    if !t.source().admits(f) {
        return Err(TranslateError::OutOfAlphabet { formula: f.clone(), system: t.source() });
    }
    Ok(map_formula(t, f))
}

pub fn translate_sequent(t: TranslationId, s: &Sequent) -> Result<Sequent, TranslateError> {
    Ok(Sequent::new(
        s.antecedent.iter().map(|f| translate_formula(t, f)).collect::<Result<_, _>>()?,
        translate_formula(t, &s.succedent)?,
    ))
}

// ----- derivations in G for the conjunction rules of C under CtoG -----

/// `D -> P` and `D -> Q` give `D -> ~(P => ~Q)`.
fn conj_intro_in_g(b: &mut ProofBuilder, i: Step, j: Step) -> Result<Step, ElabError> {
    let p = b.seq(i).succedent.clone();
    let q = b.seq(j).succedent.clone();
    let x = Formula::imp(p, Formula::neg(q));
    let mut ctx = b.seq(i).antecedent.clone();
    ctx.push(x);
    let p_here = b.thin_to(i, &ctx)?;
    let x_here = b.proj(&ctx, ctx.len() - 1)?;
    let not_q = b.imp_elim(p_here, x_here)?;
    let q_here = b.thin_to(j, &ctx)?;
    b.weak_raa(q_here, not_q)
}

fn split_pair(b: &ProofBuilder, i: Step) -> Result<(Formula, Formula), ElabError> {
    match b.seq(i).succedent.as_neg().and_then(Formula::as_imp) {
        Some((p, nq)) => match nq.as_neg() {
            Some(q) => Ok((p.clone(), q.clone())),
            None => Err(ElabError::shape("not a translated conjunction")),
        },
        None => Err(ElabError::shape("not a translated conjunction")),
    }
}

/// `D -> ~(P => ~Q)` gives `D -> P`.
fn conj_elim_l_in_g(b: &mut ProofBuilder, i: Step) -> Result<Step, ElabError> {
    let (p, q) = split_pair(b, i)?;
    let delta = b.seq(i).antecedent.clone();
    let mut outer = delta.clone();
    outer.push(Formula::neg(p.clone()));
    let mut inner = outer.clone();
    inner.push(p);
    let yes = b.proj(&inner, inner.len() - 1)?;
    let no = b.proj(&inner, inner.len() - 2)?;
    let nq = b.excontra(yes, no, Formula::neg(q))?;
    let imp = b.imp_intro(nq)?;
    let neg_imp = b.thin_to(i, &outer)?;
    b.raa(imp, neg_imp)
}

/// `D -> ~(P => ~Q)` gives `D -> Q`.
fn conj_elim_r_in_g(b: &mut ProofBuilder, i: Step) -> Result<Step, ElabError> {
    let (p, q) = split_pair(b, i)?;
    let mut outer = b.seq(i).antecedent.clone();
    outer.push(Formula::neg(q));
    let mut inner = outer.clone();
    inner.push(p);
    let nq = b.proj(&inner, inner.len() - 2)?;
    let imp = b.imp_intro(nq)?;
    let neg_imp = b.thin_to(i, &outer)?;
    b.raa(imp, neg_imp)
}

/// Falsum reductio under GBotToG: `D, P => F -> F` gives `D -> P` where
/// `F = ~(p => p)`.
fn raa_bot_in_g(b: &mut ProofBuilder, i: Step) -> Result<Step, ElabError> {
    let f = falsum_in_g();
    let mut delta = b.seq(i).antecedent.clone();
    let last = delta.pop().ok_or_else(|| ElabError::shape("empty antecedent"))?;
    let p = match last.as_imp() {
        Some((p, bot)) if *bot == f => p.clone(),
        _ => return Err(ElabError::shape("not a translated falsum reductio")),
    };
    let mut outer = delta.clone();
    outer.push(Formula::neg(p.clone()));
    let mut inner = outer.clone();
    inner.push(p);
    // D, ~P -> P => F
    let yes = b.proj(&inner, inner.len() - 1)?;
    let no = b.proj(&inner, inner.len() - 2)?;
    let f_inner = b.excontra(yes, no, f)?;
    let p_to_f = b.imp_intro(f_inner)?;
    // D, ~P -> F
    let closed = b.imp_intro(i)?;
    let closed = b.thin_to(closed, &outer)?;
    let f_outer = b.imp_elim(p_to_f, closed)?;
    // D, ~P -> p => p
    let pv = Formula::var("p");
    let ax = b.axiom(pv)?;
    let identity = b.imp_intro(ax)?;
    let identity = b.thin_to(identity, &outer)?;
    b.raa(identity, f_outer)
}

fn added_front(s: &Sequent) -> Formula {
    s.antecedent[0].clone()
}

fn added_back(s: &Sequent) -> Formula {
    s.antecedent[s.antecedent.len() - 1].clone()
}

/// Translates an accepted proof. Macro scripts are elaborated first.
pub fn translate_proof(t: TranslationId, script: &ProofScript) -> Result<ProofScript, TranslateError> {
    if script.system != t.source() {
        return Err(TranslateError::WrongSource { expected: t.source(), found: script.system });
    }
    let report = check_script(script);
    if !report.accepted() {
        return Err(TranslateError::NotAccepted(report.violations.len()));
    }
    let strict;
    let source = if script.uses_macros() {
        strict = elaborate_script(script)?;
        &strict
    } else {
        script
    };

    let mut b = ProofBuilder::new(t.target(), Mode::Strict);
    let mut map: Vec<Step> = Vec::with_capacity(source.lines.len());
    for (idx, line) in source.lines.iter().enumerate() {
        let refs: Vec<Step> = line.justification.premises.iter().map(|&r| map[r - 1]).collect();
        let s = &line.sequent;
        let tf = |f: &Formula| map_formula(t, f);
        let step = match line.justification.rule {
            Rule::Premise => b.premise(s.map(tf))?,
            Rule::Axiom => b.axiom(tf(&s.succedent))?,
            Rule::ThinFront => b.thin_front(refs[0], tf(&added_front(s)))?,
            Rule::ThinBack => b.thin_back(refs[0], tf(&added_back(s)))?,
            Rule::ImpIntro if t == TranslationId::GtoC => b.c_imp_intro(refs[0])?,
            Rule::ImpElim if t == TranslationId::GtoC => b.c_imp_elim(refs[0], refs[1])?,
            Rule::ImpIntro => b.imp_intro(refs[0])?,
            Rule::ImpElim => b.imp_elim(refs[0], refs[1])?,
            Rule::Raa => b.raa_any(refs[0], refs[1])?,
            Rule::RaaBot => raa_bot_in_g(&mut b, refs[0])?,
            Rule::ConjIntro => conj_intro_in_g(&mut b, refs[0], refs[1])?,
            Rule::ConjElimL => conj_elim_l_in_g(&mut b, refs[0])?,
            Rule::ConjElimR => conj_elim_r_in_g(&mut b, refs[0])?,
            Rule::Cut => b.cut_star(refs[0], refs[1])?,
            Rule::RaaShort => {
                let l = conj_elim_l_in_g(&mut b, refs[0])?;
                let r = conj_elim_r_in_g(&mut b, refs[0])?;
                b.raa(l, r)?
            }
            other => unreachable!("`{other}` cannot occur in an accepted strict script"),
        };
        let expected = s.map(tf);
        if *b.seq(step) != expected {
            return Err(TranslateError::Internal { line: idx + 1, expected, found: b.seq(step).clone() });
        }
        map.push(step);
    }
    let mut out = b.into_script();
    if let Some(goal) = &script.goal {
        out.goal = Some(goal.map(|f| map_formula(t, f)));
    }
    // the last source line may map to an earlier target line only if the
    // source ends with a duplicate, which strict scripts never need
    if let (Some(&last), Some(want)) = (map.last(), script.conclusion()) {
        let want = want.map(|f| map_formula(t, f));
        if last != out.lines.len() || out.lines[last - 1].sequent != want {
            return Err(TranslateError::Internal { line: map.len(), expected: want, found: out.lines[last - 1].sequent.clone() });
        }
    }
    Ok(out)
}
