//! Forward proof construction.
//!
//! [`ProofBuilder`] appends lines to a script and hands back their line
//! numbers. Every method computes its own conclusion. In [`Mode::Macro`]
//! a derived rule that the system's catalogue offers becomes a single
//! line; in [`Mode::Strict`] it is expanded into kernel rules on the spot.
//! The builder never certifies anything: its output goes through
//! [`crate::kernel`] like any other script.

use crate::formula::Formula;
use crate::kernel::{check_primitive, StepError, ViolationKind};
use crate::script::{Justification, Line, Mode, ProofScript, Rule, Sequent};
use crate::system::SystemId;

/// A 1-based line number in the builder.
pub type Step = usize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ElabError {
    #[error("`{rule}` is not available in system {system}")]
    NotInSystem { rule: Rule, system: SystemId },
    #[error("{0}")]
    Shape(String),
    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Box<ElabError> },
}

impl ElabError {
    pub(crate) fn shape(detail: impl Into<String>) -> Self {
        ElabError::Shape(detail.into())
    }

    pub fn into_step_error(self) -> StepError {
        match self {
            ElabError::NotInSystem { .. } => StepError::new(ViolationKind::RuleNotInSystem, self.to_string()),
            ElabError::AtLine { source, .. } => source.into_step_error(),
            ElabError::Shape(detail) => StepError::new(ViolationKind::WrongShape, detail),
        }
    }
}

pub type ElabResult<T> = Result<T, ElabError>;

/// Position at which `needle` occurs as a contiguous block of `hay`,
/// preferring the leftmost one.
pub(crate) fn find_block(hay: &[Formula], needle: &[Formula]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    (0..=hay.len() - needle.len()).find(|&i| hay[i..i + needle.len()] == *needle)
}

#[derive(Clone, Debug)]
pub struct ProofBuilder {
    system: SystemId,
    emit: Mode,
    lines: Vec<Line>,
}

impl ProofBuilder {
    pub fn new(system: SystemId, emit: Mode) -> Self {
        ProofBuilder { system, emit, lines: Vec::new() }
    }

    pub fn system(&self) -> SystemId {
        self.system
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn seq(&self, step: Step) -> &Sequent {
        &self.lines[step - 1].sequent
    }

    fn ctx(&self, step: Step) -> Vec<Formula> {
        self.seq(step).antecedent.clone()
    }

    fn succ(&self, step: Step) -> Formula {
        self.seq(step).succedent.clone()
    }

    pub fn into_script(self) -> ProofScript {
        ProofScript { system: self.system, mode: self.emit, goal: None, lines: self.lines }
    }

    /// Appends a line without any validation.
    pub fn push_unchecked(&mut self, sequent: Sequent, rule: Rule, premises: Vec<Step>) -> Step {
        self.lines.push(Line { sequent, justification: Justification::new(rule, premises) });
        self.lines.len()
    }

    /// Appends the lines of a self-contained builder (no premise lines
    /// referring outside of it) and returns the step of its last line.
    pub fn append(&mut self, other: ProofBuilder) -> Step {
        let offset = self.lines.len();
        self.lines.extend(other.lines.into_iter().map(|mut line| {
            for p in &mut line.justification.premises {
                *p += offset;
            }
            line
        }));
        self.lines.len()
    }

    fn neg(&self, f: Formula) -> Formula {
        self.system.neg(f)
    }

    fn require(&self, rule: Rule) -> ElabResult<()> {
        if rule.is_primitive_in(self.system) || rule.is_macro_in(self.system) {
            Ok(())
        } else {
            Err(ElabError::NotInSystem { rule, system: self.system })
        }
    }

    fn emits(&self, rule: Rule) -> bool {
        self.emit == Mode::Macro && rule.is_macro_in(self.system)
    }

    fn primitive(&mut self, rule: Rule, premises: Vec<Step>, concl: Sequent) -> ElabResult<Step> {
        self.require(rule)?;
        let cited: Vec<&Sequent> = premises.iter().map(|&p| self.seq(p)).collect();
        check_primitive(self.system, rule, &cited, &concl).map_err(|e| ElabError::Shape(format!("{rule}: {}", e.detail)))?;
        Ok(self.push_unchecked(concl, rule, premises))
    }

    fn split_last(&self, step: Step) -> ElabResult<(Vec<Formula>, Formula)> {
        let mut ctx = self.ctx(step);
        let last = ctx.pop().ok_or_else(|| ElabError::shape(format!("`{}` has an empty antecedent", self.seq(step))))?;
        Ok((ctx, last))
    }

    // ----- kernel rules -----

    pub fn premise(&mut self, s: Sequent) -> ElabResult<Step> {
        self.primitive(Rule::Premise, vec![], s)
    }

    pub fn axiom(&mut self, f: Formula) -> ElabResult<Step> {
        self.primitive(Rule::Axiom, vec![], Sequent::new(vec![f.clone()], f))
    }

    pub fn thin_front(&mut self, i: Step, f: Formula) -> ElabResult<Step> {
        let mut ctx = vec![f];
        ctx.extend(self.ctx(i));
        self.primitive(Rule::ThinFront, vec![i], Sequent::new(ctx, self.succ(i)))
    }

    pub fn thin_back(&mut self, i: Step, f: Formula) -> ElabResult<Step> {
        let mut ctx = self.ctx(i);
        ctx.push(f);
        self.primitive(Rule::ThinBack, vec![i], Sequent::new(ctx, self.succ(i)))
    }

    pub fn imp_intro(&mut self, i: Step) -> ElabResult<Step> {
        let (ctx, last) = self.split_last(i)?;
        let concl = Sequent::new(ctx, Formula::imp(last, self.succ(i)));
        self.primitive(Rule::ImpIntro, vec![i], concl)
    }

    /// From `D -> P` (i) and `D -> P => Q` (j) to `D -> Q`.
    pub fn imp_elim(&mut self, i: Step, j: Step) -> ElabResult<Step> {
        let right = match self.seq(j).succedent.as_imp() {
            Some((_, r)) => r.clone(),
            None => return Err(ElabError::shape(format!("`{}` is not an implication", self.seq(j)))),
        };
        self.primitive(Rule::ImpElim, vec![i, j], Sequent::new(self.ctx(i), right))
    }

    pub fn raa(&mut self, i: Step, j: Step) -> ElabResult<Step> {
        let (ctx, last) = self.split_last(i)?;
        let body = last.as_neg().cloned().ok_or_else(|| ElabError::shape(format!("`{last}` is not a negation")))?;
        self.primitive(Rule::Raa, vec![i, j], Sequent::new(ctx, body))
    }

    pub fn raa_bot(&mut self, i: Step) -> ElabResult<Step> {
        let (ctx, last) = self.split_last(i)?;
        let body = match last.as_imp() {
            Some((b, Formula::Falsum)) => b.clone(),
            _ => return Err(ElabError::shape(format!("`{last}` is not of the form P => #"))),
        };
        self.primitive(Rule::RaaBot, vec![i], Sequent::new(ctx, body))
    }

    pub fn conj_intro(&mut self, i: Step, j: Step) -> ElabResult<Step> {
        let concl = Sequent::new(self.ctx(i), Formula::conj(self.succ(i), self.succ(j)));
        self.primitive(Rule::ConjIntro, vec![i, j], concl)
    }

    pub fn conj_elim_l(&mut self, i: Step) -> ElabResult<Step> {
        self.conj_elim(i, Rule::ConjElimL)
    }

    pub fn conj_elim_r(&mut self, i: Step) -> ElabResult<Step> {
        self.conj_elim(i, Rule::ConjElimR)
    }

    fn conj_elim(&mut self, i: Step, rule: Rule) -> ElabResult<Step> {
        let (l, r) = match self.seq(i).succedent.as_conj() {
            Some((l, r)) => (l.clone(), r.clone()),
            None => return Err(ElabError::shape(format!("`{}` is not a conjunction", self.seq(i)))),
        };
        let part = if rule == Rule::ConjElimL { l } else { r };
        self.primitive(rule, vec![i], Sequent::new(self.ctx(i), part))
    }

    /// Simple cut: `R -> P` (i) and `D, P -> Q` (j) give `D, R -> Q`.
    pub fn cut(&mut self, i: Step, j: Step) -> ElabResult<Step> {
        let (mut ctx, _) = self.split_last(j)?;
        ctx.extend(self.ctx(i));
        self.primitive(Rule::Cut, vec![i, j], Sequent::new(ctx, self.succ(j)))
    }

    pub fn raa_short(&mut self, i: Step) -> ElabResult<Step> {
        let (ctx, last) = self.split_last(i)?;
        let body = last.as_neg().cloned().ok_or_else(|| ElabError::shape(format!("`{last}` is not a negation")))?;
        self.primitive(Rule::RaaShort, vec![i], Sequent::new(ctx, body))
    }

    // ----- system-generic helpers -----

    /// Strong reductio with this system's negation: from `D, ¬P -> Q` and
    /// `D, ¬P -> ¬Q` conclude `D -> P`. With falsum as primitive this is
    /// implication elimination followed by the falsum reductio.
    pub fn raa_any(&mut self, i: Step, j: Step) -> ElabResult<Step> {
        match self.system {
            SystemId::GBot => {
                let bot = self.imp_elim(i, j)?;
                self.raa_bot(bot)
            }
            _ => self.raa(i, j),
        }
    }

    /// `R -> P` and `D, P -> Q` give `D, R -> Q`: the primitive simple cut
    /// where there is one, `cut*` otherwise.
    pub fn cut_any(&mut self, i: Step, j: Step) -> ElabResult<Step> {
        match self.system {
            SystemId::C => self.cut(i, j),
            _ => self.cut_star(i, j),
        }
    }

    /// Reaches `target -> Q` from `D -> Q` for any `target` containing every
    /// member of `D`, by exporting the non-shared suffix of `D` as
    /// implications, thinning, and importing them back against projections.
    pub fn restructure(&mut self, i: Step, target: &[Formula]) -> ElabResult<Step> {
        let ctx = self.ctx(i);
        if ctx == target {
            return Ok(i);
        }
        let shared = ctx.iter().zip(target).take_while(|(a, b)| a == b).count();
        let exported = &ctx[shared..];
        if let Some(missing) = exported.iter().find(|f| !target.contains(f)) {
            return Err(ElabError::shape(format!("`{missing}` does not occur in the target context")));
        }
        let mut cur = i;
        for _ in exported {
            cur = self.imp_intro(cur)?;
        }
        cur = self.thin_to(cur, target)?;
        for f in exported {
            let at = target.iter().position(|t| t == f).expect("checked above");
            let pr = self.proj(target, at)?;
            cur = self.imp_elim(pr, cur)?;
        }
        Ok(cur)
    }

    /// Thinning when the old context sits contiguously inside the new one,
    /// restructuring otherwise.
    pub fn weaken(&mut self, i: Step, target: &[Formula]) -> ElabResult<Step> {
        let ctx = self.ctx(i);
        if ctx == target {
            Ok(i)
        } else if find_block(target, &ctx).is_some() {
            self.thin_to(i, target)
        } else {
            self.restructure(i, target)
        }
    }

    // ----- derived rules -----

    /// `thin`: `D' -> Q` from `D -> Q` where `D` is a contiguous block of `D'`.
    /// The leftmost placement is used, i.e. the longest suffix is added.
    pub fn thin_to(&mut self, i: Step, target: &[Formula]) -> ElabResult<Step> {
        self.require(Rule::Thin)?;
        let ctx = self.ctx(i);
        if ctx == target {
            return Ok(i);
        }
        let at = find_block(target, &ctx).ok_or_else(|| {
            ElabError::shape(format!("`{}` is not a contiguous part of the target context", self.seq(i)))
        })?;
        if self.emits(Rule::Thin) {
            return Ok(self.push_unchecked(Sequent::new(target.to_vec(), self.succ(i)), Rule::Thin, vec![i]));
        }
        let mut cur = i;
        for f in &target[at + ctx.len()..] {
            cur = self.thin_back(cur, f.clone())?;
        }
        for f in target[..at].iter().rev() {
            cur = self.thin_front(cur, f.clone())?;
        }
        Ok(cur)
    }

    /// `proj`: `D1, P, D2 -> P` with `P` at position `at`.
    pub fn proj(&mut self, ctx: &[Formula], at: usize) -> ElabResult<Step> {
        self.require(Rule::Proj)?;
        let p = ctx.get(at).cloned().ok_or_else(|| ElabError::shape("projection index out of range"))?;
        if ctx.len() > 1 && self.emits(Rule::Proj) {
            return Ok(self.push_unchecked(Sequent::new(ctx.to_vec(), p), Rule::Proj, vec![]));
        }
        let mut cur = self.axiom(p)?;
        for f in &ctx[at + 1..] {
            cur = self.thin_back(cur, f.clone())?;
        }
        for f in ctx[..at].iter().rev() {
            cur = self.thin_front(cur, f.clone())?;
        }
        Ok(cur)
    }

    /// `perm`: swaps the antecedent formulas at `at` and `at + 1`.
    pub fn perm(&mut self, i: Step, at: usize) -> ElabResult<Step> {
        self.require(Rule::Perm)?;
        let mut target = self.ctx(i);
        if at + 1 >= target.len() {
            return Err(ElabError::shape("permutation position out of range"));
        }
        target.swap(at, at + 1);
        if self.emits(Rule::Perm) {
            return Ok(self.push_unchecked(Sequent::new(target, self.succ(i)), Rule::Perm, vec![i]));
        }
        // export everything from the swapped pair onwards, then re-import
        let ctx = self.ctx(i);
        let exported = ctx[at..].to_vec();
        let mut cur = i;
        for _ in &exported {
            cur = self.imp_intro(cur)?;
        }
        cur = self.thin_to(cur, &target)?;
        for (k, _) in exported.iter().enumerate() {
            // exported[k] sits at position at+k of ctx; in target the pair is swapped
            let pos = match k {
                0 => at + 1,
                1 => at,
                _ => at + k,
            };
            let pr = self.proj(&target, pos)?;
            cur = self.imp_elim(pr, cur)?;
        }
        Ok(cur)
    }

    /// `contr`: `D, P -> Q` from `D, P, P -> Q`.
    pub fn contr(&mut self, i: Step) -> ElabResult<Step> {
        self.require(Rule::Contr)?;
        let ctx = self.ctx(i);
        let n = ctx.len();
        if n < 2 || ctx[n - 1] != ctx[n - 2] {
            return Err(ElabError::shape(format!("`{}` does not end with a repeated formula", self.seq(i))));
        }
        let target = ctx[..n - 1].to_vec();
        if self.emits(Rule::Contr) {
            return Ok(self.push_unchecked(Sequent::new(target, self.succ(i)), Rule::Contr, vec![i]));
        }
        let exported = self.imp_intro(i)?;
        let pr = self.proj(&target, n - 2)?;
        self.imp_elim(pr, exported)
    }

    /// `cut*`: `G -> P` (i) and `D, P -> Q` (j) give `D, G -> Q`.
    pub fn cut_star(&mut self, i: Step, j: Step) -> ElabResult<Step> {
        self.require(Rule::CutStar)?;
        let (delta, last) = self.split_last(j)?;
        if last != self.succ(i) {
            return Err(ElabError::shape(format!(
                "last antecedent formula of `{}` is not `{}`",
                self.seq(j),
                self.succ(i)
            )));
        }
        let mut target = delta;
        target.extend(self.ctx(i));
        if self.emits(Rule::CutStar) {
            return Ok(self.push_unchecked(Sequent::new(target, self.succ(j)), Rule::CutStar, vec![i, j]));
        }
        let exported = self.imp_intro(j)?;
        let major = self.thin_to(exported, &target)?;
        let minor = self.thin_to(i, &target)?;
        self.imp_elim(minor, major)
    }

    /// `excontra`: `D -> P` from `D -> Q` and `D -> ¬Q`.
    pub fn excontra(&mut self, i: Step, j: Step, p: Formula) -> ElabResult<Step> {
        self.require(Rule::ExContra)?;
        self.check_same_context(i, j)?;
        if self.succ(j) != self.neg(self.succ(i)) {
            return Err(ElabError::shape(format!("`{}` is not the negation of `{}`", self.succ(j), self.succ(i))));
        }
        if self.emits(Rule::ExContra) {
            return Ok(self.push_unchecked(Sequent::new(self.ctx(i), p), Rule::ExContra, vec![i, j]));
        }
        let np = self.neg(p);
        let a = self.thin_back(i, np.clone())?;
        let b = self.thin_back(j, np)?;
        self.raa_any(a, b)
    }

    /// `dne`: `¬¬P -> P`.
    pub fn dne(&mut self, p: Formula) -> ElabResult<Step> {
        self.require(Rule::Dne)?;
        let np = self.neg(p.clone());
        let nnp = self.neg(np.clone());
        if self.emits(Rule::Dne) {
            return Ok(self.push_unchecked(Sequent::new(vec![nnp], p), Rule::Dne, vec![]));
        }
        let a = self.axiom(np.clone())?;
        let a = self.thin_front(a, nnp.clone())?;
        let b = self.axiom(nnp)?;
        let b = self.thin_back(b, np)?;
        self.raa_any(a, b)
    }

    /// `weak-raa`: `D -> ¬P` from `D, P -> Q` and `D, P -> ¬Q`, by cutting
    /// both premises with `¬¬P -> P` and applying strong reductio.
    pub fn weak_raa(&mut self, i: Step, j: Step) -> ElabResult<Step> {
        self.require(Rule::WeakRaa)?;
        self.check_same_context(i, j)?;
        if self.succ(j) != self.neg(self.succ(i)) {
            return Err(ElabError::shape(format!("`{}` is not the negation of `{}`", self.succ(j), self.succ(i))));
        }
        let (ctx, p) = self.split_last(i)?;
        if self.emits(Rule::WeakRaa) {
            let np = self.neg(p);
            return Ok(self.push_unchecked(Sequent::new(ctx, np), Rule::WeakRaa, vec![i, j]));
        }
        let d = self.dne(p)?;
        let a = self.cut_any(d, i)?;
        let b = self.cut_any(d, j)?;
        self.raa_any(a, b)
    }

    /// `dn-intro`: `D -> ¬¬P` from `D -> P`.
    pub fn dn_intro(&mut self, i: Step) -> ElabResult<Step> {
        self.require(Rule::DnIntro)?;
        let ctx = self.ctx(i);
        let np = self.neg(self.succ(i));
        if self.emits(Rule::DnIntro) {
            let nnp = self.neg(np);
            return Ok(self.push_unchecked(Sequent::new(ctx, nnp), Rule::DnIntro, vec![i]));
        }
        let mut wide = ctx;
        wide.push(np);
        let a = self.thin_to(i, &wide)?;
        let b = self.proj(&wide, wide.len() - 1)?;
        self.weak_raa(a, b)
    }

    /// `case`: `D -> P` from `D, Q -> P` and `D, ¬Q -> P`.
    pub fn case_split(&mut self, i: Step, j: Step) -> ElabResult<Step> {
        self.require(Rule::Case)?;
        let (ctx, q) = self.split_last(i)?;
        let (ctx_j, nq) = self.split_last(j)?;
        if ctx != ctx_j || nq != self.neg(q.clone()) || self.succ(i) != self.succ(j) {
            return Err(ElabError::shape(format!(
                "`{}` and `{}` are not the two cases of a split",
                self.seq(i),
                self.seq(j)
            )));
        }
        let p = self.succ(i);
        if self.emits(Rule::Case) {
            return Ok(self.push_unchecked(Sequent::new(ctx, p), Rule::Case, vec![i, j]));
        }
        let np = self.neg(p);
        let pos = self.imp_intro(i)?;
        let neg = self.imp_intro(j)?;
        let mut outer = ctx;
        outer.push(np);
        let mut inner = outer.clone();
        inner.push(q);
        // D, ¬P, Q -> P and D, ¬P, Q -> ¬P give D, ¬P -> ¬Q
        let pos = self.thin_to(pos, &inner)?;
        let q_here = self.proj(&inner, inner.len() - 1)?;
        let p_here = self.imp_elim(q_here, pos)?;
        let np_here = self.proj(&inner, inner.len() - 2)?;
        let not_q = self.weak_raa(p_here, np_here)?;
        // D, ¬P -> ¬Q => P, hence D, ¬P -> P
        let neg = self.thin_to(neg, &outer)?;
        let p_outer = self.imp_elim(not_q, neg)?;
        let np_outer = self.proj(&outer, outer.len() - 1)?;
        self.raa_any(p_outer, np_outer)
    }

    /// `c-imp-intro`: `D -> ~(P . ~Q)` from `D, P -> Q`.
    pub fn c_imp_intro(&mut self, i: Step) -> ElabResult<Step> {
        self.require(Rule::CImpIntro)?;
        let (ctx, p) = self.split_last(i)?;
        let q = self.succ(i);
        let pair = Formula::conj(p, Formula::neg(q));
        if self.emits(Rule::CImpIntro) {
            return Ok(self.push_unchecked(Sequent::new(ctx, Formula::neg(pair)), Rule::CImpIntro, vec![i]));
        }
        let ax = self.axiom(pair.clone())?;
        let left = self.conj_elim_l(ax)?;
        let cut = self.cut(left, i)?;
        let right = self.conj_elim_r(ax)?;
        let mut wide = ctx;
        wide.push(pair);
        let right = self.thin_to(right, &wide)?;
        self.weak_raa(cut, right)
    }

    /// `c-imp-elim`: `D -> Q` from `D -> P` and `D -> ~(P . ~Q)`.
    pub fn c_imp_elim(&mut self, i: Step, j: Step) -> ElabResult<Step> {
        self.require(Rule::CImpElim)?;
        self.check_same_context(i, j)?;
        let p = self.succ(i);
        let q = match self.seq(j).succedent.as_neg().and_then(Formula::as_conj) {
            Some((l, r)) if *l == p => r.as_neg().cloned(),
            _ => None,
        }
        .ok_or_else(|| ElabError::shape(format!("`{}` is not of the form ~({p} . ~Q)", self.succ(j))))?;
        let ctx = self.ctx(i);
        if self.emits(Rule::CImpElim) {
            return Ok(self.push_unchecked(Sequent::new(ctx, q), Rule::CImpElim, vec![i, j]));
        }
        let nq = Formula::neg(q);
        let mut wide = ctx;
        wide.push(nq.clone());
        let a = self.thin_to(i, &wide)?;
        let ax = self.axiom(nq)?;
        let b = self.thin_to(ax, &wide)?;
        let pair = self.conj_intro(a, b)?;
        let neg_pair = self.thin_to(j, &wide)?;
        self.raa(pair, neg_pair)
    }

    /// `raa-via-short`: strong reductio obtained from its conjunctive form.
    pub fn raa_via_short(&mut self, i: Step, j: Step) -> ElabResult<Step> {
        self.require(Rule::RaaViaShort)?;
        self.check_same_context(i, j)?;
        if self.succ(j) != Formula::neg(self.succ(i)) {
            return Err(ElabError::shape(format!("`{}` is not the negation of `{}`", self.succ(j), self.succ(i))));
        }
        let (ctx, last) = self.split_last(i)?;
        let p = last.as_neg().cloned().ok_or_else(|| ElabError::shape(format!("`{last}` is not a negation")))?;
        if self.emits(Rule::RaaViaShort) {
            return Ok(self.push_unchecked(Sequent::new(ctx, p), Rule::RaaViaShort, vec![i, j]));
        }
        let both = self.conj_intro(i, j)?;
        self.raa_short(both)
    }

    /// `raa-short-via-raa`: the conjunctive form obtained from strong reductio.
    pub fn raa_short_via_raa(&mut self, i: Step) -> ElabResult<Step> {
        self.require(Rule::RaaShortViaRaa)?;
        let (ctx, last) = self.split_last(i)?;
        let p = last.as_neg().cloned().ok_or_else(|| ElabError::shape(format!("`{last}` is not a negation")))?;
        match self.seq(i).succedent.as_conj() {
            Some((l, r)) if *r == Formula::neg(l.clone()) => {}
            _ => return Err(ElabError::shape(format!("`{}` is not of the form Q . ~Q", self.succ(i)))),
        }
        if self.emits(Rule::RaaShortViaRaa) {
            return Ok(self.push_unchecked(Sequent::new(ctx, p), Rule::RaaShortViaRaa, vec![i]));
        }
        let l = self.conj_elim_l(i)?;
        let r = self.conj_elim_r(i)?;
        self.raa(l, r)
    }

    fn check_same_context(&self, i: Step, j: Step) -> ElabResult<()> {
        if self.seq(i).antecedent == self.seq(j).antecedent {
            Ok(())
        } else {
            Err(ElabError::shape(format!("antecedents of `{}` and `{}` differ", self.seq(i), self.seq(j))))
        }
    }
}
