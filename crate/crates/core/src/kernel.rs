//! The trusted checker.
//!
//! Every primitive rule is validated here and nowhere else. Derived-rule
//! lines in macro-mode scripts are expanded by [`crate::derived`] and the
//! expansion is re-checked by this module, so the elaborator does not need
//! to be trusted.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::hash::{BuildHasherDefault, Hasher};
use std::sync::Arc;

use crate::derived::{self, MacroInstance};
use crate::formula::Formula;
use crate::script::{Line, Mode, ProofScript, Rule, Sequent};
use crate::system::SystemId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViolationKind {
    /// An additive rule's premises have different antecedents.
    ContextMismatch,
    WrongShape,
    RuleNotInSystem,
    ArityMismatch,
    BadReference,
    OutOfAlphabet,
    GoalMismatch,
    NotASchemaInstance,
    BadMp,
    WrongSystemAxiom,
    BadHypothesis,
}

impl ViolationKind {
    pub fn name(self) -> &'static str {
        match self {
            ViolationKind::ContextMismatch => "context-mismatch",
            ViolationKind::WrongShape => "wrong-shape",
            ViolationKind::RuleNotInSystem => "rule-not-in-system",
            ViolationKind::ArityMismatch => "arity-mismatch",
            ViolationKind::BadReference => "bad-reference",
            ViolationKind::OutOfAlphabet => "out-of-alphabet",
            ViolationKind::GoalMismatch => "goal-mismatch",
            ViolationKind::NotASchemaInstance => "not-a-schema-instance",
            ViolationKind::BadMp => "bad-mp",
            ViolationKind::WrongSystemAxiom => "wrong-system-axiom",
            ViolationKind::BadHypothesis => "bad-hypothesis",
        }
    }
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A failed step, before it is attributed to a line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepError {
    pub kind: ViolationKind,
    pub detail: String,
}

impl StepError {
    pub fn new(kind: ViolationKind, detail: impl Into<String>) -> Self {
        StepError { kind, detail: detail.into() }
    }

    fn shape(detail: impl Into<String>) -> Self {
        StepError::new(ViolationKind::WrongShape, detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub line: usize,
    pub kind: ViolationKind,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub violations: Vec<Violation>,
    /// Number of lines per rule token.
    pub stats: BTreeMap<String, usize>,
}

impl CheckReport {
    pub fn accepted(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn push(&mut self, line: usize, err: StepError) {
        self.violations.push(Violation { line, kind: err.kind, detail: err.detail });
    }

    pub(crate) fn count(&mut self, token: &str) {
        *self.stats.entry(token.to_string()).or_default() += 1;
    }

    /// One line per violation, then `ACCEPTED` or `REJECTED (k violations)`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "line {}: {}: {}", v.line, v.kind, v.detail)?;
        }
        if self.accepted() {
            writeln!(f, "ACCEPTED")
        } else {
            writeln!(f, "REJECTED ({} violations)", self.violations.len())
        }
    }
}

fn same_context(a: &Sequent, b: &Sequent) -> Result<(), StepError> {
    if a.antecedent == b.antecedent {
        Ok(())
    } else {
        Err(StepError::new(ViolationKind::ContextMismatch, format!("antecedents of `{a}` and `{b}` differ")))
    }
}

fn expect(cond: bool, detail: impl FnOnce() -> String) -> Result<(), StepError> {
    if cond {
        Ok(())
    } else {
        Err(StepError::shape(detail()))
    }
}

fn split_last(s: &Sequent) -> Result<(&[Formula], &Formula), StepError> {
    match s.antecedent.split_last() {
        Some((last, rest)) => Ok((rest, last)),
        None => Err(StepError::shape(format!("`{s}` has an empty antecedent"))),
    }
}

/// Checks a single primitive step.
///
/// `premises` are the sequents cited by the justification, in order. The
/// result depends on nothing but the rule, the premises and the conclusion.
pub fn check_primitive(system: SystemId, rule: Rule, premises: &[&Sequent], concl: &Sequent) -> Result<(), StepError> {
    if !rule.is_primitive_in(system) {
        return Err(StepError::new(
            ViolationKind::RuleNotInSystem,
            format!("`{rule}` is not a primitive rule of system {system}"),
        ));
    }
    if premises.len() != rule.arity() {
        return Err(StepError::new(
            ViolationKind::ArityMismatch,
            format!("`{rule}` takes {} premises, {} cited", rule.arity(), premises.len()),
        ));
    }
    match rule {
        Rule::Premise => Ok(()),
        Rule::Axiom => expect(concl.antecedent.len() == 1 && concl.antecedent[0] == concl.succedent, || {
            format!("`{concl}` is not of the form P -> P")
        }),
        Rule::ThinFront | Rule::ThinBack => {
            let p = premises[0];
            expect(concl.succedent == p.succedent, || "thinning must keep the succedent".into())?;
            let n = p.antecedent.len();
            let kept = if rule == Rule::ThinFront {
                concl.antecedent.get(1..)
            } else {
                concl.antecedent.get(..n)
            };
            expect(concl.antecedent.len() == n + 1 && kept == Some(&p.antecedent[..]), || {
                let side = if rule == Rule::ThinFront { "front" } else { "back" };
                format!("`{concl}` is not `{p}` with one formula added at the {side}")
            })
        }
        Rule::ImpIntro => {
            let p = premises[0];
            let (rest, last) = split_last(p)?;
            expect(
                concl.antecedent == rest && concl.succedent == Formula::imp(last.clone(), p.succedent.clone()),
                || format!("`{concl}` does not discharge the last antecedent formula of `{p}`"),
            )
        }
        Rule::ImpElim => {
            let (minor, major) = (premises[0], premises[1]);
            same_context(minor, major)?;
            let (left, right) = major
                .succedent
                .as_imp()
                .ok_or_else(|| StepError::shape(format!("second premise `{major}` is not an implication")))?;
            expect(*left == minor.succedent, || {
                format!("antecedent of `{}` is not `{}`", major.succedent, minor.succedent)
            })?;
            expect(concl.antecedent == minor.antecedent && concl.succedent == *right, || {
                format!("conclusion should be `{}`", Sequent::new(minor.antecedent.clone(), right.clone()))
            })
        }
        Rule::Raa => {
            let (pos, neg) = (premises[0], premises[1]);
            same_context(pos, neg)?;
            let (rest, last) = split_last(pos)?;
            let discharged = last
                .as_neg()
                .ok_or_else(|| StepError::shape(format!("last antecedent formula `{last}` is not a negation")))?;
            expect(neg.succedent == Formula::neg(pos.succedent.clone()), || {
                format!("`{}` is not the negation of `{}`", neg.succedent, pos.succedent)
            })?;
            expect(concl.antecedent == rest && concl.succedent == *discharged, || {
                format!("conclusion should be `{}`", Sequent::new(rest.to_vec(), discharged.clone()))
            })
        }
        Rule::RaaBot => {
            let p = premises[0];
            let (rest, last) = split_last(p)?;
            expect(p.succedent == Formula::Falsum, || format!("succedent of `{p}` is not `#`"))?;
            let discharged = match last.as_imp() {
                Some((body, Formula::Falsum)) => body,
                _ => return Err(StepError::shape(format!("last antecedent formula `{last}` is not of the form P => #"))),
            };
            expect(concl.antecedent == rest && concl.succedent == *discharged, || {
                format!("conclusion should be `{}`", Sequent::new(rest.to_vec(), discharged.clone()))
            })
        }
        Rule::ConjIntro => {
            let (a, b) = (premises[0], premises[1]);
            same_context(a, b)?;
            expect(
                concl.antecedent == a.antecedent
                    && concl.succedent == Formula::conj(a.succedent.clone(), b.succedent.clone()),
                || format!("conclusion should be `{}`", Sequent::new(a.antecedent.clone(), Formula::conj(a.succedent.clone(), b.succedent.clone()))),
            )
        }
        Rule::ConjElimL | Rule::ConjElimR => {
            let p = premises[0];
            let (l, r) = p
                .succedent
                .as_conj()
                .ok_or_else(|| StepError::shape(format!("succedent of `{p}` is not a conjunction")))?;
            let part = if rule == Rule::ConjElimL { l } else { r };
            expect(concl.antecedent == p.antecedent && concl.succedent == *part, || {
                format!("conclusion should be `{}`", Sequent::new(p.antecedent.clone(), part.clone()))
            })
        }
        Rule::Cut => {
            let (left, right) = (premises[0], premises[1]);
            expect(left.antecedent.len() == 1, || format!("`{left}` must have exactly one antecedent formula"))?;
            let (rest, last) = split_last(right)?;
            expect(*last == left.succedent, || {
                format!("last antecedent formula of `{right}` is not `{}`", left.succedent)
            })?;
            let mut want = rest.to_vec();
            want.push(left.antecedent[0].clone());
            expect(concl.antecedent == want && concl.succedent == right.succedent, || {
                format!("conclusion should be `{}`", Sequent::new(want.clone(), right.succedent.clone()))
            })
        }
        Rule::RaaShort => {
            let p = premises[0];
            let (rest, last) = split_last(p)?;
            let discharged = last
                .as_neg()
                .ok_or_else(|| StepError::shape(format!("last antecedent formula `{last}` is not a negation")))?;
            let (l, r) = p
                .succedent
                .as_conj()
                .ok_or_else(|| StepError::shape(format!("succedent of `{p}` is not a conjunction")))?;
            expect(*r == Formula::neg(l.clone()), || format!("`{r}` is not the negation of `{l}`"))?;
            expect(concl.antecedent == rest && concl.succedent == *discharged, || {
                format!("conclusion should be `{}`", Sequent::new(rest.to_vec(), discharged.clone()))
            })
        }
        _ => unreachable!("non-primitive rules are filtered above"),
    }
}

fn resolve<'a>(established: &[&'a Sequent], refs: &[usize]) -> Result<Vec<&'a Sequent>, StepError> {
    refs.iter()
        .map(|&r| {
            if r >= 1 && r <= established.len() {
                Ok(established[r - 1])
            } else {
                Err(StepError::new(ViolationKind::BadReference, format!("line {r} is not an earlier line")))
            }
        })
        .collect()
}

/// Hashes an address by a single multiplication.
#[derive(Default)]
struct AddressHasher(u64);

impl Hasher for AddressHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, _: &[u8]) {
        unreachable!("only addresses are hashed")
    }

    fn write_usize(&mut self, n: usize) {
        self.0 = (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15).rotate_left(26);
    }
}

/// Subtrees already found to be inside the alphabet, keyed by address.
/// Entries are only meaningful while the lines of one pass are alive.
#[derive(Default)]
struct Admitted(HashSet<usize, BuildHasherDefault<AddressHasher>>);

impl Admitted {
    fn formula(&mut self, system: SystemId, f: &Formula) -> bool {
        if !system.alphabet().contains(&f.connective()) {
            return false;
        }
        match f {
            Formula::Var(_) | Formula::Falsum => true,
            Formula::Neg(a) => self.shared(system, a),
            Formula::Imp(a, b) | Formula::Conj(a, b) => self.shared(system, a) && self.shared(system, b),
        }
    }

    fn shared(&mut self, system: SystemId, a: &Arc<Formula>) -> bool {
        if matches!(**a, Formula::Var(_) | Formula::Falsum) {
            return system.alphabet().contains(&a.connective());
        }
        let key = Arc::as_ptr(a) as usize;
        if self.0.contains(&key) {
            return true;
        }
        let ok = self.formula(system, a);
        if ok {
            self.0.insert(key);
        }
        ok
    }

    fn sequent(&mut self, system: SystemId, s: &Sequent) -> Result<(), StepError> {
        match s.formulas().find(|f| !self.formula(system, f)) {
            Some(f) => Err(StepError::new(ViolationKind::OutOfAlphabet, format!("`{f}` is outside the alphabet of {system}"))),
            None => Ok(()),
        }
    }
}

/// Checks one line against the lines established before it.
pub fn check_step(system: SystemId, mode: Mode, established: &[Sequent], line: &Line) -> Result<(), StepError> {
    let established: Vec<&Sequent> = established.iter().collect();
    step(system, mode, &established, line, &mut Admitted::default())
}

fn step(system: SystemId, mode: Mode, established: &[&Sequent], line: &Line, admitted: &mut Admitted) -> Result<(), StepError> {
    admitted.sequent(system, &line.sequent)?;
    let rule = line.justification.rule;
    let premises = resolve(established, &line.justification.premises)?;
    if rule.is_primitive() {
        return check_primitive(system, rule, &premises, &line.sequent);
    }
    if mode == Mode::Strict {
        return Err(StepError::new(
            ViolationKind::RuleNotInSystem,
            format!("derived rule `{rule}` is not allowed in strict mode"),
        ));
    }
    if !rule.is_macro_in(system) {
        return Err(StepError::new(ViolationKind::RuleNotInSystem, format!("`{rule}` is not available in system {system}")));
    }
    if premises.len() != rule.arity() {
        return Err(StepError::new(
            ViolationKind::ArityMismatch,
            format!("`{rule}` takes {} premises, {} cited", rule.arity(), premises.len()),
        ));
    }
    let instance = MacroInstance {
        rule,
        premises: premises.into_iter().cloned().collect(),
        conclusion: line.sequent.clone(),
    };
    let expansion = derived::elaborate_step(system, &instance).map_err(|e| e.into_step_error())?;
    let report = check_lines(system, Mode::Strict, &expansion.script.lines, false);
    if let Some(v) = report.violations.first() {
        return Err(StepError::shape(format!("expansion of `{rule}` fails at its step {}: {}", v.line, v.detail)));
    }
    let derived = &expansion.script.lines[expansion.conclusion - 1].sequent;
    expect(*derived == line.sequent, || format!("expansion of `{rule}` does not conclude `{}`", line.sequent))
}

fn check_lines(system: SystemId, mode: Mode, lines: &[Line], count: bool) -> CheckReport {
    let mut report = CheckReport::default();
    let mut established: Vec<&Sequent> = Vec::with_capacity(lines.len());
    let mut admitted = Admitted::default();
    for (i, line) in lines.iter().enumerate() {
        if count {
            report.count(line.justification.rule.token());
        }
        if let Err(e) = step(system, mode, &established, line, &mut admitted) {
            report.push(i + 1, e);
        }
        established.push(&line.sequent);
    }
    report
}

/// Checks every line of a script and reports all violations.
///
/// A line that fails is still recorded as established so that later lines
/// are checked on their own merits.
pub fn check_script(script: &ProofScript) -> CheckReport {
    let mut report = check_lines(script.system, script.mode, &script.lines, true);
    if let Some(goal) = &script.goal {
        match script.conclusion() {
            Some(last) if last == goal => {}
            last => report.push(
                script.lines.len(),
                StepError::new(
                    ViolationKind::GoalMismatch,
                    match last {
                        Some(s) => format!("final sequent `{s}` is not the goal `{goal}`"),
                        None => format!("empty script does not prove `{goal}`"),
                    },
                ),
            ),
        }
    }
    report
}
