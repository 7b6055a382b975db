//! The deduction theorem as a script transformation, and the scripts that
//! derive each system's third axiom in the other system.

use std::collections::HashMap;

use super::{check_hilbert, Axiom, HilbertJust, HilbertLine, HilbertScript};
use crate::formula::Formula;
use crate::system::SystemId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DeductionError {
    #[error("input script is not accepted ({0} violations)")]
    NotAccepted(usize),
    #[error("input script has no hypothesis to discharge")]
    NoHypothesis,
    #[error("input script has no lines")]
    Empty,
    #[error("`{0}` is not an implication")]
    NotAnImplication(Formula),
    #[error("`{0}` is not a declared hypothesis")]
    UnknownHypothesis(Formula),
}

/// Appends lines to a Hilbert script. A formula that is already derived
/// is not derived again.
#[derive(Clone, Debug)]
pub struct HilbertBuilder {
    script: HilbertScript,
    index: HashMap<Formula, usize>,
}

impl HilbertBuilder {
    pub fn new(system: SystemId, hypotheses: Vec<Formula>) -> Self {
        HilbertBuilder { script: HilbertScript::new(system, hypotheses), index: HashMap::new() }
    }

    /// Continues an existing script.
    pub fn from_script(script: HilbertScript) -> Self {
        let mut index = HashMap::new();
        for (i, l) in script.lines.iter().enumerate() {
            index.entry(l.formula.clone()).or_insert(i + 1);
        }
        HilbertBuilder { script, index }
    }

    pub fn formula(&self, step: usize) -> &Formula {
        &self.script.lines[step - 1].formula
    }

    pub fn len(&self) -> usize {
        self.script.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.script.lines.is_empty()
    }

    fn push(&mut self, formula: Formula, just: HilbertJust) -> usize {
        if let Some(&at) = self.index.get(&formula) {
            return at;
        }
        self.script.lines.push(HilbertLine { formula: formula.clone(), just });
        let at = self.script.lines.len();
        self.index.insert(formula, at);
        at
    }

    pub fn hyp(&mut self, f: &Formula) -> Result<usize, DeductionError> {
        let k = self
            .script
            .hypotheses
            .iter()
            .position(|h| h == f)
            .ok_or_else(|| DeductionError::UnknownHypothesis(f.clone()))?;
        Ok(self.push(f.clone(), HilbertJust::Hyp(k + 1)))
    }

    pub fn axiom(&mut self, ax: Axiom, f: Formula) -> usize {
        debug_assert!(ax.matches(&f).is_some(), "`{f}` is not an instance of {ax}");
        self.push(f, HilbertJust::Axiom(ax))
    }

    /// From `A` at `i` and `A => B` at `j`, derives `B`.
    pub fn mp(&mut self, i: usize, j: usize) -> Result<usize, DeductionError> {
        let ab = self.formula(j);
        match ab.as_imp() {
            Some((a, b)) if a == self.formula(i) => {
                let b = b.clone();
                Ok(self.push(b, HilbertJust::Mp(i, j)))
            }
            _ => Err(DeductionError::NotAnImplication(ab.clone())),
        }
    }

    /// `A => A` from `ax1`, `ax2` and two `mp` steps.
    pub fn identity(&mut self, a: &Formula) -> usize {
        let aa = Formula::imp(a.clone(), a.clone());
        let a_aa_a = Formula::imp(a.clone(), Formula::imp(aa.clone(), a.clone()));
        let a_aa = Formula::imp(a.clone(), aa.clone());
        let s2 = self.axiom(Axiom::Ax2, Axiom::Ax2.instance(a, &aa, a));
        let s1 = self.axiom(Axiom::Ax1, a_aa_a);
        let s3 = self.mp(s1, s2).expect("ax2 instance");
        let s4 = self.axiom(Axiom::Ax1, a_aa);
        self.mp(s4, s3).expect("ax2 instance")
    }

    /// From `A` at `i`, derives `P => A` by `ax1`.
    pub fn weaken(&mut self, i: usize, p: &Formula) -> usize {
        let a = self.formula(i).clone();
        let ax = self.axiom(Axiom::Ax1, Axiom::Ax1.instance(&a, p, p));
        self.mp(i, ax).expect("ax1 instance")
    }

    /// From `P => A` at `i` and `P => (A => B)` at `j`, derives `P => B`.
    pub fn distribute(&mut self, i: usize, j: usize) -> Result<usize, DeductionError> {
        let (p, ab) = self.formula(j).as_imp().ok_or_else(|| DeductionError::NotAnImplication(self.formula(j).clone()))?;
        let (a, b) = ab.as_imp().ok_or_else(|| DeductionError::NotAnImplication(ab.clone()))?;
        let ax = Axiom::Ax2.instance(p, a, b);
        let ax = self.axiom(Axiom::Ax2, ax);
        let k = self.mp(j, ax)?;
        self.mp(i, k)
    }

    /// Copies a hypothesis-free script in, returning the step of its
    /// conclusion.
    pub fn include(&mut self, theorem: &HilbertScript) -> Result<usize, DeductionError> {
        let mut map = Vec::with_capacity(theorem.lines.len());
        for line in &theorem.lines {
            let step = match line.just {
                HilbertJust::Axiom(ax) => self.axiom(ax, line.formula.clone()),
                HilbertJust::Hyp(k) => self.hyp(&theorem.hypotheses[k - 1])?,
                HilbertJust::Mp(i, j) => self.mp(map[i - 1], map[j - 1])?,
            };
            map.push(step);
        }
        map.last().copied().ok_or(DeductionError::Empty)
    }

    /// The script, ending with the formula derived at `step`.
    pub fn finish(mut self, step: usize) -> HilbertScript {
        if step != self.script.lines.len() {
            let copy = self.script.lines[step - 1].clone();
            self.script.lines.push(copy);
        }
        self.script
    }
}

/// Discharges the last hypothesis `P` of an accepted script proving `Q`,
/// giving a script proving `P => Q` from the remaining hypotheses.
pub fn deduction_theorem(script: &HilbertScript) -> Result<HilbertScript, DeductionError> {
    let report = check_hilbert(script);
    if !report.accepted() {
        return Err(DeductionError::NotAccepted(report.violations.len()));
    }
    let (p, rest) = script.hypotheses.split_last().ok_or(DeductionError::NoHypothesis)?;
    if script.lines.is_empty() {
        return Err(DeductionError::Empty);
    }
    let discharged = script.hypotheses.len();
    let mut b = HilbertBuilder::new(script.system, rest.to_vec());
    let mut map: Vec<usize> = Vec::with_capacity(script.lines.len());
    for line in &script.lines {
        let step = match line.just {
            HilbertJust::Hyp(k) if k == discharged => b.identity(p),
            HilbertJust::Hyp(k) => {
                let h = b.push(line.formula.clone(), HilbertJust::Hyp(k));
                b.weaken(h, p)
            }
            HilbertJust::Axiom(ax) => {
                let a = b.axiom(ax, line.formula.clone());
                b.weaken(a, p)
            }
            HilbertJust::Mp(i, j) => b.distribute(map[i - 1], map[j - 1])?,
        };
        map.push(step);
    }
    let last = *map.last().expect("nonempty");
    Ok(b.finish(last))
}

/// Like [`deduction_theorem`], but lines that do not depend on the
/// discharged hypothesis are kept as they are and weakened only where a
/// dependent step uses them. Input must be accepted.
fn discharge_sparse(script: &HilbertScript) -> HilbertScript {
    let (p, rest) = script.hypotheses.split_last().expect("a hypothesis to discharge");
    let discharged = script.hypotheses.len();
    let mut b = HilbertBuilder::new(script.system, rest.to_vec());
    // per source line: the step proving it, whether that step is `p => A`
    let mut map: Vec<(usize, bool)> = Vec::with_capacity(script.lines.len());
    let mut weakened: HashMap<usize, usize> = HashMap::new();
    let mut under_p = |b: &mut HilbertBuilder, (step, dep): (usize, bool)| {
        if dep {
            step
        } else {
            *weakened.entry(step).or_insert_with(|| b.weaken(step, p))
        }
    };
    for line in &script.lines {
        let entry = match line.just {
            HilbertJust::Hyp(k) if k == discharged => (b.identity(p), true),
            HilbertJust::Hyp(k) => (b.push(line.formula.clone(), HilbertJust::Hyp(k)), false),
            HilbertJust::Axiom(ax) => (b.axiom(ax, line.formula.clone()), false),
            HilbertJust::Mp(i, j) => {
                let (mi, mj) = (map[i - 1], map[j - 1]);
                if mi.1 || mj.1 {
                    let wi = under_p(&mut b, mi);
                    let wj = under_p(&mut b, mj);
                    (b.distribute(wi, wj).expect("accepted input"), true)
                } else {
                    (b.mp(mi.0, mj.0).expect("accepted input"), false)
                }
            }
        };
        map.push(entry);
    }
    let last = under_p(&mut b, *map.last().expect("nonempty"));
    b.finish(last)
}

fn discharge_all(mut script: HilbertScript) -> HilbertScript {
    while !script.hypotheses.is_empty() {
        script = discharge_sparse(&script);
    }
    script
}

fn var(x: &str) -> Formula {
    Formula::var(x)
}

/// `~q => (q => ~(p => p))` in `HLT`.
pub fn hlt_lemma() -> HilbertScript {
    let (p, q) = (var("p"), var("q"));
    let pp = Formula::imp(p.clone(), p.clone());
    let bottom = Formula::neg(pp.clone());
    let nq = Formula::neg(q.clone());
    let mut b = HilbertBuilder::new(SystemId::HLT, vec![nq.clone(), q.clone()]);
    let s_nq = b.hyp(&nq).expect("declared");
    let w = b.axiom(Axiom::Ax1, Axiom::Ax1.instance(&nq, &Formula::neg(bottom.clone()), &p));
    let w = b.mp(s_nq, w).expect("ax1");
    let contra = b.axiom(Axiom::Ax3, Axiom::Ax3.instance(&bottom, &q, &p));
    let q_bottom = b.mp(w, contra).expect("ax3");
    let s_q = b.hyp(&q).expect("declared");
    let done = b.mp(s_q, q_bottom).expect("mp");
    discharge_all(b.finish(done))
}

/// `(~p => q) => ((~p => ~q) => p)` in `HLT`, through [`hlt_lemma`].
pub fn hlt_derives_ax3p() -> HilbertScript {
    let (p, q) = (var("p"), var("q"));
    let np = Formula::neg(p.clone());
    let nq = Formula::neg(q.clone());
    let pp = Formula::imp(p.clone(), p.clone());
    let (h1, h2) = (Formula::imp(np.clone(), q.clone()), Formula::imp(np.clone(), nq.clone()));

    let mut b = HilbertBuilder::new(SystemId::HLT, vec![h1.clone(), h2.clone(), np.clone()]);
    let s_np = b.hyp(&np).expect("declared");
    let s1 = b.hyp(&h1).expect("declared");
    let s_q = b.mp(s_np, s1).expect("mp");
    let s2 = b.hyp(&h2).expect("declared");
    let s_nq = b.mp(s_np, s2).expect("mp");
    let lemma = b.include(&hlt_lemma()).expect("lemma");
    let k = b.mp(s_nq, lemma).expect("mp");
    let bottom = b.mp(s_q, k).expect("mp");
    // ~p => ~(p => p) from the first two hypotheses
    let step = deduction_theorem(&b.finish(bottom)).expect("accepted");

    let mut b = HilbertBuilder::from_script(step);
    let np_bottom = b.len();
    let contra = b.axiom(Axiom::Ax3, Axiom::Ax3.instance(&p, &pp, &p));
    let k = b.mp(np_bottom, contra).expect("ax3");
    let id = b.identity(&p);
    let done = b.mp(id, k).expect("mp");
    discharge_all(b.finish(done))
}

/// `(~p => ~q) => (q => p)` in `HL3`.
pub fn hl3_derives_ax3() -> HilbertScript {
    let (p, q) = (var("p"), var("q"));
    let np = Formula::neg(p.clone());
    let h1 = Formula::imp(np.clone(), Formula::neg(q.clone()));
    let mut b = HilbertBuilder::new(SystemId::HL3, vec![h1.clone(), q.clone()]);
    let s_q = b.hyp(&q).expect("declared");
    let w = b.axiom(Axiom::Ax1, Axiom::Ax1.instance(&q, &np, &p));
    let np_q = b.mp(s_q, w).expect("ax1");
    let red = b.axiom(Axiom::Ax3Reductio, Axiom::Ax3Reductio.instance(&p, &q, &p));
    let k = b.mp(np_q, red).expect("ax3'");
    let s1 = b.hyp(&h1).expect("declared");
    let done = b.mp(s1, k).expect("mp");
    discharge_all(b.finish(done))
}
