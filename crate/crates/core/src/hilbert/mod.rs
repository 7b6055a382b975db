//! Hilbert-style systems over `~` and `=>` with modus ponens.
//!
//! Both systems share `ax1` and `ax2`. `HLT` adds contraposition (`ax3`),
//! `HL3` adds strong reductio (`ax3'`):
//!
//! ```text
//! ax1   P => (Q => P)
//! ax2   (P => (Q => R)) => ((P => Q) => (P => R))
//! ax3   (~P => ~Q) => (Q => P)
//! ax3'  (~P => Q) => ((~P => ~Q) => P)
//! ```
//!
//! Axiom lines are checked by matching against the schema, so there is no
//! substitution rule. Hypotheses are declared in the header and cited by
//! position.

mod bridge;
mod deduction;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

pub use bridge::{axiom_template, direct_axiom_proof, g_to_hilbert, hilbert_to_g, BridgeError};
pub use deduction::{
    deduction_theorem, hl3_derives_ax3, hlt_derives_ax3p, hlt_lemma, DeductionError, HilbertBuilder,
};

use crate::formula::Formula;
use crate::kernel::{CheckReport, StepError, ViolationKind};
use crate::parse::parse_formula;
use crate::script::{body_line, header, is_comment_or_blank, ScriptError};
use crate::system::SystemId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Ax1,
    Ax2,
    Ax3,
    /// Strong reductio.
    Ax3Reductio,
}

impl Axiom {
    pub const ALL: [Axiom; 4] = [Axiom::Ax1, Axiom::Ax2, Axiom::Ax3, Axiom::Ax3Reductio];

    pub fn token(self) -> &'static str {
        match self {
            Axiom::Ax1 => "ax1",
            Axiom::Ax2 => "ax2",
            Axiom::Ax3 => "ax3",
            Axiom::Ax3Reductio => "ax3'",
        }
    }

    pub fn admitted_in(self, system: SystemId) -> bool {
        match self {
            Axiom::Ax1 | Axiom::Ax2 => system.is_hilbert(),
            Axiom::Ax3 => system == SystemId::HLT,
            Axiom::Ax3Reductio => system == SystemId::HL3,
        }
    }

    /// The schema over the metavariables `P`, `Q`, `R`.
    pub fn schema(self) -> Formula {
        let (p, q, r) = (Formula::var("P"), Formula::var("Q"), Formula::var("R"));
        self.instance(&p, &q, &r)
    }

    /// The instance at `P := p`, `Q := q`, `R := r`.
    pub fn instance(self, p: &Formula, q: &Formula, r: &Formula) -> Formula {
        let imp = |a: &Formula, b: &Formula| Formula::imp(a.clone(), b.clone());
        let neg = |a: &Formula| Formula::neg(a.clone());
        match self {
            Axiom::Ax1 => imp(p, &imp(q, p)),
            Axiom::Ax2 => imp(&imp(p, &imp(q, r)), &imp(&imp(p, q), &imp(p, r))),
            Axiom::Ax3 => imp(&imp(&neg(p), &neg(q)), &imp(q, p)),
            Axiom::Ax3Reductio => imp(&imp(&neg(p), q), &imp(&imp(&neg(p), &neg(q)), p)),
        }
    }

    /// The metavariable assignment under which `f` instantiates the schema.
    pub fn matches(self, f: &Formula) -> Option<HashMap<&'static str, Formula>> {
        let mut env = HashMap::new();
        match_schema(&self.schema(), f, &mut env).then_some(env)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Axiom {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Axiom::ALL.into_iter().find(|a| a.token() == s).ok_or(())
    }
}

fn match_schema(pattern: &Formula, f: &Formula, env: &mut HashMap<&'static str, Formula>) -> bool {
    match (pattern, f) {
        (Formula::Var(m), _) => {
            let key: &'static str = match &**m {
                "P" => "P",
                "Q" => "Q",
                _ => "R",
            };
            match env.get(key) {
                Some(bound) => bound == f,
                None => {
                    env.insert(key, f.clone());
                    true
                }
            }
        }
        (Formula::Neg(a), Formula::Neg(b)) => match_schema(a, b, env),
        (Formula::Imp(a1, a2), Formula::Imp(b1, b2)) => match_schema(a1, b1, env) && match_schema(a2, b2, env),
        _ => false,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HilbertJust {
    Axiom(Axiom),
    /// 1-based index into the hypotheses.
    Hyp(usize),
    /// Line `i` is `A`, line `j` is `A => B`.
    Mp(usize, usize),
}

impl fmt::Display for HilbertJust {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HilbertJust::Axiom(a) => write!(f, "{a}"),
            HilbertJust::Hyp(k) => write!(f, "hyp {k}"),
            HilbertJust::Mp(i, j) => write!(f, "mp {i} {j}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertLine {
    pub formula: Formula,
    pub just: HilbertJust,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertScript {
    pub system: SystemId,
    pub hypotheses: Vec<Formula>,
    pub lines: Vec<HilbertLine>,
}

impl HilbertScript {
    pub fn new(system: SystemId, hypotheses: Vec<Formula>) -> Self {
        assert!(system.is_hilbert(), "{system} is not a Hilbert system");
        HilbertScript { system, hypotheses, lines: Vec::new() }
    }

    pub fn conclusion(&self) -> Option<&Formula> {
        self.lines.last().map(|l| &l.formula)
    }

    /// Applies `sub` to every hypothesis and line.
    pub fn substitute(&self, sub: &impl Fn(&str) -> Option<Formula>) -> HilbertScript {
        HilbertScript {
            system: self.system,
            hypotheses: self.hypotheses.iter().map(|h| h.substitute(sub)).collect(),
            lines: self
                .lines
                .iter()
                .map(|l| HilbertLine { formula: l.formula.substitute(sub), just: l.just })
                .collect(),
        }
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for HilbertScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "system: {}", self.system)?;
        for h in &self.hypotheses {
            writeln!(f, "hyp: {h}")?;
        }
        for (i, line) in self.lines.iter().enumerate() {
            writeln!(f, "{}. {} ; {}", i + 1, line.formula, line.just)?;
        }
        Ok(())
    }
}

/// True if the first header line names a Hilbert system.
pub fn looks_like_hilbert(input: &str) -> bool {
    input
        .lines()
        .filter(|l| !is_comment_or_blank(l))
        .find_map(header)
        .is_some_and(|(k, v)| k == "system" && v.parse::<SystemId>().is_ok_and(SystemId::is_hilbert))
}

pub fn parse_hilbert(input: &str) -> Result<HilbertScript, ScriptError> {
    let mut system = None;
    let mut hypotheses = Vec::new();
    let mut lines: Vec<HilbertLine> = Vec::new();
    let syntax = |line: usize| move |source| ScriptError::Syntax { line, source };

    for (idx, raw) in input.lines().enumerate() {
        let lineno = idx + 1;
        if is_comment_or_blank(raw) {
            continue;
        }
        let malformed = |message: String| ScriptError::Malformed { line: lineno, message };
        if lines.is_empty() {
            if let Some((key, value)) = header(raw) {
                match key {
                    "system" => {
                        let sys: SystemId = value.parse().map_err(|e: crate::system::UnknownSystem| malformed(e.to_string()))?;
                        if !sys.is_hilbert() {
                            return Err(ScriptError::NotHilbertSystem(sys));
                        }
                        system = Some(sys);
                    }
                    "hyp" => hypotheses.push((lineno, parse_formula(value).map_err(syntax(lineno))?)),
                    other => return Err(malformed(format!("unknown header `{other}`"))),
                }
                continue;
            }
        }
        let system = system.ok_or(ScriptError::MissingSystem)?;
        let (number, body, words) = body_line(raw, lineno)?;
        let expected = lines.len() + 1;
        if number != expected {
            return Err(ScriptError::Numbering { line: lineno, expected, found: number });
        }
        let formula = parse_formula(body).map_err(syntax(lineno))?;
        if !system.admits(&formula) {
            return Err(ScriptError::OutOfAlphabet { line: lineno, formula, system });
        }
        let nums = words[1..]
            .iter()
            .map(|w| w.parse::<usize>().map_err(|_| malformed(format!("expected a number, found `{w}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        let just = match (words[0], nums.as_slice()) {
            ("hyp", [k]) => HilbertJust::Hyp(*k),
            ("mp", [i, j]) => {
                for &cited in [i, j] {
                    if cited == 0 || cited >= number {
                        return Err(ScriptError::ForwardReference { line: lineno, step: number, cited });
                    }
                }
                HilbertJust::Mp(*i, *j)
            }
            (tok, []) => HilbertJust::Axiom(
                tok.parse().map_err(|_| ScriptError::UnknownRule { line: lineno, token: tok.to_string() })?,
            ),
            (tok, _) => return Err(malformed(format!("wrong number of arguments for `{tok}`"))),
        };
        lines.push(HilbertLine { formula, just });
    }

    let system = system.ok_or(ScriptError::MissingSystem)?;
    let hypotheses = hypotheses
        .into_iter()
        .map(|(lineno, h)| {
            if system.admits(&h) {
                Ok(h)
            } else {
                Err(ScriptError::OutOfAlphabet { line: lineno, formula: h, system })
            }
        })
        .collect::<Result<_, _>>()?;
    Ok(HilbertScript { system, hypotheses, lines })
}

fn check_line(script: &HilbertScript, n: usize) -> Result<(), StepError> {
    let line = &script.lines[n - 1];
    match line.just {
        HilbertJust::Axiom(ax) => {
            if !ax.admitted_in(script.system) {
                return Err(StepError::new(
                    ViolationKind::WrongSystemAxiom,
                    format!("{ax} is not an axiom of {}", script.system),
                ));
            }
            if ax.matches(&line.formula).is_none() {
                return Err(StepError::new(
                    ViolationKind::NotASchemaInstance,
                    format!("`{}` is not an instance of {ax}", line.formula),
                ));
            }
        }
        HilbertJust::Hyp(k) => match script.hypotheses.get(k.wrapping_sub(1)) {
            Some(h) if *h == line.formula => {}
            Some(h) => {
                return Err(StepError::new(
                    ViolationKind::BadHypothesis,
                    format!("hypothesis {k} is `{h}`, not `{}`", line.formula),
                ))
            }
            None => {
                return Err(StepError::new(
                    ViolationKind::BadHypothesis,
                    format!("there is no hypothesis {k}"),
                ))
            }
        },
        HilbertJust::Mp(i, j) => {
            if i == 0 || j == 0 || i >= n || j >= n {
                return Err(StepError::new(ViolationKind::BadReference, format!("mp {i} {j} cites a line not before {n}")));
            }
            let (a, ab) = (&script.lines[i - 1].formula, &script.lines[j - 1].formula);
            match ab.as_imp() {
                Some((x, y)) if x == a && *y == line.formula => {}
                _ => {
                    return Err(StepError::new(
                        ViolationKind::BadMp,
                        format!("`{ab}` is not `{a} => {}`", line.formula),
                    ))
                }
            }
        }
    }
    Ok(())
}

/// Checks every line. Failed lines still count as established for later
/// references.
pub fn check_hilbert(script: &HilbertScript) -> CheckReport {
    let mut report = CheckReport::default();
    for n in 1..=script.lines.len() {
        let line = &script.lines[n - 1];
        if !script.system.admits(&line.formula) {
            report.push(n, StepError::new(ViolationKind::OutOfAlphabet, format!("`{}`", line.formula)));
            continue;
        }
        let token = match line.just {
            HilbertJust::Axiom(a) => a.token(),
            HilbertJust::Hyp(_) => "hyp",
            HilbertJust::Mp(..) => "mp",
        };
        report.count(token);
        if let Err(e) = check_line(script, n) {
            report.push(n, e);
        }
    }
    report
}
