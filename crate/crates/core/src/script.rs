//! Sequents, rule justifications and proof scripts, with their text format.
//!
//! A script file looks like
//!
//! ```text
//! # comment
//! system: G
//! mode: strict
//! goal: ~p -> p => q
//! 1. p -> p ; axiom
//! 2. p, ~q -> p ; thin-back 1
//! ```
//!
//! `mode` defaults to `macro`; `goal` is optional and, when present, must
//! equal the last line's sequent for the script to be accepted.

use std::fmt;
use std::str::FromStr;

use crate::formula::Formula;
use crate::parse::{parse_sequent, SyntaxError};
use crate::system::SystemId;

/// `antecedent -> succedent`. The antecedent is an ordered sequence:
/// order and repetitions matter.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sequent {
    pub antecedent: Vec<Formula>,
    pub succedent: Formula,
}

impl Sequent {
    pub fn new(antecedent: Vec<Formula>, succedent: Formula) -> Self {
        Sequent { antecedent, succedent }
    }

    /// `-> f`
    pub fn theorem(succedent: Formula) -> Self {
        Sequent { antecedent: Vec::new(), succedent }
    }

    pub fn formulas(&self) -> impl Iterator<Item = &Formula> {
        self.antecedent.iter().chain(std::iter::once(&self.succedent))
    }

    /// Variables in order of first occurrence across the whole sequent.
    pub fn variables(&self) -> Vec<std::sync::Arc<str>> {
        let mut out = Vec::new();
        for f in self.formulas() {
            f.collect_variables(&mut out);
        }
        out
    }

    /// `a1 => (a2 => ... => succedent)`
    pub fn as_formula(&self) -> Formula {
        Formula::imp_chain(&self.antecedent, self.succedent.clone())
    }

    pub fn map(&self, f: impl Fn(&Formula) -> Formula) -> Sequent {
        Sequent { antecedent: self.antecedent.iter().map(&f).collect(), succedent: f(&self.succedent) }
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.antecedent.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        if self.antecedent.is_empty() {
            write!(f, "-> {}", self.succedent)
        } else {
            write!(f, " -> {}", self.succedent)
        }
    }
}

impl fmt::Debug for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

macro_rules! rules {
    ($($variant:ident => $token:literal, $arity:literal;)*) => {
        /// Every rule token a script line may carry.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum Rule {
            $($variant,)*
        }

        impl Rule {
            pub const ALL: &'static [Rule] = &[$(Rule::$variant,)*];

            pub fn token(self) -> &'static str {
                match self {
                    $(Rule::$variant => $token,)*
                }
            }

            /// Number of cited premise lines.
            pub fn arity(self) -> usize {
                match self {
                    $(Rule::$variant => $arity,)*
                }
            }
        }
    };
}

rules! {
    Axiom => "axiom", 0;
    Premise => "premise", 0;
    ThinFront => "thin-front", 1;
    ThinBack => "thin-back", 1;
    ImpIntro => "imp-intro", 1;
    ImpElim => "imp-elim", 2;
    Raa => "raa", 2;
    RaaBot => "raa-bot", 1;
    ConjIntro => "conj-intro", 2;
    ConjElimL => "conj-elim-l", 1;
    ConjElimR => "conj-elim-r", 1;
    Cut => "cut", 2;
    RaaShort => "raa-short", 1;
    ImpElimMult => "imp-elim-mult", 2;
    Thin => "thin", 1;
    Proj => "proj", 0;
    Perm => "perm", 1;
    Contr => "contr", 1;
    CutStar => "cut*", 2;
    ExContra => "excontra", 2;
    Dne => "dne", 0;
    WeakRaa => "weak-raa", 2;
    DnIntro => "dn-intro", 1;
    Case => "case", 2;
    CImpIntro => "c-imp-intro", 1;
    CImpElim => "c-imp-elim", 2;
    RaaViaShort => "raa-via-short", 2;
    RaaShortViaRaa => "raa-short-via-raa", 1;
}

impl Rule {
    pub fn is_primitive(self) -> bool {
        self <= Rule::ImpElimMult
    }

    /// Kernel rules of `system`. The multiplicative elimination belongs to
    /// no system.
    pub fn is_primitive_in(self, system: SystemId) -> bool {
        use Rule::*;
        match system {
            SystemId::G => matches!(self, Axiom | Premise | ThinFront | ThinBack | ImpIntro | ImpElim | Raa),
            SystemId::GBot => matches!(self, Axiom | Premise | ThinFront | ThinBack | ImpIntro | ImpElim | RaaBot),
            SystemId::C => matches!(
                self,
                Axiom | Premise | ThinFront | ThinBack | ConjIntro | ConjElimL | ConjElimR | Cut | Raa | RaaShort
            ),
            SystemId::HLT | SystemId::HL3 => false,
        }
    }

    /// Derived rules the elaborator can expand in `system`.
    pub fn is_macro_in(self, system: SystemId) -> bool {
        use Rule::*;
        match system {
            SystemId::G | SystemId::GBot => {
                matches!(self, Thin | Proj | Perm | Contr | CutStar | ExContra | Dne | WeakRaa | DnIntro | Case)
            }
            SystemId::C => matches!(
                self,
                Thin | Proj | ExContra | Dne | WeakRaa | DnIntro | CImpIntro | CImpElim | RaaViaShort | RaaShortViaRaa
            ),
            SystemId::HLT | SystemId::HL3 => false,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Rule {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Rule::ALL.iter().copied().find(|r| r.token() == s).ok_or(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Justification {
    pub rule: Rule,
    /// 1-based line numbers of the cited premises.
    pub premises: Vec<usize>,
}

impl Justification {
    pub fn new(rule: Rule, premises: Vec<usize>) -> Self {
        Justification { rule, premises }
    }
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.rule.token())?;
        for p in &self.premises {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Line {
    pub sequent: Sequent,
    pub justification: Justification,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Kernel rules only.
    Strict,
    /// Kernel rules plus derived rules, which are expanded before checking.
    #[default]
    Macro,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Strict => "strict",
            Mode::Macro => "macro",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofScript {
    pub system: SystemId,
    pub mode: Mode,
    pub goal: Option<Sequent>,
    pub lines: Vec<Line>,
}

impl ProofScript {
    pub fn new(system: SystemId, mode: Mode) -> Self {
        ProofScript { system, mode, goal: None, lines: Vec::new() }
    }

    pub fn conclusion(&self) -> Option<&Sequent> {
        self.lines.last().map(|l| &l.sequent)
    }

    /// Line numbers (1-based) justified as `premise`.
    pub fn premise_lines(&self) -> Vec<usize> {
        self.lines
            .iter()
            .enumerate()
            .filter(|(_, l)| l.justification.rule == Rule::Premise)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn is_theorem_script(&self) -> bool {
        self.premise_lines().is_empty()
    }

    pub fn uses_macros(&self) -> bool {
        self.lines.iter().any(|l| !l.justification.rule.is_primitive())
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for ProofScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "system: {}", self.system)?;
        writeln!(f, "mode: {}", self.mode.name())?;
        if let Some(goal) = &self.goal {
            writeln!(f, "goal: {goal}")?;
        }
        for (i, line) in self.lines.iter().enumerate() {
            writeln!(f, "{}. {} ; {}", i + 1, line.sequent, line.justification)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScriptError {
    #[error("line {line}: {source}")]
    Syntax { line: usize, source: SyntaxError },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("missing `system:` header")]
    MissingSystem,
    #[error("system {0} is a Hilbert system; expected a sequent system")]
    NotSequentSystem(SystemId),
    #[error("system {0} is a sequent system; expected HLT or HL3")]
    NotHilbertSystem(SystemId),
    #[error("line {line}: formula `{formula}` is outside the alphabet of system {system}")]
    OutOfAlphabet { line: usize, formula: Formula, system: SystemId },
    #[error("line {line}: expected step number {expected}, found {found}")]
    Numbering { line: usize, expected: usize, found: usize },
    #[error("line {line}: step {step} cites step {cited}, which is not earlier")]
    ForwardReference { line: usize, step: usize, cited: usize },
    #[error("line {line}: unknown rule `{token}`")]
    UnknownRule { line: usize, token: String },
}

/// Removes a `#` comment that starts at the beginning of a (trimmed) line.
pub(crate) fn is_comment_or_blank(line: &str) -> bool {
    let t = line.trim();
    t.is_empty() || t.starts_with('#')
}

/// Splits `key: value` header lines.
pub(crate) fn header(line: &str) -> Option<(&str, &str)> {
    let (key, value) = line.split_once(':')?;
    let key = key.trim();
    if key.chars().all(|c| c.is_ascii_lowercase()) && !key.is_empty() {
        Some((key, value.trim()))
    } else {
        None
    }
}

/// Splits `N. BODY ; JUSTIFICATION [# comment]` into its parts.
pub(crate) fn body_line(text: &str, lineno: usize) -> Result<(usize, &str, Vec<&str>), ScriptError> {
    let malformed = |message: &str| ScriptError::Malformed { line: lineno, message: message.to_string() };
    let t = text.trim();
    let dot = t.find('.').ok_or_else(|| malformed("expected `N. ...`"))?;
    let number: usize = t[..dot].trim().parse().map_err(|_| malformed("expected a step number before `.`"))?;
    let rest = &t[dot + 1..];
    let (body, just) = rest.split_once(';').ok_or_else(|| malformed("expected `; RULE` justification"))?;
    let just = just.split_once('#').map_or(just, |(j, _)| j);
    let words: Vec<&str> = just.split_whitespace().collect();
    if words.is_empty() {
        return Err(malformed("empty justification"));
    }
    Ok((number, body, words))
}

/// Parses a sequent proof script. Rule correctness is not checked here.
pub fn parse_script(input: &str) -> Result<ProofScript, ScriptError> {
    let mut system = None;
    let mut mode = Mode::default();
    let mut goal = None;
    let mut lines = Vec::new();

    for (idx, raw) in input.lines().enumerate() {
        let lineno = idx + 1;
        if is_comment_or_blank(raw) {
            continue;
        }
        if lines.is_empty() {
            if let Some((key, value)) = header(raw) {
                match key {
                    "system" => {
                        let sys: SystemId = value
                            .parse()
                            .map_err(|e: crate::system::UnknownSystem| ScriptError::Malformed { line: lineno, message: e.to_string() })?;
                        if sys.is_hilbert() {
                            return Err(ScriptError::NotSequentSystem(sys));
                        }
                        system = Some(sys);
                    }
                    "mode" => {
                        mode = match value {
                            "strict" => Mode::Strict,
                            "macro" => Mode::Macro,
                            other => {
                                return Err(ScriptError::Malformed {
                                    line: lineno,
                                    message: format!("unknown mode `{other}`"),
                                })
                            }
                        }
                    }
                    "goal" => {
                        goal = Some(parse_sequent(value).map_err(|source| ScriptError::Syntax { line: lineno, source })?)
                    }
                    other => {
                        return Err(ScriptError::Malformed { line: lineno, message: format!("unknown header `{other}`") })
                    }
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
        let sequent = parse_sequent(body).map_err(|source| ScriptError::Syntax { line: lineno, source })?;
        if let Some(bad) = sequent.formulas().find(|f| !system.admits(f)) {
            return Err(ScriptError::OutOfAlphabet { line: lineno, formula: bad.clone(), system });
        }
        let rule: Rule = words[0].parse().map_err(|_| ScriptError::UnknownRule { line: lineno, token: words[0].to_string() })?;
        let mut premises = Vec::new();
        for w in &words[1..] {
            let cited: usize = w.parse().map_err(|_| ScriptError::Malformed {
                line: lineno,
                message: format!("expected a line reference, found `{w}`"),
            })?;
            if cited == 0 || cited >= number {
                return Err(ScriptError::ForwardReference { line: lineno, step: number, cited });
            }
            premises.push(cited);
        }
        lines.push(Line { sequent, justification: Justification { rule, premises } });
    }

    let system = system.ok_or(ScriptError::MissingSystem)?;
    if let Some(g) = &goal {
        if let Some(bad) = g.formulas().find(|f| !system.admits(f)) {
            return Err(ScriptError::OutOfAlphabet { line: 0, formula: bad.clone(), system });
        }
    }
    Ok(ProofScript { system, mode, goal, lines })
}
