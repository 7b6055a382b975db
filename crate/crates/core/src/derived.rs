//! Derived rules and their expansion into kernel steps.
//!
//! A derived-rule line only names its premises and its conclusion; the
//! parameters of the rule (the discharged formula, the thinning placement,
//! the permuted position) are recovered from those sequents here and the
//! expansion itself is produced by [`ProofBuilder`].

use crate::builder::{find_block, ProofBuilder, Step};
pub use crate::builder::{ElabError, ElabResult};
use crate::script::{Mode, ProofScript, Rule, Sequent};
use crate::system::SystemId;

/// A derived-rule application with concrete premises and conclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacroInstance {
    pub rule: Rule,
    pub premises: Vec<Sequent>,
    pub conclusion: Sequent,
}

/// An expansion: a strict script whose first lines are the premises and
/// whose line `conclusion` (1-based) carries the derived sequent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub script: ProofScript,
    pub conclusion: Step,
}

impl Expansion {
    pub fn lines(&self) -> &[crate::script::Line] {
        &self.script.lines
    }
}

/// Applies derived rule `rule` to the builder lines `refs`, aiming at
/// `conclusion`. The result is checked against `conclusion`.
pub fn apply_macro(b: &mut ProofBuilder, rule: Rule, refs: &[Step], conclusion: &Sequent) -> ElabResult<Step> {
    let system = b.system();
    if !rule.is_macro_in(system) {
        return Err(ElabError::NotInSystem { rule, system });
    }
    if refs.len() != rule.arity() {
        return Err(ElabError::shape(format!("`{rule}` takes {} premises, {} cited", rule.arity(), refs.len())));
    }
    let ctx = &conclusion.antecedent;
    let step = match rule {
        Rule::Thin => {
            let premise = b.seq(refs[0]).clone();
            if premise.antecedent.len() >= ctx.len() || find_block(ctx, &premise.antecedent).is_none() {
                return Err(ElabError::shape(format!(
                    "`{conclusion}` does not extend `{premise}` at its ends"
                )));
            }
            b.thin_to(refs[0], ctx)?
        }
        Rule::Proj => {
            let at = ctx
                .iter()
                .position(|f| *f == conclusion.succedent)
                .ok_or_else(|| ElabError::shape(format!("`{}` is not in the antecedent", conclusion.succedent)))?;
            b.proj(ctx, at)?
        }
        Rule::Perm => {
            let from = &b.seq(refs[0]).antecedent;
            let at = (0..from.len().saturating_sub(1))
                .find(|&k| {
                    let mut swapped = from.clone();
                    swapped.swap(k, k + 1);
                    swapped == *ctx
                })
                .ok_or_else(|| ElabError::shape("conclusion is not an adjacent transposition of the premise"))?;
            b.perm(refs[0], at)?
        }
        Rule::Contr => b.contr(refs[0])?,
        Rule::CutStar => b.cut_star(refs[0], refs[1])?,
        Rule::ExContra => b.excontra(refs[0], refs[1], conclusion.succedent.clone())?,
        Rule::Dne => {
            let p = conclusion.succedent.clone();
            let expected = system.neg(system.neg(p.clone()));
            if ctx.len() != 1 || ctx[0] != expected {
                return Err(ElabError::shape(format!("`{conclusion}` is not of the form ~~P -> P")));
            }
            b.dne(p)?
        }
        Rule::WeakRaa => b.weak_raa(refs[0], refs[1])?,
        Rule::DnIntro => b.dn_intro(refs[0])?,
        Rule::Case => b.case_split(refs[0], refs[1])?,
        Rule::CImpIntro => b.c_imp_intro(refs[0])?,
        Rule::CImpElim => b.c_imp_elim(refs[0], refs[1])?,
        Rule::RaaViaShort => b.raa_via_short(refs[0], refs[1])?,
        Rule::RaaShortViaRaa => b.raa_short_via_raa(refs[0])?,
        _ => unreachable!("primitive rules are not macros"),
    };
    if b.seq(step) != conclusion {
        return Err(ElabError::shape(format!("`{rule}` yields `{}`, not `{conclusion}`", b.seq(step))));
    }
    Ok(step)
}

/// Expands one derived-rule application into kernel steps.
pub fn elaborate_step(system: SystemId, m: &MacroInstance) -> ElabResult<Expansion> {
    if !m.rule.is_macro_in(system) {
        return Err(ElabError::NotInSystem { rule: m.rule, system });
    }
    let mut b = ProofBuilder::new(system, Mode::Strict);
    let refs = m
        .premises
        .iter()
        .map(|p| b.premise(p.clone()))
        .collect::<ElabResult<Vec<_>>>()?;
    let conclusion = apply_macro(&mut b, m.rule, &refs, &m.conclusion)?;
    Ok(Expansion { script: b.into_script(), conclusion })
}

/// Expands every derived-rule line of a script, renumbering as needed.
///
/// Kernel-rule lines are copied verbatim, so a strict script comes back
/// unchanged.
pub fn elaborate_script(script: &ProofScript) -> ElabResult<ProofScript> {
    let mut b = ProofBuilder::new(script.system, Mode::Strict);
    let mut map: Vec<Step> = Vec::with_capacity(script.lines.len());
    for (i, line) in script.lines.iter().enumerate() {
        let at_line = |source: ElabError| ElabError::AtLine { line: i + 1, source: Box::new(source) };
        let refs = line
            .justification
            .premises
            .iter()
            .map(|&r| {
                map.get(r.wrapping_sub(1))
                    .copied()
                    .ok_or_else(|| at_line(ElabError::shape(format!("line {r} is not an earlier line"))))
            })
            .collect::<ElabResult<Vec<Step>>>()?;
        let rule = line.justification.rule;
        let step = if rule.is_primitive() {
            b.push_unchecked(line.sequent.clone(), rule, refs)
        } else {
            apply_macro(&mut b, rule, &refs, &line.sequent).map_err(at_line)?
        };
        map.push(step);
    }
    let mut out = b.into_script();
    out.goal = script.goal.clone();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::check_script;
    use crate::parse::parse_sequent;
    use crate::script::parse_script;

    fn seq(s: &str) -> Sequent {
        parse_sequent(s).unwrap()
    }

    fn expand(system: SystemId, rule: Rule, premises: &[&str], concl: &str) -> Expansion {
        let m = MacroInstance { rule, premises: premises.iter().map(|p| seq(p)).collect(), conclusion: seq(concl) };
        let e = elaborate_step(system, &m).unwrap();
        let report = check_script(&e.script);
        assert!(report.accepted(), "{rule} expansion rejected:\n{}\n{report}", e.script);
        assert_eq!(e.script.lines[e.conclusion - 1].sequent, m.conclusion);
        e
    }

    fn sequents(e: &Expansion) -> Vec<String> {
        e.lines().iter().map(|l| l.sequent.to_string()).collect()
    }

    #[test]
    fn contraction_follows_the_four_line_template() {
        let e = expand(SystemId::G, Rule::Contr, &["r, p, p -> q"], "r, p -> q");
        let rules: Vec<Rule> = e.lines().iter().map(|l| l.justification.rule).collect();
        assert_eq!(rules, [Rule::Premise, Rule::ImpIntro, Rule::Axiom, Rule::ThinFront, Rule::ImpElim]);
        assert_eq!(sequents(&e)[1], "r, p -> p => q");
        assert_eq!(sequents(&e)[3], "r, p -> p");
    }

    #[test]
    fn ex_contradictione_template() {
        let e = expand(SystemId::G, Rule::ExContra, &["s -> q", "s -> ~q"], "s -> p");
        assert_eq!(sequents(&e), ["s -> q", "s -> ~q", "s, ~p -> q", "s, ~p -> ~q", "s -> p"]);
    }

    #[test]
    fn projection_thins_back_then_front() {
        let e = expand(SystemId::G, Rule::Proj, &[], "q, p, r -> p");
        assert_eq!(sequents(&e), ["p -> p", "p, r -> p", "q, p, r -> p"]);
        let rules: Vec<Rule> = e.lines().iter().map(|l| l.justification.rule).collect();
        assert_eq!(rules, [Rule::Axiom, Rule::ThinBack, Rule::ThinFront]);
    }

    #[test]
    fn double_negation_elimination_is_five_lines() {
        let e = expand(SystemId::G, Rule::Dne, &[], "~~p -> p");
        assert_eq!(sequents(&e), ["~p -> ~p", "~~p, ~p -> ~p", "~~p -> ~~p", "~~p, ~p -> ~~p", "~~p -> p"]);
        let bot = expand(SystemId::GBot, Rule::Dne, &[], "(p => #) => # -> p");
        assert_eq!(bot.lines().last().unwrap().justification.rule, Rule::RaaBot);
    }

    #[test]
    fn thin_prefers_the_longest_suffix() {
        let e = expand(SystemId::G, Rule::Thin, &["p -> q"], "p, r, p -> q");
        assert_eq!(sequents(&e), ["p -> q", "p, r -> q", "p, r, p -> q"]);
        let err = elaborate_step(
            SystemId::G,
            &MacroInstance { rule: Rule::Thin, premises: vec![seq("p -> q")], conclusion: seq("p -> q") },
        )
        .unwrap_err();
        assert!(matches!(err, ElabError::Shape(_)));
    }

    #[test]
    fn remaining_macros_expand_and_check() {
        expand(SystemId::G, Rule::Perm, &["r, p, q, s -> t"], "r, q, p, s -> t");
        expand(SystemId::GBot, Rule::Perm, &["p, q -> t"], "q, p -> t");
        expand(SystemId::G, Rule::CutStar, &["s, t -> p", "r, p -> q"], "r, s, t -> q");
        expand(SystemId::G, Rule::WeakRaa, &["r, p -> q", "r, p -> ~q"], "r -> ~p");
        expand(SystemId::C, Rule::WeakRaa, &["r, p -> q", "r, p -> ~q"], "r -> ~p");
        expand(SystemId::GBot, Rule::WeakRaa, &["r, p -> q", "r, p -> q => #"], "r -> p => #");
        expand(SystemId::G, Rule::DnIntro, &["r -> p"], "r -> ~~p");
        expand(SystemId::C, Rule::DnIntro, &["r -> p"], "r -> ~~p");
        expand(SystemId::G, Rule::Case, &["r, q -> p", "r, ~q -> p"], "r -> p");
        expand(SystemId::GBot, Rule::Case, &["q -> p", "q => # -> p"], "-> p");
        expand(SystemId::C, Rule::CImpIntro, &["r, p -> q"], "r -> ~(p . ~q)");
        expand(SystemId::C, Rule::CImpElim, &["r -> p", "r -> ~(p . ~q)"], "r -> q");
        expand(SystemId::C, Rule::RaaViaShort, &["r, ~p -> q", "r, ~p -> ~q"], "r -> p");
        expand(SystemId::C, Rule::RaaShortViaRaa, &["r, ~p -> q . ~q"], "r -> p");
        expand(SystemId::C, Rule::ExContra, &["s -> q", "s -> ~q"], "s -> p");
        expand(SystemId::GBot, Rule::ExContra, &["s -> q", "s -> q => #"], "s -> p");
    }

    #[test]
    fn catalogue_gating() {
        let m = MacroInstance { rule: Rule::CImpElim, premises: vec![seq("r -> p"), seq("r -> ~p")], conclusion: seq("r -> q") };
        assert_eq!(elaborate_step(SystemId::G, &m).unwrap_err(), ElabError::NotInSystem { rule: Rule::CImpElim, system: SystemId::G });
        let m = MacroInstance { rule: Rule::Perm, premises: vec![seq("p, q -> r")], conclusion: seq("q, p -> r") };
        assert!(elaborate_step(SystemId::C, &m).is_err());
    }

    #[test]
    fn shape_mismatches_are_errors() {
        let m = MacroInstance { rule: Rule::Contr, premises: vec![seq("r, p, q -> q")], conclusion: seq("r, p -> q") };
        assert!(matches!(elaborate_step(SystemId::G, &m), Err(ElabError::Shape(_))));
        let m = MacroInstance { rule: Rule::Case, premises: vec![seq("q -> p"), seq("~r -> p")], conclusion: seq("-> p") };
        assert!(matches!(elaborate_step(SystemId::G, &m), Err(ElabError::Shape(_))));
        let m = MacroInstance { rule: Rule::Dne, premises: vec![], conclusion: seq("~p -> p") };
        assert!(matches!(elaborate_step(SystemId::G, &m), Err(ElabError::Shape(_))));
    }

    const PARADOX_MACRO: &str = "\
system: G
1. p -> p ; axiom
2. ~p, p, ~q -> p ; thin 1
3. ~p -> ~p ; axiom
4. ~p, p, ~q -> ~p ; thin 3
5. ~p, p -> q ; raa 2 4
6. ~p -> p => q ; imp-intro 5
";

    #[test]
    fn six_step_display_elaborates_to_eight_lines() {
        let script = parse_script(PARADOX_MACRO).unwrap();
        assert!(check_script(&script).accepted());
        let strict = elaborate_script(&script).unwrap();
        assert_eq!(strict.lines.len(), 8);
        assert_eq!(strict.mode, Mode::Strict);
        assert!(check_script(&strict).accepted());
        assert_eq!(strict.conclusion(), script.conclusion());
        assert_eq!(elaborate_script(&strict).unwrap(), strict);
    }

    #[test]
    fn macro_outside_catalogue_is_reported_with_its_line() {
        let script = parse_script("system: G\n1. r -> p ; premise\n2. r -> ~p ; premise\n3. r -> q ; c-imp-elim 1 2\n").unwrap();
        let err = elaborate_script(&script).unwrap_err();
        assert!(matches!(err, ElabError::AtLine { line: 3, .. }));
    }
}
