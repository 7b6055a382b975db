mod common;

use std::collections::BTreeSet;

use common::{golden_dir, random_formula, ScriptGen};
use gnd_core::formula::Connective;
use gnd_core::hilbert::{
    check_hilbert, deduction_theorem, g_to_hilbert, hilbert_to_g, parse_hilbert, Axiom, HilbertJust, HilbertLine,
    HilbertScript,
};
use gnd_core::sweep::enumerate_by_depth;
use gnd_core::{check_script, Formula, Sequent, SystemId};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random accepted Hilbert derivation whose conclusion depends on the
/// last line it builds.
fn random_hilbert(rng: &mut ChaCha8Rng, system: SystemId) -> HilbertScript {
    let vars = ["p", "q", "r"];
    let nh = rng.random_range(1..=3);
    let hyps: Vec<Formula> = (0..nh).map(|_| random_formula(rng, SystemId::G, &vars, 1)).collect();
    let mut script = HilbertScript::new(system, hyps.clone());
    let axioms: Vec<Axiom> = Axiom::ALL.into_iter().filter(|a| a.admitted_in(system)).collect();
    for _ in 0..rng.random_range(1..=10) {
        let formulas: Vec<Formula> = script.lines.iter().map(|l| l.formula.clone()).collect();
        let mps: Vec<(usize, usize, Formula)> = (0..formulas.len())
            .flat_map(|j| (0..formulas.len()).map(move |i| (i, j)))
            .filter_map(|(i, j)| match formulas[j].as_imp() {
                Some((a, b)) if *a == formulas[i] => Some((i + 1, j + 1, b.clone())),
                _ => None,
            })
            .collect();
        let line = match rng.random_range(0..4) {
            0 if !mps.is_empty() => {
                let (i, j, b) = mps.choose(rng).unwrap().clone();
                HilbertLine { formula: b, just: HilbertJust::Mp(i, j) }
            }
            1 => {
                let k = rng.random_range(1..=hyps.len());
                HilbertLine { formula: hyps[k - 1].clone(), just: HilbertJust::Hyp(k) }
            }
            _ => {
                let ax = *axioms.choose(rng).unwrap();
                let pick = |rng: &mut ChaCha8Rng| match formulas.choose(rng) {
                    Some(f) if rng.random_bool(0.5) => f.clone(),
                    _ => random_formula(rng, SystemId::G, &vars, 1),
                };
                let (p, q, r) = (pick(rng), pick(rng), pick(rng));
                HilbertLine { formula: ax.instance(&p, &q, &r), just: HilbertJust::Axiom(ax) }
            }
        };
        script.lines.push(line);
    }
    script
}

#[test]
fn deduction_theorem_discharges_the_last_hypothesis() {
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    for round in 0..400 {
        let system = [SystemId::HLT, SystemId::HL3][round % 2];
        let script = random_hilbert(&mut rng, system);
        assert!(check_hilbert(&script).accepted(), "{script}");
        let out = deduction_theorem(&script).unwrap();
        let report = check_hilbert(&out);
        assert!(report.accepted(), "{script}\n=>\n{out}\n{report}");
        let p = script.hypotheses.last().unwrap();
        assert_eq!(out.hypotheses, script.hypotheses[..script.hypotheses.len() - 1]);
        assert_eq!(out.conclusion(), Some(&Formula::imp(p.clone(), script.conclusion().unwrap().clone())));
    }
}

#[test]
fn g_scripts_become_hl3_derivations_and_back() {
    let mut rng = ChaCha8Rng::seed_from_u64(52);
    let mut done = 0;
    for _ in 0..300 {
        let script = ScriptGen::new(&mut rng, SystemId::G, 3).script(10, 40);
        let Some(last) = script.conclusion().cloned() else { continue };
        let hil = g_to_hilbert(&script).unwrap();
        assert_eq!(hil.system, SystemId::HL3);
        let report = check_hilbert(&hil);
        assert!(report.accepted(), "{script}\n{hil}\n{report}");
        let set: BTreeSet<&Formula> = last.antecedent.iter().collect();
        assert_eq!(hil.hypotheses.iter().collect::<BTreeSet<_>>(), set);
        assert_eq!(hil.hypotheses.len(), set.len());
        assert_eq!(hil.conclusion(), Some(&last.succedent));

        let g = hilbert_to_g(&hil).unwrap();
        assert!(check_script(&g).accepted());
        assert_eq!(g.conclusion(), Some(&Sequent::new(hil.hypotheses.clone(), last.succedent.clone())));
        done += 1;
    }
    assert!(done > 250);
}

#[test]
fn random_hilbert_scripts_map_into_g() {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    for round in 0..200 {
        let system = [SystemId::HLT, SystemId::HL3][round % 2];
        let script = random_hilbert(&mut rng, system);
        let g = hilbert_to_g(&script).unwrap();
        let report = check_script(&g);
        assert!(report.accepted(), "{script}\n{report}");
        let want = Sequent::new(script.hypotheses.clone(), script.conclusion().unwrap().clone());
        assert_eq!(g.conclusion(), Some(&want));
    }
}

#[test]
fn interderivation_goldens_instantiate() {
    let g = [Connective::Var, Connective::Neg, Connective::Imp];
    let fs = enumerate_by_depth(&["p", "q"], &g, 2);
    for file in ["hlt_lemma.hil", "hlt_derives_ax3p.hil", "hl3_derives_ax3.hil"] {
        let text = std::fs::read_to_string(golden_dir().join("hilbert").join(file)).unwrap();
        let script = parse_hilbert(&text).unwrap();
        for a in fs.iter().step_by(9) {
            for b in fs.iter().step_by(11) {
                let inst = script.substitute(&|x| match x {
                    "p" => Some(a.clone()),
                    "q" => Some(b.clone()),
                    _ => None,
                });
                assert!(check_hilbert(&inst).accepted(), "{file} at p={a}, q={b}");
            }
        }
    }
}

#[test]
fn instantiated_goldens_prove_the_other_schema() {
    let hlt = parse_hilbert(&std::fs::read_to_string(golden_dir().join("hilbert/hlt_derives_ax3p.hil")).unwrap()).unwrap();
    let hl3 = parse_hilbert(&std::fs::read_to_string(golden_dir().join("hilbert/hl3_derives_ax3.hil")).unwrap()).unwrap();
    assert_eq!(hlt.system, SystemId::HLT);
    assert_eq!(hl3.system, SystemId::HL3);
    assert!(Axiom::Ax3Reductio.matches(hlt.conclusion().unwrap()).is_some());
    assert!(Axiom::Ax3.matches(hl3.conclusion().unwrap()).is_some());
    assert!(hlt.lines.iter().all(|l| l.just != HilbertJust::Axiom(Axiom::Ax3Reductio)));
    assert!(hl3.lines.iter().all(|l| l.just != HilbertJust::Axiom(Axiom::Ax3)));
}
