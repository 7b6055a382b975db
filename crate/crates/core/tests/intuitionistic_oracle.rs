mod common;

use common::{frames, kripke_valid};
use gnd_core::formula::Connective;
use gnd_core::intuitionistic::int_provable;
use gnd_core::semantics::tautology;
use gnd_core::sweep::{enumerate_formulas, Strategy};
use gnd_core::{parse_formula, Formula};

const ALL: [Connective; 5] = [Connective::Var, Connective::Neg, Connective::Imp, Connective::Conj, Connective::Falsum];

#[test]
fn frames_up_to_three_worlds() {
    // one, one chain of two, and three labellings of the two shapes on three
    let fs = frames(3);
    assert_eq!(fs.len(), 5);
    assert!(fs.iter().all(|f| f.up[0].count_ones() as usize == f.worlds));
}

#[test]
fn oracle_refutes_double_negation_elimination_on_two_worlds() {
    let f = parse_formula("~~p => p").unwrap();
    assert!(!kripke_valid(&f, &frames(2)));
    assert!(kripke_valid(&f, &frames(1)));
    assert!(kripke_valid(&parse_formula("~(p . ~p)").unwrap(), &frames(3)));
}

#[test]
fn search_agrees_with_kripke_models_up_to_nine_nodes() {
    let fs = frames(3);
    let corpus = enumerate_formulas(&["p", "q"], &ALL, 9);
    assert_eq!(corpus.len(), 199_827);
    let disagreements: Vec<Formula> = Strategy::default()
        .map(&corpus, |f| (int_provable(f) != kripke_valid(f, &fs)).then(|| f.clone()))
        .into_iter()
        .flatten()
        .collect();
    assert!(disagreements.is_empty(), "{} disagreements, first {:?}", disagreements.len(), &disagreements[..disagreements.len().min(5)]);
}

#[test]
fn intuitionistic_theorems_are_tautologies() {
    let corpus = enumerate_formulas(&["p", "q"], &ALL, 8);
    let bad = Strategy::default().count(&corpus, |f| int_provable(f) && !tautology(f).is_valid());
    assert_eq!(bad, 0);
}
