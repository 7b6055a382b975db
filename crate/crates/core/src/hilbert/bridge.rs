//! Translations between `G` proofs and `HL3`/`HLT` derivations.
//!
//! `G` to `HL3` works on a shared derivation graph: each `G` line becomes
//! a node proving its succedent from hypotheses drawn from its antecedent.
//! Implication introduction is the deduction theorem applied to the node,
//! memoized per (node, hypothesis), so shared subderivations are
//! transformed once.
//!
//! Hilbert to `G` instantiates a frozen `G` proof of each axiom schema,
//! projects hypotheses, and maps modus ponens to implication elimination.
//! The frozen proofs are the short direct ones from [`direct_axiom_proof`];
//! every axiom line of a Hilbert derivation costs one copy.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use super::{check_hilbert, Axiom, HilbertJust, HilbertLine, HilbertScript};
use crate::builder::{ElabError, ProofBuilder, Step};
use crate::derived::elaborate_script;
use crate::formula::Formula;
use crate::kernel::check_script;
use crate::script::{parse_script, Mode, ProofScript, Rule, Sequent};
use crate::system::SystemId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BridgeError {
    #[error("input script is not accepted ({0} violations)")]
    NotAccepted(usize),
    #[error("expected a {expected} script, found {found}")]
    WrongSystem { expected: SystemId, found: SystemId },
    #[error("line {0} is a premise; only premise-free proofs translate")]
    Premise(usize),
    #[error("input script has no lines")]
    Empty,
    #[error(transparent)]
    Elab(#[from] ElabError),
}

const TEMPLATE_SOURCES: [&str; 4] = [
    include_str!("../../golden/templates/ax1.gnd"),
    include_str!("../../golden/templates/ax2.gnd"),
    include_str!("../../golden/templates/ax3.gnd"),
    include_str!("../../golden/templates/ax3r.gnd"),
];

/// The frozen `G` proof of `-> ax.instance(p, q, r)`.
pub fn axiom_template(ax: Axiom) -> &'static ProofScript {
    static TEMPLATES: OnceLock<Vec<ProofScript>> = OnceLock::new();
    let all = TEMPLATES.get_or_init(|| {
        TEMPLATE_SOURCES.iter().map(|src| parse_script(src).expect("golden template parses")).collect()
    });
    &all[Axiom::ALL.iter().position(|&a| a == ax).expect("listed")]
}

/// A direct macro-mode proof of `-> ax.instance(p, q, r)`: assume the
/// antecedents of the implication chain, derive the consequent, discharge.
/// This is what the golden templates contain.
pub fn direct_axiom_proof(ax: Axiom) -> ProofScript {
    let (p, q, r) = (Formula::var("p"), Formula::var("q"), Formula::var("r"));
    let goal = ax.instance(&p, &q, &r);
    let mut b = ProofBuilder::new(SystemId::G, Mode::Macro);
    let mut chain = Vec::new();
    let mut rest = goal.clone();
    let depth = if ax == Axiom::Ax2 { 3 } else { 2 };
    for _ in 0..depth {
        let (a, c) = rest.as_imp().expect("schemata are implication chains");
        chain.push(a.clone());
        rest = c.clone();
    }
    let np = Formula::neg(p.clone());
    let built = (|| -> Result<Step, ElabError> {
        let at = |f: &Formula, ctx: &[Formula]| ctx.iter().position(|g| g == f).expect("in context");
        let mut step = match ax {
            Axiom::Ax1 => {
                let ax = b.axiom(p.clone())?;
                b.thin_to(ax, &chain)?
            }
            Axiom::Ax2 => {
                let x = b.proj(&chain, 2)?;
                let xq = b.proj(&chain, 1)?;
                let y = b.imp_elim(x, xq)?;
                let xqr = b.proj(&chain, 0)?;
                let yr = b.imp_elim(x, xqr)?;
                b.imp_elim(y, yr)?
            }
            Axiom::Ax3 => {
                let mut ctx = chain.clone();
                ctx.push(np.clone());
                let yes = b.proj(&ctx, at(&q, &ctx))?;
                let n = b.proj(&ctx, 2)?;
                let imp = b.proj(&ctx, 0)?;
                let no = b.imp_elim(n, imp)?;
                b.raa(yes, no)?
            }
            Axiom::Ax3Reductio => {
                let mut ctx = chain.clone();
                ctx.push(np.clone());
                let n = b.proj(&ctx, 2)?;
                let i1 = b.proj(&ctx, 0)?;
                let yes = b.imp_elim(n, i1)?;
                let i2 = b.proj(&ctx, 1)?;
                let no = b.imp_elim(n, i2)?;
                b.raa(yes, no)?
            }
        };
        for _ in 0..depth {
            step = b.imp_intro(step)?;
        }
        Ok(step)
    })();
    built.expect("direct axiom proofs are well formed");
    let mut script = b.into_script();
    script.goal = Some(Sequent::theorem(goal));
    script
}

/// Appends an instance of a theorem template to `b`.
fn instantiate(b: &mut ProofBuilder, template: &ProofScript, sub: &impl Fn(&str) -> Option<Formula>) -> Step {
    let offset = b.len();
    for line in &template.lines {
        let sequent = line.sequent.map(|f| f.substitute(sub));
        let refs = line.justification.premises.iter().map(|r| r + offset).collect();
        b.push_unchecked(sequent, line.justification.rule, refs);
    }
    b.len()
}

/// A macro-mode `G` proof of `hypotheses -> conclusion`.
pub fn hilbert_to_g(script: &HilbertScript) -> Result<ProofScript, BridgeError> {
    let report = check_hilbert(script);
    if !report.accepted() {
        return Err(BridgeError::NotAccepted(report.violations.len()));
    }
    if script.lines.is_empty() {
        return Err(BridgeError::Empty);
    }
    let ctx = &script.hypotheses;
    let mut b = ProofBuilder::new(SystemId::G, Mode::Macro);
    let mut axioms: HashMap<&Formula, Step> = HashMap::new();
    let mut hyps: HashMap<usize, Step> = HashMap::new();
    let mut map: Vec<Step> = Vec::with_capacity(script.lines.len());
    let last = script.lines.len() - 1;

    for (n, line) in script.lines.iter().enumerate() {
        let fresh = n == last;
        let step = match line.just {
            HilbertJust::Axiom(ax) => match axioms.get(&line.formula) {
                Some(&s) if !fresh => s,
                _ => {
                    let env = ax.matches(&line.formula).expect("checked");
                    let sub = |x: &str| match x {
                        "p" => env.get("P").cloned(),
                        "q" => env.get("Q").cloned(),
                        "r" => env.get("R").cloned(),
                        _ => None,
                    };
                    let mut s = instantiate(&mut b, axiom_template(ax), &sub);
                    if !ctx.is_empty() {
                        s = b.thin_to(s, ctx)?;
                    }
                    axioms.insert(&line.formula, s);
                    s
                }
            },
            HilbertJust::Hyp(k) => match hyps.get(&k) {
                Some(&s) if !fresh => s,
                _ => {
                    let s = b.proj(ctx, k - 1)?;
                    hyps.insert(k, s);
                    s
                }
            },
            HilbertJust::Mp(i, j) => b.imp_elim(map[i - 1], map[j - 1])?,
        };
        map.push(step);
    }
    let mut out = b.into_script();
    out.goal = Some(Sequent::new(ctx.clone(), script.lines[last].formula.clone()));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Node {
    Axiom(Axiom),
    Hyp(Formula),
    Mp(usize, usize),
}

#[derive(Default)]
struct Dag {
    nodes: Vec<(Formula, Node)>,
    /// Sorted hypothesis ids each node depends on.
    deps: Vec<Arc<[u32]>>,
    index: HashMap<(Formula, Node), usize>,
    hyp_ids: HashMap<Formula, u32>,
    discharged: HashMap<(usize, u32), usize>,
    identities: HashMap<u32, usize>,
}

impl Dag {
    fn hyp_id(&mut self, f: &Formula) -> u32 {
        let next = self.hyp_ids.len() as u32;
        *self.hyp_ids.entry(f.clone()).or_insert(next)
    }

    fn add(&mut self, formula: Formula, node: Node) -> usize {
        let key = (formula, node);
        if let Some(&at) = self.index.get(&key) {
            return at;
        }
        let deps: Arc<[u32]> = match &key.1 {
            Node::Axiom(_) => Arc::from([]),
            Node::Hyp(h) => Arc::from([self.hyp_id(h)]),
            Node::Mp(i, j) => {
                let (a, b) = (&self.deps[*i], &self.deps[*j]);
                if b.is_empty() {
                    a.clone()
                } else if a.is_empty() {
                    b.clone()
                } else {
                    let mut all: Vec<u32> = a.iter().chain(b.iter()).copied().collect();
                    all.sort_unstable();
                    all.dedup();
                    all.into()
                }
            }
        };
        self.nodes.push(key.clone());
        self.deps.push(deps);
        self.index.insert(key, self.nodes.len() - 1);
        self.nodes.len() - 1
    }

    fn formula(&self, n: usize) -> &Formula {
        &self.nodes[n].0
    }

    fn axiom(&mut self, ax: Axiom, f: Formula) -> usize {
        self.add(f, Node::Axiom(ax))
    }

    fn mp(&mut self, i: usize, j: usize) -> usize {
        let (a, b) = self.formula(j).as_imp().expect("major premise is an implication");
        debug_assert_eq!(a, self.formula(i));
        let b = b.clone();
        self.add(b, Node::Mp(i, j))
    }

    fn identity(&mut self, h: u32, p: &Formula) -> usize {
        if let Some(&n) = self.identities.get(&h) {
            return n;
        }
        let pp = Formula::imp(p.clone(), p.clone());
        let s2 = self.axiom(Axiom::Ax2, Axiom::Ax2.instance(p, &pp, p));
        let s1 = self.axiom(Axiom::Ax1, Axiom::Ax1.instance(p, &pp, p));
        let s3 = self.mp(s1, s2);
        let s4 = self.axiom(Axiom::Ax1, Axiom::Ax1.instance(p, p, p));
        let n = self.mp(s4, s3);
        self.identities.insert(h, n);
        n
    }

    /// A node proving `p => A` for the node `root` proving `A`.
    fn discharge(&mut self, root: usize, p: &Formula) -> usize {
        let h = self.hyp_id(p);
        let mut stack = vec![(root, false)];
        while let Some((n, ready)) = stack.pop() {
            if self.discharged.contains_key(&(n, h)) {
                continue;
            }
            let result = if self.deps[n].binary_search(&h).is_err() {
                let a = self.formula(n).clone();
                let ax = self.axiom(Axiom::Ax1, Axiom::Ax1.instance(&a, p, p));
                self.mp(n, ax)
            } else {
                match self.nodes[n].1.clone() {
                    Node::Hyp(_) => self.identity(h, p),
                    Node::Axiom(_) => unreachable!("axioms have no hypotheses"),
                    Node::Mp(i, j) if ready => {
                        let (di, dj) = (self.discharged[&(i, h)], self.discharged[&(j, h)]);
                        let b = self.formula(n).clone();
                        let a = self.formula(i).clone();
                        let ax = self.axiom(Axiom::Ax2, Axiom::Ax2.instance(p, &a, &b));
                        let k = self.mp(dj, ax);
                        self.mp(di, k)
                    }
                    Node::Mp(i, j) => {
                        stack.push((n, true));
                        stack.push((i, false));
                        stack.push((j, false));
                        continue;
                    }
                }
            };
            self.discharged.insert((n, h), result);
        }
        self.discharged[&(root, h)]
    }

    /// The derivation of `root` as a script, with `hypotheses` declared in
    /// the given order.
    fn emit(&self, root: usize, system: SystemId, hypotheses: Vec<Formula>) -> HilbertScript {
        let mut live = vec![false; root + 1];
        let mut stack = vec![root];
        while let Some(n) = stack.pop() {
            if std::mem::replace(&mut live[n], true) {
                continue;
            }
            if let Node::Mp(i, j) = self.nodes[n].1 {
                stack.extend([i, j]);
            }
        }
        let mut number = vec![0usize; root + 1];
        let mut script = HilbertScript::new(system, hypotheses);
        for n in (0..=root).filter(|&n| live[n]) {
            let (formula, node) = &self.nodes[n];
            let just = match node {
                Node::Axiom(ax) => HilbertJust::Axiom(*ax),
                Node::Hyp(h) => {
                    let k = script.hypotheses.iter().position(|x| x == h).expect("hypothesis is in the final context");
                    HilbertJust::Hyp(k + 1)
                }
                Node::Mp(i, j) => HilbertJust::Mp(number[*i], number[*j]),
            };
            script.lines.push(HilbertLine { formula: formula.clone(), just });
            number[n] = script.lines.len();
        }
        script
    }
}

/// An `HL3` derivation of the succedent of an accepted `G` proof from the
/// members of its antecedent, listed once each in order of first
/// occurrence.
pub fn g_to_hilbert(script: &ProofScript) -> Result<HilbertScript, BridgeError> {
    if script.system != SystemId::G {
        return Err(BridgeError::WrongSystem { expected: SystemId::G, found: script.system });
    }
    let report = check_script(script);
    if !report.accepted() {
        return Err(BridgeError::NotAccepted(report.violations.len()));
    }
    let strict;
    let source = if script.uses_macros() {
        strict = elaborate_script(script)?;
        &strict
    } else {
        script
    };

    let mut dag = Dag::default();
    let mut map: Vec<usize> = Vec::with_capacity(source.lines.len());
    for (idx, line) in source.lines.iter().enumerate() {
        let r = &line.justification.premises;
        let s = &line.sequent;
        let node = match line.justification.rule {
            Rule::Axiom => dag.add(s.succedent.clone(), Node::Hyp(s.succedent.clone())),
            Rule::ThinFront | Rule::ThinBack => map[r[0] - 1],
            Rule::ImpIntro => {
                let p = source.lines[r[0] - 1].sequent.antecedent.last().expect("checked").clone();
                dag.discharge(map[r[0] - 1], &p)
            }
            Rule::ImpElim => dag.mp(map[r[0] - 1], map[r[1] - 1]),
            Rule::Raa => {
                let q = source.lines[r[0] - 1].sequent.succedent.clone();
                let np = source.lines[r[0] - 1].sequent.antecedent.last().expect("checked").clone();
                let a = dag.discharge(map[r[0] - 1], &np);
                let b = dag.discharge(map[r[1] - 1], &np);
                let ax = dag.axiom(Axiom::Ax3Reductio, Axiom::Ax3Reductio.instance(&s.succedent, &q, &q));
                let k = dag.mp(a, ax);
                dag.mp(b, k)
            }
            Rule::Premise => return Err(BridgeError::Premise(idx + 1)),
            other => unreachable!("`{other}` cannot occur in an accepted strict G script"),
        };
        debug_assert_eq!(dag.formula(node), &s.succedent);
        map.push(node);
    }
    let root = *map.last().ok_or(BridgeError::Empty)?;
    let mut hyps: Vec<Formula> = Vec::new();
    for f in &source.lines.last().expect("nonempty").sequent.antecedent {
        if !hyps.contains(f) {
            hyps.push(f.clone());
        }
    }
    Ok(dag.emit(root, SystemId::HL3, hyps))
}
