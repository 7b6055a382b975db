#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;
use std::sync::Arc;

use gnd_core::derived::MacroInstance;
use gnd_core::kernel::check_step;
use gnd_core::script::{Justification, Line};
use gnd_core::{Formula, Mode, ProofScript, Rule, Sequent, SystemId};
use rand::seq::IndexedRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden")
}

/// `(file name, contents)` of every `.gnd` file in `golden/corpus`, by name.
pub fn corpus_scripts() -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = std::fs::read_dir(golden_dir().join("corpus"))
        .expect("golden/corpus exists")
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "gnd"))
        .map(|p| {
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            (name, std::fs::read_to_string(&p).unwrap())
        })
        .collect();
    out.sort();
    out
}

/// Compares `rendered` with the golden file at `rel`, or rewrites the file
/// when `GND_BLESS` is set.
pub fn golden_compare(rel: &str, rendered: &str) {
    let path = golden_dir().join(rel);
    if std::env::var_os("GND_BLESS").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, rendered).unwrap();
        return;
    }
    let stored = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(stored, rendered, "{rel} is stale; rerun with GND_BLESS=1");
}

// ---------------------------------------------------------------------------
// mutations

/// Removes line `k` (1-based). Citations of later lines are renumbered;
/// citations of `k` itself keep the number, which now names the next line.
pub fn delete_line(script: &ProofScript, k: usize) -> ProofScript {
    let mut out = script.clone();
    out.lines.remove(k - 1);
    for line in &mut out.lines {
        for r in &mut line.justification.premises {
            if *r > k {
                *r -= 1;
            }
        }
    }
    out
}

/// Exchanges lines `i` and `j` (1-based) in place, citations untouched.
pub fn transpose_lines(script: &ProofScript, i: usize, j: usize) -> ProofScript {
    let mut out = script.clone();
    out.lines.swap(i - 1, j - 1);
    out
}

/// Reverses the cited premises of line `k`.
pub fn swap_refs(script: &ProofScript, k: usize) -> ProofScript {
    let mut out = script.clone();
    out.lines[k - 1].justification.premises.reverse();
    out
}

// ---------------------------------------------------------------------------
// Kripke oracle

/// A rooted finite partial order; world 0 is the root.
#[derive(Clone, Debug)]
pub struct Frame {
    pub worlds: usize,
    /// `up[w]` is the bitmask of worlds above or equal to `w`.
    pub up: Vec<u8>,
}

/// Every rooted partial order on at most `max` worlds (labelled, so some
/// appear more than once).
pub fn frames(max: usize) -> Vec<Frame> {
    let mut out = Vec::new();
    for n in 1..=max {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|(a, b)| a != b).collect();
        for bits in 0u32..1 << pairs.len() {
            let mut le = vec![vec![false; n]; n];
            for (w, row) in le.iter_mut().enumerate() {
                row[w] = true;
            }
            for (k, &(a, b)) in pairs.iter().enumerate() {
                if bits >> k & 1 == 1 {
                    le[a][b] = true;
                }
            }
            let antisymmetric = (0..n).all(|a| (0..n).all(|b| a == b || !(le[a][b] && le[b][a])));
            let transitive = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(le[a][b] && le[b][c]) || le[a][c])));
            let rooted = (0..n).all(|b| le[0][b]);
            if antisymmetric && transitive && rooted {
                let up = (0..n)
                    .map(|a| (0..n).filter(|&b| le[a][b]).fold(0u8, |m, b| m | 1 << b))
                    .collect();
                out.push(Frame { worlds: n, up });
            }
        }
    }
    out
}

impl Frame {
    fn all(&self) -> u8 {
        ((1u16 << self.worlds) - 1) as u8
    }

    /// Upward closed sets of worlds.
    pub fn upsets(&self) -> Vec<u8> {
        (0..=self.all()).filter(|&m| (0..self.worlds).all(|w| m >> w & 1 == 0 || self.up[w] & !m == 0)).collect()
    }

    /// Worlds forcing `f`.
    pub fn force(&self, f: &Formula, val: &HashMap<Arc<str>, u8>) -> u8 {
        match f {
            Formula::Var(x) => val[x],
            Formula::Falsum => 0,
            Formula::Conj(a, b) => self.force(a, val) & self.force(b, val),
            Formula::Neg(a) => self.implies(self.force(a, val), 0),
            Formula::Imp(a, b) => self.implies(self.force(a, val), self.force(b, val)),
        }
    }

    fn implies(&self, a: u8, b: u8) -> u8 {
        (0..self.worlds).filter(|&w| self.up[w] & a & !b == 0).fold(0, |m, w| m | 1 << w)
    }
}

/// Whether the root forces `f` in every model on the given frames.
pub fn kripke_valid(f: &Formula, frames: &[Frame]) -> bool {
    let vars = f.variables();
    frames.iter().all(|frame| {
        let ups = frame.upsets();
        let mut choice = vec![0usize; vars.len()];
        loop {
            let val: HashMap<Arc<str>, u8> = vars.iter().cloned().zip(choice.iter().map(|&c| ups[c])).collect();
            if frame.force(f, &val) & 1 == 0 {
                return false;
            }
            let mut k = 0;
            loop {
                if k == choice.len() {
                    return true;
                }
                choice[k] += 1;
                if choice[k] < ups.len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
        }
    })
}

// ---------------------------------------------------------------------------
// random formulas and sequents

pub fn var_names(n: usize) -> Vec<&'static str> {
    ["p", "q", "r", "s"][..n].to_vec()
}

/// A formula in the alphabet of `system` of depth at most `depth`.
pub fn random_formula(rng: &mut ChaCha8Rng, system: SystemId, vars: &[&str], depth: usize) -> Formula {
    if depth == 0 || rng.random_bool(0.35) {
        if system == SystemId::GBot && rng.random_bool(0.15) {
            return Formula::Falsum;
        }
        return Formula::var(vars.choose(rng).unwrap());
    }
    let sub = |rng: &mut ChaCha8Rng| random_formula(rng, system, vars, depth - 1);
    match (system, rng.random_range(0..3)) {
        (SystemId::GBot, _) => Formula::imp(sub(rng), sub(rng)),
        (SystemId::C, 0) | (SystemId::G | SystemId::HLT | SystemId::HL3, 0) => Formula::neg(sub(rng)),
        (SystemId::C, _) => Formula::conj(sub(rng), sub(rng)),
        _ => Formula::imp(sub(rng), sub(rng)),
    }
}

pub fn random_sequent(rng: &mut ChaCha8Rng, vars: &[&str], max_ante: usize, depth: usize) -> Sequent {
    let n = rng.random_range(0..=max_ante);
    let antecedent = (0..n).map(|_| random_formula(rng, SystemId::G, vars, depth)).collect();
    Sequent::new(antecedent, random_formula(rng, SystemId::G, vars, depth))
}

// ---------------------------------------------------------------------------
// random accepted scripts

/// Builds scripts by chaining rule applications chosen at random. Every
/// candidate line is offered to the kernel and kept only if it is
/// accepted, so the result is accepted by construction.
pub struct ScriptGen<'r> {
    rng: &'r mut ChaCha8Rng,
    system: SystemId,
    vars: Vec<&'static str>,
    lines: Vec<Line>,
    seqs: Vec<Sequent>,
    pub used: BTreeMap<Rule, usize>,
}

type Candidate = Vec<(Sequent, Rule, Vec<usize>)>;

fn rules_of(system: SystemId) -> Vec<Rule> {
    Rule::ALL
        .iter()
        .copied()
        .filter(|r| r.is_primitive_in(system) && *r != Rule::Premise || r.is_macro_in(system))
        .collect()
}

impl<'r> ScriptGen<'r> {
    pub fn new(rng: &'r mut ChaCha8Rng, system: SystemId, nvars: usize) -> Self {
        ScriptGen { rng, system, vars: var_names(nvars), lines: Vec::new(), seqs: Vec::new(), used: BTreeMap::new() }
    }

    fn formula(&mut self) -> Formula {
        let depth = self.rng.random_range(0..=2);
        random_formula(self.rng, self.system, &self.vars, depth)
    }

    fn neg(&self, f: &Formula) -> Formula {
        self.system.neg(f.clone())
    }

    fn pick(&mut self) -> usize {
        self.rng.random_range(0..self.seqs.len())
    }

    /// 1-based index of an existing line proving `s`, or a `proj` line.
    fn obtain(&self, s: &Sequent, extra: &mut Candidate) -> Option<usize> {
        if let Some(k) = self.seqs.iter().position(|t| t == s) {
            return Some(k + 1);
        }
        if s.antecedent.contains(&s.succedent) {
            extra.push((s.clone(), Rule::Proj, vec![]));
            return Some(self.seqs.len() + extra.len());
        }
        None
    }

    fn candidate(&mut self, rule: Rule) -> Option<Candidate> {
        let mut c: Candidate = Vec::new();
        if self.seqs.is_empty() && !matches!(rule, Rule::Axiom | Rule::Dne) {
            return None;
        }
        let system = self.system;
        let mut src: Option<usize> = None;
        let concl = match rule {
            Rule::Axiom => {
                let f = self.formula();
                Sequent::new(vec![f.clone()], f)
            }
            Rule::Dne => {
                let f = self.formula();
                Sequent::new(vec![self.neg(&self.neg(&f))], f)
            }
            Rule::Proj => {
                let i = self.pick();
                let base = self.seqs[i].antecedent.clone();
                let mut ctx = base;
                ctx.push(self.formula());
                let at = self.rng.random_range(0..ctx.len());
                Sequent::new(ctx.clone(), ctx[at].clone())
            }
            Rule::ThinFront | Rule::ThinBack | Rule::Thin => {
                let i = self.pick();
                let s = self.seqs[i].clone();
                let mut ctx = s.antecedent.clone();
                let succ = s.succedent.clone();
                if rule != Rule::ThinBack {
                    ctx.insert(0, self.formula());
                }
                if rule != Rule::ThinFront {
                    ctx.push(self.formula());
                }
                c.push((Sequent::new(ctx, succ), rule, vec![i + 1]));
                return Some(c);
            }
            Rule::ImpIntro => {
                let i = self.pick();
                src = Some(i);
                let s = self.seqs[i].clone();
                let mut ctx = s.antecedent.clone();
                let a = ctx.pop()?;
                Sequent::new(ctx, Formula::imp(a, s.succedent.clone()))
            }
            Rule::ImpElim | Rule::CImpElim => {
                let j = self.pick();
                let s = self.seqs[j].clone();
                let (a, b) = if rule == Rule::ImpElim {
                    let (a, b) = s.succedent.as_imp()?;
                    (a.clone(), b.clone())
                } else {
                    let (a, nb) = s.succedent.as_neg()?.as_conj()?;
                    (a.clone(), nb.as_neg()?.clone())
                };
                let i = self.obtain(&Sequent::new(s.antecedent.clone(), a), &mut c)?;
                c.push((Sequent::new(s.antecedent.clone(), b), rule, vec![i, j + 1]));
                return Some(c);
            }
            Rule::Raa | Rule::RaaViaShort | Rule::ExContra => {
                let i = self.pick();
                let s = self.seqs[i].clone();
                let target = if rule == Rule::ExContra {
                    Sequent::new(s.antecedent.clone(), self.formula())
                } else {
                    let mut ctx = s.antecedent.clone();
                    let last = ctx.pop()?;
                    Sequent::new(ctx, system.negated(&last)?.clone())
                };
                let j = self.obtain(&Sequent::new(s.antecedent.clone(), self.neg(&s.succedent)), &mut c)?;
                c.push((target, rule, vec![i + 1, j]));
                return Some(c);
            }
            Rule::WeakRaa => {
                let i = self.pick();
                let s = self.seqs[i].clone();
                let mut ctx = s.antecedent.clone();
                let p = ctx.pop()?;
                let j = self.obtain(&Sequent::new(s.antecedent.clone(), self.neg(&s.succedent)), &mut c)?;
                c.push((Sequent::new(ctx, self.neg(&p)), rule, vec![i + 1, j]));
                return Some(c);
            }
            Rule::RaaBot => {
                let i = self.pick();
                src = Some(i);
                let s = self.seqs[i].clone();
                if s.succedent != Formula::Falsum {
                    return None;
                }
                let mut ctx = s.antecedent.clone();
                let last = ctx.pop()?;
                Sequent::new(ctx, system.negated(&last)?.clone())
            }
            Rule::ConjIntro => {
                let i = self.pick();
                let s = self.seqs[i].clone();
                let same: Vec<usize> = (0..self.seqs.len()).filter(|&k| self.seqs[k].antecedent == s.antecedent).collect();
                let j = *same.choose(self.rng).unwrap();
                let f = Formula::conj(s.succedent.clone(), self.seqs[j].succedent.clone());
                c.push((Sequent::new(s.antecedent.clone(), f), rule, vec![i + 1, j + 1]));
                return Some(c);
            }
            Rule::ConjElimL | Rule::ConjElimR => {
                let i = self.pick();
                src = Some(i);
                let s = self.seqs[i].clone();
                let (a, b) = s.succedent.as_conj()?;
                let f = if rule == Rule::ConjElimL { a.clone() } else { b.clone() };
                Sequent::new(s.antecedent.clone(), f)
            }
            Rule::Cut | Rule::CutStar => {
                let i = self.pick();
                let s = self.seqs[i].clone();
                if rule == Rule::Cut && s.antecedent.len() != 1 {
                    return None;
                }
                let js: Vec<usize> = (0..self.seqs.len()).filter(|&k| self.seqs[k].antecedent.last() == Some(&s.succedent)).collect();
                let j = *js.choose(self.rng)?;
                let t = &self.seqs[j];
                let mut ctx = t.antecedent[..t.antecedent.len() - 1].to_vec();
                ctx.extend(s.antecedent.iter().cloned());
                c.push((Sequent::new(ctx, t.succedent.clone()), rule, vec![i + 1, j + 1]));
                return Some(c);
            }
            Rule::RaaShort | Rule::RaaShortViaRaa => {
                let i = self.pick();
                src = Some(i);
                let s = self.seqs[i].clone();
                let (q, nq) = s.succedent.as_conj()?;
                if nq.as_neg()? != q {
                    return None;
                }
                let mut ctx = s.antecedent.clone();
                let last = ctx.pop()?;
                Sequent::new(ctx, last.as_neg()?.clone())
            }
            Rule::Perm => {
                let i = self.pick();
                src = Some(i);
                let s = self.seqs[i].clone();
                if s.antecedent.len() < 2 {
                    return None;
                }
                let at = self.rng.random_range(0..s.antecedent.len() - 1);
                let mut ctx = s.antecedent.clone();
                ctx.swap(at, at + 1);
                Sequent::new(ctx, s.succedent.clone())
            }
            Rule::Contr => {
                let i = self.pick();
                let s = self.seqs[i].clone();
                let last = s.antecedent.last()?.clone();
                let mut from = i + 1;
                let mut ctx = s.antecedent.clone();
                if ctx.len() < 2 || ctx[ctx.len() - 2] != last {
                    ctx.push(last);
                    c.push((Sequent::new(ctx.clone(), s.succedent.clone()), Rule::ThinBack, vec![i + 1]));
                    from = self.seqs.len() + 1;
                }
                ctx.pop();
                c.push((Sequent::new(ctx, s.succedent.clone()), rule, vec![from]));
                return Some(c);
            }
            Rule::DnIntro => {
                let i = self.pick();
                src = Some(i);
                let s = self.seqs[i].clone();
                Sequent::new(s.antecedent.clone(), self.neg(&self.neg(&s.succedent)))
            }
            Rule::Case => {
                let i = self.pick();
                let s = self.seqs[i].clone();
                let mut ctx = s.antecedent.clone();
                let q = ctx.pop()?;
                let mut other = ctx.clone();
                other.push(self.neg(&q));
                let j = self.obtain(&Sequent::new(other, s.succedent.clone()), &mut c)?;
                c.push((Sequent::new(ctx, s.succedent.clone()), rule, vec![i + 1, j]));
                return Some(c);
            }
            Rule::CImpIntro => {
                let i = self.pick();
                src = Some(i);
                let s = self.seqs[i].clone();
                let mut ctx = s.antecedent.clone();
                let p = ctx.pop()?;
                Sequent::new(ctx, Formula::neg(Formula::conj(p, Formula::neg(s.succedent.clone()))))
            }
            Rule::Premise | Rule::ImpElimMult => return None,
        };
        let refs = src.map(|i| vec![i + 1]).unwrap_or_default();
        c.push((concl, rule, refs));
        Some(c)
    }

    /// Constructions that always apply: the missing second premise is made
    /// available by thinning the first with it and projecting.
    fn forced(&mut self, rule: Rule) -> Option<Candidate> {
        if self.seqs.is_empty() {
            return None;
        }
        let system = self.system;
        let i = self.pick();
        let s = self.seqs[i].clone();
        let (gamma, q) = (s.antecedent.clone(), s.succedent.clone());
        let t = self.seqs.len() + 1;
        let with = |f: &Formula| {
            let mut ctx = gamma.clone();
            ctx.push(f.clone());
            ctx
        };
        let mut c: Candidate = Vec::new();
        let contradiction = |c: &mut Candidate, x: &Formula| {
            c.push((Sequent::new(with(x), q.clone()), Rule::ThinBack, vec![i + 1]));
            c.push((Sequent::new(with(x), x.clone()), Rule::Proj, vec![]));
        };
        let nq = self.neg(&q);
        match rule {
            Rule::ImpElim | Rule::CImpElim => {
                let r = self.formula();
                let imp = if rule == Rule::ImpElim {
                    Formula::imp(q.clone(), r.clone())
                } else {
                    Formula::neg(Formula::conj(q.clone(), Formula::neg(r.clone())))
                };
                contradiction(&mut c, &imp);
                c.push((Sequent::new(with(&imp), r), rule, vec![t, t + 1]));
            }
            Rule::Raa | Rule::RaaViaShort => {
                contradiction(&mut c, &nq);
                c.push((Sequent::new(gamma.clone(), q.clone()), rule, vec![t, t + 1]));
            }
            Rule::ExContra => {
                contradiction(&mut c, &nq);
                let p = self.formula();
                c.push((Sequent::new(with(&nq), p), rule, vec![t, t + 1]));
            }
            Rule::WeakRaa => {
                contradiction(&mut c, &nq);
                c.push((Sequent::new(gamma.clone(), self.neg(&nq)), rule, vec![t, t + 1]));
            }
            Rule::RaaBot => {
                contradiction(&mut c, &nq);
                c.push((Sequent::new(with(&nq), Formula::Falsum), Rule::ImpElim, vec![t, t + 1]));
                c.push((Sequent::new(gamma.clone(), q.clone()), rule, vec![t + 2]));
            }
            Rule::RaaShort | Rule::RaaShortViaRaa => {
                contradiction(&mut c, &nq);
                c.push((Sequent::new(with(&nq), Formula::conj(q.clone(), nq.clone())), Rule::ConjIntro, vec![t, t + 1]));
                c.push((Sequent::new(gamma.clone(), q.clone()), rule, vec![t + 2]));
            }
            Rule::Case => {
                let x = self.formula();
                let nx = system.neg(x.clone());
                c.push((Sequent::new(with(&x), q.clone()), Rule::ThinBack, vec![i + 1]));
                c.push((Sequent::new(with(&nx), q.clone()), Rule::ThinBack, vec![i + 1]));
                c.push((Sequent::new(gamma.clone(), q.clone()), rule, vec![t, t + 1]));
            }
            _ => return None,
        }
        Some(c)
    }

    fn try_push(&mut self, cand: Candidate) -> bool {
        let mark = self.lines.len();
        for (sequent, rule, refs) in cand {
            let line = Line { sequent, justification: Justification::new(rule, refs) };
            if check_step(self.system, Mode::Macro, &self.seqs, &line).is_err() {
                self.lines.truncate(mark);
                self.seqs.truncate(mark);
                return false;
            }
            self.seqs.push(line.sequent.clone());
            self.lines.push(line);
        }
        for line in &self.lines[mark..] {
            *self.used.entry(line.justification.rule).or_default() += 1;
        }
        true
    }

    /// A script of at most `max_lines` lines, from up to `attempts` tries.
    pub fn script(&mut self, max_lines: usize, attempts: usize) -> ProofScript {
        self.lines.clear();
        self.seqs.clear();
        let rules = rules_of(self.system);
        for _ in 0..attempts {
            if self.lines.len() >= max_lines {
                break;
            }
            let rule = *rules.choose(self.rng).unwrap();
            let cand = if self.rng.random_bool(0.5) {
                self.forced(rule).or_else(|| self.candidate(rule))
            } else {
                self.candidate(rule).or_else(|| self.forced(rule))
            };
            if let Some(cand) = cand {
                if self.lines.len() + cand.len() <= max_lines + 1 {
                    self.try_push(cand);
                }
            }
        }
        let mut script = ProofScript::new(self.system, Mode::Macro);
        script.lines = self.lines.clone();
        script
    }
}

// ---------------------------------------------------------------------------
// random derived-rule instances

/// Derived rules of `system`.
pub fn macros_of(system: SystemId) -> Vec<Rule> {
    Rule::ALL.iter().copied().filter(|r| r.is_macro_in(system)).collect()
}

/// A random instance of derived rule `rule`: arbitrary premises of the
/// rule's shape and the conclusion it licenses. Antecedents have at most
/// three members of depth at most `depth`.
pub fn macro_instance(rng: &mut ChaCha8Rng, system: SystemId, rule: Rule, vars: &[&str], depth: usize) -> MacroInstance {
    let f = |rng: &mut ChaCha8Rng| {
        let d = rng.random_range(0..=depth);
        random_formula(rng, system, vars, d)
    };
    let neg = |x: &Formula| system.neg(x.clone());
    let ctx = |rng: &mut ChaCha8Rng, max: usize| -> Vec<Formula> {
        let n = rng.random_range(0..=max);
        (0..n).map(|_| f(rng)).collect()
    };
    let with = |d: &[Formula], x: &[Formula]| -> Vec<Formula> { d.iter().chain(x).cloned().collect() };
    let seq = Sequent::new;
    let (premises, conclusion) = match rule {
        Rule::Thin => {
            let d = ctx(rng, 2);
            let q = f(rng);
            let (front, back) = match rng.random_range(0..3) {
                0 => (vec![f(rng)], vec![]),
                1 => (vec![], vec![f(rng)]),
                _ if d.len() < 2 => (vec![f(rng)], vec![f(rng)]),
                _ => (vec![], vec![f(rng)]),
            };
            let wide: Vec<Formula> = front.iter().chain(&d).chain(&back).cloned().collect();
            (vec![seq(d, q.clone())], seq(wide, q))
        }
        Rule::Proj => {
            let mut d = ctx(rng, 2);
            let p = f(rng);
            let at = rng.random_range(0..=d.len());
            d.insert(at, p.clone());
            (vec![], seq(d, p))
        }
        Rule::Perm => {
            let (p, mut q) = (f(rng), f(rng));
            while q == p {
                q = f(rng);
            }
            let d = ctx(rng, 1);
            let g = if d.is_empty() { ctx(rng, 1) } else { vec![] };
            let r = f(rng);
            let from: Vec<Formula> = d.iter().cloned().chain([p.clone(), q.clone()]).chain(g.iter().cloned()).collect();
            let to: Vec<Formula> = d.iter().cloned().chain([q, p]).chain(g).collect();
            (vec![seq(from, r.clone())], seq(to, r))
        }
        Rule::Contr => {
            let d = ctx(rng, 1);
            let (p, q) = (f(rng), f(rng));
            (vec![seq(with(&d, &[p.clone(), p.clone()]), q.clone())], seq(with(&d, &[p]), q))
        }
        Rule::CutStar => {
            let g = ctx(rng, 1);
            let d = ctx(rng, 1);
            let (p, q) = (f(rng), f(rng));
            (vec![seq(g.clone(), p.clone()), seq(with(&d, &[p]), q.clone())], seq(with(&d, &g), q))
        }
        Rule::ExContra => {
            let d = ctx(rng, 3);
            let (p, q) = (f(rng), f(rng));
            (vec![seq(d.clone(), q.clone()), seq(d.clone(), neg(&q))], seq(d, p))
        }
        Rule::Dne => {
            let p = f(rng);
            (vec![], seq(vec![neg(&neg(&p))], p))
        }
        Rule::WeakRaa => {
            let d = ctx(rng, 2);
            let (p, q) = (f(rng), f(rng));
            let dp = with(&d, std::slice::from_ref(&p));
            (vec![seq(dp.clone(), q.clone()), seq(dp, neg(&q))], seq(d, neg(&p)))
        }
        Rule::DnIntro => {
            let d = ctx(rng, 3);
            let p = f(rng);
            (vec![seq(d.clone(), p.clone())], seq(d, neg(&neg(&p))))
        }
        Rule::Case => {
            let d = ctx(rng, 2);
            let (p, q) = (f(rng), f(rng));
            (vec![seq(with(&d, std::slice::from_ref(&q)), p.clone()), seq(with(&d, &[neg(&q)]), p.clone())], seq(d, p))
        }
        Rule::CImpIntro => {
            let d = ctx(rng, 2);
            let (p, q) = (f(rng), f(rng));
            let imp = Formula::neg(Formula::conj(p.clone(), Formula::neg(q.clone())));
            (vec![seq(with(&d, &[p]), q)], seq(d, imp))
        }
        Rule::CImpElim => {
            let d = ctx(rng, 3);
            let (p, q) = (f(rng), f(rng));
            let imp = Formula::neg(Formula::conj(p.clone(), Formula::neg(q.clone())));
            (vec![seq(d.clone(), p), seq(d.clone(), imp)], seq(d, q))
        }
        Rule::RaaViaShort => {
            let d = ctx(rng, 2);
            let (p, q) = (f(rng), f(rng));
            let dn = with(&d, &[neg(&p)]);
            (vec![seq(dn.clone(), q.clone()), seq(dn, neg(&q))], seq(d, p))
        }
        Rule::RaaShortViaRaa => {
            let d = ctx(rng, 2);
            let (p, q) = (f(rng), f(rng));
            let both = Formula::conj(q.clone(), neg(&q));
            (vec![seq(with(&d, &[neg(&p)]), both)], seq(d, p))
        }
        other => panic!("`{other}` is not a derived rule"),
    };
    MacroInstance { rule, premises, conclusion }
}

/// A macro-mode script: the premises as `premise` lines, then the rule.
pub fn instance_script(system: SystemId, m: &MacroInstance) -> ProofScript {
    let mut script = ProofScript::new(system, Mode::Macro);
    for p in &m.premises {
        script.lines.push(Line { sequent: p.clone(), justification: Justification::new(Rule::Premise, vec![]) });
    }
    let refs = (1..=m.premises.len()).collect();
    script.lines.push(Line { sequent: m.conclusion.clone(), justification: Justification::new(m.rule, refs) });
    script.goal = Some(m.conclusion.clone());
    script
}
