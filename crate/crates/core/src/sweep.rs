//! Exhaustive formula enumeration and data-parallel batch execution.
//!
//! Batch work (proof synthesis per valuation, corpus sweeps) goes through
//! [`Strategy`]. With the `parallel` feature the parallel strategy runs on
//! rayon's pool; without it, both strategies run sequentially. Results are
//! returned in input order either way.

use crate::formula::{Connective, Formula};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    Parallel,
}

impl Default for Strategy {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Strategy::Parallel
        } else {
            Strategy::Sequential
        }
    }
}

impl Strategy {
    /// Maps `f` over `items`, preserving order.
    pub fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }

    /// Number of items satisfying `pred`.
    pub fn count<T, F>(self, items: &[T], pred: F) -> usize
    where
        T: Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => {
                use rayon::prelude::*;
                items.par_iter().filter(|x| pred(x)).count()
            }
            _ => items.iter().filter(|x| pred(x)).count(),
        }
    }
}

/// Every formula over `vars` built from `connectives` with at most
/// `max_nodes` constructor nodes, ordered by size and then by a fixed
/// construction order.
pub fn enumerate_formulas(vars: &[&str], connectives: &[Connective], max_nodes: usize) -> Vec<Formula> {
    let by_size = formulas_by_size(vars, connectives, max_nodes);
    by_size.into_iter().flatten().collect()
}

/// `result[n]` holds the formulas with exactly `n` nodes.
pub fn formulas_by_size(vars: &[&str], connectives: &[Connective], max_nodes: usize) -> Vec<Vec<Formula>> {
    let mut by_size: Vec<Vec<Formula>> = vec![Vec::new(); max_nodes + 1];
    if max_nodes == 0 {
        return by_size;
    }
    if connectives.contains(&Connective::Var) {
        by_size[1].extend(vars.iter().map(|v| Formula::var(v)));
    }
    if connectives.contains(&Connective::Falsum) {
        by_size[1].push(Formula::Falsum);
    }
    for n in 2..=max_nodes {
        let mut here = Vec::new();
        if connectives.contains(&Connective::Neg) {
            here.extend(by_size[n - 1].iter().map(|a| Formula::neg(a.clone())));
        }
        for (conn, make) in [
            (Connective::Imp, Formula::imp as fn(Formula, Formula) -> Formula),
            (Connective::Conj, Formula::conj),
        ] {
            if !connectives.contains(&conn) {
                continue;
            }
            for left in 1..n - 1 {
                let right = n - 1 - left;
                for a in &by_size[left] {
                    for b in &by_size[right] {
                        here.push(make(a.clone(), b.clone()));
                    }
                }
            }
        }
        by_size[n] = here;
    }
    by_size
}

/// Formulas of depth at most `max_depth`.
pub fn enumerate_by_depth(vars: &[&str], connectives: &[Connective], max_depth: usize) -> Vec<Formula> {
    let mut all: Vec<Formula> = Vec::new();
    if connectives.contains(&Connective::Var) {
        all.extend(vars.iter().map(|v| Formula::var(v)));
    }
    if connectives.contains(&Connective::Falsum) {
        all.push(Formula::Falsum);
    }
    for _ in 0..max_depth {
        let prev = all.clone();
        let mut next = prev.clone();
        let fresh = |f: &Formula| !prev.contains(f);
        if connectives.contains(&Connective::Neg) {
            next.extend(prev.iter().map(|a| Formula::neg(a.clone())).filter(fresh));
        }
        for a in &prev {
            for b in &prev {
                if connectives.contains(&Connective::Imp) {
                    let f = Formula::imp(a.clone(), b.clone());
                    if fresh(&f) {
                        next.push(f);
                    }
                }
                if connectives.contains(&Connective::Conj) {
                    let f = Formula::conj(a.clone(), b.clone());
                    if fresh(&f) {
                        next.push(f);
                    }
                }
            }
        }
        all = next;
    }
    all
}
