//! Precomputed successor tables for a Büchi automaton.

use crate::automaton::{ensure_buchi, StateId, StateSet, Symbol, Tela};
use crate::error::Result;
use crate::scc::SccDecomposition;

/// Successor sets, SCCs and reachability of a Büchi automaton, computed once
/// and shared by the partial algorithms.
#[derive(Clone, Debug)]
pub struct BuchiIndex {
    post: Vec<Vec<StateSet>>,
    post_acc: Vec<Vec<StateSet>>,
    post_scc: Vec<Vec<StateSet>>,
    reach: Vec<StateSet>,
    sccs: SccDecomposition,
    symbols: usize,
}

impl BuchiIndex {
    pub fn new(a: &Tela) -> Result<Self> {
        ensure_buchi(a)?;
        let sccs = SccDecomposition::new(a);
        let n = a.num_states();
        let symbols = a.num_symbols();
        let mut post = vec![vec![StateSet::new(); symbols]; n];
        let mut post_acc = post.clone();
        let mut post_scc = post.clone();
        for t in a.transitions() {
            post[t.source][t.symbol].insert(t.target);
            if t.colours.contains(0) {
                post_acc[t.source][t.symbol].insert(t.target);
            }
            if sccs.scc_of(t.source) == sccs.scc_of(t.target) {
                post_scc[t.source][t.symbol].insert(t.target);
            }
        }
        // SCCs are topologically sorted, so walking them backwards sees every
        // successor SCC before its predecessors
        let mut reach = vec![StateSet::new(); n];
        let mut scc_reach = vec![StateSet::new(); sccs.sccs().len()];
        for c in sccs.sccs().iter().rev() {
            let mut r = c.states.clone();
            for q in c.states.iter() {
                for succ in &post[q] {
                    for t in succ.iter() {
                        let d = sccs.scc_of(t);
                        if d != c.id {
                            r.union_with(&scc_reach[d]);
                        }
                    }
                }
            }
            scc_reach[c.id] = r;
        }
        for (q, r) in reach.iter_mut().enumerate() {
            *r = scc_reach[sccs.scc_of(q)].clone();
        }
        Ok(BuchiIndex {
            post,
            post_acc,
            post_scc,
            reach,
            sccs,
            symbols,
        })
    }

    pub fn num_states(&self) -> usize {
        self.post.len()
    }

    pub fn num_symbols(&self) -> usize {
        self.symbols
    }

    pub fn sccs(&self) -> &SccDecomposition {
        &self.sccs
    }

    pub fn succ(&self, q: StateId, a: Symbol) -> &StateSet {
        &self.post[q][a]
    }

    /// `δ(U, a)`.
    pub fn post(&self, u: &StateSet, a: Symbol) -> StateSet {
        let mut out = StateSet::new();
        for q in u.iter() {
            out.union_with(&self.post[q][a]);
        }
        out
    }

    /// Targets of accepting transitions from `U` over `a`.
    pub fn post_acc(&self, u: &StateSet, a: Symbol) -> StateSet {
        let mut out = StateSet::new();
        for q in u.iter() {
            out.union_with(&self.post_acc[q][a]);
        }
        out
    }

    /// `δ_SCC(U, a)`: successors staying in the SCC of their source.
    pub fn post_scc(&self, u: &StateSet, a: Symbol) -> StateSet {
        let mut out = StateSet::new();
        for q in u.iter() {
            out.union_with(&self.post_scc[q][a]);
        }
        out
    }

    pub fn is_accepting(&self, p: StateId, a: Symbol, q: StateId) -> bool {
        self.post_acc[p][a].contains(q)
    }

    /// States reachable from `q`, including `q`.
    pub fn reach(&self, q: StateId) -> &StateSet {
        &self.reach[q]
    }

    pub fn reach_set(&self, u: &StateSet) -> StateSet {
        let mut out = StateSet::new();
        for q in u.iter() {
            out.union_with(&self.reach[q]);
        }
        out
    }

    /// States from which some state of `target` is reachable.
    pub fn coreach_set(&self, target: &StateSet) -> StateSet {
        (0..self.num_states())
            .filter(|&q| self.reach[q].intersects(target))
            .collect()
    }
}
