//! Direct simulation and simulation-based pruning of reached state sets.

use crate::automaton::{ensure_buchi, StateId, StateSet, Tela};
use crate::error::Result;
use crate::scc::SccDecomposition;

/// The direct simulation preorder of a Büchi automaton together with the SCC
/// numbering `#`.
///
/// `p ≼ q` holds when every transition of `p` can be matched by a transition
/// of `q` over the same symbol into a simulating state, accepting whenever the
/// matched transition is.
#[derive(Clone, Debug)]
pub struct Simulation {
    simulated_by: Vec<StateSet>,
    number: Vec<usize>,
}

impl Simulation {
    pub fn new(a: &Tela) -> Result<Self> {
        ensure_buchi(a)?;
        let sccs = SccDecomposition::new(a);
        Ok(Self::with_sccs(a, &sccs))
    }

    pub fn with_sccs(a: &Tela, sccs: &SccDecomposition) -> Self {
        let n = a.num_states();
        let mut rel: Vec<StateSet> = vec![StateSet::full(n); n];
        loop {
            let mut changed = false;
            for p in 0..n {
                let candidates: Vec<StateId> = rel[p].iter().collect();
                for q in candidates {
                    if !matches(a, &rel, p, q) {
                        rel[p].remove(q);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        Simulation {
            simulated_by: rel,
            number: (0..n).map(|q| sccs.scc_of(q)).collect(),
        }
    }

    /// `p ≼ q`.
    pub fn simulates(&self, q: StateId, p: StateId) -> bool {
        self.simulated_by[p].contains(q)
    }

    /// The SCC number `#q`.
    pub fn number(&self, q: StateId) -> usize {
        self.number[q]
    }

    /// `p ⊑ q`: `p ≼ q` and `#p < #q`.
    pub fn dominated(&self, p: StateId, q: StateId) -> bool {
        self.number[p] < self.number[q] && self.simulates(q, p)
    }

    /// `pr(S)`: drops every state dominated by another member of `S`.
    pub fn prune(&self, s: &StateSet) -> StateSet {
        s.iter()
            .filter(|&p| !s.iter().any(|q| self.dominated(p, q)))
            .collect()
    }
}

fn matches(a: &Tela, rel: &[StateSet], p: StateId, q: StateId) -> bool {
    a.alphabet().symbols().all(|s| {
        a.successors(p, s).iter().all(|&(p2, cp)| {
            let need_acc = cp.contains(0);
            a.successors(q, s)
                .iter()
                .any(|&(q2, cq)| rel[p2].contains(q2) && (!need_acc || cq.contains(0)))
        })
    })
}

/// Optional pruning: the identity when absent.
pub fn prune_with(sim: Option<&Simulation>, s: StateSet) -> StateSet {
    match sim {
        Some(sim) => sim.prune(&s),
        None => s,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::automaton::{Alphabet, ColourSet};

    #[test]
    fn b1_simulation() {
        let sim = Simulation::new(&b1()).unwrap();
        assert!(sim.simulates(0, 0) && sim.simulates(1, 1));
        // 1 matches 0-a->0 by 1-a->1 and 0-b->1 by 1-b->1
        assert!(sim.simulates(1, 0));
        // 0 cannot match the accepting loops of 1
        assert!(!sim.simulates(0, 1));
        assert_eq!((sim.number(0), sim.number(1)), (0, 1));
        assert_eq!(sim.prune(&StateSet::full(2)), StateSet::singleton(1));
    }

    #[test]
    fn chains_collapse_to_the_top() {
        // 0 -> 1 -> 2, all with identical universal behaviour on `a`
        let mut t = Tela::new_buchi(Alphabet::new(vec![]), 3);
        t.add_initial(0);
        t.add_transition(0, 0, 1, ColourSet::EMPTY);
        t.add_transition(1, 0, 2, ColourSet::EMPTY);
        t.add_transition(2, 0, 2, ColourSet::EMPTY);
        let sim = Simulation::new(&t).unwrap();
        assert_eq!(sim.prune(&StateSet::full(3)), StateSet::singleton(2));
        assert_eq!(sim.prune(&StateSet::singleton(0)), StateSet::singleton(0));
    }

    #[test]
    fn empty_language_state_is_simulated_by_everything() {
        let mut t = Tela::new_buchi(Alphabet::binary(), 3);
        t.add_initial(0);
        for s in 0..2 {
            t.add_transition(0, s, 0, ColourSet::singleton(0));
            t.add_transition(1, s, 1, ColourSet::EMPTY);
        }
        t.add_transition(2, 0, 2, ColourSet::EMPTY);
        let sim = Simulation::new(&t).unwrap();
        assert!(sim.simulates(0, 1) && sim.simulates(1, 2) && sim.simulates(0, 2));
        assert!(!sim.simulates(2, 1));
    }
}
