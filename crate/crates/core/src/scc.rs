//! Strongly connected components and their classification.

use std::fmt;

use crate::automaton::{StateId, StateSet, Symbol, Tela};

/// Classification of an SCC of a Büchi automaton.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SccClass {
    /// Contains no accepting transition.
    NonAccepting,
    /// Accepting and inherently weak.
    Iwc,
    /// Accepting, deterministic, not inherently weak.
    Dac,
    /// Accepting, neither inherently weak nor deterministic.
    Nac,
}

impl fmt::Display for SccClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SccClass::NonAccepting => "non-accepting",
            SccClass::Iwc => "IWC",
            SccClass::Dac => "DAC",
            SccClass::Nac => "NAC",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SccInfo {
    pub id: usize,
    pub states: StateSet,
    pub is_trivial: bool,
    pub is_accepting: bool,
    pub is_inherently_weak: bool,
    pub is_deterministic: bool,
}

impl SccInfo {
    pub fn class(&self) -> SccClass {
        if !self.is_accepting {
            SccClass::NonAccepting
        } else if self.is_inherently_weak {
            SccClass::Iwc
        } else if self.is_deterministic {
            SccClass::Dac
        } else {
            SccClass::Nac
        }
    }
}

/// The SCCs of an automaton in topological order: every transition goes from
/// an SCC to itself or to one with a larger id. The id doubles as the
/// numbering `#` used for simulation pruning.
#[derive(Clone, Debug)]
pub struct SccDecomposition {
    scc_of: Vec<usize>,
    sccs: Vec<SccInfo>,
}

impl SccDecomposition {
    /// Decomposes `a` and classifies every SCC, reading colour 0 as the
    /// accepting mark.
    pub fn new(a: &Tela) -> Self {
        let n = a.num_states();
        let raw = tarjan(n, |q| {
            a.alphabet()
                .symbols()
                .flat_map(move |s| a.successors(q, s).iter().map(|&(t, _)| t))
        });
        let mut scc_of = vec![0; n];
        for (id, comp) in raw.iter().enumerate() {
            for &q in comp {
                scc_of[q] = id;
            }
        }
        let sccs = raw
            .into_iter()
            .enumerate()
            .map(|(id, comp)| classify(a, id, comp.into_iter().collect(), &scc_of))
            .collect();
        SccDecomposition { scc_of, sccs }
    }

    pub fn scc_of(&self, q: StateId) -> usize {
        self.scc_of[q]
    }

    pub fn sccs(&self) -> &[SccInfo] {
        &self.sccs
    }

    pub fn get(&self, id: usize) -> &SccInfo {
        &self.sccs[id]
    }

    pub fn accepting(&self) -> impl Iterator<Item = &SccInfo> {
        self.sccs.iter().filter(|c| c.is_accepting)
    }

    /// An elevator automaton has no NAC.
    pub fn is_elevator(&self) -> bool {
        self.sccs.iter().all(|c| c.class() != SccClass::Nac)
    }
}

fn classify(a: &Tela, id: usize, states: StateSet, scc_of: &[usize]) -> SccInfo {
    let inside = |t: StateId| scc_of[t] == id;
    let mut has_edge = false;
    let mut accepting = false;
    let mut deterministic = true;
    for q in states.iter() {
        for s in a.alphabet().symbols() {
            let mut targets = StateSet::new();
            for &(t, c) in a.successors(q, s) {
                if inside(t) {
                    has_edge = true;
                    accepting |= c.contains(0);
                    targets.insert(t);
                }
            }
            deterministic &= targets.len() <= 1;
        }
    }
    // not inherently weak iff some cycle avoids every accepting transition
    let inherently_weak = !accepting || {
        let members: Vec<StateId> = states.iter().collect();
        let local = |q: StateId| members.binary_search(&q).unwrap();
        let rejecting = tarjan(members.len(), |i| {
            let q = members[i];
            a.alphabet()
                .symbols()
                .flat_map(move |s| a.successors(q, s).iter())
                .filter(|&&(t, c)| inside(t) && !c.contains(0))
                .map(move |&(t, _)| local(t))
                .collect::<Vec<_>>()
        });
        !rejecting.iter().any(|comp| {
            comp.len() > 1 || {
                let q = members[comp[0]];
                a.alphabet()
                    .symbols()
                    .any(|s| a.successors(q, s).iter().any(|&(t, c)| t == q && !c.contains(0)))
            }
        })
    };
    SccInfo {
        id,
        is_trivial: !has_edge,
        states,
        is_accepting: accepting,
        is_inherently_weak: inherently_weak,
        is_deterministic: deterministic,
    }
}

/// Iterative Tarjan. Returns SCCs in topological order (sources first).
pub(crate) fn tarjan<I>(n: usize, succ: impl Fn(usize) -> I) -> Vec<Vec<usize>>
where
    I: IntoIterator<Item = usize>,
{
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut out = Vec::new();
    let mut next = 0;
    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        let mut call: Vec<(usize, std::vec::IntoIter<usize>)> = Vec::new();
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;
        call.push((root, succ(root).into_iter().collect::<Vec<_>>().into_iter()));
        while let Some((v, it)) = call.last_mut() {
            let v = *v;
            if let Some(w) = it.next() {
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, succ(w).into_iter().collect::<Vec<_>>().into_iter()));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some((u, _)) = call.last() {
                    low[*u] = low[*u].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    out.push(comp);
                }
            }
        }
    }
    out.reverse();
    out
}

/// Successors of `u` over `a` that stay inside the SCC of their source.
pub fn delta_scc(a: &Tela, sccs: &SccDecomposition, u: &StateSet, s: Symbol) -> StateSet {
    let mut out = StateSet::new();
    for q in u.iter() {
        for &(t, _) in a.successors(q, s) {
            if sccs.scc_of(t) == sccs.scc_of(q) {
                out.insert(t);
            }
        }
    }
    out
}

/// Bound on the number of subsets explored by the exact initial-determinism check.
pub const SUBSET_EXPLORATION_LIMIT: usize = 1 << 16;

/// Whether block `p` is deterministic and only ever reached deterministically:
/// every reachable subset-construction state meets `p` in at most one state.
///
/// A cheap structural check is tried first; otherwise the reachable subsets
/// are explored exactly. Exceeding [`SUBSET_EXPLORATION_LIMIT`] answers `false`.
pub fn is_initial_deterministic_block(a: &Tela, sccs: &SccDecomposition, p: &StateSet) -> bool {
    if p.iter().any(|q| !sccs.get(sccs.scc_of(q)).is_deterministic) {
        return false;
    }
    let init = a.initial_set();
    if init.intersection(p).len() > 1 {
        return false;
    }
    let structural = a.alphabet().symbols().all(|s| {
        let mut into = StateSet::new();
        for q in 0..a.num_states() {
            for &(t, _) in a.successors(q, s) {
                if p.contains(t) {
                    into.insert(t);
                }
            }
        }
        into.len() <= 1
    });
    if structural {
        return true;
    }
    let mut seen = std::collections::HashSet::new();
    seen.insert(init.clone());
    let mut work = vec![init];
    while let Some(h) = work.pop() {
        for s in a.alphabet().symbols() {
            let mut next = StateSet::new();
            for q in h.iter() {
                next.extend(a.successors(q, s).iter().map(|&(t, _)| t));
            }
            if next.intersection(p).len() > 1 {
                return false;
            }
            if seen.insert(next.clone()) {
                if seen.len() > SUBSET_EXPLORATION_LIMIT {
                    return false;
                }
                work.push(next);
            }
        }
    }
    true
}
