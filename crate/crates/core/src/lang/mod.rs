//! Language operations: product, trimming, emptiness, lasso membership and
//! the postponed construction.

mod emptiness;

pub use emptiness::{find_accepting_lasso, is_empty, member_lasso};

use indexmap::IndexSet;

use crate::automaton::{restrict_accepting, StateId, StateSet, Tela, MAX_COLOURS};
use crate::error::{Error, Result};
use crate::framework::{build_sync, Options, Unit};
use crate::index::BuchiIndex;
use crate::scc::tarjan;

/// Synchronous product; colours of `t2` come after those of `t1`. Only the
/// reachable part is built.
pub fn intersect(t1: &Tela, t2: &Tela) -> Result<Tela> {
    if t1.alphabet() != t2.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let k1 = t1.colour_count();
    let k = k1 + t2.colour_count();
    if k > MAX_COLOURS {
        return Err(Error::TooManyColours(k));
    }
    let acceptance = t1.acceptance().clone().and(t2.acceptance().shifted(k1));
    let mut pairs: IndexSet<(StateId, StateId)> = IndexSet::new();
    for &p in t1.initial() {
        for &q in t2.initial() {
            pairs.insert((p, q));
        }
    }
    let initial = pairs.len();
    let mut edges = Vec::new();
    let mut next = 0;
    while next < pairs.len() {
        let (p, q) = pairs[next];
        for a in t1.alphabet().symbols() {
            for &(p2, c1) in t1.successors(p, a) {
                for &(q2, c2) in t2.successors(q, a) {
                    let (t, _) = pairs.insert_full((p2, q2));
                    edges.push((next, a, t, c1.union(c2.shifted(k1)?)));
                }
            }
        }
        next += 1;
    }
    let mut out = Tela::new(t1.alphabet().clone(), pairs.len(), k, acceptance);
    for s in 0..initial {
        out.add_initial(s);
    }
    for (s, a, t, c) in edges {
        out.add_transition(s, a, t, c);
    }
    for (s, &(p, q)) in pairs.iter().enumerate() {
        if let (Some(n1), Some(n2)) = (t1.name(p), t2.name(q)) {
            out.set_name(s, format!("{n1}&{n2}"));
        }
    }
    Ok(out)
}

/// Drops states that are unreachable or from which no cycle is reachable.
pub fn reduce(t: &Tela) -> Tela {
    let n = t.num_states();
    let reachable = t.reachable();
    let succ = |q: StateId| t.transitions_from(q).map(|tr| tr.target).collect::<Vec<_>>();
    // components come sources first, so walking them backwards sees every
    // successor component before its predecessors
    let comps = tarjan(n, succ);
    let mut live = StateSet::new();
    for comp in comps.iter().rev() {
        let members: StateSet = comp.iter().copied().collect();
        let alive = comp.iter().any(|&q| {
            t.transitions_from(q)
                .any(|tr| members.contains(tr.target) || live.contains(tr.target))
        });
        if alive {
            live.union_with(&members);
        }
    }
    live.intersect_with(&reachable);
    t.induced(&live).0
}

/// Complements every unit on its own, with accepting marks outside the unit
/// removed, and intersects the trimmed results.
pub fn postp_compl(input: &Tela, units: &[Unit], opts: &Options) -> Result<Tela> {
    let mut acc: Option<Tela> = None;
    for unit in units {
        let restricted = restrict_accepting(input, &unit.states());
        let idx = BuchiIndex::new(&restricted)?;
        let part = reduce(&build_sync(&restricted, &idx, std::slice::from_ref(unit), opts)?);
        acc = Some(match acc {
            None => part,
            Some(prev) => intersect(&prev, &part)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Tela::universal(input.alphabet().clone())))
}
