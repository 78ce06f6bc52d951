//! Structural operations on Büchi automata.

use super::{ColourSet, StateSet, Tela};
use crate::error::{Error, Result};
use crate::scc::SccDecomposition;

pub(crate) fn ensure_buchi(a: &Tela) -> Result<()> {
    if a.is_buchi() {
        Ok(())
    } else {
        Err(Error::NotBuchi(format!(
            "expected one colour with acceptance Inf(0), found {} colours with {}",
            a.colour_count(),
            a.acceptance()
        )))
    }
}

fn map_colours(a: &Tela, mut f: impl FnMut(usize, usize, ColourSet) -> ColourSet) -> Tela {
    let mut out = Tela::new(a.alphabet().clone(), a.num_states(), a.colour_count(), a.acceptance().clone());
    for q in 0..a.num_states() {
        if let Some(name) = a.name(q) {
            out.set_name(q, name);
        }
    }
    for &q in a.initial() {
        out.add_initial(q);
    }
    for t in a.transitions() {
        out.add_transition(t.source, t.symbol, t.target, f(t.source, t.target, t.colours));
    }
    out
}

/// `A_S`: keeps the graph but only marks transitions with both endpoints in `s`
/// as accepting.
pub fn restrict_accepting(a: &Tela, s: &StateSet) -> Tela {
    map_colours(a, |p, q, c| {
        if s.contains(p) && s.contains(q) {
            c
        } else {
            ColourSet::EMPTY
        }
    })
}

/// Adds a rejecting sink for missing transitions (and makes it initial when
/// there is no initial state). Returns a clone when `a` is already complete.
pub fn complete(a: &Tela) -> Tela {
    if a.is_complete() {
        return a.clone();
    }
    let mut out = a.clone();
    let sink = out.add_state();
    for q in 0..out.num_states() {
        for s in out.alphabet().symbols() {
            if out.successors(q, s).is_empty() {
                out.add_transition(q, s, sink, ColourSet::EMPTY);
            }
        }
    }
    if out.initial().is_empty() {
        out.add_initial(sink);
    }
    out
}

/// Removes the accepting mark from transitions that connect different SCCs.
pub fn strip_extra_scc_accepting(a: &Tela) -> Tela {
    let sccs = SccDecomposition::new(a);
    map_colours(a, |p, q, c| {
        if sccs.scc_of(p) == sccs.scc_of(q) {
            c
        } else {
            ColourSet::EMPTY
        }
    })
}
