//! Small reference automata for unit tests. Symbol 0 is `a`, symbol 1 is `b`.

use crate::automaton::{Alphabet, ColourSet, Symbol, Tela};

pub const A: Symbol = 0;
pub const B: Symbol = 1;

pub fn acc() -> ColourSet {
    ColourSet::singleton(0)
}

/// Words with at least one `b`.
pub fn b1() -> Tela {
    let mut t = Tela::new_buchi(Alphabet::binary(), 2);
    t.add_initial(0);
    t.add_transition(0, A, 0, ColourSet::EMPTY);
    t.add_transition(0, B, 1, ColourSet::EMPTY);
    t.add_transition(1, A, 1, acc());
    t.add_transition(1, B, 1, acc());
    t
}

/// A deterministic accepting SCC `{1,2}` that is not inherently weak.
pub fn b2() -> Tela {
    let mut t = Tela::new_buchi(Alphabet::binary(), 3);
    t.add_initial(0);
    t.add_transition(0, A, 0, ColourSet::EMPTY);
    t.add_transition(0, B, 1, ColourSet::EMPTY);
    t.add_transition(1, A, 2, acc());
    t.add_transition(1, B, 1, ColourSet::EMPTY);
    t.add_transition(2, A, 1, ColourSet::EMPTY);
    t.add_transition(2, B, 2, ColourSet::EMPTY);
    t
}

/// Disjoint union of `b1` (states 0,1) and `b2` (states 2,3,4), both initial.
pub fn b1_b2() -> Tela {
    let (x, y) = (b1(), b2());
    let mut t = Tela::new_buchi(Alphabet::binary(), 5);
    for tr in x.transitions() {
        t.add_transition(tr.source, tr.symbol, tr.target, tr.colours);
    }
    for tr in y.transitions() {
        t.add_transition(tr.source + 2, tr.symbol, tr.target + 2, tr.colours);
    }
    t.add_initial(0);
    t.add_initial(2);
    t
}

/// Infinitely many `b`, guessed nondeterministically: state 1 is a NAC.
pub fn nac() -> Tela {
    let mut t = Tela::new_buchi(Alphabet::binary(), 2);
    t.add_initial(0);
    t.add_transition(0, A, 0, ColourSet::EMPTY);
    t.add_transition(0, B, 0, ColourSet::EMPTY);
    t.add_transition(0, B, 1, ColourSet::EMPTY);
    t.add_transition(1, B, 1, acc());
    t.add_transition(1, A, 0, ColourSet::EMPTY);
    t.add_transition(0, A, 1, ColourSet::EMPTY);
    t
}

/// A set literal.
pub fn set(states: &[usize]) -> crate::automaton::StateSet {
    states.iter().copied().collect()
}
