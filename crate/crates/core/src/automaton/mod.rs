//! Transition-based Emerson-Lei automata (TELAs) and Büchi automata.
//!
//! States are dense ids `0..n`. The alphabet is explicit: an automaton over
//! atomic propositions `p_0 .. p_{m-1}` reads the `2^m` valuations, and symbol
//! `a` is the valuation whose bit `j` is set iff `p_j` holds.

mod acceptance;
mod colour;
mod ops;
mod stateset;

use std::fmt;

pub use acceptance::{Acceptance, Clause, DNF_LIMIT};
pub use colour::{ColourSet, MAX_COLOURS};
pub(crate) use ops::ensure_buchi;
pub use ops::{complete, restrict_accepting, strip_extra_scc_accepting};
pub use stateset::StateSet;

use crate::error::{Error, Result};

pub type StateId = usize;
pub type Symbol = usize;

/// The explicit alphabet `2^AP` over a list of atomic propositions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Alphabet {
    aps: Vec<String>,
}

impl Alphabet {
    pub fn new(aps: Vec<String>) -> Self {
        Alphabet { aps }
    }

    /// An alphabet over `n` propositions named `p0 .. p{n-1}`.
    pub fn with_propositions(n: usize) -> Self {
        Alphabet::new((0..n).map(|i| format!("p{i}")).collect())
    }

    /// The two-letter alphabet over a single proposition; symbol 0 is
    /// `!p0` and symbol 1 is `p0`.
    pub fn binary() -> Self {
        Alphabet::with_propositions(1)
    }

    pub fn propositions(&self) -> &[String] {
        &self.aps
    }

    pub fn len(&self) -> usize {
        1 << self.aps.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbols(&self) -> std::ops::Range<Symbol> {
        0..self.len()
    }

    /// Human-readable rendering of a symbol as a conjunction of literals.
    pub fn symbol_name(&self, a: Symbol) -> String {
        if self.aps.is_empty() {
            return "t".to_string();
        }
        self.aps
            .iter()
            .enumerate()
            .map(|(j, ap)| {
                if a & (1 << j) != 0 {
                    ap.clone()
                } else {
                    format!("!{ap}")
                }
            })
            .collect::<Vec<_>>()
            .join("&")
    }
}

/// One coloured transition `source -symbol-> target`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Transition {
    pub source: StateId,
    pub symbol: Symbol,
    pub target: StateId,
    pub colours: ColourSet,
}

/// A transition-based Emerson-Lei automaton.
///
/// Parallel transitions with the same source, symbol and target but different
/// colour sets are kept apart; identical ones are merged.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tela {
    alphabet: Alphabet,
    succ: Vec<Vec<Vec<(StateId, ColourSet)>>>,
    initial: Vec<StateId>,
    colour_count: u32,
    acceptance: Acceptance,
    names: Vec<Option<String>>,
}

impl Tela {
    /// An automaton with `states` states and no transitions.
    pub fn new(alphabet: Alphabet, states: usize, colour_count: u32, acceptance: Acceptance) -> Self {
        let symbols = alphabet.len();
        Tela {
            alphabet,
            succ: vec![vec![Vec::new(); symbols]; states],
            initial: Vec::new(),
            colour_count,
            acceptance,
            names: vec![None; states],
        }
    }

    /// A Büchi automaton shell: one colour, acceptance `Inf(0)`.
    pub fn new_buchi(alphabet: Alphabet, states: usize) -> Self {
        Tela::new(alphabet, states, 1, Acceptance::Inf(0))
    }

    /// The single-state automaton accepting every word.
    pub fn universal(alphabet: Alphabet) -> Self {
        let mut t = Tela::new_buchi(alphabet, 1);
        t.add_initial(0);
        for a in t.alphabet.symbols() {
            t.add_transition(0, a, 0, ColourSet::singleton(0));
        }
        t
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.succ.len()
    }

    pub fn num_symbols(&self) -> usize {
        self.alphabet.len()
    }

    pub fn num_transitions(&self) -> usize {
        self.succ.iter().flatten().map(Vec::len).sum()
    }

    pub fn colour_count(&self) -> u32 {
        self.colour_count
    }

    pub fn acceptance(&self) -> &Acceptance {
        &self.acceptance
    }

    pub fn initial(&self) -> &[StateId] {
        &self.initial
    }

    pub fn initial_set(&self) -> StateSet {
        self.initial.iter().copied().collect()
    }

    pub fn add_state(&mut self) -> StateId {
        self.succ.push(vec![Vec::new(); self.alphabet.len()]);
        self.names.push(None);
        self.succ.len() - 1
    }

    pub fn add_initial(&mut self, q: StateId) {
        assert!(q < self.num_states(), "initial state {q} out of range");
        if let Err(pos) = self.initial.binary_search(&q) {
            self.initial.insert(pos, q);
        }
    }

    pub fn add_transition(&mut self, source: StateId, symbol: Symbol, target: StateId, colours: ColourSet) {
        assert!(source < self.num_states() && target < self.num_states());
        assert!(symbol < self.alphabet.len());
        let out = &mut self.succ[source][symbol];
        if !out.contains(&(target, colours)) {
            out.push((target, colours));
        }
    }

    pub fn set_acceptance(&mut self, colour_count: u32, acceptance: Acceptance) {
        self.colour_count = colour_count;
        self.acceptance = acceptance;
    }

    pub fn set_name(&mut self, q: StateId, name: impl Into<String>) {
        self.names[q] = Some(name.into());
    }

    pub fn name(&self, q: StateId) -> Option<&str> {
        self.names[q].as_deref()
    }

    /// Outgoing transitions of `q` over `a`, as `(target, colours)` pairs.
    pub fn successors(&self, q: StateId, a: Symbol) -> &[(StateId, ColourSet)] {
        &self.succ[q][a]
    }

    pub fn transitions_from(&self, q: StateId) -> impl Iterator<Item = Transition> + '_ {
        self.succ[q].iter().enumerate().flat_map(move |(a, out)| {
            out.iter().map(move |&(target, colours)| Transition {
                source: q,
                symbol: a,
                target,
                colours,
            })
        })
    }

    pub fn transitions(&self) -> impl Iterator<Item = Transition> + '_ {
        (0..self.num_states()).flat_map(move |q| self.transitions_from(q))
    }

    /// Checks the structural invariants: colours and acceptance atoms below
    /// the colour count.
    pub fn validate(&self) -> Result<()> {
        if self.colour_count > MAX_COLOURS {
            return Err(Error::TooManyColours(self.colour_count));
        }
        if self.acceptance.max_colour() >= self.colour_count {
            return Err(Error::InvalidAutomaton(format!(
                "acceptance mentions colour {} but only {} colours are declared",
                self.acceptance.max_colour(),
                self.colour_count
            )));
        }
        if let Some(t) = self.transitions().find(|t| t.colours.bound() > self.colour_count) {
            return Err(Error::InvalidAutomaton(format!(
                "transition {} -> {} carries colours {} beyond the declared {}",
                t.source, t.target, t.colours, self.colour_count
            )));
        }
        Ok(())
    }

    /// Whether this is a Büchi automaton: one colour and acceptance `Inf(0)`.
    pub fn is_buchi(&self) -> bool {
        self.colour_count == 1 && self.acceptance == Acceptance::Inf(0)
    }

    /// Whether every state has a successor over every symbol and some state is initial.
    pub fn is_complete(&self) -> bool {
        !self.initial.is_empty() && self.succ.iter().all(|row| row.iter().all(|out| !out.is_empty()))
    }

    /// Whether `q -a-> q'` exists with colour 0 (an accepting Büchi transition).
    pub fn is_accepting_transition(&self, q: StateId, a: Symbol, target: StateId) -> bool {
        self.succ[q][a]
            .iter()
            .any(|&(t, c)| t == target && c.contains(0))
    }

    /// Keeps only the given states, renumbering them in increasing order.
    /// Returns the new automaton and the old-to-new id map.
    pub fn induced(&self, keep: &StateSet) -> (Tela, Vec<Option<StateId>>) {
        let mut map = vec![None; self.num_states()];
        for (new, old) in keep.iter().enumerate() {
            map[old] = Some(new);
        }
        let mut t = Tela::new(self.alphabet.clone(), keep.len(), self.colour_count, self.acceptance.clone());
        for old in keep.iter() {
            let new = map[old].unwrap();
            t.names[new] = self.names[old].clone();
            for tr in self.transitions_from(old) {
                if let Some(target) = map[tr.target] {
                    t.add_transition(new, tr.symbol, target, tr.colours);
                }
            }
        }
        for &q in &self.initial {
            if let Some(new) = map[q] {
                t.add_initial(new);
            }
        }
        (t, map)
    }

    /// States reachable from the initial states.
    pub fn reachable(&self) -> StateSet {
        let mut seen: StateSet = self.initial.iter().copied().collect();
        let mut stack = self.initial.clone();
        while let Some(q) = stack.pop() {
            for out in &self.succ[q] {
                for &(t, _) in out {
                    if seen.insert(t) {
                        stack.push(t);
                    }
                }
            }
        }
        seen
    }
}

impl fmt::Display for Tela {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::hoa::to_hoa(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_symbol_names() {
        let al = Alphabet::new(vec!["a".into(), "b".into()]);
        assert_eq!(al.len(), 4);
        assert_eq!(al.symbol_name(0), "!a&!b");
        assert_eq!(al.symbol_name(3), "a&b");
        assert_eq!(Alphabet::new(vec![]).symbol_name(0), "t");
    }

    #[test]
    fn universal_is_complete_buchi() {
        let u = Tela::universal(Alphabet::binary());
        assert!(u.is_buchi());
        assert!(u.is_complete());
        assert_eq!(u.num_transitions(), 2);
        u.validate().unwrap();
    }

    #[test]
    fn duplicate_transitions_are_merged_but_colour_variants_kept() {
        let mut t = Tela::new_buchi(Alphabet::binary(), 2);
        t.add_transition(0, 0, 1, ColourSet::EMPTY);
        t.add_transition(0, 0, 1, ColourSet::EMPTY);
        t.add_transition(0, 0, 1, ColourSet::singleton(0));
        assert_eq!(t.num_transitions(), 2);
    }
}
