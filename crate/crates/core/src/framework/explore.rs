//! Worklist exploration of the reachable macrostates.

use std::hash::Hash;

use indexmap::IndexSet;

use crate::automaton::{Acceptance, Alphabet, ColourSet, StateId, Symbol, Tela};
use crate::error::{Error, Result};

/// Where a macrostate moves on one symbol.
pub(crate) enum Moves<M> {
    /// The reached set became empty: go to the accepting sink.
    Sink,
    To(Vec<(M, ColourSet)>),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Node<M> {
    Sink,
    Macro(M),
}

/// The result of a top-level construction: the automaton and, for each of its
/// states, the macrostate it stands for (`None` for the accepting sink).
#[derive(Clone, Debug)]
pub struct Construction<M> {
    pub tela: Tela,
    pub macrostates: Vec<Option<M>>,
}

pub(crate) struct Explorer<'a> {
    pub alphabet: &'a Alphabet,
    pub colour_count: u32,
    pub acceptance: Acceptance,
}

impl Explorer<'_> {
    pub fn run<M: Clone + Eq + Hash>(
        self,
        initial: Moves<M>,
        mut moves: impl FnMut(&M, Symbol) -> Result<Moves<M>>,
        render: impl Fn(&M) -> String,
    ) -> Result<Construction<M>> {
        let mut nodes: IndexSet<Node<M>> = IndexSet::new();
        let mut init = Vec::new();
        match initial {
            Moves::Sink => init.push(nodes.insert_full(Node::Sink).0),
            Moves::To(ms) => {
                for (m, _) in ms {
                    init.push(nodes.insert_full(Node::Macro(m)).0);
                }
            }
        }
        let sink_colour = self.colour_count;
        let mut edges: Vec<(StateId, Symbol, StateId, ColourSet)> = Vec::new();
        let mut next = 0;
        while next < nodes.len() {
            let node = nodes.get_index(next).unwrap().clone();
            for a in self.alphabet.symbols() {
                let targets = match &node {
                    Node::Sink => Moves::Sink,
                    Node::Macro(m) => moves(m, a)?,
                };
                match targets {
                    Moves::Sink => {
                        let (t, _) = nodes.insert_full(Node::Sink);
                        let c = if matches!(node, Node::Sink) {
                            ColourSet::singleton(sink_colour)
                        } else {
                            ColourSet::EMPTY
                        };
                        edges.push((next, a, t, c));
                    }
                    Moves::To(ms) => {
                        for (m, c) in ms {
                            let (t, _) = nodes.insert_full(Node::Macro(m));
                            edges.push((next, a, t, c));
                        }
                    }
                }
            }
            next += 1;
        }
        let has_sink = nodes.contains(&Node::Sink);
        let (colour_count, acceptance) = if has_sink {
            if sink_colour >= crate::automaton::MAX_COLOURS {
                return Err(Error::TooManyColours(sink_colour + 1));
            }
            (
                sink_colour + 1,
                self.acceptance.or(Acceptance::Inf(sink_colour)),
            )
        } else {
            (self.colour_count, self.acceptance)
        };
        let mut tela = Tela::new(self.alphabet.clone(), nodes.len(), colour_count, acceptance);
        for q in init {
            tela.add_initial(q);
        }
        for (p, a, q, c) in edges {
            tela.add_transition(p, a, q, c);
        }
        let mut macrostates = Vec::with_capacity(nodes.len());
        for (q, node) in nodes.into_iter().enumerate() {
            match node {
                Node::Sink => {
                    tela.set_name(q, "sink");
                    macrostates.push(None);
                }
                Node::Macro(m) => {
                    tela.set_name(q, render(&m));
                    macrostates.push(Some(m));
                }
            }
        }
        Ok(Construction { tela, macrostates })
    }
}

/// Every combination picking one entry per list, with the colours united.
pub(crate) fn product<S: Clone>(lists: &[Vec<(S, ColourSet)>]) -> Vec<(Vec<S>, ColourSet)> {
    let mut out: Vec<(Vec<S>, ColourSet)> = vec![(Vec::with_capacity(lists.len()), ColourSet::EMPTY)];
    for list in lists {
        let mut grown = Vec::with_capacity(out.len() * list.len());
        for (prefix, c) in &out {
            for (s, d) in list {
                let mut p = prefix.clone();
                p.push(s.clone());
                grown.push((p, c.union(*d)));
            }
        }
        out = grown;
    }
    out
}
