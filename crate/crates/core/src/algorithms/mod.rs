//! Partial complementation algorithms for partition blocks.
//!
//! A partial algorithm complements the language a Büchi automaton accepts
//! through one block, given the globally reached set `H` at every step. The
//! top levels in [`crate::framework`] combine one instance per block.

pub mod dac;
pub mod idac;
pub mod iwc;
pub mod rank;
pub mod shared;

use std::fmt::Debug;
use std::hash::Hash;

use crate::automaton::{Acceptance, ColourSet, StateSet, Symbol};
use crate::error::Result;

/// One step of the top level: the reached set `H`, the symbol read and the
/// (possibly pruned) successor set `H'`. Algorithms only keep states of `next`.
#[derive(Clone, Copy, Debug)]
pub struct Step<'s> {
    pub reached: &'s StateSet,
    pub symbol: Symbol,
    pub next: &'s StateSet,
}

/// Successors paired with the colours emitted on the way.
pub type Successors<M> = Vec<(M, ColourSet)>;

pub trait PartialComplement {
    type State: Clone + Eq + Hash + Debug;

    fn name(&self) -> &'static str;

    /// Number of colours `0..k` used by this instance.
    fn colour_count(&self) -> u32;

    fn acceptance(&self) -> Acceptance;

    /// Initial partial macrostates for the (pruned) initial set.
    fn initial(&self, init: &StateSet) -> Result<Vec<Self::State>>;

    fn successors(&self, step: &Step, m: &Self::State) -> Result<Successors<Self::State>>;

    fn render(&self, m: &Self::State) -> String;
}

/// A partial macrostate of a round-robin algorithm.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Phase<P, A> {
    Passive(P),
    Active(A),
}

impl<P, A> Phase<P, A> {
    pub fn is_active(&self) -> bool {
        matches!(self, Phase::Active(_))
    }
}

pub trait RoundRobinComplement {
    type Passive: Clone + Eq + Hash + Debug;
    type Active: Clone + Eq + Hash + Debug;

    fn name(&self) -> &'static str;

    fn colour_count(&self) -> u32;

    fn acceptance(&self) -> Acceptance;

    fn initial(&self, init: &StateSet) -> Result<Vec<Self::Passive>>;

    fn passive_successors(&self, step: &Step, m: &Self::Passive) -> Result<Successors<Self::Passive>>;

    fn lift(&self, m: &Self::Passive) -> Result<Vec<Self::Active>>;

    fn active_successors(
        &self,
        step: &Step,
        m: &Self::Active,
    ) -> Result<Successors<Phase<Self::Passive, Self::Active>>>;

    fn render_passive(&self, m: &Self::Passive) -> String;

    fn render_active(&self, m: &Self::Active) -> String;

    fn render(&self, m: &Phase<Self::Passive, Self::Active>) -> String {
        match m {
            Phase::Passive(p) => self.render_passive(p),
            Phase::Active(a) => self.render_active(a),
        }
    }
}

/// Turns a round-robin algorithm into an ordinary one: passive successors may
/// additionally be lifted to the active phase right away.
#[derive(Clone, Debug)]
pub struct Union<R>(pub R);

impl<R: RoundRobinComplement> PartialComplement for Union<R> {
    type State = Phase<R::Passive, R::Active>;

    fn name(&self) -> &'static str {
        self.0.name()
    }

    fn colour_count(&self) -> u32 {
        self.0.colour_count()
    }

    fn acceptance(&self) -> Acceptance {
        self.0.acceptance()
    }

    fn initial(&self, init: &StateSet) -> Result<Vec<Self::State>> {
        Ok(self.0.initial(init)?.into_iter().map(Phase::Passive).collect())
    }

    fn successors(&self, step: &Step, m: &Self::State) -> Result<Successors<Self::State>> {
        match m {
            Phase::Active(a) => self.0.active_successors(step, a),
            Phase::Passive(p) => {
                let passive = self.0.passive_successors(step, p)?;
                let mut out = Vec::with_capacity(passive.len() * 2);
                for (s, c) in passive {
                    for lifted in self.0.lift(&s)? {
                        out.push((Phase::Active(lifted), c));
                    }
                    out.push((Phase::Passive(s), c));
                }
                Ok(out)
            }
        }
    }

    fn render(&self, m: &Self::State) -> String {
        self.0.render(m)
    }
}

/// Runs an ordinary algorithm under the round-robin top level. The macrostate
/// is the same in both phases and an active step always hands over, so the
/// block never holds up the rotation.
#[derive(Clone, Debug)]
pub struct Phaseless<A>(pub A);

impl<A: PartialComplement> RoundRobinComplement for Phaseless<A> {
    type Passive = A::State;
    type Active = A::State;

    fn name(&self) -> &'static str {
        self.0.name()
    }

    fn colour_count(&self) -> u32 {
        self.0.colour_count()
    }

    fn acceptance(&self) -> Acceptance {
        self.0.acceptance()
    }

    fn initial(&self, init: &StateSet) -> Result<Vec<Self::Passive>> {
        self.0.initial(init)
    }

    fn passive_successors(&self, step: &Step, m: &Self::Passive) -> Result<Successors<Self::Passive>> {
        self.0.successors(step, m)
    }

    fn lift(&self, m: &Self::Passive) -> Result<Vec<Self::Active>> {
        Ok(vec![m.clone()])
    }

    fn active_successors(
        &self,
        step: &Step,
        m: &Self::Active,
    ) -> Result<Successors<Phase<Self::Passive, Self::Active>>> {
        Ok(self
            .0
            .successors(step, m)?
            .into_iter()
            .map(|(s, c)| (Phase::Passive(s), c))
            .collect())
    }

    fn render_passive(&self, m: &Self::Passive) -> String {
        self.0.render(m)
    }

    fn render_active(&self, m: &Self::Active) -> String {
        self.0.render(m)
    }
}

pub(crate) fn acc_colour(emit: bool) -> ColourSet {
    if emit {
        ColourSet::singleton(0)
    } else {
        ColourSet::EMPTY
    }
}
