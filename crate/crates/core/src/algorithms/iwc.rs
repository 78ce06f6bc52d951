//! Breakpoint construction for blocks of inherently weak accepting components.

use super::{acc_colour, PartialComplement, Phase, RoundRobinComplement, Step, Successors};
use crate::automaton::{Acceptance, StateSet};
use crate::error::Result;
use crate::index::BuchiIndex;

/// `(C, B)`: the block states reached so far and the breakpoint.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IwcState {
    pub c: StateSet,
    pub b: StateSet,
}

#[derive(Clone, Debug)]
pub struct Iwc<'a> {
    idx: &'a BuchiIndex,
    block: StateSet,
}

impl<'a> Iwc<'a> {
    pub fn new(idx: &'a BuchiIndex, block: StateSet) -> Self {
        Iwc { idx, block }
    }

    pub fn block(&self) -> &StateSet {
        &self.block
    }

    /// Block states of `H'`.
    pub(crate) fn check_set(&self, step: &Step) -> StateSet {
        step.next.intersection(&self.block)
    }

    /// Runs from the breakpoint that stay in the block.
    pub(crate) fn breakpoint_image(&self, step: &Step, b: &StateSet, c_next: &StateSet) -> StateSet {
        self.idx.post(b, step.symbol).intersection(c_next)
    }
}

impl PartialComplement for Iwc<'_> {
    type State = IwcState;

    fn name(&self) -> &'static str {
        "iwc"
    }

    fn colour_count(&self) -> u32 {
        1
    }

    fn acceptance(&self) -> Acceptance {
        Acceptance::Inf(0)
    }

    fn initial(&self, init: &StateSet) -> Result<Vec<IwcState>> {
        let c = init.intersection(&self.block);
        Ok(vec![IwcState { b: c.clone(), c }])
    }

    fn successors(&self, step: &Step, m: &IwcState) -> Result<Successors<IwcState>> {
        let c = self.check_set(step);
        let b = self.breakpoint_image(step, &m.b, &c);
        let emit = b.is_empty();
        let b = if emit { c.clone() } else { b };
        Ok(vec![(IwcState { c, b }, acc_colour(emit))])
    }

    fn render(&self, m: &IwcState) -> String {
        format!("({},{})", m.c, m.b)
    }
}

/// Round-robin variant: the passive phase only tracks `C`.
#[derive(Clone, Debug)]
pub struct IwcRr<'a>(pub Iwc<'a>);

impl<'a> IwcRr<'a> {
    pub fn new(idx: &'a BuchiIndex, block: StateSet) -> Self {
        IwcRr(Iwc::new(idx, block))
    }
}

impl RoundRobinComplement for IwcRr<'_> {
    type Passive = StateSet;
    type Active = IwcState;

    fn name(&self) -> &'static str {
        "iwc"
    }

    fn colour_count(&self) -> u32 {
        1
    }

    fn acceptance(&self) -> Acceptance {
        Acceptance::Inf(0)
    }

    fn initial(&self, init: &StateSet) -> Result<Vec<StateSet>> {
        Ok(vec![init.intersection(&self.0.block)])
    }

    fn passive_successors(&self, step: &Step, _m: &StateSet) -> Result<Successors<StateSet>> {
        Ok(vec![(self.0.check_set(step), acc_colour(false))])
    }

    fn lift(&self, m: &StateSet) -> Result<Vec<IwcState>> {
        Ok(vec![IwcState {
            c: m.clone(),
            b: m.clone(),
        }])
    }

    fn active_successors(&self, step: &Step, m: &IwcState) -> Result<Successors<Phase<StateSet, IwcState>>> {
        let c = self.0.check_set(step);
        let b = self.0.breakpoint_image(step, &m.b, &c);
        Ok(vec![if b.is_empty() {
            (Phase::Passive(c), acc_colour(true))
        } else {
            (Phase::Active(IwcState { c, b }), acc_colour(false))
        }])
    }

    fn render_passive(&self, m: &StateSet) -> String {
        m.to_string()
    }

    fn render_active(&self, m: &IwcState) -> String {
        self.0.render(m)
    }
}
