//! NCSB-style construction for blocks of deterministic accepting components.

use super::{acc_colour, PartialComplement, Phase, RoundRobinComplement, Step, Successors};
use crate::automaton::{Acceptance, StateSet};
use crate::error::Result;
use crate::index::BuchiIndex;

/// `(C, S, B)`: runs still being checked, runs guessed safe and the breakpoint.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DacState {
    pub c: StateSet,
    pub s: StateSet,
    pub b: StateSet,
}

/// `(C, S)` of the passive phase.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DacPassive {
    pub c: StateSet,
    pub s: StateSet,
}

#[derive(Clone, Debug)]
pub struct Dac<'a> {
    idx: &'a BuchiIndex,
    block: StateSet,
}

/// The common part of one dac step.
pub(crate) struct DacStep {
    pub c: StateSet,
    pub s: StateSet,
}

impl<'a> Dac<'a> {
    pub fn new(idx: &'a BuchiIndex, block: StateSet) -> Self {
        Dac { idx, block }
    }

    pub fn block(&self) -> &StateSet {
        &self.block
    }

    /// Moves `C` and `S`; `None` when a safe run takes an accepting transition.
    pub(crate) fn track(&self, step: &Step, s: &StateSet) -> Option<DacStep> {
        let a = step.symbol;
        if self.idx.post_acc(s, a).intersects(&self.block) {
            return None;
        }
        let mut s2 = self.idx.post_scc(s, a);
        s2.intersect_with(&self.block);
        s2.intersect_with(step.next);
        let mut c2 = step.next.intersection(&self.block);
        c2.subtract(&s2);
        Some(DacStep { c: c2, s: s2 })
    }

    /// `B*`: breakpoint runs staying in their SCC, restricted to `C'`.
    pub(crate) fn breakpoint_image(&self, step: &Step, b: &StateSet, c_next: &StateSet) -> StateSet {
        self.idx.post_scc(b, step.symbol).intersection(c_next)
    }

    /// Whether every breakpoint run may be guessed safe from now on.
    pub(crate) fn may_guess_safe(&self, step: &Step, b: &StateSet) -> bool {
        let a = step.symbol;
        let acc = self.idx.post_acc(b, a).intersection(&self.block);
        !acc.intersects(&self.idx.post_scc(b, a))
    }
}

impl PartialComplement for Dac<'_> {
    type State = DacState;

    fn name(&self) -> &'static str {
        "dac"
    }

    fn colour_count(&self) -> u32 {
        1
    }

    fn acceptance(&self) -> Acceptance {
        Acceptance::Inf(0)
    }

    fn initial(&self, init: &StateSet) -> Result<Vec<DacState>> {
        let c = init.intersection(&self.block);
        Ok(vec![DacState {
            b: c.clone(),
            c,
            s: StateSet::new(),
        }])
    }

    fn successors(&self, step: &Step, m: &DacState) -> Result<Successors<DacState>> {
        let Some(DacStep { c, s }) = self.track(step, &m.s) else {
            return Ok(Vec::new());
        };
        let star = self.breakpoint_image(step, &m.b, &c);
        let emit = star.is_empty();
        let b = if emit { c.clone() } else { star };
        let guess = self.may_guess_safe(step, &m.b).then(|| {
            let s2 = s.union(&b);
            let c2 = c.difference(&s2);
            DacState {
                b: c2.clone(),
                c: c2,
                s: s2,
            }
        });
        let mut out = vec![(DacState { c, s, b }, acc_colour(emit))];
        out.extend(guess.map(|g| (g, acc_colour(true))));
        Ok(out)
    }

    fn render(&self, m: &DacState) -> String {
        format!("({},{},{})", m.c, m.s, m.b)
    }
}

/// Round-robin variant: the passive phase tracks `(C, S)` only.
#[derive(Clone, Debug)]
pub struct DacRr<'a>(pub Dac<'a>);

impl<'a> DacRr<'a> {
    pub fn new(idx: &'a BuchiIndex, block: StateSet) -> Self {
        DacRr(Dac::new(idx, block))
    }
}

impl RoundRobinComplement for DacRr<'_> {
    type Passive = DacPassive;
    type Active = DacState;

    fn name(&self) -> &'static str {
        "dac"
    }

    fn colour_count(&self) -> u32 {
        1
    }

    fn acceptance(&self) -> Acceptance {
        Acceptance::Inf(0)
    }

    fn initial(&self, init: &StateSet) -> Result<Vec<DacPassive>> {
        Ok(vec![DacPassive {
            c: init.intersection(&self.0.block),
            s: StateSet::new(),
        }])
    }

    fn passive_successors(&self, step: &Step, m: &DacPassive) -> Result<Successors<DacPassive>> {
        Ok(match self.0.track(step, &m.s) {
            Some(DacStep { c, s }) => vec![(DacPassive { c, s }, acc_colour(false))],
            None => Vec::new(),
        })
    }

    fn lift(&self, m: &DacPassive) -> Result<Vec<DacState>> {
        Ok(vec![DacState {
            c: m.c.clone(),
            s: m.s.clone(),
            b: m.c.clone(),
        }])
    }

    fn active_successors(
        &self,
        step: &Step,
        m: &DacState,
    ) -> Result<Successors<Phase<DacPassive, DacState>>> {
        let Some(DacStep { c, s }) = self.0.track(step, &m.s) else {
            return Ok(Vec::new());
        };
        let star = self.0.breakpoint_image(step, &m.b, &c);
        let guess = self.0.may_guess_safe(step, &m.b).then(|| {
            let b = if star.is_empty() { &c } else { &star };
            let s2 = s.union(b);
            let c2 = c.difference(&s2);
            DacPassive { c: c2, s: s2 }
        });
        let mut out = vec![if star.is_empty() {
            (Phase::Passive(DacPassive { c, s }), acc_colour(true))
        } else {
            (Phase::Active(DacState { c, s, b: star }), acc_colour(false))
        }];
        out.extend(guess.map(|g| (Phase::Passive(g), acc_colour(true))));
        Ok(out)
    }

    fn render_passive(&self, m: &DacPassive) -> String {
        format!("({},{})", m.c, m.s)
    }

    fn render_active(&self, m: &DacState) -> String {
        self.0.render(m)
    }
}
